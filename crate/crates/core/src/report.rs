use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// Outcome of one checked axiom. A failing verdict always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub axiom: String,
    pub pass: bool,
    pub witness: Vec<String>,
}

/// A named observation that is recorded but never gates a pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub name: String,
    pub value: bool,
    pub detail: Vec<String>,
}

/// Ordered per-axiom verdicts plus report-only findings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    pub verdicts: Vec<Verdict>,
    pub findings: Vec<Finding>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, axiom: &str) {
        self.verdicts.push(Verdict {
            axiom: axiom.to_string(),
            pass: true,
            witness: Vec::new(),
        });
    }

    pub fn fail<I, S>(&mut self, axiom: &str, witness: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let mut witness: Vec<String> = witness.into_iter().map(|s| s.to_string()).collect();
        if witness.is_empty() {
            witness.push(String::from("(no witness)"));
        }
        self.verdicts.push(Verdict {
            axiom: axiom.to_string(),
            pass: false,
            witness,
        });
    }

    /// Record `axiom` as passing when `witness` is `None`.
    pub fn check<S: ToString>(&mut self, axiom: &str, witness: Option<Vec<S>>) {
        match witness {
            None => self.pass(axiom),
            Some(w) => self.fail(axiom, w),
        }
    }

    pub fn note<I, S>(&mut self, name: &str, value: bool, detail: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.findings.push(Finding {
            name: name.to_string(),
            value,
            detail: detail.into_iter().map(|s| s.to_string()).collect(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn verdict(&self, axiom: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    pub fn finding(&self, name: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.pass)
    }

    /// Append another report, prefixing its names.
    pub fn merge(&mut self, prefix: &str, other: LawReport) {
        for mut v in other.verdicts {
            v.axiom = alloc::format!("{prefix}{}", v.axiom);
            self.verdicts.push(v);
        }
        for mut f in other.findings {
            f.name = alloc::format!("{prefix}{}", f.name);
            self.findings.push(f);
        }
    }
}
