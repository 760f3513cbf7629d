//! Finite hyperstructures given by explicit tables.
//!
//! Subsets of a carrier are bitmasks, so carriers hold at most 64 elements.

mod quotient;
mod ring;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::report::LawReport;

pub use quotient::{quotient_hyperring, FiniteRing};
pub use ring::{check_hyperring_hom, find_isomorphism, krasner, signs, HomReport, HyperRingTable};

/// A subset of a carrier as a bitmask.
pub type Subset = u64;

pub const MAX_CARRIER: usize = 64;

/// Which hypergroup axioms [`HyperTable::check_hypergroup`] verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Associativity, unique identity, unique inverses.
    Strong,
    /// Associativity and reproduction `a*H = H*a = H`.
    Marty,
    /// Strong plus commutativity and reversibility.
    Canonical,
}

pub(crate) fn bits(mut s: Subset) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

pub(crate) fn singleton(i: usize) -> Subset {
    1u64 << i
}

/// A hyperoperation on a finite labelled carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperTable {
    names: Vec<String>,
    op: Vec<Subset>,
}

impl HyperTable {
    /// `op[a * n + b]` is the subset `a * b`; every entry must be nonempty.
    pub fn new(names: Vec<String>, op: Vec<Subset>) -> Result<Self> {
        let n = names.len();
        if n == 0 || n > MAX_CARRIER {
            return Err(Error::InvalidTable(format!("carrier of size {n}")));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidTable(format!("duplicate element {a}")));
            }
        }
        if op.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "{} entries for {n} elements",
                op.len()
            )));
        }
        let full = full_mask(n);
        for (k, &s) in op.iter().enumerate() {
            if s == 0 {
                return Err(Error::InvalidTable(format!(
                    "{} * {} is empty",
                    names[k / n],
                    names[k % n]
                )));
            }
            if s & !full != 0 {
                return Err(Error::InvalidTable(format!(
                    "{} * {} leaves the carrier",
                    names[k / n],
                    names[k % n]
                )));
            }
        }
        Ok(HyperTable { names, op })
    }

    /// Builds a table from element-index lists.
    pub fn from_sets(names: Vec<String>, sets: &[Vec<usize>]) -> Result<Self> {
        let n = names.len();
        let mut op = Vec::with_capacity(sets.len());
        for s in sets {
            let mut m = 0u64;
            for &i in s {
                if i >= n {
                    return Err(Error::InvalidTable(format!("index {i} out of range")));
                }
                m |= singleton(i);
            }
            op.push(m);
        }
        Self::new(names, op)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> Subset {
        self.op[a * self.len() + b]
    }

    pub fn full(&self) -> Subset {
        full_mask(self.len())
    }

    /// `A * B`, the union of `a * b` over the two subsets.
    pub fn extend_to_subsets(&self, a: Subset, b: Subset) -> Result<Subset> {
        if a == 0 || b == 0 {
            return Err(Error::EmptySubset);
        }
        Ok(self.ext(a, b))
    }

    fn ext(&self, a: Subset, b: Subset) -> Subset {
        let mut out = 0;
        for x in bits(a) {
            for y in bits(b) {
                out |= self.op(x, y);
            }
        }
        out
    }

    pub fn format_subset(&self, s: Subset) -> String {
        let items: Vec<&str> = bits(s).map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", items.join(","))
    }

    /// Elements `e` with `e*a = a*e = {a}` for all `a`.
    pub fn identities(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&e| {
                (0..self.len())
                    .all(|a| self.op(e, a) == singleton(a) && self.op(a, e) == singleton(a))
            })
            .collect()
    }

    /// Elements `b` with `e in (a*b) and (b*a)`.
    pub fn inverses(&self, e: usize, a: usize) -> Vec<usize> {
        let m = singleton(e);
        (0..self.len())
            .filter(|&b| self.op(a, b) & m != 0 && self.op(b, a) & m != 0)
            .collect()
    }

    /// The unique identity and the unique inverse of every element, if they
    /// exist.
    pub fn identity_and_inverses(&self) -> Option<(usize, Vec<usize>)> {
        let ids = self.identities();
        if ids.len() != 1 {
            return None;
        }
        let e = ids[0];
        let mut inv = Vec::with_capacity(self.len());
        for a in 0..self.len() {
            match self.inverses(e, a).as_slice() {
                [b] => inv.push(*b),
                _ => return None,
            }
        }
        Some((e, inv))
    }

    fn associativity_witness(&self) -> Option<Vec<String>> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    let left = self.ext(ab, singleton(c));
                    let right = self.ext(singleton(a), self.op(b, c));
                    if left != right {
                        return Some(vec![
                            format!(
                                "a={}, b={}, c={}",
                                self.names[a], self.names[b], self.names[c]
                            ),
                            format!("(a*b)*c={}", self.format_subset(left)),
                            format!("a*(b*c)={}", self.format_subset(right)),
                        ]);
                    }
                }
            }
        }
        None
    }

    pub fn check_hypergroup(&self, mode: Mode) -> LawReport {
        let mut r = LawReport::new();
        r.check("associativity", self.associativity_witness());
        if mode == Mode::Marty {
            let full = self.full();
            let w = (0..self.len()).find_map(|a| {
                let left = self.ext(singleton(a), full);
                let right = self.ext(full, singleton(a));
                (left != full || right != full).then(|| {
                    vec![format!(
                        "a={}: a*H={}, H*a={}",
                        self.names[a],
                        self.format_subset(left),
                        self.format_subset(right)
                    )]
                })
            });
            r.check("reproduction", w);
            return r;
        }
        let ids = self.identities();
        let e = match ids.as_slice() {
            [e] => {
                r.pass("identity");
                Some(*e)
            }
            [] => {
                r.fail("identity", ["no element e with e*a = a*e = a for all a"]);
                None
            }
            many => {
                r.fail(
                    "identity",
                    many.iter()
                        .map(|&i| format!("identity candidate {}", self.names[i])),
                );
                None
            }
        };
        let mut inv = Vec::new();
        match e {
            None => r.fail("inverse", ["no unique identity"]),
            Some(e) => {
                let mut bad = None;
                for a in 0..self.len() {
                    let cands = self.inverses(e, a);
                    if cands.len() != 1 {
                        let list: Vec<&str> =
                            cands.iter().map(|&i| self.names[i].as_str()).collect();
                        bad = Some(vec![format!(
                            "a={}: inverse candidates [{}]",
                            self.names[a],
                            list.join(",")
                        )]);
                        break;
                    }
                    inv.push(cands[0]);
                }
                r.check("inverse", bad);
            }
        }
        if mode == Mode::Canonical {
            let n = self.len();
            let w = (0..n).find_map(|a| {
                (0..n).find_map(|b| {
                    (self.op(a, b) != self.op(b, a)).then(|| {
                        vec![format!(
                            "a={}, b={}: a*b={}, b*a={}",
                            self.names[a],
                            self.names[b],
                            self.format_subset(self.op(a, b)),
                            self.format_subset(self.op(b, a))
                        )]
                    })
                })
            });
            r.check("commutativity", w);
            if inv.len() != n {
                r.fail("reversibility", ["inverses are not defined"]);
            } else {
                let mut w = None;
                'outer: for a in 0..n {
                    for b in 0..n {
                        for c in bits(self.op(a, b)) {
                            let ok_b = self.op(c, inv[a]) & singleton(b) != 0;
                            let ok_a = self.op(c, inv[b]) & singleton(a) != 0;
                            if !(ok_a && ok_b) {
                                w = Some(vec![format!(
                                    "c={} in a*b with a={}, b={}, but {}",
                                    self.names[c],
                                    self.names[a],
                                    self.names[b],
                                    if ok_b {
                                        "a not in c*b^-1"
                                    } else {
                                        "b not in c*a^-1"
                                    }
                                )]);
                                break 'outer;
                            }
                        }
                    }
                }
                r.check("reversibility", w);
            }
        }
        r
    }
}

pub(crate) fn full_mask(n: usize) -> Subset {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn krasner_group_and_subsets() {
        let k = krasner();
        let t = k.add();
        assert_eq!(t.extend_to_subsets(0b10, 0b10), Ok(0b11));
        assert_eq!(t.extend_to_subsets(0, 0b10), Err(Error::EmptySubset));
        for mode in [Mode::Strong, Mode::Marty, Mode::Canonical] {
            assert!(t.check_hypergroup(mode).all_pass());
        }
    }

    #[test]
    fn missing_inverse() {
        // 1+1 = {1}: 0 has no preimage under 1 + _
        let t = HyperTable::from_sets(names(&["0", "1"]), &[vec![0], vec![1], vec![1], vec![1]])
            .unwrap();
        let r = t.check_hypergroup(Mode::Canonical);
        assert!(!r.verdict("inverse").unwrap().pass);
        assert!(r.verdict("associativity").unwrap().pass);
    }

    #[test]
    fn empty_entry_rejected() {
        assert!(HyperTable::new(names(&["a"]), vec![0]).is_err());
    }
}
