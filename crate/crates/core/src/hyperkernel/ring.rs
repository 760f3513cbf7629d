use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{bits, singleton, HyperTable, Mode, Subset};
use crate::error::{Error, Result};
use crate::report::LawReport;

/// A hyperaddition together with a single-valued multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperRingTable {
    add: HyperTable,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

impl HyperRingTable {
    /// Shape checks only; the axioms are reported by [`check_hyperring`](Self::check_hyperring).
    pub fn new(add: HyperTable, mul: Vec<usize>, zero: usize, one: usize) -> Result<Self> {
        let n = add.len();
        if mul.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "{} products for {n} elements",
                mul.len()
            )));
        }
        if mul.iter().any(|&v| v >= n) || zero >= n || one >= n {
            return Err(Error::InvalidTable("element index out of range".into()));
        }
        Ok(HyperRingTable {
            add,
            mul,
            zero,
            one,
        })
    }

    pub fn add(&self) -> &HyperTable {
        &self.add
    }
    pub fn names(&self) -> &[String] {
        self.add.names()
    }
    pub fn len(&self) -> usize {
        self.add.len()
    }
    pub fn is_empty(&self) -> bool {
        self.add.is_empty()
    }
    pub fn zero(&self) -> usize {
        self.zero
    }
    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    fn scale(&self, a: usize, s: Subset) -> Subset {
        bits(s).fold(0, |acc, x| acc | singleton(self.mul(a, x)))
    }

    /// Nonzero elements form a group under multiplication.
    pub fn is_hyperfield(&self) -> bool {
        let n = self.len();
        let nz: Vec<usize> = (0..n).filter(|&a| a != self.zero).collect();
        nz.iter()
            .all(|&a| nz.iter().all(|&b| self.mul(a, b) != self.zero))
            && nz
                .iter()
                .all(|&a| nz.iter().any(|&b| self.mul(a, b) == self.one))
    }

    pub fn check_hyperring(&self) -> LawReport {
        let n = self.len();
        let nm = self.names();
        let mut r = LawReport::new();

        // (1)
        r.merge("add.", self.add.check_hypergroup(Mode::Canonical));
        let ids = self.add.identities();
        r.check(
            "add.zero_is_identity",
            (ids != [self.zero])
                .then(|| vec![format!("zero={}, identities={:?}", nm[self.zero], ids)]),
        );

        // (2)
        let w = (0..n).find_map(|a| {
            (0..n).find_map(|b| {
                (self.mul(a, b) != self.mul(b, a))
                    .then(|| vec![format!("a={}, b={}", nm[a], nm[b])])
            })
        });
        r.check("mul.commutativity", w);
        let w = (0..n).find_map(|a| {
            (0..n).find_map(|b| {
                (0..n).find_map(|c| {
                    (self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)))
                        .then(|| vec![format!("a={}, b={}, c={}", nm[a], nm[b], nm[c])])
                })
            })
        });
        r.check("mul.associativity", w);
        let w = (0..n).find_map(|a| {
            (self.mul(self.one, a) != a || self.mul(a, self.one) != a)
                .then(|| vec![format!("1*{} = {}", nm[a], nm[self.mul(self.one, a)])])
        });
        r.check("mul.identity", w);

        // (3)
        let mut w = None;
        'dist: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = self.scale(a, self.add.op(b, c));
                    let right = self.add.op(self.mul(a, b), self.mul(a, c));
                    let left2 = self.scale(c, self.add.op(a, b));
                    let right2 = self.add.op(self.mul(a, c), self.mul(b, c));
                    if left != right || left2 != right2 {
                        w = Some(vec![
                            format!("a={}, b={}, c={}", nm[a], nm[b], nm[c]),
                            format!(
                                "a(b+c)={}, ab+ac={}",
                                self.add.format_subset(left),
                                self.add.format_subset(right)
                            ),
                        ]);
                        break 'dist;
                    }
                }
            }
        }
        r.check("distributivity", w);

        // (4)
        let w = (0..n).find_map(|a| {
            (self.mul(a, self.zero) != self.zero || self.mul(self.zero, a) != self.zero)
                .then(|| vec![format!("{}*0 = {}", nm[a], nm[self.mul(a, self.zero)])])
        });
        r.check("zero_absorbing", w);

        // (5)
        r.check(
            "zero_ne_one",
            (self.zero == self.one).then(|| vec!["0 = 1"]),
        );

        let hf = self.is_hyperfield();
        r.note("hyperfield", hf, Vec::<String>::new());
        r
    }
}

/// Krasner's hyperfield `{0, 1}` with `1 + 1 = {0, 1}`.
pub fn krasner() -> HyperRingTable {
    let names = vec!["0".to_string(), "1".to_string()];
    let add =
        HyperTable::from_sets(names, &[vec![0], vec![1], vec![1], vec![0, 1]]).expect("valid");
    HyperRingTable::new(add, vec![0, 0, 0, 1], 0, 1).expect("valid")
}

/// The hyperfield of signs on `{-1, 0, 1}`.
pub fn signs() -> HyperRingTable {
    // indices: 0 -> -1, 1 -> 0, 2 -> 1
    let names = vec!["-1".to_string(), "0".to_string(), "1".to_string()];
    let sets = [
        vec![0],
        vec![0],
        vec![0, 1, 2],
        vec![0],
        vec![1],
        vec![2],
        vec![0, 1, 2],
        vec![2],
        vec![2],
    ];
    let add = HyperTable::from_sets(names, &sets).expect("valid");
    let mul = vec![2, 1, 0, 1, 1, 1, 0, 1, 2];
    HyperRingTable::new(add, mul, 1, 2).expect("valid")
}

/// A hyperring homomorphism check and whether the additive containment is
/// everywhere an equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomReport {
    pub report: LawReport,
    pub strict: bool,
}

/// Checks `f(a + b) ⊆ f(a) + f(b)`, `f(0) = 0`, `f(ab) = f(a)f(b)`, `f(1) = 1`.
pub fn check_hyperring_hom(
    f: &[usize],
    src: &HyperRingTable,
    dst: &HyperRingTable,
) -> Result<HomReport> {
    if f.len() != src.len() || f.iter().any(|&v| v >= dst.len()) {
        return Err(Error::InvalidTable(
            "map is not total on the source carrier".into(),
        ));
    }
    let (sn, dn) = (src.names(), dst.names());
    let n = src.len();
    let mut r = LawReport::new();
    r.check(
        "zero",
        (f[src.zero()] != dst.zero()).then(|| vec![format!("f(0) = {}", dn[f[src.zero()]])]),
    );
    let mut strict = true;
    let mut w = None;
    for a in 0..n {
        for b in 0..n {
            let image = bits(src.add().op(a, b)).fold(0, |acc, x| acc | singleton(f[x]));
            let target = dst.add().op(f[a], f[b]);
            if image & !target != 0 && w.is_none() {
                w = Some(vec![format!(
                    "a={}, b={}: f(a+b)={} not in f(a)+f(b)={}",
                    sn[a],
                    sn[b],
                    dst.add().format_subset(image),
                    dst.add().format_subset(target)
                )]);
            }
            if image != target {
                strict = false;
            }
        }
    }
    r.check("add_containment", w);
    let w = (0..n).find_map(|a| {
        (0..n).find_map(|b| {
            (f[src.mul(a, b)] != dst.mul(f[a], f[b]))
                .then(|| vec![format!("a={}, b={}", sn[a], sn[b])])
        })
    });
    r.check("mul_hom", w);
    r.check(
        "one",
        (f[src.one()] != dst.one()).then(|| vec![format!("f(1) = {}", dn[f[src.one()]])]),
    );
    let strict = strict && r.all_pass();
    r.note("strict", strict, Vec::<String>::new());
    Ok(HomReport { report: r, strict })
}

/// A bijection `a -> b` preserving zero, one, multiplication and
/// hyperaddition exactly, found by backtracking.
pub fn find_isomorphism(a: &HyperRingTable, b: &HyperRingTable) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.zero()] = b.zero();
    map[a.one()] = b.one();
    if a.zero() == a.one() {
        if b.zero() != b.one() {
            return None;
        }
    } else if b.zero() == b.one() {
        return None;
    }
    used[b.zero()] = true;
    used[b.one()] = true;
    let order: Vec<usize> = (0..n).filter(|&i| i != a.zero() && i != a.one()).collect();
    if extend_iso(a, b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn consistent(a: &HyperRingTable, b: &HyperRingTable, map: &[usize]) -> bool {
    let n = a.len();
    for x in (0..n).filter(|&x| map[x] != usize::MAX) {
        for y in (0..n).filter(|&y| map[y] != usize::MAX) {
            let m = a.mul(x, y);
            if map[m] != usize::MAX && map[m] != b.mul(map[x], map[y]) {
                return false;
            }
            let s = a.add().op(x, y);
            if bits(s).all(|z| map[z] != usize::MAX) {
                let image = bits(s).fold(0, |acc, z| acc | singleton(map[z]));
                if image != b.add().op(map[x], map[y]) {
                    return false;
                }
            }
        }
    }
    true
}

fn extend_iso(
    a: &HyperRingTable,
    b: &HyperRingTable,
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if !consistent(a, b, map) {
        return false;
    }
    if k == order.len() {
        return true;
    }
    let x = order[k];
    for y in 0..b.len() {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend_iso(a, b, order, k + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}
