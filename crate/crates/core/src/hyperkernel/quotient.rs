use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{singleton, HyperRingTable, HyperTable, MAX_CARRIER};
use crate::algkernel::Algebra;
use crate::error::{Error, Result};

/// A finite commutative ring by addition and multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    names: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

impl FiniteRing {
    /// Verifies the commutative ring axioms exhaustively.
    pub fn new(
        names: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 || add.len() != n * n || mul.len() != n * n || zero >= n || one >= n {
            return Err(Error::InvalidTable("ring table has the wrong shape".into()));
        }
        if add.iter().chain(&mul).any(|&v| v >= n) {
            return Err(Error::InvalidTable("ring table leaves the carrier".into()));
        }
        let r = FiniteRing {
            names,
            add,
            mul,
            zero,
            one,
        };
        r.verify()?;
        Ok(r)
    }

    fn verify(&self) -> Result<()> {
        let n = self.len();
        for a in 0..n {
            if self.add(a, self.zero) != a || self.mul(a, self.one) != a {
                return Err(Error::InvalidTable(format!(
                    "identity fails at {}",
                    self.names[a]
                )));
            }
            if !(0..n).any(|b| self.add(a, b) == self.zero) {
                return Err(Error::InvalidTable(format!(
                    "{} has no negative",
                    self.names[a]
                )));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::InvalidTable(format!(
                        "not commutative at {}, {}",
                        self.names[a], self.names[b]
                    )));
                }
                for c in 0..n {
                    let ok = self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
                        && self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                        && self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c));
                    if !ok {
                        return Err(Error::InvalidTable(format!(
                            "ring axiom fails at {}, {}, {}",
                            self.names[a], self.names[b], self.names[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The field with `q` elements. Elements of F_{p^k} are indexed by their
    /// base-p digit vectors `c_0 + c_1 x + ...`; the modulus is the first
    /// monic degree-k polynomial whose residue ring has no zero divisors.
    /// Characteristic 2 is allowed here.
    pub fn galois_field(q: usize) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::InvalidTable(format!("{q} is not a prime power")))?;
        if q > MAX_CARRIER {
            return Err(Error::TooLarge(format!("field of order {q}")));
        }
        let digits = |mut v: usize| {
            let mut d = vec![0usize; k];
            for x in d.iter_mut() {
                *x = v % p;
                v /= p;
            }
            d
        };
        let index = |d: &[usize]| d.iter().rev().fold(0, |acc, &x| acc * p + x);
        let mut add = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<usize> = digits(a)
                    .iter()
                    .zip(digits(b))
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = index(&s);
            }
        }
        let names = (0..q).map(|a| element_name(&digits(a))).collect::<Vec<_>>();
        // lower coefficients of the monic modulus, as a digit vector
        for low in 0..q {
            let m = digits(low);
            let mut mul = vec![0; q * q];
            for a in 0..q {
                for b in 0..q {
                    mul[a * q + b] = index(&mulmod(&digits(a), &digits(b), &m, p));
                }
            }
            let is_field = (1..q).all(|a| (1..q).any(|b| mul[a * q + b] == 1));
            if is_field {
                return FiniteRing::new(names, add, mul, 0, 1);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    /// Every element of a small structure-constant algebra.
    pub fn from_algebra(alg: &Algebra) -> Result<Self> {
        if alg.order() > MAX_CARRIER as u64 {
            return Err(Error::TooLarge(format!(
                "algebra with {} elements",
                alg.order()
            )));
        }
        let elems = alg.elements();
        let q = elems.len();
        let pos = |v: &Vec<u32>| elems.iter().position(|e| e == v).expect("closed");
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for (a, x) in elems.iter().enumerate() {
            for (b, y) in elems.iter().enumerate() {
                add[a * q + b] = pos(&alg.add(x, y));
                mul[a * q + b] = pos(&alg.mul(x, y));
            }
        }
        let names = elems.iter().map(|e| alg.format_elem(e)).collect();
        let zero = pos(&alg.zero());
        let one = pos(&alg.unit().to_vec());
        FiniteRing::new(names, add, mul, zero, one)
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
    pub fn zero(&self) -> usize {
        self.zero
    }
    pub fn one(&self) -> usize {
        self.one
    }
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b]
    }
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).any(|b| self.mul(a, b) == self.one))
            .collect()
    }

    /// The cyclic subgroup generated by a unit.
    pub fn generated_subgroup(&self, g: usize) -> Vec<usize> {
        let mut out = vec![self.one];
        let mut x = g;
        while x != self.one {
            out.push(x);
            x = self.mul(x, g);
        }
        out.sort_unstable();
        out
    }

    /// All cyclic subgroups of the unit group, without repeats. For a field
    /// the unit group is cyclic, so this is every subgroup.
    pub fn cyclic_subgroups(&self) -> Vec<Vec<usize>> {
        let set: BTreeSet<Vec<usize>> = self
            .units()
            .into_iter()
            .map(|g| self.generated_subgroup(g))
            .collect();
        let mut out: Vec<Vec<usize>> = set.into_iter().collect();
        out.sort_by_key(|g| (g.len(), g.clone()));
        out
    }
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut m, mut k) = (q, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// `a * b mod (x^k + m(x))` on digit vectors of length k.
fn mulmod(a: &[usize], b: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let k = a.len();
    let mut prod = vec![0usize; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (k..2 * k).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        // x^d = x^(d-k) * x^k = -x^(d-k) m(x)
        for (i, &mi) in m.iter().enumerate() {
            prod[d - k + i] = (prod[d - k + i] + (p - c) * mi) % p;
        }
    }
    prod.truncate(k);
    prod
}

fn element_name(d: &[usize]) -> String {
    if d.len() == 1 {
        return d[0].to_string();
    }
    let mut parts = Vec::new();
    for (i, &c) in d.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// The quotient hyperring `A/G` of cosets of a unit subgroup, each coset
/// represented by its smallest element.
pub fn quotient_hyperring(ring: &FiniteRing, g: &[usize]) -> Result<HyperRingTable> {
    let n = ring.len();
    if g.is_empty() {
        return Err(Error::NotSubgroup("empty set".into()));
    }
    let units = ring.units();
    for &x in g {
        if x >= n || !units.contains(&x) {
            return Err(Error::NotSubgroup(format!(
                "{} is not a unit",
                ring.names.get(x).map_or("?", |s| s)
            )));
        }
        for &y in g {
            if !g.contains(&ring.mul(x, y)) {
                return Err(Error::NotSubgroup(format!(
                    "not closed: {} * {}",
                    ring.names[x], ring.names[y]
                )));
            }
        }
    }
    // coset representative of each element
    let rep: Vec<usize> = (0..n)
        .map(|a| g.iter().map(|&x| ring.mul(a, x)).min().expect("nonempty"))
        .collect();
    let reps: Vec<usize> = {
        let set: BTreeSet<usize> = rep.iter().copied().collect();
        set.into_iter().collect()
    };
    let m = reps.len();
    let idx = |a: usize| reps.binary_search(&rep[a]).expect("representative");
    let names = reps.iter().map(|&a| ring.names[a].clone()).collect();
    let mut op = vec![0u64; m * m];
    let mut mul = vec![0usize; m * m];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * m + j] = idx(ring.mul(a, b));
            let mut s = 0u64;
            for &x in g {
                for &y in g {
                    s |= singleton(idx(ring.add(ring.mul(a, x), ring.mul(b, y))));
                }
            }
            op[i * m + j] = s;
        }
    }
    let add = HyperTable::new(names, op)?;
    HyperRingTable::new(add, mul, idx(ring.zero), idx(ring.one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperkernel::{find_isomorphism, krasner};

    #[test]
    fn field_tables() {
        for q in [2, 3, 4, 8, 9, 16, 25, 27, 32, 49] {
            let f = FiniteRing::galois_field(q).unwrap();
            assert_eq!(f.units().len(), q - 1);
        }
        assert!(FiniteRing::galois_field(6).is_err());
    }

    #[test]
    fn full_unit_group_gives_krasner() {
        for q in [3, 4, 5, 9] {
            let f = FiniteRing::galois_field(q).unwrap();
            let h = quotient_hyperring(&f, &f.units()).unwrap();
            assert!(find_isomorphism(&h, &krasner()).is_some());
        }
    }

    #[test]
    fn squares_mod_seven() {
        let f = FiniteRing::galois_field(7).unwrap();
        let h = quotient_hyperring(&f, &[1, 2, 4]).unwrap();
        assert_eq!(h.names(), ["0", "1", "3"]);
        assert!(h.check_hyperring().all_pass());
        let t = h.add();
        assert_eq!(t.format_subset(t.op(1, 1)), "{1,3}");
        assert_eq!(t.format_subset(t.op(1, 2)), "{0,1,3}");
        assert_eq!(t.format_subset(t.op(2, 2)), "{1,3}");
        assert!(matches!(
            quotient_hyperring(&f, &[1, 2]),
            Err(Error::NotSubgroup(_))
        ));
        assert!(matches!(
            quotient_hyperring(&f, &[0, 1]),
            Err(Error::NotSubgroup(_))
        ));
    }
}
