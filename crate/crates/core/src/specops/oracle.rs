use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{ForcedValue, SpecEngine};
use crate::error::{Error, Result};

/// Largest tensor space the oracle will enumerate.
const MAX_STATES: u64 = 1 << 22;

/// A subset of K = {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KSet {
    pub zero: bool,
    pub one: bool,
}

impl KSet {
    pub const ZERO: KSet = KSet {
        zero: true,
        one: false,
    };
    pub const ONE: KSet = KSet {
        zero: false,
        one: true,
    };
    pub const BOTH: KSet = KSet {
        zero: true,
        one: true,
    };

    /// The K-sum of `count` ones: `{0}`, `{1}`, or `{0,1}` from two on.
    fn of_count(count: usize) -> KSet {
        match count {
            0 => KSet::ZERO,
            1 => KSet::ONE,
            _ => KSet::BOTH,
        }
    }

    fn meet(self, other: KSet) -> KSet {
        KSet {
            zero: self.zero && other.zero,
            one: self.one && other.one,
        }
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.zero, self.one) {
            (true, true) => write!(f, "{{0,1}}"),
            (true, false) => write!(f, "{{0}}"),
            (false, true) => write!(f, "{{1}}"),
            (false, false) => write!(f, "{{}}"),
        }
    }
}

/// What the brute-force presentation search found for one `(x, f, g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    /// Intersection over all presentations of the K-values they allow.
    pub values: KSet,
    pub forced: ForcedValue,
    /// Fewest terms in any presentation of `Δx`.
    pub min_terms: usize,
    /// Layers explored before the reachable set stopped growing (or `r_max`).
    pub layers: usize,
}

impl OracleOutcome {
    pub fn consistent(&self) -> bool {
        self.values
            == match self.forced {
                ForcedValue::Zero => KSet::ZERO,
                ForcedValue::One => KSet::ONE,
                ForcedValue::Free => KSet::BOTH,
            }
    }
}

/// Base-p digit vectors of length `len` packed into integers, with addition
/// through per-chunk lookup tables.
struct Packed {
    p: u64,
    len: usize,
    /// (digits in chunk, p^digits, addition table)
    chunks: Vec<(usize, u64, Vec<u32>)>,
}

impl Packed {
    fn new(p: u64, len: usize) -> Self {
        let mut width = 1;
        while p.pow(width as u32 + 1) <= 1024 {
            width += 1;
        }
        let mut chunks = Vec::new();
        let mut left = len;
        while left > 0 {
            let w = left.min(width);
            let size = p.pow(w as u32);
            let mut table = vec![0u32; (size * size) as usize];
            for u in 0..size {
                for v in 0..size {
                    let (mut a, mut b, mut out, mut place) = (u, v, 0u64, 1u64);
                    for _ in 0..w {
                        out += ((a % p + b % p) % p) * place;
                        a /= p;
                        b /= p;
                        place *= p;
                    }
                    table[(u * size + v) as usize] = out as u32;
                }
            }
            chunks.push((w, size, table));
            left -= w;
        }
        Packed { p, len, chunks }
    }

    fn encode(&self, v: &[u32]) -> u64 {
        debug_assert_eq!(v.len(), self.len);
        v.iter().rev().fold(0u64, |acc, &c| acc * self.p + c as u64)
    }

    fn add(&self, mut u: u64, mut v: u64) -> u64 {
        let (mut out, mut place) = (0u64, 1u64);
        for (_, size, table) in &self.chunks {
            let s = table[((u % size) * size + v % size) as usize] as u64;
            out += s * place;
            u /= size;
            v /= size;
            place *= size;
        }
        out
    }
}

/// Every state reachable with at most `r_max` simple tensors, by class.
struct Reach {
    /// Bit `c` set when the state is reachable with class `c`.
    classes: Vec<u8>,
    /// First layer at which the state was reached.
    first: Vec<u8>,
    layers: usize,
}

impl SpecEngine {
    fn reach(&self, f: usize, g: usize, r_max: usize, packed: &Packed) -> Reach {
        let a = self.algebra();
        let p = a.field().p();
        let elems = a.elements();
        let kf: Vec<bool> = elems.iter().map(|e| self.k_value(f, e)).collect();
        let kg: Vec<bool> = elems.iter().map(|e| self.k_value(g, e)).collect();
        // distinct simple tensors with their class
        let mut terms: Vec<(u64, u8)> = Vec::with_capacity(elems.len() * elems.len());
        for (i, u) in elems.iter().enumerate() {
            for (j, v) in elems.iter().enumerate() {
                let t: Vec<u32> = u
                    .iter()
                    .flat_map(|&s| v.iter().map(move |&w| s * w % p))
                    .collect();
                terms.push((packed.encode(&t), u8::from(kf[i] && kg[j])));
            }
        }
        terms.sort_unstable();
        terms.dedup();

        let states = packed.p.pow(packed.len as u32) as usize;
        let mut classes = vec![0u8; states];
        let mut first = vec![u8::MAX; states];
        classes[0] = 1;
        first[0] = 0;
        let mut frontier: Vec<(u64, u8)> = vec![(0, 0)];
        let mut layers = 0;
        while layers < r_max && !frontier.is_empty() {
            layers += 1;
            let mut next = Vec::new();
            for &(code, class) in &frontier {
                for &(tc, tcl) in &terms {
                    let nc = packed.add(code, tc) as usize;
                    let ncl = (class + tcl).min(2);
                    let bit = 1u8 << ncl;
                    if classes[nc] & bit == 0 {
                        classes[nc] |= bit;
                        first[nc] = first[nc].min(layers.min(u8::MAX as usize - 1) as u8);
                        next.push((nc as u64, ncl));
                    }
                }
            }
            frontier = next;
        }
        Reach {
            classes,
            first,
            layers,
        }
    }

    fn packing(&self, r_max: usize) -> Result<Packed> {
        let a = self.algebra();
        let len = a.dim() * a.dim();
        let p = a.field().p() as u64;
        p.checked_pow(len as u32)
            .filter(|&s| s <= MAX_STATES)
            .ok_or_else(|| {
                Error::PresentationBound(format!("A⊗A has more than {MAX_STATES} elements"))
            })?;
        if r_max == 0 {
            return Err(Error::PresentationBound("r_max must be positive".into()));
        }
        Ok(Packed::new(p, len))
    }

    fn outcome(
        &self,
        f: usize,
        g: usize,
        x: &[u32],
        reach: &Reach,
        packed: &Packed,
        r_max: usize,
    ) -> Result<OracleOutcome> {
        let target = packed.encode(&self.hopf().delta().apply(x)) as usize;
        let bits = reach.classes[target];
        if bits == 0 {
            return Err(Error::PresentationBound(format!(
                "Δx needs more than {r_max} simple tensors"
            )));
        }
        let values = (0..3usize)
            .filter(|&c| bits & (1 << c) != 0)
            .fold(KSet::BOTH, |acc, c| acc.meet(KSet::of_count(c)));
        Ok(OracleOutcome {
            values,
            forced: self.forced_value(f, g, x),
            min_terms: reach.first[target] as usize,
            layers: reach.layers,
        })
    }

    /// Enumerates every presentation `Δx = Σ_{i≤r} x_i ⊗ y_i` with
    /// `r ≤ r_max` by breadth-first search over states `(partial sum, number
    /// of terms with f(x_i) g(y_i) = 1, capped at 2)`; a presentation allows
    /// `φ(x) ∈ {0}`, `{1}` or `{0,1}` according to that count.
    pub fn presentation_oracle(
        &self,
        f: usize,
        g: usize,
        x: &[u32],
        r_max: usize,
    ) -> Result<OracleOutcome> {
        let packed = self.packing(r_max)?;
        let reach = self.reach(f, g, r_max, &packed);
        self.outcome(f, g, x, &reach, &packed, r_max)
    }

    /// [`Self::presentation_oracle`] for every element of `A`, in
    /// `Algebra::elements` order, sharing one search.
    pub fn presentation_oracle_all(
        &self,
        f: usize,
        g: usize,
        r_max: usize,
    ) -> Result<Vec<OracleOutcome>> {
        let packed = self.packing(r_max)?;
        let reach = self.reach(f, g, r_max, &packed);
        self.algebra()
            .elements()
            .iter()
            .map(|x| self.outcome(f, g, x, &reach, &packed, r_max))
            .collect()
    }
}
