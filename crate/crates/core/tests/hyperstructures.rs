use std::collections::BTreeSet;

use hyperspec_core::hyperkernel::{
    check_hyperring_hom, find_isomorphism, krasner, quotient_hyperring, signs, FiniteRing,
    HyperRingTable, HyperTable, Mode,
};
use proptest::prelude::*;

fn prime_powers(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi)
        .filter(|&q| {
            let p = (2..=q).find(|d| q % d == 0).unwrap();
            let mut m = q;
            while m % p == 0 {
                m /= p;
            }
            m == 1
        })
        .collect()
}

/// `0 ∈ a + (-a)` and strong implies Marty.
fn canonical_side_conditions(t: &HyperTable) {
    let strong = t.check_hypergroup(Mode::Strong).all_pass();
    if strong {
        assert!(t.check_hypergroup(Mode::Marty).all_pass());
    }
    if t.check_hypergroup(Mode::Canonical).all_pass() {
        let (e, inv) = t.identity_and_inverses().unwrap();
        for (a, &b) in inv.iter().enumerate() {
            assert_ne!(t.op(a, b) & (1 << e), 0);
        }
    }
}

/// `aG + bG` straight from the definition, as sets of coset minima.
fn brute_sums(ring: &FiniteRing, g: &[usize]) -> Vec<((usize, usize), BTreeSet<usize>)> {
    let coset = |a: usize| g.iter().map(|&x| ring.mul(a, x)).min().unwrap();
    let reps: BTreeSet<usize> = (0..ring.len()).map(coset).collect();
    let mut out = Vec::new();
    for &a in &reps {
        for &b in &reps {
            let mut s = BTreeSet::new();
            for &x in g {
                for &y in g {
                    s.insert(coset(ring.add(ring.mul(a, x), ring.mul(b, y))));
                }
            }
            out.push(((a, b), s));
        }
    }
    out
}

#[test]
fn quotient_hyperrings_up_to_49() {
    let k = krasner();
    for q in prime_powers(3, 49) {
        let ring = FiniteRing::galois_field(q).unwrap();
        let subgroups = ring.cyclic_subgroups();
        // the unit group is cyclic: one subgroup per divisor of q - 1
        assert_eq!(
            subgroups.len(),
            (1..q).filter(|d| (q - 1) % d == 0).count(),
            "q={q}"
        );
        for g in &subgroups {
            let h = quotient_hyperring(&ring, g).unwrap();
            let r = h.check_hyperring();
            assert!(
                r.all_pass(),
                "q={q} |G|={}: {:?}",
                g.len(),
                r.failures().collect::<Vec<_>>()
            );
            assert!(h.is_hyperfield());
            assert_eq!(h.len(), 1 + (q - 1) / g.len());
            canonical_side_conditions(h.add());

            let names = ring.names();
            for ((a, b), s) in brute_sums(&ring, g) {
                let (ia, ib) = (
                    h.add().index_of(&names[a]).unwrap(),
                    h.add().index_of(&names[b]).unwrap(),
                );
                let got: BTreeSet<String> = h
                    .add()
                    .format_subset(h.add().op(ia, ib))
                    .trim_matches(|c| c == '{' || c == '}')
                    .split(',')
                    .map(String::from)
                    .collect();
                let want: BTreeSet<String> = s.iter().map(|&c| names[c].clone()).collect();
                assert_eq!(got, want, "q={q}");
            }
        }
        let all = ring.units();
        let h = quotient_hyperring(&ring, &all).unwrap();
        assert!(find_isomorphism(&h, &k).is_some(), "F_{q}/F_{q}^x is not K");
        let trivial = quotient_hyperring(&ring, &[ring.one()]).unwrap();
        assert!(
            (0..trivial.len()).all(|a| (0..trivial.len()).all(|b| trivial
                .add()
                .op(a, b)
                .count_ones()
                == 1))
        );
    }
}

#[test]
fn seven_mod_squares() {
    let ring = FiniteRing::galois_field(7).unwrap();
    let sq: Vec<usize> = (1..7).filter(|&a| (1..7).any(|b| b * b % 7 == a)).collect();
    let h = quotient_hyperring(&ring, &sq).unwrap();
    assert_eq!(h.names(), ["0", "1", "3"]);
    // F_7 modulo squares: 1 + 1 = {1, 3}, 1 + 3 = {0, 1, 3}
    let (one, three) = (
        h.add().index_of("1").unwrap(),
        h.add().index_of("3").unwrap(),
    );
    assert_eq!(h.add().format_subset(h.add().op(one, one)), "{1,3}");
    assert_eq!(h.add().format_subset(h.add().op(one, three)), "{0,1,3}");
    // in F_5/{±1} every class is its own negative, so it cannot be S
    let ring5 = FiniteRing::galois_field(5).unwrap();
    let h5 = quotient_hyperring(&ring5, &[1, 4]).unwrap();
    assert!(find_isomorphism(&h5, &signs()).is_none());
}

#[test]
fn builtin_hyperfields() {
    for (h, name) in [(krasner(), "K"), (signs(), "S")] {
        let r = h.check_hyperring();
        assert!(r.all_pass(), "{name}");
        assert!(h.is_hyperfield());
        for m in [Mode::Strong, Mode::Marty, Mode::Canonical] {
            assert!(h.add().check_hypergroup(m).all_pass(), "{name} {m:?}");
        }
        canonical_side_conditions(h.add());
    }
    let s = signs();
    let (m, z, p) = (0, 1, 2);
    assert_eq!(s.add().op(p, m).count_ones(), 3);
    assert_eq!(s.add().op(p, z), 1 << p);
    // |.| : S -> K is a homomorphism but 1 + (-1) = S is larger than needed
    let abs = [1, 0, 1];
    let hom = check_hyperring_hom(&abs, &s, &krasner()).unwrap();
    assert!(hom.report.all_pass());
    assert!(!hom.strict);
}

#[test]
fn broken_tables_fail_with_witnesses() {
    let names: Vec<String> = ["0", "1"].iter().map(|s| s.to_string()).collect();
    // 1 + 1 = {1}: associative and unital, but 1 has no inverse
    let t = HyperTable::from_sets(names.clone(), &[vec![0], vec![1], vec![1], vec![1]]).unwrap();
    let r = t.check_hypergroup(Mode::Canonical);
    let v = r.verdict("inverse").unwrap();
    assert!(!v.pass && !v.witness.is_empty());
    assert!(HyperTable::from_sets(names, &[vec![0], vec![], vec![1], vec![1]]).is_err());
    // 0 * 1 = 1 breaks absorption
    let add = krasner().add().clone();
    let bad = HyperRingTable::new(add, vec![0, 1, 1, 1], 0, 1).unwrap();
    assert!(!bad.check_hyperring().all_pass());
}

fn cayley(n: usize) -> HyperTable {
    let names = (0..n).map(|i| i.to_string()).collect();
    let sets: Vec<Vec<usize>> = (0..n * n).map(|k| vec![(k / n + k % n) % n]).collect();
    HyperTable::from_sets(names, &sets).unwrap()
}

proptest! {
    #[test]
    fn groups_are_canonical(n in 1usize..=16) {
        let t = cayley(n);
        prop_assert!(t.check_hypergroup(Mode::Canonical).all_pass());
        canonical_side_conditions(&t);
    }

    #[test]
    fn random_tables_respect_mode_hierarchy(n in 1usize..=3, raw in prop::collection::vec(1u64..8, 9)) {
        let mask = (1u64 << n) - 1;
        let op: Vec<u64> = raw[..n * n].iter().map(|&s| (s & mask).max(1)).collect();
        let t = HyperTable::new((0..n).map(|i| i.to_string()).collect(), op).unwrap();
        canonical_side_conditions(&t);
        if t.check_hypergroup(Mode::Canonical).all_pass() {
            prop_assert!(t.check_hypergroup(Mode::Strong).all_pass());
        }
    }

    #[test]
    fn subset_extension_is_a_union(a in 1u64..8, b in 1u64..8) {
        let s = signs();
        let t = s.add();
        let mut expect = 0;
        for x in 0..3 {
            for y in 0..3 {
                if a >> x & 1 == 1 && b >> y & 1 == 1 {
                    expect |= t.op(x, y);
                }
            }
        }
        prop_assert_eq!(t.extend_to_subsets(a, b).unwrap(), expect);
    }
}
