use hyperspec_core::gfarith::{factor, irreducibles, is_irreducible, monic_polys, ExtField};
use hyperspec_core::linalg::Mat;
use hyperspec_core::{FpPoly, PrimeField};
use proptest::prelude::*;

/// Factorization by dividing out monic candidates in increasing order.
fn trial_division(poly: &FpPoly) -> Vec<(FpPoly, usize)> {
    let field = poly.field();
    let mut rest = poly.monic();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        for q in monic_polys(field, d) {
            let mut m = 0;
            while let Some(next) = rest.exact_div(&q) {
                rest = next;
                m += 1;
            }
            if m > 0 {
                out.push((q, m));
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push((rest, 1));
    }
    out.sort();
    out
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut k, mut mu) = (n, 2, 1);
    while k * k <= n {
        if n % k == 0 {
            n /= k;
            if n % k == 0 {
                return 0;
            }
            mu = -mu;
        }
        k += 1;
    }
    if n > 1 {
        -mu
    } else {
        mu
    }
}

#[test]
fn factor_matches_trial_division() {
    for (p, max_deg) in [(3u32, 6usize), (5, 4), (7, 3)] {
        let field = PrimeField::new(p).unwrap();
        for d in 1..=max_deg {
            for f in monic_polys(field, d) {
                let mut got = factor(&f).unwrap().factors;
                got.sort();
                assert_eq!(got, trial_division(&f), "{f:?}");
                assert_eq!(
                    is_irreducible(&f).unwrap(),
                    got == [(f.clone(), 1)],
                    "{f:?}"
                );
            }
        }
    }
}

#[test]
fn irreducible_counts() {
    for p in [3u32, 5, 7] {
        let field = PrimeField::new(p).unwrap();
        for n in 1..=4usize {
            let expect: i64 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| mobius(n / d) * (p as i64).pow(d as u32))
                .sum::<i64>()
                / n as i64;
            assert_eq!(irreducibles(field, n).count() as i64, expect, "p={p} n={n}");
        }
    }
}

fn arb_poly(p: u32, max_len: usize) -> impl Strategy<Value = FpPoly> {
    prop::collection::vec(0..p, 1..=max_len)
        .prop_map(move |c| FpPoly::new(PrimeField::new(p).unwrap(), c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factor_round_trips(f in prop::sample::select(vec![3u32, 5, 7, 11]).prop_flat_map(|p| arb_poly(p, 10))) {
        prop_assume!(!f.is_zero());
        let fac = factor(&f).unwrap();
        prop_assert_eq!(fac.expand(f.field()), f.clone());
        for (q, _) in &fac.factors {
            prop_assert!(q.is_monic());
            prop_assert!(is_irreducible(q).unwrap());
        }
    }

    #[test]
    fn product_factors_merge(a in arb_poly(5, 5), b in arb_poly(5, 5)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let field = a.field();
        let fa = factor(&a).unwrap();
        let fb = factor(&b).unwrap();
        let fab = factor(&a.mul(&b)).unwrap();
        prop_assert_eq!(fab.unit, field.mul(fa.unit, fb.unit));
        for (q, m) in &fab.factors {
            let count = |f: &hyperspec_core::gfarith::Factorization| {
                f.factors.iter().find(|(r, _)| r == q).map_or(0, |(_, k)| *k)
            };
            prop_assert_eq!(*m, count(&fa) + count(&fb));
        }
    }

    #[test]
    fn gcd_divides_both(a in arb_poly(7, 6), b in arb_poly(7, 6)) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
    }

    #[test]
    fn frobenius_is_additive(c1 in prop::collection::vec(0u32..3, 4), c2 in prop::collection::vec(0u32..3, 4)) {
        let fq = ExtField::new(PrimeField::new(3).unwrap(), 4).unwrap();
        let (a, b) = (fq.from_coords(&c1), fq.from_coords(&c2));
        prop_assert_eq!(fq.frobenius(&fq.add(&a, &b)), fq.add(&fq.frobenius(&a), &fq.frobenius(&b)));
        prop_assert_eq!(fq.frobenius(&fq.mul(&a, &b)), fq.mul(&fq.frobenius(&a), &fq.frobenius(&b)));
        prop_assert_eq!(fq.frobenius(&a), fq.pow(&a, 3));
    }

    #[test]
    fn minimal_polynomial_of_field_elements(c in prop::collection::vec(0u32..5, 3)) {
        let fq = ExtField::new(PrimeField::new(5).unwrap(), 3).unwrap();
        let a = fq.from_coords(&c);
        let m = fq.minimal_polynomial(&a);
        prop_assert!(fq.is_zero(&fq.eval(&m, &a)));
        prop_assert!(is_irreducible(&m).unwrap());
        let d = m.degree().unwrap();
        prop_assert_eq!(3 % d, 0);
        prop_assert_eq!(fq.conjugates(&a).len(), d);
    }

    #[test]
    fn rank_nullity(rows in 1usize..5, cols in 1usize..6, seed in prop::collection::vec(0u32..3, 30)) {
        let field = PrimeField::new(3).unwrap();
        let m = Mat::from_rows(field, rows, cols, seed[..rows * cols].to_vec());
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), cols);
        for v in k.basis() {
            prop_assert!(m.apply(v).iter().all(|&x| x == 0));
        }
    }
}

#[test]
fn minpolys_in_a_split_algebra() {
    // F_3[T]/(T^4 - 1) = F_3 x F_3 x F_9, so T^9 - T kills every element
    use hyperspec_core::algkernel::Algebra;
    let field = PrimeField::new(3).unwrap();
    let alg = Algebra::monogenic(&FpPoly::from_i64(field, &[-1, 0, 0, 0, 1])).unwrap();
    for x in alg.elements() {
        let m = alg.minimal_polynomial(&x);
        assert!(Algebra::is_zero(&alg.eval_poly(&m, &x)));
        assert!(m.degree().unwrap() <= 4);
        let t9 = FpPoly::from_i64(field, &[0, -1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert!(m.divides(&t9), "{m:?}");
    }
}
