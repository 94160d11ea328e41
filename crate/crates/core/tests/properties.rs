//! Property tests for the algebraic layers.

use proptest::prelude::*;
use x13::invariants::{family_b, matrices};
use x13::{apply_linear, express_in_basis, CyclotomicNumber as Cyc, LinearMap, MultiPoly, QSeries};

fn cyc() -> impl Strategy<Value = Cyc> {
    prop::collection::vec((-5i64..=5, 0i64..13), 0..6).prop_map(|t| Cyc::from_zeta_terms(&t))
}

fn nonzero_cyc() -> impl Strategy<Value = Cyc> {
    cyc().prop_filter("nonzero", |c| !c.is_zero())
}

/// Small quadratics in z1..z6 with cyclotomic coefficients.
fn quadratic() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((cyc(), 0usize..6, 0usize..6), 1..5).prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (c, i, j) in terms {
            p = &p + &(&MultiPoly::var(i) * &MultiPoly::var(j)).scale(&c);
        }
        p
    })
}

/// Words in S and T.
fn word() -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(prop::bool::ANY, 0..4).prop_map(|w| {
        let ms = matrices();
        w.into_iter().fold(LinearMap::identity(6), |acc, s| acc.mul(if s { &ms.s } else { &ms.t }).unwrap())
    })
}

/// Integer series on grid `den` with coefficients at multiples of `step`.
fn series(den: i64) -> impl Strategy<Value = (i64, Vec<i64>, i64)> {
    (0i64..3, prop::collection::vec(-4i64..=4, 1..12), 1i64..10).prop_map(move |(off, c, t)| (off * den / 2, c, t))
}

fn build(den: i64, (off, coeffs, t): &(i64, Vec<i64>, i64)) -> QSeries {
    QSeries::from_int_coeffs(den, *off, den, coeffs, Some(off + t * den))
}

/// The same series with its unknown tail filled in arbitrarily.
fn extend(den: i64, (off, coeffs, t): &(i64, Vec<i64>, i64), tail: &[i64]) -> QSeries {
    let mut c: Vec<i64> = coeffs.iter().take(*t as usize).copied().collect();
    c.resize(*t as usize, 0);
    c.extend_from_slice(tail);
    QSeries::from_int_coeffs(den, *off, den, &c, None)
}

fn agree_below_trunc(known: &QSeries, full: &QSeries) -> bool {
    let t = known.trunc().expect("truncated");
    let both: Vec<i64> = known.terms().iter().chain(full.terms()).map(|(e, _)| *e).filter(|e| *e < t).collect();
    both.into_iter().all(|e| known.coeff(e) == full.coeff(e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, Cyc::zero());
    }

    #[test]
    fn inverse_is_two_sided(a in nonzero_cyc()) {
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert!((&inv * &a).is_one());
    }

    #[test]
    fn galois_is_a_field_automorphism(a in cyc(), b in cyc(), k in 1i64..13) {
        let g = |x: &Cyc| x.galois(k).unwrap();
        prop_assert_eq!(g(&(&a * &b)), &g(&a) * &g(&b));
        prop_assert_eq!(g(&(&a + &b)), &g(&a) + &g(&b));
        // ζ ↦ ζ^k composed with ζ ↦ ζ^{k⁻¹} is the identity.
        let kinv = (1..13).find(|x| x * k % 13 == 1).unwrap();
        prop_assert_eq!(g(&a).galois(kinv).unwrap(), a);
    }

    #[test]
    fn apply_linear_respects_products(m in word(), n in word(), p in quadratic()) {
        let lhs = apply_linear(&m, &apply_linear(&n, &p));
        let rhs = apply_linear(&n.mul(&m).unwrap(), &p);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn express_in_basis_round_trips(c in prop::collection::vec(-3i64..=3, 21)) {
        let b = family_b().members;
        let coeffs: Vec<Cyc> = c.iter().map(|&x| Cyc::from_int(x)).collect();
        let p = x13::mpoly::combine(&coeffs, &b);
        prop_assert_eq!(express_in_basis(&p, &b).unwrap(), coeffs);
    }

    #[test]
    fn products_never_claim_unknown_coefficients(
        a in series(24), b in series(24),
        ta in prop::collection::vec(-4i64..=4, 8), tb in prop::collection::vec(-4i64..=4, 8),
    ) {
        let known = build(24, &a).mul(&build(24, &b));
        let full = extend(24, &a, &ta).mul(&extend(24, &b, &tb));
        prop_assert!(agree_below_trunc(&known, &full));
    }

    #[test]
    fn sums_never_claim_unknown_coefficients(
        a in series(24), b in series(24),
        ta in prop::collection::vec(-4i64..=4, 8), tb in prop::collection::vec(-4i64..=4, 8),
    ) {
        let known = build(24, &a).sub(&build(24, &b));
        let full = extend(24, &a, &ta).sub(&extend(24, &b, &tb));
        prop_assert!(agree_below_trunc(&known, &full));
    }

    #[test]
    fn reciprocals_never_claim_unknown_coefficients(
        mut a in series(24), ta in prop::collection::vec(-4i64..=4, 8),
    ) {
        a.1[0] = 1;
        let known = build(24, &a).recip().unwrap();
        // The exact reciprocal of the extension, to well beyond the claimed precision.
        let full = extend(24, &a, &ta).truncate(known.trunc().unwrap() + 40 * 24).recip().unwrap();
        prop_assert!(agree_below_trunc(&known, &full));
        let one = build(24, &a).mul(&known);
        prop_assert!(one.sub(&QSeries::one(24)).is_zero());
    }
}
