//! Independent reference values: classical q-expansions, the product form
//! of the theta constants, and frozen results of the exact computations.

use x13::invariants::{h_printed, matrices, w_delta};
use x13::qseries::{self, poly_eval, theta_char, theta13, DEFAULT_DEN, THETA13};
use x13::suites::phi::{Target, IDENTIFICATIONS};
use x13::suites::Context;
use x13::{CyclotomicNumber as Cyc, LinearMap, QSeries, Rational};

const D: i64 = DEFAULT_DEN;

fn coeffs(s: &QSeries, from: i64, n: usize) -> Vec<Cyc> {
    (0..n as i64).map(|k| s.coeff((from + k) * D)).collect()
}

fn ints(v: &[i64]) -> Vec<Cyc> {
    v.iter().map(|&x| Cyc::from_int(x)).collect()
}

#[test]
fn eisenstein_series_coefficients() {
    assert_eq!(coeffs(&qseries::eisenstein(4, D, 8), 0, 5), ints(&[1, 240, 2160, 6720, 17520]));
    assert_eq!(coeffs(&qseries::eisenstein(6, D, 8), 0, 5), ints(&[1, -504, -16632, -122976, -532728]));
}

#[test]
fn ramanujan_tau() {
    let tau = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920];
    assert_eq!(coeffs(&qseries::delta(D, 14), 1, 10), ints(&tau));
    // τ is multiplicative: τ(6) = τ(2)τ(3), τ(10) = τ(2)τ(5).
    assert_eq!(tau[5], tau[1] * tau[2]);
    assert_eq!(tau[9], tau[1] * tau[4]);
}

#[test]
fn discriminant_from_eisenstein() {
    let (e4, e6) = (qseries::eisenstein(4, D, 12), qseries::eisenstein(6, D, 12));
    let lhs = e4.pow(3).sub(&e6.pow(2));
    assert!(lhs.sub(&qseries::delta(D, 12).scale_int(1728)).is_zero());
}

#[test]
fn j_invariant_coefficients() {
    let j = qseries::j_invariant(D, 8);
    assert_eq!(coeffs(&j, -1, 5), ints(&[1, 744, 196884, 21493760, 864299970]));
}

#[test]
fn eta_cubed_is_jacobi_series() {
    let margin = 20;
    let e3 = qseries::eta(D, margin).pow(3);
    // η³ = Σ (−1)ⁿ (2n+1) q^{(2n+1)²/8}
    let raw: Vec<(i64, Cyc)> = (0..10i64)
        .map(|n| ((2 * n + 1).pow(2) * D / 8, Cyc::from_int(if n % 2 == 0 { 2 * n + 1 } else { -(2 * n + 1) })))
        .collect();
    let jacobi = QSeries::from_terms(D, raw, e3.trunc());
    assert!(e3.sub(&jacobi).is_zero());
    assert!(e3.reliable_depth().unwrap() >= margin - 1);
}

#[test]
fn theta_constants_match_product_form() {
    for (i, &(l, sign)) in THETA13.iter().enumerate() {
        let series = theta13(i + 1, 15);
        let product = theta_char(l, 13, D, 15).unwrap().scale_int(sign);
        assert!(series.sub(&product).is_zero(), "a{} differs from its product form", i + 1);
    }
}

#[test]
fn twisted_sums_are_galois_conjugate() {
    let a: Vec<QSeries> = (1..=6).map(|i| theta13(i, 4)).collect();
    let w: Vec<QSeries> = (0..13).map(|nu| poly_eval(&w_delta(Some(nu)).w, &a)).collect();
    for k in [2i64, 5, 12] {
        for nu in [1i64, 3, 7] {
            let conj = w[nu as usize].map_coeffs(|_, c| c.galois(k).unwrap());
            assert!(conj.sub(&w[(k * nu % 13) as usize]).is_zero(), "σ_{k} w_{nu}");
        }
    }
}

#[test]
fn projection_matches_direct_orbit_sum() {
    let ctx = Context::new(6, true);
    let b = ctx.base();
    for (m, n) in [(3, 0), (0, 2), (2, 2), (3, 3)] {
        let direct = b.phi_a_direct(m, n).mul(&b.eta.pow(4 * m + 6 * n));
        assert!(ctx.phi_x(m, n).sub(&direct).is_zero(), "Phi_{m},{n}");
    }
}

/// Φ_{m,n}(x) divided by its target form, read off the leading coefficients
/// and confirmed on the whole known prefix.
fn ratio(ctx: &Context, m: u32, n: u32, target: Target) -> Rational {
    let phi = ctx.phi_x(m, n);
    let t = target.series(ctx.base());
    let (e, c) = phi.leading().expect("nonzero").clone();
    let k = c.as_rational().unwrap() / t.coeff(e).as_rational().unwrap();
    assert!(phi.sub(&t.scale_rational(&k)).is_zero(), "Phi_{m},{n} not proportional to its target");
    k
}

#[test]
fn orbit_sum_normalisations() {
    // Computed constants; six differ from the printed normalisations.
    let computed: [((u32, u32), i64); 19] = [
        ((3, 0), -13 * 30),
        ((0, 2), -13 * 52),
        ((3, 1), 13 * 2),
        ((0, 3), 13 * 6),
        ((5, 0), 13 * 25),
        ((2, 2), 13 * 26),
        ((5, 1), -13),
        ((2, 3), -13),
        ((0, 5), -13 * 1315),
        ((3, 3), -13 * 96),
        ((6, 1), -13 * 285),
        ((8, 0), -13 * 1840),
        ((5, 2), -13 * 1954),
        ((2, 4), -13 * 692),
        ((0, 7), 13 * 226842),
        ((3, 5), 13 * 5752),
        ((6, 3), 13 * 9348),
        ((9, 1), 13 * 23816),
        ((11, 0), 13 * 146905),
    ];
    let ctx = Context::new(6, true);
    let mut differing = Vec::new();
    for ((m, n), k) in computed {
        let &(_, _, printed, target) = IDENTIFICATIONS.iter().find(|x| (x.0, x.1) == (m, n)).unwrap();
        assert_eq!(ratio(&ctx, m, n, target), Rational::from_integer(k.into()), "Phi_{m},{n}");
        if printed != k {
            differing.push((m, n));
        }
    }
    assert_eq!(differing, [(3, 3), (5, 2), (2, 4), (3, 5), (6, 3), (9, 1)]);
}

fn id() -> LinearMap {
    LinearMap::identity(6)
}

#[test]
fn group_words_up_to_sign() {
    let ms = matrices();
    let m = |a: &LinearMap, b: &LinearMap| a.mul(b).unwrap();
    assert_eq!(ms.s.pow(2), id().neg());
    assert_eq!(ms.t.pow(13), id());
    assert_eq!(m(&ms.s, &ms.t).pow(3), id().neg());
    assert_eq!(ms.h, h_printed().neg());
    assert_eq!(ms.h.pow(6), id().neg());
    assert_eq!(m(&m(&ms.h.inverse().unwrap(), &ms.t), &ms.h), ms.t.pow(4));
    assert_eq!(m(&ms.q.pow(3), &ms.p.pow(4)).pow(3), id());
}
