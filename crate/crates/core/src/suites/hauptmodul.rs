//! Hauptmoduln of the genus-zero levels 2, 3, 5, 7, 13: j(z) and j(Nz) as
//! rational functions of τ = (η(z)/η(Nz))^r, the Fricke involution, the
//! level-2 modular polynomial and two quartics split over Q(√13).

use super::{Check, Context, Outcome, CONFIDENCE_DEPTH};
use crate::cyclo::{field_constants, CyclotomicNumber as Cyc, Rational};
use crate::mpoly::{Monomial, MultiPoly};
use crate::qseries::{hauptmodul, j_invariant, poly_eval, QSeries};

/// Grid for the eta quotients (all exponents are multiples of 1/24).
const DEN: i64 = 24;

/// A genus-zero level with j(z) = A(τ)/τ^N and j(Nz) = B(τ)/τ, where τ is the
/// variable z1 of the polynomials; τ·τ′ = c under the Fricke involution.
pub struct Level {
    pub n: u32,
    pub a: &'static str,
    pub b: &'static str,
    pub c: i64,
    /// Whether the displayed formulas use −(η/η(Nz))^r rather than the quotient itself.
    pub negated: bool,
}

pub const LEVELS: [Level; 5] = [
    Level { n: 2, a: "(z1 + 256)^3", b: "(z1 + 16)^3", c: 4096, negated: false },
    Level { n: 3, a: "(z1 + 27)(z1 + 243)^3", b: "(z1 + 27)(z1 + 3)^3", c: 729, negated: false },
    Level { n: 5, a: "-(z1^2 - 250 z1 + 3125)^3", b: "-(z1^2 - 10 z1 + 5)^3", c: 125, negated: true },
    Level {
        n: 7,
        a: "(z1^2 + 13 z1 + 49)(z1^2 + 245 z1 + 2401)^3",
        b: "(z1^2 + 13 z1 + 49)(z1^2 + 5 z1 + 1)^3",
        c: 49,
        negated: false,
    },
    Level {
        n: 13,
        a: "(z1^2 + 5 z1 + 13)(z1^4 + 247 z1^3 + 3380 z1^2 + 15379 z1 + 28561)^3",
        b: "(z1^2 + 5 z1 + 13)(z1^4 + 7 z1^3 + 20 z1^2 + 19 z1 + 1)^3",
        c: 13,
        negated: false,
    },
];

/// Expands a product of parenthesised univariate factors with optional
/// powers and an optional leading minus sign, e.g. "-(z1 + 1)^3(z1 - 2)".
pub fn factored(src: &str) -> MultiPoly {
    let (neg, mut rest) = match src.trim().strip_prefix('-') {
        Some(r) => (true, r.trim()),
        None => (false, src.trim()),
    };
    let mut out = MultiPoly::one();
    while let Some(r) = rest.strip_prefix('(') {
        let close = r.find(')').expect("closing parenthesis");
        let f = MultiPoly::lit(&r[..close]);
        rest = &r[close + 1..];
        let mut e = 1;
        if let Some(r2) = rest.strip_prefix('^') {
            let end = r2.find(|c: char| !c.is_ascii_digit()).unwrap_or(r2.len());
            e = r2[..end].parse().expect("exponent");
            rest = &r2[end..];
        }
        out = &out * &f.pow(e);
        rest = rest.trim_start();
    }
    assert!(rest.is_empty(), "trailing input in {src:?}");
    if neg {
        -&out
    } else {
        out
    }
}

fn z1(e: u32) -> Monomial {
    let mut m = [0u8; 6];
    m[0] = e as u8;
    Monomial(m)
}

/// τ^{deg}·B(c/τ) for a univariate B of degree `deg`.
pub fn reversed_scaled(b: &MultiPoly, c: i64, deg: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (m, coeff) in b.terms() {
        let k = m.0[0] as u32;
        assert!(k <= deg && m.0[1..].iter().all(|&x| x == 0), "univariate of degree at most {deg}");
        let ck = Rational::from_integer(num_bigint::BigInt::from(c).pow(k));
        out.add_term(z1(deg - k), &coeff.scale(&ck));
    }
    out
}

/// With τ′ = c/τ, B(τ′)/τ′ = A(τ)/τ^N is the polynomial identity
/// c·A(τ) = τ^{N+1}·B(c/τ).
pub fn fricke_residual(level: &Level) -> MultiPoly {
    let a = factored(level.a);
    let b = factored(level.b);
    let lhs = a.scale_int(level.c);
    &lhs - &reversed_scaled(&b, level.c, level.n + 1)
}

pub fn tau(level: &Level, margin: i64, literal: bool) -> QSeries {
    let t = hauptmodul(level.n, DEN, margin).expect("supported level");
    if level.negated && !literal {
        t.neg()
    } else {
        t
    }
}

/// j(z)·τ^N = A(τ).
pub fn j_identity(level: &Level, margin: i64, literal: bool) -> Outcome {
    let t = tau(level, margin, literal);
    let j = j_invariant(DEN, margin);
    let lhs = j.mul(&t.pow(level.n));
    Outcome::series_eq(&lhs, &poly_eval(&factored(level.a), &[t]), CONFIDENCE_DEPTH)
}

/// j(Nz)·τ = B(τ).
pub fn jn_identity(level: &Level, margin: i64) -> Outcome {
    let t = tau(level, margin, false);
    let jn = j_invariant(DEN, margin).scale_exponent(level.n as i64);
    Outcome::series_eq(&jn.mul(&t), &poly_eval(&factored(level.b), &[t]), CONFIDENCE_DEPTH)
}

/// Φ₂(X, Y) with X, Y the j-invariants of 2-isogenous curves.
pub fn phi2() -> MultiPoly {
    MultiPoly::lit(
        "z1^3 + z2^3 - z1^2 z2^2 + 1488 z1^2 z2 + 1488 z1 z2^2 - 162000 z1^2 - 162000 z2^2 \
         + 40773375 z1 z2 + 8748000000 z1 + 8748000000 z2 - 157464000000000",
    )
}

pub fn phi2_bivariate(margin: i64) -> Outcome {
    let j = j_invariant(DEN, margin);
    let j2 = j.scale_exponent(2);
    Outcome::series_zero(&poly_eval(&phi2(), &[j, j2]), CONFIDENCE_DEPTH)
}

/// τ² + ((x + y√13)/2)τ + (u + v√13)/2.
fn quadratic(x: i64, y: i64, u: i64, v: i64) -> MultiPoly {
    let s = field_constants().sqrt13;
    let half = Rational::new(1.into(), 2.into());
    let h = |a: i64, b: i64| (&Cyc::from_int(a) + &s.scale_int(b)).scale(&half);
    let mut p = MultiPoly::term(Cyc::one(), z1(2));
    p.add_term(z1(1), &h(x, y));
    p.add_term(z1(0), &h(u, v));
    p
}

pub fn quartic_factorization(quartic: &str, x: i64, y: i64, u: i64, v: i64) -> Outcome {
    let prod = &quadratic(x, y, u, v) * &quadratic(x, -y, u, -v);
    let d = &prod - &MultiPoly::lit(quartic);
    Outcome::exact(d.is_zero(), || format!("product minus quartic = {d}"))
}

fn level_name(n: u32) -> String {
    n.to_string()
}

pub fn checks() -> Vec<Check> {
    let mut v = Vec::new();
    for (i, level) in LEVELS.iter().enumerate() {
        let n = level_name(level.n);
        v.push(Check::new(format!("j{n}z_identity"), move |ctx: &Context| jn_identity(&LEVELS[i], ctx.margin)));
        v.push(Check::new(format!("j_tau{n}_identity"), move |ctx: &Context| {
            j_identity(&LEVELS[i], ctx.margin, false)
        }));
        v.push(Check::new(format!("fricke{n}_rational"), move |_| {
            let r = fricke_residual(&LEVELS[i]);
            Outcome::exact(r.is_zero(), || format!("residual {r}"))
        }));
    }
    v.extend([
        Check::new("phi2_bivariate", |ctx: &Context| phi2_bivariate(ctx.margin)),
        Check::new("quartic_factorization_j", |_| {
            quartic_factorization("z1^4 + 247 z1^3 + 3380 z1^2 + 15379 z1 + 28561", 247, 65, 1859, 507)
        }),
        Check::new("quartic_factorization_j13z", |_| {
            quartic_factorization("z1^4 + 7 z1^3 + 20 z1^2 + 19 z1 + 1", 7, 1, 11, 3)
        }),
    ]);
    v
}

/// The level-5 identity with τ taken literally as (η/η(5z))⁶.
pub fn controls() -> Vec<Check> {
    vec![Check::control("control_j_tau5_literal_tau", |ctx: &Context| j_identity(&LEVELS[2], ctx.margin, true))]
}
