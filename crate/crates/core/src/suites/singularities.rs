//! E₆, E₇, E₈, Q₁₈ and E₂₀ singularity relations among the computed orbit
//! sums, checked with denominators cleared.

use super::phi::{normalised, weight};
use super::{modular_eq, modular_zero, Check, Context, Outcome};
use crate::qseries::QSeries;

/// Normalised Φ₁₂, Φ₁₈, Φ₂₀, Φ₂₆, Φ₃₂, Φ₄₄ as computed from the theta constants.
pub struct Invariants {
    pub p12: QSeries,
    pub p18: QSeries,
    pub p20: QSeries,
    pub p26: QSeries,
}

pub fn invariants(ctx: &Context) -> Invariants {
    Invariants {
        p12: normalised(ctx, 3, 0),
        p18: normalised(ctx, 3, 1),
        p20: normalised(ctx, 5, 0),
        p26: normalised(ctx, 5, 1),
    }
}

/// (Φ₂₀³ + 1728Φ₁₂⁵)²Φ₂₀⁴ − Φ₂₆⁴Φ₁₂⁸ − 4·1728·Φ₂₀⁷Φ₁₂⁵.
pub fn e6(x: &Invariants) -> QSeries {
    let a = x.p20.pow(3).add(&x.p12.pow(5).scale_int(1728));
    a.pow(2)
        .mul(&x.p20.pow(4))
        .sub(&x.p26.pow(4).mul(&x.p12.pow(8)))
        .sub(&x.p20.pow(7).mul(&x.p12.pow(5)).scale_int(4 * 1728))
}

/// Φ₁₂Φ₂₆³ − Φ₁₈⁵ − 1728Φ₁₂³Φ₁₈³.
pub fn e7(x: &Invariants) -> QSeries {
    x.p12.mul(&x.p26.pow(3)).sub(&x.p18.pow(5)).sub(&x.p12.pow(3).mul(&x.p18.pow(3)).scale_int(1728))
}

/// Φ₂₀⁵ − Φ₁₂⁴Φ₂₆² − 1728Φ₁₂⁵Φ₂₀².
pub fn e8(x: &Invariants) -> QSeries {
    x.p20.pow(5).sub(&x.p12.pow(4).mul(&x.p26.pow(2))).sub(&x.p12.pow(5).mul(&x.p20.pow(2)).scale_int(1728))
}

/// Φ₃₂⁵ − Φ₁₂⁹Φ₂₆² − 1728Φ₁₂⁸Φ₃₂².
pub fn q18(x: &Invariants, p32: &QSeries) -> QSeries {
    p32.pow(5).sub(&x.p12.pow(9).mul(&x.p26.pow(2))).sub(&x.p12.pow(8).mul(&p32.pow(2)).scale_int(1728))
}

/// Φ₄₄⁵ − Φ₁₂¹⁴Φ₂₆² − 1728Φ₁₂¹¹Φ₄₄².
pub fn e20(x: &Invariants, p44: &QSeries) -> QSeries {
    p44.pow(5).sub(&x.p12.pow(14).mul(&x.p26.pow(2))).sub(&x.p12.pow(11).mul(&p44.pow(2)).scale_int(1728))
}

fn j_minus_1728(ctx: &Context) -> QSeries {
    let b = ctx.base();
    b.j.sub(&b.one().scale_int(1728))
}

/// j·Φ₁₈³Φ₁₂² = Φ₂₆³ and (j − 1728)·Φ₁₂³ = Φ₁₈².
pub fn j_e7type(ctx: &Context) -> Outcome {
    let x = invariants(ctx);
    let j = &ctx.base().j;
    Outcome::all([
        ("j".to_string(), modular_eq(&j.mul(&x.p18.pow(3)).mul(&x.p12.pow(2)), &x.p26.pow(3), 78)),
        ("j-1728".to_string(), modular_eq(&j_minus_1728(ctx).mul(&x.p12.pow(3)), &x.p18.pow(2), 36)),
    ])
}

/// j·Φ₁₂⁵ = Φ₂₀³ and (j − 1728)·Φ₂₀²Φ₁₂ = Φ₂₆².
pub fn j_e8type(ctx: &Context) -> Outcome {
    let x = invariants(ctx);
    let j = &ctx.base().j;
    Outcome::all([
        ("j".to_string(), modular_eq(&j.mul(&x.p12.pow(5)), &x.p20.pow(3), 60)),
        ("j-1728".to_string(), modular_eq(&j_minus_1728(ctx).mul(&x.p20.pow(2)).mul(&x.p12), &x.p26.pow(2), 52)),
    ])
}

/// Representatives of one graded piece agree, so any affine combination
/// λΦ + (1−λ)Φ′ gives the same series.
pub fn pair(ctx: &Context, members: &[(u32, u32)]) -> Outcome {
    let (m0, n0) = members[0];
    let first = normalised(ctx, m0, n0);
    Outcome::all(members[1..].iter().map(|&(m, n)| {
        (format!("Phi_{m},{n}"), modular_eq(&first, &normalised(ctx, m, n), weight(m, n)))
    }))
}

pub const PAIRS: [&[(u32, u32)]; 5] = [
    &[(3, 0), (0, 2)],
    &[(3, 1), (0, 3)],
    &[(5, 0), (2, 2)],
    &[(5, 1), (2, 3)],
    &[(8, 0), (5, 2), (2, 4)],
];

pub fn checks() -> Vec<Check> {
    let mut v = vec![
        Check::new("E6_relation", |ctx: &Context| modular_zero(&e6(&invariants(ctx)), 200)),
        Check::new("E7_relation", |ctx: &Context| modular_zero(&e7(&invariants(ctx)), 90)),
        Check::new("E8_relation", |ctx: &Context| modular_zero(&e8(&invariants(ctx)), 100)),
        Check::new("Q18_relation", |ctx: &Context| modular_zero(&q18(&invariants(ctx), &normalised(ctx, 8, 0)), 160)),
        Check::new("E20_relation", |ctx: &Context| modular_zero(&e20(&invariants(ctx), &normalised(ctx, 11, 0)), 220)),
        Check::new("j_decomposition_E7type", j_e7type),
        Check::new("j_decomposition_E8type", j_e8type),
    ];
    for members in PAIRS {
        let name = members.iter().map(|(m, n)| format!("{m}_{n}")).collect::<Vec<_>>().join("_vs_");
        v.push(Check::new(format!("pair_{name}"), move |ctx: &Context| pair(ctx, members)));
    }
    v
}
