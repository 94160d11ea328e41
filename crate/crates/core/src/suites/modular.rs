//! The 21 modular equations of order 13: every B-term vanishes at the theta
//! constants a₁..a₆.

use super::{Check, Context, Outcome, CONFIDENCE_DEPTH};
use crate::invariants::{family_b, B_LABELS};
use crate::mpoly::MultiPoly;
use crate::qseries::{poly_eval, theta13, theta13_signed, QSeries};

pub fn b_at(label: &str, a: &[QSeries]) -> QSeries {
    poly_eval(family_b().get(label).expect("label"), a)
}

/// The combination that forces B₀⁽¹⁾(a) = 0 (which = 1) or B₀⁽²⁾(a) = 0
/// (which = 2) once the other B-terms vanish, divided by a₁a₂a₃ resp. a₄a₅a₆.
///
/// The underlying polynomial identities are
///   z₁z₂z₃·B₀⁽¹⁾ = (z₁z₂z₃ − z₄z₅z₆)·B₀⁽⁰⁾ + z₁z₂z₅·B₆ + z₂z₃z₆·B₂ + z₁z₃z₄·B₅,
///   z₄z₅z₆·B₀⁽²⁾ = −(z₄z₅z₆ + z₁z₂z₃)·B₀⁽⁰⁾ + z₁z₄z₆·B₈ + z₂z₄z₅·B₇ + z₃z₅z₆·B₁₁.
pub fn derived_dependency(which: usize, a: &[QSeries]) -> QSeries {
    let l = MultiPoly::lit;
    let (lead, b00, uses) = if which == 1 {
        ("z1 z2 z3", l("z1 z2 z3 - z4 z5 z6"), [("z1 z2 z5", "B6"), ("z2 z3 z6", "B2"), ("z1 z3 z4", "B5")])
    } else {
        ("z4 z5 z6", l("-z4 z5 z6 - z1 z2 z3"), [("z1 z4 z6", "B8"), ("z2 z4 z5", "B7"), ("z3 z5 z6", "B11")])
    };
    let mut rhs = poly_eval(&b00, a).mul(&b_at("B0_0", a));
    for (u, label) in uses {
        rhs = rhs.add(&poly_eval(&l(u), a).mul(&b_at(label, a)));
    }
    rhs.mul(&poly_eval(&l(lead), a).recip().expect("nonzero product of theta constants"))
}

pub fn checks() -> Vec<Check> {
    let mut v: Vec<Check> = B_LABELS
        .iter()
        .map(|&label| {
            Check::new(format!("{label}_vanishes"), move |ctx: &Context| {
                Outcome::series_zero(&b_at(label, &ctx.base().a), CONFIDENCE_DEPTH)
            })
        })
        .collect();
    for which in [1, 2] {
        v.push(Check::new(format!("B0_{which}_from_generators"), move |ctx: &Context| {
            Outcome::series_zero(&derived_dependency(which, &ctx.base().a), CONFIDENCE_DEPTH)
        }));
    }
    v
}

/// a₄ with its printed global sign removed.
pub fn flipped_a4(margin: i64) -> Vec<QSeries> {
    (1..=6).map(|i| if i == 4 { theta13_signed(4, margin, 1) } else { theta13(i, margin) }).collect()
}

pub fn controls() -> Vec<Check> {
    vec![Check::control("control_B1_1_flipped_a4", |ctx: &Context| {
        Outcome::series_zero(&b_at("B1_1", &flipped_a4(ctx.margin)), CONFIDENCE_DEPTH)
    })]
}
