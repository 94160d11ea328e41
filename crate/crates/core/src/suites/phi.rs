//! Orbit sums Φ_{m,n} at xᵢ = η·aᵢ identified with level-one modular forms.

use super::context::Base;
use super::{modular_eq, modular_zero, Check, Context, Outcome};
use crate::cyclo::{CyclotomicNumber as Cyc, Rational};
use crate::linalg::solve_square;
use crate::qseries::{describe_coeff, QSeries};

/// Classical forms the orbit sums are identified with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Delta,
    DeltaE6,
    Eta8DeltaE4,
    Eta8DeltaE4E6,
    Delta2E6,
    Eta8Delta2E4,
    Delta3E6,
    Eta8Delta3E4,
}

impl Target {
    pub fn series(self, b: &Base) -> QSeries {
        let d = &b.delta;
        match self {
            Target::Delta => d.clone(),
            Target::DeltaE6 => d.mul(&b.e6),
            Target::Eta8DeltaE4 => b.eta8().mul(d).mul(&b.e4),
            Target::Eta8DeltaE4E6 => b.eta8().mul(d).mul(&b.e4).mul(&b.e6),
            Target::Delta2E6 => d.pow(2).mul(&b.e6),
            Target::Eta8Delta2E4 => b.eta8().mul(&d.pow(2)).mul(&b.e4),
            Target::Delta3E6 => d.pow(3).mul(&b.e6),
            Target::Eta8Delta3E4 => b.eta8().mul(&d.pow(3)).mul(&b.e4),
        }
    }
}

/// (m, n, k, target): the normalised Φ_{m,n} is Φ_{m,n}/k, with k the value
/// of the unnormalised orbit sum relative to the target.
pub const IDENTIFICATIONS: [(u32, u32, i64, Target); 19] = [
    (3, 0, -13 * 30, Target::Delta),
    (0, 2, -13 * 52, Target::Delta),
    (3, 1, 13 * 2, Target::DeltaE6),
    (0, 3, 13 * 6, Target::DeltaE6),
    (5, 0, 13 * 25, Target::Eta8DeltaE4),
    (2, 2, 13 * 26, Target::Eta8DeltaE4),
    (5, 1, -13, Target::Eta8DeltaE4E6),
    (2, 3, -13, Target::Eta8DeltaE4E6),
    (0, 5, -13 * 1315, Target::Delta2E6),
    (3, 3, -13 * 27, Target::Delta2E6),
    (6, 1, -13 * 285, Target::Delta2E6),
    (8, 0, -13 * 1840, Target::Eta8Delta2E4),
    (5, 2, -13 * 2064, Target::Eta8Delta2E4),
    (2, 4, -13 * 680, Target::Eta8Delta2E4),
    (0, 7, 13 * 226842, Target::Delta3E6),
    (3, 5, 13 * 634, Target::Delta3E6),
    (6, 3, 13 * 10656, Target::Delta3E6),
    (9, 1, 13 * 39134, Target::Delta3E6),
    (11, 0, 13 * 146905, Target::Eta8Delta3E4),
];

/// Orbit sums that vanish on the curve.
pub const ZERO_FORMS: [(u32, u32); 11] =
    [(1, 0), (2, 0), (1, 1), (2, 1), (4, 0), (1, 2), (1, 3), (4, 1), (1, 5), (4, 3), (7, 1)];

/// Unnormalised sums whose leading coefficient the identification proofs display.
pub const LEADING: [(u32, u32); 7] = [(0, 2), (3, 0), (5, 0), (0, 5), (2, 2), (3, 3), (6, 1)];

/// Orbit sums lying in the two-dimensional space η⁸Δ²·⟨E₄⁴, E₄E₆²⟩.
pub const SPANNED: [(u32, u32); 3] = [(8, 2), (5, 4), (2, 6)];

pub fn weight(m: u32, n: u32) -> u32 {
    4 * m + 6 * n
}

pub fn normalisation(m: u32, n: u32) -> Option<(i64, Target)> {
    IDENTIFICATIONS.iter().find(|x| (x.0, x.1) == (m, n)).map(|x| (x.2, x.3))
}

/// The normalised Φ_{m,n}(x) for an identified pair.
pub fn normalised(ctx: &Context, m: u32, n: u32) -> QSeries {
    let (k, _) = normalisation(m, n).expect("identified pair");
    ctx.phi_x(m, n).scale_rational(&Rational::new(1.into(), k.into()))
}

fn zero_name(m: u32, n: u32) -> String {
    // The orbit sums with a single-index name in the literature.
    match (m, n) {
        (1, 0) => "phi_4_zero".into(),
        (2, 0) => "phi_8_zero".into(),
        (1, 1) => "phi_10_zero".into(),
        (2, 1) => "phi_14_zero".into(),
        _ => format!("phi_{m}_{n}_zero"),
    }
}

pub fn leading_check(ctx: &Context, m: u32, n: u32) -> Outcome {
    let (k, target) = normalisation(m, n).expect("identified pair");
    let phi = ctx.phi_x(m, n);
    let t = target.series(ctx.base());
    let (Some((pe, pc)), Some((te, tc))) = (phi.leading(), t.leading()) else {
        return Outcome::exact(false, || "series vanishes".into());
    };
    let want = tc.scale_int(k);
    let ok = pe == te && *pc == want;
    let lead = Rational::new((*pe).into(), phi.den().into());
    let mut o = Outcome::exact(ok, || {
        format!("leading term {} q^({lead}), expected {} q^({})", describe_coeff(pc), describe_coeff(&want), Rational::new((*te).into(), t.den().into()))
    });
    o.truncation = format!("leading term at q^({lead})");
    if ok {
        o = o.with_value(format!("{} q^({lead})", describe_coeff(pc)));
    }
    o
}

/// Φ_{m,n}(x) is a rational multiple of its target; reports the multiple.
pub fn line_check(ctx: &Context, m: u32, n: u32) -> Outcome {
    let (_, target) = normalisation(m, n).expect("identified pair");
    let phi = ctx.phi_x(m, n);
    let t = target.series(ctx.base());
    let Some((e, c)) = phi.leading() else {
        return Outcome::exact(false, || "series vanishes".into());
    };
    let k = c.as_rational().expect("rational series") / t.coeff(*e).as_rational().expect("rational series");
    let scaled = t.scale_rational(&k);
    modular_eq(&phi, &scaled, weight(m, n)).with_value(format!("Phi_{m},{n}(x) = {k} * target"))
}

/// Solves Φ = c₁·η⁸Δ²E₄⁴ + c₂·η⁸Δ²E₄E₆² from the first two coefficients,
/// then compares the whole known prefix.
pub fn span_check(ctx: &Context, m: u32, n: u32) -> Outcome {
    let b = ctx.base();
    let pre = b.eta8().mul(&b.delta.pow(2));
    let basis = [pre.mul(&b.e4.pow(4)), pre.mul(&b.e4).mul(&b.e6.pow(2))];
    let phi = ctx.phi_x(m, n);
    let v = basis[0].valuation().expect("nonzero");
    let den = phi.den();
    let mut rows: Vec<Vec<Cyc>> =
        [v, v + den].iter().map(|&e| vec![basis[0].coeff(e), basis[1].coeff(e), phi.coeff(e)]).collect();
    let Some(c) = solve_square(&mut rows) else {
        return Outcome::exact(false, || "basis leading coefficients are dependent".into());
    };
    let fit = basis[0].scale(&c[0]).add(&basis[1].scale(&c[1]));
    modular_eq(&phi, &fit, weight(m, n)).with_value(format!("({}, {})", describe_coeff(&c[0]), describe_coeff(&c[1])))
}

pub fn checks() -> Vec<Check> {
    let mut v = Vec::new();
    for (m, n) in ZERO_FORMS {
        v.push(Check::new(zero_name(m, n), move |ctx: &Context| modular_zero(&ctx.phi_x(m, n), weight(m, n))));
    }
    for (m, n, _, target) in IDENTIFICATIONS {
        v.push(Check::new(format!("phi_{m}_{n}_identification"), move |ctx: &Context| {
            modular_eq(&normalised(ctx, m, n), &target.series(ctx.base()), weight(m, n))
        }));
    }
    for (m, n, _, _) in IDENTIFICATIONS {
        v.push(Check::new(format!("phi_{m}_{n}_in_target_line"), move |ctx: &Context| line_check(ctx, m, n)));
    }
    for (m, n) in LEADING {
        v.push(Check::new(format!("phi_{m}_{n}_leading_coefficient"), move |ctx: &Context| leading_check(ctx, m, n)));
    }
    for (m, n) in SPANNED {
        v.push(Check::new(format!("phi_{m}_{n}_span"), move |ctx: &Context| span_check(ctx, m, n)));
    }
    v
}
