//! Binary polyhedral invariants (E₆, E₇, E₈ singularities) and their
//! parametrisations by theta constants of levels 3, 4 and 5.

use super::{modular_eq, Check, Context, Outcome};
use super::symbolic::poly_diff;
use crate::mpoly::MultiPoly;
use crate::qseries::{self, poly_eval, theta_char, theta_level3, theta_level4, QSeries, SMALL_LEVEL_DEN};

fn l(s: &str) -> MultiPoly {
    MultiPoly::lit(s)
}

/// Klein's icosahedral vertex form f.
pub fn ico_f() -> MultiPoly {
    l("z1^11 z2 + 11 z1^6 z2^6 - z1 z2^11")
}

pub fn ico_h() -> MultiPoly {
    l("-z1^20 - z2^20 + 228 z1^15 z2^5 - 228 z1^5 z2^15 - 494 z1^10 z2^10")
}

pub fn ico_t() -> MultiPoly {
    l("z1^30 + z2^30 + 522 z1^25 z2^5 - 522 z1^5 z2^25 - 10005 z1^20 z2^10 - 10005 z1^10 z2^20")
}

fn hessian(f: &MultiPoly) -> MultiPoly {
    let (fx, fy) = (f.derivative(0), f.derivative(1));
    &(&fx.derivative(0) * &fy.derivative(1)) - &(&fx.derivative(1) * &fy.derivative(0))
}

fn jacobian(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    &(&f.derivative(0) * &g.derivative(1)) - &(&f.derivative(1) * &g.derivative(0))
}

/// The displayed H is Hess(f)/121.
pub fn icosahedral_hessian() -> Outcome {
    Outcome::exact_diff(poly_diff(&hessian(&ico_f()), &ico_h().scale_int(121)))
}

/// The displayed T is +Jac(f, H)/20. (With the opposite sign T would change
/// sign, which T² + H³ = 1728f⁵ cannot see but T(x) = Δ²E₆ can.)
pub fn icosahedral_jacobian() -> Outcome {
    Outcome::exact_diff(poly_diff(&jacobian(&ico_f(), &ico_h()), &ico_t().scale_int(20)))
        .with_value("Jac(f,H) = 20 T")
}

pub fn tet_t() -> MultiPoly {
    l("z1^5 z2 - z1 z2^5")
}

pub fn tet_w() -> MultiPoly {
    l("z1^8 + 14 z1^4 z2^4 + z2^8")
}

pub fn tet_chi() -> MultiPoly {
    l("z1^12 - 33 z1^8 z2^4 - 33 z1^4 z2^8 + z2^12")
}

pub fn level3_f() -> [MultiPoly; 3] {
    [l("z1^4 + 8 z1 z2^3"), l("4 z2^4 - 4 z1^3 z2"), l("z1^6 - 20 z1^3 z2^3 - 8 z2^6")]
}

fn icosahedral_syzygy() -> Outcome {
    let lhs = &ico_t().pow(2) + &ico_h().pow(3);
    Outcome::exact_diff(poly_diff(&lhs, &ico_f().pow(5).scale_int(1728)))
}

fn tetrahedral_syzygy() -> Outcome {
    let lhs = &(&tet_chi().pow(2) - &tet_w().pow(3)) + &tet_t().pow(4).scale_int(108);
    Outcome::exact_diff(poly_diff(&lhs, &MultiPoly::zero()))
}

fn octahedral_syzygy() -> Outcome {
    let (f1, f2, f3) = (&tet_t() * &tet_chi(), tet_w(), tet_t().pow(2));
    let rhs = &(&f3 * &f2.pow(3)) - &f3.pow(3).scale_int(108);
    Outcome::exact_diff(poly_diff(&f1.pow(2), &rhs))
}

fn level3_syzygy() -> Outcome {
    let [a, b, c] = level3_f();
    Outcome::exact_diff(poly_diff(&(&a.pow(3) + &b.pow(3)), &c.pow(2)))
}

/// f₂⁴ = f₃² + 4f₁³ with f₁ = F₁F₂, f₂ = F₃, f₃ = F₁³ − F₂³.
fn level3_f_relation() -> Outcome {
    let [a, b, c] = level3_f();
    let (f1, f2, f3) = (&a * &b, c, &a.pow(3) - &b.pow(3));
    Outcome::exact_diff(poly_diff(&f2.pow(4), &(&f3.pow(2) + &f1.pow(3).scale_int(4))))
}

/// g₁² = g₃³ − 4g₂³g₃ with g₁ = f₂f₃, g₂ = f₁, g₃ = f₂².
fn level3_g_relation() -> Outcome {
    let [a, b, c] = level3_f();
    let (f1, f2, f3) = (&a * &b, c, &a.pow(3) - &b.pow(3));
    let (g1, g2, g3) = (&f2 * &f3, f1, f2.pow(2));
    Outcome::exact_diff(poly_diff(&g1.pow(2), &(&g3.pow(3) - &(&g2.pow(3) * &g3).scale_int(4))))
}

/// Level-one forms on a given grid.
struct Forms {
    eta: QSeries,
    e4: QSeries,
    e6: QSeries,
    delta: QSeries,
}

impl Forms {
    fn new(den: i64, margin: i64) -> Self {
        let eta = qseries::eta(den, margin);
        let delta = eta.pow(24);
        Self { e4: qseries::eisenstein(4, den, margin), e6: qseries::eisenstein(6, den, margin), delta, eta }
    }
}

/// x₁ = η·a, x₂ = η·b with the order-five theta constants a, b.
fn level5_x(margin: i64) -> Vec<QSeries> {
    let den = SMALL_LEVEL_DEN;
    let eta = qseries::eta(den, margin);
    [3, 1].iter().map(|&l| eta.mul(&theta_char(l, 5, den, margin).expect("grid"))).collect()
}

fn level5(margin: i64, which: &str) -> Outcome {
    let x = level5_x(margin);
    let m = Forms::new(SMALL_LEVEL_DEN, margin);
    let f = poly_eval(&ico_f(), &x);
    let h = poly_eval(&ico_h(), &x);
    match which {
        "f" => modular_eq(&f, &m.delta.neg(), 12),
        "H" => modular_eq(&h, &m.eta.pow(8).mul(&m.delta).mul(&m.e4).neg(), 20),
        "T" => modular_eq(&poly_eval(&ico_t(), &x), &m.delta.pow(2).mul(&m.e6), 30),
        _ => {
            // H³ = j f⁵ and −T² = (j − 1728) f⁵, cleared of Δ: H³Δ = E₄³f⁵, −T²Δ = E₆²f⁵.
            let t = poly_eval(&ico_t(), &x);
            let f5 = f.pow(5);
            Outcome::all([
                ("j".to_string(), modular_eq(&h.pow(3).mul(&m.delta), &m.e4.pow(3).mul(&f5), 72)),
                ("j-1728".to_string(), modular_eq(&t.pow(2).mul(&m.delta).neg(), &m.e6.pow(2).mul(&f5), 72)),
            ])
        }
    }
}

fn level4(margin: i64, which: &str) -> Outcome {
    let (t0, t1) = theta_level4(SMALL_LEVEL_DEN, margin).expect("grid");
    let x = [t0, t1];
    let m = Forms::new(SMALL_LEVEL_DEN, margin);
    match which {
        "t4" => modular_eq(&poly_eval(&tet_t(), &x).pow(4), &m.delta.scale_int(16), 12),
        "W" => modular_eq(&poly_eval(&tet_w(), &x), &m.e4, 4),
        _ => modular_eq(&poly_eval(&tet_chi(), &x), &m.e6, 6),
    }
}

fn level3(margin: i64, which: &str) -> Outcome {
    let (t0, t1) = theta_level3(SMALL_LEVEL_DEN, margin).expect("grid");
    let x = [t0, t1];
    let m = Forms::new(SMALL_LEVEL_DEN, margin);
    let [a, b, c] = level3_f();
    match which {
        "F1" => modular_eq(&poly_eval(&a, &x), &m.e4, 4),
        "F2" => modular_eq(&poly_eval(&b, &x).pow(3), &m.delta.scale_int(-1728), 12),
        _ => modular_eq(&poly_eval(&c, &x), &m.e6, 6),
    }
}

pub fn checks() -> Vec<Check> {
    vec![
        Check::new("icosahedral_syzygy", |_| icosahedral_syzygy()),
        Check::new("icosahedral_hessian", |_| icosahedral_hessian()),
        Check::new("icosahedral_jacobian", |_| icosahedral_jacobian()),
        Check::new("tetrahedral_syzygy", |_| tetrahedral_syzygy()),
        Check::new("octahedral_syzygy", |_| octahedral_syzygy()),
        Check::new("level3_syzygy", |_| level3_syzygy()),
        Check::new("level3_f_relation", |_| level3_f_relation()),
        Check::new("level3_g_relation", |_| level3_g_relation()),
        Check::new("f_equals_minus_delta", |ctx: &Context| level5(ctx.margin, "f")),
        Check::new("H_equals_minus_eta8_delta_E4", |ctx: &Context| level5(ctx.margin, "H")),
        Check::new("T_equals_delta2_E6", |ctx: &Context| level5(ctx.margin, "T")),
        Check::new("level5_j_decomposition", |ctx: &Context| level5(ctx.margin, "j")),
        Check::new("level4_t4", |ctx: &Context| level4(ctx.margin, "t4")),
        Check::new("level4_W", |ctx: &Context| level4(ctx.margin, "W")),
        Check::new("level4_chi", |ctx: &Context| level4(ctx.margin, "chi")),
        Check::new("level3_F1", |ctx: &Context| level3(ctx.margin, "F1")),
        Check::new("level3_F2cubed", |ctx: &Context| level3(ctx.margin, "F2")),
        Check::new("level3_F3", |ctx: &Context| level3(ctx.margin, "F3")),
    ]
}
