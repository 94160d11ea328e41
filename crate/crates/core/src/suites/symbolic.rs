//! Exact polynomial identities: transformation laws, orbit sums, the
//! 21-dimensional representation, Klein's quartic system and some arithmetic.

use std::sync::OnceLock;

use super::{int, Check, Outcome};
use crate::cyclo::{field_constants, CyclotomicNumber as Cyc, Rational};
use crate::invariants::{
    b_phi_correspondence, displayed_s_columns, family_a, family_b, family_c, family_d, family_g, generated_s_columns,
    induced_matrix, klein_quartic, klein_system, matrices, phi4, phi_mn_direct, phi_mn_symbolic, phi_nu, psi2,
    w_delta, B_LABELS, B_T_EXPONENTS, C_TWIST,
};
use crate::linalg::rank;
use crate::mpoly::{apply_linear, express_in_basis, LinearMap, Monomial, MultiPoly};

/// None when equal, otherwise the leading term of the difference.
pub fn poly_diff(lhs: &MultiPoly, rhs: &MultiPoly) -> Option<String> {
    let d = lhs - rhs;
    let (m, c) = d.terms().next()?;
    Some(format!("lhs - rhs has {} terms, first ({c})*{m}", d.len()))
}

fn cached_s_tilde() -> &'static LinearMap {
    static S: OnceLock<LinearMap> = OnceLock::new();
    S.get_or_init(|| induced_matrix(&matrices().s, &family_b().members).expect("S preserves the span of the B-terms"))
}

fn t_tilde() -> LinearMap {
    LinearMap::diagonal(B_T_EXPONENTS.iter().map(|&k| Cyc::zeta_pow(k)).collect())
}

/// apply(S·T^ν, p) for ν = 0..12, reusing S(p).
fn st_orbit(p: &MultiPoly) -> Vec<MultiPoly> {
    let ms = matrices();
    let sp = apply_linear(&ms.s, p);
    (0..13).map(|nu| apply_linear(&ms.t.pow(nu), &sp)).collect()
}

fn all_nu(mut f: impl FnMut(usize) -> Option<String>) -> Outcome {
    for nu in 0..13 {
        if let Some(w) = f(nu) {
            return Outcome::exact(false, || format!("nu = {nu}: {w}"));
        }
    }
    Outcome::exact(true, String::new)
}

fn zeta(k: i64) -> Cyc {
    Cyc::zeta_pow(k)
}

pub fn a_law() -> Outcome {
    let a = family_a();
    let sqrt13 = field_constants().sqrt13;
    let orbit = st_orbit(&a.members[0]);
    all_nu(|nu| poly_diff(&orbit[nu].scale(&sqrt13), &phi_nu(&a, nu as i64)))
}

/// Coefficient multipliers of the D-laws: D₀ row then D∞ row, indexed 0..=13.
fn d_law_rows() -> [[Cyc; 14]; 2] {
    let f = field_constants();
    let (r0, ri, r1, r2, r3, r4) = (&f.r0, &f.r_inf, &f.r1, &f.r2, &f.r3, &f.r4);
    let n = |x: &Cyc| -x;
    [
        [
            r0.clone(), r1.clone(), r2.clone(), r1.clone(), r3.clone(), r2.clone(), r2.clone(),
            r4.clone(), r4.clone(), r1.clone(), r3.clone(), r4.clone(), r3.clone(), ri.clone(),
        ],
        [
            ri.clone(), n(r3), n(r4), n(r3), r1.clone(), n(r4), n(r4),
            r2.clone(), r2.clone(), n(r3), r1.clone(), r2.clone(), r1.clone(), n(r0),
        ],
    ]
}

fn d_law(which: usize) -> Outcome {
    let d = family_d().members;
    let row = &d_law_rows()[which];
    let scale = field_constants().sqrt13.scale_int(-13);
    let orbit = st_orbit(&d[if which == 0 { 0 } else { 13 }]);
    all_nu(|nu| {
        let mut rhs = MultiPoly::zero();
        for k in 0..14 {
            let tw = if k == 13 { 0 } else { (k * nu) as i64 };
            rhs = &rhs + &d[k].scale(&(&row[k] * &zeta(tw)));
        }
        poly_diff(&orbit[nu].scale(&scale), &rhs)
    })
}

pub fn g_law() -> Outcome {
    let g = family_g().members;
    let orbit = st_orbit(&g[0]);
    all_nu(|nu| poly_diff(&orbit[nu].scale_int(169), &w_delta(Some(nu as i64)).delta))
}

pub fn c_decomposition() -> Outcome {
    let c = family_c().members;
    let sq = MultiPoly::lit("z1^2 z4^2 + z2^2 z5^2 + z3^2 z6^2");
    let orbit = st_orbit(&sq);
    all_nu(|nu| {
        let mut rhs = c[0].clone();
        for k in 1..13 {
            rhs = &rhs + &c[k].scale(&zeta(C_TWIST[k] * nu as i64).scale_int(2));
        }
        poly_diff(&orbit[nu].scale_int(13), &rhs)
    })
}

/// The seven combined B-terms of the A₀-cross-term decomposition, each with
/// its ζ-exponent and multiplicity.
fn b_combined() -> Vec<(i64, i64, MultiPoly)> {
    let b = family_b();
    let g = |l: &str| b.get(l).expect("label").clone();
    let mut out = vec![(0, 1, &(&g("B0_0").scale_int(5) + &g("B0_1").scale_int(2)) - &g("B0_2").scale_int(2))];
    for k in [1, 3, 9] {
        out.push((k, 1, &g(&format!("B{k}_1")) + &g(&format!("B{k}_2"))));
    }
    for k in [12, 10, 4] {
        out.push((k, 1, &g(&format!("B{k}_2")) - &g(&format!("B{k}_1"))));
    }
    for k in [5, 2, 6, 8, 11, 7] {
        out.push((k, 2, g(&format!("B{k}"))));
    }
    out
}

pub fn b_decomposition() -> Outcome {
    let cross = MultiPoly::lit("z1 z4 z2 z5 + z2 z5 z3 z6 + z3 z6 z1 z4");
    let orbit = st_orbit(&cross);
    let parts = b_combined();
    all_nu(|nu| {
        let mut rhs = MultiPoly::zero();
        for (k, mult, p) in &parts {
            rhs = &rhs + &p.scale(&zeta(k * nu as i64).scale_int(*mult));
        }
        poly_diff(&orbit[nu].scale_int(13), &rhs)
    })
}

fn coeff_list(c: &[Cyc]) -> String {
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn phi4_in_b_basis() -> Outcome {
    let b = family_b().members;
    match express_in_basis(&phi4(), &b[..3]) {
        Ok(c) => {
            let want = [int(3), int(1), int(-1)];
            Outcome::exact(c == want, || format!("coefficients ({})", coeff_list(&c)))
        }
        Err(e) => Outcome::exact(false, || e.to_string()),
    }
}

pub fn s_tilde_column(label: &'static str, shown: Vec<Cyc>) -> Outcome {
    let i = B_LABELS.iter().position(|l| *l == label).expect("label");
    let s13 = cached_s_tilde().scale(&int(13));
    for (j, want) in shown.iter().enumerate() {
        let got = s13.get(j, i);
        if got != want {
            return Outcome::exact(false, || format!("coefficient of {}: computed {got}, displayed {want}", B_LABELS[j]));
        }
    }
    Outcome::exact(true, String::new)
}

pub fn s_tilde_generated() -> Outcome {
    let generated = generated_s_columns();
    let s13 = cached_s_tilde().scale(&int(13));
    for (i, label) in B_LABELS.iter().enumerate() {
        let col = &generated[label];
        for j in 0..21 {
            if s13.get(j, i) != &col[j] {
                return Outcome::exact(false, || {
                    format!("column {label}, row {}: computed {}, generated {}", B_LABELS[j], s13.get(j, i), col[j])
                });
            }
        }
    }
    Outcome::exact(true, String::new)
}

pub fn rep21_relations() -> Outcome {
    let s = cached_s_tilde();
    let t = t_tilde();
    let id = LinearMap::identity(21);
    let st = s.mul(&t).expect("21x21");
    Outcome::all([
        ("S~^2".to_string(), Outcome::exact_diff(s.pow(2).first_difference(&id))),
        ("T~^13".to_string(), Outcome::exact_diff(t.pow(13).first_difference(&id))),
        ("(S~T~)^3".to_string(), Outcome::exact_diff(st.pow(3).first_difference(&id))),
    ])
}

/// Klein quartic symmetries under index swaps, cycles and sign changes for
/// every (w, x, y, z) in (ℤ/13)⁴ with w ≤ 6.
pub fn klein_symmetries() -> Outcome {
    let p = 13;
    for w in 0..=6 {
        for x in 0..p {
            for y in 0..p {
                for z in 0..p {
                    let base = klein_quartic(p, w, x, y, z);
                    let neg = -&base;
                    let swap = klein_quartic(p, x, w, y, z);
                    let cycle = klein_quartic(p, x, y, z, w);
                    let signed = klein_quartic(p, -w, x, p - y, z);
                    let bad = if swap != neg {
                        Some("swapping the first two indices does not negate")
                    } else if cycle != neg {
                        Some("cycling the indices does not negate")
                    } else if signed != base {
                        Some("negating indices changes the quartic")
                    } else {
                        None
                    };
                    if let Some(msg) = bad {
                        return Outcome::exact(false, || format!("({w},{x},{y},{z}): {msg}"));
                    }
                }
            }
        }
    }
    Outcome::exact(true, String::new)
}

/// Φ_{abcd} vanishes whenever two indices coincide.
pub fn klein_equal_indices() -> Outcome {
    let p = 13;
    for a in 0..=6 {
        for b in 0..=6 {
            for c in 0..=6 {
                for (t, label) in [([a, a, b, c], "w=x"), ([a, b, a, c], "w=y"), ([a, b, c, a], "w=z")] {
                    if !klein_quartic(p, t[0], t[1], t[2], t[3]).is_zero() {
                        return Outcome::exact(false, || format!("{t:?} ({label}) is nonzero"));
                    }
                }
            }
        }
    }
    Outcome::exact(true, String::new)
}

/// Multipliers u with z·B_dep − (z ± z')·B₀⁽⁰⁾ = Σ u·B, from the two
/// dependency derivations; returns the residual of the polynomial identity.
pub fn dependency_residual(which: usize) -> MultiPoly {
    let b = family_b();
    let g = |l: &str| b.get(l).expect("label").clone();
    let l = MultiPoly::lit;
    let (lhs, uses): (MultiPoly, [(&str, &str); 3]) = if which == 1 {
        // z1z2z3·B0_1 − (z1z2z3 − z4z5z6)·B0_0
        let lhs = &(&l("z1 z2 z3") * &g("B0_1")) - &(&l("z1 z2 z3 - z4 z5 z6") * &g("B0_0"));
        (lhs, [("z1 z2 z5", "B6"), ("z2 z3 z6", "B2"), ("z1 z3 z4", "B5")])
    } else {
        // z4z5z6·B0_2 + (z4z5z6 + z1z2z3)·B0_0
        let lhs = &(&l("z4 z5 z6") * &g("B0_2")) + &(&l("z4 z5 z6 + z1 z2 z3") * &g("B0_0"));
        (lhs, [("z1 z4 z6", "B8"), ("z2 z4 z5", "B7"), ("z3 z5 z6", "B11")])
    };
    let mut rhs = MultiPoly::zero();
    for (u, label) in uses {
        rhs = &rhs + &(&l(u) * &g(label));
    }
    &lhs - &rhs
}

fn b_rank() -> usize {
    let b = family_b().members;
    let mut monos: Vec<Monomial> = b.iter().flat_map(|p| p.terms().map(|(m, _)| *m)).collect();
    monos.sort();
    monos.dedup();
    let rows: Vec<Vec<Rational>> = b
        .iter()
        .map(|p| monos.iter().map(|m| p.coeff(m).as_rational().expect("rational")).collect())
        .collect();
    rank(rows)
}

fn genus(p: i64) -> Rational {
    Rational::new(((p + 2) * (p - 3) * (p - 5)).into(), 24.into())
}

fn degree(p: i64) -> Rational {
    Rational::new(((p - 3) * (p * p - 1)).into(), 48.into())
}

/// Order of SL(2, q) from the class-size formula.
fn sl2_order_formula(q: i64) -> i64 {
    1 + q * q + (q - 3) / 2 * (q + 1) * (q + 1) + 2 * ((q + 1) / 2).pow(2) + (q - 1) / 2 * (q - 1) * (q - 1)
        + 2 * ((q - 1) / 2).pow(2)
}

pub fn checks() -> Vec<Check> {
    let mut v = vec![
        Check::new("A_transformation_law", |_| a_law()),
        Check::new("D0_transformation_law", |_| d_law(0)),
        Check::new("Dinf_transformation_law", |_| d_law(1)),
        Check::new("G_transformation_law", |_| g_law()),
        Check::new("C_decomposition", |_| c_decomposition()),
        Check::new("B_decomposition", |_| b_decomposition()),
        Check::new("sum_w_equals_26_psi2", |_| {
            Outcome::exact_diff(poly_diff(&phi_mn_symbolic(1, 0).expect("degree 4"), &psi2().scale_int(26)))
        }),
        Check::new("psi2_equals_2phi4", |_| Outcome::exact_diff(poly_diff(&psi2(), &phi4().scale_int(2)))),
        Check::new("phi6_vanishes", |_| {
            let p = phi_mn_symbolic(0, 1).expect("degree 6");
            Outcome::exact(p.is_zero(), || format!("{} terms remain", p.len()))
        }),
        Check::new("orbit_sums_match_direct_expansion", |_| {
            Outcome::all([(1, 0), (0, 1), (2, 0), (1, 1)].map(|(m, n)| {
                let s = phi_mn_symbolic(m, n).expect("degree");
                (format!("Phi_{m},{n}"), Outcome::exact_diff(poly_diff(&s, &phi_mn_direct(m, n))))
            }))
        }),
        Check::new("orbit_sums_rational", |_| {
            Outcome::all([(1, 0), (0, 1), (2, 0), (1, 1), (3, 0), (0, 2)].map(|(m, n)| {
                let o = match phi_mn_symbolic(m, n) {
                    Ok(p) => Outcome::exact(p.is_rational(), || "irrational coefficient".into()),
                    Err(e) => Outcome::exact(false, || e.to_string()),
                };
                (format!("Phi_{m},{n}"), o)
            }))
        }),
        Check::new("phi4_S_invariant", |_| Outcome::exact_diff(poly_diff(&apply_linear(&matrices().s, &phi4()), &phi4()))),
        Check::new("phi4_T_invariant", |_| Outcome::exact_diff(poly_diff(&apply_linear(&matrices().t, &phi4()), &phi4()))),
        Check::new("phi4_in_B_basis", |_| phi4_in_b_basis()),
        Check::new("B_terms_independent", |_| {
            let r = b_rank();
            Outcome::exact(r == 21, || format!("rank {r}")).with_value(r)
        }),
        Check::new("B_terms_rational", |_| {
            let ok = family_b().members.iter().chain(family_c().members.iter()).all(|p| p.is_rational());
            Outcome::exact(ok, || "a B- or C-term has an irrational coefficient".into())
        }),
        Check::new("B_T_eigenvalues", |_| {
            let t = induced_matrix(&matrices().t, &family_b().members);
            match t {
                Ok(t) => Outcome::exact_diff(t.first_difference(&t_tilde())),
                Err(e) => Outcome::exact(false, || e.to_string()),
            }
        }),
    ];
    for (label, col) in displayed_s_columns() {
        v.push(Check::new(format!("S_action_{label}"), move |_| s_tilde_column(label, col.clone())));
    }
    v.extend([
        Check::new("S_action_generated_columns", |_| s_tilde_generated()),
        Check::new("rep21_relations", |_| rep21_relations()),
        Check::new("trace_Stilde", |_| {
            let tr = cached_s_tilde().trace();
            Outcome::exact(tr == int(1), || format!("trace {tr}")).with_value(tr)
        }),
        Check::new("trace_Ttilde", |_| {
            let tr = t_tilde().trace();
            let want = (&int(3) + &field_constants().sqrt13).scale(&Rational::new(1.into(), 2.into()));
            Outcome::exact(tr == want, || format!("trace {tr}")).with_value("(3+sqrt13)/2")
        }),
        Check::new("klein_distinct_count", |_| {
            let n = klein_system(13).len();
            Outcome::exact(n == 21, || format!("{n} distinct quartics")).with_value(n)
        }),
        Check::new("klein_phi0123", |_| {
            let want = MultiPoly::lit("z1^3 z5 - z2^3 z4 + z3^3 z1");
            Outcome::exact_diff(poly_diff(&klein_quartic(13, 0, 1, 2, 3), &want))
        }),
        Check::new("klein_equal_indices_vanish", |_| klein_equal_indices()),
        Check::new("klein_symmetries", |_| klein_symmetries()),
    ]);
    for i in 0..21 {
        v.push(Check::new(format!("correspondence_{}", B_LABELS[i]), move |_| {
            let item = b_phi_correspondence().into_iter().nth(i).expect("21 items");
            Outcome::exact(item.holds, || {
                format!("{} does not map to {}Phi{:?}", item.b_label, if item.sign < 0 { "-" } else { "+" }, item.tuples)
            })
        }));
    }
    v.extend([
        Check::new("B0_1_dependency_identity", |_| {
            let r = dependency_residual(1);
            Outcome::exact(r.is_zero(), || format!("residual has {} terms", r.len()))
        }),
        Check::new("B0_2_dependency_identity", |_| {
            let r = dependency_residual(2);
            Outcome::exact(r.is_zero(), || format!("residual has {} terms", r.len()))
        }),
        Check::new("arith_class_equation_sl2_13", |_| {
            let n = sl2_order_formula(13);
            Outcome::exact(n == 2184, || format!("formula gives {n}")).with_value(n)
        }),
        Check::new("arith_dimension_sum", |_| {
            let n = 1 + 21 * 21 + 13 * 13 + 3 * 14 * 14 + 7 * 7 + 6 * 12 * 12 + 2 * 6 * 6;
            Outcome::exact(n == 2184, || format!("sum {n}")).with_value(n)
        }),
        Check::new("arith_genus_formula", |_| {
            let got: Vec<Rational> = [7, 11, 13].iter().map(|&p| genus(p)).collect();
            let want: Vec<Rational> = [3, 26, 50].iter().map(|&g| Rational::from_integer(g.into())).collect();
            Outcome::exact(got == want, || format!("genera {got:?}")).with_value(&got[2])
        }),
        Check::new("arith_degree_formula", |_| {
            let got: Vec<Rational> = [7, 11, 13].iter().map(|&p| degree(p)).collect();
            let want: Vec<Rational> = [4, 20, 35].iter().map(|&g| Rational::from_integer(g.into())).collect();
            Outcome::exact(got == want, || format!("degrees {got:?}")).with_value(&got[2])
        }),
        Check::new("arith_riemann_hurwitz", |_| {
            let chi = 2 * 1092 - 12 * 84 - 2 * 364 - 546;
            let g2 = 2 - chi;
            Outcome::exact(g2 == 100, || format!("2-2g = {chi}")).with_value(g2 / 2)
        }),
    ]);
    v
}
