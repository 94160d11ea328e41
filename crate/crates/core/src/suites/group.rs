//! Defining relations of the six-dimensional representation.

use super::{Check, Outcome};
use crate::invariants::{h_printed, matrices, matrices_from, s_matrix, t_matrix, Matrices};
use crate::mpoly::LinearMap;

fn id() -> LinearMap {
    LinearMap::identity(6)
}

fn m(a: &LinearMap, b: &LinearMap) -> LinearMap {
    a.mul(b).expect("6x6")
}

/// Compares a computed matrix with its expected value; on failure also says
/// whether the two agree up to sign, which is all projective checks see.
fn compare(got: &LinearMap, want: &LinearMap) -> Outcome {
    match got.first_difference(want) {
        None => Outcome::exact(true, String::new),
        Some(d) => {
            let up_to_sign = got.neg() == *want;
            Outcome::exact(false, || {
                if up_to_sign {
                    format!("{d}; the matrices agree up to the central sign -I")
                } else {
                    d
                }
            })
        }
    }
}

pub fn s_squared(ms: &Matrices) -> Outcome {
    compare(&ms.s.pow(2), &id().neg())
}

pub fn t_order_13(ms: &Matrices) -> Outcome {
    compare(&ms.t.pow(13), &id())
}

pub fn st_cubed(ms: &Matrices) -> Outcome {
    compare(&m(&ms.s, &ms.t).pow(3), &id())
}

pub fn h_sixth_power(ms: &Matrices) -> Outcome {
    compare(&ms.h.pow(6), &id())
}

pub fn h_conjugation(ms: &Matrices) -> Outcome {
    let h_inv = ms.h.inverse().expect("H invertible");
    compare(&m(&m(&h_inv, &ms.t), &ms.h), &ms.t.pow(4).neg())
}

pub fn q3p4_cubed(ms: &Matrices) -> Outcome {
    compare(&m(&ms.q.pow(3), &ms.p.pow(4)).pow(3), &id().neg())
}

pub fn h_matches_printed(ms: &Matrices) -> Outcome {
    compare(&ms.h, &h_printed())
}

pub fn checks() -> Vec<Check> {
    type Rel = fn(&Matrices) -> Outcome;
    let rels: [(&str, Rel); 7] = [
        ("S_squared", s_squared),
        ("T_order_13", t_order_13),
        ("ST_cubed", st_cubed),
        ("H_sixth_power", h_sixth_power),
        ("H_conjugation", h_conjugation),
        ("Q3P4_cubed", q3p4_cubed),
        ("H_matches_printed", h_matches_printed),
    ];
    rels.into_iter().map(|(name, f)| Check::new(name, move |_| f(&matrices()))).collect()
}

/// S with its first two rows exchanged. S is symmetric, so transposing it
/// would not perturb anything; a row swap does.
pub fn perturbed_s() -> LinearMap {
    let s = s_matrix();
    let mut rows: Vec<Vec<_>> = (0..6).map(|i| s.row(i).to_vec()).collect();
    rows.swap(0, 1);
    LinearMap::from_rows(rows)
}

pub fn controls() -> Vec<Check> {
    vec![Check::control("control_S_row_swap_squared", |_| s_squared(&matrices_from(perturbed_s(), t_matrix())))]
}
