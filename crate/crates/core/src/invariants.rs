//! The matrices S, T, H, P, Q of the six-dimensional representation of
//! SL(2,13), the named polynomial families built from them, Klein's quartic
//! system, and the induced 21-dimensional representation on the B-terms.

use std::collections::BTreeMap;

use crate::cyclo::{field_constants, CyclotomicNumber as Cyc, Rational};
use crate::error::MathError;
use crate::mpoly::{apply_linear, express_in_basis, LinearMap, MultiPoly, NVARS};

/// ζ-exponents of the diagonal matrix T.
pub const T_WEIGHTS: [i64; NVARS] = [7, 11, 8, 6, 2, 5];

/// ζ-exponents e_k with φ_ν = Σ ζ^{e_k ν} A_k.
pub const A_TWIST: [i64; 7] = [0, 1, 4, 9, 3, 12, 10];

/// Index of the point at infinity in 14-member families.
pub const INF: usize = 13;

/// The six 6×6 matrices generating (and derived from) the representation.
#[derive(Clone, Debug)]
pub struct Matrices {
    pub s: LinearMap,
    pub t: LinearMap,
    pub h: LinearMap,
    pub p: LinearMap,
    pub q: LinearMap,
}

fn zdiff(a: i64, b: i64) -> Cyc {
    Cyc::from_zeta_terms(&[(1, a), (-1, b)])
}

/// S as printed: −(1/√13)·M with M built from differences of ζ powers.
pub fn s_matrix() -> LinearMap {
    const M: [[(i64, i64); 6]; 6] = [
        [(12, 1), (10, 3), (4, 9), (5, 8), (2, 11), (6, 7)],
        [(10, 3), (4, 9), (12, 1), (2, 11), (6, 7), (5, 8)],
        [(4, 9), (12, 1), (10, 3), (6, 7), (5, 8), (2, 11)],
        [(5, 8), (2, 11), (6, 7), (1, 12), (3, 10), (9, 4)],
        [(2, 11), (6, 7), (5, 8), (3, 10), (9, 4), (1, 12)],
        [(6, 7), (5, 8), (2, 11), (9, 4), (1, 12), (3, 10)],
    ];
    let sqrt13 = field_constants().sqrt13;
    // −1/√13 = −√13/13
    let f = sqrt13.scale(&Rational::new((-1).into(), 13.into()));
    LinearMap::from_rows(M.iter().map(|row| row.iter().map(|&(a, b)| &zdiff(a, b) * &f).collect()).collect())
}

pub fn t_matrix() -> LinearMap {
    LinearMap::diagonal(T_WEIGHTS.iter().map(|&w| Cyc::zeta_pow(w)).collect())
}

/// The signed permutation matrix H exactly as printed.
pub fn h_printed() -> LinearMap {
    let rows: [[i64; 6]; 6] = [
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, -1, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0],
    ];
    LinearMap::from_rows(rows.iter().map(|r| r.iter().map(|&x| Cyc::from_int(x)).collect()).collect())
}

/// Builds S, T and the words P = ST⁻¹S, Q = ST³,
/// H = Q⁵P²·P²Q⁶P⁸·Q⁵P²·P³Q.
pub fn matrices() -> Matrices {
    matrices_from(s_matrix(), t_matrix())
}

/// Same words evaluated on arbitrary S and T (used by negative controls).
pub fn matrices_from(s: LinearMap, t: LinearMap) -> Matrices {
    let m = |a: &LinearMap, b: &LinearMap| a.mul(b).expect("6x6");
    let t_inv = t.pow(12);
    let p = m(&m(&s, &t_inv), &s);
    let q = m(&s, &t.pow(3));
    let word: [(&LinearMap, u32); 8] = [(&q, 5), (&p, 4), (&q, 6), (&p, 8), (&q, 5), (&p, 2), (&p, 3), (&q, 1)];
    let mut h = LinearMap::identity(6);
    for (g, e) in word {
        h = m(&h, &g.pow(e));
    }
    Matrices { s, t, h, p, q }
}

/// A named, indexed list of polynomials.
#[derive(Clone, Debug)]
pub struct FormFamily {
    pub name: String,
    pub labels: Vec<String>,
    pub members: Vec<MultiPoly>,
}

impl FormFamily {
    fn new(name: &str, items: Vec<(&str, MultiPoly)>) -> Self {
        let (labels, members) = items.into_iter().map(|(l, p)| (l.to_string(), p)).unzip();
        Self { name: name.to_string(), labels, members }
    }

    pub fn get(&self, label: &str) -> Option<&MultiPoly> {
        self.labels.iter().position(|l| l == label).map(|i| &self.members[i])
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Looks up a family by name: A, D, G, B or C.
pub fn family(name: &str) -> Result<FormFamily, MathError> {
    match name {
        "A" => Ok(family_a()),
        "D" => Ok(family_d()),
        "G" => Ok(family_g()),
        "B" => Ok(family_b()),
        "C" => Ok(family_c()),
        other => Err(MathError::UnknownFamily(other.to_string())),
    }
}

/// Quadratic forms A₀..A₆.
pub fn family_a() -> FormFamily {
    let l = MultiPoly::lit;
    FormFamily::new(
        "A",
        vec![
            ("A0", l("z1 z4 + z2 z5 + z3 z6")),
            ("A1", l("z1^2 - 2 z3 z4")),
            ("A2", l("-z5^2 - 2 z2 z4")),
            ("A3", l("z2^2 - 2 z1 z5")),
            ("A4", l("z3^2 - 2 z2 z6")),
            ("A5", l("-z4^2 - 2 z1 z6")),
            ("A6", l("-z6^2 - 2 z3 z5")),
        ],
    )
}

/// Cubic forms D₀..D₁₂ and D∞ (index 13).
pub fn family_d() -> FormFamily {
    let l = MultiPoly::lit;
    FormFamily::new(
        "D",
        vec![
            ("D0", l("z1 z2 z3")),
            ("D1", l("2 z2 z3^2 + z2^2 z6 - z4^2 z5 + z1 z5 z6")),
            ("D2", l("-z6^3 + z2^2 z4 - 2 z2 z5^2 + z1 z4 z5 + 3 z3 z5 z6")),
            ("D3", l("2 z1 z2^2 + z1^2 z5 - z4 z6^2 + z3 z4 z5")),
            ("D4", l("-z2^2 z3 + z1 z6^2 - 2 z4^2 z6 - z1 z3 z5")),
            ("D5", l("-z4^3 + z3^2 z5 - 2 z3 z6^2 + z2 z5 z6 + 3 z1 z4 z6")),
            ("D6", l("-z5^3 + z1^2 z6 - 2 z1 z4^2 + z3 z4 z6 + 3 z2 z4 z5")),
            ("D7", l("-z2^3 + z3 z4^2 - z1 z3 z6 - 3 z1 z2 z5 + 2 z1^2 z4")),
            ("D8", l("-z1^3 + z2 z6^2 - z2 z3 z5 - 3 z1 z3 z4 + 2 z3^2 z6")),
            ("D9", l("2 z1^2 z3 + z3^2 z4 - z5^2 z6 + z2 z4 z6")),
            ("D10", l("-z1 z3^2 + z2 z4^2 - 2 z4 z5^2 - z1 z2 z6")),
            ("D11", l("-z3^3 + z1 z5^2 - z1 z2 z4 - 3 z2 z3 z6 + 2 z2^2 z5")),
            ("D12", l("-z1^2 z2 + z3 z5^2 - 2 z5 z6^2 - z2 z3 z4")),
            ("Dinf", l("z4 z5 z6")),
        ],
    )
}

/// G_k as quadratic expressions in the D-forms: (coefficient, i, j) means c·D_i·D_j.
const G_IN_D: [&[(i64, usize, usize)]; 13] = [
    &[(1, 0, 0), (1, INF, INF)],
    &[(-1, 7, 7), (2, 0, 1), (10, INF, 1), (2, 2, 12), (-2, 3, 11), (-4, 4, 10), (-2, 9, 5)],
    &[(-2, 1, 1), (-4, 0, 2), (6, INF, 2), (-2, 4, 11), (2, 5, 10), (-2, 6, 9), (-2, 7, 8)],
    &[(-1, 8, 8), (2, 0, 3), (10, INF, 3), (2, 6, 10), (-2, 9, 7), (-4, 12, 4), (-2, 1, 2)],
    &[(-1, 2, 2), (10, 0, 4), (-2, INF, 4), (2, 5, 12), (-2, 9, 8), (-4, 1, 3), (-2, 10, 7)],
    &[(-2, 9, 9), (-4, 0, 5), (6, INF, 5), (-2, 10, 8), (2, 6, 12), (-2, 2, 3), (-2, 11, 7)],
    &[(-2, 3, 3), (-4, 0, 6), (6, INF, 6), (-2, 12, 7), (2, 2, 4), (-2, 5, 1), (-2, 8, 11)],
    &[(-2, 10, 10), (6, 0, 7), (4, INF, 7), (-2, 1, 6), (-2, 2, 5), (-2, 8, 12), (-2, 9, 11)],
    &[(-2, 4, 4), (6, 0, 8), (4, INF, 8), (-2, 3, 5), (-2, 6, 2), (-2, 11, 10), (-2, 1, 7)],
    &[(-1, 11, 11), (2, 0, 9), (10, INF, 9), (2, 5, 4), (-2, 1, 8), (-4, 10, 12), (-2, 3, 6)],
    &[(-1, 5, 5), (10, 0, 10), (-2, INF, 10), (2, 6, 4), (-2, 3, 7), (-4, 9, 1), (-2, 12, 11)],
    &[(-2, 12, 12), (6, 0, 11), (4, INF, 11), (-2, 9, 2), (-2, 5, 6), (-2, 7, 4), (-2, 3, 8)],
    &[(-1, 6, 6), (10, 0, 12), (-2, INF, 12), (2, 2, 10), (-2, 1, 11), (-4, 3, 9), (-2, 4, 8)],
];

/// Sextic forms G₀..G₁₂.
pub fn family_g() -> FormFamily {
    let d = family_d().members;
    let labels: Vec<String> = (0..13).map(|k| format!("G{k}")).collect();
    let members = G_IN_D
        .iter()
        .map(|terms| {
            let mut g = MultiPoly::zero();
            for &(c, i, j) in *terms {
                g = &g + &(&d[i] * &d[j]).scale_int(c);
            }
            g
        })
        .collect();
    FormFamily { name: "G".into(), labels, members }
}

/// Labels of the B-basis in canonical order.
pub const B_LABELS: [&str; 21] = [
    "B0_0", "B0_1", "B0_2", "B1_1", "B1_2", "B3_1", "B3_2", "B9_1", "B9_2", "B12_1", "B12_2", "B10_1", "B10_2",
    "B4_1", "B4_2", "B5", "B2", "B6", "B8", "B11", "B7",
];

/// T-eigenvalue exponent of each B-term (T(B) = ζ^k B).
pub const B_T_EXPONENTS: [i64; 21] = [0, 0, 0, 1, 1, 3, 3, 9, 9, 12, 12, 10, 10, 4, 4, 5, 2, 6, 8, 11, 7];

/// The 21 quartics generating the ideal of the curve.
pub fn family_b() -> FormFamily {
    let l = MultiPoly::lit;
    let src = [
        "z1 z2 z4 z5 + z2 z3 z5 z6 + z3 z1 z6 z4",
        "z1 z5^3 + z2 z6^3 + z3 z4^3",
        "z1^3 z6 + z2^3 z4 + z3^3 z5",
        "z3 z5^3 + z1^3 z4 - z1 z2^3",
        "z2 z4 z6^2 - z3^2 z6 z4 - z1^2 z2 z5",
        "z2 z4^3 + z3^3 z6 - z3 z1^3",
        "z1 z6 z5^2 - z2^2 z5 z6 - z3^2 z1 z4",
        "z1 z6^3 + z2^3 z5 - z2 z3^3",
        "z3 z5 z4^2 - z1^2 z4 z5 - z2^2 z3 z6",
        "z1 z4^3 + z2^3 z6 + z4 z5^3",
        "z2 z5 z4^2 - z3^2 z1 z5 - z6^2 z3 z1",
        "z3 z6^3 + z1^3 z5 + z6 z4^3",
        "z1 z4 z6^2 - z2^2 z3 z4 - z5^2 z2 z3",
        "z2 z5^3 + z3^3 z4 + z5 z6^3",
        "z3 z6 z5^2 - z1^2 z2 z6 - z4^2 z1 z2",
        "-z2^2 z1 z5 + z4 z5 z6^2 + z2 z3 z4^2",
        "-z1^2 z3 z4 + z6 z4 z5^2 + z1 z2 z6^2",
        "-z3^2 z2 z6 + z5 z6 z4^2 + z3 z1 z5^2",
        "z2 z4 z5^2 + z1 z2 z3^2 + z1^2 z5 z6",
        "z1 z6 z4^2 + z3 z1 z2^2 + z3^2 z4 z5",
        "z3 z5 z6^2 + z2 z3 z1^2 + z2^2 z6 z4",
    ];
    FormFamily::new("B", B_LABELS.iter().zip(src).map(|(lab, s)| (*lab, l(s))).collect())
}

/// ζ-exponent attached to each C-term in the A₀²-square decomposition.
pub const C_TWIST: [i64; 13] = [0, 1, 3, 9, 12, 10, 4, 5, 2, 6, 8, 11, 7];

/// The thirteen quartics C_k.
pub fn family_c() -> FormFamily {
    let l = MultiPoly::lit;
    FormFamily::new(
        "C",
        vec![
            ("C0", l("-z1^2 z4^2 - z2^2 z5^2 - z3^2 z6^2")),
            ("C1", l("z5^2 z6^2 + 2 z2 z3 z4 z5 + 2 z1^2 z2 z5 - 2 z3 z1 z4^2 - z3^2 z6 z4 + z1 z2^3 + z3 z5^3 + z2 z4 z6^2 + z1^2 z3 z6")),
            ("C3", l("z4^2 z5^2 + 2 z1 z2 z6 z4 + 2 z3^2 z1 z4 - 2 z2 z3 z6^2 - z2^2 z5 z6 + z3 z1^3 + z2 z4^3 + z1 z6 z5^2 + z3^2 z2 z5")),
            ("C9", l("z6^2 z4^2 + 2 z3 z1 z5 z6 + 2 z2^2 z3 z6 - 2 z1 z2 z5^2 - z1^2 z4 z5 + z2 z3^3 + z1 z6^3 + z3 z5 z4^2 + z2^2 z1 z4")),
            ("C12", l("z2^2 z3^2 + 2 z1 z2 z5 z6 - 2 z4^2 z2 z5 - 2 z1^2 z6 z4 - z6^2 z3 z1 - z2^3 z6 - z3^2 z1 z5 + z4 z5^3 - z4^2 z3 z6")),
            ("C10", l("z1^2 z2^2 + 2 z3 z1 z4 z5 - 2 z6^2 z1 z4 - 2 z3^2 z5 z6 - z5^2 z2 z3 - z1^3 z5 - z2^2 z3 z4 + z6 z4^3 - z6^2 z2 z5")),
            ("C4", l("z3^2 z1^2 + 2 z2 z3 z6 z4 - 2 z5^2 z3 z6 - 2 z2^2 z4 z5 - z4^2 z1 z2 - z3^3 z4 - z1^2 z2 z6 + z5 z6^3 - z5^2 z1 z4")),
            ("C5", l("1/2 z2^4 - 2 z4 z5 z6^2 + 2 z3 z4 z5^2 + 2 z2 z3 z4^2 - 2 z1^2 z2 z4 + z1^2 z5^2")),
            ("C2", l("1/2 z1^4 - 2 z6 z4 z5^2 + 2 z2 z6 z4^2 + 2 z1 z2 z6^2 - 2 z3^2 z1 z6 + z3^2 z4^2")),
            ("C6", l("1/2 z3^4 - 2 z5 z6 z4^2 + 2 z1 z5 z6^2 + 2 z3 z1 z5^2 - 2 z2^2 z3 z5 + z2^2 z6^2")),
            ("C8", l("1/2 z5^4 - 2 z1 z2 z3^2 + 2 z1^2 z5 z6 + 2 z1 z5 z4^2 - 2 z2^2 z1 z6 + z2^2 z4^2")),
            ("C11", l("1/2 z4^4 - 2 z3 z1 z2^2 + 2 z3^2 z4 z5 + 2 z3 z4 z6^2 - 2 z1^2 z3 z5 + z1^2 z6^2")),
            ("C7", l("1/2 z6^4 - 2 z2 z3 z1^2 + 2 z2^2 z6 z4 + 2 z2 z6 z5^2 - 2 z3^2 z2 z4 + z3^2 z5^2")),
        ],
    )
}

/// φ_ν = A₀ + ζ^ν A₁ + ζ^{4ν} A₂ + ζ^{9ν} A₃ + ζ^{3ν} A₄ + ζ^{12ν} A₅ + ζ^{10ν} A₆.
pub fn phi_nu(a: &FormFamily, nu: i64) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for (k, m) in a.members.iter().enumerate() {
        p = &p + &m.scale(&Cyc::zeta_pow(A_TWIST[k] * nu));
    }
    p
}

/// The pair (w_ν, δ_ν); `nu = None` is the point at infinity.
#[derive(Clone, Debug)]
pub struct WDelta {
    pub w: MultiPoly,
    pub delta: MultiPoly,
}

/// w_ν = φ_ν², δ_ν = −13G₀ + Σ ζ^{kν} G_k; w∞ = 13A₀², δ∞ = 169G₀.
pub fn w_delta(nu: Option<i64>) -> WDelta {
    let a = family_a();
    let g = family_g();
    match nu {
        None => WDelta { w: a.members[0].pow(2).scale_int(13), delta: g.members[0].scale_int(169) },
        Some(nu) => {
            let phi = phi_nu(&a, nu);
            let mut delta = g.members[0].scale_int(-13);
            for k in 1..13 {
                delta = &delta + &g.members[k].scale(&Cyc::zeta_pow(k as i64 * nu));
            }
            WDelta { w: &phi * &phi, delta }
        }
    }
}

/// The invariant quartic Φ₄.
pub fn phi4() -> MultiPoly {
    MultiPoly::lit(
        "z3 z4^3 + z1 z5^3 + z2 z6^3 - z6 z1^3 - z4 z2^3 - z5 z3^3 + 3 z1 z2 z4 z5 + 3 z2 z3 z5 z6 + 3 z3 z1 z6 z4",
    )
}

/// Ψ₂ = A₀² + A₁A₅ + A₂A₃ + A₄A₆.
pub fn psi2() -> MultiPoly {
    let a = family_a().members;
    &(&(&a[0].pow(2) + &(&a[1] * &a[5])) + &(&a[2] * &a[3])) + &(&a[4] * &a[6])
}

/// Unnormalised orbit sum Σ_ν w_ν^m δ_ν^n + w∞^m δ∞^n for 4m+6n ≤ 12.
///
/// Because w_ν and δ_ν are the T^ν-twists of w₀ and δ₀, the thirteen finite
/// terms sum to 13 times the T-invariant part of w₀^m δ₀^n.
pub fn phi_mn_symbolic(m: u32, n: u32) -> Result<MultiPoly, MathError> {
    let deg = 4 * m + 6 * n;
    if deg > 12 {
        return Err(MathError::DegreeBound(deg));
    }
    let fin = w_delta(Some(0));
    let inf = w_delta(None);
    let prod = &fin.w.pow(m) * &fin.delta.pow(n);
    let orbit = prod.weight_part(&T_WEIGHTS, 0).scale_int(13);
    let total = &orbit + &(&inf.w.pow(m) * &inf.delta.pow(n));
    if let Some((_, c)) = total.terms().find(|(_, c)| !c.is_rational()) {
        return Err(MathError::NotRational(c.to_string()));
    }
    Ok(total)
}

/// The same sum computed term by term over all fourteen ν (slow oracle).
pub fn phi_mn_direct(m: u32, n: u32) -> MultiPoly {
    let mut total = MultiPoly::zero();
    for nu in (0..13).map(Some).chain([None]) {
        let wd = w_delta(nu);
        total = &total + &(&wd.w.pow(m) * &wd.delta.pow(n));
    }
    total
}

/// Klein's Φ_{w,x,y,z} on E₁..E₆ (variables z₁..z₆), indices read mod p with
/// E_{−t} = −E_t and E₀ = 0.
pub fn klein_quartic(p: i64, w: i64, x: i64, y: i64, z: i64) -> MultiPoly {
    let half = (p - 1) / 2;
    assert!(half <= NVARS as i64, "only primes up to 13 fit in six variables");
    let e = |t: i64| -> MultiPoly {
        let t = t.rem_euclid(p);
        if t == 0 {
            MultiPoly::zero()
        } else if t <= half {
            MultiPoly::var(t as usize - 1)
        } else {
            -&MultiPoly::var((p - t) as usize - 1)
        }
    };
    let prod4 = |a: i64, b: i64, c: i64, d: i64| &(&e(a) * &e(b)) * &(&e(c) * &e(d));
    let t1 = prod4(w + x, w - x, y + z, y - z);
    let t2 = prod4(w + y, w - y, z + x, z - x);
    let t3 = prod4(w + z, w - z, x + y, x - y);
    &(&t1 + &t2) + &t3
}

/// One distinct quartic of the system together with every index tuple that
/// produces it (up to sign, recorded relative to the representative).
#[derive(Clone, Debug)]
pub struct KleinQuartic {
    pub poly: MultiPoly,
    pub tuples: Vec<([i64; 4], i64)>,
}

/// The distinct nonzero quartics Φ_{abcd}, 0 ≤ a<b<c<d ≤ (p−1)/2, up to sign.
pub fn klein_system(p: i64) -> Vec<KleinQuartic> {
    let half = (p - 1) / 2;
    let mut out: Vec<KleinQuartic> = Vec::new();
    for a in 0..=half {
        for b in a + 1..=half {
            for c in b + 1..=half {
                for d in c + 1..=half {
                    let q = klein_quartic(p, a, b, c, d);
                    if q.is_zero() {
                        continue;
                    }
                    let neg = -&q;
                    if let Some(k) = out.iter_mut().find(|k| k.poly == q || k.poly == neg) {
                        let s = if k.poly == q { 1 } else { -1 };
                        k.tuples.push(([a, b, c, d], s));
                    } else {
                        out.push(KleinQuartic { poly: q, tuples: vec![([a, b, c, d], 1)] });
                    }
                }
            }
        }
    }
    out
}

/// Claimed B ↔ ±Φ_{abcd} identifications, with all equal Φ-labels per item.
pub const CORRESPONDENCE: [(&str, i64, &[[i64; 4]]); 21] = [
    ("B0_0", 1, &[[1, 2, 3, 5], [1, 4, 5, 6], [2, 3, 4, 6]]),
    ("B0_1", -1, &[[0, 2, 5, 6]]),
    ("B0_2", -1, &[[0, 1, 3, 4]]),
    ("B1_1", 1, &[[0, 1, 2, 3]]),
    ("B1_2", 1, &[[0, 1, 4, 6], [1, 2, 5, 6]]),
    ("B3_1", 1, &[[0, 1, 4, 5]]),
    ("B3_2", -1, &[[0, 2, 3, 4], [2, 4, 5, 6]]),
    ("B9_1", -1, &[[0, 3, 4, 6]]),
    ("B9_2", -1, &[[0, 1, 3, 5], [2, 3, 5, 6]]),
    ("B12_1", 1, &[[0, 2, 3, 5]]),
    ("B12_2", 1, &[[0, 4, 5, 6], [1, 3, 4, 5]]),
    ("B10_1", -1, &[[0, 1, 5, 6]]),
    ("B10_2", 1, &[[0, 2, 3, 6], [1, 3, 4, 6]]),
    ("B4_1", -1, &[[0, 2, 4, 6]]),
    ("B4_2", 1, &[[0, 1, 2, 5], [1, 2, 3, 4]]),
    ("B5", 1, &[[0, 3, 5, 6], [1, 2, 4, 6]]),
    ("B2", -1, &[[0, 1, 2, 6], [2, 3, 4, 5]]),
    ("B6", -1, &[[0, 2, 4, 5], [1, 3, 5, 6]]),
    ("B8", -1, &[[0, 1, 2, 4], [3, 4, 5, 6]]),
    ("B11", -1, &[[0, 3, 4, 5], [1, 2, 3, 6]]),
    ("B7", -1, &[[0, 1, 3, 6], [1, 2, 4, 5]]),
];

/// Rewrites a B-term in the E variables via z₁ = −εE₁, z₂ = −εE₃, z₃ = εE₄,
/// z₄ = εE₅, z₅ = εE₂, z₆ = εE₆ with ε⁴ = −1.
///
/// ε itself is not in Q(ζ₁₃); for a homogeneous quartic it contributes ε⁴ = −1.
pub fn to_klein_variables(b: &MultiPoly) -> MultiPoly {
    debug_assert_eq!(b.homogeneous_degree(), Some(4));
    let perm = [0, 2, 3, 4, 1, 5];
    let sign = [-1, -1, 1, 1, 1, 1];
    -&b.substitute_signed(&perm, &sign)
}

/// One verified (or refuted) line of the correspondence.
#[derive(Clone, Debug)]
pub struct CorrespondenceItem {
    pub b_label: &'static str,
    pub sign: i64,
    pub tuples: Vec<[i64; 4]>,
    pub holds: bool,
}

/// Checks every B ↔ ±Φ_{abcd} identification under the substitution.
pub fn b_phi_correspondence() -> Vec<CorrespondenceItem> {
    let b = family_b();
    CORRESPONDENCE
        .iter()
        .map(|&(label, sign, tuples)| {
            let lhs = to_klein_variables(b.get(label).expect("label"));
            let holds = tuples.iter().all(|t| lhs == klein_quartic(13, t[0], t[1], t[2], t[3]).scale_int(sign));
            CorrespondenceItem { b_label: label, sign, tuples: tuples.to_vec(), holds }
        })
        .collect()
}

/// The action of S and T on the span of the B-terms.
#[derive(Clone, Debug)]
pub struct Rep21 {
    pub s_tilde: LinearMap,
    pub t_tilde: LinearMap,
}

/// Column i of the induced matrix: coordinates of apply(g, Bᵢ) in the B-basis.
pub fn induced_matrix(g: &LinearMap, basis: &[MultiPoly]) -> Result<LinearMap, MathError> {
    let n = basis.len();
    let mut m = LinearMap::zero(n);
    for (i, b) in basis.iter().enumerate() {
        let c = express_in_basis(&apply_linear(g, b), basis)?;
        for (j, v) in c.into_iter().enumerate() {
            m.set(j, i, v);
        }
    }
    Ok(m)
}

/// S̃ from exact span computations, T̃ from the eigenvalue list; both are
/// cross-checked and the defining relations asserted.
pub fn rep21() -> Result<Rep21, MathError> {
    let b = family_b().members;
    let mats = matrices();
    let s_tilde = induced_matrix(&mats.s, &b)?;
    let t_tilde = LinearMap::diagonal(B_T_EXPONENTS.iter().map(|&k| Cyc::zeta_pow(k)).collect());
    let t_check = induced_matrix(&mats.t, &b)?;
    assert_eq!(t_check, t_tilde, "T eigenvalues on the B-terms");
    let id = LinearMap::identity(21);
    assert_eq!(s_tilde.pow(2), id, "S~^2 = I");
    assert_eq!(t_tilde.pow(13), id, "T~^13 = I");
    assert_eq!(s_tilde.mul(&t_tilde)?.pow(3), id, "(S~T~)^3 = I");
    Ok(Rep21 { s_tilde, t_tilde })
}

/// Coefficients of 13·S(Bᵢ) in the B-basis as displayed, keyed by column label.
///
/// Entries are written with p_a = ζ^a + ζ^{13−a} and (x + y√13)/2 constants.
pub fn displayed_s_columns() -> BTreeMap<&'static str, Vec<Cyc>> {
    let sqrt13 = field_constants().sqrt13;
    // (x + y√13)/2
    let h = |x: i64, y: i64| (&Cyc::from_int(x) + &sqrt13.scale_int(y)).scale(&Rational::new(1.into(), 2.into()));
    let c = Cyc::from_int;
    // constant + Σ c·p_a, given as (c, a) with a = 0 meaning the constant.
    let pz = |terms: &[(i64, i64)]| {
        let mut v = Cyc::zero();
        for &(k, a) in terms {
            if a == 0 {
                v += &Cyc::from_int(k);
            } else {
                v += &Cyc::from_zeta_terms(&[(k, a), (k, 13 - a)]);
            }
        }
        v
    };
    // Column from groups, in basis order.
    let col = |b0: [Cyc; 3], k1: [Cyc; 3], k1b: [Cyc; 3], k2: [Cyc; 3], k2b: [Cyc; 3], rest: [Cyc; 6]| {
        // Interleave (B1_1,B1_2),(B3_1,B3_2),(B9_1,B9_2),(B12_1,B12_2),(B10_1,B10_2),(B4_1,B4_2)
        let mut v: Vec<Cyc> = b0.to_vec();
        for i in 0..3 {
            v.push(k1[i].clone());
            v.push(k2[i].clone());
        }
        for i in 0..3 {
            v.push(k1b[i].clone());
            v.push(k2b[i].clone());
        }
        v.extend(rest);
        v
    };
    let rep3 = |x: Cyc| [x.clone(), x.clone(), x];
    let rep6 = |x: Cyc| [x.clone(), x.clone(), x.clone(), x.clone(), x.clone(), x];
    let mut m = BTreeMap::new();

    m.insert("B0_0", col([c(5), c(2), c(-2)], rep3(c(1)), rep3(c(-1)), rep3(c(1)), rep3(c(1)), rep6(c(2))));
    m.insert(
        "B0_1",
        col([c(12), h(7, 1), h(-7, 1)], rep3(h(-3, 1)), rep3(h(3, 1)), rep3(h(-3, -3)), rep3(h(-3, 3)), rep6(c(-3))),
    );
    m.insert(
        "B0_2",
        col([c(-12), h(-7, 1), h(7, 1)], rep3(h(3, 1)), rep3(h(-3, 1)), rep3(h(3, -3)), rep3(h(3, 3)), rep6(c(3))),
    );

    // Frequently used sums.
    let s3 = |a: i64, b: i64, d: i64, k: i64| pz(&[(k, a), (k, b), (k, d)]);
    let one_p = |a: i64, k: i64| pz(&[(k, 0), (k, a)]);
    let diag = |s: i64, a: i64, b: i64, d: i64| pz(&[(s, 0), (s, a), (2 * s, b), (s, d)]);
    let diag2 = |a: i64, b: i64, d: i64| pz(&[(-1, 0), (-1, a), (2, b), (1, d)]);
    let big = |s: i64, a: i64, b: i64, d: i64, e: i64| pz(&[(s, a), (2 * s, b), (2 * s, d), (2 * s, e)]);

    m.insert(
        "B1_1",
        col(
            [c(6), h(-3, 1), h(3, 1)],
            [diag(1, 4, 1, 2), diag(1, 3, 4, 5), diag(1, 1, 3, 6)],
            [diag(-1, 6, 5, 3), diag(-1, 2, 6, 1), diag(-1, 5, 2, 4)],
            [one_p(4, 3), one_p(3, 3), one_p(1, 3)],
            [one_p(6, 3), one_p(2, 3), one_p(5, 3)],
            [s3(4, 6, 2, 3), s3(3, 2, 5, 3), s3(1, 5, 6, 3), s3(4, 6, 3, 3), s3(3, 2, 1, 3), s3(1, 5, 4, 3)],
        ),
    );
    m.insert(
        "B12_1",
        col(
            [c(-6), h(3, 1), h(-3, 1)],
            [diag(-1, 6, 5, 3), diag(-1, 2, 6, 1), diag(-1, 5, 2, 4)],
            [diag(1, 4, 1, 2), diag(1, 3, 4, 5), diag(1, 1, 3, 6)],
            [one_p(6, -3), one_p(2, -3), one_p(5, -3)],
            [one_p(4, -3), one_p(3, -3), one_p(1, -3)],
            [s3(4, 6, 3, -3), s3(3, 2, 1, -3), s3(1, 5, 4, -3), s3(4, 6, 2, -3), s3(3, 2, 5, -3), s3(1, 5, 6, -3)],
        ),
    );
    m.insert(
        "B1_2",
        col(
            [c(2), h(-1, -1), h(1, -1)],
            [one_p(4, 1), one_p(3, 1), one_p(1, 1)],
            [one_p(6, -1), one_p(2, -1), one_p(5, -1)],
            [diag2(4, 1, 2), diag2(3, 4, 5), diag2(1, 3, 6)],
            [diag2(6, 5, 3), diag2(2, 6, 1), diag2(5, 2, 4)],
            [s3(4, 6, 2, 1), s3(3, 2, 5, 1), s3(1, 5, 6, 1), s3(4, 6, 3, 1), s3(3, 2, 1, 1), s3(1, 5, 4, 1)],
        ),
    );
    m.insert(
        "B12_2",
        col(
            [c(2), h(-1, 1), h(1, 1)],
            [one_p(6, 1), one_p(2, 1), one_p(5, 1)],
            [one_p(4, -1), one_p(3, -1), one_p(1, -1)],
            [diag2(6, 5, 3), diag2(2, 6, 1), diag2(5, 2, 4)],
            [diag2(4, 1, 2), diag2(3, 4, 5), diag2(1, 3, 6)],
            [s3(4, 6, 3, 1), s3(3, 2, 1, 1), s3(1, 5, 4, 1), s3(4, 6, 2, 1), s3(3, 2, 5, 1), s3(1, 5, 6, 1)],
        ),
    );
    m.insert(
        "B5",
        col(
            [c(4), c(-1), c(1)],
            [s3(4, 6, 2, 1), s3(3, 2, 5, 1), s3(1, 5, 6, 1)],
            [s3(4, 6, 3, -1), s3(3, 2, 1, -1), s3(1, 5, 4, -1)],
            [s3(4, 6, 2, 1), s3(3, 2, 5, 1), s3(1, 5, 6, 1)],
            [s3(4, 6, 3, 1), s3(3, 2, 1, 1), s3(1, 5, 4, 1)],
            [
                big(-1, 3, 2, 4, 1),
                big(-1, 1, 5, 3, 4),
                big(-1, 4, 6, 1, 3),
                big(-1, 2, 3, 6, 5),
                big(-1, 5, 1, 2, 6),
                big(-1, 6, 4, 5, 2),
            ],
        ),
    );
    m.insert(
        "B8",
        col(
            [c(4), c(-1), c(1)],
            [s3(4, 6, 3, 1), s3(3, 2, 1, 1), s3(1, 5, 4, 1)],
            [s3(4, 6, 2, -1), s3(3, 2, 5, -1), s3(1, 5, 6, -1)],
            [s3(4, 6, 3, 1), s3(3, 2, 1, 1), s3(1, 5, 4, 1)],
            [s3(4, 6, 2, 1), s3(3, 2, 5, 1), s3(1, 5, 6, 1)],
            [
                big(-1, 2, 3, 6, 5),
                big(-1, 5, 1, 2, 6),
                big(-1, 6, 4, 5, 2),
                big(-1, 3, 2, 4, 1),
                big(-1, 1, 5, 3, 4),
                big(-1, 4, 6, 1, 3),
            ],
        ),
    );
    // The two further columns written out explicitly for the first triple.
    m.insert(
        "B3_1",
        col(
            [c(6), h(-3, 1), h(3, 1)],
            [diag(1, 3, 4, 5), diag(1, 1, 3, 6), diag(1, 4, 1, 2)],
            [diag(-1, 2, 6, 1), diag(-1, 5, 2, 4), diag(-1, 6, 5, 3)],
            [one_p(3, 3), one_p(1, 3), one_p(4, 3)],
            [one_p(2, 3), one_p(5, 3), one_p(6, 3)],
            [s3(3, 2, 5, 3), s3(1, 5, 6, 3), s3(4, 6, 2, 3), s3(3, 2, 1, 3), s3(1, 5, 4, 3), s3(4, 6, 3, 3)],
        ),
    );
    m.insert(
        "B9_1",
        col(
            [c(6), h(-3, 1), h(3, 1)],
            [diag(1, 1, 3, 6), diag(1, 4, 1, 2), diag(1, 3, 4, 5)],
            [diag(-1, 5, 2, 4), diag(-1, 6, 5, 3), diag(-1, 2, 6, 1)],
            [one_p(1, 3), one_p(4, 3), one_p(3, 3)],
            [one_p(5, 3), one_p(6, 3), one_p(2, 3)],
            [s3(1, 5, 6, 3), s3(4, 6, 2, 3), s3(3, 2, 5, 3), s3(1, 5, 4, 3), s3(4, 6, 3, 3), s3(3, 2, 1, 3)],
        ),
    );
    m
}

/// Triples whose later members follow from the first by ζ ↦ ζ⁹ (and ζ ↦ ζ³).
pub const S_TRIPLES: [[&str; 3]; 6] = [
    ["B1_1", "B3_1", "B9_1"],
    ["B12_1", "B10_1", "B4_1"],
    ["B1_2", "B3_2", "B9_2"],
    ["B12_2", "B10_2", "B4_2"],
    ["B5", "B2", "B6"],
    ["B8", "B11", "B7"],
];

/// All 21 columns of 13·S̃: the nine displayed ones and the rest generated by
/// the Galois permutation ζ⁹ ↦ ζ³ ↦ ζ applied to the first of each triple.
pub fn generated_s_columns() -> BTreeMap<&'static str, Vec<Cyc>> {
    let shown = displayed_s_columns();
    let mut all: BTreeMap<&'static str, Vec<Cyc>> = BTreeMap::new();
    for k in ["B0_0", "B0_1", "B0_2"] {
        all.insert(k, shown[k].clone());
    }
    for [a, b, c] in S_TRIPLES {
        let base = &shown[a];
        let g = |k: i64| base.iter().map(|x| x.galois(k).expect("coprime")).collect::<Vec<_>>();
        all.insert(a, base.clone());
        all.insert(b, g(9));
        all.insert(c, g(3));
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_have_documented_shapes() {
        let shapes = [("A", 7, 2), ("D", 14, 3), ("G", 13, 6), ("B", 21, 4), ("C", 13, 4)];
        for (name, n, d) in shapes {
            let f = family(name).unwrap();
            assert_eq!(f.len(), n, "{name}");
            for m in &f.members {
                assert_eq!(m.homogeneous_degree(), Some(d), "{name}");
            }
        }
        assert!(family_b().members.iter().all(MultiPoly::is_rational));
        assert!(family_c().members.iter().all(MultiPoly::is_rational));
        assert!(matches!(family("Z"), Err(MathError::UnknownFamily(_))));
    }

    #[test]
    fn printed_entries() {
        assert_eq!(family_a().members[1], MultiPoly::lit("z1^2 - 2 z3 z4"));
        assert_eq!(family_d().members[INF], MultiPoly::lit("z4 z5 z6"));
        assert_eq!(family_b().get("B5").unwrap(), &MultiPoly::lit("-z2^2 z1 z5 + z4 z5 z6^2 + z2 z3 z4^2"));
        assert_eq!(*t_matrix().get(0, 0), Cyc::zeta_pow(7));
    }

    #[test]
    fn phi_nu_is_a_twist_of_phi_0() {
        let a = family_a();
        let phi0 = phi_nu(&a, 0);
        for nu in 0..13 {
            assert_eq!(phi_nu(&a, nu), phi0.twist(&T_WEIGHTS, nu));
        }
    }

    #[test]
    fn phi4_coefficients() {
        use crate::mpoly::Monomial;
        let p = phi4();
        assert_eq!(p.coeff(&Monomial([1, 1, 0, 1, 1, 0])), Cyc::from_int(3));
        assert!(p.is_rational());
    }

    #[test]
    fn klein_quartics_basic() {
        assert_eq!(klein_quartic(13, 0, 1, 2, 3), MultiPoly::lit("z1^3 z5 - z2^3 z4 + z3^3 z1"));
        assert!(klein_quartic(13, 1, 1, 2, 3).is_zero());
        assert_eq!(klein_system(13).len(), 21);
    }
}
