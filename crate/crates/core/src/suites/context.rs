//! Shared, read-only inputs of the series checks.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cyclo::CyclotomicNumber as Cyc;
use crate::invariants::{family_a, family_g, w_delta};
use crate::qseries::{self, poly_eval, QSeries, DEFAULT_DEN};

/// Base series built once before the checks fan out, plus lazily computed
/// orbit sums Φ_{m,n}(x) shared between suites.
pub struct Context {
    pub margin: i64,
    series: Option<Base>,
    phi: Mutex<HashMap<(u32, u32), Arc<OnceLock<QSeries>>>>,
}

/// Level-one forms and the theta constants of order 13 on the default grid.
pub struct Base {
    pub a: Vec<QSeries>,
    pub eta: QSeries,
    pub e4: QSeries,
    pub e6: QSeries,
    pub delta: QSeries,
    pub j: QSeries,
    /// w₀(a) and δ₀(a), both with rational coefficients.
    pub w0: QSeries,
    pub d0: QSeries,
    /// w∞(a) = 13A₀(a)² and δ∞(a) = 169G₀(a).
    pub w_inf: QSeries,
    pub d_inf: QSeries,
}

impl Context {
    pub fn new(margin: i64, with_series: bool) -> Self {
        Self { margin, series: with_series.then(|| Base::build(margin)), phi: Mutex::new(HashMap::new()) }
    }

    pub fn base(&self) -> &Base {
        self.series.as_ref().expect("context built without series")
    }

    /// Unnormalised Φ_{m,n}(x₁, …, x₆) with xᵢ = η·aᵢ.
    pub fn phi_x(&self, m: u32, n: u32) -> QSeries {
        let cell = {
            let mut map = self.phi.lock().expect("phi cache");
            map.entry((m, n)).or_default().clone()
        };
        cell.get_or_init(|| self.base().phi_x(m, n)).clone()
    }
}

impl Base {
    pub fn build(margin: i64) -> Self {
        let den = DEFAULT_DEN;
        let a: Vec<QSeries> = (1..=6).map(|i| qseries::theta13(i, margin)).collect();
        let eta = qseries::eta(den, margin);
        let e4 = qseries::eisenstein(4, den, margin);
        let e6 = qseries::eisenstein(6, den, margin);
        let delta = eta.pow(24);
        let j = e4.pow(3).mul(&delta.recip().expect("delta invertible"));
        let fin = w_delta(Some(0));
        let phi0 = poly_eval(&crate::invariants::phi_nu(&family_a(), 0), &a);
        let w0 = phi0.mul(&phi0);
        let d0 = poly_eval(&fin.delta, &a);
        let a0 = poly_eval(&family_a().members[0], &a);
        let w_inf = a0.mul(&a0).scale_int(13);
        let d_inf = poly_eval(&family_g().members[0], &a).scale_int(169);
        for s in [&w0, &d0, &w_inf, &d_inf] {
            assert!(s.is_rational(), "orbit representatives have rational q-expansions");
        }
        Self { a, eta, e4, e6, delta, j, w0, d0, w_inf, d_inf }
    }

    /// Σ_ν w_ν(a)^m δ_ν(a)^n + w∞^m δ∞^n, times η^{4m+6n}.
    ///
    /// w_ν and δ_ν are T^ν-twists of w₀ and δ₀. At a, a monomial z^α lands on
    /// grid exponents ≡ 3·Σαᵢlᵢ² (mod 312), and lᵢ² ≡ 8·(T-weight of zᵢ)
    /// (mod 13), so the monomial is T-invariant exactly when its exponents
    /// are ≡ 0 (mod 39). The thirteen twists sum to 13 times that class.
    pub fn phi_x(&self, m: u32, n: u32) -> QSeries {
        let fin = self.w0.pow(m).mul(&self.d0.pow(n)).project_exponents(39, 0).scale_int(13);
        let inf = self.w_inf.pow(m).mul(&self.d_inf.pow(n));
        fin.add(&inf).mul(&self.eta.pow(4 * m + 6 * n))
    }

    /// Direct Σ over all fourteen ν with cyclotomic coefficients (oracle for
    /// the projection shortcut).
    pub fn phi_a_direct(&self, m: u32, n: u32) -> QSeries {
        let mut total = self.w_inf.pow(m).mul(&self.d_inf.pow(n));
        for nu in 0..13 {
            let wd = w_delta(Some(nu));
            let w = poly_eval(&wd.w, &self.a);
            let d = poly_eval(&wd.delta, &self.a);
            total = total.add(&w.pow(m).mul(&d.pow(n)));
        }
        total
    }

    /// η⁸ as a series.
    pub fn eta8(&self) -> QSeries {
        self.eta.pow(8)
    }

    pub fn one(&self) -> QSeries {
        QSeries::monomial(DEFAULT_DEN, 0, Cyc::one())
    }
}
