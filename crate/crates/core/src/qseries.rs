//! Truncated q-expansions with fractional exponents.
//!
//! A series stores exponents as integers in units of q^{1/den}. Every series
//! also carries the truncation point (coefficients are exact strictly below
//! it) and a *potential valuation*: the least exponent the series could have
//! had before any cancellation. `trunc − pval` is the reliable depth that
//! checks use to decide between pass and inconclusive; it never shrinks
//! under the ring operations when the inputs are built with a common margin.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::cyclo::{CyclotomicNumber as Cyc, Rational};
use crate::error::MathError;
use crate::mpoly::{MultiPoly, NVARS};

/// Default exponent grid: lcm(104, 24).
pub const DEFAULT_DEN: i64 = 312;
/// Grid for the level 3/4/5 objects: lcm(40, 24, 8, 3).
pub const SMALL_LEVEL_DEN: i64 = 120;

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    den: i64,
    /// Sorted by exponent; nonzero; all below `trunc`.
    terms: Vec<(i64, Cyc)>,
    /// `None` for an exact (finite) series.
    trunc: Option<i64>,
    pval: i64,
}

impl QSeries {
    /// The exact zero series.
    pub fn zero(den: i64) -> Self {
        Self { den, terms: Vec::new(), trunc: None, pval: i64::MAX / 4 }
    }

    /// A series known to vanish below `trunc`.
    pub fn zero_to(den: i64, trunc: i64) -> Self {
        Self { den, terms: Vec::new(), trunc: Some(trunc), pval: trunc }
    }

    /// c·q^{e/den}, exact.
    pub fn monomial(den: i64, e: i64, c: Cyc) -> Self {
        if c.is_zero() {
            return Self::zero(den);
        }
        Self { den, terms: vec![(e, c)], trunc: None, pval: e }
    }

    pub fn one(den: i64) -> Self {
        Self::monomial(den, 0, Cyc::one())
    }

    /// Builds from (exponent, coefficient) pairs; terms at or beyond `trunc`
    /// are dropped and duplicates summed.
    pub fn from_terms(den: i64, mut raw: Vec<(i64, Cyc)>, trunc: Option<i64>) -> Self {
        raw.sort_by_key(|t| t.0);
        let mut terms: Vec<(i64, Cyc)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            if trunc.is_some_and(|t| e >= t) {
                continue;
            }
            match terms.last_mut() {
                Some((le, lc)) if *le == e => *lc += &c,
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|t| !t.1.is_zero());
        let pval = terms.first().map_or(trunc.unwrap_or(i64::MAX / 4), |t| t.0);
        Self { den, terms, trunc, pval }
    }

    /// Integer-coefficient series Σ cₙ q^{(offset + n·step)/den}, n < coeffs.len().
    pub fn from_int_coeffs(den: i64, offset: i64, step: i64, coeffs: &[i64], trunc: Option<i64>) -> Self {
        let raw = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(n, &c)| (offset + n as i64 * step, Cyc::from_int(c)))
            .collect();
        Self::from_terms(den, raw, trunc)
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn terms(&self) -> &[(i64, Cyc)] {
        &self.terms
    }

    pub fn trunc(&self) -> Option<i64> {
        self.trunc
    }

    pub fn potential_valuation(&self) -> i64 {
        self.pval
    }

    /// Least exponent with a nonzero coefficient, in grid units.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    /// Valuation as a rational power of q.
    pub fn valuation_q(&self) -> Option<Rational> {
        self.valuation().map(|v| Rational::new(v.into(), self.den.into()))
    }

    pub fn trunc_q(&self) -> Option<Rational> {
        self.trunc.map(|t| Rational::new(t.into(), self.den.into()))
    }

    /// Whole powers of q known exactly beyond the potential valuation.
    pub fn reliable_depth(&self) -> Option<i64> {
        self.trunc.map(|t| (t - self.pval).div_euclid(self.den))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_rational())
    }

    pub fn leading(&self) -> Option<&(i64, Cyc)> {
        self.terms.first()
    }

    /// Coefficient at q^{e/den} (zero when absent; the caller checks `trunc`).
    pub fn coeff(&self, e: i64) -> Cyc {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Cyc::zero(),
        }
    }

    /// Coefficient at a rational power of q.
    pub fn coeff_q(&self, x: &Rational) -> Cyc {
        let scaled = x * Rational::from_integer(self.den.into());
        if !scaled.is_integer() {
            return Cyc::zero();
        }
        let e: i64 = scaled.to_integer().try_into().expect("exponent fits");
        self.coeff(e)
    }

    /// Re-expresses on the finer grid `den` (a multiple of the current one).
    pub fn regrid(&self, den: i64) -> Result<Self, MathError> {
        if den % self.den != 0 {
            return Err(MathError::GridIncompatible { den, what: format!("grid 1/{}", self.den) });
        }
        let f = den / self.den;
        Ok(Self {
            den,
            terms: self.terms.iter().map(|(e, c)| (e * f, c.clone())).collect(),
            trunc: self.trunc.map(|t| t * f),
            pval: self.pval.saturating_mul(f).min(i64::MAX / 4),
        })
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.den == b.den {
            return (a.clone(), b.clone());
        }
        let l = a.den.lcm(&b.den);
        (a.regrid(l).expect("lcm"), b.regrid(l).expect("lcm"))
    }

    /// Keeps only terms strictly below `t` (and lowers the truncation to `t`).
    pub fn truncate(&self, t: i64) -> Self {
        let trunc = Some(self.trunc.map_or(t, |s| s.min(t)));
        Self {
            den: self.den,
            terms: self.terms.iter().filter(|x| x.0 < t).cloned().collect(),
            trunc,
            pval: self.pval,
        }
    }

    fn eff_val(&self) -> Option<i64> {
        self.valuation().or(self.trunc)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_signed(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_signed(o, true)
    }

    fn add_signed(&self, o: &Self, neg: bool) -> Self {
        if self.den != o.den {
            let (a, b) = Self::unify(self, o);
            return a.add_signed(&b, neg);
        }
        let trunc = match (self.trunc, o.trunc) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out: Vec<(i64, Cyc)> = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            let (e, c) = if take_a {
                i += 1;
                (a[i - 1].0, a[i - 1].1.clone())
            } else if take_b {
                j += 1;
                (b[j - 1].0, if neg { -&b[j - 1].1 } else { b[j - 1].1.clone() })
            } else {
                i += 1;
                j += 1;
                let c = if neg { &a[i - 1].1 - &b[j - 1].1 } else { &a[i - 1].1 + &b[j - 1].1 };
                (a[i - 1].0, c)
            };
            if trunc.is_some_and(|t| e >= t) || c.is_zero() {
                continue;
            }
            out.push((e, c));
        }
        Self { den: self.den, terms: out, trunc, pval: self.pval.min(o.pval) }
    }

    pub fn neg(&self) -> Self {
        Self {
            den: self.den,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            trunc: self.trunc,
            pval: self.pval,
        }
    }

    pub fn scale(&self, c: &Cyc) -> Self {
        if c.is_zero() {
            return match self.trunc {
                Some(t) => Self { den: self.den, terms: vec![], trunc: Some(t), pval: self.pval },
                None => Self::zero(self.den),
            };
        }
        Self {
            den: self.den,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
            trunc: self.trunc,
            pval: self.pval,
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Cyc::from_int(n))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&Cyc::from_rational(r))
    }

    /// Multiplies by q^{e/den}.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            den: self.den,
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
            trunc: self.trunc.map(|t| t + e),
            pval: self.pval + e,
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(i64, &Cyc) -> Cyc) -> Self {
        let raw = self.terms.iter().map(|(e, c)| (*e, f(*e, c))).collect();
        let mut s = Self::from_terms(self.den, raw, self.trunc);
        s.pval = self.pval;
        s
    }

    /// Truncated product, honouring trunc(ab) = min(trunc(a)+val(b), trunc(b)+val(a)).
    pub fn mul(&self, o: &Self) -> Self {
        if self.den != o.den {
            let (a, b) = Self::unify(self, o);
            return a.mul(&b);
        }
        let trunc = match (self.trunc, o.trunc) {
            (None, None) => None,
            (Some(ta), None) => o.eff_val().map(|v| ta + v),
            (None, Some(tb)) => self.eff_val().map(|v| tb + v),
            (Some(ta), Some(tb)) => {
                let x = o.eff_val().map(|v| ta + v).unwrap_or(ta + tb);
                let y = self.eff_val().map(|v| tb + v).unwrap_or(ta + tb);
                Some(x.min(y))
            }
        };
        let pval = self.pval.saturating_add(o.pval).min(i64::MAX / 4);
        if self.is_zero() || o.is_zero() {
            return match trunc {
                Some(t) => Self { den: self.den, terms: vec![], trunc: Some(t), pval: pval.min(t) },
                None => Self::zero(self.den),
            };
        }
        let a0 = self.terms[0].0;
        let b0 = o.terms[0].0;
        let mut step = 0i64;
        for (e, _) in &self.terms {
            step = step.gcd(&(e - a0));
        }
        for (e, _) in &o.terms {
            step = step.gcd(&(e - b0));
        }
        if step == 0 {
            step = 1;
        }
        let base = a0 + b0;
        let top = match trunc {
            Some(t) => t,
            None => self.terms.last().unwrap().0 + o.terms.last().unwrap().0 + 1,
        };
        if top <= base {
            return Self { den: self.den, terms: vec![], trunc, pval };
        }
        let len = ((top - base - 1) / step + 1) as usize;
        let mut acc: Vec<Cyc> = vec![Cyc::zero(); len];
        for (ea, ca) in &self.terms {
            let ia = ((ea - a0) / step) as usize;
            if ia >= len {
                break;
            }
            for (eb, cb) in &o.terms {
                let k = ia + ((eb - b0) / step) as usize;
                if k >= len {
                    break;
                }
                acc[k].add_mul(ca, cb);
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (base + k as i64 * step, c))
            .collect();
        Self { den: self.den, terms, trunc, pval }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.den);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse to the same relative precision.
    pub fn recip(&self) -> Result<Self, MathError> {
        let Some((v, c0)) = self.terms.first().cloned() else {
            return Err(MathError::NonInvertibleSeries);
        };
        let c0inv = c0.inverse().map_err(|_| MathError::NonInvertibleSeries)?;
        let Some(ta) = self.trunc else {
            // Exact input: only monomials invert exactly.
            if self.terms.len() == 1 {
                return Ok(Self::monomial(self.den, -v, c0inv));
            }
            return Err(MathError::NonInvertibleSeries);
        };
        let rel = ta - v;
        let mut step = 0i64;
        for (e, _) in &self.terms {
            step = step.gcd(&(e - v));
        }
        if step == 0 {
            step = rel.max(1);
        }
        let n = ((rel - 1) / step + 1).max(0) as usize;
        let mut a: Vec<Cyc> = vec![Cyc::zero(); n];
        for (e, c) in &self.terms {
            let k = ((e - v) / step) as usize;
            if k < n {
                a[k] = c.clone();
            }
        }
        let mut b: Vec<Cyc> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                b.push(c0inv.clone());
                continue;
            }
            let mut s = Cyc::zero();
            for i in 1..=k {
                if !a[i].is_zero() {
                    s.add_mul(&a[i], &b[k - i]);
                }
            }
            b.push(-(&s * &c0inv));
        }
        let terms = b
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (-v + k as i64 * step, c))
            .collect();
        Ok(Self { den: self.den, terms, trunc: Some(-v + rel), pval: -v })
    }

    /// q ↦ q^m.
    pub fn scale_exponent(&self, m: i64) -> Self {
        assert!(m > 0, "exponent scale must be positive");
        Self {
            den: self.den,
            terms: self.terms.iter().map(|(e, c)| (e * m, c.clone())).collect(),
            trunc: self.trunc.map(|t| t * m),
            pval: self.pval.saturating_mul(m).min(i64::MAX / 4),
        }
    }

    /// Keeps the terms whose grid exponent is ≡ r (mod modulus).
    pub fn project_exponents(&self, modulus: i64, r: i64) -> Self {
        let raw = self.terms.iter().filter(|(e, _)| (e - r).rem_euclid(modulus) == 0).cloned().collect();
        let mut s = Self::from_terms(self.den, raw, self.trunc);
        s.pval = self.pval;
        s
    }

    /// Human-readable first few terms.
    pub fn head(&self, n: usize) -> String {
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().take(n).enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            s.push_str(&format!("({c})*q^({})", Rational::new((*e).into(), self.den.into())));
        }
        if s.is_empty() {
            s.push('0');
        }
        if let Some(t) = self.trunc_q() {
            s.push_str(&format!(" + O(q^({t}))"));
        }
        s
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{}]", self.head(6))
    }
}

// ---------------------------------------------------------------------------
// Constructors. `margin` is the number of whole powers of q kept beyond each
// series' leading exponent.

/// Coefficients of Π_{n≥1}(1 − qⁿ) below q^len.
pub fn euler_product(len: usize) -> Vec<i64> {
    let mut c = vec![0i64; len];
    if len == 0 {
        return c;
    }
    c[0] = 1;
    for n in 1..len {
        for k in (n..len).rev() {
            c[k] -= c[k - n];
        }
    }
    c
}

/// Same coefficients from the pentagonal number theorem (independent oracle).
pub fn pentagonal(len: usize) -> Vec<i64> {
    let mut c = vec![0i64; len];
    for k in 0i64.. {
        let mut any = false;
        for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
            if (g as usize) < len {
                c[g as usize] = if k % 2 == 0 { 1 } else { -1 };
                any = true;
            }
        }
        if !any {
            break;
        }
    }
    c
}

/// Dedekind η(z) = q^{1/24} Π(1 − qⁿ) on grid `den` (a multiple of 24).
pub fn eta(den: i64, margin: i64) -> QSeries {
    assert_eq!(den % 24, 0, "eta needs a grid divisible by 24");
    let off = den / 24;
    QSeries::from_int_coeffs(den, off, den, &euler_product(margin as usize), Some(off + margin * den))
}

/// σ_k(n) by divisor enumeration.
pub fn sigma(k: u32, n: u64) -> BigInt {
    let mut s = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            s += BigInt::from(d).pow(k);
            if d * d != n {
                s += BigInt::from(n / d).pow(k);
            }
        }
        d += 1;
    }
    s
}

/// E₄ = 1 + 240Σσ₃(n)qⁿ or E₆ = 1 − 504Σσ₅(n)qⁿ.
pub fn eisenstein(k: u32, den: i64, margin: i64) -> QSeries {
    let (c, p) = match k {
        4 => (240, 3),
        6 => (-504, 5),
        _ => panic!("only weights 4 and 6 are provided"),
    };
    let mut raw = vec![(0, Cyc::one())];
    for n in 1..margin {
        raw.push((n * den, Cyc::from_bigint(sigma(p, n as u64) * c)));
    }
    QSeries::from_terms(den, raw, Some(margin * den))
}

/// Δ = η²⁴.
pub fn delta(den: i64, margin: i64) -> QSeries {
    eta(den, margin).pow(24)
}

/// j = E₄³/Δ.
pub fn j_invariant(den: i64, margin: i64) -> QSeries {
    let e4 = eisenstein(4, den, margin);
    e4.pow(3).mul(&delta(den, margin).recip().expect("delta invertible"))
}

/// (l, sign) for a₁..a₆.
pub const THETA13: [(i64, i64); 6] = [(11, 1), (7, 1), (5, 1), (3, -1), (9, 1), (1, 1)];

/// aᵢ(z) = ±q^{l²/104} Σₙ (−1)ⁿ q^{(13n² + ln)/2} on the default grid.
pub fn theta13(i: usize, margin: i64) -> QSeries {
    theta13_signed(i, margin, THETA13[i - 1].1)
}

/// Like [`theta13`] with an explicit global sign (negative controls flip a₄).
pub fn theta13_signed(i: usize, margin: i64, sign: i64) -> QSeries {
    let den = DEFAULT_DEN;
    let l = THETA13[i - 1].0;
    let off = l * l * den / 104;
    let trunc = off + margin * den;
    let mut raw = Vec::new();
    let mut n: i64 = 0;
    loop {
        let mut any = false;
        for m in [n, -n - 1] {
            let e2 = 13 * m * m + l * m; // twice the integral exponent
            let e = off + e2 / 2 * den;
            if e < trunc {
                any = true;
                let s = if m.rem_euclid(2) == 0 { sign } else { -sign };
                raw.push((e, Cyc::from_int(s)));
            }
        }
        if !any {
            break;
        }
        n += 1;
    }
    QSeries::from_terms(den, raw, Some(trunc))
}

/// q^{l²/8k}(q^{(k−l)/2}; q^k)(q^{(k+l)/2}; q^k)(q^k; q^k).
pub fn theta_char(l: i64, k: i64, den: i64, margin: i64) -> Result<QSeries, MathError> {
    if !(0 < l && l < k) || l % 2 == 0 || k % 2 == 0 {
        return Err(MathError::GridIncompatible { den, what: format!("characteristic ({l},{k})") });
    }
    if (den * l * l) % (8 * k) != 0 {
        return Err(MathError::GridIncompatible { den, what: format!("q^({}/{})", l * l, 8 * k) });
    }
    let off = den * l * l / (8 * k);
    let len = margin as usize;
    let mut c = vec![0i64; len];
    c[0] = 1;
    let mut factor = |start: i64| {
        let mut e = start;
        while (e as usize) < len {
            for x in (e as usize..len).rev() {
                c[x] -= c[x - e as usize];
            }
            e += k;
        }
    };
    factor((k - l) / 2);
    factor((k + l) / 2);
    factor(k);
    Ok(QSeries::from_int_coeffs(den, off, den, &c, Some(off + margin * den)))
}

/// Hauptmodul eta quotient (η(z)/η(Nz))^r for N = 2, 3, 5, 7, 13.
pub fn hauptmodul(n: u32, den: i64, margin: i64) -> Result<QSeries, MathError> {
    let r = match n {
        2 => 24,
        3 => 12,
        5 => 6,
        7 => 4,
        13 => 2,
        _ => return Err(MathError::UnsupportedLevel(n)),
    };
    let e = eta(den, margin);
    let en = e.scale_exponent(n as i64);
    Ok(e.mul(&en.recip()?).pow(r))
}

/// Evaluates a polynomial at series values for z₁, z₂, …, multiplying cached
/// powers per monomial. Variables beyond `vals.len()` must not occur.
pub fn poly_eval(p: &MultiPoly, vals: &[QSeries]) -> QSeries {
    assert!(!vals.is_empty() && vals.len() <= NVARS);
    let den = vals[0].den();
    let mut powers: Vec<Vec<QSeries>> = vals.iter().map(|v| vec![QSeries::one(v.den()), v.clone()]).collect();
    let mut acc: Option<QSeries> = None;
    for (m, c) in p.terms() {
        let mut t = QSeries::monomial(den, 0, c.clone());
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            assert!(i < vals.len(), "variable z{} has no value", i + 1);
            let e = e as usize;
            while powers[i].len() <= e {
                let next = powers[i].last().unwrap().mul(&vals[i]);
                powers[i].push(next);
            }
            t = t.mul(&powers[i][e]);
        }
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t),
        });
    }
    acc.unwrap_or_else(|| QSeries::zero(den))
}

/// Level-4 theta pair: θ₀ = Σ q^{n²}, θ₁ = Σ_{x odd} q^{x²/4}.
pub fn theta_level4(den: i64, margin: i64) -> Result<(QSeries, QSeries), MathError> {
    if den % 4 != 0 {
        return Err(MathError::GridIncompatible { den, what: "q^(1/4)".into() });
    }
    let mut t0 = Vec::new();
    let mut t1 = Vec::new();
    let mut x: i64 = 0;
    while x * x < 4 * margin + 8 {
        let e = x * x * den / 4;
        let c = Cyc::from_int(if x == 0 { 1 } else { 2 });
        if x % 2 == 0 { t0.push((e, c)) } else { t1.push((e, c)) }
        x += 1;
    }
    Ok((
        QSeries::from_terms(den, t0, Some(margin * den)),
        QSeries::from_terms(den, t1, Some(den / 4 + margin * den)),
    ))
}

/// Level-3 theta pair: θ₀ = Σ q^{x²−xy+y²}, θ₁ = q^{1/3} Σ q^{x²−xy+y²+x−y}.
pub fn theta_level3(den: i64, margin: i64) -> Result<(QSeries, QSeries), MathError> {
    if den % 3 != 0 {
        return Err(MathError::GridIncompatible { den, what: "q^(1/3)".into() });
    }
    // x²−xy+y² ≥ (x²+y²)/2, and the linear shift costs at most |x|+|y|.
    let b = ((4 * margin + 16) as f64).sqrt() as i64 + 3;
    let mut t0 = Vec::new();
    let mut t1 = Vec::new();
    for x in -b..=b {
        for y in -b..=b {
            let n = x * x - x * y + y * y;
            if n < margin {
                t0.push((n * den, Cyc::one()));
            }
            let m = n + x - y;
            if m < margin {
                t1.push((den / 3 + m * den, Cyc::one()));
            }
        }
    }
    Ok((
        QSeries::from_terms(den, t0, Some(margin * den)),
        QSeries::from_terms(den, t1, Some(den / 3 + margin * den)),
    ))
}

/// Interpretation of a rational-integer coefficient, for witnesses.
pub fn describe_coeff(c: &Cyc) -> String {
    match c.as_rational() {
        Some(r) if r.is_negative() => format!("({r})"),
        Some(r) => r.to_string(),
        None => format!("({c})"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<(i64, i64)> {
        s.terms()
            .iter()
            .map(|(e, c)| (*e, c.as_rational().unwrap().to_integer().try_into().unwrap()))
            .collect()
    }

    #[test]
    fn geometric_series() {
        let one_minus_q = QSeries::from_int_coeffs(1, 0, 1, &[1, -1], Some(20));
        let inv = one_minus_q.recip().unwrap();
        assert_eq!(inv.terms().len(), 20);
        let p = inv.mul(&one_minus_q);
        assert_eq!(ints(&p), vec![(0, 1)]);
        assert_eq!(p.trunc(), Some(20));
    }

    #[test]
    fn eta_matches_pentagonal_numbers() {
        assert_eq!(euler_product(60), pentagonal(60));
        let e = eta(24, 16);
        assert_eq!(ints(&e), vec![(1, 1), (25, -1), (49, -1), (121, 1), (169, 1), (289, -1), (361, -1)]);
        let d = e.pow(24);
        assert_eq!(d.valuation(), Some(24));
        assert_eq!(d.coeff(48), Cyc::from_int(-24));
        assert_eq!(d.coeff(72), Cyc::from_int(252));
    }

    #[test]
    fn eta_times_its_inverse() {
        let e = eta(312, 12);
        let p = e.mul(&e.recip().unwrap());
        assert_eq!(ints(&p), vec![(0, 1)]);
        assert_eq!(e.scale_exponent(13).valuation_q(), Some(Rational::new(13.into(), 24.into())));
    }

    #[test]
    fn j_leading_terms() {
        let j = j_invariant(24, 6);
        assert_eq!(ints(&j)[..3], [(-24, 1), (0, 744), (24, 196884)]);
    }

    #[test]
    fn truncation_rule() {
        let a = QSeries::from_int_coeffs(1, 2, 1, &[1, 1], Some(10));
        let b = QSeries::from_int_coeffs(1, 5, 1, &[1], Some(7));
        assert_eq!(a.mul(&b).trunc(), Some(9)); // min(10+5, 7+2)
        assert_eq!(a.add(&b).trunc(), Some(7));
    }

    #[test]
    fn theta13_leading_terms() {
        let a6 = theta13(6, 30);
        let v = a6.valuation().unwrap();
        assert_eq!(v, 3);
        let shifted: Vec<(i64, i64)> = ints(&a6).into_iter().map(|(e, c)| ((e - v) / 312, c)).collect();
        assert_eq!(shifted[..4], [(0, 1), (6, -1), (7, -1), (25, 1)]);
        let a4 = theta13(4, 10);
        assert_eq!(ints(&a4)[..3].iter().map(|t| t.1).collect::<Vec<_>>(), vec![-1, 1, 1]);
    }

    #[test]
    fn theta_char_rejects_bad_grid() {
        assert!(theta_char(3, 5, 312, 5).is_err());
        assert!(theta_char(3, 5, 120, 5).is_ok());
        assert!(theta_char(2, 5, 120, 5).is_err());
    }

    #[test]
    fn hauptmodul_valuation() {
        let t = hauptmodul(13, 312, 8).unwrap();
        assert_eq!(t.valuation_q(), Some(Rational::from_integer((-1).into())));
        assert!(matches!(hauptmodul(11, 312, 8), Err(MathError::UnsupportedLevel(11))));
    }
}
