//! Sparse polynomials in z₁..z₆ over Q(ζ₁₃), 6×6 (or n×n) matrices, and
//! exact expression of a polynomial in a given basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cyclo::{CyclotomicNumber as Cyc, Rational};
use crate::error::MathError;
use crate::linalg::{self, Solution};

/// Syntax error in a polynomial literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: &'static str,
}

/// Number of variables.
pub const NVARS: usize = 6;

/// Exponent vector of z₁..z₆; ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [u8; NVARS]);

impl Monomial {
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Monomial(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    /// Σ eᵢ wᵢ, the character of the monomial under a diagonal map.
    pub fn weight(&self, w: &[i64; NVARS]) -> i64 {
        self.0.iter().zip(w).map(|(&e, &x)| e as i64 * x).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "z{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Cyc>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Cyc) -> Self {
        Self::term(c, Monomial::default())
    }

    pub fn one() -> Self {
        Self::constant(Cyc::one())
    }

    /// The variable z_{i+1} (0-based index).
    pub fn var(i: usize) -> Self {
        Self::term(Cyc::one(), Monomial::var(i))
    }

    pub fn term(c: Cyc, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    /// Builds from integer-coefficient terms `(c, [e1..e6])`.
    pub fn from_int_terms(terms: &[(i64, [u8; NVARS])]) -> Self {
        let mut p = Self::zero();
        for &(c, e) in terms {
            p.add_term(Monomial(e), &Cyc::from_int(c));
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Cyc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Cyc {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// `Some(d)` when every term has total degree d (the zero polynomial has none).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_rational(&self) -> bool {
        self.terms.values().all(Cyc::is_rational)
    }

    pub fn scale(&self, c: &Cyc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&Cyc::from_rational(r))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Cyc::from_int(n))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `f` to every coefficient (e.g. a Galois automorphism).
    pub fn map_coeffs(&self, f: impl Fn(&Cyc) -> Cyc) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            p.add_term(*m, &f(c));
        }
        p
    }

    /// ∂/∂z_{i+1}.
    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut d = *m;
                d.0[i] -= 1;
                p.add_term(d, &c.scale_int(e as i64));
            }
        }
        p
    }

    /// Multiplies each term by ζ^{k·weight(m)}: the action of a diagonal
    /// map diag(ζ^{w₁}, …, ζ^{w₆}) raised to the k-th power.
    pub fn twist(&self, w: &[i64; NVARS], k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * &Cyc::zeta_pow(k * m.weight(w)))).collect(),
        }
    }

    /// The part of weight ≡ r (mod 13) under the given diagonal character.
    pub fn weight_part(&self, w: &[i64; NVARS], r: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| (m.weight(w) - r).rem_euclid(13) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Relabels variables: z_i ↦ sign_i · z_{perm_i}.
    pub fn substitute_signed(&self, perm: &[usize; NVARS], sign: &[i64; NVARS]) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            let mut e = [0u8; NVARS];
            let mut s = 1;
            for i in 0..NVARS {
                e[perm[i]] += m.0[i];
                if m.0[i] % 2 == 1 {
                    s *= sign[i];
                }
            }
            p.add_term(Monomial(e), &c.scale_int(s));
        }
        p
    }

    /// Parses text such as `"z1^2 - 2 z3 z4 + 1/2 z5^4"`.
    ///
    /// Factors within a term are separated by whitespace or `*`; a leading
    /// integer or fraction is the coefficient.
    pub fn parse(src: &str) -> Result<Self, ParseError> {
        let b = src.as_bytes();
        let mut i = 0;
        let mut p = Self::zero();
        let skip = |i: &mut usize| {
            while *i < b.len() && (b[*i] == b' ' || b[*i] == b'*') {
                *i += 1;
            }
        };
        let number = |i: &mut usize| -> Option<i64> {
            let start = *i;
            while *i < b.len() && b[*i].is_ascii_digit() {
                *i += 1;
            }
            (*i > start).then(|| src[start..*i].parse().expect("digits"))
        };
        skip(&mut i);
        if i == b.len() {
            return Err(ParseError { pos: 0, msg: "empty input" });
        }
        while i < b.len() {
            let mut sign = 1;
            while i < b.len() && (b[i] == b'+' || b[i] == b'-') {
                if b[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
                skip(&mut i);
            }
            let mut coeff = Rational::from_integer(sign.into());
            if let Some(n) = number(&mut i) {
                let mut c = Rational::from_integer(n.into());
                if i < b.len() && b[i] == b'/' {
                    i += 1;
                    let d = number(&mut i).ok_or(ParseError { pos: i, msg: "expected denominator" })?;
                    if d == 0 {
                        return Err(ParseError { pos: i, msg: "zero denominator" });
                    }
                    c /= Rational::from_integer(d.into());
                }
                coeff *= c;
            }
            skip(&mut i);
            let mut e = [0u8; NVARS];
            let mut seen = false;
            while i < b.len() && b[i] == b'z' {
                i += 1;
                let v = number(&mut i).ok_or(ParseError { pos: i, msg: "expected variable index" })?;
                if !(1..=NVARS as i64).contains(&v) {
                    return Err(ParseError { pos: i, msg: "variable index out of range" });
                }
                let mut pow = 1;
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    pow = number(&mut i).ok_or(ParseError { pos: i, msg: "expected exponent" })?;
                }
                e[v as usize - 1] += pow as u8;
                seen = true;
                skip(&mut i);
            }
            if !seen && i < b.len() && b[i] != b'+' && b[i] != b'-' {
                return Err(ParseError { pos: i, msg: "unexpected character" });
            }
            p.add_term(Monomial(e), &Cyc::from_rational(&coeff));
        }
        Ok(p)
    }

    /// Like [`MultiPoly::parse`] but for trusted literals in this crate.
    pub fn lit(src: &str) -> Self {
        Self::parse(src).unwrap_or_else(|e| panic!("bad polynomial literal {src:?}: {e}"))
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut acc: HashMap<Monomial, Cyc> = HashMap::with_capacity(self.len() * o.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                acc.entry(ma.mul(mb)).or_default().add_mul(ca, cb);
            }
        }
        Self { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(*m, c);
        }
        p
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(*m, &-c);
        }
        p
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.mul_impl(o)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale_int(-1)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: MultiPoly) -> MultiPoly {
        &self + &o
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: MultiPoly) -> MultiPoly {
        &self - &o
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: MultiPoly) -> MultiPoly {
        &self * &o
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_rational() {
                write!(f, "{c}*{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// Square matrix over Q(ζ₁₃).
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    n: usize,
    entries: Vec<Cyc>,
}

impl LinearMap {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![Cyc::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, Cyc::one());
        }
        m
    }

    pub fn diagonal(d: Vec<Cyc>) -> Self {
        let mut m = Self::zero(d.len());
        for (i, x) in d.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyc>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyc {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyc) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Cyc] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, o: &Self) -> Result<Self, MathError> {
        if self.n != o.n {
            return Err(MathError::SizeMismatch { left: self.n, right: o.n });
        }
        let n = self.n;
        let mut r = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    r.entries[i * n + j].add_mul(a, o.get(k, j));
                }
            }
        }
        Ok(r)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same size");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same size");
            }
        }
        acc
    }

    pub fn neg(&self) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, c: &Cyc) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Cyc {
        let mut t = Cyc::zero();
        for i in 0..self.n {
            t += self.get(i, i);
        }
        t
    }

    /// Inverse via exact elimination; `DivisionByZero` when singular.
    pub fn inverse(&self) -> Result<Self, MathError> {
        let n = self.n;
        let mut inv = Self::zero(n);
        for c in 0..n {
            let mut rows: Vec<Vec<Cyc>> = (0..n)
                .map(|i| {
                    let mut r = self.row(i).to_vec();
                    r.push(if i == c { Cyc::one() } else { Cyc::zero() });
                    r
                })
                .collect();
            let x = linalg::solve_square(&mut rows).ok_or(MathError::DivisionByZero)?;
            for (i, v) in x.into_iter().enumerate() {
                inv.set(i, c, v);
            }
        }
        Ok(inv)
    }

    /// Diagonal entries as powers of ζ, if the map is diag(ζ^{w₁}, …).
    pub fn as_zeta_diagonal(&self) -> Option<Vec<i64>> {
        let mut w = Vec::with_capacity(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && !self.get(i, j).is_zero() {
                    return None;
                }
            }
            w.push((0..13).find(|&k| *self.get(i, i) == Cyc::zeta_pow(k))?);
        }
        Some(w)
    }

    /// First differing entry against `o`, for witnesses.
    pub fn first_difference(&self, o: &Self) -> Option<String> {
        if self.n != o.n {
            return Some(format!("size {} vs {}", self.n, o.n));
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) != o.get(i, j) {
                    return Some(format!("entry ({},{}): {} vs {}", i + 1, j + 1, self.get(i, j), o.get(i, j)));
                }
            }
        }
        None
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// p(Mz): substitutes z_i ↦ Σ_j M_ij z_j.
///
/// Satisfies apply(M, apply(N, p)) = apply(N·M, p).
pub fn apply_linear(m: &LinearMap, p: &MultiPoly) -> MultiPoly {
    assert_eq!(m.size(), NVARS, "apply_linear needs a 6x6 map");
    if let Some(w) = m.as_zeta_diagonal() {
        let w: [i64; NVARS] = std::array::from_fn(|i| w[i]);
        return p.twist(&w, 1);
    }
    let forms: Vec<MultiPoly> = (0..NVARS)
        .map(|i| {
            let mut l = MultiPoly::zero();
            for j in 0..NVARS {
                l.add_term(Monomial::var(j), m.get(i, j));
            }
            l
        })
        .collect();
    let mut powers: Vec<Vec<MultiPoly>> = forms.iter().map(|l| vec![MultiPoly::one(), l.clone()]).collect();
    let mut out = MultiPoly::zero();
    for (mono, c) in p.terms() {
        let mut acc = MultiPoly::constant(c.clone());
        for (i, &e) in mono.0.iter().enumerate() {
            let e = e as usize;
            while powers[i].len() <= e {
                let next = &powers[i][powers[i].len() - 1] * &forms[i];
                powers[i].push(next);
            }
            if e > 0 {
                acc = &acc * &powers[i][e];
            }
        }
        for (mm, cc) in acc.terms() {
            out.add_term(*mm, cc);
        }
    }
    out
}

/// Unique coefficients c with p = Σ cᵢ·basisᵢ.
pub fn express_in_basis(p: &MultiPoly, basis: &[MultiPoly]) -> Result<Vec<Cyc>, MathError> {
    let mut monos: Vec<Monomial> = basis.iter().flat_map(|b| b.terms().map(|(m, _)| *m)).collect();
    monos.sort();
    monos.dedup();
    // Anything outside the basis monomials is an immediate residual.
    let outside: MultiPoly = {
        let mut r = MultiPoly::zero();
        for (m, c) in p.terms() {
            if monos.binary_search(m).is_err() {
                r.add_term(*m, c);
            }
        }
        r
    };
    let n = basis.len();
    let mut rows: Vec<Vec<Cyc>> = monos
        .iter()
        .map(|m| {
            let mut r: Vec<Cyc> = basis.iter().map(|b| b.coeff(m)).collect();
            r.push(p.coeff(m));
            r
        })
        .collect();
    match linalg::solve(&mut rows, n) {
        Solution::Dependent => Err(MathError::DependentBasis),
        Solution::Unique(c) if outside.is_zero() => Ok(c),
        Solution::Unique(c) => Err(MathError::NotInSpan { residual: (p - &combine(&c, basis)).to_string() }),
        Solution::Inconsistent => {
            // Least-effort residual: project onto the first pivots is not meaningful,
            // so report the polynomial minus its best match on the basis monomials.
            Err(MathError::NotInSpan { residual: residual_against(p, basis) })
        }
    }
}

/// Σ cᵢ·basisᵢ.
pub fn combine(c: &[Cyc], basis: &[MultiPoly]) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (ci, b) in c.iter().zip(basis) {
        if ci.is_zero() {
            continue;
        }
        for (m, v) in b.terms() {
            out.add_term(*m, &(ci * v));
        }
    }
    out
}

// Solve on a square subsystem of pivot monomials, then report what is left over.
fn residual_against(p: &MultiPoly, basis: &[MultiPoly]) -> String {
    let n = basis.len();
    let mut monos: Vec<Monomial> = basis.iter().flat_map(|b| b.terms().map(|(m, _)| *m)).collect();
    monos.sort();
    monos.dedup();
    let mut chosen: Vec<Monomial> = Vec::new();
    let mut rank = 0;
    for m in &monos {
        let mut trial = chosen.clone();
        trial.push(*m);
        let rows: Vec<Vec<Cyc>> = trial.iter().map(|mm| basis.iter().map(|b| b.coeff(mm)).collect()).collect();
        let r = linalg::rank(rows);
        if r > rank {
            rank = r;
            chosen = trial;
        }
        if rank == n {
            break;
        }
    }
    let mut rows: Vec<Vec<Cyc>> = chosen
        .iter()
        .map(|m| {
            let mut r: Vec<Cyc> = basis.iter().map(|b| b.coeff(m)).collect();
            r.push(p.coeff(m));
            r
        })
        .collect();
    match linalg::solve(&mut rows, n) {
        Solution::Unique(c) => (p - &combine(&c, basis)).to_string(),
        _ => p.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize) -> MultiPoly {
        MultiPoly::var(i - 1)
    }

    #[test]
    fn parses_literals() {
        let p = MultiPoly::lit("z1^2 - 2 z3 z4 + 1/2*z5^4 - 3");
        assert_eq!(p.coeff(&Monomial([2, 0, 0, 0, 0, 0])), Cyc::one());
        assert_eq!(p.coeff(&Monomial([0, 0, 1, 1, 0, 0])), Cyc::from_int(-2));
        assert_eq!(p.coeff(&Monomial([0, 0, 0, 0, 4, 0])), Cyc::frac(1, 2));
        assert_eq!(p.coeff(&Monomial::default()), Cyc::from_int(-3));
        assert_eq!(MultiPoly::lit("-z1 * z2"), -&(&z(1) * &z(2)));
        assert!(MultiPoly::parse("z7").is_err());
        assert!(MultiPoly::parse("z1 # z2").is_err());
        assert!(MultiPoly::parse("").is_err());
    }

    #[test]
    fn binomial_square() {
        let p = (&z(1) + &z(2)).pow(2);
        let expect = MultiPoly::from_int_terms(&[(1, [2, 0, 0, 0, 0, 0]), (2, [1, 1, 0, 0, 0, 0]), (1, [0, 2, 0, 0, 0, 0])]);
        assert_eq!(p, expect);
        assert!((&p * &MultiPoly::zero()).is_zero());
        assert_eq!(p.homogeneous_degree(), Some(2));
    }

    #[test]
    fn a0_squared_has_six_squares_and_fifteen_cross_terms() {
        let a0 = &(&(&z(1) * &z(4)) + &(&z(2) * &z(5))) + &(&z(3) * &z(6));
        let sq = a0.pow(2);
        assert_eq!(sq.len(), 6);
        assert_eq!(sq.coeff(&Monomial([2, 0, 0, 2, 0, 0])), Cyc::one());
        assert_eq!(sq.coeff(&Monomial([1, 1, 0, 1, 1, 0])), Cyc::from_int(2));
    }

    #[test]
    fn linear_map_composition() {
        let mut m = LinearMap::identity(6);
        m.set(0, 1, Cyc::from_int(2));
        let mut n = LinearMap::identity(6);
        n.set(1, 2, Cyc::zeta_pow(3));
        let p = &(&z(1) * &z(2)) + &z(3).pow(2);
        let lhs = apply_linear(&m, &apply_linear(&n, &p));
        let rhs = apply_linear(&n.mul(&m).unwrap(), &p);
        assert_eq!(lhs, rhs);
        assert_eq!(apply_linear(&LinearMap::identity(6), &p), p);
        assert!(matches!(m.mul(&LinearMap::identity(3)), Err(MathError::SizeMismatch { .. })));
    }

    #[test]
    fn basis_expression_and_errors() {
        let basis = vec![&z(1) * &z(2), z(3).pow(2)];
        let p = &(&z(1) * &z(2)).scale_int(3) - &z(3).pow(2);
        assert_eq!(express_in_basis(&p, &basis).unwrap(), vec![Cyc::from_int(3), Cyc::from_int(-1)]);
        assert_eq!(express_in_basis(&basis[0], &basis).unwrap(), vec![Cyc::one(), Cyc::zero()]);
        let bad = &p + &z(4).pow(2);
        assert!(matches!(express_in_basis(&bad, &basis), Err(MathError::NotInSpan { .. })));
        let dep = vec![basis[0].clone(), basis[0].scale_int(2)];
        assert_eq!(express_in_basis(&p, &dep), Err(MathError::DependentBasis));
    }

    #[test]
    fn inconsistent_residual_is_reported() {
        let basis = vec![&z(1) + &z(2)];
        let p = &z(1) - &z(2);
        match express_in_basis(&p, &basis) {
            Err(MathError::NotInSpan { residual }) => assert_eq!(residual, "2*z1"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn matrix_inverse_and_trace() {
        let mut m = LinearMap::identity(3);
        m.set(0, 2, Cyc::zeta_pow(1));
        m.set(2, 0, Cyc::from_int(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), LinearMap::identity(3));
        assert_eq!(LinearMap::identity(4).trace(), Cyc::from_int(4));
    }
}
