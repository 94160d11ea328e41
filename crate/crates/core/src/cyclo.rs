//! Exact arithmetic in the cyclotomic field Q(ζ), ζ = exp(2πi/13).
//!
//! Elements are stored in the power basis 1, ζ, …, ζ¹¹ with the relation
//! ζ¹² = −(1 + ζ + … + ζ¹¹) always applied, so two elements are equal exactly
//! when their coordinates are. Internally the twelve rational coordinates share
//! one positive denominator; this keeps the common all-integer case free of gcd
//! work while still exposing the coordinates as reduced rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::MathError;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

/// Degree of Q(ζ₁₃) over Q.
pub const DEGREE: usize = 12;

/// An element c₀ + c₁ζ + … + c₁₁ζ¹¹ of Q(ζ₁₃).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    // Canonical form: den > 0 and gcd(num₀, …, num₁₁, den) = 1; zero is 0/1.
    num: [BigInt; DEGREE],
    den: BigInt,
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        Self { num: Default::default(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = n;
        Self { num, den: BigInt::one() }
    }

    pub fn from_rational(r: &Rational) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = r.numer().clone();
        Self::normalized(num, r.denom().clone())
    }

    /// The fraction `n/d` embedded as a constant.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(&Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Builds an element from its twelve power-basis coordinates.
    pub fn from_coords(coords: &[Rational; DEGREE]) -> Self {
        let mut den = BigInt::one();
        for c in coords {
            den = den.lcm(c.denom());
        }
        let num = std::array::from_fn(|i| coords[i].numer() * (&den / coords[i].denom()));
        Self::normalized(num, den)
    }

    /// ζ^k for any integer k (reduced mod 13).
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(13) as usize;
        let mut num: [BigInt; DEGREE] = Default::default();
        if k == 12 {
            for c in num.iter_mut() {
                *c = BigInt::from(-1);
            }
        } else {
            num[k] = BigInt::one();
        }
        Self { num, den: BigInt::one() }
    }

    /// Sum of integer multiples of powers of ζ: Σ cₖ ζ^{eₖ}.
    pub fn from_zeta_terms(terms: &[(i64, i64)]) -> Self {
        let mut acc: [BigInt; 13] = Default::default();
        for &(c, e) in terms {
            acc[e.rem_euclid(13) as usize] += c;
        }
        Self::from_reduced13(acc, BigInt::one())
    }

    fn from_reduced13(acc: [BigInt; 13], den: BigInt) -> Self {
        let top = &acc[12];
        let num = std::array::from_fn(|i| &acc[i] - top);
        Self::normalized(num, den)
    }

    fn normalized(mut num: [BigInt; DEGREE], mut den: BigInt) -> Self {
        if num.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                if !c.is_zero() {
                    g = g.gcd(c);
                }
            }
            if !g.is_one() {
                for c in num.iter_mut() {
                    if !c.is_zero() {
                        *c = &*c / &g;
                    }
                }
                den = den / g;
            }
        }
        Self { num, den }
    }

    /// Coordinate i (coefficient of ζ^i), 0 ≤ i < 12.
    pub fn coord(&self, i: usize) -> Rational {
        Rational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn coords(&self) -> [Rational; DEGREE] {
        std::array::from_fn(|i| self.coord(i))
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in Q (all coordinates beyond the constant vanish).
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coord(0))
    }

    /// True when the element is an integer (rational with denominator 1).
    pub fn is_integer(&self) -> bool {
        self.den.is_one() && self.is_rational()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let num = std::array::from_fn(|i| &self.num[i] * r.numer());
        Self::normalized(num, &self.den * r.denom())
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(n)))
    }

    /// Multiplicative inverse, found by solving the 12×12 rational system a·x = 1.
    pub fn inverse(&self) -> Result<Self, MathError> {
        if self.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&r.recip()));
        }
        // Column j holds the coordinates of self·ζ^j.
        let cols: Vec<[Rational; DEGREE]> =
            (0..DEGREE).map(|j| (self * &Self::zeta_pow(j as i64)).coords()).collect();
        let mut m: Vec<Vec<Rational>> = (0..DEGREE)
            .map(|i| {
                let mut row: Vec<Rational> = (0..DEGREE).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        let x = crate::linalg::solve_square(&mut m).ok_or(MathError::DivisionByZero)?;
        let coords: [Rational; DEGREE] = std::array::from_fn(|i| x[i].clone());
        Ok(Self::from_coords(&coords))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The field automorphism ζ ↦ ζ^k.
    pub fn galois(&self, k: i64) -> Result<Self, MathError> {
        if k.rem_euclid(13) == 0 {
            return Err(MathError::NotCoprime(k));
        }
        let mut acc: [BigInt; 13] = Default::default();
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                acc[(i as i64 * k).rem_euclid(13) as usize] += c;
            }
        }
        Ok(Self::from_reduced13(acc, self.den.clone()))
    }

    /// self += a·b, the kernel of every convolution in the crate.
    pub fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if self.den.is_one() && a.den.is_one() && b.den.is_one() {
            // Integer fast paths, no renormalisation needed.
            if a.is_rational() && b.is_rational() {
                self.num[0] += &a.num[0] * &b.num[0];
                return;
            }
            if a.is_rational() || b.is_rational() {
                let (s, v) = if a.is_rational() { (&a.num[0], b) } else { (&b.num[0], a) };
                for i in 0..DEGREE {
                    if !v.num[i].is_zero() {
                        self.num[i] += s * &v.num[i];
                    }
                }
                return;
            }
        }
        *self = &*self + &(a * b);
    }

    fn raw_mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let den = &self.den * &other.den;
        if self.is_rational() || other.is_rational() {
            let (s, v) = if self.is_rational() { (&self.num[0], other) } else { (&other.num[0], self) };
            let num = std::array::from_fn(|i| s * &v.num[i]);
            return Self::normalized(num, den);
        }
        let mut acc: [BigInt; 13] = Default::default();
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i + j) % 13] += a * b;
                }
            }
        }
        Self::from_reduced13(acc, den)
    }

    fn raw_add(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other.clone() } else { other.clone() };
        }
        if self.den == other.den {
            let num = std::array::from_fn(|i| {
                if negate {
                    &self.num[i] - &other.num[i]
                } else {
                    &self.num[i] + &other.num[i]
                }
            });
            return Self::normalized(num, self.den.clone());
        }
        let num = std::array::from_fn(|i| {
            let a = &self.num[i] * &other.den;
            let b = &other.num[i] * &self.den;
            if negate {
                a - b
            } else {
                a + b
            }
        });
        Self::normalized(num, &self.den * &other.den)
    }
}

impl Default for CyclotomicNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CyclotomicNumber {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<&Rational> for CyclotomicNumber {
    fn from(r: &Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: Self) -> CyclotomicNumber {
        self.raw_add(rhs, false)
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: Self) -> CyclotomicNumber {
        self.raw_add(rhs, true)
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: Self) -> CyclotomicNumber {
        self.raw_mul(rhs)
    }
}

impl Add for CyclotomicNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.raw_add(&rhs, false)
    }
}

impl Sub for CyclotomicNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.raw_add(&rhs, true)
    }
}

impl Mul for CyclotomicNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.raw_mul(&rhs)
    }
}

impl AddAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn add_assign(&mut self, rhs: &CyclotomicNumber) {
        if rhs.is_zero() {
            return;
        }
        if self.den.is_one() && rhs.den.is_one() {
            for i in 0..DEGREE {
                if !rhs.num[i].is_zero() {
                    self.num[i] += &rhs.num[i];
                }
            }
            return;
        }
        *self = self.raw_add(rhs, false);
    }
}

impl SubAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn sub_assign(&mut self, rhs: &CyclotomicNumber) {
        if rhs.is_zero() {
            return;
        }
        if self.den.is_one() && rhs.den.is_one() {
            for i in 0..DEGREE {
                if !rhs.num[i].is_zero() {
                    self.num[i] -= &rhs.num[i];
                }
            }
            return;
        }
        *self = self.raw_add(rhs, true);
    }
}

impl MulAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn mul_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = self.raw_mul(rhs);
    }
}

impl Neg for CyclotomicNumber {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.num.iter_mut() {
            if !c.is_zero() {
                *c = -&*c;
            }
        }
        self
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -self.clone()
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in 0..DEGREE {
            let c = self.coord(i);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({self})")
    }
}

/// The quadratic and quartic subfield constants used by the transformation laws.
#[derive(Clone, Debug)]
pub struct FieldConstants {
    pub sqrt13: CyclotomicNumber,
    pub theta1: CyclotomicNumber,
    pub theta2: CyclotomicNumber,
    pub theta3: CyclotomicNumber,
    pub theta4: CyclotomicNumber,
    pub alpha: CyclotomicNumber,
    pub beta: CyclotomicNumber,
    pub gamma: CyclotomicNumber,
    pub r0: CyclotomicNumber,
    pub r_inf: CyclotomicNumber,
    pub r1: CyclotomicNumber,
    pub r2: CyclotomicNumber,
    pub r3: CyclotomicNumber,
    pub r4: CyclotomicNumber,
}

/// Builds the constants and asserts their defining relations.
///
/// Panics if any relation fails: that would be a programming error, not a
/// recoverable condition.
pub fn field_constants() -> FieldConstants {
    let z = |terms: &[(i64, i64)]| CyclotomicNumber::from_zeta_terms(terms);
    let theta1 = z(&[(1, 1), (1, 3), (1, 9)]);
    let theta2 = z(&[(1, 2), (1, 6), (1, 5)]);
    let theta3 = z(&[(1, 4), (1, 12), (1, 10)]);
    let theta4 = z(&[(1, 8), (1, 11), (1, 7)]);
    let sqrt13 = &(&(&theta1 + &theta3) - &theta2) - &theta4;
    let alpha = z(&[(1, 1), (1, 12), (-1, 5), (-1, 8)]);
    let beta = z(&[(1, 3), (1, 10), (-1, 2), (-1, 11)]);
    let gamma = z(&[(1, 9), (1, 4), (-1, 6), (-1, 7)]);

    let d13 = &theta1 - &theta3;
    let d24 = &theta2 - &theta4;
    let r0 = &d13.scale_int(2) - &d24.scale_int(3);
    let r_inf = &(-d24.clone()).scale_int(2) - &d13.scale_int(3);
    let r1 = &d13 + &d24;
    let r3 = -(&d13 - &d24);
    let one = CyclotomicNumber::one();
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let r2 = (&(&theta1.scale_int(4) + &one) - &sqrt13).scale(&half);
    let r4 = (&(&theta2.scale_int(4) + &one) + &sqrt13).scale(&half);

    let c = FieldConstants {
        sqrt13,
        theta1,
        theta2,
        theta3,
        theta4,
        alpha,
        beta,
        gamma,
        r0,
        r_inf,
        r1,
        r2,
        r3,
        r4,
    };
    let s = &c.sqrt13;
    let n = CyclotomicNumber::from_int;
    assert_eq!(s * s, n(13), "sqrt13 squared");
    for t in [&c.theta1, &c.theta2, &c.theta3, &c.theta4] {
        let t2 = t * t;
        let t3 = &t2 * t;
        let t4 = &t3 * t;
        let v = &(&(&(&t4 + &t3) + &t2.scale_int(2)) - &t.scale_int(4)) + &n(3);
        assert!(v.is_zero(), "theta is a root of z^4+z^3+2z^2-4z+3");
    }
    assert_eq!(&(&c.alpha + &c.beta) + &c.gamma, *s, "alpha+beta+gamma");
    assert_eq!(&c.r1 * &c.r1, &n(-13) - &s.scale_int(2), "r1 squared");
    assert_eq!(&c.r3 * &c.r3, &n(-13) + &s.scale_int(2), "r3 squared");
    assert_eq!(&c.r2 * &c.r2, (&n(-13) + &s.scale_int(3)).scale(&half), "r2 squared");
    assert_eq!(&c.r4 * &c.r4, (&n(-13) - &s.scale_int(3)).scale(&half), "r4 squared");
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = CyclotomicNumber;

    #[test]
    fn zeta_powers_wrap_and_sum_to_zero() {
        assert_eq!(C::zeta_pow(0), C::one());
        assert_eq!(C::zeta_pow(13), C::one());
        assert_eq!(C::zeta_pow(-1), C::zeta_pow(12));
        let mut s = C::zero();
        for k in 0..13 {
            s += &C::zeta_pow(k);
        }
        assert!(s.is_zero());
    }

    #[test]
    fn products_of_powers() {
        assert_eq!(&C::zeta_pow(1) * &C::zeta_pow(12), C::one());
        assert_eq!(&C::zeta_pow(7) * &C::zeta_pow(9), C::zeta_pow(3));
        assert_eq!(C::zeta_pow(5).pow(13), C::one());
        assert_eq!(C::zeta_pow(1).inverse().unwrap(), C::zeta_pow(12));
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert!(matches!(C::zero().inverse(), Err(MathError::DivisionByZero)));
    }

    #[test]
    fn rational_coordinates_round_trip() {
        let coords: [Rational; DEGREE] =
            std::array::from_fn(|i| Rational::new(BigInt::from(i as i64 - 5), BigInt::from(2 * i as i64 + 1)));
        let a = C::from_coords(&coords);
        assert_eq!(a.coords(), coords);
        assert_eq!(C::frac(6, 4).coord(0), Rational::new(3.into(), 2.into()));
    }

    #[test]
    fn constants_are_consistent() {
        let c = field_constants();
        assert_eq!(&c.sqrt13 * &c.sqrt13, C::from_int(13));
        // (4θ₁+1−√13)²/4 expanded independently of the r₂ construction.
        let x = &(&c.theta1.scale_int(4) + &C::one()) - &c.sqrt13;
        let lhs = (&x * &x).scale(&Rational::new(1.into(), 4.into()));
        let rhs = (&C::from_int(-13) + &c.sqrt13.scale_int(3)).scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn galois_action_on_sqrt13_is_the_legendre_symbol() {
        let s = field_constants().sqrt13;
        let residues: Vec<i64> = (1..13).map(|x: i64| x * x % 13).collect();
        for k in 1..13 {
            let expect = if residues.contains(&k) { s.clone() } else { -s.clone() };
            assert_eq!(s.galois(k).unwrap(), expect, "k={k}");
        }
        assert!(matches!(s.galois(26), Err(MathError::NotCoprime(26))));
        assert_eq!(C::zeta_pow(9).galois(3).unwrap(), C::zeta_pow(1));
    }

    #[test]
    fn display_is_readable() {
        let a = &C::frac(3, 2) - &C::zeta_pow(2).scale_int(4);
        assert_eq!(a.to_string(), "3/2 - 4*z^2");
    }
}
