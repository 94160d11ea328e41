//! Exact Gaussian elimination over the rationals and over Q(ζ₁₃).

use num_traits::{One, Zero};

use crate::cyclo::{CyclotomicNumber, Rational};

/// The handful of field operations elimination needs.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Field for CyclotomicNumber {
    fn zero() -> Self {
        CyclotomicNumber::zero()
    }
    fn one() -> Self {
        CyclotomicNumber::one()
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.inverse().expect("pivot is nonzero")
    }
}

/// Outcome of solving an (augmented) linear system.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    /// The coefficient columns are dependent.
    Dependent,
    /// Consistent rank but the right-hand side is not reachable.
    Inconsistent,
}

/// Solves A·x = b where each row is `[A_row…, b]` and A has `n` columns.
/// Rows may outnumber columns; the solution must be unique.
pub fn solve<F: Field>(rows: &mut [Vec<F>], n: usize) -> Solution<F> {
    let m = rows.len();
    let mut r = 0;
    let mut pivots = Vec::with_capacity(n);
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            return Solution::Dependent;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        let pivot_row: Vec<F> = rows[r].iter().map(|x| x.mul(&inv)).collect();
        rows[r].clone_from(&pivot_row);
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..=n {
                    if !pivot_row[k].is_zero() {
                        rows[i][k] = rows[i][k].sub(&f.mul(&pivot_row[k]));
                    }
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return Solution::Inconsistent;
    }
    Solution::Unique((0..n).map(|c| rows[pivots[c]][n].clone()).collect())
}

/// Square solve; `None` when singular.
pub fn solve_square<F: Field>(rows: &mut [Vec<F>]) -> Option<Vec<F>> {
    let n = rows.len();
    match solve(rows, n) {
        Solution::Unique(x) => Some(x),
        _ => None,
    }
}

/// Rank of a matrix given as rows.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for i in r + 1..m {
            if !rows[i][c].is_zero() {
                let f = rows[i][c].mul(&inv);
                for k in c..n {
                    let t = f.mul(&rows[r][k]);
                    rows[i][k] = rows[i][k].sub(&t);
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn solves_overdetermined_consistent_system() {
        // x + y = 3, x - y = 1, 2x = 4
        let mut rows = vec![vec![q(1), q(1), q(3)], vec![q(1), q(-1), q(1)], vec![q(2), q(0), q(4)]];
        assert_eq!(solve(&mut rows, 2), Solution::Unique(vec![q(2), q(1)]));
    }

    #[test]
    fn detects_dependence_and_inconsistency() {
        let mut rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        assert_eq!(solve(&mut rows, 2), Solution::Dependent);
        let mut rows = vec![vec![q(1), q(1)], vec![q(1), q(2)]];
        assert_eq!(solve(&mut rows, 1), Solution::Inconsistent);
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
    }
}
