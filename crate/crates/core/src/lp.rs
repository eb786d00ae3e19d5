//! Exact feasibility of small systems of linear inequalities over ℚ.
//!
//! Phase one of the simplex method on a dense tableau of `BigRational`s,
//! pivoting by Bland's rule so it always terminates.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Finds `x` with `x ≥ lower` and `M x ≥ rhs` (componentwise), or `None`.
/// `m` is given row-wise: one row per constraint, one column per variable.
pub fn feasible(m: &[Vec<Rational>], lower: &[Rational], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let nvar = lower.len();
    let nrow = m.len();
    // x = lower + y, y ≥ 0:  M y - s = rhs - M lower,  s ≥ 0.
    let mut b: Vec<Rational> = (0..nrow)
        .map(|i| {
            let ml: Rational = (0..nvar).map(|j| &m[i][j] * &lower[j]).fold(Rational::zero(), |a, c| a + c);
            &rhs[i] - ml
        })
        .collect();
    // Columns: y (nvar), s (nrow), artificials (one per row needing one).
    let mut a: Vec<Vec<Rational>> = (0..nrow)
        .map(|i| {
            let mut row: Vec<Rational> = m[i].clone();
            row.extend((0..nrow).map(|k| if k == i { -rat(1) } else { Rational::zero() }));
            row
        })
        .collect();
    let mut basis = vec![usize::MAX; nrow];
    let mut artificial_rows = Vec::new();
    for i in 0..nrow {
        if b[i].is_negative() || b[i].is_zero() {
            // Negate so the surplus column becomes +1 and can start basic.
            for x in a[i].iter_mut() {
                *x = -x.clone();
            }
            b[i] = -b[i].clone();
            basis[i] = nvar + i;
        } else {
            artificial_rows.push(i);
        }
    }
    let nart = artificial_rows.len();
    let ncol = nvar + nrow + nart;
    for row in a.iter_mut() {
        row.extend((0..nart).map(|_| Rational::zero()));
    }
    for (k, &i) in artificial_rows.iter().enumerate() {
        a[i][nvar + nrow + k] = rat(1);
        basis[i] = nvar + nrow + k;
    }

    // Objective: minimise the sum of artificials; reduced costs over columns.
    let is_art = |c: usize| c >= nvar + nrow;
    let mut cost: Vec<Rational> = (0..ncol).map(|c| if is_art(c) { rat(1) } else { Rational::zero() }).collect();
    let mut value = Rational::zero();
    for &i in &artificial_rows {
        for c in 0..ncol {
            cost[c] = &cost[c] - &a[i][c];
        }
        value = &value - &b[i];
    }

    // Bland: smallest column with negative reduced cost.
    while let Some(enter) = (0..ncol).find(|&c| cost[c].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..nrow {
            if a[i][enter].is_positive() {
                let ratio = &b[i] / &a[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (r, _) = leave?;
        let piv = a[r][enter].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &piv;
        }
        b[r] = &b[r] / &piv;
        let pivot_row = a[r].clone();
        for i in 0..nrow {
            if i != r && !a[i][enter].is_zero() {
                let f = a[i][enter].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * p;
                }
                b[i] = &b[i] - &f * &b[r];
            }
        }
        let f = cost[enter].clone();
        for c in 0..ncol {
            cost[c] = &cost[c] - &f * &a[r][c];
        }
        value = &value - &f * &b[r];
        basis[r] = enter;
    }

    if !value.is_zero() {
        return None;
    }
    let mut x: Vec<Rational> = lower.to_vec();
    for i in 0..nrow {
        if basis[i] < nvar {
            x[basis[i]] = &x[basis[i]] + &b[i];
        }
    }
    Some(x)
}

/// Exists `x` with `x_j ≥ 1` on `strict` columns, `x_j ≥ 0` elsewhere, and
/// `M x ≥ 0`? Returns a witness.
pub fn feasible_nonneg(m: &[Vec<Rational>], strict: &[bool]) -> Option<Vec<Rational>> {
    let lower: Vec<Rational> = strict.iter().map(|&s| if s { rat(1) } else { Rational::zero() }).collect();
    let rhs = vec![Rational::zero(); m.len()];
    feasible(m, &lower, &rhs)
}

/// Integer convenience wrapper around [`feasible`].
pub fn feasible_int(m: &[Vec<i64>], lower: &[i64], rhs: &[i64]) -> Option<Vec<Rational>> {
    let m: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&c| rat(c)).collect()).collect();
    let lower: Vec<Rational> = lower.iter().map(|&c| rat(c)).collect();
    let rhs: Vec<Rational> = rhs.iter().map(|&c| rat(c)).collect();
    feasible(&m, &lower, &rhs)
}

/// Scales a nonnegative rational vector to the smallest integer multiple.
pub fn to_integer_vector(x: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let l = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    x.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &[Vec<i64>], lower: &[i64], rhs: &[i64]) -> bool {
        match feasible_int(m, lower, rhs) {
            Some(x) => {
                for (j, l) in lower.iter().enumerate() {
                    assert!(x[j] >= rat(*l));
                }
                for (i, row) in m.iter().enumerate() {
                    let v: Rational = row.iter().zip(&x).map(|(a, b)| rat(*a) * b).fold(rat(0), |s, t| s + t);
                    assert!(v >= rat(rhs[i]));
                }
                true
            }
            None => false,
        }
    }

    #[test]
    fn trivial_cases() {
        assert!(check(&[vec![2]], &[1], &[0]));
        assert!(!check(&[vec![-1]], &[1], &[0]));
        assert!(check(&[vec![2, -1], vec![-2, 2]], &[1, 1], &[0, 0]));
        assert!(!check(&[vec![2], vec![-2]], &[1], &[0, 0]));
    }

    #[test]
    fn needs_pivoting() {
        // x - 3y ≥ 0, y ≥ 1, -x + 4y ≥ 0
        assert!(check(&[vec![1, -3], vec![-1, 4]], &[0, 1], &[0, 0]));
        // x + y ≥ 5, x - y ≥ 1, -x ≥ -2
        assert!(!check(&[vec![1, 1], vec![1, -1], vec![-1, 0]], &[0, 0], &[5, 1, -2]));
        assert!(check(&[vec![1, 1], vec![1, -1], vec![-1, 0]], &[0, 0], &[3, 1, -2]));
    }

    #[test]
    fn integer_scaling() {
        let x = vec![Rational::new(1.into(), 2.into()), Rational::new(2.into(), 3.into())];
        assert_eq!(to_integer_vector(&x), vec![BigInt::from(3), BigInt::from(4)]);
    }
}
