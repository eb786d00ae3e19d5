//! Minimal nonnegative solutions of homogeneous linear Diophantine systems.
//!
//! [`hilbert_basis`] is the Contejean-Devie completion: grow vectors one unit
//! at a time, only in directions that move `M x` back towards zero, and drop
//! anything that dominates a solution already found.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::lp;
use crate::Error;

/// Default cap on the number of frontier states.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// Hilbert basis of `{x ∈ ℤ≥0^k : M x = 0}`, sorted by total degree then
/// descending lexicographic order. `m` is row-wise, each row of length `k`.
pub fn hilbert_basis(m: &[Vec<i64>], k: usize) -> Result<Vec<Vec<i64>>, Error> {
    hilbert_basis_capped(m, k, DEFAULT_STATE_CAP)
}

pub fn hilbert_basis_capped(m: &[Vec<i64>], k: usize, cap: usize) -> Result<Vec<Vec<i64>>, Error> {
    // Coordinates vanishing on every solution only blow up the frontier.
    let live: Vec<usize> = (0..k).filter(|&j| can_be_positive(m, k, j)).collect();
    if live.len() < k {
        let sub: Vec<Vec<i64>> = m.iter().map(|r| live.iter().map(|&j| r[j]).collect()).collect();
        let basis = completion(&sub, live.len(), cap)?;
        return Ok(basis
            .into_iter()
            .map(|x| {
                let mut full = vec![0; k];
                for (v, &j) in x.into_iter().zip(&live) {
                    full[j] = v;
                }
                full
            })
            .collect());
    }
    completion(m, k, cap)
}

fn can_be_positive(m: &[Vec<i64>], k: usize, j: usize) -> bool {
    let rows: Vec<Vec<i64>> = m.iter().flat_map(|r| [r.clone(), r.iter().map(|c| -c).collect()]).collect();
    let mut lower = vec![0; k];
    lower[j] = 1;
    lp::feasible_int(&rows, &lower, &vec![0; rows.len()]).is_some()
}

fn completion(m: &[Vec<i64>], k: usize, cap: usize) -> Result<Vec<Vec<i64>>, Error> {
    let image = |x: &[i64]| -> Vec<i64> { m.iter().map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect() };
    let cols: Vec<Vec<i64>> = (0..k).map(|j| m.iter().map(|r| r[j]).collect()).collect();
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };

    let mut basis: Vec<Vec<i64>> = Vec::new();
    let mut frontier: BTreeSet<Vec<i64>> = (0..k)
        .map(|j| {
            let mut e = vec![0; k];
            e[j] = 1;
            e
        })
        .collect();
    let mut states = 0usize;
    while !frontier.is_empty() {
        states += frontier.len();
        if states > cap {
            return Err(Error::BudgetExceeded("hilbert basis state cap"));
        }
        let mut pending = Vec::new();
        let mut solved = Vec::new();
        for x in frontier {
            let mx = image(&x);
            if mx.iter().all(|&v| v == 0) {
                solved.push(x);
            } else {
                pending.push((x, mx));
            }
        }
        solved.sort_by(|a, b| b.cmp(a));
        basis.extend(solved);
        let mut next = BTreeSet::new();
        for (x, mx) in pending {
            for j in 0..k {
                if dot(&mx, &cols[j]) >= 0 {
                    continue;
                }
                let mut y = x.clone();
                y[j] += 1;
                if !basis.iter().any(|b| dominates(&y, b)) {
                    next.insert(y);
                }
            }
        }
        frontier = next;
    }
    Ok(basis)
}

fn dominates(y: &[i64], b: &[i64]) -> bool {
    y.iter().zip(b).all(|(a, c)| a >= c)
}

/// Brute-force oracle: all minimal nonzero solutions with coordinates `≤ bound`.
pub fn hilbert_basis_brute(m: &[Vec<i64>], k: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut sols = Vec::new();
    let mut x = vec![0i64; k];
    loop {
        let mut j = 0;
        while j < k && x[j] == bound {
            x[j] = 0;
            j += 1;
        }
        if j == k {
            break;
        }
        x[j] += 1;
        if m.iter().all(|r| r.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() == 0) {
            sols.push(x.clone());
        }
    }
    let mut min: Vec<Vec<i64>> =
        sols.iter().filter(|s| !sols.iter().any(|t| t != *s && dominates(s, t))).cloned().collect();
    min.sort_by(|a, b| {
        let (da, db): (i64, i64) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then(b.cmp(a))
    });
    min
}
