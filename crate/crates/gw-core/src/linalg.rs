//! Dense Gaussian elimination over an exact field.

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Solution<T> {
    Unique(Vec<T>),
    /// Consistent, with a solution space of this dimension.
    Underdetermined(usize),
    Inconsistent,
}

/// Solves `a x = b`. Rows of `a` are equations; every row has `unknowns`
/// entries.
pub fn solve<T: Scalar>(mut a: Vec<Vec<T>>, mut b: Vec<T>, unknowns: usize) -> Solution<T> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = T::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        b[r] = b[r].clone() * inv;
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..unknowns {
                let v = a[r][j].clone();
                if !v.is_zero() {
                    a[i][j] = a[i][j].clone() - f.clone() * v;
                }
            }
            b[i] = b[i].clone() - f * b[r].clone();
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|x| !x.is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < unknowns {
        return Solution::Underdetermined(unknowns - pivots.len());
    }
    let mut x = vec![T::zero(); unknowns];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Solution::Unique(x)
}
