//! Linear feasibility and exact linear algebra used by the polytope
//! operations: a phase-I simplex (Bland's rule, so exact backends
//! terminate without anti-cycling tricks) and a dense Gaussian solver.

use crate::scalar::Scalar;

/// Finds `x >= 0` with `A x = b`, where `columns[j]` is the j-th column of
/// `A`. Returns `None` when the system is infeasible (within `tol`).
pub(crate) fn nonneg_solution<S: Scalar>(
    columns: &[Vec<S>],
    target: &[S],
    tol: &S,
) -> Option<Vec<S>> {
    let m = target.len();
    let k = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == m));

    // Tableau rows: [real columns | artificial columns | rhs], with the
    // rhs kept non-negative.
    let width = k + m + 1;
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(m);
    for i in 0..m {
        let negate = target[i] < S::zero();
        let mut row: Vec<S> = Vec::with_capacity(width);
        for col in columns {
            let v = col[i].clone();
            row.push(if negate { -v } else { v });
        }
        for j in 0..m {
            row.push(if j == i { S::one() } else { S::zero() });
        }
        row.push(if negate {
            -target[i].clone()
        } else {
            target[i].clone()
        });
        rows.push(row);
    }
    let mut basis: Vec<usize> = (k..k + m).collect();

    // Reduced-cost row for minimizing the sum of artificials; its rhs slot
    // holds the negated objective value.
    let mut obj: Vec<S> = vec![S::zero(); width];
    for row in &rows {
        for (j, v) in row.iter().enumerate() {
            if j < k || j == width - 1 {
                obj[j] = obj[j].clone() - v.clone();
            }
        }
    }

    let max_iters = 200 * (k + m + 2);
    for _ in 0..max_iters {
        // Bland: lowest-index column with negative reduced cost.
        let entering = (0..k + m).find(|&j| obj[j].clone() + tol.clone() < S::zero());
        let Some(e) = entering else {
            break;
        };

        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<S> = None;
        for (i, row) in rows.iter().enumerate() {
            if row[e] > tol.clone() {
                let ratio = row[width - 1].clone() / row[e].clone();
                let better = match &best_ratio {
                    None => true,
                    Some(r) => ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best_ratio = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        // Phase-I objective is bounded below by zero, so an unbounded ray
        // means numeric trouble; bail out as infeasible.
        let r = leave?;

        let pivot = rows[r][e].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[e].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, p) in row.iter_mut().zip(pivot_row.iter()) {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
        let factor = obj[e].clone();
        if !factor.is_zero() {
            for (v, p) in obj.iter_mut().zip(pivot_row.iter()) {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
        basis[r] = e;
    }

    let objective = -obj[width - 1].clone();
    if objective.abs() > *tol {
        return None;
    }

    let mut x = vec![S::zero(); k];
    for (i, &b) in basis.iter().enumerate() {
        if b < k {
            let v = rows[i][width - 1].clone();
            x[b] = if v < S::zero() { S::zero() } else { v };
        }
    }
    Some(x)
}

/// Finds convex-combination weights: `x >= 0`, `Σx = 1`, `Σ x_j columns[j]
/// = target`.
pub(crate) fn convex_combination<S: Scalar>(
    columns: &[Vec<S>],
    target: &[S],
    tol: &S,
) -> Option<Vec<S>> {
    if columns.is_empty() {
        return None;
    }
    let augmented: Vec<Vec<S>> = columns
        .iter()
        .map(|c| {
            let mut v = c.clone();
            v.push(S::one());
            v
        })
        .collect();
    let mut b = target.to_vec();
    b.push(S::one());
    nonneg_solution(&augmented, &b, tol)
}

/// Solves the square system `A x = b` by Gaussian elimination with partial
/// pivoting. Returns `None` when the matrix is singular (pivot within
/// `tol` of zero).
pub(crate) fn solve_square<S: Scalar>(a: &[Vec<S>], b: &[S], tol: &S) -> Option<Vec<S>> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<S>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n).max_by(|&i, &j| {
            m[i][col]
                .abs()
                .partial_cmp(&m[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if m[pivot_row][col].abs() <= *tol {
            return None;
        }
        m.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        for i in 0..n {
            if i == col {
                continue;
            }
            let factor = m[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            let pivot_row = m[col].clone();
            for (v, p) in m[i].iter_mut().zip(pivot_row.iter()) {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}
