//! Exhaustive enumeration of the `F_q`-span of a list of vectors.
//!
//! The span is split on its leading basis vectors into independent chunks
//! processed on the rayon pool; inside a chunk consecutive vectors differ by
//! a single basis vector, so each step costs one vector addition. Results
//! are combined in chunk order, so the outcome does not depend on the number
//! of worker threads.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{BaseElem, BaseField};

/// Target number of parallel chunks.
const CHUNKS: u128 = 256;

/// `q^k`, saturating.
pub fn span_size(q: usize, k: usize) -> u128 {
    (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

pub fn check_budget(size: u128, budget: u64) -> Result<()> {
    if size > budget as u128 {
        Err(Error::BudgetExceeded { size, budget })
    } else {
        Ok(())
    }
}

#[inline]
pub fn add_assign(base: &BaseField, acc: &mut [BaseElem], v: &[BaseElem]) {
    for (a, &b) in acc.iter_mut().zip(v) {
        *a = base.add(*a, b);
    }
}

/// Visits every combination `Σ c_i basis[i]`, `c_i ∈ F_q`, exactly once.
///
/// `init` creates a per-chunk accumulator, `visit` folds a vector into it and
/// `merge` combines accumulators.
pub fn fold_span<T, I, V, M>(base: &BaseField, basis: &[Vec<BaseElem>], len: usize, init: I, visit: V, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, &[BaseElem]) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    debug_assert!(basis.iter().all(|b| b.len() == len));
    let q = base.q();
    let k = basis.len();
    let mut outer = 0;
    while outer < k && span_size(q, outer + 1) <= CHUNKS {
        outer += 1;
    }
    let inner = k - outer;
    let (inner_basis, outer_basis) = basis.split_at(inner);
    let chunks = span_size(q, outer) as u64;

    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut start = vec![0; len];
            let mut c = chunk;
            for b in outer_basis {
                let digit = (c % q as u64) as BaseElem;
                c /= q as u64;
                if digit != 0 {
                    for (a, &x) in start.iter_mut().zip(b) {
                        *a = base.add(*a, base.mul(digit, x));
                    }
                }
            }
            let mut acc = init();
            walk(base, inner_basis, start, |v| visit(&mut acc, v));
            acc
        })
        .reduce_with(&merge)
        .unwrap_or_else(&init)
}

/// Sequential walk over `start + span(basis)`. Digit `d` moving from code `j`
/// to code `j+1 (mod q)` adds `(c_{j+1} - c_j) basis[d]`.
fn walk<F: FnMut(&[BaseElem])>(base: &BaseField, basis: &[Vec<BaseElem>], mut v: Vec<BaseElem>, mut visit: F) {
    let q = base.q();
    let steps: Vec<Vec<Vec<BaseElem>>> = basis
        .iter()
        .map(|b| {
            (0..q)
                .map(|j| {
                    let c = base.sub(((j + 1) % q) as BaseElem, j as BaseElem);
                    b.iter().map(|&x| base.mul(c, x)).collect()
                })
                .collect()
        })
        .collect();
    let mut digits = vec![0usize; basis.len()];
    visit(&v);
    loop {
        let mut d = 0;
        loop {
            if d == basis.len() {
                return;
            }
            add_assign(base, &mut v, &steps[d][digits[d]]);
            digits[d] += 1;
            if digits[d] == q {
                digits[d] = 0;
                d += 1;
            } else {
                break;
            }
        }
        visit(&v);
    }
}

/// Rank over `F_q` of a list of vectors, by row reduction.
pub fn rank(base: &BaseField, vectors: &[Vec<BaseElem>]) -> usize {
    let mut rows: Vec<Vec<BaseElem>> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = base.inv(rows[r][c]).expect("pivot is nonzero");
        let pivot_row: Vec<BaseElem> = rows[r].iter().map(|&x| base.mul(x, inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = base.sub(*x, base.mul(f, y));
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
