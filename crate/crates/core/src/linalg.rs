//! Exact rank over ℚ via fraction-free (Bareiss) elimination.
//!
//! Rows are cleared to integers first, then eliminated with the Bareiss
//! one-step formula, whose divisions are exact by construction. No floating
//! point is involved anywhere, so the reported rank is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Exact rank of a list of rational row vectors.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    integer_rank(int_rows)
}

/// Multiplies a row by the lcm of its denominators.
fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for q in row {
        lcm = lcm.lcm(q.denom());
    }
    row.iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect()
}

/// Bareiss elimination on integer rows; returns the rank.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|r| !r.iter().all(|x| x.is_zero()));
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0usize;
    let mut prev_pivot = BigInt::one();
    let mut col = 0usize;

    while col < ncols && rank < rows.len() {
        // pivot for this column; prefer a short row to keep minors small
        let pivot_row = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(pr) = pivot_row else {
            col += 1;
            continue;
        };
        rows.swap(rank, pr);
        let pivot = rows[rank][col].clone();

        // one-step Bareiss update on every remaining row; the division by the
        // previous pivot is exact (Sylvester identity), so `/` never truncates
        for r in rank + 1..rows.len() {
            let lead = std::mem::replace(&mut rows[r][col], BigInt::zero());
            for c in col + 1..ncols {
                let val = &pivot * &rows[r][c] - &lead * &rows[rank][c];
                rows[r][c] = &val / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
        col += 1;
    }
    rank
}
