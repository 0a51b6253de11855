//! Exact rank by fraction-free elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over ℚ of an integer matrix, by Bareiss elimination with row pivoting.
pub fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            for j in c + 1..cols {
                let v = &row[j] * &pivot_row[c] - &row[c] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(big(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(rank(big(&[&[0, 0, 1], &[0, 0, 2], &[1, 1, 1]])), 2);
        assert_eq!(rank(big(&[&[2, 4, 6], &[1, 3, 5], &[3, 7, 11]])), 2);
        assert_eq!(rank(vec![]), 0);
    }
}
