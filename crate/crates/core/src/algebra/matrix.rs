//! Determinants and exact row reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{Field, GaussianInt, GaussianRational, Ring};
use crate::error::{Error, Result};

/// Determinant by Bareiss elimination with row pivoting.
///
/// Every division is by the previous pivot and is exact in the underlying
/// integral domain; over a field it is ordinary division.
pub fn det_bareiss<K: Field>(mut m: Vec<Vec<K>>) -> K {
    let n = m.len();
    if n == 0 {
        return K::one();
    }
    let mut sign_flip = false;
    let mut prev = K::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return K::zero();
        };
        if p != k {
            m.swap(p, k);
            sign_flip = !sign_flip;
        }
        let prev_inv = prev.inv().expect("pivots are nonzero");
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v * prev_inv.clone();
            }
            m[i][k] = K::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Division-free determinant over any commutative ring.
///
/// Expands row by row, memoising the partial sums over the set of columns
/// already used: `O(2^n n)` ring operations. Intended for the small
/// Sylvester matrices with polynomial entries.
pub fn det_by_minors<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(n < 24, "matrix too large for subset expansion");
    if n == 0 {
        return R::one();
    }
    let mut partial: Vec<Option<R>> = vec![None; 1 << n];
    partial[0] = Some(R::one());
    for mask in 0usize..(1 << n) {
        let Some(acc) = partial[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == n {
            partial[mask] = Some(acc);
            continue;
        }
        for (c, entry) in m[row].iter().enumerate() {
            if mask & (1 << c) != 0 || entry.is_zero() {
                continue;
            }
            // Columns already placed to the right of c count as inversions.
            let inversions = (mask >> (c + 1)).count_ones();
            let term = acc.clone() * entry.clone();
            let term = if inversions % 2 == 1 { -term } else { term };
            let slot = &mut partial[mask | (1 << c)];
            *slot = Some(match slot.take() {
                Some(v) => v + term,
                None => term,
            });
        }
    }
    partial[(1 << n) - 1].take().unwrap_or_else(R::zero)
}

/// Result of fraction-free Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct RowReduction {
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
    /// Kernel basis; each vector has a one in its own free column and zeros
    /// in the other free columns.
    pub kernel: Vec<Vec<GaussianRational>>,
}

/// Exact rank and kernel of a matrix over `Q(i)`.
///
/// Rows are scaled into `Z[i]` and reduced fraction-free; pivots are chosen by
/// smallest bit size within the column.
pub fn row_reduce(rows: &[Vec<GaussianRational>], ncols: usize) -> Result<RowReduction> {
    let mut m: Vec<Vec<GaussianInt>> = rows
        .iter()
        .map(|row| {
            let scale = row.iter().fold(BigInt::one(), |acc, z| acc.lcm(&z.denominator_lcm()));
            row.iter().map(|z| GaussianInt::scaled_from(z, &scale)).collect()
        })
        .collect();
    let nrows = m.len();
    let mut prev = GaussianInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let best = (r..nrows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].bits());
        let Some(best) = best else { continue };
        m.swap(r, best);
        let (head, tail) = m.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("row r exists");
        let piv = pivot_row[c].clone();
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let factor = row[c].clone();
            for j in 0..ncols {
                if j == c {
                    continue;
                }
                let num = &(&piv * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = num
                    .exact_div(&prev)
                    .ok_or_else(|| Error::Internal("inexact fraction-free division".into()))?;
            }
            row[c] = GaussianInt::default();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    let rank = r;
    let d = prev.to_rational();
    let d_inv = d.inv().expect("pivot is nonzero");
    let mut kernel = Vec::new();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![GaussianRational::zero(); ncols];
        v[free] = GaussianRational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -(m[i][free].to_rational() * d_inv.clone());
        }
        kernel.push(v);
    }
    Ok(RowReduction { rank, pivots, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fp;

    type Q = GaussianRational;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| Q::from(x)).collect()).collect()
    }

    #[test]
    fn determinants_agree() {
        let m = mat(&[&[2, -1, 0, 3], &[1, 0, 4, 1], &[0, 0, 2, 5], &[7, 1, 1, 1]]);
        let a = det_bareiss(m.clone());
        let b = det_by_minors(&m);
        assert_eq!(a, b);
        // value from an independent symbolic determinant
        assert_eq!(a, Q::from(165));
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(m.clone()), Q::from(-1));
        assert_eq!(det_by_minors(&m), Q::from(-1));
    }

    #[test]
    fn prime_field_determinant() {
        let m: Vec<Vec<Fp<7>>> = vec![vec![Fp::new(3), Fp::new(5)], vec![Fp::new(2), Fp::new(1)]];
        assert_eq!(det_bareiss(m), Fp::new(3 - 10));
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let red = row_reduce(&m, 3).unwrap();
        assert_eq!(red.rank, 2);
        assert_eq!(red.kernel.len(), 1);
        for row in &m {
            let dot = row.iter().zip(&red.kernel[0]).fold(Q::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn complex_entries_and_empty_matrix() {
        let m = vec![vec![Q::from_ints(1, 1), Q::from_ints(2, 0)], vec![Q::from_ints(0, 2), Q::from_ints(2, 2)]];
        // rows are proportional: (1+i) * row0 = row1
        let red = row_reduce(&m, 2).unwrap();
        assert_eq!(red.rank, 1);
        let red = row_reduce(&[], 4).unwrap();
        assert_eq!((red.rank, red.kernel.len()), (0, 4));
    }
}
