//! Exact dense linear algebra over the rationals, plus a fraction-free
//! integer rank used as an independent cross-check.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rational::Rational;

pub type Row = Vec<Rational>;

/// Reduces `rows` to reduced row-echelon form in place, drops zero rows and
/// returns the pivot columns (strictly increasing).
pub fn rref(rows: &mut Vec<Row>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(col) {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Row]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : rows · x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                x[pc] = -&row[f];
            }
            x
        })
        .collect()
}

/// Echelonized basis of the sum of the given subspaces of `Q^n`.
pub fn span(n: usize, bases: &[&[Row]]) -> Vec<Row> {
    let mut rows: Vec<Row> = bases.iter().flat_map(|b| b.iter().cloned()).collect();
    if rows.is_empty() {
        return rows;
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    rref(&mut rows);
    rows
}

/// Echelonized basis of the intersection of two subspaces of `Q^n`, each
/// given by a linearly independent spanning set.
pub fn intersection(n: usize, a: &[Row], b: &[Row]) -> Vec<Row> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve sum_i l_i a_i - sum_j m_j b_j = 0, one equation per coordinate.
    let unknowns = a.len() + b.len();
    let system: Vec<Row> = (0..n)
        .map(|c| {
            a.iter()
                .map(|v| v[c].clone())
                .chain(b.iter().map(|w| -&w[c]))
                .collect()
        })
        .collect();
    let kernel = nullspace(&system, unknowns);
    let mut out: Vec<Row> = kernel
        .iter()
        .map(|coeffs| {
            let mut x = vec![Rational::zero(); n];
            for (l, v) in coeffs.iter().zip(a) {
                if l.is_zero() {
                    continue;
                }
                for (xi, vi) in x.iter_mut().zip(v) {
                    *xi += &(l * vi);
                }
            }
            x
        })
        .collect();
    if out.is_empty() {
        return out;
    }
    rref(&mut out);
    out
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
///
/// Shares no code with [`rref`]; used to cross-check rational rank results.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..nrows {
            for j in col + 1..ncols {
                let v = &rows[r][col] * &rows[i][j] - &rows[i][col] * &rows[r][j];
                rows[i][j] = v / &prev;
            }
            rows[i][col] = BigInt::zero();
        }
        prev = rows[r][col].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Row {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn rref_basic() {
        let mut m = vec![q(&[0, 2, 4]), q(&[1, 1, 1]), q(&[1, 2, 3])];
        let piv = rref(&mut m);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(m, vec![q(&[1, 0, -1]), q(&[0, 1, 2])]);
    }

    #[test]
    fn nullspace_annihilates() {
        let m = vec![q(&[1, 2, 3, 4]), q(&[2, 4, 6, 8]), q(&[0, 1, 1, 0])];
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for row in &m {
                let dot: Rational = row.iter().zip(x).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn intersection_of_planes() {
        let a = vec![q(&[1, 0, 0]), q(&[0, 1, 0])];
        let b = vec![q(&[0, 1, 0]), q(&[0, 0, 1])];
        assert_eq!(intersection(3, &a, &b), vec![q(&[0, 1, 0])]);
        let c = vec![q(&[0, 0, 1])];
        assert!(intersection(3, &a, &c).is_empty());
    }

    #[test]
    fn bareiss_matches_rref() {
        let rows = [[2i64, 4, 6, 1], [1, 2, 3, 0], [3, 6, 9, 1], [0, 0, 1, 5]];
        let int: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let rat: Vec<Row> = rows.iter().map(|r| q(r)).collect();
        assert_eq!(integer_rank(int), rank(&rat));
        assert_eq!(rank(&rat), 3);
    }
}
