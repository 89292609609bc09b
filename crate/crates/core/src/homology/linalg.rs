//! Dense matrices over a generic scalar, Smith normal form over integer
//! scalars and rank over exact fields.

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{
    CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Num, Signed, ToPrimitive, Zero,
};
use thiserror::Error;

/// Integer-like coefficient ring for Smith normal form. Implemented by
/// `i64`, `i128` and `BigInt`; fixed-width types report overflow instead of wrapping.
pub trait IntegerScalar:
    Clone
    + Debug
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
{
}

impl<T> IntegerScalar for T where
    T: Clone
        + Debug
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
{
}

/// Exact field for rank computations (e.g. `BigRational`).
pub trait FieldScalar: Clone + Debug + Num {}

impl<T> FieldScalar for T where T: Clone + Debug + Num {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow during elimination")]
pub struct Overflow;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }
}

impl<T: Clone + Num> Matrix<T> {
    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix, all positive.
/// The length of the result is the rank.
///
/// Pivots on the entry of smallest absolute value in the remaining block.
pub fn smith_invariants<T: IntegerScalar>(matrix: &Matrix<T>) -> Result<Vec<T>, Overflow> {
    let mut a = matrix.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_entry(&a, t, t) else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let mut clean = true;
            let pivot = a.get(t, t).clone();
            for r in t + 1..rows {
                let entry = a.get(r, t).clone();
                if entry.is_zero() {
                    continue;
                }
                let q = entry.div_floor(&pivot);
                row_sub(&mut a, r, t, &q)?;
                if !a.get(r, t).is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..cols {
                let entry = a.get(t, c).clone();
                if entry.is_zero() {
                    continue;
                }
                let q = entry.div_floor(&pivot);
                col_sub(&mut a, c, t, &q)?;
                if !a.get(t, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // A remainder smaller than the pivot survived; move it onto the diagonal.
            let mut best = (t, t);
            let mut best_abs = pivot.abs();
            for r in t + 1..rows {
                let v = a.get(r, t).abs();
                if !v.is_zero() && v < best_abs {
                    best_abs = v;
                    best = (r, t);
                }
            }
            for c in t + 1..cols {
                let v = a.get(t, c).abs();
                if !v.is_zero() && v < best_abs {
                    best_abs = v;
                    best = (t, c);
                }
            }
            a.swap_rows(t, best.0);
            a.swap_cols(t, best.1);
        }
        diagonal.push(a.get(t, t).abs());
        t += 1;
    }
    divisibility_chain(&mut diagonal)?;
    Ok(diagonal)
}

fn smallest_entry<T: IntegerScalar>(a: &Matrix<T>, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for r in r0..a.rows {
        for c in c0..a.cols {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            let better = best.as_ref().is_none_or(|(_, b)| abs < *b);
            if better {
                let unit = abs.is_one();
                best = Some(((r, c), abs));
                if unit {
                    return best.map(|(pos, _)| pos);
                }
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// `row[target] -= q * row[source]`
fn row_sub<T: IntegerScalar>(
    a: &mut Matrix<T>,
    target: usize,
    source: usize,
    q: &T,
) -> Result<(), Overflow> {
    for c in 0..a.cols {
        let s = a.get(source, c);
        if s.is_zero() {
            continue;
        }
        let delta = q.checked_mul(s).ok_or(Overflow)?;
        let value = a.get(target, c).checked_sub(&delta).ok_or(Overflow)?;
        a.set(target, c, value);
    }
    Ok(())
}

/// `col[target] -= q * col[source]`
fn col_sub<T: IntegerScalar>(
    a: &mut Matrix<T>,
    target: usize,
    source: usize,
    q: &T,
) -> Result<(), Overflow> {
    for r in 0..a.rows {
        let s = a.get(r, source);
        if s.is_zero() {
            continue;
        }
        let delta = q.checked_mul(s).ok_or(Overflow)?;
        let value = a.get(r, target).checked_sub(&delta).ok_or(Overflow)?;
        a.set(r, target, value);
    }
    Ok(())
}

/// Replaces diagonal pairs by (gcd, lcm) until each entry divides the next.
fn divisibility_chain<T: IntegerScalar>(d: &mut [T]) -> Result<(), Overflow> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if d[j].is_multiple_of(&d[i]) {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = (d[i].clone() / g.clone())
                .checked_mul(&d[j])
                .ok_or(Overflow)?;
            d[i] = g;
            d[j] = l;
        }
    }
    Ok(())
}

/// Rank by Gaussian elimination over an exact field.
pub fn rank_over_field<F: FieldScalar>(matrix: &Matrix<F>) -> usize {
    let mut a = matrix.clone();
    let mut rank = 0;
    for c in 0..a.cols {
        let Some(p) = (rank..a.rows).find(|&r| !a.get(r, c).is_zero()) else {
            continue;
        };
        a.swap_rows(rank, p);
        let pivot = a.get(rank, c).clone();
        for r in rank + 1..a.rows {
            let entry = a.get(r, c).clone();
            if entry.is_zero() {
                continue;
            }
            let factor = entry / pivot.clone();
            for k in c..a.cols {
                let v = a.get(r, k).clone() - factor.clone() * a.get(rank, k).clone();
                a.set(r, k, v);
            }
        }
        rank += 1;
        if rank == a.rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;

    #[test]
    fn smith_of_small_matrices() {
        let m = Matrix::from_rows(vec![vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(smith_invariants(&m).unwrap(), vec![2, 6, 12]);

        let z = Matrix::<i64>::zeros(3, 2);
        assert!(smith_invariants(&z).unwrap().is_empty());

        let diag = Matrix::from_rows(vec![vec![4i64, 0], vec![0, 6]]);
        assert_eq!(smith_invariants(&diag).unwrap(), vec![2, 12]);
    }

    #[test]
    fn smith_agrees_across_scalars() {
        let rows = vec![
            vec![3i64, 1, 4],
            vec![1, 5, 9],
            vec![2, 6, 5],
            vec![3, 5, 8],
        ];
        let small = smith_invariants(&Matrix::from_rows(rows.clone())).unwrap();
        let big_rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let big = smith_invariants(&Matrix::from_rows(big_rows)).unwrap();
        assert_eq!(
            small.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(),
            big
        );
    }

    #[test]
    fn overflow_is_reported() {
        let m = Matrix::from_rows(vec![vec![i8::MAX, 3], vec![5, i8::MAX]]);
        assert_eq!(smith_invariants(&m), Err(Overflow));
    }

    #[test]
    fn rational_rank() {
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let m = Matrix::from_rows(vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(1), q(0), q(1)],
        ]);
        assert_eq!(rank_over_field(&m), 2);
    }
}
