//! Hermite normal forms, integer kernels and fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lattice::LatticeVector;
use super::matrix::IntMatrix;
use super::AlgebraError;

/// Row Hermite normal form `H = U * M` with `U` unimodular.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMatrix,
    /// Present when requested from [`row_hnf_with_transform`].
    pub transform: Option<IntMatrix>,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// In-place row HNF of `rows` (each of width `width`), pivoting on the
/// columns `0..pivot_cols`. Uses the row of smallest absolute value as
/// pivot at every Euclidean step. Returns the pivot columns.
fn hnf_in_place(rows: &mut [Vec<BigInt>], pivot_cols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == nrows {
            break;
        }
        loop {
            let best = (r..nrows)
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let mut done = true;
            for row in tail.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot_row[c]);
                sub_multiple(row, pivot_row, &q, c);
                if !row[c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < nrows && !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for v in rows[r].iter_mut() {
                    *v = -&*v;
                }
            }
            let (head, tail) = rows.split_at_mut(r);
            let pivot_row = &tail[0];
            for row in head.iter_mut() {
                let q = row[c].div_floor(&pivot_row[c]);
                if !q.is_zero() {
                    sub_multiple(row, pivot_row, &q, c);
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    pivots
}

/// `row -= q * pivot`, touching columns from `start` on (earlier columns of
/// the pivot row are zero).
fn sub_multiple(row: &mut [BigInt], pivot: &[BigInt], q: &BigInt, start: usize) {
    for (a, b) in row[start..].iter_mut().zip(&pivot[start..]) {
        if !b.is_zero() {
            *a -= q * b;
        }
    }
}

/// Row Hermite normal form of `m`.
pub fn row_hnf(m: &IntMatrix) -> Hnf {
    let mut rows = m.to_rows();
    let pivots = hnf_in_place(&mut rows, m.cols());
    Hnf { h: IntMatrix::from_rows(rows, m.cols()).expect("shape preserved"), transform: None, pivots }
}

/// Row Hermite normal form of `m` together with a unimodular `U`, `U*M = H`.
pub fn row_hnf_with_transform(m: &IntMatrix) -> Hnf {
    let n = m.rows();
    let cols = m.cols();
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend((0..n).map(|j| if j == r { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let pivots = hnf_in_place(&mut rows, cols);
    let (h, u): (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) = rows
        .into_iter()
        .map(|mut row| {
            let right = row.split_off(cols);
            (row, right)
        })
        .unzip();
    Hnf {
        h: IntMatrix::from_rows(h, cols).expect("shape preserved"),
        transform: Some(IntMatrix::from_rows(u, n).expect("shape preserved")),
        pivots,
    }
}

/// Z-basis of `{v : M v = 0}` in Hermite-reduced row form, so the output
/// depends only on the kernel lattice.
pub fn hermite_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = m.cols();
    let k = m.rows();
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|c| {
            let mut row: Vec<BigInt> = (0..k).map(|r| m.get(r, c).clone()).collect();
            row.extend((0..n).map(|j| if j == c { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let pivots = hnf_in_place(&mut rows, k);
    let rank = pivots.len();
    let mut kernel: Vec<Vec<BigInt>> = rows.into_iter().skip(rank).map(|row| row[k..].to_vec()).collect();
    hnf_in_place(&mut kernel, n);
    kernel.retain(|v| v.iter().any(|c| !c.is_zero()));
    kernel
}

/// Nonzero rows of the Hermite normal form of the lattice spanned by
/// `vectors` in `Z^width`.
pub fn hnf_basis(vectors: &[Vec<BigInt>], width: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vectors.to_vec();
    for row in &rows {
        assert_eq!(row.len(), width, "vector of wrong width");
    }
    let pivots = hnf_in_place(&mut rows, width);
    rows.truncate(pivots.len());
    rows
}

/// Membership of `v` in the lattice with Hermite basis `basis` (as returned
/// by [`hnf_basis`] or [`hermite_kernel`]).
pub fn lattice_contains(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut rest = v.to_vec();
    for row in basis {
        let Some(c) = row.iter().position(|a| !a.is_zero()) else { continue };
        if rest[..c].iter().any(|a| !a.is_zero()) {
            return false;
        }
        let (q, r) = rest[c].div_rem(&row[c]);
        if !r.is_zero() {
            return false;
        }
        if !q.is_zero() {
            sub_multiple(&mut rest, row, &q, c);
        }
    }
    rest.iter().all(|a| a.is_zero())
}

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(m: &IntMatrix) -> usize {
    let mut rows = m.to_rows();
    bareiss_in_place(&mut rows, m.cols()).0
}

/// Fraction-free echelon form; returns the rank and the last pivot, which
/// for a square nonsingular matrix is `±det`.
fn bareiss_in_place(rows: &mut [Vec<BigInt>], cols: usize) -> (usize, BigInt, bool) {
    let nrows = rows.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut swaps = false;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else { continue };
        if p != r {
            rows.swap(p, r);
            swaps = !swaps;
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        r += 1;
    }
    (r, prev, swaps)
}

/// Determinant of a square matrix.
pub fn determinant(m: &IntMatrix) -> Result<BigInt, AlgebraError> {
    if m.rows() != m.cols() {
        return Err(AlgebraError::DimensionMismatch { expected: m.rows(), found: m.cols() });
    }
    if m.rows() == 0 {
        return Ok(BigInt::one());
    }
    let mut rows = m.to_rows();
    let (rank, last, swaps) = bareiss_in_place(&mut rows, m.cols());
    if rank < m.rows() {
        return Ok(BigInt::zero());
    }
    Ok(if swaps { -last } else { last })
}

/// Integer solution of the square system `M v = b`, if `M` is nonsingular
/// and the rational solution is integral.
pub fn solve_integral(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, AlgebraError> {
    let n = m.rows();
    if b.len() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, found: b.len() });
    }
    let det = determinant(m)?;
    if det.is_zero() {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut mj = m.clone();
        for (i, bi) in b.iter().enumerate() {
            mj.set(i, j, bi.clone());
        }
        let (q, r) = determinant(&mj)?.div_rem(&det);
        if !r.is_zero() {
            return Ok(None);
        }
        out.push(q);
    }
    Ok(Some(out))
}

/// Rank of the subgroup of `Z^len` generated by `vectors`.
pub fn lattice_rank(vectors: &[LatticeVector]) -> Result<usize, AlgebraError> {
    let Some(first) = vectors.first() else { return Ok(0) };
    let len = first.len();
    for v in vectors {
        v.check_len(len)?;
    }
    let m = IntMatrix::from_rows(vectors.iter().map(LatticeVector::to_bigints).collect(), len)?;
    Ok(bareiss_rank(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), cols).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn kernel_of_two_minus_two() {
        assert_eq!(hermite_kernel(&mat(&[&[2, -2]])), vec![ints(&[1, 1])]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(hermite_kernel(&IntMatrix::identity(2)).is_empty());
    }

    #[test]
    fn kernel_of_zero_columns_is_standard_basis() {
        let k = hermite_kernel(&IntMatrix::zeros(0, 3));
        assert_eq!(k, vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
    }

    #[test]
    fn hnf_transform_reproduces_h() {
        let m = mat(&[&[4, 6, 2], &[2, 3, 7], &[6, 9, 9]]);
        let hnf = row_hnf_with_transform(&m);
        let u = hnf.transform.clone().unwrap();
        assert_eq!(u.mul(&m).unwrap(), hnf.h);
        assert_eq!(determinant(&u).unwrap().abs(), BigInt::one());
        assert_eq!(hnf.rank(), 2);
    }

    #[test]
    fn lattice_rank_examples() {
        let lv = |v: &[i64]| LatticeVector::new(v.to_vec());
        assert_eq!(lattice_rank(&[lv(&[1, 0, 0]), lv(&[0, 1, 0])]).unwrap(), 2);
        assert_eq!(lattice_rank(&[lv(&[1, 0, 1]), lv(&[-1, 0, 0])]).unwrap(), 2);
        assert_eq!(lattice_rank(&[lv(&[2, 4]), lv(&[1, 2])]).unwrap(), 1);
        assert!(lattice_rank(&[lv(&[1, 2]), lv(&[1, 2, 3])]).is_err());
    }

    #[test]
    fn determinant_with_swaps() {
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(determinant(&mat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]])).unwrap(), BigInt::from(18));
    }

    #[test]
    fn solve_integral_rejects_fractional() {
        let m = mat(&[&[2, 0], &[0, 1]]);
        assert_eq!(solve_integral(&m, &ints(&[4, 3])).unwrap(), Some(ints(&[2, 3])));
        assert_eq!(solve_integral(&m, &ints(&[3, 3])).unwrap(), None);
    }

    #[test]
    fn membership_in_hnf_lattice() {
        let basis = hnf_basis(&[ints(&[2, 0]), ints(&[0, 3])], 2);
        assert!(lattice_contains(&basis, &ints(&[4, -3])));
        assert!(!lattice_contains(&basis, &ints(&[1, 0])));
    }
}
