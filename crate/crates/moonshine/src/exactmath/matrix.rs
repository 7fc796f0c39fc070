//! Small dense square matrices over cyclotomic fields.
//!
//! Entries are [`Cyclotomic`]; rational matrices are the special case of
//! conductor 1. Equality and hashing go through the canonical entry form, so
//! matrices can be deduplicated in hash sets.

use std::fmt;
use std::ops::Mul;

use super::cyclotomic::Cyclotomic;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A square matrix with exact cyclotomic entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

impl ExactMatrix {
    /// Builds a matrix from rows; all rows must have the matrix dimension.
    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument(
                "matrix must be square and non-empty".into(),
            ));
        }
        Ok(ExactMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses rows of cyclotomic literals.
    pub fn from_literals<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Cyclotomic::parse(s.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// Builds an integer matrix.
    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Cyclotomic::from_int(x)).collect())
                .collect(),
        )
    }

    /// The identity matrix.
    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Cyclotomic::one())
    }

    /// The scalar matrix `c·I`.
    pub fn scalar(dim: usize, c: Cyclotomic) -> Self {
        let mut entries = vec![Cyclotomic::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = c.clone();
        }
        ExactMatrix { dim, entries }
    }

    /// A diagonal matrix.
    pub fn diagonal(diag: Vec<Cyclotomic>) -> Self {
        let dim = diag.len();
        let mut m = Self::scalar(dim, Cyclotomic::zero());
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = d;
        }
        m
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.dim + j]
    }

    /// Sets entry (i, j).
    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.entries[i * self.dim + j] = v;
    }

    /// Rows as vectors.
    pub fn rows(&self) -> Vec<Vec<Cyclotomic>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    /// Trace.
    pub fn trace(&self) -> Cyclotomic {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut t = self.clone();
        for i in 0..n {
            for j in 0..n {
                t.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        t
    }

    /// Entrywise map.
    pub fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        ExactMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        ExactMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Product.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut entries = vec![Cyclotomic::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        ExactMatrix { dim: n, entries }
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &Cyclotomic) -> Self {
        self.map(|x| x * c)
    }

    /// Whether the matrix is `c·I` for some `c`; returns `c`.
    pub fn scalar_value(&self) -> Option<Cyclotomic> {
        let c = self.get(0, 0).clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.get(i, j);
                let ok = if i == j { *v == c } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Whether the matrix is the identity.
    pub fn is_identity(&self) -> bool {
        self.scalar_value().is_some_and(|c| c.is_one())
    }

    /// Determinant by exact Gaussian elimination.
    pub fn det(&self) -> Cyclotomic {
        let n = self.dim;
        let mut a = self.rows();
        let mut det = Cyclotomic::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Cyclotomic::zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det = &det * &pivot;
            let inv = pivot.inverse().expect("pivot is nonzero");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &inv;
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= &t;
                }
            }
        }
        det
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.rows();
        let mut b = Self::identity(n).rows();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::Arithmetic("singular matrix".into()))?;
            a.swap(p, col);
            b.swap(p, col);
            let inv = a[col][col].inverse()?;
            for c in 0..n {
                a[col][c] = &a[col][c] * &inv;
                b[col][c] = &b[col][c] * &inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let ta = &f * &a[col][c];
                    a[r][c] -= &ta;
                    let tb = &f * &b[col][c];
                    b[r][c] -= &tb;
                }
            }
        }
        Self::from_rows(b)
    }

    /// Non-negative integer power.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.dim);
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.matmul(&sq);
            }
        }
        acc
    }

    /// Characteristic polynomial det(xI − A), coefficients low degree first
    /// (monic, length dim + 1), by the Faddeev–LeVerrier recursion.
    pub fn charpoly(&self) -> Vec<Cyclotomic> {
        let n = self.dim;
        let mut coeffs = vec![Cyclotomic::zero(); n + 1];
        coeffs[n] = Cyclotomic::one();
        let mut m = Self::scalar(n, Cyclotomic::zero());
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1}·I ; c_{n−k} = −tr(A·M_k)/k
            let am = self.matmul(&m);
            m = am.add(&Self::scalar(n, coeffs[n - k + 1].clone()));
            let t = self.matmul(&m).trace();
            coeffs[n - k] = -t.scale(&Rational::new(1, k as i64));
        }
        coeffs
    }
}

impl Mul<&ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.matmul(rhs)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_charpoly_of_integer_matrix() {
        let m = ExactMatrix::from_ints(&[vec![2, 1], vec![1, 3]]).unwrap();
        assert_eq!(m.det(), Cyclotomic::from_int(5));
        let cp = m.charpoly();
        assert_eq!(cp, vec![5.into(), (-5).into(), 1.into()]);
    }

    #[test]
    fn inverse_of_cyclotomic_matrix() {
        let m = ExactMatrix::from_literals(&[vec!["E(5)", "1"], vec!["0", "E(5)^2+1"]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        let z = ExactMatrix::from_ints(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(z.inverse().is_err());
        assert!(z.det().is_zero());
    }

    #[test]
    fn charpoly_constant_term_is_signed_det() {
        let m = ExactMatrix::from_literals(&[
            vec!["E(3)", "1", "0"],
            vec!["2", "E(4)", "1/2"],
            vec!["0", "1", "-1"],
        ])
        .unwrap();
        let cp = m.charpoly();
        assert_eq!(cp[0], -m.det());
        assert_eq!(cp[2], -m.trace());
    }
}
