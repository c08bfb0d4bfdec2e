use std::fmt;
use std::ops::{Add, Index, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{ExactError, Sqrt5Scalar};

/// A coordinate vector over ℚ(√5).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactVector(pub Vec<Sqrt5Scalar>);

impl ExactVector {
    pub fn from_ints(xs: &[i64]) -> Self {
        ExactVector(xs.iter().map(|&x| Sqrt5Scalar::from_int(x)).collect())
    }

    /// Standard basis vector `e_{i+1}` (0-based `i`).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = vec![Sqrt5Scalar::zero(); dim];
        v[i] = Sqrt5Scalar::one();
        ExactVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Self) -> Sqrt5Scalar {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Sqrt5Scalar::zero(), |acc, (x, y)| acc + x * y)
    }

    pub fn norm_squared(&self) -> Sqrt5Scalar {
        self.dot(self)
    }

    pub fn scale(&self, s: &Sqrt5Scalar) -> Self {
        ExactVector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl Index<usize> for ExactVector {
    type Output = Sqrt5Scalar;
    fn index(&self, i: usize) -> &Sqrt5Scalar {
        &self.0[i]
    }
}

impl<'a> Add<&'a ExactVector> for &'a ExactVector {
    type Output = ExactVector;
    fn add(self, rhs: &ExactVector) -> ExactVector {
        ExactVector(self.0.iter().zip(&rhs.0).map(|(x, y)| x + y).collect())
    }
}

impl<'a> Sub<&'a ExactVector> for &'a ExactVector {
    type Output = ExactVector;
    fn sub(self, rhs: &ExactVector) -> ExactVector {
        ExactVector(self.0.iter().zip(&rhs.0).map(|(x, y)| x - y).collect())
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Square matrix over ℚ(√5), stored row-major. Only dimensions 3 and 4 are
/// used by the geometry, but nothing here depends on that.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<Sqrt5Scalar>,
}

/// Display-only summary of a matrix, used in reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixSummary {
    pub rows: Vec<Vec<String>>,
}

impl ExactMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = ExactMatrix {
            dim,
            entries: vec![Sqrt5Scalar::zero(); dim * dim],
        };
        for i in 0..dim {
            m.entries[i * dim + i] = Sqrt5Scalar::one();
        }
        m
    }

    pub fn zero(dim: usize) -> Self {
        ExactMatrix {
            dim,
            entries: vec![Sqrt5Scalar::zero(); dim * dim],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Sqrt5Scalar>>) -> Result<Self, ExactError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(ExactError::NotSquare);
        }
        Ok(ExactMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, ExactError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Sqrt5Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[ExactVector]) -> Result<Self, ExactError> {
        let dim = cols.len();
        if cols.iter().any(|c| c.dim() != dim) {
            return Err(ExactError::NotSquare);
        }
        let mut m = Self::zero(dim);
        for (j, c) in cols.iter().enumerate() {
            for i in 0..dim {
                m.entries[i * dim + j] = c[i].clone();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Sqrt5Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Sqrt5Scalar) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[Sqrt5Scalar] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut t = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                t.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.dim != other.dim {
            return Err(ExactError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Sqrt5Scalar::zero();
                for k in 0..n {
                    let x = &self.entries[i * n + k];
                    let y = &other.entries[k * n + j];
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc + x * y;
                    }
                }
                out.entries[i * n + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &ExactVector) -> Result<ExactVector, ExactError> {
        if v.dim() != self.dim {
            return Err(ExactError::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        let n = self.dim;
        Ok(ExactVector(
            (0..n)
                .map(|i| {
                    (0..n).fold(Sqrt5Scalar::zero(), |acc, k| {
                        let x = &self.entries[i * n + k];
                        if x.is_zero() {
                            acc
                        } else {
                            acc + x * &v[k]
                        }
                    })
                })
                .collect(),
        ))
    }

    pub fn scale(&self, s: &Sqrt5Scalar) -> Self {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.dim != other.dim {
            return Err(ExactError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(ExactMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..e {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> Sqrt5Scalar {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = Sqrt5Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Sqrt5Scalar::zero();
            };
            if p != col {
                for k in 0..n {
                    a.swap(p * n + k, col * n + k);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det = det * &pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let f = &a[r * n + col] * &inv;
                if f.is_zero() {
                    continue;
                }
                for k in col..n {
                    let sub = &f * &a[col * n + k];
                    a[r * n + k] = &a[r * n + k] - &sub;
                }
            }
        }
        det
    }

    pub fn is_orthogonal(&self) -> bool {
        self.transpose()
            .mul(self)
            .map(|p| p.is_identity())
            .unwrap_or(false)
    }

    /// MᵀM = I and det M = 1, decided exactly.
    pub fn is_special_orthogonal(&self) -> bool {
        self.is_orthogonal() && self.det().is_one()
    }

    pub fn summary(&self) -> MatrixSummary {
        MatrixSummary {
            rows: (0..self.dim)
                .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
                .collect(),
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
