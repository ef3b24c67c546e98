//! Group-indexed ±1 matrices, the Goethals–Seidel array and exact certification.

mod goethals_seidel;
mod indexed;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::groups::Group;

pub use goethals_seidel::{
    amicable, commute, family_hadamard, goethals_seidel, gram_sum, is_hadamard, is_skew_type, satisfies_gram_identity,
};
pub use indexed::{
    char_matrix, is_type1, is_type1_seeded, is_type2, is_type2_seeded, r_matrix, TYPE_CHECK_EXHAUSTIVE_LIMIT,
    TYPE_CHECK_SEED,
};
pub use text::{read_matrix, write_matrix, MatrixKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("size mismatch: expected order {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("entry ({row}, {col}) is {value}, not ±1")]
    NotSign { row: usize, col: usize, value: i32 },
    #[error("the array needs exactly four blocks, got {0}")]
    BlockCount(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Dense square integer matrix, row-major, optionally indexed by a group's elements.
///
/// Equality compares entries only.
#[derive(Clone)]
pub struct IntMatrix {
    order: usize,
    data: Vec<i32>,
    group: Option<Arc<Group>>,
}

impl PartialEq for IntMatrix {
    fn eq(&self, other: &IntMatrix) -> bool {
        self.order == other.order && self.data == other.data
    }
}

impl Eq for IntMatrix {}

impl IntMatrix {
    pub fn zeros(order: usize) -> IntMatrix {
        IntMatrix { order, data: vec![0; order * order], group: None }
    }

    pub fn identity(order: usize) -> IntMatrix {
        IntMatrix::from_fn(order, |i, j| (i == j) as i32)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> i32) -> IntMatrix {
        let mut data = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                data.push(f(i, j));
            }
        }
        IntMatrix { order, data, group: None }
    }

    pub fn from_rows(rows: &[Vec<i32>]) -> Result<IntMatrix, MatrixError> {
        let order = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != order) {
            return Err(MatrixError::SizeMismatch { expected: order, found: r.len() });
        }
        Ok(IntMatrix { order, data: rows.concat(), group: None })
    }

    /// Attaches a group whose element encodings index rows and columns.
    pub fn with_group(mut self, group: &Arc<Group>) -> Result<IntMatrix, MatrixError> {
        if group.order() != self.order {
            return Err(MatrixError::SizeMismatch { expected: self.order, found: group.order() });
        }
        self.group = Some(Arc::clone(group));
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn group(&self) -> Option<&Arc<Group>> {
        self.group.as_ref()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.data[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i32] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::from_fn(self.order, |i, j| self.get(j, i));
        t.group.clone_from(&self.group);
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `self · otherᵀ`, computed row against row.
    pub fn mul_transpose(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.order, other.order, "order mismatch in product");
        let n = self.order;
        let mut data = vec![0i32; n * n];
        data.par_chunks_mut(n.max(1)).enumerate().for_each(|(i, out)| {
            let a = self.row(i);
            for (j, slot) in out.iter_mut().enumerate() {
                *slot = a.iter().zip(other.row(j)).map(|(x, y)| x * y).sum();
            }
        });
        IntMatrix { order: n, data, group: None }
    }

    pub fn scaled(&self, c: i32) -> IntMatrix {
        IntMatrix { order: self.order, data: self.data.iter().map(|x| x * c).collect(), group: self.group.clone() }
    }

    /// True when every entry lies in `{+1, −1}`.
    pub fn is_sign(&self) -> bool {
        self.data.iter().all(|&x| x == 1 || x == -1)
    }

    fn zip_with(&self, other: &IntMatrix, f: impl Fn(i32, i32) -> i32) -> IntMatrix {
        assert_eq!(self.order, other.order, "order mismatch");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        IntMatrix { order: self.order, data, group: None }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.mul_transpose(&rhs.transpose())
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        self.scaled(-1)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix({})", self.order)?;
        for i in 0..self.order {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A square matrix with entries ±1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignMatrix(IntMatrix);

impl SignMatrix {
    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.0.get(i, j)
    }

    pub fn as_int(&self) -> &IntMatrix {
        &self.0
    }

    pub fn group(&self) -> Option<&Arc<Group>> {
        self.0.group()
    }

    pub fn transpose(&self) -> SignMatrix {
        SignMatrix(self.0.transpose())
    }
}

impl TryFrom<IntMatrix> for SignMatrix {
    type Error = MatrixError;

    fn try_from(m: IntMatrix) -> Result<SignMatrix, MatrixError> {
        let n = m.order;
        if let Some(pos) = m.data.iter().position(|&x| x != 1 && x != -1) {
            return Err(MatrixError::NotSign { row: pos / n, col: pos % n, value: m.data[pos] });
        }
        Ok(SignMatrix(m))
    }
}

impl From<SignMatrix> for IntMatrix {
    fn from(m: SignMatrix) -> IntMatrix {
        m.0
    }
}
