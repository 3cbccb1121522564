use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use super::Field;

/// Dense column vector over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector<F> {
    entries: Vec<F>,
}

impl<F: Field> Vector<F> {
    pub fn new(entries: Vec<F>) -> Self {
        Vector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Vector {
            entries: vec![F::zero(); dim],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = F::one();
        v
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        Vector::new(values.iter().map(|&v| F::from_i64(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<F> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(F::is_zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        Vector::new(self.entries.iter().map(|x| c.clone() * x.clone()).collect())
    }

    pub fn dot(&self, other: &Self) -> F {
        assert_eq!(self.dim(), other.dim(), "dot product of unequal dimensions");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Vector::new(entries)
    }

    /// Entries `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        Vector::new(self.entries[start..end].to_vec())
    }
}

impl<F: Field> Index<usize> for Vector<F> {
    type Output = F;
    fn index(&self, i: usize) -> &F {
        &self.entries[i]
    }
}

impl<F: Field> Add for &Vector<F> {
    type Output = Vector<F>;
    fn add(self, rhs: &Vector<F>) -> Vector<F> {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<F: Field> Sub for &Vector<F> {
    type Output = Vector<F>;
    fn sub(self, rhs: &Vector<F>) -> Vector<F> {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<F: Field> Neg for &Vector<F> {
    type Output = Vector<F>;
    fn neg(self) -> Vector<F> {
        Vector::new(self.entries.iter().map(|a| -a.clone()).collect())
    }
}

impl<F: fmt::Debug> fmt::Debug for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e:?}")?;
        }
        write!(f, ")")
    }
}

impl<F: fmt::Display> fmt::Display for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
