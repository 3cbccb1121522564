use crate::arith::{Field, Matrix, Vector};
use crate::group::GroupElement;

use super::{Automorphism, SemidirectElement, SemidirectError};

/// A nilpotent group `N = N₀ ▷ N₁ ▷ … ▷ N_r = {e}` presented level by level.
///
/// For each level `j`:
/// - `project(j, n)` is the class of `n ∈ N_j` in `N_j/N_{j+1} ≅ F^{d_j}`,
/// - `section(j, v)` is some element of `N_j` projecting to `v`,
/// - `level_action(j, x)` is the `d_j × d_j` matrix of `x` on that quotient.
///
/// `project(j, n) = 0` means `n ∈ N_{j+1}`; the next level has to accept it.
pub trait CentralSeriesPresentation {
    type Scalar: Field;
    type Elem: GroupElement;
    type Acting: GroupElement + Automorphism<Self::Elem>;

    fn levels(&self) -> usize;
    fn level_dim(&self, level: usize) -> usize;
    fn identity(&self) -> Self::Elem;
    fn project(&self, level: usize, n: &Self::Elem) -> Vector<Self::Scalar>;
    fn section(&self, level: usize, v: &Vector<Self::Scalar>) -> Self::Elem;
    fn level_action(&self, level: usize, x: &Self::Acting) -> Matrix<Self::Scalar>;
}

/// Checks the presentation invariants on sample data: section/project
/// round trip, additivity of `project` on `N_j`, compatibility of
/// `level_action` with the automorphism, and that conjugating by `x·n`
/// induces the same quotient action as `x` alone.
pub fn check_presentation<P: CentralSeriesPresentation>(
    presentation: &P,
    acting: &[P::Acting],
    normal: &[P::Elem],
    level_vectors: &[Vec<Vector<P::Scalar>>],
) -> Result<(), SemidirectError> {
    let fail = |what: String| Err(SemidirectError::InvalidPresentation(what));
    for level in 0..presentation.levels() {
        let vs = level_vectors.get(level).map(Vec::as_slice).unwrap_or(&[]);
        for v in vs {
            if v.dim() != presentation.level_dim(level) {
                return fail(format!("level {level}: sample of wrong dimension"));
            }
            let s = presentation.section(level, v);
            if presentation.project(level, &s) != *v {
                return fail(format!("level {level}: project(section(v)) != v"));
            }
            for u in vs {
                let su = presentation.section(level, u);
                if presentation.project(level, &s.mul(&su)) != v + u {
                    return fail(format!("level {level}: project is not additive"));
                }
            }
            for x in acting {
                let m = presentation.level_action(level, x);
                if presentation.project(level, &x.act(&s)) != m.mul_vec(v) {
                    return fail(format!("level {level}: level action disagrees with automorphism"));
                }
                for n in normal {
                    let g = SemidirectElement::new(x.clone(), n.clone());
                    let inner = SemidirectElement::from_normal(s.clone(), x);
                    let conj = inner.conjugate_by(&g);
                    if !conj.h.is_identity() || presentation.project(level, &conj.n) != m.mul_vec(v) {
                        return fail(format!("level {level}: x·n acts differently from x"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// A vector group as a one-level presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VectorPresentation<F> {
    dim: usize,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> VectorPresentation<F> {
    pub fn new(dim: usize) -> Self {
        VectorPresentation {
            dim,
            _field: std::marker::PhantomData,
        }
    }
}

impl<F: Field> CentralSeriesPresentation for VectorPresentation<F> {
    type Scalar = F;
    type Elem = Vector<F>;
    type Acting = Matrix<F>;

    fn levels(&self) -> usize {
        1
    }

    fn level_dim(&self, _level: usize) -> usize {
        self.dim
    }

    fn identity(&self) -> Vector<F> {
        Vector::zeros(self.dim)
    }

    fn project(&self, _level: usize, n: &Vector<F>) -> Vector<F> {
        n.clone()
    }

    fn section(&self, _level: usize, v: &Vector<F>) -> Vector<F> {
        v.clone()
    }

    fn level_action(&self, _level: usize, x: &Matrix<F>) -> Matrix<F> {
        x.clone()
    }
}

/// `F^n` filtered by coordinate blocks: `N_j` is spanned by the coordinates
/// of blocks `j, j+1, …`. Acting matrices must be block lower triangular so
/// that every `N_j` is invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVectorPresentation<F> {
    block_dims: Vec<usize>,
    offsets: Vec<usize>,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> GradedVectorPresentation<F> {
    pub fn new(block_dims: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(block_dims.len() + 1);
        let mut acc = 0;
        for &d in &block_dims {
            offsets.push(acc);
            acc += d;
        }
        offsets.push(acc);
        GradedVectorPresentation {
            block_dims,
            offsets,
            _field: std::marker::PhantomData,
        }
    }

    pub fn total_dim(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    /// Whether `x` preserves the filtration.
    pub fn preserves_filtration(&self, x: &Matrix<F>) -> bool {
        let n = self.total_dim();
        if x.rows() != n || x.cols() != n {
            return false;
        }
        (0..self.block_dims.len()).all(|i| {
            (i + 1..self.block_dims.len()).all(|k| {
                x.block(self.offsets[i], self.offsets[i + 1], self.offsets[k], self.offsets[k + 1])
                    .is_zero()
            })
        })
    }
}

impl<F: Field> CentralSeriesPresentation for GradedVectorPresentation<F> {
    type Scalar = F;
    type Elem = Vector<F>;
    type Acting = Matrix<F>;

    fn levels(&self) -> usize {
        self.block_dims.len()
    }

    fn level_dim(&self, level: usize) -> usize {
        self.block_dims[level]
    }

    fn identity(&self) -> Vector<F> {
        Vector::zeros(self.total_dim())
    }

    fn project(&self, level: usize, n: &Vector<F>) -> Vector<F> {
        n.slice(self.offsets[level], self.offsets[level + 1])
    }

    fn section(&self, level: usize, v: &Vector<F>) -> Vector<F> {
        let before = Vector::zeros(self.offsets[level]);
        let after = Vector::zeros(self.total_dim() - self.offsets[level + 1]);
        before.concat(v).concat(&after)
    }

    fn level_action(&self, level: usize, x: &Matrix<F>) -> Matrix<F> {
        let (a, b) = (self.offsets[level], self.offsets[level + 1]);
        x.block(a, b, a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    #[test]
    fn graded_presentation_invariants() {
        let p = GradedVectorPresentation::<Rational>::new(vec![2, 1]);
        let x = Matrix::from_i64s(&[&[-1, 0, 0], &[0, -1, 0], &[3, 5, -1]]);
        assert!(p.preserves_filtration(&x));
        let upper = Matrix::from_i64s(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
        assert!(!p.preserves_filtration(&upper));
        let level0 = vec![Vector::from_i64s(&[1, 2]), Vector::from_i64s(&[-3, 0])];
        let level1 = vec![Vector::from_i64s(&[7])];
        let normal = vec![Vector::from_i64s(&[1, 1, 1])];
        check_presentation(&p, &[x], &normal, &[level0, level1]).unwrap();
    }
}
