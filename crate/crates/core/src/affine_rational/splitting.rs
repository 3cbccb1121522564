use crate::arith::{Field, Matrix, Vector};

use super::AffineRationalError;

/// `Fⁿ = ker(x − I) ⊕ im(x − I)` with an adapted basis.
///
/// `change_of_basis` has the kernel basis followed by the image basis as
/// columns, so `P⁻¹·x·P = diag(I, x_U)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenOneSplitting<F> {
    kernel_basis: Vec<Vector<F>>,
    image_basis: Vec<Vector<F>>,
    change_of_basis: Matrix<F>,
    inverse_change: Matrix<F>,
    restricted: Matrix<F>,
}

impl<F: Field> EigenOneSplitting<F> {
    pub fn kernel_basis(&self) -> &[Vector<F>] {
        &self.kernel_basis
    }

    pub fn image_basis(&self) -> &[Vector<F>] {
        &self.image_basis
    }

    pub fn change_of_basis(&self) -> &Matrix<F> {
        &self.change_of_basis
    }

    pub fn inverse_change(&self) -> &Matrix<F> {
        &self.inverse_change
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel_basis.len()
    }

    pub fn image_dim(&self) -> usize {
        self.image_basis.len()
    }

    pub fn dim(&self) -> usize {
        self.kernel_dim() + self.image_dim()
    }

    /// `x` restricted to `im(x − I)`, in the image basis.
    pub fn restricted(&self) -> &Matrix<F> {
        &self.restricted
    }

    /// Coordinates of `v` as `(kernel part, image part)`.
    pub fn project(&self, v: &Vector<F>) -> (Vector<F>, Vector<F>) {
        let coords = self.inverse_change.mul_vec(v);
        let k = self.kernel_dim();
        (coords.slice(0, k), coords.slice(k, self.dim()))
    }

    /// `P⁻¹·m·P`.
    pub fn to_adapted(&self, m: &Matrix<F>) -> Matrix<F> {
        &(&self.inverse_change * m) * &self.change_of_basis
    }

    /// `P·m·P⁻¹`.
    pub fn from_adapted(&self, m: &Matrix<F>) -> Matrix<F> {
        &(&self.change_of_basis * m) * &self.inverse_change
    }

    /// `P·(kernel, image)`.
    pub fn combine(&self, kernel: &Vector<F>, image: &Vector<F>) -> Vector<F> {
        self.change_of_basis.mul_vec(&kernel.concat(image))
    }
}

/// Splits `Fⁿ` at eigenvalue one for `x` with `x^m = I`, checking the
/// dimension count, trivial intersection and invariance exactly.
pub fn split_at_eigenvalue_one<F: Field>(x: &Matrix<F>, m: u64) -> Result<EigenOneSplitting<F>, AffineRationalError> {
    if !x.is_square() || !x.pow(m as i64)?.is_identity() {
        return Err(AffineRationalError::NotFiniteOrder { m });
    }
    let n = x.rows();
    let shifted = x - &Matrix::identity(n);
    let kernel_basis = shifted.kernel_basis();
    let image_basis = shifted.image_basis();
    if kernel_basis.len() + image_basis.len() != n {
        return Err(AffineRationalError::Splitting(format!(
            "dim ker = {}, dim im = {}, n = {n}",
            kernel_basis.len(),
            image_basis.len()
        )));
    }
    let columns: Vec<Vector<F>> = kernel_basis.iter().chain(&image_basis).cloned().collect();
    let change_of_basis = Matrix::from_columns(n, &columns);
    let inverse_change = change_of_basis
        .inverse()
        .map_err(|_| AffineRationalError::Splitting("kernel and image intersect".into()))?;
    let adapted = &(&inverse_change * x) * &change_of_basis;
    let k = kernel_basis.len();
    let expected = Matrix::identity(k).direct_sum(&adapted.block(k, n, k, n));
    if adapted != expected {
        return Err(AffineRationalError::Splitting(
            "x does not act as diag(I, x_U) in the adapted basis".into(),
        ));
    }
    Ok(EigenOneSplitting {
        kernel_basis,
        image_basis,
        change_of_basis,
        inverse_change,
        restricted: adapted.block(k, n, k, n),
    })
}

/// The image block `g_UU` of `g` in the adapted basis, after checking that
/// both mixing blocks vanish and that `g_UU·x_U·g_UU⁻¹ = x_U^k`.
pub fn extract_block_certificate<F: Field>(
    g: &Matrix<F>,
    x: &Matrix<F>,
    k: u64,
    splitting: &EigenOneSplitting<F>,
) -> Result<Matrix<F>, AffineRationalError> {
    let xk = x.pow(k as i64)?;
    if !g.is_invertible() || (g * x) != (&xk * g) {
        return Err(AffineRationalError::RejectedCertificate { k });
    }
    let adapted = splitting.to_adapted(g);
    let (kd, n) = (splitting.kernel_dim(), splitting.dim());
    let mut offending = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mixing = (i < kd) != (j < kd);
            if mixing && !adapted.get(i, j).is_zero() {
                offending.push((i, j, adapted.get(i, j).to_string()));
            }
        }
    }
    if !offending.is_empty() {
        return Err(AffineRationalError::BlockStructure { entries: offending });
    }
    let block = adapted.block(kd, n, kd, n);
    let xu = splitting.restricted();
    if (&block * xu) != (&xu.pow(k as i64)? * &block) {
        return Err(AffineRationalError::RejectedCertificate { k });
    }
    Ok(block)
}
