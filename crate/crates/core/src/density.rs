use nalgebra::{Matrix3, SVector};
use num_complex::Complex64;

/// Row-major flattening of a 3×3 density matrix: entry (i, j) lives at `3*i + j`.
pub type StateVector = SVector<Complex64, 9>;

#[inline]
pub(crate) const fn flat(i: usize, j: usize) -> usize {
    3 * i + j
}

/// 3×3 density matrix over the states {|1⟩, |2⟩, |3⟩} (zero-based indices
/// 0, 1, 2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix(Matrix3<Complex64>);

impl DensityMatrix {
    /// The bare ground state |1⟩⟨1|.
    pub fn ground() -> Self {
        Self::basis_population(0)
    }

    /// The projector |k⟩⟨k| (zero-based `k`).
    pub fn basis_population(k: usize) -> Self {
        let mut m = Matrix3::zeros();
        m[(k, k)] = Complex64::new(1.0, 0.0);
        Self(m)
    }

    /// Wraps a matrix without checking any invariant.
    pub fn from_matrix(m: Matrix3<Complex64>) -> Self {
        Self(m)
    }

    pub fn from_vector(v: &StateVector) -> Self {
        Self(Matrix3::from_fn(|i, j| v[flat(i, j)]))
    }

    pub fn to_vector(&self) -> StateVector {
        StateVector::from_fn(|k, _| self.0[(k / 3, k % 3)])
    }

    pub fn matrix(&self) -> &Matrix3<Complex64> {
        &self.0
    }

    /// Zero-based element access.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn trace_error(&self) -> f64 {
        (self.trace() - Complex64::new(1.0, 0.0)).norm()
    }

    /// max |ρ_ij − conj(ρ_ji)|.
    pub fn hermiticity_error(&self) -> f64 {
        let mut err: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                err = err.max((self.0[(i, j)] - self.0[(j, i)].conj()).norm());
            }
        }
        err
    }

    /// Projects onto the Hermitian part, (ρ + ρ†)/2.
    pub fn hermitized(&self) -> Self {
        Self((self.0 + self.0.adjoint()).scale(0.5))
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn eigenvalues(&self) -> [f64; 3] {
        let eig = self.hermitized().0.symmetric_eigen();
        let mut ev = [eig.eigenvalues[0], eig.eigenvalues[1], eig.eigenvalues[2]];
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// Checks the physical invariants: Hermitian and unit trace to `tol`, real
    /// populations in [−1e-9, 1 + 1e-9].
    pub fn is_physical(&self, tol: f64) -> bool {
        let pops_ok = (0..3).all(|k| {
            let d = self.0[(k, k)];
            d.im.abs() <= tol && d.re >= -1e-9 && d.re <= 1.0 + 1e-9
        });
        pops_ok && self.hermiticity_error() <= tol && self.trace_error() <= tol
    }

    /// Elementwise max |a_ij − b_ij|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.0 - other.0).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flattening_is_row_major() {
        let mut m = Matrix3::zeros();
        m[(0, 2)] = Complex64::new(2.0, -1.0);
        let rho = DensityMatrix::from_matrix(m);
        let v = rho.to_vector();
        assert_eq!(v[2], Complex64::new(2.0, -1.0));
        assert_eq!(DensityMatrix::from_vector(&v), rho);
    }

    #[test]
    fn ground_state_is_physical() {
        let g = DensityMatrix::ground();
        assert!(g.is_physical(1e-12));
        assert_eq!(g.eigenvalues(), [0.0, 0.0, 1.0]);
    }

    #[test]
    fn detects_non_hermitian() {
        let mut m = Matrix3::<f64>::identity()
            .scale(1.0 / 3.0)
            .map(|x| Complex64::new(x, 0.0));
        m[(0, 1)] = Complex64::new(0.1, 0.1);
        let rho = DensityMatrix::from_matrix(m);
        assert!(!rho.is_physical(1e-12));
        assert!(rho.hermitized().is_physical(1e-12));
    }
}
