//! State vectors and density operators.

use nalgebra::DMatrix;
use ndarray::Array2;
use num_complex::Complex64;

use super::basis::BasisDescriptor;
use crate::error::{Error, Result};

/// Pure state: complex amplitude vector over a described basis.
#[derive(Clone, Debug)]
pub struct StateVector {
    basis: BasisDescriptor,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(basis: BasisDescriptor, amplitudes: Vec<Complex64>) -> Self {
        assert_eq!(amplitudes.len(), basis.dim(), "amplitude length != basis dim");
        Self { basis, amplitudes }
    }

    /// The computational basis state with a single unit amplitude at `index`.
    pub fn basis_state(basis: BasisDescriptor, index: usize) -> Self {
        let mut amplitudes = vec![Complex64::ZERO; basis.dim()];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self { basis, amplitudes }
    }

    pub fn basis(&self) -> &BasisDescriptor {
        &self.basis
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!(
                "inner: {} vs {}",
                self.basis, other.basis
            )));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn normalize(mut self) -> Self {
        self.normalize_in_place();
        self
    }

    pub fn normalize_in_place(&mut self) {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        let inv = 1.0 / n;
        for a in &mut self.amplitudes {
            *a *= inv;
        }
    }

    pub fn scale(mut self, factor: Complex64) -> Self {
        for a in &mut self.amplitudes {
            *a *= factor;
        }
        self
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch("state add".into()));
        }
        let amplitudes = self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::new(self.basis.clone(), amplitudes))
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let basis = self.basis.tensor(&other.basis);
        let mut amplitudes = Vec::with_capacity(basis.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Self::new(basis, amplitudes)
    }

    /// `|psi><psi|` as a density operator.
    pub fn to_density(&self) -> DensityOperator {
        let dim = self.basis.dim();
        let mut m = Array2::zeros((dim, dim));
        for (i, a) in self.amplitudes.iter().enumerate() {
            for (j, b) in self.amplitudes.iter().enumerate() {
                m[(i, j)] = a * b.conj();
            }
        }
        DensityOperator::new(self.basis.clone(), m)
    }
}

/// Mixed state: trace-one positive-semidefinite complex matrix.
#[derive(Clone, Debug)]
pub struct DensityOperator {
    basis: BasisDescriptor,
    matrix: Array2<Complex64>,
}

impl DensityOperator {
    pub fn new(basis: BasisDescriptor, matrix: Array2<Complex64>) -> Self {
        assert_eq!(matrix.nrows(), basis.dim());
        assert_eq!(matrix.ncols(), basis.dim());
        Self { basis, matrix }
    }

    pub fn basis(&self) -> &BasisDescriptor {
        &self.basis
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.matrix
    }

    pub fn matrix_mut(&mut self) -> &mut Array2<Complex64> {
        &mut self.matrix
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.diag().iter().sum()
    }

    /// Convex mixture of density operators; weights must sum to one.
    pub fn mixture(parts: &[(f64, &DensityOperator)]) -> Result<Self> {
        let basis = parts
            .first()
            .ok_or_else(|| Error::InvalidParams("empty mixture".into()))?
            .1
            .basis
            .clone();
        let dim = basis.dim();
        let mut m = Array2::zeros((dim, dim));
        for (w, rho) in parts {
            if rho.basis != basis {
                return Err(Error::BasisMismatch("mixture".into()));
            }
            m = m + rho.matrix.mapv(|v| v * *w);
        }
        Ok(Self::new(basis, m))
    }

    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let d = (self.matrix[(i, j)] - self.matrix[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Eigenvalues of the hermitian part, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let dim = self.dim();
        let m = DMatrix::from_fn(dim, dim, |i, j| {
            0.5 * (self.matrix[(i, j)] + self.matrix[(j, i)].conj())
        });
        let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().cloned().collect();
        ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ev
    }

    pub fn smallest_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// `0.5 * ||self - other||_1`.
    pub fn trace_distance(&self, other: &Self) -> Result<f64> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch("trace_distance".into()));
        }
        let diff = Self::new(self.basis.clone(), &self.matrix - &other.matrix);
        Ok(0.5 * diff.eigenvalues().iter().map(|e| e.abs()).sum::<f64>())
    }

    /// Partial trace keeping the listed factors (in their original order).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityOperator> {
        let n = self.basis.n_factors();
        for &k in keep {
            if k >= n {
                return Err(Error::InvalidFactor { index: k, n_factors: n });
            }
        }
        let mut keep_sorted: Vec<usize> = keep.to_vec();
        keep_sorted.sort_unstable();
        keep_sorted.dedup();
        if keep_sorted.is_empty() {
            return Err(Error::InvalidParams("partial_trace: keep set is empty".into()));
        }
        let dims: Vec<usize> = self.basis.factors().iter().map(|f| f.dim()).collect();
        let strides = self.basis.strides();
        let traced: Vec<usize> = (0..n).filter(|i| !keep_sorted.contains(i)).collect();

        let kept_factors: Vec<_> = keep_sorted
            .iter()
            .map(|&i| self.basis.factors()[i].clone())
            .collect();
        let out_basis = BasisDescriptor::new(kept_factors);
        let out_dim = out_basis.dim();
        let mut out = Array2::<Complex64>::zeros((out_dim, out_dim));

        let kept_dim: usize = keep_sorted.iter().map(|&i| dims[i]).product();
        let traced_dim: usize = traced.iter().map(|&i| dims[i]).product();

        // decode a flat row-major index over the given factor subset into a
        // full-space offset
        let offset = |flat: usize, set: &[usize]| -> usize {
            let mut rem = flat;
            let mut off = 0;
            for (pos, &fi) in set.iter().enumerate() {
                let sub_dim: usize = set[pos + 1..].iter().map(|&j| dims[j]).product();
                let idx = rem / sub_dim;
                rem %= sub_dim;
                off += idx * strides[fi];
            }
            off
        };

        for ki in 0..kept_dim {
            let oi = offset(ki, &keep_sorted);
            for kj in 0..kept_dim {
                let oj = offset(kj, &keep_sorted);
                let mut acc = Complex64::ZERO;
                for t in 0..traced_dim {
                    let ot = offset(t, &traced);
                    acc += self.matrix[(oi + ot, oj + ot)];
                }
                out[(ki, kj)] = acc;
            }
        }
        Ok(DensityOperator::new(out_basis, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::basis::Factor;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn fock(n: usize) -> BasisDescriptor {
        BasisDescriptor::single(Factor::FockSpace { n_max: n - 1 })
    }

    #[test]
    fn normalize_hits_unit_norm() {
        let psi = StateVector::new(fock(3), vec![c(3.0), c(4.0), Complex64::new(0.0, 12.0)]);
        let psi = psi.normalize();
        assert_abs_diff_eq!(psi.norm_sq(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn product_state_partial_trace() {
        // trace field factor of |r><r| ⊗ |0><0| -> |r><r|
        let r = StateVector::new(fock(2), vec![c(0.6), c(0.8)]);
        let vac = StateVector::basis_state(fock(3), 0);
        let joint = r.tensor(&vac).to_density();
        let reduced = joint.partial_trace(&[0]).unwrap();
        let expect = r.to_density();
        for i in 0..2 {
            for j in 0..2 {
                assert_abs_diff_eq!(
                    reduced.matrix()[(i, j)].re,
                    expect.matrix()[(i, j)].re,
                    epsilon = 1e-14
                );
            }
        }
        assert_abs_diff_eq!(reduced.trace().re, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn entangled_pair_traces_to_maximally_mixed() {
        let basis = fock(2).tensor(&fock(2));
        let mut amps = vec![Complex64::ZERO; 4];
        amps[0] = c(1.0 / 2f64.sqrt()); // |00>
        amps[3] = c(1.0 / 2f64.sqrt()); // |11>
        let rho = StateVector::new(basis, amps).to_density();
        for keep in [0usize, 1] {
            let red = rho.partial_trace(&[keep]).unwrap();
            assert_abs_diff_eq!(red.matrix()[(0, 0)].re, 0.5, epsilon = 1e-14);
            assert_abs_diff_eq!(red.matrix()[(1, 1)].re, 0.5, epsilon = 1e-14);
            assert_abs_diff_eq!(red.matrix()[(0, 1)].norm(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let basis = fock(2).tensor(&fock(3)).tensor(&fock(2));
        let dim = basis.dim();
        // arbitrary normalized pure state
        let amps: Vec<Complex64> = (0..dim)
            .map(|k| Complex64::new((k as f64 * 0.37).sin(), (k as f64 * 0.83).cos()))
            .collect();
        let rho = StateVector::new(basis, amps).normalize().to_density();
        for keep in [vec![0], vec![1], vec![2], vec![0, 2], vec![0, 1, 2]] {
            let red = rho.partial_trace(&keep).unwrap();
            assert_abs_diff_eq!(red.trace().re, 1.0, epsilon = 1e-12);
            assert!(red.hermiticity_defect() < 1e-12);
        }
    }

    #[test]
    fn invalid_factor_index_rejected() {
        let rho = StateVector::basis_state(fock(2), 0).to_density();
        assert!(matches!(
            rho.partial_trace(&[3]),
            Err(Error::InvalidFactor { .. })
        ));
    }

    #[test]
    fn trace_distance_of_orthogonal_pures_is_one() {
        let a = StateVector::basis_state(fock(2), 0).to_density();
        let b = StateVector::basis_state(fock(2), 1).to_density();
        assert_abs_diff_eq!(a.trace_distance(&b).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(a.trace_distance(&a).unwrap(), 0.0, epsilon = 1e-12);
    }
}
