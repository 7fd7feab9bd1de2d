//! Sparse complex linear operators with basis bookkeeping.
//!
//! Operators are stored in compressed sparse row form. Model Hamiltonians
//! here are sums of Kronecker products of banded one-factor operators, so
//! CSR covers both the banded and the general case.

use ndarray::Array2;
use num_complex::Complex64;

use super::basis::BasisDescriptor;
use super::state::{DensityOperator, StateVector};
use crate::error::{Error, Result};

/// Complex linear operator on a described Hilbert space.
#[derive(Clone, Debug)]
pub struct LinOp {
    basis: BasisDescriptor,
    indptr: Vec<usize>,
    indices: Vec<usize>,
    data: Vec<Complex64>,
    hermitian: bool,
}

impl LinOp {
    /// Build from (row, col, value) triplets; duplicates are summed and
    /// explicit zeros dropped.
    pub fn from_triplets(
        basis: BasisDescriptor,
        mut triplets: Vec<(usize, usize, Complex64)>,
        hermitian: bool,
    ) -> Self {
        let dim = basis.dim();
        triplets.sort_by_key(|&(r, c, _)| (r, c));
        let mut merged: Vec<(usize, usize, Complex64)> = Vec::with_capacity(triplets.len());
        for (r, c, v) in triplets {
            assert!(r < dim && c < dim, "triplet ({r},{c}) out of range {dim}");
            match merged.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => merged.push((r, c, v)),
            }
        }
        merged.retain(|&(_, _, v)| v != Complex64::ZERO);
        let mut indptr = vec![0usize; dim + 1];
        for &(r, _, _) in &merged {
            indptr[r + 1] += 1;
        }
        for r in 0..dim {
            indptr[r + 1] += indptr[r];
        }
        let indices = merged.iter().map(|t| t.1).collect();
        let data = merged.iter().map(|t| t.2).collect();
        let op = Self { basis, indptr, indices, data, hermitian };
        debug_assert!(!op.hermitian || op.adjoint_defect() < 1e-12);
        op
    }

    pub fn zero(basis: BasisDescriptor) -> Self {
        let dim = basis.dim();
        Self {
            basis,
            indptr: vec![0; dim + 1],
            indices: Vec::new(),
            data: Vec::new(),
            hermitian: true,
        }
    }

    pub fn identity(basis: BasisDescriptor) -> Self {
        let dim = basis.dim();
        Self::from_diagonal(basis, &vec![Complex64::new(1.0, 0.0); dim])
    }

    pub fn from_diagonal(basis: BasisDescriptor, diag: &[Complex64]) -> Self {
        assert_eq!(diag.len(), basis.dim());
        let herm = diag.iter().all(|v| v.im == 0.0);
        let triplets = diag
            .iter()
            .enumerate()
            .map(|(i, &v)| (i, i, v))
            .collect();
        Self::from_triplets(basis, triplets, herm)
    }

    pub fn basis(&self) -> &BasisDescriptor {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn nnz(&self) -> usize {
        self.data.len()
    }

    pub fn is_hermitian_flagged(&self) -> bool {
        self.hermitian
    }

    /// Mark the operator hermitian after verifying `max|A - A†| < tol`.
    pub fn into_hermitian(mut self, tol: f64) -> Result<Self> {
        let defect = self.adjoint_defect();
        if defect >= tol {
            return Err(Error::InvalidParams(format!(
                "operator is not hermitian: max|A - A†| = {defect:.3e}"
            )));
        }
        self.hermitian = true;
        Ok(self)
    }

    /// Largest elementwise deviation from the adjoint.
    pub fn adjoint_defect(&self) -> f64 {
        let adj = self.dagger_raw();
        self.max_abs_diff(&adj)
    }

    /// Elementwise max |self - other| (same basis required by construction).
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.basis, other.basis);
        let mut worst = 0.0f64;
        for r in 0..self.dim() {
            let a = self.row(r);
            let b = other.row(r);
            let (mut i, mut j) = (0usize, 0usize);
            while i < a.0.len() || j < b.0.len() {
                let ca = a.0.get(i).copied().unwrap_or(usize::MAX);
                let cb = b.0.get(j).copied().unwrap_or(usize::MAX);
                let d = if ca == cb {
                    let v = (a.1[i] - b.1[j]).norm();
                    i += 1;
                    j += 1;
                    v
                } else if ca < cb {
                    i += 1;
                    a.1[i - 1].norm()
                } else {
                    j += 1;
                    b.1[j - 1].norm()
                };
                worst = worst.max(d);
            }
        }
        worst
    }

    fn row(&self, r: usize) -> (&[usize], &[Complex64]) {
        let (s, e) = (self.indptr[r], self.indptr[r + 1]);
        (&self.indices[s..e], &self.data[s..e])
    }

    /// Adjoint with the hermitian flag recomputed trivially.
    pub fn dagger(&self) -> Self {
        let mut out = self.dagger_raw();
        out.hermitian = self.hermitian;
        out
    }

    fn dagger_raw(&self) -> Self {
        let mut triplets = Vec::with_capacity(self.nnz());
        for r in 0..self.dim() {
            let (cols, vals) = self.row(r);
            for (&c, &v) in cols.iter().zip(vals) {
                triplets.push((c, r, v.conj()));
            }
        }
        Self::from_triplets(self.basis.clone(), triplets, false)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= factor;
        }
        out.hermitian = self.hermitian && factor.im == 0.0;
        out
    }

    /// Sum of two operators on the same basis.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!(
                "add: {} vs {}",
                self.basis, other.basis
            )));
        }
        let mut triplets = Vec::with_capacity(self.nnz() + other.nnz());
        for op in [self, other] {
            for r in 0..op.dim() {
                let (cols, vals) = op.row(r);
                for (&c, &v) in cols.iter().zip(vals) {
                    triplets.push((r, c, v));
                }
            }
        }
        Ok(Self::from_triplets(
            self.basis.clone(),
            triplets,
            self.hermitian && other.hermitian,
        ))
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!(
                "matmul: {} vs {}",
                self.basis, other.basis
            )));
        }
        let dim = self.dim();
        let mut triplets = Vec::new();
        let mut acc: Vec<Complex64> = vec![Complex64::ZERO; dim];
        let mut touched: Vec<usize> = Vec::new();
        for r in 0..dim {
            let (cols, vals) = self.row(r);
            for (&k, &v) in cols.iter().zip(vals) {
                let (kcols, kvals) = other.row(k);
                for (&c, &w) in kcols.iter().zip(kvals) {
                    if acc[c] == Complex64::ZERO {
                        touched.push(c);
                    }
                    acc[c] += v * w;
                }
            }
            for &c in &touched {
                triplets.push((r, c, acc[c]));
                acc[c] = Complex64::ZERO;
            }
            touched.clear();
        }
        Ok(Self::from_triplets(self.basis.clone(), triplets, false))
    }

    /// Kronecker product; the result basis is the concatenation of the
    /// operand factor lists and `(A ⊗ B)(x ⊗ y) = Ax ⊗ By`.
    pub fn kron(a: &Self, b: &Self) -> Self {
        let basis = a.basis.tensor(&b.basis);
        let db = b.dim();
        let mut triplets = Vec::with_capacity(a.nnz() * b.nnz());
        for ra in 0..a.dim() {
            let (acols, avals) = a.row(ra);
            for (&ca, &va) in acols.iter().zip(avals) {
                for rb in 0..db {
                    let (bcols, bvals) = b.row(rb);
                    for (&cb, &vb) in bcols.iter().zip(bvals) {
                        triplets.push((ra * db + rb, ca * db + cb, va * vb));
                    }
                }
            }
        }
        Self::from_triplets(basis, triplets, a.hermitian && b.hermitian)
    }

    /// Matrix-vector product into a caller-provided buffer (hot path).
    pub fn apply_into(&self, x: &[Complex64], y: &mut [Complex64]) {
        debug_assert_eq!(x.len(), self.dim());
        debug_assert_eq!(y.len(), self.dim());
        for (r, yr) in y.iter_mut().enumerate() {
            let (s, e) = (self.indptr[r], self.indptr[r + 1]);
            let mut acc = Complex64::ZERO;
            for (&c, &v) in self.indices[s..e].iter().zip(&self.data[s..e]) {
                acc += v * x[c];
            }
            *yr = acc;
        }
    }

    /// Exact matrix-vector product; the result is not renormalized.
    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        if *psi.basis() != self.basis {
            return Err(Error::BasisMismatch(format!(
                "apply: operator on {} vs state on {}",
                self.basis,
                psi.basis()
            )));
        }
        let mut out = vec![Complex64::ZERO; self.dim()];
        self.apply_into(psi.amplitudes(), &mut out);
        Ok(StateVector::new(self.basis.clone(), out))
    }

    /// `<psi| A |psi>`.
    pub fn expectation(&self, psi: &StateVector) -> Result<Complex64> {
        let a_psi = self.apply(psi)?;
        Ok(psi.inner(&a_psi).expect("bases match"))
    }

    /// `Tr(A rho)`.
    pub fn expectation_rho(&self, rho: &DensityOperator) -> Result<Complex64> {
        if *rho.basis() != self.basis {
            return Err(Error::BasisMismatch(format!(
                "expectation: operator on {} vs density operator on {}",
                self.basis,
                rho.basis()
            )));
        }
        let m = rho.matrix();
        let mut acc = Complex64::ZERO;
        for r in 0..self.dim() {
            let (cols, vals) = self.row(r);
            for (&c, &v) in cols.iter().zip(vals) {
                acc += v * m[(c, r)];
            }
        }
        Ok(acc)
    }

    pub fn to_dense(&self) -> Array2<Complex64> {
        let dim = self.dim();
        let mut out = Array2::zeros((dim, dim));
        for r in 0..dim {
            let (cols, vals) = self.row(r);
            for (&c, &v) in cols.iter().zip(vals) {
                out[(r, c)] += v;
            }
        }
        out
    }

    /// Gershgorin bound on the spectral radius: `max_r sum_c |A_rc|`.
    pub fn gershgorin_bound(&self) -> f64 {
        (0..self.dim())
            .map(|r| self.row(r).1.iter().map(|v| v.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Iterate stored entries as (row, col, value).
    pub fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..self.dim()).flat_map(move |r| {
            let (cols, vals) = self.row(r);
            cols.iter().zip(vals).map(move |(&c, &v)| (r, c, v))
        })
    }
}
