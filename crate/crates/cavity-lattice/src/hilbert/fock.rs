//! Ladder operators and standard states on a truncated photon Fock space.
//!
//! On the truncated space the commutator `[a, a†]` equals the identity
//! everywhere except the top number state, where `a†|n_max> = 0` forces
//! `[a, a†]|n_max> = -n_max |n_max>`. Cutoffs must be chosen so that the
//! top states stay unpopulated.

use num_complex::Complex64;

use super::basis::{BasisDescriptor, Factor};
use super::linop::LinOp;
use super::state::StateVector;

pub fn fock_basis(n_max: usize) -> BasisDescriptor {
    BasisDescriptor::single(Factor::FockSpace { n_max })
}

/// Annihilation operator: `a|n> = sqrt(n) |n-1>`.
pub fn annihilation(n_max: usize) -> LinOp {
    let basis = fock_basis(n_max);
    let triplets = (1..=n_max)
        .map(|n| (n - 1, n, Complex64::new((n as f64).sqrt(), 0.0)))
        .collect();
    LinOp::from_triplets(basis, triplets, false)
}

/// Creation operator: `a†|n> = sqrt(n+1) |n+1>` (zero on the top state).
pub fn creation(n_max: usize) -> LinOp {
    annihilation(n_max).dagger()
}

/// Number operator `a†a`.
pub fn number(n_max: usize) -> LinOp {
    let basis = fock_basis(n_max);
    let diag: Vec<Complex64> = (0..=n_max)
        .map(|n| Complex64::new(n as f64, 0.0))
        .collect();
    LinOp::from_diagonal(basis, &diag)
}

/// Number state `|n>`.
pub fn fock_state(n_max: usize, n: usize) -> StateVector {
    assert!(n <= n_max);
    StateVector::basis_state(fock_basis(n_max), n)
}

/// Truncated coherent state, renormalized on the truncated space.
pub fn coherent_state(n_max: usize, alpha: Complex64) -> StateVector {
    let mut amps = Vec::with_capacity(n_max + 1);
    let mut term = Complex64::new(1.0, 0.0); // alpha^n / sqrt(n!)
    amps.push(term);
    for n in 1..=n_max {
        term *= alpha / Complex64::new((n as f64).sqrt(), 0.0);
        amps.push(term);
    }
    StateVector::new(fock_basis(n_max), amps).normalize()
}
