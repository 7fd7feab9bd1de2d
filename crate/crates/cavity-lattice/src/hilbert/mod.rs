//! Basis-aware complex state-vector and operator algebra.
//!
//! All values are immutable after construction and safe to share across
//! threads; there is no interior mutability anywhere in this module.

pub mod basis;
pub mod fock;
pub mod linop;
pub mod state;

pub use basis::{BasisDescriptor, Factor};
pub use linop::LinOp;
pub use state::{DensityOperator, StateVector};

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn toy(dim: usize) -> BasisDescriptor {
        BasisDescriptor::single(Factor::FockSpace { n_max: dim - 1 })
    }

    fn random_op(dim: usize, seed: u64) -> LinOp {
        let mut triplets = Vec::new();
        let mut s = seed;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
        };
        for r in 0..dim {
            for c in 0..dim {
                triplets.push((r, c, Complex64::new(next(), next())));
            }
        }
        LinOp::from_triplets(toy(dim), triplets, false)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// expectation(A, psi) equals Tr(A |psi><psi|) for random states.
        #[test]
        fn expectation_matches_trace_route(seed in 0u64..1000, dim in 2usize..7) {
            let op = random_op(dim, seed);
            let mut s = seed.wrapping_add(99);
            let mut next = || {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((s >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
            };
            let amps: Vec<Complex64> = (0..dim).map(|_| Complex64::new(next(), next())).collect();
            let psi = StateVector::new(toy(dim), amps).normalize();
            let via_state = op.expectation(&psi).unwrap();
            let via_rho = op.expectation_rho(&psi.to_density()).unwrap();
            prop_assert!((via_state - via_rho).norm() < 1e-12);
        }

        /// kron associativity within 1e-14 elementwise.
        #[test]
        fn kron_associative(sa in 0u64..500, sb in 500u64..1000, sc in 1000u64..1500) {
            let a = random_op(2, sa);
            let b = random_op(3, sb);
            let c = random_op(2, sc);
            let left = LinOp::kron(&LinOp::kron(&a, &b), &c);
            let right = LinOp::kron(&a, &LinOp::kron(&b, &c));
            prop_assert!(left.max_abs_diff(&right) < 1e-14);
        }

        /// partial trace over all factors preserves the unit trace.
        #[test]
        fn partial_trace_total(seed in 0u64..1000) {
            let basis = toy(2).tensor(&toy(3));
            let mut s = seed;
            let mut next = || {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((s >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
            };
            let amps: Vec<Complex64> = (0..6).map(|_| Complex64::new(next(), next())).collect();
            let rho = StateVector::new(basis, amps).normalize().to_density();
            let full = rho.partial_trace(&[0, 1]).unwrap();
            prop_assert!((full.trace().re - 1.0).abs() < 1e-12);
            prop_assert!(full.trace().im.abs() < 1e-12);
        }
    }

    /// Partial trace of the organised/unorganised steady mixture over the
    /// field factor: weights (w, (1-w)/2, (1-w)/2) on the particle factor.
    #[test]
    fn mixture_partial_trace_weights() {
        use crate::hilbert::fock;
        let w = 0.4;
        let n_max = 12;
        let alpha = Complex64::new(0.3, -0.55);
        let occ = toy(3); // stands in for the three two-site occupation states
        let mi = StateVector::basis_state(occ.clone(), 1)
            .tensor(&fock::fock_state(n_max, 0));
        let minus = StateVector::basis_state(occ.clone(), 2)
            .tensor(&fock::coherent_state(n_max, -2.0 * alpha));
        let plus = StateVector::basis_state(occ.clone(), 0)
            .tensor(&fock::coherent_state(n_max, 2.0 * alpha));
        let rho = DensityOperator::mixture(&[
            (w, &mi.to_density()),
            ((1.0 - w) / 2.0, &minus.to_density()),
            ((1.0 - w) / 2.0, &plus.to_density()),
        ])
        .unwrap();
        let particle = rho.partial_trace(&[0]).unwrap();
        let m = particle.matrix();
        assert!((m[(1, 1)].re - 0.4).abs() < 1e-12);
        assert!((m[(2, 2)].re - 0.3).abs() < 1e-12);
        assert!((m[(0, 0)].re - 0.3).abs() < 1e-12);
        assert!((particle.trace().re - 1.0).abs() < 1e-12);
    }
}
