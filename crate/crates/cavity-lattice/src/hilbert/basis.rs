//! Basis descriptors for tensor-product Hilbert spaces.
//!
//! Every state and operator carries a [`BasisDescriptor`], and binary
//! operations require identical descriptors. A descriptor is an ordered list
//! of factors; the total dimension is the product of factor dimensions and
//! indexing is row-major (the last factor varies fastest).

use serde::Serialize;

/// One tensor factor of a composite Hilbert space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Factor {
    /// Plane-wave modes `e^{i m K x}` on one lattice wavelength,
    /// `m = -cutoff ..= cutoff`.
    MomentumModes { cutoff: usize },
    /// Photon number states `|0>..=|n_max>`.
    FockSpace { n_max: usize },
    /// Two-site occupation states `(n_l, n_r)` with `n_l + n_r = n_particles`,
    /// ordered lexicographically in `(n_l, n_r)`, i.e. index = `n_l`.
    BHOccupation { n_particles: usize },
    /// Bosonic (symmetric) subspace of two `MomentumModes` factors; basis
    /// states are unordered mode pairs `{m1, m2}`.
    SymmetricPair { cutoff: usize },
}

impl Factor {
    pub fn dim(&self) -> usize {
        match *self {
            Factor::MomentumModes { cutoff } => 2 * cutoff + 1,
            Factor::FockSpace { n_max } => n_max + 1,
            Factor::BHOccupation { n_particles } => n_particles + 1,
            Factor::SymmetricPair { cutoff } => {
                let d = 2 * cutoff + 1;
                d * (d + 1) / 2
            }
        }
    }
}

/// Ordered list of tensor factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisDescriptor {
    factors: Vec<Factor>,
}

impl BasisDescriptor {
    pub fn new(factors: Vec<Factor>) -> Self {
        assert!(!factors.is_empty(), "basis needs at least one factor");
        Self { factors }
    }

    pub fn single(factor: Factor) -> Self {
        Self::new(vec![factor])
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn n_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).product()
    }

    /// Concatenation of factor lists, as produced by tensor products.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self { factors }
    }

    /// Row-major strides of each factor within a flat index.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.factors.len()];
        for i in (0..self.factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.factors[i + 1].dim();
        }
        strides
    }

    /// Position of the first factor matching `pred`, if any.
    pub fn find_factor(&self, pred: impl Fn(&Factor) -> bool) -> Option<usize> {
        self.factors.iter().position(pred)
    }
}

impl std::fmt::Display for BasisDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|fac| match *fac {
                Factor::MomentumModes { cutoff } => format!("momentum(M={cutoff})"),
                Factor::FockSpace { n_max } => format!("fock(n_max={n_max})"),
                Factor::BHOccupation { n_particles } => format!("occupation(N={n_particles})"),
                Factor::SymmetricPair { cutoff } => format!("sym-pair(M={cutoff})"),
            })
            .collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}
