//! The two-dimensional quantum torus over `Z[q, q^{-1}]`: normal-ordered
//! Laurent polynomials in X, Y with `X Y = q^2 Y X`, the star structure,
//! exact membership in the subspace whose mutation image stays Laurent,
//! the order-5 automorphism, the q-deformed canonical basis, the modular
//! double, and clock-shift matrix models at roots of unity.

mod clock;
mod element;
mod qlaurent;

pub use clock::{clock_shift_model, CMatrix};
pub use element::{
    apply_gamma_q, canonical_iaq, membership_lq_prime, multiply_in_basis_q, specialize_q1,
    termwise_symmetrization, LqPrimeDecomposition, QT2Element,
};
pub use qlaurent::QLaurent;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QTorusError {
    #[error("element is not in the Laurent-stable span: Y-degree {y_degree} fails divisibility")]
    NonMember { y_degree: i64 },
    #[error("basis expansion did not terminate after {steps} eliminations")]
    BasisExpansionFailure { steps: usize },
    #[error("clock-shift model needs an odd dimension >= 3, got {0}")]
    EvenN(usize),
}

/// An element of the modular double: a finite sum of pure tensors
/// (q-side, q_vee-side).
#[derive(Debug, Clone, Default)]
pub struct ModularDoubleElement {
    tensors: Vec<(QT2Element, QT2Element)>,
}

impl ModularDoubleElement {
    pub fn pure(left: QT2Element, right: QT2Element) -> Self {
        ModularDoubleElement { tensors: vec![(left, right)] }
    }

    pub fn from_tensors(tensors: Vec<(QT2Element, QT2Element)>) -> Self {
        ModularDoubleElement { tensors }
    }

    pub fn identity() -> Self {
        Self::pure(QT2Element::one(), QT2Element::one())
    }

    pub fn tensors(&self) -> &[(QT2Element, QT2Element)] {
        &self.tensors
    }

    /// Applies the mutation automorphism on both tensor factors.
    pub fn gamma(&self) -> Result<Self, QTorusError> {
        let mut out = Vec::with_capacity(self.tensors.len());
        for (l, r) in &self.tensors {
            out.push((apply_gamma_q(l)?, apply_gamma_q(r)?));
        }
        Ok(ModularDoubleElement { tensors: out })
    }
}

#[cfg(test)]
mod tests;
