//! The integral operator built from the quantum dilogarithm:
//! `Kf(z) = int f(x) Phi(x) e^{i x z / (2 pi hbar)} dx`.
//!
//! Two realizations feed each other: adaptive quadrature straight from the
//! exact W representation (works at complex z, used for first applications
//! and for the intertwining identities), and a grid discretization with a
//! direct O(N^2) transform plus an optional chirp-factorized FFT fast path
//! that must agree with it.
//!
//! The literal kernel scales L2 norms by `2 pi sqrt(hbar)`; the `rescale`
//! flag divides that factor out, which is the normalization whose fifth
//! power is a unimodular multiple of the identity.

mod grid;
mod intertwine;
mod pentagon;
mod wquad;

pub use grid::{GridFunction, GridSpec, KGridOperator};
pub use intertwine::{intertwine_basic, intertwine_general};
pub use pentagon::{pentagon_check, PentagonConfig, PentagonReport};
pub use wquad::apply_k_to_w;

use crate::qtorus::QTorusError;
use crate::specfun::{QuadratureConfig, SpecFunError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KopError {
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error("input has not decayed at the grid boundary: |f|_edge / |f|_peak = {edge_ratio:e} > {tol:e}")]
    BoundaryLeak { edge_ratio: f64, tol: f64 },
    #[error("operator quadrature did not converge to the requested tolerance")]
    QuadratureNonConvergence,
    #[error("sample is degenerate (zero, or a norm below 1e-10)")]
    DegenerateSample,
    #[error("need at least 3 linearly independent samples")]
    InsufficientSamples,
    #[error(transparent)]
    NonMember(#[from] QTorusError),
}

/// Parameters of one operator realization.
#[derive(Debug, Clone)]
pub struct KConfig {
    pub hbar: f64,
    pub quad: QuadratureConfig,
    /// Divide by `2 pi sqrt(hbar)` so the operator is unitary.
    pub rescale: bool,
    /// Relative boundary decay demanded of grid inputs.
    pub boundary_tol: f64,
}

impl KConfig {
    pub fn new(hbar: f64) -> Self {
        assert!(hbar > 0.0, "the contour-shift argument requires hbar > 0");
        KConfig {
            hbar,
            quad: QuadratureConfig::with_rel_tol(1e-10),
            rescale: false,
            boundary_tol: 1e-12,
        }
    }

    pub fn unitary(hbar: f64) -> Self {
        KConfig { rescale: true, ..KConfig::new(hbar) }
    }

    pub(crate) fn scale_factor(&self) -> f64 {
        if self.rescale {
            1.0 / (2.0 * std::f64::consts::PI * self.hbar.sqrt())
        } else {
            1.0
        }
    }
}
