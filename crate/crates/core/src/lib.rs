//! Verification workbench for the quantum dilogarithm pentagon identity and
//! the exact algebra of the quantized moduli space of five cyclic points.
//!
//! The crate has two halves that meet in the middle:
//!
//! * numeric: [`specfun`] evaluates the quantum dilogarithm by adaptive
//!   contour quadrature, and [`kop`] discretizes the integral operator K
//!   built from it, checking unitarity, the intertwining identities and the
//!   pentagon relation `(unitary K)^5 = lambda * Id`.
//! * exact: [`wspace`] is a closed-form model of the Gaussian test space W,
//!   [`cluster`] the classical A2 cluster engine with its canonical basis,
//!   [`qtorus`] the quantum torus with the q-deformed basis and root-of-unity
//!   matrix models, and [`moduli`] the cross-ratio / chord-diagram geometry
//!   of configurations of five points with the Pluecker straightening.
//!
//! [`report`] bundles every acceptance check into one reproducible run.
//!
//! With the default `parallel` feature the embarrassingly parallel loops
//! (grid transforms, quadrature batches, exhaustive range sweeps) run on
//! rayon; without it everything falls back to equivalent sequential code.

pub mod cluster;
pub(crate) mod exec;
pub mod kop;
pub mod moduli;
pub mod qtorus;
pub mod quad;
pub mod report;
pub mod specfun;
pub mod wspace;

pub use num_complex::Complex64;
