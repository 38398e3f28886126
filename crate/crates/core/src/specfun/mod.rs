//! The quantum dilogarithm and its functional identities.
//!
//! `Phi(z)` is defined as `exp(-1/4 * I(z))` where `I(z)` is a contour
//! integral of `e^{-ipz} / (sh(pi p) sh(pi hbar p) p)` along the real line,
//! detouring over the third-order singularity at `p = 0` by a small upper
//! semicircle. Everything else in this module (difference-relation
//! residuals, the infinite-product form, the dilogarithm asymptotics, the
//! modular duality) is a computable identity of that one function.

mod dilog;
mod phi;

pub use dilog::dilog_l2;
pub use phi::{
    diff_relation_q_residual, diff_relation_qvee_residual, duality_residual, log_phi_integral,
    phi_extended, phi_integral, phi_on_grid, phi_product, psi_q, PsiProduct,
};

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecFunError {
    #[error("hbar = {0} is outside the admissible half plane (need hbar > 0 real, or Re hbar > 0 with Im hbar >= 0)")]
    InvalidHbar(Complex64),
    #[error("z = {z} lies outside the convergence strip |Im z| < {halfwidth:.6}")]
    StripViolation { z: Complex64, halfwidth: f64 },
    #[error("quadrature did not reach tolerance {tol:e} within {panels} panels")]
    QuadratureNonConvergence { tol: f64, panels: usize },
    #[error("infinite product diverges: |q| = {0} >= 1")]
    DivergentProduct(f64),
    #[error("product factor 1 + q^{{2a-1}} x vanished at a = {0}")]
    PoleHit(usize),
    #[error("integration path from 0 to {0} crosses the logarithm branch cut t <= -1")]
    BranchCut(Complex64),
}

/// Planck parameter with its derived deformation parameters.
///
/// `q = e^{i pi hbar}` and `q_vee = e^{i pi / hbar}` are always recomputed
/// from `hbar`, so they can never go stale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiParams {
    hbar: Complex64,
}

impl PhiParams {
    pub fn new(hbar: Complex64) -> Result<Self, SpecFunError> {
        let ok = if hbar.im == 0.0 {
            hbar.re > 0.0
        } else {
            hbar.im > 0.0 && hbar.re > 0.0
        };
        if !ok || !hbar.is_finite() {
            return Err(SpecFunError::InvalidHbar(hbar));
        }
        Ok(PhiParams { hbar })
    }

    pub fn real(hbar: f64) -> Result<Self, SpecFunError> {
        Self::new(Complex64::new(hbar, 0.0))
    }

    pub fn hbar(&self) -> Complex64 {
        self.hbar
    }

    pub fn q(&self) -> Complex64 {
        (Complex64::i() * PI * self.hbar).exp()
    }

    pub fn q_vee(&self) -> Complex64 {
        (Complex64::i() * PI / self.hbar).exp()
    }

    /// Half-width of the convergence strip of the defining integral.
    pub fn strip_halfwidth(&self) -> f64 {
        PI * (1.0 + self.hbar.re)
    }

    /// Checks that `z` lies strictly inside the convergence strip.
    pub fn check_strip(&self, z: Complex64) -> Result<(), SpecFunError> {
        let hw = self.strip_halfwidth();
        if z.im.abs() >= hw || !z.is_finite() {
            return Err(SpecFunError::StripViolation { z, halfwidth: hw });
        }
        Ok(())
    }
}

/// Discretization of the integration contour.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    /// Target relative error of the returned value.
    pub rel_tol: f64,
    /// Total panel budget per integral.
    pub max_panels: usize,
    /// Detour radius at p = 0; `None` picks `min(1, 1/|hbar|)/4`, staying
    /// below the first denominator zeros at `p = +-i` and `+-i/hbar`.
    pub semicircle_radius: Option<f64>,
    /// Cutoff `T` for the |p| integration; `None` derives it from the
    /// explicit tail bound of the integrand.
    pub truncation: Option<f64>,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-12,
            max_panels: 20_000,
            semicircle_radius: None,
            truncation: None,
        }
    }
}

impl QuadratureConfig {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        QuadratureConfig { rel_tol, ..Default::default() }
    }

    pub(crate) fn radius(&self, params: &PhiParams, z: Complex64) -> Result<f64, SpecFunError> {
        let cap = 1.0_f64.min(1.0 / params.hbar().norm());
        // The integrand grows like e^{|z| r} on the detour, so the automatic
        // radius shrinks with |z| to keep cancellation noise below tolerance.
        let auto = (cap / 4.0).min(4.0 / z.norm().max(1.0));
        let r = self.semicircle_radius.unwrap_or(auto);
        if r <= 0.0 || r >= cap / 2.0 {
            // Mis-sized detour would approach the first denominator zeros.
            return Err(SpecFunError::InvalidHbar(params.hbar()));
        }
        Ok(r)
    }

    /// Truncation point from the tail bound
    /// `|integrand| <= C e^{(|Im z| - pi(1 + Re hbar)) |p|} / |p|`.
    pub(crate) fn cutoff(&self, params: &PhiParams, z: Complex64) -> f64 {
        if let Some(t) = self.truncation {
            return t;
        }
        let kappa = params.strip_halfwidth() - z.im.abs();
        debug_assert!(kappa > 0.0);
        // Solve e^{-kappa T} / (kappa T) ~ rel_tol / 40 by fixed point.
        let target = (self.rel_tol / 40.0).max(1e-300);
        let mut t = 30.0 / kappa;
        for _ in 0..4 {
            let denom = (kappa * t).max(1.0);
            t = (-(target * denom).ln()).max(1.0) / kappa;
        }
        t.max(2.0).max(1.0 / params.hbar().re + 1.0)
    }
}

/// Location of the (m, n) zero of Phi: `pi i ((2m-1) + (2n-1) hbar)`.
pub fn zero_location(m: u32, n: u32, hbar: Complex64) -> Complex64 {
    assert!(m >= 1 && n >= 1, "zeros are indexed from 1");
    Complex64::i() * PI * (Complex64::new((2 * m - 1) as f64, 0.0) + (2 * n - 1) as f64 * hbar)
}

/// Location of the (m, n) pole of Phi: the reflection of the zero.
pub fn pole_location(m: u32, n: u32, hbar: Complex64) -> Complex64 {
    -zero_location(m, n, hbar)
}

/// Residuals `|2 pi i hbar log Phi(z) - L2(e^z)|` for a list of small
/// positive `hbar`, using the directly computed exponent so there is no
/// `log(exp(...))` branch ambiguity.
pub fn asymptotic_residual(
    z: f64,
    hbars: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Vec<f64>, SpecFunError> {
    let target = dilog_l2(Complex64::new(z.exp(), 0.0), cfg.rel_tol)?;
    let mut out = Vec::with_capacity(hbars.len());
    for &h in hbars {
        let params = PhiParams::real(h)?;
        let logphi = log_phi_integral(Complex64::new(z, 0.0), &params, cfg)?;
        let lhs = Complex64::new(0.0, 2.0 * PI) * h * logphi;
        out.push((lhs - target).norm());
    }
    Ok(out)
}
