//! Contour quadrature for Phi and the identities built directly on it.

use super::{PhiParams, QuadratureConfig, SpecFunError};
use crate::exec;
use crate::quad;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Integrand `e^{-ipz} / (sh(pi p) sh(pi hbar p) p)` away from p = 0.
fn integrand(p: Complex64, z: Complex64, hbar: Complex64) -> Complex64 {
    let num = (-Complex64::i() * p * z).exp();
    num / ((PI * p).sinh() * (PI * hbar * p).sinh() * p)
}

/// Exponent `-1/4 * int_Omega ...` computed as one number. All callers that
/// need `log Phi` use this directly.
pub fn log_phi_integral(
    z: Complex64,
    params: &PhiParams,
    cfg: &QuadratureConfig,
) -> Result<Complex64, SpecFunError> {
    params.check_strip(z)?;
    let hbar = params.hbar();
    let r = cfg.radius(params, z)?;
    let cutoff = cfg.cutoff(params, z);

    let nonconv = |_| SpecFunError::QuadratureNonConvergence {
        tol: cfg.rel_tol,
        panels: cfg.max_panels,
    };

    // The two straight pieces fold into one integral over [r, T]:
    // g(p) + g(-p) = -2i sin(pz) / (sh(pi p) sh(pi hbar p) p).
    let seg = |p: f64| {
        let pc = Complex64::new(p, 0.0);
        let num = -2.0 * Complex64::i() * (pc * z).sin();
        num / ((PI * pc).sinh() * (PI * hbar * pc).sinh() * pc)
    };
    // Initial panel count keyed to the oscillation of sin(pz) and of
    // sh(pi hbar p) for complex hbar.
    let freq = z.re.abs() + PI * hbar.im.abs();
    let n_init = (((cutoff - r) * freq / 4.0).ceil() as usize).clamp(8, 4096);
    // Rough value first, then an absolute tolerance pinned to it.
    let rough = quad::adaptive_panelled(&seg, r, cutoff, n_init, 1e-6, cfg.max_panels).map_err(nonconv)?;
    let abs_tol = cfg.rel_tol * rough.value.norm().max(1.0);
    let segs = quad::adaptive_panelled(&seg, r, cutoff, n_init, abs_tol, cfg.max_panels).map_err(nonconv)?;

    // Upper semicircle from -r to r, traversed right-to-left in theta.
    let arc = |theta: f64| {
        let p = r * Complex64::new(theta.cos(), theta.sin());
        -integrand(p, z, hbar) * Complex64::i() * p
    };
    let arc_tol = cfg.rel_tol * (segs.value.norm().max(1.0));
    let arcv = quad::adaptive_panelled(&arc, 0.0, PI, 8, arc_tol, cfg.max_panels).map_err(nonconv)?;

    Ok(-(segs.value + arcv.value) / 4.0)
}

/// The quantum dilogarithm by its defining contour integral.
pub fn phi_integral(
    z: Complex64,
    params: &PhiParams,
    cfg: &QuadratureConfig,
) -> Result<Complex64, SpecFunError> {
    Ok(log_phi_integral(z, params, cfg)?.exp())
}

/// Batch evaluation at many points (data parallel).
pub fn phi_on_grid(
    points: &[Complex64],
    params: &PhiParams,
    cfg: &QuadratureConfig,
) -> Result<Vec<Complex64>, SpecFunError> {
    let results = exec::map_slice(points, |&z| phi_integral(z, params, cfg));
    results.into_iter().collect()
}

/// Phi continued above the convergence strip via the difference relation
/// `Phi(z) = Phi(z - 2 pi i hbar) (1 + q e^{z - 2 pi i hbar})`.
///
/// Only the upward continuation is provided: the region needed to walk
/// around the first zeros. Descending would run into the poles.
pub fn phi_extended(
    z: Complex64,
    params: &PhiParams,
    cfg: &QuadratureConfig,
) -> Result<Complex64, SpecFunError> {
    let hbar = params.hbar();
    let q = params.q();
    let step = Complex64::new(0.0, 2.0 * PI) * hbar;
    let safe = 0.5 * params.strip_halfwidth();
    let mut w = z;
    let mut factor = Complex64::new(1.0, 0.0);
    let mut guard = 0;
    while w.im > safe {
        w -= step;
        factor *= Complex64::new(1.0, 0.0) + q * w.exp();
        guard += 1;
        if guard > 64 {
            return Err(SpecFunError::StripViolation { z, halfwidth: params.strip_halfwidth() });
        }
    }
    Ok(phi_integral(w, params, cfg)? * factor)
}

/// Truncated product `Psi^q(x) = prod_{a=1..n_max} (1 + q^{2a-1} x)^{-1}`.
#[derive(Debug, Clone, Copy)]
pub struct PsiProduct {
    pub value: Complex64,
    /// Crude bound on the relative truncation error.
    pub tail_bound: f64,
}

pub fn psi_q(x: Complex64, q: Complex64, n_max: usize) -> Result<PsiProduct, SpecFunError> {
    let qn = q.norm();
    if qn >= 1.0 {
        return Err(SpecFunError::DivergentProduct(qn));
    }
    let mut value = Complex64::new(1.0, 0.0);
    let q2 = q * q;
    let mut qpow = q; // q^{2a-1}
    for a in 1..=n_max {
        let factor = Complex64::new(1.0, 0.0) + qpow * x;
        if factor.norm() < 1e-250 {
            return Err(SpecFunError::PoleHit(a));
        }
        value /= factor;
        qpow *= q2;
    }
    // Remaining factors differ from 1 by ~ |q|^{2a-1} |x|; sum the geometric tail.
    let tail = qpow.norm() * x.norm() / (1.0 - qn * qn).max(1e-12);
    Ok(PsiProduct { value, tail_bound: tail })
}

/// Phi as a ratio of two infinite products; needs `Im hbar > 0` so both
/// converge.
pub fn phi_product(
    z: Complex64,
    params: &PhiParams,
    n_max: usize,
) -> Result<Complex64, SpecFunError> {
    let hbar = params.hbar();
    if hbar.im <= 0.0 {
        return Err(SpecFunError::DivergentProduct(params.q().norm()));
    }
    let top = psi_q(z.exp(), params.q(), n_max)?;
    let inv_q_vee = (-Complex64::i() * PI / hbar).exp();
    let bottom = psi_q((z / hbar).exp(), inv_q_vee, n_max)?;
    Ok(top.value / bottom.value)
}

/// Residual of the q-side difference relation at real `z`, evaluated in the
/// centered form `Phi(z + i pi hbar) = Phi(z - i pi hbar)(1 + q e^{z - i pi hbar})`
/// so both arguments stay inside the strip for every `hbar > 0`.
pub fn diff_relation_q_residual(
    z: f64,
    params: &PhiParams,
    cfg: &QuadratureConfig,
) -> Result<f64, SpecFunError> {
    let hbar = params.hbar();
    let half = Complex64::new(0.0, PI) * hbar;
    let zc = Complex64::new(z, 0.0);
    let up = phi_integral(zc + half, params, cfg)?;
    let down = phi_integral(zc - half, params, cfg)?;
    let rhs = down * (Complex64::new(1.0, 0.0) + params.q() * (zc - half).exp());
    Ok((up - rhs).norm() / up.norm().max(1e-30))
}

/// Residual of the dual difference relation (shift by `2 pi i`), centered
/// the same way.
pub fn diff_relation_qvee_residual(
    z: f64,
    params: &PhiParams,
    cfg: &QuadratureConfig,
) -> Result<f64, SpecFunError> {
    let hbar = params.hbar();
    let half = Complex64::new(0.0, PI);
    let zc = Complex64::new(z, 0.0);
    let up = phi_integral(zc + half, params, cfg)?;
    let down = phi_integral(zc - half, params, cfg)?;
    let rhs = down * (Complex64::new(1.0, 0.0) + params.q_vee() * ((zc - half) / hbar).exp());
    Ok((up - rhs).norm() / up.norm().max(1e-30))
}

/// `|Phi^hbar(z) - Phi^{1/hbar}(z/hbar)|`; the substitution `p -> p/hbar`
/// in the defining integral exchanges the two sh factors.
pub fn duality_residual(
    z: Complex64,
    hbar: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, SpecFunError> {
    let a = PhiParams::real(hbar)?;
    let b = PhiParams::real(1.0 / hbar)?;
    let va = phi_integral(z, &a, cfg)?;
    let vb = phi_integral(z / hbar, &b, cfg)?;
    Ok((va - vb).norm())
}
