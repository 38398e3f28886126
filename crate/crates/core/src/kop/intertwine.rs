//! Residuals of the intertwining identities: the three basic ones and the
//! general form for members of the modular double.
//!
//! Left sides act symbolically on W and then go through the quadrature;
//! right sides need K-values at complex shifted arguments, obtained from
//! the same quadrature (the integrand stays Gaussian-dominated for any
//! fixed imaginary shift of z).

use super::{apply_k_to_w, GridSpec, KConfig, KopError};
use crate::qtorus::ModularDoubleElement;
use crate::wspace::{self, WVector};
use crate::Complex64;
use std::f64::consts::PI;

type C64 = Complex64;

fn window_points(window: &GridSpec) -> Vec<C64> {
    window.points().iter().map(|&z| C64::new(z, 0.0)).collect()
}

fn rel_l2(diff: &[C64], reference: &[C64]) -> f64 {
    let num: f64 = diff.iter().map(|d| d.norm_sqr()).sum();
    let den: f64 = reference.iter().map(|d| d.norm_sqr()).sum();
    (num / den.max(1e-300)).sqrt()
}

/// Default z-window for residual norms: wide enough to see the shifted
/// arguments but still inside the region where K of a Gaussian is far from
/// underflow.
pub fn default_window(hbar: f64) -> GridSpec {
    GridSpec::new((2.0 * PI * hbar + 6.0).max(10.0), 301)
}

/// Relative L2 residual of basic identity `idx` on the window:
/// 1: `K (1+q Yhat) Xhat w = Yhat K w`
/// 2: `K Yhat^{-1} w = Xhat K w`
/// 3: `K Xhat^{-1} w = Yhat^{-1} (1 + q Xhat^{-1}) K w`
pub fn intertwine_basic(
    idx: u8,
    w: &WVector,
    cfg: &KConfig,
    window: &GridSpec,
) -> Result<f64, KopError> {
    let hbar = cfg.hbar;
    let q = (C64::i() * PI * hbar).exp();
    let zs = window_points(window);
    let shift = C64::new(0.0, 2.0 * PI * hbar);
    match idx {
        1 => {
            let xw = wspace::op_x(w, hbar);
            let lhs_vec = xw.add(&wspace::op_y(&xw).scale(q));
            let lhs = apply_k_to_w(&lhs_vec, &zs, cfg)?;
            let kw = apply_k_to_w(w, &zs, cfg)?;
            let rhs: Vec<C64> = zs.iter().zip(&kw).map(|(z, v)| z.exp() * v).collect();
            let diff: Vec<C64> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            Ok(rel_l2(&diff, &rhs))
        }
        2 => {
            let lhs_vec = wspace::op_y_pow(w, -1);
            let lhs = apply_k_to_w(&lhs_vec, &zs, cfg)?;
            let shifted: Vec<C64> = zs.iter().map(|z| z + shift).collect();
            let rhs = apply_k_to_w(w, &shifted, cfg)?;
            let diff: Vec<C64> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            Ok(rel_l2(&diff, &rhs))
        }
        3 => {
            let lhs_vec = wspace::op_x_pow(w, -1, hbar);
            let lhs = apply_k_to_w(&lhs_vec, &zs, cfg)?;
            let kw = apply_k_to_w(w, &zs, cfg)?;
            let down: Vec<C64> = zs.iter().map(|z| z - shift).collect();
            let kw_down = apply_k_to_w(w, &down, cfg)?;
            let rhs: Vec<C64> = zs
                .iter()
                .zip(kw.iter().zip(&kw_down))
                .map(|(z, (a, b))| (-z).exp() * (a + q * b))
                .collect();
            let diff: Vec<C64> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            Ok(rel_l2(&diff, &rhs))
        }
        _ => panic!("basic identity index must be 1, 2 or 3"),
    }
}

/// Action of a normal-ordered modular-double element on a function of z
/// known through `eval(z)`; monomial `X^m Y^n (x) X^m' Y^n'` acts by
/// `e^{n(z + Sx)} e^{n'(z + Sx + Sv)/hbar} g(z + Sx + Sv)` with
/// `Sx = 2 pi i hbar m`, `Sv = 2 pi i m'`.
fn act_on_image(
    a: &ModularDoubleElement,
    w: &WVector,
    zs: &[C64],
    cfg: &KConfig,
) -> Result<Vec<C64>, KopError> {
    let hbar = cfg.hbar;
    let q = (C64::i() * PI * hbar).exp();
    let qv = (C64::i() * PI / hbar).exp();
    let mut out = vec![C64::new(0.0, 0.0); zs.len()];
    for (left, right) in a.tensors() {
        for ((m, n), cl) in left.iter() {
            let sx = C64::new(0.0, 2.0 * PI * hbar) * *m as f64;
            for ((mv, nv), cr) in right.iter() {
                let sv = C64::new(0.0, 2.0 * PI) * *mv as f64;
                let total = sx + sv;
                let scalar = cl.eval(q) * cr.eval(qv);
                let shifted: Vec<C64> = zs.iter().map(|z| z + total).collect();
                let g = apply_k_to_w(w, &shifted, cfg)?;
                for (o, (z, gv)) in out.iter_mut().zip(zs.iter().zip(&g)) {
                    let mult = ((z + sx) * *n as f64).exp() * ((z + total) / hbar * *nv as f64).exp();
                    *o += scalar * mult * gv;
                }
            }
        }
    }
    Ok(out)
}

/// Relative L2 residual of `K (gamma(A))hat w - Ahat K w` on the window.
pub fn intertwine_general(
    a: &ModularDoubleElement,
    w: &WVector,
    cfg: &KConfig,
    window: &GridSpec,
) -> Result<f64, KopError> {
    let zs = window_points(window);
    let gamma_a = a.gamma()?;
    let lhs_vec = wspace::apply_modular_double(&gamma_a, w, cfg.hbar);
    let lhs = if lhs_vec.is_zero() {
        vec![C64::new(0.0, 0.0); zs.len()]
    } else {
        apply_k_to_w(&lhs_vec, &zs, cfg)?
    };
    let rhs = act_on_image(a, w, &zs, cfg)?;
    let diff: Vec<C64> = lhs.iter().zip(&rhs).map(|(x, y)| x - y).collect();
    Ok(rel_l2(&diff, &rhs))
}
