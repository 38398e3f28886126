//! The pentagon check: five applications of the unitary-normalized
//! operator against the identity, with a least-squares unimodular fit.

use super::{apply_k_to_w, GridFunction, GridSpec, KConfig, KGridOperator, KopError};
use crate::specfun::QuadratureConfig;
use crate::wspace::WVector;
use crate::Complex64;
use serde::Serialize;

type C64 = Complex64;

#[derive(Debug, Clone)]
pub struct PentagonConfig {
    pub hbar: f64,
    pub grid: GridSpec,
    pub quad: QuadratureConfig,
    /// Boundary decay demanded of the grid iterates. The transform of a
    /// unit Gaussian has width ~ 2 pi hbar, so at the default desk scale
    /// the Hermite-type iterates carry edge values around 1e-8 of peak;
    /// truncation at this gate contributes well under the 1e-3 pentagon
    /// targets.
    pub boundary_tol: f64,
    /// Use the chirp/FFT fast path for the four grid applications.
    pub use_fft: bool,
}

impl PentagonConfig {
    pub fn new(hbar: f64) -> Self {
        PentagonConfig {
            hbar,
            grid: GridSpec::new(40.0, 4096),
            quad: QuadratureConfig::with_rel_tol(1e-10),
            boundary_tol: 1e-6,
            use_fft: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PentagonReport {
    pub hbar: f64,
    pub grid_half_width: f64,
    pub grid_size: usize,
    /// Mean fitted multiplier.
    pub lambda: [f64; 2],
    pub abs_lambda: f64,
    /// Per-sample least-squares fits.
    pub lambdas: Vec<[f64; 2]>,
    /// Largest relative fit residual over the samples.
    pub max_residual: f64,
    /// Relative spread of the per-sample multipliers.
    pub spread: f64,
}

/// Hermite-style default sample family `x^k e^{-x^2/2}`.
pub fn default_samples(count: usize) -> Vec<WVector> {
    let mut out = Vec::with_capacity(count);
    let mut v = WVector::gaussian();
    for _ in 0..count {
        out.push(v.clone());
        v = v.mul_x();
    }
    out
}

/// Applies the unitary-normalized operator five times to each sample (the
/// first application from the exact representation, the rest on the grid)
/// and fits `K^5 v = lambda v` per sample by least squares.
pub fn pentagon_check(samples: &[WVector], cfg: &PentagonConfig) -> Result<PentagonReport, KopError> {
    if samples.len() < 3 {
        return Err(KopError::InsufficientSamples);
    }
    for v in samples {
        if v.is_zero() || v.norm() < 1e-10 {
            return Err(KopError::DegenerateSample);
        }
    }
    if gram_rank(samples, 1e-8) < 3 {
        return Err(KopError::InsufficientSamples);
    }

    let kcfg = KConfig {
        hbar: cfg.hbar,
        quad: cfg.quad,
        rescale: true,
        boundary_tol: cfg.boundary_tol,
    };
    let op = KGridOperator::new(cfg.grid, kcfg.clone())?;
    let zs: Vec<C64> = cfg.grid.points().iter().map(|&z| C64::new(z, 0.0)).collect();

    let mut lambdas = Vec::with_capacity(samples.len());
    let mut max_residual: f64 = 0.0;
    for v in samples {
        let first = apply_k_to_w(v, &zs, &kcfg)?;
        let mut u = GridFunction::new(cfg.grid, first);
        for _ in 0..4 {
            u = if cfg.use_fft { op.apply_fft(&u)? } else { op.apply_direct(&u)? };
        }
        let v_grid = GridFunction::sample_wvector(cfg.grid, v);
        let denom = v_grid.inner(&v_grid);
        let lambda = u.inner(&v_grid) / denom;
        let residual = u.sub(&v_grid.scale(lambda)).norm() / v_grid.norm();
        lambdas.push(lambda);
        max_residual = max_residual.max(residual);
    }

    let mean = lambdas.iter().sum::<C64>() / lambdas.len() as f64;
    let mut spread: f64 = 0.0;
    for i in 0..lambdas.len() {
        for j in 0..i {
            spread = spread.max((lambdas[i] - lambdas[j]).norm());
        }
    }
    spread /= mean.norm().max(1e-300);

    Ok(PentagonReport {
        hbar: cfg.hbar,
        grid_half_width: cfg.grid.half_width,
        grid_size: cfg.grid.size,
        lambda: [mean.re, mean.im],
        abs_lambda: mean.norm(),
        lambdas: lambdas.iter().map(|l| [l.re, l.im]).collect(),
        max_residual,
        spread,
    })
}

fn gram_rank(samples: &[WVector], tol: f64) -> usize {
    let n = samples.len();
    let norms: Vec<f64> = samples.iter().map(|v| v.norm()).collect();
    let mut g = vec![vec![C64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            g[i][j] = crate::wspace::inner_product(&samples[i], &samples[j]) / (norms[i] * norms[j]);
        }
    }
    let mut rank = 0;
    for col in 0..n {
        let (piv, mag) = (rank..n)
            .map(|r| (r, g[r][col].norm()))
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap_or((rank, 0.0));
        if mag < tol {
            continue;
        }
        g.swap(rank, piv);
        let lead = g[rank][col];
        for r in 0..n {
            if r != rank {
                let f = g[r][col] / lead;
                for c in 0..n {
                    let sub = g[rank][c] * f;
                    g[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}
