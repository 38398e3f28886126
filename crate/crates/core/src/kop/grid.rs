//! Grid discretization of the operator: uniform samples on [-L, L], a
//! direct O(N^2) transform, and a Bluestein chirp factorization of the
//! same sum through the FFT.

use super::{KConfig, KopError};
use crate::specfun::{phi_on_grid, PhiParams};
use crate::wspace::WVector;
use crate::{exec, quad, Complex64};
use rustfft::FftPlanner;
use std::f64::consts::PI;
use std::sync::Arc;

type C64 = Complex64;

/// Uniform real grid `x_k = -L + k Delta`, `Delta = 2L/N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub half_width: f64,
    pub size: usize,
}

impl GridSpec {
    pub fn new(half_width: f64, size: usize) -> Self {
        assert!(half_width > 0.0 && size >= 2);
        GridSpec { half_width, size }
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.size as f64
    }

    pub fn point(&self, k: usize) -> f64 {
        -self.half_width + k as f64 * self.spacing()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.size).map(|k| self.point(k)).collect()
    }
}

/// Complex samples on a grid; norms use the trapezoid rule.
#[derive(Debug, Clone)]
pub struct GridFunction {
    pub spec: GridSpec,
    pub values: Vec<C64>,
}

impl GridFunction {
    pub fn new(spec: GridSpec, values: Vec<C64>) -> Self {
        assert_eq!(values.len(), spec.size);
        assert!(values.iter().all(|v| v.is_finite()), "grid values must be finite");
        GridFunction { spec, values }
    }

    /// Samples an exact W vector on the grid.
    pub fn sample_wvector(spec: GridSpec, v: &WVector) -> Self {
        let points: Vec<C64> = spec.points().iter().map(|&x| C64::new(x, 0.0)).collect();
        GridFunction::new(spec, v.evaluate(&points))
    }

    pub fn zero(spec: GridSpec) -> Self {
        GridFunction::new(spec, vec![C64::new(0.0, 0.0); spec.size])
    }

    pub fn inner(&self, other: &Self) -> C64 {
        assert_eq!(self.spec, other.spec);
        let prods: Vec<C64> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .collect();
        let mut s = quad::pairwise_sum(&prods);
        s -= 0.5 * (prods[0] + prods[prods.len() - 1]);
        s * self.spec.spacing()
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.max(0.0).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest |value| among the outermost `edge` points on each side.
    pub fn boundary_max(&self, edge: usize) -> f64 {
        let n = self.values.len();
        let e = edge.min(n / 2);
        self.values[..e]
            .iter()
            .chain(self.values[n - e..].iter())
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.spec, other.spec);
        GridFunction::new(
            self.spec,
            self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn scale(&self, s: C64) -> Self {
        GridFunction::new(self.spec, self.values.iter().map(|v| v * s).collect())
    }
}

/// The grid operator with its per-(grid, hbar) precomputed Phi table and
/// chirp plans. Constructing it once amortizes the Phi quadrature across
/// many applications.
pub struct KGridOperator {
    pub spec: GridSpec,
    pub cfg: KConfig,
    phi: Vec<C64>,
    fft: Arc<dyn rustfft::Fft<f64>>,
    ifft: Arc<dyn rustfft::Fft<f64>>,
    /// FFT of the zero-padded chirp c_m = e^{-i theta m^2 / 2}.
    chirp_hat: Vec<C64>,
    /// e^{-i alpha k + i theta k^2 / 2} premultipliers.
    pre: Vec<C64>,
    fft_len: usize,
}

impl KGridOperator {
    pub fn new(spec: GridSpec, cfg: KConfig) -> Result<Self, KopError> {
        let params = PhiParams::real(cfg.hbar)?;
        let phi_cfg = crate::specfun::QuadratureConfig {
            rel_tol: cfg.quad.rel_tol.min(1e-12),
            ..cfg.quad
        };
        let points: Vec<C64> = spec.points().iter().map(|&x| C64::new(x, 0.0)).collect();
        let phi = phi_on_grid(&points, &params, &phi_cfg)?;

        let n = spec.size;
        let theta = spec.spacing() * spec.spacing() / (2.0 * PI * cfg.hbar);
        let alpha = spec.half_width * spec.spacing() / (2.0 * PI * cfg.hbar);
        let fft_len = (2 * n).next_power_of_two();
        let mut planner = FftPlanner::new();
        let fft = planner.plan_fft_forward(fft_len);
        let ifft = planner.plan_fft_inverse(fft_len);

        let mut chirp = vec![C64::new(0.0, 0.0); fft_len];
        for m in 0..n {
            let c = (-C64::i() * (theta * (m * m) as f64 / 2.0)).exp();
            chirp[m] = c;
            if m > 0 {
                chirp[fft_len - m] = c;
            }
        }
        fft.process(&mut chirp);

        let pre: Vec<C64> = (0..n)
            .map(|k| (C64::i() * (theta * (k * k) as f64 / 2.0 - alpha * k as f64)).exp())
            .collect();

        Ok(KGridOperator { spec, cfg, phi, fft, ifft, chirp_hat: chirp, pre, fft_len })
    }

    pub fn phi_values(&self) -> &[C64] {
        &self.phi
    }

    fn check_boundary(&self, f: &GridFunction) -> Result<(), KopError> {
        let peak = f.max_abs();
        if peak == 0.0 {
            return Ok(());
        }
        let edge_ratio = f.boundary_max(2) / peak;
        if edge_ratio > self.cfg.boundary_tol {
            return Err(KopError::BoundaryLeak { edge_ratio, tol: self.cfg.boundary_tol });
        }
        Ok(())
    }

    /// Direct evaluation of `(Kf)(z_j) = Delta sum_k f_k Phi_k e^{i x_k z_j / (2 pi hbar)}`.
    pub fn apply_direct(&self, f: &GridFunction) -> Result<GridFunction, KopError> {
        assert_eq!(f.spec, self.spec);
        self.check_boundary(f)?;
        let n = self.spec.size;
        let weighted: Vec<C64> = f.values.iter().zip(&self.phi).map(|(v, p)| v * p).collect();
        let xs = self.spec.points();
        let scale = self.spec.spacing() * self.cfg.scale_factor();
        let two_pi_h = 2.0 * PI * self.cfg.hbar;
        let values = exec::map_range(n, |j| {
            let z = self.spec.point(j);
            let terms: Vec<C64> = weighted
                .iter()
                .zip(&xs)
                .map(|(w, &x)| w * (C64::i() * (x * z / two_pi_h)).exp())
                .collect();
            quad::pairwise_sum(&terms) * scale
        });
        Ok(GridFunction::new(self.spec, values))
    }

    /// Chirp-factorized evaluation of the same sum:
    /// `x_k z_j = L^2 - L Delta (k + j) + Delta^2 k j` and
    /// `kj = (k^2 + j^2 - (k-j)^2)/2` turn the transform into one
    /// convolution with the chirp `e^{-i theta m^2/2}`.
    pub fn apply_fft(&self, f: &GridFunction) -> Result<GridFunction, KopError> {
        assert_eq!(f.spec, self.spec);
        self.check_boundary(f)?;
        let n = self.spec.size;
        let theta = self.spec.spacing() * self.spec.spacing() / (2.0 * PI * self.cfg.hbar);
        let alpha = self.spec.half_width * self.spec.spacing() / (2.0 * PI * self.cfg.hbar);
        let phi0 = self.spec.half_width * self.spec.half_width / (2.0 * PI * self.cfg.hbar);

        let mut a = vec![C64::new(0.0, 0.0); self.fft_len];
        for k in 0..n {
            a[k] = f.values[k] * self.phi[k] * self.pre[k];
        }
        self.fft.process(&mut a);
        for (av, cv) in a.iter_mut().zip(&self.chirp_hat) {
            *av *= cv;
        }
        self.ifft.process(&mut a);
        let inv_len = 1.0 / self.fft_len as f64;
        let scale = self.spec.spacing() * self.cfg.scale_factor();
        let values: Vec<C64> = (0..n)
            .map(|j| {
                let post = (C64::i() * (phi0 - alpha * j as f64 + theta * (j * j) as f64 / 2.0)).exp();
                a[j] * inv_len * post * scale
            })
            .collect();
        Ok(GridFunction::new(self.spec, values))
    }
}
