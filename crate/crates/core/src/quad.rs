//! Adaptive Gauss-Legendre quadrature for complex-valued integrands.
//!
//! Panels are refined recursively by comparing a 16-point rule against a
//! 32-point rule on the same panel; both integrands here are analytic on
//! their contours so the high-order rules converge quickly. Panel results
//! are accumulated in contour order with pairwise summation, which keeps
//! the result independent of how the work is scheduled.

use num_complex::Complex64;
use std::sync::OnceLock;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
///
/// Newton iteration on the Legendre recurrence, seeded with the Chebyshev
/// angle approximation; accurate to full f64 precision for the orders used
/// here.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev initial guess for the i-th positive root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn rule16() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(16))
}

fn rule32() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(32))
}

/// Sums complex values by pairwise reduction in slice order.
pub fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    match values.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let (a, b) = values.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

fn panel_estimate<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, rule: &(Vec<f64>, Vec<f64>)) -> Complex64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let vals: Vec<Complex64> = rule
        .0
        .iter()
        .zip(rule.1.iter())
        .map(|(&x, &w)| f(c + h * x) * w)
        .collect();
    pairwise_sum(&vals) * h
}

/// Outcome of an adaptive integration: value and an error estimate.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
}

/// Integrates `f` over `[a, b]` to absolute tolerance `abs_tol`.
///
/// `Err(())` means the panel budget was exhausted before the local error
/// estimates dropped below the requested tolerance.
pub fn adaptive<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_panels: usize,
) -> Result<QuadResult, ()> {
    let mut budget = max_panels as isize;
    let mut pieces: Vec<Complex64> = Vec::new();
    let mut err_total = 0.0;
    adaptive_rec(f, a, b, abs_tol, &mut budget, 0, &mut pieces, &mut err_total)?;
    Ok(QuadResult {
        value: pairwise_sum(&pieces),
        error: err_total,
    })
}

#[allow(clippy::too_many_arguments)]
fn adaptive_rec<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    budget: &mut isize,
    depth: u32,
    pieces: &mut Vec<Complex64>,
    err_total: &mut f64,
) -> Result<(), ()> {
    *budget -= 1;
    if *budget < 0 {
        return Err(());
    }
    let coarse = panel_estimate(f, a, b, rule16());
    let fine = panel_estimate(f, a, b, rule32());
    let err = (fine - coarse).norm();
    if err <= tol || depth >= 48 {
        if err > tol {
            // Depth cap hit; treat as non-convergence rather than accept junk.
            return Err(());
        }
        pieces.push(fine);
        *err_total += err;
        return Ok(());
    }
    let mid = 0.5 * (a + b);
    adaptive_rec(f, a, mid, 0.5 * tol, budget, depth + 1, pieces, err_total)?;
    adaptive_rec(f, mid, b, 0.5 * tol, budget, depth + 1, pieces, err_total)
}

/// Integrates `f` over `[a, b]`, splitting the interval into `initial`
/// equal panels before adapting. Useful when the integrand oscillates at a
/// known frequency: pick `initial` so each starting panel sees at most a
/// few periods.
pub fn adaptive_panelled<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    initial: usize,
    abs_tol: f64,
    max_panels: usize,
) -> Result<QuadResult, ()> {
    let n = initial.max(1);
    let mut budget = max_panels as isize;
    let mut pieces: Vec<Complex64> = Vec::new();
    let mut err_total = 0.0;
    let w = (b - a) / n as f64;
    for k in 0..n {
        let pa = a + k as f64 * w;
        let pb = if k + 1 == n { b } else { a + (k + 1) as f64 * w };
        adaptive_rec(f, pa, pb, abs_tol / n as f64, &mut budget, 0, &mut pieces, &mut err_total)?;
    }
    Ok(QuadResult {
        value: pairwise_sum(&pieces),
        error: err_total,
    })
}

/// Fixed-order panel plan over `[lo, hi]`: `n_panels` equal panels, each
/// carrying the 16- and 32-point nodes. Used by the operator quadrature,
/// where one plan is shared by many output points.
#[derive(Debug, Clone)]
pub struct PanelPlan {
    pub lo: f64,
    pub hi: f64,
    pub n_panels: usize,
    /// All 16-point nodes, then weights, panel by panel.
    pub coarse: Vec<(f64, f64)>,
    /// All 32-point nodes, then weights, panel by panel.
    pub fine: Vec<(f64, f64)>,
}

impl PanelPlan {
    pub fn new(lo: f64, hi: f64, n_panels: usize) -> Self {
        let n = n_panels.max(1);
        let w = (hi - lo) / n as f64;
        let r16 = rule16();
        let r32 = rule32();
        let mut coarse = Vec::with_capacity(16 * n);
        let mut fine = Vec::with_capacity(32 * n);
        for k in 0..n {
            let c = lo + (k as f64 + 0.5) * w;
            let h = 0.5 * w;
            for (&x, &wt) in r16.0.iter().zip(r16.1.iter()) {
                coarse.push((c + h * x, wt * h));
            }
            for (&x, &wt) in r32.0.iter().zip(r32.1.iter()) {
                fine.push((c + h * x, wt * h));
            }
        }
        PanelPlan { lo, hi, n_panels: n, coarse, fine }
    }

    /// Halves every panel width.
    pub fn refined(&self) -> Self {
        PanelPlan::new(self.lo, self.hi, self.n_panels * 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre(16);
        // Degree-31 polynomial must be exact for the 16-point rule.
        let val: f64 = x.iter().zip(w.iter()).map(|(&x, &w)| w * x.powi(30)).sum();
        let exact = 2.0 / 31.0;
        assert!((val - exact).abs() < 1e-14, "{val} vs {exact}");
        let total: f64 = w.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn adaptive_oscillatory() {
        // int_0^10 e^{i 7 x} dx
        let f = |x: f64| Complex64::new(0.0, 7.0 * x).exp();
        let got = adaptive(&f, 0.0, 10.0, 1e-13, 4000).unwrap().value;
        let expect = (Complex64::new(0.0, 70.0).exp() - Complex64::new(1.0, 0.0)) / Complex64::new(0.0, 7.0);
        assert!((got - expect).norm() < 1e-12);
    }

    #[test]
    fn pairwise_matches_naive() {
        let vals: Vec<Complex64> = (0..1001).map(|k| Complex64::new(1.0 / (k as f64 + 1.0), k as f64)).collect();
        let naive: Complex64 = vals.iter().sum();
        assert!((pairwise_sum(&vals) - naive).norm() < 1e-9 * naive.norm());
    }
}
