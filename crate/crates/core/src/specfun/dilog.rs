//! The dilogarithm `L2(x) = int_0^x log(1+t) dt/t` that governs the
//! small-hbar asymptotics of Phi. Sign convention: `L2(1) = pi^2 / 12`.

use super::SpecFunError;
use crate::quad;
use num_complex::Complex64;

/// Alternating series `sum (-1)^{n+1} x^n / n^2`, valid for |x| < 1.
fn series(x: Complex64, rel_tol: f64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0);
    for n in 1..10_000u32 {
        pow *= x;
        let term = pow * ((if n % 2 == 1 { 1.0 } else { -1.0 }) / (n as f64 * n as f64));
        sum += term;
        if term.norm() < rel_tol * sum.norm().max(1e-30) && n > 4 {
            break;
        }
    }
    sum
}

/// `L2(x)` by series near the origin and adaptive quadrature along the
/// straight path otherwise. The path must avoid the branch cut of
/// `log(1+t)` on `t <= -1`, which for a straight path only happens when
/// `x` is real with `x <= -1`.
pub fn dilog_l2(x: Complex64, rel_tol: f64) -> Result<Complex64, SpecFunError> {
    if x.im == 0.0 && x.re <= -1.0 {
        return Err(SpecFunError::BranchCut(x));
    }
    let r = x.norm();
    if r <= 0.7 {
        return Ok(series(x, rel_tol));
    }
    // Series up to s0 * x, then integrate log(1 + s x) / s over s in [s0, 1].
    let s0 = 0.7 / r;
    let head = series(x * s0, rel_tol);
    let f = |s: f64| {
        let t = x * s;
        (Complex64::new(1.0, 0.0) + t).ln() / s
    };
    let tail = quad::adaptive(&f, s0, 1.0, rel_tol * head.norm().max(1.0), 4000)
        .map_err(|_| SpecFunError::QuadratureNonConvergence { tol: rel_tol, panels: 4000 })?;
    Ok(head + tail.value)
}
