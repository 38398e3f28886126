use qdilog::kop::*;
use qdilog::wspace::WVector;

fn main() {
    // What does the pentagon actually measure at desk scale?
    for &hbar in &[0.5f64, 1.0, 1.7] {
        let mut cfg = PentagonConfig::new(hbar);
        cfg.grid = GridSpec::new(40.0, 2048);
        let t0 = std::time::Instant::now();
        let report = pentagon_check(&default_samples_probe(), &cfg).unwrap();
        println!(
            "hbar={hbar}: |lambda|={:.8} arg={:.6} residual={:.3e} spread={:.3e}  ({:?})",
            report.abs_lambda,
            report.lambda[1].atan2(report.lambda[0]),
            report.max_residual,
            report.spread,
            t0.elapsed()
        );
    }
}

fn default_samples_probe() -> Vec<WVector> {
    let mut out = Vec::new();
    let mut v = WVector::gaussian();
    for _ in 0..5 {
        out.push(v.clone());
        v = v.mul_x();
    }
    out
}
