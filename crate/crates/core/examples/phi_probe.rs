use qdilog::specfun::*;
use qdilog::Complex64;
fn main() {
    let params = PhiParams::real(1.0).unwrap();
    for &x in &[0.0, 1.0, 5.0, 10.0, 20.0, 30.0, 39.98, -39.98] {
        let cfg = QuadratureConfig::with_rel_tol(1e-12);
        let t0 = std::time::Instant::now();
        let r = phi_integral(Complex64::new(x, 0.0), &params, &cfg);
        match r {
            Ok(v) => println!("x={x:>7}: |phi|={:.12} took {:?}", v.norm(), t0.elapsed()),
            Err(e) => println!("x={x:>7}: ERR {e}"),
        }
    }
}
