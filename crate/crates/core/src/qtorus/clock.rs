//! Clock-and-shift matrix models of the quantum torus at roots of unity.
//!
//! For odd N and `q = e^{2 pi i / N}` (so `q^2` is again primitive),
//! `X = alpha^{1/N} diag(q^2, q^4, ..., q^{2N})` and `Y = beta^{1/N} S`
//! with S the cyclic shift satisfy `X Y = q^2 Y X` exactly, and
//! `X^N = alpha Id`, `Y^N = beta Id`.

use super::element::QT2Element;
use super::QTorusError;
use num_complex::Complex64;
use std::f64::consts::PI;

type C64 = Complex64;

/// Small dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    pub n: usize,
    pub data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { n, data: vec![C64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: C64) {
        self.data[r * self.n + c] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        CMatrix { n: self.n, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// CSV dump with interleaved re/im columns.
    pub fn to_csv_interleaved(&self) -> String {
        let mut out = String::new();
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|c| {
                    let v = self.get(r, c);
                    format!("{},{}", v.re, v.im)
                })
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// `q^k` for the primitive N-th root `q = e^{2 pi i / N}`, with the
/// exponent reduced mod N so wrapped powers are bit-identical.
fn root_pow(n: usize, k: i64) -> C64 {
    let kk = k.rem_euclid(n as i64);
    (C64::i() * (2.0 * PI * kk as f64 / n as f64)).exp()
}

fn principal_root_pow(base: C64, m: i64, n: usize) -> C64 {
    if base == C64::new(1.0, 0.0) {
        return C64::new(1.0, 0.0);
    }
    (base.ln() * (m as f64 / n as f64)).exp()
}

/// The matrix of the normal-ordered monomial `X^m Y^n` in the model:
/// column j has its single entry at row (j + n) mod N.
fn monomial_matrix(dim: usize, m: i64, n: i64, alpha: C64, beta: C64) -> CMatrix {
    let mut out = CMatrix::zeros(dim);
    let scalar = principal_root_pow(alpha, m, dim) * principal_root_pow(beta, n, dim);
    for j in 0..dim {
        let r = (j as i64 + n).rem_euclid(dim as i64) as usize;
        // X^m acts on e_r by alpha^{m/N} q^{2 (r+1) m}.
        let v = scalar * root_pow(dim, 2 * (r as i64 + 1) * m);
        out.set(r, j, v);
    }
    out
}

/// Evaluates an element in the N-dimensional clock-shift model with
/// central parameters `X^N = alpha`, `Y^N = beta`.
pub fn clock_shift_model(
    u: &QT2Element,
    dim: usize,
    alpha: C64,
    beta: C64,
) -> Result<CMatrix, QTorusError> {
    if dim < 3 || dim % 2 == 0 {
        return Err(QTorusError::EvenN(dim));
    }
    let q = root_pow(dim, 1);
    let mut out = CMatrix::zeros(dim);
    for (&(m, n), c) in u.iter() {
        let mono = monomial_matrix(dim, m, n, alpha, beta);
        out = out.add(&mono.scale(c.eval(q)));
    }
    Ok(out)
}
