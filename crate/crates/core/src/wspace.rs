//! Exact model of the test space W: finite sums of terms
//! `e^{-a x^2/2 + b x} P(x)` with `a > 0`, `b` complex and `P` a polynomial.
//!
//! The modular-double generators act in closed form and never leave W:
//! a shift `x -> x + s` maps `(a, b, P(x))` to
//! `(a, b - a s, e^{-a s^2/2 + b s} P(x + s))`, and multiplication by
//! `e^{m x}` just moves `b` to `b + m`. Inner products reduce to Gaussian
//! moments, so every identity on W is checked against closed forms rather
//! than grids.
//!
//! Coefficients and prefactors live in f64 complex arithmetic (>= 15
//! significant digits); "exact" equalities on W therefore mean agreement of
//! canonical forms up to last-ulp rounding of the transcendental
//! prefactors.

use crate::qtorus::{ModularDoubleElement, QT2Element};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

type C64 = Complex64;

const MERGE_TOL: f64 = 1e-12;

// ---- dense complex polynomials, ascending coefficients ----

fn poly_trim(p: &mut Vec<C64>) {
    while let Some(last) = p.last() {
        if last.re == 0.0 && last.im == 0.0 {
            p.pop();
        } else {
            break;
        }
    }
}

fn poly_add(a: &[C64], b: &[C64]) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    poly_trim(&mut out);
    out
}

fn poly_mul(a: &[C64], b: &[C64]) -> Vec<C64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_scale(a: &[C64], s: C64) -> Vec<C64> {
    let mut out: Vec<C64> = a.iter().map(|&c| c * s).collect();
    poly_trim(&mut out);
    out
}

/// P(x + s) by binomial expansion.
fn poly_shift(a: &[C64], s: C64) -> Vec<C64> {
    let n = a.len();
    let mut out = vec![C64::new(0.0, 0.0); n];
    for (j, &cj) in a.iter().enumerate() {
        // cj (x + s)^j contributes C(j, k) s^{j-k} to x^k.
        let mut binom = 1.0;
        let mut spow = C64::new(1.0, 0.0);
        for k in (0..=j).rev() {
            out[k] += cj * binom * spow;
            if k > 0 {
                binom = binom * k as f64 / (j - k + 1) as f64;
                spow *= s;
            }
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_eval(a: &[C64], x: C64) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for &c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_conj(a: &[C64]) -> Vec<C64> {
    a.iter().map(|c| c.conj()).collect()
}

// ---- Gaussian terms ----

/// One term `e^{-a x^2/2 + b x} P(x)`.
#[derive(Debug, Clone)]
pub struct GaussianTerm {
    pub a: f64,
    pub b: C64,
    /// Ascending coefficients of P; never empty in canonical form.
    pub poly: Vec<C64>,
}

impl GaussianTerm {
    pub fn new(a: f64, b: C64, poly: Vec<C64>) -> Self {
        assert!(a > 0.0, "Gaussian width parameter must be positive");
        GaussianTerm { a, b, poly }
    }

    fn eval(&self, x: C64) -> C64 {
        (-0.5 * self.a * x * x + self.b * x).exp() * poly_eval(&self.poly, x)
    }
}

/// Finite sum of Gaussian terms; the empty sum is 0.
#[derive(Debug, Clone, Default)]
pub struct WVector {
    terms: Vec<GaussianTerm>,
}

/// Serialized form: list of `{a, b_re, b_im, coeffs: [[re, im], ...]}`.
#[derive(Serialize, Deserialize)]
struct TermJson {
    a: f64,
    b_re: f64,
    b_im: f64,
    coeffs: Vec<[f64; 2]>,
}

impl WVector {
    pub fn zero() -> Self {
        WVector { terms: Vec::new() }
    }

    /// The unit-width Gaussian `e^{-x^2/2}`.
    pub fn gaussian() -> Self {
        WVector::from_terms(vec![GaussianTerm::new(
            1.0,
            C64::new(0.0, 0.0),
            vec![C64::new(1.0, 0.0)],
        )])
    }

    pub fn from_terms(terms: Vec<GaussianTerm>) -> Self {
        let mut v = WVector { terms };
        v.canonicalize();
        v
    }

    pub fn terms(&self) -> &[GaussianTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Canonical form: terms sorted by `(a, Re b, Im b)`, terms with equal
    /// keys merged by polynomial addition, zero polynomials dropped.
    fn canonicalize(&mut self) {
        for t in &mut self.terms {
            poly_trim(&mut t.poly);
        }
        self.terms.retain(|t| !t.poly.is_empty());
        self.terms.sort_by(|u, v| {
            (u.a, u.b.re, u.b.im)
                .partial_cmp(&(v.a, v.b.re, v.b.im))
                .expect("non-finite Gaussian parameters")
        });
        let mut merged: Vec<GaussianTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            if let Some(last) = merged.last_mut() {
                let same_a = (last.a - t.a).abs() <= MERGE_TOL * (1.0 + t.a.abs());
                let same_b = (last.b - t.b).norm() <= MERGE_TOL * (1.0 + t.b.norm());
                if same_a && same_b {
                    last.poly = poly_add(&last.poly, &t.poly);
                    continue;
                }
            }
            merged.push(t);
        }
        merged.retain(|t| !t.poly.is_empty());
        self.terms = merged;
    }

    pub fn add(&self, other: &WVector) -> WVector {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        WVector::from_terms(terms)
    }

    pub fn sub(&self, other: &WVector) -> WVector {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: C64) -> WVector {
        let terms = self
            .terms
            .iter()
            .map(|t| GaussianTerm { a: t.a, b: t.b, poly: poly_scale(&t.poly, s) })
            .collect();
        WVector::from_terms(terms)
    }

    /// Exact shift `f(x) -> f(x + s)` for complex `s`.
    pub fn shift(&self, s: C64) -> WVector {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let a = t.a;
                let prefactor = (-0.5 * a * s * s + t.b * s).exp();
                GaussianTerm {
                    a,
                    b: t.b - a * s,
                    poly: poly_scale(&poly_shift(&t.poly, s), prefactor),
                }
            })
            .collect();
        WVector::from_terms(terms)
    }

    /// Exact multiplication by `e^{m x}`.
    pub fn mul_exp(&self, m: C64) -> WVector {
        let terms = self
            .terms
            .iter()
            .map(|t| GaussianTerm { a: t.a, b: t.b + m, poly: t.poly.clone() })
            .collect();
        WVector::from_terms(terms)
    }

    /// Exact multiplication by the coordinate x.
    pub fn mul_x(&self) -> WVector {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut poly = vec![C64::new(0.0, 0.0)];
                poly.extend_from_slice(&t.poly);
                GaussianTerm { a: t.a, b: t.b, poly }
            })
            .collect();
        WVector::from_terms(terms)
    }

    pub fn evaluate(&self, points: &[C64]) -> Vec<C64> {
        points
            .iter()
            .map(|&x| {
                let vals: Vec<C64> = self.terms.iter().map(|t| t.eval(x)).collect();
                crate::quad::pairwise_sum(&vals)
            })
            .collect()
    }

    pub fn norm(&self) -> f64 {
        inner_product(self, self).re.max(0.0).sqrt()
    }

    pub fn to_json(&self) -> String {
        let items: Vec<TermJson> = self
            .terms
            .iter()
            .map(|t| TermJson {
                a: t.a,
                b_re: t.b.re,
                b_im: t.b.im,
                coeffs: t.poly.iter().map(|c| [c.re, c.im]).collect(),
            })
            .collect();
        serde_json::to_string(&items).expect("WVector serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<WVector, serde_json::Error> {
        let items: Vec<TermJson> = serde_json::from_str(s)?;
        Ok(WVector::from_terms(
            items
                .into_iter()
                .map(|t| {
                    GaussianTerm::new(
                        t.a,
                        C64::new(t.b_re, t.b_im),
                        t.coeffs.iter().map(|c| C64::new(c[0], c[1])).collect(),
                    )
                })
                .collect(),
        ))
    }
}

// ---- modular-double generators ----

/// `Xhat f(x) = f(x + 2 pi i hbar)`, with integer powers.
pub fn op_x_pow(v: &WVector, k: i64, hbar: f64) -> WVector {
    v.shift(C64::new(0.0, 2.0 * PI * hbar) * k as f64)
}

/// `Yhat f(x) = e^x f(x)`, with integer powers.
pub fn op_y_pow(v: &WVector, k: i64) -> WVector {
    v.mul_exp(C64::new(k as f64, 0.0))
}

/// `Xhat_vee f(x) = f(x + 2 pi i)`, with integer powers.
pub fn op_xvee_pow(v: &WVector, k: i64) -> WVector {
    v.shift(C64::new(0.0, 2.0 * PI) * k as f64)
}

/// `Yhat_vee f(x) = e^{x/hbar} f(x)`, with integer powers.
pub fn op_yvee_pow(v: &WVector, k: i64, hbar: f64) -> WVector {
    v.mul_exp(C64::new(k as f64 / hbar, 0.0))
}

pub fn op_x(v: &WVector, hbar: f64) -> WVector {
    op_x_pow(v, 1, hbar)
}

pub fn op_y(v: &WVector) -> WVector {
    op_y_pow(v, 1)
}

pub fn op_xvee(v: &WVector) -> WVector {
    op_xvee_pow(v, 1)
}

pub fn op_yvee(v: &WVector, hbar: f64) -> WVector {
    op_yvee_pow(v, 1, hbar)
}

/// One factor of an operator word.
#[derive(Debug, Clone, Copy)]
pub enum WordFactor {
    X(i64),
    Y(i64),
    Xvee(i64),
    Yvee(i64),
    Scalar(C64),
}

/// An ordered product of generators; `factors[0]` is the leftmost operator,
/// so the word `[X, Y]` acts as `Xhat(Yhat(v))`.
#[derive(Debug, Clone, Default)]
pub struct TorusOperatorWord {
    pub factors: Vec<WordFactor>,
}

impl TorusOperatorWord {
    pub fn new(factors: Vec<WordFactor>) -> Self {
        TorusOperatorWord { factors }
    }
}

pub fn apply_word(word: &TorusOperatorWord, v: &WVector, hbar: f64) -> WVector {
    let mut out = v.clone();
    for f in word.factors.iter().rev() {
        out = match *f {
            WordFactor::X(k) => op_x_pow(&out, k, hbar),
            WordFactor::Y(k) => op_y_pow(&out, k),
            WordFactor::Xvee(k) => op_xvee_pow(&out, k),
            WordFactor::Yvee(k) => op_yvee_pow(&out, k, hbar),
            WordFactor::Scalar(s) => out.scale(s),
        };
    }
    out
}

// ---- inner products via Gaussian moments ----

/// `int x^n e^{-alpha x^2 + beta x} dx` for `alpha > 0`, complex `beta`.
///
/// Base integral `sqrt(pi/alpha) e^{beta^2/(4 alpha)}`; the moments follow
/// from `x ~ mu + sigma g` with `mu = beta/(2 alpha)`,
/// `sigma^2 = 1/(2 alpha)`:
/// `m_n / m_0 = sum_j n! / ((n-2j)! 2^j j!) sigma^{2j} mu^{n-2j}`.
fn gaussian_moment(n: usize, alpha: f64, beta: C64) -> C64 {
    let base = C64::new(PI / alpha, 0.0).sqrt() * (beta * beta / (4.0 * alpha)).exp();
    let mu = beta / (2.0 * alpha);
    let sigma2 = 1.0 / (2.0 * alpha);
    let mut sum = C64::new(0.0, 0.0);
    for j in 0..=(n / 2) {
        let mut coeff = 1.0;
        for i in 0..2 * j {
            coeff *= (n - i) as f64; // falling factorial n (n-1) ... (n-2j+1)
        }
        for i in 1..=j {
            coeff /= 2.0 * i as f64; // 2^j j!
        }
        sum += mu.powu((n - 2 * j) as u32) * coeff * sigma2.powi(j as i32);
    }
    base * sum
}

/// Exact L2 inner product `(u, w) = int u(x) conj(w(x)) dx`.
pub fn inner_product(u: &WVector, w: &WVector) -> C64 {
    let mut pieces: Vec<C64> = Vec::new();
    for tu in u.terms() {
        for tw in w.terms() {
            let alpha = 0.5 * (tu.a + tw.a);
            let beta = tu.b + tw.b.conj();
            let prod = poly_mul(&tu.poly, &poly_conj(&tw.poly));
            for (n, &c) in prod.iter().enumerate() {
                if c.re != 0.0 || c.im != 0.0 {
                    pieces.push(c * gaussian_moment(n, alpha, beta));
                }
            }
        }
    }
    crate::quad::pairwise_sum(&pieces)
}

/// Seminorm `rho_B(f) = ||Bhat f||_{L2}` for a modular-double element `B`.
pub fn seminorm(b: &ModularDoubleElement, f: &WVector, hbar: f64) -> f64 {
    apply_modular_double(b, f, hbar).norm()
}

/// Realizes a normal-ordered quantum torus element on W via the q-side
/// generators: `X^m Y^n` acts as `Xhat^m Yhat^n` and the coefficient
/// Laurent polynomial is evaluated at `q = e^{i pi hbar}`.
pub fn apply_qt2_q_side(el: &QT2Element, v: &WVector, hbar: f64) -> WVector {
    let q = (C64::i() * PI * hbar).exp();
    let mut out = WVector::zero();
    for ((m, n), coeff) in el.iter() {
        let scalar = coeff.eval(q);
        let w = op_x_pow(&op_y_pow(v, *n), *m, hbar);
        out = out.add(&w.scale(scalar));
    }
    out
}

/// Dual-side realization: `X^m Y^n` acts as `Xhat_vee^m Yhat_vee^n` and
/// coefficients are evaluated at `q_vee = e^{i pi / hbar}`.
pub fn apply_qt2_qvee_side(el: &QT2Element, v: &WVector, hbar: f64) -> WVector {
    let qv = (C64::i() * PI / hbar).exp();
    let mut out = WVector::zero();
    for ((m, n), coeff) in el.iter() {
        let scalar = coeff.eval(qv);
        let w = op_xvee_pow(&op_yvee_pow(v, *n, hbar), *m);
        out = out.add(&w.scale(scalar));
    }
    out
}

/// Action of a modular-double element (sum of pure tensors).
pub fn apply_modular_double(a: &ModularDoubleElement, v: &WVector, hbar: f64) -> WVector {
    let mut out = WVector::zero();
    for (left, right) in a.tensors() {
        let first = apply_qt2_qvee_side(right, v, hbar);
        out = out.add(&apply_qt2_q_side(left, &first, hbar));
    }
    out
}
