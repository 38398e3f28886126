//! Exact classical cluster engine of type A2: the order-5 mutation dynamics
//! on points and on the tropical integer plane, the piecewise canonical
//! basis indexed by tropical points, equivariance under the mutation
//! pullback, universal positivity, and multiplication in the basis.
//!
//! All arithmetic is exact: integer coefficients for Laurent polynomials,
//! arbitrary-precision rationals for point maps. Fractions are compared by
//! cross-multiplication, never reduced by multivariate gcd.

mod laurent;

pub use laurent::{rat_pow, LaurentFraction2, LaurentPoly2};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClusterError {
    #[error("point map hit a degenerate denominator")]
    DegeneratePoint,
    #[error("basis expansion did not terminate after {steps} eliminations")]
    BasisExpansionFailure { steps: usize },
}

/// A point of the tropical integer plane indexing the canonical basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TropicalPoint {
    pub a: i64,
    pub b: i64,
}

impl TropicalPoint {
    pub fn new(a: i64, b: i64) -> Self {
        TropicalPoint { a, b }
    }
}

/// One of the five linearity cones of the tropical plane.
///
/// Cone k is the domain of the k-th row of the piecewise basis formula:
/// 1: a<=0, b>=0; 2: a<=0, b<=0; 3: a>=0, b<=0; 4: a>=b>=0; 5: b>=a>=0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConeIndex(pub u8);

/// Tropicalized mutation `(a, b) -> (max(a, 0) - b, a)`; has order 5.
pub fn tropical_gamma(p: TropicalPoint) -> TropicalPoint {
    TropicalPoint::new(p.a.max(0) - p.b, p.a)
}

/// j-fold iterate of the tropical map.
pub fn tropical_gamma_iter(p: TropicalPoint, j: u32) -> TropicalPoint {
    let mut out = p;
    for _ in 0..j {
        out = tropical_gamma(out);
    }
    out
}

/// All cones containing `p`; boundary points belong to several.
pub fn cone_of(p: TropicalPoint) -> Vec<ConeIndex> {
    let (a, b) = (p.a, p.b);
    let mut out = Vec::new();
    if a <= 0 && b >= 0 {
        out.push(ConeIndex(1));
    }
    if a <= 0 && b <= 0 {
        out.push(ConeIndex(2));
    }
    if a >= 0 && b <= 0 {
        out.push(ConeIndex(3));
    }
    if a >= b && b >= 0 {
        out.push(ConeIndex(4));
    }
    if b >= a && a >= 0 {
        out.push(ConeIndex(5));
    }
    out
}

fn one_plus_x() -> LaurentPoly2 {
    LaurentPoly2::monomial(0, 0, 1).add(&LaurentPoly2::monomial(1, 0, 1))
}

fn one_plus_y() -> LaurentPoly2 {
    LaurentPoly2::monomial(0, 0, 1).add(&LaurentPoly2::monomial(0, 1, 1))
}

fn one_plus_x_plus_xy() -> LaurentPoly2 {
    one_plus_x().add(&LaurentPoly2::monomial(1, 1, 1))
}

fn one_plus_xinv() -> LaurentPoly2 {
    LaurentPoly2::monomial(0, 0, 1).add(&LaurentPoly2::monomial(-1, 0, 1))
}

fn one_plus_yinv() -> LaurentPoly2 {
    LaurentPoly2::monomial(0, 0, 1).add(&LaurentPoly2::monomial(0, -1, 1))
}

fn one_plus_yinv_plus_xinv_yinv() -> LaurentPoly2 {
    one_plus_yinv().add(&LaurentPoly2::monomial(-1, -1, 1))
}

/// Row `k` of the product form of the canonical map. Every denominator is
/// a monomial, so the result is a genuine Laurent polynomial.
fn row_product_form(k: u8, a: i64, b: i64) -> LaurentPoly2 {
    match k {
        1 => LaurentPoly2::monomial(a, b, 1),
        // ((1+X)/(XY))^{-b} X^a
        2 => one_plus_x().pow((-b) as u32).mul(&LaurentPoly2::monomial(a + b, b, 1)),
        // ((1+X+XY)/Y)^a ((1+X)/(XY))^{-b}
        3 => one_plus_x_plus_xy()
            .pow(a as u32)
            .mul(&one_plus_x().pow((-b) as u32))
            .mul(&LaurentPoly2::monomial(b, b - a, 1)),
        // ((1+Y)X)^b ((1+X+XY)/Y)^{a-b}
        4 => one_plus_y()
            .pow(b as u32)
            .mul(&one_plus_x_plus_xy().pow((a - b) as u32))
            .mul(&LaurentPoly2::monomial(b, b - a, 1)),
        // Y^{b-a} ((1+Y)X)^a
        5 => one_plus_y().pow(a as u32).mul(&LaurentPoly2::monomial(a, b - a, 1)),
        _ => unreachable!("cone index out of range"),
    }
}

/// Row `k` of the equivalent leading-monomial form `X^a Y^b * (...)`.
fn row_leading_form(k: u8, a: i64, b: i64) -> LaurentPoly2 {
    let lead = LaurentPoly2::monomial(a, b, 1);
    match k {
        1 => lead,
        2 => lead.mul(&one_plus_xinv().pow((-b) as u32)),
        3 => lead
            .mul(&one_plus_xinv().pow((-b) as u32))
            .mul(&one_plus_yinv_plus_xinv_yinv().pow(a as u32)),
        4 => lead
            .mul(&one_plus_yinv().pow(b as u32))
            .mul(&one_plus_yinv_plus_xinv_yinv().pow((a - b) as u32)),
        5 => lead.mul(&one_plus_yinv().pow(a as u32)),
        _ => unreachable!("cone index out of range"),
    }
}

/// The canonical basis element indexed by `p`, as a Laurent polynomial.
///
/// Both printed forms of every applicable row are expanded and checked to
/// agree before one is returned; on cone boundaries this also verifies the
/// overlap agreement.
pub fn canonical_ia(p: TropicalPoint) -> LaurentPoly2 {
    let cones = cone_of(p);
    assert!(!cones.is_empty(), "every tropical point lies in some cone");
    let mut result: Option<LaurentPoly2> = None;
    for ConeIndex(k) in cones {
        let prod = row_product_form(k, p.a, p.b);
        let lead = row_leading_form(k, p.a, p.b);
        assert_eq!(prod, lead, "the two displays disagree on row {k} at {p:?}");
        match &result {
            None => result = Some(prod),
            Some(prev) => assert_eq!(prev, &prod, "overlapping rows disagree at {p:?}"),
        }
    }
    result.unwrap()
}

/// Pullback of the mutation substitution `X -> Y^{-1}, Y -> (1+Y)X`
/// applied monomial by monomial.
///
/// Negative Y-exponents pick up genuine `(1+Y)` denominators, so the image
/// lives in fractions; everything is normalized over the single common
/// denominator `(1+Y)^D`.
pub fn pullback_gamma_x(f: &LaurentPoly2) -> LaurentFraction2 {
    let d = f
        .iter()
        .map(|(&(_, n), _)| if n < 0 { -n } else { 0 })
        .max()
        .unwrap_or(0);
    let mut num = LaurentPoly2::zero();
    for (&(m, n), &c) in f.iter() {
        // X^m Y^n -> Y^{-m} ((1+Y) X)^n = (1+Y)^n X^n Y^{-m}
        let piece = one_plus_y()
            .pow((n + d) as u32)
            .mul(&LaurentPoly2::monomial(n, -m, c));
        num = num.add(&piece);
    }
    LaurentFraction2::new(num, one_plus_y().pow(d as u32))
}

/// Equivariance of the canonical map: the pullback of the basis element at
/// the tropical image of `p` returns the basis element at `p`.
pub fn equivariance_check(p: TropicalPoint) -> bool {
    let lhs = pullback_gamma_x(&canonical_ia(tropical_gamma(p)));
    let rhs = LaurentFraction2::from_poly(canonical_ia(p));
    lhs.eq_cross(&rhs)
}

/// Universal positivity: all five tropical translates of `p` index Laurent
/// polynomials with strictly positive integer coefficients.
pub fn positivity_check(p: TropicalPoint) -> bool {
    (0..5).all(|j| canonical_ia(tropical_gamma_iter(p, j)).all_coeffs_positive())
}

/// The support of the basis element is dominated componentwise by `(a, b)`
/// (with coefficient 1 there), so `X^a Y^b` is the leading monomial.
pub fn leading_monomial_check(p: TropicalPoint) -> bool {
    let f = canonical_ia(p);
    if f.coeff(p.a, p.b) != 1 {
        return false;
    }
    let dominated = f.iter().all(|(&(m, n), _)| m <= p.a && n <= p.b);
    dominated
}

/// Point map realizing the coordinate substitution on the X-torus:
/// `(x, y) -> (1/y, (1+y) x)`. Exact order 5 away from degeneracies.
pub fn gamma_x_point(
    x: &BigRational,
    y: &BigRational,
) -> Result<(BigRational, BigRational), ClusterError> {
    if y.is_zero() {
        return Err(ClusterError::DegeneratePoint);
    }
    Ok((y.recip(), (BigRational::one() + y) * x))
}

/// Point map on the A-torus: `(A, B) -> ((1+A)/B, A)`.
pub fn gamma_a_point(
    a: &BigRational,
    b: &BigRational,
) -> Result<(BigRational, BigRational), ClusterError> {
    if b.is_zero() {
        return Err(ClusterError::DegeneratePoint);
    }
    Ok(((BigRational::one() + a) / b, a.clone()))
}

/// Expands `IA(p) * IA(p2)` over the canonical basis by greedy elimination
/// of leading monomials, ordered by total degree then by the first
/// coordinate. Returns the integer structure constants.
pub fn multiply_in_basis_classical(
    p: TropicalPoint,
    p2: TropicalPoint,
) -> Result<std::collections::BTreeMap<TropicalPoint, i64>, ClusterError> {
    let mut remainder = canonical_ia(p).mul(&canonical_ia(p2));
    let mut out = std::collections::BTreeMap::new();
    let max_steps = 10_000 + 100 * remainder.len();
    let mut steps = 0;
    while !remainder.is_zero() {
        steps += 1;
        if steps > max_steps {
            return Err(ClusterError::BasisExpansionFailure { steps });
        }
        let (&(m, n), &c) = remainder
            .iter()
            .max_by_key(|(&(m, n), _)| (m + n, m))
            .expect("nonzero polynomial has a maximal monomial");
        let r = TropicalPoint::new(m, n);
        remainder = remainder.sub(&canonical_ia(r).scale(c));
        debug_assert_eq!(remainder.coeff(m, n), 0);
        *out.entry(r).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Evaluates a basis expansion at an exact rational point; used by tests to
/// cross-check structure constants by evaluation.
pub fn eval_expansion(
    expansion: &std::collections::BTreeMap<TropicalPoint, i64>,
    x: &BigRational,
    y: &BigRational,
) -> BigRational {
    let mut acc = BigRational::zero();
    for (r, &c) in expansion {
        acc += canonical_ia(*r).eval_rational(x, y) * BigRational::from(BigInt::from(c));
    }
    acc
}

/// Text dump line for a basis element: `a b : [(m,n,coeff), ...]`.
pub fn dump_basis_line(p: TropicalPoint) -> String {
    format!("{} {} : {}", p.a, p.b, canonical_ia(p))
}

#[cfg(test)]
mod tests;
