//! Normal-ordered quantum torus elements, the Laurent-stable span, the
//! order-5 automorphism and the q-deformed canonical basis.

use super::qlaurent::QLaurent;
use super::QTorusError;
use crate::cluster::{tropical_gamma, LaurentPoly2, TropicalPoint};
use std::collections::BTreeMap;
use std::fmt;

/// `sum c_{mn}(q) X^m Y^n` in normal order (all X to the left of all Y).
///
/// Multiplication reorders via `Y^b X^c = q^{-2bc} X^c Y^b`; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QT2Element {
    terms: BTreeMap<(i64, i64), QLaurent>,
}

impl QT2Element {
    pub fn zero() -> Self {
        QT2Element { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QT2Element::monomial(0, 0)
    }

    /// `X^m Y^n` with coefficient 1.
    pub fn monomial(m: i64, n: i64) -> Self {
        QT2Element::monomial_scaled(m, n, QLaurent::one())
    }

    pub fn monomial_scaled(m: i64, n: i64, c: QLaurent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((m, n), c);
        }
        QT2Element { terms }
    }

    /// The star-invariant monomial `M(m, n) = q^{-mn} X^m Y^n`.
    pub fn sym_monomial(m: i64, n: i64) -> Self {
        QT2Element::monomial_scaled(m, n, QLaurent::q_power(-m * n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: i64, n: i64) -> QLaurent {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(QLaurent::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &QLaurent)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&k, c) in &other.terms {
            let e = terms.entry(k).or_insert_with(QLaurent::zero);
            *e = e.add(c);
            if e.is_zero() {
                terms.remove(&k);
            }
        }
        QT2Element { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_q(&QLaurent::from_int(-1)))
    }

    pub fn scale_q(&self, s: &QLaurent) -> Self {
        if s.is_zero() {
            return QT2Element::zero();
        }
        QT2Element {
            terms: self.terms.iter().map(|(&k, c)| (k, c.mul(s))).collect(),
        }
    }

    /// Product in normal order: `(X^a Y^b)(X^c Y^d) = q^{-2bc} X^{a+c} Y^{b+d}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<(i64, i64), QLaurent> = BTreeMap::new();
        for (&(a, b), c1) in &self.terms {
            for (&(cc, d), c2) in &other.terms {
                let key = (a + cc, b + d);
                let coeff = c1.mul(c2).mul(&QLaurent::q_power(-2 * b * cc));
                let e = terms.entry(key).or_insert_with(QLaurent::zero);
                *e = e.add(&coeff);
                if e.is_zero() {
                    terms.remove(&key);
                }
            }
        }
        QT2Element { terms }
    }

    /// The involutive antiautomorphism with `*q = q^{-1}`, `*X = X`,
    /// `*Y = Y`: termwise `c(q) X^m Y^n -> c(q^{-1}) q^{-2mn} X^m Y^n`.
    pub fn star(&self) -> Self {
        QT2Element {
            terms: self
                .terms
                .iter()
                .map(|(&(m, n), c)| ((m, n), c.bar().mul(&QLaurent::q_power(-2 * m * n))))
                .collect(),
        }
    }

    pub fn is_star_invariant(&self) -> bool {
        self.star() == *self
    }

    /// All coefficients lie in `Z_{>=0}[q, q^{-1}]`.
    pub fn all_coeffs_positive(&self) -> bool {
        self.terms.values().all(|c| c.all_coeffs_positive())
    }

    /// The support is dominated componentwise by `(a, b)` and the
    /// coefficient there is exactly `q^{-ab}`.
    pub fn has_leading_sym_monomial(&self, a: i64, b: i64) -> bool {
        self.coeff(a, b) == QLaurent::q_power(-a * b)
            && self.terms.keys().all(|&(m, n)| m <= a && n <= b)
    }
}

impl fmt::Display for QT2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (&(m, n), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({m}, {n}, {c})")?;
        }
        write!(f, "]")
    }
}

/// Substitution q = 1 onto the commutative Laurent ring.
pub fn specialize_q1(u: &QT2Element) -> LaurentPoly2 {
    let mut out = LaurentPoly2::zero();
    for (&(m, n), c) in u.iter() {
        out = out.add(&LaurentPoly2::monomial(m, n, c.at_one()));
    }
    out
}

/// Decomposition of a member of the Laurent-stable span.
///
/// Nonnegative Y-degrees pass through unchanged; each Y-degree `-k < 0`
/// carries the quotient of its X-coefficient by
/// `D_k(X) = prod_{j=0}^{k-1} (1 + q^{-2j-1} X^{-1})`, the normal-ordered
/// tail of the spanning elements.
#[derive(Debug, Clone, Default)]
pub struct LqPrimeDecomposition {
    /// (X-power, Y-power >= 0) -> coefficient.
    pub nonneg: BTreeMap<(i64, i64), QLaurent>,
    /// k > 0 -> quotient as X-Laurent (X-power -> coefficient).
    pub neg: BTreeMap<i64, BTreeMap<i64, QLaurent>>,
}

/// Dense ascending coefficients of `D_k` in `t = X^{-1}`.
fn dk_dense(k: usize) -> Vec<QLaurent> {
    let mut d = vec![QLaurent::one()];
    for j in 0..k {
        let factor = QLaurent::q_power(-(2 * j as i64 + 1));
        let mut next = vec![QLaurent::zero(); d.len() + 1];
        for (i, c) in d.iter().enumerate() {
            next[i] = next[i].add(c);
            next[i + 1] = next[i + 1].add(&c.mul(&factor));
        }
        d = next;
    }
    d
}

/// Tests exact divisibility of the X-Laurent polynomial `c` by `D_k` and
/// returns the quotient, or None.
fn divide_by_dk(c: &BTreeMap<i64, QLaurent>, k: usize) -> Option<BTreeMap<i64, QLaurent>> {
    if c.is_empty() {
        return Some(BTreeMap::new());
    }
    // Work in t = X^{-1}: X^m has t-exponent -m.
    let lo_t = c.keys().map(|&m| -m).min().unwrap();
    let hi_t = c.keys().map(|&m| -m).max().unwrap();
    let len = (hi_t - lo_t + 1) as usize;
    let mut ctilde = vec![QLaurent::zero(); len];
    for (&m, coeff) in c {
        ctilde[(-m - lo_t) as usize] = coeff.clone();
    }
    let d = dk_dense(k);
    if len < d.len() {
        return None;
    }
    let qlen = len - d.len() + 1;
    // Ascending division: d[0] = 1, so no coefficient division is needed.
    let mut q = vec![QLaurent::zero(); qlen];
    for i in 0..qlen {
        let mut acc = ctilde[i].clone();
        for j in 1..d.len().min(i + 1) {
            acc = acc.sub(&d[j].mul(&q[i - j]));
        }
        q[i] = acc;
    }
    // Verify Q * D == C exactly.
    let mut check = vec![QLaurent::zero(); len];
    for (i, qi) in q.iter().enumerate() {
        for (j, dj) in d.iter().enumerate() {
            check[i + j] = check[i + j].add(&qi.mul(dj));
        }
    }
    if check != ctilde {
        return None;
    }
    let mut out = BTreeMap::new();
    for (i, qi) in q.into_iter().enumerate() {
        if !qi.is_zero() {
            out.insert(-(lo_t + i as i64), qi);
        }
    }
    Some(out)
}

/// Exact membership test for the span of
/// `X^a Y^m` and `X^a Y^{-n} (1+qX^{-1}) ... (1+q^{2n-1}X^{-1})`.
pub fn membership_lq_prime(u: &QT2Element) -> Result<LqPrimeDecomposition, QTorusError> {
    let mut by_y: BTreeMap<i64, BTreeMap<i64, QLaurent>> = BTreeMap::new();
    for (&(m, n), c) in u.iter() {
        by_y.entry(n).or_default().insert(m, c.clone());
    }
    let mut dec = LqPrimeDecomposition::default();
    for (n, coeffs) in by_y {
        if n >= 0 {
            for (m, c) in coeffs {
                dec.nonneg.insert((m, n), c);
            }
        } else {
            let k = -n;
            match divide_by_dk(&coeffs, k as usize) {
                Some(q) => {
                    dec.neg.insert(k, q);
                }
                None => return Err(QTorusError::NonMember { y_degree: n }),
            }
        }
    }
    Ok(dec)
}

/// Image of the spanning element `X^a Y^m` (m >= 0):
/// `Y^{-a} (1+qY)(1+q^3 Y)...(1+q^{2m-1}Y) X^m`, normal-ordered.
fn gamma_nonneg(a: i64, m: i64) -> QT2Element {
    let mut el = QT2Element::monomial(0, -a);
    for k in 1..=m {
        let factor = QT2Element::one()
            .add(&QT2Element::monomial_scaled(0, 1, QLaurent::q_power(2 * k - 1)));
        el = el.mul(&factor);
    }
    el.mul(&QT2Element::monomial(m, 0))
}

/// The mutation automorphism `X -> Y^{-1}, Y -> (1+qY) X` on the
/// Laurent-stable span; errs with NonMember outside it.
pub fn apply_gamma_q(u: &QT2Element) -> Result<QT2Element, QTorusError> {
    let dec = membership_lq_prime(u)?;
    let mut out = QT2Element::zero();
    for (&(a, m), c) in &dec.nonneg {
        out = out.add(&gamma_nonneg(a, m).scale_q(c));
    }
    for (&k, quot) in &dec.neg {
        for (&a, d) in quot {
            // gamma of the second spanning family collapses to
            // Y^{-a} X^{-k} = q^{-2ak} X^{-k} Y^{-a}.
            let coeff = d.mul(&QLaurent::q_power(-2 * a * k));
            out = out.add(&QT2Element::monomial_scaled(-k, -a, coeff));
        }
    }
    Ok(out)
}

/// The q-deformed canonical basis element at `p`: the star-invariant
/// monomial `q^{-ab} X^a Y^b` on the first cone, transported everywhere
/// else by equivariance under the mutation automorphism.
pub fn canonical_iaq(p: TropicalPoint) -> QT2Element {
    let mut j = 0;
    let mut pj = p;
    while !(pj.a <= 0 && pj.b >= 0) {
        pj = tropical_gamma(pj);
        j += 1;
        assert!(j <= 4, "every orbit meets the first cone within 4 steps");
    }
    let mut el = QT2Element::sym_monomial(pj.a, pj.b);
    for _ in 0..j {
        el = apply_gamma_q(&el).expect("canonical transport stays Laurent");
    }
    el
}

/// The naive termwise q-symmetrization of the classical basis element:
/// every monomial `n X^a Y^b` becomes `n q^{-ab} X^a Y^b`.
///
/// This is one reading of "multiply each monomial by the unique power of q
/// making it star-invariant"; it agrees with the transported basis exactly
/// when all classical coefficients are 1 and deviates once binomial
/// coefficients appear. Callers compare, report, and do not assert.
pub fn termwise_symmetrization(p: TropicalPoint) -> QT2Element {
    let classical = crate::cluster::canonical_ia(p);
    let mut out = QT2Element::zero();
    for (&(m, n), &c) in classical.iter() {
        out = out.add(&QT2Element::sym_monomial(m, n).scale_q(&QLaurent::from_int(c)));
    }
    out
}

/// Expands `I^q(p) * I^q(p2)` over the q-canonical basis; structure
/// constants in `Z[q, q^{-1}]`.
pub fn multiply_in_basis_q(
    p: TropicalPoint,
    p2: TropicalPoint,
) -> Result<BTreeMap<TropicalPoint, QLaurent>, QTorusError> {
    let mut remainder = canonical_iaq(p).mul(&canonical_iaq(p2));
    let mut out: BTreeMap<TropicalPoint, QLaurent> = BTreeMap::new();
    let mut cache: BTreeMap<(i64, i64), QT2Element> = BTreeMap::new();
    let max_steps = 10_000 + 100 * remainder.len();
    let mut steps = 0;
    while !remainder.is_zero() {
        steps += 1;
        if steps > max_steps {
            return Err(QTorusError::BasisExpansionFailure { steps });
        }
        let (&(m, n), c) = remainder
            .iter()
            .max_by_key(|(&(m, n), _)| (m + n, m))
            .expect("nonzero element has a maximal monomial");
        // I^q(m, n) has leading coefficient q^{-mn} there.
        let constant = c.mul(&QLaurent::q_power(m * n));
        let basis = cache
            .entry((m, n))
            .or_insert_with(|| canonical_iaq(TropicalPoint::new(m, n)));
        remainder = remainder.sub(&basis.scale_q(&constant));
        debug_assert!(remainder.coeff(m, n).is_zero());
        let e = out.entry(TropicalPoint::new(m, n)).or_insert_with(QLaurent::zero);
        *e = e.add(&constant);
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}
