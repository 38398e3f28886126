//! Integer Laurent polynomials in two commuting variables, and the little
//! fraction type needed for mutation pullbacks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// `sum c_{mn} X^m Y^n` with integer coefficients and finite support;
/// zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly2::monomial(0, 0, 1)
    }

    pub fn monomial(m: i64, n: i64, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((m, n), c);
        }
        LaurentPoly2 { terms }
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

    pub fn coeff(&self, m: i64, n: i64) -> i64 {
        *self.terms.get(&(m, n)).unwrap_or(&0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &i64)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&k, &c) in &other.terms {
            let e = terms.entry(k).or_insert(0);
            *e += c;
            if *e == 0 {
                terms.remove(&k);
            }
        }
        LaurentPoly2 { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, s: i64) -> Self {
        if s == 0 {
            return LaurentPoly2::zero();
        }
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&k, &c)| (k, c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<(i64, i64), i64> = BTreeMap::new();
        for (&(m1, n1), &c1) in &self.terms {
            for (&(m2, n2), &c2) in &other.terms {
                let k = (m1 + m2, n1 + n2);
                let e = terms.entry(k).or_insert(0);
                *e += c1 * c2;
                if *e == 0 {
                    terms.remove(&k);
                }
            }
        }
        LaurentPoly2 { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = LaurentPoly2::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn all_coeffs_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Exact evaluation at a rational point with nonzero coordinates.
    pub fn eval_rational(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(m, n), &c) in &self.terms {
            acc += rat_pow(x, m) * rat_pow(y, n) * BigRational::from(BigInt::from(c));
        }
        acc
    }
}

/// `x^e` for a rational base, handling negative exponents by inversion.
pub fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        x.pow(e as i32)
    } else {
        x.recip().pow((-e) as i32)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (&(m, n), &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({m},{n},{c})")?;
        }
        write!(f, "]")
    }
}

/// A fraction of Laurent polynomials. Equality is decided by
/// cross-multiplication, so no gcd machinery is ever needed.
#[derive(Debug, Clone)]
pub struct LaurentFraction2 {
    pub num: LaurentPoly2,
    pub den: LaurentPoly2,
}

impl LaurentFraction2 {
    pub fn new(num: LaurentPoly2, den: LaurentPoly2) -> Self {
        assert!(!den.is_zero(), "fraction denominator must be nonzero");
        LaurentFraction2 { num, den }
    }

    pub fn from_poly(p: LaurentPoly2) -> Self {
        LaurentFraction2 { num: p, den: LaurentPoly2::one() }
    }

    pub fn eq_cross(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}
