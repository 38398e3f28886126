//! Integer Laurent polynomials in the single variable q.

use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;

/// `sum c_k q^k`, finite support, no zero coefficients stored.
///
/// The involution `q -> q^{-1}` is exponent negation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QLaurent {
    terms: BTreeMap<i64, i64>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QLaurent::q_power_scaled(0, 1)
    }

    pub fn from_int(c: i64) -> Self {
        QLaurent::q_power_scaled(0, c)
    }

    /// `q^k`.
    pub fn q_power(k: i64) -> Self {
        QLaurent::q_power_scaled(k, 1)
    }

    /// `c q^k`.
    pub fn q_power_scaled(k: i64, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(k, c);
        }
        QLaurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &i64)> {
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
        QLaurent { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QLaurent { terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, i64> = BTreeMap::new();
        for (&k1, &c1) in &self.terms {
            for (&k2, &c2) in &other.terms {
                let e = terms.entry(k1 + k2).or_insert(0);
                *e += c1 * c2;
                if *e == 0 {
                    terms.remove(&(k1 + k2));
                }
            }
        }
        QLaurent { terms }
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        QLaurent { terms: self.terms.iter().map(|(&k, &c)| (-k, c)).collect() }
    }

    /// Specialization q = 1: the coefficient sum.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Numeric evaluation at a complex q != 0.
    pub fn eval(&self, q: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&k, &c) in &self.terms {
            let p = if k >= 0 { q.powu(k as u32) } else { q.powu((-k) as u32).inv() };
            acc += p * c as f64;
        }
        acc
    }

    /// All coefficients strictly positive (the positivity the canonical
    /// basis is supposed to have).
    pub fn all_coeffs_positive(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|&c| c > 0)
    }

    pub fn all_coeffs_nonneg(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&k, &c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 if mag == 1 => write!(f, "q")?,
                1 => write!(f, "{mag} q")?,
                _ if mag == 1 => write!(f, "q^{k}")?,
                _ => write!(f, "{mag} q^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_is_involutive_and_multiplicative() {
        let a = QLaurent::q_power(2).add(&QLaurent::q_power_scaled(-1, 3));
        let b = QLaurent::one().sub(&QLaurent::q_power(1));
        assert_eq!(a.bar().bar(), a);
        assert_eq!(a.mul(&b).bar(), a.bar().mul(&b.bar()));
        assert_eq!(a.mul(&b).at_one(), a.at_one() * b.at_one());
    }

    #[test]
    fn display_reads_naturally() {
        let p = QLaurent::q_power_scaled(-1, 2)
            .add(&QLaurent::one())
            .sub(&QLaurent::q_power(3));
        assert_eq!(p.to_string(), "2 q^-1 + 1 - q^3");
        assert_eq!(QLaurent::zero().to_string(), "0");
    }

    #[test]
    fn eval_matches_at_one() {
        let p = QLaurent::q_power_scaled(2, 5).add(&QLaurent::q_power_scaled(-3, -2));
        let v = p.eval(Complex64::new(1.0, 0.0));
        assert!((v.re - p.at_one() as f64).abs() < 1e-12);
    }
}
