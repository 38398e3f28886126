//! Chord diagrams on the pentagon: monomials in the ten determinants
//! indexed by integer weights on sides and diagonals, and the Pluecker
//! rewriting that straightens crossing diagonals.

use super::ModuliError;
use crate::cluster::rat_pow;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// The five sides of the pentagon as sorted vertex pairs.
pub const SIDES: [(u8, u8); 5] = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)];

/// The five diagonals.
pub const DIAGONALS: [(u8, u8); 5] = [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)];

/// Crossing diagonal pairs together with the ordered quadruple
/// `a < b < c < d` of the Pluecker relation
/// `D_ac D_bd = D_ab D_cd + D_ad D_bc` that separates them.
const CROSSINGS: [((u8, u8), (u8, u8), [u8; 4]); 5] = [
    ((1, 3), (2, 4), [1, 2, 3, 4]),
    ((2, 4), (3, 5), [2, 3, 4, 5]),
    ((1, 4), (3, 5), [1, 3, 4, 5]),
    ((1, 4), (2, 5), [1, 2, 4, 5]),
    ((1, 3), (2, 5), [1, 2, 3, 5]),
];

fn key(i: u8, j: u8) -> (u8, u8) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Five exact rational plane vectors; the determinants `D_ij` evaluate the
/// chord monomials.
#[derive(Debug, Clone)]
pub struct VectorConfig5 {
    pub vectors: [(BigRational, BigRational); 5],
}

impl VectorConfig5 {
    pub fn det(&self, i: u8, j: u8) -> BigRational {
        let a = &self.vectors[i as usize - 1];
        let b = &self.vectors[j as usize - 1];
        &a.0 * &b.1 - &b.0 * &a.1
    }

    /// All ten determinants nonzero, so any integer weights evaluate.
    pub fn fully_generic(&self) -> bool {
        (1..=5u8).all(|i| ((i + 1)..=5).all(|j| !self.det(i, j).is_zero()))
    }
}

/// One monomial `coeff * prod D_ij^{w_ij}` drawn as weights on the
/// pentagon. Diagonal weights must stay nonnegative; side weights are
/// free; the weights at each vertex must sum to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordMonomial {
    weights: BTreeMap<(u8, u8), i64>,
    pub coeff: i64,
}

impl ChordMonomial {
    pub fn new(weights: BTreeMap<(u8, u8), i64>, coeff: i64) -> Result<Self, ModuliError> {
        let mut w = BTreeMap::new();
        for (&(i, j), &v) in &weights {
            assert!((1..=5).contains(&i) && (1..=5).contains(&j) && i != j);
            if v != 0 {
                w.insert(key(i, j), v);
            }
        }
        let m = ChordMonomial { weights: w, coeff };
        for &d in &DIAGONALS {
            if m.weight(d.0, d.1) < 0 {
                return Err(ModuliError::NegativeDiagonal(d));
            }
        }
        m.check_h_invariance()?;
        Ok(m)
    }

    /// Builds the unique H-invariant monomial with the given diagonal
    /// weights: for an odd cycle the vertex equations determine the side
    /// weights uniquely.
    pub fn from_diagonals(diag: &BTreeMap<(u8, u8), i64>, coeff: i64) -> Result<Self, ModuliError> {
        let mut weights: BTreeMap<(u8, u8), i64> = BTreeMap::new();
        for (&(i, j), &v) in diag {
            let k = key(i, j);
            assert!(DIAGONALS.contains(&k), "{k:?} is not a diagonal");
            if v != 0 {
                weights.insert(k, v);
            }
        }
        // Vertex sums of the diagonal weights.
        let dsum = |v: u8| -> i64 {
            DIAGONALS
                .iter()
                .filter(|&&(i, j)| i == v || j == v)
                .map(|&(i, j)| weights.get(&(i, j)).copied().unwrap_or(0))
                .sum()
        };
        // Sides s_v = w(v, v+1) satisfy s_{v-1} + s_v = -dsum(v) with
        // s_0 = s_5; the odd cycle inverts via the alternating sum.
        let t: Vec<i64> = (1..=5u8).map(|v| -dsum(v)).collect();
        let alt = t[0] - t[1] + t[2] - t[3] + t[4];
        debug_assert!(alt % 2 == 0, "each diagonal meets two vertices, so the alternating sum is even");
        let mut sides = [0i64; 6]; // 1-based: sides[v] = w(v, v+1), sides[5] = w(5, 1)
        sides[5] = alt / 2;
        sides[1] = t[0] - sides[5];
        sides[2] = t[1] - sides[1];
        sides[3] = t[2] - sides[2];
        sides[4] = t[3] - sides[3];
        debug_assert_eq!(sides[5], t[4] - sides[4]);
        for v in 1..=5u8 {
            let k = if v == 5 { (1, 5) } else { (v, v + 1) };
            let w = sides[v as usize];
            if w != 0 {
                weights.insert(k, w);
            }
        }
        ChordMonomial::new(weights, coeff)
    }

    pub fn weight(&self, i: u8, j: u8) -> i64 {
        self.weights.get(&key(i, j)).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> &BTreeMap<(u8, u8), i64> {
        &self.weights
    }

    fn check_h_invariance(&self) -> Result<(), ModuliError> {
        for v in 1..=5u8 {
            let sum: i64 = self
                .weights
                .iter()
                .filter(|(&(i, j), _)| i == v || j == v)
                .map(|(_, &w)| w)
                .sum();
            if sum != 0 {
                return Err(ModuliError::NotHInvariant { vertex: v });
            }
        }
        Ok(())
    }

    /// The first crossing pair of diagonals that both carry positive
    /// weight, in the fixed lexicographic scan order.
    pub fn first_crossing(&self) -> Option<((u8, u8), (u8, u8), [u8; 4])> {
        CROSSINGS
            .iter()
            .find(|&&(d1, d2, _)| self.weight(d1.0, d1.1) > 0 && self.weight(d2.0, d2.1) > 0)
            .copied()
    }

    pub fn is_regular(&self) -> bool {
        self.first_crossing().is_none()
    }

    /// Sum over crossing pairs of the products of the diagonal weights;
    /// the induction measure of the straightening.
    pub fn crossing_measure(&self) -> i64 {
        CROSSINGS
            .iter()
            .map(|&(d1, d2, _)| self.weight(d1.0, d1.1) * self.weight(d2.0, d2.1))
            .sum()
    }

    /// Exact evaluation on a vector configuration.
    pub fn eval(&self, vc: &VectorConfig5) -> BigRational {
        let mut acc = BigRational::from_integer(self.coeff.into());
        for (&(i, j), &w) in &self.weights {
            acc *= rat_pow(&vc.det(i, j), w);
        }
        acc
    }

    fn shifted(&self, deltas: &[((u8, u8), i64)]) -> ChordMonomial {
        let mut weights = self.weights.clone();
        for &(k, dv) in deltas {
            let e = weights.entry(k).or_insert(0);
            *e += dv;
            if *e == 0 {
                weights.remove(&k);
            }
        }
        ChordMonomial { weights, coeff: self.coeff }
    }

    /// Serialized form `{"weights": {"13": w, ...}, "coeff": c}`.
    pub fn to_json(&self) -> String {
        let mut w = serde_json::Map::new();
        for (&(i, j), &v) in &self.weights {
            w.insert(format!("{i}{j}"), serde_json::json!(v));
        }
        serde_json::json!({ "weights": w, "coeff": self.coeff }).to_string()
    }
}

impl fmt::Display for ChordMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        for (&(i, j), &w) in &self.weights {
            write!(f, " D{i}{j}^{w}")?;
        }
        Ok(())
    }
}

/// Straightens a sum of chord monomials: rewrites crossing diagonal pairs
/// through the Pluecker relation until every monomial is regular. The
/// crossing measure strictly decreases at every rewrite (checked), which
/// is the termination argument.
pub fn pluecker_reduce(sum: &[ChordMonomial]) -> Result<Vec<ChordMonomial>, ModuliError> {
    for m in sum {
        m.check_h_invariance()?;
        for &d in &DIAGONALS {
            if m.weight(d.0, d.1) < 0 {
                return Err(ModuliError::NegativeDiagonal(d));
            }
        }
    }
    let mut work: Vec<ChordMonomial> = sum.to_vec();
    let mut regular: BTreeMap<BTreeMap<(u8, u8), i64>, i64> = BTreeMap::new();
    while let Some(m) = work.pop() {
        if m.coeff == 0 {
            continue;
        }
        match m.first_crossing() {
            None => {
                *regular.entry(m.weights.clone()).or_insert(0) += m.coeff;
            }
            Some((d1, d2, [a, b, c, d])) => {
                // D_ac D_bd -> D_ab D_cd + D_ad D_bc, applied once.
                let measure = m.crossing_measure();
                let first = m.shifted(&[
                    (d1, -1),
                    (d2, -1),
                    (key(a, b), 1),
                    (key(c, d), 1),
                ]);
                let second = m.shifted(&[
                    (d1, -1),
                    (d2, -1),
                    (key(a, d), 1),
                    (key(b, c), 1),
                ]);
                assert!(
                    first.crossing_measure() < measure && second.crossing_measure() < measure,
                    "crossing measure must strictly decrease"
                );
                work.push(first);
                work.push(second);
            }
        }
    }
    let mut out = Vec::new();
    for (weights, coeff) in regular {
        if coeff != 0 {
            out.push(ChordMonomial { weights, coeff });
        }
    }
    Ok(out)
}

/// The chord monomial attached to the basis label `(a, b, c)` with
/// `a >= 0 >= b`: diagonal `(c, c+3)` carries `a`, diagonal `(c, c+2)`
/// carries `-b`, and the sides are the unique H-invariant completion.
///
/// Its evaluation is the reciprocal of `x_abc` (the two families use
/// opposite cross-ratio orientations; this one keeps diagonal weights
/// nonnegative as the monomial cone requires).
pub fn basis_monomial(a: i64, b: i64, c: u8) -> Result<ChordMonomial, ModuliError> {
    if a < 0 || b > 0 {
        return Err(ModuliError::SignatureViolation { a, b });
    }
    assert!((1..=5).contains(&c));
    let wrap = |v: u8| -> u8 { (v - 1) % 5 + 1 };
    let mut diag = BTreeMap::new();
    diag.insert(key(c, wrap(c + 3)), a);
    diag.insert(key(c, wrap(c + 2)), -b);
    ChordMonomial::from_diagonals(&diag, 1)
}

/// Reads off the basis label `(a, b, c)` of a regular H-invariant
/// monomial: the diagonals must lie at a single vertex `c`, with
/// `(c, c+3)` giving `a` and `(c, c+2)` giving `-b`. The all-zero diagram
/// reads as `(0, 0, 1)`.
pub fn regular_to_basis(m: &ChordMonomial) -> Result<(i64, i64, u8), ModuliError> {
    m.check_h_invariance()?;
    if let Some((d1, d2, _)) = m.first_crossing() {
        return Err(ModuliError::NotRegular(d1, d2));
    }
    let wrap = |v: u8| -> u8 { (v - 1) % 5 + 1 };
    for c in 1..=5u8 {
        let long = key(c, wrap(c + 3));
        let short = key(c, wrap(c + 2));
        let others_zero = DIAGONALS
            .iter()
            .filter(|&&d| d != long && d != short)
            .all(|&(i, j)| m.weight(i, j) == 0);
        if others_zero {
            let a = m.weight(long.0, long.1);
            let b = -m.weight(short.0, short.1);
            // H-invariance plus the diagonal pattern pins the sides, so the
            // label is complete.
            return Ok((a, b, c));
        }
    }
    // Regular and H-invariant implies the diagonals share a vertex, so
    // this point is unreachable for valid inputs.
    unreachable!("regular monomials concentrate their diagonals at one vertex")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn side_solver_gives_zero_for_empty_diagram() {
        let m = ChordMonomial::from_diagonals(&BTreeMap::new(), 3).unwrap();
        assert!(m.weights().is_empty());
        assert_eq!(m.coeff, 3);
    }

    #[test]
    fn basis_monomial_pattern() {
        let m = basis_monomial(1, 0, 1).unwrap();
        assert_eq!(m.weight(1, 4), 1);
        assert_eq!(m.weight(1, 3), 0);
        // Sides: the unique H-invariant completion of diagonal (1,4) = 1.
        assert_eq!(m.weight(1, 2), -1);
        assert_eq!(m.weight(2, 3), 1);
        assert_eq!(m.weight(3, 4), -1);
        assert_eq!(m.weight(4, 5), 0);
        assert_eq!(m.weight(1, 5), 0);
    }
}
