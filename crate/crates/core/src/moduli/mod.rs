//! Exact geometry of configurations of five cyclically ordered points on
//! the projective line: cross-ratios in homogeneous coordinates (so the
//! point at infinity needs no special casing), the five torus charts, the
//! regular functions X_{a,b;c}, and the chord-diagram calculus with the
//! Pluecker straightening that eliminates crossing diagonals.

mod charts;
mod chords;

pub use charts::{
    chart_coords, correspondence_table, covered_by_some_chart, cross_ratio, pgl2_equivalent,
    psi_c, x_abc, Config5, ProjPoint,
};
pub use chords::{
    basis_monomial, pluecker_reduce, regular_to_basis, ChordMonomial, VectorConfig5, DIAGONALS,
    SIDES,
};

use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModuliError {
    #[error("cross-ratio denominator vanished (collapsing quadruple)")]
    DegenerateQuadruple,
    #[error("chart point is degenerate: {0}")]
    DegeneratePoint(String),
    #[error("exponent signature must be a >= 0, b <= 0; got a = {a}, b = {b}")]
    SignatureViolation { a: i64, b: i64 },
    #[error("chord monomial is not H-invariant at vertex {vertex}")]
    NotHInvariant { vertex: u8 },
    #[error("chord monomial is not regular: diagonals {0:?} and {1:?} cross")]
    NotRegular((u8, u8), (u8, u8)),
    #[error("diagonal {0:?} carries a negative weight")]
    NegativeDiagonal((u8, u8)),
    #[error("configuration has colliding cyclic neighbors {0} and {1}")]
    NeighborCollision(u8, u8),
}

/// Report of the exact-rank independence check of the chart functions.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RankReport {
    pub degree_bound: i64,
    pub labels: usize,
    pub samples: usize,
    pub rank: usize,
    /// Count predicted by identifying the constants and the axis
    /// coincidences X_{a,0;c} = X_{0,-a;c+3}.
    pub predicted_distinct: usize,
}

/// Evaluates all X_{a,b;c} with `0 <= a, -b <= degree_bound` on random
/// exact configurations and returns the exact rank of the evaluation
/// matrix over the rationals.
pub fn independence_check(degree_bound: i64, samples: usize, seed: u64) -> RankReport {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut labels = Vec::new();
    for c in 1..=5u8 {
        for a in 0..=degree_bound {
            for nb in 0..=degree_bound {
                labels.push((a, -nb, c));
            }
        }
    }
    let mut configs = Vec::new();
    while configs.len() < samples {
        let pts: Vec<ProjPoint> = (0..5)
            .map(|_| {
                let n = rng.gen_range(-40i64..=40);
                let d = rng.gen_range(1i64..=9);
                ProjPoint::affine(BigRational::new(n.into(), d.into()))
            })
            .collect();
        let config = match Config5::new([
            pts[0].clone(),
            pts[1].clone(),
            pts[2].clone(),
            pts[3].clone(),
            pts[4].clone(),
        ]) {
            Ok(c) => c,
            Err(_) => continue,
        };
        // Fully distinct points keep every needed cross-ratio finite/nonzero.
        let mut distinct = true;
        for i in 0..5 {
            for j in 0..i {
                if config.points()[i].projectively_eq(&config.points()[j]) {
                    distinct = false;
                }
            }
        }
        if !distinct {
            continue;
        }
        if labels.iter().all(|&(a, b, c)| x_abc(&config, a, b, c).is_ok()) {
            configs.push(config);
        }
    }
    let mut matrix: Vec<Vec<BigRational>> = labels
        .iter()
        .map(|&(a, b, c)| {
            configs
                .iter()
                .map(|cfg| x_abc(cfg, a, b, c).expect("checked finite above"))
                .collect()
        })
        .collect();
    let rank = rational_rank(&mut matrix);
    let d = degree_bound as usize;
    // 5 (d+1)^2 labels; five (0,0,c) collapse to one constant; each
    // X_{a,0;c} with a > 0 coincides with X_{0,-a;c+3}.
    let predicted = 5 * (d + 1) * (d + 1) - 4 - 5 * d;
    RankReport {
        degree_bound,
        labels: labels.len(),
        samples,
        rank,
        predicted_distinct: predicted,
    }
}

fn rational_rank(m: &mut [Vec<BigRational>]) -> usize {
    use num_traits::Zero;
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let lead = m[rank][col].clone();
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &lead;
                for c in col..cols {
                    let sub = &m[rank][c] * &f;
                    m[r][c] = &m[r][c] - sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests;
