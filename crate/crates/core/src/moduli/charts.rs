//! Projective points, cross-ratios, the five torus charts and the regular
//! functions X_{a,b;c}.

use super::ModuliError;
use crate::cluster::rat_pow;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A point of the projective line in homogeneous coordinates `(u : v)`;
/// infinity is `(1 : 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    pub u: BigRational,
    pub v: BigRational,
}

impl ProjPoint {
    pub fn new(u: BigRational, v: BigRational) -> Self {
        assert!(!(u.is_zero() && v.is_zero()), "(0 : 0) is not a point");
        ProjPoint { u, v }
    }

    pub fn affine(x: BigRational) -> Self {
        ProjPoint { u: x, v: BigRational::one() }
    }

    pub fn infinity() -> Self {
        ProjPoint { u: BigRational::one(), v: BigRational::zero() }
    }

    pub fn from_i64(x: i64) -> Self {
        ProjPoint::affine(BigRational::from_integer(x.into()))
    }

    pub fn projectively_eq(&self, other: &Self) -> bool {
        det(self, other).is_zero()
    }

    /// Serialized homogeneous pair, each coordinate as an exact "n/d" string.
    pub fn to_pair(&self) -> [String; 2] {
        [self.u.to_string(), self.v.to_string()]
    }
}

/// `det(p, q) = u_p v_q - u_q v_p`; for two affine points this is
/// `x_p - x_q`.
pub fn det(p: &ProjPoint, q: &ProjPoint) -> BigRational {
    &p.u * &q.v - &q.u * &p.v
}

/// Cross-ratio `(x1-x2)(x3-x4) / ((x1-x4)(x2-x3))` in determinant form,
/// normalized so that `r(inf, -1, 0, z) = z`.
pub fn cross_ratio(
    x1: &ProjPoint,
    x2: &ProjPoint,
    x3: &ProjPoint,
    x4: &ProjPoint,
) -> Result<BigRational, ModuliError> {
    let den = det(x1, x4) * det(x2, x3);
    if den.is_zero() {
        return Err(ModuliError::DegenerateQuadruple);
    }
    Ok(det(x1, x2) * det(x3, x4) / den)
}

/// A configuration of five points with no colliding cyclic neighbors.
#[derive(Debug, Clone)]
pub struct Config5 {
    points: [ProjPoint; 5],
}

impl Config5 {
    pub fn new(points: [ProjPoint; 5]) -> Result<Self, ModuliError> {
        for i in 0..5u8 {
            let j = (i + 1) % 5;
            if points[i as usize].projectively_eq(&points[j as usize]) {
                return Err(ModuliError::NeighborCollision(i + 1, j + 1));
            }
        }
        Ok(Config5 { points })
    }

    pub fn points(&self) -> &[ProjPoint; 5] {
        &self.points
    }

    /// 1-based cyclic access.
    pub fn point(&self, i: i64) -> &ProjPoint {
        &self.points[(i - 1).rem_euclid(5) as usize]
    }

    pub fn to_pairs(&self) -> Vec<[String; 2]> {
        self.points.iter().map(|p| p.to_pair()).collect()
    }
}

fn chart_rotation(c: u8) -> usize {
    // Chart c rotates the base chart by 2(c-1) positions.
    (2 * (c as usize - 1)) % 5
}

/// The chart embedding: the base chart is
/// `(X, Y) -> (inf, -1, 0, X, X(1+Y))`, and chart `c` is its cyclic
/// rotation by `2(c-1)` positions.
pub fn psi_c(x: &BigRational, y: &BigRational, c: u8) -> Result<Config5, ModuliError> {
    assert!((1..=5).contains(&c), "chart index must be 1..=5");
    if x.is_zero() || y.is_zero() {
        return Err(ModuliError::DegeneratePoint("chart coordinates must be nonzero".into()));
    }
    let base = [
        ProjPoint::infinity(),
        ProjPoint::from_i64(-1),
        ProjPoint::from_i64(0),
        ProjPoint::affine(x.clone()),
        ProjPoint::affine(x * (BigRational::one() + y)),
    ];
    let rho = chart_rotation(c);
    let rotated: [ProjPoint; 5] = std::array::from_fn(|i| base[(i + rho) % 5].clone());
    Config5::new(rotated)
}

/// Recovers the chart coordinates of a configuration in chart `c`:
/// `X = r(x1, x2, x3, x4)` and `Y = r(x1, x3, x4, x5)` of the rotated
/// tuple. Inverse of `psi_c` wherever defined.
pub fn chart_coords(config: &Config5, c: u8) -> Result<(BigRational, BigRational), ModuliError> {
    let rho = chart_rotation(c) as i64;
    // Configuration index holding base point j is j - rho (1-based cyclic).
    let p = |j: i64| config.point(j - rho);
    let x = cross_ratio(p(1), p(2), p(3), p(4))?;
    let y = cross_ratio(p(1), p(3), p(4), p(5))?;
    Ok((x, y))
}

/// `X_{a,b;c} = r(x_c, x_{c+1}, x_{c+2}, x_{c+3})^a r(x_c, x_{c+2}, x_{c+3}, x_{c+4})^b`
/// with `a >= 0 >= b`, evaluated exactly.
pub fn x_abc(config: &Config5, a: i64, b: i64, c: u8) -> Result<BigRational, ModuliError> {
    if a < 0 || b > 0 {
        return Err(ModuliError::SignatureViolation { a, b });
    }
    let cc = c as i64;
    let r1 = cross_ratio(
        config.point(cc),
        config.point(cc + 1),
        config.point(cc + 2),
        config.point(cc + 3),
    )?;
    let r2 = cross_ratio(
        config.point(cc),
        config.point(cc + 2),
        config.point(cc + 3),
        config.point(cc + 4),
    )?;
    if (a > 0 && r1.is_zero()) || (b < 0 && r2.is_zero()) {
        return Err(ModuliError::DegenerateQuadruple);
    }
    Ok(rat_pow(&r1, a) * rat_pow(&r2, b))
}

/// Normalizing map sending the frame `(p1, p2, p3)` to `(1, 0, inf)`;
/// two configurations agree modulo the projective group iff the images of
/// all their points agree for a common frame.
fn frame_image(p: &ProjPoint, f1: &ProjPoint, f2: &ProjPoint, f3: &ProjPoint) -> ProjPoint {
    let u = det(p, f2) * det(f1, f3);
    let v = det(p, f3) * det(f1, f2);
    ProjPoint { u, v }
}

/// Exact equality in the moduli space (modulo the projective action).
///
/// Returns `None` when no index triple is pairwise distinct in both
/// configurations, which only happens for doubly collapsed configurations.
pub fn pgl2_equivalent(a: &Config5, b: &Config5) -> Option<bool> {
    let distinct = |cfg: &Config5, i: usize, j: usize| !cfg.points()[i].projectively_eq(&cfg.points()[j]);
    for i in 0..5 {
        for j in (i + 1)..5 {
            for k in (j + 1)..5 {
                if distinct(a, i, j)
                    && distinct(a, i, k)
                    && distinct(a, j, k)
                    && distinct(b, i, j)
                    && distinct(b, i, k)
                    && distinct(b, j, k)
                {
                    let fa = (&a.points()[i], &a.points()[j], &a.points()[k]);
                    let fb = (&b.points()[i], &b.points()[j], &b.points()[k]);
                    let eq = (0..5).all(|m| {
                        let ia = frame_image(&a.points()[m], fa.0, fa.1, fa.2);
                        let ib = frame_image(&b.points()[m], fb.0, fb.1, fb.2);
                        det(&ia, &ib).is_zero()
                    });
                    return Some(eq);
                }
            }
        }
    }
    None
}

/// Empirically determines, for each function vertex `c`, the unique chart
/// on which `X_{a,b;c}` restricts to the pure monomial `X^a Y^b`, by exact
/// evaluation at sample chart points. This records the index
/// correspondence between the cross-ratio functions and the chart-wise
/// canonical basis.
pub fn correspondence_table() -> [(u8, u8); 5] {
    let samples = [
        (BigRational::new(2.into(), 1.into()), BigRational::new(3.into(), 1.into())),
        (BigRational::new(5.into(), 3.into()), BigRational::new(7.into(), 2.into())),
        (BigRational::new(9.into(), 4.into()), BigRational::new(4.into(), 5.into())),
    ];
    let exponents = [(1i64, 0i64), (0, -1), (2, -1)];
    std::array::from_fn(|idx| {
        let c = idx as u8 + 1;
        let mut found = None;
        for chart in 1..=5u8 {
            let monomial_here = samples.iter().all(|(x, y)| {
                let Ok(cfg) = psi_c(x, y, chart) else { return false };
                exponents.iter().all(|&(a, b)| {
                    x_abc(&cfg, a, b, c)
                        .map(|v| v == rat_pow(x, a) * rat_pow(y, b))
                        .unwrap_or(false)
                })
            });
            if monomial_here {
                assert!(found.is_none(), "monomial chart must be unique");
                found = Some(chart);
            }
        }
        (c, found.expect("every function vertex has a monomial chart"))
    })
}

/// True when some chart contains the configuration: its chart coordinates
/// exist, are nonzero, and reproduce the configuration modulo the
/// projective action.
pub fn covered_by_some_chart(config: &Config5) -> bool {
    for c in 1..=5u8 {
        let Ok((x, y)) = chart_coords(config, c) else {
            continue;
        };
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let Ok(rebuilt) = psi_c(&x, &y, c) else {
            continue;
        };
        if pgl2_equivalent(&rebuilt, config) == Some(true) {
            return true;
        }
    }
    false
}
