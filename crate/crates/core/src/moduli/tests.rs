use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn aff(n: i64, d: i64) -> ProjPoint {
    ProjPoint::affine(rat(n, d))
}

fn random_distinct_config(rng: &mut impl Rng) -> Config5 {
    loop {
        let pts: Vec<ProjPoint> = (0..5)
            .map(|_| aff(rng.gen_range(-30i64..=30), rng.gen_range(1i64..=7)))
            .collect();
        let mut distinct = true;
        for i in 0..5 {
            for j in 0..i {
                if pts[i].projectively_eq(&pts[j]) {
                    distinct = false;
                }
            }
        }
        if !distinct {
            continue;
        }
        if let Ok(c) = Config5::new([
            pts[0].clone(),
            pts[1].clone(),
            pts[2].clone(),
            pts[3].clone(),
            pts[4].clone(),
        ]) {
            return c;
        }
    }
}

fn random_generic_vectors(rng: &mut impl Rng) -> VectorConfig5 {
    loop {
        let vectors: [(BigRational, BigRational); 5] = std::array::from_fn(|_| {
            (
                rat(rng.gen_range(-9i64..=9), 1),
                rat(rng.gen_range(-9i64..=9), 1),
            )
        });
        let vc = VectorConfig5 { vectors };
        if vc.fully_generic() {
            return vc;
        }
    }
}

#[test]
fn cross_ratio_normalization() {
    let z = rat(7, 3);
    let r = cross_ratio(
        &ProjPoint::infinity(),
        &ProjPoint::from_i64(-1),
        &ProjPoint::from_i64(0),
        &ProjPoint::affine(z.clone()),
    )
    .unwrap();
    assert_eq!(r, z);
}

#[test]
fn cross_ratio_identities_on_random_quadruples() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let mut pts: Vec<ProjPoint> = Vec::new();
        while pts.len() < 4 {
            let p = aff(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=11));
            if pts.iter().all(|q| !q.projectively_eq(&p)) {
                pts.push(p);
            }
        }
        let r = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        let shifted = cross_ratio(&pts[1], &pts[2], &pts[3], &pts[0]).unwrap();
        assert_eq!(shifted, r.recip(), "cyclic shift inverts");
        let swapped = cross_ratio(&pts[0], &pts[2], &pts[1], &pts[3]).unwrap();
        assert_eq!(r, -BigRational::one() - swapped, "middle swap");
    }
}

#[test]
fn cross_ratio_degenerate_quadruple() {
    let p = aff(1, 1);
    assert!(matches!(
        cross_ratio(&p, &aff(2, 1), &aff(3, 1), &p),
        Err(ModuliError::DegenerateQuadruple)
    ));
}

#[test]
fn psi1_matches_the_printed_formula() {
    let cfg = psi_c(&rat(2, 1), &rat(3, 1), 1).unwrap();
    let pts = cfg.points();
    assert!(pts[0].projectively_eq(&ProjPoint::infinity()));
    assert!(pts[1].projectively_eq(&aff(-1, 1)));
    assert!(pts[2].projectively_eq(&aff(0, 1)));
    assert!(pts[3].projectively_eq(&aff(2, 1)));
    assert!(pts[4].projectively_eq(&aff(8, 1)));
}

#[test]
fn chart_coordinates_recovered() {
    for c in 1..=5u8 {
        let (x, y) = (rat(2, 1), rat(3, 1));
        let cfg = psi_c(&x, &y, c).unwrap();
        let (rx, ry) = chart_coords(&cfg, c).unwrap();
        assert_eq!((rx, ry), (x, y), "chart {c}");
    }
}

#[test]
fn psi_degenerate_inputs() {
    assert!(matches!(
        psi_c(&rat(0, 1), &rat(3, 1), 1),
        Err(ModuliError::DegeneratePoint(_))
    ));
    assert!(matches!(
        psi_c(&rat(2, 1), &rat(0, 1), 1),
        Err(ModuliError::DegeneratePoint(_))
    ));
    // Y = -1 sends the fifth point onto the third: a non-neighbor
    // collision, which is a legitimate configuration here.
    let cfg = psi_c(&rat(2, 1), &rat(-1, 1), 1).unwrap();
    assert!(cfg.points()[4].projectively_eq(&cfg.points()[2]));
}

#[test]
fn x_abc_examples() {
    let cfg = psi_c(&rat(2, 1), &rat(3, 1), 1).unwrap();
    assert_eq!(x_abc(&cfg, 1, 0, 1).unwrap(), rat(2, 1));
    for c in 1..=5 {
        assert_eq!(x_abc(&cfg, 0, 0, c).unwrap(), BigRational::one());
    }
    assert!(matches!(
        x_abc(&cfg, -1, 0, 1),
        Err(ModuliError::SignatureViolation { .. })
    ));
    assert!(matches!(
        x_abc(&cfg, 0, 1, 1),
        Err(ModuliError::SignatureViolation { .. })
    ));
}

#[test]
fn x_abc_is_the_chart_monomial_on_base_chart() {
    // On the base chart, X_{a,b;1} is exactly X^a Y^b.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let x = rat(rng.gen_range(1i64..=20), rng.gen_range(1i64..=7));
        let y = rat(rng.gen_range(1i64..=20), rng.gen_range(1i64..=7));
        let cfg = match psi_c(&x, &y, 1) {
            Ok(cfg) => cfg,
            Err(_) => continue,
        };
        for (a, b) in [(1i64, 0i64), (0, -1), (2, -1), (3, -3)] {
            let got = x_abc(&cfg, a, b, 1).unwrap();
            let expect = crate::cluster::rat_pow(&x, a) * crate::cluster::rat_pow(&y, b);
            assert_eq!(got, expect, "(a,b)=({a},{b})");
        }
    }
}

#[test]
fn correspondence_table_is_a_fixed_permutation() {
    // Each function vertex restricts to a monomial on exactly one chart;
    // the resulting permutation is the empirical index correspondence.
    let table = correspondence_table();
    assert_eq!(table, [(1, 1), (2, 3), (3, 5), (4, 2), (5, 4)]);
}

#[test]
fn x_abc_regular_on_chart_points() {
    // No poles anywhere on the charts for the admissible signature.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let mut hits = 0;
    while hits < 100 {
        let x = rat(rng.gen_range(-15i64..=15), rng.gen_range(1i64..=5));
        let y = rat(rng.gen_range(-15i64..=15), rng.gen_range(1i64..=5));
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let Ok(cfg) = psi_c(&x, &y, 1) else { continue };
        for c in 1..=5u8 {
            for (a, b) in [(2i64, 0i64), (1, -1), (0, -2)] {
                // Finite exact value or a detected degenerate quadruple on
                // a divisor; never a panic or an infinity.
                let _ = x_abc(&cfg, a, b, c);
            }
        }
        hits += 1;
    }
}

#[test]
fn single_crossing_straightens_into_two_monomials() {
    let mut diag = BTreeMap::new();
    diag.insert((1u8, 3u8), 1i64);
    diag.insert((2u8, 4u8), 1i64);
    let m = ChordMonomial::from_diagonals(&diag, 1).unwrap();
    assert!(!m.is_regular());
    assert_eq!(m.crossing_measure(), 1);
    let reduced = pluecker_reduce(&[m.clone()]).unwrap();
    assert_eq!(reduced.len(), 2);
    for r in &reduced {
        assert!(r.is_regular());
        assert_eq!(r.coeff, 1);
    }
    // Exact evaluation is preserved.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let vc = random_generic_vectors(&mut rng);
        let before = m.eval(&vc);
        let after: BigRational = reduced.iter().map(|r| r.eval(&vc)).sum();
        assert_eq!(before, after);
    }
}

#[test]
fn regular_input_passes_through() {
    let m = basis_monomial(2, -1, 3).unwrap();
    let reduced = pluecker_reduce(&[m.clone()]).unwrap();
    assert_eq!(reduced, vec![m]);
}

#[test]
fn straightening_preserves_evaluation_on_random_sums() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
    for _ in 0..25 {
        let mut monomials = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let mut diag = BTreeMap::new();
            for &d in &DIAGONALS {
                diag.insert(d, rng.gen_range(0i64..=3));
            }
            let coeff = rng.gen_range(-3i64..=3);
            monomials.push(ChordMonomial::from_diagonals(&diag, coeff).unwrap());
        }
        let reduced = pluecker_reduce(&monomials).unwrap();
        for r in &reduced {
            assert!(r.is_regular());
        }
        for _ in 0..5 {
            let vc = random_generic_vectors(&mut rng);
            let before: BigRational = monomials.iter().map(|m| m.eval(&vc)).sum();
            let after: BigRational = reduced.iter().map(|m| m.eval(&vc)).sum();
            assert_eq!(before, after);
        }
    }
}

#[test]
fn h_invariance_is_enforced() {
    let mut weights = BTreeMap::new();
    weights.insert((1u8, 3u8), 1i64);
    assert!(matches!(
        ChordMonomial::new(weights, 1),
        Err(ModuliError::NotHInvariant { .. })
    ));
}

#[test]
fn basis_round_trip() {
    for c in 1..=5u8 {
        for a in 0..=5i64 {
            for b in -5..=0i64 {
                let m = basis_monomial(a, b, c).unwrap();
                let (a2, b2, c2) = regular_to_basis(&m).unwrap();
                // Labels on the axes have twins (the same monomial is seen
                // from two vertices); the monomial itself always round-trips.
                assert_eq!(basis_monomial(a2, b2, c2).unwrap(), m);
                if a > 0 && b < 0 {
                    assert_eq!((a2, b2, c2), (a, b, c));
                }
            }
        }
    }
    // The empty diagram reads as (0, 0, canonical vertex).
    let zero = ChordMonomial::from_diagonals(&BTreeMap::new(), 1).unwrap();
    assert_eq!(regular_to_basis(&zero).unwrap(), (0, 0, 1));
}

#[test]
fn crossing_monomial_is_rejected_by_basis_reader() {
    let mut diag = BTreeMap::new();
    diag.insert((1u8, 3u8), 1i64);
    diag.insert((2u8, 4u8), 1i64);
    let m = ChordMonomial::from_diagonals(&diag, 1).unwrap();
    assert!(matches!(regular_to_basis(&m), Err(ModuliError::NotRegular(_, _))));
}

#[test]
fn basis_monomial_evaluates_to_reciprocal_cross_ratio_monomial() {
    // The cone orientation keeps diagonal weights nonnegative; that choice
    // makes the chord monomial of label (a, b, c) evaluate to the
    // reciprocal of X_{a,b;c} on the projectivized configuration.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
    for _ in 0..20 {
        let vc = random_generic_vectors(&mut rng);
        // Projectivize the vectors.
        let pts: [ProjPoint; 5] =
            std::array::from_fn(|i| ProjPoint::new(vc.vectors[i].0.clone(), vc.vectors[i].1.clone()));
        let Ok(cfg) = Config5::new(pts) else { continue };
        for (a, b, c) in [(1i64, 0i64, 1u8), (0, -1, 2), (2, -1, 4)] {
            let m = basis_monomial(a, b, c).unwrap();
            let lhs = m.eval(&vc);
            let rhs = x_abc(&cfg, a, b, c).unwrap();
            assert_eq!(lhs * rhs, BigRational::one(), "(a,b,c)=({a},{b},{c})");
        }
    }
}

#[test]
fn pgl2_equivalence_detects_moebius_images() {
    let cfg = psi_c(&rat(2, 1), &rat(3, 1), 1).unwrap();
    // z -> (2z + 1) / (z - 3) as an exact homogeneous substitution.
    let moebius = |p: &ProjPoint| {
        ProjPoint::new(
            rat(2, 1) * &p.u + &p.v,
            p.u.clone() - rat(3, 1) * &p.v,
        )
    };
    let moved = Config5::new(std::array::from_fn(|i| moebius(&cfg.points()[i]))).unwrap();
    assert_eq!(pgl2_equivalent(&cfg, &moved), Some(true));
    let other = psi_c(&rat(5, 1), &rat(3, 1), 1).unwrap();
    assert_eq!(pgl2_equivalent(&cfg, &other), Some(false));
}

#[test]
fn charts_cover_random_configurations() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
    for k in 0..40 {
        let mut cfg = random_distinct_config(&mut rng);
        if k % 4 == 0 {
            // Force a non-neighbor collision: x3 := x1.
            let pts = cfg.points().clone();
            let collided = [
                pts[0].clone(),
                pts[1].clone(),
                pts[0].clone(),
                pts[3].clone(),
                pts[4].clone(),
            ];
            if let Ok(c2) = Config5::new(collided) {
                cfg = c2;
            }
        }
        assert!(covered_by_some_chart(&cfg), "uncovered configuration {:?}", cfg.to_pairs());
    }
}

#[test]
fn chord_monomial_json() {
    let m = basis_monomial(1, 0, 1).unwrap();
    let s = m.to_json();
    assert!(s.contains("\"coeff\":1"));
    assert!(s.contains("\"14\":1"));
}

#[test]
fn independence_rank_small() {
    let report = independence_check(1, 40, 7);
    assert_eq!(report.labels, 20);
    assert_eq!(report.predicted_distinct, 11);
    assert_eq!(report.rank, report.predicted_distinct);
}
