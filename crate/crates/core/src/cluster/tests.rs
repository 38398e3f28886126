use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn tp(a: i64, b: i64) -> TropicalPoint {
    TropicalPoint::new(a, b)
}

#[test]
fn tropical_gamma_basics() {
    assert_eq!(tropical_gamma(tp(0, 0)), tp(0, 0));
    // (-1, 2) -> (-2, -1): cone 1 to cone 2.
    assert_eq!(tropical_gamma(tp(-1, 2)), tp(-2, -1));
    assert_eq!(cone_of(tp(-1, 2)), vec![ConeIndex(1)]);
    assert_eq!(cone_of(tp(-2, -1)), vec![ConeIndex(2)]);
}

#[test]
fn tropical_gamma_has_order_five_exhaustively() {
    for a in -50..=50 {
        for b in -50..=50 {
            let p = tp(a, b);
            assert_eq!(tropical_gamma_iter(p, 5), p, "failed at {p:?}");
        }
    }
}

#[test]
fn cones_of_special_points() {
    let all: Vec<u8> = cone_of(tp(0, 0)).iter().map(|c| c.0).collect();
    assert_eq!(all, vec![1, 2, 3, 4, 5]);
    let diag: Vec<u8> = cone_of(tp(2, 2)).iter().map(|c| c.0).collect();
    assert_eq!(diag, vec![4, 5]);
}

#[test]
fn point_maps_match_examples_and_have_order_five() {
    let (x, y) = gamma_x_point(&rat(1, 1), &rat(1, 1)).unwrap();
    assert_eq!((x, y), (rat(1, 1), rat(2, 1)));
    let (a, b) = gamma_a_point(&rat(1, 1), &rat(1, 1)).unwrap();
    assert_eq!((a, b), (rat(2, 1), rat(1, 1)));

    let mut p = (rat(1, 1), rat(1, 1));
    for _ in 0..5 {
        p = gamma_x_point(&p.0, &p.1).unwrap();
    }
    assert_eq!(p, (rat(1, 1), rat(1, 1)));

    let mut q = (rat(1, 1), rat(1, 1));
    for _ in 0..5 {
        q = gamma_a_point(&q.0, &q.1).unwrap();
    }
    assert_eq!(q, (rat(1, 1), rat(1, 1)));

    assert!(matches!(
        gamma_x_point(&rat(1, 1), &rat(0, 1)),
        Err(ClusterError::DegeneratePoint)
    ));
}

#[test]
fn canonical_ia_examples() {
    assert_eq!(canonical_ia(tp(0, 0)), LaurentPoly2::one());
    assert_eq!(canonical_ia(tp(-1, 1)), LaurentPoly2::monomial(-1, 1, 1));
    // IA(1, 0) = X + X Y^{-1} + Y^{-1}
    let f = canonical_ia(tp(1, 0));
    assert_eq!(f.coeff(1, 0), 1);
    assert_eq!(f.coeff(1, -1), 1);
    assert_eq!(f.coeff(0, -1), 1);
    assert_eq!(f.len(), 3);
}

#[test]
fn overlap_agreement_on_boundaries_up_to_20() {
    // canonical_ia asserts internally that every applicable row agrees;
    // walk all boundary points of the five cones.
    for t in -20..=20i64 {
        for p in [tp(0, t), tp(t, 0), tp(t.abs(), t.abs())] {
            let _ = canonical_ia(p);
            assert!(cone_of(p).len() >= 2 || t == 0);
        }
    }
}

#[test]
fn equivariance_positivity_leading_up_to_8() {
    for a in -8..=8 {
        for b in -8..=8 {
            let p = tp(a, b);
            assert!(equivariance_check(p), "equivariance fails at {p:?}");
            assert!(positivity_check(p), "positivity fails at {p:?}");
            assert!(leading_monomial_check(p), "leading monomial fails at {p:?}");
        }
    }
}

#[test]
fn leading_monomial_up_to_10() {
    for a in -10..=10 {
        for b in -10..=10 {
            assert!(leading_monomial_check(tp(a, b)));
        }
    }
}

#[test]
fn pullback_examples() {
    // X -> Y^{-1}
    let im = pullback_gamma_x(&LaurentPoly2::monomial(1, 0, 1));
    assert!(im.eq_cross(&LaurentFraction2::from_poly(LaurentPoly2::monomial(0, -1, 1))));
    // Y -> (1+Y)X
    let im = pullback_gamma_x(&LaurentPoly2::monomial(0, 1, 1));
    let expect = LaurentPoly2::monomial(1, 0, 1).add(&LaurentPoly2::monomial(1, 1, 1));
    assert!(im.eq_cross(&LaurentFraction2::from_poly(expect)));
}

#[test]
fn pullback_agrees_with_point_map_on_samples() {
    // F(gamma_pt(x, y)) == (pullback F)(x, y) on random-ish rational points.
    let f = LaurentPoly2::monomial(1, 1, 1)
        .add(&LaurentPoly2::monomial(-1, 2, 3))
        .add(&LaurentPoly2::monomial(2, -2, -2));
    let im = pullback_gamma_x(&f);
    let mut k = 1i64;
    for _ in 0..50 {
        k += 7;
        let x = rat(k % 23 + 1, 7);
        let y = rat(k % 17 + 2, 5);
        let (gx, gy) = gamma_x_point(&x, &y).unwrap();
        let lhs = f.eval_rational(&gx, &gy);
        let rhs = im.num.eval_rational(&x, &y) / im.den.eval_rational(&x, &y);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn basis_multiplication_examples() {
    // Monomial case: IA(0,1) * IA(0,1) = IA(0,2).
    let e = multiply_in_basis_classical(tp(0, 1), tp(0, 1)).unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e[&tp(0, 2)], 1);

    // IA(1,0) * IA(-1,0) expands with nonnegative coefficients.
    let e = multiply_in_basis_classical(tp(1, 0), tp(-1, 0)).unwrap();
    assert!(e.values().all(|&c| c > 0));
    // Evaluation oracle at exact rational points.
    for (x, y) in [(rat(2, 3), rat(5, 7)), (rat(11, 2), rat(1, 9)), (rat(4, 5), rat(13, 3))] {
        let direct = canonical_ia(tp(1, 0)).eval_rational(&x, &y)
            * canonical_ia(tp(-1, 0)).eval_rational(&x, &y);
        assert_eq!(direct, eval_expansion(&e, &x, &y));
    }

    let e = multiply_in_basis_classical(tp(1, 0), tp(0, 1)).unwrap();
    let mut k = 0i64;
    for _ in 0..20 {
        k += 3;
        let x = rat(k % 19 + 1, 11);
        let y = rat(k % 13 + 1, 4);
        let direct = canonical_ia(tp(1, 0)).eval_rational(&x, &y)
            * canonical_ia(tp(0, 1)).eval_rational(&x, &y);
        assert_eq!(direct, eval_expansion(&e, &x, &y));
    }
}

#[test]
fn basis_multiplication_closes_small_range() {
    // Spot-check part of the |a|,|b| <= 5 closure here; the full sweep runs
    // in the acceptance suite.
    for a in -2..=2 {
        for b in -2..=2 {
            let e = multiply_in_basis_classical(tp(a, b), tp(1, -1));
            assert!(e.is_ok(), "expansion failed at ({a},{b})");
        }
    }
}

#[test]
fn dump_format() {
    let line = dump_basis_line(tp(-1, 1));
    assert_eq!(line, "-1 1 : [(-1,1,1)]");
}
