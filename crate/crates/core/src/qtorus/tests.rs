use super::*;
use crate::cluster::{canonical_ia, tropical_gamma, TropicalPoint};
use num_complex::Complex64;

fn tp(a: i64, b: i64) -> TropicalPoint {
    TropicalPoint::new(a, b)
}

fn c1() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

#[test]
fn multiplication_reorders() {
    let x = QT2Element::monomial(1, 0);
    let y = QT2Element::monomial(0, 1);
    // Y X = q^{-2} X Y
    let yx = y.mul(&x);
    assert_eq!(yx, QT2Element::monomial_scaled(1, 1, QLaurent::q_power(-2)));
    // M(1,0) M(0,1) = q M(1,1)
    let m10 = QT2Element::sym_monomial(1, 0);
    let m01 = QT2Element::sym_monomial(0, 1);
    let prod = m10.mul(&m01);
    assert_eq!(prod, QT2Element::sym_monomial(1, 1).scale_q(&QLaurent::q_power(1)));
    // unit
    let u = x.add(&yx);
    assert_eq!(u.mul(&QT2Element::one()), u);
}

#[test]
fn multiplication_is_associative() {
    let u = QT2Element::monomial(1, -1).add(&QT2Element::monomial_scaled(0, 2, QLaurent::q_power(3)));
    let v = QT2Element::monomial(-2, 1).add(&QT2Element::one());
    let w = QT2Element::monomial_scaled(1, 1, QLaurent::from_int(-2)).add(&QT2Element::monomial(3, 0));
    assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
}

#[test]
fn star_properties() {
    // The symmetrized monomials are the star-fixed points.
    let m = QT2Element::sym_monomial(3, -2);
    assert_eq!(m.star(), m);
    // Involutive.
    let u = QT2Element::monomial_scaled(1, 2, QLaurent::q_power(1))
        .add(&QT2Element::monomial_scaled(-1, 0, QLaurent::from_int(3)));
    assert_eq!(u.star().star(), u);
    // *(q 1) = q^{-1} 1
    let q1 = QT2Element::monomial_scaled(0, 0, QLaurent::q_power(1));
    assert_eq!(q1.star(), QT2Element::monomial_scaled(0, 0, QLaurent::q_power(-1)));
    // Antiautomorphism.
    let v = QT2Element::monomial(0, 1).add(&QT2Element::monomial(2, -1));
    assert_eq!(u.mul(&v).star(), v.star().mul(&u.star()));
}

#[test]
fn membership_examples() {
    // First spanning family passes through.
    let u = QT2Element::monomial(3, 2);
    let dec = membership_lq_prime(&u).unwrap();
    assert_eq!(dec.nonneg.len(), 1);
    assert!(dec.neg.is_empty());

    // X Y^{-1} alone is not Laurent-stable.
    let bad = QT2Element::monomial(1, -1);
    assert!(matches!(
        membership_lq_prime(&bad),
        Err(QTorusError::NonMember { y_degree: -1 })
    ));

    // Normal-ordered X^a Y^{-1} (1 + q X^{-1}) is a member with quotient X^a.
    let a = 2;
    let s = QT2Element::monomial(a, -1).mul(
        &QT2Element::one().add(&QT2Element::monomial_scaled(-1, 0, QLaurent::q_power(1))),
    );
    let dec = membership_lq_prime(&s).unwrap();
    let quot = &dec.neg[&1];
    assert_eq!(quot.len(), 1);
    assert_eq!(quot[&a], QLaurent::one());
}

#[test]
fn gamma_on_generators() {
    let x = QT2Element::monomial(1, 0);
    assert_eq!(apply_gamma_q(&x).unwrap(), QT2Element::monomial(0, -1));
    // gamma(Y) = (1+qY) X, normal-ordered X + q^{-1} X Y.
    let y = QT2Element::monomial(0, 1);
    let gy = apply_gamma_q(&y).unwrap();
    let expect = QT2Element::monomial(1, 0)
        .add(&QT2Element::monomial_scaled(1, 1, QLaurent::q_power(-1)));
    assert_eq!(gy, expect);
}

#[test]
fn canonical_basis_examples() {
    // First-cone seed.
    assert_eq!(
        canonical_iaq(tp(-1, 1)),
        QT2Element::monomial_scaled(-1, 1, QLaurent::q_power(1))
    );
    // I^q(1,0) = X + q X Y^{-1} + Y^{-1}
    let i10 = canonical_iaq(tp(1, 0));
    assert_eq!(i10.coeff(1, 0), QLaurent::one());
    assert_eq!(i10.coeff(1, -1), QLaurent::q_power(1));
    assert_eq!(i10.coeff(0, -1), QLaurent::one());
    assert_eq!(i10.len(), 3);
    // I^q(0,-1) = Y^{-1} + q^{-1} X^{-1} Y^{-1}
    let i0m1 = canonical_iaq(tp(0, -1));
    assert_eq!(i0m1.coeff(0, -1), QLaurent::one());
    assert_eq!(i0m1.coeff(-1, -1), QLaurent::q_power(-1));
    assert_eq!(i0m1.len(), 2);
}

#[test]
fn basis_invariants_small_range() {
    // Star-invariance, q-equivariance, order 5, leading monomial, q = 1
    // specialization, and positivity of all iterates; range 3 here, the
    // full range-6 sweep runs in the acceptance suite.
    for a in -3..=3 {
        for b in -3..=3 {
            let p = tp(a, b);
            let el = canonical_iaq(p);
            assert!(el.is_star_invariant(), "star fails at {p:?}");
            assert!(el.has_leading_sym_monomial(a, b), "leading fails at {p:?}");
            assert_eq!(specialize_q1(&el), canonical_ia(p), "q=1 fails at {p:?}");
            assert_eq!(
                apply_gamma_q(&canonical_iaq(tropical_gamma(p))).unwrap(),
                el,
                "equivariance fails at {p:?}"
            );
            let mut it = el.clone();
            for j in 0..5 {
                assert!(it.all_coeffs_positive(), "positivity fails at {p:?} iterate {j}");
                it = apply_gamma_q(&it).unwrap();
            }
            assert_eq!(it, el, "gamma^5 fails at {p:?}");
        }
    }
}

#[test]
fn specialization_trivia() {
    assert_eq!(
        specialize_q1(&QT2Element::sym_monomial(2, -3)),
        crate::cluster::LaurentPoly2::monomial(2, -3, 1)
    );
    assert_eq!(
        specialize_q1(&QT2Element::monomial_scaled(0, 0, QLaurent::q_power(3))),
        crate::cluster::LaurentPoly2::one()
    );
}

#[test]
fn termwise_symmetrization_matches_when_coefficients_are_one() {
    // All classical coefficients of I(1,1) are 1, so the two candidate
    // q-liftings agree there.
    assert_eq!(termwise_symmetrization(tp(1, 1)), canonical_iaq(tp(1, 1)));
    // With larger multiplicities they may differ; just record both run.
    let _ = termwise_symmetrization(tp(2, 0)) == canonical_iaq(tp(2, 0));
}

#[test]
fn basis_multiplication_q() {
    // Monomial case.
    let e = multiply_in_basis_q(tp(0, 1), tp(0, 1)).unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e[&tp(0, 2)], QLaurent::one());

    // I(1,0) I(0,1) = q I(1,1) + I(0,0).
    let e = multiply_in_basis_q(tp(1, 0), tp(0, 1)).unwrap();
    assert_eq!(e[&tp(1, 1)], QLaurent::q_power(1));
    assert_eq!(e[&tp(0, 0)], QLaurent::one());
    assert_eq!(e.len(), 2);

    // Reversing the product bars every structure constant.
    let rev = multiply_in_basis_q(tp(0, 1), tp(1, 0)).unwrap();
    assert_eq!(rev[&tp(1, 1)], QLaurent::q_power(-1));
    for (r, c) in &e {
        assert_eq!(&c.bar(), rev.get(r).unwrap(), "bar exchange fails at {r:?}");
    }

    // Structure constants specialize to the classical ones (range 2 here).
    for a in -2..=2 {
        for b in -2..=2 {
            let q_exp = multiply_in_basis_q(tp(a, b), tp(1, -1)).unwrap();
            let c_exp = crate::cluster::multiply_in_basis_classical(tp(a, b), tp(1, -1)).unwrap();
            let q_at_one: std::collections::BTreeMap<_, _> =
                q_exp.iter().map(|(r, c)| (*r, c.at_one())).collect();
            assert_eq!(q_at_one, c_exp, "specialization fails at ({a},{b})");
        }
    }
}

#[test]
fn clock_shift_relation_and_centers() {
    let q2 = |n: usize| (Complex64::i() * (4.0 * std::f64::consts::PI / n as f64)).exp();
    // X Y - q^2 Y X = 0 at N = 5.
    let x = clock_shift_model(&QT2Element::monomial(1, 0), 5, c1(), c1()).unwrap();
    let y = clock_shift_model(&QT2Element::monomial(0, 1), 5, c1(), c1()).unwrap();
    let comm = x.mul(&y).sub(&y.mul(&x).scale(q2(5)));
    assert!(comm.max_abs() < 1e-14, "{}", comm.max_abs());

    // X^N = alpha Id, Y^N = beta Id at N = 7.
    let alpha = Complex64::new(2.0, 0.0);
    let beta = Complex64::new(3.0, 0.0);
    let xn = clock_shift_model(&QT2Element::monomial(7, 0), 7, alpha, beta).unwrap();
    let yn = clock_shift_model(&QT2Element::monomial(0, 7), 7, alpha, beta).unwrap();
    assert!(xn.sub(&CMatrix::identity(7).scale(alpha)).max_abs() < 1e-12);
    assert!(yn.sub(&CMatrix::identity(7).scale(beta)).max_abs() < 1e-12);

    assert!(matches!(
        clock_shift_model(&QT2Element::one(), 4, c1(), c1()),
        Err(QTorusError::EvenN(4))
    ));
}

#[test]
fn clock_shift_is_an_algebra_map() {
    let u = QT2Element::monomial(1, -2).add(&QT2Element::monomial_scaled(0, 1, QLaurent::q_power(1)));
    let v = QT2Element::monomial(-1, 1).add(&QT2Element::sym_monomial(2, 2));
    for n in [5usize, 7, 9] {
        let mu = clock_shift_model(&u, n, c1(), c1()).unwrap();
        let mv = clock_shift_model(&v, n, c1(), c1()).unwrap();
        let muv = clock_shift_model(&u.mul(&v), n, c1(), c1()).unwrap();
        let diff = mu.mul(&mv).sub(&muv);
        assert!(diff.max_abs() < 1e-12, "N = {n}: {}", diff.max_abs());
    }
}

#[test]
fn clock_shift_confirms_gamma_identity() {
    // gamma^5(u) = u symbolically; the matrix models of both sides agree.
    let u = canonical_iaq(tp(1, -1));
    let mut g = u.clone();
    for _ in 0..5 {
        g = apply_gamma_q(&g).unwrap();
    }
    assert_eq!(g, u);
    for n in [5usize, 7, 9] {
        let a = clock_shift_model(&u, n, c1(), c1()).unwrap();
        let b = clock_shift_model(&g, n, c1(), c1()).unwrap();
        assert!(a.sub(&b).max_abs() < 1e-12);
    }
}

#[test]
fn modular_double_gamma() {
    let a = ModularDoubleElement::pure(QT2Element::monomial(0, 1), QT2Element::one());
    let g = a.gamma().unwrap();
    assert_eq!(g.tensors().len(), 1);
    assert_eq!(g.tensors()[0].0, apply_gamma_q(&QT2Element::monomial(0, 1)).unwrap());
    assert_eq!(g.tensors()[0].1, QT2Element::one());
}
