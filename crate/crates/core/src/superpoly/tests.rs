use super::*;
use crate::Q;
use std::sync::Arc;

fn uni() -> Arc<Universe> {
    let mut b = UniverseBuilder::new();
    b.hbar()
        .even("x")
        .even("y")
        .odd("xi1")
        .odd("xi2")
        .odd("xi3")
        .odd_const("lam")
        .odd_const("lam1")
        .odd_const("lam2")
        .param("t");
    b.build().unwrap()
}

fn p(u: &Arc<Universe>, s: &str) -> Poly {
    parse_poly(u, s).unwrap()
}

#[test]
fn odd_square_and_antisymmetry() {
    let u = uni();
    let xi1 = p(&u, "xi1");
    let xi2 = p(&u, "xi2");
    assert!((&xi1 * &xi1).is_zero());
    assert!((&(&xi1 * &xi2) + &(&xi2 * &xi1)).is_zero());
    assert_eq!(&p(&u, "x + xi1*xi2") * &p(&u, "x - xi1*xi2"), p(&u, "x^2"));
}

#[test]
fn left_derivatives() {
    let u = uni();
    let xi1 = u.idx("xi1");
    assert_eq!(partial(xi1, &p(&u, "xi1*x")).unwrap(), p(&u, "x"));
    assert_eq!(partial(xi1, &p(&u, "xi2*xi1")).unwrap(), p(&u, "-xi2"));
    assert_eq!(partial(u.idx("x"), &p(&u, "x^3")).unwrap(), p(&u, "3*x^2"));
    assert!(matches!(
        partial(u.idx("lam"), &p(&u, "lam")),
        Err(AlgebraError::NotDifferentiable(_))
    ));
}

#[test]
fn substitution_examples() {
    let u = uni();
    let mut a = Assignment::new();
    a.insert(u.idx("xi1"), p(&u, "lam*t"));
    assert_eq!(substitute(&p(&u, "xi1"), &a).unwrap(), p(&u, "lam*t"));
    let mut b = Assignment::new();
    b.insert(u.idx("xi1"), p(&u, "lam1*x"));
    b.insert(u.idx("xi2"), p(&u, "lam2"));
    // xi1 xi2 -> (lam1 x)(lam2) = lam1 lam2 x
    assert_eq!(substitute(&p(&u, "xi1*xi2"), &b).unwrap(), p(&u, "lam1*lam2*x"));
    let mut c = Assignment::new();
    c.insert(u.idx("xi1"), Poly::zero(&u));
    assert_eq!(substitute(&p(&u, "x^2"), &c).unwrap(), p(&u, "x^2"));
    let mut bad = Assignment::new();
    bad.insert(u.idx("xi1"), p(&u, "x"));
    assert!(matches!(substitute(&p(&u, "xi1"), &bad), Err(AlgebraError::ParityMismatch { .. })));
}

#[test]
fn berezin_examples() {
    let u = uni();
    let v = [u.idx("xi1"), u.idx("xi2")];
    assert_eq!(berezin(&p(&u, "xi1*xi2"), &v).unwrap(), Poly::one(&u));
    assert!(berezin(&p(&u, "x*xi1"), &v).unwrap().is_zero());
    assert!(berezin(&Poly::one(&u), &v[..1]).unwrap().is_zero());
    assert!(berezin(&p(&u, "xi1"), &[v[0], v[0]]).is_err());
}

#[test]
fn gaussian_examples() {
    let u = uni();
    let x = [u.idx("x")];
    assert_eq!(gaussian_moment(&Poly::one(&u), &x).unwrap(), Poly::one(&u));
    assert_eq!(gaussian_moment(&p(&u, "x^2"), &x).unwrap(), Poly::one(&u));
    assert_eq!(gaussian_moment(&p(&u, "x^4"), &x).unwrap(), Poly::int(&u, 3));
    assert!(gaussian_moment(&p(&u, "xi1*x^2"), &x).is_err());
}

#[test]
fn laurent_examples() {
    let u = uni();
    assert_eq!(laurent_coeff(&p(&u, "hbar^-1*x + 3"), -1), p(&u, "x"));
    assert_eq!(laurent_coeff(&p(&u, "(1 + hbar*xi1*xi2)^2"), 1), p(&u, "2*xi1*xi2"));
    assert!(laurent_coeff(&Poly::zero(&u), 4).is_zero());
}

#[test]
fn relations_reduce_and_units_clear() {
    let mut b = UniverseBuilder::new();
    b.param("p1").param("p2").param("s").alg_const("c", "1 - s^2", false).alg_const(
        "pstar",
        "p1^2 + p2^2",
        true,
    );
    let u = b.build().unwrap();
    assert_eq!(p(&u, "c^2 + s^2"), Poly::one(&u));
    let inv = p(&u, "pstar^-1");
    assert!((&(&inv * &p(&u, "pstar")) - &Poly::one(&u)).is_zero());
    // pstar^-2 (p1^2 + p2^2) = 1, only visible after clearing
    let r = &p(&u, "pstar^-2*p1^2 + pstar^-2*p2^2") - &Poly::one(&u);
    assert!(!r.is_empty());
    assert!(r.is_zero());
}

#[test]
fn nilpotent_inverse() {
    let mut b = UniverseBuilder::new();
    b.even("x").odd("xi").nilpotent("eps");
    let u = b.build().unwrap();
    let f = p(&u, "2 + eps*x + xi*xi");
    let g = f.try_inverse().unwrap();
    assert_eq!(&f * &g, Poly::one(&u));
    assert!(p(&u, "x").try_inverse().is_err());
}

#[test]
fn universe_mismatch_is_named() {
    let u = uni();
    let mut b = UniverseBuilder::new();
    b.even("z");
    let v = b.build().unwrap();
    let err = p(&u, "x").try_mul(&p(&v, "z")).unwrap_err();
    assert_eq!(err, AlgebraError::UniverseMismatch("z".into()));
}

#[test]
fn text_round_trip() {
    let u = uni();
    let f = p(&u, "3/2*x^2*xi1 - hbar^-1*y + 7 - xi2*xi1");
    let g = parse_poly(&u, &f.to_text()).unwrap();
    assert_eq!(f, g);
    assert_eq!(Poly::constant(&u, Q::new(1.into(), 3.into())).to_text(), "1/3");
}
