use super::parse::{parse, poly};
use super::*;
use num::complex::Complex64;

fn xyz() -> Arc<Ring> {
    Ring::new(vec!["x", "y", "z"])
}

#[test]
fn parse_basic() {
    let r = xyz();
    let p = poly("x^2 - z*y^2", &r);
    assert_eq!(p.terms().len(), 3 - 1); // two terms: x^2 and -z*y^2
    assert_eq!(p.degree(), 3);
    assert_eq!(parse("0", &r).unwrap(), Polynomial::zero(&r));
    let q = poly("(x+y)^2 - x^2 - 2*x*y", &r);
    assert_eq!(q, poly("y^2", &r));
}

#[test]
fn parse_rejects_garbage() {
    let r = xyz();
    assert!(matches!(parse("x + w", &r), Err(crate::error::Error::Parse { .. })));
    assert!(parse("x +", &r).is_err());
    assert!(parse("2x", &r).is_err()); // implicit multiplication
    assert!(parse("x^(2)", &r).is_err()); // exponent must be a literal
    let err = parse("x * * y", &r).unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("byte"), "position-annotated: {msg}");
}

#[test]
fn rational_literals() {
    let r = xyz();
    let p = poly("3/4*x + 1/2", &r);
    let two = Rational::new(num::BigInt::from(1), num::BigInt::from(2));
    assert_eq!(p.evaluate_exact(&[Rational::zero(), Rational::zero(), Rational::zero()]), two);
}

#[test]
fn arithmetic_identities() {
    let r = xyz();
    let p = poly("(x+1)*(x-1)", &r);
    assert_eq!(p, poly("x^2-1", &r));
    let q = poly("x^3 - 2*y + 7", &r);
    assert!(q.add(&q.neg()).is_zero());
    assert!(poly("x", &r).mul(&Polynomial::zero(&r)).is_zero());
}

#[test]
fn ring_mismatch_is_an_error() {
    let r = xyz();
    let s = Ring::new(vec!["a", "b"]);
    let p = poly("x", &r);
    let q = poly("a", &s);
    assert!(p.checked_add(&q).is_err());
    assert!(p.checked_mul(&q).is_err());
}

#[test]
fn partial_derivatives() {
    let r = xyz();
    assert_eq!(poly("x^2*y", &r).partial_derivative(0), poly("2*x*y", &r));
    assert_eq!(poly("5", &r).partial_derivative(0), Polynomial::zero(&r));
    let rb = Ring::new(vec!["x", "y"]);
    assert_eq!(poly("x + x^2*y", &rb).partial_derivative(1), poly("x^2", &rb));
}

#[test]
fn homogenize_examples() {
    let rxy = Ring::new(vec!["x", "y"]);
    let h = poly("x^2 + y", &rxy).homogenize("x0");
    let ext = Ring::new(vec!["x0", "x", "y"]);
    assert_eq!(h, poly("x^2 + y*x0", &ext));
    // already homogeneous: unchanged up to ring extension
    let h2 = poly("x^2 + x*y", &rxy).homogenize("x0");
    assert_eq!(h2, poly("x^2 + x*y", &ext));
    let h3 = poly("x^2 + y^2 - 1", &rxy).homogenize("x0");
    assert_eq!(h3, poly("x^2 + y^2 - x0^2", &ext));
    // dehomogenize recovers the input
    assert_eq!(h3.dehomogenize(), poly("x^2 + y^2 - 1", &rxy));
}

#[test]
fn evaluation() {
    let r = xyz();
    let p = poly("x^2 - z*y^2", &r);
    let one = Rational::one();
    assert!(p.evaluate_exact(&[one.clone(), one.clone(), one]).is_zero());

    let rx = Ring::new(vec!["x"]);
    let three = Rational::from(num::BigInt::from(3));
    assert_eq!(poly("x", &rx).evaluate_exact(&[three.clone()]), three);

    // f = x + x^2*y at x = 0.1, y = -1/(2*0.1) + 0.1 equals t/2 + t^3 = 0.051
    let rb = Ring::new(vec!["x", "y"]);
    let f = poly("x + x^2*y", &rb);
    let t = 0.1;
    let v = f.evaluate_complex(&[Complex64::new(t, 0.0), Complex64::new(-1.0 / (2.0 * t) + t, 0.0)]);
    assert!((v.re - (t / 2.0 + t * t * t)).abs() < 1e-12, "got {v}");
    assert!(v.im.abs() < 1e-15);
}

#[test]
fn determinant_examples() {
    let r = xyz();
    let c = |s: &str| poly(s, &r);
    // constants
    let d = determinant(&[vec![c("1"), c("2")], vec![c("3"), c("4")]]);
    assert_eq!(d, c("-2"));
    // Jacobian of (x^2+y^2-1, b1*x+b2*y) with b = (5, 7)
    let d = determinant(&[vec![c("2*x"), c("2*y")], vec![c("5"), c("7")]]);
    assert_eq!(d, c("14*x - 10*y"));
    assert_eq!(d.degree(), 1);
    // repeated row
    let d = determinant(&[vec![c("x"), c("y")], vec![c("x"), c("y")]]);
    assert!(d.is_zero());
}

#[test]
fn determinant_alternating_and_bareiss_agree() {
    let r = xyz();
    let entries = [
        ["x", "y", "1", "z"],
        ["z", "x^2", "y", "0"],
        ["1", "0", "x", "y"],
        ["y", "z", "0", "x"],
    ];
    let m: Vec<Vec<Polynomial>> =
        entries.iter().map(|row| row.iter().map(|s| poly(s, &r)).collect()).collect();
    let d = determinant(&m);
    let mut swapped = m.clone();
    swapped.swap(1, 3);
    assert_eq!(determinant(&swapped), d.neg());
    // force the Bareiss path by padding to 9x9 with an identity block
    let n = 9;
    let mut big: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i < 4 && j < 4 {
                        m[i][j].clone()
                    } else if i == j {
                        Polynomial::one(&r)
                    } else {
                        Polynomial::zero(&r)
                    }
                })
                .collect()
        })
        .collect();
    assert_eq!(determinant(&big), d);
    big.swap(0, 1);
    assert_eq!(determinant(&big), d.neg());
}

#[test]
fn display_round_trips() {
    let r = xyz();
    for s in [
        "x^2 - z*y^2",
        "-x + 2",
        "1/2*x*y - 3/7",
        "x^3 + x^2*y + x*y^2 + y^3 - 1",
        "0",
        "-5",
    ] {
        let p = poly(s, &r);
        let back = parse(&p.to_string(), &r).unwrap();
        assert_eq!(p, back, "round trip of `{s}` via `{p}`");
    }
}

#[test]
fn map_to_ring_merges_variables() {
    let r4 = Ring::new(vec!["x", "y", "u", "v"]);
    let r2 = Ring::new(vec!["x", "y"]);
    let p = poly("x*u + y*v + u^2", &r4);
    // diagonal u:=x, v:=y
    let q = p.map_to_ring(&r2, &[0, 1, 0, 1]);
    assert_eq!(q, poly("2*x^2 + y^2", &r2));
}

#[test]
fn zero_projection() {
    let r3 = Ring::new(vec!["x", "y", "z"]);
    let r1 = Ring::new(vec!["y"]);
    let p = poly("x*y + y^2 + z - y", &r3);
    let q = p.set_vars_to_zero_and_project(&[true, false, true], &r1);
    assert_eq!(q, poly("y^2 - y", &r1));
}
