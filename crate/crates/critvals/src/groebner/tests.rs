use super::*;
use crate::groebner::dim::Dimension;
use crate::poly::{poly, MonomialOrder, Ring};

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

#[test]
fn basis_of_coordinate_ideal() {
    let r = Ring::new(vec!["x", "y"]);
    let i = Ideal::new(&r, vec![poly("x", &r), poly("y", &r)]);
    let b = i.groebner_basis(&MonomialOrder::Lex, &cfg(), "test").unwrap();
    assert_eq!(b.as_slice(), &[poly("x", &r), poly("y", &r)]);
}

#[test]
fn twisted_cubic_lex_basis_contains_projection_relation() {
    let r = Ring::new(vec!["x", "y", "z"]);
    let i = Ideal::new(&r, vec![poly("y - x^2", &r), poly("z - x^3", &r)]);
    let b = i.groebner_basis(&MonomialOrder::Lex, &cfg(), "test").unwrap();
    let target = poly("y^3 - z^2", &r);
    assert!(
        b.iter().any(|p| p == &target),
        "lex basis should contain y^3 - z^2, got {:?}",
        b.iter().map(|p| p.to_string()).collect::<Vec<_>>()
    );
}

#[test]
fn circle_and_line() {
    let r = Ring::new(vec!["x", "y"]);
    let i = Ideal::new(&r, vec![poly("x^2 + y^2 - 1", &r), poly("y - x", &r)]);
    let b = i.groebner_basis(&MonomialOrder::Lex, &cfg(), "test").unwrap();
    assert_eq!(b.as_slice(), &[poly("x - y", &r), poly("y^2 - 1/2", &r)]);
}

#[test]
fn normal_forms() {
    let r = Ring::new(vec!["x", "y"]);
    let gx = [poly("x", &r)];
    assert!(normal_form(&poly("x^2", &r), &gx, &MonomialOrder::GrevLex).is_zero());
    assert_eq!(
        normal_form(&poly("y", &r), &gx, &MonomialOrder::GrevLex),
        poly("y", &r)
    );
    // lex with y > x: substitute y -> x^2 in x^2*y + y
    let ryx = Ring::new(vec!["y", "x"]);
    let g = [poly("y - x^2", &ryx)];
    let nf = normal_form(&poly("x^2*y + y", &ryx), &g, &MonomialOrder::Lex);
    assert_eq!(nf, poly("x^4 + x^2", &ryx));
}

#[test]
fn buchberger_certificate_and_determinism_small() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let r = Ring::new(vec!["x", "y", "z"]);
    for _ in 0..25 {
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let mut terms = Vec::new();
            for _ in 0..rng.gen_range(1..=4) {
                let e = [
                    rng.gen_range(0..=1u32),
                    rng.gen_range(0..=1u32),
                    rng.gen_range(0..=1u32),
                ];
                let c: i64 = rng.gen_range(-4..=4);
                terms.push((
                    crate::poly::Monomial(e.to_vec()),
                    crate::poly::Rational::from(num::BigInt::from(c)),
                ));
            }
            let p = crate::poly::Polynomial::from_terms(&r, terms);
            if !p.is_zero() {
                gens.push(p);
            }
        }
        if gens.is_empty() {
            continue;
        }
        let i = Ideal::new(&r, gens.clone());
        let b = i.groebner_basis(&MonomialOrder::GrevLex, &cfg(), "cert").unwrap();
        // every S-polynomial of the returned basis reduces to zero
        for a in 0..b.len() {
            for c in a + 1..b.len() {
                let s = super::s_poly(
                    &super::KPoly::from_polynomial(&b[a], &MonomialOrder::GrevLex),
                    &super::KPoly::from_polynomial(&b[c], &MonomialOrder::GrevLex),
                    &MonomialOrder::GrevLex,
                );
                let sp = s.to_polynomial(&r);
                assert!(
                    normal_form(&sp, &b, &MonomialOrder::GrevLex).is_zero(),
                    "S-poly of basis pair must reduce to 0"
                );
            }
        }
        // shuffled generators give the identical reduced basis
        let mut shuffled = gens.clone();
        shuffled.reverse();
        let i2 = Ideal::new(&r, shuffled);
        let b2 = i2.groebner_basis(&MonomialOrder::GrevLex, &cfg(), "cert").unwrap();
        assert_eq!(b.as_slice(), b2.as_slice());
    }
}

#[test]
fn elimination_examples() {
    let r = Ring::new(vec!["x", "y", "z"]);
    let cubic = Ideal::new(&r, vec![poly("y - x^2", &r), poly("z - x^3", &r)]);
    let proj = cubic.elimination_ideal(&[1, 2], &cfg(), "test").unwrap();
    let ryz = Ring::new(vec!["y", "z"]);
    assert_eq!(proj.generators(), &[poly("y^3 - z^2", &ryz)]);

    let rxt = Ring::new(vec!["x", "t"]);
    let hyper = Ideal::new(&rxt, vec![poly("x*t - 1", &rxt)]);
    let closure = hyper.elimination_ideal(&[0], &cfg(), "test").unwrap();
    assert!(closure.generators().is_empty(), "closure of C* is C");

    let just_x = Ideal::new(&rxt, vec![poly("x", &rxt)]);
    let kept = just_x.elimination_ideal(&[0], &cfg(), "test").unwrap();
    let rx = Ring::new(vec!["x"]);
    assert_eq!(kept.generators(), &[poly("x", &rx)]);
}

#[test]
fn dimension_examples() {
    let r2 = Ring::new(vec!["x", "y"]);
    let circle = Ideal::new(&r2, vec![poly("x^2 + y^2 - 1", &r2)]);
    assert_eq!(circle.dimension(&cfg(), "t").unwrap(), Dimension::Dim(1));

    let origin = Ideal::new(&r2, vec![poly("x", &r2), poly("y", &r2)]);
    assert_eq!(origin.dimension(&cfg(), "t").unwrap(), Dimension::Dim(0));

    let unit = Ideal::new(&r2, vec![poly("1", &r2)]);
    assert_eq!(unit.dimension(&cfg(), "t").unwrap(), Dimension::Empty);

    let r3 = Ring::new(vec!["x0", "x", "y"]);
    let cone = Ideal::new(&r3, vec![poly("x0", &r3), poly("x^2 + y^2 - x0^2", &r3)]);
    assert_eq!(cone.dimension(&cfg(), "t").unwrap(), Dimension::Dim(1));

    let zero = Ideal::zero(&r2);
    assert_eq!(zero.dimension(&cfg(), "t").unwrap(), Dimension::Dim(2));
}

#[test]
fn membership_and_saturation() {
    let r = Ring::new(vec!["x", "y"]);
    let i = Ideal::new(&r, vec![poly("x", &r)]);
    assert!(i.contains(&poly("x^2", &r), &cfg(), "t").unwrap());

    let x2 = Ideal::new(&r, vec![poly("x^2", &r)]);
    assert!(!x2.contains(&poly("x", &r), &cfg(), "t").unwrap());
    assert!(x2
        .saturated_contains(&poly("x", &r), &poly("x", &r), &cfg(), "t")
        .unwrap());

    let xy = Ideal::new(&r, vec![poly("x*y", &r)]);
    assert!(xy
        .saturated_contains(&poly("y", &r), &poly("x", &r), &cfg(), "t")
        .unwrap());
}

#[test]
fn intersection_is_variety_union() {
    let r = Ring::new(vec!["x", "y"]);
    let ix = Ideal::new(&r, vec![poly("x", &r)]);
    let iy = Ideal::new(&r, vec![poly("y", &r)]);
    let u = ix.intersect(&iy, &cfg(), "t").unwrap();
    // I(x-axis ∪ y-axis) = <xy>
    assert!(u.contains(&poly("x*y", &r), &cfg(), "t").unwrap());
    assert!(!u.contains(&poly("x", &r), &cfg(), "t").unwrap());
    assert!(u.vanishes_on(&poly("x*y", &r), &cfg(), "t").unwrap());
}

#[test]
fn radical_membership() {
    let r = Ring::new(vec!["x", "y"]);
    let fat = Ideal::new(&r, vec![poly("x^2", &r), poly("y", &r)]);
    assert!(fat.vanishes_on(&poly("x", &r), &cfg(), "t").unwrap());
    assert!(!fat.vanishes_on(&poly("x - 1", &r), &cfg(), "t").unwrap());
    let reduced = Ideal::new(&r, vec![poly("x", &r), poly("y", &r)]);
    assert!(fat.variety_equal(&reduced, &cfg(), "t").unwrap());
}

#[test]
fn budget_error_names_context() {
    let r = Ring::new(vec!["x", "y", "z"]);
    let i = Ideal::new(
        &r,
        vec![
            poly("x^4*y + z^2 - x", &r),
            poly("y^4*z + x^2 - y", &r),
            poly("z^4*x + y^2 - z", &r),
        ],
    );
    let tight = EngineConfig { spair_budget: 1 };
    let err = i.groebner_basis(&MonomialOrder::Lex, &tight, "stress case").unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("stress case"), "{msg}");
}

#[test]
fn generic_hyperplane_drops_dimension() {
    let r = Ring::new(vec!["x", "y", "z"]);
    let sphere = Ideal::new(&r, vec![poly("x^2 + y^2 + z^2 - 1", &r)]);
    assert_eq!(sphere.dimension(&cfg(), "t").unwrap(), Dimension::Dim(2));
    let sliced = sphere.plus(&[poly("3*x + 5*y - 7*z - 1", &r)]);
    assert_eq!(sliced.dimension(&cfg(), "t").unwrap(), Dimension::Dim(1));
    let pointy = sliced.plus(&[poly("2*x - y + z", &r)]);
    assert_eq!(pointy.dimension(&cfg(), "t").unwrap(), Dimension::Dim(0));
    // Bezout: a sphere cut by two generic hyperplanes is two points
    assert_eq!(pointy.finite_point_multiplicity(&cfg(), "t").unwrap(), Some(2));
}
