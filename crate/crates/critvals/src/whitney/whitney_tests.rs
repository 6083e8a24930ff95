use super::*;
use crate::groebner::{EngineConfig, Ideal};
use crate::poly::{poly, Polynomial, Rational, Ring};
use num::{BigInt, Zero};

fn cfg() -> StratifyConfig {
    StratifyConfig::default()
}

fn cfg_seeded(seed: u64) -> StratifyConfig {
    StratifyConfig {
        engine: EngineConfig::default(),
        genericity: GenericityConfig { seed, ..Default::default() },
    }
}

fn q(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

fn cross_pair(seed: u64) -> (PairContext, StratifyConfig) {
    let r2 = Ring::new(vec!["x", "y"]);
    let cfg = cfg_seeded(seed);
    let x_ideal = Ideal::new(&r2, vec![poly("x*y", &r2)]);
    let y_ideal = Ideal::new(&r2, vec![poly("x", &r2), poly("y", &r2)]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = GenericityReport::default();
    let combos = variety::generic_combinations(
        &x_ideal,
        1,
        &mut rng,
        &cfg.genericity,
        &cfg.engine,
        &mut rep,
    )
    .unwrap();
    let ctx = PairContext::new(
        x_ideal.generators(),
        &combos,
        &y_ideal,
        &[Polynomial::one(&r2)],
        &mut rng,
        &cfg,
        &mut rep,
    )
    .unwrap();
    (ctx, cfg)
}

#[test]
fn incidence_ideal_shape_for_cross_pair() {
    let (ctx, _) = cross_pair(0);
    // presentation of Y = origin inside X = V(xy): one generic extra equation
    assert_eq!(ctx.y_presentation.len(), 2);
    let g1 = incidence_ideal(&ctx);
    assert_eq!(g1.ring().len(), 10); // 4n + 1 + r with n = 2, r = 1
    assert_eq!(g1.generators().len(), 7); // 1 + 2 + 2 + 2
}

#[test]
fn incidence_ideal_vanishes_on_trivial_slice() {
    // gamma = lambda = 0 forces w = v = 0: (x, y, 0, 0, 0, 0) lies on the
    // incidence variety for any x in X and y in Y
    let (ctx, _) = cross_pair(0);
    let g1 = incidence_ideal(&ctx);
    // x = (3, 0) on the cross, y = (0, 0)
    let mut point = vec![q(3), q(0), q(0), q(0)];
    point.extend(std::iter::repeat(q(0)).take(6));
    for g in g1.generators() {
        assert!(g.evaluate_exact(&point).is_zero(), "{g} at trivial slice");
    }
}

#[test]
fn umbrella_incidence_has_gradient_v_block() {
    let r3 = Ring::new(vec!["x", "y", "z"]);
    let cfg = cfg_seeded(1);
    let x_ideal = Ideal::new(&r3, vec![poly("x^2 - z*y^2", &r3)]);
    let y_ideal = Ideal::new(&r3, vec![poly("x", &r3), poly("y", &r3)]);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut rep = GenericityReport::default();
    let combos =
        variety::generic_combinations(&x_ideal, 1, &mut rng, &cfg.genericity, &cfg.engine, &mut rep)
            .unwrap();
    let alpha = combos[0].div_exact(&poly("x^2 - z*y^2", &r3)).expect("scalar multiple");
    assert!(alpha.is_unit_constant());
    let ctx = PairContext::new(
        x_ideal.generators(),
        &combos,
        &y_ideal,
        &[Polynomial::one(&r3)],
        &mut rng,
        &cfg,
        &mut rep,
    )
    .unwrap();
    let g1 = incidence_ideal(&ctx);
    // v-block rows are v_i - lambda * alpha * d(x^2 - z y^2)/dx_i; check at a
    // concrete point: x = (2, 1, 4) on X, y = (0,0,3), gamma = 0 => w = 0,
    // lambda = 1 => v = alpha * (2x, -2zy, -y^2) = alpha * (4, -8, -1).
    let a = alpha.terms()[0].1.clone();
    let mut point = vec![q(2), q(1), q(4), q(0), q(0), q(3), q(0), q(0), q(0)];
    point.extend([&a * q(4), &a * q(-8), &a * q(-1)]);
    point.push(q(0)); // gamma
    point.push(q(1)); // lambda
    for g in g1.generators() {
        assert!(g.evaluate_exact(&point).is_zero(), "{g} at gradient slice");
    }
}

#[test]
fn conormal_secant_contains_expected_points() {
    let (ctx, cfg) = cross_pair(0);
    let c = conormal_secant_ideal(&ctx, &cfg).unwrap();
    assert_eq!(c.ring().len(), 8);
    // every (y*, y*, 0, 0) with y* in V(Y) = {0} is a limit point
    let zeros = vec![q(0); 8];
    for g in c.generators() {
        assert!(g.evaluate_exact(&zeros).is_zero());
    }
    // x on the x-axis, y = 0, w parallel to x - y, v parallel to (0, x):
    // (x, y, w, v) = ((5,0), (0,0), (10, 0), (0, 7)) is in the closure
    let pt = vec![q(5), q(0), q(0), q(0), q(10), q(0), q(0), q(7)];
    for g in c.generators() {
        assert!(g.evaluate_exact(&pt).is_zero(), "{g} at secant point");
    }
    // a v transverse to the conormal direction is cut away
    let bad = vec![q(5), q(0), q(0), q(0), q(10), q(0), q(7), q(0)];
    assert!(
        c.generators().iter().any(|g| !g.evaluate_exact(&bad).is_zero()),
        "conormal direction (7,0) at x-axis point should violate C(X,Y)"
    );
    // the x-block generators of I(X) reappear in the ideal
    let xgen = poly("x*y", &ctx.ring).map_to_ring(c.ring(), &[0, 1]);
    assert!(c.contains(&xgen, &cfg.engine, "t").unwrap());
}

#[test]
fn cross_origin_pair_is_whitney_regular() {
    let r2 = Ring::new(vec!["x", "y"]);
    let cfg = cfg_seeded(0);
    let x = VarietySpec::new(Ideal::new(&r2, vec![poly("x*y", &r2)]), 1, &cfg.engine).unwrap();
    let y = Ideal::new(&r2, vec![poly("x", &r2), poly("y", &r2)]);
    let w = whitney_failure_locus(&x, &y, &cfg).unwrap();
    assert!(w.is_empty_variety(&cfg.engine, "t").unwrap(), "W should be empty");
}

#[test]
fn umbrella_pair_fails_exactly_at_origin() {
    let r3 = Ring::new(vec!["x", "y", "z"]);
    let cfg = cfg_seeded(0);
    let x =
        VarietySpec::new(Ideal::new(&r3, vec![poly("x^2 - z*y^2", &r3)]), 1, &cfg.engine).unwrap();
    let zaxis = Ideal::new(&r3, vec![poly("x", &r3), poly("y", &r3)]);
    let w = whitney_failure_locus(&x, &zaxis, &cfg).unwrap();
    let origin = Ideal::new(&r3, vec![poly("x", &r3), poly("y", &r3), poly("z", &r3)]);
    assert!(
        w.variety_equal(&origin, &cfg.engine, "t").unwrap(),
        "W(umbrella, z-axis) = origin, got <{}>",
        w.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
    );
}

#[test]
fn smooth_ambient_pair_is_regular() {
    let r2 = Ring::new(vec!["x", "y"]);
    let cfg = cfg_seeded(0);
    let x = VarietySpec::new(Ideal::zero(&r2), 0, &cfg.engine).unwrap();
    let xaxis = Ideal::new(&r2, vec![poly("y", &r2)]);
    let w = whitney_failure_locus(&x, &xaxis, &cfg).unwrap();
    assert!(w.is_empty_variety(&cfg.engine, "t").unwrap());
}

#[test]
fn filtration_of_the_plane_is_one_level() {
    let r2 = Ring::new(vec!["x", "y"]);
    let cfg = cfg_seeded(0);
    let x = VarietySpec::new(Ideal::zero(&r2), 0, &cfg.engine).unwrap();
    let s = build_filtration(&x, FiltrationMode::Full, None, &cfg).unwrap();
    assert_eq!(s.levels.len(), 1);
    assert!(s.tail.is_none());
    assert_eq!(s.levels[0].dim, 2);
}

#[test]
fn filtration_of_the_cross() {
    let r2 = Ring::new(vec!["x", "y"]);
    let cfg = cfg_seeded(0);
    let x = VarietySpec::new(Ideal::new(&r2, vec![poly("x*y", &r2)]), 1, &cfg.engine).unwrap();
    let s = build_filtration(&x, FiltrationMode::Full, None, &cfg).unwrap();
    assert_eq!(s.levels.len(), 2);
    let origin = Ideal::new(&r2, vec![poly("x", &r2), poly("y", &r2)]);
    assert!(s.levels[1].ideal.variety_equal(&origin, &cfg.engine, "t").unwrap());
    assert_eq!(s.levels[1].dim, 0);
}

#[test]
fn filtration_of_the_umbrella_has_three_levels() {
    let r3 = Ring::new(vec!["x", "y", "z"]);
    let cfg = cfg_seeded(0);
    let x =
        VarietySpec::new(Ideal::new(&r3, vec![poly("x^2 - z*y^2", &r3)]), 1, &cfg.engine).unwrap();
    let s = build_filtration(&x, FiltrationMode::Full, None, &cfg).unwrap();
    assert_eq!(s.levels.len(), 3, "umbrella stratifies into three levels");
    let zaxis = Ideal::new(&r3, vec![poly("x", &r3), poly("y", &r3)]);
    let origin = Ideal::new(&r3, vec![poly("x", &r3), poly("y", &r3), poly("z", &r3)]);
    assert!(s.levels[1].ideal.variety_equal(&zaxis, &cfg.engine, "t").unwrap());
    assert!(s.levels[2].ideal.variety_equal(&origin, &cfg.engine, "t").unwrap());
    assert!(s.levels[0].dim > s.levels[1].dim && s.levels[1].dim > s.levels[2].dim);
}

#[test]
fn generic_rank_examples() {
    let r2 = Ring::new(vec!["x", "y"]);
    let cfg = cfg_seeded(0);
    let plane = Level {
        ideal: Ideal::zero(&r2),
        dim: 2,
        codim: 0,
        pieces: vec![Piece { localizer: Polynomial::one(&r2), rows: vec![] }],
        combos: vec![],
        generic_rank: None,
    };
    assert_eq!(generic_rank(&plane, &[poly("x", &r2)], &cfg).unwrap(), 1);
    assert_eq!(
        generic_rank(&plane, &[poly("x", &r2), poly("x", &r2)], &cfg).unwrap(),
        1,
        "dependent rows cap the rank"
    );
    // y-axis branch of the cross: f = x is constant there
    let cross = Ideal::new(&r2, vec![poly("x*y", &r2)]);
    let yaxis_branch = Level {
        ideal: cross.clone(),
        dim: 1,
        codim: 1,
        pieces: vec![Piece { localizer: poly("y", &r2), rows: vec![poly("x*y", &r2)] }],
        combos: vec![poly("x*y", &r2)],
        generic_rank: None,
    };
    assert_eq!(generic_rank(&yaxis_branch, &[poly("x", &r2)], &cfg).unwrap(), 0);
}

#[test]
fn rank_filtered_locus_is_contained_in_plain_locus() {
    // f = z on the umbrella pair: every surviving minor branch keeps the
    // failure locus; the rank-filtered locus equals the full one here
    let r3 = Ring::new(vec!["x", "y", "z"]);
    let cfg = cfg_seeded(0);
    let x_ideal = Ideal::new(&r3, vec![poly("x^2 - z*y^2", &r3)]);
    let x = VarietySpec::new(x_ideal.clone(), 1, &cfg.engine).unwrap();
    let zaxis = Ideal::new(&r3, vec![poly("x", &r3), poly("y", &r3)]);
    let w_plain = whitney_failure_locus(&x, &zaxis, &cfg).unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut rep = GenericityReport::default();
    let combos =
        variety::generic_combinations(&x_ideal, 1, &mut rng, &cfg.genericity, &cfg.engine, &mut rep)
            .unwrap();
    let ctx = PairContext::new(
        x_ideal.generators(),
        &combos,
        &zaxis,
        &[Polynomial::one(&r3)],
        &mut rng,
        &cfg,
        &mut rep,
    )
    .unwrap();
    let f = [poly("z", &r3)];
    let minors = rank_minors(&f, &ctx.y_presentation, &zaxis, 2, &cfg).unwrap();
    assert!(!minors.is_empty());
    let w_filtered = pair_failure_locus(&ctx, Some(&minors), &cfg).unwrap();
    assert!(w_plain.variety_contains(&w_filtered, &cfg.engine, "t").unwrap());

    // an empty minor family produces an empty locus
    let w_empty = pair_failure_locus(&ctx, Some(&[]), &cfg).unwrap();
    assert!(w_empty.is_empty_variety(&cfg.engine, "t").unwrap());
}

#[test]
fn partial_filtration_of_the_cross_stops_at_rank_zero_tail() {
    let r2 = Ring::new(vec!["x", "y"]);
    let cfg = cfg_seeded(0);
    let x = VarietySpec::new(Ideal::new(&r2, vec![poly("x*y", &r2)]), 1, &cfg.engine).unwrap();
    let f = [poly("x", &r2)];
    let s = build_filtration(&x, FiltrationMode::Partial, Some(&f), &cfg).unwrap();
    assert_eq!(s.levels.len(), 1);
    assert_eq!(s.levels[0].generic_rank, Some(1));
    let tail = s.tail.expect("rank-0 tail");
    assert_eq!(tail.generic_rank, Some(0));
    let origin = Ideal::new(&r2, vec![poly("x", &r2), poly("y", &r2)]);
    assert!(tail.ideal.variety_equal(&origin, &cfg.engine, "t").unwrap());
}

#[test]
fn filtration_is_deterministic_per_seed() {
    let r3 = Ring::new(vec!["x", "y", "z"]);
    let cfg = cfg_seeded(9);
    let x =
        VarietySpec::new(Ideal::new(&r3, vec![poly("x^2 - z*y^2", &r3)]), 1, &cfg.engine).unwrap();
    let a = build_filtration(&x, FiltrationMode::Full, None, &cfg).unwrap();
    let b = build_filtration(&x, FiltrationMode::Full, None, &cfg).unwrap();
    assert_eq!(
        serde_json::to_string(&a.to_json()).unwrap(),
        serde_json::to_string(&b.to_json()).unwrap()
    );
    assert_eq!(a.report, b.report);
}
