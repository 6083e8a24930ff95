//! Randomized genericity machinery over exact rationals: generic
//! combinations, generic linear slices, smoothness localizers with certified
//! degree bounds, points-at-infinity ideals, and Jacobian-minor descriptions
//! of singular loci with per-minor complete-intersection presentations.
//!
//! Every random draw is verified by an explicit symbolic condition (a
//! dimension or emptiness check); a bad draw costs a retry, never a wrong
//! answer. All draws come from a seeded stream, so identical inputs and seeds
//! reproduce identical outputs including retry counts.

use crate::error::{Error, Result};
use crate::groebner::{Dimension, EngineConfig, Ideal};
use crate::poly::{determinant, Monomial, MonomialOrder, Polynomial, Rational, Ring};
use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Controls the random draws of the genericity loops.
#[derive(Debug, Clone)]
pub struct GenericityConfig {
    pub seed: u64,
    /// Draws are uniform integers in [-coeff_bound, coeff_bound].
    pub coeff_bound: u32,
    pub max_attempts: u32,
}

impl Default for GenericityConfig {
    fn default() -> Self {
        GenericityConfig { seed: 0, coeff_bound: 997, max_attempts: 64 }
    }
}

/// Per-stage retry counts, recorded for reproducibility checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct GenericityReport {
    pub stages: Vec<(String, u32)>,
}

impl GenericityReport {
    pub(crate) fn record(&mut self, stage: &str, attempts: u32) {
        self.stages.push((stage.to_string(), attempts));
    }
}

/// An affine variety with its declared codimension and generator degree bound.
#[derive(Debug, Clone)]
pub struct VarietySpec {
    ideal: Ideal,
    codim: usize,
    degree_bound: u32,
}

impl VarietySpec {
    /// Validates that dim V(ideal) equals n - declared_codim.
    pub fn new(ideal: Ideal, declared_codim: usize, cfg: &EngineConfig) -> Result<VarietySpec> {
        let n = ideal.ring().len();
        if declared_codim > n {
            return Err(Error::Validation(format!(
                "declared codimension {declared_codim} exceeds ambient dimension {n}"
            )));
        }
        let dim = ideal.dimension(cfg, "variety validation")?;
        if dim != Dimension::Dim(n - declared_codim) {
            return Err(Error::Validation(format!(
                "declared codimension {declared_codim} but dim V(I) = {:?} in {n} variables",
                dim
            )));
        }
        let degree_bound = ideal.generators().iter().map(|g| g.degree()).max().unwrap_or(0);
        Ok(VarietySpec { ideal, codim: declared_codim, degree_bound })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn dim(&self) -> usize {
        self.ring().len() - self.codim
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }
}

/// The ideal ⟨x0, g1^h, ..., gs^h⟩ cutting the affine cone over the points at
/// infinity of V(I). The homogenized polynomials must come from a Gröbner
/// basis under a graded order for the cone to equal the closure; grevlex is
/// used and asserted here.
pub fn points_at_infinity(ideal: &Ideal, cfg: &EngineConfig, context: &str) -> Result<Ideal> {
    let order = MonomialOrder::GrevLex;
    debug_assert!(order.is_graded());
    let basis = ideal.groebner_basis(&order, cfg, context)?;
    let x0 = ideal.ring().fresh_name("x0");
    let mut vars = vec![x0];
    vars.extend(ideal.ring().vars().iter().cloned());
    let ext = Ring::new(vars);
    let mut gens = vec![Polynomial::var(&ext, 0)];
    for g in basis.iter() {
        gens.push(g.homogenize(&ext.vars()[0]));
    }
    Ok(Ideal::new(&ext, gens))
}

fn draw_coeff(rng: &mut ChaCha8Rng, bound: u32) -> Rational {
    let b = bound as i64;
    Rational::from(BigInt::from(rng.gen_range(-b..=b)))
}

/// A random integer combination of the given polynomials.
pub fn random_combination(
    gens: &[Polynomial],
    ring: &Arc<Ring>,
    rng: &mut ChaCha8Rng,
    bound: u32,
) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for g in gens {
        acc = acc.add(&g.scalar_mul(&draw_coeff(rng, bound)));
    }
    acc
}

/// A random affine form: generic gradient plus a generic constant. The
/// constant keeps the slice off cone vertices and other singular points it
/// would otherwise be forced through; only the gradient enters the Jacobian.
pub fn random_affine_form(ring: &Arc<Ring>, rng: &mut ChaCha8Rng, bound: u32) -> Polynomial {
    let mut terms: Vec<(Monomial, Rational)> = (0..ring.len())
        .map(|i| (Monomial::var(ring.len(), i), draw_coeff(rng, bound)))
        .collect();
    terms.push((Monomial::one(ring.len()), draw_coeff(rng, bound)));
    Polynomial::from_terms(ring, terms)
}

/// Step 1 of the localizer construction: r random combinations G_i of the
/// generators, accepted once dim V(I_inf) = n - r.
pub fn generic_combinations(
    ideal: &Ideal,
    r: usize,
    rng: &mut ChaCha8Rng,
    gcfg: &GenericityConfig,
    ecfg: &EngineConfig,
    report: &mut GenericityReport,
) -> Result<Vec<Polynomial>> {
    let n = ideal.ring().len();
    if r == 0 {
        report.record("generic_combinations", 0);
        return Ok(Vec::new());
    }
    let mut last_dim = None;
    for attempt in 1..=gcfg.max_attempts {
        let combos: Vec<Polynomial> = (0..r)
            .map(|_| random_combination(ideal.generators(), ideal.ring(), rng, gcfg.coeff_bound))
            .collect();
        let trial = Ideal::new(ideal.ring(), combos.clone());
        let inf = points_at_infinity(&trial, ecfg, "generic_combinations: I_inf")?;
        let dim = inf.dimension(ecfg, "generic_combinations: dim V(I_inf)")?;
        last_dim = Some(dim.as_isize());
        if dim == Dimension::Dim(n - r) {
            report.record("generic_combinations", attempt);
            return Ok(combos);
        }
    }
    Err(Error::GenericityFailure {
        context: "generic_combinations".into(),
        attempts: gcfg.max_attempts,
        last_dim,
    })
}

/// Whether candidate linear forms slice V(combos) into a finite set with no
/// points at infinity; exposed separately so degenerate choices are testable.
pub fn slice_is_generic(
    combos: &[Polynomial],
    forms: &[Polynomial],
    ring: &Arc<Ring>,
    ecfg: &EngineConfig,
) -> Result<bool> {
    let mut gens = combos.to_vec();
    gens.extend(forms.iter().cloned());
    let sliced = Ideal::new(ring, gens);
    let inf = points_at_infinity(&sliced, ecfg, "linear_slice: I_inf")?;
    if inf.dimension(ecfg, "linear_slice: dim V(I_inf)")? != Dimension::Dim(0) {
        return Ok(false);
    }
    // the Jacobian determinant must be nonzero at every fiber point,
    // symbolically: V(combos, forms, det) = empty
    let jac = jacobian_rows(combos, ring)
        .into_iter()
        .chain(jacobian_rows(forms, ring))
        .collect::<Vec<_>>();
    let det = determinant(&jac);
    let test = sliced.plus(&[det]);
    Ok(test.dimension(ecfg, "linear_slice: fiber regularity")? == Dimension::Empty)
}

/// Step 2: n - r random linear forms slicing Z = V(combos) into a finite,
/// regular fiber. Returns the forms and the zero-dimensional fiber ideal.
pub fn generic_linear_slice(
    combos: &[Polynomial],
    r: usize,
    ring: &Arc<Ring>,
    rng: &mut ChaCha8Rng,
    gcfg: &GenericityConfig,
    ecfg: &EngineConfig,
    report: &mut GenericityReport,
) -> Result<(Vec<Polynomial>, Ideal)> {
    let n = ring.len();
    let mut last_dim = None;
    for attempt in 1..=gcfg.max_attempts {
        let forms: Vec<Polynomial> =
            (0..n - r).map(|_| random_affine_form(ring, rng, gcfg.coeff_bound)).collect();
        if slice_is_generic(combos, &forms, ring, ecfg)? {
            let mut gens = combos.to_vec();
            gens.extend(forms.iter().cloned());
            report.record("generic_linear_slice", attempt);
            return Ok((forms, Ideal::new(ring, gens)));
        }
        last_dim = Some(-2); // condition failed; detail not retained
        if n == r {
            break; // no draws involved, retrying cannot help
        }
    }
    Err(Error::GenericityFailure {
        context: "generic_linear_slice".into(),
        attempts: gcfg.max_attempts,
        last_dim,
    })
}

/// Gradient rows of the given polynomials.
pub fn jacobian_rows(polys: &[Polynomial], ring: &Arc<Ring>) -> Vec<Vec<Polynomial>> {
    polys
        .iter()
        .map(|p| (0..ring.len()).map(|i| p.partial_derivative(i)).collect())
        .collect()
}

/// The localizing polynomial p of a variety X relative to a subvariety W:
/// p = |Jac(G_1..G_r, l_1..l_{n-r})| · H with W ⊆ V(p) and X \ V(p) smooth
/// and dense in X, together with the data certifying it.
#[derive(Debug, Clone)]
pub struct SmoothLocalizer {
    pub p: Polynomial,
    pub jacobian_det: Polynomial,
    pub scaling: Polynomial,
    pub combos: Vec<Polynomial>,
    pub linear_forms: Vec<Polynomial>,
    /// r(D-1) + D', the certified degree bound.
    pub degree_bound: u32,
    pub report: GenericityReport,
}

pub fn smooth_localizer(
    x: &VarietySpec,
    w: Option<&Ideal>,
    gcfg: &GenericityConfig,
    ecfg: &EngineConfig,
) -> Result<SmoothLocalizer> {
    let mut rng = ChaCha8Rng::seed_from_u64(gcfg.seed);
    smooth_localizer_with_rng(x, w, &mut rng, gcfg, ecfg)
}

pub fn smooth_localizer_with_rng(
    x: &VarietySpec,
    w: Option<&Ideal>,
    rng: &mut ChaCha8Rng,
    gcfg: &GenericityConfig,
    ecfg: &EngineConfig,
) -> Result<SmoothLocalizer> {
    let ring = x.ring();
    let n = ring.len();
    let r = x.codim();

    // the extra generators of I(W) beyond I(X); W ⊆ V(H) for any combination
    let u_list: Option<Vec<Polynomial>> = match w {
        None => None,
        Some(wid) => {
            if wid.is_empty_variety(ecfg, "localizer: W emptiness")? {
                None
            } else {
                let mut us = Vec::new();
                for g in wid.generators() {
                    if !x.ideal().contains(g, ecfg, "localizer: u filter")? {
                        us.push(g.clone());
                    }
                }
                if us.is_empty() {
                    return Err(Error::DegenerateInput(
                        "W contains X: no generator of I(W) survives modulo I(X)".into(),
                    ));
                }
                Some(us)
            }
        }
    };
    let d_prime = u_list.as_ref().map(|us| us.iter().map(|u| u.degree()).max().unwrap()).unwrap_or(0);
    let d = x.degree_bound();

    let mut report = GenericityReport::default();
    let mut outer_attempts = 0;
    loop {
        outer_attempts += 1;
        if outer_attempts > gcfg.max_attempts {
            return Err(Error::GenericityFailure {
                context: "smooth_localizer: p vanished identically on X".into(),
                attempts: gcfg.max_attempts,
                last_dim: None,
            });
        }
        let combos = generic_combinations(x.ideal(), r, rng, gcfg, ecfg, &mut report)?;
        let (forms, _fiber) = generic_linear_slice(&combos, r, ring, rng, gcfg, ecfg, &mut report)?;

        let scaling = match &u_list {
            None => Polynomial::one(ring),
            Some(us) => {
                let mut found = None;
                let mut last_dim = None;
                for attempt in 1..=gcfg.max_attempts {
                    let h = random_combination(us, ring, rng, gcfg.coeff_bound);
                    let j = Ideal::new(ring, {
                        let mut gs = combos.clone();
                        gs.push(h.clone());
                        gs
                    });
                    let jinf = points_at_infinity(&j, ecfg, "localizer: J_inf")?;
                    let dim = jinf.dimension(ecfg, "localizer: dim V(J_inf)")?;
                    last_dim = Some(dim.as_isize());
                    if dim.as_isize() < (n - r) as isize {
                        report.record("scaling_combination", attempt);
                        found = Some(h);
                        break;
                    }
                }
                found.ok_or(Error::GenericityFailure {
                    context: "smooth_localizer: scaling combination".into(),
                    attempts: gcfg.max_attempts,
                    last_dim,
                })?
            }
        };

        let mut rows = jacobian_rows(&combos, ring);
        rows.extend(jacobian_rows(&forms, ring));
        let jacobian_det = determinant(&rows);
        let p = jacobian_det.mul(&scaling);

        // p must not vanish identically on X, else X \ V(p) would be empty
        if !x.ideal().vanishes_on(&p, ecfg, "localizer: p not in I(X)")? {
            return Ok(SmoothLocalizer {
                p,
                jacobian_det,
                scaling,
                combos,
                linear_forms: forms,
                degree_bound: r as u32 * d.saturating_sub(1) + d_prime,
                report,
            });
        }
        report.record("restart_p_vanished", outer_attempts);
    }
}

/// One branch of the Jacobian-minor description of the smooth locus: on
/// `localizer != 0` the generators indexed by `rows` have independent
/// differentials, presenting the variety as a local complete intersection.
#[derive(Debug, Clone)]
pub struct JacobianPiece {
    pub localizer: Polynomial,
    pub rows: Vec<usize>,
}

/// All r×r minors of the Jacobian of the generators, with the generator
/// subset realizing each minor. Returns the surviving pieces and the cut
/// ideal I + ⟨minors⟩ whose zero set is the (scheme-level) singular locus.
pub fn singular_pieces(
    ideal: &Ideal,
    codim: usize,
    ecfg: &EngineConfig,
    context: &str,
) -> Result<(Vec<JacobianPiece>, Ideal)> {
    let ring = ideal.ring();
    let n = ring.len();
    if codim == 0 {
        // ambient space: smooth everywhere, empty cut
        return Ok((
            vec![JacobianPiece { localizer: Polynomial::one(ring), rows: Vec::new() }],
            Ideal::new(ring, vec![Polynomial::one(ring)]),
        ));
    }
    let gens = ideal.generators();
    let jac = jacobian_rows(gens, ring);
    let mut pieces = Vec::new();
    let mut minors = Vec::new();
    for rows in subsets(gens.len(), codim) {
        for cols in subsets(n, codim) {
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| jac[i][j].clone()).collect())
                .collect();
            let m = determinant(&sub);
            if m.is_zero() {
                continue;
            }
            if ideal.contains(&m, ecfg, context)? {
                continue; // vanishes on all of V(I): empty piece
            }
            minors.push(m.clone());
            pieces.push(JacobianPiece { localizer: m, rows: rows.clone() });
        }
    }
    let cut = ideal.plus(&minors);
    Ok((pieces, cut))
}

/// k-subsets of {0..n-1} in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
