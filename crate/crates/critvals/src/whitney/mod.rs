//! Affine Whitney stratification machinery: the secant-conormal incidence
//! variety of a pair of nested varieties, its diagonal failure locus for the
//! Whitney condition (b), the rank-filtered variant used when only strata
//! relevant to a map matter, and the descending filtration assembling the
//! stratification.
//!
//! Levels are cut by the Jacobian-minor singular locus together with the
//! failure loci of all earlier pairs; each level carries a family of
//! localizing minors, every one of which certifies a complete-intersection
//! presentation of the level on the locus where it does not vanish.

use crate::error::{Error, Result};
use crate::groebner::{Dimension, EngineConfig, Ideal};
use crate::poly::{MonomialOrder, Polynomial, Ring};
use crate::variety::{
    self, smooth_localizer_with_rng, subsets, GenericityConfig, GenericityReport, VarietySpec,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Configuration shared by the stratifier and the critical-value pipeline.
#[derive(Debug, Clone, Default)]
pub struct StratifyConfig {
    pub engine: EngineConfig,
    pub genericity: GenericityConfig,
}

/// One localized chart of a level: on `localizer != 0` the polynomials in
/// `rows` have independent differentials and cut the level out of the
/// ambient space.
#[derive(Debug, Clone)]
pub struct Piece {
    pub localizer: Polynomial,
    pub rows: Vec<Polynomial>,
}

/// One level X_i of the filtration.
#[derive(Debug, Clone)]
pub struct Level {
    pub ideal: Ideal,
    pub dim: usize,
    pub codim: usize,
    /// Localizer family of the stratum B_i = X_i \ X_{i+1}.
    pub pieces: Vec<Piece>,
    /// Generic combinations presenting the conormal of X_i on its smooth part.
    pub combos: Vec<Polynomial>,
    /// Generic rank of the map restricted to this level (partial mode only).
    pub generic_rank: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiltrationMode {
    /// Refine until the filtration is exhausted.
    Full,
    /// Stop once the generic rank of the map drops below its target dimension.
    Partial,
}

/// A descending filtration X_0 ⊃ X_1 ⊃ ... with per-level localizers. The
/// strata are the differences of consecutive levels; in partial mode the
/// `tail` is the first level where the map's generic rank fell below m.
#[derive(Debug, Clone)]
pub struct Stratification {
    pub ring: Arc<Ring>,
    pub levels: Vec<Level>,
    pub tail: Option<Level>,
    pub mode: FiltrationMode,
    pub report: GenericityReport,
}

/// The two sides of a Whitney pair: Y ⊂ X, both presented concretely.
#[derive(Debug, Clone)]
pub struct PairContext {
    pub ring: Arc<Ring>,
    pub x_gens: Vec<Polynomial>,
    /// Exactly codim(X) combinations with generically independent differentials.
    pub x_combos: Vec<Polynomial>,
    pub y_ideal: Ideal,
    /// Cuts Y out of the ambient space exactly, as a variety.
    pub y_presentation: Vec<Polynomial>,
    /// Localizer family for the smooth test region of Y.
    pub y_localizers: Vec<Polynomial>,
}

pub(crate) fn fresh_block(taken: &mut Vec<String>, stem: &str, count: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let mut name = format!("{stem}{i}");
        while taken.contains(&name) {
            name.push('_');
        }
        taken.push(name.clone());
        out.push(name);
    }
    out
}

impl PairContext {
    /// Assemble the pair (X, Y) with Y presented as X ∩ {extra equations}.
    /// Generic combinations are tried first (certified exact at the variety
    /// level); if no generic presentation exists the generators of I(Y) are
    /// used directly.
    pub fn new(
        x_gens: &[Polynomial],
        x_combos: &[Polynomial],
        y_ideal: &Ideal,
        y_localizers: &[Polynomial],
        rng: &mut ChaCha8Rng,
        cfg: &StratifyConfig,
        report: &mut GenericityReport,
    ) -> Result<PairContext> {
        let ring = y_ideal.ring().clone();
        let n = ring.len();
        let y_dim = match y_ideal.dimension(&cfg.engine, "pair: dim Y")? {
            Dimension::Empty => {
                return Err(Error::Validation("pair with empty Y".into()));
            }
            Dimension::Dim(d) => d,
        };
        let y_codim = n - y_dim;
        let r = x_combos.len();
        let extra = y_codim.saturating_sub(r);

        let mut presentation: Option<Vec<Polynomial>> = None;
        if extra > 0 && !y_ideal.generators().is_empty() {
            'attempt: for attempt in 1..=4u32 {
                let combos: Vec<Polynomial> = (0..extra)
                    .map(|_| {
                        variety::random_combination(
                            y_ideal.generators(),
                            &ring,
                            rng,
                            cfg.genericity.coeff_bound,
                        )
                    })
                    .collect();
                let mut pres = x_gens.to_vec();
                pres.extend(combos);
                let pres_ideal = Ideal::new(&ring, pres.clone());
                for u in y_ideal.generators() {
                    if !pres_ideal.vanishes_on(u, &cfg.engine, "pair: presentation check")? {
                        continue 'attempt;
                    }
                }
                report.record("pair_presentation", attempt);
                presentation = Some(pres);
                break;
            }
        }
        let y_presentation = presentation.unwrap_or_else(|| {
            report.record("pair_presentation_fallback", 1);
            let mut pres = x_gens.to_vec();
            pres.extend(y_ideal.generators().iter().cloned());
            pres
        });

        Ok(PairContext {
            ring,
            x_gens: x_gens.to_vec(),
            x_combos: x_combos.to_vec(),
            y_ideal: y_ideal.clone(),
            y_presentation,
            y_localizers: y_localizers.to_vec(),
        })
    }

    fn n(&self) -> usize {
        self.ring.len()
    }
}

/// The incidence ideal whose points carry a base point x of X, a point y of
/// Y, a secant direction w = gamma (x - y), and a conormal vector
/// v = sum lambda_i d_x(combo_i). Ring layout: x-block, y-block, w-block,
/// v-block, gamma, lambda_1..lambda_r (4n + 1 + r variables).
pub fn incidence_ideal(ctx: &PairContext) -> Ideal {
    let n = ctx.n();
    let r = ctx.x_combos.len();
    let mut taken: Vec<String> = ctx.ring.vars().to_vec();
    let y_names = fresh_block(&mut taken, "yq", n);
    let w_names = fresh_block(&mut taken, "wsec", n);
    let v_names = fresh_block(&mut taken, "vcon", n);
    let g_names = fresh_block(&mut taken, "gsc", 1);
    let l_names = fresh_block(&mut taken, "lcf", r);

    let mut vars = ctx.ring.vars().to_vec();
    vars.extend(y_names);
    vars.extend(w_names);
    vars.extend(v_names);
    vars.extend(g_names);
    vars.extend(l_names);
    let big = Ring::new(vars);

    let x_map: Vec<usize> = (0..n).collect();
    let y_map: Vec<usize> = (n..2 * n).collect();
    let gamma = Polynomial::var(&big, 4 * n);

    let mut gens = Vec::new();
    for g in &ctx.x_gens {
        gens.push(g.map_to_ring(&big, &x_map));
    }
    for h in &ctx.y_presentation {
        gens.push(h.map_to_ring(&big, &y_map));
    }
    for i in 0..n {
        let w = Polynomial::var(&big, 2 * n + i);
        let x = Polynomial::var(&big, i);
        let y = Polynomial::var(&big, n + i);
        gens.push(w.sub(&gamma.mul(&x.sub(&y))));
    }
    for i in 0..n {
        let v = Polynomial::var(&big, 3 * n + i);
        let mut rhs = Polynomial::zero(&big);
        for (k, combo) in ctx.x_combos.iter().enumerate() {
            let lam = Polynomial::var(&big, 4 * n + 1 + k);
            let dk = combo.partial_derivative(i).map_to_ring(&big, &x_map);
            rhs = rhs.add(&lam.mul(&dk));
        }
        gens.push(v.sub(&rhs));
    }
    Ideal::new(&big, gens)
}

/// Zariski closure of the projection of the incidence variety onto
/// (x, y, w, v): the conormal-secant variety C(X, Y).
pub fn conormal_secant_ideal(ctx: &PairContext, cfg: &StratifyConfig) -> Result<Ideal> {
    let n = ctx.n();
    let gamma1 = incidence_ideal(ctx);
    gamma1.elimination_ideal(
        &(0..4 * n).collect::<Vec<_>>(),
        &cfg.engine,
        "conormal-secant elimination",
    )
}

/// The Whitney (b) failure locus W(X, Y) ⊆ Y: limits of secants not
/// annihilated by limit conormals, taken over the smooth test region of Y.
/// When `rank_minors` is supplied (the rank-filtered variant), each branch is
/// additionally restricted to the locus where one maximal minor of the
/// stacked differential is invertible.
pub fn pair_failure_locus(
    ctx: &PairContext,
    rank_minors: Option<&[Polynomial]>,
    cfg: &StratifyConfig,
) -> Result<Ideal> {
    let n = ctx.n();
    if ctx.x_combos.is_empty() {
        // ambient-space X: every pair (C^n, Y) is Whitney regular
        return Ok(Ideal::new(&ctx.ring, vec![Polynomial::one(&ctx.ring)]));
    }
    let conormal = conormal_secant_ideal(ctx, cfg)?;

    // diagonal ring: x-block, w-block, v-block, two scalars, one rank scalar
    let mut taken: Vec<String> = ctx.ring.vars().to_vec();
    let w_names = fresh_block(&mut taken, "wsec", n);
    let v_names = fresh_block(&mut taken, "vcon", n);
    let s_names = fresh_block(&mut taken, "rab", 3);
    let mut vars = ctx.ring.vars().to_vec();
    vars.extend(w_names);
    vars.extend(v_names);
    vars.extend(s_names);
    let diag_ring = Ring::new(vars);

    // C(X,Y) variables (x, y, w, v) -> (x, x, w, v)
    let mut diag_map: Vec<usize> = (0..n).collect();
    diag_map.extend(0..n);
    diag_map.extend(n..3 * n);
    let diag_gens: Vec<Polynomial> = conormal
        .generators()
        .iter()
        .map(|h| h.map_to_ring(&diag_ring, &diag_map))
        .collect();

    let gamma2 = Polynomial::var(&diag_ring, 3 * n);
    let lambda2 = Polynomial::var(&diag_ring, 3 * n + 1);
    let mu = Polynomial::var(&diag_ring, 3 * n + 2);
    let mut dot = Polynomial::zero(&diag_ring);
    for i in 0..n {
        let w = Polynomial::var(&diag_ring, n + i);
        let v = Polynomial::var(&diag_ring, 2 * n + i);
        dot = dot.add(&v.mul(&w));
    }
    let secant_pairing = gamma2.mul(&dot).sub(&Polynomial::one(&diag_ring));
    let x_map: Vec<usize> = (0..n).collect();

    let minor_branches: Vec<Option<&Polynomial>> = match rank_minors {
        None => vec![None],
        Some(ms) => ms.iter().map(Some).collect(),
    };
    let mut branch_results: Vec<Ideal> = Vec::new();
    for loc in &ctx.y_localizers {
        for minor in &minor_branches {
            let mut gens = diag_gens.clone();
            gens.push(secant_pairing.clone());
            gens.push(
                lambda2
                    .mul(&loc.map_to_ring(&diag_ring, &x_map))
                    .sub(&Polynomial::one(&diag_ring)),
            );
            if let Some(m) = minor {
                gens.push(
                    mu.mul(&m.map_to_ring(&diag_ring, &x_map))
                        .sub(&Polynomial::one(&diag_ring)),
                );
            }
            let gamma2_ideal = Ideal::new(&diag_ring, gens);
            let w = gamma2_ideal.elimination_ideal(
                &(0..n).collect::<Vec<_>>(),
                &cfg.engine,
                "failure locus elimination",
            )?;
            branch_results.push(Ideal::new(
                &ctx.ring,
                w.generators()
                    .iter()
                    .map(|g| g.map_to_ring(&ctx.ring, &x_map))
                    .collect(),
            ));
        }
    }
    if branch_results.is_empty() {
        return Ok(Ideal::new(&ctx.ring, vec![Polynomial::one(&ctx.ring)]));
    }
    let locus = Ideal::intersect_all(&branch_results, &cfg.engine, "failure locus union")?;

    // hard invariant from Whitney theory: the failure locus is nowhere dense in Y
    let w_dim = locus.dimension(&cfg.engine, "failure locus dimension")?;
    let y_dim = ctx.y_ideal.dimension(&cfg.engine, "pair: dim Y")?;
    if w_dim.as_isize() >= y_dim.as_isize() {
        return Err(Error::WhitneyDimensionViolation {
            x_label: ideal_label(&ctx.x_gens),
            y_label: ideal_label(ctx.y_ideal.generators()),
            got: w_dim.as_isize(),
            bound: y_dim.as_isize(),
        });
    }
    Ok(locus)
}

fn ideal_label(gens: &[Polynomial]) -> String {
    let mut s = gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ");
    if s.len() > 60 {
        s.truncate(57);
        s.push_str("...");
    }
    format!("<{s}>")
}

/// Maximal minors of the stacked matrix [d f; d presentation] of size
/// m + codim(Y), filtered of those vanishing identically on Y. These cut the
/// rank-filtered branches: where one of them is invertible, the restriction
/// of f to Y is a submersion.
pub fn rank_minors(
    map: &[Polynomial],
    presentation: &[Polynomial],
    y_ideal: &Ideal,
    y_codim: usize,
    cfg: &StratifyConfig,
) -> Result<Vec<Polynomial>> {
    let ring = y_ideal.ring();
    let n = ring.len();
    let m = map.len();
    let size = m + y_codim;
    if size > n {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<Polynomial>> = variety::jacobian_rows(map, ring);
    rows.extend(variety::jacobian_rows(presentation, ring));
    let mut out: Vec<Polynomial> = Vec::new();
    for rsel in subsets(rows.len(), size) {
        for csel in subsets(n, size) {
            let sub: Vec<Vec<Polynomial>> = rsel
                .iter()
                .map(|&i| csel.iter().map(|&j| rows[i][j].clone()).collect())
                .collect();
            let minor = crate::poly::determinant(&sub);
            if minor.is_zero() {
                continue;
            }
            let minor = minor.primitive_part();
            if out.contains(&minor) {
                continue;
            }
            if y_ideal.contains(&minor, &cfg.engine, "rank minor filter")? {
                continue;
            }
            out.push(minor);
        }
    }
    Ok(out)
}

/// Largest k such that the differential of the map restricted to the smooth
/// part of the level attains rank k somewhere off the localizers' zero set.
pub fn generic_rank(level: &Level, map: &[Polynomial], cfg: &StratifyConfig) -> Result<usize> {
    let ring = level.ideal.ring();
    let n = ring.len();
    let m = map.len();
    let kmax = m.min(n - level.codim);
    let mut rows: Vec<Vec<Polynomial>> = variety::jacobian_rows(map, ring);
    rows.extend(variety::jacobian_rows(level.ideal.generators(), ring));
    for k in (1..=kmax).rev() {
        let size = k + level.codim;
        if size > n {
            continue;
        }
        let mut seen: Vec<Polynomial> = Vec::new();
        for rsel in subsets(rows.len(), size) {
            for csel in subsets(n, size) {
                let sub: Vec<Vec<Polynomial>> = rsel
                    .iter()
                    .map(|&i| csel.iter().map(|&j| rows[i][j].clone()).collect())
                    .collect();
                let minor = crate::poly::determinant(&sub);
                if minor.is_zero() {
                    continue;
                }
                let minor = minor.primitive_part();
                if seen.contains(&minor) {
                    continue;
                }
                seen.push(minor.clone());
                for piece in &level.pieces {
                    if attains(&level.ideal, &piece.localizer, &minor, cfg)? {
                        return Ok(k);
                    }
                }
            }
        }
    }
    Ok(0)
}

/// Is there a point of V(I) with loc != 0 and minor != 0?
fn attains(ideal: &Ideal, loc: &Polynomial, minor: &Polynomial, cfg: &StratifyConfig) -> Result<bool> {
    let ring = ideal.ring();
    let n = ring.len();
    let mut taken: Vec<String> = ring.vars().to_vec();
    let fresh = fresh_block(&mut taken, "inv", 2);
    let mut vars = ring.vars().to_vec();
    vars.extend(fresh);
    let ext = Ring::new(vars);
    let emb: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> =
        ideal.generators().iter().map(|g| g.map_to_ring(&ext, &emb)).collect();
    gens.push(
        loc.map_to_ring(&ext, &emb)
            .mul(&Polynomial::var(&ext, n))
            .sub(&Polynomial::one(&ext)),
    );
    gens.push(
        minor
            .map_to_ring(&ext, &emb)
            .mul(&Polynomial::var(&ext, n + 1))
            .sub(&Polynomial::one(&ext)),
    );
    Ok(!Ideal::new(&ext, gens).is_empty_variety(&cfg.engine, "rank attainment")?)
}

/// Jacobian-minor pieces of a level, with localizers that vanish on the whole
/// variety pruned away (they chart nothing).
fn level_pieces(
    ideal: &Ideal,
    codim: usize,
    cfg: &StratifyConfig,
) -> Result<(Vec<Piece>, Ideal)> {
    let (raw, cut) = variety::singular_pieces(ideal, codim, &cfg.engine, "level pieces")?;
    let mut pieces: Vec<Piece> = Vec::new();
    for p in raw {
        let loc = p.localizer.primitive_part();
        if pieces.iter().any(|q| q.localizer == loc) {
            continue;
        }
        if ideal.vanishes_on(&loc, &cfg.engine, "piece pruning")? {
            continue;
        }
        pieces.push(Piece {
            localizer: loc,
            rows: p.rows.iter().map(|&i| ideal.generators()[i].clone()).collect(),
        });
    }
    Ok((pieces, cut))
}

/// Build the descending filtration. In `Partial` mode `map` drives the
/// stopping rule: the first level whose generic rank falls below the target
/// dimension becomes the tail and is not refined further.
pub fn build_filtration(
    x: &VarietySpec,
    mode: FiltrationMode,
    map: Option<&[Polynomial]>,
    cfg: &StratifyConfig,
) -> Result<Stratification> {
    let ring = x.ring().clone();
    let n = ring.len();
    let m = map.map(|f| f.len()).unwrap_or(0);
    if mode == FiltrationMode::Partial {
        assert!(map.is_some(), "partial mode needs the map");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.genericity.seed);
    let mut report = GenericityReport::default();

    let mut levels: Vec<Level> = Vec::new();
    let mut tail: Option<Level> = None;
    let mut current = x.ideal().clone();
    let mut current_dim = x.dim();

    loop {
        let codim = n - current_dim;

        if current_dim == 0 {
            // isolated points: a smooth closed stratum (or, relative to a map,
            // always rank zero); no genericity machinery is needed or sound here
            let level = Level {
                ideal: current.clone(),
                dim: 0,
                codim,
                pieces: vec![Piece { localizer: Polynomial::one(&ring), rows: Vec::new() }],
                combos: Vec::new(),
                generic_rank: (mode == FiltrationMode::Partial).then_some(0),
            };
            if mode == FiltrationMode::Partial && m > 0 {
                tail = Some(level);
            } else {
                levels.push(level);
            }
            break;
        }

        let combos = variety::generic_combinations(
            &current,
            codim,
            &mut rng,
            &cfg.genericity,
            &cfg.engine,
            &mut report,
        )?;
        let (mut pieces, mut cut_sing) = level_pieces(&current, codim, cfg)?;
        if pieces.is_empty() && codim > 0 {
            // fat presentation: no minor charts anything; fall back to the
            // certified localizing polynomial for both chart and cut
            let spec = VarietySpec::new(current.clone(), codim, &cfg.engine)?;
            let loc = smooth_localizer_with_rng(&spec, None, &mut rng, &cfg.genericity, &cfg.engine)?;
            report.stages.extend(loc.report.stages.clone());
            pieces = vec![Piece { localizer: loc.p.clone(), rows: loc.combos.clone() }];
            cut_sing = current.plus(&[loc.p]);
        }
        let mut level = Level {
            ideal: current.clone(),
            dim: current_dim,
            codim,
            pieces,
            combos,
            generic_rank: None,
        };

        if mode == FiltrationMode::Partial {
            let rank = generic_rank(&level, map.unwrap(), cfg)?;
            level.generic_rank = Some(rank);
            if rank < m {
                tail = Some(level);
                break;
            }
        }

        // failure loci of the pairs (X_j, X_i) with the current level as Y
        let y_localizers: Vec<Polynomial> =
            level.pieces.iter().map(|p| p.localizer.clone()).collect();
        let mut w_inter = Ideal::new(&ring, vec![Polynomial::one(&ring)]);
        for prev in levels.iter() {
            let ctx = PairContext::new(
                prev.ideal.generators(),
                &prev.combos,
                &current,
                &y_localizers,
                &mut rng,
                cfg,
                &mut report,
            )?;
            let minors = match mode {
                FiltrationMode::Full => None,
                FiltrationMode::Partial => {
                    Some(rank_minors(map.unwrap(), &ctx.y_presentation, &current, codim, cfg)?)
                }
            };
            let locus = pair_failure_locus(&ctx, minors.as_deref(), cfg)?;
            if locus.is_empty_variety(&cfg.engine, "failure locus emptiness")? {
                continue;
            }
            w_inter = w_inter.intersect(&locus, &cfg.engine, "failure locus union")?;
        }

        // next level: (scheme singular locus) ∪ (all failure loci)
        let mut next = cut_sing.intersect(&w_inter, &cfg.engine, "next level")?;
        let mut next_dim = next.dimension(&cfg.engine, "next level dimension")?;

        // the stratum avoids both the singular cut and the failure loci
        let w_gens: Vec<Polynomial> = if w_inter.generators().is_empty() {
            vec![Polynomial::one(&ring)]
        } else {
            w_inter.generators().to_vec()
        };
        let mut stratum_pieces: Vec<Piece> = Vec::new();
        for p in &level.pieces {
            for wg in &w_gens {
                let loc = p.localizer.mul(wg).primitive_part();
                if stratum_pieces.iter().any(|q| q.localizer == loc) {
                    continue;
                }
                stratum_pieces.push(Piece { localizer: loc, rows: p.rows.clone() });
            }
        }
        level.pieces = stratum_pieces;

        if next_dim.as_isize() >= current_dim as isize {
            // the minor cut failed to descend; use the certified localizer
            let spec = VarietySpec::new(current.clone(), codim, &cfg.engine)?;
            let w_arg = if w_inter.is_empty_variety(&cfg.engine, "fallback W")? {
                None
            } else {
                Some(&w_inter)
            };
            let loc =
                smooth_localizer_with_rng(&spec, w_arg, &mut rng, &cfg.genericity, &cfg.engine)?;
            report.stages.extend(loc.report.stages.clone());
            next = current.plus(&[loc.p.clone()]);
            next_dim = next.dimension(&cfg.engine, "fallback next level dimension")?;
            if next_dim.as_isize() >= current_dim as isize {
                return Err(Error::Validation(format!(
                    "filtration failed to descend at dimension {current_dim}"
                )));
            }
            level.pieces = vec![Piece { localizer: loc.p.clone(), rows: loc.combos.clone() }];
        }

        levels.push(level);
        match next_dim {
            Dimension::Empty => break,
            Dimension::Dim(d) => {
                // re-present the next level by its reduced basis
                let basis =
                    next.groebner_basis(&MonomialOrder::GrevLex, &cfg.engine, "next level basis")?;
                current = Ideal::with_known_basis(
                    &ring,
                    basis.as_slice().to_vec(),
                    MonomialOrder::GrevLex,
                );
                current_dim = d;
            }
        }
        if levels.len() > n + 1 {
            return Err(Error::Validation("filtration failed to terminate".into()));
        }
    }

    Ok(Stratification { ring, levels, tail, mode, report })
}

/// Direct entry point for a single pair: the failure locus of (X, Y) where
/// Y is handed as an ideal containing I(X) with dim Y < dim X.
pub fn whitney_failure_locus(
    x: &VarietySpec,
    y_ideal: &Ideal,
    cfg: &StratifyConfig,
) -> Result<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.genericity.seed);
    let mut report = GenericityReport::default();
    let y_dim = match y_ideal.dimension(&cfg.engine, "pair: dim Y")? {
        Dimension::Empty => return Err(Error::Validation("Y is empty".into())),
        Dimension::Dim(d) => d,
    };
    let combos = variety::generic_combinations(
        x.ideal(),
        x.codim(),
        &mut rng,
        &cfg.genericity,
        &cfg.engine,
        &mut report,
    )?;
    let (y_pieces, _) = level_pieces(y_ideal, y_ideal.ring().len() - y_dim, cfg)?;
    let y_localizers: Vec<Polynomial> = if y_pieces.is_empty() {
        vec![Polynomial::one(y_ideal.ring())]
    } else {
        y_pieces.iter().map(|p| p.localizer.clone()).collect()
    };
    let ctx = PairContext::new(
        x.ideal().generators(),
        &combos,
        y_ideal,
        &y_localizers,
        &mut rng,
        cfg,
        &mut report,
    )?;
    pair_failure_locus(&ctx, None, cfg)
}

// serialization ---------------------------------------------------------

#[derive(Debug, serde::Serialize)]
pub struct LevelJson {
    pub generators: Vec<String>,
    pub dimension: usize,
    pub codimension: usize,
    pub localizers: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic_rank: Option<usize>,
}

#[derive(Debug, serde::Serialize)]
pub struct StratificationJson {
    pub variables: Vec<String>,
    pub mode: String,
    pub levels: Vec<LevelJson>,
    pub tail: Option<LevelJson>,
}

impl Stratification {
    pub fn to_json(&self) -> StratificationJson {
        let level_json = |l: &Level| LevelJson {
            generators: l.ideal.generators().iter().map(|g| g.to_string()).collect(),
            dimension: l.dim,
            codimension: l.codim,
            localizers: l.pieces.iter().map(|p| p.localizer.to_string()).collect(),
            generic_rank: l.generic_rank,
        };
        StratificationJson {
            variables: self.ring.vars().to_vec(),
            mode: match self.mode {
                FiltrationMode::Full => "full".into(),
                FiltrationMode::Partial => "partial".into(),
            },
            levels: self.levels.iter().map(level_json).collect(),
            tail: self.tail.as_ref().map(level_json),
        }
    }
}

#[cfg(test)]
mod whitney_tests;
