//! Stratified generalized critical values of a polynomial map: per stratum,
//! the closure of the critical values (image of the locus where all maximal
//! minors of the stacked differential vanish) and the asymptotic critical
//! values (limits along sequences escaping to infinity while the restricted
//! differential degenerates), the latter through graph ideals of minor-ratio
//! maps and elimination. Components are aggregated across strata with
//! provenance and deduplicated at the variety level.

pub mod metrics;

use crate::error::{Error, Result};
use crate::groebner::{EngineConfig, Ideal};
use crate::poly::{determinant, MonomialOrder, Polynomial, Ring};
use crate::variety::{jacobian_rows, subsets, VarietySpec};
use crate::whitney::{
    build_filtration, fresh_block, FiltrationMode, Level, Piece, Stratification, StratifyConfig,
};
use std::sync::Arc;

/// Configuration of the critical-value pipeline.
#[derive(Debug, Clone)]
pub struct CriticalConfig {
    pub stratify: StratifyConfig,
    /// Hard cap on enumerated minor-ratio branches per stratum piece.
    pub branch_cap: usize,
}

impl Default for CriticalConfig {
    fn default() -> Self {
        CriticalConfig { stratify: StratifyConfig::default(), branch_cap: 4096 }
    }
}

/// Target ring C^m with coordinates y1..ym.
pub fn target_ring(m: usize) -> Arc<Ring> {
    Ring::new((1..=m).map(|i| format!("y{i}")).collect::<Vec<_>>())
}

/// One choice of sub-minor per effective maximal minor, plus the coordinate
/// whose reciprocal witnesses the escape to infinity.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Selector {
    /// Column sets of the effective maximal minors, in enumeration order.
    pub minor_columns: Vec<Vec<usize>>,
    /// Per minor: (deleted map row, deleted column), matching the paper's
    /// "delete only map rows" convention.
    pub pairs: Vec<(usize, usize)>,
    /// 0-based index of the coordinate sent to infinity.
    pub q: usize,
}

#[derive(Debug, Clone)]
pub struct BranchResult {
    pub selector: Selector,
    pub ideal: Ideal,
}

/// A component of the critical-value set with its origins.
#[derive(Debug, Clone)]
pub struct Component {
    pub ideal: Ideal,
    pub provenance: Vec<String>,
}

/// The full stratified result.
#[derive(Debug)]
pub struct CriticalValues {
    pub target: Arc<Ring>,
    pub k0: Vec<(usize, usize, Ideal)>,
    pub kinf: Vec<(usize, usize, BranchResult)>,
    pub tail_image: Option<Ideal>,
    pub components: Vec<Component>,
    pub stratification: Stratification,
}

fn embedded_ring(ring: &Arc<Ring>) -> (Arc<Ring>, usize) {
    let mut taken: Vec<String> = ring.vars().to_vec();
    let inv = fresh_block(&mut taken, "xinv", 1);
    let mut vars = ring.vars().to_vec();
    vars.extend(inv);
    (Ring::new(vars), ring.len())
}

/// Stacked differential rows [d f ; d rows] over the x-variables only.
fn stacked_rows(map: &[Polynomial], rows: &[Polynomial], ring: &Arc<Ring>) -> Vec<Vec<Polynomial>> {
    let mut out = jacobian_rows(map, ring);
    out.extend(jacobian_rows(rows, ring));
    out
}

/// Generators of the embedded stratum closure: the level equations plus
/// localizer * x_{n+1} = 1.
fn embedded_stratum_gens(
    level: &Level,
    piece: &Piece,
    ring_e: &Arc<Ring>,
    n: usize,
) -> Vec<Polynomial> {
    let emb: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> = level
        .ideal
        .generators()
        .iter()
        .map(|g| g.map_to_ring(ring_e, &emb))
        .collect();
    gens.push(
        piece
            .localizer
            .map_to_ring(ring_e, &emb)
            .mul(&Polynomial::var(ring_e, n))
            .sub(&Polynomial::one(ring_e)),
    );
    gens
}

/// Closure of the critical values of the map on one stratum piece: the image
/// of the locus where every maximal minor of the stacked differential
/// vanishes. `None` when that locus is empty.
pub fn stratum_k0(
    level: &Level,
    piece: &Piece,
    map: &[Polynomial],
    cfg: &CriticalConfig,
    label: &str,
) -> Result<Option<Ideal>> {
    let ring = level.ideal.ring();
    let n = ring.len();
    let m = map.len();
    let r = piece.rows.len();
    let (ring_e, _) = embedded_ring(ring);

    let rows = stacked_rows(map, &piece.rows, ring);
    let size = m + r;
    let mut minors: Vec<Polynomial> = Vec::new();
    if size <= n {
        for cols in subsets(n, size) {
            let sub: Vec<Vec<Polynomial>> = (0..size)
                .map(|i| cols.iter().map(|&j| rows[i][j].clone()).collect())
                .collect();
            let d = determinant(&sub);
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    // if size > n the differential can never be surjective: no minor equations

    let mut taken: Vec<String> = ring_e.vars().to_vec();
    let y_names: Vec<String> = (1..=m).map(|i| format!("y{i}")).collect();
    for y in &y_names {
        assert!(!taken.contains(y), "target variable name collides with input");
        taken.push(y.clone());
    }
    let mut vars = ring_e.vars().to_vec();
    vars.extend(y_names);
    let graph_ring = Ring::new(vars);
    let emb_e: Vec<usize> = (0..n + 1).collect();
    let emb_x: Vec<usize> = (0..n).collect();

    let mut gens: Vec<Polynomial> = embedded_stratum_gens(level, piece, &ring_e, n)
        .iter()
        .map(|g| g.map_to_ring(&graph_ring, &emb_e))
        .collect();
    for mnr in &minors {
        gens.push(mnr.map_to_ring(&graph_ring, &emb_x));
    }
    for (i, f) in map.iter().enumerate() {
        gens.push(
            Polynomial::var(&graph_ring, n + 1 + i).sub(&f.map_to_ring(&graph_ring, &emb_x)),
        );
    }
    let graph = Ideal::new(&graph_ring, gens);
    let keep: Vec<usize> = (n + 1..n + 1 + m).collect();
    let image = graph.elimination_ideal(&keep, &cfg.stratify.engine, "critical value image")?;
    classify_component(image, label)
}

/// Turn an eliminated target-ring ideal into a component, dropping empty ones
/// and rejecting the zero ideal (which would deny nowhere-density).
fn classify_component(ideal: Ideal, label: &str) -> Result<Option<Ideal>> {
    if ideal.generators().is_empty() {
        return Err(Error::NonProperOutput { provenance: label.to_string() });
    }
    if ideal.generators().iter().any(|g| g.is_unit_constant()) {
        return Ok(None);
    }
    Ok(Some(ideal))
}

/// One effective maximal minor: its columns, its determinant, and the
/// admissible (map row, column) deletions with nonzero sub-minors.
#[derive(Debug, Clone)]
pub struct EffectiveMinor {
    pub columns: Vec<usize>,
    pub minor: Polynomial,
    pub pairs: Vec<((usize, usize), Polynomial)>,
}

/// Enumerate maximal minors of the stacked differential that do not vanish
/// identically on the embedded stratum, each with its admissible sub-minors.
pub fn effective_minors(
    level: &Level,
    piece: &Piece,
    map: &[Polynomial],
    cfg: &CriticalConfig,
) -> Result<Vec<EffectiveMinor>> {
    let ring = level.ideal.ring();
    let n = ring.len();
    let m = map.len();
    let r = piece.rows.len();
    let size = m + r;
    if size > n {
        return Ok(Vec::new());
    }
    let (ring_e, _) = embedded_ring(ring);
    let stratum = Ideal::new(&ring_e, embedded_stratum_gens(level, piece, &ring_e, n));
    let emb_x: Vec<usize> = (0..n).collect();
    let rows = stacked_rows(map, &piece.rows, ring);

    let mut out = Vec::new();
    for cols in subsets(n, size) {
        let main: Vec<Vec<Polynomial>> = (0..size)
            .map(|i| cols.iter().map(|&j| rows[i][j].clone()).collect())
            .collect();
        let minor = determinant(&main);
        if minor.is_zero()
            || stratum.contains(
                &minor.map_to_ring(&ring_e, &emb_x),
                &cfg.stratify.engine,
                "minor filter",
            )?
        {
            continue;
        }
        let mut pairs = Vec::new();
        for k in 0..m {
            for (jpos, &j) in cols.iter().enumerate() {
                let sub: Vec<Vec<Polynomial>> = (0..size)
                    .filter(|&i| i != k)
                    .map(|i| {
                        (0..size)
                            .filter(|&c| c != jpos)
                            .map(|c| main[i][c].clone())
                            .collect()
                    })
                    .collect();
                let subminor = if sub.is_empty() {
                    Polynomial::one(ring)
                } else {
                    determinant(&sub)
                };
                if subminor.is_zero()
                    || stratum.contains(
                        &subminor.map_to_ring(&ring_e, &emb_x),
                        &cfg.stratify.engine,
                        "sub-minor filter",
                    )?
                {
                    continue;
                }
                pairs.push(((k, j), subminor));
            }
        }
        if pairs.is_empty() {
            // every ratio of this minor vanishes identically on the stratum
            continue;
        }
        out.push(EffectiveMinor { columns: cols, minor, pairs });
    }
    Ok(out)
}

/// The graph ideal of the minor-ratio map for one selector: variables
/// (x, x_{n+1}, t, z_1..z_s, Y_1..Y_{m+N}) with N = s(n+1) + 1, and
/// generators: stratum equations, z_l * subminor_l = 1, t * x_q = 1,
/// Y-coordinates matching (f, z_1 M_1, x z_1 M_1, ..., t).
pub fn minor_ratio_graph(
    level: &Level,
    piece: &Piece,
    map: &[Polynomial],
    minors: &[EffectiveMinor],
    choice: &[usize],
    q: usize,
) -> (Ideal, Vec<usize>) {
    let ring = level.ideal.ring();
    let n = ring.len();
    let m = map.len();
    let s = minors.len();
    let nn = s * (n + 1) + 1;

    let mut taken: Vec<String> = ring.vars().to_vec();
    let inv = fresh_block(&mut taken, "xinv", 1);
    let t_name = fresh_block(&mut taken, "trec", 1);
    let z_names = fresh_block(&mut taken, "zrec", s);
    let mut y_names: Vec<String> = (1..=m).map(|i| format!("y{i}")).collect();
    for y in &y_names {
        assert!(!taken.contains(y), "target variable name collides with input");
    }
    taken.extend(y_names.iter().cloned());
    y_names.extend(fresh_block(&mut taken, "yaux", nn));

    let mut vars = ring.vars().to_vec();
    vars.extend(inv);
    vars.extend(t_name);
    vars.extend(z_names);
    vars.extend(y_names);
    let g_ring = Ring::new(vars);

    let emb_x: Vec<usize> = (0..n).collect();
    let emb_e: Vec<usize> = (0..n + 1).collect();
    let y_base = n + 2 + s;
    let one = Polynomial::one(&g_ring);

    let ring_e = Ring::new(
        ring.vars()
            .iter()
            .cloned()
            .chain(std::iter::once(g_ring.vars()[n].clone()))
            .collect::<Vec<_>>(),
    );
    let mut gens: Vec<Polynomial> = embedded_stratum_gens(level, piece, &ring_e, n)
        .iter()
        .map(|g| g.map_to_ring(&g_ring, &emb_e))
        .collect();
    for (l, em) in minors.iter().enumerate() {
        let (_, sub) = &em.pairs[choice[l]];
        let z = Polynomial::var(&g_ring, n + 2 + l);
        gens.push(z.mul(&sub.map_to_ring(&g_ring, &emb_x)).sub(&one));
    }
    let t = Polynomial::var(&g_ring, n + 1);
    gens.push(t.mul(&Polynomial::var(&g_ring, q)).sub(&one));

    for (i, f) in map.iter().enumerate() {
        gens.push(Polynomial::var(&g_ring, y_base + i).sub(&f.map_to_ring(&g_ring, &emb_x)));
    }
    let mut off = y_base + m;
    for (l, em) in minors.iter().enumerate() {
        let z = Polynomial::var(&g_ring, n + 2 + l);
        let w = z.mul(&em.minor.map_to_ring(&g_ring, &emb_x));
        gens.push(Polynomial::var(&g_ring, off).sub(&w));
        off += 1;
        for c in 0..n {
            let xw = Polynomial::var(&g_ring, c).mul(&w);
            gens.push(Polynomial::var(&g_ring, off).sub(&xw));
            off += 1;
        }
    }
    gens.push(Polynomial::var(&g_ring, off).sub(&t));

    let keep: Vec<usize> = (y_base..y_base + m + nn).collect();
    (Ideal::new(&g_ring, gens), keep)
}

/// Asymptotic critical values of one stratum piece: the union over selectors
/// of the target slice of the minor-ratio graph closures.
pub fn stratum_kinf(
    level: &Level,
    piece: &Piece,
    map: &[Polynomial],
    cfg: &CriticalConfig,
    label: &str,
) -> Result<Vec<BranchResult>> {
    let ring = level.ideal.ring();
    let n = ring.len();
    let m = map.len();
    let minors = effective_minors(level, piece, map, cfg)?;
    if minors.is_empty() {
        return Ok(Vec::new());
    }
    let mut count = n;
    for em in &minors {
        count = count.saturating_mul(em.pairs.len());
        if count > cfg.branch_cap {
            return Err(Error::SelectorExplosion { count, cap: cfg.branch_cap });
        }
    }

    let target = target_ring(m);
    let nn = minors.len() * (n + 1) + 1;
    let mut out = Vec::new();
    let mut choice = vec![0usize; minors.len()];
    loop {
        for q in 0..n {
            let (graph, keep) = minor_ratio_graph(level, piece, map, &minors, &choice, q);
            let eliminated = graph.elimination_ideal(
                &keep,
                &cfg.stratify.engine,
                "minor-ratio graph elimination",
            )?;
            // slice the closure at zero in every auxiliary target coordinate
            let mut kill = vec![false; m + nn];
            for k in kill.iter_mut().skip(m) {
                *k = true;
            }
            let sliced: Vec<Polynomial> = eliminated
                .generators()
                .iter()
                .map(|g| g.set_vars_to_zero_and_project(&kill, &target))
                .filter(|g| !g.is_zero())
                .collect();
            let selector = Selector {
                minor_columns: minors.iter().map(|e| e.columns.clone()).collect(),
                pairs: choice
                    .iter()
                    .zip(&minors)
                    .map(|(&c, em)| em.pairs[c].0)
                    .collect(),
                q,
            };
            let branch_label = format!("{label}, selector {:?} q={}", selector.pairs, q + 1);
            if let Some(ideal) =
                classify_component(Ideal::new(&target, sliced), &branch_label)?
            {
                let basis = ideal.groebner_basis(
                    &MonomialOrder::GrevLex,
                    &cfg.stratify.engine,
                    "branch reduction",
                )?;
                if basis.iter().any(|g| g.is_unit_constant()) {
                    continue; // empty after reduction
                }
                out.push(BranchResult {
                    selector,
                    ideal: Ideal::with_known_basis(
                        &target,
                        basis.as_slice().to_vec(),
                        MonomialOrder::GrevLex,
                    ),
                });
            }
        }
        // advance the odometer over sub-minor choices
        let mut l = 0;
        loop {
            if l == minors.len() {
                return Ok(out);
            }
            choice[l] += 1;
            if choice[l] < minors[l].pairs.len() {
                break;
            }
            choice[l] = 0;
            l += 1;
        }
    }
}

/// Closure of the image of the whole tail level (no localizer, no minors).
pub fn tail_image(
    tail: &Level,
    map: &[Polynomial],
    cfg: &CriticalConfig,
) -> Result<Option<Ideal>> {
    let ring = tail.ideal.ring();
    let n = ring.len();
    let m = map.len();
    let mut taken: Vec<String> = ring.vars().to_vec();
    let y_names: Vec<String> = (1..=m).map(|i| format!("y{i}")).collect();
    for y in &y_names {
        assert!(!taken.contains(y), "target variable name collides with input");
        taken.push(y.clone());
    }
    let mut vars = ring.vars().to_vec();
    vars.extend(y_names);
    let graph_ring = Ring::new(vars);
    let emb: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> = tail
        .ideal
        .generators()
        .iter()
        .map(|g| g.map_to_ring(&graph_ring, &emb))
        .collect();
    for (i, f) in map.iter().enumerate() {
        gens.push(Polynomial::var(&graph_ring, n + i).sub(&f.map_to_ring(&graph_ring, &emb)));
    }
    let graph = Ideal::new(&graph_ring, gens);
    let keep: Vec<usize> = (n..n + m).collect();
    let image = graph.elimination_ideal(&keep, &cfg.stratify.engine, "tail image")?;
    classify_component(image, "tail image")
}

/// The set of stratified generalized critical values K(f) of the map on X:
/// per-stratum critical values and asymptotic critical values, plus the
/// closure of the image of the tail, merged at the variety level.
pub fn stratified_critical_values(
    x: &VarietySpec,
    map: &[Polynomial],
    cfg: &CriticalConfig,
) -> Result<CriticalValues> {
    assert!(!map.is_empty(), "the map needs at least one component");
    let strat = build_filtration(x, FiltrationMode::Partial, Some(map), &cfg.stratify)?;
    let target = target_ring(map.len());

    let mut k0 = Vec::new();
    let mut kinf = Vec::new();
    for (si, level) in strat.levels.iter().enumerate() {
        for (pi, piece) in level.pieces.iter().enumerate() {
            let label = format!("K0[stratum {si}, piece {pi}]");
            if let Some(ideal) = stratum_k0(level, piece, map, cfg, &label)? {
                k0.push((si, pi, ideal));
            }
            let label = format!("Kinf[stratum {si}, piece {pi}]");
            for branch in stratum_kinf(level, piece, map, cfg, &label)? {
                kinf.push((si, pi, branch));
            }
        }
    }
    let tail = match &strat.tail {
        Some(level) => tail_image(level, map, cfg)?,
        None => None,
    };

    // merge at the variety level, keeping provenance
    let mut components: Vec<Component> = Vec::new();
    let mut add = |ideal: &Ideal, prov: String, components: &mut Vec<Component>| -> Result<()> {
        for c in components.iter_mut() {
            if c.ideal.variety_equal(ideal, &cfg.stratify.engine, "component merge")? {
                c.provenance.push(prov);
                return Ok(());
            }
        }
        components.push(Component { ideal: ideal.clone(), provenance: vec![prov] });
        Ok(())
    };
    for (si, pi, ideal) in &k0 {
        add(ideal, format!("K0[stratum {si}, piece {pi}]"), &mut components)?;
    }
    for (si, pi, branch) in &kinf {
        add(
            &branch.ideal,
            format!(
                "Kinf[stratum {si}, piece {pi}, pairs {:?}, q {}]",
                branch.selector.pairs,
                branch.selector.q + 1
            ),
            &mut components,
        )?;
    }
    if let Some(t) = &tail {
        add(t, "tail image".to_string(), &mut components)?;
    }
    for c in &components {
        if c.ideal.generators().is_empty() {
            return Err(Error::NonProperOutput { provenance: c.provenance.join("; ") });
        }
    }

    Ok(CriticalValues {
        target,
        k0,
        kinf,
        tail_image: tail,
        components,
        stratification: strat,
    })
}

// serialization ----------------------------------------------------------

#[derive(Debug, serde::Serialize)]
pub struct TaggedIdealJson {
    pub stratum: usize,
    pub piece: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selector: Option<Selector>,
    pub generators: Vec<String>,
}

#[derive(Debug, serde::Serialize)]
pub struct ComponentJson {
    pub generators: Vec<String>,
    pub provenance: Vec<String>,
}

#[derive(Debug, serde::Serialize)]
pub struct CriticalValuesJson {
    pub variables: Vec<String>,
    pub map: Vec<String>,
    pub target_variables: Vec<String>,
    pub k0: Vec<TaggedIdealJson>,
    pub kinf: Vec<TaggedIdealJson>,
    pub tail_image: Option<Vec<String>>,
    pub k: Vec<ComponentJson>,
    pub strata: crate::whitney::StratificationJson,
}

impl CriticalValues {
    pub fn to_json(&self, map: &[Polynomial]) -> CriticalValuesJson {
        let gens = |i: &Ideal| i.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>();
        CriticalValuesJson {
            variables: self.stratification.ring.vars().to_vec(),
            map: map.iter().map(|f| f.to_string()).collect(),
            target_variables: self.target.vars().to_vec(),
            k0: self
                .k0
                .iter()
                .map(|(s, p, i)| TaggedIdealJson {
                    stratum: *s,
                    piece: *p,
                    selector: None,
                    generators: gens(i),
                })
                .collect(),
            kinf: self
                .kinf
                .iter()
                .map(|(s, p, b)| TaggedIdealJson {
                    stratum: *s,
                    piece: *p,
                    selector: Some(b.selector.clone()),
                    generators: gens(&b.ideal),
                })
                .collect(),
            tail_image: self.tail_image.as_ref().map(gens),
            k: self
                .components
                .iter()
                .map(|c| ComponentJson { generators: gens(&c.ideal), provenance: c.provenance.clone() })
                .collect(),
            strata: self.stratification.to_json(),
        }
    }
}

#[cfg(test)]
mod critical_tests;
