//! Buchberger Gröbner bases, normal forms, elimination, dimension.
//!
//! Pair selection is the normal strategy (smallest lcm in the active order);
//! useless pairs are discarded by the coprimality criterion and the chain
//! criterion. Computation is budgeted: exceeding the configured S-pair budget
//! is a hard error naming the offending subcomputation, never a silent
//! truncation.
//!
//! Internally the engine works on term lists sorted under the active order.
//! All supported orders have componentwise-additive sort keys, so term-by-
//! monomial multiplication is a key shift and reduction never re-sorts.

mod dim;
mod ops;

pub use dim::Dimension;

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, Rational, Ring};
use num::{One, Signed, Zero};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::sync::{Arc, Mutex};

/// Engine-wide resource limits.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Maximum number of S-polynomial reductions per Gröbner basis call.
    pub spair_budget: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { spair_budget: 200_000 }
    }
}

/// A polynomial ideal with cached reduced Gröbner bases per monomial order.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    /// Build an ideal from generators; zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Ideal {
        for g in &gens {
            assert!(same_ring(g.ring(), ring), "generator ring mismatch");
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens, cache: Mutex::new(HashMap::new()) }
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis w.r.t. `order`; cached per order.
    pub fn groebner_basis(
        &self,
        order: &MonomialOrder,
        cfg: &EngineConfig,
        context: &str,
    ) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(b) = self.cache.lock().unwrap().get(order) {
            return Ok(b.clone());
        }
        let basis = Arc::new(buchberger(&self.ring, &self.gens, order, cfg, context)?);
        Ok(self
            .cache
            .lock()
            .unwrap()
            .entry(order.clone())
            .or_insert(basis)
            .clone())
    }

    /// The orders for which a basis has been computed (or injected).
    pub fn cached_orders(&self) -> Vec<MonomialOrder> {
        self.cache.lock().unwrap().keys().cloned().collect()
    }

    /// Construct an ideal whose generators are already a reduced basis for
    /// `order`, seeding the cache.
    pub fn with_known_basis(ring: &Arc<Ring>, basis: Vec<Polynomial>, order: MonomialOrder) -> Ideal {
        let ideal = Ideal::new(ring, basis);
        let arc = Arc::new(ideal.gens.clone());
        ideal.cache.lock().unwrap().insert(order, arc);
        ideal
    }

    /// True iff the ideal contains a nonzero constant, i.e. V(I) = ∅ over ℂ.
    pub fn is_empty_variety(&self, cfg: &EngineConfig, context: &str) -> Result<bool> {
        let b = self.groebner_basis(&MonomialOrder::GrevLex, cfg, context)?;
        Ok(b.iter().any(|p| p.is_unit_constant()))
    }

    /// Ideal membership via normal form against the grevlex basis.
    pub fn contains(&self, p: &Polynomial, cfg: &EngineConfig, context: &str) -> Result<bool> {
        let b = self.groebner_basis(&MonomialOrder::GrevLex, cfg, context)?;
        Ok(normal_form(p, &b, &MonomialOrder::GrevLex).is_zero())
    }
}

// ---------------------------------------------------------------------------
// keyed working representation

type Key = Vec<i64>;

#[derive(Clone, Debug)]
struct KTerm {
    key: Key,
    mono: Monomial,
    coeff: Rational,
}

/// Term list sorted strictly descending by `key`.
#[derive(Clone, Debug)]
struct KPoly {
    terms: Vec<KTerm>,
}

impl KPoly {
    fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> KPoly {
        let mut terms: Vec<KTerm> = p
            .terms()
            .iter()
            .map(|(m, c)| KTerm { key: order.sort_key(&m.0), mono: m.clone(), coeff: c.clone() })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        KPoly { terms }
    }

    fn to_polynomial(&self, ring: &Arc<Ring>) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|t| (t.mono.clone(), t.coeff.clone())).collect(),
        )
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &KTerm {
        &self.terms[0]
    }

    /// self - c * x^shift * g, exploiting additivity of sort keys.
    fn sub_scaled(&self, g: &KPoly, shift: &Monomial, shift_key: &Key, c: &Rational) -> KPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0usize, 0usize);
        let gkey = |t: &KTerm| -> Key {
            t.key.iter().zip(shift_key).map(|(a, b)| a + b).collect()
        };
        let mut jkey: Option<Key> = (j < g.terms.len()).then(|| gkey(&g.terms[j]));
        while i < self.terms.len() && j < g.terms.len() {
            let jk = jkey.as_ref().unwrap();
            match self.terms[i].key.cmp(jk) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let gt = &g.terms[j];
                    out.push(KTerm {
                        key: jk.clone(),
                        mono: gt.mono.mul(shift),
                        coeff: -(&gt.coeff * c),
                    });
                    j += 1;
                    jkey = (j < g.terms.len()).then(|| gkey(&g.terms[j]));
                }
                std::cmp::Ordering::Equal => {
                    let coeff = &self.terms[i].coeff - &(&g.terms[j].coeff * c);
                    if !coeff.is_zero() {
                        out.push(KTerm {
                            key: self.terms[i].key.clone(),
                            mono: self.terms[i].mono.clone(),
                            coeff,
                        });
                    }
                    i += 1;
                    j += 1;
                    jkey = (j < g.terms.len()).then(|| gkey(&g.terms[j]));
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        while j < g.terms.len() {
            let gt = &g.terms[j];
            out.push(KTerm {
                key: gt.key.iter().zip(shift_key).map(|(a, b)| a + b).collect(),
                mono: gt.mono.mul(shift),
                coeff: -(&gt.coeff * c),
            });
            j += 1;
        }
        KPoly { terms: out }
    }

    /// Scale so coefficients are coprime integers with positive leading one.
    fn primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut den_lcm = num::BigInt::one();
        for t in &self.terms {
            den_lcm = num::integer::lcm(den_lcm, t.coeff.denom().clone());
        }
        let mut num_gcd = num::BigInt::zero();
        for t in &self.terms {
            num_gcd = num::integer::gcd(num_gcd, t.coeff.numer() * (&den_lcm / t.coeff.denom()));
        }
        let mut scale = Rational::new(den_lcm, num_gcd);
        if self.terms[0].coeff.is_negative() == scale.is_positive() {
            scale = -scale;
        }
        if !scale.is_one() {
            for t in &mut self.terms {
                t.coeff *= &scale;
            }
        }
    }
}

/// Full reduction of `p` modulo `basis` (leading and tail terms).
fn kreduce(p: &KPoly, basis: &[KPoly]) -> KPoly {
    let mut rem: Vec<KTerm> = Vec::new();
    let mut work = p.clone();
    'outer: while !work.is_zero() {
        let wl = work.lead();
        for g in basis {
            let gl = g.lead();
            if gl.mono.divides(&wl.mono) {
                let shift = gl.mono.quotient_into(&wl.mono);
                let shift_key: Key =
                    wl.key.iter().zip(&gl.key).map(|(a, b)| a - b).collect();
                let c = &wl.coeff / &gl.coeff;
                work = work.sub_scaled(g, &shift, &shift_key, &c);
                continue 'outer;
            }
        }
        rem.push(work.terms[0].clone());
        work.terms.remove(0);
    }
    KPoly { terms: rem }
}

/// Remainder of multivariate division of `p` by `basis` under `order`.
/// Zero iff `p` lies in the ideal generated by a Gröbner basis.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let kb: Vec<KPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| KPoly::from_polynomial(g, order))
        .collect();
    kreduce(&KPoly::from_polynomial(p, order), &kb).to_polynomial(p.ring())
}

fn s_poly(f: &KPoly, g: &KPoly, order: &MonomialOrder) -> KPoly {
    let (fl, gl) = (f.lead(), g.lead());
    let l = fl.mono.lcm(&gl.mono);
    let lkey = order.sort_key(&l.0);
    // (lcm/lt_f)/lc_f * f  -  (lcm/lt_g)/lc_g * g
    let shift_f = fl.mono.quotient_into(&l);
    let key_f: Key = lkey.iter().zip(&fl.key).map(|(a, b)| a - b).collect();
    let scaled_f = KPoly { terms: vec![] }.sub_scaled(
        f,
        &shift_f,
        &key_f,
        &(-(Rational::one() / fl.coeff.clone())),
    );
    let shift_g = gl.mono.quotient_into(&l);
    let key_g: Key = lkey.iter().zip(&gl.key).map(|(a, b)| a - b).collect();
    scaled_f.sub_scaled(g, &shift_g, &key_g, &(Rational::one() / gl.coeff.clone()))
}

/// Buchberger's algorithm returning the unique reduced basis (monic elements,
/// sorted descending by leading monomial).
pub fn buchberger(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    order: &MonomialOrder,
    cfg: &EngineConfig,
    context: &str,
) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<KPoly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let mut k = KPoly::from_polynomial(g, order);
            k.primitive();
            basis.push(k);
        }
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut heap: BinaryHeap<Reverse<(Key, usize, usize)>> = BinaryHeap::new();
    macro_rules! push_pairs {
        ($new:expr) => {
            for i in 0..$new {
                let l = basis[i].lead().mono.lcm(&basis[$new].lead().mono);
                heap.push(Reverse((order.sort_key(&l.0), i, $new)));
                pending.insert((i, $new));
            }
        };
    }
    for j in 1..basis.len() {
        push_pairs!(j);
    }

    let mut budget = cfg.spair_budget;
    while let Some(Reverse((_, i, j))) = heap.pop() {
        if !pending.remove(&(i, j)) {
            continue; // stale entry
        }
        let (li, lj) = (&basis[i].lead().mono, &basis[j].lead().mono);
        if li.coprime(lj) {
            continue; // product criterion
        }
        let lcm = li.lcm(lj);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().mono.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue; // chain criterion
        }
        if budget == 0 {
            return Err(Error::BudgetExceeded {
                context: context.to_string(),
                budget: cfg.spair_budget,
            });
        }
        budget -= 1;
        let s = s_poly(&basis[i], &basis[j], order);
        let mut r = kreduce(&s, &basis);
        if !r.is_zero() {
            r.primitive();
            basis.push(r);
            push_pairs!(basis.len() - 1);
        }
    }

    Ok(reduce_basis(ring, basis))
}

/// Inter-reduce a Gröbner basis into the unique reduced form.
fn reduce_basis(ring: &Arc<Ring>, mut basis: Vec<KPoly>) -> Vec<Polynomial> {
    // minimalize: drop elements whose leading term another's divides
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && basis[j].lead().mono.divides(&basis[i].lead().mono)
                && !(basis[j].lead().mono == basis[i].lead().mono && j > i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut it = keep.iter();
    basis.retain(|_| *it.next().unwrap());
    // tail-reduce each element against the others
    for i in 0..basis.len() {
        let mut others = basis.clone();
        others.remove(i);
        if others.is_empty() {
            continue;
        }
        let r = kreduce(&basis[i], &others);
        debug_assert!(!r.is_zero(), "minimal basis element reduced to zero");
        basis[i] = r;
    }
    basis.sort_by(|a, b| b.lead().key.cmp(&a.lead().key));
    basis
        .iter()
        .map(|k| {
            let inv = Rational::one() / k.lead().coeff.clone();
            let mut kk = k.clone();
            for t in &mut kk.terms {
                t.coeff *= &inv;
            }
            kk.to_polynomial(ring)
        })
        .collect()
}

#[cfg(test)]
mod tests;
