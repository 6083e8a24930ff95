//! Ideal operations built on elimination: projections, saturations,
//! intersections, and variety-level (radical) membership via the
//! Rabinowitsch trick.

use super::{EngineConfig, Ideal};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring};

impl Ideal {
    /// Generators of I ∩ k[keep]; the zero set of the result is the Zariski
    /// closure of the projection of V(I) onto the kept coordinates.
    ///
    /// `keep` lists variable indices of the ambient ring, strictly increasing.
    /// The result lives in a fresh ring on exactly those variables.
    pub fn elimination_ideal(
        &self,
        keep: &[usize],
        cfg: &EngineConfig,
        context: &str,
    ) -> Result<Ideal> {
        let n = self.ring().len();
        assert!(keep.windows(2).all(|w| w[0] < w[1]), "keep must be sorted");
        assert!(keep.iter().all(|&i| i < n), "keep indices out of range");
        let elim: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
        let kept_ring = Ring::new(keep.iter().map(|&i| self.ring().vars()[i].clone()).collect());
        if elim.is_empty() {
            return Ok(Ideal::new(&kept_ring, self.generators().to_vec()));
        }

        // permute: eliminated variables first
        let mut var_map = vec![0usize; n];
        for (pos, &i) in elim.iter().enumerate() {
            var_map[i] = pos;
        }
        for (pos, &i) in keep.iter().enumerate() {
            var_map[i] = elim.len() + pos;
        }
        let mut names: Vec<String> = elim.iter().map(|&i| self.ring().vars()[i].clone()).collect();
        names.extend(keep.iter().map(|&i| self.ring().vars()[i].clone()));
        let work_ring = Ring::new(names);
        let work_gens: Vec<Polynomial> = self
            .generators()
            .iter()
            .map(|g| g.map_to_ring(&work_ring, &var_map))
            .collect();

        let order = MonomialOrder::elimination(elim.len());
        debug_assert!(order.eliminates(elim.len()));
        let work = Ideal::new(&work_ring, work_gens);
        let basis = work.groebner_basis(&order, cfg, context)?;

        // keep basis elements supported purely on the kept block
        let mut out = Vec::new();
        let kept_map: Vec<usize> = (0..keep.len()).collect();
        for p in basis.iter() {
            if p
                .terms()
                .iter()
                .all(|(m, _)| m.support().all(|v| v >= elim.len()))
            {
                let restricted = Polynomial::from_terms(
                    &kept_ring,
                    p.terms()
                        .iter()
                        .map(|(m, c)| {
                            (
                                crate::poly::Monomial(
                                    kept_map.iter().map(|&j| m.0[elim.len() + j]).collect(),
                                ),
                                c.clone(),
                            )
                        })
                        .collect(),
                );
                out.push(restricted);
            }
        }
        Ok(Ideal::with_known_basis(&kept_ring, out, MonomialOrder::GrevLex))
    }

    /// Saturation (I : s^∞) computed as (I + ⟨1 − s·z⟩) ∩ k[x].
    pub fn saturation(&self, s: &Polynomial, cfg: &EngineConfig, context: &str) -> Result<Ideal> {
        let n = self.ring().len();
        let zname = self.ring().fresh_name("zsat");
        let mut names = vec![zname];
        names.extend(self.ring().vars().iter().cloned());
        let ext = Ring::new(names);
        let shift: Vec<usize> = (1..=n).collect();
        let mut gens: Vec<Polynomial> = self
            .generators()
            .iter()
            .map(|g| g.map_to_ring(&ext, &shift))
            .collect();
        let sz = s.map_to_ring(&ext, &shift).mul(&Polynomial::var(&ext, 0));
        gens.push(Polynomial::one(&ext).sub(&sz));
        let extended = Ideal::new(&ext, gens);
        let keep: Vec<usize> = (1..=n).collect();
        let result = extended.elimination_ideal(&keep, cfg, context)?;
        // rebase onto the original ring (same variables, same order)
        Ok(Ideal::new(
            self.ring(),
            result
                .generators()
                .iter()
                .map(|g| g.map_to_ring(self.ring(), &(0..n).collect::<Vec<_>>()))
                .collect(),
        ))
    }

    /// Membership in the saturation: p ∈ (I : s^∞).
    pub fn saturated_contains(
        &self,
        p: &Polynomial,
        s: &Polynomial,
        cfg: &EngineConfig,
        context: &str,
    ) -> Result<bool> {
        self.saturation(s, cfg, context)?.contains(p, cfg, context)
    }

    /// Ideal intersection via the tag-variable trick:
    /// I ∩ J = (t·I + (1−t)·J) ∩ k[x]. Realizes the union of varieties.
    pub fn intersect(&self, other: &Ideal, cfg: &EngineConfig, context: &str) -> Result<Ideal> {
        assert!(crate::poly::same_ring(self.ring(), other.ring()));
        if self.is_zero_ideal() || other.is_zero_ideal() {
            // V(0) is everything; the union is everything
            return Ok(Ideal::zero(self.ring()));
        }
        let n = self.ring().len();
        let tname = self.ring().fresh_name("tint");
        let mut names = vec![tname];
        names.extend(self.ring().vars().iter().cloned());
        let ext = Ring::new(names);
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let mut gens = Vec::new();
        for g in self.generators() {
            gens.push(g.map_to_ring(&ext, &shift).mul(&t));
        }
        for g in other.generators() {
            gens.push(g.map_to_ring(&ext, &shift).mul(&one_minus_t));
        }
        let extended = Ideal::new(&ext, gens);
        let keep: Vec<usize> = (1..=n).collect();
        let result = extended.elimination_ideal(&keep, cfg, context)?;
        Ok(Ideal::new(
            self.ring(),
            result
                .generators()
                .iter()
                .map(|g| g.map_to_ring(self.ring(), &(0..n).collect::<Vec<_>>()))
                .collect(),
        ))
    }

    /// Radical membership: p vanishes identically on V(I), decided by the
    /// Rabinowitsch trick (V(I + ⟨1 − p·z⟩) = ∅).
    pub fn vanishes_on(&self, p: &Polynomial, cfg: &EngineConfig, context: &str) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        let n = self.ring().len();
        let zname = self.ring().fresh_name("zrad");
        let mut names = vec![zname];
        names.extend(self.ring().vars().iter().cloned());
        let ext = Ring::new(names);
        let shift: Vec<usize> = (1..=n).collect();
        let mut gens: Vec<Polynomial> = self
            .generators()
            .iter()
            .map(|g| g.map_to_ring(&ext, &shift))
            .collect();
        gens.push(Polynomial::one(&ext).sub(&p.map_to_ring(&ext, &shift).mul(&Polynomial::var(&ext, 0))));
        Ideal::new(&ext, gens).is_empty_variety(cfg, context)
    }

    /// V(I) ⊇ V(J): every generator of I vanishes on V(J).
    pub fn variety_contains(&self, other: &Ideal, cfg: &EngineConfig, context: &str) -> Result<bool> {
        for g in self.generators() {
            if !other.vanishes_on(g, cfg, context)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// V(I) = V(J) via mutual radical membership of generators.
    pub fn variety_equal(&self, other: &Ideal, cfg: &EngineConfig, context: &str) -> Result<bool> {
        Ok(self.variety_contains(other, cfg, context)?
            && other.variety_contains(self, cfg, context)?)
    }

    /// Sum of ideals (V = intersection of varieties).
    pub fn plus(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.generators().to_vec();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring(), gens)
    }

    /// Intersection of several ideals (variety-level union), left to right.
    pub fn intersect_all(ideals: &[Ideal], cfg: &EngineConfig, context: &str) -> Result<Ideal> {
        let mut it = ideals.iter();
        let Some(first) = it.next() else {
            return Err(Error::Validation("intersect_all needs at least one ideal".into()));
        };
        let mut acc = first.clone();
        for next in it {
            acc = acc.intersect(next, cfg, context)?;
        }
        Ok(acc)
    }
}
