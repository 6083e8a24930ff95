//! Krull dimension of V(I) from the leading-term staircase of a graded basis:
//! the dimension equals the size of the largest variable subset S such that
//! no leading monomial is supported inside S, computed here through a minimum
//! hitting set over the leading supports.

use super::{EngineConfig, Ideal};
use crate::error::Result;
use crate::poly::MonomialOrder;

/// Dimension of a complex affine variety; `Empty` iff 1 ∈ I.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Empty,
    Dim(usize),
}

impl Dimension {
    pub fn as_isize(&self) -> isize {
        match self {
            Dimension::Empty => -1,
            Dimension::Dim(d) => *d as isize,
        }
    }
}

impl Ideal {
    /// dim V(I) over ℂ, from the grevlex staircase.
    pub fn dimension(&self, cfg: &EngineConfig, context: &str) -> Result<Dimension> {
        let n = self.ring().len();
        let basis = self.groebner_basis(&MonomialOrder::GrevLex, cfg, context)?;
        if basis.iter().any(|p| p.is_unit_constant()) {
            return Ok(Dimension::Empty);
        }
        if basis.is_empty() {
            return Ok(Dimension::Dim(n));
        }
        let mut supports: Vec<u64> = basis
            .iter()
            .map(|p| {
                let (m, _) = p.leading_term(&MonomialOrder::GrevLex).unwrap();
                m.support().fold(0u64, |acc, i| acc | (1 << i))
            })
            .collect();
        supports.sort();
        supports.dedup();
        // drop supports that contain another support (hitting the smaller hits both)
        let minimal: Vec<u64> = supports
            .iter()
            .filter(|&&s| !supports.iter().any(|&t| t != s && t & s == t))
            .copied()
            .collect();
        let mut best = n;
        branch(&minimal, 0u64, 0, &mut best);
        Ok(Dimension::Dim(n - best))
    }

    /// Number of standard monomials (= dim_k k[x]/I) when V(I) is finite;
    /// `None` when the staircase is infinite.
    pub fn finite_point_multiplicity(
        &self,
        cfg: &EngineConfig,
        context: &str,
    ) -> Result<Option<usize>> {
        let n = self.ring().len();
        let basis = self.groebner_basis(&MonomialOrder::GrevLex, cfg, context)?;
        let leads: Vec<_> = basis
            .iter()
            .map(|p| p.leading_term(&MonomialOrder::GrevLex).unwrap().0.clone())
            .collect();
        // a finite staircase requires a pure power of every variable among the leads
        let mut bound = vec![0u32; n];
        for lm in &leads {
            let sup: Vec<usize> = lm.support().collect();
            if sup.len() == 1 {
                let v = sup[0];
                bound[v] = if bound[v] == 0 { lm.0[v] } else { bound[v].min(lm.0[v]) };
            }
            if sup.is_empty() {
                return Ok(Some(0)); // unit ideal: no points
            }
        }
        if bound.iter().any(|&b| b == 0) {
            return Ok(None);
        }
        let mut count = 0usize;
        let mut exps = vec![0u32; n];
        loop {
            let divisible = leads
                .iter()
                .any(|lm| lm.0.iter().zip(&exps).all(|(a, b)| a <= b));
            if !divisible {
                count += 1;
            }
            // odometer over the box Π [0, bound_i)
            let mut k = 0;
            loop {
                if k == n {
                    return Ok(Some(count));
                }
                exps[k] += 1;
                if exps[k] < bound[k] {
                    break;
                }
                exps[k] = 0;
                k += 1;
            }
        }
    }
}

/// Branch-and-bound minimum hitting set over bitmask supports.
fn branch(supports: &[u64], hit: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match supports.iter().find(|&&s| s & hit == 0) {
        None => *best = size,
        Some(&s) => {
            let mut bit = s;
            while bit != 0 {
                let low = bit & bit.wrapping_neg();
                branch(supports, hit | low, size + 1, best);
                bit ^= low;
            }
        }
    }
}
