use std::cmp::Ordering;

/// A total order on monomials of a fixed ring.
///
/// `Block` orders compare the first `split` exponents with `first` and break
/// ties on the remaining exponents with `second`; they are elimination orders
/// for the leading block of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    GrevLex,
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Elimination order for the first `split` variables, grevlex inside each block.
    pub fn elimination(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(MonomialOrder::GrevLex),
            second: Box::new(MonomialOrder::GrevLex),
        }
    }

    /// True when every monomial containing one of the first `k` variables
    /// dominates every monomial free of them.
    pub fn eliminates(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        match self {
            MonomialOrder::Lex => true,
            MonomialOrder::Block { split, second, .. } => {
                *split >= k || second.eliminates(k - *split)
            }
            _ => false,
        }
    }

    /// True for orders that refine total degree; homogenization of a Gröbner
    /// basis is only valid for these.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrLex | MonomialOrder::GrevLex)
    }

    pub fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrLex => {
                let (da, db): (u64, u64) =
                    (a.iter().map(|&e| e as u64).sum(), b.iter().map(|&e| e as u64).sum());
                da.cmp(&db).then_with(|| MonomialOrder::Lex.cmp_exponents(a, b))
            }
            MonomialOrder::GrevLex => {
                let (da, db): (u64, u64) =
                    (a.iter().map(|&e| e as u64).sum(), b.iter().map(|&e| e as u64).sum());
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        match x.cmp(y) {
                            Ordering::Equal => continue,
                            // larger exponent in a *later* position means smaller
                            ord => return ord.reverse(),
                        }
                    }
                    Ordering::Equal
                })
            }
            MonomialOrder::Block { split, first, second } => {
                let k = (*split).min(a.len());
                first
                    .cmp_exponents(&a[..k], &b[..k])
                    .then_with(|| second.cmp_exponents(&a[k..], &b[k..]))
            }
        }
    }

    /// A vector key whose lexicographic order agrees with `cmp_exponents`.
    /// Used to put S-pairs in a heap without carrying the order around.
    pub fn sort_key(&self, exps: &[u32]) -> Vec<i64> {
        let mut key = Vec::with_capacity(exps.len() + 2);
        self.push_key(exps, &mut key);
        key
    }

    fn push_key(&self, exps: &[u32], key: &mut Vec<i64>) {
        match self {
            MonomialOrder::Lex => key.extend(exps.iter().map(|&e| e as i64)),
            MonomialOrder::GrLex => {
                key.push(exps.iter().map(|&e| e as i64).sum());
                key.extend(exps.iter().map(|&e| e as i64));
            }
            MonomialOrder::GrevLex => {
                key.push(exps.iter().map(|&e| e as i64).sum());
                key.extend(exps.iter().rev().map(|&e| -(e as i64)));
            }
            MonomialOrder::Block { split, first, second } => {
                let k = (*split).min(exps.len());
                first.push_key(&exps[..k], key);
                second.push_key(&exps[k..], key);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_vs_lex_disagree_in_the_classic_spot() {
        // x^1 y^2 z^0 vs x^1 y^1 z^1  (same degree)
        let a = [1, 2, 0];
        let b = [1, 1, 1];
        assert_eq!(MonomialOrder::GrevLex.cmp_exponents(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp_exponents(&a, &b), Ordering::Greater);
        // x z vs y^2: lex prefers x, grevlex prefers y^2? deg equal, last nonzero of a-b:
        let a = [1, 0, 1];
        let b = [0, 2, 0];
        assert_eq!(MonomialOrder::Lex.cmp_exponents(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp_exponents(&a, &b), Ordering::Less);
    }

    #[test]
    fn sort_key_agrees_with_cmp() {
        let orders = [
            MonomialOrder::Lex,
            MonomialOrder::GrLex,
            MonomialOrder::GrevLex,
            MonomialOrder::elimination(2),
        ];
        let monos: Vec<Vec<u32>> = vec![
            vec![0, 0, 0, 0],
            vec![1, 0, 2, 0],
            vec![0, 1, 0, 3],
            vec![2, 2, 0, 0],
            vec![0, 0, 1, 1],
            vec![1, 1, 1, 1],
        ];
        for ord in &orders {
            for a in &monos {
                for b in &monos {
                    let direct = ord.cmp_exponents(a, b);
                    let keyed = ord.sort_key(a).cmp(&ord.sort_key(b));
                    assert_eq!(direct, keyed, "order {ord:?} on {a:?} vs {b:?}");
                }
            }
        }
    }

    #[test]
    fn block_order_eliminates_leading_block() {
        let ord = MonomialOrder::elimination(2);
        // t^1 (first block) beats any pure-tail monomial
        assert_eq!(ord.cmp_exponents(&[1, 0, 0, 0], &[0, 0, 9, 9]), Ordering::Greater);
    }
}
