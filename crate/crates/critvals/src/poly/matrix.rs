//! Exact determinants of polynomial matrices.
//!
//! Small sizes expand by cofactors with memoized minors over column masks;
//! larger matrices go through fraction-free Bareiss elimination, whose
//! divisions are exact in the polynomial ring.

use super::Polynomial;
use std::collections::HashMap;

const COFACTOR_LIMIT: usize = 8;

pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        panic!("determinant of empty matrix is undefined here");
    }
    let ring = m[0][0].ring().clone();
    if n <= COFACTOR_LIMIT {
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut memo: HashMap<u32, Polynomial> = HashMap::new();
        return cofactor(m, 0, full, &mut memo, &ring);
    }
    bareiss(m, &ring)
}

fn cofactor(
    m: &[Vec<Polynomial>],
    row: usize,
    cols: u32,
    memo: &mut HashMap<u32, Polynomial>,
    ring: &std::sync::Arc<super::Ring>,
) -> Polynomial {
    if cols == 0 {
        return Polynomial::one(ring);
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(ring);
    let mut sign_pos = true;
    for j in 0..m.len() as u32 {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &m[row][j as usize];
        if !entry.is_zero() {
            let minor = cofactor(m, row + 1, cols & !(1 << j), memo, ring);
            let contrib = entry.mul(&minor);
            acc = if sign_pos { acc.add(&contrib) } else { acc.sub(&contrib) };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(cols, acc.clone());
    acc
}

fn bareiss(m: &[Vec<Polynomial>], ring: &std::sync::Arc<super::Ring>) -> Polynomial {
    let n = m.len();
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut prev = Polynomial::one(ring);
    let mut sign_pos = true;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // pivot search with a row swap (flips the sign)
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Polynomial::zero(ring);
            };
            a.swap(k, p);
            sign_pos = !sign_pos;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact by construction");
            }
        }
        for i in k + 1..n {
            a[i][k] = Polynomial::zero(ring);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_pos {
        det
    } else {
        det.neg()
    }
}
