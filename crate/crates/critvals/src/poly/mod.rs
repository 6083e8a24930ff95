//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are stored sorted descending under a fixed canonical order (grevlex),
//! which makes equality, hashing of string forms, and printing deterministic.
//! The Gröbner engine re-sorts terms under its active order on entry.

mod matrix;
mod order;
mod parse;

pub use matrix::determinant;
pub use order::MonomialOrder;
pub use parse::{parse, poly};

use crate::error::{Error, Result};
use num::complex::Complex64;
use num::traits::ToPrimitive;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Exact rational coefficient.
pub type Rational = BigRational;

/// Ambient polynomial ring: an ordered list of variable names.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Arc<Ring> {
        Arc::new(Ring {
            vars: vars.into_iter().map(Into::into).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Fresh variable name not present in the ring, derived from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.var_index(stem).is_none() {
            return stem.to_string();
        }
        for i in 0.. {
            let cand = format!("{stem}{i}");
            if self.var_index(&cand).is_none() {
                return cand;
            }
        }
        unreachable!()
    }
}

pub fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a.vars == b.vars
}

/// Exponent vector; length always equals the ring size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::GrevLex.cmp_exponents(&a.0, &b.0)
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    /// Sorted descending by the canonical (grevlex) order; no zero coefficients.
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.len()), c));
        }
        p
    }

    pub fn constant_i64(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, Rational::from(BigInt::from(c)))
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        assert!(i < ring.len(), "variable index out of range");
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.len(), i), Rational::one())],
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs; combines and sorts.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, Rational)>) -> Self {
        let mut terms = terms;
        for (m, _) in &terms {
            assert_eq!(m.0.len(), ring.len(), "monomial length must match ring");
        }
        terms.sort_by(|a, b| canonical_cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Nonzero constant (a unit in the ring).
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "[{}] vs [{}]",
                self.ring.vars().join(","),
                other.ring.vars().join(",")
            )))
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.checked_add(other).expect("ring mismatch in add")
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        // merge two sorted-descending term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match canonical_cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// self * (c * monomial); preserves sortedness.
    pub fn term_mul(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.checked_mul(other).expect("ring mismatch in mul")
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &other.terms {
            acc = acc.add(&self.term_mul(m, c));
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.ring.len(), "variable index out of range");
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] > 0)
            .map(|(m, c)| {
                let mut e = m.clone();
                let k = e.0[var];
                e.0[var] -= 1;
                (e, c * Rational::from(BigInt::from(k)))
            })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Gradient as a row of partials.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.len()).map(|i| self.partial_derivative(i)).collect()
    }

    /// Homogenize with a fresh first variable `x0`; the result lives in the
    /// extended ring and has pure degree `deg(self)`.
    pub fn homogenize(&self, x0_name: &str) -> Polynomial {
        let mut vars = vec![x0_name.to_string()];
        vars.extend(self.ring.vars().iter().cloned());
        let ext = Ring::new(vars);
        let d = self.degree();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Vec::with_capacity(m.0.len() + 1);
                e.push(d - m.degree());
                e.extend_from_slice(&m.0);
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(&ext, terms)
    }

    /// Set the first variable to 1 and drop it (inverse of `homogenize`).
    pub fn dehomogenize(&self) -> Polynomial {
        assert!(!self.ring.is_empty());
        let rest = Ring::new(self.ring.vars()[1..].to_vec());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(m.0[1..].to_vec()), c.clone()))
            .collect();
        Polynomial::from_terms(&rest, terms)
    }

    /// Re-express in `target`, sending variable `i` of self to variable
    /// `var_map[i]` of target. The map need not be injective (exponents of
    /// merged variables add), which realizes diagonal substitutions.
    pub fn map_to_ring(&self, target: &Arc<Ring>, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.len());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.len()];
                for (i, &x) in m.0.iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Set the flagged variables to zero and project onto the remaining ones
    /// (which must be unflagged, in ring order) as a new ring.
    pub fn set_vars_to_zero_and_project(&self, kill: &[bool], target: &Arc<Ring>) -> Polynomial {
        assert_eq!(kill.len(), self.ring.len());
        let keep: Vec<usize> = (0..self.ring.len()).filter(|&i| !kill[i]).collect();
        assert_eq!(keep.len(), target.len());
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.support().all(|i| !kill[i]))
            .map(|(m, c)| (Monomial(keep.iter().map(|&i| m.0[i]).collect()), c.clone()))
            .collect();
        Polynomial::from_terms(target, terms)
    }

    pub fn evaluate_exact(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn evaluate_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.ring.len());
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = Complex64::new(rational_to_f64(c), 0.0);
            for (i, &e) in m.0.iter().enumerate() {
                t *= point[i].powu(e);
            }
            acc += t;
        }
        acc
    }

    /// Leading term under an explicit order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_exponents(&a.0 .0, &b.0 .0))
            .map(|(m, c)| (m, c))
    }

    /// Scale so coefficients are coprime integers and the canonical leading
    /// coefficient is positive. The zero polynomial is returned unchanged.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            num_gcd = num::integer::gcd(num_gcd, c.numer() * (&den_lcm / c.denom()));
        }
        let mut scale = Rational::new(den_lcm, num_gcd);
        if self.terms[0].1.is_negative() == scale.is_positive() {
            scale = -scale;
        }
        self.scalar_mul(&scale)
    }

    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rational::one() / c.clone();
                self.scalar_mul(&inv)
            }
        }
    }

    /// Exact division by `q` when `q` divides self in the polynomial ring.
    pub fn div_exact(&self, q: &Polynomial) -> Option<Polynomial> {
        assert!(!q.is_zero(), "division by zero polynomial");
        let order = MonomialOrder::GrevLex;
        let (qm, qc) = q.leading_term(&order).unwrap();
        let (qm, qc) = (qm.clone(), qc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term(&order).unwrap();
            if !qm.divides(rm) {
                return None;
            }
            let m = qm.quotient_into(rm);
            let c = rc / &qc;
            let t = Polynomial {
                ring: self.ring.clone(),
                terms: vec![(m.clone(), c.clone())],
            };
            quot = quot.add(&t);
            rem = rem.sub(&q.term_mul(&m, &c));
        }
        Some(quot)
    }
}

pub fn rational_to_f64(c: &Rational) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        // fall back to separate conversion for extreme magnitudes
        let n = c.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = c.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.vars()[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.vars()[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
