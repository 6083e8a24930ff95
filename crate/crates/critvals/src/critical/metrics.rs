//! Distance-to-singularity functions of a linear map A (optionally restricted
//! to a subspace H given by linear equations): the smallest singular value,
//! the minimal row-to-span distance, and the max-min ratio of maximal minors
//! to their sub-minors. The three are equivalent up to dimensional constants
//! and the last one is the effectively computable surrogate driving the
//! asymptotic critical value construction.

use crate::variety::subsets;
use num::complex::Complex64;

pub type CMat = Vec<Vec<Complex64>>;

const DROP_TOL: f64 = 1e-12;

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Modified Gram-Schmidt with a relative drop tolerance.
fn orthonormalize(rows: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let scale = rows.iter().map(|r| norm(r)).fold(0.0f64, f64::max).max(1.0);
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    for r in rows {
        let mut v = r.clone();
        for q in &basis {
            let c = dot(q, &v);
            for (vi, qi) in v.iter_mut().zip(q) {
                *vi -= c * qi;
            }
        }
        let n = norm(&v);
        if n > DROP_TOL * scale {
            for vi in v.iter_mut() {
                *vi /= n;
            }
            basis.push(v);
        }
    }
    basis
}

/// Distance from `a` to the complex span of `rows`.
fn distance_to_span(a: &[Complex64], rows: &[Vec<Complex64>]) -> f64 {
    let basis = orthonormalize(rows);
    let mut v = a.to_vec();
    for q in &basis {
        let c = dot(q, &v);
        for (vi, qi) in v.iter_mut().zip(q) {
            *vi -= c * qi;
        }
    }
    norm(&v)
}

/// Orthonormal basis of the kernel of B (the subspace H cut by the rows).
fn kernel_basis(b_rows: &[Vec<Complex64>], n: usize) -> Vec<Vec<Complex64>> {
    // ker B is the Hermitian complement of the conjugated rows
    let conj_rows: Vec<Vec<Complex64>> =
        b_rows.iter().map(|r| r.iter().map(|x| x.conj()).collect()).collect();
    let row_basis = orthonormalize(&conj_rows);
    let mut kernel: Vec<Vec<Complex64>> = Vec::new();
    for i in 0..n {
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        v[i] = Complex64::new(1.0, 0.0);
        for q in row_basis.iter().chain(kernel.iter()) {
            let c = dot(q, &v);
            for (vi, qi) in v.iter_mut().zip(q) {
                *vi -= c * qi;
            }
        }
        let nv = norm(&v);
        if nv > DROP_TOL {
            for vi in v.iter_mut() {
                *vi /= nv;
            }
            kernel.push(v);
        }
        if kernel.len() + row_basis.len() == n {
            break;
        }
    }
    kernel
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi with phased rotations.
fn hermitian_eigenvalues(mut h: CMat) -> Vec<f64> {
    let m = h.len();
    if m == 0 {
        return Vec::new();
    }
    let scale = h
        .iter()
        .flat_map(|r| r.iter())
        .map(|x| x.norm())
        .fold(0.0f64, f64::max)
        .max(1.0);
    for _sweep in 0..60 {
        let mut off = 0.0;
        for p in 0..m {
            for q2 in 0..m {
                if p != q2 {
                    off += h[p][q2].norm_sqr();
                }
            }
        }
        if off.sqrt() < 1e-15 * scale {
            break;
        }
        for p in 0..m {
            for q2 in p + 1..m {
                let beta = h[p][q2];
                if beta.norm() < 1e-18 * scale {
                    continue;
                }
                // phase the pivot entry real: column/row q2 by e^{±i phi}
                let phase = beta / beta.norm();
                for i in 0..m {
                    h[i][q2] *= phase.conj();
                }
                for j in 0..m {
                    h[q2][j] *= phase;
                }
                let b = h[p][q2].re;
                let tau = (h[q2][q2].re - h[p][p].re) / (2.0 * b);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..m {
                    let (hp, hq) = (h[i][p], h[i][q2]);
                    h[i][p] = hp * c - hq * s;
                    h[i][q2] = hp * s + hq * c;
                }
                for j in 0..m {
                    let (hp, hq) = (h[p][j], h[q2][j]);
                    h[p][j] = hp * c - hq * s;
                    h[q2][j] = hp * s + hq * c;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..m).map(|i| h[i][i].re).collect();
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eigs
}

fn smallest_singular_value(a: &CMat) -> f64 {
    let m = a.len();
    if m == 0 {
        return 0.0;
    }
    let gram: CMat = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| a[i].iter().zip(&a[j]).map(|(x, y)| x * y.conj()).sum())
                .collect()
        })
        .collect();
    hermitian_eigenvalues(gram)[0].max(0.0).sqrt()
}

/// Smallest singular value of A: zero exactly when A is not surjective.
pub fn nu(a: &CMat) -> f64 {
    smallest_singular_value(a)
}

/// nu of A restricted to H = ker B.
pub fn nu_restricted(a: &CMat, b_rows: &[Vec<Complex64>]) -> f64 {
    if b_rows.is_empty() {
        return nu(a);
    }
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    let kernel = kernel_basis(b_rows, n);
    if kernel.is_empty() {
        return 0.0;
    }
    // columns of A|_H in the orthonormal kernel basis
    let restricted: CMat = a
        .iter()
        .map(|row| {
            kernel
                .iter()
                .map(|q| row.iter().zip(q).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect();
    smallest_singular_value(&restricted)
}

/// Minimal distance from one row to the span of the remaining rows.
pub fn kappa(a: &CMat) -> f64 {
    kappa_restricted(a, &[])
}

/// Restricted form: the span additionally contains the rows cutting H.
pub fn kappa_restricted(a: &CMat, b_rows: &[Vec<Complex64>]) -> f64 {
    let m = a.len();
    let mut best = f64::INFINITY;
    for i in 0..m {
        let mut others: Vec<Vec<Complex64>> = Vec::with_capacity(m - 1 + b_rows.len());
        for (j, row) in a.iter().enumerate() {
            if j != i {
                others.push(row.clone());
            }
        }
        others.extend(b_rows.iter().cloned());
        best = best.min(distance_to_span(&a[i], &others));
    }
    if best.is_finite() {
        best
    } else {
        0.0
    }
}

fn det(m: &CMat) -> Complex64 {
    let n = m.len();
    if n == 0 {
        return Complex64::new(1.0, 0.0); // empty minor convention
    }
    if n == 1 {
        return m[0][0];
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for j in 0..n {
        if m[0][j] != Complex64::new(0.0, 0.0) {
            let minor: CMat = (1..n)
                .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c]).collect())
                .collect();
            acc += m[0][j] * det(&minor) * sign;
        }
        sign = -sign;
    }
    acc
}

/// Max over maximal column minors of the min ratio |M_I| / |M_I(k,j)| over
/// nonzero sub-minors obtained by deleting one map row and one column of I;
/// zero when every sub-minor of every I vanishes.
pub fn g_prime(a: &CMat, b_rows: &[Vec<Complex64>]) -> f64 {
    let m = a.len();
    let mut c: CMat = a.clone();
    c.extend(b_rows.iter().cloned());
    let rows = c.len();
    let n = c.first().map(|r| r.len()).unwrap_or(0);
    if rows > n {
        return 0.0;
    }
    let mut best = 0.0f64;
    for cols in subsets(n, rows) {
        let main: CMat = c.iter().map(|r| cols.iter().map(|&j| r[j]).collect()).collect();
        let m_i = det(&main).norm();
        let mut inner: Option<f64> = None;
        for k in 0..m {
            for (jpos, _) in cols.iter().enumerate() {
                let sub: CMat = (0..rows)
                    .filter(|&r| r != k)
                    .map(|r| {
                        (0..rows)
                            .filter(|&cc| cc != jpos)
                            .map(|cc| main[r][cc])
                            .collect()
                    })
                    .collect();
                let m_sub = det(&sub).norm();
                if m_sub == 0.0 {
                    continue;
                }
                let ratio = m_i / m_sub;
                inner = Some(inner.map_or(ratio, |v: f64| v.min(ratio)));
            }
        }
        // all sub-minors zero: this I contributes nothing
        if let Some(v) = inner {
            best = best.max(v);
        }
    }
    best
}
