//! Small dense linear-algebra helpers shared across the crate.

use crate::{c, CMat, CVec, Error, C64};

/// Largest absolute value of any entry.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_vec(v: &CVec) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Euclidean norm of the coordinate vector (Frobenius norm of the
/// coefficient matrix when coordinates enumerate matrix entries).
pub fn norm2(v: &CVec) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Solve A x = b by LU with partial pivoting.
pub fn solve(a: &CMat, b: &CVec) -> Result<CVec, Error> {
    a.clone()
        .lu()
        .solve(b)
        .ok_or_else(|| Error::Degenerate("LU solve failed".into()))
}

pub fn inverse(a: &CMat) -> Result<CMat, Error> {
    a.clone()
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::Degenerate("matrix not invertible".into()))
}

/// Singular values, largest first.
pub fn singular_values(m: &CMat) -> Vec<f64> {
    let svd = m.clone().svd(false, false);
    let mut sv: Vec<f64> = svd.singular_values.iter().cloned().collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    sv
}

pub fn sigma_min(m: &CMat) -> f64 {
    singular_values(m).last().copied().unwrap_or(0.0)
}

/// 2-norm condition number, `inf` when singular to working precision.
pub fn cond2(m: &CMat) -> f64 {
    let sv = singular_values(m);
    match (sv.first(), sv.last()) {
        (Some(&hi), Some(&lo)) if lo > 0.0 => hi / lo,
        _ => f64::INFINITY,
    }
}

/// Least-squares coordinates of `v` in the span of `basis` (columns),
/// together with the residual norm of the out-of-span component.
pub fn project_onto_span(basis: &[CVec], v: &CVec) -> Result<(CVec, f64), Error> {
    let n = v.len();
    let k = basis.len();
    let mut b = CMat::zeros(n, k);
    for (j, col) in basis.iter().enumerate() {
        if col.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: col.len(),
            });
        }
        b.set_column(j, col);
    }
    // Normal equations are adequate at desk scale; the spans we project onto
    // come from 0/1 basis choices and stay well conditioned.
    let bh = b.adjoint();
    let gram = &bh * &b;
    let rhs = &bh * v;
    let coords = solve(&gram, &rhs)?;
    let recon = &b * &coords;
    let resid = norm2(&(v - recon));
    Ok((coords, resid))
}

/// Matrix exponential by scaling and squaring with a Taylor kernel.
///
/// Serves as the reference map for group-valued oracles; the flow
/// integrator never calls it.
pub fn expm(a: &CMat) -> CMat {
    let n = a.nrows();
    let norm = max_abs(a) * n as f64;
    let mut s = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        s += 1;
        scale *= 0.5;
    }
    let b = a.map(|z| z * scale);
    let mut term = CMat::identity(n, n);
    let mut sum = CMat::identity(n, n);
    for k in 1..=24 {
        term = &term * &b / c(k as f64);
        sum += &term;
        if max_abs(&term) < 1e-20 {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// Antisymmetric part residual, used to assert stored Λ² data stays skew.
pub fn skew_defect(m: &CMat) -> f64 {
    max_abs(&(m + m.transpose()))
}

/// Build a complex matrix from row-major real data.
pub fn real_mat(rows: usize, cols: usize, data: &[f64]) -> CMat {
    let complex: Vec<C64> = data.iter().map(|&x| c(x)).collect();
    CMat::from_row_slice(rows, cols, &complex)
}

pub fn cvec(data: &[C64]) -> CVec {
    CVec::from_column_slice(data)
}

pub fn rvec(data: &[f64]) -> CVec {
    CVec::from_iterator(data.len(), data.iter().map(|&x| c(x)))
}
