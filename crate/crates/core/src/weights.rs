//! Integer weight decompositions and the weight-space Manin triple.
//!
//! A weighting assigns an integer to each basis element so that brackets
//! add weights and the zero-weight subalgebra is abelian. The double
//! construction places the diagonal against the split
//! `p2 = {(x, y) : x >= 0 modes, y <= 0 modes, pi0(x) + pi0(y) = 0}`
//! and certifies the four Manin-triple axioms by residuals.

use crate::algebra::{AlgebraElement, LieAlgebra, Realized};
use crate::linalg::{cond2, max_abs, norm2, sigma_min};
use crate::{c, CMat, CVec, Error, C64};

/// Integer weights on the basis of an algebra.
#[derive(Debug, Clone)]
pub struct TorusWeighting {
    algebra: LieAlgebra,
    weights: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct WeightingReport {
    /// Bracket coefficients landing outside weight additivity.
    pub grading_residual: f64,
    /// Largest bracket among zero-weight basis pairs.
    pub zero_mode_residual: f64,
    pub tol: f64,
    pub pass: bool,
}

impl TorusWeighting {
    pub fn new(algebra: LieAlgebra, weights: Vec<i64>) -> Result<Self, Error> {
        if weights.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: weights.len(),
            });
        }
        Ok(Self { algebra, weights })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn check(&self, tol: f64) -> WeightingReport {
        let d = self.algebra.dim();
        let mut grading: f64 = 0.0;
        let mut zero_mode: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let target = self.weights[i] + self.weights[j];
                for k in 0..d {
                    let coeff = self.algebra.c(i, j, k).norm();
                    if coeff == 0.0 {
                        continue;
                    }
                    if self.weights[k] != target {
                        grading = grading.max(coeff);
                    }
                    if self.weights[i] == 0 && self.weights[j] == 0 {
                        zero_mode = zero_mode.max(coeff);
                    }
                }
            }
        }
        WeightingReport {
            grading_residual: grading,
            zero_mode_residual: zero_mode,
            tol,
            pass: grading <= tol && zero_mode <= tol,
        }
    }

    /// Projection matrices (pi0, P+, P-) onto the zero, positive and
    /// negative weight spans. They are 0/1 diagonal and sum to the identity.
    pub fn projections(&self) -> (CMat, CMat, CMat) {
        let d = self.algebra.dim();
        let mut p0 = CMat::zeros(d, d);
        let mut pp = CMat::zeros(d, d);
        let mut pm = CMat::zeros(d, d);
        for i in 0..d {
            match self.weights[i].cmp(&0) {
                std::cmp::Ordering::Equal => p0[(i, i)] = c(1.0),
                std::cmp::Ordering::Greater => pp[(i, i)] = c(1.0),
                std::cmp::Ordering::Less => pm[(i, i)] = c(1.0),
            }
        }
        (p0, pp, pm)
    }

    /// The unique decomposition of `(u, v)` into the diagonal and the split
    /// part:
    ///   a = P+ v + pi0(u+v)/2 + P- u
    ///   x = P+ (u-v) + pi0(u-v)/2
    ///   y = pi0(v-u)/2 + P- (v-u)
    /// with a + x = u and a + y = v exactly.
    pub fn split(
        &self,
        u: &AlgebraElement,
        v: &AlgebraElement,
    ) -> Result<(AlgebraElement, AlgebraElement, AlgebraElement), Error> {
        if !self.algebra.same(u.algebra()) || !self.algebra.same(v.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let (p0, pp, pm) = self.projections();
        let half = c(0.5);
        let uv_sum = u.coords() + v.coords();
        let uv_diff = u.coords() - v.coords();
        let a = &pp * v.coords() + (&p0 * uv_sum).map(|z| z * half) + &pm * u.coords();
        let x = &pp * &uv_diff + (&p0 * &uv_diff).map(|z| z * half);
        let y = (&p0 * &uv_diff).map(|z| -z * half) - &pm * &uv_diff;
        Ok((
            self.algebra.element(a)?,
            self.algebra.element(x)?,
            self.algebra.element(y)?,
        ))
    }
}

/// A state realized by normalized matrix traces, omega(a) = Tr(a)/n.
#[derive(Debug, Clone)]
pub struct TraceState {
    realized: Realized,
}

impl TraceState {
    pub fn new(realized: Realized) -> Result<Self, Error> {
        let state = Self { realized };
        // Traciality of the trace is structural; measure the floating-point
        // defect anyway so a broken realization cannot slip through.
        let d = state.realized.algebra.dim();
        for i in 0..d {
            for j in 0..d {
                let ab = state.realized.basis_mat(i) * state.realized.basis_mat(j);
                let ba = state.realized.basis_mat(j) * state.realized.basis_mat(i);
                if (ab.trace() - ba.trace()).norm() > 1e-12 {
                    return Err(Error::Invalid("state is not tracial".into()));
                }
            }
        }
        // Faithfulness on the realized span: the Gram matrix of the
        // Frobenius inner product must be nonsingular.
        let gram = state.hermitian_gram();
        let smin = sigma_min(&gram);
        if smin < 1e-12 {
            return Err(Error::Degenerate(format!(
                "state Gram matrix is singular (sigma_min {smin:.3e})"
            )));
        }
        Ok(state)
    }

    pub fn realized(&self) -> &Realized {
        &self.realized
    }

    pub fn normalization(&self) -> f64 {
        1.0 / self.realized.n() as f64
    }

    pub fn omega(&self, x: &AlgebraElement) -> Result<C64, Error> {
        Ok(self.realized.realize(x)?.trace() * c(self.normalization()))
    }

    /// Symmetric pairing matrix B_ij = omega(b_i b_j).
    pub fn pairing_matrix(&self) -> CMat {
        let d = self.realized.algebra.dim();
        let s = c(self.normalization());
        let mut b = CMat::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let v = (self.realized.basis_mat(i) * self.realized.basis_mat(j)).trace() * s;
                b[(i, j)] = v;
                b[(j, i)] = v;
            }
        }
        b
    }

    fn hermitian_gram(&self) -> CMat {
        let d = self.realized.algebra.dim();
        let s = c(self.normalization());
        let mut g = CMat::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                g[(i, j)] =
                    (self.realized.basis_mat(i).adjoint() * self.realized.basis_mat(j)).trace() * s;
            }
        }
        g
    }

    /// Largest |omega(b_i)| over nonzero-weight basis elements.
    pub fn torus_invariance_defect(&self, w: &TorusWeighting) -> Result<f64, Error> {
        if !self.realized.algebra.same(w.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let mut worst: f64 = 0.0;
        for (i, &wi) in w.weights().iter().enumerate() {
            if wi != 0 {
                let v = self.realized.basis_mat(i).trace() * c(self.normalization());
                worst = worst.max(v.norm());
            }
        }
        Ok(worst)
    }
}

/// A Manin triple held concretely: the ambient double, bases of the two
/// isotropic halves in double coordinates, and the pairing matrix on the
/// double's basis.
#[derive(Debug, Clone)]
pub struct ManinTriple {
    pub double: LieAlgebra,
    pub p1: Vec<CVec>,
    pub p2: Vec<CVec>,
    pub pairing: CMat,
    /// Fourier mode carried by each p1/p2 basis vector together with the
    /// truncation bound, when the double is a mode truncation. Closure is
    /// then checked only on products landing inside the truncation.
    pub p1_modes: Option<Vec<i64>>,
    pub p2_modes: Option<Vec<i64>>,
    pub mode_bound: Option<i64>,
}

impl ManinTriple {
    pub fn pair(&self, x: &CVec, y: &CVec) -> C64 {
        (x.transpose() * &self.pairing * y)[(0, 0)]
    }
}

#[derive(Debug, Clone)]
pub struct ManinReport {
    /// Out-of-span component of brackets of p1 (resp. p2) basis pairs.
    pub closure_residual: f64,
    /// Largest pairing value inside p1 and inside p2.
    pub isotropy_residual: f64,
    /// Largest `<<[u,a],x>> + <<a,[u,x]>>` over double basis triples.
    pub invariance_residual: f64,
    /// Worst defect of re-expressing a double basis vector in the
    /// (p1|p2) basis, certifying the direct-sum decomposition.
    pub reconstruction_residual: f64,
    /// Smallest singular value of the pairing Gram in the (p1|p2) basis.
    pub gram_sigma_min: f64,
    /// Condition number of the (p1|p2) change-of-basis matrix.
    pub basis_cond: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Construct the double `g (+) g` with componentwise bracket, diagonal p1,
/// constrained p2, and pairing `<<(a,a'),(x,y)>> = B(a,x) - B(a',y)` from a
/// symmetric base pairing B.
pub fn build_double_manin(w: &TorusWeighting, base_pairing: &CMat) -> Result<ManinTriple, Error> {
    let g = w.algebra();
    let d = g.dim();
    if base_pairing.nrows() != d || base_pairing.ncols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: base_pairing.nrows(),
        });
    }
    if max_abs(&(base_pairing - base_pairing.transpose())) > 1e-13 {
        return Err(Error::Invalid("base pairing is not symmetric".into()));
    }
    let wrep = w.check(1e-12);
    if wrep.zero_mode_residual > 1e-12 {
        return Err(Error::ZeroModeNotAbelian {
            residual: wrep.zero_mode_residual,
        });
    }

    let double = g.direct_sum(g)?;
    let dd = 2 * d;
    let mut pairing = CMat::zeros(dd, dd);
    pairing.view_mut((0, 0), (d, d)).copy_from(base_pairing);
    pairing
        .view_mut((d, d), (d, d))
        .copy_from(&base_pairing.map(|z| -z));
    let double = double.with_form(pairing.clone())?;

    let mut p1 = Vec::with_capacity(d);
    let mut p1_modes = Vec::with_capacity(d);
    for i in 0..d {
        let mut v = CVec::zeros(dd);
        v[i] = c(1.0);
        v[d + i] = c(1.0);
        p1.push(v);
        p1_modes.push(w.weights()[i]);
    }

    let mut p2 = Vec::new();
    let mut p2_modes = Vec::new();
    for i in 0..d {
        match w.weights()[i].cmp(&0) {
            std::cmp::Ordering::Greater => {
                let mut v = CVec::zeros(dd);
                v[i] = c(1.0);
                p2.push(v);
                p2_modes.push(w.weights()[i]);
            }
            std::cmp::Ordering::Less => {
                let mut v = CVec::zeros(dd);
                v[d + i] = c(1.0);
                p2.push(v);
                p2_modes.push(w.weights()[i]);
            }
            std::cmp::Ordering::Equal => {
                let mut v = CVec::zeros(dd);
                v[i] = c(1.0);
                v[d + i] = c(-1.0);
                p2.push(v);
                p2_modes.push(0);
            }
        }
    }

    Ok(ManinTriple {
        double,
        p1,
        p2,
        pairing,
        p1_modes: Some(p1_modes),
        p2_modes: Some(p2_modes),
        mode_bound: None,
    })
}

/// Convenience wrapper taking the pairing from a trace state. The state
/// must be torus-invariant for the weighting (the trace vanishes on
/// nonzero-weight basis elements).
pub fn build_double_manin_traced(
    w: &TorusWeighting,
    state: &TraceState,
) -> Result<ManinTriple, Error> {
    if !state.realized().algebra.same(w.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let defect = state.torus_invariance_defect(w)?;
    if defect > 1e-12 {
        return Err(Error::Invalid(format!(
            "state is not torus-invariant (defect {defect:.3e})"
        )));
    }
    build_double_manin(w, &state.pairing_matrix())
}

fn bracket_vec(alg: &LieAlgebra, x: &CVec, y: &CVec) -> CVec {
    let ex = alg.element(x.clone()).expect("dims");
    let ey = alg.element(y.clone()).expect("dims");
    alg.bracket(&ex, &ey).expect("same algebra").into_coords()
}

/// Verify the four Manin-triple axioms, reporting residuals.
pub fn verify_manin(t: &ManinTriple, tol: f64) -> ManinReport {
    let dd = t.double.dim();

    let in_range = |ma: Option<&Vec<i64>>, a: usize, mb: Option<&Vec<i64>>, b: usize| -> bool {
        match (ma, mb, t.mode_bound) {
            (Some(xa), Some(xb), Some(n)) => (xa[a] + xb[b]).abs() <= n,
            _ => true,
        }
    };

    // (1) Subalgebra closure: residual of the bracket against the span.
    let mut closure: f64 = 0.0;
    for (basis, modes) in [(&t.p1, &t.p1_modes), (&t.p2, &t.p2_modes)] {
        for a in 0..basis.len() {
            for b in (a + 1)..basis.len() {
                if !in_range(modes.as_ref(), a, modes.as_ref(), b) {
                    continue;
                }
                let br = bracket_vec(&t.double, &basis[a], &basis[b]);
                if norm2(&br) == 0.0 {
                    continue;
                }
                let (_, resid) =
                    crate::linalg::project_onto_span(basis, &br).expect("span projection");
                closure = closure.max(resid);
            }
        }
    }

    // (2) Isotropy of each half.
    let mut isotropy: f64 = 0.0;
    for basis in [&t.p1, &t.p2] {
        for a in basis {
            for b in basis {
                isotropy = isotropy.max(t.pair(a, b).norm());
            }
        }
    }

    // (3) Ad-invariance of the pairing on double basis triples, using
    // precomputed bracket slices.
    let mut invariance: f64 = 0.0;
    for u in 0..dd {
        for a in 0..dd {
            // row vector: coordinates of [b_u, b_a]
            for x in 0..dd {
                let mut s = C64::default();
                for k in 0..dd {
                    let cua = t.double.c(u, a, k);
                    if cua != C64::default() {
                        s += cua * t.pairing[(k, x)];
                    }
                    let cux = t.double.c(u, x, k);
                    if cux != C64::default() {
                        s += cux * t.pairing[(a, k)];
                    }
                }
                invariance = invariance.max(s.norm());
            }
        }
    }

    // (4) Direct sum and weak nondegeneracy.
    let k1 = t.p1.len();
    let k2 = t.p2.len();
    let mut basis_mat = CMat::zeros(dd, k1 + k2);
    for (j, v) in t.p1.iter().chain(t.p2.iter()).enumerate() {
        basis_mat.set_column(j, v);
    }
    let (basis_cond, reconstruction) = if k1 + k2 == dd {
        let cond = cond2(&basis_mat);
        let recon = match crate::linalg::inverse(&basis_mat) {
            Ok(inv) => {
                // worst defect of decomposing a unit vector through the basis
                let defect = &basis_mat * inv - CMat::identity(dd, dd);
                max_abs(&defect)
            }
            Err(_) => f64::INFINITY,
        };
        (cond, recon)
    } else {
        (f64::INFINITY, f64::INFINITY)
    };
    let mut gram = CMat::zeros(k1 + k2, k1 + k2);
    for a in 0..k1 + k2 {
        for b in 0..k1 + k2 {
            let va = basis_mat.column(a).into_owned();
            let vb = basis_mat.column(b).into_owned();
            gram[(a, b)] = t.pair(&va, &vb);
        }
    }
    let gram_sigma_min = sigma_min(&gram);

    ManinReport {
        closure_residual: closure,
        isotropy_residual: isotropy,
        invariance_residual: invariance,
        reconstruction_residual: reconstruction,
        gram_sigma_min,
        basis_cond,
        tol,
        pass: closure <= tol
            && isotropy <= tol
            && invariance <= tol
            && reconstruction <= tol
            && gram_sigma_min > tol
            && basis_cond.is_finite(),
    }
}
