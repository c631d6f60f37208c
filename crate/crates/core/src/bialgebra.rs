//! Lie bialgebra data (g, b, delta) in finite dimensions.
//!
//! delta is stored as a rank-3 tensor d[i][a][b], antisymmetric in (a, b),
//! with the evaluation convention
//!   delta(X)(alpha, beta) = sum d[i][a][b] X^i alpha_a beta_b
//! over all (a, b) and no 1/2 factor. The basis of b is kept dual to the
//! basis of g through the ambient pairing, which makes d literally the
//! structure tensor of b.

use crate::algebra::{Field, JacobiReport, LieAlgebra};
use crate::linalg::{cond2, inverse, max_abs, project_onto_span};
use crate::weights::{ManinTriple, verify_manin, ManinReport};
use crate::{c, CMat, CVec, Error, C64};

#[derive(Debug, Clone)]
pub struct Bialgebra {
    g: LieAlgebra,
    b: LieAlgebra,
    /// Dense d[i][a][b], index (i * dim + a) * dim + b.
    delta: Vec<C64>,
    /// Condition number of the cross-pairing Gram block used to identify b
    /// with the dual of g (1 when constructed directly from a tensor).
    pub cross_gram_cond: f64,
    /// Double coordinates of the chosen g and b bases, when this bialgebra
    /// was extracted from a Manin triple.
    pub p1_embed: Option<Vec<CVec>>,
    pub p2_embed: Option<Vec<CVec>>,
}

#[derive(Debug, Clone)]
pub struct CocycleReport {
    pub max_residual: f64,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct MorphismReport {
    pub hom_residual: f64,
    /// None when the homomorphism pre-check already failed.
    pub compat_residual: Option<f64>,
    pub tol: f64,
    pub pass: bool,
}

impl Bialgebra {
    /// Build from an algebra and a delta tensor given as entries
    /// `(i, a, b, value)` with `a < b`; antisymmetric completion implied.
    pub fn new(
        g: LieAlgebra,
        entries: &[(usize, usize, usize, C64)],
    ) -> Result<Self, Error> {
        let d = g.dim();
        let mut delta = vec![C64::default(); d * d * d];
        for &(i, a, b, v) in entries {
            if i >= d || a >= d || b >= d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: i.max(a).max(b) + 1,
                });
            }
            if a == b {
                return Err(Error::NotAntisymmetric { i, j: a, k: b });
            }
            delta[(i * d + a) * d + b] += v;
            delta[(i * d + b) * d + a] -= v;
        }
        Self::from_dense_delta(g, delta)
    }

    pub fn from_dense_delta(g: LieAlgebra, delta: Vec<C64>) -> Result<Self, Error> {
        let d = g.dim();
        if delta.len() != d * d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d * d,
                got: delta.len(),
            });
        }
        for i in 0..d {
            for a in 0..d {
                for b in 0..d {
                    let x = delta[(i * d + a) * d + b];
                    let y = delta[(i * d + b) * d + a];
                    if x + y != C64::default() {
                        return Err(Error::NotAntisymmetric { i, j: a, k: b });
                    }
                }
            }
        }
        let b_alg = dual_algebra_from_delta(&g, &delta)?;
        Ok(Self {
            g,
            b: b_alg,
            delta,
            cross_gram_cond: 1.0,
            p1_embed: None,
            p2_embed: None,
        })
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn b(&self) -> &LieAlgebra {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn delta_entry(&self, i: usize, a: usize, b: usize) -> C64 {
        let d = self.g.dim();
        self.delta[(i * d + a) * d + b]
    }

    /// delta(b_i) as an antisymmetric matrix on the dual basis.
    pub fn delta_mat(&self, i: usize) -> CMat {
        let d = self.g.dim();
        let mut m = CMat::zeros(d, d);
        for a in 0..d {
            for b in 0..d {
                m[(a, b)] = self.delta_entry(i, a, b);
            }
        }
        m
    }

    /// Nonzero delta entries as (i, a, b, value) including both (a, b)
    /// orientations.
    pub fn delta_nonzeros(&self) -> Vec<(usize, usize, usize, C64)> {
        let d = self.g.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for a in 0..d {
                for b in 0..d {
                    let v = self.delta[(i * d + a) * d + b];
                    if v != C64::default() {
                        out.push((i, a, b, v));
                    }
                }
            }
        }
        out
    }

    /// delta(X) for arbitrary coordinates.
    pub fn delta_of(&self, x: &CVec) -> CMat {
        let d = self.g.dim();
        let mut m = CMat::zeros(d, d);
        for i in 0..d {
            if x[i] != C64::default() {
                m += self.delta_mat(i).map(|z| z * x[i]);
            }
        }
        m
    }

    /// Return a copy with an antisymmetric perturbation added at
    /// d[i][a][b] (and the implied -eps at d[i][b][a]).
    pub fn perturbed(&self, i: usize, a: usize, b: usize, eps: C64) -> Result<Self, Error> {
        let d = self.g.dim();
        let mut delta = self.delta.clone();
        delta[(i * d + a) * d + b] += eps;
        delta[(i * d + b) * d + a] -= eps;
        Self::from_dense_delta(self.g.clone(), delta)
    }

    /// Residual of the 1-cocycle identity
    /// `delta([X,Y]) = ad2_X delta(Y) - ad2_Y delta(X)`
    /// over all basis pairs, where ad2_X H = ad(X) H + H ad(X)^T uses the
    /// coadjoint convention ad*_X f(Y) = f([X,Y]).
    pub fn check_cocycle(&self, tol: f64) -> CocycleReport {
        let d = self.g.dim();
        let ads: Vec<CMat> = (0..d)
            .map(|i| self.g.ad(&self.g.basis(i)).expect("basis"))
            .collect();
        let deltas: Vec<CMat> = (0..d).map(|i| self.delta_mat(i)).collect();
        let mut max_residual: f64 = 0.0;
        for i in 0..d {
            for j in (i + 1)..d {
                let mut lhs = CMat::zeros(d, d);
                for (k, dk) in deltas.iter().enumerate() {
                    let cijk = self.g.c(i, j, k);
                    if cijk != C64::default() {
                        lhs += dk.map(|z| z * cijk);
                    }
                }
                let ad2_i = &ads[i] * &deltas[j] + &deltas[j] * ads[i].transpose();
                let ad2_j = &ads[j] * &deltas[i] + &deltas[i] * ads[j].transpose();
                let resid = lhs - ad2_i + ad2_j;
                max_residual = max_residual.max(max_abs(&resid));
            }
        }
        CocycleReport {
            max_residual,
            tol,
            pass: max_residual <= tol,
        }
    }

    /// The dual-side algebra extracted from delta, with its Jacobi report.
    /// Co-Jacobi failure is reported, not an error.
    pub fn dual_bracket(&self, tol: f64) -> (LieAlgebra, JacobiReport) {
        let rep = self.b.check_jacobi(tol);
        (self.b.clone(), rep)
    }

    /// Extract the bialgebra carried by a Manin triple: g = p1 with its
    /// induced bracket, b = the pairing-dual basis inside span(p2), and
    /// delta(X)(alpha, beta) = <<X, [alpha, beta]>>.
    pub fn from_manin(t: &ManinTriple, tol: f64) -> Result<Self, Error> {
        let n = t.p1.len();
        if t.p2.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: t.p2.len(),
            });
        }

        // Cross Gram W_ia = <<p1_i, p2_a>>; refuse if degenerate.
        let mut w = CMat::zeros(n, n);
        for i in 0..n {
            for a in 0..n {
                w[(i, a)] = t.pair(&t.p1[i], &t.p2[a]);
            }
        }
        let cross_cond = cond2(&w);
        if !cross_cond.is_finite() || cross_cond > 1e12 {
            return Err(Error::Degenerate(format!(
                "cross pairing block condition {cross_cond:.3e}"
            )));
        }
        let w_inv_t = inverse(&w.transpose())?;

        // Dual-normalized b basis: eps^a = sum_b (W^-T)_{ab} p2_b.
        let dd = t.double.dim();
        let mut eps: Vec<CVec> = Vec::with_capacity(n);
        for a in 0..n {
            let mut v = CVec::zeros(dd);
            for b in 0..n {
                let coeff = w_inv_t[(a, b)];
                if coeff != C64::default() {
                    v += t.p2[b].map(|z| z * coeff);
                }
            }
            eps.push(v);
        }

        // Induced structure constants on p1 and on the eps basis.
        let g_struct = induced_structure(&t.double, &t.p1, tol)?;
        let b_struct = induced_structure(&t.double, &eps, tol)?;

        let g_labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let b_labels: Vec<String> = (0..n).map(|a| format!("b{a}")).collect();
        let field = t.double.field();
        let g = LieAlgebra::from_dense(field_or_complex(field, &g_struct), g_labels, g_struct, None)?;
        let b = LieAlgebra::from_dense(field_or_complex(field, &b_struct), b_labels, b_struct.clone(), None)?;

        // delta by evaluation through the pairing; duality with the b
        // structure constants is exact by construction, asserted here.
        let mut delta = vec![C64::default(); n * n * n];
        for a in 0..n {
            for bb in 0..n {
                let br = bracket_vec(&t.double, &eps[a], &eps[bb]);
                for i in 0..n {
                    let val = t.pair(&t.p1[i], &br);
                    delta[(i * n + a) * n + bb] = val;
                    let f_abi = b_struct[(a * n + bb) * n + i];
                    if (val - f_abi).norm() > tol.max(1e-12) * 10.0 {
                        return Err(Error::Invalid(format!(
                            "pairing/duality mismatch at ({i},{a},{bb}): {:.3e}",
                            (val - f_abi).norm()
                        )));
                    }
                }
            }
        }
        // Exact antisymmetrization: the two routes agree within tol; store
        // the skew part so the tensor invariant holds bit-exactly.
        for i in 0..n {
            for a in 0..n {
                for bb in 0..a {
                    let x = delta[(i * n + a) * n + bb];
                    let y = delta[(i * n + bb) * n + a];
                    let skew = (x - y) * c(0.5);
                    delta[(i * n + a) * n + bb] = skew;
                    delta[(i * n + bb) * n + a] = -skew;
                }
                delta[(i * n + a) * n + a] = C64::default();
            }
        }

        Ok(Self {
            g,
            b,
            delta,
            cross_gram_cond: cross_cond,
            p1_embed: Some(t.p1.clone()),
            p2_embed: Some(eps),
        })
    }

    /// Assemble the double d = g (+) b with the bracket
    ///   [(x,a),(y,b)] = ([x,y] + ad*_b x - ad*_a y,
    ///                    [a,b] + ad*_y a - ad*_x b)
    /// and the pairing <(x,a),(y,b)> = <x,b> + <y,a>. The Jacobi report of
    /// the double is returned alongside: its success is exactly the
    /// bialgebra condition.
    pub fn to_manin(&self, tol: f64) -> Result<(ManinTriple, JacobiReport, ManinReport), Error> {
        let n = self.g.dim();
        let dd = 2 * n;
        let mut structure = vec![C64::default(); dd * dd * dd];
        let idx = |i: usize, j: usize, k: usize| (i * dd + j) * dd + k;

        // [e_i, e_j] = c_ij^k e_k
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    structure[idx(i, j, k)] = self.g.c(i, j, k);
                }
            }
        }
        // [phi^a, phi^b] = f^{ab}_c phi^c with f^{ab}_c = d[c][a][b]
        for a in 0..n {
            for b in 0..n {
                for k in 0..n {
                    structure[idx(n + a, n + b, n + k)] = self.delta_entry(k, a, b);
                }
            }
        }
        // [e_i, phi^a] = sum_c d[i][a][c] e_c - sum_k c_ik^a phi^k
        for i in 0..n {
            for a in 0..n {
                for cc in 0..n {
                    let v = self.delta_entry(i, a, cc);
                    structure[idx(i, n + a, cc)] += v;
                    structure[idx(n + a, i, cc)] -= v;
                }
                for k in 0..n {
                    let v = self.g.c(i, k, a);
                    structure[idx(i, n + a, n + k)] -= v;
                    structure[idx(n + a, i, n + k)] += v;
                }
            }
        }

        let labels: Vec<String> = (0..n)
            .map(|i| format!("g{i}"))
            .chain((0..n).map(|a| format!("b{a}")))
            .collect();
        let mut pairing = CMat::zeros(dd, dd);
        for i in 0..n {
            pairing[(i, n + i)] = c(1.0);
            pairing[(n + i, i)] = c(1.0);
        }
        let field = field_or_complex(self.g.field(), &structure);
        let double =
            LieAlgebra::from_dense(field, labels, structure, Some(pairing.clone()))?;
        let jacobi = double.check_jacobi(tol);

        let mut p1 = Vec::with_capacity(n);
        let mut p2 = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = CVec::zeros(dd);
            v[i] = c(1.0);
            p1.push(v);
            let mut u = CVec::zeros(dd);
            u[n + i] = c(1.0);
            p2.push(u);
        }
        let triple = ManinTriple {
            double,
            p1,
            p2,
            pairing,
            p1_modes: None,
            p2_modes: None,
            mode_bound: None,
        };
        let manin = verify_manin(&triple, tol);
        Ok((triple, jacobi, manin))
    }

    /// Compatibility of a candidate morphism phi: g1 -> g2 (dim2 x dim1):
    /// first the homomorphism residual, then
    /// `delta2(phi X)(alpha, beta) - delta1(X)(phi^T alpha, phi^T beta)`.
    pub fn morphism_check(
        src: &Bialgebra,
        dst: &Bialgebra,
        phi: &CMat,
        tol: f64,
    ) -> Result<MorphismReport, Error> {
        let d1 = src.dim();
        let d2 = dst.dim();
        if phi.nrows() != d2 || phi.ncols() != d1 {
            return Err(Error::DimensionMismatch {
                expected: d2,
                got: phi.nrows(),
            });
        }
        // phi[b_i, b_j]_1 - [phi b_i, phi b_j]_2 on basis pairs.
        let mut hom: f64 = 0.0;
        for i in 0..d1 {
            for j in 0..d1 {
                let mut br1 = CVec::zeros(d1);
                for k in 0..d1 {
                    br1[k] = src.g.c(i, j, k);
                }
                let lhs = phi * &br1;
                let xi = phi.column(i).into_owned();
                let xj = phi.column(j).into_owned();
                let rhs = bracket_coords(&dst.g, &xi, &xj);
                hom = hom.max(crate::linalg::max_abs_vec(&(lhs - rhs)));
            }
        }
        if hom > tol {
            return Ok(MorphismReport {
                hom_residual: hom,
                compat_residual: None,
                tol,
                pass: false,
            });
        }
        // delta1(X)(phi^T alpha, phi^T beta) reads as phi D1(X) phi^T when
        // forms are stored as matrices on the dual bases.
        let mut compat: f64 = 0.0;
        for i in 0..d1 {
            let lhs = dst.delta_of(&phi.column(i).into_owned());
            let rhs = phi * src.delta_mat(i) * phi.transpose();
            compat = compat.max(max_abs(&(lhs - rhs)));
        }
        Ok(MorphismReport {
            hom_residual: hom,
            compat_residual: Some(compat),
            tol,
            pass: compat <= tol,
        })
    }
}

/// The dual-side algebra determined by a delta tensor:
/// `[beta^a, beta^b]_b = sum_k d[k][a][b] beta^k`.
fn dual_algebra_from_delta(g: &LieAlgebra, delta: &[C64]) -> Result<LieAlgebra, Error> {
    let d = g.dim();
    let mut structure = vec![C64::default(); d * d * d];
    for a in 0..d {
        for b in 0..d {
            for k in 0..d {
                structure[(a * d + b) * d + k] = delta[(k * d + a) * d + b];
            }
        }
    }
    let labels: Vec<String> = (0..d).map(|a| format!("b{a}")).collect();
    LieAlgebra::from_dense(field_or_complex(g.field(), &structure), labels, structure, None)
}

fn field_or_complex(f: Field, tensor: &[C64]) -> Field {
    if f == Field::Real && tensor.iter().all(|z| z.im == 0.0) {
        Field::Real
    } else {
        Field::Complex
    }
}

fn bracket_vec(alg: &LieAlgebra, x: &CVec, y: &CVec) -> CVec {
    let ex = alg.element(x.clone()).expect("dims");
    let ey = alg.element(y.clone()).expect("dims");
    alg.bracket(&ex, &ey).expect("same algebra").into_coords()
}

fn bracket_coords(alg: &LieAlgebra, x: &CVec, y: &CVec) -> CVec {
    bracket_vec(alg, x, y)
}

/// Structure constants of a subalgebra spanned by `basis` inside `ambient`,
/// failing when a bracket leaves the span by more than `tol`.
fn induced_structure(
    ambient: &LieAlgebra,
    basis: &[CVec],
    tol: f64,
) -> Result<Vec<C64>, Error> {
    let n = basis.len();
    let mut out = vec![C64::default(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let br = bracket_vec(ambient, &basis[i], &basis[j]);
            let (coords, resid) = project_onto_span(basis, &br)?;
            let scale = 1.0 + crate::linalg::norm2(&br);
            if resid > tol * scale {
                return Err(Error::Invalid(format!(
                    "bracket leaves the subalgebra span (residual {resid:.3e})"
                )));
            }
            for k in 0..n {
                out[(i * n + j) * n + k] = coords[k];
            }
        }
    }
    // Exact antisymmetrization of the numerically solved coefficients.
    for i in 0..n {
        for j in 0..i {
            for k in 0..n {
                let x = out[(i * n + j) * n + k];
                let y = out[(j * n + i) * n + k];
                let skew = (x - y) * c(0.5);
                out[(i * n + j) * n + k] = skew;
                out[(j * n + i) * n + k] = -skew;
            }
        }
    }
    Ok(out)
}
