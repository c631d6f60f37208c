//! Finite-dimensional Lie algebras as dense structure-constant tensors.
//!
//! The tensor convention is `[b_i, b_j] = Σ_k c[i][j][k] b_k`. Antisymmetry
//! in (i, j) is enforced at construction; the Jacobi identity is a check
//! that reports a residual, because several downstream constructions
//! (mode-truncated loop algebras) deliberately carry a quarantined Jacobi
//! defect.

use std::sync::Arc;

use crate::linalg::{max_abs, max_abs_vec, norm2};
use crate::{c, CMat, CVec, Error, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

#[derive(Debug)]
struct AlgebraData {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    /// Dense rank-3 tensor, index (i * dim + j) * dim + k.
    structure: Vec<C64>,
    /// Optional invariant symmetric bilinear form on the basis.
    form: Option<CMat>,
}

/// Handle to an immutable Lie algebra. Identity is by reference: two
/// algebras with equal tensors are still distinct objects, and elements
/// cannot be mixed across handles.
#[derive(Debug, Clone)]
pub struct LieAlgebra(Arc<AlgebraData>);

impl LieAlgebra {
    /// Build from a list of nonzero entries `(i, j, k, value)` with `i < j`;
    /// the antisymmetric completion `c[j][i][k] = -c[i][j][k]` is implied.
    pub fn from_entries(
        field: Field,
        labels: Vec<String>,
        entries: &[(usize, usize, usize, C64)],
        form: Option<CMat>,
    ) -> Result<Self, Error> {
        let dim = labels.len();
        let mut structure = vec![C64::default(); dim * dim * dim];
        for &(i, j, k, v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: i.max(j).max(k) + 1,
                });
            }
            if i == j {
                return Err(Error::NotAntisymmetric { i, j, k });
            }
            structure[(i * dim + j) * dim + k] += v;
            structure[(j * dim + i) * dim + k] -= v;
        }
        Self::from_dense(field, labels, structure, form)
    }

    /// Build from an already dense tensor; antisymmetry is verified exactly.
    pub fn from_dense(
        field: Field,
        labels: Vec<String>,
        structure: Vec<C64>,
        form: Option<CMat>,
    ) -> Result<Self, Error> {
        let dim = labels.len();
        if structure.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: structure.len(),
            });
        }
        for z in &structure {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite("structure tensor"));
            }
        }
        if field == Field::Real && structure.iter().any(|z| z.im != 0.0) {
            return Err(Error::FieldMismatch);
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let a = structure[(i * dim + j) * dim + k];
                    let b = structure[(j * dim + i) * dim + k];
                    if a + b != C64::default() {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        if let Some(f) = &form {
            if f.nrows() != dim || f.ncols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: f.nrows(),
                });
            }
        }
        Ok(Self(Arc::new(AlgebraData {
            field,
            dim,
            labels,
            structure,
            form,
        })))
    }

    pub fn abelian(field: Field, labels: Vec<String>) -> Self {
        let dim = labels.len();
        Self(Arc::new(AlgebraData {
            field,
            dim,
            labels,
            structure: vec![C64::default(); dim * dim * dim],
            form: None,
        }))
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn form(&self) -> Option<&CMat> {
        self.0.form.as_ref()
    }

    /// Replace the stored bilinear form, returning a new handle that shares
    /// nothing with `self` (elements of the old handle do not transfer).
    pub fn with_form(&self, form: CMat) -> Result<Self, Error> {
        Self::from_dense(
            self.0.field,
            self.0.labels.clone(),
            self.0.structure.clone(),
            Some(form),
        )
    }

    pub fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Structure constant c_{ij}^k.
    pub fn c(&self, i: usize, j: usize, k: usize) -> C64 {
        self.0.structure[(i * self.0.dim + j) * self.0.dim + k]
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coords: CVec::zeros(self.0.dim),
        }
    }

    pub fn basis(&self, i: usize) -> AlgebraElement {
        let mut coords = CVec::zeros(self.0.dim);
        coords[i] = c(1.0);
        AlgebraElement {
            algebra: self.clone(),
            coords,
        }
    }

    pub fn element(&self, coords: CVec) -> Result<AlgebraElement, Error> {
        if coords.len() != self.0.dim {
            return Err(Error::DimensionMismatch {
                expected: self.0.dim,
                got: coords.len(),
            });
        }
        if coords.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("element coordinates"));
        }
        Ok(AlgebraElement {
            algebra: self.clone(),
            coords,
        })
    }

    pub fn element_from(&self, coords: &[C64]) -> Result<AlgebraElement, Error> {
        self.element(CVec::from_column_slice(coords))
    }

    /// Lie bracket of two elements of this algebra.
    pub fn bracket(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, Error> {
        if !self.same(&x.algebra) || !self.same(&y.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let d = self.0.dim;
        let mut out = CVec::zeros(d);
        for i in 0..d {
            let xi = x.coords[i];
            if xi == C64::default() {
                continue;
            }
            for j in 0..d {
                let yj = y.coords[j];
                if yj == C64::default() {
                    continue;
                }
                let f = xi * yj;
                for k in 0..d {
                    let cijk = self.c(i, j, k);
                    if cijk != C64::default() {
                        out[k] += f * cijk;
                    }
                }
            }
        }
        Ok(AlgebraElement {
            algebra: self.clone(),
            coords: out,
        })
    }

    /// Adjoint matrix: column j holds the coordinates of [x, b_j].
    pub fn ad(&self, x: &AlgebraElement) -> Result<CMat, Error> {
        if !self.same(&x.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let d = self.0.dim;
        let mut m = CMat::zeros(d, d);
        for j in 0..d {
            for i in 0..d {
                let xi = x.coords[i];
                if xi == C64::default() {
                    continue;
                }
                for k in 0..d {
                    m[(k, j)] += xi * self.c(i, j, k);
                }
            }
        }
        Ok(m)
    }

    /// Coadjoint matrix with the convention `ad*_x f(y) = f([x, y])`,
    /// i.e. exactly the transpose of `ad(x)` with no extra sign.
    pub fn coad(&self, x: &AlgebraElement) -> Result<CMat, Error> {
        Ok(self.ad(x)?.transpose())
    }

    /// Killing form K(x, y) = trace(ad x · ad y) on the basis.
    pub fn killing_form(&self) -> CMat {
        let d = self.0.dim;
        let ads: Vec<CMat> = (0..d)
            .map(|i| self.ad(&self.basis(i)).expect("basis element"))
            .collect();
        let mut k = CMat::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let v = (&ads[i] * &ads[j]).trace();
                k[(i, j)] = v;
                k[(j, i)] = v;
            }
        }
        k
    }

    /// Maximum Jacobiator coordinate over all basis triples.
    pub fn check_jacobi(&self, tol: f64) -> JacobiReport {
        let d = self.0.dim;
        let mut max_residual: f64 = 0.0;
        let mut worst = (0, 0, 0);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for m in 0..d {
                        let mut s = C64::default();
                        for l in 0..d {
                            s += self.c(i, j, l) * self.c(l, k, m)
                                + self.c(j, k, l) * self.c(l, i, m)
                                + self.c(k, i, l) * self.c(l, j, m);
                        }
                        if s.norm() > max_residual {
                            max_residual = s.norm();
                            worst = (i, j, k);
                        }
                    }
                }
            }
        }
        JacobiReport {
            max_residual,
            worst_triple: worst,
            tol,
            pass: max_residual <= tol,
        }
    }

    /// Residual of form invariance `⟨[x,y],z⟩ + ⟨y,[x,z]⟩ = 0` over basis
    /// triples; `Ok(None)` when no form is stored.
    pub fn check_form_invariance(&self) -> Option<f64> {
        let f = self.0.form.as_ref()?;
        let d = self.0.dim;
        let mut max_residual: f64 = 0.0;
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let mut s = C64::default();
                    for k in 0..d {
                        s += self.c(x, y, k) * f[(k, z)] + self.c(x, z, k) * f[(y, k)];
                    }
                    max_residual = max_residual.max(s.norm());
                }
            }
        }
        Some(max_residual)
    }

    /// Direct sum with componentwise bracket and block form.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, Error> {
        if self.0.field != other.0.field {
            return Err(Error::FieldMismatch);
        }
        let d1 = self.0.dim;
        let d2 = other.0.dim;
        let d = d1 + d2;
        let mut labels = Vec::with_capacity(d);
        for l in &self.0.labels {
            labels.push(format!("{l}.1"));
        }
        for l in &other.0.labels {
            labels.push(format!("{l}.2"));
        }
        let mut structure = vec![C64::default(); d * d * d];
        for i in 0..d1 {
            for j in 0..d1 {
                for k in 0..d1 {
                    structure[(i * d + j) * d + k] = self.c(i, j, k);
                }
            }
        }
        for i in 0..d2 {
            for j in 0..d2 {
                for k in 0..d2 {
                    structure[((d1 + i) * d + (d1 + j)) * d + (d1 + k)] = other.c(i, j, k);
                }
            }
        }
        let form = match (&self.0.form, &other.0.form) {
            (Some(f1), Some(f2)) => {
                let mut f = CMat::zeros(d, d);
                f.view_mut((0, 0), (d1, d1)).copy_from(f1);
                f.view_mut((d1, d1), (d2, d2)).copy_from(f2);
                Some(f)
            }
            _ => None,
        };
        Self::from_dense(self.0.field, labels, structure, form)
    }
}

/// Report from [`LieAlgebra::check_jacobi`].
#[derive(Debug, Clone)]
pub struct JacobiReport {
    pub max_residual: f64,
    pub worst_triple: (usize, usize, usize),
    pub tol: f64,
    pub pass: bool,
}

/// An element of a specific [`LieAlgebra`], held as a coordinate vector.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    algebra: LieAlgebra,
    coords: CVec,
}

impl AlgebraElement {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn coords(&self) -> &CVec {
        &self.coords
    }

    pub fn into_coords(self) -> CVec {
        self.coords
    }

    pub fn norm(&self) -> f64 {
        norm2(&self.coords)
    }

    pub fn max_abs(&self) -> f64 {
        max_abs_vec(&self.coords)
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if !self.algebra.same(&other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Self {
            algebra: self.algebra.clone(),
            coords: &self.coords + &other.coords,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        if !self.algebra.same(&other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Self {
            algebra: self.algebra.clone(),
            coords: &self.coords - &other.coords,
        })
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            algebra: self.algebra.clone(),
            coords: self.coords.map(|z| z * s),
        }
    }
}

/// A Lie algebra together with a faithful matrix realization of its basis.
#[derive(Debug, Clone)]
pub struct Realized {
    pub algebra: LieAlgebra,
    mats: Vec<CMat>,
    n: usize,
}

impl Realized {
    /// Checks that the realization commutators reproduce the structure
    /// constants within `tol`.
    pub fn new(algebra: LieAlgebra, mats: Vec<CMat>, tol: f64) -> Result<Self, Error> {
        let d = algebra.dim();
        if mats.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: mats.len(),
            });
        }
        let n = mats[0].nrows();
        for m in &mats {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: m.nrows(),
                });
            }
        }
        let real = Self { algebra, mats, n };
        let resid = real.commutator_defect();
        if resid > tol {
            return Err(Error::Invalid(format!(
                "realization does not match structure constants (residual {resid:.3e})"
            )));
        }
        Ok(real)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis_mat(&self, i: usize) -> &CMat {
        &self.mats[i]
    }

    /// Max deviation between matrix commutators and tensor brackets.
    pub fn commutator_defect(&self) -> f64 {
        let d = self.algebra.dim();
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let mut m = &self.mats[i] * &self.mats[j] - &self.mats[j] * &self.mats[i];
                for k in 0..d {
                    let cijk = self.algebra.c(i, j, k);
                    if cijk != C64::default() {
                        m -= self.mats[k].map(|z| z * cijk);
                    }
                }
                worst = worst.max(max_abs(&m));
            }
        }
        worst
    }

    pub fn realize(&self, x: &AlgebraElement) -> Result<CMat, Error> {
        if !self.algebra.same(x.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.realize_coords(x.coords()))
    }

    /// Realize a raw coordinate vector without an algebra-identity check;
    /// used where structurally compatible algebras share a basis.
    pub fn realize_coords(&self, coords: &CVec) -> CMat {
        let mut m = CMat::zeros(self.n, self.n);
        for (i, b) in self.mats.iter().enumerate() {
            let xi = coords[i];
            if xi != C64::default() {
                m += b.map(|z| z * xi);
            }
        }
        m
    }

    /// Coordinates of a matrix in the realized basis; errors when the matrix
    /// leaves the realized span by more than `tol`.
    pub fn coords_of(&self, m: &CMat, tol: f64) -> Result<CVec, Error> {
        let cols: Vec<CVec> = self
            .mats
            .iter()
            .map(|b| CVec::from_iterator(self.n * self.n, b.iter().cloned()))
            .collect();
        let target = CVec::from_iterator(self.n * self.n, m.iter().cloned());
        let (coords, resid) = crate::linalg::project_onto_span(&cols, &target)?;
        if resid > tol * (1.0 + crate::linalg::frobenius(m)) {
            return Err(Error::SpanEscape { residual: resid });
        }
        Ok(coords)
    }
}
