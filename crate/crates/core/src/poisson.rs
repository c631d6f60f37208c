//! Linear Poisson structures on the underlying space of g relative to the
//! dual bracket of a bialgebra, with polynomial observables, plus the
//! Schouten bracket on invariant multivectors.
//!
//! Observables are polynomials in the coordinates v_1..v_d; differentials
//! are computed symbolically, so the defining formula
//!   {f, h}(v) = <v, [df(v), dh(v)]_b>
//! is evaluated without any numerical differentiation. The axiom checks
//! sample seeded random observables and points.

use std::collections::BTreeMap;

use crate::algebra::LieAlgebra;
use crate::bialgebra::Bialgebra;
use crate::rng::SplitMix64;
use crate::{c, CVec, Error, C64};

/// Sparse polynomial in `dim` coordinates: exponent vector -> coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    dim: usize,
    terms: BTreeMap<Vec<u8>, C64>,
}

impl Poly {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, v: C64) -> Self {
        let mut p = Self::zero(dim);
        p.insert(vec![0; dim], v);
        p
    }

    /// The coordinate function v -> v_i.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        let mut e = vec![0u8; dim];
        e[i] = 1;
        let mut p = Self::zero(dim);
        p.insert(e, c(1.0));
        p
    }

    /// The linear observable v -> <v, alpha>.
    pub fn linear(alpha: &CVec) -> Self {
        let dim = alpha.len();
        let mut p = Self::zero(dim);
        for i in 0..dim {
            if alpha[i] != C64::default() {
                let mut e = vec![0u8; dim];
                e[i] = 1;
                p.insert(e, alpha[i]);
            }
        }
        p
    }

    fn insert(&mut self, exps: Vec<u8>, v: C64) {
        debug_assert_eq!(exps.len(), self.dim);
        if v == C64::default() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_default();
        *entry += v;
        if entry.norm() == 0.0 {
            self.terms.remove(&exps);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, v) in &other.terms {
            out.insert(e.clone(), *v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(c(-1.0)))
    }

    pub fn scale(&self, s: C64) -> Self {
        if s == C64::default() {
            return Self::zero(self.dim);
        }
        Self {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for (ea, va) in &self.terms {
            for (eb, vb) in &other.terms {
                let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(e, va * vb);
            }
        }
        out
    }

    /// Symbolic partial derivative with respect to coordinate i.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, v) in &self.terms {
            if e[i] > 0 {
                let mut d = e.clone();
                d[i] -= 1;
                out.insert(d, v * c(e[i] as f64));
            }
        }
        out
    }

    pub fn eval(&self, v: &CVec) -> C64 {
        let mut acc = C64::default();
        for (e, coeff) in &self.terms {
            let mut term = *coeff;
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    term *= v[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Gradient as a coordinate vector of a covector in the dual basis.
    pub fn gradient_at(&self, v: &CVec) -> CVec {
        CVec::from_iterator(self.dim, (0..self.dim).map(|i| self.partial(i).eval(v)))
    }

    /// Seeded random polynomial of total degree <= max_degree with
    /// coefficients in [-1, 1].
    pub fn random(dim: usize, max_degree: usize, rng: &mut SplitMix64) -> Self {
        let mut out = Self::zero(dim);
        let mut stack = vec![(vec![0u8; dim], 0usize, 0usize)];
        while let Some((exps, pos, total)) = stack.pop() {
            if pos == dim {
                out.insert(exps, c(rng.uniform(-1.0, 1.0)));
                continue;
            }
            for p in 0..=(max_degree - total) {
                let mut e = exps.clone();
                e[pos] = p as u8;
                stack.push((e, pos + 1, total + p));
            }
        }
        out
    }
}

/// `{f, h}(v) = sum d[i][a][b] v_i (∂_a f)(v) (∂_b h)(v)`, symbolically.
/// The result degree is at most deg f + deg h - 1.
pub fn lie_poisson_bracket(f: &Poly, h: &Poly, bi: &Bialgebra) -> Result<Poly, Error> {
    let d = bi.dim();
    if f.dim() != d || h.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: f.dim(),
        });
    }
    let df: Vec<Poly> = (0..d).map(|a| f.partial(a)).collect();
    let dh: Vec<Poly> = (0..d).map(|b| h.partial(b)).collect();
    let mut products: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
    let mut out = Poly::zero(d);
    for (i, a, b, coeff) in bi.delta_nonzeros() {
        if df[a].is_zero() || dh[b].is_zero() {
            continue;
        }
        let prod = products
            .entry((a, b))
            .or_insert_with(|| df[a].mul(&dh[b]))
            .clone();
        out = out.add(&prod.mul(&Poly::coordinate(d, i)).scale(coeff));
    }
    Ok(out)
}

/// Hamiltonian vector field of f: polynomial components
/// `X_f(v)^c = sum d[i][a][c] (∂_a f)(v) v_i`, the coadjoint action of the
/// differential applied to the point.
pub fn hamiltonian_field(f: &Poly, bi: &Bialgebra) -> Result<Vec<Poly>, Error> {
    let d = bi.dim();
    if f.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: f.dim(),
        });
    }
    let df: Vec<Poly> = (0..d).map(|a| f.partial(a)).collect();
    let mut comps = vec![Poly::zero(d); d];
    for (i, a, cc, coeff) in bi.delta_nonzeros() {
        if df[a].is_zero() {
            continue;
        }
        comps[cc] = comps[cc].add(&df[a].mul(&Poly::coordinate(d, i)).scale(coeff));
    }
    Ok(comps)
}

#[derive(Debug, Clone)]
pub struct PoissonAxiomReport {
    pub leibniz_max: f64,
    pub jacobi_max: f64,
    pub hamiltonian_max: f64,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    pub pass: bool,
}

/// Leibniz, Jacobi and Hamiltonian-field consistency over seeded random
/// polynomial triples evaluated at random points.
pub fn check_poisson_axioms(
    bi: &Bialgebra,
    max_degree: usize,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<PoissonAxiomReport, Error> {
    let d = bi.dim();
    let mut rng = SplitMix64::new(seed);
    let mut leibniz: f64 = 0.0;
    let mut jacobi: f64 = 0.0;
    let mut ham: f64 = 0.0;
    for _ in 0..trials {
        let f = Poly::random(d, max_degree, &mut rng);
        let g = Poly::random(d, max_degree, &mut rng);
        let h = Poly::random(d, max_degree, &mut rng);
        let v = CVec::from_iterator(d, (0..d).map(|_| c(rng.uniform(-1.0, 1.0))));

        let fg = lie_poisson_bracket(&f, &g, bi)?;
        let fh = lie_poisson_bracket(&f, &h, bi)?;
        let gh_prod = g.mul(&h);
        let lhs = lie_poisson_bracket(&f, &gh_prod, bi)?;
        let leib = lhs.eval(&v) - g.eval(&v) * fh.eval(&v) - fg.eval(&v) * h.eval(&v);
        leibniz = leibniz.max(leib.norm());

        let gh = lie_poisson_bracket(&g, &h, bi)?;
        let hf = lie_poisson_bracket(&h, &f, bi)?;
        let jac = lie_poisson_bracket(&f, &gh, bi)?.eval(&v)
            + lie_poisson_bracket(&g, &hf, bi)?.eval(&v)
            + lie_poisson_bracket(&h, &fg, bi)?.eval(&v);
        jacobi = jacobi.max(jac.norm());

        let xf = hamiltonian_field(&f, bi)?;
        let mut dh_xf = C64::default();
        for (cc, comp) in xf.iter().enumerate() {
            dh_xf += h.partial(cc).eval(&v) * comp.eval(&v);
        }
        ham = ham.max((fh.eval(&v) - dh_xf).norm());
    }
    Ok(PoissonAxiomReport {
        leibniz_max: leibniz,
        jacobi_max: jacobi,
        hamiltonian_max: ham,
        trials,
        seed,
        tol,
        pass: leibniz <= tol && jacobi <= tol && ham <= tol,
    })
}

/// Invariant multivector: antisymmetric constant-coefficient tensor stored
/// on strictly increasing index tuples.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, C64>,
}

impl Multivector {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Self {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Scalar multiple of a wedge of basis vectors, e.g. `E ^ F`.
    pub fn wedge(dim: usize, indices: &[usize], coeff: C64) -> Result<Self, Error> {
        if indices.iter().any(|&i| i >= dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: indices.iter().max().map_or(0, |&m| m + 1),
            });
        }
        let mut out = Self::zero(dim, indices.len());
        out.insert_wedge(indices, coeff);
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &C64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, indices: &[usize]) -> C64 {
        let mut sorted: Vec<usize> = indices.to_vec();
        let sign = sort_parity(&mut sorted);
        if sign == 0 {
            return C64::default();
        }
        self.terms
            .get(&sorted)
            .map_or(C64::default(), |&v| v * c(sign as f64))
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert_wedge(k, *v);
        }
        Ok(out)
    }

    pub fn scale(&self, s: C64) -> Self {
        if s == C64::default() {
            return Self::zero(self.dim, self.degree);
        }
        Self {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    /// Accumulate `coeff * e_{i1} ^ ... ^ e_{ik}` with indices in any
    /// order; repeated indices contribute nothing.
    fn insert_wedge(&mut self, indices: &[usize], coeff: C64) {
        debug_assert_eq!(indices.len(), self.degree);
        if coeff == C64::default() {
            return;
        }
        let mut sorted: Vec<usize> = indices.to_vec();
        let sign = sort_parity(&mut sorted);
        if sign == 0 {
            return;
        }
        let entry = self.terms.entry(sorted.clone()).or_default();
        *entry += coeff * c(sign as f64);
        if entry.norm() == 0.0 {
            self.terms.remove(&sorted);
        }
    }
}

/// Sort in place, returning +1/-1 for the permutation parity and 0 when an
/// index repeats.
fn sort_parity(indices: &mut [usize]) -> i32 {
    let mut sign = 1i32;
    let n = indices.len();
    for i in 0..n {
        for j in (i + 1)..n {
            match indices[j].cmp(&indices[i]) {
                std::cmp::Ordering::Less => {
                    indices.swap(i, j);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    sign
}

/// Schouten bracket of invariant multivectors by the decomposable rule
///   [X1^..^Xk, Y1^..^Yl] = sum_{i,j} (-1)^{i+j} [Xi, Yj] ^ X..^(no i) ^ Y..^(no j)
/// extended bilinearly; result degree k + l - 1.
pub fn schouten(a: &Multivector, b: &Multivector, g: &LieAlgebra) -> Result<Multivector, Error> {
    let d = g.dim();
    if a.dim != d || b.dim != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: a.dim,
        });
    }
    if a.degree + b.degree == 0 {
        return Err(Error::Invalid("degree-0 Schouten arguments".into()));
    }
    let out_degree = a.degree + b.degree - 1;
    let mut out = Multivector::zero(d, out_degree);
    for (ia, ca) in &a.terms {
        for (jb, cb) in &b.terms {
            for (p, &xi) in ia.iter().enumerate() {
                for (q, &yj) in jb.iter().enumerate() {
                    // 1-based positions in the sign rule
                    let sign = if (p + q) % 2 == 0 { 1.0 } else { -1.0 };
                    let scale = ca * cb * c(sign);
                    let mut rest: Vec<usize> = Vec::with_capacity(out_degree);
                    rest.push(0); // placeholder for the bracket index
                    rest.extend(ia.iter().enumerate().filter(|(r, _)| *r != p).map(|(_, &v)| v));
                    rest.extend(jb.iter().enumerate().filter(|(r, _)| *r != q).map(|(_, &v)| v));
                    for k in 0..d {
                        let coeff = g.c(xi, yj, k);
                        if coeff != C64::default() {
                            rest[0] = k;
                            out.insert_wedge(&rest, scale * coeff);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `[pi, pi]` for a degree-2 multivector; its vanishing certifies the
/// Jacobi condition for the invariant bivector.
pub fn schouten_self(pi: &Multivector, g: &LieAlgebra) -> Result<Multivector, Error> {
    if pi.degree != 2 {
        return Err(Error::Invalid(format!(
            "schouten_self expects degree 2, got {}",
            pi.degree
        )));
    }
    schouten(pi, pi, g)
}

/// Lie derivative L_{b_i} T of an invariant multivector along a basis
/// direction, acting slotwise through the bracket.
pub fn lie_derivative(t: &Multivector, g: &LieAlgebra, i: usize) -> Result<Multivector, Error> {
    let d = g.dim();
    if t.dim != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: t.dim,
        });
    }
    let mut lie = Multivector::zero(d, t.degree);
    for (idx, coeff) in &t.terms {
        for (p, &jp) in idx.iter().enumerate() {
            for k in 0..d {
                let br = g.c(i, jp, k);
                if br != C64::default() {
                    let mut repl = idx.clone();
                    repl[p] = k;
                    lie.insert_wedge(&repl, coeff * br);
                }
            }
        }
    }
    Ok(lie)
}

/// Largest coefficient of any Lie derivative L_{b_i} T, measuring
/// ad-invariance of an invariant multivector.
pub fn ad_invariance_defect(t: &Multivector, g: &LieAlgebra) -> Result<f64, Error> {
    let mut worst: f64 = 0.0;
    for i in 0..g.dim() {
        worst = worst.max(lie_derivative(t, g, i)?.max_abs());
    }
    Ok(worst)
}
