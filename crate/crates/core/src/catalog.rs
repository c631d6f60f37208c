//! Built-in example algebras, weightings, loop bases, groups and bialgebras.
//!
//! Every plain algebra constructed here passes `check_jacobi` at 1e-12 on
//! construction (asserted in tests). Loop entries are mode-exact objects;
//! their fixed-N truncations are produced only when embedding into a Manin
//! triple, where closure is checked on in-range products.

use crate::algebra::{Field, LieAlgebra, Realized};
use crate::bialgebra::Bialgebra;
use crate::flow::GroupRealization;
use crate::linalg::real_mat;
use crate::loops::LoopBase;
use crate::weights::{build_double_manin, ManinTriple, TorusWeighting, TraceState};
use crate::{c, CMat, Error, C64};

fn elem_mat(n: usize, i: usize, j: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    m[(i, j)] = c(1.0);
    m
}

/// sl(2, R) with basis (H, E, F): [H,E] = 2E, [H,F] = -2F, [E,F] = H.
pub fn sl2() -> Realized {
    let labels = vec!["H".into(), "E".into(), "F".into()];
    let entries = [
        (0, 1, 1, c(2.0)),
        (0, 2, 2, c(-2.0)),
        (1, 2, 0, c(1.0)),
    ];
    let alg = LieAlgebra::from_entries(Field::Real, labels, &entries, None).unwrap();
    let mats = vec![
        real_mat(2, 2, &[1.0, 0.0, 0.0, -1.0]),
        elem_mat(2, 0, 1),
        elem_mat(2, 1, 0),
    ];
    Realized::new(alg, mats, 1e-14).unwrap()
}

/// sl(3, R) with basis (H1, H2, E12, E13, E23, E21, E31, E32),
/// H1 = E11 - E22, H2 = E22 - E33.
pub fn sl3() -> Realized {
    let mats = vec![
        &elem_mat(3, 0, 0) - &elem_mat(3, 1, 1),
        &elem_mat(3, 1, 1) - &elem_mat(3, 2, 2),
        elem_mat(3, 0, 1),
        elem_mat(3, 0, 2),
        elem_mat(3, 1, 2),
        elem_mat(3, 1, 0),
        elem_mat(3, 2, 0),
        elem_mat(3, 2, 1),
    ];
    let labels = vec![
        "H1".into(),
        "H2".into(),
        "E12".into(),
        "E13".into(),
        "E23".into(),
        "E21".into(),
        "E31".into(),
        "E32".into(),
    ];
    realized_from_mats(Field::Real, labels, mats)
}

/// su(2) as a real algebra: [e1,e2] = 2e3, [e2,e3] = 2e1, [e3,e1] = 2e2.
pub fn su2() -> Realized {
    let i = C64::new(0.0, 1.0);
    let mut e1 = CMat::zeros(2, 2);
    e1[(0, 1)] = c(1.0);
    e1[(1, 0)] = c(-1.0);
    let mut e2 = CMat::zeros(2, 2);
    e2[(0, 1)] = i;
    e2[(1, 0)] = i;
    let mut e3 = CMat::zeros(2, 2);
    e3[(0, 0)] = i;
    e3[(1, 1)] = -i;
    let labels = vec!["u1".into(), "u2".into(), "u3".into()];
    let entries = [
        (0, 1, 2, c(2.0)),
        (1, 2, 0, c(2.0)),
        (0, 2, 1, c(-2.0)),
    ];
    let alg = LieAlgebra::from_entries(Field::Real, labels, &entries, None).unwrap();
    Realized::new(alg, vec![e1, e2, e3], 1e-14).unwrap()
}

/// Heisenberg algebra: [X, Y] = Z, realized as strictly upper 3x3 matrices.
pub fn heisenberg3() -> Realized {
    let labels = vec!["X".into(), "Y".into(), "Z".into()];
    let entries = [(0, 1, 2, c(1.0))];
    let alg = LieAlgebra::from_entries(Field::Real, labels, &entries, None).unwrap();
    let mats = vec![elem_mat(3, 0, 1), elem_mat(3, 1, 2), elem_mat(3, 0, 2)];
    Realized::new(alg, mats, 1e-14).unwrap()
}

/// Full matrix algebra gl(n, C) on the elementary basis E_ij.
pub fn gl(n: usize) -> Realized {
    let mut mats = Vec::with_capacity(n * n);
    let mut labels = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mats.push(elem_mat(n, i, j));
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    realized_from_mats(Field::Complex, labels, mats)
}

/// Derive structure constants from matrix commutators of a basis.
fn realized_from_mats(field: Field, labels: Vec<String>, mats: Vec<CMat>) -> Realized {
    let d = mats.len();
    let n = mats[0].nrows();
    let cols: Vec<crate::CVec> = mats
        .iter()
        .map(|m| crate::CVec::from_iterator(n * n, m.iter().cloned()))
        .collect();
    let mut structure = vec![C64::default(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            let comm = &mats[i] * &mats[j] - &mats[j] * &mats[i];
            let target = crate::CVec::from_iterator(n * n, comm.iter().cloned());
            let (coords, resid) = crate::linalg::project_onto_span(&cols, &target).unwrap();
            assert!(resid < 1e-10, "basis not closed under commutator");
            for k in 0..d {
                let v = coords[k];
                structure[(i * d + j) * d + k] = if v.norm() < 1e-12 {
                    C64::default()
                } else {
                    // snap near-integers produced by the solve
                    C64::new(v.re.round(), v.im.round())
                };
            }
        }
    }
    let alg = LieAlgebra::from_dense(field, labels, structure, None).unwrap();
    Realized::new(alg, mats, 1e-12).unwrap()
}

/// gl(n) with the diagonal torus weighting `weight(E_ij) = k_i - k_j` and
/// its normalized-trace state.
pub fn matrix_torus(n: usize, k: &[i64]) -> Result<(Realized, TorusWeighting, TraceState), Error> {
    if k.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: k.len(),
        });
    }
    let real = gl(n);
    let mut weights = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            weights.push(k[i] - k[j]);
        }
    }
    let w = TorusWeighting::new(real.algebra.clone(), weights)?;
    let state = TraceState::new(real.clone())?;
    Ok((real, w, state))
}

/// sl2 with the principal weighting (0, 2, -2) and its half-trace state.
pub fn sl2_weighted() -> (Realized, TorusWeighting, TraceState) {
    let real = sl2();
    let w = TorusWeighting::new(real.algebra.clone(), vec![0, 2, -2]).unwrap();
    let state = TraceState::new(real.clone()).unwrap();
    (real, w, state)
}

/// sl3 with the weighting induced by diagonal exponents k = (2, 1, 0):
/// weight(E_ij) = k_i - k_j, Cartan elements at weight 0.
pub fn sl3_weighted() -> (Realized, TorusWeighting, TraceState) {
    let real = sl3();
    let w = TorusWeighting::new(real.algebra.clone(), vec![0, 0, 1, 2, 1, -1, -2, -1]).unwrap();
    let state = TraceState::new(real.clone()).unwrap();
    (real, w, state)
}

/// Double of the weighted sl2, as a Manin triple.
pub fn sl2_double() -> ManinTriple {
    let (_, w, state) = sl2_weighted();
    build_double_manin(&w, &state.pairing_matrix()).unwrap()
}

/// Double of gl(n) under a diagonal torus weighting.
pub fn matrix_double(n: usize, k: &[i64]) -> Result<ManinTriple, Error> {
    let (_, w, state) = matrix_torus(n, k)?;
    build_double_manin(&w, &state.pairing_matrix())
}

/// The named bialgebras every bialgebra-level suite runs over.
pub fn bialgebra_catalog() -> Vec<(&'static str, Bialgebra)> {
    let sl3_triple = {
        let (_, w, state) = sl3_weighted();
        build_double_manin(&w, &state.pairing_matrix()).unwrap()
    };
    vec![
        ("m2", Bialgebra::from_manin(&matrix_double(2, &[1, 0]).unwrap(), 1e-9).unwrap()),
        ("m3", Bialgebra::from_manin(&matrix_double(3, &[2, 1, 0]).unwrap(), 1e-9).unwrap()),
        ("m4", Bialgebra::from_manin(&matrix_double(4, &[3, 2, 1, 0]).unwrap(), 1e-9).unwrap()),
        ("sl2", sl2_bialgebra()),
        ("sl3", Bialgebra::from_manin(&sl3_triple, 1e-9).unwrap()),
    ]
}

/// The sl2 catalog bialgebra: `from_manin` of the weighted sl2 double.
/// Its dual side is the solvable algebra [w,u] = 2u, [w,v] = 2v, [u,v] = 0.
pub fn sl2_bialgebra() -> Bialgebra {
    Bialgebra::from_manin(&sl2_double(), 1e-9).unwrap()
}

/// The cotangent bialgebra on sl2: vanishing cobracket, abelian dual.
/// Its integrated cocycle is identically zero.
pub fn sl2_cotangent() -> Bialgebra {
    Bialgebra::new(sl2().algebra, &[]).unwrap()
}

/// Vector fields on the circle, truncated mode bracket [e_m, e_n] = i(m-n) e_{m+n}.
pub fn witt_base() -> LoopBase {
    LoopBase::vector_fields_s1()
}

/// sl2-valued loops with the pointwise bracket, Killing pairing and the
/// root split (H at weight 0, E at +1, F at -1).
pub fn sl2_loop_base() -> (LoopBase, Vec<i64>) {
    let real = sl2();
    let killing = real.algebra.killing_form();
    let base = LoopBase::pointwise(real.algebra.clone(), killing).unwrap();
    (base, vec![0, 1, -1])
}

/// Matrix-valued loops over gl(n) paired by the normalized trace.
pub fn matrix_loop_base(n: usize) -> LoopBase {
    let real = gl(n);
    let state = TraceState::new(real.clone()).unwrap();
    LoopBase::pointwise(real.algebra.clone(), state.pairing_matrix()).unwrap()
}

/// SL(2, R) as a matrix group over the sl2 basis.
pub fn group_sl2r() -> GroupRealization {
    GroupRealization::new("sl2r", sl2(), Some(Box::new(|g: &CMat| {
        let det = g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)];
        (det - c(1.0)).norm()
    })))
}

/// SU(2) as a matrix group over the su2 basis.
pub fn group_su2() -> GroupRealization {
    GroupRealization::new("su2", su2(), Some(Box::new(|g: &CMat| {
        let defect = g * g.adjoint() - CMat::identity(2, 2);
        crate::linalg::max_abs(&defect)
    })))
}

/// Upper-triangular solvable group: algebra [T, N] = 2N realized by
/// T = diag(1, -1), N = E12.
pub fn group_solvable2() -> GroupRealization {
    let labels = vec!["T".into(), "N".into()];
    let entries = [(0, 1, 1, c(2.0))];
    let alg = LieAlgebra::from_entries(Field::Real, labels, &entries, None).unwrap();
    let mats = vec![real_mat(2, 2, &[1.0, 0.0, 0.0, -1.0]), elem_mat(2, 0, 1)];
    let real = Realized::new(alg, mats, 1e-14).unwrap();
    GroupRealization::new("solv2", real, None)
}

/// Diagonal 2-torus (abelian group of diagonal matrices).
pub fn group_diag2() -> GroupRealization {
    let labels = vec!["D1".into(), "D2".into()];
    let alg = LieAlgebra::abelian(Field::Real, labels);
    let mats = vec![elem_mat(2, 0, 0), elem_mat(2, 1, 1)];
    let real = Realized::new(alg, mats, 1e-14).unwrap();
    GroupRealization::new("diag2", real, None)
}

/// Names accepted by the command-line `--catalog` flags.
pub fn list() -> Vec<(&'static str, &'static str)> {
    vec![
        ("sl2", "sl(2,R), basis (H,E,F)"),
        ("sl3", "sl(3,R), Cartan + elementary basis"),
        ("su2", "su(2) as a real algebra"),
        ("heisenberg3", "Heisenberg algebra [X,Y]=Z"),
        ("m2", "gl(2,C) with diagonal weights (default k=1,0)"),
        ("m3", "gl(3,C) with diagonal weights (default k=2,1,0)"),
        ("m4", "gl(4,C) with diagonal weights (default k=3,2,1,0)"),
        ("sl2-weighted", "sl2 graded by (0,2,-2)"),
        ("sl3-weighted", "sl3 graded by k=(2,1,0)"),
        ("sl2-bialgebra", "from_manin of the weighted sl2 double"),
        ("sl2-cotangent", "sl2 with vanishing cobracket (abelian dual)"),
        ("witt", "circle vector-field modes, [e_m,e_n]=i(m-n)e_{m+n}"),
        ("sl2-loop", "sl2-valued loops with root split"),
        ("sl2r", "SL(2,R) matrix group"),
        ("su2-group", "SU(2) matrix group"),
        ("solv2", "upper-triangular solvable group"),
        ("diag2", "diagonal torus group"),
    ]
}
