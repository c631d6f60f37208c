//! JSON file formats for algebras, weightings, bialgebras, loops and paths.
//!
//! Algebra files list nonzero structure entries `[i, j, k, re, im]` once
//! with `i < j`; the antisymmetric completion is implied. A weighting is a
//! `weights` array attached to the algebra file, and a bialgebra attaches
//! `delta` entries `[i, a, b, re, im]` with `a < b`.

use serde::{Deserialize, Serialize};

/// Sparse tensor entry `(i, j, k, re, im)` as stored in JSON files.
pub type TensorEntry = (usize, usize, usize, f64, f64);

use crate::algebra::{Field, LieAlgebra};
use crate::bialgebra::Bialgebra;
use crate::flow::{AlgebraPath, Interp};
use crate::loops::{LoopBase, LoopElement};
use crate::weights::TorusWeighting;
use crate::{CMat, CVec, Error, C64};

#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub structure: Vec<TensorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<TensorEntry>>,
}

#[derive(Debug, Clone)]
pub struct ParsedAlgebra {
    pub algebra: LieAlgebra,
    pub weighting: Option<TorusWeighting>,
    pub bialgebra: Option<Bialgebra>,
}

pub fn parse_algebra(json: &str) -> Result<ParsedAlgebra, Error> {
    let file: AlgebraFile =
        serde_json::from_str(json).map_err(|e| Error::Invalid(format!("algebra parse: {e}")))?;
    build_algebra(&file)
}

pub fn build_algebra(file: &AlgebraFile) -> Result<ParsedAlgebra, Error> {
    let field = match file.field.as_str() {
        "real" => Field::Real,
        "complex" => Field::Complex,
        other => return Err(Error::Invalid(format!("unknown field '{other}'"))),
    };
    let labels = match &file.labels {
        Some(l) => {
            if l.len() != file.dim {
                return Err(Error::DimensionMismatch {
                    expected: file.dim,
                    got: l.len(),
                });
            }
            l.clone()
        }
        None => (0..file.dim).map(|i| format!("b{i}")).collect(),
    };
    let entries: Vec<(usize, usize, usize, C64)> = file
        .structure
        .iter()
        .map(|&(i, j, k, re, im)| (i, j, k, C64::new(re, im)))
        .collect();
    for &(i, j, _, _, _) in &file.structure {
        if i >= j {
            return Err(Error::Invalid(format!(
                "structure entries must have i < j, got ({i},{j})"
            )));
        }
    }
    let form = match &file.form {
        Some(data) => {
            if data.len() != file.dim * file.dim {
                return Err(Error::DimensionMismatch {
                    expected: file.dim * file.dim,
                    got: data.len(),
                });
            }
            Some(crate::linalg::real_mat(file.dim, file.dim, data))
        }
        None => None,
    };
    let algebra = LieAlgebra::from_entries(field, labels, &entries, form)?;
    let weighting = match &file.weights {
        Some(w) => Some(TorusWeighting::new(algebra.clone(), w.clone())?),
        None => None,
    };
    let bialgebra = match &file.delta {
        Some(entries) => {
            for &(_, a, b, _, _) in entries {
                if a >= b {
                    return Err(Error::Invalid(format!(
                        "delta entries must have a < b, got ({a},{b})"
                    )));
                }
            }
            let d: Vec<(usize, usize, usize, C64)> = entries
                .iter()
                .map(|&(i, a, b, re, im)| (i, a, b, C64::new(re, im)))
                .collect();
            Some(Bialgebra::new(algebra.clone(), &d)?)
        }
        None => None,
    };
    Ok(ParsedAlgebra {
        algebra,
        weighting,
        bialgebra,
    })
}

pub fn algebra_to_file(alg: &LieAlgebra, weights: Option<&[i64]>) -> AlgebraFile {
    let d = alg.dim();
    let mut structure = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            for k in 0..d {
                let v = alg.c(i, j, k);
                if v != C64::default() {
                    structure.push((i, j, k, v.re, v.im));
                }
            }
        }
    }
    AlgebraFile {
        dim: d,
        field: match alg.field() {
            Field::Real => "real".into(),
            Field::Complex => "complex".into(),
        },
        labels: Some(alg.labels().to_vec()),
        structure,
        form: alg.form().map(|f: &CMat| {
            let mut out = Vec::with_capacity(d * d);
            for i in 0..d {
                for j in 0..d {
                    out.push(f[(i, j)].re);
                }
            }
            out
        }),
        weights: weights.map(|w| w.to_vec()),
        delta: None,
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LoopFile {
    /// Catalog name of the coefficient base (witt, m2, m3, sl2-loop);
    /// callers may override it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    /// Mode rows `[m, re_0, im_0, re_1, im_1, ...]` over the base
    /// coordinates.
    pub modes: Vec<Vec<f64>>,
}

/// The `base` name declared inside a loop file, if any.
pub fn loop_file_base(json: &str) -> Result<Option<String>, Error> {
    let file: LoopFile =
        serde_json::from_str(json).map_err(|e| Error::Invalid(format!("loop parse: {e}")))?;
    Ok(file.base)
}

pub fn parse_loop(json: &str, base: &LoopBase) -> Result<LoopElement, Error> {
    let file: LoopFile =
        serde_json::from_str(json).map_err(|e| Error::Invalid(format!("loop parse: {e}")))?;
    loop_from_file(&file, base)
}

pub fn loop_from_file(file: &LoopFile, base: &LoopBase) -> Result<LoopElement, Error> {
    let d = base.dim();
    let mut out = LoopElement::zero(base.clone());
    for row in &file.modes {
        if row.len() != 1 + 2 * d {
            return Err(Error::DimensionMismatch {
                expected: 1 + 2 * d,
                got: row.len(),
            });
        }
        let m = row[0];
        if m.fract() != 0.0 {
            return Err(Error::Invalid(format!("mode index {m} is not an integer")));
        }
        let coeff = CVec::from_iterator(
            d,
            (0..d).map(|i| C64::new(row[1 + 2 * i], row[2 + 2 * i])),
        );
        out.add_mode(m as i64, coeff)?;
    }
    Ok(out)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PathFile {
    pub grid: usize,
    /// Rows `[t, x_1, ..., x_d]` on a uniform ascending grid over [0, 1].
    pub samples: Vec<Vec<f64>>,
    pub interp: String,
}

pub fn parse_path(json: &str) -> Result<AlgebraPath, Error> {
    let file: PathFile =
        serde_json::from_str(json).map_err(|e| Error::Invalid(format!("path parse: {e}")))?;
    path_from_file(&file)
}

pub fn path_from_file(file: &PathFile) -> Result<AlgebraPath, Error> {
    if file.samples.len() != file.grid {
        return Err(Error::DimensionMismatch {
            expected: file.grid,
            got: file.samples.len(),
        });
    }
    if file.grid < 2 {
        return Err(Error::Invalid("need at least 2 path samples".into()));
    }
    let interp = match file.interp.as_str() {
        "linear" => Interp::Linear,
        "cubic" => Interp::Cubic,
        other => return Err(Error::Invalid(format!("unknown interpolation '{other}'"))),
    };
    let width = file.samples[0].len();
    if width < 2 {
        return Err(Error::Invalid("path samples need a time column".into()));
    }
    let n = file.grid;
    for (j, row) in file.samples.iter().enumerate() {
        if row.len() != width {
            return Err(Error::DimensionMismatch {
                expected: width,
                got: row.len(),
            });
        }
        let expect_t = j as f64 / (n - 1) as f64;
        if (row[0] - expect_t).abs() > 1e-9 {
            return Err(Error::Invalid(format!(
                "sample {j} at t = {} is not on the uniform grid",
                row[0]
            )));
        }
    }
    let samples: Vec<CVec> = file
        .samples
        .iter()
        .map(|row| CVec::from_iterator(width - 1, row[1..].iter().map(|&x| crate::c(x))))
        .collect();
    AlgebraPath::from_samples(samples, interp)
}
