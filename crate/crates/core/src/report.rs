//! Verification reports with deterministic JSON serialization.
//!
//! Floats are emitted with 17 significant digits so a parsed report
//! reproduces the original f64 bits; check entries are ordered by name.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::Error;

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct CheckResult {
    #[serde(rename = "check")]
    pub name: String,
    pub residuals: BTreeMap<String, f64>,
    pub pass: bool,
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Report {
    pub suite: String,
    pub inputs_digest: String,
    pub seed: Option<u64>,
    pub elapsed_s: f64,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(suite: &str, inputs_digest: String, seed: Option<u64>) -> Self {
        Self {
            suite: suite.into(),
            inputs_digest,
            seed,
            elapsed_s: 0.0,
            pass: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: &str, residuals: Vec<(&str, f64)>, pass: bool, tol: f64) {
        self.pass &= pass;
        self.checks.push(CheckResult {
            name: name.into(),
            residuals: residuals
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            pass,
            tol,
        });
    }

    /// Deterministic JSON with 17-significant-digit floats and checks
    /// ordered by name.
    pub fn to_json(&self) -> String {
        let mut checks = self.checks.clone();
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let mut out = String::from("{");
        out.push_str(&format!("\"suite\":{},", json_str(&self.suite)));
        out.push_str(&format!(
            "\"inputs_digest\":{},",
            json_str(&self.inputs_digest)
        ));
        match self.seed {
            Some(s) => out.push_str(&format!("\"seed\":{s},")),
            None => out.push_str("\"seed\":null,"),
        }
        out.push_str(&format!("\"elapsed_s\":{},", json_f64(self.elapsed_s)));
        out.push_str(&format!("\"pass\":{},", self.pass));
        out.push_str("\"checks\":[");
        for (i, ch) in checks.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('{');
            out.push_str(&format!("\"check\":{},", json_str(&ch.name)));
            out.push_str("\"residuals\":{");
            for (j, (k, v)) in ch.residuals.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                out.push_str(&format!("{}:{}", json_str(k), json_f64(*v)));
            }
            out.push_str("},");
            out.push_str(&format!("\"pass\":{},", ch.pass));
            out.push_str(&format!("\"tol\":{}", json_f64(ch.tol)));
            out.push('}');
        }
        out.push_str("]}");
        out
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        serde_json::from_str(s).map_err(|e| Error::Invalid(format!("report parse: {e}")))
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string encoding")
}

/// 17 significant digits; non-finite values clamp to the f64 range edge.
fn json_f64(x: f64) -> String {
    if x.is_nan() {
        return json_f64(0.0);
    }
    if x.is_infinite() {
        return json_f64(if x > 0.0 { f64::MAX } else { f64::MIN });
    }
    format!("{x:.16e}")
}

/// FNV-1a digest of canonical input bytes, hex encoded.
pub fn digest(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_lossless() {
        let mut r = Report::new("manin", digest(b"input"), Some(42));
        r.push(
            "closure",
            vec![("residual", 1.234567890123456e-13), ("sigma_min", 0.5)],
            true,
            1e-10,
        );
        r.push("isotropy", vec![("residual", f64::MIN_POSITIVE)], true, 1e-10);
        r.elapsed_s = 0.123_456_789_012_345_67;
        let json = r.to_json();
        let back = Report::from_json(&json).unwrap();
        assert_eq!(back.suite, r.suite);
        assert_eq!(back.seed, r.seed);
        assert_eq!(back.elapsed_s.to_bits(), r.elapsed_s.to_bits());
        for (a, b) in back.checks.iter().zip(&{
            let mut cs = r.checks.clone();
            cs.sort_by(|a, b| a.name.cmp(&b.name));
            cs
        }) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.pass, b.pass);
            assert_eq!(a.tol.to_bits(), b.tol.to_bits());
            for (k, v) in &a.residuals {
                assert_eq!(v.to_bits(), b.residuals[k].to_bits(), "key {k}");
            }
        }
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest(b""), format!("{:016x}", 0xcbf29ce484222325u64));
        assert_eq!(digest(b"abc"), digest(b"abc"));
        assert_ne!(digest(b"abc"), digest(b"abd"));
    }

    #[test]
    fn emits_valid_json_for_edge_floats() {
        let mut r = Report::new("edge", digest(b"x"), None);
        r.push("inf", vec![("cond", f64::INFINITY)], false, 1e-10);
        let parsed = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(parsed.checks[0].residuals["cond"], f64::MAX);
    }
}
