//! Command-line surface: load algebra/weighting/bialgebra/path files or
//! catalog entries, run named verification suites, and emit JSON reports
//! and CSV decay tables.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 input or
//! usage error.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use drinfeld_core::bialgebra::Bialgebra;
use drinfeld_core::catalog;
use drinfeld_core::flow::{
    cocycle_identity_residual, jacobiator_check, observed_order, path_independence, AlgebraPath,
    GroupRealization,
};
use drinfeld_core::linalg::rvec;
use drinfeld_core::loops::{decay_fit, DecayRegime, LoopBase, LoopElement, SampledLoop};
use drinfeld_core::report::{digest, Report};
use drinfeld_core::rng::SplitMix64;
use drinfeld_core::weights::{build_double_manin, build_double_manin_traced, verify_manin};
use drinfeld_core::{CVec, C64};

#[derive(Parser)]
#[command(name = "drinfeld", version, about = "Manin triple and Poisson-Lie verification suites")]
struct Cli {
    /// Plain deterministic output (the default; accepted for scripting).
    #[arg(long, global = true)]
    plain: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Fourier decay analysis of a loop sample.
    Fourier(FourierArgs),
    /// Integrate the algebra cocycle along group paths and check it.
    Integrate(IntegrateArgs),
    /// Catalog inspection.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List built-in algebras, weightings, groups and bialgebras.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Manin,
    Bialgebra,
    Jacobi,
    Cocycle,
}

#[derive(Args)]
struct VerifyArgs {
    /// What to verify.
    #[arg(value_enum)]
    target: VerifyTarget,
    /// Catalog entry to verify.
    #[arg(long, conflicts_with = "input")]
    catalog: Option<String>,
    /// JSON input file (algebra with optional weights/form/delta).
    #[arg(long)]
    input: Option<String>,
    /// Diagonal weights for matrix catalog entries, e.g. --weights 1,0.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weights: Option<Vec<i64>>,
    /// Mode truncation for loop catalog entries.
    #[arg(long, default_value_t = 4)]
    modes: i64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    Smooth,
    Analytic,
}

#[derive(Args)]
struct FourierArgs {
    /// Synthesized sample: smooth2|smooth3|smooth4|analytic03|analytic05|
    /// analytic10|constant.
    #[arg(long, conflicts_with = "loop_file")]
    catalog: Option<String>,
    /// Loop JSON file ({"modes": [[m, re, im, ...], ...]}).
    #[arg(long = "loop")]
    loop_file: Option<String>,
    /// Coefficient base for --loop: witt|m2|m3|sl2-loop. Overrides a
    /// `base` key inside the loop file; defaults to witt.
    #[arg(long)]
    base: Option<String>,
    /// Fit over modes 1..=N.
    #[arg(long, default_value_t = 20)]
    modes: i64,
    /// Sample grid size.
    #[arg(long, default_value_t = 256)]
    grid: usize,
    #[arg(long, value_enum)]
    regime: Option<RegimeArg>,
    /// Write the decay table here (columns m, norm, fitted_model_value).
    #[arg(long)]
    csv: Option<String>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Cocycle,
    Pathindep,
    Multiplicative,
    Jacobiator,
}

#[derive(Args)]
struct IntegrateArgs {
    /// Catalog bialgebra/group pairing (sl2).
    #[arg(long, conflicts_with = "bialgebra")]
    catalog: Option<String>,
    /// Bialgebra JSON file (algebra with delta entries).
    #[arg(long)]
    bialgebra: Option<String>,
    /// Matrix group for file-based bialgebras: sl2r|su2-group|solv2|diag2.
    #[arg(long, default_value = "sl2r")]
    group: String,
    /// Path JSON file; a deterministic generic path is used otherwise.
    #[arg(long)]
    path: Option<String>,
    #[arg(long, default_value_t = 400)]
    steps: usize,
    #[arg(long, value_enum)]
    check: CheckKind,
    /// Skip the cocycle precondition on the bialgebra.
    #[arg(long)]
    force: bool,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[arg(long)]
    out: Option<String>,
}

enum CliError {
    Input(String),
}

impl From<drinfeld_core::Error> for CliError {
    fn from(e: drinfeld_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    };
    ExitCode::from(code)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            for (name, desc) in catalog::list() {
                println!("{name:<14} {desc}");
            }
            Ok(0)
        }
        Command::Verify(args) => cmd_verify(args),
        Command::Fourier(args) => cmd_fourier(args),
        Command::Integrate(args) => cmd_integrate(args),
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn write_out(report: &Report, out: &Option<String>) -> Result<(), CliError> {
    let json = report.to_json();
    match out {
        Some(path) => {
            fs::write(path, format!("{json}\n"))
                .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        }
        None => println!("{json}"),
    }
    Ok(())
}

fn finish(mut report: Report, start: Instant, out: &Option<String>) -> Result<u8, CliError> {
    report.elapsed_s = start.elapsed().as_secs_f64();
    for ch in &report.checks {
        let residuals: Vec<String> = ch
            .residuals
            .iter()
            .map(|(k, v)| format!("{k}={v:.3e}"))
            .collect();
        eprintln!(
            "{}: {} ({})",
            ch.name,
            if ch.pass { "pass" } else { "FAIL" },
            residuals.join(", ")
        );
    }
    let pass = report.pass;
    write_out(&report, out)?;
    Ok(if pass { 0 } else { 1 })
}

fn default_weights(n: usize) -> Vec<i64> {
    (0..n).rev().map(|k| k as i64).collect()
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    let start = Instant::now();
    let mut digest_src = String::new();
    let source = match (&args.catalog, &args.input) {
        (Some(name), None) => {
            digest_src.push_str(name);
            VerifySource::Catalog(name.clone())
        }
        (None, Some(path)) => {
            let text = read_file(path)?;
            digest_src.push_str(&text);
            VerifySource::File(text)
        }
        _ => {
            return Err(CliError::Input(
                "exactly one of --catalog or --input is required".into(),
            ))
        }
    };
    if let Some(w) = &args.weights {
        digest_src.push_str(&format!("{w:?}"));
    }
    let mut report = Report::new(
        match args.target {
            VerifyTarget::Manin => "verify-manin",
            VerifyTarget::Bialgebra => "verify-bialgebra",
            VerifyTarget::Jacobi => "verify-jacobi",
            VerifyTarget::Cocycle => "verify-cocycle",
        },
        digest(digest_src.as_bytes()),
        None,
    );

    match args.target {
        VerifyTarget::Manin => {
            let triple = manin_triple_from(&source, &args)?;
            let rep = verify_manin(&triple, args.tol);
            report.push(
                "manin",
                vec![
                    ("closure", rep.closure_residual),
                    ("isotropy", rep.isotropy_residual),
                    ("invariance", rep.invariance_residual),
                    ("reconstruction", rep.reconstruction_residual),
                    ("gram_sigma_min", rep.gram_sigma_min),
                    ("basis_cond", rep.basis_cond),
                ],
                rep.pass,
                args.tol,
            );
        }
        VerifyTarget::Jacobi => {
            let algebra = algebra_from(&source, &args)?;
            let rep = algebra.check_jacobi(args.tol);
            report.push(
                "jacobi",
                vec![("max_residual", rep.max_residual)],
                rep.pass,
                args.tol,
            );
        }
        VerifyTarget::Cocycle => {
            let bi = bialgebra_from(&source)?;
            let rep = bi.check_cocycle(args.tol);
            report.push(
                "cocycle",
                vec![("max_residual", rep.max_residual)],
                rep.pass,
                args.tol,
            );
        }
        VerifyTarget::Bialgebra => {
            let bi = bialgebra_from(&source)?;
            let coc = bi.check_cocycle(args.tol);
            report.push(
                "cocycle",
                vec![("max_residual", coc.max_residual)],
                coc.pass,
                args.tol,
            );
            let (_, jac) = bi.dual_bracket(args.tol);
            report.push(
                "co-jacobi",
                vec![("max_residual", jac.max_residual)],
                jac.pass,
                args.tol,
            );
            let (_, djac, manin) = bi.to_manin(args.tol)?;
            report.push(
                "double-jacobi",
                vec![("max_residual", djac.max_residual)],
                djac.pass,
                args.tol,
            );
            report.push(
                "double-manin",
                vec![
                    ("closure", manin.closure_residual),
                    ("isotropy", manin.isotropy_residual),
                    ("invariance", manin.invariance_residual),
                    ("reconstruction", manin.reconstruction_residual),
                    ("gram_sigma_min", manin.gram_sigma_min),
                ],
                manin.pass,
                args.tol,
            );
        }
    }
    finish(report, start, &args.out)
}

enum VerifySource {
    Catalog(String),
    File(String),
}

fn manin_triple_from(
    source: &VerifySource,
    args: &VerifyArgs,
) -> Result<drinfeld_core::weights::ManinTriple, CliError> {
    match source {
        VerifySource::Catalog(name) => match name.as_str() {
            "m2" | "m3" | "m4" => {
                let n = name[1..].parse::<usize>().unwrap();
                let k = args.weights.clone().unwrap_or_else(|| default_weights(n));
                let (_, w, state) = catalog::matrix_torus(n, &k)?;
                Ok(build_double_manin_traced(&w, &state)?)
            }
            "sl2" | "sl2-weighted" => Ok(catalog::sl2_double()),
            "sl3" | "sl3-weighted" => {
                let (_, w, state) = catalog::sl3_weighted();
                Ok(build_double_manin_traced(&w, &state)?)
            }
            "witt" => {
                let (t, _, _) = drinfeld_core::loops::loop_manin(
                    &catalog::witt_base(),
                    None,
                    args.modes,
                )?;
                Ok(t)
            }
            "sl2-loop" => {
                let (base, roots) = catalog::sl2_loop_base();
                let (t, _, _) =
                    drinfeld_core::loops::loop_manin(&base, Some(&roots), args.modes)?;
                Ok(t)
            }
            other => Err(CliError::Input(format!(
                "no Manin catalog entry '{other}'"
            ))),
        },
        VerifySource::File(text) => {
            let parsed = drinfeld_core::io::parse_algebra(text)?;
            let w = parsed.weighting.ok_or_else(|| {
                CliError::Input("input algebra carries no 'weights'".into())
            })?;
            let form = parsed
                .algebra
                .form()
                .cloned()
                .ok_or_else(|| CliError::Input("input algebra carries no 'form'".into()))?;
            Ok(build_double_manin(&w, &form)?)
        }
    }
}

fn algebra_from(
    source: &VerifySource,
    _args: &VerifyArgs,
) -> Result<drinfeld_core::algebra::LieAlgebra, CliError> {
    match source {
        VerifySource::Catalog(name) => match name.as_str() {
            "sl2" => Ok(catalog::sl2().algebra),
            "sl3" => Ok(catalog::sl3().algebra),
            "su2" => Ok(catalog::su2().algebra),
            "heisenberg3" => Ok(catalog::heisenberg3().algebra),
            "m2" => Ok(catalog::gl(2).algebra),
            "m3" => Ok(catalog::gl(3).algebra),
            "m4" => Ok(catalog::gl(4).algebra),
            other => Err(CliError::Input(format!("no algebra catalog entry '{other}'"))),
        },
        VerifySource::File(text) => Ok(drinfeld_core::io::parse_algebra(text)?.algebra),
    }
}

fn bialgebra_from(source: &VerifySource) -> Result<Bialgebra, CliError> {
    match source {
        VerifySource::Catalog(name) => {
            let key = name.strip_suffix("-bialgebra").unwrap_or(name);
            catalog::bialgebra_catalog()
                .into_iter()
                .find(|(n, _)| *n == key)
                .map(|(_, bi)| bi)
                .ok_or_else(|| CliError::Input(format!("no bialgebra catalog entry '{name}'")))
        }
        VerifySource::File(text) => drinfeld_core::io::parse_algebra(text)?
            .bialgebra
            .ok_or_else(|| CliError::Input("input algebra carries no 'delta'".into())),
    }
}

fn cmd_fourier(args: FourierArgs) -> Result<u8, CliError> {
    let start = Instant::now();
    let mut digest_src = format!("modes={} grid={}", args.modes, args.grid);
    let nyquist = ((args.grid - 1) / 2) as i64;
    if args.modes > nyquist {
        return Err(CliError::Input(format!(
            "--modes {} exceeds the Nyquist bound {} for --grid {}",
            args.modes, nyquist, args.grid
        )));
    }

    let (sample, regime, expected): (SampledLoop, _, _) =
        match (&args.catalog, &args.loop_file) {
            (Some(name), None) => {
                digest_src.push_str(name);
                let base = catalog::witt_base();
                let (l, regime, expected) = synth_sample(&base, name)?;
                let s = SampledLoop::from_loop(&l, args.grid)?;
                let regime = match args.regime {
                    Some(RegimeArg::Smooth) => DecayRegime::Smooth,
                    Some(RegimeArg::Analytic) => DecayRegime::Analytic,
                    None => regime,
                };
                (s, regime, expected)
            }
            (None, Some(path)) => {
                let text = read_file(path)?;
                digest_src.push_str(&text);
                let base_name = match (&args.base, drinfeld_core::io::loop_file_base(&text)?) {
                    (Some(flag), _) => flag.clone(),
                    (None, Some(declared)) => declared,
                    (None, None) => "witt".to_string(),
                };
                let base = loop_base_by_name(&base_name)?;
                let l = drinfeld_core::io::parse_loop(&text, &base)?;
                let s = SampledLoop::from_loop(&l, args.grid)?;
                let regime = match args.regime {
                    Some(RegimeArg::Smooth) => DecayRegime::Smooth,
                    Some(RegimeArg::Analytic) => DecayRegime::Analytic,
                    None => {
                        return Err(CliError::Input(
                            "--regime is required with --loop".into(),
                        ))
                    }
                };
                (s, regime, None)
            }
            _ => {
                return Err(CliError::Input(
                    "exactly one of --catalog or --loop is required".into(),
                ))
            }
        };

    let mut report = Report::new("fourier", digest(digest_src.as_bytes()), None);
    match decay_fit(&sample, args.modes, regime) {
        Ok(rep) => {
            if let Some(csv) = &args.csv {
                write_decay_csv(csv, &rep)?;
            }
            let mut residuals = vec![
                ("fitted", rep.fitted),
                ("slope", rep.slope),
                ("fit_residual", rep.fit_residual),
            ];
            let (pass, tol) = match expected {
                Some((target, tolerance)) => {
                    residuals.push(("expected", target));
                    ((rep.fitted - target).abs() <= tolerance, tolerance)
                }
                None => (rep.fit_residual.is_finite(), 0.0),
            };
            report.push("decay-fit", residuals, pass, tol);
        }
        Err(drinfeld_core::Error::InsufficientModes { got, .. }) => {
            // A constant (or single-mode) sample has no decay law to fit;
            // the check passes exactly when all nonzero-mode norms vanish.
            let norms = sample.mode_norms(args.modes)?;
            let worst = norms
                .iter()
                .filter(|(m, _)| **m != 0)
                .map(|(_, v)| *v)
                .fold(0.0, f64::max);
            if let Some(csv) = &args.csv {
                write_norms_csv(csv, &norms)?;
            }
            report.push(
                "degenerate-sample",
                vec![("usable_modes", got as f64), ("max_nonzero_norm", worst)],
                worst < 1e-14,
                1e-14,
            );
        }
        Err(e) => return Err(e.into()),
    }
    finish(report, start, &args.out)
}

/// A synthesized sample, its fit regime, and the expected (target,
/// tolerance) when the decay law is known.
type SynthSample = (LoopElement, DecayRegime, Option<(f64, f64)>);

fn synth_sample(base: &LoopBase, name: &str) -> Result<SynthSample, CliError> {
    let mut l = LoopElement::zero(base.clone());
    match name {
        "smooth2" | "smooth3" | "smooth4" => {
            let k: i32 = name[6..].parse().unwrap();
            for m in 1..=64i64 {
                let v = (m as f64).powi(-k);
                l.add_mode(m, rvec(&[v]))?;
                l.add_mode(-m, rvec(&[v]))?;
            }
            Ok((l, DecayRegime::Smooth, Some((k as f64, 0.3))))
        }
        "analytic03" | "analytic05" | "analytic10" => {
            let log_rho = match name {
                "analytic03" => 0.3,
                "analytic05" => 0.5,
                _ => 1.0,
            };
            for m in -60..=60i64 {
                l.add_mode(m, rvec(&[(-log_rho * m.abs() as f64).exp()]))?;
            }
            Ok((l, DecayRegime::Analytic, Some((log_rho, 0.05 * log_rho))))
        }
        "constant" => {
            l.add_mode(0, rvec(&[1.0]))?;
            Ok((l, DecayRegime::Smooth, None))
        }
        other => Err(CliError::Input(format!("no fourier catalog entry '{other}'"))),
    }
}

fn loop_base_by_name(name: &str) -> Result<LoopBase, CliError> {
    match name {
        "witt" => Ok(catalog::witt_base()),
        "m2" => Ok(catalog::matrix_loop_base(2)),
        "m3" => Ok(catalog::matrix_loop_base(3)),
        "sl2-loop" => Ok(catalog::sl2_loop_base().0),
        other => Err(CliError::Input(format!("no loop base '{other}'"))),
    }
}

fn write_decay_csv(path: &str, rep: &drinfeld_core::loops::DecayReport) -> Result<(), CliError> {
    let mut out = String::from("m,norm,fitted_model_value\n");
    for (m, norm) in &rep.norms {
        out.push_str(&format!("{m},{norm:.16e},{:.16e}\n", rep.model(*m)));
    }
    fs::write(path, out).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn write_norms_csv(
    path: &str,
    norms: &std::collections::BTreeMap<i64, f64>,
) -> Result<(), CliError> {
    let mut out = String::from("m,norm,fitted_model_value\n");
    for (m, norm) in norms {
        out.push_str(&format!("{m},{norm:.16e},nan\n"));
    }
    fs::write(path, out).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn default_path(dim: usize, seed: u64) -> AlgebraPath {
    let mut rng = SplitMix64::new(seed);
    let coeff = |rng: &mut SplitMix64| {
        CVec::from_iterator(dim, (0..dim).map(|_| C64::new(rng.uniform(-0.5, 0.5), 0.0)))
    };
    AlgebraPath::poly(vec![coeff(&mut rng), coeff(&mut rng), coeff(&mut rng)]).unwrap()
}

fn cmd_integrate(args: IntegrateArgs) -> Result<u8, CliError> {
    let start = Instant::now();
    let mut digest_src = format!("steps={}", args.steps);
    let (bi, group): (Bialgebra, GroupRealization) = match (&args.catalog, &args.bialgebra) {
        (Some(name), None) => {
            digest_src.push_str(name);
            match name.as_str() {
                "sl2" | "sl2-bialgebra" => (catalog::sl2_bialgebra(), catalog::group_sl2r()),
                "sl2-cotangent" => (catalog::sl2_cotangent(), catalog::group_sl2r()),
                other => {
                    return Err(CliError::Input(format!(
                        "no integrable catalog entry '{other}'"
                    )))
                }
            }
        }
        (None, Some(path)) => {
            let text = read_file(path)?;
            digest_src.push_str(&text);
            let parsed = drinfeld_core::io::parse_algebra(&text)?;
            let bi = parsed
                .bialgebra
                .ok_or_else(|| CliError::Input("input carries no 'delta'".into()))?;
            let group = match args.group.as_str() {
                "sl2r" => catalog::group_sl2r(),
                "su2-group" => catalog::group_su2(),
                "solv2" => catalog::group_solvable2(),
                "diag2" => catalog::group_diag2(),
                other => return Err(CliError::Input(format!("no group '{other}'"))),
            };
            (bi, group)
        }
        _ => {
            return Err(CliError::Input(
                "exactly one of --catalog or --bialgebra is required".into(),
            ))
        }
    };

    let path = match &args.path {
        Some(p) => {
            let text = read_file(p)?;
            digest_src.push_str(&text);
            drinfeld_core::io::parse_path(&text)?
        }
        None => default_path(bi.dim(), 0xd0 + bi.dim() as u64),
    };
    if path.dim() != bi.dim() {
        return Err(CliError::Input(format!(
            "path dimension {} does not match algebra dimension {}",
            path.dim(),
            bi.dim()
        )));
    }

    let mut report = Report::new("integrate", digest(digest_src.as_bytes()), None);

    let pre = bi.check_cocycle(1e-10);
    if !pre.pass && !args.force {
        report.push(
            "cocycle-precondition",
            vec![("max_residual", pre.max_residual)],
            false,
            1e-10,
        );
        return finish(report, start, &args.out);
    }
    if args.force {
        report.push(
            "cocycle-precondition",
            vec![("max_residual", pre.max_residual)],
            true,
            f64::INFINITY,
        );
    }

    // The right-trivialized bivector at the path endpoint, for the record.
    let bv = drinfeld_core::flow::bivector_at(&bi, &group, &path, args.steps)?;
    report.push(
        "bivector",
        vec![("theta_norm", bv.norm)],
        true,
        f64::INFINITY,
    );

    match args.check {
        CheckKind::Cocycle | CheckKind::Multiplicative => {
            let other = default_path(bi.dim(), 0x0ff5e7);
            let mut data = Vec::new();
            for steps in [args.steps, 2 * args.steps] {
                let r = cocycle_identity_residual(&bi, &group, &path, &other, steps)?;
                data.push((steps, r));
            }
            let order = observed_order(&data);
            let name = match args.check {
                CheckKind::Cocycle => "group-cocycle-identity",
                _ => "multiplicativity",
            };
            report.push(
                name,
                vec![
                    ("residual", data[1].1),
                    ("residual_coarse", data[0].1),
                    ("observed_order", order),
                ],
                data[1].1 <= args.tol,
                args.tol,
            );
        }
        CheckKind::Pathindep => {
            // Second route with the same endpoint: out by exp(y), run the
            // Ad(exp y)-conjugated path, return by exp(-y).
            let y = {
                let mut v = CVec::zeros(bi.dim());
                v[0] = C64::new(0.4, 0.0);
                if bi.dim() > 1 {
                    v[1] = C64::new(-0.3, 0.0);
                }
                v
            };
            let ey = drinfeld_core::linalg::expm(&group.realized().realize_coords(&y));
            let conjugated = path.map_linear(&group.ad(&ey, 1e-8)?)?;
            let detour = AlgebraPath::concat(
                &AlgebraPath::concat(&AlgebraPath::constant(y.clone()), &conjugated).unwrap(),
                &AlgebraPath::constant(y.map(|z| -z)),
            )
            .unwrap();
            let mut data = Vec::new();
            let mut endpoint_defect: f64 = 0.0;
            for steps in [args.steps, 2 * args.steps] {
                let rep = path_independence(&bi, &group, &path, &detour, steps)?;
                endpoint_defect = endpoint_defect.max(rep.endpoint_defect);
                data.push((steps, rep.theta_residual));
            }
            let order = observed_order(&data);
            report.push(
                "path-independence",
                vec![
                    ("residual", data[1].1),
                    ("residual_coarse", data[0].1),
                    ("endpoint_defect", endpoint_defect),
                    ("observed_order", order),
                ],
                data[1].1 <= args.tol && endpoint_defect <= 1e-8,
                args.tol,
            );
        }
        CheckKind::Jacobiator => {
            let rep = jacobiator_check(&bi, &group, &path, args.steps, 1e-3)?;
            let pass = rep.alg_max <= 1e-12 && rep.fd_max <= 1e-4 && rep.transport_max <= 1e-4;
            report.push(
                "jacobiator",
                vec![
                    ("algebraic", rep.alg_max),
                    ("finite_difference", rep.fd_max),
                    ("match_rel", rep.match_rel),
                    ("transport", rep.transport_max),
                ],
                pass,
                1e-4,
            );
        }
    }
    finish(report, start, &args.out)
}
