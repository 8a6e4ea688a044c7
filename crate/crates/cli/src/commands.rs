use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use catalan_core::combinatorics::{for_each_dyck_word, DyckSymbol};
use catalan_core::loggamma::{duplication_residual, loggamma_feaux, raabe_residual};
use catalan_core::{
    b3, ballot, catalan_exact, catalan_via_duplication, catalan_via_feaux, count_dyck_words,
    count_lattice_paths, fuss_catalan, loggamma, loggamma_reference, resolve_exponent_typo,
    CatalanError64, CatalanIndex, ExactError, ExactInteger, GammaError64, QuadError64,
    QuadOptions64, ReprId, ReprResult64,
};
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::args::{CatalanRepr, Command, ExactKind, Format, IdentitySet};
use crate::report::{Metadata, ReportDocument, VerificationRow};

/// Per-row bound on `|log estimate − log Cₙ|` in sweeps.
pub const ROW_LOG_ERROR_BOUND: f64 = 1e-8;
pub const DUPLICATION_BOUND: f64 = 1e-11;
pub const RAABE_BOUND: f64 = 1e-9;
pub const TYPO_BOUND: f64 = 1e-8;

pub const DUPLICATION_GRID: [f64; 6] = [0.5, 1.0, 2.0, 5.0, 10.0, 25.0];
pub const RAABE_GRID: [f64; 4] = [0.5, 1.0, 2.0, 10.0];
pub const TYPO_GRID: [u32; 3] = [1, 2, 5];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    LimitExceeded(String),
    #[error("{0}")]
    NonConvergence(String),
    #[error("{0}")]
    CheckFailed(String),
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::Output { .. } => 2,
            CliError::LimitExceeded(_) => 3,
            CliError::NonConvergence(_) => 4,
            CliError::CheckFailed(_) => 5,
            CliError::Io(_) => 1,
        }
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::LimitExceeded { .. } => CliError::LimitExceeded(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<QuadError64> for CliError {
    fn from(e: QuadError64) -> Self {
        CliError::NonConvergence(e.to_string())
    }
}

impl From<GammaError64> for CliError {
    fn from(e: GammaError64) -> Self {
        match e {
            GammaError64::Domain(m) => CliError::Domain(m),
            GammaError64::Quadrature(q) => q.into(),
        }
    }
}

impl From<CatalanError64> for CliError {
    fn from(e: CatalanError64) -> Self {
        match e {
            CatalanError64::Domain(m) => CliError::Domain(m),
            CatalanError64::Gamma(g) => g.into(),
            other => CliError::NonConvergence(other.to_string()),
        }
    }
}

/// Runs one command, writing machine-readable output to `out`.
pub fn run(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Exact(kind) => cmd_exact(kind, out),
        Command::Integral {
            repr,
            n,
            tol,
            max_evals,
        } => cmd_integral(repr, n, QuadOptions64::new(check_tol(tol)?, max_evals), out),
        Command::Verify {
            max_n,
            reprs,
            tol,
            format,
            out: path,
        } => cmd_verify(max_n, &reprs, check_tol(tol)?, format, path.as_deref(), out),
        Command::Loggamma { repr, x, tol } => cmd_loggamma(&repr, x, check_tol(tol)?, out),
        Command::Identities { set, x, a, n, tol } => {
            cmd_identities(set, &x, &a, &n, check_tol(tol)?, out)
        }
    }
}

fn check_tol(tol: f64) -> Result<f64, CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(CliError::Domain(format!(
            "tolerance must be positive and finite, got {tol}"
        )))
    }
}

fn cmd_exact(kind: ExactKind, out: &mut dyn Write) -> Result<(), CliError> {
    let value = match kind {
        ExactKind::Catalan { n } => Ok(catalan_exact(n)),
        ExactKind::Ballot { n, k } => ballot(n, k),
        ExactKind::Fuss { m, p, r } => fuss_catalan(m, p, r),
        ExactKind::B3 { n, k, l } => b3(n, k, l),
        ExactKind::Dyck { n, list: true } => {
            let mut line = String::with_capacity(2 * n as usize + 1);
            let mut result = Ok(());
            for_each_dyck_word(n, |w| {
                if result.is_err() {
                    return;
                }
                line.clear();
                line.extend(
                    w.iter()
                        .map(|s| if *s == DyckSymbol::X { 'X' } else { 'Y' }),
                );
                result = writeln!(out, "{line}");
            })?;
            return Ok(result?);
        }
        ExactKind::Dyck { n, list: false } => count_dyck_words(n),
        ExactKind::Paths { n } => Ok(count_lattice_paths(n)),
    };
    match value {
        Ok(v) => writeln!(out, "{v}")?,
        // a proper fraction is still an exact answer; print it as p/q
        Err(ExactError::NonIntegerResult { value }) => writeln!(out, "{value}")?,
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn index(n: u32) -> Result<CatalanIndex, CliError> {
    CatalanIndex::new(n).map_err(CliError::from)
}

/// Evaluates one representation; a budget overrun still yields its row.
fn evaluate(
    repr: CatalanRepr,
    n: CatalanIndex,
    opts: &QuadOptions64,
) -> (VerificationRow, Option<CliError>) {
    let result: Result<ReprResult64, CatalanError64> = match repr {
        CatalanRepr::Feaux => catalan_via_feaux(n, opts),
        CatalanRepr::Duplication => catalan_via_duplication(n, opts),
    };
    let exact: ExactInteger = catalan_exact(n.get());
    match result {
        Ok(r) => (
            VerificationRow::from_result(repr.as_str(), &exact, &r),
            None,
        ),
        Err(CatalanError64::NonConvergence(partial)) => {
            let row = VerificationRow::from_result(repr.as_str(), &exact, &partial);
            let err = CatalanError64::NonConvergence(partial);
            (row, Some(err.into()))
        }
        Err(e) => {
            let row = VerificationRow {
                n: n.get(),
                repr: repr.as_str().to_owned(),
                exact: exact.to_string(),
                log_estimate: f64::NAN,
                abs_log_error: f64::NAN,
                n_evals: 0,
                converged: false,
            };
            (row, Some(e.into()))
        }
    }
}

fn cmd_integral(
    repr: CatalanRepr,
    n: u32,
    opts: QuadOptions64,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (row, err) = evaluate(repr, index(n)?, &opts);
    writeln!(
        out,
        "{}",
        serde_json::to_string(&row).expect("row serializes")
    )?;
    err.map_or(Ok(()), Err)
}

pub fn sweep(max_n: u32, reprs: &[CatalanRepr], tol: f64) -> Result<ReportDocument, CliError> {
    if max_n == 0 {
        return Err(CliError::Domain("--max-n must be at least 1".into()));
    }
    let mut reprs = reprs.to_vec();
    reprs.sort();
    reprs.dedup();
    let opts = QuadOptions64::with_tol(tol);
    let jobs: Vec<(u32, CatalanRepr)> = (1..=max_n)
        .flat_map(|n| reprs.iter().map(move |&r| (n, r)))
        .collect();
    let rows = jobs
        .par_iter()
        .map(|&(n, repr)| evaluate(repr, index(n).expect("n >= 1"), &opts).0)
        .collect();
    Ok(ReportDocument::new(Metadata::now(tol), rows))
}

fn cmd_verify(
    max_n: u32,
    reprs: &[CatalanRepr],
    tol: f64,
    format: Format,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    // open the target first so a bad path fails before the sweep
    let mut file = match path {
        Some(p) => Some(BufWriter::new(File::create(p).map_err(|source| {
            CliError::Output {
                path: p.display().to_string(),
                source,
            }
        })?)),
        None => None,
    };
    let doc = sweep(max_n, reprs, tol)?;
    let sink: &mut dyn Write = match file.as_mut() {
        Some(f) => f,
        None => out,
    };
    match format {
        Format::Json => writeln!(sink, "{}", doc.to_json().expect("report serializes"))?,
        Format::Csv => doc
            .write_csv(&mut *sink)
            .map_err(|e| CliError::Io(e.into()))?,
    }
    sink.flush()?;
    let failed = doc
        .rows
        .iter()
        .filter(|r| !r.passes(ROW_LOG_ERROR_BOUND))
        .count();
    if failed > 0 {
        return Err(CliError::CheckFailed(format!(
            "{failed} of {} rows failed",
            doc.rows.len()
        )));
    }
    Ok(())
}

fn cmd_loggamma(tag: &str, x: f64, tol: f64, out: &mut dyn Write) -> Result<(), CliError> {
    let repr: ReprId = tag.parse().map_err(CliError::Domain)?;
    let opts = QuadOptions64::with_tol(tol);
    // feaux natively yields log Γ(x+1)
    let (argument, value) = match repr {
        ReprId::Feaux => (x + 1.0, loggamma_feaux(x, &opts)?),
        _ => (x, loggamma(repr, x, &opts)?),
    };
    let reference = loggamma_reference(argument)?;
    let doc = json!({
        "repr": repr.as_str(),
        "x": x,
        "argument": argument,
        "value": value,
        "reference": reference,
        "deviation": (value - reference).abs(),
    });
    writeln!(out, "{doc}")?;
    Ok(())
}

fn cmd_identities(
    set: IdentitySet,
    xs: &[f64],
    as_: &[f64],
    ns: &[u32],
    tol: f64,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let opts = QuadOptions64::with_tol(tol);
    let grid = |given: &[f64], default: &[f64]| {
        if given.is_empty() {
            default.to_vec()
        } else {
            given.to_vec()
        }
    };
    let mut checks = Vec::new();
    if matches!(set, IdentitySet::Duplication | IdentitySet::All) {
        for x in grid(xs, &DUPLICATION_GRID) {
            let residual = duplication_residual(x)?.abs();
            checks.push(json!({
                "identity": "duplication",
                "x": x,
                "residual": residual,
                "bound": DUPLICATION_BOUND,
                "pass": residual <= DUPLICATION_BOUND,
            }));
        }
    }
    if matches!(set, IdentitySet::Raabe | IdentitySet::All) {
        for a in grid(as_, &RAABE_GRID) {
            let residual = raabe_residual(a, &opts)?;
            checks.push(json!({
                "identity": "raabe",
                "a": a,
                "residual": residual,
                "bound": RAABE_BOUND,
                "pass": residual <= RAABE_BOUND,
            }));
        }
    }
    if matches!(set, IdentitySet::Typo | IdentitySet::All) {
        let ns = if ns.is_empty() {
            TYPO_GRID.to_vec()
        } else {
            ns.to_vec()
        };
        for n in ns {
            let c = resolve_exponent_typo(index(n)?, &opts)?;
            checks.push(json!({
                "identity": "exponent",
                "n": n,
                "log_value_n_plus_2": c.log_value_n_plus_2,
                "log_value_n_plus_1": c.log_value_n_plus_1,
                "log_catalan": c.log_catalan,
                "log_four_catalan_prev": c.log_four_catalan_prev,
                "matching_exponent": c.matching_exponent(TYPO_BOUND),
                "bound": TYPO_BOUND,
                "pass": c.confirms_n_plus_2(TYPO_BOUND),
            }));
        }
    }
    let failed = checks.iter().filter(|c| c["pass"] != json!(true)).count();
    writeln!(out, "{}", json!({ "checks": checks, "pass": failed == 0 }))?;
    if failed > 0 {
        return Err(CliError::CheckFailed(format!(
            "{failed} identity checks failed"
        )));
    }
    Ok(())
}
