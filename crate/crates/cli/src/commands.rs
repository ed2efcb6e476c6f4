//! Command definitions and dispatch. Every command yields an [`Output`]:
//! the text to print and the exit code (0 pass, 1 mathematical failure).
//! Input problems surface as [`CliError`] and exit with code 2.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use gdext::algebras::{check_gd, check_lie, check_novikov, AlgebraData, GdBialgebra};
use gdext::catalog::{self, CatalogItem, Family};
use gdext::conformal::{check_conformal_jacobi, check_conformal_skew, QuadraticLambdaBracket};
use gdext::extending::{check_datum_equivalence, check_gd_extending, extract_datum, unified_product};
use gdext::flag::{check_flag_equivalence, check_gd_flag, solve_flag_equivalence};
use gdext::{Error, Scalar, ValidationReport};
use serde_json::{json, Value};

use crate::format::{
    self, invalid, parse_str, read_algebra, read_datum, read_flag, read_text, DatumFile, ExtendingWitnessFile,
    FlagWitnessFile, FormatError,
};

#[derive(Debug, Parser)]
#[command(name = "gdext", version, about = "Exact checks and constructions for Gel'fand-Dorfman bialgebras")]
pub struct Cli {
    /// Report style: `text` for people, `machine` for one JSON object.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Lie,
    Novikov,
    Gd,
    Flag,
    Extending,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an algebra (lie, novikov, gd) or a datum over `--algebra`.
    Check {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Base algebra, required for `flag` and `extending`.
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Build the unified product of an algebra and a datum.
    Extend {
        algebra: PathBuf,
        datum: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read off the extending datum of a subalgebra; the complement of
    /// `--sub` (in increasing order) spans V.
    Extract {
        algebra: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the subalgebra itself.
        #[arg(long)]
        algebra_out: Option<PathBuf>,
    },
    /// Decide whether `datum_a` is obtained from `datum_b`, or check a given
    /// witness.
    Equiv {
        #[arg(long)]
        algebra: PathBuf,
        datum_a: PathBuf,
        datum_b: PathBuf,
        witness: Option<PathBuf>,
    },
    /// Check skew-symmetry and Jacobi of the quadratic λ-bracket.
    Conformal { algebra: PathBuf },
    /// Emit a catalog entry (`W b` or a family id followed by `b` and the
    /// family parameters); `list` shows the ids. Parameters may be negative,
    /// so options go before the id.
    Catalog {
        id: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// For families, also write the base algebra W(1,b).
        #[arg(long)]
        algebra_out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
}

pub struct Output {
    pub code: i32,
    pub text: String,
}

impl Output {
    fn new(passed: bool, text: String) -> Self {
        Output { code: if passed { 0 } else { 1 }, text }
    }
}

fn report_json(r: &ValidationReport) -> Value {
    let violations: Vec<Value> = r
        .violations()
        .iter()
        .map(|v| {
            json!({
                "condition": v.condition,
                "slots": v.slots,
                "tuple": v.tuple,
                "residual": v.residual.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "passed": r.passed(), "violations": violations })
}

/// Renders one or more labelled reports.
fn render_reports(fmt: OutputFormat, command: &str, parts: &[(&str, &ValidationReport)]) -> Output {
    let passed = parts.iter().all(|(_, r)| r.passed());
    let text = match fmt {
        OutputFormat::Text => parts.iter().map(|(name, r)| format!("{name}: {r}\n")).collect(),
        OutputFormat::Machine => {
            let mut obj = serde_json::Map::new();
            obj.insert("command".into(), json!(command));
            obj.insert("passed".into(), json!(passed));
            for (name, r) in parts {
                obj.insert((*name).to_string(), report_json(r));
            }
            format::to_text(&Value::Object(obj))
        }
    };
    Output::new(passed, text)
}

/// A failed precondition inside the library: mathematical failures carry a
/// report and exit 1, malformed requests exit 2.
fn library_failure(fmt: OutputFormat, command: &str, e: Error) -> Result<Output, CliError> {
    let report = match &e {
        Error::InvalidAlgebra(r) | Error::InvalidDatum(r) | Error::InvalidFlagDatum(r) => Some(r.clone()),
        Error::NotASubalgebra(_) | Error::NotInvertible(_) | Error::SearchInconclusive(_) => None,
        _ => return Err(CliError::Input(e.to_string())),
    };
    let text = match fmt {
        OutputFormat::Text => format!("{e}\n"),
        OutputFormat::Machine => format::to_text(&json!({
            "command": command,
            "passed": false,
            "error": e.to_string(),
            "report": report.as_ref().map(report_json),
        })),
    };
    Ok(Output { code: 1, text })
}

fn gd(data: AlgebraData, path: &Path) -> Result<GdBialgebra, CliError> {
    GdBialgebra::new(data)
        .map_err(|e| CliError::Input(format!("{}: base algebra is not a GD bialgebra: {e}", path.display())))
}

fn write_or_return(out: &Option<PathBuf>, text: String) -> Result<Option<String>, CliError> {
    match out {
        None => Ok(Some(text)),
        Some(p) => {
            std::fs::write(p, text).map_err(|source| CliError::Write { path: p.display().to_string(), source })?;
            Ok(None)
        }
    }
}

fn emit(fmt: OutputFormat, command: &str, key: &str, out: &Option<PathBuf>, text: String) -> Result<Output, CliError> {
    let value: Value = serde_json::from_str(&text).expect("own output parses");
    let written = write_or_return(out, text)?;
    let text = match (fmt, written) {
        (OutputFormat::Text, Some(t)) => t,
        (OutputFormat::Text, None) => format!("wrote {}\n", out.as_ref().unwrap().display()),
        (OutputFormat::Machine, _) => format::to_text(&json!({
            "command": command,
            "passed": true,
            "out": out.as_ref().map(|p| p.display().to_string()),
            key: value,
        })),
    };
    Ok(Output { code: 0, text })
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Check { path, kind, algebra } => check(fmt, path, *kind, algebra.as_deref()),
        Command::Extend { algebra, datum, out } => {
            let a = gd(read_algebra(algebra)?, algebra)?;
            let d = read_datum(datum)?.to_extending().map_err(|m| invalid(datum, m))?;
            match unified_product(&a, &d) {
                Ok(e) => emit(fmt, "extend", "algebra", out, format::print_algebra(e.data())),
                Err(e) => library_failure(fmt, "extend", e),
            }
        }
        Command::Extract { algebra, sub, out, algebra_out } => {
            let data = read_algebra(algebra)?;
            let n = data.dim();
            if let Some(&bad) = sub.iter().find(|&&i| i >= n) {
                return Err(CliError::Input(format!("--sub index {bad} out of range for dim {n}")));
            }
            let e = match GdBialgebra::new(data) {
                Ok(e) => e,
                Err(err) => return library_failure(fmt, "extract", err),
            };
            let v: Vec<usize> = (0..n).filter(|i| !sub.contains(i)).collect();
            match extract_datum(&e, sub, &v) {
                Ok((a, d)) => {
                    if let Some(p) = algebra_out {
                        write_or_return(&Some(p.clone()), format::print_algebra(a.data()))?;
                    }
                    emit(fmt, "extract", "datum", out, format::print_extending(&d))
                }
                Err(err) => library_failure(fmt, "extract", err),
            }
        }
        Command::Equiv { algebra, datum_a, datum_b, witness } => equiv(fmt, algebra, datum_a, datum_b, witness.as_deref()),
        Command::Conformal { algebra } => {
            let data = read_algebra(algebra)?;
            let b = QuadraticLambdaBracket::new(&data);
            let skew = check_conformal_skew(&b).map_err(|e| CliError::Input(e.to_string()))?;
            let jacobi = check_conformal_jacobi(&b).map_err(|e| CliError::Input(e.to_string()))?;
            Ok(render_reports(fmt, "conformal", &[("skew", &skew), ("jacobi", &jacobi)]))
        }
        Command::Catalog { id, params, out, algebra_out } => catalog_entry(fmt, id, params, out, algebra_out),
    }
}

fn check(fmt: OutputFormat, path: &Path, kind: Kind, algebra: Option<&Path>) -> Result<Output, CliError> {
    let base = || -> Result<GdBialgebra, CliError> {
        let p = algebra.ok_or_else(|| CliError::Input("--algebra is required for this kind".into()))?;
        gd(read_algebra(p)?, p)
    };
    let lib = |e: Error| CliError::Input(e.to_string());
    let report = match kind {
        Kind::Lie => check_lie(&read_algebra(path)?.bracket).map_err(lib)?,
        Kind::Novikov => check_novikov(&read_algebra(path)?.product).map_err(lib)?,
        Kind::Gd => check_gd(&read_algebra(path)?),
        Kind::Flag => check_gd_flag(&base()?, &read_flag(path)?).map_err(lib)?,
        Kind::Extending => {
            let d = read_datum(path)?.to_extending().map_err(|m| invalid(path, m))?;
            check_gd_extending(&base()?, &d).map_err(lib)?
        }
    };
    let name = format!("{kind:?}").to_lowercase();
    Ok(render_reports(fmt, "check", &[(&name, &report)]))
}

fn verdict(fmt: OutputFormat, equivalent: bool, witness: Option<Value>, witness_text: String, report: Option<&ValidationReport>) -> Output {
    let word = if equivalent { "EQUIVALENT" } else { "NOT EQUIVALENT" };
    let text = match fmt {
        OutputFormat::Text => {
            let mut t = format!("{word}\n");
            if equivalent && !witness_text.is_empty() {
                t.push_str(&format!("witness: {witness_text}\n"));
            }
            if let Some(r) = report {
                t.push_str(&format!("equivalence: {r}\n"));
            }
            t
        }
        OutputFormat::Machine => format::to_text(&json!({
            "command": "equiv",
            "passed": equivalent,
            "verdict": word,
            "witness": witness,
            "equivalence": report.map(report_json),
        })),
    };
    Output::new(equivalent, text)
}

fn equiv(fmt: OutputFormat, algebra: &Path, pa: &Path, pb: &Path, witness: Option<&Path>) -> Result<Output, CliError> {
    let a = gd(read_algebra(algebra)?, algebra)?;
    let (da, db) = (read_datum(pa)?, read_datum(pb)?);
    let lib = |e: Error| CliError::Input(e.to_string());
    match (&da, &db) {
        (DatumFile::Flag(fa), DatumFile::Flag(fb)) => {
            let d = fa.to_datum().map_err(|m| invalid(pa, m))?;
            let d2 = fb.to_datum().map_err(|m| invalid(pb, m))?;
            match witness {
                Some(wp) => {
                    let wf: FlagWitnessFile = parse_str(&wp.display().to_string(), &read_text(wp)?)?;
                    let w = wf.to_witness();
                    let r = check_flag_equivalence(&a, &d, &d2, &w).map_err(lib)?;
                    Ok(verdict(fmt, r.passed(), Some(json!(wf)), describe_flag_witness(&wf), Some(&r)))
                }
                None => match solve_flag_equivalence(&a, &d, &d2) {
                    Ok(Some(w)) => {
                        let wf = FlagWitnessFile::from_witness(&w);
                        Ok(verdict(fmt, true, Some(json!(wf)), describe_flag_witness(&wf), None))
                    }
                    Ok(None) => Ok(verdict(fmt, false, None, String::new(), None)),
                    Err(e) => library_failure(fmt, "equiv", e),
                },
            }
        }
        _ => {
            let d = da.to_extending().map_err(|m| invalid(pa, m))?;
            let d2 = db.to_extending().map_err(|m| invalid(pb, m))?;
            let wp = witness.ok_or_else(|| {
                CliError::Input("deciding equivalence of extending datums with dim V > 1 needs a witness file".into())
            })?;
            let wf: ExtendingWitnessFile = parse_str(&wp.display().to_string(), &read_text(wp)?)?;
            let w = match wf.to_witness() {
                Ok(w) => w,
                Err(m) => return Err(invalid(wp, m).into()),
            };
            let r = check_datum_equivalence(&a, &d, &d2, &w).map_err(lib)?;
            Ok(verdict(fmt, r.passed(), Some(json!(wf)), String::new(), Some(&r)))
        }
    }
}

fn describe_flag_witness(w: &FlagWitnessFile) -> String {
    let a0: Vec<String> = w.a0.iter().map(|x| x.0.to_string()).collect();
    format!("a0 = [{}], beta = {}", a0.join(", "), w.beta.0)
}

fn catalog_entry(
    fmt: OutputFormat,
    id: &str,
    params: &[String],
    out: &Option<PathBuf>,
    algebra_out: &Option<PathBuf>,
) -> Result<Output, CliError> {
    if id == "list" {
        let mut lines = vec!["W b".to_string()];
        for f in Family::ALL {
            let names = catalog::param_names(&f.to_string()).expect("known family");
            lines.push(format!("{f} {}", names.join(" ")));
        }
        let text = match fmt {
            OutputFormat::Text => lines.join("\n") + "\n",
            OutputFormat::Machine => format::to_text(&json!({ "command": "catalog", "passed": true, "ids": lines })),
        };
        return Ok(Output { code: 0, text });
    }
    let values = params
        .iter()
        .map(|p| p.parse::<Scalar>().map_err(|_| CliError::Input(format!("invalid rational parameter {p:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    match catalog::get(id, &values).map_err(|e| CliError::Input(e.to_string()))? {
        CatalogItem::Algebra(a) => emit(fmt, "catalog", "algebra", out, format::print_algebra(a.data())),
        CatalogItem::Flag { algebra, datum, .. } => {
            if let Some(p) = algebra_out {
                write_or_return(&Some(p.clone()), format::print_algebra(algebra.data()))?;
            }
            emit(fmt, "catalog", "datum", out, format::print_flag(&datum))
        }
    }
}
