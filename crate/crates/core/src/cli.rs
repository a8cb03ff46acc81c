//! The `leibniz` command line. [`run_cli`] is the whole program; the binary
//! only prints what it returns.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input or usage.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::actions::ActionCase;
use crate::algebra::{LeibnizAlgebra, Side, StructureTensor};
use crate::cohomology::CocycleScenario;
use crate::corpus;
use crate::error::Error;
use crate::format::{parse_algebra, parse_rmatrix, AlgebraDocument};
use crate::matrix::Matrix;
use crate::report::{self, render, ReportInput};
use crate::rmatrix::CoboundaryCase;

#[derive(Debug, Parser)]
#[command(
    name = "leibniz",
    version,
    about = "Leibniz algebras, dual brackets, r-matrices and Yang-Baxter checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// Algebra definition file (`-` for stdin is not supported).
    file: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the chirality and print residual witnesses.
    Check(Common),
    /// Print adjoint and coadjoint matrices.
    Adjoint(Common),
    /// Check the module axioms of the actions on G (x) G.
    Actions {
        #[command(flatten)]
        common: Common,
        /// 1-4; all cases when omitted.
        #[arg(long)]
        case: Option<u8>,
    },
    /// Solve the dual-bracket systems, optionally verifying a given dual.
    Duals {
        #[command(flatten)]
        common: Common,
        /// Scenario label such as `LR-4-L`, or `all`.
        #[arg(long, default_value = "all")]
        scenario: String,
        #[arg(long)]
        dual: Option<PathBuf>,
    },
    /// Recover r-matrices whose coboundary is the given dual bracket.
    Rmatrix {
        #[command(flatten)]
        common: Common,
        /// right1, left1, right4, left4 or trivial.
        #[arg(long)]
        case: String,
        #[arg(long)]
        dual: PathBuf,
    },
    /// The dual bracket generated by an r-matrix.
    Coboundary {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        case: String,
        #[arg(long)]
        r: PathBuf,
    },
    /// Classical Yang-Baxter equation.
    Ybe(SideR),
    /// Generalized Yang-Baxter equation (ad-invariance of [[r,r]]).
    Gybe(SideR),
    /// Schouten bracket and triple products.
    Schouten(SideR),
    /// Run everything and print the JSON report.
    Report {
        file: PathBuf,
        #[arg(long)]
        dual: Option<PathBuf>,
        #[arg(long)]
        r: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List, print or extract the bundled example files.
    Corpus {
        #[command(subcommand)]
        action: Option<CorpusAction>,
    },
}

#[derive(Debug, Args)]
struct SideR {
    #[command(flatten)]
    common: Common,
    /// l/left or r/right.
    #[arg(long)]
    side: String,
    #[arg(long)]
    r: PathBuf,
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    List,
    Show { name: String },
    Extract { dir: PathBuf },
}

/// Everything a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String, success: bool) -> Self {
        CliOutput {
            code: if success { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(e: &Error) -> Self {
        let code = match e {
            Error::Chirality(_) => 1,
            _ => 2,
        };
        CliOutput {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

struct Loaded {
    text: String,
    doc: AlgebraDocument,
    alg: LeibnizAlgebra,
}

fn load_algebra(path: &PathBuf) -> Result<Loaded, Error> {
    let text = read(path)?;
    let doc = parse_algebra(&text)?;
    let alg = doc.to_algebra()?;
    Ok(Loaded { text, doc, alg })
}

fn load_dual(path: &PathBuf, dim: usize) -> Result<(String, StructureTensor), Error> {
    let text = read(path)?;
    let t = parse_algebra(&text)?.tensor()?;
    if t.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: t.dim(),
        });
    }
    Ok((text, t))
}

fn load_r(path: &PathBuf, dim: usize) -> Result<(String, Matrix), Error> {
    let text = read(path)?;
    let doc = parse_rmatrix(&text)?;
    if doc.dim != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: doc.dim,
        });
    }
    Ok((text, doc.matrix()))
}

fn parse_side(text: &str) -> Result<Side, Error> {
    Side::parse(text).ok_or_else(|| Error::InvalidArgument(format!("unknown side `{text}` (use l, left, r or right)")))
}

fn parse_case(text: &str) -> Result<CoboundaryCase, Error> {
    CoboundaryCase::parse(text)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown case `{text}` (use right1, left1, right4, left4 or trivial)")))
}

fn emit(format: Format, json: &Value, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => render(json),
        Format::Text => text(),
    }
}

fn entries_text(v: &Value) -> String {
    let items: Vec<String> = v
        .as_array()
        .into_iter()
        .flatten()
        .map(|e| {
            let idx: Vec<String> = e["index"].as_array().into_iter().flatten().map(|i| i.to_string()).collect();
            format!("  ({}) = {}", idx.join(","), e["value"].as_str().unwrap_or(""))
        })
        .collect();
    if items.is_empty() {
        "  (zero)\n".into()
    } else {
        items.join("\n") + "\n"
    }
}

fn matrix_text(label: &str, m: &Matrix) -> String {
    format!("{label} = {}\n", m.inline())
}

fn witness_text(v: &Value) -> String {
    if v.is_null() {
        "zero".into()
    } else {
        format!("nonzero at {} = {}", v["index"], v["value"].as_str().unwrap_or(""))
    }
}

/// Runs the command line `args` (including the program name).
pub fn run_cli<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliOutput::ok(rendered, true),
                _ => CliOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => CliOutput::fail(&e),
    }
}

fn dispatch(command: Command) -> Result<CliOutput, Error> {
    Ok(match command {
        Command::Check(c) => {
            let l = load_algebra(&c.file)?;
            let v = report::check_section(&l.alg);
            let mut v2 = v.clone();
            v2["declared_side"] = l.doc.declared_side.name().into();
            CliOutput::ok(
                emit(c.format, &v2, || {
                    let mut s = format!("chirality: {}\n", l.alg.chirality());
                    for side in Side::BOTH {
                        let _ = writeln!(s, "{side} residual: {}", witness_text(&v["residual_witnesses"][side.name()]));
                    }
                    s
                }),
                true,
            )
        }
        Command::Adjoint(c) => {
            let l = load_algebra(&c.file)?;
            let v = report::adjoint_section(l.alg.tensor());
            CliOutput::ok(
                emit(c.format, &v, || {
                    let a = crate::adjoint::adjoint_set(l.alg.tensor());
                    let co = crate::adjoint::coadjoint_set(&a);
                    let mut s = String::new();
                    for i in 0..a.dim() {
                        let k = i + 1;
                        s += &matrix_text(&format!("chi_{k}"), &a.chi[i]);
                        s += &matrix_text(&format!("chi'_{k}"), &a.chi_prime[i]);
                        s += &matrix_text(&format!("Y^{k}"), &a.y[i]);
                        s += &matrix_text(&format!("ad*l_{k}"), &co.ad_star_left[i]);
                        s += &matrix_text(&format!("ad*r_{k}"), &co.ad_star_right[i]);
                    }
                    s
                }),
                true,
            )
        }
        Command::Actions { common, case } => {
            let l = load_algebra(&common.file)?;
            let cases = match case {
                Some(n) => vec![ActionCase::from_number(n).ok_or_else(|| Error::InvalidArgument(format!("case must be 1-4, got {n}")))?],
                None => ActionCase::ALL.to_vec(),
            };
            let (v, ok) = report::actions_section(&l.alg, &cases);
            CliOutput::ok(
                emit(common.format, &v, || {
                    let mut s = String::new();
                    for c in &cases {
                        let e = &v[format!("case{}", c.number())];
                        if e["defined"] == false {
                            let _ = writeln!(s, "{c}: undefined ({})", e["reason"].as_str().unwrap_or(""));
                            continue;
                        }
                        for a in e["axioms"].as_array().into_iter().flatten() {
                            let _ = writeln!(
                                s,
                                "{c}: {} axiom {}: {}",
                                a["side"].as_str().unwrap_or(""),
                                a["axiom"],
                                if a["holds"] == true {
                                    "holds".to_string()
                                } else {
                                    witness_text(&a["witness"])
                                }
                            );
                        }
                    }
                    s
                }),
                ok,
            )
        }
        Command::Duals { common, scenario, dual } => {
            let l = load_algebra(&common.file)?;
            let scenarios = if scenario.eq_ignore_ascii_case("all") {
                CocycleScenario::ALL.to_vec()
            } else {
                let s =
                    CocycleScenario::parse(&scenario).ok_or_else(|| Error::InvalidArgument(format!("unknown scenario `{scenario}`")))?;
                if !s.admits(&l.alg) {
                    return Err(Error::Chirality(format!(
                        "scenario {s} is not defined for '{}' ({})",
                        l.alg.name(),
                        l.alg.chirality()
                    )));
                }
                vec![s]
            };
            let dual = dual.map(|p| load_dual(&p, l.alg.dim())).transpose()?;
            let (v, ok) = report::duals_section(&l.alg, &scenarios, dual.as_ref().map(|(_, t)| t))?;
            CliOutput::ok(
                emit(common.format, &v, || {
                    let mut s = String::new();
                    for e in v["scenarios"].as_array().into_iter().flatten() {
                        let params = e["family"]["parameters"].as_array().map_or(0, Vec::len);
                        let _ = writeln!(
                            s,
                            "{}: kernel dimension {params}, rank {}, quadratic residual {}",
                            e["scenario"].as_str().unwrap_or(""),
                            e["rank"],
                            if e["quadratic"]["identically_zero"] == true {
                                "identically zero"
                            } else {
                                "nonzero"
                            }
                        );
                    }
                    for d in v["dual"]["verdicts"].as_array().into_iter().flatten() {
                        let _ = writeln!(
                            s,
                            "dual under {}: cocycle {}, dual Leibniz {}",
                            d["scenario"].as_str().unwrap_or(""),
                            if d["cocycle_ok"] == true { "ok" } else { "fails" },
                            if d["dual_leibniz_ok"] == true { "ok" } else { "fails" }
                        );
                    }
                    s
                }),
                ok,
            )
        }
        Command::Rmatrix { common, case, dual } => {
            let l = load_algebra(&common.file)?;
            let case = parse_case(&case)?;
            let (_, ft) = load_dual(&dual, l.alg.dim())?;
            let (v, ok) = report::rmatrix_section(&l.alg, &ft, case)?;
            CliOutput::ok(
                emit(common.format, &v, || match crate::rmatrix::solve_r(&l.alg, &ft, case) {
                    Ok(crate::rmatrix::RSolution::Family(f)) => {
                        let mut s = format!("r-matrices: affine family of dimension {}\n", f.space.dim());
                        s += &matrix_text("particular", &f.particular().0);
                        for (i, (k, _)) in f.kernel().iter().enumerate() {
                            s += &matrix_text(&format!("t{}", i + 1), k);
                        }
                        s
                    }
                    _ => "r-matrices: infeasible\n".into(),
                }),
                ok,
            )
        }
        Command::Coboundary { common, case, r } => {
            let l = load_algebra(&common.file)?;
            let case = parse_case(&case)?;
            let (_, r) = load_r(&r, l.alg.dim())?;
            let v = report::coboundary_section(&l.alg, &r, case)?;
            CliOutput::ok(
                emit(common.format, &v, || {
                    format!("dual bracket ({case}):\n{}", entries_text(&v["dual"]))
                }),
                true,
            )
        }
        Command::Ybe(a) => {
            let (l, r, side) = side_r(&a)?;
            let (v, ok) = report::ybe_section(&l.alg, &r, side)?;
            CliOutput::ok(
                emit(a.common.format, &v, || {
                    if ok {
                        "CYBE: satisfied\n".into()
                    } else {
                        format!("CYBE: violated\nSchouten bracket:\n{}", entries_text(&v["schouten"]))
                    }
                }),
                ok,
            )
        }
        Command::Gybe(a) => {
            let (l, r, side) = side_r(&a)?;
            let (v, ok) = report::gybe_section(&l.alg, &r, side)?;
            CliOutput::ok(
                emit(a.common.format, &v, || {
                    if ok {
                        "GYBE: satisfied\n".into()
                    } else {
                        format!("GYBE: violated\n{}", entries_text(&v["residual"]))
                    }
                }),
                ok,
            )
        }
        Command::Schouten(a) => {
            let (l, r, side) = side_r(&a)?;
            let v = report::schouten_section(&l.alg, &r, side)?;
            CliOutput::ok(
                emit(a.common.format, &v, || {
                    let mut s = format!("[[r,r]] ({side}):\n{}", entries_text(&v["schouten"]));
                    for (k, t) in v["triple_products"].as_object().into_iter().flatten() {
                        let _ = write!(s, "{k}:\n{}", entries_text(t));
                    }
                    s
                }),
                true,
            )
        }
        Command::Report { file, dual, r, seed } => {
            let l = load_algebra(&file)?;
            let dual = dual.map(|p| load_dual(&p, l.alg.dim())).transpose()?;
            let r = r.map(|p| load_r(&p, l.alg.dim())).transpose()?;
            let input = ReportInput {
                algebra_text: &l.text,
                algebra: &l.alg,
                declared_side: l.doc.declared_side.name(),
                dual: dual.as_ref().map(|(t, f)| (t.as_str(), f)),
                r: r.as_ref().map(|(t, m)| (t.as_str(), m)),
                seed,
            };
            CliOutput::ok(render(&report::full_report(&input)?), true)
        }
        Command::Corpus { action } => match action.unwrap_or(CorpusAction::List) {
            CorpusAction::List => {
                let mut s = String::new();
                for (name, _) in corpus::FILES {
                    let _ = writeln!(s, "{name}");
                }
                CliOutput::ok(s, true)
            }
            CorpusAction::Show { name } => {
                let text = corpus::file(&name).ok_or_else(|| Error::InvalidArgument(format!("no bundled file `{name}`")))?;
                CliOutput::ok(text.to_string(), true)
            }
            CorpusAction::Extract { dir } => {
                std::fs::create_dir_all(&dir).map_err(|e| Error::InvalidArgument(format!("cannot create {}: {e}", dir.display())))?;
                let mut s = String::new();
                for (name, text) in corpus::FILES {
                    let path = dir.join(name);
                    std::fs::write(&path, text).map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
                    let _ = writeln!(s, "{}", path.display());
                }
                CliOutput::ok(s, true)
            }
        },
    })
}

fn side_r(a: &SideR) -> Result<(Loaded, Matrix, Side), Error> {
    let l = load_algebra(&a.common.file)?;
    let side = parse_side(&a.side)?;
    let (_, r) = load_r(&a.r, l.alg.dim())?;
    Ok((l, r, side))
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let out = run_cli(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
