//! Command-line front end. `run` parses argv, dispatches, and returns the
//! process exit code: 0 ok, 1 check failed, 2 usage error, 3 budget.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cas::slack::{slack_ideal, toric_ideal_bounded};
use crate::cas::text::dump;
use crate::cas::{ideal_contains, Budget, Ideal};
use crate::certify::{certify_expression, certify_poset, verify_certificate, Certificate, Expr, Outcome, Refusal};
use crate::graph::{support_blocks_at, vertex_split_condition, SplitCondition, CYCLE_CAP};
use crate::linalg::{is_2level, is_morally_2level, support_rank};
use crate::order_polytope::order_polytope;
use crate::polytope::{self as pt, face_lattice, CombPolytope, PolytopeJson};
use crate::poset::{self as ps, all_posets, Poset, PosetJson};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
    Dot,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: Budget,
    pub max_cycles: usize,
    pub format: Format,
    pub seed: u64,
}

#[derive(Parser, Debug)]
#[command(name = "slackcert", version, about = "Order polytopes, slack ideals and graphicality certificates")]
struct Cli {
    #[command(flatten)]
    globals: Globals,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Globals {
    /// S-pair reductions allowed per Gröbner computation
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget_spairs: u64,
    /// Largest degree of a basis element
    #[arg(long, global = true, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
    budget_degree: u32,
    /// Cap on enumerated chordless cycles
    #[arg(long, global = true, default_value_t = CYCLE_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    max_cycles: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Poset files: validate, combine, draw
    #[command(subcommand)]
    Poset(PosetCmd),
    #[command(subcommand)]
    Orderpoly(OrderpolyCmd),
    /// Polytope operations; sources are JSON files or `builtin:<expr>`
    #[command(subcommand)]
    Poly(PolyCmd),
    #[command(subcommand)]
    Check(CheckCmd),
    #[command(subcommand)]
    Ideal(IdealCmd),
    #[command(subcommand)]
    Cert(CertCmd),
    #[command(subcommand)]
    Sweep(SweepCmd),
}

#[derive(Subcommand, Debug)]
enum PosetCmd {
    Validate { file: String },
    /// Apply an operation; labels follow the poset files they refer to
    Op {
        #[arg(value_enum)]
        op: PosetOp,
        args: Vec<String>,
    },
    Viz { file: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PosetOp {
    /// P
    Reverse,
    /// P Q
    Join,
    /// P Q
    OrdinalSum,
    /// P Q
    DirectSum,
    /// P a Q b
    PartialOrdinalSum,
    /// P a b
    SplitCover,
    /// P c
    SplitExtremal,
    /// P c
    SplitMaximal,
    /// P c
    SplitMinimal,
}

#[derive(Subcommand, Debug)]
enum OrderpolyCmd {
    Build { file: String },
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    Op {
        #[arg(value_enum)]
        op: PolyOp,
        args: Vec<String>,
    },
    Equiv { a: String, b: String },
    /// Face lattice as DOT
    Viz { source: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolyOp {
    /// P
    Dual,
    /// P Q
    Join,
    /// P Q
    Product,
    /// P v Q w
    VertexSum,
    /// P v
    VertexSplit,
    /// P F
    FacetWedge,
    /// P F Q G
    FacetProduct,
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    TwoLevel { source: String },
    MorallyTwoLevel { source: String },
    SplitSafe { source: String, vertex: String },
}

#[derive(Subcommand, Debug)]
enum IdealCmd {
    Slack { source: String },
    Toric { source: String },
    Equal { source: String },
}

#[derive(Subcommand, Debug)]
enum CertCmd {
    /// Certify a poset file, or an operation expression with --expr
    Make {
        file: Option<String>,
        #[arg(long, conflicts_with = "file")]
        expr: Option<String>,
    },
    /// Check a certificate against a target polytope or poset
    Verify { certificate: String, target: String },
}

#[derive(Subcommand, Debug)]
enum SweepCmd {
    Posets {
        #[arg(long)]
        max_elements: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult = Result<(String, i32), CliError>;

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Cycle(_) => "Cycle",
        Error::UnknownLabel(_) => "UnknownLabel",
        Error::DuplicateLabel(_) => "DuplicateLabel",
        Error::LabelCollision(_) => "LabelCollision",
        Error::NotMaximal(_) => "NotMaximal",
        Error::NotMinimal(_) => "NotMinimal",
        Error::NotExtremal(_) => "NotExtremal",
        Error::NotACover(..) => "NotACover",
        Error::NotAVertex(_) => "NotAVertex",
        Error::NotAFacet(_) => "NotAFacet",
        Error::FlagNotFound(_) => "FlagNotFound",
        Error::FaceCapExceeded(_) => "FaceCapExceeded",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::InvalidSupport(_) => "InvalidSupport",
        Error::CapExceeded { .. } => "CapExceeded",
        Error::InvalidOrientation(_) => "InvalidOrientation",
        Error::MissingSplitData => "MissingSplitData",
        Error::BudgetExceeded(_) => "BudgetExceeded",
        Error::VariableMismatch(..) => "VariableMismatch",
        Error::UnsafeSplit { .. } => "UnsafeSplit",
        Error::UnknownBase(_) => "UnknownBase",
        Error::NotGraphicBase(_) => "NotGraphicBase",
        Error::NoCaseMatches(_) => "NoCaseMatches",
        Error::Parse(_) => "Parse",
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) | Error::CapExceeded { .. } | Error::FaceCapExceeded(_) => EXIT_BUDGET,
        Error::Parse(_)
        | Error::UnknownLabel(_)
        | Error::NotAVertex(_)
        | Error::NotAFacet(_)
        | Error::NotACover(..)
        | Error::NotMaximal(_)
        | Error::NotMinimal(_)
        | Error::NotExtremal(_)
        | Error::LabelCollision(_)
        | Error::VariableMismatch(..) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

/// Run with process stdio.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = writeln!(err, "{}", json!({"error": "Usage", "message": e.to_string().trim_end(), "exit_code": EXIT_USAGE}));
            return EXIT_USAGE;
        }
    };
    let g = &cli.globals;
    let cfg = RunConfig {
        budget: Budget {
            max_spairs: g.budget_spairs as usize,
            max_degree: g.budget_degree,
        },
        max_cycles: g.max_cycles as usize,
        format: g.format,
        seed: g.seed,
    };
    match dispatch(&cli.cmd, &cfg) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "{}", json!({"error": "Usage", "message": m, "exit_code": EXIT_USAGE, "seed": cfg.seed}));
            EXIT_USAGE
        }
        Err(CliError::Lib(e)) => {
            let code = exit_code(&e);
            let _ = writeln!(
                err,
                "{}",
                json!({"error": error_kind(&e), "message": e.to_string(), "detail": format!("{e:?}"), "exit_code": code, "seed": cfg.seed})
            );
            code
        }
    }
}

// ------------------------------------------------------------ rendering

fn render(v: impl Serialize, cfg: &RunConfig) -> String {
    let mut v = serde_json::to_value(v).expect("serializable output");
    if !v.is_object() {
        v = json!({ "result": v });
    }
    v.as_object_mut().unwrap().insert("seed".into(), json!(cfg.seed));
    match cfg.format {
        Format::Text => {
            let mut s = String::new();
            for (k, x) in v.as_object().unwrap() {
                let x = match x {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                s.push_str(&format!("{k}: {x}\n"));
            }
            s
        }
        _ => {
            let mut s = serde_json::to_string_pretty(&v).unwrap();
            s.push('\n');
            s
        }
    }
}

fn render_dot(dot: &str, cfg: &RunConfig) -> String {
    format!("// seed={}\n{dot}", cfg.seed)
}

// --------------------------------------------------------------- loading

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
}

fn read_json(path: &str) -> Result<Value, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::Usage(format!("{path}: invalid JSON: {e}")))
}

fn load_poset(path: &str) -> Result<Poset, CliError> {
    let j: PosetJson = serde_json::from_value(read_json(path)?)
        .map_err(|e| CliError::Usage(format!("{path}: not a poset: {e}")))?;
    Ok(Poset::from_json(&j)?)
}

/// Polytope from `builtin:<expr>`, a polytope JSON file, or a poset JSON
/// file (taken as its order polytope).
fn load_polytope(src: &str) -> Result<CombPolytope, CliError> {
    if let Some(e) = src.strip_prefix("builtin:") {
        return Ok(Expr::parse(e)?.evaluate()?);
    }
    let v = read_json(src)?;
    if v.get("support").is_some() {
        let j: PolytopeJson =
            serde_json::from_value(v).map_err(|e| CliError::Usage(format!("{src}: not a polytope: {e}")))?;
        Ok(CombPolytope::from_json(j)?)
    } else if v.get("elements").is_some() {
        let j: PosetJson = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("{src}: not a poset: {e}")))?;
        Ok(order_polytope(&Poset::from_json(&j)?))
    } else {
        Err(CliError::Usage(format!("{src}: neither a polytope nor a poset")))
    }
}

fn arity(args: &[String], n: usize, shape: &str) -> Result<(), CliError> {
    if args.len() != n {
        return Err(CliError::Usage(format!("expected arguments: {shape}")));
    }
    Ok(())
}

// -------------------------------------------------------------- dispatch

fn dispatch(cmd: &Cmd, cfg: &RunConfig) -> CliResult {
    match cmd {
        Cmd::Poset(c) => poset_cmd(c, cfg),
        Cmd::Orderpoly(OrderpolyCmd::Build { file }) => {
            let p = order_polytope(&load_poset(file)?);
            Ok((polytope_out(&p, cfg), EXIT_OK))
        }
        Cmd::Poly(c) => poly_cmd(c, cfg),
        Cmd::Check(c) => check_cmd(c, cfg),
        Cmd::Ideal(c) => ideal_cmd(c, cfg),
        Cmd::Cert(c) => cert_cmd(c, cfg),
        Cmd::Sweep(SweepCmd::Posets { max_elements }) => sweep(*max_elements, cfg),
    }
}

fn polytope_out(p: &CombPolytope, cfg: &RunConfig) -> String {
    match cfg.format {
        Format::Dot => render_dot(&p.to_dot(), cfg),
        _ => render(p.to_json(), cfg),
    }
}

fn poset_out(p: &Poset, cfg: &RunConfig) -> String {
    match cfg.format {
        Format::Dot => render_dot(&p.to_dot(), cfg),
        _ => render(p.covers_json(), cfg),
    }
}

fn poset_cmd(c: &PosetCmd, cfg: &RunConfig) -> CliResult {
    match c {
        PosetCmd::Validate { file } => {
            let p = load_poset(file)?;
            if cfg.format == Format::Dot {
                return Ok((render_dot(&p.to_dot(), cfg), EXIT_OK));
            }
            let rho = p.rank_function();
            let w3 = p.find_antichain3();
            let out = json!({
                "valid": true,
                "elements": p.elements(),
                "covers": p.cover_labels(),
                "ranked": rho.is_some(),
                "rank": p.rank(),
                "width": p.width(),
                "antichain3": w3.map(|w| w.iter().map(|&i| p.label(i).to_string()).collect::<Vec<_>>()),
                "filters": p.filters().len(),
            });
            Ok((render(out, cfg), EXIT_OK))
        }
        PosetCmd::Viz { file } => Ok((render_dot(&load_poset(file)?.to_dot(), cfg), EXIT_OK)),
        PosetCmd::Op { op, args } => {
            let r = match op {
                PosetOp::Reverse => {
                    arity(args, 1, "P")?;
                    load_poset(&args[0])?.reverse()
                }
                PosetOp::Join | PosetOp::OrdinalSum | PosetOp::DirectSum => {
                    arity(args, 2, "P Q")?;
                    let (p, q) = (load_poset(&args[0])?, load_poset(&args[1])?);
                    match op {
                        PosetOp::Join => ps::op_join(&p, &q)?,
                        PosetOp::OrdinalSum => ps::op_ordinal_sum(&p, &q)?,
                        _ => ps::op_direct_sum(&p, &q)?,
                    }
                }
                PosetOp::PartialOrdinalSum => {
                    arity(args, 4, "P a Q b")?;
                    let (p, q) = (load_poset(&args[0])?, load_poset(&args[2])?);
                    ps::op_partial_ordinal_sum(&p, &args[1], &q, &args[3])?
                }
                PosetOp::SplitCover => {
                    arity(args, 3, "P a b")?;
                    ps::split_cover(&load_poset(&args[0])?, &args[1], &args[2])?
                }
                PosetOp::SplitExtremal | PosetOp::SplitMaximal | PosetOp::SplitMinimal => {
                    arity(args, 2, "P c")?;
                    let p = load_poset(&args[0])?;
                    match op {
                        PosetOp::SplitExtremal => ps::split_extremal(&p, &args[1])?,
                        PosetOp::SplitMaximal => ps::split_maximal(&p, &args[1])?,
                        _ => ps::split_minimal(&p, &args[1])?,
                    }
                }
            };
            Ok((poset_out(&r, cfg), EXIT_OK))
        }
    }
}

fn poly_cmd(c: &PolyCmd, cfg: &RunConfig) -> CliResult {
    match c {
        PolyCmd::Op { op, args } => {
            let r = match op {
                PolyOp::Dual => {
                    arity(args, 1, "P")?;
                    pt::dual(&load_polytope(&args[0])?)
                }
                PolyOp::Join | PolyOp::Product => {
                    arity(args, 2, "P Q")?;
                    let (p, q) = (load_polytope(&args[0])?, load_polytope(&args[1])?);
                    match op {
                        PolyOp::Join => pt::join(&p, &q)?,
                        _ => pt::product(&p, &q)?,
                    }
                }
                PolyOp::VertexSum | PolyOp::FacetProduct => {
                    arity(args, 4, "P label Q label")?;
                    let (p, q) = (load_polytope(&args[0])?, load_polytope(&args[2])?);
                    match op {
                        PolyOp::VertexSum => pt::vertex_sum(&p, &args[1], &q, &args[3])?,
                        _ => pt::facet_product(&p, &args[1], &q, &args[3])?,
                    }
                }
                PolyOp::VertexSplit | PolyOp::FacetWedge => {
                    arity(args, 2, "P label")?;
                    let p = load_polytope(&args[0])?;
                    match op {
                        PolyOp::VertexSplit => pt::vertex_split(&p, &args[1])?,
                        _ => pt::facet_wedge(&p, &args[1])?,
                    }
                }
            };
            Ok((polytope_out(&r, cfg), EXIT_OK))
        }
        PolyCmd::Equiv { a, b } => {
            let (p, q) = (load_polytope(a)?, load_polytope(b)?);
            let iso = pt::isomorphism(&p, &q);
            let eq = iso.is_some();
            let out = json!({
                "equivalent": eq,
                "facet_map": iso.as_ref().map(|i| i.facets.iter().map(|&k| q.facets()[k].clone()).collect::<Vec<_>>()),
                "vertex_map": iso.as_ref().map(|i| i.vertices.iter().map(|&k| q.vertices()[k].clone()).collect::<Vec<_>>()),
            });
            Ok((render(out, cfg), if eq { EXIT_OK } else { EXIT_FAILED }))
        }
        PolyCmd::Viz { source } => {
            let p = load_polytope(source)?;
            let fl = face_lattice(&p)?;
            Ok((render_dot(&fl.to_dot(&p), cfg), EXIT_OK))
        }
    }
}

fn check_cmd(c: &CheckCmd, cfg: &RunConfig) -> CliResult {
    let flag = |name: &str, ok: bool, extra: Value| {
        let mut v = json!({ "check": name, "passed": ok });
        if let Value::Object(m) = extra {
            v.as_object_mut().unwrap().extend(m);
        }
        (render(v, cfg), if ok { EXIT_OK } else { EXIT_FAILED })
    };
    match c {
        CheckCmd::TwoLevel { source } => {
            let p = load_polytope(source)?;
            Ok(flag("two-level", is_2level(&p), json!({"dim": p.dim(), "support_rank": support_rank(p.support())})))
        }
        CheckCmd::MorallyTwoLevel { source } => {
            let p = load_polytope(source)?;
            Ok(flag(
                "morally-two-level",
                is_morally_2level(&p),
                json!({"dim": p.dim(), "support_rank": support_rank(p.support())}),
            ))
        }
        CheckCmd::SplitSafe { source, vertex } => {
            let p = load_polytope(source)?;
            let c = vertex_split_condition(&p, vertex)?;
            let extra = match &c {
                SplitCondition::Unsafe { left, right } => {
                    let g = crate::graph::NonIncidenceGraph::new(&p);
                    let names = |s: &[usize]| s.iter().map(|&u| g.node_label(u).to_string()).collect::<Vec<_>>();
                    json!({"condition": c.name(), "left": names(left), "right": names(right)})
                }
                _ => json!({"condition": c.name()}),
            };
            Ok(flag("split-safe", c.is_safe(), extra))
        }
    }
}

fn basis_strings(i: &Ideal, cfg: &RunConfig) -> Result<Vec<String>, CliError> {
    Ok(i.groebner_basis(cfg.budget)?.iter().map(|g| g.to_string()).collect())
}

fn ideal_cmd(c: &IdealCmd, cfg: &RunConfig) -> CliResult {
    let text = |i: &Ideal, what: &str| -> Result<String, CliError> {
        let b = i.groebner_basis(cfg.budget)?;
        Ok(dump(b, i.nvars(), &[format!("{what}, reduced basis (grevlex)"), format!("seed={}", cfg.seed)]))
    };
    match c {
        IdealCmd::Slack { source } | IdealCmd::Toric { source } => {
            let p = load_polytope(source)?;
            let (i, what) = match c {
                IdealCmd::Slack { .. } => (slack_ideal(&p, cfg.budget)?, "slack ideal"),
                _ => (toric_ideal_bounded(&p, Some(cfg.max_cycles))?, "toric ideal"),
            };
            if cfg.format == Format::Text {
                return Ok((text(&i, what)?, EXIT_OK));
            }
            let out = json!({
                "ideal": what,
                "nvars": i.nvars(),
                "generators": i.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "groebner_basis": basis_strings(&i, cfg)?,
            });
            Ok((render(out, cfg), EXIT_OK))
        }
        IdealCmd::Equal { source } => {
            let p = load_polytope(source)?;
            let s = slack_ideal(&p, cfg.budget)?;
            let t = toric_ideal_bounded(&p, Some(cfg.max_cycles))?;
            let toric_in_slack = ideal_contains(&s, &t, cfg.budget)?;
            let slack_in_toric = ideal_contains(&t, &s, cfg.budget)?;
            let eq = toric_in_slack && slack_in_toric;
            let out = json!({
                "equal": eq,
                "slack_in_toric": slack_in_toric,
                "toric_in_slack": toric_in_slack,
                "nvars": s.nvars(),
                "slack_basis": basis_strings(&s, cfg)?,
                "toric_basis": basis_strings(&t, cfg)?,
            });
            Ok((render(out, cfg), if eq { EXIT_OK } else { EXIT_FAILED }))
        }
    }
}

fn cert_cmd(c: &CertCmd, cfg: &RunConfig) -> CliResult {
    match c {
        CertCmd::Make { file, expr } => match (file, expr) {
            (_, Some(e)) => {
                let c = certify_expression(&Expr::parse(e)?, cfg.budget)?;
                Ok((render(&c, cfg), EXIT_OK))
            }
            (Some(f), None) => match certify_poset(&load_poset(f)?, cfg.budget)? {
                Outcome::Certified(c) => Ok((render(&c, cfg), EXIT_OK)),
                Outcome::Refused(r) => Ok((render(&r, cfg), EXIT_FAILED)),
            },
            (None, None) => Err(CliError::Usage("cert make needs a poset file or --expr".into())),
        },
        CertCmd::Verify { certificate, target } => {
            let cert: Certificate = serde_json::from_value(read_json(certificate)?)
                .map_err(|e| CliError::Usage(format!("{certificate}: not a certificate: {e}")))?;
            let t = load_polytope(target)?;
            let rep = verify_certificate(&cert, &t, cfg.budget);
            let ok = rep.passed();
            Ok((render(json!({"passed": ok, "checks": rep.checks}), cfg), if ok { EXIT_OK } else { EXIT_FAILED }))
        }
    }
}

// ----------------------------------------------------------------- sweep

#[derive(Serialize)]
struct SweepFailure {
    covers: Vec<(String, String)>,
    elements: Vec<String>,
    check: String,
    detail: String,
}

#[derive(Default, Serialize)]
struct SweepReport {
    max_elements: usize,
    posets: usize,
    posets_by_size: Vec<usize>,
    certified: usize,
    refused_antichain: usize,
    refused_unranked: usize,
    ideal_checks: usize,
    budget_exceeded: Vec<Vec<(String, String)>>,
    failures: Vec<SweepFailure>,
}

/// Ideal containment is attempted only below this many slack variables.
const SWEEP_IDEAL_VARS: usize = 12;

fn sweep(max_elements: usize, cfg: &RunConfig) -> CliResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rep = SweepReport {
        max_elements,
        ..Default::default()
    };
    for n in 0..=max_elements {
        let ps = all_posets(n);
        rep.posets_by_size.push(ps.len());
        for p in &ps {
            rep.posets += 1;
            sweep_one(p, cfg, &mut rng, &mut rep);
        }
    }
    let code = if rep.failures.is_empty() { EXIT_OK } else { EXIT_FAILED };
    Ok((render(&rep, cfg), code))
}

fn sweep_one(p: &Poset, cfg: &RunConfig, rng: &mut ChaCha8Rng, rep: &mut SweepReport) {
    let mut fail = |check: &str, detail: String| {
        rep.failures.push(SweepFailure {
            covers: p.cover_labels(),
            elements: p.elements().to_vec(),
            check: check.into(),
            detail,
        });
    };
    let o = order_polytope(p);
    if !is_2level(&o) {
        fail("two-level", format!("support rank {} for dim {}", support_rank(o.support()), o.dim()));
    }
    // filters form a lattice; reversal complements them
    let filters = p.filters();
    let sets: std::collections::HashSet<_> = filters.iter().map(|f| f.members.clone()).collect();
    for a in &filters {
        for b in &filters {
            let mut u = a.members.clone();
            u.union_with(&b.members);
            let mut i = a.members.clone();
            i.intersect_with(&b.members);
            if !sets.contains(&u) || !sets.contains(&i) {
                fail("filter lattice", "union or intersection is not a filter".into());
            }
        }
    }
    let rev = p.reverse();
    let rsets: std::collections::HashSet<_> = rev.filters().into_iter().map(|f| f.members).collect();
    let comp: std::collections::HashSet<_> = filters
        .iter()
        .map(|f| {
            let mut c = f.members.clone();
            c.toggle_range(..);
            c
        })
        .collect();
    if rsets != comp {
        fail("reverse", "filters of the reverse are not the complements".into());
    }
    // certificate or refusal
    let expect_refusal = p.find_antichain3().is_some() || p.rank_function().is_none();
    match certify_poset(p, cfg.budget) {
        Ok(Outcome::Certified(c)) => {
            rep.certified += 1;
            if expect_refusal {
                fail("certificate", "certified a poset outside the hypotheses".into());
            }
            let r = verify_certificate(&c, &o, cfg.budget);
            if !r.passed() {
                let bad: Vec<_> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
                fail("certificate", format!("verification failed: {bad:?}"));
            }
        }
        Ok(Outcome::Refused(r)) => {
            match &r {
                Refusal::ThreeAntichain { witness } => {
                    rep.refused_antichain += 1;
                    let idx: Result<Vec<usize>, _> = witness.iter().map(|s| p.index_of(s)).collect();
                    if !idx.map(|i| i.len() == 3 && p.is_antichain(&i)).unwrap_or(false) {
                        fail("refusal", format!("bad antichain witness {witness:?}"));
                    }
                }
                Refusal::Unranked { .. } => rep.refused_unranked += 1,
            }
            if !expect_refusal {
                fail("refusal", format!("refused a certifiable poset: {r:?}"));
            }
        }
        Err(Error::BudgetExceeded(_)) => rep.budget_exceeded.push(p.cover_labels()),
        Err(e) => fail("certificate", e.to_string()),
    }
    // a seeded vertex: connectivity test against the block detector
    if let Some(v) = (0..o.num_vertices()).collect::<Vec<_>>().choose(rng) {
        match vertex_split_condition(&o, &o.vertices()[*v]) {
            Ok(SplitCondition::PyramidApex) => {}
            Ok(c) => {
                let blocks = support_blocks_at(o.support(), *v).len();
                if c.is_safe() != (blocks <= 1) {
                    fail("split-safety", format!("{} vs {blocks} support blocks", c.name()));
                }
            }
            Err(e) => fail("split-safety", e.to_string()),
        }
    }
    // toric ideal contains the slack ideal
    if o.num_slack_variables() <= SWEEP_IDEAL_VARS && p.find_antichain3().is_none() {
        rep.ideal_checks += 1;
        let res = slack_ideal(&o, cfg.budget).and_then(|s| {
            let t = toric_ideal_bounded(&o, Some(cfg.max_cycles))?;
            ideal_contains(&t, &s, cfg.budget)
        });
        match res {
            Ok(true) => {}
            Ok(false) => fail("slack in toric", "a slack generator is not in the toric ideal".into()),
            Err(Error::BudgetExceeded(_) | Error::CapExceeded { .. }) => rep.budget_exceeded.push(p.cover_labels()),
            Err(e) => fail("slack in toric", e.to_string()),
        }
    }
}
