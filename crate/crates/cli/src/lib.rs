//! The `crank-lab` command line: argument parsing, dispatch and reports.
//!
//! Every command reads one input file (`-` for standard input) and prints a
//! report. JSON reports have the shape
//! `{"command": ..., "input": {"path": ..., "sha256": ...}, "result": ...}`.
//! Exit codes: 0 on success, 1 on parse or validation failure, 2 when an
//! enumeration cap is exceeded. Caps come from `--caps` or the
//! `CRANKLAB_CAPS` environment variable (`key=value,...`).

mod input;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cranklab::chains::{
    chain_partitions, enumerate_independent_via_partitions, independence_via_partitions,
    lattice_bases, maximal_chains, poset_independent_via_partitions,
};
use cranklab::completion::{dm_completion, restrict_independence, union_closure};
use cranklab::hereditary::{partition_representability, HeredCollection};
use cranklab::lattice::{certify_rank, SsConvention};
use cranklab::{dot, format, rank, Caps, Lattice, Poset};
use serde_json::{json, Value};

pub use input::Input;
use report::names;

pub const CAPS_ENV: &str = "CRANKLAB_CAPS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] cranklab::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Lib(e) if e.is_limit() => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "crank-lab",
    version,
    about = "Superboolean rank, c-rank and lattice diagnostics"
)]
pub struct Cli {
    /// Enumeration caps, e.g. `rank=16,chains=5000`; overrides CRANKLAB_CAPS.
    #[arg(long, global = true)]
    pub caps: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    Matrix,
    Poset,
    Lattice,
    Hered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Matrix,
    Partitions,
    Both,
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Input file, or `-` for standard input.
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate an input.
    Validate {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = InputKind::Poset)]
        kind: InputKind,
    },
    /// Rank of a superboolean matrix with a triangular witness.
    Rank {
        #[command(flatten)]
        input: InputArg,
    },
    /// c-rank of a poset.
    Crank {
        #[command(flatten)]
        input: InputArg,
    },
    /// Height of a poset with a longest chain.
    Height {
        #[command(flatten)]
        input: InputArg,
    },
    /// Dedekind-MacNeille completion or union closure of a poset.
    Complete {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, conflicts_with = "uc", required_unless_present = "uc")]
        dm: bool,
        #[arg(long)]
        uc: bool,
    },
    /// Maximal chains of a lattice, top first.
    Chains {
        #[command(flatten)]
        input: InputArg,
    },
    /// Chain partitions of a lattice with their bases.
    Partitions {
        #[command(flatten)]
        input: InputArg,
        /// Only the partition of this chain (0-based, in `chains` order).
        #[arg(long)]
        chain: Option<usize>,
    },
    /// c-independent subsets of a poset or lattice.
    Independent {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, conflicts_with = "check", required_unless_present = "check")]
        enumerate: bool,
        /// Comma-separated element labels.
        #[arg(long)]
        check: Option<String>,
        #[arg(long, value_enum, default_value_t = Via::Matrix)]
        via: Via,
    },
    /// Join- and meet-irreducible elements of a lattice.
    Irreducibles {
        #[command(flatten)]
        input: InputArg,
        /// Count ss as one less than the meet-irreducibles below the top.
        #[arg(long)]
        ss_minus_one: bool,
    },
    /// The spec morphism and the distributivity checks.
    Spec {
        #[command(flatten)]
        input: InputArg,
    },
    /// Witness and chain certificates for c-rank = height.
    CertifyRank {
        #[command(flatten)]
        input: InputArg,
    },
    /// Structure matrix, its complement and the c-matrix of a poset.
    Matrices {
        #[command(flatten)]
        input: InputArg,
    },
    /// Hereditary collections.
    Hered {
        #[command(subcommand)]
        action: HeredAction,
    },
    /// Re-emit an input in normalized form.
    Export {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = InputKind::Poset)]
        kind: InputKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum HeredAction {
    /// Validate and summarize.
    Check {
        #[command(flatten)]
        input: InputArg,
    },
    /// Point replacement property.
    Pr {
        #[command(flatten)]
        input: InputArg,
    },
    /// Boolean representability via partitions.
    Represent {
        #[command(flatten)]
        input: InputArg,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Self::Validate { .. } => "validate",
            Self::Rank { .. } => "rank",
            Self::Crank { .. } => "crank",
            Self::Height { .. } => "height",
            Self::Complete { .. } => "complete",
            Self::Chains { .. } => "chains",
            Self::Partitions { .. } => "partitions",
            Self::Independent { .. } => "independent",
            Self::Irreducibles { .. } => "irreducibles",
            Self::Spec { .. } => "spec",
            Self::CertifyRank { .. } => "certify-rank",
            Self::Matrices { .. } => "matrices",
            Self::Hered { action } => match action {
                HeredAction::Check { .. } => "hered check",
                HeredAction::Pr { .. } => "hered pr",
                HeredAction::Represent { .. } => "hered represent",
            },
            Self::Export { .. } => "export",
        }
    }

    fn input(&self) -> &InputArg {
        match self {
            Self::Validate { input, .. }
            | Self::Rank { input }
            | Self::Crank { input }
            | Self::Height { input }
            | Self::Complete { input, .. }
            | Self::Chains { input }
            | Self::Partitions { input, .. }
            | Self::Independent { input, .. }
            | Self::Irreducibles { input, .. }
            | Self::Spec { input }
            | Self::CertifyRank { input }
            | Self::Matrices { input }
            | Self::Export { input, .. } => input,
            Self::Hered { action } => match action {
                HeredAction::Check { input }
                | HeredAction::Pr { input }
                | HeredAction::Represent { input } => input,
            },
        }
    }
}

/// What a command produced: a JSON result and, for some commands, a DOT
/// rendering or a native text form.
struct Output {
    result: Value,
    dot: Option<String>,
    text: Option<String>,
}

impl Output {
    fn json(result: Value) -> Self {
        Self {
            result,
            dot: None,
            text: None,
        }
    }
}

fn resolve_caps(flag: Option<&str>, env: Option<&str>) -> Result<Caps, CliError> {
    match flag.or(env) {
        Some(spec) => spec
            .parse()
            .map_err(|e| CliError::Usage(format!("caps: {e}"))),
        None => Ok(Caps::default()),
    }
}

fn parse_set(l: &Poset, spec: &str) -> Result<Vec<usize>, CliError> {
    let mut set = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            l.index_of(s)
                .ok_or_else(|| cranklab::Error::UnknownLabel(s.to_string()).into())
        })
        .collect::<Result<Vec<usize>, CliError>>()?;
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

/// The lattice when the poset is one.
fn as_lattice(p: &Poset) -> Option<Lattice> {
    Lattice::from_poset(p.clone()).ok()
}

fn validate(input: &Input, kind: InputKind, caps: &Caps) -> Result<Output, CliError> {
    Ok(match kind {
        InputKind::Matrix => {
            let m = input.matrix()?;
            Output {
                result: json!({"kind": "matrix", "rows": m.rows(), "cols": m.cols(), "boolean": m.is_boolean()}),
                dot: None,
                text: Some(format::matrix_to_text(&m)),
            }
        }
        InputKind::Poset => {
            let p = input.poset()?;
            Output {
                result: json!({
                    "kind": "poset",
                    "elements": p.labels(),
                    "covers": p.covering_relation().iter()
                        .map(|&(a, b)| [p.label(a), p.label(b)]).collect::<Vec<_>>(),
                    "lattice": as_lattice(&p).is_some(),
                }),
                dot: Some(dot::poset_to_dot(&p, "poset")),
                text: None,
            }
        }
        InputKind::Lattice => {
            let l = input.lattice()?;
            Output {
                result: json!({
                    "kind": "lattice",
                    "elements": l.labels(),
                    "bottom": l.label(l.bottom()),
                    "top": l.label(l.top()),
                    "distributive": l.is_distributive(),
                }),
                dot: Some(dot::poset_to_dot(l.poset(), "lattice")),
                text: None,
            }
        }
        InputKind::Hered => Output::json(report::hered_summary(&input.hered(caps)?)),
    })
}

fn independent(
    input: &Input,
    enumerate: bool,
    check: Option<&str>,
    via: Via,
    caps: &Caps,
) -> Result<Output, CliError> {
    let p = input.poset()?;
    let lattice = as_lattice(&p);
    let labels = p.labels();
    let use_matrix = via != Via::Partitions;
    let use_partitions = via != Via::Matrix;
    let mut result = serde_json::Map::new();
    result.insert("lattice".into(), json!(lattice.is_some()));
    if enumerate {
        let by_matrix = if use_matrix {
            Some(p.c_independent_sets(caps)?)
        } else {
            None
        };
        let by_partitions = if use_partitions {
            Some(match &lattice {
                Some(l) => enumerate_independent_via_partitions(l, caps)?,
                None => poset_independent_via_partitions(&p, caps)?,
            })
        } else {
            None
        };
        if let Some(sets) = &by_matrix {
            result.insert("matrix".into(), json!(report::name_sets(labels, sets)));
        }
        if let Some(sets) = &by_partitions {
            result.insert("partitions".into(), json!(report::name_sets(labels, sets)));
        }
        if let (Some(a), Some(b)) = (&by_matrix, &by_partitions) {
            let mut a = a.clone();
            a.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
            result.insert("agree".into(), json!(&a == b));
        }
    } else {
        let set = parse_set(&p, check.unwrap_or_default())?;
        result.insert("set".into(), json!(names(labels, &set)));
        let mut verdicts = Vec::new();
        if use_matrix {
            let w = p.c_independent(&set, caps)?;
            verdicts.push(w.is_some());
            result.insert(
                "matrix".into(),
                json!({
                    "independent": w.is_some(),
                    "witness": w.map(|w| report::witness(labels, labels, &w)),
                }),
            );
        }
        if use_partitions {
            let hit = match &lattice {
                Some(l) => independence_via_partitions(l, &set, caps)?.map(|i| json!({"chain": i})),
                None => {
                    let family = poset_independent_via_partitions(&p, caps)?;
                    family.contains(&set).then(|| json!({"completion": true}))
                }
            };
            verdicts.push(hit.is_some());
            result.insert(
                "partitions".into(),
                json!({"independent": hit.is_some(), "partition": hit}),
            );
        }
        result.insert("independent".into(), json!(verdicts[0]));
        if verdicts.len() == 2 {
            result.insert("agree".into(), json!(verdicts[0] == verdicts[1]));
        }
    }
    Ok(Output::json(Value::Object(result)))
}

fn hered(action: &HeredAction, input: &Input, caps: &Caps) -> Result<Output, CliError> {
    let h: HeredCollection = input.hered(caps)?;
    let g = h.ground();
    Ok(Output::json(match action {
        HeredAction::Check { .. } => report::hered_summary(&h),
        HeredAction::Pr { .. } => {
            let violation = h
                .pr_violation()
                .map(|(p, j)| json!({"point": g[p], "set": names(g, &j)}));
            json!({"satisfies_pr": violation.is_none(), "violation": violation})
        }
        HeredAction::Represent { .. } => {
            report::representability(&h, &partition_representability(&h, caps)?)
        }
    }))
}

fn export(input: &Input, kind: InputKind, caps: &Caps) -> Result<Output, CliError> {
    let (result, dot, text) = match kind {
        InputKind::Matrix => {
            let m = input.matrix()?;
            let json: Value =
                serde_json::from_str(&format::matrix_to_json(&m)).expect("valid json");
            (json, None, Some(format::matrix_to_text(&m)))
        }
        InputKind::Poset | InputKind::Lattice => {
            let p = if kind == InputKind::Lattice {
                input.lattice()?.poset().clone()
            } else {
                input.poset()?
            };
            let json: Value = serde_json::from_str(&format::poset_to_json(&p)).expect("valid json");
            (json, Some(dot::poset_to_dot(&p, "poset")), None)
        }
        InputKind::Hered => {
            let h = input.hered(caps)?;
            let json: Value = serde_json::from_str(&format::hered_to_json(&h)).expect("valid json");
            (json, None, None)
        }
    };
    Ok(Output { result, dot, text })
}

fn dispatch(command: &Command, input: &Input, caps: &Caps) -> Result<Output, CliError> {
    Ok(match command {
        Command::Validate { kind, .. } => validate(input, *kind, caps)?,
        Command::Rank { .. } => {
            let m = input.matrix()?;
            let (k, w) = rank::rank_with(&m, caps)?;
            let mut result = json!({
                "rows": m.rows(),
                "cols": m.cols(),
                "rank": k,
                "witness": report::witness(m.row_labels(), m.col_labels(), &w),
            });
            if m.is_square() && m.rows() <= caps.permanent {
                let perm = rank::permanent_with(&m, caps)?;
                result["permanent"] = json!(perm.symbol().to_string());
                result["nonsingular"] = json!(rank::is_nonsingular(&m)?.is_some());
            }
            Output::json(result)
        }
        Command::Crank { .. } => {
            let p = input.poset()?;
            let (k, w) = p.c_rank(caps)?;
            let labels = p.labels();
            Output::json(json!({
                "elements": labels,
                "c_rank": k,
                "independent": names(labels, &w.cols),
                "witness": report::witness(labels, labels, &w),
            }))
        }
        Command::Height { .. } => {
            let p = input.poset()?;
            let (h, chain) = p.height();
            Output::json(json!({"height": h, "chain": names(p.labels(), &chain)}))
        }
        Command::Complete { dm, .. } => {
            let p = input.poset()?;
            let f = if *dm {
                dm_completion(&p)?
            } else {
                union_closure(&p)?
            };
            let mut result = report::family(&f);
            if *dm {
                let r = restrict_independence(&p, caps)?;
                result["c_rank_poset"] = json!(r.c_rank_poset);
                result["c_rank_completion"] = json!(r.c_rank_completion);
                result["ranks_agree"] = json!(r.ranks_agree());
                result["restriction_agrees"] = json!(r.families_agree());
            }
            let name = if *dm { "dm" } else { "uc" };
            Output {
                result,
                dot: Some(dot::family_to_dot(&f, name)),
                text: None,
            }
        }
        Command::Chains { .. } => {
            let l = input.lattice()?;
            let chains = maximal_chains(&l, caps)?;
            Output::json(json!({
                "count": chains.len(),
                "chains": report::name_sets(l.labels(), &chains),
            }))
        }
        Command::Partitions { chain, .. } => {
            let l = input.lattice()?;
            let parts = chain_partitions(&l, caps)?;
            let selected: Vec<usize> = match chain {
                Some(i) if *i < parts.len() => vec![*i],
                Some(i) => {
                    return Err(CliError::Usage(format!(
                        "chain {i} out of range: the lattice has {} maximal chains",
                        parts.len()
                    )))
                }
                None => (0..parts.len()).collect(),
            };
            let out = selected
                .iter()
                .map(|&i| Ok(report::partition(&l, i, &parts[i], &parts[i].bases(caps)?)))
                .collect::<Result<Vec<Value>, CliError>>()?;
            let bases = lattice_bases(&l, caps)?;
            Output::json(json!({
                "partitions": out,
                "lattice_bases": report::name_sets(l.labels(), &bases),
            }))
        }
        Command::Independent {
            enumerate,
            check,
            via,
            ..
        } => independent(input, *enumerate, check.as_deref(), *via, caps)?,
        Command::Irreducibles { ss_minus_one, .. } => {
            let l = input.lattice()?;
            let convention = if *ss_minus_one {
                SsConvention::MiCountMinusOne
            } else {
                SsConvention::MiCount
            };
            Output::json(report::irreducibles(
                &l,
                &l.classify_irreducibles_with(convention),
            ))
        }
        Command::Spec { .. } => {
            let l = input.lattice()?;
            let s = l.spec_morphism()?;
            let mut result = report::spec(&l, &s);
            result["checks"] = json!(l.distributivity_checks()?);
            Output {
                result,
                dot: Some(dot::poset_to_dot(s.image.poset(), "spec")),
                text: None,
            }
        }
        Command::CertifyRank { .. } => {
            let l = input.lattice()?;
            Output::json(report::rank_certificate(&l, &certify_rank(&l, caps)?))
        }
        Command::Matrices { .. } => {
            let p = input.poset()?;
            let a = p.structure_matrix();
            let c = p.c_matrix();
            Output::json(json!({
                "elements": p.labels(),
                "structure": report::matrix_rows(&a),
                "complement": report::matrix_rows(&a.complement()),
                "c_matrix": report::matrix_rows(&c),
                "c_equals_complement": c == a.complement(),
                "c_equals_structure": c == a,
            }))
        }
        Command::Hered { action } => hered(action, input, caps)?,
        Command::Export { kind, .. } => export(input, *kind, caps)?,
    })
}

/// Renders a JSON value as indented `key: value` lines.
fn to_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        to_text(v, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}  -\n"));
                            to_text(item, indent + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", compact(v))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", compact(other))),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(
    command: &str,
    input: &Input,
    output: Output,
    format: OutputFormat,
) -> Result<String, CliError> {
    match format {
        OutputFormat::Json => {
            let report = json!({
                "command": command,
                "input": {"path": input.path, "sha256": input.sha256},
                "result": output.result,
            });
            Ok(serde_json::to_string_pretty(&report).expect("serializable") + "\n")
        }
        OutputFormat::Text => Ok(match output.text {
            Some(t) => t,
            None => {
                let mut out = format!(
                    "command: {command}\ninput: {} sha256:{}\n",
                    input.path, input.sha256
                );
                to_text(&output.result, 0, &mut out);
                out
            }
        }),
        OutputFormat::Dot => output
            .dot
            .ok_or_else(|| CliError::Usage(format!("`{command}` has no DOT output"))),
    }
}

fn error_report(command: &str, input: Option<&Input>, e: &CliError) -> String {
    let detail = match e {
        CliError::Lib(cranklab::Error::InvalidPoset(v)) => json!(v),
        CliError::Lib(cranklab::Error::Parse { line, column, .. }) => {
            json!({"line": line, "column": column})
        }
        _ => Value::Null,
    };
    let report = json!({
        "command": command,
        "input": input.map(|i| json!({"path": i.path, "sha256": i.sha256})),
        "error": {
            "message": e.to_string(),
            "exit_code": e.exit_code(),
            "detail": detail,
        },
    });
    serde_json::to_string_pretty(&report).expect("serializable") + "\n"
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code. `env_caps` is the value of `CRANKLAB_CAPS`, if set.
pub fn run<I, T>(args: I, env_caps: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let command = cli.command.name();
    let caps = match resolve_caps(cli.caps.as_deref(), env_caps) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "crank-lab: {e}");
            return e.exit_code();
        }
    };
    let input = match Input::read(&cli.command.input().input) {
        Ok(i) => i,
        Err(e) => {
            let _ = writeln!(err, "crank-lab: {e}");
            return e.exit_code();
        }
    };
    let outcome =
        dispatch(&cli.command, &input, &caps).and_then(|o| render(command, &input, o, cli.format));
    match outcome {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "crank-lab: {command}: {e}");
            if cli.format == OutputFormat::Json {
                let _ = out.write_all(error_report(command, Some(&input), &e).as_bytes());
            }
            e.exit_code()
        }
    }
}
