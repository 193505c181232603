//! The `relmat` command line.
//!
//! Every subcommand loads and validates its input before computing, then
//! formats library results; no computation lives here. Exit status is 0 on
//! success, 1 when a checked law fails, 2 for usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::approx::ApproximationPair;
use crate::error::Error;
use crate::induced::{induce_relation, round_trip_relation};
use crate::io::{
    family_labels, is_matroid_document, matroid_from_json, parse_set, relation_doc,
    relation_from_json, set_labels, LoadError, RelationDoc,
};
use crate::matroid::{self, FnOracle};
use crate::relation::BinaryRelation;
use crate::relation_matroid::{NeighborhoodKind, RelationMatroid};
use crate::subset::Subset;
use crate::verify::{self, ScopeFilter, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "relmat",
    version,
    about = "Relations, rough approximations and the matroids they induce"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Successor and predecessor neighborhood of every element.
    Neighborhoods {
        /// Relation JSON file.
        file: PathBuf,
    },
    /// Lower and/or upper approximation of a set.
    Approx(ApproxArgs),
    /// Characteristics of the matroid a relation induces.
    Matroid(MatroidArgs),
    /// The relation a matroid induces, or the round trip of a relation.
    Induce {
        /// Matroid JSON file, or relation JSON file with --roundtrip.
        file: PathBuf,
        /// Take a relation, build its matroid and induce a relation back.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Check every law exhaustively on a small universe; prints JSON lines.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ApproxArgs {
    /// Relation JSON file.
    pub file: PathBuf,
    /// Comma-separated labels; "" is the empty set.
    #[arg(long, allow_hyphen_values = true)]
    pub set: String,
    #[arg(long, value_enum, default_value_t = Which::Both)]
    pub which: Which,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Lower,
    Upper,
    Both,
}

#[derive(Debug, Args)]
pub struct MatroidArgs {
    /// Relation JSON file.
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = Kind::Successor)]
    pub kind: Kind,
    /// List every independent set.
    #[arg(long)]
    pub independents: bool,
    /// List every dependent set.
    #[arg(long)]
    pub dependents: bool,
    /// List every circuit.
    #[arg(long)]
    pub circuits: bool,
    /// Rank of a set.
    #[arg(long, value_name = "SET")]
    pub rank: Option<String>,
    /// Closure of a set.
    #[arg(long, value_name = "SET")]
    pub closure: Option<String>,
    /// Whether a set is closed.
    #[arg(long, value_name = "SET")]
    pub closed: Option<String>,
    /// Recompute the requested outputs with the generic oracle algorithms and
    /// compare.
    #[arg(long)]
    pub check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Successor,
    Predecessor,
}

impl From<Kind> for NeighborhoodKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Successor => NeighborhoodKind::Successor,
            Kind::Predecessor => NeighborhoodKind::Predecessor,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Universe size.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = ScopeArg::All)]
    pub scope: ScopeArg,
    /// Run only these laws (repeatable).
    #[arg(long = "law", value_name = "ID")]
    pub laws: Vec<String>,
    /// Print the law catalog instead of running it.
    #[arg(long)]
    pub list: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    Relations,
    Matroids,
    All,
}

impl From<ScopeArg> for ScopeFilter {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::Relations => ScopeFilter::Relations,
            ScopeArg::Matroids => ScopeFilter::Matroids,
            ScopeArg::All => ScopeFilter::All,
        }
    }
}

/// A failed invocation and its exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Law(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Law(_) => EXIT_LAW_FAILURE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Law(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LawViolation { .. } => Failure::Law(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "relmat: {}", f.message());
            f.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Neighborhoods { file } => neighborhoods(file, cli.format, out),
        Command::Approx(a) => approx(a, cli.format, out),
        Command::Matroid(a) => matroid_cmd(a, cli.format, out),
        Command::Induce { file, roundtrip } => induce(file, *roundtrip, cli.format, out),
        Command::Verify(a) => verify_cmd(a, out),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: LoadError) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn load_relation(path: &Path) -> Result<BinaryRelation, Failure> {
    relation_from_json(&read(path)?).map_err(|e| located(path, e))
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).expect("plain data serializes");
    writeln!(out, "{text}").map_err(io_err)
}

#[derive(Serialize)]
struct NeighborhoodRow {
    element: String,
    successor: Vec<String>,
    predecessor: Vec<String>,
}

fn neighborhoods(file: &Path, format: Format, out: &mut dyn Write) -> Outcome {
    let r = load_relation(file)?;
    let u = r.universe();
    let mut rows = Vec::with_capacity(r.size());
    for x in 0..r.size() {
        rows.push((
            x,
            r.successor_neighborhood(x)?,
            r.predecessor_neighborhood(x)?,
        ));
    }
    match format {
        Format::Json => emit_json(
            out,
            &rows
                .iter()
                .map(|(x, rs, rp)| NeighborhoodRow {
                    element: u.label(*x).to_string(),
                    successor: set_labels(u, rs),
                    predecessor: set_labels(u, rp),
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Human => {
            let table: Vec<[String; 3]> = rows
                .iter()
                .map(|(x, rs, rp)| {
                    [
                        u.label(*x).to_string(),
                        format!("RS({}) = {}", u.label(*x), u.format_set(rs)),
                        format!("RP({}) = {}", u.label(*x), u.format_set(rp)),
                    ]
                })
                .collect();
            let width = table
                .iter()
                .map(|t| t[1].chars().count())
                .max()
                .unwrap_or(0);
            for [_, rs, rp] in &table {
                let pad = width - rs.chars().count();
                writeln!(out, "{rs}{}  {rp}", " ".repeat(pad)).map_err(io_err)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ApproxOut {
    set: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<Vec<String>>,
}

fn approx(a: &ApproxArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let r = load_relation(&a.file)?;
    let u = r.universe();
    let x = parse_set(u, &a.set)?;
    let pair = ApproximationPair::new(&r, &x)?;
    let lower = matches!(a.which, Which::Lower | Which::Both).then_some(&pair.lower);
    let upper = matches!(a.which, Which::Upper | Which::Both).then_some(&pair.upper);
    match format {
        Format::Json => emit_json(
            out,
            &ApproxOut {
                set: set_labels(u, &x),
                lower: lower.map(|s| set_labels(u, s)),
                upper: upper.map(|s| set_labels(u, s)),
            },
        )?,
        Format::Human => {
            let target = u.format_set(&x);
            if let Some(l) = lower {
                writeln!(out, "L({target}) = {}", u.format_set(l)).map_err(io_err)?;
            }
            if let Some(h) = upper {
                writeln!(out, "H({target}) = {}", u.format_set(h)).map_err(io_err)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SetValue<T> {
    set: Vec<String>,
    value: T,
}

#[derive(Default, Serialize)]
struct MatroidOut {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    independents: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dependents: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    circuits: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<SetValue<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closure: Option<SetValue<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<SetValue<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<Vec<String>>,
}

fn matroid_cmd(a: &MatroidArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let r = load_relation(&a.file)?;
    let u = r.universe().clone();
    let rm = RelationMatroid::new(&r, a.kind.into());
    let nothing_requested = !(a.independents
        || a.dependents
        || a.circuits
        || a.rank.is_some()
        || a.closure.is_some()
        || a.closed.is_some());
    let want_independents = a.independents || nothing_requested;

    let mut o = MatroidOut {
        kind: match a.kind {
            Kind::Successor => "successor",
            Kind::Predecessor => "predecessor",
        },
        ..Default::default()
    };
    let mut human = Vec::new();
    // generic-oracle disagreements, reported after the outputs
    let mut mismatches = Vec::new();

    if want_independents {
        let fam = matroid::independent_sets(&rm)?;
        if a.check {
            let literal = matroid::independent_sets(&FnOracle::new(&u, |s: &Subset| {
                literal_independent(&rm, s)
            }))?;
            if literal != fam {
                mismatches.push(format!(
                    "independents: closed form {} vs literal {}",
                    u.format_family(&fam),
                    u.format_family(&literal)
                ));
            }
        }
        human.push(format!("independents: {}", u.format_family(&fam)));
        o.independents = Some(family_labels(&u, &fam));
    }
    if a.dependents {
        let fam = rm.dependent_sets()?;
        if a.check {
            let generic = matroid::dependent_sets(&rm)?;
            if generic != fam {
                mismatches.push(format!(
                    "dependents: closed form {} vs generic {}",
                    u.format_family(&fam),
                    u.format_family(&generic)
                ));
            }
        }
        human.push(format!("dependents: {}", u.format_family(&fam)));
        o.dependents = Some(family_labels(&u, &fam));
    }
    if a.circuits {
        let fam = rm.circuits();
        if a.check {
            let generic = matroid::circuits(&rm)?;
            if generic != fam {
                mismatches.push(format!(
                    "circuits: closed form {} vs generic {}",
                    u.format_family(&fam),
                    u.format_family(&generic)
                ));
            }
        }
        human.push(format!("circuits: {}", u.format_family(&fam)));
        o.circuits = Some(family_labels(&u, &fam));
    }
    if let Some(labels) = &a.rank {
        let x = parse_set(&u, labels)?;
        let value = rm.rank(&x)?;
        if a.check {
            let generic = matroid::rank_exhaustive(&rm, &x)?;
            if generic != value {
                mismatches.push(format!(
                    "rank {}: closed form {value} vs generic {generic}",
                    u.format_set(&x)
                ));
            }
        }
        human.push(format!("rank({}) = {value}", u.format_set(&x)));
        o.rank = Some(SetValue {
            set: set_labels(&u, &x),
            value,
        });
    }
    if let Some(labels) = &a.closure {
        let x = parse_set(&u, labels)?;
        let value = rm.closure(&x)?;
        if a.check {
            let generic = matroid::closure(&rm, &x)?;
            if generic != value {
                mismatches.push(format!(
                    "closure {}: closed form {} vs generic {}",
                    u.format_set(&x),
                    u.format_set(&value),
                    u.format_set(&generic)
                ));
            }
        }
        human.push(format!(
            "cl({}) = {}",
            u.format_set(&x),
            u.format_set(&value)
        ));
        o.closure = Some(SetValue {
            set: set_labels(&u, &x),
            value: set_labels(&u, &value),
        });
    }
    if let Some(labels) = &a.closed {
        let x = parse_set(&u, labels)?;
        let value = rm.is_closed(&x)?;
        if a.check {
            let generic = matroid::is_closed(&rm, &x)?;
            if generic != value {
                mismatches.push(format!(
                    "closed {}: closed form {value} vs generic {generic}",
                    u.format_set(&x)
                ));
            }
        }
        human.push(format!("closed({}) = {value}", u.format_set(&x)));
        o.closed = Some(SetValue {
            set: set_labels(&u, &x),
            value,
        });
    }
    if a.check {
        o.check = Some(mismatches.clone());
        human.push(if mismatches.is_empty() {
            "check: closed forms agree with the generic oracle".to_string()
        } else {
            format!("check: {} disagreement(s)", mismatches.len())
        });
        human.extend(mismatches.iter().map(|m| format!("  {m}")));
    }

    match format {
        Format::Json => emit_json(out, &o)?,
        Format::Human => {
            for line in human {
                writeln!(out, "{line}").map_err(io_err)?;
            }
        }
    }
    Ok(if mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_LAW_FAILURE
    })
}

/// Pairwise-distinct neighborhoods, compared directly.
fn literal_independent(rm: &RelationMatroid, s: &Subset) -> bool {
    let keys: Vec<Subset> = s
        .iter()
        .map(|x| rm.neighborhood_key(x).expect("element of the universe"))
        .collect();
    keys.iter()
        .enumerate()
        .all(|(i, k)| keys[i + 1..].iter().all(|other| other != k))
}

#[derive(Serialize)]
struct RoundTripOut {
    #[serde(flatten)]
    relation: RelationDoc,
    equals_input: bool,
}

fn induce(file: &Path, roundtrip: bool, format: Format, out: &mut dyn Write) -> Outcome {
    let text = read(file)?;
    let is_matroid = is_matroid_document(&text).map_err(|e| located(file, e))?;
    match (is_matroid, roundtrip) {
        (true, false) => {
            let m = matroid_from_json(&text).map_err(|e| located(file, e))?;
            let induced = induce_relation(&m)?.into_relation();
            match format {
                Format::Json => emit_json(out, &relation_doc(&induced))?,
                Format::Human => {
                    writeln!(out, "R(M) = {}", induced.format_pairs()).map_err(io_err)?
                }
            }
        }
        (false, true) => {
            let r = relation_from_json(&text).map_err(|e| located(file, e))?;
            let rt = round_trip_relation(&r)?;
            let equals_input = rt.induced == r;
            match format {
                Format::Json => emit_json(
                    out,
                    &RoundTripOut {
                        relation: relation_doc(&rt.induced),
                        equals_input,
                    },
                )?,
                Format::Human => {
                    writeln!(out, "R(M(R)) = {}", rt.induced.format_pairs()).map_err(io_err)?;
                    writeln!(out, "equals input: {equals_input}").map_err(io_err)?;
                }
            }
        }
        (true, true) => {
            return Err(Failure::Usage(format!(
                "{}: --roundtrip takes a relation file, got a matroid",
                file.display()
            )))
        }
        (false, false) => {
            return Err(Failure::Usage(format!(
                "{}: expected a matroid file (a relation file needs --roundtrip)",
                file.display()
            )))
        }
    }
    Ok(EXIT_OK)
}

fn verify_cmd(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    if a.list {
        for law in verify::catalog() {
            let scope = match law.scope {
                verify::Scope::Relations => "relations",
                verify::Scope::Matroids => "matroids",
            };
            writeln!(out, "{}\t{scope}\t{}", law.id, law.statement).map_err(io_err)?;
        }
        return Ok(EXIT_OK);
    }
    let options = VerifyOptions {
        scope: a.scope.into(),
        laws: a.laws.clone(),
    };
    let cases = verify::run(a.n, &options)?;
    for case in &cases {
        writeln!(out, "{}", case.to_json_line()).map_err(io_err)?;
    }
    Ok(if cases.iter().all(|c| c.passed()) {
        EXIT_OK
    } else {
        EXIT_LAW_FAILURE
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("relmat").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn verify_capacity_is_usage_error() {
        let (code, _, err) = run_str(&["verify", "--n", "5"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("limit"), "{err}");
    }

    #[test]
    fn missing_file_is_usage_error() {
        let (code, _, err) = run_str(&["neighborhoods", "/nonexistent/r.json"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("/nonexistent/r.json"));
    }

    #[test]
    fn bad_flag_is_usage_error() {
        let (code, _, _) = run_str(&["verify", "--bogus"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn list_prints_catalog() {
        let (code, out, _) = run_str(&["verify", "--list"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), verify::catalog().len());
        assert!(out.contains("T4.round-trip\trelations"));
    }
}
