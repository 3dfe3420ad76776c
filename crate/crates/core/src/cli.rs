//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::cartan::{Rank, WeightVector};
use crate::crystal::{bfs_component, multiplicity_table, signature_report};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::fock::{verify_relations, Combination, Convention, FockAction};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fockspace", version, about = "Fock space and crystal computations for type C_n^(1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a word of operators (rightmost first) to a diagram.
    Act(ActArgs),
    /// Check the defining relations on all small diagrams.
    Verify(VerifyArgs),
    /// Generate the crystal graph B(Lambda_k) up to a box count.
    Graph(GraphArgs),
    /// Show the i-signature of a diagram and the Kashiwara operator data.
    Signature(SignatureArgs),
    /// Weight multiplicities of the truncated crystal.
    Multiplicities(GraphArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Upper,
    Lower,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Upper => Convention::Upper,
            ConventionArg::Lower => Convention::Lower,
        }
    }
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    /// Rank parameter (n >= 2).
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
    /// Charge k of the Fock space, 0 <= k <= n.
    #[arg(long, visible_alias = "k", default_value_t = 0, allow_negative_numbers = true)]
    pub charge: i64,
}

impl SpaceArgs {
    fn resolve(&self) -> Result<(Rank, usize)> {
        let rank = Rank::new(self.n)?;
        let charge = usize::try_from(self.charge)
            .ok()
            .and_then(|c| rank.check_index(c).ok())
            .ok_or(Error::IndexOutOfRange { index: self.charge, n: rank.n() })?;
        Ok((rank, charge))
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Use the empty diagram phi_k.
    #[arg(long, conflicts_with = "diagram")]
    pub phi: bool,
    /// Diagram as JSON, e.g. '{"columns":[2,1]}'; n and charge default to the flags.
    #[arg(long)]
    pub diagram: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ActArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[command(flatten)]
    pub input: InputArgs,
    /// Operator word, e.g. "E1 F0 T2+ Td"; applied right to left.
    #[arg(long)]
    pub ops: String,
    #[arg(long, value_enum, default_value_t = ConventionArg::Upper)]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[arg(long, default_value_t = 4)]
    pub max_boxes: usize,
    #[arg(long, value_enum, default_value_t = ConventionArg::Upper)]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// Largest box count (level) to include.
    #[arg(long, default_value_t = 5)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SignatureArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[command(flatten)]
    pub input: InputArgs,
    /// Colour i.
    #[arg(long)]
    pub i: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// One step of an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    E(usize),
    F(usize),
    T(usize, bool),
    Td,
}

/// Parses a whitespace-separated word such as `"E1 F0 T2+ T0- Td"`.
pub fn parse_ops(word: &str, rank: Rank) -> Result<Vec<Op>> {
    let bad = |tok: &str| Error::Parse(format!("bad operator token {tok:?}"));
    let index = |tok: &str, digits: &str| -> Result<usize> {
        let i: usize = digits.parse().map_err(|_| bad(tok))?;
        rank.check_index(i).map_err(|_| Error::Parse(format!("operator token {tok:?}: colour {i} exceeds n = {rank}")))
    };
    word.split_whitespace()
        .map(|tok| {
            if tok == "Td" {
                return Ok(Op::Td);
            }
            let (head, rest) = tok.split_at(tok.chars().next().map_or(0, char::len_utf8));
            match head {
                "E" => Ok(Op::E(index(tok, rest)?)),
                "F" => Ok(Op::F(index(tok, rest)?)),
                "T" => {
                    let raise = match rest.chars().last() {
                        Some('+') => true,
                        Some('-') => false,
                        _ => return Err(bad(tok)),
                    };
                    Ok(Op::T(index(tok, &rest[..rest.len() - 1])?, raise))
                }
                _ => Err(bad(tok)),
            }
        })
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PartialDiagram {
    n: Option<i64>,
    charge: Option<i64>,
    columns: Vec<i64>,
}

fn read_input(space: &SpaceArgs, input: &InputArgs) -> Result<Diagram> {
    let (rank, charge) = space.resolve()?;
    match (&input.diagram, input.phi) {
        (Some(text), _) => {
            let raw: PartialDiagram =
                serde_json::from_str(text).map_err(|e| Error::Parse(format!("--diagram: {e}")))?;
            if raw.n.is_some_and(|n| n != space.n) || raw.charge.is_some_and(|c| c != space.charge) {
                return Err(Error::Parse("--diagram disagrees with --n/--charge".to_owned()));
            }
            Diagram::from_signed(rank.n() as i64, charge as i64, &raw.columns)
        }
        (None, true) => Diagram::empty(rank, charge),
        (None, false) => Err(Error::Parse("give either --phi or --diagram".to_owned())),
    }
}

/// Rendered output and exit status of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, status: EXIT_OK }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Act(args) => act(args),
        Command::Verify(args) => verify(args),
        Command::Graph(args) => graph(args),
        Command::Signature(args) => signature(args),
        Command::Multiplicities(args) => multiplicities(args),
    }
}

fn out_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Act(a) => a.output.out.as_ref(),
        Command::Verify(a) => a.output.out.as_ref(),
        Command::Graph(a) | Command::Multiplicities(a) => a.output.out.as_ref(),
        Command::Signature(a) => a.output.out.as_ref(),
    }
}

fn unsupported(format: Format, cmd: &str) -> Error {
    Error::Parse(format!("format {format:?} is not available for `{cmd}`").to_lowercase())
}

/// Applies an operator word to `v`, rightmost operator first.
pub fn apply_ops(action: &FockAction, ops: &[Op], mut v: Combination) -> Result<Combination> {
    for op in ops.iter().rev() {
        v = match *op {
            Op::E(i) => action.e(i, &v)?,
            Op::F(i) => action.f(i, &v)?,
            Op::T(i, raise) => action.t(i, raise, &v)?,
            Op::Td => action.td(&v),
        };
    }
    Ok(v)
}

fn act(args: &ActArgs) -> Result<Outcome> {
    let y = read_input(&args.space, &args.input)?;
    let ops = parse_ops(&args.ops, y.rank())?;
    let v = apply_ops(&FockAction::new(args.convention.into()), &ops, Combination::from_diagram(y))?;
    let output = match args.format {
        Format::Json => serde_json::to_string_pretty(&v)? + "\n",
        Format::Text => {
            let mut s: String = v.terms().map(|(y, c)| format!("{c}\t{}\n", y.label())).collect();
            if v.is_zero() {
                s.push_str("0\n");
            }
            s
        }
        Format::Dot => return Err(unsupported(Format::Dot, "act")),
    };
    Ok(Outcome::ok(output))
}

fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let (rank, charge) = args.space.resolve()?;
    let report = verify_relations(rank, charge, args.max_boxes, args.convention.into())?;
    let output = match args.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Text => {
            let mut s = format!(
                "n={rank} charge={charge} max_boxes={} convention={}: checked {} identities, {} failures\n",
                args.max_boxes,
                Convention::from(args.convention),
                report.checked,
                report.failures.len()
            );
            for f in &report.failures {
                s += &format!("  {:?} {:?} on {}: {}\n", f.relation, f.indices, f.diagram, f.discrepancy);
            }
            s
        }
        Format::Dot => return Err(unsupported(Format::Dot, "verify")),
    };
    let status = if report.passed() { EXIT_OK } else { EXIT_FAILED };
    Ok(Outcome { output, status })
}

fn graph(args: &GraphArgs) -> Result<Outcome> {
    let (rank, charge) = args.space.resolve()?;
    let g = bfs_component(rank, charge, args.depth)?;
    let output = match args.format {
        Format::Json => g.to_json()? + "\n",
        Format::Dot => g.to_dot(),
        Format::Text => {
            let mut s = String::new();
            for (idx, y) in g.nodes().iter().enumerate() {
                s += &format!("{idx}\tlevel {}\t{}\n", y.box_count(), y.label());
            }
            for e in g.edges() {
                s += &format!("{} -{}-> {}\n", e.src, e.i, e.dst);
            }
            s
        }
    };
    Ok(Outcome::ok(output))
}

#[derive(Serialize)]
struct MultiplicityRow<'a> {
    weight: &'a WeightVector,
    count: usize,
}

#[derive(Serialize)]
struct SignatureJson<'a> {
    diagram: &'a Diagram,
    i: usize,
    sigma: String,
    sites: Vec<(usize, i64)>,
    surviving: Vec<usize>,
    epsilon: usize,
    phi: usize,
    e_tilde_site: Option<(usize, i64)>,
    f_tilde_site: Option<(usize, i64)>,
}

fn multiplicities(args: &GraphArgs) -> Result<Outcome> {
    let (rank, charge) = args.space.resolve()?;
    let table = multiplicity_table(&bfs_component(rank, charge, args.depth)?);
    let output = match args.format {
        Format::Json => {
            let rows: Vec<_> = table.iter().map(|(weight, &count)| MultiplicityRow { weight, count }).collect();
            serde_json::to_string_pretty(&rows)? + "\n"
        }
        Format::Text => table.iter().map(|(w, m)| format!("{w}\t{m}\n")).collect(),
        Format::Dot => return Err(unsupported(Format::Dot, "multiplicities")),
    };
    Ok(Outcome::ok(output))
}

fn signature(args: &SignatureArgs) -> Result<Outcome> {
    let y = read_input(&args.space, &args.input)?;
    let report = signature_report(&y, args.i)?;
    let site = |s: Option<(usize, i64)>| s.map_or("none".to_owned(), |(l, h)| format!("({l},{h})"));
    // Positions are printed 1-based, matching the usual J(sigma) notation.
    let survivors: Vec<String> = report.surviving.iter().map(|p| (p + 1).to_string()).collect();
    let output = match args.format {
        Format::Text => format!(
            "sigma = {}\nJ = {{{}}}\nepsilon = {}\nphi = {}\ne_tilde site = {}\nf_tilde site = {}\n",
            report.signature.word_string(),
            survivors.join(","),
            report.epsilon,
            report.phi,
            site(report.e_site),
            site(report.f_site),
        ),
        Format::Json => {
            let doc = SignatureJson {
                diagram: &y,
                i: args.i,
                sigma: report.signature.word_string(),
                sites: report.signature.corners.iter().map(|c| (c.column, c.y)).collect(),
                surviving: report.surviving.iter().map(|p| p + 1).collect(),
                epsilon: report.epsilon,
                phi: report.phi,
                e_tilde_site: report.e_site,
                f_tilde_site: report.f_site,
            };
            serde_json::to_string_pretty(&doc)? + "\n"
        }
        Format::Dot => return Err(unsupported(Format::Dot, "signature")),
    };
    Ok(Outcome::ok(output))
}

/// Parses arguments, runs, writes output, and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match out_path(&cli.command) {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{}", outcome.output),
    }
    outcome.status
}
