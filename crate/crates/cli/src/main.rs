//! `alexs1`: validate, canonicalize, compare, decompose, count and enumerate
//! invariant tuples, and compute homology of the built-in model complexes.

use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use alexs1::homology::{homology, singular_vertex_count, Model};
use alexs1::{
    compare_counts, decompose, enumerate_census, name_lookup, validate, ComplexityBound, InvariantTuple, MoveSet,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "alexs1",
    version,
    about = "Invariant tuples of circle actions on Alexandrov 3-spaces"
)]
struct Cli {
    /// Disallow orientation reversal: classify oriented orbit spaces.
    #[arg(long, global = true)]
    oriented: bool,
    /// Emit JSON where the default output is plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Check the legality rules. Exits 0 iff every tuple is legal.
    Validate { tuples: Vec<String> },
    /// Print the canonical representative of each tuple.
    Canon { tuples: Vec<String> },
    /// Decide equivalence of two tuples. Exits 0 if equivalent, 1 if not.
    Eq { tuples: Vec<String> },
    /// Split off the suspension summands: manifold part, r and a name if known.
    Decompose { tuples: Vec<String> },
    /// Compare the two counts of inequivalent actions for given r and s.
    Count {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
    },
    /// Stream every canonical tuple within the bounds, in ascending order.
    Census(CensusArgs),
    /// Integral homology of a model complex.
    Homology {
        /// rp2, sus_rp2, sus_rp2^k, s3 or s2xs1
        #[arg(long)]
        model: String,
    },
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long, default_value_t = 0)]
    max_genus: u32,
    #[arg(long, default_value_t = 0)]
    max_f: u32,
    #[arg(long, default_value_t = 0)]
    max_t: u32,
    #[arg(long, default_value_t = 0)]
    max_s: u32,
    #[arg(long, default_value_t = 0)]
    max_alpha: i64,
    #[arg(long, default_value_t = 0)]
    max_pairs: u32,
    /// Bound on |b| for closed tuples.
    #[arg(long = "max-b", default_value_t = 0)]
    max_b_abs: i64,
    /// Bound on the total number of singular points, halved.
    #[arg(long, default_value_t = 0)]
    max_r: u32,
    /// One tuple per line in the tuple grammar instead of JSONL.
    #[arg(long)]
    text: bool,
}

impl From<&CensusArgs> for ComplexityBound {
    fn from(a: &CensusArgs) -> Self {
        ComplexityBound {
            max_genus: a.max_genus,
            max_f: a.max_f,
            max_t: a.max_t,
            max_s: a.max_s,
            max_alpha: a.max_alpha,
            max_pairs: a.max_pairs,
            max_b_abs: a.max_b_abs,
            max_r: a.max_r,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(format!("i/o error: {e}"))
    }
}

#[derive(Serialize)]
struct CatalogLine<'a> {
    #[serde(flatten)]
    tuple: &'a InvariantTuple,
    canonical: bool,
}

#[derive(Serialize)]
struct DecomposeOutput {
    #[serde(flatten)]
    decomposition: alexs1::Decomposition,
    name: Option<String>,
}

#[derive(Serialize)]
struct HomologyOutput {
    #[serde(rename = "H")]
    groups: Vec<alexs1::homology::AbelianGroupDecomp>,
    singular_vertices: Option<usize>,
}

#[derive(Serialize)]
struct EqOutput<'a> {
    a: &'a InvariantTuple,
    b: &'a InvariantTuple,
    equivalent: bool,
}

/// Tuples from the arguments, or one per nonblank stdin line when none are given.
fn inputs(args: &[String]) -> Result<Vec<String>, Failure> {
    if !args.is_empty() {
        return Ok(args.to_vec());
    }
    let mut lines = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line?;
        if !line.trim().is_empty() {
            lines.push(line);
        }
    }
    Ok(lines)
}

fn parse(src: &str) -> Result<InvariantTuple, Failure> {
    src.parse()
        .map_err(|e| Failure::Usage(format!("cannot parse '{}': {e}", src.trim())))
}

fn parse_legal(src: &str) -> Result<InvariantTuple, Failure> {
    let t = parse(src)?;
    let report = validate(&t);
    if report.ok {
        Ok(t)
    } else {
        let reasons: Vec<String> = report.violations.iter().map(|v| v.message.clone()).collect();
        Err(Failure::Domain(format!("illegal tuple {t}: {}", reasons.join("; "))))
    }
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value).map_err(|e| Failure::Domain(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let moves = if cli.oriented {
        MoveSet::oriented()
    } else {
        MoveSet::default()
    };
    match &cli.verb {
        Verb::Validate { tuples } => {
            let mut all_ok = true;
            for src in inputs(tuples)? {
                let t = parse(&src)?;
                let report = validate(&t);
                all_ok &= report.ok;
                if cli.json {
                    json_line(out, &report)?;
                } else if report.ok {
                    writeln!(out, "{t}: ok")?;
                } else {
                    for v in &report.violations {
                        writeln!(out, "{t}: {}: {}", v.rule.id(), v.message)?;
                    }
                }
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Verb::Canon { tuples } => {
            for src in inputs(tuples)? {
                let c = moves.canonical_form(&parse_legal(&src)?);
                if cli.json {
                    json_line(
                        out,
                        &CatalogLine {
                            tuple: c.inner(),
                            canonical: true,
                        },
                    )?;
                } else {
                    writeln!(out, "{}", c.inner())?;
                }
            }
            Ok(0)
        }
        Verb::Eq { tuples } => {
            let srcs = inputs(tuples)?;
            if srcs.len() % 2 != 0 || srcs.is_empty() {
                return Err(Failure::Usage(format!("eq needs tuples in pairs, got {}", srcs.len())));
            }
            let mut all_equivalent = true;
            for pair in srcs.chunks(2) {
                let (a, b) = (parse_legal(&pair[0])?, parse_legal(&pair[1])?);
                let equivalent = moves.are_equivalent(&a, &b);
                all_equivalent &= equivalent;
                if cli.json {
                    json_line(
                        out,
                        &EqOutput {
                            a: &a,
                            b: &b,
                            equivalent,
                        },
                    )?;
                } else {
                    writeln!(out, "{}", if equivalent { "equivalent" } else { "inequivalent" })?;
                }
            }
            Ok(if all_equivalent { 0 } else { 1 })
        }
        Verb::Decompose { tuples } => {
            for src in inputs(tuples)? {
                let decomposition = decompose(&parse_legal(&src)?);
                let name = name_lookup(&decomposition).map(|n| n.name);
                json_line(out, &DecomposeOutput { decomposition, name })?;
            }
            Ok(0)
        }
        Verb::Count { r, s } => {
            let report = compare_counts(*r, *s).map_err(|e| Failure::Domain(e.to_string()))?;
            json_line(out, &report)?;
            Ok(0)
        }
        Verb::Census(args) => {
            let bound = ComplexityBound::from(args);
            let catalog = enumerate_census(&bound, &moves).map_err(|e| Failure::Domain(e.to_string()))?;
            for c in catalog {
                if args.text {
                    writeln!(out, "{}", c.inner())?;
                } else {
                    json_line(
                        out,
                        &CatalogLine {
                            tuple: c.inner(),
                            canonical: true,
                        },
                    )?;
                }
            }
            Ok(0)
        }
        Verb::Homology { model } => {
            let model: Model = model
                .parse()
                .map_err(|e: alexs1::homology::HomologyError| Failure::Usage(e.to_string()))?;
            let complex = model.build().map_err(|e| Failure::Domain(e.to_string()))?;
            let singular_vertices = if complex.dimension() == 3 {
                Some(singular_vertex_count(&complex).map_err(|e| Failure::Domain(e.to_string()))?)
            } else {
                None
            };
            json_line(
                out,
                &HomologyOutput {
                    groups: homology(&complex),
                    singular_vertices,
                },
            )?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(code), Ok(())) => ExitCode::from(code),
        (Err(failure), _) => {
            let (Failure::Usage(msg) | Failure::Domain(msg)) = &failure;
            eprintln!("alexs1: {msg}");
            ExitCode::from(failure.code())
        }
        (Ok(_), Err(e)) => {
            eprintln!("alexs1: i/o error: {e}");
            ExitCode::from(1)
        }
    }
}
