//! `gk`: prime graphs of finite simple groups from the command line.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use gk_core::catalog::Catalog;
use gk_core::catalog::Violation;
use gk_core::families::{self, GroupId, Sporadic};
use gk_core::graph::{distinguishing_invariant, is_isomorphic, PrimeGraph};
use gk_core::graph::{InvariantDifference, Vertex};
use gk_core::lemmas::{check_lemma, LemmaId, LemmaRange};
use gk_core::recogniser::{recognise_in, Strategy};
use gk_core::Error;
use serde::Serialize;
use std::collections::BTreeMap;

const SPEC_HELP: &str = "\
Group specs use the grammar family:param[,param]. Families:
  sporadic:<name>      one of the 26 sporadic groups, e.g. sporadic:J4, sporadic:ON
  alt:<n>              alternating group, n >= 5
  psl2:<q>             PSL2(q), q a prime power >= 4
  psl3_4, psu4_3, psu6_2, 2e6_2, e7_2, e7_3
  pomega_minus:<p>     POmega-_2p(3), p a Fermat prime
  g2:<k>               G2(3^k)
  2g2:<m>              2G2(3^(2m+1))
  f4:<k>               F4(2^k)
  2f4:<m>              2F4(2^(2m+1))
  sz:<m>               2B2(2^(2m+1)), also written 2b2:<m>
  e8:<q>               E8(q)
Parameters may be named, as in sz:m=3 or psl2:q=61.

Exit codes: 0 success, 1 negative mathematical result, 2 usage error,
3 internal or data error.";

#[derive(Parser)]
#[command(name = "gk", version, about = "Gruenberg-Kegel prime graphs of finite simple groups", after_help = SPEC_HELP)]
struct Cli {
    /// Catalog JSON to use instead of the embedded one.
    #[arg(long, global = true, env = "GK_CATALOG", value_name = "PATH")]
    catalog: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Evaluate candidates on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the prime graph of a group.
    Graph { spec: String },
    /// Decide whether two prime graphs are isomorphic.
    Iso { left: String, right: String },
    /// Check a lemma over a parameter range.
    Lemma {
        /// zsigmondy, lte, suz_primes, suz, 2g2, 2f4, 2dp, f4, a1 or g2.
        id: String,
        #[arg(long)]
        max_m: Option<u32>,
        #[arg(long)]
        max_q: Option<u64>,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_k: Option<u32>,
        #[arg(long)]
        max_l: Option<u32>,
    },
    /// Replay recognisability of a sporadic group by its prime graph.
    Recognise { group: String },
    /// Replay the unrecognisability witnesses of a sporadic group.
    Witness { group: String },
    /// Check the catalog for internal consistency.
    Validate,
    /// Print graph invariants of a group.
    Invariants { spec: String },
    /// Write the man page to stdout.
    #[command(hide = true)]
    Man,
}

#[derive(Serialize)]
struct IsoReport<'a> {
    left: GroupId,
    right: GroupId,
    isomorphic: bool,
    map: Option<&'a BTreeMap<Vertex, Vertex>>,
    difference: Option<&'a InvariantDifference>,
}

#[derive(Serialize)]
struct ValidationReport<'a> {
    violations: &'a [Violation],
}

/// A finished command: what to print and how to exit.
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }

    fn negative(stdout: String) -> Self {
        Outcome { stdout, code: 1 }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidArgument(_)
        | Error::UnsupportedTarget(_)
        | Error::UnsupportedFamily(_) => 2,
        Error::NotIsomorphic { .. } | Error::CandidateSurvives { .. } => 1,
        _ => 3,
    }
}

fn json_line<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

fn unsupported(format: Format, command: &str) -> Error {
    let name = match format {
        Format::Text => "text",
        Format::Json => "json",
        Format::Dot => "dot",
    };
    Error::InvalidArgument(format!("{command} does not support --format {name}"))
}

fn sporadic(name: &str) -> Result<Sporadic, Error> {
    name.strip_prefix("sporadic:").unwrap_or(name).parse()
}

fn graph_text(id: GroupId, g: &PrimeGraph) -> String {
    let mut out = format!("group: {} ({id})\n", id.display_name());
    let vs: Vec<String> = g.vertices().iter().map(ToString::to_string).collect();
    out.push_str(&format!("vertices: {{{}}}\n", vs.join(",")));
    let es: Vec<String> = g.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    out.push_str(&format!("edges: {{{}}}\n", es.join(",")));
    for c in g.components() {
        let vs: Vec<String> = c.iter().map(ToString::to_string).collect();
        let kind = match c.len() {
            1 => "isolated",
            _ if g.is_clique(&c) => "clique",
            _ => "component",
        };
        out.push_str(&format!("{kind}: {{{}}}\n", vs.join(",")));
    }
    out
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let loaded;
    let catalog = match &cli.catalog {
        Some(path) => {
            loaded = Catalog::load(path)?;
            &loaded
        }
        None => Catalog::builtin(),
    };
    let format = cli.format;
    match &cli.command {
        Command::Graph { spec } => {
            let id: GroupId = spec.parse()?;
            let g = families::prime_graph_in(catalog, id)?;
            Ok(Outcome::ok(match format {
                Format::Text => graph_text(id, &g),
                Format::Json => g.to_json(),
                Format::Dot => g.to_dot(),
            }))
        }
        Command::Iso { left, right } => {
            let (a, b): (GroupId, GroupId) = (left.parse()?, right.parse()?);
            let (ga, gb) = (
                families::prime_graph_in(catalog, a)?,
                families::prime_graph_in(catalog, b)?,
            );
            let map = is_isomorphic(&ga, &gb);
            let diff = if map.is_none() {
                distinguishing_invariant(&ga, &gb)
            } else {
                None
            };
            let stdout = match format {
                Format::Text => match (&map, &diff) {
                    (Some(m), _) => {
                        let pairs: Vec<String> =
                            m.iter().map(|(x, y)| format!("{x}->{y}")).collect();
                        format!("isomorphic: {a} {b}\nmap: {}\n", pairs.join(" "))
                    }
                    (None, Some(d)) => format!("not isomorphic: {a} {b}\ndiffers in {d}\n"),
                    (None, None) => format!("not isomorphic: {a} {b}\n"),
                },
                Format::Json => json_line(&IsoReport {
                    left: a,
                    right: b,
                    isomorphic: map.is_some(),
                    map: map.as_ref(),
                    difference: diff.as_ref(),
                }),
                Format::Dot => return Err(unsupported(format, "iso")),
            };
            Ok(Outcome {
                stdout,
                code: if map.is_some() { 0 } else { 1 },
            })
        }
        Command::Lemma {
            id,
            max_m,
            max_q,
            max_n,
            max_k,
            max_l,
        } => {
            let lemma: LemmaId = id.parse()?;
            let range = LemmaRange {
                max_m: *max_m,
                max_q: *max_q,
                max_n: *max_n,
                max_k: *max_k,
                max_l: *max_l,
            };
            let report = check_lemma(lemma, range)?;
            let stdout = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Dot => return Err(unsupported(format, "lemma")),
            };
            Ok(if report.passed {
                Outcome::ok(stdout)
            } else {
                Outcome::negative(stdout)
            })
        }
        Command::Recognise { group } => {
            let strategy = if cli.sequential {
                Strategy::Sequential
            } else {
                Strategy::Parallel
            };
            let report = recognise_in(catalog, sporadic(group)?, strategy)?;
            Ok(Outcome::ok(match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Dot => return Err(unsupported(format, "recognise")),
            }))
        }
        Command::Witness { group } => {
            let s = sporadic(group)?;
            let specs = catalog.witnesses_for(s);
            if specs.is_empty() {
                return Ok(Outcome::negative(format!(
                    "no witness: {} is recognisable by its prime graph\n",
                    s.display_name()
                )));
            }
            let reports = specs
                .into_iter()
                .map(|w| gk_core::extensions::verify_witness_in(catalog, w))
                .collect::<Result<Vec<_>, _>>()?;
            let stdout = match format {
                Format::Text => {
                    let mut out = String::new();
                    for r in &reports {
                        out.push_str(&format!(
                            "witness: {} from {}\n",
                            r.target.display_name(),
                            r.base.display_name()
                        ));
                        for line in &r.trace {
                            out.push_str(&format!("    {line}\n"));
                        }
                        out.push_str(&format!(
                            "    verified: isomorphic{}\n",
                            if r.labelled_equality {
                                ", labelled equality"
                            } else {
                                ""
                            }
                        ));
                        out.push_str(&format!("    source: {}\n", r.citation));
                    }
                    out
                }
                Format::Json => json_line(&reports),
                Format::Dot => reports.iter().map(|r| r.graph.to_dot()).collect(),
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Validate => {
            let violations = catalog.validate();
            let stdout = match format {
                Format::Text if violations.is_empty() => "catalog ok: 0 violations\n".to_string(),
                Format::Text => {
                    let mut out = format!("catalog invalid: {} violations\n", violations.len());
                    for v in &violations {
                        out.push_str(&format!("{v}\n"));
                    }
                    out
                }
                Format::Json => json_line(&ValidationReport {
                    violations: &violations,
                }),
                Format::Dot => return Err(unsupported(format, "validate")),
            };
            Ok(Outcome {
                stdout,
                code: if violations.is_empty() { 0 } else { 3 },
            })
        }
        Command::Invariants { spec } => {
            let id: GroupId = spec.parse()?;
            let inv = families::prime_graph_in(catalog, id)?.invariants();
            Ok(Outcome::ok(match format {
                Format::Text => inv
                    .fields()
                    .into_iter()
                    .map(|(k, v)| format!("{k}: {v}\n"))
                    .collect(),
                Format::Json => json_line(&inv),
                Format::Dot => return Err(unsupported(format, "invariants")),
            }))
        }
        Command::Man => {
            let mut buf = Vec::new();
            clap_mangen::Man::new(Cli::command())
                .render(&mut buf)
                .map_err(|e| Error::CheckFailed(e.to_string()))?;
            Ok(Outcome::ok(String::from_utf8_lossy(&buf).into_owned()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("gk: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
