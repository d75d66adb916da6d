// SPDX-License-Identifier: MIT
//! `magtool`: command-line access to the mag-core algorithms.
//!
//! Exit codes: 0 success or a true answer, 1 a false answer, 2 usage,
//! parse or precondition errors, 3 an internal invariant violation.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mag_core::ancestral::{self, Violation};
use mag_core::equivalence::{self, Verdict};
use mag_core::oracle::{self, EndInvariance};
use mag_core::{orient, projection, separation, MixedGraph};
use mag_tool::{dot_export, parse_graph, serialize_graph, ParseError};

#[derive(Parser)]
#[command(name = "magtool", version, about = "Maximal ancestral graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether the graph is ancestral and maximal.
    Validate { file: PathBuf },
    /// Test whether A and B are m-separated given a set.
    Msep {
        file: PathBuf,
        a: String,
        b: String,
        #[arg(long, value_delimiter = ',')]
        given: Vec<String>,
    },
    /// Every separation statement the graph entails.
    Model { file: PathBuf },
    /// Test two graphs for Markov equivalence.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// Cross-check against a comparison of independence models.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Triples with order and their discriminating paths.
    Orders { file: PathBuf },
    /// Join of the equivalence class, built by the orientation rules.
    Sup {
        file: PathBuf,
        /// Cross-check against the join of the enumerated class.
        #[arg(long)]
        oracle: bool,
    },
    /// Essential graph of a DAG.
    Essential { file: PathBuf },
    /// Project a DAG onto its observed vertices.
    Project {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        latent: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        selection: Vec<String>,
    },
    /// Add bidirected edges until the graph is maximal.
    Maximalize { file: PathBuf },
    /// Enumerate the equivalence class and its invariant edge ends.
    Class { file: PathBuf },
    /// Graphviz rendering.
    Dot { file: PathBuf },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Graph(#[from] mag_core::Error),
    #[error("oracle disagreement: {0}")]
    Oracle(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Graph(e) if e.is_internal() => 3,
            CliError::Oracle(_) => 3,
            _ => 2,
        }
    }
}

/// Result text plus whether the answer was true.
struct Outcome {
    text: String,
    truth: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, truth: true }
    }
}

fn load(path: &Path) -> Result<MixedGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_graph(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn vertices(g: &MixedGraph, names: &[String]) -> Result<Vec<usize>, CliError> {
    Ok(names
        .iter()
        .map(|n| g.vertex(n))
        .collect::<Result<_, _>>()?)
}

fn describe_violation(g: &MixedGraph, v: &Violation) -> String {
    match v {
        Violation::DirectedCycle(cycle) => {
            format!("directed cycle: {}", g.names_of(cycle).join(" -> "))
        }
        Violation::BidirectedAncestor {
            ancestor,
            descendant,
        } => format!(
            "bidirected edge between {} and its descendant {}",
            g.name(*ancestor),
            g.name(*descendant)
        ),
        Violation::UndirectedMeetsArrowhead {
            u,
            v,
            vertex,
            other,
        } => format!(
            "undirected edge {} -- {} meets an arrowhead at {} from {}",
            g.name(*u),
            g.name(*v),
            g.name(*vertex),
            g.name(*other)
        ),
    }
}

fn validate(g: &MixedGraph) -> Result<Outcome, CliError> {
    let mut text = String::new();
    let violations = ancestral::ancestral_violations(g);
    if !violations.is_empty() {
        text.push_str("ancestral: no\n");
        for v in &violations {
            writeln!(text, "  {}", describe_violation(g, v)).unwrap();
        }
        text.push_str("maximal: not checked\n");
        return Ok(Outcome { text, truth: false });
    }
    text.push_str("ancestral: yes\n");
    let mut witnesses = Vec::new();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if !g.is_adjacent(a, b) {
                if let Some(p) = separation::inducing_path(g, a, b)? {
                    witnesses.push(p);
                }
            }
        }
    }
    let maximal = ancestral::is_maximal(g)?;
    if maximal != witnesses.is_empty() {
        return Err(CliError::Oracle(
            "separating-set search and inducing-path search disagree on maximality".into(),
        ));
    }
    if maximal {
        text.push_str("maximal: yes\n");
    } else {
        text.push_str("maximal: no\n");
        for p in &witnesses {
            writeln!(text, "  inducing path: {}", p.display(g)).unwrap();
        }
    }
    Ok(Outcome {
        text,
        truth: maximal,
    })
}

fn msep(g: &MixedGraph, a: &str, b: &str, given: &[String]) -> Result<Outcome, CliError> {
    let (a, b) = (g.vertex(a)?, g.vertex(b)?);
    let z = vertices(g, given)?;
    Ok(match separation::m_connecting_path(g, a, b, &z)? {
        None => Outcome::ok("m-separated\n".into()),
        Some(p) => Outcome {
            text: format!("m-connected\n{}\n", p.display(g)),
            truth: false,
        },
    })
}

fn model(g: &MixedGraph) -> Outcome {
    let mut text = String::new();
    for s in &separation::independence_model(g).statements {
        writeln!(text, "{}", s.display(g)).unwrap();
    }
    Outcome::ok(text)
}

fn equiv(g1: &MixedGraph, g2: &MixedGraph, bruteforce: bool) -> Result<Outcome, CliError> {
    let verdict = equivalence::equivalence_verdict(g1, g2)?;
    if bruteforce && verdict != Verdict::VerticesDiffer {
        let models_agree = separation::same_model(g1, g2);
        if models_agree != verdict.is_equivalent() {
            return Err(CliError::Oracle(format!(
                "colliders with order say {}, independence models say {}",
                verdict.is_equivalent(),
                models_agree
            )));
        }
    }
    let text = match verdict {
        Verdict::Equivalent => "equivalent\n".to_string(),
        Verdict::VerticesDiffer => "not equivalent\nvertex sets differ\n".to_string(),
        Verdict::AdjacencyDiffers { u, v } => {
            format!(
                "not equivalent\nadjacency differs: {},{}\n",
                g1.name(u),
                g1.name(v)
            )
        }
        Verdict::ColliderWithOrderDiffers(t) => format!(
            "not equivalent\ncollider with order differs: {}\n",
            t.display(g1)
        ),
    };
    Ok(Outcome {
        text,
        truth: verdict.is_equivalent(),
    })
}

fn orders(g: &MixedGraph) -> Result<Outcome, CliError> {
    let map = equivalence::compute_orders(g)?;
    let mut rows: Vec<_> = map.orders.iter().collect();
    rows.sort_by_key(|&(t, &k)| (k, *t));
    let mut text = String::new();
    for (t, k) in rows {
        let kind = if g.is_collider(t.a, t.b, t.c)? {
            "collider"
        } else {
            "non-collider"
        };
        writeln!(text, "{} order {k} {kind}", t.display(g)).unwrap();
    }
    for p in &map.paths {
        writeln!(
            text,
            "discriminating path (order {}): {}",
            p.order,
            p.path.display(g)
        )
        .unwrap();
    }
    Ok(Outcome::ok(text))
}

fn sup(g: &MixedGraph, check: bool) -> Result<Outcome, CliError> {
    let h = orient::orient_sup(g)?;
    if check {
        let reference = oracle::sup_bruteforce(g)?;
        if reference != h {
            return Err(CliError::Oracle(format!(
                "rules produced\n{}but the class join is\n{}",
                serialize_graph(&h),
                serialize_graph(&reference)
            )));
        }
    }
    Ok(Outcome::ok(serialize_graph(&h)))
}

fn class(g: &MixedGraph) -> Result<Outcome, CliError> {
    let members = oracle::enumerate_class(g)?;
    let mut text = String::new();
    writeln!(text, "# {} member(s)", members.len()).unwrap();
    for (i, m) in members.iter().enumerate() {
        writeln!(text, "# member {}", i + 1).unwrap();
        text.push_str(&serialize_graph(m));
    }
    text.push_str("# edge ends\n");
    for r in oracle::classify_ends(&members) {
        let how = match r.invariance {
            EndInvariance::AlwaysArrowhead => "arrowhead",
            EndInvariance::AlwaysTail => "tail",
            EndInvariance::Varies => "varies",
        };
        writeln!(
            text,
            "# at {} on {}-{}: {how}",
            g.name(r.at),
            g.name(r.other),
            g.name(r.at)
        )
        .unwrap();
    }
    Ok(Outcome::ok(text))
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Validate { file } => validate(&load(&file)?),
        Command::Msep { file, a, b, given } => msep(&load(&file)?, &a, &b, &given),
        Command::Model { file } => Ok(model(&load(&file)?)),
        Command::Equiv {
            first,
            second,
            bruteforce,
        } => equiv(&load(&first)?, &load(&second)?, bruteforce),
        Command::Orders { file } => orders(&load(&file)?),
        Command::Sup { file, oracle } => sup(&load(&file)?, oracle),
        Command::Essential { file } => Ok(Outcome::ok(serialize_graph(&orient::essential_graph(
            &load(&file)?,
        )?))),
        Command::Project {
            file,
            latent,
            selection,
        } => {
            let d = load(&file)?;
            let out = projection::project(&d, &vertices(&d, &latent)?, &vertices(&d, &selection)?)?;
            Ok(Outcome::ok(serialize_graph(&out)))
        }
        Command::Maximalize { file } => Ok(Outcome::ok(serialize_graph(&ancestral::maximalize(
            &load(&file)?,
        )?))),
        Command::Class { file } => class(&load(&file)?),
        Command::Dot { file } => Ok(Outcome::ok(dot_export(&load(&file)?))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(if outcome.truth { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
