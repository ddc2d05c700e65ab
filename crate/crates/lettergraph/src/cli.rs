//! The `lettergraph` command line.
//!
//! Exit codes: 0 on success, 1 for invalid input or a failed check, 2 when
//! a request exceeds the desk-scale bound of an exact algorithm.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lettergraph_core::construct::{lettericity_formula, path_lettering};
use lettergraph_core::graph::{is_path, matching_graph, path_graph};
use lettergraph_core::lemmas::{audit_matching_letterings, count_matching_words, MatchingAudit};
use lettergraph_core::solver::{enumerate_letterings, lettericity_exact};
use lettergraph_core::{Graph, Lettering, LetteringWitness};

use crate::format::{
    format_decoder, format_word, parse_decoder, parse_edge_list, parse_lettering, parse_word,
    serialize_edge_list, serialize_lettering, to_dot, FormatError,
};

#[derive(Debug, Parser)]
#[command(name = "lettergraph", version, about = "Letter graphs and lettericity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decode a word and decoder into a graph.
    Decode {
        /// Letters as `2,1,3,2`, or digits `2132` for alphabets up to 9.
        #[arg(long)]
        word: String,
        /// Ordered pairs `a:b,c:d`; empty for the empty decoder.
        #[arg(long, allow_hyphen_values = true)]
        decoder: String,
        /// Alphabet size. Defaults to the largest letter in the word.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
    /// Print an optimal lettering of the path on N vertices.
    Path {
        n: usize,
        /// Decode the lettering and check that it is a path.
        #[arg(long)]
        verify: bool,
    },
    /// Compute the exact lettericity of a small graph.
    Lettericity {
        #[command(flatten)]
        target: Target,
    },
    /// List all letterings with exactly K letters, one per canonical word.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check that a lettering file represents a graph file.
    Verify { lettering: PathBuf, graph: PathBuf },
    /// Write a graph as an edge list or DOT.
    Export {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Audit every K-lettering of the matching with R edges.
    Audit {
        r: usize,
        k: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Count the words admitting an R-lettering of the matching with R edges.
    Count {
        r: usize,
        /// Also report the count up to renaming of letters.
        #[arg(long)]
        conventions: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Edge-list file.
    graph: Option<PathBuf>,
    /// The path on N vertices.
    #[arg(long, value_name = "N")]
    path: Option<usize>,
    /// The matching with R edges.
    #[arg(long, value_name = "R")]
    matching: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edges,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Kv,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Capability(String),
    /// A check ran and came out negative; the output is already written.
    Check,
}

impl From<lettergraph_core::Error> for Failure {
    fn from(e: lettergraph_core::Error) -> Self {
        if e.is_capability() {
            Failure::Capability(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Model(e) => e.into(),
            e => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Runs the command line on `args` (including the program name) and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Capability(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Decode {
            word,
            decoder,
            k,
            format,
        } => {
            let word = parse_word(&word, k)?;
            let k = k.unwrap_or_else(|| word.max_letter().map_or(0, |l| usize::from(l.get())));
            let decoder = parse_decoder(&decoder, k)?;
            let g = Lettering::new(word, decoder)?.decode();
            writeln!(out, "{}", render(&g, format))?;
        }
        Command::Path { n, verify } => {
            if n < 3 {
                return Err(Failure::Invalid(format!(
                    "the path lettering formula floor((n+4)/3) holds for n >= 3, got {n}"
                )));
            }
            let l = path_lettering(n)?;
            writeln!(out, "{}", serialize_lettering(&l))?;
            writeln!(out, "alphabet {}", l.alphabet_size())?;
            if verify {
                let g = l.decode();
                if is_path(&g).is_some()
                    && g.vertex_count() == n
                    && l.alphabet_size() == lettericity_formula(n)?
                {
                    writeln!(out, "VERIFIED P_{n}")?;
                } else {
                    writeln!(out, "FAILED P_{n}")?;
                    return Err(Failure::Check);
                }
            }
        }
        Command::Lettericity { target } => {
            let g = load_target(&target)?;
            let (k, witness) = lettericity_exact(&g)?;
            writeln!(out, "lettericity {k}")?;
            writeln!(out, "{}", serialize_lettering(&witness.lettering))?;
            writeln!(out, "map {}", format_map(&witness))?;
        }
        Command::Enumerate { target, k, limit } => {
            let g = load_target(&target)?;
            let e = enumerate_letterings(&g, k, limit)?;
            writeln!(out, "witnesses {}", e.witnesses.len())?;
            writeln!(out, "truncated {}", e.truncated)?;
            for w in &e.witnesses {
                writeln!(
                    out,
                    "w={} D={} map={}",
                    format_word(w.lettering.word()),
                    format_decoder(w.lettering.decoder()),
                    format_map(w)
                )?;
            }
        }
        Command::Verify { lettering, graph } => {
            let l = parse_lettering(&read(&lettering)?)?;
            let g = parse_edge_list(&read(&graph)?)?;
            if l.verify(&g, None)? {
                writeln!(out, "VERIFIED")?;
            } else {
                writeln!(out, "MISMATCH")?;
                return Err(Failure::Check);
            }
        }
        Command::Export { target, format } => {
            let g = load_target(&target)?;
            writeln!(out, "{}", render(&g, format))?;
        }
        Command::Audit { r, k, format } => {
            let audit = audit_matching_letterings(r, k)?;
            match format {
                ReportFormat::Text => writeln!(out, "{}", audit_summary(&audit))?,
                ReportFormat::Kv => write!(out, "{}", audit_kv(&audit))?,
            }
            if !audit.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Count { r, conventions } => {
            let count = count_matching_words(r)?;
            if conventions {
                writeln!(out, "fixed-alphabet {}", count.fixed_alphabet)?;
                writeln!(out, "canonical {}", count.canonical)?;
            } else {
                writeln!(out, "{}", count.fixed_alphabet)?;
            }
        }
    }
    Ok(())
}

fn render(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edges => serialize_edge_list(g),
        GraphFormat::Dot => to_dot(g),
    }
}

fn format_map(w: &LetteringWitness) -> String {
    w.vertex_of_position
        .iter()
        .enumerate()
        .map(|(p, v)| format!("{}:{v}", p + 1))
        .collect::<Vec<_>>()
        .join(",")
}

fn lemma3_value(audit: &MatchingAudit) -> String {
    match audit.paired_fraction {
        Some(f) => format!("{f:.1}"),
        None => "n/a".into(),
    }
}

fn audit_summary(audit: &MatchingAudit) -> String {
    format!(
        "max-letter-occurrences {}; lemma3 {}",
        audit.max_letter_occurrences,
        lemma3_value(audit)
    )
}

fn audit_kv(audit: &MatchingAudit) -> String {
    format!(
        "r={}\nk={}\nwitnesses={}\nmax-letter-occurrences={}\nlemma2={}\nlemma3={}\npassed={}\n",
        audit.r,
        audit.k,
        audit.witnesses.len(),
        audit.max_letter_occurrences,
        audit.at_most_two_per_letter(),
        lemma3_value(audit),
        audit.passed()
    )
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn load_target(target: &Target) -> Result<Graph, Failure> {
    Ok(match (&target.graph, target.path, target.matching) {
        (Some(file), _, _) => parse_edge_list(&read(file)?)?,
        (_, Some(n), _) => path_graph(n)?,
        (_, _, Some(r)) => matching_graph(r)?,
        _ => unreachable!("clap requires exactly one target"),
    })
}
