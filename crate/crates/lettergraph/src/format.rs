//! Text formats: edge lists, DOT export, and the three-line lettering format.
//!
//! Edge list:
//!
//! ```text
//! 3 2
//! 1 2
//! 2 3
//! ```
//!
//! Lettering:
//!
//! ```text
//! k 3
//! w 2,1,3,2,1,3,2
//! D 2:1,3:2
//! ```
//!
//! The word line also accepts the compact digit form `w 2132132` when the
//! alphabet has at most nine letters. Output always uses the comma form.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use lettergraph_core::{Decoder, Graph, Letter, Lettering, Word};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Model(#[from] lettergraph_core::Error),
}

fn line_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line {
        line,
        message: message.into(),
    }
}

/// Canonical edge list: header `n m`, then edges in sorted order. No
/// trailing newline.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        write!(s, "\n{u} {v}").unwrap();
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| FormatError::Invalid("missing \"n m\" header".into()))?;
    let [n, m] = parse_numbers::<2>(hline, header)?;

    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let [u, v] = parse_numbers::<2>(lineno, line)?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(line_error(lineno, format!("endpoint {w} outside 1..={n}")));
            }
        }
        if u == v {
            return Err(line_error(lineno, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(line_error(lineno, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
        if edges.len() > m {
            return Err(line_error(
                lineno,
                format!("more than the {m} edges declared"),
            ));
        }
    }
    if edges.len() != m {
        return Err(FormatError::Invalid(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn parse_numbers<const N: usize>(lineno: usize, line: &str) -> Result<[usize; N], FormatError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != N {
        return Err(line_error(
            lineno,
            format!("expected {N} numbers, found {:?}", line),
        ));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| line_error(lineno, format!("not a number: {f:?}")))?;
    }
    Ok(out)
}

/// Undirected DOT description. Every vertex is listed so that isolated
/// vertices survive, followed by the edges in sorted order.
pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph {\n");
    for v in 1..=g.vertex_count() {
        writeln!(s, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push('}');
    s
}

/// Comma-separated letter ids.
pub fn format_word(word: &Word) -> String {
    join(word.letters().iter().map(Letter::to_string))
}

/// Comma-separated `a:b` pairs in lexicographic order.
pub fn format_decoder(decoder: &Decoder) -> String {
    join(decoder.pairs().map(|(a, b)| format!("{a}:{b}")))
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(",")
}

fn tagged(tag: char, body: &str) -> String {
    if body.is_empty() {
        tag.to_string()
    } else {
        format!("{tag} {body}")
    }
}

/// Three-line form `k …` / `w …` / `D …`. An empty word or decoder leaves
/// the line as the bare tag.
pub fn serialize_lettering(l: &Lettering) -> String {
    format!(
        "k {}\n{}\n{}",
        l.decoder().alphabet_size(),
        tagged('w', &format_word(l.word())),
        tagged('D', &format_decoder(l.decoder()))
    )
}

/// Parses a word given as comma-separated ids, or as a run of single digits
/// when the alphabet has at most nine letters. `k` is the declared alphabet
/// size, if known.
pub fn parse_word(spec: &str, k: Option<usize>) -> Result<Word, FormatError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Word::default());
    }
    let ids: Vec<u16> = if spec.contains(',') {
        spec.split(',')
            .map(|t| {
                let t = t.trim();
                t.parse()
                    .map_err(|_| FormatError::Invalid(format!("not a letter id: {t:?}")))
            })
            .collect::<Result<_, _>>()?
    } else if spec.len() == 1 || k.is_some_and(|k| k >= 10) {
        vec![spec
            .parse()
            .map_err(|_| FormatError::Invalid(format!("not a word: {spec:?}")))?]
    } else {
        spec.chars()
            .map(|c| match c.to_digit(10) {
                Some(d) => Ok(d as u16),
                None => Err(FormatError::Invalid(format!("not a word: {spec:?}"))),
            })
            .collect::<Result<_, _>>()?
    };
    Ok(Word::from_ids(&ids)?)
}

/// Parses `a:b,c:d` into a decoder over `k` letters. The empty string is the
/// empty decoder.
pub fn parse_decoder(spec: &str, k: usize) -> Result<Decoder, FormatError> {
    let spec = spec.trim();
    let mut pairs = Vec::new();
    if !spec.is_empty() {
        for item in spec.split(',') {
            let bad = || FormatError::Invalid(format!("not a letter pair a:b: {:?}", item.trim()));
            let (a, b) = item.trim().split_once(':').ok_or_else(bad)?;
            let a: u16 = a.trim().parse().map_err(|_| bad())?;
            let b: u16 = b.trim().parse().map_err(|_| bad())?;
            pairs.push((a, b));
        }
    }
    Ok(Decoder::new(k, pairs)?)
}

pub fn parse_lettering(text: &str) -> Result<Lettering, FormatError> {
    let mut k = None;
    let mut word = None;
    let mut decoder = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let (tag, body) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let body = body.trim();
        match tag {
            "k" if k.is_none() => {
                k = Some(
                    body.parse::<usize>()
                        .map_err(|_| line_error(lineno, format!("bad alphabet size {body:?}")))?,
                );
            }
            "w" if k.is_some() && word.is_none() => {
                word = Some(parse_word(body, k).map_err(|e| line_error(lineno, e.to_string()))?);
            }
            "D" if word.is_some() && decoder.is_none() => {
                decoder = Some(
                    parse_decoder(body, k.unwrap())
                        .map_err(|e| line_error(lineno, e.to_string()))?,
                );
            }
            _ => return Err(line_error(lineno, format!("unexpected line {line:?}"))),
        }
    }
    match (word, decoder) {
        (Some(w), Some(d)) => Ok(Lettering::new(w, d)?),
        _ => Err(FormatError::Invalid(
            "expected lines \"k …\", \"w …\" and \"D …\"".into(),
        )),
    }
}
