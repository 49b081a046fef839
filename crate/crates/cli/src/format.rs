//! Text formats.
//!
//! Every file starts with a header line `pratt-<kind> 1`. Blank lines are
//! ignored and `#` starts a comment running to the end of the line. Words are
//! bitstrings whose leftmost character is element 0; over an empty ground
//! set the only word is written `-`.
//!
//! ```text
//! pratt-structure 1
//! size 3
//! labels a b c      # optional, whitespace-free tokens
//! 000
//! 100
//! 111
//! ```
//!
//! A crossword file (`pratt-crossword 1`) has a `size` line followed by
//! exactly `size` rows. A chains file (`pratt-chains 1`) has `size`, optional
//! `labels`, then an `xs` line, the descending chain, a `ys` line and the
//! ascending chain. A tuples file (`pratt-tuples 1`) lists one tuple per
//! line as whitespace-separated tokens, all of the same length.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use pratt_core::{Crossword, Family, GroundSet, Word};

use crate::error::{CliError, CliResult};

/// A loaded family together with the warnings raised while reading it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loaded {
    pub family: Family,
    pub warnings: Vec<String>,
}

/// Two chains over a common ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chains {
    pub ground: GroundSet,
    pub xs: Vec<Word>,
    pub ys: Vec<Word>,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

#[derive(Debug)]
struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

/// Content lines with comments stripped, tokenized on whitespace.
fn content_lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, (byte, c)) in body.char_indices().enumerate() {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some((byte, col)),
                (true, Some((b, k))) => {
                    tokens.push(Token { text: &body[b..byte], column: k + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some((b, k)) = start {
            tokens.push(Token { text: &body[b..], column: k + 1 });
        }
        if !tokens.is_empty() {
            out.push(Line { number: i + 1, tokens });
        }
    }
    out
}

struct Reader<'a> {
    origin: &'a str,
    lines: Vec<Line<'a>>,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(origin: &'a str, text: &'a str) -> Self {
        Reader { origin, lines: content_lines(text), pos: 0 }
    }

    fn error(&self, line: usize, column: usize, message: impl Into<String>) -> CliError {
        CliError::Parse { origin: self.origin.to_string(), line, column, message: message.into() }
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn next(&mut self, what: &str) -> CliResult<&Line<'a>> {
        let last = self.lines.last().map_or(0, |l| l.number);
        match self.lines.get(self.pos) {
            Some(_) => {
                self.pos += 1;
                Ok(&self.lines[self.pos - 1])
            }
            None => Err(self.error(last + 1, 1, format!("unexpected end of input, expected {what}"))),
        }
    }

    fn header(&mut self, kind: &str) -> CliResult<()> {
        let line = self.next("a header")?;
        let tag = format!("pratt-{kind}");
        let (number, t0) = (line.number, line.tokens[0]);
        let version = line.tokens.get(1).copied();
        let extra = line.tokens.get(2).copied();
        if t0.text != tag {
            return Err(self.error(number, t0.column, format!("expected header `{tag} 1`, found `{}`", t0.text)));
        }
        match version {
            Some(v) if v.text == "1" => {}
            Some(v) => return Err(self.error(number, v.column, format!("unsupported version `{}`", v.text))),
            None => return Err(self.error(number, t0.column + tag.chars().count(), "missing version")),
        }
        if let Some(t) = extra {
            return Err(self.error(number, t.column, "unexpected token after the header"));
        }
        Ok(())
    }

    fn size(&mut self) -> CliResult<usize> {
        let line = self.next("a `size` line")?;
        let number = line.number;
        let toks = line.tokens.clone();
        if toks[0].text != "size" {
            return Err(self.error(number, toks[0].column, format!("expected `size`, found `{}`", toks[0].text)));
        }
        let Some(value) = toks.get(1) else {
            return Err(self.error(number, toks[0].column + 4, "missing ground size"));
        };
        if let Some(t) = toks.get(2) {
            return Err(self.error(number, t.column, "unexpected token after the size"));
        }
        value
            .text
            .parse()
            .map_err(|_| self.error(number, value.column, format!("invalid size `{}`", value.text)))
    }

    fn ground(&mut self, size: usize) -> CliResult<GroundSet> {
        let Some(line) = self.peek() else { return Ok(GroundSet::new(size)) };
        if line.tokens[0].text != "labels" {
            return Ok(GroundSet::new(size));
        }
        let number = line.number;
        let column = line.tokens[0].column;
        let labels: Vec<String> = line.tokens[1..].iter().map(|t| t.text.to_string()).collect();
        self.pos += 1;
        if labels.len() != size {
            return Err(self.error(number, column, format!("{} labels for a ground set of size {size}", labels.len())));
        }
        GroundSet::with_labels(labels).map_err(|e| self.error(number, column, e.to_string()))
    }

    /// The single word on `line`.
    fn word(&self, line: &Line<'_>, size: usize) -> CliResult<Word> {
        let tok = line.tokens[0];
        if let Some(t) = line.tokens.get(1) {
            return Err(self.error(line.number, t.column, "expected one word per line"));
        }
        if size == 0 {
            return if tok.text == "-" {
                Ok(Word::empty(0))
            } else {
                Err(self.error(line.number, tok.column, "the only word over an empty ground set is `-`"))
            };
        }
        if let Some((i, c)) = tok.text.chars().enumerate().find(|&(_, c)| c != '0' && c != '1') {
            return Err(self.error(line.number, tok.column + i, format!("expected `0` or `1`, found `{c}`")));
        }
        let len = tok.text.chars().count();
        if len != size {
            return Err(self.error(line.number, tok.column, format!("word has length {len}, expected {size}")));
        }
        Ok(Word::parse_bits(tok.text).expect("characters were checked"))
    }
}

/// Parses a structure file. Duplicate words are dropped with a warning.
pub fn parse_structure(text: &str, origin: &str) -> CliResult<Loaded> {
    let mut r = Reader::new(origin, text);
    r.header("structure")?;
    let size = r.size()?;
    let ground = r.ground(size)?;
    let mut seen: HashMap<Word, usize> = HashMap::new();
    let mut warnings = Vec::new();
    while let Some(line) = r.peek() {
        let word = r.word(line, size)?;
        match seen.get(&word) {
            Some(first) => warnings.push(format!(
                "{origin}:{}: duplicate word {word} (first on line {first}) ignored",
                line.number
            )),
            None => {
                seen.insert(word, line.number);
            }
        }
        r.pos += 1;
    }
    let family = Family::canonicalize(ground, seen.into_keys())?;
    Ok(Loaded { family, warnings })
}

fn word_text(w: &Word) -> String {
    let bits = w.to_bits();
    if bits.is_empty() {
        "-".to_string()
    } else {
        bits
    }
}

fn header_text(kind: &str, ground: &GroundSet) -> String {
    let mut out = format!("pratt-{kind} 1\nsize {}\n", ground.size());
    if let Some(labels) = ground.labels() {
        out.push_str("labels");
        for l in labels {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    out
}

/// Canonical text of a family. Labels are written as-is, so they should not
/// contain whitespace or `#`.
pub fn write_structure(f: &Family) -> String {
    let mut out = header_text("structure", f.ground());
    for w in f.iter() {
        out.push_str(&word_text(w));
        out.push('\n');
    }
    out
}

pub fn parse_crossword(text: &str, origin: &str) -> CliResult<Crossword> {
    let mut r = Reader::new(origin, text);
    r.header("crossword")?;
    let size = r.size()?;
    let mut rows = Vec::with_capacity(size);
    while let Some(line) = r.peek() {
        if rows.len() == size {
            return Err(r.error(line.number, line.tokens[0].column, format!("more than {size} rows")));
        }
        rows.push(r.word(line, size)?);
        r.pos += 1;
    }
    if rows.len() != size {
        let last = r.lines.last().map_or(0, |l| l.number);
        return Err(r.error(last + 1, 1, format!("{} rows, expected {size}", rows.len())));
    }
    Ok(Crossword::from_rows(rows)?)
}

pub fn write_crossword(c: &Crossword) -> String {
    let mut out = format!("pratt-crossword 1\nsize {}\n", c.size());
    for r in c.rows() {
        out.push_str(&word_text(r));
        out.push('\n');
    }
    out
}

pub fn parse_chains(text: &str, origin: &str) -> CliResult<Chains> {
    let mut r = Reader::new(origin, text);
    r.header("chains")?;
    let size = r.size()?;
    let ground = r.ground(size)?;
    let mut chains: [Vec<Word>; 2] = [Vec::new(), Vec::new()];
    let mut current: Option<usize> = None;
    while let Some(line) = r.peek() {
        let tok = line.tokens[0];
        let marker = match tok.text {
            "xs" => Some(0),
            "ys" => Some(1),
            _ => None,
        };
        match (marker, current) {
            (Some(0), None) | (Some(1), Some(0)) => {
                if let Some(t) = line.tokens.get(1) {
                    return Err(r.error(line.number, t.column, "unexpected token after the chain marker"));
                }
                current = marker;
            }
            (Some(_), _) => return Err(r.error(line.number, tok.column, "chains must appear as `xs` then `ys`")),
            (None, None) => return Err(r.error(line.number, tok.column, "expected `xs`")),
            (None, Some(k)) => chains[k].push(r.word(line, size)?),
        }
        r.pos += 1;
    }
    if current != Some(1) {
        let last = r.lines.last().map_or(0, |l| l.number);
        return Err(r.error(last + 1, 1, "missing `ys` section"));
    }
    let [xs, ys] = chains;
    Ok(Chains { ground, xs, ys })
}

pub fn write_chains(c: &Chains) -> String {
    let mut out = header_text("chains", &c.ground);
    for (marker, chain) in [("xs", &c.xs), ("ys", &c.ys)] {
        out.push_str(marker);
        out.push('\n');
        for w in chain {
            out.push_str(&word_text(w));
            out.push('\n');
        }
    }
    out
}

pub fn parse_tuples(text: &str, origin: &str) -> CliResult<Vec<Vec<String>>> {
    let mut r = Reader::new(origin, text);
    r.header("tuples")?;
    let mut out: Vec<Vec<String>> = Vec::new();
    while let Some(line) = r.peek() {
        if let Some(first) = out.first() {
            if line.tokens.len() != first.len() {
                return Err(r.error(
                    line.number,
                    line.tokens[0].column,
                    format!("tuple has {} entries, expected {}", line.tokens.len(), first.len()),
                ));
            }
        }
        out.push(line.tokens.iter().map(|t| t.text.to_string()).collect());
        r.pos += 1;
    }
    Ok(out)
}

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn load_structure(path: &Path) -> CliResult<Loaded> {
    parse_structure(&read(path)?, &path.display().to_string())
}

pub fn save_structure(f: &Family, path: &Path) -> CliResult<()> {
    write(path, &write_structure(f))
}
