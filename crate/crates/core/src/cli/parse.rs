//! Plain-text matrix and vector files.
//!
//! ```text
//! 2 4          <- header: rows cols (a vector file has just: dim)
//! 1 0 1 1      <- rows·cols whitespace-separated entries, any line layout
//! 0 1 0 1
//! ```
//!
//! Entries are integers or fractions `a/b`. A `#` starts a comment that runs
//! to the end of the line.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::{RMatrix, RVector, Rational};

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(src: &str) -> impl Iterator<Item = Token<'_>> {
    src.lines().enumerate().flat_map(|(ln, line)| {
        let body = line.split('#').next().unwrap_or("");
        body.char_indices()
            .filter(move |&(i, c)| {
                !c.is_whitespace()
                    && body[..i]
                        .chars()
                        .next_back()
                        .is_none_or(char::is_whitespace)
            })
            .map(move |(i, _)| {
                let rest = &body[i..];
                let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
                Token {
                    text: &rest[..end],
                    line: ln + 1,
                    column: body[..i].chars().count() + 1,
                }
            })
    })
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses an integer or `a/b` token exactly.
pub fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num = BigInt::from_str(num).map_err(|_| format!("malformed number `{text}`"))?;
    let den = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| format!("malformed number `{text}`"))?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(Rational::new(num, den))
}

fn parse_dim(tok: &Token<'_>) -> Result<usize> {
    match tok.text.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(parse_error(
            tok.line,
            tok.column,
            format!(
                "expected a positive integer dimension, found `{}`",
                tok.text
            ),
        )),
    }
}

fn parse_entries<'a>(
    mut toks: impl Iterator<Item = Token<'a>>,
    count: usize,
    header_line: usize,
) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(count);
    let mut last_line = header_line;
    for tok in toks.by_ref().take(count) {
        last_line = tok.line;
        out.push(parse_rational(tok.text).map_err(|m| parse_error(tok.line, tok.column, m))?);
    }
    if out.len() < count {
        return Err(parse_error(
            last_line,
            0,
            format!("expected {count} entries, found {}", out.len()),
        ));
    }
    if let Some(extra) = toks.next() {
        return Err(parse_error(
            extra.line,
            extra.column,
            format!("unexpected extra entry `{}` (expected {count})", extra.text),
        ));
    }
    Ok(out)
}

fn header_on_first_line<'a>(tok: Option<Token<'a>>, what: &str) -> Result<Token<'a>> {
    tok.ok_or_else(|| parse_error(1, 1, format!("empty input: missing {what} header")))
}

pub fn parse_matrix(src: &str) -> Result<RMatrix> {
    let mut toks = tokens(src);
    let rows_tok = header_on_first_line(toks.next(), "`rows cols`")?;
    let rows = parse_dim(&rows_tok)?;
    let cols_tok = toks
        .next()
        .filter(|t| t.line == rows_tok.line)
        .ok_or_else(|| parse_error(rows_tok.line, rows_tok.column, "header needs `rows cols`"))?;
    let cols = parse_dim(&cols_tok)?;
    let entries = parse_entries(toks, rows * cols, rows_tok.line)?;
    RMatrix::new(rows, cols, entries)
}

pub fn parse_vector(src: &str) -> Result<RVector> {
    let mut toks = tokens(src);
    let dim_tok = header_on_first_line(toks.next(), "`dim`")?;
    let dim = parse_dim(&dim_tok)?;
    let entries = parse_entries(toks, dim, dim_tok.line)?;
    RVector::new(entries)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

pub fn read_matrix(path: &Path) -> Result<RMatrix> {
    parse_matrix(&read(path)?)
}

pub fn read_vector(path: &Path) -> Result<RVector> {
    parse_vector(&read(path)?)
}
