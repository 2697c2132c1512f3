//! Parsing of user-supplied graph descriptions.
//!
//! Lists are integers separated by commas and/or whitespace; an empty or
//! blank string is the empty list.

use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, DivisorSet};

/// Parses `"1,5"`, `"1 5"`, `"1, 5"` and the like.
pub fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: {tok:?}")))
        })
        .collect()
}

pub fn parse_u64(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not a nonnegative integer: {s:?}")))
}

/// How a graph was described on input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphInput {
    Symbol(Vec<u64>),
    Divisors(Vec<u64>),
}

impl GraphInput {
    pub fn build(&self, n: u64) -> Result<CirculantGraph> {
        match self {
            GraphInput::Symbol(s) => CirculantGraph::from_symbol(n, s.iter().copied()),
            GraphInput::Divisors(d) => {
                let d = DivisorSet::new(n, d.iter().copied())?;
                Ok(CirculantGraph::from_divisor_set(&d))
            }
        }
    }
}

/// Parses a one-line description such as `6: 1,5` (symbol) or
/// `6 / 1` (divisor set).
pub fn parse_graph_line(line: &str) -> Result<(u64, GraphInput)> {
    let (head, tail, divisors) = if let Some((h, t)) = line.split_once(':') {
        (h, t, false)
    } else if let Some((h, t)) = line.split_once('/') {
        (h, t, true)
    } else {
        return Err(Error::Parse(
            "expected `n: symbol` or `n / divisors`".into(),
        ));
    };
    let n = parse_u64(head)?;
    let list = parse_u64_list(tail)?;
    let input = if divisors {
        GraphInput::Divisors(list)
    } else {
        GraphInput::Symbol(list)
    };
    Ok((n, input))
}

/// Parses a graph line and validates it into a graph.
pub fn parse_graph(line: &str) -> Result<CirculantGraph> {
    let (n, input) = parse_graph_line(line)?;
    input.build(n)
}
