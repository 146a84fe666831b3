//! Input formats: ideal files, matrix files and integer vectors.
//!
//! An ideal file looks like
//!
//! ```text
//! vars: x y z w
//! order: degrevlex
//! x^7 - y^2*z
//! x^4*w - y^3
//! ```
//!
//! The order line is `lex`, `degrevlex` or `weight c1 ... cn`. Variables are
//! ranked by declaration order, the first being the largest.

use std::fmt;

use toric_janet::text::{parse_binomial, TextError};
use toric_janet::{Binomial, Matrix, MonomialOrder, VarNames};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{} at line {}", self.message, self.line)
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct IdealFile {
    pub names: VarNames,
    pub order: MonomialOrder,
    pub generators: Vec<Binomial>,
}

fn header<'a>(line: Option<(usize, &'a str)>, key: &str) -> Result<&'a str, ParseError> {
    let (no, text) = line.ok_or_else(|| ParseError::new(0, format!("missing `{key}:` line")))?;
    text.trim()
        .strip_prefix(key)
        .and_then(|rest| rest.trim_start().strip_prefix(':'))
        .map(str::trim)
        .ok_or_else(|| ParseError::new(no + 1, format!("expected `{key}: ...`")))
}

pub fn parse_order(spec: &str, nvars: usize) -> Result<MonomialOrder, String> {
    let mut words = spec.split_whitespace();
    match words.next() {
        Some("lex") if words.next().is_none() => Ok(MonomialOrder::Lex),
        Some("degrevlex") if words.next().is_none() => Ok(MonomialOrder::DegRevLex),
        Some("weight") => {
            let weights = words
                .map(|w| w.parse::<u64>().map_err(|_| format!("invalid weight `{w}`")))
                .collect::<Result<Vec<_>, _>>()?;
            if weights.len() != nvars {
                return Err(format!("weight order needs {nvars} weights, found {}", weights.len()));
            }
            Ok(MonomialOrder::weighted(weights))
        }
        _ => Err(format!("unknown order `{spec}`")),
    }
}

pub fn parse_ideal(text: &str) -> Result<IdealFile, ParseError> {
    let mut lines = text.lines().enumerate();
    let vars = header(lines.next(), "vars")?;
    let names = VarNames::new(vars.split_whitespace()).map_err(|e| ParseError::new(1, e.to_string()))?;
    if names.is_empty() {
        return Err(ParseError::new(1, "no variables declared"));
    }
    let order_spec = header(lines.next(), "order")?;
    let order = parse_order(order_spec, names.len()).map_err(|e| ParseError::new(2, e))?;
    let mut generators = Vec::new();
    for (no, line) in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let b = parse_binomial(line, &names, &order).map_err(|e| {
            let message = match e {
                TextError::ZeroBinomial(_) => "zero binomial".to_string(),
                e => e.to_string(),
            };
            ParseError::new(no + 1, message)
        })?;
        generators.push(b);
    }
    if generators.is_empty() {
        return Err(ParseError::new(0, "no generators"));
    }
    Ok(IdealFile { names, order, generators })
}

/// Whitespace- or comma-separated integers.
pub fn parse_ints(text: &str) -> Result<Vec<i64>, String> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|w| !w.is_empty())
        .map(|w| w.parse::<i64>().map_err(|_| format!("invalid integer `{w}`")))
        .collect()
}

pub fn parse_nonneg(text: &str) -> Result<Vec<u64>, String> {
    parse_ints(text)?
        .into_iter()
        .map(|k| u64::try_from(k).map_err(|_| format!("negative entry {k}")))
        .collect()
}

/// First line `m n`, then `m` rows of `n` integers.
pub fn parse_matrix(text: &str) -> Result<Matrix, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (no, dims) = lines.next().ok_or_else(|| ParseError::new(0, "empty matrix file"))?;
    let dims = parse_ints(dims).map_err(|e| ParseError::new(no + 1, e))?;
    let [m, n] = dims[..] else {
        return Err(ParseError::new(no + 1, "expected `m n`"));
    };
    if m < 0 || n <= 0 {
        return Err(ParseError::new(no + 1, "matrix dimensions must be positive"));
    }
    let mut rows = Vec::with_capacity(m as usize);
    for (no, line) in lines {
        let row = parse_ints(line).map_err(|e| ParseError::new(no + 1, e))?;
        if row.len() != n as usize {
            return Err(ParseError::new(no + 1, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != m as usize {
        return Err(ParseError::new(0, format!("expected {m} rows, found {}", rows.len())));
    }
    Matrix::from_rows(rows, n as usize).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Right-hand side, cost vector and starting point.
pub type IpVectors = (Vec<i64>, Vec<u64>, Vec<u64>);

/// `b`, `c` and `x0`, one per line, each optionally labelled (`b: 5`).
pub fn parse_vectors(text: &str) -> Result<IpVectors, ParseError> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).collect();
    if lines.len() != 3 {
        return Err(ParseError::new(0, format!("expected 3 vector lines (b, c, x0), found {}", lines.len())));
    }
    let body = |(no, line): (usize, &str), label: &str| -> (usize, String) {
        let line = line.trim();
        let rest = line
            .strip_prefix(label)
            .and_then(|r| r.trim_start().strip_prefix(':'))
            .unwrap_or(line);
        (no + 1, rest.to_string())
    };
    let (nb, b) = body(lines[0], "b");
    let (nc, c) = body(lines[1], "c");
    let (nx, x0) = body(lines[2], "x0");
    Ok((
        parse_ints(&b).map_err(|e| ParseError::new(nb, e))?,
        parse_nonneg(&c).map_err(|e| ParseError::new(nc, e))?,
        parse_nonneg(&x0).map_err(|e| ParseError::new(nx, e))?,
    ))
}
