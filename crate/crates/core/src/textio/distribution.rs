use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::semantics::{Assignment, JointDistribution, Rational};
use crate::textio::ParseError;

/// Reads the pmf file format:
///
/// ```text
/// vars: X1:2 X2:2
/// 0 0 : 1/2
/// 1 1 : 1/2   # comments run to the end of the line
/// ```
///
/// Symbols are 0-based. Omitted assignments have probability zero. The
/// probabilities must be written `NUM/DEN` and sum to exactly 1.
///
/// ```
/// use cmikit::{entropy, parse_distribution, IndexSet};
///
/// let p = parse_distribution("vars: U:2 V:2\n0 0 : 1/2\n1 1 : 1/2\n").unwrap();
/// assert_eq!(entropy(&p, IndexSet::from([1, 2])), 1.0);
/// ```
pub fn parse_distribution(text: &str) -> Result<JointDistribution> {
    let mut header: Option<(Vec<String>, Vec<usize>)> = None;
    let mut rows: BTreeMap<Assignment, Rational> = BTreeMap::new();
    let mut total = Rational::zero();
    let mut last_line = 1;
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        last_line = line_no;
        let Some((names, sizes)) = &header else {
            header = Some(parse_header(line, line_no)?);
            continue;
        };
        let (assignment, prob) = parse_row(line, line_no, sizes)?;
        if rows.contains_key(&assignment) {
            return Err(ParseError::new(
                line_no,
                first_column(line),
                format!("assignment {} is listed twice", render_symbols(&assignment)),
            )
            .into());
        }
        debug_assert_eq!(names.len(), assignment.len());
        total += &prob;
        rows.insert(assignment, prob);
    }
    let Some((names, sizes)) = header else {
        return Err(ParseError::new(1, 1, "missing 'vars:' header").into());
    };
    if !total.is_one() {
        return Err(ParseError::new(
            last_line,
            1,
            format!("probabilities sum to {total}, not 1"),
        )
        .into());
    }
    JointDistribution::with_names(names, sizes, rows)
}

/// Writes the format [`parse_distribution`] reads: rows in lexicographic
/// order, probabilities in lowest terms, zero rows omitted.
pub fn render_distribution(p: &JointDistribution) -> String {
    let vars: Vec<String> = p
        .names()
        .iter()
        .zip(p.alphabet_sizes())
        .map(|(name, size)| format!("{name}:{size}"))
        .collect();
    let mut out = format!("vars: {}\n", vars.join(" "));
    for (x, q) in p.support() {
        out.push_str(&format!("{} : {}/{}\n", render_symbols(x), q.numer(), q.denom()));
    }
    out
}

fn render_symbols(x: &[u32]) -> String {
    x.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn first_column(line: &str) -> usize {
    line.len() - line.trim_start().len() + 1
}

/// Splits a line into whitespace-separated words with their 1-based columns.
fn words(line: &str, from: usize) -> impl Iterator<Item = (usize, &str)> {
    let mut col = from;
    line.split(|c: char| c.is_whitespace()).filter_map(move |w| {
        let at = col;
        col += w.chars().count() + 1;
        (!w.is_empty()).then_some((at, w))
    })
}

fn parse_header(line: &str, line_no: usize) -> Result<(Vec<String>, Vec<usize>), ParseError> {
    let start = first_column(line);
    let Some(rest) = line.trim_start().strip_prefix("vars:") else {
        return Err(ParseError::new(line_no, start, "expected a 'vars:' header"));
    };
    let mut names = Vec::new();
    let mut sizes = Vec::new();
    for (col, word) in words(rest, start + "vars:".len()) {
        let bad = || ParseError::new(line_no, col, format!("expected NAME:SIZE, found '{word}'"));
        let (name, size) = word.rsplit_once(':').ok_or_else(bad)?;
        let size: usize = size.parse().map_err(|_| bad())?;
        if name.is_empty() || size == 0 {
            return Err(bad());
        }
        if names.iter().any(|n: &String| n == name) {
            return Err(ParseError::new(line_no, col, format!("variable '{name}' declared twice")));
        }
        names.push(name.to_string());
        sizes.push(size);
    }
    if names.is_empty() {
        return Err(ParseError::new(line_no, start, "the header declares no variables"));
    }
    if names.len() > crate::index_set::MAX_VARIABLES {
        return Err(ParseError::new(line_no, start, "more than 64 variables"));
    }
    Ok((names, sizes))
}

fn parse_row(
    line: &str,
    line_no: usize,
    sizes: &[usize],
) -> Result<(Assignment, Rational), ParseError> {
    let Some((symbols, prob)) = line.split_once(':') else {
        return Err(ParseError::new(
            line_no,
            first_column(line),
            "expected 'SYMBOLS : NUM/DEN'",
        ));
    };
    let mut assignment = Vec::with_capacity(sizes.len());
    for (col, word) in words(symbols, 1) {
        let Some(&size) = sizes.get(assignment.len()) else {
            return Err(ParseError::new(
                line_no,
                col,
                format!("more than {} symbols", sizes.len()),
            ));
        };
        let symbol: u32 = word
            .parse()
            .map_err(|_| ParseError::new(line_no, col, format!("'{word}' is not a symbol")))?;
        if symbol as usize >= size {
            return Err(ParseError::new(
                line_no,
                col,
                format!(
                    "symbol {symbol} is outside the alphabet of variable {} (size {size})",
                    assignment.len() + 1
                ),
            ));
        }
        assignment.push(symbol);
    }
    let prob_col = symbols.chars().count() + 2;
    if assignment.len() != sizes.len() {
        return Err(ParseError::new(
            line_no,
            prob_col - 1,
            format!("expected {} symbols, found {}", sizes.len(), assignment.len()),
        ));
    }
    let mut fields = words(prob, prob_col);
    let Some((col, text)) = fields.next() else {
        return Err(ParseError::new(line_no, prob_col, "missing probability"));
    };
    if let Some((extra, _)) = fields.next() {
        return Err(ParseError::new(line_no, extra, "unexpected text after the probability"));
    }
    Ok((assignment, parse_rational(text).ok_or_else(|| {
        ParseError::new(line_no, col, format!("'{text}' is not a rational NUM/DEN"))
    })?))
}

fn parse_rational(text: &str) -> Option<Rational> {
    let (num, den) = text.split_once('/')?;
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !digits(den) {
        return None;
    }
    let num: BigUint = num.parse().ok()?;
    let den: BigUint = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num.into(), den.into()))
}
