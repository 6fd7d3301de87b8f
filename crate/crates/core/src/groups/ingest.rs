//! Text formats for externally supplied groups.
//!
//! Table format: `order n`, then `n` rows of `n` 0-based indices (row `i`
//! holds the products `i·j`), then optionally `generators i1 i2 ...`.
//! Permutation format: one `perm (a b c)(d e)` line per generator, 1-based.
//! Blank lines and `#` comments are ignored in both.

use super::construct::permutation_group;
use super::{Builder, FiniteGroup, Tag, TABLE_LIMIT};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

pub fn from_table(text: &str) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| format_err(1, "empty table"))?;
    let n: usize = header
        .strip_prefix("order")
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| format_err(first, "expected 'order n'"))?;
    if n == 0 || n > TABLE_LIMIT {
        return Err(format_err(
            first,
            format!("order must be in 1..={TABLE_LIMIT}"),
        ));
    }
    let mut table = Vec::with_capacity(n * n);
    let mut last = first;
    for row in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| format_err(last + 1, format!("missing row {row}")))?;
        last = ln;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != n {
            return Err(format_err(
                ln,
                format!("row {row} has {} entries, expected {n}", entries.len()),
            ));
        }
        for tok in entries {
            let v: usize = tok
                .parse()
                .map_err(|_| format_err(ln, format!("'{tok}' is not an index")))?;
            if v >= n {
                return Err(format_err(ln, format!("index {v} out of range")));
            }
            table.push(v as u32);
        }
    }
    let mut gens = Vec::new();
    if let Some((ln, line)) = lines.next() {
        let rest = line
            .strip_prefix("generators")
            .ok_or_else(|| format_err(ln, "expected 'generators ...' or end of input"))?;
        for tok in rest.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| format_err(ln, format!("'{tok}' is not an index")))?;
            if v >= n {
                return Err(format_err(ln, format!("generator {v} out of range")));
            }
            gens.push(v);
        }
        if let Some((ln, _)) = lines.next() {
            return Err(format_err(ln, "trailing input after generators"));
        }
    }
    let names = (1..=gens.len()).map(|i| format!("g{i}")).collect();
    Builder::new(n, move |a, b| table[a * n + b] as usize, Tag::Table)
        .generators(gens, names)
        .build()
}

fn parse_cycles(ln: usize, text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format_err(ln, format!("expected '(' at '{rest}'")))?;
        let close = body
            .find(')')
            .ok_or_else(|| format_err(ln, "unclosed cycle"))?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| match s.parse::<usize>() {
                Ok(p) if p >= 1 => Ok(p),
                _ => Err(format_err(ln, format!("'{s}' is not a 1-based point"))),
            })
            .collect::<Result<Vec<_>>>()?;
        cycles.push(points);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

pub fn from_permutations(text: &str) -> Result<FiniteGroup> {
    let mut parsed = Vec::new();
    for (ln, line) in content_lines(text) {
        let body = line
            .strip_prefix("perm")
            .ok_or_else(|| format_err(ln, "expected 'perm (...)'"))?;
        parsed.push((ln, parse_cycles(ln, body)?));
    }
    if parsed.is_empty() {
        return Err(format_err(1, "no permutations given"));
    }
    let degree = parsed
        .iter()
        .flat_map(|(_, c)| c.iter().flatten())
        .copied()
        .max()
        .unwrap_or(1);
    if degree > 255 {
        return Err(Error::Unsupported(format!("permutation degree {degree}")));
    }
    let mut gens = Vec::new();
    for (ln, cycles) in &parsed {
        let mut p: Vec<u8> = (0..degree as u8).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if std::mem::replace(&mut seen[a - 1], true) {
                    return Err(format_err(*ln, format!("point {a} appears twice")));
                }
                p[a - 1] = (cycle[(i + 1) % cycle.len()] - 1) as u8;
            }
        }
        gens.push(p);
    }
    let names = (1..=gens.len()).map(|i| format!("g{i}")).collect();
    permutation_group(degree, gens, names, Tag::Permutation)
}
