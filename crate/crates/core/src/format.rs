//! Text formats for ideals, graphs and semigroups.
//!
//! Every format is a sequence of `key: value` lines. Blank lines and lines
//! starting with `#` are ignored. Errors report 1-based line and column.

use crate::algebra::parse_monomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{MonomialIdeal, PolynomialRing};
use crate::semigroup::{NumericalSemigroup, RelativeIdeal};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A `key: value` line with the 1-based column where the value starts.
struct Field<'a> {
    line: usize,
    value: &'a str,
    column: usize,
}

impl Field<'_> {
    /// Comma-separated items with their starting columns, trimmed.
    fn items(&self) -> Vec<(&str, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        for piece in self.value.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            out.push((piece.trim(), self.column + start + lead));
            start += piece.len() + 1;
        }
        if out.len() == 1 && out[0].0.is_empty() {
            out.clear();
        }
        out
    }

    fn integers(&self) -> Result<Vec<i64>> {
        self.items()
            .into_iter()
            .map(|(s, col)| {
                if s.is_empty() {
                    return Err(parse_err(self.line, col, "empty list item"));
                }
                s.parse::<i64>()
                    .map_err(|_| parse_err(self.line, col, format!("`{s}` is not an integer")))
            })
            .collect()
    }

    fn invalid(&self, e: Error) -> Error {
        match e {
            Error::Invalid(msg) | Error::PreconditionViolated(msg) => {
                parse_err(self.line, self.column, msg)
            }
            other => other,
        }
    }
}

fn fields<'a>(text: &'a str, keys: &[&'static str]) -> Result<Vec<(&'static str, Field<'a>)>> {
    let mut out: Vec<(&'static str, Field)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim_start();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let indent = raw.len() - body.len();
        let Some(colon) = body.find(':') else {
            return Err(parse_err(line, indent + 1, "expected `key: value`"));
        };
        let key = body[..colon].trim();
        let Some(&key) = keys.iter().find(|&&k| k == key) else {
            return Err(parse_err(
                line,
                indent + 1,
                format!("unknown key `{key}`, expected one of: {}", keys.join(", ")),
            ));
        };
        if out.iter().any(|(k, _)| *k == key) {
            return Err(parse_err(line, indent + 1, format!("`{key}` given twice")));
        }
        let rest = &body[colon + 1..];
        out.push((
            key,
            Field {
                line,
                value: rest.trim_end(),
                column: indent + colon + 2,
            },
        ));
    }
    Ok(out)
}

fn take<'a, 'b>(fields: &'b [(&'static str, Field<'a>)], key: &str) -> Option<&'b Field<'a>> {
    fields.iter().find(|(k, _)| *k == key).map(|(_, f)| f)
}

fn require<'a, 'b>(
    fields: &'b [(&'static str, Field<'a>)],
    key: &str,
    text: &str,
) -> Result<&'b Field<'a>> {
    take(fields, key).ok_or_else(|| {
        let last = text.lines().count().max(1);
        parse_err(last, 1, format!("missing `{key}:` line"))
    })
}

/// Parses `vars: x,y,z` / `gens: x*y, x*z` into a minimalized ideal. An
/// empty `gens:` list gives the zero ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let fs = fields(text, &["vars", "gens"])?;
    let vars = require(&fs, "vars", text)?;
    let gens = require(&fs, "gens", text)?;
    let mut names = Vec::new();
    for (name, col) in vars.items() {
        if name.is_empty() {
            return Err(parse_err(vars.line, col, "empty variable name"));
        }
        names.push(name.to_string());
    }
    let ring = PolynomialRing::new(names).map_err(|e| vars.invalid(e))?;
    let mut monos = Vec::new();
    for (item, col) in gens.items() {
        if item.is_empty() {
            return Err(parse_err(gens.line, col, "empty generator"));
        }
        let m = parse_monomial(item, ring.names()).map_err(|e| match e {
            Error::Parse {
                column, message, ..
            } => parse_err(gens.line, col + column - 1, message),
            other => other,
        })?;
        monos.push(m);
    }
    Ok(MonomialIdeal::new(&ring, monos))
}

/// The ideal in the format read by [`parse_ideal`].
pub fn ideal_to_text(ideal: &MonomialIdeal) -> String {
    format!(
        "vars: {}\ngens: {}\n",
        ideal.ring().names().join(","),
        ideal.generator_strings().join(", ")
    )
}

/// Parses `vertices: 4` / `edges: 1-2, 2-3` with 1-based vertices.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let fs = fields(text, &["vertices", "edges"])?;
    let v = require(&fs, "vertices", text)?;
    let e = require(&fs, "edges", text)?;
    let n: usize = v.value.trim().parse().map_err(|_| {
        parse_err(
            v.line,
            v.column + 1,
            format!("`{}` is not a vertex count", v.value.trim()),
        )
    })?;
    let mut edges = Vec::new();
    for (item, col) in e.items() {
        let parsed = item.split_once('-').and_then(|(a, b)| {
            Some((
                a.trim().parse::<usize>().ok()?,
                b.trim().parse::<usize>().ok()?,
            ))
        });
        match parsed {
            Some((a, b)) if a >= 1 && b >= 1 => edges.push((a - 1, b - 1)),
            _ => {
                return Err(parse_err(
                    e.line,
                    col,
                    format!("`{item}` is not an edge `i-j` with i, j >= 1"),
                ))
            }
        }
    }
    Graph::new(n, edges).map_err(|err| e.invalid(err))
}

pub fn graph_to_text(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|&(a, b)| format!("{}-{}", a + 1, b + 1))
        .collect();
    format!(
        "vertices: {}\nedges: {}\n",
        g.num_vertices(),
        edges.join(", ")
    )
}

/// Parses `gens: 4,5` and an optional `ideal: 12,13` line.
pub fn parse_semigroup_file(text: &str) -> Result<(NumericalSemigroup, Option<RelativeIdeal>)> {
    let fs = fields(text, &["gens", "ideal"])?;
    let g = require(&fs, "gens", text)?;
    let s = NumericalSemigroup::new(&g.integers()?).map_err(|e| g.invalid(e))?;
    let ideal = match take(&fs, "ideal") {
        Some(f) => Some(RelativeIdeal::new(&s, f.integers()?).map_err(|e| f.invalid(e))?),
        None => None,
    };
    Ok((s, ideal))
}

/// Parses an inline integer list such as `4,5` or `12, 13, 14`.
pub fn parse_integer_list(text: &str) -> Result<Vec<i64>> {
    Field {
        line: 1,
        value: text,
        column: 1,
    }
    .integers()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_files() {
        let i = parse_ideal("vars: x,y,z\ngens: x*y, x*z").unwrap();
        assert_eq!(i.to_string(), "(x*y, x*z)");
        assert_eq!(
            parse_ideal("vars: x\ngens: x^2, x").unwrap().to_string(),
            "(x)"
        );
        assert!(parse_ideal("# comment\n\nvars: a, b\ngens:\n")
            .unwrap()
            .is_zero());
        let back = parse_ideal(&ideal_to_text(&i)).unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn ideal_errors() {
        assert!(matches!(parse_ideal("gens: x*y"), Err(Error::Parse { .. })));
        let e = parse_ideal("vars: x,y\ngens: x*y, x*w").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 2,
                column: 14,
                message: "undeclared variable `w`".into()
            }
        );
        let e = parse_ideal("vars: x,x\ngens: x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_ideal("vars: x\nfoo: 1").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse {
                line: 2,
                column: 1,
                ..
            }
        ));
    }

    #[test]
    fn graph_files() {
        let g = parse_graph("vertices: 4\nedges: 1-2, 2-3, 3-4, 4-1").unwrap();
        assert_eq!(g.num_edges(), 4);
        assert_eq!(parse_graph(&graph_to_text(&g)).unwrap(), g);
        let e = parse_graph("vertices: 3\nedges: 1-2, 2-x").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse {
                line: 2,
                column: 13,
                ..
            }
        ));
        assert!(matches!(
            parse_graph("vertices: 3\nedges: 1-1"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn semigroup_files() {
        let (s, i) = parse_semigroup_file("gens: 4,5\nideal: 12,13,14,15").unwrap();
        assert_eq!(s.generators(), &[4, 5]);
        assert_eq!(i.unwrap().gens(), &[12, 13, 14, 15]);
        assert!(matches!(
            parse_semigroup_file("gens: 4,6"),
            Err(Error::Parse { line: 1, .. })
        ));
        let e = parse_semigroup_file("gens: 4, five").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse {
                line: 1,
                column: 10,
                ..
            }
        ));
        assert_eq!(parse_integer_list("3, 4,5").unwrap(), vec![3, 4, 5]);
    }
}
