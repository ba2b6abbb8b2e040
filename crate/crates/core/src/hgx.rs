//! The HGX text format and JSON renderings of sums.
//!
//! Matrix form: a header line `m n`, then `m` rows of exactly `n` characters
//! from `{0,1}`, character `v` of row `e` set iff vertex `v` lies on edge `e`.
//! Blank lines and lines starting with `#` are ignored; `# name: …` names the
//! document. When `n = 0` the rows are empty and are omitted.
//!
//! JSON form: `{"vertices": n, "edges": [[v, …], …]}` with an optional `"name"`.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, MAX_WIDTH};
use crate::linear::{Key, LinComb, Pair, Triple};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HgxDocument {
    pub name: Option<String>,
    pub hypergraph: Hypergraph,
}

impl HgxDocument {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("# name: {name}\n"));
        }
        out.push_str(&to_hgx(&self.hypergraph));
        out
    }
}

pub fn parse_hgx(text: &str) -> Result<Hypergraph> {
    parse_document(text).map(|d| d.hypergraph)
}

pub fn parse_document(text: &str) -> Result<HgxDocument> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_matrix(text)
    }
}

fn parse_matrix(text: &str) -> Result<HgxDocument> {
    let mut name = None;
    let mut header: Option<(usize, usize, usize)> = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("name:") {
                name = Some(n.trim().to_string());
            }
            continue;
        }
        let Some((m, n, _)) = header else {
            header = Some(parse_header(line, line_no)?);
            continue;
        };
        if rows.len() == m {
            return Err(Error::parse(line_no, format!("more than the declared {m} rows")));
        }
        if line.chars().count() != n {
            return Err(Error::parse(
                line_no,
                format!("row has {} characters, expected {n}", line.chars().count()),
            ));
        }
        let mut row = 0u64;
        for (v, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => row |= 1 << v,
                other => return Err(Error::parse(line_no, format!("bad character {other:?}"))),
            }
        }
        rows.push(row);
    }
    let Some((m, n, header_line)) = header else {
        return Err(Error::parse(text.lines().count().max(1), "missing `m n` header"));
    };
    if n == 0 {
        rows = vec![0; m];
    } else if rows.len() != m {
        return Err(Error::parse(
            text.lines().count().max(header_line),
            format!("{} rows, expected {m}", rows.len()),
        ));
    }
    let hypergraph = Hypergraph::new(n, rows).map_err(|e| Error::parse(header_line, e.to_string()))?;
    Ok(HgxDocument { name, hypergraph })
}

fn parse_header(line: &str, line_no: usize) -> Result<(usize, usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [m, n] = fields[..] else {
        return Err(Error::parse(line_no, format!("expected `m n`, got {line:?}")));
    };
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::parse(line_no, format!("bad count {s:?}")))
    };
    let (m, n) = (num(m)?, num(n)?);
    if m > MAX_WIDTH || n > MAX_WIDTH {
        return Err(Error::parse(line_no, format!("{m}x{n} exceeds {MAX_WIDTH}x{MAX_WIDTH}")));
    }
    Ok((m, n, line_no))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDoc {
    vertices: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default)]
    name: Option<String>,
}

fn parse_json(text: &str) -> Result<HgxDocument> {
    let doc: JsonDoc =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    let line = text
        .find("\"edges\"")
        .map_or(1, |pos| text[..pos].matches('\n').count() + 1);
    let n = doc.vertices;
    if n > MAX_WIDTH || doc.edges.len() > MAX_WIDTH {
        return Err(Error::parse(line, format!("exceeds {MAX_WIDTH} vertices or edges")));
    }
    let mut rows = Vec::with_capacity(doc.edges.len());
    for (e, edge) in doc.edges.iter().enumerate() {
        let mut row = 0u64;
        for &v in edge {
            if v >= n {
                return Err(Error::parse(line, format!("edge {e}: vertex {v} out of range 0..{n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::parse(line, format!("edge {e}: vertex {v} repeated")));
            }
            row |= 1 << v;
        }
        rows.push(row);
    }
    let hypergraph = Hypergraph::new(n, rows).map_err(|e| Error::parse(line, e.to_string()))?;
    Ok(HgxDocument { name: doc.name, hypergraph })
}

/// Matrix form, newline terminated.
pub fn to_hgx(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.edge_count(), h.vertex_count());
    if h.vertex_count() > 0 {
        for e in 0..h.edge_count() {
            out.push_str(&h.row_string(e));
            out.push('\n');
        }
    }
    out
}

pub fn key_hgx(k: &Key) -> String {
    to_hgx(&k.to_hypergraph())
}

/// `{"m", "n", "rows"}` with rows as `0`/`1` strings.
pub fn matrix_json(h: &Hypergraph) -> Value {
    let rows: Vec<String> = (0..h.edge_count()).map(|e| h.row_string(e)).collect();
    json!({ "m": h.edge_count(), "n": h.vertex_count(), "rows": rows })
}

pub trait Factors {
    fn factors(&self) -> Vec<&Key>;
}

impl Factors for Key {
    fn factors(&self) -> Vec<&Key> {
        vec![self]
    }
}

impl Factors for Pair {
    fn factors(&self) -> Vec<&Key> {
        vec![&self.0, &self.1]
    }
}

impl Factors for Triple {
    fn factors(&self) -> Vec<&Key> {
        vec![&self.0, &self.1, &self.2]
    }
}

/// `[{"coeff", "factors": [hgx, …]}, …]` in basis order.
pub fn terms_json<B: Ord + Clone + Factors>(a: &LinComb<B>) -> Value {
    Value::Array(
        a.iter()
            .map(|(b, c)| {
                let factors: Vec<String> = b.factors().into_iter().map(key_hgx).collect();
                json!({ "coeff": c.to_string(), "factors": factors })
            })
            .collect(),
    )
}

/// `[{"coeff", "left", "right"}, …]` in basis order.
pub fn coproduct_json(a: &LinComb<Pair>) -> Value {
    Value::Array(
        a.iter()
            .map(|((l, r), c)| json!({ "coeff": c.to_string(), "left": key_hgx(l), "right": key_hgx(r) }))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let text = "2 4\n0101\n1011\n";
        let h = parse_hgx(text).unwrap();
        assert_eq!(h, Hypergraph::new(4, vec![0b1010, 0b1101]).unwrap());
        assert_eq!(to_hgx(&h), text);
        assert_eq!(parse_hgx("0 0").unwrap(), Hypergraph::unit());
        assert_eq!(to_hgx(&Hypergraph::new(0, vec![0, 0]).unwrap()), "2 0\n");
        assert_eq!(parse_hgx("2 0\n").unwrap(), Hypergraph::new(0, vec![0, 0]).unwrap());
    }

    #[test]
    fn comments_and_name() {
        let doc = parse_document("# name: cherry\n\n3 2\n# rows\n10\n11\n01\n").unwrap();
        assert_eq!(doc.name.as_deref(), Some("cherry"));
        assert_eq!(doc.to_text(), "# name: cherry\n3 2\n10\n11\n01\n");
    }

    #[test]
    fn json_form() {
        let h = parse_hgx(r#"{"vertices":3,"edges":[[0,1,2]]}"#).unwrap();
        assert_eq!(h, Hypergraph::new(3, vec![0b111]).unwrap());
        assert!(matches!(parse_hgx(r#"{"vertices":3,"edges":[[0,0]]}"#), Err(Error::Parse { .. })));
        assert!(matches!(parse_hgx(r#"{"vertices":2,"edges":[[2]]}"#), Err(Error::Parse { .. })));
    }

    #[test]
    fn errors_carry_lines() {
        let line = |t: &str| match parse_hgx(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("2 4\n0101\n10x1\n"), 3);
        assert_eq!(line("2 4\n0101\n101\n"), 3);
        assert_eq!(line("1 2\n01\n11\n"), 3);
        assert_eq!(line("x 2\n"), 1);
        assert_eq!(line("1 0\n1\n"), 2);
        assert_eq!(line("2 2\n01\n"), 2);
    }
}
