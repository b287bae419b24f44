//! Text formats: edge lists, graph6 and positional labeling files.
//!
//! Edge list: first significant line `n m`, then `m` lines `u v`
//! (0-based). Labeling: the positive labels of edges `0..m` in order,
//! whitespace separated, possibly over several lines. In both formats
//! everything after `#` on a line is ignored.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Lines with comments stripped, paired with 1-based line numbers;
/// blank lines are dropped.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::Truncated("missing `n m` header".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(syntax(header_line, "header must be `n m`"));
    }
    let n = parse_usize(header_line, fields[0], "vertex count")?;
    let m = parse_usize(header_line, fields[1], "edge count")?;

    let mut pairs = Vec::with_capacity(m);
    let mut line_of = Vec::with_capacity(m);
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(syntax(line, "edge line must be `u v`"));
        }
        if pairs.len() == m {
            return Err(syntax(line, format!("more than the {m} declared edges")));
        }
        pairs.push((
            parse_usize(line, fields[0], "vertex")?,
            parse_usize(line, fields[1], "vertex")?,
        ));
        line_of.push(line);
    }
    if pairs.len() != m {
        return Err(ParseError::Truncated(format!(
            "header declares {m} edges, found {}",
            pairs.len()
        )));
    }
    // rebuild incrementally so a failure can be pinned to its line
    Graph::new(n, &pairs).map_err(|source| {
        let line = first_bad_line(n, &pairs, &line_of);
        ParseError::Graph { line, source }
    })
}

fn first_bad_line(n: usize, pairs: &[(usize, usize)], line_of: &[usize]) -> usize {
    (1..=pairs.len())
        .find(|&k| Graph::new(n, &pairs[..k]).is_err())
        .map(|k| line_of[k - 1])
        .unwrap_or(0)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 record. Edges come out in lexicographic `(u, v)`
/// order with `u < v`, which fixes the edge ids.
pub fn parse_graph6(record: &str) -> Result<Graph, String> {
    let record = record.trim();
    let record = record.strip_prefix(GRAPH6_HEADER).unwrap_or(record);
    let bytes = record.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(format!("invalid graph6 character in `{record}`"));
    }
    let (n, body) = match bytes {
        [] => return Err("empty graph6 record".into()),
        [126, 126, ..] => return Err("graph6 orders above 258047 are not supported".into()),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err("truncated graph6 order".into());
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    if body.len() != needed {
        return Err(format!(
            "graph6 body has {} bytes, order {n} needs {needed}",
            body.len()
        ));
    }
    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Graph::new(n, &edges).map_err(|e| e.to_string())
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.edge_between(u, v).is_some());
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Raw label values, signed so non-positive entries can be reported by the
/// labeling layer rather than as syntax errors.
pub fn parse_label_values(text: &str) -> Result<Vec<i64>, ParseError> {
    let mut values = Vec::new();
    for (line, body) in significant_lines(text) {
        for token in body.split_whitespace() {
            values.push(
                token
                    .parse()
                    .map_err(|_| syntax(line, format!("invalid label `{token}`")))?,
            );
        }
    }
    Ok(values)
}

pub fn write_labels(labels: &[u64]) -> String {
    let mut out = labels
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n1 2 # closing soon\n\n2 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3: invalid vertex `x`");
        let err = parse_edge_list("3 2\n0 1\n# dup\n1 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Graph { line: 4, .. }), "{err}");
        assert!(matches!(
            parse_edge_list("3 3\n0 1\n"),
            Err(ParseError::Truncated(_))
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(ParseError::Syntax { line: 3, .. })
        ));
    }

    #[test]
    fn graph6_known_records() {
        // claw K_{1,3}: centre 0
        let claw = parse_graph6("Cs").unwrap();
        assert_eq!(claw.edges(), &[(0, 1), (0, 2), (0, 3)]);
        let k4 = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(write_graph6(&claw), "Cs");
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
    }

    #[test]
    fn graph6_medium_order() {
        let edges: Vec<_> = (0..69).map(|i| (i, (i + 1) % 70)).collect();
        let g = Graph::new(70, &edges).unwrap();
        let text = write_graph6(&g);
        assert!(text.starts_with('~'));
        let back = parse_graph6(&text).unwrap();
        assert_eq!(back.vertex_count(), 70);
        assert_eq!(back.edge_count(), 69);
    }

    #[test]
    fn labels_parse() {
        assert_eq!(
            parse_label_values("# C4\n1 6\n2 3\n").unwrap(),
            vec![1, 6, 2, 3]
        );
        assert_eq!(parse_label_values("1 -2").unwrap(), vec![1, -2]);
        assert!(parse_label_values("1 two").is_err());
        assert_eq!(write_labels(&[1, 2, 3]), "1 2 3\n");
    }
}
