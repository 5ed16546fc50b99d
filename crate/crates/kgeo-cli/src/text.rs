//! The plain-text digraph format.
//!
//! First line `n <count>`, then exactly `count` lines, line `i` reading
//! `i: a b c` with the out-neighbours of vertex `i` in strictly ascending
//! order (possibly empty after the colon). Emission is byte-deterministic
//! and `parse(emit(g)) == g` exactly.

use kgeo_core::{Digraph, Vertex};
use std::fmt::Write as _;
use thiserror::Error;

/// Parse failure with a 1-based line number (the header is line 1).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `n <count>`")]
    Header,
    #[error("expected line for vertex {expected} starting `{expected}:`")]
    LineIndex { expected: usize },
    #[error("malformed out-neighbour token `{token}`")]
    Token { token: String },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: Vertex },
    #[error("duplicate arc {from} -> {to}")]
    DuplicateArc { from: Vertex, to: Vertex },
    #[error("out-neighbours of vertex {vertex} are not strictly ascending")]
    OutOfOrder { vertex: Vertex },
    #[error("vertex {vertex} out of range for order {order}")]
    Range { vertex: Vertex, order: usize },
    #[error("missing line for vertex {expected}")]
    MissingLine { expected: usize },
    #[error("trailing content after the last vertex line")]
    TrailingContent,
}

fn fail(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses one digraph document.
pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines.next().ok_or_else(|| fail(1, ParseErrorKind::Header))?;
    let n = parse_header(header).ok_or_else(|| fail(1, ParseErrorKind::Header))?;

    let mut out: Vec<Vec<Vertex>> = Vec::with_capacity(n);
    for vertex in 0..n {
        let line_no = vertex + 2;
        let line = lines
            .next()
            .ok_or_else(|| fail(line_no, ParseErrorKind::MissingLine { expected: vertex }))?;
        out.push(parse_vertex_line(line, vertex, n, line_no)?);
    }
    if let Some(extra) = lines.next() {
        if !extra.trim().is_empty() {
            return Err(fail(n + 2, ParseErrorKind::TrailingContent));
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(fail(n + 2, ParseErrorKind::TrailingContent));
        }
    }
    Ok(Digraph::from_out_lists(out).expect("line-level validation covers digraph invariants"))
}

fn parse_header(line: &str) -> Option<usize> {
    let rest = line.strip_prefix("n ")?;
    let rest = rest.trim();
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

fn parse_vertex_line(
    line: &str,
    vertex: usize,
    n: usize,
    line_no: usize,
) -> Result<Vec<Vertex>, ParseError> {
    let (idx, rest) = line
        .split_once(':')
        .ok_or_else(|| fail(line_no, ParseErrorKind::LineIndex { expected: vertex }))?;
    if idx != vertex.to_string() {
        return Err(fail(line_no, ParseErrorKind::LineIndex { expected: vertex }));
    }
    let mut list = Vec::new();
    for token in rest.split_whitespace() {
        let target: usize = token
            .parse()
            .map_err(|_| fail(line_no, ParseErrorKind::Token { token: token.to_string() }))?;
        if target >= n {
            return Err(fail(line_no, ParseErrorKind::Range { vertex: target, order: n }));
        }
        if target == vertex {
            return Err(fail(line_no, ParseErrorKind::SelfLoop { vertex }));
        }
        if let Some(&last) = list.last() {
            if target == last {
                return Err(fail(
                    line_no,
                    ParseErrorKind::DuplicateArc { from: vertex, to: target },
                ));
            }
            if target < last {
                return Err(fail(line_no, ParseErrorKind::OutOfOrder { vertex }));
            }
        }
        list.push(target);
    }
    Ok(list)
}

/// Emits the canonical text form of `g`.
pub fn emit_digraph(g: &Digraph) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "n {}", g.order());
    for v in 0..g.order() {
        let _ = write!(text, "{v}:");
        for w in g.out(v) {
            let _ = write!(text, " {w}");
        }
        text.push('\n');
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use kgeo_core::cages::left_cage;

    #[test]
    fn parses_a_cycle() {
        let g = parse_digraph("n 3\n0: 1\n1: 2\n2: 0\n").unwrap();
        assert_eq!(g, Digraph::directed_cycle(3));
    }

    #[test]
    fn loop_is_reported_with_line_number() {
        let err = parse_digraph("n 2\n0: 0 1\n1: 0\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::SelfLoop { vertex: 0 });
    }

    #[test]
    fn rejects_various_malformations() {
        assert_eq!(parse_digraph("m 3\n").unwrap_err().line, 1);
        assert_eq!(
            parse_digraph("n 2\n0: 1\n1: 0 0\n").unwrap_err().kind,
            ParseErrorKind::DuplicateArc { from: 1, to: 0 }
        );
        assert_eq!(
            parse_digraph("n 3\n0: 2 1\n1:\n2:\n").unwrap_err().kind,
            ParseErrorKind::OutOfOrder { vertex: 0 }
        );
        assert_eq!(
            parse_digraph("n 2\n0: 1\n1: 2\n").unwrap_err().kind,
            ParseErrorKind::Range { vertex: 2, order: 2 }
        );
        assert_eq!(
            parse_digraph("n 2\n0: 1\n").unwrap_err().kind,
            ParseErrorKind::MissingLine { expected: 1 }
        );
        assert_eq!(
            parse_digraph("n 1\n0:\nx\n").unwrap_err().kind,
            ParseErrorKind::TrailingContent
        );
        assert_eq!(
            parse_digraph("n 2\n1: 0\n0: 1\n").unwrap_err().kind,
            ParseErrorKind::LineIndex { expected: 0 }
        );
    }

    #[test]
    fn round_trips_the_left_cage() {
        let g = left_cage();
        let text = emit_digraph(&g);
        assert_eq!(parse_digraph(&text).unwrap(), g);
    }

    #[test]
    fn emits_empty_out_lists_bare() {
        let g = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert_eq!(emit_digraph(&g), "n 2\n0: 1\n1:\n");
    }

    #[test]
    fn accepts_empty_digraph() {
        let g = parse_digraph("n 0\n").unwrap();
        assert_eq!(g.order(), 0);
    }
}
