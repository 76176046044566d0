//! Text formats: SP expressions, edge lists and Graphviz DOT.
//!
//! SP expression grammar (whitespace is ignored everywhere):
//!
//! ```text
//! expr := "e" | "S(" expr ("," expr)+ ")" | "P(" expr ("," expr)+ ")"
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::sptree::{NodeKind, SpTree};

/// Parses an SP expression. The result mirrors the syntax and is not
/// canonicalized.
pub fn parse(text: &str) -> Result<SpTree> {
    let mut p = ExprParser::new(text);
    let tree = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected '{c}' after expression")));
    }
    Ok(tree)
}

struct ExprParser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> ExprParser<'a> {
    fn new(text: &'a str) -> Self {
        ExprParser {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<SpTree> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let kind = match self.peek() {
            Some('e') => {
                self.bump();
                return Ok(SpTree::leaf());
            }
            Some('S') => NodeKind::Series,
            Some('P') => NodeKind::Parallel,
            Some(c) => return Err(self.error(format!("expected 'e', 'S' or 'P', found '{c}'"))),
            None => return Err(self.error("unexpected end of input")),
        };
        self.bump();
        self.expect('(')?;
        let mut children = vec![self.expr()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                    children.push(self.expr()?);
                }
                Some(')') => {
                    self.bump();
                    break;
                }
                Some(c) => return Err(self.error(format!("expected ',' or ')', found '{c}'"))),
                None => return Err(self.error("unexpected end of input")),
            }
        }
        if children.len() < 2 {
            return Err(Error::JoinArity {
                line,
                column,
                found: children.len(),
            });
        }
        Ok(SpTree::join(kind, children))
    }
}

/// Writes the tree in the SP expression grammar without whitespace.
pub fn serialize(tree: &SpTree) -> String {
    let mut out = String::new();
    write_node(tree, tree.root(), &mut out);
    out
}

fn write_node(tree: &SpTree, id: usize, out: &mut String) {
    match tree.kind(id) {
        NodeKind::Leaf => out.push('e'),
        kind => {
            out.push(if kind == NodeKind::Series { 'S' } else { 'P' });
            out.push('(');
            for (i, &c) in tree.children(id).iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_node(tree, c, out);
            }
            out.push(')');
        }
    }
}

/// Reads `u v` lines. Blank lines and `#` comments are skipped; repeated
/// lines become parallel edges and `u u` is a loop.
pub fn read_edge_list(text: &str) -> Result<Multigraph> {
    let mut g = Multigraph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::EdgeList {
                line: i + 1,
                message: format!("expected two vertex ids, found {} token(s)", tokens.len()),
            });
        }
        let mut ends = [0 as VertexId; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| Error::EdgeList {
                line: i + 1,
                message: format!("'{tok}' is not a non-negative integer"),
            })?;
        }
        g.add_edge(ends[0], ends[1]);
    }
    Ok(g)
}

/// Highlighting for [`to_dot`].
#[derive(Debug, Clone, Default)]
pub struct DotAnnotations {
    pub terminals: Option<(VertexId, VertexId)>,
    /// Drawn as filled nodes, typically a tough set.
    pub filled: BTreeSet<VertexId>,
    /// Drawn bold red, typically jump-edges.
    pub marked_edges: BTreeSet<EdgeId>,
    pub label: Option<String>,
}

/// Undirected DOT with one edge statement per multigraph edge.
pub fn to_dot(g: &Multigraph, ann: &DotAnnotations) -> String {
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    if let Some(label) = &ann.label {
        let _ = writeln!(out, "  label=\"{}\";", label.replace('"', "\\\""));
    }
    for v in g.vertices() {
        let mut attrs = Vec::new();
        if ann.terminals.is_some_and(|(s, t)| v == s || v == t) {
            attrs.push("shape=doublecircle");
        }
        if ann.filled.contains(&v) {
            attrs.push("style=filled");
            attrs.push("fillcolor=gray");
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
        }
    }
    for (id, e) in g.edges().iter().enumerate() {
        if ann.marked_edges.contains(&id) {
            let _ = writeln!(out, "  {} -- {} [color=red, penwidth=2];", e.a, e.b);
        } else {
            let _ = writeln!(out, "  {} -- {};", e.a, e.b);
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_serialize() {
        let t = parse("S(e,e)").unwrap();
        assert_eq!(t, SpTree::series(vec![SpTree::leaf(), SpTree::leaf()]));
        assert_eq!(serialize(&t), "S(e,e)");
        let p = parse(" P( S(e,e) ,\n S(e , e), S(e,e) ) ").unwrap();
        assert_eq!(serialize(&p), "P(S(e,e),S(e,e),S(e,e))");
        let q = parse("P(S(e,e),e)").unwrap();
        assert_eq!(q.realize().unwrap().graph.degree_sequence(), vec![2, 2, 2]);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("S(e,e") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 6)),
            other => panic!("unexpected {other:?}"),
        }
        match parse("S(e,\n  x)") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse("e e"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse("P(e, S(e))"),
            Err(Error::JoinArity { line: 1, column: 6, found: 1 })
        ));
    }

    #[test]
    fn edge_lists() {
        let p3 = read_edge_list("0 1\n1 2").unwrap();
        assert_eq!(p3.vertex_count(), 3);
        assert_eq!(p3.edge_count(), 2);
        let par = read_edge_list("# two copies\n0 1\n\n0 1 # again\n").unwrap();
        assert_eq!(par.edge_count(), 2);
        assert_eq!(par.first_parallel_pair(), Some((0, 1)));
        let lp = read_edge_list("0 0").unwrap();
        assert_eq!(lp.vertex_count(), 1);
        assert!(lp.has_loops());
        assert!(matches!(
            read_edge_list("0 1\n1 x"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(read_edge_list("0 -1").is_err());
        assert!(read_edge_list("0 1 2").is_err());
    }

    #[test]
    fn dot_output() {
        let k2 = SpTree::leaf().realize().unwrap();
        let dot = to_dot(&k2.graph, &DotAnnotations::default());
        assert_eq!(dot, "graph {\n  node [shape=circle];\n  0;\n  1;\n  0 -- 1;\n}\n");

        let c4 = parse("P(S(e,e),S(e,e))").unwrap().realize().unwrap();
        let ann = DotAnnotations {
            terminals: Some((c4.s, c4.t)),
            filled: BTreeSet::from([c4.s, c4.t]),
            ..Default::default()
        };
        let dot = to_dot(&c4.graph, &ann);
        assert_eq!(dot.matches("style=filled").count(), 2);
        assert_eq!(dot.matches(" -- ").count(), 4);

        let multi = Multigraph::from_edges([(0, 1), (0, 1)]);
        let ann = DotAnnotations {
            marked_edges: BTreeSet::from([1]),
            ..Default::default()
        };
        let dot = to_dot(&multi, &ann);
        assert_eq!(dot.matches("0 -- 1").count(), 2);
        assert_eq!(dot.matches("color=red").count(), 1);
    }
}
