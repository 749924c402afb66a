//! The `.qdg` text format and DOT export.
//!
//! ```text
//! # comment
//! vertices 4
//! terminal 0
//! edge 0 1
//! ```
//!
//! Any `terminal` line makes the file a terminated digraph.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ginfty::{Materialization, TerminatedDigraph};
use crate::graph::{Digraph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Plain(Digraph),
    Terminated(TerminatedDigraph),
}

impl GraphFile {
    pub fn digraph(&self) -> &Digraph {
        match self {
            GraphFile::Plain(g) => g,
            GraphFile::Terminated(td) => &td.g,
        }
    }

    pub fn terminals(&self) -> Option<&VertexSet> {
        match self {
            GraphFile::Plain(_) => None,
            GraphFile::Terminated(td) => Some(&td.terminals),
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse(text: &str) -> Result<GraphFile> {
    let mut n: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, Vertex, Vertex)> = Vec::new();
    let mut terminals: Vec<(usize, Vertex)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut words = body.split_whitespace();
        let Some(key) = words.next() else { continue };
        let args: Vec<&str> = words.collect();
        let nums = |want: usize| -> Result<Vec<usize>> {
            if args.len() != want {
                return Err(err(
                    line,
                    format!("`{key}` takes {want} argument(s), got {}", args.len()),
                ));
            }
            args.iter()
                .map(|a| a.parse().map_err(|_| err(line, format!("not a vertex id: `{a}`"))))
                .collect()
        };
        match key {
            "vertices" => {
                if n.is_some() {
                    return Err(err(line, "duplicate `vertices` line"));
                }
                n = Some((line, nums(1)?[0]));
            }
            "edge" => {
                let a = nums(2)?;
                if a[0] == a[1] {
                    return Err(err(line, format!("loop at {}", a[0])));
                }
                edges.push((line, a[0], a[1]));
            }
            "terminal" => terminals.push((line, nums(1)?[0])),
            other => return Err(err(line, format!("unknown keyword `{other}`"))),
        }
    }

    let Some((_, n)) = n else {
        return Err(err(text.lines().count().max(1), "missing `vertices` line"));
    };
    let range = |line: usize, v: Vertex| {
        if v < n {
            Ok(())
        } else {
            Err(err(line, format!("vertex {v} out of range for {n} vertices")))
        }
    };
    for &(line, u, v) in &edges {
        range(line, u)?;
        range(line, v)?;
    }
    for &(line, t) in &terminals {
        range(line, t)?;
    }
    let g = Digraph::new(n, edges.iter().map(|&(_, u, v)| (u, v)))?;
    if terminals.is_empty() {
        return Ok(GraphFile::Plain(g));
    }
    let t: VertexSet = terminals.iter().map(|&(_, t)| t).collect();
    Ok(GraphFile::Terminated(TerminatedDigraph::new(g, t)?))
}

/// Canonical text: `vertices`, then terminals, then edges in ascending order.
pub fn emit(f: &GraphFile) -> String {
    let g = f.digraph();
    let mut s = format!("vertices {}\n", g.n());
    for t in f.terminals().into_iter().flat_map(|t| t.iter()) {
        writeln!(s, "terminal {t}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "edge {u} {v}").unwrap();
    }
    s
}

/// DOT for a finite digraph; terminals, if given, are double-circled.
pub fn dot_digraph(g: &Digraph, terminals: Option<&VertexSet>) -> String {
    dot(g, |v| v.to_string(), |v| terminals.is_some_and(|t| t.contains(v)))
}

/// DOT for a truncation of `G^∞`, labelled by dotted sequences. Labels of
/// depth 0 are the terminals.
pub fn dot_materialization(m: &Materialization) -> String {
    dot(&m.digraph, |v| m.label(v).to_string(), |v| m.label(v).depth() == 0)
}

fn dot(g: &Digraph, label: impl Fn(Vertex) -> String, terminal: impl Fn(Vertex) -> bool) -> String {
    let mut s = String::from("digraph G {\n");
    for v in g.vertices() {
        let shape = if terminal(v) { "doublecircle" } else { "circle" };
        writeln!(s, "  n{v} [label=\"{}\", shape={shape}];", label(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "  n{u} -> n{v};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::ginfty::materialize;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    const PT4: &str = "vertices 4\nterminal 0\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 1\nedge 3 0\nedge 2 0\n";

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("not a parse error: {other}"),
        }
    }

    #[test]
    fn parses_examples() {
        assert_eq!(parse("vertices 3\nedge 0 1\nedge 1 2").unwrap(), GraphFile::Plain(p3()));
        let GraphFile::Terminated(td) = parse(PT4).unwrap() else {
            panic!()
        };
        assert_eq!(td.terminals, set([0]));
        assert_eq!(td.g.edge_count(), 6);
        assert_eq!(
            parse("# header\n\nvertices 2 # two\nedge 0 1\nedge 0 1\n").unwrap(),
            GraphFile::Plain(Digraph::new(2, [(0, 1)]).unwrap())
        );
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(line_of(parse("vertices 2\nedge 0 0").unwrap_err()), 2);
        assert_eq!(line_of(parse("edge 0 1\nvertices 2\nedge 1 5").unwrap_err()), 3);
        assert_eq!(line_of(parse("vertices 2\nterminal 2").unwrap_err()), 2);
        assert_eq!(line_of(parse("vertices 2\nvertices 3").unwrap_err()), 2);
        assert_eq!(line_of(parse("vertices 2\nedge 0").unwrap_err()), 2);
        assert_eq!(line_of(parse("vertices x").unwrap_err()), 1);
        assert_eq!(line_of(parse("vertices 2\nnode 1").unwrap_err()), 2);
        assert!(matches!(parse("edge 0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn emit_is_canonical() {
        let f = parse("edge 1 0\nvertices 3\nterminal 2\nedge 0 1\nterminal 0").unwrap();
        assert_eq!(emit(&f), "vertices 3\nterminal 0\nterminal 2\nedge 0 1\nedge 1 0\n");
        assert_eq!(
            emit(&parse(PT4).unwrap()),
            "vertices 4\nterminal 0\nedge 0 1\nedge 1 2\nedge 2 0\nedge 2 3\nedge 3 0\nedge 3 1\n"
        );
    }

    #[test]
    fn dot_examples() {
        let d = dot_digraph(&p3(), None);
        assert_eq!(d.matches(" -> ").count(), 2);
        assert_eq!(d.matches("[label=").count(), 3);
        assert!(!d.contains("doublecircle"));

        let GraphFile::Terminated(td) = parse(PT4).unwrap() else {
            panic!()
        };
        let m = materialize(&td, 1, &Caps::default()).unwrap();
        let d = dot_materialization(&m);
        assert_eq!(d.matches("[label=").count(), 4);
        assert!(d.contains("n0 [label=\"0\", shape=doublecircle];"));
        assert!(d.contains("n1 [label=\"1.0\", shape=circle];"));
        assert!(d.starts_with("digraph G {\n") && d.ends_with("}\n"));
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_digraph(8), mask in any::<u8>()) {
            let t: VertexSet = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
            let f = if t.is_empty() {
                GraphFile::Plain(g)
            } else {
                GraphFile::Terminated(TerminatedDigraph::new(g, t).unwrap())
            };
            let text = emit(&f);
            prop_assert_eq!(&parse(&text).unwrap(), &f);
            prop_assert_eq!(emit(&parse(&text).unwrap()), text);
        }

        #[test]
        fn parse_never_panics(text in "[a-z0-9 #\n]{0,60}") {
            let _ = parse(&text);
        }
    }
}
