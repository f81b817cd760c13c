//! Text formats for graphs and colorings.
//!
//! Graphs use a DIMACS-flavored format: `c` comment lines, a
//! `p graph <n> <m>` header, `e <u> <v>` edge lines with 1-based vertex
//! ids, and an optional `o <v1> ... <vn>` outer-face order line. Comment
//! lines of the shape `c name <id> <label>` are recognized as a vertex name
//! table. Colorings use a `k <k> q <q>` header, one `v <id> <color>` line
//! per vertex in id order, and a `s valid=<bool> max_relax=<int>` summary.
//! Parsing an emitted document reproduces it; output is byte-stable for a
//! fixed input.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Coloring, ColoringReport};
use crate::graph::{Graph, OuterEmbedding};
use crate::reductions::ReductionInstance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing 'p graph <n> <m>' header")]
    MissingHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed integer '{0}'")]
    BadInteger(String),
    #[error("vertex id {0} out of range 1..={1}")]
    IdOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge count mismatch: header says {expected}, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("malformed line: {0}")]
    MalformedLine(String),
    #[error("embedding order is not a permutation of 1..={0}")]
    EmbeddingNotPermutation(usize),
    #[error("unknown line type '{0}'")]
    UnknownLine(String),
    #[error("malformed coloring line: {0}")]
    MalformedColoring(String),
    #[error("color {0} out of range for k = {1}")]
    ColorOutOfRange(usize, usize),
}

/// A positional parse error: 1-based line and column of the offending
/// token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

/// A parsed graph file: the graph itself, an optional outer-face order, an
/// optional vertex name table, and the preserved free comment lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub embedding: Option<OuterEmbedding>,
    pub names: Option<Vec<String>>,
    pub comments: Vec<String>,
}

fn tokens(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut col = 0;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            col = 0;
        } else if col == 0 {
            col = i + 1;
            out.push((&line[i..], col));
        }
    }
    // Fix token ends: split each recorded suffix at its first whitespace.
    out.into_iter()
        .map(|(s, c)| (s.split_whitespace().next().unwrap_or(""), c))
        .collect()
}

fn parse_int(tok: &str, line: usize, col: usize) -> Result<usize, ParseError> {
    tok.parse::<usize>().map_err(|_| err(line, col, ParseErrorKind::BadInteger(tok.to_string())))
}

fn to_internal(ext: usize, n: usize, line: usize, col: usize) -> Result<usize, ParseError> {
    if ext == 0 || ext > n {
        Err(err(line, col, ParseErrorKind::IdOutOfRange(ext, n)))
    } else {
        Ok(ext - 1)
    }
}

/// Parses the graph format. External 1-based ids are translated to the
/// dense 0-based ids used everywhere else.
pub fn parse_graph(text: &str) -> Result<GraphDocument, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut order: Option<Vec<usize>> = None;
    let mut comments = Vec::new();
    let mut names: Vec<(usize, String, usize, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim_end();
        if line.trim().is_empty() {
            continue;
        }
        let toks = tokens(line);
        match toks[0].0 {
            "c" => {
                if toks.len() == 4 && toks[1].0 == "name" {
                    let id = parse_int(toks[2].0, lineno, toks[2].1)?;
                    names.push((id, toks[3].0.to_string(), lineno, toks[2].1));
                } else {
                    // Body starts after the 'c' token; one separating space
                    // is syntax, the rest belongs to the comment text.
                    let body = line.get(toks[0].1..).unwrap_or("");
                    comments.push(body.strip_prefix(' ').unwrap_or(body).to_string());
                }
            }
            "p" => {
                if header.is_some() {
                    return Err(err(lineno, toks[0].1, ParseErrorKind::DuplicateHeader));
                }
                if toks.len() != 4 || toks[1].0 != "graph" {
                    return Err(err(
                        lineno,
                        toks[0].1,
                        ParseErrorKind::MalformedHeader(line.to_string()),
                    ));
                }
                let n = parse_int(toks[2].0, lineno, toks[2].1)?;
                let m = parse_int(toks[3].0, lineno, toks[3].1)?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| {
                    err(lineno, toks[0].1, ParseErrorKind::MissingHeader)
                })?;
                if toks.len() != 3 {
                    return Err(err(
                        lineno,
                        toks[0].1,
                        ParseErrorKind::MalformedLine(line.to_string()),
                    ));
                }
                let u_ext = parse_int(toks[1].0, lineno, toks[1].1)?;
                let v_ext = parse_int(toks[2].0, lineno, toks[2].1)?;
                if u_ext == v_ext {
                    return Err(err(lineno, toks[1].1, ParseErrorKind::SelfLoop(u_ext)));
                }
                let u = to_internal(u_ext, n, lineno, toks[1].1)?;
                let v = to_internal(v_ext, n, lineno, toks[2].1)?;
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(
                        lineno,
                        toks[1].1,
                        ParseErrorKind::DuplicateEdge(u_ext.min(v_ext), u_ext.max(v_ext)),
                    ));
                }
                edges.push((u, v));
            }
            "o" => {
                let (n, _) = header.ok_or_else(|| {
                    err(lineno, toks[0].1, ParseErrorKind::MissingHeader)
                })?;
                if toks.len() != n + 1 {
                    return Err(err(
                        lineno,
                        toks[0].1,
                        ParseErrorKind::EmbeddingNotPermutation(n),
                    ));
                }
                let mut o = Vec::with_capacity(n);
                let mut used = vec![false; n];
                for (tok, col) in &toks[1..] {
                    let ext = parse_int(tok, lineno, *col)?;
                    let v = to_internal(ext, n, lineno, *col)?;
                    if used[v] {
                        return Err(err(
                            lineno,
                            *col,
                            ParseErrorKind::EmbeddingNotPermutation(n),
                        ));
                    }
                    used[v] = true;
                    o.push(v);
                }
                order = Some(o);
            }
            other => {
                return Err(err(lineno, toks[0].1, ParseErrorKind::UnknownLine(other.to_string())));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| err(1, 1, ParseErrorKind::MissingHeader))?;
    if edges.len() != m {
        return Err(err(
            1,
            1,
            ParseErrorKind::EdgeCountMismatch { expected: m, found: edges.len() },
        ));
    }
    let graph = Graph::new(n, edges).expect("edges already validated");
    let names_table = if names.is_empty() {
        None
    } else {
        let mut table = vec![String::new(); n];
        for (id, label, line, col) in names {
            let v = to_internal(id, n, line, col)?;
            table[v] = label;
        }
        Some(table)
    };
    Ok(GraphDocument {
        graph,
        embedding: order.map(OuterEmbedding::new),
        names: names_table,
        comments,
    })
}

/// Emits the graph format; `parse_graph . emit_graph` is the identity and
/// the output is byte-stable.
pub fn emit_graph(doc: &GraphDocument) -> String {
    let mut out = String::new();
    for comment in &doc.comments {
        let _ = writeln!(out, "c {comment}");
    }
    let g = &doc.graph;
    let _ = writeln!(out, "p graph {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    if let Some(emb) = &doc.embedding {
        out.push('o');
        for &v in emb.order() {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    if let Some(names) = &doc.names {
        for (v, label) in names.iter().enumerate() {
            if !label.is_empty() {
                let _ = writeln!(out, "c name {} {label}", v + 1);
            }
        }
    }
    out
}

/// Emits a coloring with its report summary.
pub fn emit_coloring(f: &Coloring, report: &ColoringReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "k {} q {}", f.k(), f.q());
    for (v, &c) in f.colors().iter().enumerate() {
        let _ = writeln!(out, "v {} {c}", v + 1);
    }
    let _ = writeln!(out, "s valid={} max_relax={}", report.valid, report.max_relaxations);
    out
}

/// Parses a coloring document back into a `Coloring`; the summary line is
/// ignored. Vertex lines must cover ids 1..=n exactly once.
pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut k: Option<(usize, usize)> = None;
    let mut entries: Vec<(usize, usize)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim_end();
        if line.trim().is_empty() {
            continue;
        }
        let toks = tokens(line);
        match toks[0].0 {
            "k" => {
                if toks.len() != 4 || toks[2].0 != "q" {
                    return Err(err(
                        lineno,
                        toks[0].1,
                        ParseErrorKind::MalformedColoring(line.to_string()),
                    ));
                }
                let kk = parse_int(toks[1].0, lineno, toks[1].1)?;
                let qq = parse_int(toks[3].0, lineno, toks[3].1)?;
                k = Some((kk, qq));
            }
            "v" => {
                if toks.len() != 3 {
                    return Err(err(
                        lineno,
                        toks[0].1,
                        ParseErrorKind::MalformedColoring(line.to_string()),
                    ));
                }
                let id = parse_int(toks[1].0, lineno, toks[1].1)?;
                let color = parse_int(toks[2].0, lineno, toks[2].1)?;
                entries.push((id, color));
            }
            "s" | "c" => {}
            other => {
                return Err(err(lineno, toks[0].1, ParseErrorKind::UnknownLine(other.to_string())));
            }
        }
    }
    let (k, q) = k.ok_or_else(|| err(1, 1, ParseErrorKind::MissingHeader))?;
    let n = entries.len();
    let mut colors = vec![usize::MAX; n];
    for (id, color) in entries {
        if id == 0 || id > n || colors[id - 1] != usize::MAX {
            return Err(err(1, 1, ParseErrorKind::IdOutOfRange(id, n)));
        }
        if color >= k {
            return Err(err(1, 1, ParseErrorKind::ColorOutOfRange(color, k)));
        }
        colors[id - 1] = color;
    }
    Coloring::new(k, q, colors)
        .map_err(|e| err(1, 1, ParseErrorKind::MalformedColoring(e.to_string())))
}

/// Serializes a reduction instance as a graph document with the vertex and
/// gadget correspondence embedded as comments.
pub fn instance_document(inst: &ReductionInstance) -> GraphDocument {
    let mut comments = vec![format!("built by {:?}", inst.kind)];
    for (v, &w) in inst.original_vertex_map.iter().enumerate() {
        comments.push(format!("map {} -> {}", v + 1, w + 1));
    }
    for gadget in &inst.edge_gadgets {
        let ids: Vec<String> = gadget.vertices.iter().map(|&w| (w + 1).to_string()).collect();
        comments.push(format!(
            "gadget {} {} : {}",
            gadget.edge.0 + 1,
            gadget.edge.1 + 1,
            ids.join(" ")
        ));
    }
    for (v, group) in inst.vertex_groups.iter().enumerate() {
        let ids: Vec<String> = group.iter().map(|&w| (w + 1).to_string()).collect();
        comments.push(format!("group {} : {}", v + 1, ids.join(" ")));
    }
    GraphDocument {
        graph: inst.constructed.clone(),
        embedding: None,
        names: None,
        comments,
    }
}

/// GraphViz rendering of a colored graph; the color index becomes the node
/// label.
pub fn colored_dot(g: &Graph, f: &Coloring) -> String {
    let mut out = String::from("graph colored {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  v{v} [label=\"{}:{}\"];", v + 1, f.color(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  v{u} -- v{v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::check_relaxed;
    use crate::graph::{make_family, validate_outer_embedding, FamilyKind};
    use crate::reductions::subdivide_p4;

    #[test]
    fn parse_minimal_graph() {
        let doc = parse_graph("p graph 2 1\ne 1 2\n").unwrap();
        assert_eq!(doc.graph, make_family(FamilyKind::Complete, 2).unwrap());
        assert!(doc.embedding.is_none());
        assert!(doc.names.is_none());
    }

    #[test]
    fn parse_embedding_line() {
        let doc = parse_graph("p graph 3 3\ne 1 2\ne 2 3\ne 1 3\no 1 2 3\n").unwrap();
        let emb = doc.embedding.unwrap();
        assert_eq!(emb.order(), &[0, 1, 2]);
        assert!(validate_outer_embedding(&doc.graph, &emb).unwrap());
    }

    #[test]
    fn parse_errors_are_positional_and_distinct() {
        let e = parse_graph("p graph 2 1\ne 1 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::SelfLoop(1)));

        let e = parse_graph("p graph 2 2\ne 1 2\ne 2 1\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::DuplicateEdge(1, 2)));

        let e = parse_graph("p graph 2 1\ne 1 3\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::IdOutOfRange(3, 2)));

        let e = parse_graph("p edge 2 1\ne 1 2\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MalformedHeader(_)));

        let e = parse_graph("p graph 3 0\no 1 2 2\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::EmbeddingNotPermutation(3)));

        let e = parse_graph("p graph 2 2\ne 1 2\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::EdgeCountMismatch { expected: 2, found: 1 }));

        let e = parse_graph("q graph 2 1\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnknownLine(_)));
    }

    #[test]
    fn graph_round_trip_preserves_everything() {
        let (g, emb) = crate::families::gen_g5();
        let doc = GraphDocument {
            graph: g,
            embedding: Some(emb),
            names: Some(crate::families::g5_vertex_names()),
            comments: vec!["seventeen vertices".into()],
        };
        let text = emit_graph(&doc);
        let parsed = parse_graph(&text).unwrap();
        assert_eq!(parsed, doc);
        // Byte-stable.
        assert_eq!(emit_graph(&parsed), text);
    }

    #[test]
    fn coloring_round_trip() {
        let k2 = make_family(FamilyKind::Complete, 2).unwrap();
        let f = Coloring::two_distant(4, vec![0, 2]).unwrap();
        let report = check_relaxed(&k2, &f, 0).unwrap();
        let text = emit_coloring(&f, &report);
        assert_eq!(text.lines().count(), 4);
        assert!(text.ends_with("s valid=true max_relax=0\n"));
        let parsed = parse_coloring(&text).unwrap();
        assert_eq!(parsed, f);
    }

    #[test]
    fn invalid_coloring_still_emits() {
        let k2 = make_family(FamilyKind::Complete, 2).unwrap();
        let f = Coloring::two_distant(4, vec![0, 0]).unwrap();
        let report = check_relaxed(&k2, &f, 2).unwrap();
        let text = emit_coloring(&f, &report);
        assert!(text.contains("s valid=false"));
    }

    #[test]
    fn instance_document_carries_maps_in_comments() {
        let k2 = make_family(FamilyKind::Complete, 2).unwrap();
        let inst = subdivide_p4(&k2);
        let doc = instance_document(&inst);
        let text = emit_graph(&doc);
        assert!(text.contains("c map 1 -> 1"));
        assert!(text.contains("c gadget 1 2 : 3 4"));
        let parsed = parse_graph(&text).unwrap();
        assert_eq!(parsed.graph, inst.constructed);
    }
}
