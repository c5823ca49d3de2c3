//! Text formats.
//!
//! Digraph: `n <vertex_count>` first, then one `a <tail> <head>` line per arc
//! instance in id order; `#` lines are comments. Gadget documents append
//! `role <vertex> <label>` lines, `S: v1,v2,...` and `L: <threshold>`.
//! Witnesses are `lambda <value>` followed by `cycle: v0 v1 ... v0` lines.
//! Flow networks append `sources: ...`, `sinks: ...` and `flow <arc> <value>`
//! lines to a digraph (arcs without a `flow` line carry zero).

use std::fmt::Write as _;

use crate::cycle::{CyclePacking, DirectedCycle};
use crate::digraph::{MultiDigraph, Vertex};
use crate::error::ParseError;
use crate::flow::{Decomposition, FlowValue, Network};
use crate::gadgets::GadgetOutput;

pub fn write_digraph(d: &MultiDigraph) -> String {
    let mut s = format!("n {}\n", d.vertex_count());
    for a in d.arcs() {
        writeln!(s, "a {} {}", a.tail, a.head).expect("write to string");
    }
    s
}

pub fn write_gadget(g: &GadgetOutput) -> String {
    let mut s = write_digraph(&g.digraph);
    for (v, role) in &g.trace {
        writeln!(s, "role {v} {role}").expect("write to string");
    }
    writeln!(s, "S: {}", g.terminals).expect("write to string");
    writeln!(s, "L: {}", g.threshold).expect("write to string");
    s
}

pub fn write_witness(p: &CyclePacking) -> String {
    let mut s = format!("lambda {}\n", p.len());
    for c in &p.cycles {
        writeln!(s, "cycle: {c}").expect("write to string");
    }
    s
}

pub fn write_decomposition<F: FlowValue>(dec: &Decomposition<F>) -> String {
    let mut s = format!(
        "paths {}\ncycles {}\n",
        dec.path_terms.len(),
        dec.cycle_terms.len()
    );
    for (kind, terms) in [("path", &dec.path_terms), ("cycle", &dec.cycle_terms)] {
        for t in terms {
            let vs: Vec<String> = t.vertices.iter().map(|v| v.to_string()).collect();
            writeln!(s, "{kind} {}: {}", t.weight, vs.join(" ")).expect("write to string");
        }
    }
    s
}

/// Everything a digraph-based document may carry.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub digraph: MultiDigraph,
    pub roles: Vec<(Vertex, String)>,
    pub terminals: Option<Vec<Vertex>>,
    pub threshold: Option<usize>,
    pub sources: Option<Vec<Vertex>>,
    pub sinks: Option<Vec<Vertex>>,
    pub flow: Vec<(usize, u64)>,
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("bad {what} `{tok}`")))
}

/// Comma-separated vertex list, sorted; duplicates are an error.
pub fn parse_vertex_list(text: &str) -> Result<Vec<Vertex>, String> {
    let mut out: Vec<Vertex> = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        out.push(part.parse().map_err(|_| format!("bad vertex `{part}`"))?);
    }
    out.sort_unstable();
    if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
        return Err(format!("vertex {} listed twice", w[0]));
    }
    Ok(out)
}

/// Parses a plain digraph; any other line kind is an error.
pub fn parse_digraph(text: &str) -> Result<MultiDigraph, ParseError> {
    let doc = parse_document(text)?;
    if !doc.roles.is_empty()
        || doc.terminals.is_some()
        || doc.threshold.is_some()
        || doc.sources.is_some()
        || doc.sinks.is_some()
        || !doc.flow.is_empty()
    {
        return Err(ParseError::new(0, "unexpected non-digraph lines"));
    }
    Ok(doc.digraph)
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut lines = meaningful_lines(text);
    let (first_no, first) = lines.next().ok_or_else(|| ParseError::new(1, "empty input"))?;
    let mut toks = first.split_whitespace();
    if toks.next() != Some("n") {
        return Err(ParseError::new(first_no, "expected `n <vertex_count>`"));
    }
    let n: usize = number(toks.next(), first_no, "vertex count")?;
    if toks.next().is_some() {
        return Err(ParseError::new(first_no, "trailing tokens"));
    }
    let mut doc = Document {
        digraph: MultiDigraph::empty(n),
        ..Document::default()
    };
    let list = |rest: &str, no: usize| parse_vertex_list(rest).map_err(|m| ParseError::new(no, m));
    for (no, line) in lines {
        if let Some(rest) = line.strip_prefix("S:") {
            doc.terminals = Some(list(rest, no)?);
            continue;
        }
        if let Some(rest) = line.strip_prefix("L:") {
            doc.threshold = Some(number(Some(rest.trim()), no, "threshold")?);
            continue;
        }
        if let Some(rest) = line.strip_prefix("sources:") {
            doc.sources = Some(list(rest, no)?);
            continue;
        }
        if let Some(rest) = line.strip_prefix("sinks:") {
            doc.sinks = Some(list(rest, no)?);
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("a") => {
                let tail = number(toks.next(), no, "tail")?;
                let head = number(toks.next(), no, "head")?;
                if toks.next().is_some() {
                    return Err(ParseError::new(no, "trailing tokens"));
                }
                doc.digraph
                    .add_arc(tail, head)
                    .map_err(|e| ParseError::new(no, e.to_string()))?;
            }
            Some("role") => {
                let v: Vertex = number(toks.next(), no, "vertex")?;
                let label = toks.next().ok_or_else(|| ParseError::new(no, "missing label"))?;
                doc.roles.push((v, label.to_string()));
            }
            Some("flow") => {
                let a: usize = number(toks.next(), no, "arc")?;
                let value: u64 = number(toks.next(), no, "flow value")?;
                doc.flow.push((a, value));
            }
            _ => return Err(ParseError::new(no, format!("unrecognized line `{line}`"))),
        }
    }
    Ok(doc)
}

impl Document {
    /// Builds the flow network described by `sources:`, `sinks:` and `flow`
    /// lines.
    pub fn flow_network(&self) -> Result<Network<u64>, String> {
        let mut flow = vec![0u64; self.digraph.arc_count()];
        for &(a, v) in &self.flow {
            *flow
                .get_mut(a)
                .ok_or_else(|| format!("flow on missing arc {a}"))? = v;
        }
        Network::new(
            self.digraph.clone(),
            self.sources.clone().unwrap_or_default(),
            self.sinks.clone().unwrap_or_default(),
            flow,
        )
        .map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessFile {
    pub value: usize,
    pub terminals: Option<Vec<Vertex>>,
    pub cycles: Vec<DirectedCycle>,
}

/// Parses a witness. An `S:` line is accepted so that `lambda-k` reports can
/// be checked directly.
pub fn parse_witness(text: &str) -> Result<WitnessFile, ParseError> {
    let mut value = None;
    let mut terminals = None;
    let mut cycles = Vec::new();
    for (no, line) in meaningful_lines(text) {
        if let Some(rest) = line.strip_prefix("lambda") {
            value = Some(number(Some(rest.trim()), no, "lambda value")?);
        } else if let Some(rest) = line.strip_prefix("cycle:") {
            let vs = rest
                .split_whitespace()
                .map(|t| number(Some(t), no, "vertex"))
                .collect::<Result<Vec<Vertex>, _>>()?;
            if vs.len() < 3 || vs.first() != vs.last() {
                return Err(ParseError::new(no, "cycle must be closed: v0 ... v0"));
            }
            cycles.push(DirectedCycle::new(vs).map_err(|e| ParseError::new(no, e.to_string()))?);
        } else if let Some(rest) = line.strip_prefix("S:") {
            terminals = Some(parse_vertex_list(rest).map_err(|m| ParseError::new(no, m))?);
        } else {
            // other report lines (status, node counts) are ignored
            continue;
        }
    }
    let value = value.ok_or_else(|| ParseError::new(0, "missing `lambda <value>` line"))?;
    Ok(WitnessFile {
        value,
        terminals,
        cycles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::TerminalSet;
    use crate::digraph::Graph;
    use crate::gadgets::gadget_replacement;

    #[test]
    fn digraph_format_is_exact() {
        let d = MultiDigraph::new(3, [(0, 1), (1, 2), (0, 1)]).unwrap();
        let text = write_digraph(&d);
        assert_eq!(text, "n 3\na 0 1\na 1 2\na 0 1\n");
        assert_eq!(parse_digraph(&text).unwrap(), d);
        let commented = "# triangle\nn 3\n\na 0 1\n# mid\na 1 2\na 2 0\n";
        assert_eq!(parse_digraph(commented).unwrap().arc_count(), 3);
    }

    #[test]
    fn digraph_errors() {
        assert!(parse_digraph("").is_err());
        assert!(parse_digraph("a 0 1\n").is_err());
        assert_eq!(parse_digraph("n 1\na 0 0\n").unwrap_err().line, 2);
        assert!(parse_digraph("n 2\na 0 5\n").is_err());
        assert!(parse_digraph("n 2\nx 1\n").is_err());
        assert!(parse_digraph("n 2\nS: 0,1\n").is_err());
    }

    #[test]
    fn gadget_document() {
        let g = gadget_replacement(&Graph::complete(3), 1).unwrap();
        let text = write_gadget(&g);
        assert!(text.ends_with("role 5 v^1_{2,3}\nS: 0,1,2\nL: 1\n"));
        let doc = parse_document(&text).unwrap();
        assert_eq!(doc.digraph, g.digraph);
        assert_eq!(doc.terminals, Some(vec![0, 1, 2]));
        assert_eq!(doc.threshold, Some(1));
        assert_eq!(doc.roles.len(), 3);
    }

    #[test]
    fn witness_round_trip() {
        let s = TerminalSet::new([0, 1, 2], 3).unwrap();
        let p = CyclePacking::new(
            s,
            vec![
                DirectedCycle::new(vec![0, 1, 2]).unwrap(),
                DirectedCycle::new(vec![0, 2, 1]).unwrap(),
            ],
        );
        let text = write_witness(&p);
        assert_eq!(text, "lambda 2\ncycle: 0 1 2 0\ncycle: 0 2 1 0\n");
        let w = parse_witness(&text).unwrap();
        assert_eq!(w.value, 2);
        assert_eq!(w.cycles, p.cycles);
        assert!(parse_witness("cycle: 0 1 0\n").is_err());
        assert!(parse_witness("lambda 1\ncycle: 0 1 2\n").is_err());
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("5, 0,2"), Ok(vec![0, 2, 5]));
        assert!(parse_vertex_list("1,1").is_err());
        assert!(parse_vertex_list("1,x").is_err());
    }

    #[test]
    fn flow_document() {
        let doc = parse_document("n 3\na 0 1\na 1 2\nsources: 0\nsinks: 2\nflow 0 4\nflow 1 4\n").unwrap();
        let net = doc.flow_network().unwrap();
        assert_eq!(net.flow, vec![4, 4]);
        let bad = parse_document("n 3\na 0 1\na 1 2\nsources: 0\nsinks: 2\nflow 0 4\n").unwrap();
        assert!(bad.flow_network().is_err());
    }
}
