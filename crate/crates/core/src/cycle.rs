//! Terminal sets, directed cycles and cycle packings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::digraph::{MultiDigraph, Vertex};
use crate::error::{PackingError, TerminalError};

/// The set `S` of required vertices, kept sorted, with `|S| >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TerminalSet {
    members: Vec<Vertex>,
}

impl TerminalSet {
    /// Validates against a digraph on `n` vertices. Duplicates are rejected
    /// rather than merged.
    pub fn new(members: impl IntoIterator<Item = Vertex>, n: usize) -> Result<Self, TerminalError> {
        let mut members: Vec<Vertex> = members.into_iter().collect();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(TerminalError::Duplicate(w[0]));
        }
        if members.len() < 2 {
            return Err(TerminalError::TooSmall(members.len()));
        }
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(TerminalError::OutOfRange { vertex: v, n });
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Smallest terminal; canonical cycles start here.
    pub fn first(&self) -> Vertex {
        self.members[0]
    }
}

impl fmt::Display for TerminalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// A closed vertex sequence `v0 v1 ... v0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedCycle {
    vertices: Vec<Vertex>,
}

impl DirectedCycle {
    /// Accepts either an open listing `v0 .. v_{m-1}` or a closed one ending
    /// in `v0`. Checks simplicity and length, not membership in a digraph.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self, PackingError> {
        if vertices.len() >= 2 && vertices.first() == vertices.last() {
            vertices.pop();
        }
        let bad = || PackingError::NotACycle(format!("{vertices:?}"));
        if vertices.len() < 2 {
            return Err(bad());
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(bad());
        }
        Ok(Self { vertices })
    }

    /// Vertices without the closing repetition.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Vertices with the closing repetition.
    pub fn closed_sequence(&self) -> Vec<Vertex> {
        let mut v = self.vertices.clone();
        v.push(self.vertices[0]);
        v
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Ordered pairs traversed, in order.
    pub fn arc_pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let m = self.vertices.len();
        (0..m).map(move |i| (self.vertices[i], self.vertices[(i + 1) % m]))
    }

    pub fn rotated_to(&self, start: Vertex) -> Option<Self> {
        let pos = self.vertices.iter().position(|&v| v == start)?;
        let mut vertices = self.vertices[pos..].to_vec();
        vertices.extend_from_slice(&self.vertices[..pos]);
        Some(Self { vertices })
    }

    /// The same cycle traversed backwards from the same start vertex.
    pub fn reversed(&self) -> Self {
        let mut vertices = vec![self.vertices[0]];
        vertices.extend(self.vertices[1..].iter().rev());
        Self { vertices }
    }

    pub fn is_in(&self, d: &MultiDigraph) -> bool {
        self.vertices.iter().all(|&v| v < d.vertex_count()) && self.arc_pairs().all(|(u, v)| d.has_arc(u, v))
    }
}

impl fmt::Display for DirectedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.closed_sequence().iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclePacking {
    pub terminals: TerminalSet,
    pub cycles: Vec<DirectedCycle>,
}

impl CyclePacking {
    pub fn new(terminals: TerminalSet, cycles: Vec<DirectedCycle>) -> Self {
        Self { terminals, cycles }
    }

    pub fn empty(terminals: TerminalSet) -> Self {
        Self::new(terminals, Vec::new())
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Checks that every cycle lies in `host` and contains all terminals, and that
/// no arc instance is needed twice: an ordered pair may be used by at most as
/// many cycles as its multiplicity.
pub fn verify_packing(host: &MultiDigraph, packing: &CyclePacking) -> bool {
    if packing
        .terminals
        .members()
        .iter()
        .any(|&s| s >= host.vertex_count())
    {
        return false;
    }
    let mut usage: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for c in &packing.cycles {
        if !c.is_in(host) {
            return false;
        }
        if !packing.terminals.members().iter().all(|&s| c.contains(s)) {
            return false;
        }
        for pair in c.arc_pairs() {
            *usage.entry(pair).or_default() += 1;
        }
    }
    usage
        .into_iter()
        .all(|((u, v), used)| used <= host.multiplicity(u, v))
}

/// Reverses `c` in a symmetric digraph. For cycles of length at least three
/// the result shares no arc with `c`.
pub fn reverse_cycle(d: &MultiDigraph, c: &DirectedCycle) -> Result<DirectedCycle, PackingError> {
    if !d.is_symmetric() {
        return Err(PackingError::NotSymmetric);
    }
    if !c.is_in(d) {
        return Err(PackingError::NotACycle(c.to_string()));
    }
    Ok(c.reversed())
}
