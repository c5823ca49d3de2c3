//! Directed multigraphs with dense `0..n` vertex ids.
//!
//! Arcs are stored as an ordered list of instances; the position of an
//! instance in that list is its [`ArcId`]. Parallel arcs are allowed, loops
//! are not.

use std::collections::BTreeSet;

use crate::error::GraphError;

pub type Vertex = usize;
pub type ArcId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arc {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        Self { tail, head }
    }

    pub fn reversed(self) -> Self {
        Self::new(self.head, self.tail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiDigraph {
    arcs: Vec<Arc>,
    out_arcs: Vec<Vec<ArcId>>,
    in_arcs: Vec<Vec<ArcId>>,
}

impl MultiDigraph {
    /// Digraph on `n` vertices without arcs.
    pub fn empty(n: usize) -> Self {
        Self {
            arcs: Vec::new(),
            out_arcs: vec![Vec::new(); n],
            in_arcs: vec![Vec::new(); n],
        }
    }

    /// Builds a multidigraph from an arc list. Multiplicities are preserved
    /// and arc ids follow list order.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = Self::empty(n);
        for (tail, head) in arcs {
            d.add_arc(tail, head)?;
        }
        Ok(d)
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.out_arcs.push(Vec::new());
        self.in_arcs.push(Vec::new());
        self.out_arcs.len() - 1
    }

    pub fn add_arc(&mut self, tail: Vertex, head: Vertex) -> Result<ArcId, GraphError> {
        let n = self.vertex_count();
        for v in [tail, head] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        if tail == head {
            return Err(GraphError::Loop(tail));
        }
        let id = self.arcs.len();
        self.arcs.push(Arc::new(tail, head));
        self.out_arcs[tail].push(id);
        self.in_arcs[head].push(id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.out_arcs.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    pub fn arc(&self, id: ArcId) -> Arc {
        self.arcs[id]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Out-arc ids of `v` in insertion order.
    pub fn out_arcs(&self, v: Vertex) -> &[ArcId] {
        &self.out_arcs[v]
    }

    pub fn in_arcs(&self, v: Vertex) -> &[ArcId] {
        &self.in_arcs[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_arcs[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_arcs[v].len()
    }

    pub fn multiplicity(&self, tail: Vertex, head: Vertex) -> usize {
        if tail >= self.vertex_count() {
            return 0;
        }
        self.out_arcs[tail]
            .iter()
            .filter(|&&a| self.arcs[a].head == head)
            .count()
    }

    pub fn has_arc(&self, tail: Vertex, head: Vertex) -> bool {
        self.multiplicity(tail, head) > 0
    }

    /// Every ordered pair occurs at most once.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.arcs.iter().all(|&a| seen.insert(a))
    }

    /// Minimum semi-degree: the smallest in- or out-degree over all vertices.
    /// Zero for the empty vertex set.
    pub fn min_semi_degree(&self) -> usize {
        self.vertices()
            .map(|v| self.out_degree(v).min(self.in_degree(v)))
            .min()
            .unwrap_or(0)
    }

    pub fn is_balanced(&self) -> bool {
        self.vertices().all(|v| self.out_degree(v) == self.in_degree(v))
    }

    /// Connected underlying graph and `d+(v) = d-(v)` everywhere.
    pub fn is_eulerian(&self) -> bool {
        self.is_balanced() && self.underlying_graph().is_connected()
    }

    /// Every arc `(u, v)` has a reverse arc `(v, u)`.
    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|a| self.has_arc(a.head, a.tail))
    }

    pub fn is_planar(&self) -> bool {
        crate::planarity::is_planar(&self.underlying_graph())
    }

    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::new(self.vertex_count());
        for a in &self.arcs {
            g.add_edge(a.tail, a.head);
        }
        g
    }

    /// Replaces arc instance `id = (u, v)` by the path `u -> x -> v` through a
    /// fresh vertex `x = vertex_count()`. The remaining arcs keep their
    /// relative order; the two new arcs are appended as `(u, x)`, `(x, v)`.
    pub fn subdivide_arc(&self, id: ArcId) -> Result<(Self, Vertex), GraphError> {
        if id >= self.arc_count() {
            return Err(GraphError::MissingArc(id));
        }
        let Arc { tail, head } = self.arcs[id];
        let mut d = Self::empty(self.vertex_count());
        for (i, a) in self.arcs.iter().enumerate() {
            if i != id {
                d.add_arc(a.tail, a.head)?;
            }
        }
        let x = d.add_vertex();
        d.add_arc(tail, x)?;
        d.add_arc(x, head)?;
        Ok((d, x))
    }

    /// Digraph with every arc present in both directions, one instance per
    /// ordered pair.
    pub fn from_graph_bidirected(g: &Graph) -> Self {
        let mut d = Self::empty(g.vertex_count());
        for (u, v) in g.edges() {
            d.add_arc(u, v).expect("graph vertices are in range");
            d.add_arc(v, u).expect("graph vertices are in range");
        }
        d
    }
}

/// Simple undirected graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<Vertex>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list; loops and repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(u).is_some_and(|n| n.contains(&v))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, n)| n.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Connected in the usual sense; graphs with at most one vertex count
    /// as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn is_planar(&self) -> bool {
        crate::planarity::is_planar(self)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Self::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MultiDigraph {
        MultiDigraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn bidirected_triangle() -> MultiDigraph {
        MultiDigraph::from_graph_bidirected(&Graph::complete(3))
    }

    #[test]
    fn build_rejects_loops_and_bad_ids() {
        assert_eq!(MultiDigraph::new(1, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            MultiDigraph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn multiplicity_is_kept() {
        let d = MultiDigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(d.multiplicity(0, 1), 2);
        assert!(!d.is_simple());
        assert!(triangle().is_simple());
    }

    #[test]
    fn eulerian_examples() {
        assert!(triangle().is_eulerian());
        assert!(!MultiDigraph::new(2, [(0, 1)]).unwrap().is_eulerian());
        let two = MultiDigraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(two.is_balanced());
        assert!(!two.is_eulerian());
    }

    #[test]
    fn symmetric_examples() {
        assert!(bidirected_triangle().is_symmetric());
        assert!(!triangle().is_symmetric());
        assert!(MultiDigraph::empty(3).is_symmetric());
    }

    #[test]
    fn underlying_examples() {
        assert_eq!(triangle().underlying_graph(), Graph::complete(3));
        assert_eq!(bidirected_triangle().underlying_graph(), Graph::complete(3));
        let d = MultiDigraph::new(2, [(0, 1), (1, 0)]).unwrap();
        let g = d.underlying_graph();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn subdivide_single_arc() {
        let d = MultiDigraph::new(2, [(0, 1)]).unwrap();
        let (s, x) = d.subdivide_arc(0).unwrap();
        assert_eq!(x, 2);
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(s.arcs(), &[Arc::new(0, 2), Arc::new(2, 1)]);
        assert_eq!(s.out_degree(0), d.out_degree(0));
        assert_eq!(s.in_degree(1), d.in_degree(1));
    }

    #[test]
    fn subdivide_parallel_arc() {
        let d = MultiDigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        let (s, _) = d.subdivide_arc(1).unwrap();
        assert_eq!(s.multiplicity(0, 1), 1);
        assert!(s.has_arc(0, 2) && s.has_arc(2, 1));
        assert!(s.is_simple());
        assert_eq!(d.subdivide_arc(2), Err(GraphError::MissingArc(2)));
    }

    #[test]
    fn semi_degree() {
        assert_eq!(triangle().min_semi_degree(), 1);
        let d = MultiDigraph::new(3, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(d.min_semi_degree(), 0);
    }

    #[test]
    fn graph_helpers() {
        assert_eq!(Graph::petersen().edge_count(), 15);
        assert!(Graph::petersen().neighbors(0).all(|v| v < 10));
        assert!(Graph::petersen().is_connected());
        assert_eq!(Graph::complete_bipartite(3, 3).edge_count(), 9);
        let mut g = Graph::path(3);
        assert!(g.is_connected());
        g.remove_edge(0, 1);
        assert!(!g.is_connected());
    }
}
