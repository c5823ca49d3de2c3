//! Brute-force deciders for the source problems of the reductions, and the
//! polynomial decision of `lambda_S >= 2` on symmetric digraphs.

use std::collections::BTreeMap;

use crate::cycle::{DirectedCycle, TerminalSet};
use crate::digraph::{ArcId, Graph, MultiDigraph, Vertex};
use crate::error::PackingError;
use crate::maxflow::FlowGraph;
use crate::packing::enumerate_s_cycles;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcPath {
    pub vertices: Vec<Vertex>,
    pub arcs: Vec<ArcId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Paths(Vec<ArcPath>),
    /// Vertex sequence of an undirected cycle, first vertex not repeated.
    Cycle(Vec<Vertex>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleAnswer {
    pub decision: bool,
    pub witness: Option<Witness>,
}

impl OracleAnswer {
    fn no() -> Self {
        Self {
            decision: false,
            witness: None,
        }
    }

    fn yes(witness: Witness) -> Self {
        Self {
            decision: true,
            witness: Some(witness),
        }
    }
}

/// Simple-path search over free arcs. Parallel instances are interchangeable,
/// so only the lowest free one per head is tried.
struct PathSearch {
    out: Vec<Vec<(Vertex, Vec<ArcId>)>>,
    used: Vec<bool>,
    on_path: Vec<bool>,
}

impl PathSearch {
    fn new(d: &MultiDigraph) -> Self {
        let out = d
            .vertices()
            .map(|v| {
                let mut by_head: BTreeMap<Vertex, Vec<ArcId>> = BTreeMap::new();
                for &a in d.out_arcs(v) {
                    by_head.entry(d.arc(a).head).or_default().push(a);
                }
                by_head.into_iter().collect()
            })
            .collect();
        Self {
            out,
            used: vec![false; d.arc_count()],
            on_path: vec![false; d.vertex_count()],
        }
    }

    /// Tries every free simple `from -> to` path in lexicographic order and
    /// calls `then` with its arcs marked used. Stops when `then` succeeds.
    fn each_path(
        &mut self,
        from: Vertex,
        to: Vertex,
        then: &mut dyn FnMut(&mut Self, &ArcPath) -> bool,
    ) -> bool {
        let mut path = ArcPath {
            vertices: vec![from],
            arcs: Vec::new(),
        };
        self.on_path[from] = true;
        let ok = self.walk(from, to, &mut path, then);
        self.on_path[from] = false;
        ok
    }

    fn walk(
        &mut self,
        v: Vertex,
        to: Vertex,
        path: &mut ArcPath,
        then: &mut dyn FnMut(&mut Self, &ArcPath) -> bool,
    ) -> bool {
        if v == to {
            for &u in &path.vertices {
                self.on_path[u] = false;
            }
            let ok = then(self, path);
            for &u in &path.vertices {
                self.on_path[u] = true;
            }
            return ok;
        }
        for idx in 0..self.out[v].len() {
            let h = self.out[v][idx].0;
            if self.on_path[h] {
                continue;
            }
            let Some(&a) = self.out[v][idx].1.iter().find(|&&a| !self.used[a]) else {
                continue;
            };
            self.used[a] = true;
            self.on_path[h] = true;
            path.vertices.push(h);
            path.arcs.push(a);
            let ok = self.walk(h, to, path, then);
            path.arcs.pop();
            path.vertices.pop();
            self.on_path[h] = false;
            self.used[a] = false;
            if ok {
                return true;
            }
        }
        false
    }
}

/// Arc-disjoint `s1 -> t1` and `s2 -> t2` paths, by exhaustive search.
pub fn weak_2_linkage(g: &MultiDigraph, s1: Vertex, t1: Vertex, s2: Vertex, t2: Vertex) -> OracleAnswer {
    arc_disjoint_demand_paths(g, s1, t1, 1, s2, t2, 1)
}

/// `d1` paths `s1 -> t1` and `d2` paths `s2 -> t2`, all pairwise
/// arc-disjoint. Max-flow bounds reject hopeless instances before the
/// exhaustive search.
pub fn arc_disjoint_demand_paths(
    g: &MultiDigraph,
    s1: Vertex,
    t1: Vertex,
    d1: usize,
    s2: Vertex,
    t2: Vertex,
    d2: usize,
) -> OracleAnswer {
    if !demand_flow_bounds_hold(g, s1, t1, d1, s2, t2, d2) {
        return OracleAnswer::no();
    }
    let mut demands = Vec::with_capacity(d1 + d2);
    demands.extend(std::iter::repeat_n((s1, t1), d1));
    demands.extend(std::iter::repeat_n((s2, t2), d2));
    let mut search = PathSearch::new(g);
    let mut found = Vec::new();
    if route_all(&mut search, &demands, &mut found) {
        OracleAnswer::yes(Witness::Paths(found))
    } else {
        OracleAnswer::no()
    }
}

fn route_all(search: &mut PathSearch, demands: &[(Vertex, Vertex)], found: &mut Vec<ArcPath>) -> bool {
    let Some((&(s, t), rest)) = demands.split_first() else {
        return true;
    };
    search.each_path(s, t, &mut |search, path| {
        found.push(path.clone());
        if route_all(search, rest, found) {
            return true;
        }
        found.pop();
        false
    })
}

/// Necessary conditions: each pair separately, and both pairs together
/// through a super source and super sink.
pub fn demand_flow_bounds_hold(
    g: &MultiDigraph,
    s1: Vertex,
    t1: Vertex,
    d1: usize,
    s2: Vertex,
    t2: Vertex,
    d2: usize,
) -> bool {
    let network = || {
        let mut f = FlowGraph::new(g.vertex_count());
        for a in g.arcs() {
            f.add_edge(a.tail, a.head, 1);
        }
        f
    };
    let (d1, d2) = (d1 as u64, d2 as u64);
    if network().max_flow(s1, t1, d1) < d1 || network().max_flow(s2, t2, d2) < d2 {
        return false;
    }
    let mut joint = network();
    let src = joint.add_node();
    let snk = joint.add_node();
    joint.add_edge(src, s1, d1);
    joint.add_edge(src, s2, d2);
    joint.add_edge(t1, snk, d1);
    joint.add_edge(t2, snk, d2);
    joint.max_flow(src, snk, d1 + d2) >= d1 + d2
}

/// Backtracking from vertex 0. Graphs with fewer than three vertices have no
/// Hamiltonian cycle.
pub fn hamiltonian_cycle(g: &Graph) -> OracleAnswer {
    let n = g.vertex_count();
    if n < 3 {
        return OracleAnswer::no();
    }
    fn extend(g: &Graph, path: &mut Vec<Vertex>, on: &mut [bool]) -> bool {
        let v = *path.last().expect("nonempty");
        if path.len() == g.vertex_count() {
            return g.has_edge(v, path[0]);
        }
        for w in g.neighbors(v).collect::<Vec<_>>() {
            if !on[w] {
                on[w] = true;
                path.push(w);
                if extend(g, path, on) {
                    return true;
                }
                path.pop();
                on[w] = false;
            }
        }
        false
    }
    let mut path = vec![0];
    let mut on = vec![false; n];
    on[0] = true;
    if extend(g, &mut path, &mut on) {
        OracleAnswer::yes(Witness::Cycle(path))
    } else {
        OracleAnswer::no()
    }
}

/// How [`symmetric_lambda2_decision`] reached its answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lambda2Method {
    /// Two terminals: unit vertex capacities and one max-flow computation.
    MengerFlow,
    /// Three or more terminals: S-cycle existence by bounded enumeration.
    CycleSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lambda2Decision {
    pub decision: bool,
    pub method: Lambda2Method,
    /// A cycle and its reversal when `k >= 3` and the answer is yes.
    pub witness: Option<(DirectedCycle, DirectedCycle)>,
}

/// Decides `lambda_S(D) >= 2` for symmetric `D`.
///
/// With `S = {u, v}` this holds iff the underlying graph has two internally
/// disjoint `(u, v)`-paths, checked by vertex-split max-flow. With `|S| >= 3`
/// it holds iff some S-cycle exists, because its reversal is a second,
/// arc-disjoint one. Existence is checked by enumeration capped at one cycle,
/// which is exponential in the worst case.
pub fn symmetric_lambda2_decision(
    d: &MultiDigraph,
    s: &TerminalSet,
) -> Result<Lambda2Decision, PackingError> {
    if !d.is_symmetric() {
        return Err(PackingError::NotSymmetric);
    }
    if s.k() == 2 {
        let (u, v) = (s.members()[0], s.members()[1]);
        let g = d.underlying_graph();
        let n = g.vertex_count();
        // vertex x is split into x (in) and n + x (out)
        let mut f = FlowGraph::new(2 * n);
        for x in 0..n {
            let cap = if x == u || x == v { 2 } else { 1 };
            f.add_edge(x, n + x, cap);
        }
        for (a, b) in g.edges() {
            f.add_edge(n + a, b, 1);
            f.add_edge(n + b, a, 1);
        }
        let decision = f.max_flow(n + u, v, 2) >= 2;
        return Ok(Lambda2Decision {
            decision,
            method: Lambda2Method::MengerFlow,
            witness: None,
        });
    }
    let found = enumerate_s_cycles(d, s, Some(1));
    let witness = found.into_iter().next().map(|c| {
        let r = c.reversed();
        (c, r)
    });
    Ok(Lambda2Decision {
        decision: witness.is_some(),
        method: Lambda2Method::CycleSearch,
        witness,
    })
}

/// Checks a path witness against `g`: each path is a walk of existing arc
/// instances from its start to its end, and no instance is used twice.
pub fn paths_are_valid(g: &MultiDigraph, paths: &[ArcPath]) -> bool {
    let mut used = vec![false; g.arc_count()];
    for p in paths {
        if p.vertices.len() != p.arcs.len() + 1 {
            return false;
        }
        for (i, &a) in p.arcs.iter().enumerate() {
            if a >= g.arc_count() || used[a] {
                return false;
            }
            used[a] = true;
            let arc = g.arc(a);
            if arc.tail != p.vertices[i] || arc.head != p.vertices[i + 1] {
                return false;
            }
        }
    }
    true
}
