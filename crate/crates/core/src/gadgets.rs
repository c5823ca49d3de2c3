//! Reduction gadgets turning linkage, demand-path and Hamiltonian cycle
//! instances into S-cycle packing instances.
//!
//! Input vertices keep their ids. New vertices are appended: ring vertices
//! `x_1..x_k` first, then the remaining constructed vertices in a fixed order
//! documented on each constructor. Every arc that would otherwise be parallel
//! is subdivided by a named vertex, so all outputs are simple.

use std::collections::BTreeMap;
use std::fmt;

use crate::cycle::TerminalSet;
use crate::digraph::{Graph, MultiDigraph, Vertex};
use crate::error::GadgetError;

/// Role of a constructed vertex. Indices are 1-based as in the drawings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    X(usize),
    /// `z^j_{i,i+1}` on the ring arc `x_i -> x_{i+1}`.
    Z {
        i: usize,
        j: usize,
    },
    U(usize),
    W(usize),
    Source,
    Sink,
    /// Subdivision of the `n`-th balancing arc.
    Balance(usize),
    E(usize),
    EPrime(usize),
    F(usize),
    FPrime(usize),
    /// `p^b_{i,i+1}` on a forward ring arc.
    P {
        b: usize,
        i: usize,
    },
    /// `q^a_{i+1,i}` on a backward ring arc.
    Q {
        a: usize,
        i: usize,
    },
    /// `v^a_{i,j}` on the `a`-th copy of edge `x_i x_j`.
    V {
        a: usize,
        i: usize,
        j: usize,
    },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::X(i) => write!(f, "x_{i}"),
            Role::Z { i, j } => write!(f, "z^{j}_{{{i},{}}}", i + 1),
            Role::U(i) => write!(f, "u_{i}"),
            Role::W(i) => write!(f, "w_{i}"),
            Role::Source => f.write_str("s"),
            Role::Sink => f.write_str("t"),
            Role::Balance(n) => write!(f, "a'_{n}"),
            Role::E(a) => write!(f, "e_{a}"),
            Role::EPrime(a) => write!(f, "e'_{a}"),
            Role::F(b) => write!(f, "f_{b}"),
            Role::FPrime(b) => write!(f, "f'_{b}"),
            Role::P { b, i } => write!(f, "p^{b}_{{{i},{}}}", i + 1),
            Role::Q { a, i } => write!(f, "q^{a}_{{{},{i}}}", i + 1),
            Role::V { a, i, j } => write!(f, "v^{a}_{{{i},{j}}}"),
        }
    }
}

/// Vertex roles of a construction, by vertex id.
pub type Trace = BTreeMap<Vertex, Role>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetOutput {
    pub digraph: MultiDigraph,
    pub terminals: TerminalSet,
    pub threshold: usize,
    pub trace: Trace,
    /// Vertices `0..input_vertices` come from the input unchanged.
    pub input_vertices: usize,
}

impl GadgetOutput {
    /// Every vertex is an input vertex or carries exactly one role.
    pub fn trace_is_complete(&self) -> bool {
        let n = self.digraph.vertex_count();
        (self.input_vertices..n).all(|v| self.trace.contains_key(&v))
            && self.trace.keys().all(|&v| v >= self.input_vertices && v < n)
    }
}

/// A linkage instance `[G; s1, t1, s2, t2]`, with demands for the
/// two-demand-pair variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkageInstance {
    pub graph: MultiDigraph,
    pub s1: Vertex,
    pub t1: Vertex,
    pub s2: Vertex,
    pub t2: Vertex,
    pub demands: Option<(usize, usize)>,
}

impl LinkageInstance {
    pub fn new(graph: MultiDigraph, s1: Vertex, t1: Vertex, s2: Vertex, t2: Vertex) -> Self {
        Self {
            graph,
            s1,
            t1,
            s2,
            t2,
            demands: None,
        }
    }

    pub fn with_demands(mut self, d1: usize, d2: usize) -> Self {
        self.demands = Some((d1, d2));
        self
    }

    pub fn terminals(&self) -> [Vertex; 4] {
        [self.s1, self.t1, self.s2, self.t2]
    }

    fn check(&self) -> Result<(), GadgetError> {
        let n = self.graph.vertex_count();
        let ts = self.terminals();
        if let Some(&v) = ts.iter().find(|&&v| v >= n) {
            return Err(GadgetError::TerminalOutOfRange { vertex: v, n });
        }
        for i in 0..4 {
            if ts[i + 1..].contains(&ts[i]) {
                return Err(GadgetError::TerminalsNotDistinct);
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eulerization {
    /// `G + H` plus the balancing arcs and `p` copies of `t -> s`.
    pub graph: MultiDigraph,
    pub p: usize,
    pub source: Vertex,
    pub sink: Vertex,
    /// Balancing arcs as `(tail, head)` in construction order.
    pub balancing: Vec<(Vertex, Vertex)>,
    pub trace: Trace,
}

/// Adds `t1 -> s1` and `t2 -> s2`, then a super source `s` (id `n`) and sink
/// `t` (id `n + 1`): `s -> v` once per unit of out-excess and `v -> t` once
/// per unit of in-excess, in vertex order, and finally `p` arcs `t -> s`
/// where `p` is the total out-excess. The result is balanced at every vertex.
pub fn eulerize(inst: &LinkageInstance) -> Result<Eulerization, GadgetError> {
    inst.check()?;
    let g = &inst.graph;
    let n = g.vertex_count();
    let mut out = g.clone();
    out.add_arc(inst.t1, inst.s1)?;
    out.add_arc(inst.t2, inst.s2)?;
    let source = out.add_vertex();
    let sink = out.add_vertex();
    let mut balancing = Vec::new();
    let mut p = 0;
    for v in 0..n {
        let (dout, din) = (out.out_degree(v), out.in_degree(v));
        if dout > din {
            p += dout - din;
            balancing.extend(std::iter::repeat_n((source, v), dout - din));
        } else {
            balancing.extend(std::iter::repeat_n((v, sink), din - dout));
        }
    }
    for &(a, b) in &balancing {
        out.add_arc(a, b)?;
    }
    for _ in 0..p {
        out.add_arc(sink, source)?;
    }
    let trace = Trace::from([(source, Role::Source), (sink, Role::Sink)]);
    Ok(Eulerization {
        graph: out,
        p,
        source,
        sink,
        balancing,
        trace,
    })
}

struct Builder {
    d: MultiDigraph,
    trace: Trace,
}

impl Builder {
    fn new(base: &MultiDigraph) -> Self {
        Self {
            d: base.clone(),
            trace: Trace::new(),
        }
    }

    fn vertex(&mut self, role: Role) -> Vertex {
        let v = self.d.add_vertex();
        self.trace.insert(v, role);
        v
    }

    fn arc(&mut self, a: Vertex, b: Vertex) -> Result<(), GadgetError> {
        self.d.add_arc(a, b)?;
        Ok(())
    }

    /// `a -> x -> b` through a new vertex `x`.
    fn via(&mut self, a: Vertex, role: Role, b: Vertex) -> Result<Vertex, GadgetError> {
        let x = self.vertex(role);
        self.arc(a, x)?;
        self.arc(x, b)?;
        Ok(x)
    }
}

/// Eulerian gadget for a weak 2-linkage instance, with `k >= 3` terminals.
///
/// Vertex order after the input: `x_1..x_k`, `s`, `t`, then `z^j_{i,i+1}`
/// (by `i`, then `j`), `u_1..u_p`, `w_1..w_p`, and one subdivision vertex per
/// balancing arc. Ring arc `x_i -> x_{i+1}` (with `x_{k+1} = x_1`) has
/// multiplicity `p + 2` for `i <= k - 3`, 2 for `i = k - 2` and `p + 1` for
/// `i` in `{k - 1, k}`; every copy is subdivided. The threshold is `p + 2`
/// and the input needs a linkage exactly when the threshold is attained.
pub fn gadget_eulerian(inst: &LinkageInstance, k: usize) -> Result<GadgetOutput, GadgetError> {
    if k < 3 {
        return Err(GadgetError::KTooSmall { k, min: 3 });
    }
    inst.check()?;
    if !inst.graph.is_simple() {
        return Err(GadgetError::InputNotSimple);
    }
    let eul = eulerize(inst)?;
    let p = eul.p;
    let n = inst.graph.vertex_count();

    let mut b = Builder::new(&inst.graph);
    let x: Vec<Vertex> = (1..=k).map(|i| b.vertex(Role::X(i))).collect();
    let xi = |i: usize| x[(i - 1) % k];
    let s = b.vertex(Role::Source);
    let t = b.vertex(Role::Sink);

    b.arc(xi(k - 1), inst.s1)?;
    b.arc(inst.t1, xi(k))?;
    b.arc(xi(k), inst.s2)?;
    b.arc(inst.t2, xi(1))?;

    for i in 1..=k {
        let copies = if i <= k - 3 {
            p + 2
        } else if i == k - 2 {
            2
        } else {
            p + 1
        };
        for j in 1..=copies {
            b.via(xi(i), Role::Z { i, j }, xi(i + 1))?;
        }
    }
    for i in 1..=p {
        b.via(xi(k - 2), Role::U(i), s)?;
    }
    for i in 1..=p {
        b.via(t, Role::W(i), xi(k - 1))?;
    }
    for (idx, &(tail, head)) in eul.balancing.iter().enumerate() {
        let tail = if tail == eul.source { s } else { tail };
        let head = if head == eul.sink { t } else { head };
        b.via(tail, Role::Balance(idx + 1), head)?;
    }

    let terminals = TerminalSet::new(x.iter().copied(), b.d.vertex_count()).expect("k >= 3 ring vertices");
    Ok(GadgetOutput {
        digraph: b.d,
        terminals,
        threshold: p + 2,
        trace: b.trace,
        input_vertices: n,
    })
}

/// Planar gadget for the two-demand-pair problem, with `k >= 2` terminals.
///
/// Vertex order after the input: `x_1..x_k`, then `q^a_{i+1,i}` (by `i`, then
/// `a`), `e_a`, `e'_a`, `p^b_{i,i+1}` (by `i`, then `b`), `f_b`, `f'_b`. The
/// threshold is `d1 + d2`. The caller is responsible for the input being
/// planar with `s1, s2, t1, t2` in this cyclic order on the outer face.
pub fn gadget_planar(inst: &LinkageInstance, k: usize) -> Result<GadgetOutput, GadgetError> {
    if k < 2 {
        return Err(GadgetError::KTooSmall { k, min: 2 });
    }
    let (d1, d2) = inst.demands.unwrap_or((1, 1));
    if d1 == 0 || d2 == 0 {
        return Err(GadgetError::InvalidDemands(d1, d2));
    }
    inst.check()?;
    if !inst.graph.is_simple() {
        return Err(GadgetError::InputNotSimple);
    }
    let n = inst.graph.vertex_count();
    let mut b = Builder::new(&inst.graph);
    let x: Vec<Vertex> = (1..=k).map(|i| b.vertex(Role::X(i))).collect();
    let xi = |i: usize| x[i - 1];

    for i in 1..k {
        for a in 1..=d1 {
            b.via(xi(i + 1), Role::Q { a, i }, xi(i))?;
        }
    }
    for a in 1..=d1 {
        b.via(xi(1), Role::E(a), inst.s1)?;
    }
    for a in 1..=d1 {
        b.via(inst.t1, Role::EPrime(a), xi(k))?;
    }
    for i in 1..k {
        for bb in 1..=d2 {
            b.via(xi(i), Role::P { b: bb, i }, xi(i + 1))?;
        }
    }
    for bb in 1..=d2 {
        b.via(xi(k), Role::F(bb), inst.s2)?;
    }
    for bb in 1..=d2 {
        b.via(inst.t2, Role::FPrime(bb), xi(1))?;
    }

    let terminals = TerminalSet::new(x.iter().copied(), b.d.vertex_count()).expect("k >= 2 ring vertices");
    Ok(GadgetOutput {
        digraph: b.d,
        terminals,
        threshold: d1 + d2,
        trace: b.trace,
        input_vertices: n,
    })
}

/// Symmetric gadget for Hamiltonian cycle: each edge `x_i x_j` (`i < j`)
/// gets `ell` subdivision vertices `v^a_{i,j}`, appended by edge then `a`,
/// and every resulting edge becomes a pair of opposite arcs. Terminals are
/// the input vertices and the threshold is `ell`.
pub fn gadget_replacement(g: &Graph, ell: usize) -> Result<GadgetOutput, GadgetError> {
    if ell == 0 {
        return Err(GadgetError::InvalidEll);
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(GadgetError::TooFewVertices);
    }
    let mut b = Builder::new(&MultiDigraph::empty(n));
    for (i, j) in g.edges() {
        for a in 1..=ell {
            let v = b.vertex(Role::V {
                a,
                i: i + 1,
                j: j + 1,
            });
            b.arc(i, v)?;
            b.arc(v, i)?;
            b.arc(v, j)?;
            b.arc(j, v)?;
        }
    }
    let terminals = TerminalSet::new(0..n, b.d.vertex_count()).expect("n >= 2");
    Ok(GadgetOutput {
        digraph: b.d,
        terminals,
        threshold: ell,
        trace: b.trace,
        input_vertices: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_arcs() -> LinkageInstance {
        // s1=0 -> t1=1, s2=2 -> t2=3
        LinkageInstance::new(MultiDigraph::new(4, [(0, 1), (2, 3)]).unwrap(), 0, 1, 2, 3)
    }

    #[test]
    fn eulerize_balanced_input() {
        let e = eulerize(&two_arcs()).unwrap();
        assert_eq!(e.p, 0);
        assert!(e.balancing.is_empty());
        assert!(e.graph.is_balanced());
    }

    #[test]
    fn eulerize_with_excess() {
        // s1=0, t1=1, s2=2, t2=3; arcs s1->t1, s1->t2, s2->t2
        let inst = LinkageInstance::new(
            MultiDigraph::new(4, [(0, 1), (0, 3), (2, 3)]).unwrap(),
            0,
            1,
            2,
            3,
        );
        let e = eulerize(&inst).unwrap();
        assert_eq!(e.p, 1);
        assert_eq!(e.balancing, vec![(e.source, 0), (3, e.sink)]);
        assert!(e.graph.is_balanced());
        assert!(e.graph.is_eulerian());
    }

    #[test]
    fn eulerize_rejects_repeated_terminals() {
        let inst = LinkageInstance::new(MultiDigraph::new(4, [(0, 1)]).unwrap(), 0, 1, 0, 3);
        assert_eq!(eulerize(&inst), Err(GadgetError::TerminalsNotDistinct));
    }

    #[test]
    fn eulerian_gadget_structure() {
        let inst = LinkageInstance::new(
            MultiDigraph::new(4, [(0, 1), (0, 3), (2, 3)]).unwrap(),
            0,
            1,
            2,
            3,
        );
        for k in 3..=5 {
            let out = gadget_eulerian(&inst, k).unwrap();
            let d = &out.digraph;
            assert!(d.is_simple());
            assert!(d.is_eulerian());
            assert_eq!(out.threshold, 3);
            for &x in out.terminals.members() {
                assert_eq!(d.out_degree(x), 3);
                assert_eq!(d.in_degree(x), 3);
            }
            assert!(out.trace_is_complete());
        }
        assert_eq!(
            gadget_eulerian(&inst, 2),
            Err(GadgetError::KTooSmall { k: 2, min: 3 })
        );
    }

    #[test]
    fn eulerian_gadget_vertex_order() {
        let out = gadget_eulerian(&two_arcs(), 3).unwrap();
        // p = 0: ring multiplicities 2, 1, 1
        let roles: Vec<String> = out.trace.values().map(Role::to_string).collect();
        assert_eq!(
            roles,
            [
                "x_1",
                "x_2",
                "x_3",
                "s",
                "t",
                "z^1_{1,2}",
                "z^2_{1,2}",
                "z^1_{2,3}",
                "z^1_{3,4}"
            ]
        );
    }

    #[test]
    fn planar_gadget_structure() {
        let inst = two_arcs().with_demands(2, 1);
        let out = gadget_planar(&inst, 3).unwrap();
        assert!(out.digraph.is_simple());
        assert_eq!(out.threshold, 3);
        for &x in out.terminals.members() {
            assert_eq!(out.digraph.out_degree(x), 3);
            assert_eq!(out.digraph.in_degree(x), 3);
        }
        assert!(out.digraph.is_planar());
        assert!(out.trace_is_complete());
        assert!(gadget_planar(&two_arcs().with_demands(0, 1), 2).is_err());
        assert!(gadget_planar(&two_arcs(), 1).is_err());
    }

    #[test]
    fn replacement_gadget_structure() {
        let out = gadget_replacement(&Graph::complete(3), 1).unwrap();
        assert_eq!(out.digraph.vertex_count(), 6);
        assert_eq!(out.digraph.arc_count(), 12);
        assert!(out.digraph.is_symmetric());
        assert!(out.digraph.is_eulerian());
        assert!(out.digraph.is_simple());
        assert_eq!(out.trace[&3].to_string(), "v^1_{1,2}");

        let path = gadget_replacement(&Graph::path(3), 2).unwrap();
        assert_eq!(path.digraph.vertex_count(), 3 + 4);
        assert!(gadget_replacement(&Graph::path(3), 0).is_err());
        assert!(gadget_replacement(&Graph::new(1), 1).is_err());
    }
}
