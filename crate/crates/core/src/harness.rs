//! Seeded random corpora and the agreement checks run over them.
//!
//! Every corpus is drawn from `ChaCha8Rng::seed_from_u64(seed)`, so a seed and
//! a count reproduce the same instances on every platform. Each instance
//! yields one row `id<TAB>oracle<TAB>solver<TAB>agree`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cycle::{verify_packing, TerminalSet};
use crate::digraph::{Graph, MultiDigraph, Vertex};
use crate::flow::{flow_decompose, Network};
use crate::gadgets::{gadget_eulerian, gadget_planar, gadget_replacement, LinkageInstance};
use crate::oracles::{
    arc_disjoint_demand_paths, hamiltonian_cycle, symmetric_lambda2_decision, weak_2_linkage, Lambda2Method,
};
use crate::packing::{lambda_k_with, solve, LambdaKOptions, SolveOptions};

pub const DEFAULT_SEED: u64 = 0x5eed_c1c1e;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corpus {
    Replacement,
    Eulerian,
    Planar,
    Symmetric,
    Flow,
    Facts,
}

impl Corpus {
    pub const ALL: [Corpus; 6] = [
        Corpus::Replacement,
        Corpus::Eulerian,
        Corpus::Planar,
        Corpus::Symmetric,
        Corpus::Flow,
        Corpus::Facts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Corpus::Replacement => "replacement",
            Corpus::Eulerian => "eulerian",
            Corpus::Planar => "planar",
            Corpus::Symmetric => "symmetric",
            Corpus::Flow => "flow",
            Corpus::Facts => "facts",
        }
    }

    /// Instance count used by the acceptance suite.
    pub fn default_count(self) -> usize {
        match self {
            Corpus::Replacement => 200,
            Corpus::Eulerian | Corpus::Symmetric | Corpus::Flow => 100,
            Corpus::Planar => 50,
            Corpus::Facts => 300,
        }
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Corpus {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Corpus::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown corpus `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessRow {
    pub id: String,
    pub oracle: String,
    pub solver: String,
    /// Structural checks on the instance and witness (Eulerian, planar,
    /// verified packing, ...).
    pub valid: bool,
    pub agree: bool,
}

impl fmt::Display for HarnessRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}\t{}", self.id, self.oracle, self.solver, self.agree)
    }
}

pub fn run(corpus: Corpus, seed: u64, count: usize) -> Vec<HarnessRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let id = format!("{corpus}-{i:03}");
            match corpus {
                Corpus::Replacement => replacement_row(id, &mut rng),
                Corpus::Eulerian => eulerian_row(id, &mut rng),
                Corpus::Planar => planar_row(id, &mut rng),
                Corpus::Symmetric => symmetric_row(id, &mut rng),
                Corpus::Flow => flow_row(id, &mut rng),
                Corpus::Facts => facts_row(id, &mut rng),
            }
        })
        .collect()
}

/// Connected graph on `n` vertices: a random spanning tree plus each other
/// pair with probability `density`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut g = Graph::new(n);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]);
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Simple digraph without opposite arc pairs, `m` arcs, connected underlying
/// graph. `m` must be at least `n - 1`.
pub fn random_oriented_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> MultiDigraph {
    loop {
        let mut pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        pairs.shuffle(rng);
        let arcs: Vec<(Vertex, Vertex)> = pairs
            .into_iter()
            .take(m)
            .map(|(u, v)| if rng.gen_bool(0.5) { (u, v) } else { (v, u) })
            .collect();
        let d = MultiDigraph::new(n, arcs).expect("distinct in-range pairs");
        if d.underlying_graph().is_connected() {
            return d;
        }
    }
}

fn replacement_row(id: String, rng: &mut ChaCha8Rng) -> HarnessRow {
    let n = rng.gen_range(4..=8);
    let density = rng.gen_range(0.1..0.6);
    let g = random_connected_graph(rng, n, density);
    let ell = rng.gen_range(1..=2);
    let out = gadget_replacement(&g, ell).expect("valid replacement input");
    let oracle = hamiltonian_cycle(&g).decision;
    let sol = solve(
        &out.digraph,
        &out.terminals,
        SolveOptions::default().with_target(ell),
    );
    let solver = sol.value() >= ell;
    let checks = out.digraph.is_symmetric() && verify_packing(&out.digraph, &sol.packing);
    HarnessRow {
        id: format!("{id} n={n} m={} l={ell}", g.edge_count()),
        oracle: oracle.to_string(),
        solver: solver.to_string(),
        valid: checks,
        agree: oracle == solver && checks,
    }
}

fn four_distinct<R: Rng>(rng: &mut R, n: usize) -> [Vertex; 4] {
    let mut vs: Vec<Vertex> = (0..n).collect();
    vs.shuffle(rng);
    [vs[0], vs[1], vs[2], vs[3]]
}

fn eulerian_row(id: String, rng: &mut ChaCha8Rng) -> HarnessRow {
    let n = rng.gen_range(4..=6);
    let max_m = 10.min(n * (n - 1) / 2);
    let m = rng.gen_range(n - 1..=max_m);
    let g = random_oriented_graph(rng, n, m);
    let [s1, t1, s2, t2] = four_distinct(rng, n);
    let inst = LinkageInstance::new(g.clone(), s1, t1, s2, t2);
    let out = gadget_eulerian(&inst, 3).expect("valid Eulerian input");
    let oracle = weak_2_linkage(&g, s1, t1, s2, t2).decision;
    let sol = solve(
        &out.digraph,
        &out.terminals,
        SolveOptions::default().with_target(out.threshold),
    );
    let solver = sol.value() >= out.threshold;
    let checks =
        out.digraph.is_eulerian() && out.digraph.is_simple() && verify_packing(&out.digraph, &sol.packing);
    HarnessRow {
        id: format!("{id} n={n} m={m} L={}", out.threshold),
        oracle: oracle.to_string(),
        solver: solver.to_string(),
        valid: checks,
        agree: oracle == solver && checks,
    }
}

/// Outerplanar instance: a boundary cycle `0..n` carrying `s1, s2, t1, t2` in
/// this cyclic order, plus non-crossing chords. Every edge gets both arcs
/// with probability 3/4, otherwise one arc in a uniform direction.
pub fn random_outerplanar_instance<R: Rng>(rng: &mut R, n: usize) -> LinkageInstance {
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut chords: Vec<(Vertex, Vertex)> = Vec::new();
    for _ in 0..rng.gen_range(0..=2 * n) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        let (a, b) = (a.min(b), a.max(b));
        if b - a < 2 || (a == 0 && b == n - 1) || chords.contains(&(a, b)) {
            continue;
        }
        let crosses = chords
            .iter()
            .any(|&(c, d)| (a < c && c < b && b < d) || (c < a && a < d && d < b));
        if !crosses {
            chords.push((a, b));
        }
    }
    edges.extend(chords);
    let mut arcs = Vec::new();
    for (u, v) in edges {
        match rng.gen_range(0..8) {
            0 => arcs.push((u, v)),
            1 => arcs.push((v, u)),
            _ => {
                arcs.push((u, v));
                arcs.push((v, u));
            }
        }
    }
    let mut pos: Vec<Vertex> = (0..n).collect();
    pos.shuffle(rng);
    let mut four = [pos[0], pos[1], pos[2], pos[3]];
    four.sort_unstable();
    let [s1, s2, t1, t2] = four;
    let d = MultiDigraph::new(n, arcs).expect("in-range arcs");
    LinkageInstance::new(d, s1, t1, s2, t2)
}

fn planar_row(id: String, rng: &mut ChaCha8Rng) -> HarnessRow {
    let n = rng.gen_range(4..=7);
    let (d1, d2) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
    let inst = random_outerplanar_instance(rng, n).with_demands(d1, d2);
    let out = gadget_planar(&inst, 2).expect("valid planar input");
    let oracle = arc_disjoint_demand_paths(&inst.graph, inst.s1, inst.t1, d1, inst.s2, inst.t2, d2).decision;
    let sol = solve(
        &out.digraph,
        &out.terminals,
        SolveOptions::default().with_target(out.threshold),
    );
    let solver = sol.value() >= out.threshold;
    let checks =
        inst.graph.is_planar() && out.digraph.is_planar() && verify_packing(&out.digraph, &sol.packing);
    HarnessRow {
        id: format!("{id} n={n} d=({d1},{d2})"),
        oracle: oracle.to_string(),
        solver: solver.to_string(),
        valid: checks,
        agree: oracle == solver && checks,
    }
}

fn symmetric_row(id: String, rng: &mut ChaCha8Rng) -> HarnessRow {
    let n = rng.gen_range(3..=7);
    let density = rng.gen_range(0.1..0.7);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    let d = MultiDigraph::from_graph_bidirected(&g);
    let k = rng.gen_range(2..=n);
    let mut vs: Vec<Vertex> = (0..n).collect();
    vs.shuffle(rng);
    let s = TerminalSet::new(vs[..k].iter().copied(), n).expect("k distinct vertices");
    let fast = symmetric_lambda2_decision(&d, &s).expect("bidirected input");
    let sol = solve(&d, &s, SolveOptions::default().with_target(2));
    let exact = sol.value() >= 2;
    let method_ok = (k == 2) == (fast.method == Lambda2Method::MengerFlow);
    HarnessRow {
        id: format!("{id} n={n} m={} S={s}", g.edge_count()),
        oracle: exact.to_string(),
        solver: fast.decision.to_string(),
        valid: method_ok,
        agree: exact == fast.decision && method_ok,
    }
}

/// Random integral flow built from weighted source-sink paths and cycles on
/// at most `max_n` vertices, plus some arcs carrying no flow.
pub fn random_flow<R: Rng>(rng: &mut R, max_n: usize) -> Network<u64> {
    let n = rng.gen_range(3..=max_n);
    let mut vs: Vec<Vertex> = (0..n).collect();
    vs.shuffle(rng);
    let n_src = rng.gen_range(1..=(n / 3).max(1));
    let n_snk = rng.gen_range(1..=(n / 3).max(1));
    let sources: Vec<Vertex> = vs[..n_src].to_vec();
    let sinks: Vec<Vertex> = vs[n_src..n_src + n_snk].to_vec();
    let inner: Vec<Vertex> = vs[n_src + n_snk..].to_vec();

    let mut d = MultiDigraph::empty(n);
    let mut flow: Vec<u64> = Vec::new();
    let add_walk = |d: &mut MultiDigraph, flow: &mut Vec<u64>, walk: &[Vertex], w: u64| {
        for pair in walk.windows(2) {
            let existing = d
                .out_arcs(pair[0])
                .iter()
                .copied()
                .find(|&a| d.arc(a).head == pair[1]);
            let a = match existing {
                Some(a) => a,
                None => {
                    flow.push(0);
                    d.add_arc(pair[0], pair[1]).expect("distinct walk vertices")
                }
            };
            flow[a] += w;
        }
    };
    for _ in 0..rng.gen_range(1..=4) {
        let mut mid = inner.clone();
        mid.shuffle(rng);
        mid.truncate(rng.gen_range(0..=mid.len()));
        let mut walk = vec![*sources.choose(rng).expect("nonempty")];
        walk.extend(mid);
        walk.push(*sinks.choose(rng).expect("nonempty"));
        add_walk(&mut d, &mut flow, &walk, rng.gen_range(1..=5));
    }
    if inner.len() >= 2 {
        for _ in 0..rng.gen_range(0..=2) {
            let mut cyc = inner.clone();
            cyc.shuffle(rng);
            cyc.truncate(rng.gen_range(2..=cyc.len()));
            cyc.push(cyc[0]);
            add_walk(&mut d, &mut flow, &cyc, rng.gen_range(1..=5));
        }
    }
    for _ in 0..rng.gen_range(0..=3) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            d.add_arc(u, v).expect("in range");
            flow.push(0);
        }
    }
    Network::new(d, sources, sinks, flow).expect("sums of paths and cycles conserve flow")
}

fn flow_row(id: String, rng: &mut ChaCha8Rng) -> HarnessRow {
    let net = random_flow(rng, 10);
    let (n, m) = (net.digraph.vertex_count(), net.digraph.arc_count());
    let dec = flow_decompose(&net).expect("valid network");
    let (alpha, beta) = (dec.path_terms.len(), dec.cycle_terms.len());
    let exact = dec.arc_sum(m) == net.flow;
    let bounds = alpha + beta <= n + m && beta <= m;
    let ends = dec.path_terms.iter().all(|t| {
        net.sources.contains(&t.vertices[0]) && net.sinks.contains(t.vertices.last().expect("nonempty"))
    });
    HarnessRow {
        id: format!("{id} n={n} m={m}"),
        oracle: format!("|V|+|A|={}", n + m),
        solver: format!("alpha={alpha},beta={beta},exact={exact}"),
        valid: exact && bounds && ends,
        agree: exact && bounds && ends,
    }
}

fn facts_row(id: String, rng: &mut ChaCha8Rng) -> HarnessRow {
    let n = rng.gen_range(2..=6);
    let density = rng.gen_range(0.3..0.9);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                arcs.push((u, v));
            }
        }
    }
    let d = MultiDigraph::new(n, arcs).expect("in range");
    let delta = d.min_semi_degree();
    let values: Vec<usize> = (2..=n)
        .map(|k| {
            lambda_k_with(&d, k, LambdaKOptions::default())
                .expect("k in range")
                .value
        })
        .collect();
    let bounded = values.iter().all(|&v| v <= delta);
    let monotone = values.windows(2).all(|w| w[1] <= w[0]);
    let shown: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    HarnessRow {
        id: format!("{id} n={n} m={}", d.arc_count()),
        oracle: format!("delta0={delta}"),
        solver: format!("lambda={}", shown.join(",")),
        valid: bounded && monotone,
        agree: bounded && monotone,
    }
}
