//! Branch-and-bound for the maximum number of arc-disjoint S-cycles.
//!
//! Every S-cycle passes through the smallest terminal `s0` and leaves it by
//! exactly one arc, so a packing is searched as a sequence of cycles whose
//! first arcs (out-arcs of `s0`) strictly increase. Each cycle is completed by
//! a depth-first walk in the residual digraph.
//!
//! Pruning:
//! - residual degree bound: a packing of the current size `c` extends to at
//!   most `c + min_{t in S} min(free out-arcs(t), free in-arcs(t))` cycles,
//!   where only not-yet-passed first arcs count for `s0`;
//! - reachability: the walk is abandoned once some missing terminal or `s0`
//!   can no longer be reached through free arcs and unvisited vertices;
//! - interchangeable routes: parallel arc instances are tried lowest-free
//!   first, and among untouched non-terminal twins (same in- and
//!   out-neighbourhood multisets) only the lowest is entered. Swapping two
//!   such twins is an automorphism fixing everything chosen so far, so the
//!   skipped branches are isomorphic copies. Twins adjacent from `s0` are
//!   left alone because swapping them would reorder first arcs.

use std::collections::BTreeMap;

use crate::cycle::{CyclePacking, DirectedCycle, TerminalSet};
use crate::digraph::{ArcId, MultiDigraph, Vertex};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of search nodes before giving up.
    pub node_budget: Option<u64>,
    /// Stop as soon as a packing of this size is found.
    pub target: Option<usize>,
}

impl SolveOptions {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }

    pub fn with_target(mut self, target: usize) -> Self {
        self.target = Some(target);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certainty {
    /// The packing is maximum.
    Optimal,
    /// The requested target was reached; larger packings may exist.
    TargetReached,
    /// The node budget ran out; the packing is only a lower bound.
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub packing: CyclePacking,
    pub certainty: Certainty,
    /// Search nodes expanded.
    pub nodes: u64,
}

impl Solution {
    pub fn value(&self) -> usize {
        self.packing.len()
    }

    pub fn is_optimal(&self) -> bool {
        self.certainty == Certainty::Optimal
    }
}

/// Exact `lambda_S(D)` with a witness packing; no budget.
pub fn lambda_s(d: &MultiDigraph, s: &TerminalSet) -> Solution {
    solve(d, s, SolveOptions::default())
}

pub fn solve(d: &MultiDigraph, s: &TerminalSet, opts: SolveOptions) -> Solution {
    let mut search = Search::new(d, s, opts);
    let upper = search.initial_upper();
    let goal = opts.target.map_or(upper, |t| t.min(upper));
    search.goal = goal;
    if goal > 0 {
        search.pack(0);
    }
    let certainty = if search.exhausted {
        Certainty::BudgetExhausted
    } else if search.best.len() >= upper || !search.stopped {
        Certainty::Optimal
    } else {
        Certainty::TargetReached
    };
    let cycles = search
        .best
        .iter()
        .map(|arcs| {
            let vertices = arcs.iter().map(|&a| d.arc(a).tail).collect();
            DirectedCycle::new(vertices).expect("search builds simple cycles")
        })
        .collect();
    Solution {
        packing: CyclePacking::new(s.clone(), cycles),
        certainty,
        nodes: search.nodes,
    }
}

struct Search<'a> {
    d: &'a MultiDigraph,
    s0: Vertex,
    terminals: Vec<Vertex>,
    is_terminal: Vec<bool>,
    /// Per vertex: (head, parallel instances ascending), heads ascending.
    out: Vec<Vec<(Vertex, Vec<ArcId>)>>,
    first_arcs: Vec<ArcId>,
    /// Lower-ranked members of the vertex's twin class.
    lower_twins: Vec<Vec<Vertex>>,

    used: Vec<bool>,
    touched: Vec<u32>,
    out_free: Vec<usize>,
    in_free: Vec<usize>,
    on_path: Vec<bool>,
    missing: usize,
    path: Vec<ArcId>,
    chosen: Vec<Vec<ArcId>>,
    best: Vec<Vec<ArcId>>,

    goal: usize,
    budget: u64,
    nodes: u64,
    stopped: bool,
    exhausted: bool,
    // scratch for reachability
    seen: Vec<u32>,
    stamp: u32,
    queue: Vec<Vertex>,
}

impl<'a> Search<'a> {
    fn new(d: &'a MultiDigraph, s: &TerminalSet, opts: SolveOptions) -> Self {
        let n = d.vertex_count();
        let s0 = s.first();
        let is_terminal: Vec<bool> = (0..n).map(|v| s.contains(v)).collect();
        let out: Vec<Vec<(Vertex, Vec<ArcId>)>> = d
            .vertices()
            .map(|v| {
                let mut by_head: BTreeMap<Vertex, Vec<ArcId>> = BTreeMap::new();
                for &a in d.out_arcs(v) {
                    by_head.entry(d.arc(a).head).or_default().push(a);
                }
                by_head.into_iter().collect()
            })
            .collect();
        let first_arcs: Vec<ArcId> = out[s0].iter().flat_map(|(_, ids)| ids.iter().copied()).collect();

        let mut lower_twins = vec![Vec::new(); n];
        let mut classes: BTreeMap<(Vec<Vertex>, Vec<Vertex>), Vec<Vertex>> = BTreeMap::new();
        for v in d.vertices() {
            if is_terminal[v] || d.in_arcs(v).iter().any(|&a| d.arc(a).tail == s0) {
                continue;
            }
            let mut ins: Vec<Vertex> = d.in_arcs(v).iter().map(|&a| d.arc(a).tail).collect();
            let mut outs: Vec<Vertex> = d.out_arcs(v).iter().map(|&a| d.arc(a).head).collect();
            ins.sort_unstable();
            outs.sort_unstable();
            classes.entry((ins, outs)).or_default().push(v);
        }
        for members in classes.values() {
            for (i, &v) in members.iter().enumerate() {
                lower_twins[v] = members[..i].to_vec();
            }
        }

        Self {
            d,
            s0,
            terminals: s.members().to_vec(),
            is_terminal,
            out,
            first_arcs,
            lower_twins,
            used: vec![false; d.arc_count()],
            touched: vec![0; n],
            out_free: d.vertices().map(|v| d.out_degree(v)).collect(),
            in_free: d.vertices().map(|v| d.in_degree(v)).collect(),
            on_path: vec![false; n],
            missing: 0,
            path: Vec::new(),
            chosen: Vec::new(),
            best: Vec::new(),
            goal: 0,
            budget: opts.node_budget.unwrap_or(u64::MAX),
            nodes: 0,
            stopped: false,
            exhausted: false,
            seen: vec![0; n],
            stamp: 0,
            queue: Vec::with_capacity(n),
        }
    }

    fn initial_upper(&self) -> usize {
        self.terminals
            .iter()
            .map(|&t| self.out_free[t].min(self.in_free[t]))
            .min()
            .unwrap_or(0)
    }

    fn mark(&mut self, a: ArcId) {
        let arc = self.d.arc(a);
        self.used[a] = true;
        self.touched[arc.tail] += 1;
        self.touched[arc.head] += 1;
        self.out_free[arc.tail] -= 1;
        self.in_free[arc.head] -= 1;
    }

    fn unmark(&mut self, a: ArcId) {
        let arc = self.d.arc(a);
        self.used[a] = false;
        self.touched[arc.tail] -= 1;
        self.touched[arc.head] -= 1;
        self.out_free[arc.tail] += 1;
        self.in_free[arc.head] += 1;
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            self.stopped = true;
        }
        !self.stopped
    }

    /// Chooses the next cycle, whose first arc has index `>= next`.
    fn pack(&mut self, next: usize) {
        if !self.tick() {
            return;
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            if self.best.len() >= self.goal {
                self.stopped = true;
                return;
            }
        }
        let count = self.chosen.len();
        let others = self
            .terminals
            .iter()
            .map(|&t| {
                if t == self.s0 {
                    self.in_free[t]
                } else {
                    self.out_free[t].min(self.in_free[t])
                }
            })
            .min()
            .unwrap_or(0);
        for i in next..self.first_arcs.len() {
            let remaining_first = self.first_arcs[i..].iter().filter(|&&a| !self.used[a]).count();
            if count + remaining_first.min(others) <= self.best.len() {
                break;
            }
            let a = self.first_arcs[i];
            if self.used[a] {
                continue;
            }
            let head = self.d.arc(a).head;
            self.mark(a);
            self.path.push(a);
            self.on_path[self.s0] = true;
            self.on_path[head] = true;
            self.missing = self.terminals.len() - 1 - usize::from(self.is_terminal[head]);
            self.extend(head, i + 1);
            self.on_path[head] = false;
            self.on_path[self.s0] = false;
            self.path.pop();
            self.unmark(a);
            if self.stopped {
                return;
            }
        }
    }

    fn extend(&mut self, v: Vertex, next: usize) {
        if !self.tick() || !self.reachable_from(v) {
            return;
        }
        for idx in 0..self.out[v].len() {
            let h = self.out[v][idx].0;
            if h != self.s0 {
                if self.on_path[h] {
                    continue;
                }
                if self.touched[h] == 0 && self.lower_twins[h].iter().any(|&w| self.touched[w] == 0) {
                    continue;
                }
            } else if self.missing > 0 {
                continue;
            }
            let Some(&a) = self.out[v][idx].1.iter().find(|&&a| !self.used[a]) else {
                continue;
            };
            self.mark(a);
            self.path.push(a);
            if h == self.s0 {
                self.close_cycle(next);
            } else {
                self.on_path[h] = true;
                let term = self.is_terminal[h];
                if term {
                    self.missing -= 1;
                }
                self.extend(h, next);
                if term {
                    self.missing += 1;
                }
                self.on_path[h] = false;
            }
            self.path.pop();
            self.unmark(a);
            if self.stopped {
                return;
            }
        }
    }

    /// Records the finished path as a cycle and searches for the next one
    /// with a fresh path state.
    fn close_cycle(&mut self, next: usize) {
        let cycle = std::mem::take(&mut self.path);
        for &a in &cycle {
            self.on_path[self.d.arc(a).tail] = false;
        }
        let missing = self.missing;
        self.chosen.push(cycle);
        self.pack(next);
        let cycle = self.chosen.pop().expect("pushed above");
        for &a in &cycle {
            self.on_path[self.d.arc(a).tail] = true;
        }
        self.missing = missing;
        self.path = cycle;
    }

    /// Whether `s0` and every missing terminal can still be reached from `v`
    /// through free arcs and vertices off the current path.
    fn reachable_from(&mut self, v: Vertex) -> bool {
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push(v);
        self.seen[v] = stamp;
        let mut found_terms = 0;
        let mut found_root = false;
        let mut head_idx = 0;
        while head_idx < self.queue.len() {
            let u = self.queue[head_idx];
            head_idx += 1;
            for &a in self.d.out_arcs(u) {
                if self.used[a] {
                    continue;
                }
                let w = self.d.arc(a).head;
                if w == self.s0 {
                    found_root = true;
                    continue;
                }
                if self.seen[w] == stamp || self.on_path[w] {
                    continue;
                }
                self.seen[w] = stamp;
                if self.is_terminal[w] {
                    found_terms += 1;
                }
                self.queue.push(w);
            }
        }
        found_root && found_terms == self.missing
    }
}
