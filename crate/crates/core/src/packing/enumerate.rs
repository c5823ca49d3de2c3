use crate::cycle::{DirectedCycle, TerminalSet};
use crate::digraph::{MultiDigraph, Vertex};

/// All simple directed cycles of `d` through every terminal, each listed once
/// starting at the smallest terminal. Cycles come out in lexicographic order
/// of their vertex sequences; `cap` truncates the list.
pub fn enumerate_s_cycles(d: &MultiDigraph, s: &TerminalSet, cap: Option<usize>) -> Vec<DirectedCycle> {
    let n = d.vertex_count();
    let mut heads: Vec<Vec<Vertex>> = d
        .vertices()
        .map(|v| d.out_arcs(v).iter().map(|&a| d.arc(a).head).collect())
        .collect();
    for h in &mut heads {
        h.sort_unstable();
        h.dedup();
    }
    let mut walk = Walk {
        heads: &heads,
        is_terminal: (0..n).map(|v| s.contains(v)).collect(),
        on_path: vec![false; n],
        path: vec![s.first()],
        start: s.first(),
        missing: s.k() - 1,
        cap: cap.unwrap_or(usize::MAX),
        out: Vec::new(),
    };
    if walk.cap > 0 {
        walk.on_path[s.first()] = true;
        walk.dfs(s.first());
    }
    walk.out
}

struct Walk<'a> {
    heads: &'a [Vec<Vertex>],
    is_terminal: Vec<bool>,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    start: Vertex,
    missing: usize,
    cap: usize,
    out: Vec<DirectedCycle>,
}

impl Walk<'_> {
    fn dfs(&mut self, v: Vertex) {
        for &h in &self.heads[v] {
            if self.out.len() >= self.cap {
                return;
            }
            if h == self.start {
                if self.missing == 0 && self.path.len() >= 2 {
                    self.out
                        .push(DirectedCycle::new(self.path.clone()).expect("path is simple"));
                }
                continue;
            }
            if self.on_path[h] {
                continue;
            }
            self.on_path[h] = true;
            self.path.push(h);
            if self.is_terminal[h] {
                self.missing -= 1;
            }
            self.dfs(h);
            if self.is_terminal[h] {
                self.missing += 1;
            }
            self.path.pop();
            self.on_path[h] = false;
        }
    }
}
