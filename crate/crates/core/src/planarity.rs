//! Desk-scale planarity test.
//!
//! The graph is first reduced (vertices of degree at most one are deleted and
//! vertices of degree two are smoothed), which preserves planarity. The
//! reduced graph is rejected by the Euler bound `m <= 3n - 6` when possible;
//! otherwise an exhaustive search for a subdivision of `K5` or `K3,3` decides
//! the question. The search is exponential and intended for graphs with at
//! most a few dozen vertices.

use crate::digraph::{Graph, Vertex};

pub fn is_planar(g: &Graph) -> bool {
    if violates_euler_bound(g.vertex_count(), g.edge_count()) {
        return false;
    }
    let reduced = reduce(g);
    let n = reduced.vertex_count();
    if n < 5 {
        return true;
    }
    if violates_euler_bound(n, reduced.edge_count()) {
        return false;
    }
    !KuratowskiSearch::new(&reduced).found()
}

/// `m > 3n - 6` for `n >= 3`, which rules out planarity.
pub fn violates_euler_bound(n: usize, m: usize) -> bool {
    n >= 3 && m > 3 * n - 6
}

/// Deletes vertices of degree <= 1 and smooths vertices of degree 2 until
/// neither applies, then renumbers the survivors densely.
#[allow(clippy::needless_range_loop)]
fn reduce(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut work = g.clone();
    let mut alive = vec![true; n];
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            match work.degree(v) {
                0 | 1 => {
                    let nbrs: Vec<_> = work.neighbors(v).collect();
                    for w in nbrs {
                        work.remove_edge(v, w);
                    }
                    alive[v] = false;
                    changed = true;
                }
                2 => {
                    let nbrs: Vec<_> = work.neighbors(v).collect();
                    let (a, b) = (nbrs[0], nbrs[1]);
                    work.remove_edge(v, a);
                    work.remove_edge(v, b);
                    work.add_edge(a, b);
                    alive[v] = false;
                    changed = true;
                }
                _ => {}
            }
        }
    }
    let mut index = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if alive[v] {
            index[v] = next;
            next += 1;
        }
    }
    let mut out = Graph::new(next);
    for (u, v) in work.edges() {
        out.add_edge(index[u], index[v]);
    }
    out
}

struct KuratowskiSearch<'a> {
    g: &'a Graph,
    blocked: Vec<bool>,
}

impl<'a> KuratowskiSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        Self {
            g,
            blocked: vec![false; g.vertex_count()],
        }
    }

    fn found(mut self) -> bool {
        self.has_k5() || self.has_k33()
    }

    fn has_k5(&mut self) -> bool {
        let cands: Vec<Vertex> = (0..self.g.vertex_count())
            .filter(|&v| self.g.degree(v) >= 4)
            .collect();
        let mut found = false;
        for_each_subset(&cands, 5, &mut |branch| {
            let mut pairs = Vec::with_capacity(10);
            for i in 0..5 {
                for j in i + 1..5 {
                    pairs.push((branch[i], branch[j]));
                }
            }
            found = self.linked(branch, &pairs);
            found
        });
        found
    }

    fn has_k33(&mut self) -> bool {
        let cands: Vec<Vertex> = (0..self.g.vertex_count())
            .filter(|&v| self.g.degree(v) >= 3)
            .collect();
        let mut found = false;
        for_each_subset(&cands, 6, &mut |six| {
            // side A always contains six[0]; choose its two partners
            for i in 1..6 {
                for j in i + 1..6 {
                    let side_a = [six[0], six[i], six[j]];
                    let side_b: Vec<Vertex> = six.iter().copied().filter(|v| !side_a.contains(v)).collect();
                    let pairs: Vec<_> = side_a
                        .iter()
                        .flat_map(|&a| side_b.iter().map(move |&b| (a, b)))
                        .collect();
                    if self.linked(six, &pairs) {
                        found = true;
                        return true;
                    }
                }
            }
            false
        });
        found
    }

    /// Whether all `pairs` can be joined by internally vertex-disjoint paths
    /// avoiding the branch vertices.
    fn linked(&mut self, branch: &[Vertex], pairs: &[(Vertex, Vertex)]) -> bool {
        for &b in branch {
            self.blocked[b] = true;
        }
        let ok = self.route(pairs);
        for &b in branch {
            self.blocked[b] = false;
        }
        ok
    }

    fn route(&mut self, pairs: &[(Vertex, Vertex)]) -> bool {
        let Some((&(a, b), rest)) = pairs.split_first() else {
            return true;
        };
        if self.g.has_edge(a, b) && self.route(rest) {
            return true;
        }
        let mut path = Vec::new();
        let nbrs: Vec<_> = self.g.neighbors(a).collect();
        for w in nbrs {
            if !self.blocked[w] && self.extend(w, b, &mut path, rest) {
                return true;
            }
        }
        false
    }

    fn extend(
        &mut self,
        v: Vertex,
        target: Vertex,
        path: &mut Vec<Vertex>,
        rest: &[(Vertex, Vertex)],
    ) -> bool {
        self.blocked[v] = true;
        path.push(v);
        let mut ok = false;
        if self.g.has_edge(v, target) {
            ok = self.route(rest);
        }
        if !ok {
            let nbrs: Vec<_> = self.g.neighbors(v).collect();
            for w in nbrs {
                if !self.blocked[w] && self.extend(w, target, path, rest) {
                    ok = true;
                    break;
                }
            }
        }
        path.pop();
        self.blocked[v] = false;
        ok
    }
}

/// Calls `f` on each `k`-subset of `items` in lexicographic order; stops as
/// soon as `f` returns true.
fn for_each_subset<F>(items: &[Vertex], k: usize, f: &mut F)
where
    F: FnMut(&[Vertex]) -> bool,
{
    fn go<F: FnMut(&[Vertex]) -> bool>(
        items: &[Vertex],
        k: usize,
        start: usize,
        acc: &mut Vec<Vertex>,
        f: &mut F,
    ) -> bool {
        if acc.len() == k {
            return f(acc);
        }
        for i in start..items.len() {
            if items.len() - i < k - acc.len() {
                break;
            }
            acc.push(items[i]);
            let stop = go(items, k, i + 1, acc, f);
            acc.pop();
            if stop {
                return true;
            }
        }
        false
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subdivided(g: &Graph) -> Graph {
        let edges: Vec<_> = g.edges().collect();
        let mut out = Graph::new(g.vertex_count() + edges.len());
        for (i, (u, v)) in edges.into_iter().enumerate() {
            let x = g.vertex_count() + i;
            out.add_edge(u, x);
            out.add_edge(x, v);
        }
        out
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(!is_planar(&Graph::petersen()));
        assert!(is_planar(&Graph::complete_bipartite(2, 7)));
    }

    #[test]
    fn subdivisions_are_detected() {
        assert!(!is_planar(&subdivided(&Graph::complete(5))));
        assert!(!is_planar(&subdivided(&Graph::complete_bipartite(3, 3))));
        assert!(is_planar(&subdivided(&Graph::complete(4))));
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let mut g = Graph::complete(5);
        g.remove_edge(0, 1);
        assert!(is_planar(&g));
    }

    #[test]
    fn wheel_and_grid_are_planar() {
        let mut wheel = Graph::cycle(8);
        let hub = {
            let mut w = Graph::new(9);
            for (u, v) in wheel.edges() {
                w.add_edge(u, v);
            }
            w
        };
        wheel = hub;
        for v in 0..8 {
            wheel.add_edge(8, v);
        }
        assert!(is_planar(&wheel));

        let mut grid = Graph::new(16);
        for r in 0..4 {
            for c in 0..4 {
                let v = r * 4 + c;
                if c < 3 {
                    grid.add_edge(v, v + 1);
                }
                if r < 3 {
                    grid.add_edge(v, v + 4);
                }
            }
        }
        assert!(is_planar(&grid));
    }

    #[test]
    fn euler_bound() {
        assert!(violates_euler_bound(5, 10));
        assert!(!violates_euler_bound(5, 9));
        assert!(!violates_euler_bound(2, 1));
    }
}
