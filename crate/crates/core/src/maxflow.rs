//! Small augmenting-path max-flow used by the oracles.

#[derive(Clone, Debug)]
pub struct FlowGraph {
    head: Vec<usize>,
    cap: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

impl FlowGraph {
    pub fn new(n: usize) -> Self {
        Self {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, cap: u64) {
        self.adj[u].push(self.head.len());
        self.head.push(v);
        self.cap.push(cap);
        self.adj[v].push(self.head.len());
        self.head.push(u);
        self.cap.push(0);
    }

    /// Maximum `s`-`t` flow, stopping early once `limit` is reached.
    /// Consumes the capacities.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u64) -> u64 {
        let n = self.adj.len();
        let mut total = 0;
        while total < limit {
            let mut pred = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::from([s]);
            let mut seen = vec![false; n];
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &e in &self.adj[u] {
                    let v = self.head[e];
                    if self.cap[e] > 0 && !seen[v] {
                        seen[v] = true;
                        pred[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut push = limit - total;
            let mut v = t;
            while v != s {
                let e = pred[v];
                push = push.min(self.cap[e]);
                v = self.head[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = pred[v];
                self.cap[e] -= push;
                self.cap[e ^ 1] += push;
                v = self.head[e ^ 1];
            }
            total += push;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond() {
        let mut g = FlowGraph::new(4);
        g.add_edge(0, 1, 1);
        g.add_edge(0, 2, 1);
        g.add_edge(1, 3, 1);
        g.add_edge(2, 3, 1);
        g.add_edge(1, 2, 1);
        assert_eq!(g.max_flow(0, 3, u64::MAX), 2);
    }

    #[test]
    fn limit_stops_early() {
        let mut g = FlowGraph::new(2);
        g.add_edge(0, 1, 10);
        assert_eq!(g.max_flow(0, 1, 3), 3);
    }
}
