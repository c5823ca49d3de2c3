//! Integral flows and their decomposition into path and cycle flows.
//!
//! Generic over the flow value type; [`crate::FlowNetwork`] and
//! [`crate::FlowDecomposition`] fix it to `u64`.

use std::collections::BTreeSet;

use num_traits::{PrimInt, Unsigned};

use crate::digraph::{ArcId, MultiDigraph, Vertex};
use crate::error::FlowError;

/// Nonnegative integer flow values.
pub trait FlowValue: PrimInt + Unsigned + std::fmt::Debug + std::fmt::Display {}

impl<T: PrimInt + Unsigned + std::fmt::Debug + std::fmt::Display> FlowValue for T {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network<F> {
    pub digraph: MultiDigraph,
    pub sources: BTreeSet<Vertex>,
    pub sinks: BTreeSet<Vertex>,
    /// Flow on each arc instance, indexed by arc id.
    pub flow: Vec<F>,
}

impl<F: FlowValue> Network<F> {
    pub fn new(
        digraph: MultiDigraph,
        sources: impl IntoIterator<Item = Vertex>,
        sinks: impl IntoIterator<Item = Vertex>,
        flow: Vec<F>,
    ) -> Result<Self, FlowError> {
        let net = Self {
            digraph,
            sources: sources.into_iter().collect(),
            sinks: sinks.into_iter().collect(),
            flow,
        };
        net.validate()?;
        Ok(net)
    }

    /// Checks conservation at inner vertices and that sources only emit and
    /// sinks only absorb net flow.
    pub fn validate(&self) -> Result<(), FlowError> {
        let d = &self.digraph;
        if self.flow.len() != d.arc_count() {
            return Err(FlowError::LengthMismatch {
                expected: d.arc_count(),
                got: self.flow.len(),
            });
        }
        for &v in self.sources.iter().chain(&self.sinks) {
            if v >= d.vertex_count() {
                return Err(FlowError::Graph(crate::error::GraphError::VertexOutOfRange {
                    vertex: v,
                    n: d.vertex_count(),
                }));
            }
        }
        if let Some(&v) = self.sources.intersection(&self.sinks).next() {
            return Err(FlowError::SourceIsSink(v));
        }
        for v in d.vertices() {
            let (inflow, outflow) = self.throughput(v);
            if self.sources.contains(&v) {
                if inflow > outflow {
                    return Err(FlowError::SourceAbsorbs(v));
                }
            } else if self.sinks.contains(&v) {
                if outflow > inflow {
                    return Err(FlowError::SinkEmits(v));
                }
            } else if inflow != outflow {
                return Err(FlowError::Conservation(v));
            }
        }
        Ok(())
    }

    /// `(inflow, outflow)` at `v`.
    pub fn throughput(&self, v: Vertex) -> (F, F) {
        let sum = |ids: &[ArcId]| ids.iter().fold(F::zero(), |acc, &a| acc + self.flow[a]);
        (sum(self.digraph.in_arcs(v)), sum(self.digraph.out_arcs(v)))
    }
}

/// A path or cycle carrying `weight` units on each of its arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowTerm<F> {
    /// Visited vertices; for a cycle the first vertex is repeated at the end.
    pub vertices: Vec<Vertex>,
    pub arcs: Vec<ArcId>,
    pub weight: F,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<F> {
    pub path_terms: Vec<FlowTerm<F>>,
    pub cycle_terms: Vec<FlowTerm<F>>,
}

impl<F: FlowValue> Decomposition<F> {
    /// Sum of all terms, arc by arc.
    pub fn arc_sum(&self, arc_count: usize) -> Vec<F> {
        let mut total = vec![F::zero(); arc_count];
        for term in self.path_terms.iter().chain(&self.cycle_terms) {
            for &a in &term.arcs {
                total[a] = total[a] + term.weight;
            }
        }
        total
    }
}

/// Peels source-to-sink paths while some source has excess, then cycles.
/// Walks start at the lowest-numbered source with excess (or the tail of the
/// lowest-numbered arc still carrying flow) and follow the positive out-arc
/// with the smallest `(head, id)`. A walk that revisits a vertex peels the
/// closed cycle instead.
pub fn flow_decompose<F: FlowValue>(net: &Network<F>) -> Result<Decomposition<F>, FlowError> {
    net.validate()?;
    let d = &net.digraph;
    let mut residual = net.flow.clone();
    let mut excess: Vec<F> = vec![F::zero(); d.vertex_count()];
    let mut deficit: Vec<F> = vec![F::zero(); d.vertex_count()];
    for v in d.vertices() {
        let (inflow, outflow) = net.throughput(v);
        if net.sources.contains(&v) {
            excess[v] = outflow - inflow;
        } else if net.sinks.contains(&v) {
            deficit[v] = inflow - outflow;
        }
    }
    let out_sorted: Vec<Vec<ArcId>> = d
        .vertices()
        .map(|v| {
            let mut ids = d.out_arcs(v).to_vec();
            ids.sort_by_key(|&a| (d.arc(a).head, a));
            ids
        })
        .collect();
    let next_arc = |residual: &[F], v: Vertex| -> Option<ArcId> {
        out_sorted[v].iter().copied().find(|&a| residual[a] > F::zero())
    };

    let mut result = Decomposition {
        path_terms: Vec::new(),
        cycle_terms: Vec::new(),
    };
    loop {
        let start = match net.sources.iter().copied().find(|&s| excess[s] > F::zero()) {
            Some(s) => s,
            None => match (0..residual.len()).find(|&a| residual[a] > F::zero()) {
                Some(a) => d.arc(a).tail,
                None => break,
            },
        };
        let seeking_sink = excess[start] > F::zero();
        let mut vertices = vec![start];
        let mut arcs: Vec<ArcId> = Vec::new();
        let mut pos = vec![usize::MAX; d.vertex_count()];
        pos[start] = 0;
        loop {
            let v = *vertices.last().expect("walk is nonempty");
            if seeking_sink && v != start && deficit[v] > F::zero() {
                let mut w = arcs.iter().map(|&a| residual[a]).min().expect("path has arcs");
                w = w.min(excess[start]).min(deficit[v]);
                for &a in &arcs {
                    residual[a] = residual[a] - w;
                }
                excess[start] = excess[start] - w;
                deficit[v] = deficit[v] - w;
                result.path_terms.push(FlowTerm {
                    vertices,
                    arcs,
                    weight: w,
                });
                break;
            }
            let a = next_arc(&residual, v).expect("positive inflow continues at inner vertices");
            let h = d.arc(a).head;
            if pos[h] != usize::MAX {
                let from = pos[h];
                let mut cyc_arcs = arcs[from..].to_vec();
                cyc_arcs.push(a);
                let mut cyc_vertices = vertices[from..].to_vec();
                cyc_vertices.push(h);
                let w = cyc_arcs
                    .iter()
                    .map(|&c| residual[c])
                    .min()
                    .expect("cycle has arcs");
                for &c in &cyc_arcs {
                    residual[c] = residual[c] - w;
                }
                result.cycle_terms.push(FlowTerm {
                    vertices: cyc_vertices,
                    arcs: cyc_arcs,
                    weight: w,
                });
                break;
            }
            pos[h] = vertices.len();
            vertices.push(h);
            arcs.push(a);
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc_path() {
        let d = MultiDigraph::new(2, [(0, 1)]).unwrap();
        let net = Network::new(d, [0], [1], vec![1u64]).unwrap();
        let dec = flow_decompose(&net).unwrap();
        assert_eq!(dec.path_terms.len(), 1);
        assert_eq!(dec.path_terms[0].vertices, vec![0, 1]);
        assert_eq!(dec.path_terms[0].weight, 1);
        assert!(dec.cycle_terms.is_empty());
    }

    #[test]
    fn circulation_is_one_cycle() {
        let d = MultiDigraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let net = Network::new(d, [], [], vec![1u32, 1, 1]).unwrap();
        let dec = flow_decompose(&net).unwrap();
        assert!(dec.path_terms.is_empty());
        assert_eq!(dec.cycle_terms.len(), 1);
        assert_eq!(dec.cycle_terms[0].vertices, vec![0, 1, 2, 0]);
    }

    #[test]
    fn two_routes() {
        // s=0, t=3, routes 0-1-3 and 0-2-3
        let d = MultiDigraph::new(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let flow = vec![1u64, 1, 1, 1];
        let net = Network::new(d, [0], [3], flow.clone()).unwrap();
        let dec = flow_decompose(&net).unwrap();
        assert_eq!(dec.path_terms.len(), 2);
        assert!(dec.path_terms.iter().all(|t| t.weight == 1));
        assert_eq!(dec.arc_sum(4), flow);
    }

    #[test]
    fn conservation_errors() {
        let d = MultiDigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            Network::new(d.clone(), [0], [2], vec![2u64, 1]).unwrap_err(),
            FlowError::Conservation(1)
        );
        assert_eq!(
            Network::new(d.clone(), [2], [0], vec![1u64, 1]).unwrap_err(),
            FlowError::SinkEmits(0)
        );
        assert_eq!(
            Network::new(d, [0], [2], vec![1u64]).unwrap_err(),
            FlowError::LengthMismatch { expected: 2, got: 1 }
        );
    }
}
