use rayon::prelude::*;

use super::solver::{solve, Certainty, Solution, SolveOptions};
use crate::cycle::{CyclePacking, TerminalSet};
use crate::digraph::{MultiDigraph, Vertex};
use crate::error::PackingError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaKOptions {
    /// The caller asserts vertex-transitivity; only `{0, .., k-1}` is solved.
    pub transitive_shortcut: bool,
    /// Node budget per terminal set.
    pub node_budget: Option<u64>,
    /// Terminal sets solved concurrently. Results do not depend on it.
    pub workers: usize,
}

impl Default for LambdaKOptions {
    fn default() -> Self {
        Self {
            transitive_shortcut: false,
            node_budget: None,
            workers: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaKResult {
    pub value: usize,
    pub witness_set: TerminalSet,
    pub witness_packing: CyclePacking,
    /// `Optimal` when the witness set was solved exactly, which certifies
    /// `value` as the minimum.
    pub certainty: Certainty,
    pub sets_examined: usize,
}

pub fn lambda_k(
    d: &MultiDigraph,
    k: usize,
    transitive_shortcut: bool,
) -> Result<LambdaKResult, PackingError> {
    lambda_k_with(
        d,
        k,
        LambdaKOptions {
            transitive_shortcut,
            ..LambdaKOptions::default()
        },
    )
}

/// Minimum of `lambda_S` over all `k`-subsets, scanned in colex order. The
/// first subset attaining the minimum is the witness; the scan stops early at
/// a certified zero.
pub fn lambda_k_with(
    d: &MultiDigraph,
    k: usize,
    opts: LambdaKOptions,
) -> Result<LambdaKResult, PackingError> {
    let n = d.vertex_count();
    if k < 2 || k > n {
        return Err(PackingError::KOutOfRange { k, n });
    }
    let solve_opts = SolveOptions {
        node_budget: opts.node_budget,
        target: None,
    };
    let run = |set: &Vec<Vertex>| {
        let s = TerminalSet::new(set.iter().copied(), n).expect("subset of vertex range");
        solve(d, &s, solve_opts)
    };

    let mut subsets = k_subsets_colex(n, k);
    if opts.transitive_shortcut {
        subsets.truncate(1);
    }
    let workers = opts.workers.max(1);
    let pool = (workers > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
    });

    let mut best: Option<Solution> = None;
    let mut examined = 0;
    for chunk in subsets.chunks(workers * 4) {
        let solved: Vec<Solution> = match &pool {
            Some(pool) => pool.install(|| chunk.par_iter().map(run).collect()),
            None => chunk.iter().map(run).collect(),
        };
        let mut done = false;
        for sol in solved {
            examined += 1;
            if best.as_ref().is_none_or(|b| sol.value() < b.value()) {
                best = Some(sol);
            }
            let b = best.as_ref().expect("just set");
            if b.value() == 0 && b.is_optimal() {
                done = true;
                break;
            }
        }
        if done {
            break;
        }
    }
    let best = best.expect("at least one subset");
    Ok(LambdaKResult {
        value: best.value(),
        witness_set: best.packing.terminals.clone(),
        certainty: best.certainty,
        witness_packing: best.packing,
        sets_examined: examined,
    })
}

/// All `k`-subsets of `0..n` in colexicographic order.
pub fn k_subsets_colex(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<Vertex> = (0..k).collect();
    loop {
        out.push(c.clone());
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { c[i + 1] } else { n };
            if c[i] + 1 < limit {
                break;
            }
            i += 1;
        }
        if i == k {
            return out;
        }
        c[i] += 1;
        for (j, slot) in c.iter_mut().enumerate().take(i) {
            *slot = j;
        }
    }
}
