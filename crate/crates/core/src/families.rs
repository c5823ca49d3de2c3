//! Complete, complete bipartite and regular complete multipartite digraphs:
//! constructors, closed-form `lambda_k` values, Hamiltonian decompositions,
//! and the explicit packings of `K4` and `K6`.

use std::fmt;
use std::str::FromStr;

use crate::cycle::{CyclePacking, DirectedCycle, TerminalSet};
use crate::digraph::{MultiDigraph, Vertex};
use crate::error::FamilyError;
use crate::packing::{solve, Certainty, SolveOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// All `n(n-1)` ordered pairs.
    Complete { n: usize },
    /// `l` parts of `w` vertices each, all arcs between distinct parts.
    MultipartiteRegular { w: usize, l: usize },
    /// Parts `0..t` and `t..t+z`, all arcs between them.
    Bipartite { t: usize, z: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let ok = match *self {
            FamilySpec::Complete { n } => n >= 2,
            FamilySpec::MultipartiteRegular { w, l } => w >= 1 && l >= 2,
            FamilySpec::Bipartite { t, z } => 2 <= t && t <= z,
        };
        if ok {
            Ok(())
        } else {
            Err(FamilyError::InvalidSpec(self.to_string()))
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Complete { n } => n,
            FamilySpec::MultipartiteRegular { w, l } => w * l,
            FamilySpec::Bipartite { t, z } => t + z,
        }
    }

    /// Closed-form `lambda_k`.
    pub fn lambda_k(&self, k: usize) -> Result<usize, FamilyError> {
        self.validate()?;
        match *self {
            FamilySpec::Complete { n } => lambda_k_complete(n, k),
            FamilySpec::MultipartiteRegular { w, l } => lambda_k_multipartite_regular(w, l, k),
            FamilySpec::Bipartite { t, z } => lambda_k_complete_bipartite(t, z, k),
        }
    }

    /// `(k, lambda_k)` for every valid `k`, ascending.
    pub fn lambda_table(&self) -> Result<Vec<(usize, usize)>, FamilyError> {
        (2..=self.order())
            .map(|k| self.lambda_k(k).map(|v| (k, v)))
            .collect()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::MultipartiteRegular { w, l } => write!(f, "multipartite:{w},{l}"),
            FamilySpec::Bipartite { t, z } => write!(f, "bipartite:{t},{z}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// `complete:N`, `multipartite:W,L` or `bipartite:T,Z`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::InvalidSpec(s.to_string());
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let spec = match (kind.trim(), nums.as_slice()) {
            ("complete", &[n]) => FamilySpec::Complete { n },
            ("multipartite", &[w, l]) => FamilySpec::MultipartiteRegular { w, l },
            ("bipartite", &[t, z]) => FamilySpec::Bipartite { t, z },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn make_family(spec: FamilySpec) -> Result<MultiDigraph, FamilyError> {
    spec.validate()?;
    let n = spec.order();
    let part = |v: Vertex| -> usize {
        match spec {
            FamilySpec::Complete { .. } => v,
            FamilySpec::MultipartiteRegular { w, .. } => v / w,
            FamilySpec::Bipartite { t, .. } => usize::from(v >= t),
        }
    };
    let mut d = MultiDigraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if part(u) != part(v) {
                d.add_arc(u, v).expect("ids in range");
            }
        }
    }
    Ok(d)
}

fn check_k(k: usize, n: usize) -> Result<(), FamilyError> {
    if k < 2 || k > n {
        Err(FamilyError::KOutOfRange { k, n })
    } else {
        Ok(())
    }
}

/// `n - 1`, except `n - 2` for `n = 4, k >= 3` and `n = 6, k >= 5`.
///
/// Four terminals of `K6` still admit five disjoint cycles; see `K6_K4`.
pub fn lambda_k_complete(n: usize, k: usize) -> Result<usize, FamilyError> {
    check_k(k, n)?;
    if (n == 4 && k >= 3) || (n == 6 && k >= 5) {
        Ok(n - 2)
    } else {
        Ok(n - 1)
    }
}

/// `w(l - 1)`. The digraph is complete when `w = 1`; the orders 4 and 6 are
/// then handed to [`lambda_k_complete`]. A single part (`l = 1`) has no arcs
/// and gives 0.
pub fn lambda_k_multipartite_regular(w: usize, l: usize, k: usize) -> Result<usize, FamilyError> {
    if w == 0 || l == 0 {
        return Err(FamilyError::InvalidSpec(format!("multipartite:{w},{l}")));
    }
    check_k(k, w * l)?;
    if w == 1 && (l == 4 || l == 6) {
        return lambda_k_complete(l, k);
    }
    Ok(w * (l - 1))
}

/// `t` for `k <= t` and 0 above when `t < z`; `t` throughout when `t = z`.
pub fn lambda_k_complete_bipartite(t: usize, z: usize, k: usize) -> Result<usize, FamilyError> {
    if !(2 <= t && t <= z) {
        return Err(FamilyError::InvalidSpec(format!("bipartite:{t},{z}")));
    }
    check_k(k, t + z)?;
    if t == z {
        return lambda_k_multipartite_regular(t, 2, k);
    }
    Ok(if k <= t { t } else { 0 })
}

/// A partition of all arcs into Hamiltonian cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub digraph: MultiDigraph,
    pub cycles: Vec<DirectedCycle>,
}

impl DecompositionCertificate {
    /// Every arc instance used exactly once, every cycle Hamiltonian.
    pub fn is_valid(&self) -> bool {
        let d = &self.digraph;
        let n = d.vertex_count();
        if self.cycles.iter().any(|c| c.len() != n || !c.is_in(d)) {
            return false;
        }
        let used: usize = self.cycles.iter().map(DirectedCycle::len).sum();
        if used != d.arc_count() {
            return false;
        }
        let mut pairs: Vec<_> = self.cycles.iter().flat_map(|c| c.arc_pairs()).collect();
        pairs.sort_unstable();
        let mut arcs: Vec<_> = d.arcs().iter().map(|a| (a.tail, a.head)).collect();
        arcs.sort_unstable();
        pairs == arcs
    }

    /// The cycles as a packing for `S = V(D)`.
    pub fn as_packing(&self) -> Option<CyclePacking> {
        let s = TerminalSet::new(self.digraph.vertices(), self.digraph.vertex_count()).ok()?;
        Some(CyclePacking::new(s, self.cycles.clone()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionFailure {
    /// The search space was exhausted: no decomposition exists.
    Exhausted,
    /// The node budget ran out first.
    Budget,
}

/// Backtracking search for a Hamiltonian decomposition.
///
/// A decomposition exists only if every vertex has in- and out-degree `r`,
/// and then it consists of exactly `r` arc-disjoint Hamiltonian cycles, so
/// the packing search with `S = V(D)` and target `r` decides it.
pub fn hamiltonian_decomposition(
    d: &MultiDigraph,
    node_budget: Option<u64>,
) -> Result<DecompositionCertificate, DecompositionFailure> {
    let n = d.vertex_count();
    if d.arc_count() == 0 {
        return Ok(DecompositionCertificate {
            digraph: d.clone(),
            cycles: Vec::new(),
        });
    }
    let r = d.out_degree(0);
    if n < 2 || d.vertices().any(|v| d.out_degree(v) != r || d.in_degree(v) != r) {
        return Err(DecompositionFailure::Exhausted);
    }
    let s = TerminalSet::new(d.vertices(), n).expect("n >= 2");
    let sol = solve(
        d,
        &s,
        SolveOptions {
            node_budget,
            target: Some(r),
        },
    );
    if sol.value() == r {
        return Ok(DecompositionCertificate {
            digraph: d.clone(),
            cycles: sol.packing.cycles,
        });
    }
    match sol.certainty {
        Certainty::BudgetExhausted => Err(DecompositionFailure::Budget),
        _ => Err(DecompositionFailure::Exhausted),
    }
}

// Cycle families on u_1..u_n, written 1-based.
const K4_ALL: &[&[usize]] = &[&[1, 2, 3, 4], &[1, 4, 3, 2]];
const K4_K3: &[&[usize]] = &[&[1, 2, 3], &[1, 3, 2]];
const K4_K2: &[&[usize]] = &[&[1, 2], &[1, 3, 2, 4], &[1, 4, 2, 3]];
const K6_ALL: &[&[usize]] = &[
    &[1, 2, 3, 4, 5, 6],
    &[1, 6, 5, 4, 3, 2],
    &[1, 3, 6, 4, 2, 5],
    &[1, 5, 2, 4, 6, 3],
];
const K6_K4: &[&[usize]] = &[
    &[1, 2, 3, 4],
    &[1, 3, 2, 5, 4, 6],
    &[1, 4, 5, 2, 6, 3],
    &[1, 5, 3, 6, 4, 2],
    &[1, 6, 2, 4, 3, 5],
];
const K6_K3: &[&[usize]] = &[
    &[1, 2, 3],
    &[1, 3, 2],
    &[1, 4, 2, 5, 3, 6],
    &[1, 5, 2, 6, 3, 4],
    &[1, 6, 2, 4, 3, 5],
];

/// Explicit packings of `K4` and `K6` attaining [`lambda_k_complete`].
///
/// The sorted terminals are mapped onto `u_1 .. u_k` and the remaining
/// vertices onto `u_{k+1} .. u_n`, both in increasing order. Families for
/// smaller `k` reuse the three-terminal ones, which contain `u_1, u_2`.
pub fn special_packing(n: usize, s: &TerminalSet) -> Result<CyclePacking, FamilyError> {
    let k = s.k();
    check_k(k, n)?;
    if let Some(&v) = s.members().iter().find(|&&v| v >= n) {
        return Err(FamilyError::Terminal(crate::error::TerminalError::OutOfRange {
            vertex: v,
            n,
        }));
    }
    let family = match (n, k) {
        (4, 2) => K4_K2,
        (4, 3) => K4_K3,
        (4, 4) => K4_ALL,
        (6, 2) | (6, 3) => K6_K3,
        (6, 4) => K6_K4,
        (6, 5) | (6, 6) => K6_ALL,
        _ => return Err(FamilyError::UnsupportedOrder(n)),
    };
    let mut label: Vec<Vertex> = s.members().to_vec();
    label.extend((0..n).filter(|v| !s.contains(*v)));
    let cycles = family
        .iter()
        .map(|c| DirectedCycle::new(c.iter().map(|&u| label[u - 1]).collect()).expect("families are simple"))
        .collect();
    Ok(CyclePacking::new(s.clone(), cycles))
}
