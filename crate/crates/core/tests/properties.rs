use std::collections::HashMap;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyclepack::families::{lambda_k_complete_bipartite, lambda_k_multipartite_regular, make_family};
use cyclepack::flow::flow_decompose;
use cyclepack::harness::random_flow;
use cyclepack::packing::{enumerate_s_cycles, lambda_k, lambda_k_with, LambdaKOptions};
use cyclepack::{
    lambda_s, reverse_cycle, solve, verify_packing, CyclePacking, FamilySpec, Graph, MultiDigraph,
    SolveOptions, TerminalSet,
};

fn digraph(max_n: usize, max_arcs: usize) -> impl Strategy<Value = MultiDigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_arcs).prop_map(move |pairs| {
            let arcs = pairs.into_iter().filter(|(u, v)| u != v);
            MultiDigraph::new(n, arcs).unwrap()
        })
    })
}

fn with_terminals(max_n: usize, max_arcs: usize) -> impl Strategy<Value = (MultiDigraph, TerminalSet)> {
    digraph(max_n, max_arcs).prop_flat_map(|d| {
        let n = d.vertex_count();
        (
            Just(d),
            prop::sample::subsequence((0..n).collect::<Vec<_>>(), 2..=n),
        )
            .prop_map(move |(d, s)| (d, TerminalSet::new(s, n).unwrap()))
    })
}

fn symmetric_digraph() -> impl Strategy<Value = MultiDigraph> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), b) in pairs.zip(bits) {
                if b {
                    g.add_edge(u, v);
                }
            }
            MultiDigraph::from_graph_bidirected(&g)
        })
    })
}

/// S-cycles as vertex sequences from `s0`, by extending simple paths one
/// vertex at a time. Written without the library's enumerator.
fn brute_cycles(d: &MultiDigraph, s: &TerminalSet) -> Vec<Vec<usize>> {
    let n = d.vertex_count();
    let s0 = s.members()[0];
    let mut out = Vec::new();
    let mut stack = vec![vec![s0]];
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        if path.len() >= 2 && d.has_arc(last, s0) && s.members().iter().all(|t| path.contains(t)) {
            out.push(path.clone());
        }
        for v in 0..n {
            if !path.contains(&v) && d.has_arc(last, v) {
                let mut next = path.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    out
}

fn brute_max_packing(d: &MultiDigraph, cycles: &[Vec<usize>]) -> usize {
    let mut room: HashMap<(usize, usize), usize> = HashMap::new();
    for a in d.arcs() {
        *room.entry((a.tail, a.head)).or_default() += 1;
    }
    let arcs: Vec<Vec<(usize, usize)>> = cycles
        .iter()
        .map(|c| (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect())
        .collect();
    fn go(i: usize, arcs: &[Vec<(usize, usize)>], room: &mut HashMap<(usize, usize), usize>) -> usize {
        if i == arcs.len() {
            return 0;
        }
        // a cycle may be used several times when all its arcs are parallel
        let mut best = go(i + 1, arcs, room);
        if arcs[i].iter().all(|e| room[e] > 0) {
            for e in &arcs[i] {
                *room.get_mut(e).unwrap() -= 1;
            }
            best = best.max(1 + go(i, arcs, room));
            for e in &arcs[i] {
                *room.get_mut(e).unwrap() += 1;
            }
        }
        best
    }
    go(0, &arcs, &mut room)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn degree_sums_match_arc_count(d in digraph(8, 20)) {
        let outs: usize = d.vertices().map(|v| d.out_degree(v)).sum();
        let ins: usize = d.vertices().map(|v| d.in_degree(v)).sum();
        prop_assert_eq!(outs, d.arc_count());
        prop_assert_eq!(ins, d.arc_count());
    }

    #[test]
    fn subdivision_preserves_balance_and_planarity(d in digraph(7, 12), pick in any::<prop::sample::Index>()) {
        prop_assume!(d.arc_count() > 0);
        let id = pick.index(d.arc_count());
        let (sub, x) = d.subdivide_arc(id).unwrap();
        prop_assert_eq!(sub.arc_count(), d.arc_count() + 1);
        prop_assert_eq!(sub.is_balanced(), d.is_balanced());
        prop_assert_eq!(sub.is_eulerian(), d.is_eulerian());
        prop_assert_eq!(sub.is_planar(), d.is_planar());
        prop_assert_eq!((sub.in_degree(x), sub.out_degree(x)), (1, 1));
    }

    #[test]
    fn solver_matches_brute_force((d, s) in with_terminals(6, 14)) {
        let sol = lambda_s(&d, &s);
        let cycles = brute_cycles(&d, &s);
        prop_assert!(sol.is_optimal());
        prop_assert!(verify_packing(&d, &sol.packing));
        prop_assert_eq!(sol.value(), brute_max_packing(&d, &cycles));
        prop_assert_eq!(enumerate_s_cycles(&d, &s, None).len(), cycles.len());
    }

    #[test]
    fn existence_matches_enumeration((d, s) in with_terminals(7, 18)) {
        let some = !enumerate_s_cycles(&d, &s, Some(1)).is_empty();
        let sol = solve(&d, &s, SolveOptions::default().with_target(1));
        prop_assert_eq!(sol.value() >= 1, some);
    }

    #[test]
    fn reversed_packing_is_a_packing(d in symmetric_digraph(), mask in any::<u8>()) {
        let n = d.vertex_count();
        let mut members: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
        if members.len() < 2 {
            members = vec![0, 1];
        }
        let s = TerminalSet::new(members, n).unwrap();
        let sol = lambda_s(&d, &s);
        let reversed = sol
            .packing
            .cycles
            .iter()
            .map(|c| reverse_cycle(&d, c).unwrap())
            .collect();
        prop_assert!(verify_packing(&d, &CyclePacking::new(s, reversed)));
    }

    #[test]
    fn lambda_k_is_bounded_and_monotone(d in digraph(6, 16)) {
        let n = d.vertex_count();
        let values: Vec<usize> = (2..=n)
            .map(|k| lambda_k_with(&d, k, LambdaKOptions { workers: 2, ..LambdaKOptions::default() }).unwrap().value)
            .collect();
        prop_assert!(values.iter().all(|&v| v <= d.min_semi_degree()));
        prop_assert!(values.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn flow_decomposition_reconstructs(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let net = random_flow(&mut rng, 10);
        let dec = flow_decompose(&net).unwrap();
        let (n, m) = (net.digraph.vertex_count(), net.digraph.arc_count());
        prop_assert_eq!(dec.arc_sum(m), net.flow.clone());
        prop_assert!(dec.path_terms.len() + dec.cycle_terms.len() <= n + m);
        prop_assert!(dec.cycle_terms.len() <= m);
        prop_assert!(dec.path_terms.iter().chain(&dec.cycle_terms).all(|t| t.weight > 0));
    }
}

#[test]
fn small_families_match_formulas() {
    for (w, l) in [(1, 2), (1, 3), (2, 2), (3, 2), (1, 4), (2, 3), (1, 6)] {
        let d = make_family(FamilySpec::MultipartiteRegular { w, l }).unwrap();
        for k in 2..=w * l {
            assert_eq!(
                lambda_k(&d, k, true).unwrap().value,
                lambda_k_multipartite_regular(w, l, k).unwrap(),
                "K[{w}]^{l} k={k}"
            );
        }
    }
    for (t, z) in [(2, 2), (2, 3), (2, 4), (3, 3)] {
        let d = make_family(FamilySpec::Bipartite { t, z }).unwrap();
        for k in 2..=t + z {
            assert_eq!(
                lambda_k(&d, k, false).unwrap().value,
                lambda_k_complete_bipartite(t, z, k).unwrap(),
                "K{t},{z} k={k}"
            );
        }
    }
}
