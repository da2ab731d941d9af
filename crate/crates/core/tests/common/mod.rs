#![allow(dead_code)]

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use storient::{find_semi_transitive_orientation, is_acyclic, shortcut_oracle, Graph, Orientation};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// G(n, p) with edges drawn independently.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph on `lo..=hi` vertices with a found semi-transitive orientation.
pub fn random_orientable(rng: &mut StdRng, lo: usize, hi: usize) -> (Graph, Orientation) {
    loop {
        let n = rng.random_range(lo..=hi);
        let p = rng.random_range(0.2..0.8);
        let g = random_graph(rng, n, p);
        if let Some(o) = find_semi_transitive_orientation(&g).unwrap() {
            return (g, o);
        }
    }
}

/// Every orientation of `g`, acyclic or not, indexed by a bit per edge.
pub fn all_orientations(g: &Graph) -> impl Iterator<Item = Orientation> + '_ {
    let edges: Vec<_> = g.edges().collect();
    assert!(edges.len() <= 24);
    (0u64..1 << edges.len()).map(move |mask| {
        let arcs: Vec<_> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                if mask >> i & 1 == 1 {
                    (e.v, e.u)
                } else {
                    (e.u, e.v)
                }
            })
            .collect();
        Orientation::from_arcs(g.clone(), &arcs).unwrap()
    })
}

/// Orientability by trying every acyclic orientation against the subset oracle.
pub fn brute_force_orientable(g: &Graph) -> bool {
    all_orientations(g).any(|o| is_acyclic(&o) && shortcut_oracle(&o).unwrap().is_none())
}

fn permutations(
    items: &[usize],
    k: usize,
    cur: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if cur.len() == k {
        return f(cur);
    }
    for &x in items {
        if !cur.contains(&x) {
            cur.push(x);
            if permutations(items, k, cur, f) {
                return true;
            }
            cur.pop();
        }
    }
    false
}

/// Induced containment by trying every injective map.
pub fn induced_oracle(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.order();
    if k > host.order() {
        return false;
    }
    let items: Vec<usize> = (0..host.order()).collect();
    permutations(&items, k, &mut Vec::new(), &mut |map| {
        (0..k).all(|a| (a + 1..k).all(|b| pattern.has_edge(a, b) == host.has_edge(map[a], map[b])))
    })
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// proptest strategy for graphs on `lo..=hi` vertices.
pub fn graph_strategy(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            },
        )
    })
}
