//! Induced subgraph search by backtracking over degree-compatible candidates.

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit};
use crate::graph::Graph;

/// Injective map from pattern vertices to host vertices; `map[p]` is the image of `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that adjacency and non-adjacency are both preserved.
    pub fn is_induced(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let mut used = 0u64;
        for &h in &self.map {
            if h >= host.order() || bits::contains(used, h) {
                return false;
            }
            used |= bit(h);
        }
        (0..pattern.order()).all(|a| {
            (a + 1..pattern.order())
                .all(|b| pattern.has_edge(a, b) == host.has_edge(self.map[a], self.map[b]))
        })
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    /// Pattern vertices in the order they are assigned.
    order: Vec<usize>,
    map: Vec<usize>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let need = self.pattern.degree(p);
        let mut candidates = self.host.vertex_mask() & !used;
        for &q in &self.order[..depth] {
            let image = self.map[q];
            if self.pattern.has_edge(p, q) {
                candidates &= self.host.neighbors(image);
            } else {
                candidates &= !self.host.neighbors(image);
            }
        }
        for h in bits::iter(candidates) {
            if self.host.degree(h) < need {
                continue;
            }
            self.map[p] = h;
            if self.extend(depth + 1, used | bit(h)) {
                return true;
            }
        }
        false
    }
}

/// Finds an induced copy of `pattern` in `host`, if any.
pub fn induced_contains(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.order() > host.order() {
        return None;
    }
    // high-degree pattern vertices first; ties keep index order
    let mut order: Vec<usize> = (0..pattern.order()).collect();
    order.sort_by_key(|&p| std::cmp::Reverse(pattern.degree(p)));
    let mut m = Matcher {
        host,
        pattern,
        order,
        map: vec![0; pattern.order()],
    };
    if m.extend(0, 0) {
        Some(Embedding { map: m.map })
    } else {
        None
    }
}
