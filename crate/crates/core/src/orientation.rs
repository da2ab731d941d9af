//! Oriented graphs and the predicates on them: acyclicity, transitivity, good
//! partitions and shortcut detection.
//!
//! A shortcut for the arc `s -> t` is a directed `s ~> t` path through at least
//! two intermediate vertices whose vertex set is not a clique. Let `R` be the
//! vertices strictly between `s` and `t` (reachable from `s`, reaching `t`).
//! Every `s ~> t` path induces a clique iff every vertex of `R` is adjacent to
//! both `s` and `t`, and every `x, y` in `R` with `x ~> y` are adjacent. That
//! reduces the search to reachability sets, one chord at a time.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, contains};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Direction assignment for every edge of `base`. `out[u]` holds the heads of
/// arcs leaving `u`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Graph,
    out: Vec<u64>,
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<_> = self.arcs().collect();
        f.debug_struct("Orientation")
            .field("n", &self.base.order())
            .field("arcs", &arcs)
            .finish()
    }
}

impl Orientation {
    /// Validates that `out` orients each edge of `base` exactly once.
    pub fn from_out_rows(base: Graph, out: Vec<u64>) -> Result<Orientation> {
        if out.len() != base.order() {
            return Err(Error::argument("row count differs from vertex count"));
        }
        for u in 0..base.order() {
            if out[u] & !base.neighbors(u) != 0 {
                return Err(Error::argument(format!(
                    "vertex {u} has an arc on a non-edge"
                )));
            }
            for v in bits::iter(out[u]) {
                if contains(out[v], u) {
                    return Err(Error::argument(format!("edge {u}-{v} oriented both ways")));
                }
            }
        }
        for e in base.edges() {
            if !contains(out[e.u], e.v) && !contains(out[e.v], e.u) {
                return Err(Error::argument(format!("edge {e} has no direction")));
            }
        }
        Ok(Orientation { base, out })
    }

    /// Orientation whose arcs are exactly `arcs` (each `(tail, head)`).
    pub fn from_arcs(base: Graph, arcs: &[(usize, usize)]) -> Result<Orientation> {
        let mut out = vec![0u64; base.order()];
        for &(a, b) in arcs {
            if !base.has_edge(a, b) {
                return Err(Error::argument(format!("arc {a}->{b} is not an edge")));
            }
            out[a] |= bit(b);
        }
        Orientation::from_out_rows(base, out)
    }

    /// Orients every edge from the endpoint that comes first in `order`.
    pub fn from_order(base: Graph, order: &[usize]) -> Result<Orientation> {
        let n = base.order();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::argument(
                    "order is not a permutation of the vertices",
                ));
            }
            rank[v] = i;
        }
        if order.len() != n {
            return Err(Error::argument(
                "order is not a permutation of the vertices",
            ));
        }
        let mut out = vec![0u64; n];
        for e in base.edges() {
            if rank[e.u] < rank[e.v] {
                out[e.u] |= bit(e.v);
            } else {
                out[e.v] |= bit(e.u);
            }
        }
        Ok(Orientation { base, out })
    }

    pub(crate) fn from_parts_unchecked(base: Graph, out: Vec<u64>) -> Orientation {
        debug_assert!(Orientation::from_out_rows(base.clone(), out.clone()).is_ok());
        Orientation { base, out }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    #[inline]
    pub fn out(&self, v: usize) -> u64 {
        self.out[v]
    }

    #[inline]
    pub fn incoming(&self, v: usize) -> u64 {
        self.base.neighbors(v) & !self.out[v]
    }

    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.order() && contains(self.out[u], v)
    }

    /// Direction of the edge `e`: `true` when it points `e.u -> e.v`.
    pub fn direction(&self, e: Edge) -> Option<bool> {
        if !self.base.has_edge(e.u, e.v) {
            None
        } else {
            Some(self.has_arc(e.u, e.v))
        }
    }

    /// Arcs sorted by tail, then head.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| bits::iter(self.out[u]).map(move |v| (u, v)))
    }

    pub fn sources(&self) -> u64 {
        (0..self.order())
            .filter(|&v| self.incoming(v) == 0)
            .fold(0, |m, v| m | bit(v))
    }

    pub fn sinks(&self) -> u64 {
        (0..self.order())
            .filter(|&v| self.out[v] == 0)
            .fold(0, |m, v| m | bit(v))
    }

    pub fn reversed(&self) -> Orientation {
        let out = (0..self.order()).map(|v| self.incoming(v)).collect();
        Orientation {
            base: self.base.clone(),
            out,
        }
    }

    /// Keeps the directions of the edges that survive in `sub`, which must be a
    /// spanning subgraph of the base.
    pub fn restrict(&self, sub: &Graph) -> Result<Orientation> {
        if sub.order() != self.order() {
            return Err(Error::argument("restriction must keep the vertex set"));
        }
        for v in 0..sub.order() {
            if sub.neighbors(v) & !self.base.neighbors(v) != 0 {
                return Err(Error::argument("restriction target is not a subgraph"));
            }
        }
        let out = (0..sub.order())
            .map(|v| self.out[v] & sub.neighbors(v))
            .collect();
        Ok(Orientation {
            base: sub.clone(),
            out,
        })
    }

    /// Orientation of `G - v`; higher indices shift down.
    pub fn without_vertex(&self, v: usize) -> Result<Orientation> {
        self.base.check_vertex(v)?;
        let base = self.base.without_vertex(v);
        let out = (0..self.order())
            .filter(|&u| u != v)
            .map(|u| bits::remove_index(self.out[u], v))
            .collect();
        Ok(Orientation { base, out })
    }

    /// Adds the arc `a -> b` on a new edge.
    pub fn with_arc(&self, a: usize, b: usize) -> Result<Orientation> {
        let e = Edge::new(a, b)?;
        let base = self.base.edit(&crate::graph::Edit::AddEdge(e.u, e.v))?;
        let mut out = self.out.clone();
        out[a] |= bit(b);
        Ok(Orientation { base, out })
    }

    /// True when every edge present in both bases points the same way in both.
    /// Vertices are matched by index.
    pub fn agrees_with(&self, other: &Orientation) -> bool {
        let n = self.order().min(other.order());
        (0..n).all(|u| {
            let shared = self.base.neighbors(u) & other.base.neighbors(u) & bits::low_mask(n);
            self.out[u] & shared == other.out[u] & shared
        })
    }

    /// Text form: `n=<k>` then one `u->v` line per arc, sorted.
    pub fn to_digraph_text(&self) -> String {
        let mut s = format!("n={}\n", self.order());
        for (u, v) in self.arcs() {
            s.push_str(&format!("{u}->{v}\n"));
        }
        s
    }

    /// Parses the text form; the base graph is the underlying undirected graph.
    pub fn from_digraph_text(text: &str) -> Result<Orientation> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::format(0, "missing header"))?;
        let n: usize = header
            .trim()
            .strip_prefix("n=")
            .and_then(|k| k.parse().ok())
            .ok_or_else(|| Error::format(0, "expected `n=<count>` header"))?;
        let mut base = Graph::new(n)?;
        let mut arcs = Vec::new();
        let mut offset = header.len() + 1;
        for line in lines {
            let t = line.trim();
            if !t.is_empty() {
                let parsed = t.split_once("->").and_then(|(a, b)| {
                    Some((
                        a.trim().parse::<usize>().ok()?,
                        b.trim().parse::<usize>().ok()?,
                    ))
                });
                let Some((a, b)) = parsed else {
                    return Err(Error::format(offset, format!("bad arc line `{t}`")));
                };
                if a >= n || b >= n || a == b {
                    return Err(Error::format(offset, format!("arc `{t}` out of range")));
                }
                if base.has_edge(a, b) {
                    return Err(Error::format(offset, format!("duplicate edge in `{t}`")));
                }
                base.insert(a, b);
                arcs.push((a, b));
            }
            offset += line.len() + 1;
        }
        Orientation::from_arcs(base, &arcs)
    }
}

/// Certificate that an acyclic orientation is not semi-transitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shortcut {
    /// Directed path `path[0] -> ... -> path[m-1]`, `m >= 4`.
    pub path: Vec<usize>,
    /// The arc `path[0] -> path[m-1]`.
    pub chord: (usize, usize),
    /// Two path vertices, earlier one first, that are not adjacent.
    pub missing: (usize, usize),
}

impl Shortcut {
    /// Re-checks the certificate against `o`.
    pub fn validate(&self, o: &Orientation) -> bool {
        let m = self.path.len();
        if m < 4 || self.path.iter().any(|&v| v >= o.order()) {
            return false;
        }
        let set = self.path.iter().fold(0u64, |s, &v| s | bit(v));
        if set.count_ones() as usize != m {
            return false;
        }
        let forward = self.path.windows(2).all(|w| o.has_arc(w[0], w[1]));
        let chord_ok =
            self.chord == (self.path[0], self.path[m - 1]) && o.has_arc(self.chord.0, self.chord.1);
        let (a, b) = self.missing;
        let pos = |x| self.path.iter().position(|&p| p == x);
        let missing_ok =
            matches!((pos(a), pos(b)), (Some(i), Some(j)) if i < j) && !o.base().has_edge(a, b);
        forward && chord_ok && missing_ok
    }
}

/// Level decomposition by repeated source stripping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodPartition {
    /// Level bitsets `V_1, ..., V_m`.
    pub levels: Vec<u64>,
}

impl GoodPartition {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Zero-based level index of `v`.
    pub fn level_of(&self, v: usize) -> Option<usize> {
        self.levels.iter().position(|&l| contains(l, v))
    }

    pub fn level_vertices(&self, i: usize) -> Vec<usize> {
        bits::iter(self.levels[i]).collect()
    }

    /// Per-vertex level lookup table.
    pub fn level_table(&self, n: usize) -> Vec<usize> {
        let mut t = vec![usize::MAX; n];
        for (i, &l) in self.levels.iter().enumerate() {
            for v in bits::iter(l) {
                t[v] = i;
            }
        }
        t
    }

    /// Checks disjoint covering, independence of each level, that level `i+1`
    /// is exactly the set of sources once levels `..=i` are removed.
    pub fn validate(&self, o: &Orientation) -> bool {
        let mut seen = 0u64;
        for &l in &self.levels {
            if l == 0 || l & seen != 0 {
                return false;
            }
            if !bits::iter(l).all(|v| o.base().neighbors(v) & l == 0) {
                return false;
            }
            let remaining = o.base().vertex_mask() & !seen;
            let sources = bits::iter(remaining)
                .filter(|&v| o.incoming(v) & remaining == 0)
                .fold(0u64, |m, v| m | bit(v));
            if sources != l {
                return false;
            }
            seen |= l;
        }
        seen == o.base().vertex_mask()
    }
}

/// Topological order of the digraph given by `out`, or `None` on a cycle.
pub(crate) fn topological_order(n: usize, out: &[u64]) -> Option<Vec<usize>> {
    let mut indeg = vec![0u32; n];
    for row in out.iter().take(n) {
        for v in bits::iter(*row) {
            indeg[v] += 1;
        }
    }
    let mut ready: u64 = (0..n).filter(|&v| indeg[v] == 0).fold(0, |m, v| m | bit(v));
    let mut order = Vec::with_capacity(n);
    while ready != 0 {
        let v = ready.trailing_zeros() as usize;
        ready &= ready - 1;
        order.push(v);
        for w in bits::iter(out[v]) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready |= bit(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Strict descendant sets of an acyclic digraph, or `None` on a cycle.
pub(crate) fn descendants(n: usize, out: &[u64]) -> Option<Vec<u64>> {
    let order = topological_order(n, out)?;
    let mut desc = vec![0u64; n];
    for &v in order.iter().rev() {
        let mut d = out[v];
        for w in bits::iter(out[v]) {
            d |= desc[w];
        }
        desc[v] = d;
    }
    Some(desc)
}

/// Strict ancestor sets from descendant sets.
pub(crate) fn ancestors(n: usize, desc: &[u64]) -> Vec<u64> {
    let mut anc = vec![0u64; n];
    for (v, &d) in desc.iter().enumerate().take(n) {
        for w in bits::iter(d) {
            anc[w] |= bit(v);
        }
    }
    anc
}

/// Walks from `from` to `to` along arcs, always taking the lowest-index
/// out-neighbour that is `to` or can still reach it.
fn greedy_walk(out: &[u64], desc: &[u64], from: usize, to: usize, path: &mut Vec<usize>) {
    let mut cur = from;
    while cur != to {
        let next = bits::iter(out[cur])
            .find(|&w| w == to || contains(desc[w], to))
            .expect("target is reachable");
        path.push(next);
        cur = next;
    }
}

fn first_missing_pair(adj: &[u64], path: &[usize]) -> (usize, usize) {
    for (i, &a) in path.iter().enumerate() {
        for &b in &path[i + 1..] {
            if !contains(adj[a], b) {
                return (a, b);
            }
        }
    }
    unreachable!("shortcut path must contain a non-adjacent pair")
}

/// Shortcut with chord `s -> t`, if one exists. `adj` is the undirected graph,
/// `out`/`desc`/`anc` describe an acyclic (possibly partial) orientation of it.
pub(crate) fn shortcut_on_chord(
    adj: &[u64],
    out: &[u64],
    desc: &[u64],
    anc: &[u64],
    s: usize,
    t: usize,
) -> Option<Shortcut> {
    let between = desc[s] & anc[t];
    if between == 0 {
        return None;
    }
    let ends = adj[s] & adj[t];
    let mut waypoints = None;
    if between & !ends != 0 {
        let x = (between & !ends).trailing_zeros() as usize;
        waypoints = Some(vec![x]);
    } else {
        for x in bits::iter(between) {
            let bad = desc[x] & between & !adj[x];
            if bad != 0 {
                waypoints = Some(vec![x, bad.trailing_zeros() as usize]);
                break;
            }
        }
    }
    let waypoints = waypoints?;
    let mut path = vec![s];
    let mut cur = s;
    for &w in waypoints.iter().chain(std::iter::once(&t)) {
        greedy_walk(out, desc, cur, w, &mut path);
        cur = w;
    }
    let missing = first_missing_pair(adj, &path);
    Some(Shortcut {
        path,
        chord: (s, t),
        missing,
    })
}

pub fn is_acyclic(o: &Orientation) -> bool {
    topological_order(o.order(), &o.out).is_some()
}

/// The good partition of an acyclic orientation.
pub fn topological_levels(o: &Orientation) -> Result<GoodPartition> {
    let n = o.order();
    let mut remaining = o.base.vertex_mask();
    let mut levels = Vec::new();
    while remaining != 0 {
        let sources = bits::iter(remaining)
            .filter(|&v| o.incoming(v) & remaining == 0)
            .fold(0u64, |m, v| m | bit(v));
        if sources == 0 {
            return Err(Error::precondition("orientation has a directed cycle"));
        }
        levels.push(sources);
        remaining &= !sources;
    }
    debug_assert!(n == 0 || !levels.is_empty());
    Ok(GoodPartition { levels })
}

/// Every directed 2-path `a -> b -> c` is closed by an arc `a -> c`.
pub fn is_transitive(o: &Orientation) -> bool {
    (0..o.order()).all(|a| bits::iter(o.out[a]).all(|b| o.out[b] & !o.out[a] == 0))
}

/// First shortcut in chord order (normalized edge order), if any.
pub fn find_shortcut(o: &Orientation) -> Result<Option<Shortcut>> {
    let n = o.order();
    let desc = descendants(n, &o.out)
        .ok_or_else(|| Error::precondition("orientation has a directed cycle"))?;
    let anc = ancestors(n, &desc);
    let adj = o.base.rows();
    for e in o.base.edges() {
        let (s, t) = if o.has_arc(e.u, e.v) {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        if let Some(sc) = shortcut_on_chord(adj, &o.out, &desc, &anc, s, t) {
            return Ok(Some(sc));
        }
    }
    Ok(None)
}

pub fn is_semi_transitive(o: &Orientation) -> bool {
    matches!(find_shortcut(o), Ok(None))
}

/// Largest order the subset brute force accepts.
pub const ORACLE_MAX_ORDER: usize = 10;

/// Brute-force shortcut search over vertex subsets, independent of
/// [`find_shortcut`]. For each subset of at least four vertices it sorts the
/// induced subdigraph topologically, checks that consecutive vertices form a
/// Hamiltonian path whose ends carry a chord, and checks every triple for
/// transitivity.
pub fn shortcut_oracle(o: &Orientation) -> Result<Option<Shortcut>> {
    let n = o.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::UnsupportedSize(format!(
            "oracle supports at most {ORACLE_MAX_ORDER} vertices, got {n}"
        )));
    }
    if !is_acyclic(o) {
        return Err(Error::precondition("orientation has a directed cycle"));
    }
    for subset in 0u64..(1u64 << n) {
        if subset.count_ones() < 4 {
            continue;
        }
        let members: Vec<usize> = bits::iter(subset).collect();
        // Kahn's algorithm restricted to the subset; a Hamiltonian path in a
        // DAG is the unique topological order when one exists.
        let mut indeg: Vec<usize> = members
            .iter()
            .map(|&v| members.iter().filter(|&&u| o.has_arc(u, v)).count())
            .collect();
        let mut order = Vec::with_capacity(members.len());
        let mut done = vec![false; members.len()];
        while order.len() < members.len() {
            let Some(i) = (0..members.len()).find(|&i| !done[i] && indeg[i] == 0) else {
                break;
            };
            done[i] = true;
            order.push(members[i]);
            for (j, &w) in members.iter().enumerate() {
                if o.has_arc(members[i], w) {
                    indeg[j] -= 1;
                }
            }
        }
        let hamiltonian = order.windows(2).all(|w| o.has_arc(w[0], w[1]));
        let first = order[0];
        let last = *order.last().unwrap();
        if !hamiltonian || !o.has_arc(first, last) {
            continue;
        }
        let mut witness = None;
        'outer: for &a in &members {
            for &b in &members {
                for &c in &members {
                    if o.has_arc(a, b) && o.has_arc(b, c) && !o.has_arc(a, c) {
                        witness = Some((a, c));
                        break 'outer;
                    }
                }
            }
        }
        if witness.is_some() {
            let missing = first_missing_pair(o.base.rows(), &order);
            return Ok(Some(Shortcut {
                chord: (first, last),
                path: order,
                missing,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn transitive_tournament(n: usize) -> Orientation {
        let k = generate(Family::Complete(n)).unwrap();
        let order: Vec<_> = (0..n).collect();
        Orientation::from_order(k, &order).unwrap()
    }

    /// a->b, b->c, c->d, a->d on vertices 0..4
    fn shortcut_digraph() -> Orientation {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        Orientation::from_arcs(g, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    fn c4_two_sources() -> Orientation {
        // sources 0, 2; sinks 1, 3
        let c4 = generate(Family::Cycle(4)).unwrap();
        Orientation::from_arcs(c4, &[(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_rows() {
        let p3 = generate(Family::Path(3)).unwrap();
        assert!(Orientation::from_arcs(p3.clone(), &[(0, 1)]).is_err());
        assert!(Orientation::from_arcs(p3.clone(), &[(0, 1), (1, 0), (1, 2)]).is_err());
        assert!(Orientation::from_arcs(p3.clone(), &[(0, 2), (0, 1), (1, 2)]).is_err());
        assert!(Orientation::from_arcs(p3, &[(0, 1), (2, 1)]).is_ok());
    }

    #[test]
    fn acyclicity() {
        let k3 = generate(Family::Complete(3)).unwrap();
        let cyc = Orientation::from_arcs(k3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!is_acyclic(&cyc));
        assert!(is_acyclic(&transitive_tournament(4)));
        let star = generate(Family::CompleteBipartite(1, 4)).unwrap();
        let o = Orientation::from_arcs(star, &[(1, 0), (0, 2), (3, 0), (0, 4)]).unwrap();
        assert!(is_acyclic(&o));
        assert!(matches!(
            topological_levels(&cyc),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(find_shortcut(&cyc), Err(Error::Precondition(_))));
        assert!(!is_semi_transitive(&cyc));
    }

    #[test]
    fn levels() {
        let p3 = generate(Family::Path(3)).unwrap();
        let o = Orientation::from_arcs(p3, &[(0, 1), (1, 2)]).unwrap();
        let gp = topological_levels(&o).unwrap();
        assert_eq!(gp.levels, vec![0b001, 0b010, 0b100]);
        assert!(gp.validate(&o));

        let gp = topological_levels(&c4_two_sources()).unwrap();
        assert_eq!(gp.levels, vec![0b0101, 0b1010]);

        let t = transitive_tournament(4);
        let gp = topological_levels(&t).unwrap();
        assert_eq!(gp.len(), 4);
        assert!(gp.levels.iter().all(|l| l.count_ones() == 1));
        assert!(!GoodPartition {
            levels: vec![0b0011, 0b1100]
        }
        .validate(&t));
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&transitive_tournament(3)));
        let p3 = generate(Family::Path(3)).unwrap();
        let o = Orientation::from_arcs(p3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_transitive(&o));
        assert!(is_transitive(&c4_two_sources()));
    }

    #[test]
    fn canonical_shortcut() {
        let o = shortcut_digraph();
        let sc = find_shortcut(&o).unwrap().unwrap();
        assert_eq!(sc.path, vec![0, 1, 2, 3]);
        assert_eq!(sc.chord, (0, 3));
        assert_eq!(sc.missing, (0, 2));
        assert!(sc.validate(&o));
        assert!(!is_semi_transitive(&o));

        let oracle = shortcut_oracle(&o).unwrap().unwrap();
        assert_eq!(oracle.path, vec![0, 1, 2, 3]);
        assert!(oracle.validate(&o));
    }

    #[test]
    fn no_shortcut_cases() {
        assert!(find_shortcut(&transitive_tournament(4)).unwrap().is_none());
        assert!(find_shortcut(&transitive_tournament(7)).unwrap().is_none());
        assert!(find_shortcut(&c4_two_sources()).unwrap().is_none());
        assert!(is_semi_transitive(&transitive_tournament(5)));
        assert!(shortcut_oracle(&transitive_tournament(5))
            .unwrap()
            .is_none());
    }

    #[test]
    fn source_sink_chord_deleted_from_tournament() {
        // K5 transitively oriented 0<1<2<3<4, with the edge 0-4 removed
        let t = transitive_tournament(5);
        let sub = t
            .base()
            .edit(&crate::graph::Edit::DeleteEdge(Edge { u: 0, v: 4 }))
            .unwrap();
        let o = t.restrict(&sub).unwrap();
        assert!(shortcut_oracle(&o).unwrap().is_none());
        assert!(find_shortcut(&o).unwrap().is_none());
        // removing a different edge creates a shortcut
        let sub = t
            .base()
            .edit(&crate::graph::Edit::DeleteEdge(Edge { u: 1, v: 3 }))
            .unwrap();
        let o = t.restrict(&sub).unwrap();
        assert!(shortcut_oracle(&o).unwrap().is_some());
        let sc = find_shortcut(&o).unwrap().unwrap();
        assert!(sc.validate(&o));
    }

    #[test]
    fn tiny_digraphs_have_no_shortcuts() {
        for n in 0..=3usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for idx in 0..1u64 << pairs {
                let g = Graph::from_pair_index(n, idx);
                let order: Vec<_> = (0..n).rev().collect();
                let o = Orientation::from_order(g, &order).unwrap();
                assert!(is_semi_transitive(&o));
                assert!(shortcut_oracle(&o).unwrap().is_none());
            }
        }
    }

    #[test]
    fn oracle_size_cap() {
        let o = transitive_tournament(11);
        assert!(matches!(
            shortcut_oracle(&o),
            Err(Error::UnsupportedSize(_))
        ));
    }

    #[test]
    fn digraph_text_round_trip() {
        let o = shortcut_digraph();
        let text = o.to_digraph_text();
        assert_eq!(text, "n=4\n0->1\n0->3\n1->2\n2->3\n");
        assert_eq!(Orientation::from_digraph_text(&text).unwrap(), o);
        assert!(Orientation::from_digraph_text("n=3\n0->1\n1-2\n").is_err());
        assert!(Orientation::from_digraph_text("n=3\n0->1\n1->0\n").is_err());
        assert!(Orientation::from_digraph_text("x=3\n").is_err());
        assert!(Orientation::from_digraph_text("n=2\n0->5\n").is_err());
    }

    #[test]
    fn restriction_and_agreement() {
        let t = transitive_tournament(4);
        let sub = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = t.restrict(&sub).unwrap();
        assert_eq!(r.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert!(r.agrees_with(&t));
        assert!(!r.reversed().agrees_with(&t));
        let minus = t.without_vertex(0).unwrap();
        assert_eq!(minus, transitive_tournament(3));
    }
}
