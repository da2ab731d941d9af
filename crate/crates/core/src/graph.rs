//! Simple undirected graphs on at most 62 vertices, stored as adjacency bitrows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, contains, low_mask};
use crate::error::{Error, Result};

/// Largest vertex count representable (graph6 short form limit).
pub const MAX_VERTICES: usize = 62;

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds a normalized edge from two distinct endpoints in either order.
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::argument(format!(
                "loop at vertex {a} is not an edge"
            )));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Undirected simple graph. Row `adj[u]` holds the neighbours of `u`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().map(|e| (e.u, e.v)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::UnsupportedSize(format!(
            "{n} vertices exceeds the limit of {MAX_VERTICES}"
        )))
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(a, b) in edges {
            let e = Edge::new(a, b)?;
            if e.v >= n {
                return Err(Error::argument(format!(
                    "edge {e} references a vertex outside 0..{n}"
                )));
            }
            g.insert(e.u, e.v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and loop-freeness.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::argument(format!("row {u} has bits beyond {n}")));
            }
            if contains(row, u) {
                return Err(Error::argument(format!("loop at vertex {u}")));
            }
            for v in bits::iter(row) {
                if !contains(rows[v], u) {
                    return Err(Error::argument(format!("asymmetric adjacency at {u},{v}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Decodes the `k`-th labeled graph: bit `p` of `index` is the `p`-th pair of the
    /// column-order upper triangle `(0,1),(0,2),(1,2),(0,3),...`.
    pub fn from_pair_index(n: usize, index: u64) -> Graph {
        assert!(n <= 11, "pair index only covers n <= 11");
        let mut g = Graph { n, adj: vec![0; n] };
        let mut p = 0;
        for j in 1..n {
            for i in 0..j {
                if (index >> p) & 1 == 1 {
                    g.insert(i, j);
                }
                p += 1;
            }
        }
        g
    }

    #[inline]
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && contains(self.adj[u], v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges in normalized order: by `u`, then `v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            bits::iter(self.adj[u] & !low_mask(u + 1)).map(move |v| Edge { u, v })
        })
    }

    pub fn is_complete(&self) -> bool {
        let all = self.vertex_mask();
        (0..self.n).all(|v| self.adj[v] == all & !bit(v))
    }

    /// True when every pair inside `set` is adjacent.
    pub fn is_clique(&self, set: u64) -> bool {
        bits::iter(set).all(|v| self.adj[v] & set == set & !bit(v))
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0;
            for v in bits::iter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask()
    }

    /// Complete multipartite iff non-adjacency is an equivalence relation, which
    /// holds iff any two non-adjacent vertices have identical neighbourhoods.
    pub fn is_complete_multipartite(&self) -> bool {
        (0..self.n).all(|u| {
            let non = self.vertex_mask() & !self.adj[u] & !bit(u);
            bits::iter(non).all(|v| self.adj[v] == self.adj[u])
        })
    }

    /// Subgraph induced on `set`, with vertices renumbered in ascending order.
    /// Returns the graph and the map from new to old indices.
    pub fn induced(&self, set: u64) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = bits::iter(set & self.vertex_mask()).collect();
        let mut g = Graph {
            n: map.len(),
            adj: vec![0; map.len()],
        };
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate().skip(i + 1) {
                if contains(self.adj[a], b) {
                    g.insert(i, j);
                }
            }
        }
        (g, map)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::argument("permutation length differs from order"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || contains(seen, p) {
                return Err(Error::argument("not a permutation"));
            }
            seen |= bit(p);
        }
        let mut g = Graph::new(self.n)?;
        for e in self.edges() {
            g.insert(perm[e.u], perm[e.v]);
        }
        Ok(g)
    }

    /// Pure graph edit; see [`Edit`].
    pub fn edit(&self, op: &Edit) -> Result<Graph> {
        match *op {
            Edit::DeleteVertex(v) => {
                self.check_vertex(v)?;
                Ok(self.without_vertex(v))
            }
            Edit::DeleteEdge(e) => {
                self.check_edge(e)?;
                let mut g = self.clone();
                g.remove(e.u, e.v);
                Ok(g)
            }
            Edit::AddEdge(a, b) => {
                let e = Edge::new(a, b)?;
                self.check_vertex(e.u)?;
                self.check_vertex(e.v)?;
                if self.has_edge(e.u, e.v) {
                    return Err(Error::argument(format!("edge {e} already present")));
                }
                let mut g = self.clone();
                g.insert(e.u, e.v);
                Ok(g)
            }
            Edit::SubdivideEdge(e, t) => {
                self.check_edge(e)?;
                if t == 0 {
                    return Err(Error::argument("subdivision count must be at least 1"));
                }
                check_order(self.n + t)?;
                let mut g = self.clone();
                g.n += t;
                g.adj.resize(g.n, 0);
                g.remove(e.u, e.v);
                let mut prev = e.u;
                for p in self.n..self.n + t {
                    g.insert(prev, p);
                    prev = p;
                }
                g.insert(prev, e.v);
                Ok(g)
            }
            Edit::LiftPath(u, v, w) => {
                if u == w {
                    return Err(Error::argument("lifted path needs distinct endpoints"));
                }
                self.check_edge(Edge::new(u, v)?)?;
                self.check_edge(Edge::new(v, w)?)?;
                let mut g = self.clone();
                g.remove(u, v);
                g.remove(v, w);
                g.insert(u, w);
                Ok(g)
            }
            Edit::ContractEdge(e) => {
                self.check_edge(e)?;
                let mut g = self.clone();
                let merged = (g.adj[e.u] | g.adj[e.v]) & !bit(e.u) & !bit(e.v);
                for x in bits::iter(merged) {
                    g.insert(e.u, x);
                }
                Ok(g.without_vertex(e.v))
            }
        }
    }

    pub(crate) fn without_vertex(&self, v: usize) -> Graph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, &row)| bits::remove_index(row, v))
            .collect();
        Graph { n: self.n - 1, adj }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::argument(format!("vertex {v} not in 0..{}", self.n)))
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_edge(&self, e: Edge) -> Result<()> {
        if !self.has_edge(e.u, e.v) {
            Err(Error::argument(format!("edge {e} not present")))
        } else {
            Ok(())
        }
    }
}

/// Pure edits on a [`Graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Edit {
    /// Removes `v`; higher indices shift down by one.
    DeleteVertex(usize),
    DeleteEdge(Edge),
    AddEdge(usize, usize),
    /// Replaces `e = xy` by the path `x, n, n+1, ..., n+t-1, y`.
    SubdivideEdge(Edge, usize),
    /// Removes `uv` and `vw`, adds `uw` if absent.
    LiftPath(usize, usize, usize),
    /// Merges `e.v` into `e.u` (the lower index survives).
    ContractEdge(Edge),
}

/// Named graph families with canonical vertex numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// Rim `0..n` in cyclic order, hub `n`.
    Wheel(usize),
    /// K4 on `0..4` minus the edge `1-3`.
    Diamond,
}

pub fn generate(family: Family) -> Result<Graph> {
    match family {
        Family::Empty(n) => Graph::new(n),
        Family::Path(n) => {
            if n == 0 {
                return Err(Error::argument("path needs at least one vertex"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::argument("cycle length must be at least 3"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete(n) => {
            let mut g = Graph::new(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    g.insert(u, v);
                }
            }
            Ok(g)
        }
        Family::CompleteBipartite(a, b) => {
            let mut g = Graph::new(a + b)?;
            for u in 0..a {
                for v in a..a + b {
                    g.insert(u, v);
                }
            }
            Ok(g)
        }
        Family::Wheel(n) => {
            if n < 3 {
                return Err(Error::argument("wheel rim must have at least 3 vertices"));
            }
            let mut g = generate(Family::Cycle(n))?;
            check_order(n + 1)?;
            g.n += 1;
            g.adj.push(0);
            for v in 0..n {
                g.insert(v, n);
            }
            Ok(g)
        }
        Family::Diamond => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    /// Short names: `E4`, `P4`, `C5`, `K6`, `K2,3`, `W5`, `diamond`.
    fn from_str(s: &str) -> Result<Family> {
        let unknown = || Error::argument(format!("unknown graph name `{s}`"));
        if s.eq_ignore_ascii_case("diamond") {
            return Ok(Family::Diamond);
        }
        let mut chars = s.chars();
        let tag = chars.next().ok_or_else(unknown)?;
        let rest = chars.as_str();
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        match tag {
            'E' => Ok(Family::Empty(num(rest)?)),
            'P' => Ok(Family::Path(num(rest)?)),
            'C' => Ok(Family::Cycle(num(rest)?)),
            'W' => Ok(Family::Wheel(num(rest)?)),
            'K' => match rest.split_once(',') {
                Some((a, b)) => Ok(Family::CompleteBipartite(num(a)?, num(b)?)),
                None => Ok(Family::Complete(num(rest)?)),
            },
            _ => Err(unknown()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names() {
        assert_eq!(
            "K2,3".parse::<Family>().unwrap(),
            Family::CompleteBipartite(2, 3)
        );
        assert_eq!("W5".parse::<Family>().unwrap(), Family::Wheel(5));
        assert_eq!("Diamond".parse::<Family>().unwrap(), Family::Diamond);
        assert_eq!("E3".parse::<Family>().unwrap(), Family::Empty(3));
        for bad in ["", "K", "X3", "C-1", "K2,"] {
            assert!(bad.parse::<Family>().is_err(), "{bad}");
        }
    }

    fn assert_well_formed(g: &Graph) {
        for u in 0..g.order() {
            assert!(!g.has_edge(u, u));
            assert_eq!(g.neighbors(u) & !g.vertex_mask(), 0);
            for v in bits::iter(g.neighbors(u)) {
                assert!(g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn families() {
        let w5 = generate(Family::Wheel(5)).unwrap();
        assert_eq!(w5.order(), 6);
        assert_eq!(w5.edge_count(), 10);
        assert_eq!(w5.neighbors(5), 0b11111);
        assert_eq!(generate(Family::Cycle(5)).unwrap().edge_count(), 5);
        assert_eq!(generate(Family::Complete(4)).unwrap().edge_count(), 6);
        let d = generate(Family::Diamond).unwrap();
        assert_eq!(d.edge_count(), 5);
        assert!(!d.has_edge(1, 3));
        let k23 = generate(Family::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!(k23.is_complete_multipartite());
    }

    #[test]
    fn family_parameter_errors() {
        assert!(generate(Family::Cycle(2)).is_err());
        assert!(generate(Family::Wheel(2)).is_err());
        assert!(generate(Family::Path(0)).is_err());
        assert!(matches!(
            generate(Family::Complete(63)),
            Err(Error::UnsupportedSize(_))
        ));
    }

    #[test]
    fn edge_normalizes() {
        assert_eq!(Edge::new(4, 1).unwrap(), Edge { u: 1, v: 4 });
        assert!(Edge::new(2, 2).is_err());
    }

    #[test]
    fn subdivide_triangle_twice_is_c5() {
        let k3 = generate(Family::Complete(3)).unwrap();
        let g = k3
            .edit(&Edit::SubdivideEdge(Edge::new(0, 1).unwrap(), 2))
            .unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 5);
        // path order x=0, 3, 4, y=1
        assert!(g.has_edge(0, 3) && g.has_edge(3, 4) && g.has_edge(4, 1));
        assert!(!g.has_edge(0, 1));
        assert!((0..5).all(|v| g.degree(v) == 2) && g.is_connected());
    }

    #[test]
    fn lift_in_c4() {
        // C4 a=0,b=1,c=2,d=3
        let c4 = generate(Family::Cycle(4)).unwrap();
        let g = c4.edit(&Edit::LiftPath(0, 1, 2)).unwrap();
        let want = Graph::from_edges(4, &[(0, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g, want);
        assert_eq!(g.degree(1), 0);
        // lifting onto an existing edge does not duplicate it
        let k3 = generate(Family::Complete(3)).unwrap();
        let g = k3.edit(&Edit::LiftPath(0, 1, 2)).unwrap();
        assert_eq!(g, Graph::from_edges(3, &[(0, 2)]).unwrap());
    }

    #[test]
    fn edit_errors() {
        let p3 = generate(Family::Path(3)).unwrap();
        assert!(p3.edit(&Edit::AddEdge(0, 1)).is_err());
        assert!(p3.edit(&Edit::DeleteEdge(Edge { u: 0, v: 2 })).is_err());
        assert!(p3.edit(&Edit::DeleteVertex(3)).is_err());
        assert!(p3.edit(&Edit::LiftPath(0, 2, 1)).is_err());
        assert!(p3
            .edit(&Edit::SubdivideEdge(Edge { u: 0, v: 1 }, 0))
            .is_err());
    }

    #[test]
    fn delete_vertex_reindexes() {
        let w5 = generate(Family::Wheel(5)).unwrap();
        let g = w5.edit(&Edit::DeleteVertex(5)).unwrap();
        assert_eq!(g, generate(Family::Cycle(5)).unwrap());
        let g = w5.edit(&Edit::DeleteVertex(0)).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.neighbors(4), 0b1111);
        assert_well_formed(&g);
    }

    #[test]
    fn contraction_keeps_lower_index() {
        let c4 = generate(Family::Cycle(4)).unwrap();
        let g = c4.edit(&Edit::ContractEdge(Edge { u: 0, v: 1 })).unwrap();
        assert_eq!(g, generate(Family::Complete(3)).unwrap());
        let k3 = generate(Family::Complete(3)).unwrap();
        let g = k3.edit(&Edit::ContractEdge(Edge { u: 1, v: 2 })).unwrap();
        assert_eq!(g, Graph::from_edges(2, &[(0, 1)]).unwrap());
        assert_well_formed(&g);
    }

    #[test]
    fn pair_index_matches_column_order() {
        // bit 0 -> (0,1), bit 1 -> (0,2), bit 2 -> (1,2), bit 3 -> (0,3)
        let g = Graph::from_pair_index(4, 0b1010);
        assert_eq!(g, Graph::from_edges(4, &[(0, 2), (0, 3)]).unwrap());
    }

    #[test]
    fn multipartite_detection() {
        assert!(generate(Family::Cycle(4))
            .unwrap()
            .is_complete_multipartite());
        assert!(!generate(Family::Path(4))
            .unwrap()
            .is_complete_multipartite());
        assert!(generate(Family::Diamond)
            .unwrap()
            .is_complete_multipartite());
        assert!(generate(Family::Empty(3))
            .unwrap()
            .is_complete_multipartite());
    }
}
