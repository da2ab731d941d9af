//! Backtracking search for semi-transitive and transitive orientations.
//!
//! Edges are assigned one at a time, most constrained (largest endpoint-degree
//! sum) first. Semi-transitive search keeps strict descendant/ancestor sets of
//! the partial digraph; an arc that closes a cycle, or that completes a path
//! and chord whose vertex set is not a clique, is rejected at once, since every
//! acyclic completion would contain that shortcut. Transitive search propagates
//! the forced directions of each assignment instead. Every leaf is re-checked
//! with the engine predicates.

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, contains};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::{is_semi_transitive, is_transitive, Orientation};

/// Largest order the solver accepts.
pub const MAX_SOLVER_ORDER: usize = 20;
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
/// Environment variable overriding [`DEFAULT_NODE_BUDGET`].
pub const BUDGET_ENV: &str = "STORIENT_NODE_BUDGET";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub prunings: u64,
}

impl SolveStats {
    fn absorb(&mut self, other: SolveStats) {
        self.nodes += other.nodes;
        self.prunings += other.prunings;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    SemiTransitive,
    Transitive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Orientable(Orientation),
    NotOrientable,
    /// The neighbourhood of this vertex is not a comparability graph.
    Filtered(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveVerdict {
    pub status: Status,
    pub stats: SolveStats,
}

impl SolveVerdict {
    pub fn is_orientable(&self) -> bool {
        matches!(self.status, Status::Orientable(_))
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        match &self.status {
            Status::Orientable(o) => Some(o),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Solver {
    node_budget: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// True when some path from `s` to `t` in the partial digraph, together with
/// the arc `s -> t`, spans a non-clique.
#[inline]
pub(crate) fn chord_is_shortcut(
    adj: &[u64],
    desc: &[u64],
    anc: &[u64],
    s: usize,
    t: usize,
) -> bool {
    let between = desc[s] & anc[t];
    if between == 0 {
        return false;
    }
    if between & !(adj[s] & adj[t]) != 0 {
        return true;
    }
    bits::iter(between).any(|x| desc[x] & between & !adj[x] != 0)
}

fn edge_order(g: &Graph) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u, e.v)).collect();
    edges.sort_by_key(|&(u, v)| std::cmp::Reverse(g.degree(u) + g.degree(v)));
    edges
}

fn check_size(g: &Graph) -> Result<()> {
    if g.order() > MAX_SOLVER_ORDER {
        Err(Error::UnsupportedSize(format!(
            "solver supports at most {MAX_SOLVER_ORDER} vertices, got {}",
            g.order()
        )))
    } else {
        Ok(())
    }
}

struct SemiSearch<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    out: [u64; MAX_SOLVER_ORDER],
    desc: [u64; MAX_SOLVER_ORDER],
    anc: [u64; MAX_SOLVER_ORDER],
    stats: SolveStats,
    budget: u64,
    found: Option<Orientation>,
}

impl SemiSearch<'_> {
    fn run(&mut self, idx: usize) -> Result<bool> {
        if idx == self.edges.len() {
            let n = self.g.order();
            let o = Orientation::from_parts_unchecked(self.g.clone(), self.out[..n].to_vec());
            if is_semi_transitive(&o) {
                self.found = Some(o);
                return Ok(true);
            }
            self.stats.prunings += 1;
            return Ok(false);
        }
        let (u, v) = self.edges[idx];
        let choices = if idx == 0 { 1 } else { 2 };
        for &(a, b) in [(u, v), (v, u)].iter().take(choices) {
            self.stats.nodes += 1;
            if self.stats.nodes > self.budget {
                return Err(Error::Resource {
                    budget: self.budget,
                    stats: self.stats,
                });
            }
            if contains(self.desc[b], a) {
                self.stats.prunings += 1;
                continue;
            }
            let (saved_desc, saved_anc) = (self.desc, self.anc);
            self.out[a] |= bit(b);
            let up = self.anc[a] | bit(a);
            let down = self.desc[b] | bit(b);
            for x in bits::iter(up) {
                self.desc[x] |= down;
            }
            for y in bits::iter(down) {
                self.anc[y] |= up;
            }
            if !self.creates_shortcut(up, down) && self.run(idx + 1)? {
                return Ok(true);
            }
            self.out[a] &= !bit(b);
            self.desc = saved_desc;
            self.anc = saved_anc;
        }
        Ok(false)
    }

    /// Checks every assigned chord `s -> t` whose paths may use the new arc.
    fn creates_shortcut(&mut self, up: u64, down: u64) -> bool {
        let adj = self.g.rows();
        for s in bits::iter(up) {
            for t in bits::iter(self.out[s] & down) {
                if chord_is_shortcut(adj, &self.desc, &self.anc, s, t) {
                    self.stats.prunings += 1;
                    return true;
                }
            }
        }
        false
    }
}

struct TransitiveSearch<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    out: [u64; MAX_SOLVER_ORDER],
    inn: [u64; MAX_SOLVER_ORDER],
    trail: Vec<(usize, usize)>,
    queue: Vec<(usize, usize)>,
    stats: SolveStats,
    budget: u64,
    found: Option<Orientation>,
}

impl TransitiveSearch<'_> {
    /// Assigns `a -> b` and everything it forces. Returns false on conflict;
    /// the caller undoes the trail either way.
    fn assign(&mut self, a: usize, b: usize) -> bool {
        let adj = self.g.rows();
        self.queue.clear();
        self.queue.push((a, b));
        while let Some((x, y)) = self.queue.pop() {
            if contains(self.out[x], y) {
                continue;
            }
            if contains(self.out[y], x) {
                return false;
            }
            self.out[x] |= bit(y);
            self.inn[y] |= bit(x);
            self.trail.push((x, y));
            // c - x - y with c, y non-adjacent: c -> x would need c ~ y
            for c in bits::iter(adj[x] & !adj[y] & !bit(y)) {
                self.queue.push((x, c));
            }
            // x - y - c with x, c non-adjacent: y -> c would need x ~ c
            for c in bits::iter(adj[y] & !adj[x] & !bit(x)) {
                self.queue.push((c, y));
            }
            // x -> y -> c closes to x -> c
            for c in bits::iter(self.out[y] & adj[x]) {
                self.queue.push((x, c));
            }
            // c -> x -> y closes to c -> y
            for c in bits::iter(self.inn[x] & adj[y]) {
                self.queue.push((c, y));
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (x, y) = self.trail.pop().unwrap();
            self.out[x] &= !bit(y);
            self.inn[y] &= !bit(x);
        }
    }

    fn run(&mut self, mut idx: usize) -> Result<bool> {
        while idx < self.edges.len() {
            let (u, v) = self.edges[idx];
            if !contains(self.out[u], v) && !contains(self.out[v], u) {
                break;
            }
            idx += 1;
        }
        if idx == self.edges.len() {
            let n = self.g.order();
            let o = Orientation::from_parts_unchecked(self.g.clone(), self.out[..n].to_vec());
            if is_transitive(&o) {
                self.found = Some(o);
                return Ok(true);
            }
            self.stats.prunings += 1;
            return Ok(false);
        }
        let (u, v) = self.edges[idx];
        let choices = if self.trail.is_empty() { 1 } else { 2 };
        for &(a, b) in [(u, v), (v, u)].iter().take(choices) {
            self.stats.nodes += 1;
            if self.stats.nodes > self.budget {
                return Err(Error::Resource {
                    budget: self.budget,
                    stats: self.stats,
                });
            }
            let mark = self.trail.len();
            if self.assign(a, b) {
                if self.run(idx + 1)? {
                    return Ok(true);
                }
            } else {
                self.stats.prunings += 1;
            }
            self.undo_to(mark);
        }
        Ok(false)
    }
}

impl Solver {
    pub fn new(node_budget: u64) -> Solver {
        Solver { node_budget }
    }

    /// Default budget, overridden by `STORIENT_NODE_BUDGET` when it parses.
    pub fn from_env() -> Solver {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_NODE_BUDGET);
        Solver::new(budget)
    }

    pub fn node_budget(&self) -> u64 {
        self.node_budget
    }

    pub fn semi_transitive_search(&self, g: &Graph) -> Result<(Option<Orientation>, SolveStats)> {
        check_size(g)?;
        let mut s = SemiSearch {
            g,
            edges: edge_order(g),
            out: [0; MAX_SOLVER_ORDER],
            desc: [0; MAX_SOLVER_ORDER],
            anc: [0; MAX_SOLVER_ORDER],
            stats: SolveStats::default(),
            budget: self.node_budget,
            found: None,
        };
        s.run(0)?;
        Ok((s.found, s.stats))
    }

    pub fn transitive_search(&self, g: &Graph) -> Result<(Option<Orientation>, SolveStats)> {
        check_size(g)?;
        let mut s = TransitiveSearch {
            g,
            edges: edge_order(g),
            out: [0; MAX_SOLVER_ORDER],
            inn: [0; MAX_SOLVER_ORDER],
            trail: Vec::with_capacity(2 * g.edge_count()),
            queue: Vec::new(),
            stats: SolveStats::default(),
            budget: self.node_budget,
            found: None,
        };
        s.run(0)?;
        Ok((s.found, s.stats))
    }

    pub fn find_semi_transitive_orientation(&self, g: &Graph) -> Result<Option<Orientation>> {
        self.semi_transitive_search(g).map(|(o, _)| o)
    }

    pub fn find_transitive_orientation(&self, g: &Graph) -> Result<Option<Orientation>> {
        self.transitive_search(g).map(|(o, _)| o)
    }

    fn filter_with_stats(&self, g: &Graph, stats: &mut SolveStats) -> Result<Option<usize>> {
        for v in 0..g.order() {
            let (nbhd, _) = g.induced(g.neighbors(v));
            let (o, st) = self.transitive_search(&nbhd)?;
            stats.absorb(st);
            if o.is_none() {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    /// Lowest-index vertex whose neighbourhood is not a comparability graph.
    /// Such a vertex rules out any semi-transitive orientation.
    pub fn neighborhood_filter(&self, g: &Graph) -> Result<Option<usize>> {
        self.filter_with_stats(g, &mut SolveStats::default())
    }

    /// Prefilter (semi-transitive mode only), then search.
    pub fn decide(&self, g: &Graph, mode: Mode) -> Result<SolveVerdict> {
        check_size(g)?;
        let mut stats = SolveStats::default();
        let found = match mode {
            Mode::SemiTransitive => {
                if let Some(v) = self.filter_with_stats(g, &mut stats)? {
                    return Ok(SolveVerdict {
                        status: Status::Filtered(v),
                        stats,
                    });
                }
                self.semi_transitive_search(g)?
            }
            Mode::Transitive => self.transitive_search(g)?,
        };
        stats.absorb(found.1);
        let status = match found.0 {
            Some(o) => Status::Orientable(o),
            None => Status::NotOrientable,
        };
        Ok(SolveVerdict { status, stats })
    }
}

pub fn find_semi_transitive_orientation(g: &Graph) -> Result<Option<Orientation>> {
    Solver::from_env().find_semi_transitive_orientation(g)
}

pub fn find_transitive_orientation(g: &Graph) -> Result<Option<Orientation>> {
    Solver::from_env().find_transitive_orientation(g)
}

pub fn neighborhood_filter(g: &Graph) -> Result<Option<usize>> {
    Solver::from_env().neighborhood_filter(g)
}

pub fn decide(g: &Graph, mode: Mode) -> Result<SolveVerdict> {
    Solver::from_env().decide(g, mode)
}
