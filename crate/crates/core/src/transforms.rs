//! Edge operations that keep a semi-transitive orientation valid: deleting an
//! edge, adding a missing edge, lifting a 2-path and subdividing an edge. Each
//! single step returns the new orientation plus a certificate explaining the
//! choice; the pipelines chain steps into a [`TransformTrace`].
//!
//! Level indices in certificates are zero-based positions in the good
//! partition of the orientation the step started from.

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, contains};
use crate::error::{Error, Result};
use crate::graph::{Edge, Edit, Graph};
use crate::graph6::{parse_graph6, write_graph6};
use crate::orientation::{is_semi_transitive, is_transitive, topological_levels, Orientation};

/// How a deleted edge was chosen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum DeletionRule {
    /// `sink` is a sink with an incoming arc, `clique` a maximal clique
    /// containing it (ascending), `source` the source of that clique.
    SinkClique {
        sink: usize,
        source: usize,
        clique: Vec<usize>,
    },
    /// The edge lies in no 4-clique.
    K4Free,
}

/// Stage of the path to the complete graph an addition belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdditionPhase {
    /// The orientation is not transitive yet.
    SemiToComparability,
    /// Transitive orientation, graph not complete multipartite.
    ToMultipartite,
    /// Transitive orientation of a complete multipartite graph.
    ToComplete,
}

/// How an added pair was chosen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum AdditionRule {
    /// Non-adjacent `tail`, `head` with a common neighbour `via` on a level
    /// strictly between them; `levels` = (tail, via, head), span minimal.
    OpenPath { via: usize, levels: [usize; 3] },
    /// `head` is on the highest level whose upper levels are complete to the
    /// rest and that has a non-neighbour below; `tail` is its lowest such
    /// non-neighbour. `levels` = (tail, head).
    UpperComplete { levels: [usize; 2] },
    /// Two vertices of the first level with at least two vertices.
    SameLevel { level: usize },
    /// First pair and direction, in index order, whose extension passed the
    /// checks; used only when the rules above produce no valid candidate.
    Exhaustive,
}

/// How a lifted path was chosen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum LiftRule {
    /// Same selection as [`AdditionRule::OpenPath`]; `levels` = (u, v, w).
    OpenPath { levels: [usize; 3] },
    /// Only two levels; first 2-path in index order, new edge low to high.
    TwoLevels,
    /// First 2-path in index order whose lift extends the orientation.
    Exhaustive,
}

/// Which path orientation a subdivision used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubdivisionStrategy {
    /// `x <- p1 -> ... -> pt -> y`
    SourceSplit,
    /// `x <- p1 <- ... <- pt <- y`
    TowardFirst,
    /// `x -> p1 -> y`, single new vertex only.
    Through,
}

/// One operation of a trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Operation {
    /// Marks the first record of a serialized trace.
    Input,
    DeleteEdge {
        edge: Edge,
        certificate: DeletionRule,
    },
    AddEdge {
        tail: usize,
        head: usize,
        phase: AdditionPhase,
        certificate: AdditionRule,
    },
    LiftPath {
        path: [usize; 3],
        /// The new arc, absent when `path[0]path[2]` was already an edge.
        added: Option<(usize, usize)>,
        certificate: LiftRule,
    },
}

impl Operation {
    fn edit(&self) -> Option<Edit> {
        match self {
            Operation::Input => None,
            Operation::DeleteEdge { edge, .. } => Some(Edit::DeleteEdge(*edge)),
            Operation::AddEdge { tail, head, .. } => Some(Edit::AddEdge(*tail, *head)),
            Operation::LiftPath { path, .. } => Some(Edit::LiftPath(path[0], path[1], path[2])),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformStep {
    pub op: Operation,
    pub graph: Graph,
    pub orientation: Orientation,
}

/// A starting orientation and the steps applied to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformTrace {
    pub start: Orientation,
    pub steps: Vec<TransformStep>,
}

/// Serialized form of one trace entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub op: Operation,
    pub graph6: String,
    pub digraph: String,
}

impl TransformTrace {
    pub fn new(start: Orientation) -> TransformTrace {
        TransformTrace {
            start,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Orientation after the last step.
    pub fn last(&self) -> &Orientation {
        self.steps.last().map_or(&self.start, |s| &s.orientation)
    }

    fn push(&mut self, op: Operation, orientation: Orientation) {
        self.steps.push(TransformStep {
            op,
            graph: orientation.base().clone(),
            orientation,
        });
    }

    /// One record for the input followed by one per step.
    pub fn to_records(&self) -> Result<Vec<TraceRecord>> {
        let record = |op: Operation, o: &Orientation| -> Result<TraceRecord> {
            Ok(TraceRecord {
                op,
                graph6: write_graph6(o.base())?,
                digraph: o.to_digraph_text(),
            })
        };
        let mut out = vec![record(Operation::Input, &self.start)?];
        for s in &self.steps {
            out.push(record(s.op.clone(), &s.orientation)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&self.to_records()?).expect("records serialize");
        s.push('\n');
        Ok(s)
    }

    /// Rebuilds a trace from records. Structural consistency is checked here;
    /// the step invariants are left to [`validate_trace`].
    pub fn from_records(records: &[TraceRecord]) -> Result<TransformTrace> {
        let decode = |r: &TraceRecord| -> Result<(Graph, Orientation)> {
            let g = parse_graph6(&r.graph6)?;
            let o = Orientation::from_digraph_text(&r.digraph)?;
            if o.order() != g.order() {
                return Err(Error::argument(
                    "digraph and graph6 disagree on the vertex count",
                ));
            }
            Ok((g, o))
        };
        let (first, rest) = records
            .split_first()
            .ok_or_else(|| Error::argument("trace has no input record"))?;
        if first.op != Operation::Input {
            return Err(Error::argument("first trace record must be the input"));
        }
        let (g, start) = decode(first)?;
        let start = Orientation::from_out_rows(g, start.out_rows().to_vec())?;
        let mut steps = Vec::with_capacity(rest.len());
        for r in rest {
            let (graph, o) = decode(r)?;
            // the arcs must cover exactly the graph6 edges
            let orientation = Orientation::from_out_rows(graph.clone(), o.out_rows().to_vec())?;
            steps.push(TransformStep {
                op: r.op.clone(),
                graph,
                orientation,
            });
        }
        Ok(TransformTrace { start, steps })
    }

    pub fn from_json(text: &str) -> Result<TransformTrace> {
        let records: Vec<TraceRecord> =
            serde_json::from_str(text).map_err(|e| Error::format(0, format!("trace JSON: {e}")))?;
        TransformTrace::from_records(&records)
    }
}

fn require_semi_transitive(o: &Orientation) -> Result<()> {
    if is_semi_transitive(o) {
        Ok(())
    } else {
        Err(Error::precondition("orientation is not semi-transitive"))
    }
}

/// Orientation of `g` that keeps the arcs of `o` on edges still present and
/// adds the arcs in `extra`.
fn carry_over(o: &Orientation, g: &Graph, extra: &[(usize, usize)]) -> Result<Orientation> {
    let mut out: Vec<u64> = (0..g.order())
        .map(|v| {
            if v < o.order() {
                o.out(v) & g.neighbors(v)
            } else {
                0
            }
        })
        .collect();
    for &(a, b) in extra {
        out[a] |= bit(b);
    }
    Orientation::from_out_rows(g.clone(), out)
}

/// Result of [`deletable_edge`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deletion {
    pub edge: Edge,
    pub orientation: Orientation,
    pub certificate: DeletionRule,
}

/// Picks an edge whose removal keeps `o` semi-transitive: the smallest sink
/// with an incoming arc, a maximal clique grown from it by ascending index,
/// and the clique's source.
pub fn deletable_edge(o: &Orientation) -> Result<Deletion> {
    require_semi_transitive(o)?;
    let g = o.base();
    let sink = bits::iter(o.sinks())
        .find(|&v| o.incoming(v) != 0)
        .ok_or_else(|| Error::precondition("graph has no edges"))?;
    let mut clique = bit(sink);
    for v in bits::iter(g.neighbors(sink)) {
        if g.neighbors(v) & clique == clique {
            clique |= bit(v);
        }
    }
    let source = bits::iter(clique)
        .find(|&v| o.incoming(v) & clique == 0)
        .expect("acyclic tournament has a source");
    let edge = Edge::new(source, sink)?;
    let orientation = carry_over(o, &g.edit(&Edit::DeleteEdge(edge))?, &[])?;
    assert!(
        is_semi_transitive(&orientation),
        "deleting {edge} broke semi-transitivity"
    );
    Ok(Deletion {
        edge,
        orientation,
        certificate: DeletionRule::SinkClique {
            sink,
            source,
            clique: bits::iter(clique).collect(),
        },
    })
}

/// Removes `e`, which must lie in no 4-clique.
pub fn safe_delete_k4free(o: &Orientation, e: Edge) -> Result<Orientation> {
    require_semi_transitive(o)?;
    let g = o.base();
    if !g.has_edge(e.u, e.v) {
        return Err(Error::argument(format!("{e} is not an edge")));
    }
    let common = g.neighbors(e.u) & g.neighbors(e.v);
    for a in bits::iter(common) {
        if let Some(b) = bits::iter(common & g.neighbors(a)).next() {
            let mut k4 = [e.u, e.v, a, b];
            k4.sort_unstable();
            return Err(Error::precondition(format!(
                "edge {e} lies in the 4-clique {k4:?}"
            )));
        }
    }
    let orientation = carry_over(o, &g.edit(&Edit::DeleteEdge(e))?, &[])?;
    assert!(
        is_semi_transitive(&orientation),
        "deleting {e} broke semi-transitivity"
    );
    Ok(orientation)
}

/// Non-adjacent `u`, `w` on levels `i < k - 1` with a common neighbour on a
/// level strictly between, minimizing `k - i`, then `u`, then `w`; the
/// intermediate vertex is the smallest one available.
fn open_path_pair(g: &Graph, level: &[usize]) -> Option<([usize; 3], [usize; 3])> {
    let n = g.order();
    let mut best: Option<(usize, [usize; 3])> = None;
    for u in 0..n {
        let far = g.vertex_mask() & !g.neighbors(u) & !bit(u);
        for w in bits::iter(far) {
            if level[w] < level[u] + 2 {
                continue;
            }
            let span = level[w] - level[u];
            if best.is_some_and(|(s, _)| s <= span) {
                continue;
            }
            let between = bits::iter(g.neighbors(u) & g.neighbors(w))
                .find(|&v| level[u] < level[v] && level[v] < level[w]);
            if let Some(v) = between {
                best = Some((span, [u, v, w]));
            }
        }
    }
    best.map(|(_, p)| (p, [level[p[0]], level[p[1]], level[p[2]]]))
}

/// Highest-level `v` whose higher levels are complete to everything outside
/// their own level and that misses some lower vertex; pairs it with the
/// lowest-level such non-neighbour.
fn upper_complete_pair(g: &Graph, levels: &[u64], level: &[usize]) -> Option<(usize, usize)> {
    let all = g.vertex_mask();
    for k in (0..levels.len()).rev() {
        let upper_ok = levels[k + 1..]
            .iter()
            .all(|&lv| bits::iter(lv).all(|w| g.neighbors(w) == all & !lv));
        if !upper_ok {
            // the condition on higher levels only gets stronger going down
            return None;
        }
        for v in bits::iter(levels[k]) {
            let below = bits::iter(all & !g.neighbors(v))
                .filter(|&u| level[u] < k)
                .min_by_key(|&u| (level[u], u));
            if let Some(u) = below {
                return Some((u, v));
            }
        }
    }
    None
}

/// Result of [`addable_pair`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Addition {
    pub tail: usize,
    pub head: usize,
    pub orientation: Orientation,
    pub phase: AdditionPhase,
    pub certificate: AdditionRule,
}

/// Picks a missing edge and a direction for it that keeps `o`
/// semi-transitive (and transitive once `o` is).
pub fn addable_pair(o: &Orientation) -> Result<Addition> {
    require_semi_transitive(o)?;
    let g = o.base();
    if g.is_complete() {
        return Err(Error::precondition("graph is already complete"));
    }
    let partition = topological_levels(o)?;
    let level = partition.level_table(g.order());
    let phase = if !is_transitive(o) {
        AdditionPhase::SemiToComparability
    } else if !g.is_complete_multipartite() {
        AdditionPhase::ToMultipartite
    } else {
        AdditionPhase::ToComplete
    };
    let acceptable = |c: &Orientation| match phase {
        AdditionPhase::SemiToComparability => is_semi_transitive(c),
        _ => is_transitive(c) && is_semi_transitive(c),
    };

    let proposal = match phase {
        AdditionPhase::SemiToComparability => open_path_pair(g, &level).map(|(p, l)| {
            (
                p[0],
                p[2],
                AdditionRule::OpenPath {
                    via: p[1],
                    levels: l,
                },
            )
        }),
        AdditionPhase::ToMultipartite => {
            upper_complete_pair(g, &partition.levels, &level).map(|(u, v)| {
                (
                    u,
                    v,
                    AdditionRule::UpperComplete {
                        levels: [level[u], level[v]],
                    },
                )
            })
        }
        AdditionPhase::ToComplete => partition
            .levels
            .iter()
            .position(|l| l.count_ones() >= 2)
            .map(|z| {
                let mut it = bits::iter(partition.levels[z]);
                let (u, v) = (it.next().unwrap(), it.next().unwrap());
                (u, v, AdditionRule::SameLevel { level: z })
            }),
    };
    if let Some((tail, head, certificate)) = proposal {
        let orientation = o.with_arc(tail, head)?;
        if acceptable(&orientation) {
            return Ok(Addition {
                tail,
                head,
                orientation,
                phase,
                certificate,
            });
        }
    }

    for u in 0..g.order() {
        for w in bits::iter(g.vertex_mask() & !g.neighbors(u) & !bits::low_mask(u + 1)) {
            for (tail, head) in [(u, w), (w, u)] {
                let orientation = o.with_arc(tail, head)?;
                if acceptable(&orientation) {
                    return Ok(Addition {
                        tail,
                        head,
                        orientation,
                        phase,
                        certificate: AdditionRule::Exhaustive,
                    });
                }
            }
        }
    }
    panic!("no missing edge extends the orientation; this contradicts edge addition being safe")
}

/// Adds edges until the graph is complete.
pub fn add_to_complete(o: &Orientation) -> Result<TransformTrace> {
    require_semi_transitive(o)?;
    let mut trace = TransformTrace::new(o.clone());
    while !trace.last().base().is_complete() {
        let a = addable_pair(trace.last())?;
        trace.push(
            Operation::AddEdge {
                tail: a.tail,
                head: a.head,
                phase: a.phase,
                certificate: a.certificate,
            },
            a.orientation,
        );
    }
    Ok(trace)
}

/// Deletes edges until none remain.
pub fn delete_to_empty(o: &Orientation) -> Result<TransformTrace> {
    require_semi_transitive(o)?;
    let mut trace = TransformTrace::new(o.clone());
    while trace.last().base().edge_count() > 0 {
        let d = deletable_edge(trace.last())?;
        trace.push(
            Operation::DeleteEdge {
                edge: d.edge,
                certificate: d.certificate,
            },
            d.orientation,
        );
    }
    Ok(trace)
}

/// Result of [`liftable_path`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub path: [usize; 3],
    pub added: Option<(usize, usize)>,
    pub orientation: Orientation,
    pub certificate: LiftRule,
}

/// Directed pair `(tail, head)`.
type Arc = (usize, usize);

fn lift_with(
    o: &Orientation,
    path: [usize; 3],
    arc: Option<Arc>,
) -> Result<Option<(Orientation, Option<Arc>)>> {
    let [u, v, w] = path;
    let lifted = o.base().edit(&Edit::LiftPath(u, v, w))?;
    let added = if o.base().has_edge(u, w) { None } else { arc };
    let extra: Vec<_> = added.into_iter().collect();
    let orientation = carry_over(o, &lifted, &extra)?;
    Ok(is_semi_transitive(&orientation).then_some((orientation, added)))
}

/// Picks a 2-path `u v w` whose lift keeps `o` semi-transitive on the
/// surviving edges, orienting a new `uw` edge as needed.
pub fn liftable_path(o: &Orientation) -> Result<Lift> {
    require_semi_transitive(o)?;
    let g = o.base();
    if g.max_degree() < 2 {
        return Err(Error::precondition("no vertex has degree 2 or more"));
    }
    let partition = topological_levels(o)?;
    let level = partition.level_table(g.order());
    let first_path = || {
        (0..g.order()).find_map(|v| {
            let mut nb = bits::iter(g.neighbors(v));
            match (nb.next(), nb.next()) {
                (Some(u), Some(w)) => Some([u, v, w]),
                _ => None,
            }
        })
    };

    let proposal = if partition.len() >= 3 {
        open_path_pair(g, &level).map(|(p, l)| (p, (p[0], p[2]), LiftRule::OpenPath { levels: l }))
    } else {
        first_path().map(|p| (p, (p[0], p[2]), LiftRule::TwoLevels))
    };
    if let Some((path, arc, certificate)) = proposal {
        if let Some((orientation, added)) = lift_with(o, path, Some(arc))? {
            return Ok(Lift {
                path,
                added,
                orientation,
                certificate,
            });
        }
    }

    for v in 0..g.order() {
        let nb: Vec<usize> = bits::iter(g.neighbors(v)).collect();
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                for arc in [(u, w), (w, u)] {
                    if let Some((orientation, added)) = lift_with(o, [u, v, w], Some(arc))? {
                        return Ok(Lift {
                            path: [u, v, w],
                            added,
                            orientation,
                            certificate: LiftRule::Exhaustive,
                        });
                    }
                }
            }
        }
    }
    panic!("no 2-path lift extends the orientation; this contradicts lifting being safe")
}

/// Lifts 2-paths until every vertex has degree at most one.
pub fn lift_to_matching(o: &Orientation) -> Result<TransformTrace> {
    require_semi_transitive(o)?;
    let mut trace = TransformTrace::new(o.clone());
    while trace.last().base().max_degree() >= 2 {
        let l = liftable_path(trace.last())?;
        trace.push(
            Operation::LiftPath {
                path: l.path,
                added: l.added,
                certificate: l.certificate,
            },
            l.orientation,
        );
    }
    Ok(trace)
}

/// Extends `o`, a semi-transitive orientation of `g - e`, to `g` with `e`
/// replaced by a path through `t` new vertices, and reports which path
/// orientation worked.
pub fn subdivision_extension(
    g: &Graph,
    e: Edge,
    o: &Orientation,
    t: usize,
) -> Result<(Orientation, SubdivisionStrategy)> {
    let expected = g.edit(&Edit::DeleteEdge(e))?;
    if o.base() != &expected {
        return Err(Error::argument(format!(
            "orientation is not on the graph with {e} removed"
        )));
    }
    require_semi_transitive(o)?;
    let sub = g.edit(&Edit::SubdivideEdge(e, t))?;
    let n = g.order();
    let (x, y) = (e.u, e.v);
    let chain: Vec<usize> = (n..n + t).collect();

    let mut plans = Vec::new();
    let mut a = vec![(chain[0], x)];
    a.extend(chain.windows(2).map(|p| (p[0], p[1])));
    a.push((chain[t - 1], y));
    plans.push((SubdivisionStrategy::SourceSplit, a));
    let mut b = vec![(chain[0], x)];
    b.extend(chain.windows(2).map(|p| (p[1], p[0])));
    b.push((y, chain[t - 1]));
    plans.push((SubdivisionStrategy::TowardFirst, b));
    if t == 1 {
        plans.push((
            SubdivisionStrategy::Through,
            vec![(x, chain[0]), (chain[0], y)],
        ));
    }

    for (strategy, arcs) in plans {
        let candidate = carry_over(o, &sub, &arcs)?;
        if is_semi_transitive(&candidate) {
            return Ok((candidate, strategy));
        }
    }
    panic!("no path orientation extends the orientation; this contradicts subdivision being safe")
}

/// Orientation of `g` with `e` subdivided `t` times that restricts to `o`.
pub fn extend_to_subdivision(g: &Graph, e: Edge, o: &Orientation, t: usize) -> Result<Orientation> {
    subdivision_extension(g, e, o, t).map(|(o, _)| o)
}

fn certificate_holds(prev: &Orientation, op: &Operation, next: &Orientation) -> bool {
    match op {
        Operation::Input => false,
        Operation::DeleteEdge { edge, certificate } => match certificate {
            DeletionRule::K4Free => {
                let g = prev.base();
                let common = g.neighbors(edge.u) & g.neighbors(edge.v);
                bits::iter(common).all(|a| g.neighbors(a) & common == 0)
            }
            DeletionRule::SinkClique {
                sink,
                source,
                clique,
            } => {
                let g = prev.base();
                if clique.iter().any(|&v| v >= g.order()) {
                    return false;
                }
                let set = clique.iter().fold(0u64, |s, &v| s | bit(v));
                let maximal =
                    bits::iter(g.vertex_mask() & !set).all(|x| g.neighbors(x) & set != set);
                *edge
                    == Edge {
                        u: (*source).min(*sink),
                        v: (*source).max(*sink),
                    }
                    && contains(set, *sink)
                    && contains(set, *source)
                    && g.is_clique(set)
                    && maximal
                    && prev.out(*sink) == 0
                    && prev.incoming(*source) & set == 0
            }
        },
        Operation::AddEdge {
            tail, head, phase, ..
        } => {
            next.has_arc(*tail, *head)
                && (*phase == AdditionPhase::SemiToComparability || is_transitive(next))
        }
        Operation::LiftPath { path, added, .. } => match *added {
            Some((a, b)) => {
                let ends = (a == path[0] && b == path[2]) || (a == path[2] && b == path[0]);
                ends && !prev.base().has_edge(a, b) && next.has_arc(a, b)
            }
            None => prev.base().has_edge(path[0], path[2]),
        },
    }
}

/// Re-checks every step: the declared edit maps the previous graph to this
/// one, the orientation matches the graph, is semi-transitive, agrees with
/// the previous orientation on shared edges, and the certificate holds.
pub fn validate_trace(tr: &TransformTrace) -> bool {
    if !is_semi_transitive(&tr.start) {
        return false;
    }
    let mut prev = &tr.start;
    for step in &tr.steps {
        let Some(edit) = step.op.edit() else {
            return false;
        };
        let ok = prev.base().edit(&edit).is_ok_and(|g| g == step.graph)
            && step.orientation.base() == &step.graph
            && is_semi_transitive(&step.orientation)
            && step.orientation.agrees_with(prev)
            && certificate_holds(prev, &step.op, &step.orientation);
        if !ok {
            return false;
        }
        prev = &step.orientation;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::solver::find_semi_transitive_orientation;

    fn transitive(g: Graph) -> Orientation {
        let order: Vec<usize> = (0..g.order()).collect();
        Orientation::from_order(g, &order).unwrap()
    }

    /// W5 plus the chord between two rim neighbours of vertex 0.
    fn wheel_with_chord() -> Graph {
        let w5 = generate(Family::Wheel(5)).unwrap();
        w5.edit(&Edit::AddEdge(1, 4)).unwrap()
    }

    #[test]
    fn deletion_examples() {
        let k4 = transitive(generate(Family::Complete(4)).unwrap());
        let d = deletable_edge(&k4).unwrap();
        assert_eq!(d.edge, Edge { u: 0, v: 3 });
        assert_eq!(
            d.certificate,
            DeletionRule::SinkClique {
                sink: 3,
                source: 0,
                clique: vec![0, 1, 2, 3]
            }
        );

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = deletable_edge(&transitive(star)).unwrap();
        assert_eq!(d.edge, Edge { u: 0, v: 1 });

        let empty = transitive(Graph::new(3).unwrap());
        assert!(matches!(
            deletable_edge(&empty),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn k4_free_deletion() {
        let k3 = transitive(generate(Family::Complete(3)).unwrap());
        let o = safe_delete_k4free(&k3, Edge { u: 0, v: 2 }).unwrap();
        assert_eq!(o.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let g = wheel_with_chord();
        let o = find_semi_transitive_orientation(&g).unwrap().unwrap();
        let err = safe_delete_k4free(&o, Edge { u: 1, v: 4 }).unwrap_err();
        assert_eq!(
            err,
            Error::precondition("edge 1-4 lies in the 4-clique [0, 1, 4, 5]")
        );
    }

    #[test]
    fn addition_examples() {
        let p3 = transitive(generate(Family::Path(3)).unwrap());
        let a = addable_pair(&p3).unwrap();
        assert_eq!(
            (a.tail, a.head, a.phase),
            (0, 2, AdditionPhase::SemiToComparability)
        );

        // C4 as K_{2,2}: parts {0,2} and {1,3}
        let c4 = generate(Family::Cycle(4)).unwrap();
        let o = Orientation::from_order(c4, &[0, 2, 1, 3]).unwrap();
        let a = addable_pair(&o).unwrap();
        assert_eq!((a.tail, a.head, a.phase), (0, 2, AdditionPhase::ToComplete));
        assert!(is_transitive(&a.orientation));

        let diamond = generate(Family::Diamond).unwrap();
        let o = Orientation::from_order(diamond, &[0, 1, 3, 2]).unwrap();
        let a = addable_pair(&o).unwrap();
        assert_eq!((a.tail, a.head, a.phase), (1, 3, AdditionPhase::ToComplete));
        assert!(a.orientation.base().is_complete());

        let k3 = transitive(generate(Family::Complete(3)).unwrap());
        assert!(matches!(addable_pair(&k3), Err(Error::Precondition(_))));
    }

    #[test]
    fn multipartite_phase() {
        // P4 0-1-2-3 with a transitive orientation is not complete multipartite
        let p4 = generate(Family::Path(4)).unwrap();
        let o = Orientation::from_arcs(p4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
        let a = addable_pair(&o).unwrap();
        assert_eq!(a.phase, AdditionPhase::ToMultipartite);
        assert!(matches!(a.certificate, AdditionRule::UpperComplete { .. }));
        assert!(is_transitive(&a.orientation));
    }

    #[test]
    fn pipelines_on_small_inputs() {
        let e3 = transitive(Graph::new(3).unwrap());
        let tr = add_to_complete(&e3).unwrap();
        assert_eq!(tr.len(), 3);
        assert!(is_transitive(tr.last()));
        assert!(validate_trace(&tr));

        let k4 = transitive(generate(Family::Complete(4)).unwrap());
        assert!(add_to_complete(&k4).unwrap().is_empty());

        let k3 = transitive(generate(Family::Complete(3)).unwrap());
        let tr = delete_to_empty(&k3).unwrap();
        assert_eq!(tr.len(), 3);
        assert!(validate_trace(&tr));

        let g = wheel_with_chord();
        let o = find_semi_transitive_orientation(&g).unwrap().unwrap();
        let tr = delete_to_empty(&o).unwrap();
        assert_eq!(tr.len(), 11);
        assert!(validate_trace(&tr));

        let p3 = transitive(generate(Family::Path(3)).unwrap());
        let tr = lift_to_matching(&p3).unwrap();
        assert_eq!(tr.len(), 1);
        assert_eq!(tr.last().arcs().collect::<Vec<_>>(), vec![(0, 2)]);

        let matching = transitive(Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
        assert!(lift_to_matching(&matching).unwrap().is_empty());
    }

    #[test]
    fn lift_cases() {
        let c4 = generate(Family::Cycle(4)).unwrap();
        let o = Orientation::from_order(c4, &[0, 2, 1, 3]).unwrap();
        let l = liftable_path(&o).unwrap();
        assert_eq!(l.certificate, LiftRule::TwoLevels);
        assert_eq!(l.orientation.base().edge_count(), 3);

        let k4 = transitive(generate(Family::Complete(4)).unwrap());
        let l = liftable_path(&k4).unwrap();
        assert_eq!(l.certificate, LiftRule::Exhaustive);
        assert_eq!(l.added, None);

        let matching = transitive(Graph::from_edges(2, &[(0, 1)]).unwrap());
        assert!(matches!(
            liftable_path(&matching),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn subdivision_examples() {
        let k3 = generate(Family::Complete(3)).unwrap();
        let e = Edge { u: 0, v: 1 };
        let rest = transitive(k3.edit(&Edit::DeleteEdge(e)).unwrap());
        for t in [1, 2] {
            let o = extend_to_subdivision(&k3, e, &rest, t).unwrap();
            assert_eq!(o.order(), 3 + t);
            assert!(o.agrees_with(&rest));
            assert!(is_semi_transitive(&o));
        }

        let k4 = generate(Family::Complete(4)).unwrap();
        for e in k4.edges() {
            let rest = k4.edit(&Edit::DeleteEdge(e)).unwrap();
            let o = find_semi_transitive_orientation(&rest).unwrap().unwrap();
            assert!(extend_to_subdivision(&k4, e, &o, 1).is_ok());
        }

        assert!(matches!(
            extend_to_subdivision(&k3, e, &transitive(k3.clone()), 1),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn tampered_traces_fail() {
        let k3 = transitive(generate(Family::Complete(3)).unwrap());
        let mut tr = delete_to_empty(&k3).unwrap();
        assert!(validate_trace(&TransformTrace::new(k3.clone())));
        let first = &mut tr.steps[0];
        first.orientation = first.orientation.reversed();
        assert!(!validate_trace(&tr));
    }

    #[test]
    fn json_round_trip() {
        let c5 = generate(Family::Cycle(5)).unwrap();
        let o = find_semi_transitive_orientation(&c5).unwrap().unwrap();
        let tr = add_to_complete(&o).unwrap();
        assert_eq!(tr.len(), 5);
        let json = tr.to_json().unwrap();
        let back = TransformTrace::from_json(&json).unwrap();
        assert_eq!(back, tr);
        assert!(validate_trace(&back));
        assert!(json.contains("\"kind\": \"input\""));
    }
}
