//! Graph products, the search for induced W5 in products of small orientable
//! graphs, the length-3 path blowup with odd girth, and alternation graphs of
//! words.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, bit};
use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{generate, Family, Graph, MAX_VERTICES};
use crate::induced::{induced_contains, Embedding};
use crate::solver::Solver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Tensor,
    Lexicographic,
    Strong,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Tensor,
        ProductKind::Lexicographic,
        ProductKind::Strong,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Tensor => "tensor",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Strong => "strong",
        }
    }

    /// Whether `(u1, u2)` and `(v1, v2)` are adjacent, given whether each
    /// coordinate pair is equal or adjacent in its factor.
    fn adjacent(self, eq1: bool, adj1: bool, eq2: bool, adj2: bool) -> bool {
        match self {
            ProductKind::Cartesian => (eq1 && adj2) || (adj1 && eq2),
            ProductKind::Tensor => adj1 && adj2,
            ProductKind::Lexicographic => adj1 || (eq1 && adj2),
            ProductKind::Strong => (eq1 && adj2) || (adj1 && eq2) || (adj1 && adj2),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProductKind> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::argument(format!("unknown product kind `{s}`")))
    }
}

/// Product of `g` and `h`; vertex `(a, b)` gets index `a * h.order() + b`.
pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Result<Graph> {
    let (n, m) = (g.order(), h.order());
    if n * m > MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "product of orders {n} and {m} exceeds {MAX_VERTICES} vertices"
        )));
    }
    let mut p = Graph::new(n * m)?;
    for a1 in 0..n {
        for b1 in 0..m {
            for a2 in a1..n {
                let start = if a2 == a1 { b1 + 1 } else { 0 };
                for b2 in start..m {
                    let eq1 = a1 == a2;
                    let eq2 = b1 == b2;
                    if kind.adjacent(eq1, g.has_edge(a1, a2), eq2, h.has_edge(b1, b2)) {
                        p.insert(a1 * m + b1, a2 * m + b2);
                    }
                }
            }
        }
    }
    Ok(p)
}

/// Factors and embedding of an induced W5 found in a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductWitness {
    pub kind: ProductKind,
    pub g: Graph,
    pub h: Graph,
    pub product: Graph,
    /// Maps wheel vertices (rim `0..5`, hub `5`) into the product.
    pub embedding: Embedding,
}

/// Canonical representatives of connected graphs on `1..=max_order`
/// vertices, in canonical-code order.
pub fn connected_classes(max_order: usize) -> Result<Vec<Graph>> {
    let mut codes: BTreeSet<CanonicalCode> = BTreeSet::new();
    for n in 1..=max_order {
        let pairs = n * (n - 1) / 2;
        for index in 0..1u64 << pairs {
            let g = Graph::from_pair_index(n, index);
            if g.is_connected() {
                codes.insert(canonical_form(&g)?);
            }
        }
    }
    Ok(codes.into_iter().map(|c| c.to_graph()).collect())
}

/// First pair of connected orientable factors, each with at most
/// `max_order` vertices, whose product contains an induced W5. Pairs are
/// ordered by the canonical codes of the two factors.
pub fn find_w5_in_product(
    kind: ProductKind,
    max_order: usize,
    solver: &Solver,
) -> Result<Option<ProductWitness>> {
    if max_order > 5 {
        return Err(Error::UnsupportedSize(format!(
            "factor search supports at most 5 vertices, got {max_order}"
        )));
    }
    let mut factors = Vec::new();
    for g in connected_classes(max_order)? {
        if solver.find_semi_transitive_orientation(&g)?.is_some() {
            factors.push(g);
        }
    }
    let wheel = generate(Family::Wheel(5))?;
    let pairs: Vec<(usize, usize)> = (0..factors.len())
        .flat_map(|i| (0..factors.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| factors[i].order() * factors[j].order() >= wheel.order())
        .collect();
    let hit = pairs.par_iter().find_map_first(|&(i, j)| {
        let p = product(&factors[i], &factors[j], kind).ok()?;
        induced_contains(&p, &wheel).map(|embedding| (i, j, p, embedding))
    });
    Ok(hit.map(|(i, j, product, embedding)| ProductWitness {
        kind,
        g: factors[i].clone(),
        h: factors[j].clone(),
        product,
        embedding,
    }))
}

/// Adds an edge between every two vertices joined by a simple path with
/// exactly three edges.
pub fn odd_girth_blowup(h: &Graph) -> Graph {
    let mut g = h.clone();
    for x in 0..h.order() {
        for a in bits::iter(h.neighbors(x)) {
            for b in bits::iter(h.neighbors(a) & !bit(x)) {
                for y in bits::iter(h.neighbors(b) & !bit(x) & !bit(a)) {
                    g.insert(x, y);
                }
            }
        }
    }
    g
}

/// Length of a shortest odd cycle, `None` for bipartite graphs.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in bits::iter(g.neighbors(u)) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                } else if dist[v] == dist[u] {
                    // closed walk of odd length through s; the minimum over
                    // all roots is a cycle
                    let len = 2 * dist[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// A nonempty sequence of letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<char>,
}

impl Word {
    pub fn new(letters: Vec<char>) -> Result<Word> {
        if letters.is_empty() {
            return Err(Error::argument("word must be nonempty"));
        }
        let w = Word { letters };
        let size = w.alphabet().len();
        if size > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "alphabet has {size} letters, at most {MAX_VERTICES} supported"
            )));
        }
        Ok(w)
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    /// Distinct letters in sorted order; letter `i` becomes vertex `i`.
    pub fn alphabet(&self) -> Vec<char> {
        let set: BTreeSet<char> = self.letters.iter().copied().collect();
        set.into_iter().collect()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::new(s.chars().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// Graph on the sorted alphabet with `uv` an edge iff `u` and `v` alternate
/// in the word.
pub fn alternation_graph(w: &Word) -> Graph {
    let alphabet = w.alphabet();
    let index: BTreeMap<char, usize> = alphabet.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let k = alphabet.len();
    let seq: Vec<usize> = w.letters.iter().map(|c| index[c]).collect();
    let all = bits::low_mask(k);
    // `ab` is not an edge once some letter b is missing between two
    // consecutive occurrences of a
    let mut last = vec![usize::MAX; k];
    let mut broken = vec![0u64; k];
    for (pos, &a) in seq.iter().enumerate() {
        if last[a] != usize::MAX {
            let between = seq[last[a] + 1..pos].iter().fold(0u64, |m, &b| m | bit(b));
            let missing = all & !between & !bit(a);
            broken[a] |= missing;
            for b in bits::iter(missing) {
                broken[b] |= bit(a);
            }
        }
        last[a] = pos;
    }
    let rows = (0..k).map(|a| all & !bit(a) & !broken[a]).collect();
    Graph::from_rows(rows).expect("rows are symmetric")
}
