//! Canonical forms for small graphs by exhaustive relabeling.
//!
//! Only relabelings that list vertices by non-increasing degree are considered;
//! that set is isomorphism-invariant, so its minimum code is still canonical.
//! Codes are compared column by column, and a branch is abandoned as soon as
//! its prefix exceeds the best code found so far.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 8;

/// Upper-triangle adjacency bits of the minimal relabeling, in graph6 column
/// order with the first pair as the most significant bit.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub n: u8,
    pub bits: u64,
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = pair_count(self.n as usize);
        write!(f, "{}:{:0width$b}", self.n, self.bits, width = pairs)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl CanonicalCode {
    /// The canonically labeled graph this code describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let total = pair_count(n);
        let mut g = Graph::new(n).expect("code order is small");
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.bits >> (total - 1 - k)) & 1 == 1 {
                    g.insert(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Degree class required at each position.
    slot_degree: Vec<usize>,
    /// `perm[pos]` = original vertex placed at `pos`.
    perm: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    /// `prefix` holds the code bits for columns `1..pos`.
    fn place(&mut self, pos: usize, used: u64, prefix: u64) {
        if pos == self.n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => prefix < *b,
            };
            if better {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        let total = pair_count(self.n);
        for v in 0..self.n {
            if bits::contains(used, v) || self.g.degree(v) != self.slot_degree[pos] {
                continue;
            }
            // column `pos`: pairs (0,pos), (1,pos), ..., (pos-1,pos)
            let mut col = 0u64;
            for i in 0..pos {
                col = (col << 1) | self.g.has_edge(self.perm[i], v) as u64;
            }
            let shift = total - pair_count(pos + 1);
            let next = prefix | (col << shift);
            if let Some((b, _)) = &self.best {
                let mask = ((1u64 << total) - 1) & !((1u64 << shift) - 1);
                if next & mask > b & mask {
                    continue;
                }
            }
            self.perm[pos] = v;
            self.place(pos + 1, used | bit(v), next);
        }
    }
}

/// Canonical code of `g` together with the relabeling achieving it
/// (`perm[old] = new`).
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::UnsupportedSize(format!(
            "canonical form supports at most {MAX_CANON_ORDER} vertices, got {n}"
        )));
    }
    let mut slot_degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    slot_degree.sort_unstable_by(|a, b| b.cmp(a));
    let mut s = Search {
        g,
        n,
        slot_degree,
        perm: vec![0; n],
        best: None,
    };
    s.place(0, 0, 0);
    let (code, order) = s.best.expect("at least one relabeling exists");
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    Ok((
        CanonicalCode {
            n: n as u8,
            bits: code,
        },
        perm,
    ))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// `g` relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_form(g).map(|c| c.to_graph())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
