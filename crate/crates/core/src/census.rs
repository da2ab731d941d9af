//! Exhaustive census of non-orientable labeled graphs on a fixed vertex count.
//!
//! Every labeled graph is decoded from its pair index, optionally skipped when
//! disconnected, screened by the neighbourhood filter and then searched. Only
//! the non-orientable hits are canonicalized. Workers pull fixed-size index
//! chunks from a shared counter; the merged class list is sorted by canonical
//! code, so the report does not depend on the worker count.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::solver::Solver;

/// Largest vertex count the census accepts.
pub const MAX_CENSUS_ORDER: usize = 7;
pub const REPORT_SCHEMA: u32 = 1;
const CHUNK: u64 = 1 << 12;

/// One isomorphism class of non-orientable graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusClass {
    pub code: CanonicalCode,
    /// graph6 of the canonically labeled representative.
    pub graph6: String,
    pub edges: usize,
    pub connected: bool,
    /// Number of labeled graphs in the class.
    pub labeled: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub schema: u32,
    pub n: usize,
    pub connected_only: bool,
    /// All labeled graphs on `n` vertices, `2^(n choose 2)`.
    pub total_labeled: u64,
    /// Labeled graphs that went through the filter and solver.
    pub examined_labeled: u64,
    /// Labeled graphs rejected by the neighbourhood filter alone.
    pub filtered_labeled: u64,
    pub non_orientable_labeled: u64,
    pub non_orientable_connected_classes: usize,
    /// Duplicate-free, sorted by canonical code.
    pub non_orientable_iso_classes: Vec<CensusClass>,
    /// Wall-clock time; kept out of the JSON so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CensusReport {
    pub fn class_count(&self) -> usize {
        self.non_orientable_iso_classes.len()
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Default)]
struct Tally {
    examined: u64,
    filtered: u64,
    non_orientable: u64,
    classes: BTreeMap<CanonicalCode, u64>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.examined += other.examined;
        self.filtered += other.filtered;
        self.non_orientable += other.non_orientable;
        for (code, count) in other.classes {
            *self.classes.entry(code).or_default() += count;
        }
    }
}

fn scan(
    n: usize,
    range: std::ops::Range<u64>,
    connected_only: bool,
    solver: &Solver,
    tally: &mut Tally,
) -> Result<()> {
    for index in range {
        let g = Graph::from_pair_index(n, index);
        if connected_only && !g.is_connected() {
            continue;
        }
        tally.examined += 1;
        let non_orientable = if solver.neighborhood_filter(&g)?.is_some() {
            tally.filtered += 1;
            true
        } else {
            solver.find_semi_transitive_orientation(&g)?.is_none()
        };
        if non_orientable {
            tally.non_orientable += 1;
            *tally.classes.entry(canonical_form(&g)?).or_default() += 1;
        }
    }
    Ok(())
}

/// Runs the census on `n` vertices with `workers` threads (at least one).
pub fn run_census(
    n: usize,
    connected_only: bool,
    workers: usize,
    solver: &Solver,
) -> Result<CensusReport> {
    if n > MAX_CENSUS_ORDER {
        return Err(Error::UnsupportedSize(format!(
            "census supports at most {MAX_CENSUS_ORDER} vertices, got {n}"
        )));
    }
    let start = Instant::now();
    let pairs = n * n.saturating_sub(1) / 2;
    let total = 1u64 << pairs;
    let workers = workers.max(1);

    let next = AtomicU64::new(0);
    let merged = Mutex::new(Tally::default());
    let first_error: Mutex<Option<Error>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let mut local = Tally::default();
                loop {
                    if first_error.lock().unwrap().is_some() {
                        break;
                    }
                    let lo = next.fetch_add(CHUNK, Ordering::Relaxed);
                    if lo >= total {
                        break;
                    }
                    let hi = (lo + CHUNK).min(total);
                    if let Err(e) = scan(n, lo..hi, connected_only, solver, &mut local) {
                        first_error.lock().unwrap().get_or_insert(e);
                        break;
                    }
                }
                merged.lock().unwrap().merge(local);
            });
        }
    });
    if let Some(e) = first_error.into_inner().unwrap() {
        return Err(e);
    }
    let tally = merged.into_inner().unwrap();

    let classes: Vec<CensusClass> = tally
        .classes
        .into_iter()
        .map(|(code, labeled)| {
            let g = code.to_graph();
            CensusClass {
                code,
                graph6: write_graph6(&g).expect("census graphs are small"),
                edges: g.edge_count(),
                connected: g.is_connected(),
                labeled,
            }
        })
        .collect();
    Ok(CensusReport {
        schema: REPORT_SCHEMA,
        n,
        connected_only,
        total_labeled: total,
        examined_labeled: tally.examined,
        filtered_labeled: tally.filtered,
        non_orientable_labeled: tally.non_orientable,
        non_orientable_connected_classes: classes.iter().filter(|c| c.connected).count(),
        non_orientable_iso_classes: classes,
        elapsed: start.elapsed(),
    })
}
