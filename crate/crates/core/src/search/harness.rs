//! Runs the face-block lemma checks over every small plane graph of a class.
//!
//! Orders up to [`ENUMERATE_ALL_MAX`] use every embedding up to reflection;
//! order 7 uses the single embedding from the planarity test.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_free_planar, Embeddings, ENUMERATE_ALL_MAX, ENUMERATE_MAX};
use crate::canon::canonical_graph;
use crate::embedding::PlaneGraph;
use crate::error::{Error, Result};
use crate::face_blocks::{
    bad_block_isolation, block_report, lemma41_check, partition_eval, rv_eval, rv_identity, rv_partition, rv_sizes, Outcome,
};
use crate::graph6;
use crate::patterns::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    /// `Σ_v |R̄_v| = 3 f_3` on all planar graphs.
    GlobalF3,
    /// `f_3 <= 2n - 2m - 4` and `f_3 != 2n - 5` on all planar graphs.
    Lemma41,
    /// The partition lemma at every vertex of C3-C3-free graphs.
    Partition,
    /// The `R_v` block lemma at every vertex of C3-C3-free graphs.
    Rv,
    /// Block excess at most 3, and positive only on 5 or 6 vertices, in
    /// C3-C3-free graphs.
    FaceBlockC33,
    /// Block excess at most 3, and positive only on 5 to 7 vertices, in
    /// C3-C4-free graphs.
    FaceBlockC34,
    /// Neighbours of a bad block in C3-C4-free graphs lie on no 3-face and
    /// send one edge into it.
    BadBlockIsolation,
}

impl LemmaId {
    pub const ALL: [LemmaId; 7] = [
        LemmaId::GlobalF3,
        LemmaId::Lemma41,
        LemmaId::Partition,
        LemmaId::Rv,
        LemmaId::FaceBlockC33,
        LemmaId::FaceBlockC34,
        LemmaId::BadBlockIsolation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::GlobalF3 => "global_f3",
            LemmaId::Lemma41 => "lemma41",
            LemmaId::Partition => "partition",
            LemmaId::Rv => "rv",
            LemmaId::FaceBlockC33 => "face_block_c33",
            LemmaId::FaceBlockC34 => "face_block_c34",
            LemmaId::BadBlockIsolation => "bad_block_isolation",
        }
    }

    /// The forbidden pattern defining the host class.
    pub fn host(self) -> Option<Pattern> {
        match self {
            LemmaId::GlobalF3 | LemmaId::Lemma41 => None,
            LemmaId::Partition | LemmaId::Rv | LemmaId::FaceBlockC33 => Some(Pattern::C3C3),
            LemmaId::FaceBlockC34 | LemmaId::BadBlockIsolation => Some(Pattern::C3C4),
        }
    }

    fn n_min(self) -> usize {
        match self {
            LemmaId::Lemma41 => 3,
            _ => 1,
        }
    }

    /// Block orders allowed a positive excess.
    fn bad_orders(self) -> Option<std::ops::RangeInclusive<usize>> {
        match self {
            LemmaId::FaceBlockC33 => Some(5..=6),
            LemmaId::FaceBlockC34 => Some(5..=7),
            _ => None,
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL.into_iter().find(|l| l.name() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessViolation {
    pub graph6: String,
    /// Position of the embedding in the enumeration order of its graph.
    pub embedding: usize,
    /// `vertex 3`, `block [0, 1, 2]` or `graph`.
    pub subject: String,
    pub observed: String,
}

/// An isomorphism class of positive-excess block seen by a face-block sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObservedBlock {
    /// Canonical graph6 of the induced subgraph on the block.
    pub graph6: String,
    pub order: usize,
    pub excess: i64,
    pub occurrences: usize,
    pub catalog: Vec<&'static str>,
    pub reconstructed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub lemma: LemmaId,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs: usize,
    pub embeddings: usize,
    /// Individual predicate evaluations (per embedding, vertex or block).
    pub checks: usize,
    pub vacuous: usize,
    pub violations: Vec<HarnessViolation>,
    pub observed_blocks: Vec<ObservedBlock>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    vacuous: usize,
    violations: Vec<(String, String)>,
    blocks: Vec<(String, usize, i64, Vec<&'static str>, bool)>,
}

impl Tally {
    fn outcome(&mut self, outcome: Outcome, subject: impl FnOnce() -> String, observed: impl FnOnce() -> String) {
        self.checks += 1;
        match outcome {
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Holds => {}
            Outcome::Violated => self.violations.push((subject(), observed())),
        }
    }
}

fn run_one(lemma: LemmaId, pg: &PlaneGraph) -> Result<Tally> {
    let mut t = Tally::default();
    let g = pg.graph();
    match lemma {
        LemmaId::GlobalF3 => {
            let (sum, three_f3) = rv_identity(pg);
            let ok = if sum == three_f3 { Outcome::Holds } else { Outcome::Violated };
            t.outcome(ok, || "graph".into(), || format!("sum={sum} 3f3={three_f3}"));
        }
        LemmaId::Lemma41 => {
            let r = lemma41_check(pg)?;
            let ok = if r.pass { Outcome::Holds } else { Outcome::Violated };
            t.outcome(ok, || "graph".into(), || format!("m={} f3={} bound={}", r.m, r.f3, r.bound));
        }
        LemmaId::Partition => {
            for v in 0..g.n() {
                let Ok(rv) = rv_partition(pg, v) else { continue };
                let r = partition_eval(pg, &rv);
                t.outcome(r.outcome, || format!("vertex {v}"), || format!("parts={:?} offending={:?}", r.parts, r.offending));
            }
        }
        LemmaId::Rv => {
            let sizes = rv_sizes(pg);
            for v in 0..g.n() {
                let r = rv_eval(pg, v, &sizes);
                t.outcome(
                    r.outcome,
                    || format!("vertex {v}"),
                    || format!("rv={:?} block={:?} sum={} bound={}", r.rv_vertices, r.block, r.sum, r.bound),
                );
            }
        }
        LemmaId::FaceBlockC33 | LemmaId::FaceBlockC34 => {
            let orders = lemma.bad_orders().expect("face-block lemma");
            for b in block_report(pg) {
                let ok = b.excess <= 0 || (b.excess <= 3 && orders.contains(&b.order()));
                let outcome = if ok { Outcome::Holds } else { Outcome::Violated };
                t.outcome(outcome, || format!("block {:?}", b.vertices), || format!("order={} excess={}", b.order(), b.excess));
                if b.excess > 0 {
                    let set = b.vertices.iter().copied().collect();
                    let canon = canonical_graph(&g.induced(set).0)?;
                    t.blocks.push((graph6::encode(&canon), b.order(), b.excess, b.catalog, b.reconstructed));
                }
            }
        }
        LemmaId::BadBlockIsolation => {
            t.checks += 1;
            for v in bad_block_isolation(pg) {
                t.violations.push((
                    format!("block {:?}", v.block),
                    format!("vertex={} rv={} edges_to_block={}", v.vertex, v.rv, v.edges_to_block),
                ));
            }
        }
    }
    Ok(t)
}

/// Runs `lemma` over its host class for every order up to `n_max`.
pub fn lemma_harness(lemma: LemmaId, n_max: usize) -> Result<HarnessReport> {
    if n_max > ENUMERATE_MAX {
        return Err(Error::SizeBound { what: "lemma_harness", n: n_max, max: ENUMERATE_MAX });
    }
    let host = lemma.host();
    let mut report = HarnessReport {
        lemma,
        n_min: lemma.n_min(),
        n_max,
        graphs: 0,
        embeddings: 0,
        checks: 0,
        vacuous: 0,
        violations: Vec::new(),
        observed_blocks: Vec::new(),
    };
    let mut observed: BTreeMap<(usize, String), ObservedBlock> = BTreeMap::new();
    for n in lemma.n_min()..=n_max {
        let mode = if n <= ENUMERATE_ALL_MAX { Embeddings::All } else { Embeddings::One };
        let items = enumerate_free_planar(n, host.as_ref(), mode)?;
        let tallies: Vec<Tally> = items.par_iter().map(|(_, rs)| run_one(lemma, &rs.trace_faces())).collect::<Result<_>>()?;
        let mut prev: Option<&crate::graph::Graph> = None;
        let mut index = 0;
        for ((g, _), t) in items.iter().zip(tallies) {
            if prev == Some(g) {
                index += 1;
            } else {
                report.graphs += 1;
                index = 0;
            }
            prev = Some(g);
            report.embeddings += 1;
            report.checks += t.checks;
            report.vacuous += t.vacuous;
            let code = graph6::encode(g);
            for (subject, obs) in t.violations {
                report.violations.push(HarnessViolation { graph6: code.clone(), embedding: index, subject, observed: obs });
            }
            for (graph6, order, excess, catalog, reconstructed) in t.blocks {
                observed
                    .entry((order, graph6.clone()))
                    .and_modify(|o| {
                        o.occurrences += 1;
                        o.excess = o.excess.max(excess);
                    })
                    .or_insert(ObservedBlock { graph6, order, excess, occurrences: 1, catalog, reconstructed });
            }
        }
    }
    report.observed_blocks = observed.into_values().collect();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for l in LemmaId::ALL {
            assert_eq!(l.name().parse::<LemmaId>().unwrap(), l);
        }
        assert!("nope".parse::<LemmaId>().is_err());
    }

    #[test]
    fn global_identity_small() {
        let r = lemma_harness(LemmaId::GlobalF3, 5).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks, r.embeddings);
    }

    #[test]
    fn c33_blocks_small() {
        let r = lemma_harness(LemmaId::FaceBlockC33, 5).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        // K5-e is the only positive-excess class on at most 5 vertices
        assert_eq!(r.observed_blocks.len(), 1);
        assert_eq!((r.observed_blocks[0].order, r.observed_blocks[0].excess), (5, 3));
        assert_eq!(r.observed_blocks[0].catalog, vec!["B1_c33", "B1_c34"]);
    }
}
