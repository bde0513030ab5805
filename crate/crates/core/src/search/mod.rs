//! Exact `ex_P(n, H)` for small `n`, enumeration of `H`-free planar graphs,
//! and the lemma harness built on top of them.
//!
//! Two strategies compute the same value:
//!
//! - [`Strategy::Augment`] grows every isomorphism class of `H`-free planar
//!   graphs one edge at a time, starting from the edgeless graph. Both
//!   properties survive edge deletion, so every class with `e + 1` edges is a
//!   child of a class with `e` edges. The last nonempty level is the answer.
//! - [`Strategy::Sweep`] walks labeled edge sets of size `e` from `3n - 6`
//!   downward and stops at the first size with a planar `H`-free member. Only
//!   labelings with non-increasing degrees are visited.

mod harness;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

pub use harness::{lemma_harness, HarnessReport, HarnessViolation, LemmaId, ObservedBlock};

use crate::canon::canonical_graph;
use crate::embedding::{all_rotation_systems, is_planar, planarity_embed, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{is_free, Pattern};

/// Largest order [`exact_ex_p`] accepts.
pub const SEARCH_MAX: usize = 9;
/// Largest order the labeled sweep accepts.
pub const SWEEP_MAX: usize = 8;
/// Largest order [`enumerate_free_planar`] accepts, and the bound for
/// [`Embeddings::All`].
pub const ENUMERATE_MAX: usize = 7;
pub const ENUMERATE_ALL_MAX: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Augment,
    Sweep,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Augment => "augment",
            Strategy::Sweep => "sweep",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "augment" => Ok(Strategy::Augment),
            "sweep" => Ok(Strategy::Sweep),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    pub strategy: Strategy,
    /// Wall-clock limit. On expiry the search fails with
    /// [`Error::BudgetExhausted`] carrying what is known.
    pub time_limit: Option<Duration>,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub n: usize,
    pub pattern: Pattern,
    pub value: usize,
    /// A planar `pattern`-free graph with `value` edges.
    pub witness: Graph,
    /// Candidate graphs tested for planarity and freeness.
    pub graphs_examined: u64,
    /// Isomorphism classes per edge count, `classes[e]`. Empty for the sweep.
    pub classes: Vec<usize>,
    pub elapsed: Duration,
    pub strategy: Strategy,
}

struct Deadline {
    at: Option<Instant>,
    hit: AtomicBool,
}

impl Deadline {
    fn new(limit: Option<Duration>) -> Self {
        Deadline { at: limit.map(|d| Instant::now() + d), hit: AtomicBool::new(false) }
    }

    fn expired(&self) -> bool {
        if self.hit.load(Ordering::Relaxed) {
            return true;
        }
        let now_over = self.at.is_some_and(|at| Instant::now() >= at);
        if now_over {
            self.hit.store(true, Ordering::Relaxed);
        }
        now_over
    }
}

fn max_planar_edges(n: usize) -> usize {
    match n {
        0 | 1 => 0,
        2 => 1,
        _ => 3 * n - 6,
    }
}

fn admissible(g: &Graph, pattern: Option<&Pattern>) -> Result<bool> {
    if g.m() > max_planar_edges(g.n()) || !is_planar(g) {
        return Ok(false);
    }
    match pattern {
        Some(p) => is_free(g, p),
        None => Ok(true),
    }
}

struct Levels {
    /// Canonical representatives, sorted, per edge count.
    levels: Vec<Vec<Graph>>,
    examined: u64,
}

/// All isomorphism classes of planar (and `pattern`-free) graphs on `n`
/// vertices, grouped by edge count.
fn free_planar_levels(n: usize, pattern: Option<&Pattern>, deadline: &Deadline) -> Result<Levels> {
    let examined = AtomicU64::new(0);
    let mut levels = vec![vec![Graph::new(n)?]];
    loop {
        let current = levels.last().expect("level 0 exists");
        let children: Vec<Vec<Graph>> = current
            .par_iter()
            .map(|g| -> Result<Vec<Graph>> {
                if deadline.expired() {
                    return Ok(Vec::new());
                }
                let mut out = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if g.has_edge(u, v) {
                            continue;
                        }
                        let h = g.with_edge(u, v);
                        examined.fetch_add(1, Ordering::Relaxed);
                        if admissible(&h, pattern)? {
                            out.push(canonical_graph(&h)?);
                        }
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        if deadline.expired() {
            let lower = levels.len() - 1;
            return Err(Error::BudgetExhausted { lower, upper: max_planar_edges(n).max(lower) });
        }
        let next: BTreeSet<Graph> = children.into_iter().flatten().collect();
        if next.is_empty() {
            break;
        }
        levels.push(next.into_iter().collect());
    }
    Ok(Levels { levels, examined: examined.into_inner() })
}

fn check_search_order(n: usize, max: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::OrderTooSmall { what: "exact_ex_p", n, min: 3 });
    }
    if n > max {
        return Err(Error::SizeBound { what: "exact_ex_p", n, max });
    }
    Ok(())
}

/// The largest edge count of a planar `pattern`-free graph on `n` vertices,
/// with a witness. Deterministic in `(n, pattern, strategy)`.
pub fn exact_ex_p(n: usize, pattern: &Pattern, opts: &SearchOptions) -> Result<SearchResult> {
    let start = Instant::now();
    let deadline = Deadline::new(opts.time_limit);
    let (value, witness, examined, classes) = match opts.strategy {
        Strategy::Augment => {
            check_search_order(n, SEARCH_MAX)?;
            let Levels { levels, examined } = free_planar_levels(n, Some(pattern), &deadline)?;
            let classes = levels.iter().map(Vec::len).collect();
            let top = levels.last().expect("nonempty");
            (levels.len() - 1, top[0].clone(), examined, classes)
        }
        Strategy::Sweep => {
            check_search_order(n, SWEEP_MAX)?;
            let (value, witness, examined) = sweep(n, pattern, &deadline)?;
            (value, witness, examined, Vec::new())
        }
    };
    Ok(SearchResult {
        n,
        pattern: *pattern,
        value,
        witness,
        graphs_examined: examined,
        classes,
        elapsed: start.elapsed(),
        strategy: opts.strategy,
    })
}

fn sweep(n: usize, pattern: &Pattern, deadline: &Deadline) -> Result<(usize, Graph, u64)> {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut examined = 0;
    for e in (0..=max_planar_edges(n)).rev() {
        if e == 0 {
            return Ok((0, Graph::new(n)?, examined));
        }
        // one partition per largest edge index
        let parts: Vec<(Option<Graph>, u64)> = (e - 1..edges.len())
            .into_par_iter()
            .map(|last| {
                let mut s =
                    SweepState { n, edges: &edges, pattern, last, g: Graph::new(n).expect("n checked"), examined: 0, deadline };
                let found = s.rec(0, e - 1);
                (found, s.examined)
            })
            .collect();
        if deadline.expired() {
            return Err(Error::BudgetExhausted { lower: 0, upper: e });
        }
        examined += parts.iter().map(|p| p.1).sum::<u64>();
        if let Some(g) = parts.into_iter().find_map(|p| p.0) {
            return Ok((e, g, examined));
        }
    }
    unreachable!("e = 0 always succeeds")
}

struct SweepState<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    pattern: &'a Pattern,
    last: usize,
    g: Graph,
    examined: u64,
    deadline: &'a Deadline,
}

impl SweepState<'_> {
    /// Decides edges `idx..last` with `need` of them still to pick, then
    /// adds edge `last`. Returns the first admissible graph in visit order.
    fn rec(&mut self, idx: usize, need: usize) -> Option<Graph> {
        if idx > 0 && self.edges[idx - 1].0 != self.edges[idx].0 {
            // every edge at vertex `k` is decided
            let k = self.edges[idx - 1].0;
            if k > 0 && self.g.degree(k) > self.g.degree(k - 1) {
                return None;
            }
        }
        if idx == self.last {
            if need > 0 {
                return None;
            }
            let (u, v) = self.edges[idx];
            let h = self.g.with_edge(u, v);
            let sorted = (1..self.n).all(|k| h.degree(k) <= h.degree(k - 1));
            if !sorted || self.deadline.expired() {
                return None;
            }
            self.examined += 1;
            return admissible(&h, Some(self.pattern)).expect("sweep orders are small").then_some(h);
        }
        if self.last - idx > need {
            if let Some(g) = self.rec(idx + 1, need) {
                return Some(g);
            }
        }
        if need > 0 {
            let (u, v) = self.edges[idx];
            self.g.add_edge(u, v).expect("fresh edge");
            let found = self.rec(idx + 1, need - 1);
            self.g.remove_edge(u, v);
            return found;
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Embeddings {
    One,
    /// Every embedding up to reflection.
    All,
}

/// Every isomorphism class of planar `pattern`-free graphs on `n` vertices
/// (all planar graphs when `pattern` is `None`), ordered by edge count, with
/// one embedding or all embeddings up to reflection.
pub fn enumerate_free_planar(
    n: usize,
    pattern: Option<&Pattern>,
    embeddings: Embeddings,
) -> Result<Vec<(Graph, RotationSystem)>> {
    let max = match embeddings {
        Embeddings::One => ENUMERATE_MAX,
        Embeddings::All => ENUMERATE_ALL_MAX,
    };
    if n > max {
        return Err(Error::SizeBound { what: "enumerate_free_planar", n, max });
    }
    let graphs = free_planar_classes(n, pattern)?;
    let per_graph: Vec<Vec<(Graph, RotationSystem)>> = graphs
        .into_par_iter()
        .map(|g| -> Result<Vec<(Graph, RotationSystem)>> {
            Ok(match embeddings {
                Embeddings::One => {
                    let rs = planarity_embed(&g).embedding().expect("class members are planar");
                    vec![(g, rs)]
                }
                Embeddings::All => all_rotation_systems(&g)?.map(|rs| (g.clone(), rs)).collect(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(per_graph.into_iter().flatten().collect())
}

/// Canonical representatives of every planar `pattern`-free class on `n`
/// vertices, ordered by edge count.
pub fn free_planar_classes(n: usize, pattern: Option<&Pattern>) -> Result<Vec<Graph>> {
    if n > SEARCH_MAX {
        return Err(Error::SizeBound { what: "free_planar_classes", n, max: SEARCH_MAX });
    }
    let levels = free_planar_levels(n, pattern, &Deadline::new(None))?;
    Ok(levels.levels.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let opts = SearchOptions::default();
        let r = exact_ex_p(4, &Pattern::C3C3, &opts).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.classes, vec![1, 1, 2, 3, 2, 1, 1]);
        assert_eq!(exact_ex_p(6, &Pattern::C3C3, &opts).unwrap().value, 11);
    }

    #[test]
    fn sweep_agrees() {
        let sweep = SearchOptions { strategy: Strategy::Sweep, time_limit: None };
        for n in 3..=6 {
            let a = exact_ex_p(n, &Pattern::C3C4, &SearchOptions::default()).unwrap();
            let b = exact_ex_p(n, &Pattern::C3C4, &sweep).unwrap();
            assert_eq!(a.value, b.value, "n={n}");
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_free_planar(3, Some(&Pattern::C3C3), Embeddings::One).unwrap().len(), 4);
        assert_eq!(enumerate_free_planar(4, Some(&Pattern::C3C3), Embeddings::One).unwrap().len(), 11);
        assert!(enumerate_free_planar(7, None, Embeddings::All).is_err());
    }

    #[test]
    fn budget_gives_bracket() {
        let opts = SearchOptions { strategy: Strategy::Augment, time_limit: Some(Duration::ZERO) };
        match exact_ex_p(8, &Pattern::C3C3, &opts) {
            Err(Error::BudgetExhausted { lower, upper }) => assert!(lower <= 15 && 15 <= upper),
            other => panic!("{other:?}"),
        }
    }
}
