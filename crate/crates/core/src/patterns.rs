//! Forbidden configurations: cycles, linked cycle pairs, disjoint unions of
//! cycles, packings of disjoint cycles and the 4-cycle with a chord.
//!
//! A cycle is reported in normal form: it starts at its smallest vertex and
//! its second vertex is smaller than its last. Cycle lists are sorted in
//! that form, so every search below is deterministic.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Largest order accepted by [`max_disjoint_cycles`].
pub const PACKING_MAX: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CycleWitness(Vec<usize>);

impl CycleWitness {
    /// Wraps a cyclic vertex sequence, rotating and reflecting it into
    /// normal form.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        if let Some(i) = vertices.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) {
            vertices.rotate_left(i);
        }
        if vertices.len() > 2 && vertices[1] > vertices[vertices.len() - 1] {
            vertices[1..].reverse();
        }
        CycleWitness(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// A cycle of `g`: at least 3 distinct vertices, consecutive ones adjacent.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.0.len();
        k >= 3
            && self.0.iter().all(|&v| v < g.n())
            && self.vertex_set().len() == k
            && (0..k).all(|i| g.has_edge(self.0[i], self.0[(i + 1) % k]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkedPairWitness {
    pub cycle1: CycleWitness,
    pub cycle2: CycleWitness,
    /// `(a, b)` with `a` on `cycle1` and `b` on `cycle2`.
    pub bridge: (usize, usize),
}

impl LinkedPairWitness {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let (a, b) = self.bridge;
        self.cycle1.is_valid_in(g)
            && self.cycle2.is_valid_in(g)
            && !self.cycle1.vertex_set().intersects(&self.cycle2.vertex_set())
            && self.cycle1.vertex_set().contains(a)
            && self.cycle2.vertex_set().contains(b)
            && g.has_edge(a, b)
    }
}

/// A forbidden subgraph family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// Disjoint `C_k` and `C_l` joined by at least one edge. The relation is
    /// symmetric, so `Linked(3, 4)` and `Linked(4, 3)` describe the same
    /// family; [`Pattern::linked`] stores the smaller length first.
    Linked(usize, usize),
    /// Vertex-disjoint `C_k` and `C_l`, no joining edge required.
    Union(usize, usize),
    /// `t` pairwise vertex-disjoint cycles of any lengths.
    DisjointCycles(usize),
    /// A 4-cycle with a chord.
    Theta4,
}

impl Pattern {
    pub const C3C3: Pattern = Pattern::Linked(3, 3);
    pub const C3C4: Pattern = Pattern::Linked(3, 4);
    pub const TWO_C3: Pattern = Pattern::Union(3, 3);
    pub const C3_U_C4: Pattern = Pattern::Union(3, 4);

    pub fn linked(k: usize, l: usize) -> Pattern {
        Pattern::Linked(k.min(l), k.max(l))
    }

    pub fn union(k: usize, l: usize) -> Pattern {
        Pattern::Union(k.min(l), k.max(l))
    }

    /// Short command-line name (`c3c3`, `c3c4`, `2c3`, `c3uc4`, `theta4`,
    /// `3cycles`, `c5c3`, `c3uc5`, ..).
    pub fn short_name(&self) -> String {
        match *self {
            Pattern::Linked(k, l) => format!("c{k}c{l}"),
            Pattern::Union(k, l) if k == l => format!("2c{k}"),
            Pattern::Union(k, l) => format!("c{k}uc{l}"),
            Pattern::DisjointCycles(t) => format!("{t}cycles"),
            Pattern::Theta4 => "theta4".into(),
        }
    }

    /// Fewest vertices a copy of the pattern needs.
    pub fn min_order(&self) -> usize {
        match *self {
            Pattern::Linked(k, l) | Pattern::Union(k, l) => k + l,
            Pattern::DisjointCycles(t) => 3 * t,
            Pattern::Theta4 => 4,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pattern::Linked(k, l) => write!(f, "C{k}-C{l}"),
            Pattern::Union(k, l) if k == l => write!(f, "2C{k}"),
            Pattern::Union(k, l) => write!(f, "C{k}uC{l}"),
            Pattern::DisjointCycles(t) => write!(f, "{t} disjoint cycles"),
            Pattern::Theta4 => write!(f, "Theta4"),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pattern> {
        let lower = s.to_ascii_lowercase();
        let bad = || Error::UnsupportedPattern(s.to_string());
        let len = |t: &str| -> Result<usize> {
            let k: usize = t.parse().map_err(|_| bad())?;
            if k < 3 {
                return Err(bad());
            }
            Ok(k)
        };
        if lower == "theta4" {
            return Ok(Pattern::Theta4);
        }
        if let Some(t) = lower.strip_suffix("cycles") {
            let t: usize = t.parse().map_err(|_| bad())?;
            if t == 0 {
                return Err(bad());
            }
            return Ok(Pattern::DisjointCycles(t));
        }
        if let Some(k) = lower.strip_prefix("2c") {
            let k = len(k)?;
            return Ok(Pattern::Union(k, k));
        }
        let rest = lower.strip_prefix('c').ok_or_else(bad)?;
        if let Some((k, l)) = rest.split_once("uc") {
            return Ok(Pattern::union(len(k)?, len(l)?));
        }
        let (k, l) = rest.split_once('c').ok_or_else(bad)?;
        Ok(Pattern::linked(len(k)?, len(l)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Linked(LinkedPairWitness),
    Union {
        cycle1: CycleWitness,
        cycle2: CycleWitness,
    },
    Cycles {
        cycles: Vec<CycleWitness>,
    },
    /// The 4-cycle `[a, b, c, d]` with chord `a c`.
    Theta4 {
        cycle: [usize; 4],
    },
}

impl Witness {
    pub fn is_valid_in(&self, g: &Graph, p: &Pattern) -> bool {
        match (self, *p) {
            (Witness::Linked(w), Pattern::Linked(k, l)) => {
                let lens = (w.cycle1.len().min(w.cycle2.len()), w.cycle1.len().max(w.cycle2.len()));
                lens == (k.min(l), k.max(l)) && w.is_valid_in(g)
            }
            (Witness::Union { cycle1, cycle2 }, Pattern::Union(k, l)) => {
                let lens = (cycle1.len().min(cycle2.len()), cycle1.len().max(cycle2.len()));
                lens == (k.min(l), k.max(l))
                    && cycle1.is_valid_in(g)
                    && cycle2.is_valid_in(g)
                    && !cycle1.vertex_set().intersects(&cycle2.vertex_set())
            }
            (Witness::Cycles { cycles }, Pattern::DisjointCycles(t)) => {
                let mut seen = VertexSet::new();
                cycles.len() >= t
                    && cycles.iter().all(|c| {
                        let s = c.vertex_set();
                        let ok = c.is_valid_in(g) && !s.intersects(&seen);
                        seen |= s;
                        ok
                    })
            }
            (Witness::Theta4 { cycle: [a, b, c, d] }, Pattern::Theta4) => {
                CycleWitness::new(vec![*a, *b, *c, *d]).is_valid_in(g) && g.has_edge(*a, *c)
            }
            _ => false,
        }
    }
}

/// Every `k`-cycle of `g` once, in normal form, sorted.
pub fn find_cycles(g: &Graph, k: usize) -> Vec<CycleWitness> {
    let mut out = Vec::new();
    if k < 3 || k > g.n() {
        return out;
    }
    let mut path = Vec::with_capacity(k);
    for s in 0..g.n() {
        path.push(s);
        extend(g, k, s, VertexSet::singleton(s), &mut path, &mut out);
        path.pop();
    }
    out.sort();
    out
}

fn extend(g: &Graph, k: usize, s: usize, used: VertexSet, path: &mut Vec<usize>, out: &mut Vec<CycleWitness>) {
    let last = *path.last().expect("path starts at s");
    if path.len() == k {
        if g.has_edge(last, s) && path[1] < path[k - 1] {
            out.push(CycleWitness(path.clone()));
        }
        return;
    }
    for w in (g.neighbors(last) - used).iter() {
        if w <= s {
            continue;
        }
        let mut u = used;
        u.insert(w);
        path.push(w);
        extend(g, k, s, u, path, out);
        path.pop();
    }
}

/// Vertex sets spanning at least one `k`-cycle, each with its first cycle.
fn cycle_sets(g: &Graph, k: usize) -> Vec<(VertexSet, CycleWitness)> {
    let mut out: Vec<(VertexSet, CycleWitness)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for c in find_cycles(g, k) {
        let s = c.vertex_set();
        if seen.insert(s) {
            out.push((s, c));
        }
    }
    out
}

/// Disjoint `C_k` and `C_l` joined by an edge. Pairs are scanned in cycle
/// order; the bridge is the lexicographically smallest joining edge.
pub fn find_linked_pair(g: &Graph, k: usize, l: usize) -> Option<LinkedPairWitness> {
    if k < 3 || l < 3 || g.n() < k + l {
        return None;
    }
    let ks = cycle_sets(g, k);
    let ls = if k == l { ks.clone() } else { cycle_sets(g, l) };
    for (a, ca) in &ks {
        let mut nb = VertexSet::new();
        for v in a.iter() {
            nb |= g.neighbors(v);
        }
        for (b, cb) in &ls {
            if a.intersects(b) || !nb.intersects(b) {
                continue;
            }
            let bridge = a
                .iter()
                .find_map(|x| (g.neighbors(x) & *b).first().map(|y| (x, y)))
                .expect("a neighbour of the first cycle lies on the second");
            return Some(LinkedPairWitness { cycle1: ca.clone(), cycle2: cb.clone(), bridge });
        }
    }
    None
}

/// Vertex-disjoint `C_k` and `C_l`.
pub fn find_disjoint_union(g: &Graph, k: usize, l: usize) -> Option<(CycleWitness, CycleWitness)> {
    if k < 3 || l < 3 || g.n() < k + l {
        return None;
    }
    let ks = cycle_sets(g, k);
    let ls = if k == l { ks.clone() } else { cycle_sets(g, l) };
    for (a, ca) in &ks {
        if let Some((_, cb)) = ls.iter().find(|(b, _)| !a.intersects(b)) {
            return Some((ca.clone(), cb.clone()));
        }
    }
    None
}

/// A 4-cycle `[a, b, c, d]` whose chord is `a c`: an edge `a c` with two
/// common neighbours.
pub fn find_theta4(g: &Graph) -> Option<[usize; 4]> {
    for (a, c) in g.edges() {
        let common = g.neighbors(a) & g.neighbors(c);
        let mut it = common.iter();
        if let (Some(b), Some(d)) = (it.next(), it.next()) {
            return Some([a, b, c, d]);
        }
    }
    None
}

pub fn contains_theta4(g: &Graph) -> bool {
    find_theta4(g).is_some()
}

/// Hamiltonian cycle of `g[set]` by depth-first search.
fn hamiltonian_cycle(g: &Graph, set: VertexSet) -> Option<Vec<usize>> {
    fn go(g: &Graph, set: VertexSet, s: usize, used: VertexSet, path: &mut Vec<usize>) -> bool {
        let last = *path.last().expect("nonempty");
        if used == set {
            return path.len() >= 3 && g.has_edge(last, s);
        }
        for w in ((g.neighbors(last) & set) - used).iter() {
            let mut u = used;
            u.insert(w);
            path.push(w);
            if go(g, set, s, u, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    let s = set.first()?;
    let mut path = vec![s];
    go(g, set, s, VertexSet::singleton(s), &mut path).then_some(path)
}

/// The largest number of pairwise vertex-disjoint cycles, with a packing
/// that attains it.
pub fn max_disjoint_cycles(g: &Graph) -> Result<(usize, Vec<CycleWitness>)> {
    let n = g.n();
    if n > PACKING_MAX {
        return Err(Error::SizeBound { what: "cycle packing", n, max: PACKING_MAX });
    }
    let full = (1usize << n) - 1;
    let adj: Vec<usize> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    // path[mask] = bitmask of end vertices v such that a path from the
    // lowest vertex of `mask` to v visits exactly `mask`.
    let mut path = vec![0usize; 1 << n];
    let mut has_cycle = vec![false; 1 << n];
    for mask in 1..=full {
        let s = mask.trailing_zeros() as usize;
        if mask == 1 << s {
            path[mask] = 1 << s;
            continue;
        }
        let mut ends = 0;
        let mut rest = mask & !(1 << s);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = mask & !(1 << v);
            if path[prev] & adj[v] != 0 {
                ends |= 1 << v;
            }
        }
        path[mask] = ends;
        has_cycle[mask] = mask.count_ones() >= 3 && ends & adj[s] != 0;
    }
    let cycles_by_min: Vec<Vec<usize>> =
        (0..n).map(|v| (1..=full).filter(|&m| has_cycle[m] && m.trailing_zeros() as usize == v).collect()).collect();
    let mut best = vec![u8::MAX; 1 << n];
    let mut pick = vec![0usize; 1 << n];
    fn solve(avail: usize, by_min: &[Vec<usize>], best: &mut [u8], pick: &mut [usize]) -> u8 {
        if avail == 0 {
            return 0;
        }
        if best[avail] != u8::MAX {
            return best[avail];
        }
        let v = avail.trailing_zeros() as usize;
        let mut b = solve(avail & !(1 << v), by_min, best, pick);
        let mut choice = 0;
        for &c in &by_min[v] {
            if c & avail == c {
                let r = 1 + solve(avail & !c, by_min, best, pick);
                if r > b {
                    b = r;
                    choice = c;
                }
            }
        }
        best[avail] = b;
        pick[avail] = choice;
        b
    }
    let t = solve(full, &cycles_by_min, &mut best, &mut pick) as usize;
    let mut cycles = Vec::with_capacity(t);
    let mut avail = full;
    while avail != 0 {
        let c = pick[avail];
        if c == 0 {
            avail &= avail - 1;
            continue;
        }
        let set: VertexSet = (0..n).filter(|&v| c >> v & 1 == 1).collect();
        let cyc = hamiltonian_cycle(g, set).expect("mask was marked as a cycle");
        cycles.push(CycleWitness::new(cyc));
        avail &= !c;
    }
    Ok((t, cycles))
}

/// A witness for `p` in `g`, or `None` if `g` is `p`-free.
pub fn find_pattern(g: &Graph, p: &Pattern) -> Result<Option<Witness>> {
    Ok(match *p {
        Pattern::Linked(k, l) => find_linked_pair(g, k, l).map(Witness::Linked),
        Pattern::Union(k, l) => find_disjoint_union(g, k, l).map(|(cycle1, cycle2)| Witness::Union { cycle1, cycle2 }),
        Pattern::DisjointCycles(t) => {
            if g.n() < 3 * t {
                None
            } else {
                let (best, cycles) = max_disjoint_cycles(g)?;
                (best >= t).then(|| Witness::Cycles { cycles: cycles.into_iter().take(t).collect() })
            }
        }
        Pattern::Theta4 => find_theta4(g).map(|cycle| Witness::Theta4 { cycle }),
    })
}

/// `true` iff `g` contains no copy of `p`. Only `DisjointCycles` can fail,
/// on graphs above [`PACKING_MAX`] vertices.
pub fn is_free(g: &Graph, p: &Pattern) -> Result<bool> {
    Ok(find_pattern(g, p)?.is_none())
}
