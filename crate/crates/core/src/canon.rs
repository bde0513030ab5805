//! Canonical labeling for small graphs.
//!
//! Individualization-refinement: the vertex partition is refined to an
//! equitable one (cells ordered by neighbour-count signatures), the first
//! non-singleton cell is split on each of its vertices in turn, and the
//! search recurses until the partition is discrete. Every leaf is a labeling;
//! the canonical one yields the smallest adjacency code.
//!
//! Two pruning rules keep symmetric graphs cheap:
//! - if every pair of cells is either fully joined or fully disjoint, all
//!   leaves below a node coincide, so one is enough;
//! - twins (vertices whose swap is an automorphism fixing everything else)
//!   in the target cell lead to isomorphic subtrees; only the first is
//!   explored.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order accepted: the upper triangle must fit in a `u64` code.
pub const CANON_MAX: usize = 11;

type Cells = Vec<Vec<u8>>;

struct Search {
    n: usize,
    adj: [u16; CANON_MAX],
    best: Option<(u64, Vec<u8>)>,
}

impl Search {
    fn refine(&self, cells: &mut Cells) {
        let n = self.n;
        loop {
            let k = cells.len();
            if k == n {
                return;
            }
            let mut masks = [0u16; CANON_MAX];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    masks[ci] |= 1 << v;
                }
            }
            let mut next: Cells = Vec::with_capacity(n);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<([u8; CANON_MAX], u8)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = [0u8; CANON_MAX];
                        for (c, s) in sig.iter_mut().enumerate().take(k) {
                            *s = (self.adj[v as usize] & masks[c]).count_ones() as u8;
                        }
                        (sig, v)
                    })
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return;
            }
            *cells = next;
        }
    }

    fn homogeneous(&self, cells: &Cells) -> bool {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v)).collect();
        for (i, ci) in cells.iter().enumerate() {
            let rep = ci[0] as usize;
            for (j, &mj) in masks.iter().enumerate() {
                let cnt = (self.adj[rep] & mj).count_ones() as usize;
                let full = if i == j { ci.len() - 1 } else { cells[j].len() };
                if cnt != 0 && cnt != full {
                    return false;
                }
            }
        }
        true
    }

    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<u8> = cells.iter().flatten().copied().collect();
        let mut code = 0u64;
        for j in 1..self.n {
            let row = self.adj[order[j] as usize];
            for &oi in &order[..j] {
                code = (code << 1) | ((row >> oi) & 1) as u64;
            }
        }
        match &self.best {
            Some((c, _)) if *c <= code => {}
            _ => self.best = Some((code, order)),
        }
    }

    fn descend(&mut self, mut cells: Cells) {
        self.refine(&mut cells);
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        if self.homogeneous(&cells) {
            let discrete: Cells = cells.iter().flatten().map(|&v| vec![v]).collect();
            self.leaf(&discrete);
            return;
        }
        let t = cells.iter().position(|c| c.len() > 1).expect("partition is not discrete");
        let target = cells[t].clone();
        for (idx, &v) in target.iter().enumerate() {
            let vb = 1u16 << v;
            let twin = target[..idx].iter().any(|&r| {
                let rb = 1u16 << r;
                self.adj[r as usize] & !vb == self.adj[v as usize] & !rb
            });
            if twin {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(target.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            self.descend(child);
        }
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.n() > CANON_MAX {
        return Err(Error::SizeBound { what: "canonical labeling", n: g.n(), max: CANON_MAX });
    }
    Ok(())
}

/// A canonical labeling: `perm[v]` is the canonical label of vertex `v`.
/// Isomorphic graphs are mapped onto identical labeled graphs.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_order(g)?;
    let n = g.n();
    let mut adj = [0u16; CANON_MAX];
    for (v, a) in adj.iter_mut().enumerate().take(n) {
        *a = g.neighbors(v).iter().fold(0u16, |m, w| m | 1 << w);
    }
    let mut s = Search { n, adj, best: None };
    if n > 0 {
        s.descend(vec![(0..n as u8).collect()]);
    }
    let order = s.best.map(|(_, o)| o).unwrap_or_default();
    let mut perm = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        perm[v as usize] = label;
    }
    Ok(perm)
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(g.relabel(&canonical_labeling(g)?))
}

/// Canonical form as bytes (the graph6 string of the canonical relabeling).
/// Equal for two graphs exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(graph6::encode(&canonical_graph(g)?).into_bytes())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_order(g)?;
    check_order(h)?;
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    let mut dg = g.degree_sequence();
    let mut dh = h.degree_sequence();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_graph(g)? == canonical_graph(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeling_invariance_small() {
        let p = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let q = Graph::from_edges(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
        let k3 = Graph::complete(3).unwrap();
        assert_ne!(canonical_form(&k3).unwrap(), canonical_form(&p).unwrap());
    }

    #[test]
    fn size_bound() {
        assert!(canonical_form(&Graph::new(12).unwrap()).is_err());
        assert!(canonical_form(&Graph::new(0).unwrap()).is_ok());
    }

    #[test]
    fn symmetric_graphs_are_cheap() {
        // 5K2 and the empty graph would have thousands of leaves without pruning.
        let m = Graph::from_edges(10, (0..5).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let shuffled = m.relabel(&[3, 7, 1, 0, 9, 2, 8, 4, 6, 5]);
        assert_eq!(canonical_graph(&m).unwrap(), canonical_graph(&shuffled).unwrap());
        let e = Graph::new(11).unwrap();
        assert_eq!(canonical_graph(&e).unwrap(), e);
    }
}
