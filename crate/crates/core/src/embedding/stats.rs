//! Face and edge-face incidence counts.
//!
//! Every edge has two sides (its two darts). Its side pair is the pair of
//! sizes of the faces on those sides, which may be the same face. Then
//! `e_{i,j}` counts edges with side pair `{i, j}` and `e_i` counts edges with
//! at least one side of size `i`. Counting sides this way makes
//! `i * f_i = e_i + e_{i,i}` an exact identity, bridges included.

use std::collections::{BTreeMap, BTreeSet};

use super::PlaneGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceStats {
    /// `f_i`, keyed by face size.
    pub faces_by_size: BTreeMap<usize, usize>,
    pub total_faces: usize,
    pub edges: usize,
    /// `e_i`, keyed by face size.
    pub edges_on_size: BTreeMap<usize, usize>,
    /// `e_{i,j}` for `i <= j`.
    pub edges_by_sides: BTreeMap<(usize, usize), usize>,
}

impl FaceStats {
    pub fn f(&self, i: usize) -> usize {
        self.faces_by_size.get(&i).copied().unwrap_or(0)
    }

    pub fn e(&self, i: usize) -> usize {
        self.edges_on_size.get(&i).copied().unwrap_or(0)
    }

    pub fn e_pair(&self, i: usize, j: usize) -> usize {
        self.edges_by_sides.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    /// Sizes `i` at which `e_{i,i} <= e_i <= e` or `i f_i = e_i + e_{i,i}`
    /// fails. Empty on every valid embedding.
    pub fn property1_violations(&self) -> Vec<usize> {
        let sizes: BTreeSet<usize> = self.faces_by_size.keys().chain(self.edges_on_size.keys()).copied().collect();
        sizes
            .into_iter()
            .filter(|&i| {
                let (ei, eii) = (self.e(i), self.e_pair(i, i));
                !(eii <= ei && ei <= self.edges && i * self.f(i) == ei + eii)
            })
            .collect()
    }

    pub fn property1_holds(&self) -> bool {
        self.property1_violations().is_empty() && self.faces_by_size.iter().map(|(i, f)| i * f).sum::<usize>() == 2 * self.edges
    }
}

pub fn face_stats(pg: &PlaneGraph) -> FaceStats {
    let mut faces_by_size = BTreeMap::new();
    for f in pg.faces() {
        *faces_by_size.entry(f.size()).or_insert(0) += 1;
    }
    let mut edges_on_size = BTreeMap::new();
    let mut edges_by_sides = BTreeMap::new();
    let g = pg.graph();
    for (u, v) in g.edges() {
        let a = pg.faces()[pg.face_of_dart(u, v)].size();
        let b = pg.faces()[pg.face_of_dart(v, u)].size();
        let key = (a.min(b), a.max(b));
        *edges_by_sides.entry(key).or_insert(0) += 1;
        *edges_on_size.entry(key.0).or_insert(0) += 1;
        if key.1 != key.0 {
            *edges_on_size.entry(key.1).or_insert(0) += 1;
        }
    }
    FaceStats { faces_by_size, total_faces: pg.faces().len(), edges: g.m(), edges_on_size, edges_by_sides }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::planarity_embed;
    use crate::graph::Graph;

    fn stats(g: &Graph) -> FaceStats {
        face_stats(&planarity_embed(g).embedding().unwrap().trace_faces())
    }

    #[test]
    fn tetrahedron() {
        let s = stats(&Graph::complete(4).unwrap());
        assert_eq!((s.f(3), s.e(3), s.e_pair(3, 3)), (4, 6, 6));
        assert_eq!(3 * s.f(3), s.e(3) + s.e_pair(3, 3));
        assert!(s.property1_holds());
    }

    #[test]
    fn four_cycle() {
        let s = stats(&Graph::cycle(4).unwrap());
        assert_eq!((s.f(4), s.e(4), s.e_pair(4, 4)), (2, 4, 4));
        assert!(s.property1_holds());
    }

    #[test]
    fn paw_mixes_sizes_and_bridge() {
        // triangle 0-1-2 plus pendant 2-3: inner 3-face, outer face of size 5
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let s = stats(&g);
        assert_eq!((s.f(3), s.f(5)), (1, 1));
        assert_eq!(s.e_pair(3, 5), 3);
        assert_eq!(s.e_pair(5, 5), 1);
        assert_eq!((s.e(3), s.e(5)), (3, 4));
        assert!(s.property1_holds());
    }
}
