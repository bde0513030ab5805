//! Triangular structure around vertices and 3-face-blocks.
//!
//! `R̄_v` is the set of 3-faces at `v`. Each 3-face fills exactly one corner
//! of `v`, so walking the rotation at `v` splits `R̄_v` into maximal runs of
//! consecutive 3-face corners: either every corner (a wheel) or a list of
//! fans. A 3-face-block is a connected component of the spanning subgraph
//! made of edges that lie on at least one 3-face.

mod catalog;
mod lemmas;

pub use catalog::{catalog, catalog_matches, CatalogEntry, Family};
pub use lemmas::{
    bad_block_isolation, lemma41_check, partition_conditions_hold, partition_lemma_check, rv_lemma_check, IsolationViolation,
    Lemma41Report, Outcome, PartitionReport, RvLemmaReport,
};
pub(crate) use lemmas::{partition_eval, rv_eval};

use serde::Serialize;

use crate::embedding::PlaneGraph;
use crate::error::{Error, Result};
use crate::vset::VertexSet;

fn check_vertex(pg: &PlaneGraph, v: usize) -> Result<()> {
    if v >= pg.graph().n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: pg.graph().n() });
    }
    Ok(())
}

/// Face indices of `R̄_v`, ascending.
pub fn three_face_star(pg: &PlaneGraph, v: usize) -> Result<Vec<usize>> {
    check_vertex(pg, v)?;
    let mut out: Vec<usize> = pg.corner_faces(v).into_iter().filter(|&f| pg.faces()[f].size() == 3).collect();
    out.sort_unstable();
    Ok(out)
}

/// `|R̄_v|` for every vertex.
pub fn rv_sizes(pg: &PlaneGraph) -> Vec<usize> {
    (0..pg.graph().n()).map(|v| pg.corner_faces(v).into_iter().filter(|&f| pg.faces()[f].size() == 3).count()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "parts", rename_all = "snake_case")]
pub enum RvKind {
    /// Every corner of the hub is a 3-face; the payload is their number.
    Wheel(usize),
    /// Maximal runs of consecutive 3-face corners, largest first.
    Fans(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RvStructure {
    pub hub: usize,
    pub three_faces: Vec<usize>,
    pub kind: RvKind,
    /// One clockwise neighbour sequence per part: `k_i + 1` vertices for a
    /// fan, the whole rim for a wheel. Concatenated, they are the labels
    /// `v_1, v_2, ..` in order.
    pub rims: Vec<Vec<usize>>,
}

impl RvStructure {
    /// `(k_1, .., k_l)`; a wheel counts as a single part.
    pub fn parts(&self) -> Vec<usize> {
        match &self.kind {
            RvKind::Wheel(k) => vec![*k],
            RvKind::Fans(p) => p.clone(),
        }
    }

    pub fn is_wheel(&self) -> bool {
        matches!(self.kind, RvKind::Wheel(_))
    }

    /// `V(R_v)`: the hub and every rim vertex.
    pub fn vertex_set(&self) -> VertexSet {
        let mut s = VertexSet::singleton(self.hub);
        for r in &self.rims {
            s |= r.iter().copied().collect();
        }
        s
    }

    /// Rim vertices in label order (`labels()[0]` is `v_1`).
    pub fn labels(&self) -> Vec<usize> {
        self.rims.concat()
    }
}

pub fn rv_partition(pg: &PlaneGraph, v: usize) -> Result<RvStructure> {
    check_vertex(pg, v)?;
    let rot = pg.rotation_system().rotation(v);
    let corners = pg.corner_faces(v);
    let d = corners.len();
    let tri: Vec<bool> = corners.iter().map(|&f| pg.faces()[f].size() == 3).collect();
    let mut three_faces: Vec<usize> = corners.iter().zip(&tri).filter(|(_, &t)| t).map(|(&f, _)| f).collect();
    three_faces.sort_unstable();
    if three_faces.is_empty() {
        return Err(Error::EmptyThreeFaceStar(v));
    }
    if tri.iter().all(|&t| t) {
        return Ok(RvStructure { hub: v, three_faces, kind: RvKind::Wheel(d), rims: vec![rot.to_vec()] });
    }
    // Corner i spans rot[i] .. rot[i + 1]; start scanning just after a gap.
    let gap = tri.iter().position(|&t| !t).expect("not a wheel");
    let mut runs: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut current: Option<(usize, Vec<usize>)> = None;
    for step in 1..=d {
        let i = (gap + step) % d;
        if tri[i] {
            let run = current.get_or_insert_with(|| (0, vec![rot[i]]));
            run.0 += 1;
            run.1.push(rot[(i + 1) % d]);
        } else if let Some(run) = current.take() {
            runs.push(run);
        }
    }
    if let Some(run) = current.take() {
        runs.push(run);
    }
    // stable: equal parts keep their rotation order
    runs.sort_by_key(|r| std::cmp::Reverse(r.0));
    let (parts, rims) = runs.into_iter().unzip();
    Ok(RvStructure { hub: v, three_faces, kind: RvKind::Fans(parts), rims })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    /// Indices of the 3-faces whose vertices lie in the block.
    pub three_faces: Vec<usize>,
}

impl Block {
    pub fn is_singleton(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// `𝓑(G)`, ordered by smallest vertex.
pub fn block_decomposition(pg: &PlaneGraph) -> Vec<Block> {
    let g = pg.graph();
    let n = g.n();
    let mut tadj = vec![VertexSet::new(); n];
    for (u, v) in g.edges() {
        if pg.faces()[pg.face_of_dart(u, v)].size() == 3 || pg.faces()[pg.face_of_dart(v, u)].size() == 3 {
            tadj[u].insert(v);
            tadj[v].insert(u);
        }
    }
    let mut block_of = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for s in 0..n {
        if block_of[s] != usize::MAX {
            continue;
        }
        let mut comp = VertexSet::singleton(s);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in (tadj[x] - comp).iter() {
                comp.insert(y);
                stack.push(y);
            }
        }
        for x in comp.iter() {
            block_of[x] = blocks.len();
        }
        blocks.push(Block { vertices: comp, three_faces: Vec::new() });
    }
    for (fi, f) in pg.faces().iter().enumerate() {
        if f.size() == 3 {
            blocks[block_of[f.darts()[0].0]].three_faces.push(fi);
        }
    }
    blocks
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockClass {
    /// excess <= -3
    StrictGood,
    /// -3 < excess <= 0
    Good,
    /// excess > 0
    Bad,
}

impl BlockClass {
    pub fn of(excess: i64) -> BlockClass {
        if excess <= -3 {
            BlockClass::StrictGood
        } else if excess <= 0 {
            BlockClass::Good
        } else {
            BlockClass::Bad
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub vertices: Vec<usize>,
    /// `Σ_{v ∈ B} |R̄_v|`
    pub rv_sum: usize,
    /// `3 |V(B)|`
    pub threshold: usize,
    pub excess: i64,
    pub class: BlockClass,
    /// Catalog entries isomorphic to the induced subgraph on the block.
    pub catalog: Vec<&'static str>,
    /// Set when any matched entry is a reconstruction.
    pub reconstructed: bool,
}

impl BlockReport {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

pub fn block_report(pg: &PlaneGraph) -> Vec<BlockReport> {
    let sizes = rv_sizes(pg);
    block_decomposition(pg)
        .into_iter()
        .map(|b| {
            let rv_sum: usize = b.vertices.iter().map(|v| sizes[v]).sum();
            let threshold = 3 * b.vertices.len();
            let excess = rv_sum as i64 - threshold as i64;
            let matches = if b.is_singleton() { Vec::new() } else { catalog_matches(&pg.graph().induced(b.vertices).0) };
            BlockReport {
                vertices: b.vertices.iter().collect(),
                rv_sum,
                threshold,
                excess,
                class: BlockClass::of(excess),
                reconstructed: matches.iter().any(|e| e.reconstructed),
                catalog: matches.iter().map(|e| e.name).collect(),
            }
        })
        .collect()
}

/// `(Σ_v |R̄_v|, 3 f_3)`; equal on every embedding.
pub fn rv_identity(pg: &PlaneGraph) -> (usize, usize) {
    let total = rv_sizes(pg).iter().sum();
    let f3 = pg.faces().iter().filter(|f| f.size() == 3).count();
    (total, 3 * f3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::planarity_embed;
    use crate::graph::{join, Graph};

    fn plane(g: &Graph) -> PlaneGraph {
        planarity_embed(g).embedding().unwrap().trace_faces()
    }

    /// Hub 0 and rim path 1..=k, every triangle `0 i i+1` a face.
    pub(crate) fn fan_drawing(k: usize) -> PlaneGraph {
        let g = join(&Graph::new(1).unwrap(), &Graph::path(k).unwrap()).unwrap();
        let mut rot = vec![(1..=k).collect::<Vec<_>>()];
        for i in 1..=k {
            let mut r = vec![0];
            if i > 1 {
                r.push(i - 1);
            }
            if i < k {
                r.push(i + 1);
            }
            rot.push(r);
        }
        crate::embedding::RotationSystem::new(&g, rot).unwrap().trace_faces()
    }

    #[test]
    fn stars() {
        let k4 = plane(&Graph::complete(4).unwrap());
        assert!((0..4).all(|v| three_face_star(&k4, v).unwrap().len() == 3));
        let c4 = plane(&Graph::cycle(4).unwrap());
        assert!(three_face_star(&c4, 0).unwrap().is_empty());
        assert!(three_face_star(&c4, 4).is_err());
        assert_eq!(rv_partition(&c4, 0).unwrap_err(), Error::EmptyThreeFaceStar(0));
    }

    #[test]
    fn wheel_and_fan_partitions() {
        let w5 = plane(&join(&Graph::new(1).unwrap(), &Graph::cycle(5).unwrap()).unwrap());
        let r = rv_partition(&w5, 0).unwrap();
        assert_eq!(r.kind, RvKind::Wheel(5));
        assert_eq!(r.rims[0].len(), 5);
        let fan = fan_drawing(5);
        let r = rv_partition(&fan, 0).unwrap();
        assert_eq!(r.kind, RvKind::Fans(vec![4]));
        assert_eq!(r.rims[0].len(), 5);
        let ends: VertexSet = [r.rims[0][0], r.rims[0][4]].into_iter().collect();
        assert_eq!(ends, [1, 5].into_iter().collect());
        let k3 = plane(&Graph::complete(3).unwrap());
        assert_eq!(rv_partition(&k3, 0).unwrap().kind, RvKind::Wheel(2));
    }

    #[test]
    fn blocks_of_small_graphs() {
        let paw = plane(&Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap());
        let b: Vec<VertexSet> = block_decomposition(&paw).into_iter().map(|b| b.vertices).collect();
        assert_eq!(b, vec![[0, 1, 2].into_iter().collect(), VertexSet::singleton(3)]);
        let two = plane(&Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap());
        assert_eq!(block_decomposition(&two).len(), 2);
    }

    #[test]
    fn reports() {
        let k4 = block_report(&plane(&Graph::complete(4).unwrap()));
        assert_eq!(k4.len(), 1);
        assert_eq!((k4[0].rv_sum, k4[0].threshold, k4[0].excess), (12, 12, 0));
        assert_eq!(k4[0].class, BlockClass::Good);
        let mut k5e = Graph::complete(5).unwrap();
        k5e.remove_edge(0, 1);
        let r = block_report(&plane(&k5e));
        assert_eq!((r[0].rv_sum, r[0].excess, r[0].class), (18, 3, BlockClass::Bad));
        assert!(r[0].catalog.contains(&"B1_c33"));
        let c4 = block_report(&plane(&Graph::cycle(4).unwrap()));
        assert_eq!(c4.len(), 4);
        assert!(c4.iter().all(|b| b.rv_sum == 0));
    }
}
