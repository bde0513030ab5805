//! Executable forms of the structural lemmas about 3-faces.
//!
//! `R_u ⊆ R_v` is read as containment of 3-face sets, `R̄_u ⊆ R̄_v`: every
//! 3-face at `u` is also a 3-face at `v`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{block_decomposition, block_report, rv_partition, rv_sizes, three_face_star, BlockClass, RvStructure};
use crate::embedding::PlaneGraph;
use crate::error::{Error, Result};
use crate::patterns::find_linked_pair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// The hypothesis does not apply.
    Vacuous,
    Holds,
    Violated,
}

impl Outcome {
    pub fn passed(self) -> bool {
        self != Outcome::Violated
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma41Report {
    pub n: usize,
    /// Faces that are not 3-faces.
    pub m: usize,
    pub f3: usize,
    /// `2n - 2m - 4`
    pub bound: i64,
    pub attains_2n_minus_5: bool,
    pub pass: bool,
}

/// `f_3 <= 2n - 2m - 4` and `f_3 != 2n - 5`, with faces counted on the
/// drawing given by [`PlaneGraph::plane_face_sizes`].
pub fn lemma41_check(pg: &PlaneGraph) -> Result<Lemma41Report> {
    let n = pg.graph().n();
    if n < 3 {
        return Err(Error::OrderTooSmall { what: "lemma41_check", n, min: 3 });
    }
    let sizes = pg.plane_face_sizes();
    let f3 = sizes.iter().filter(|&&s| s == 3).count();
    let m = sizes.len() - f3;
    let bound = 2 * n as i64 - 2 * m as i64 - 4;
    let attains = f3 as i64 == 2 * n as i64 - 5;
    Ok(Lemma41Report { n, m, f3, bound, attains_2n_minus_5: attains, pass: f3 as i64 <= bound && !attains })
}

/// `true` when one of the partition lemma's side conditions holds, which
/// makes its conclusion vacuous.
pub fn partition_conditions_hold(parts: &[usize]) -> bool {
    let k1 = parts.first().copied().unwrap_or(0);
    match parts.len() {
        3 => k1 <= 2,
        2 => k1 <= 3 && k1 + parts[1] <= 5,
        1 => k1 <= 4,
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub vertex: usize,
    pub parts: Vec<usize>,
    pub wheel: bool,
    pub conditions_hold: bool,
    /// Vertices `u` of `R_v` with a 3-face outside `R̄_v`.
    pub offending: Vec<usize>,
    pub outcome: Outcome,
}

fn not_contained(pg: &PlaneGraph, rv: &RvStructure) -> Vec<usize> {
    let hub: BTreeSet<usize> = rv.three_faces.iter().copied().collect();
    rv.vertex_set()
        .iter()
        .filter(|&u| three_face_star(pg, u).expect("vertex in range").iter().any(|f| !hub.contains(f)))
        .collect()
}

fn require_c3c3_free(pg: &PlaneGraph) -> Result<()> {
    if let Some(w) = find_linked_pair(pg.graph(), 3, 3) {
        return Err(Error::Precondition(format!(
            "host graph contains C3-C3: {:?} and {:?} joined by {:?}",
            w.cycle1.vertices(),
            w.cycle2.vertices(),
            w.bridge
        )));
    }
    Ok(())
}

pub(crate) fn partition_eval(pg: &PlaneGraph, rv: &RvStructure) -> PartitionReport {
    let parts = rv.parts();
    let conditions_hold = partition_conditions_hold(&parts);
    let offending = not_contained(pg, rv);
    let outcome = if conditions_hold {
        Outcome::Vacuous
    } else if offending.is_empty() {
        Outcome::Holds
    } else {
        Outcome::Violated
    };
    PartitionReport { vertex: rv.hub, parts, wheel: rv.is_wheel(), conditions_hold, offending, outcome }
}

/// When none of the side conditions holds, every `u` in `R_v` must satisfy
/// `R̄_u ⊆ R̄_v`. Fails with [`Error::Precondition`] if the host graph
/// contains C3-C3, and with [`Error::EmptyThreeFaceStar`] if `v` is on no
/// 3-face.
pub fn partition_lemma_check(pg: &PlaneGraph, v: usize) -> Result<PartitionReport> {
    let rv = rv_partition(pg, v)?;
    require_c3c3_free(pg)?;
    Ok(partition_eval(pg, &rv))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RvLemmaReport {
    pub vertex: usize,
    pub hypothesis: bool,
    pub rv_vertices: Vec<usize>,
    pub block: Vec<usize>,
    /// `Σ_{u ∈ R_v} |R̄_u|`
    pub sum: usize,
    /// `3 |V(R_v)| - 3`
    pub bound: i64,
    pub outcome: Outcome,
}

pub(crate) fn rv_eval(pg: &PlaneGraph, v: usize, sizes: &[usize]) -> RvLemmaReport {
    let block = block_decomposition(pg).into_iter().find(|b| b.vertices.contains(v)).expect("blocks cover every vertex").vertices;
    let Ok(rv) = rv_partition(pg, v) else {
        return RvLemmaReport {
            vertex: v,
            hypothesis: false,
            rv_vertices: vec![v],
            block: block.iter().collect(),
            sum: sizes[v],
            bound: 0,
            outcome: Outcome::Vacuous,
        };
    };
    let vs = rv.vertex_set();
    let hypothesis = not_contained(pg, &rv).is_empty();
    let sum = vs.iter().map(|u| sizes[u]).sum();
    let bound = 3 * vs.len() as i64 - 3;
    let outcome = if !hypothesis {
        Outcome::Vacuous
    } else if vs == block && sum as i64 <= bound {
        Outcome::Holds
    } else {
        Outcome::Violated
    };
    RvLemmaReport { vertex: v, hypothesis, rv_vertices: vs.iter().collect(), block: block.iter().collect(), sum, bound, outcome }
}

/// If every `u` in `R_v` has `R̄_u ⊆ R̄_v`, then `V(R_v)` is a whole
/// 3-face-block and `Σ_{u ∈ R_v} |R̄_u| <= 3|V(R_v)| - 3`. Fails with
/// [`Error::Precondition`] if the host graph contains C3-C3.
pub fn rv_lemma_check(pg: &PlaneGraph, v: usize) -> Result<RvLemmaReport> {
    three_face_star(pg, v)?;
    require_c3c3_free(pg)?;
    Ok(rv_eval(pg, v, &rv_sizes(pg)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsolationViolation {
    pub block: Vec<usize>,
    pub vertex: usize,
    /// `|R̄_vertex|`, required to be 0.
    pub rv: usize,
    /// Edges from `vertex` into the block, required to be 1.
    pub edges_to_block: usize,
}

/// Every vertex outside a bad block but adjacent to it must lie on no
/// 3-face and send exactly one edge into the block.
pub fn bad_block_isolation(pg: &PlaneGraph) -> Vec<IsolationViolation> {
    let g = pg.graph();
    let sizes = rv_sizes(pg);
    let mut out = Vec::new();
    for b in block_report(pg).into_iter().filter(|b| b.class == BlockClass::Bad) {
        let set: crate::vset::VertexSet = b.vertices.iter().copied().collect();
        for x in (0..g.n()).filter(|&x| !set.contains(x)) {
            let k = (g.neighbors(x) & set).len();
            if k > 0 && (sizes[x] != 0 || k != 1) {
                out.push(IsolationViolation { block: b.vertices.clone(), vertex: x, rv: sizes[x], edges_to_block: k });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{planarity_embed, RotationSystem};
    use crate::graph::{join, Graph};

    fn plane(g: &Graph) -> PlaneGraph {
        planarity_embed(g).embedding().unwrap().trace_faces()
    }

    #[test]
    fn lemma41_examples() {
        let r = lemma41_check(&plane(&Graph::complete(4).unwrap())).unwrap();
        assert_eq!((r.m, r.f3, r.bound, r.pass), (0, 4, 4, true));
        let w4 = plane(&join(&Graph::new(1).unwrap(), &Graph::cycle(4).unwrap()).unwrap());
        let r = lemma41_check(&w4).unwrap();
        assert_eq!((r.n, r.m, r.f3, r.bound, r.pass), (5, 1, 4, 4, true));
        assert!(lemma41_check(&plane(&Graph::path(2).unwrap())).is_err());
        let r = lemma41_check(&plane(&Graph::new(3).unwrap())).unwrap();
        assert_eq!((r.m, r.f3, r.bound), (1, 0, 0));
    }

    #[test]
    fn conditions_table() {
        assert!(partition_conditions_hold(&[4]));
        assert!(!partition_conditions_hold(&[5]));
        assert!(partition_conditions_hold(&[3, 2]));
        assert!(!partition_conditions_hold(&[3, 3]));
        assert!(!partition_conditions_hold(&[4, 1]));
        assert!(partition_conditions_hold(&[2, 2, 2]));
        assert!(!partition_conditions_hold(&[3, 1, 1]));
        assert!(!partition_conditions_hold(&[1, 1, 1, 1]));
    }

    #[test]
    fn bare_wheel_hub() {
        let w5 = plane(&join(&Graph::new(1).unwrap(), &Graph::cycle(5).unwrap()).unwrap());
        let r = partition_lemma_check(&w5, 0).unwrap();
        assert_eq!((r.conditions_hold, r.outcome), (false, Outcome::Holds));
        let fan = plane(&join(&Graph::new(1).unwrap(), &Graph::path(3).unwrap()).unwrap());
        let r = partition_lemma_check(&fan, 0).unwrap();
        assert_eq!(r.outcome, Outcome::Vacuous);
    }

    #[test]
    fn rv_lemma_examples() {
        let fan = plane(&join(&Graph::new(1).unwrap(), &Graph::path(3).unwrap()).unwrap());
        let r = rv_lemma_check(&fan, 0).unwrap();
        // hub on 2 faces, rim ends on 1, middle on 2
        assert_eq!((r.sum, r.bound, r.outcome), (6, 9, Outcome::Holds));
        // W4 drawn with the rim as outer 4-face
        let w4 = join(&Graph::new(1).unwrap(), &Graph::cycle(4).unwrap()).unwrap();
        let rs =
            RotationSystem::new(&w4, vec![vec![1, 2, 3, 4], vec![0, 4, 2], vec![0, 1, 3], vec![0, 2, 4], vec![0, 3, 1]]).unwrap();
        let pg = rs.trace_faces();
        assert_eq!(pg.faces().iter().filter(|f| f.size() == 3).count(), 4);
        let r = rv_lemma_check(&pg, 0).unwrap();
        assert_eq!((r.sum, r.bound, r.outcome), (12, 12, Outcome::Holds));
        let k3 = plane(&Graph::complete(3).unwrap());
        let r = rv_lemma_check(&k3, 0).unwrap();
        assert_eq!((r.sum, r.bound), (6, 6));
    }

    #[test]
    fn precondition_is_enforced() {
        let prism = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(matches!(partition_lemma_check(&plane(&prism), 0), Err(Error::Precondition(_))));
        assert!(matches!(rv_lemma_check(&plane(&prism), 0), Err(Error::Precondition(_))));
    }
}
