//! Combinatorial embeddings.
//!
//! A [`RotationSystem`] fixes, for every vertex, the cyclic order of its
//! neighbours. The order is read as **clockwise** throughout the crate.
//! Faces are the orbits of the dart successor rule: the successor of dart
//! `(u, v)` is `(v, w)`, where `w` immediately precedes `u` in the rotation
//! at `v`.
//!
//! A rotation system does not record how connected components nest inside
//! one another, so faces are reported per component: each component with at
//! least one edge contributes its own orbits, and `n_c - e_c + f_c = 2` holds
//! for each such component. [`PlaneGraph::plane_face_count`] gives the face
//! count of the whole drawing, `e - n + 1 + c`.

mod enumerate;
mod planarity;
mod stats;

pub use enumerate::{all_rotation_systems, AllRotationSystems, ENUMERATION_MAX};
pub use planarity::{is_planar, kuratowski_subgraph, planarity_embed, Planarity};
pub use stats::{face_stats, FaceStats};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Cyclic neighbour orders for every vertex of a graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    graph: Graph,
    rot: Vec<Vec<usize>>,
}

impl std::fmt::Debug for RotationSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RotationSystem").field("graph", &self.graph).field("rot", &self.rot).finish()
    }
}

impl RotationSystem {
    /// Validates that each `rot[v]` is an ordering of the neighbours of `v`.
    pub fn new(graph: &Graph, rot: Vec<Vec<usize>>) -> Result<Self> {
        if rot.len() != graph.n() {
            return Err(Error::MalformedRotation(format!("{} rotations for {} vertices", rot.len(), graph.n())));
        }
        for (v, order) in rot.iter().enumerate() {
            let set: VertexSet = order.iter().copied().filter(|&w| w < graph.n()).collect();
            if order.len() != graph.degree(v) || set != graph.neighbors(v) {
                return Err(Error::MalformedRotation(format!("rotation at {v} is not an ordering of its neighbours")));
            }
        }
        Ok(RotationSystem { graph: graph.clone(), rot })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    /// The system with every rotation reversed (the mirror image).
    pub fn mirror(&self) -> RotationSystem {
        let rot = self.rot.iter().map(|r| r.iter().rev().copied().collect()).collect();
        RotationSystem { graph: self.graph.clone(), rot }
    }

    /// Each rotation rotated to start at its smallest neighbour, so equal
    /// systems compare equal.
    pub fn normalized(&self) -> RotationSystem {
        let rot = self
            .rot
            .iter()
            .map(|r| {
                let k = r.iter().enumerate().min_by_key(|(_, &w)| w).map_or(0, |(i, _)| i);
                r[k..].iter().chain(&r[..k]).copied().collect()
            })
            .collect();
        RotationSystem { graph: self.graph.clone(), rot }
    }

    /// Traces all faces. See the module docs for the successor rule.
    pub fn trace_faces(&self) -> PlaneGraph {
        PlaneGraph::new(self.clone())
    }
}

/// One face: a closed cyclic sequence of darts. Its size counts darts, so a
/// bridge contributes 2 to the face it lies in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    darts: Vec<(usize, usize)>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.darts.len()
    }

    pub fn darts(&self) -> &[(usize, usize)] {
        &self.darts
    }

    /// Vertices in traversal order (with repeats for non-simple boundaries).
    pub fn walk(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|&(u, _)| u)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.walk().collect()
    }
}

/// A rotation system together with its traced faces.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rs: RotationSystem,
    faces: Vec<Face>,
    offset: Vec<usize>,
    pos: Vec<u16>,
    dart_face: Vec<usize>,
}

impl PlaneGraph {
    fn new(rs: RotationSystem) -> Self {
        let n = rs.graph.n();
        let mut offset = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for r in &rs.rot {
            offset.push(acc);
            acc += r.len();
        }
        offset.push(acc);
        let mut pos = vec![u16::MAX; n * n];
        for (v, r) in rs.rot.iter().enumerate() {
            for (i, &w) in r.iter().enumerate() {
                pos[v * n + w] = i as u16;
            }
        }
        let mut dart_face = vec![usize::MAX; acc];
        let mut faces = Vec::new();
        for u in 0..n {
            for i in 0..rs.rot[u].len() {
                if dart_face[offset[u] + i] != usize::MAX {
                    continue;
                }
                let fid = faces.len();
                let mut darts = Vec::new();
                let (mut a, mut b) = (u, rs.rot[u][i]);
                loop {
                    let id = offset[a] + pos[a * n + b] as usize;
                    if dart_face[id] != usize::MAX {
                        break;
                    }
                    dart_face[id] = fid;
                    darts.push((a, b));
                    let rb = &rs.rot[b];
                    let j = pos[b * n + a] as usize;
                    let w = rb[(j + rb.len() - 1) % rb.len()];
                    a = b;
                    b = w;
                }
                faces.push(Face { darts });
            }
        }
        PlaneGraph { rs, faces, offset, pos, dart_face }
    }

    pub fn rotation_system(&self) -> &RotationSystem {
        &self.rs
    }

    pub fn graph(&self) -> &Graph {
        &self.rs.graph
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Index of the face containing dart `(u, v)`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> usize {
        let n = self.graph().n();
        debug_assert!(self.graph().has_edge(u, v));
        self.dart_face[self.offset[u] + self.pos[u * n + v] as usize]
    }

    /// Faces at the corners of `v`, in rotation order: entry `i` is the face
    /// filling the angle between `rotation(v)[i]` and `rotation(v)[i + 1]`.
    pub fn corner_faces(&self, v: usize) -> Vec<usize> {
        let r = self.rs.rotation(v);
        let d = r.len();
        (0..d).map(|i| self.face_of_dart(r[(i + 1) % d], v)).collect()
    }

    /// Faces per connected component, `e - n + 1 + c` for the whole drawing.
    pub fn plane_face_count(&self) -> usize {
        let g = self.graph();
        let comps = g.components();
        let nontrivial = comps.iter().filter(|c| c.len() > 1).count();
        if nontrivial == 0 {
            return 1;
        }
        self.faces.len() + 1 - nontrivial
    }

    /// Face sizes of one drawing of the whole graph. With several components
    /// that have edges, each component's first orbit (the one through its
    /// lowest dart) is taken as its outer boundary and all of them merge into
    /// a single face; the graph without edges has one face of size 0.
    pub fn plane_face_sizes(&self) -> Vec<usize> {
        let g = self.graph();
        let comps: Vec<_> = g.components().into_iter().filter(|c| c.len() > 1).collect();
        if comps.is_empty() {
            return vec![0];
        }
        let sizes = self.faces.iter().map(Face::size);
        if comps.len() == 1 {
            return sizes.collect();
        }
        let mut outer_seen = crate::vset::VertexSet::new();
        let mut merged = 0;
        let mut out = Vec::with_capacity(self.faces.len());
        for f in &self.faces {
            let ci = comps.iter().position(|c| c.contains(f.darts[0].0)).expect("dart lies in a component");
            if outer_seen.contains(ci) {
                out.push(f.size());
            } else {
                outer_seen.insert(ci);
                merged += f.size();
            }
        }
        out.push(merged);
        out
    }

    /// Euler's formula `n_c - e_c + f_c = 2` on every component with an edge.
    pub fn satisfies_euler(&self) -> bool {
        let g = self.graph();
        let comps = g.components();
        let mut face_count = vec![0usize; comps.len()];
        let mut comp_of = vec![0usize; g.n()];
        for (i, c) in comps.iter().enumerate() {
            for v in c.iter() {
                comp_of[v] = i;
            }
        }
        for f in &self.faces {
            face_count[comp_of[f.darts[0].0]] += 1;
        }
        comps.iter().enumerate().all(|(i, c)| {
            let n_c = c.len();
            let e_c: usize = c.iter().map(|v| g.degree(v)).sum::<usize>() / 2;
            e_c == 0 || n_c + face_count[i] == e_c + 2
        })
    }
}

/// Convenience: trace the faces of `rs`.
pub fn trace_faces(rs: &RotationSystem) -> Vec<Face> {
    rs.trace_faces().faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::join;

    fn sizes(faces: &[Face]) -> Vec<usize> {
        let mut s: Vec<usize> = faces.iter().map(Face::size).collect();
        s.sort_unstable();
        s
    }

    #[test]
    fn triangle_has_two_three_faces() {
        let g = Graph::complete(3).unwrap();
        let rs = RotationSystem::new(&g, vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(sizes(&trace_faces(&rs)), vec![3, 3]);
    }

    #[test]
    fn star_is_one_face_of_size_six() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let rs = RotationSystem::new(&g, vec![vec![1, 2, 3], vec![0], vec![0], vec![0]]).unwrap();
        let faces = trace_faces(&rs);
        assert_eq!(sizes(&faces), vec![6]);
        // hand trace: (0,1) -> (1,0) -> (0,3) -> (3,0) -> (0,2) -> (2,0)
        assert_eq!(faces[0].darts(), &[(0, 1), (1, 0), (0, 3), (3, 0), (0, 2), (2, 0)]);
    }

    #[test]
    fn k4_has_one_embedding_up_to_mirror() {
        let g = Graph::complete(4).unwrap();
        let good = RotationSystem::new(&g, vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).unwrap();
        let pg = good.trace_faces();
        assert_eq!(sizes(pg.faces()), vec![3, 3, 3, 3]);
        assert!(pg.satisfies_euler());
        // Of the 2^4 rotation systems of K4 exactly the embedding and its mirror are planar.
        let mut planar = 0;
        for mask in 0..16u32 {
            let rot = (0..4)
                .map(|v| {
                    let mut r: Vec<usize> = (0..4).filter(|&w| w != v).collect();
                    if mask >> v & 1 == 1 {
                        r.swap(1, 2);
                    }
                    r
                })
                .collect();
            let pg = RotationSystem::new(&g, rot).unwrap().trace_faces();
            assert_eq!(pg.faces().iter().map(Face::size).sum::<usize>(), 12);
            planar += pg.satisfies_euler() as usize;
        }
        assert_eq!(planar, 2);
    }

    #[test]
    fn malformed_rotations_are_rejected() {
        let g = Graph::complete(3).unwrap();
        assert!(RotationSystem::new(&g, vec![vec![1], vec![0, 2], vec![0, 1]]).is_err());
        assert!(RotationSystem::new(&g, vec![vec![1, 1], vec![0, 2], vec![0, 1]]).is_err());
        assert!(RotationSystem::new(&g, vec![vec![1, 2], vec![0, 2]]).is_err());
    }

    #[test]
    fn corner_faces_of_wheel_hub() {
        let w = join(&Graph::new(1).unwrap(), &Graph::cycle(5).unwrap()).unwrap();
        let pg = match planarity_embed(&w) {
            Planarity::Planar(rs) => rs.trace_faces(),
            Planarity::NonPlanar => panic!("wheel is planar"),
        };
        let corners = pg.corner_faces(0);
        assert_eq!(corners.len(), 5);
        assert!(corners.iter().all(|&f| pg.faces()[f].size() == 3));
    }

    #[test]
    fn plane_face_count_matches_global_euler() {
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 7)]).unwrap();
        let Planarity::Planar(rs) = planarity_embed(&g) else { panic!() };
        let pg = rs.trace_faces();
        // orbits: 2 + 2 + 1; the drawing has e - n + 1 + c = 7 - 8 + 1 + 3 = 3 faces
        assert_eq!(pg.faces().len(), 5);
        assert_eq!(pg.plane_face_count(), 3);
        assert!(pg.satisfies_euler());
        let empty = Graph::new(3).unwrap();
        let Planarity::Planar(rs) = planarity_embed(&empty) else { panic!() };
        assert_eq!(rs.trace_faces().plane_face_count(), 1);
    }
}
