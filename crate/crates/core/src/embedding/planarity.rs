//! Planarity testing with an embedding witness.
//!
//! Each biconnected block is embedded by the Demoucron-Malgrange-Pertuiset
//! path-addition method: start from a cycle, repeatedly pick a fragment of
//! the not-yet-embedded part (a chord, or a component with its attachment
//! edges), route a path of it through a face containing all its attachment
//! vertices, and split that face. A fragment with no admissible face proves
//! the block nonplanar. The block rotations are read off the face cycles and
//! concatenated at cut vertices.

use std::collections::HashMap;

use super::RotationSystem;
use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    Planar(RotationSystem),
    NonPlanar,
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(self) -> Option<RotationSystem> {
        match self {
            Planarity::Planar(rs) => Some(rs),
            Planarity::NonPlanar => None,
        }
    }
}

pub fn planarity_embed(g: &Graph) -> Planarity {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return Planarity::NonPlanar;
    }
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        match embed_block(n, &block) {
            Some(parts) => {
                for (v, order) in parts {
                    rot[v].extend(order);
                }
            }
            None => return Planarity::NonPlanar,
        }
    }
    let rs = RotationSystem::new(g, rot).expect("block rotations cover every edge once");
    assert!(rs.trace_faces().satisfies_euler(), "embedding of {g:?} violates Euler");
    Planarity::Planar(rs)
}

pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(g).iter().all(|b| embed_block(n, b).is_some())
}

/// A minimal nonplanar subgraph of `g` (same vertex set), or `None` if `g`
/// is planar. Smoothing its degree-2 vertices leaves K5 or K3,3 plus
/// isolated vertices.
pub fn kuratowski_subgraph(g: &Graph) -> Option<Graph> {
    if is_planar(g) {
        return None;
    }
    let mut h = g.clone();
    for (u, v) in g.edges() {
        h.remove_edge(u, v);
        if is_planar(&h) {
            h.add_edge(u, v).expect("edge was just removed");
        }
    }
    Some(h)
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    out: Vec<Vec<(usize, usize)>>,
}

impl Tarjan<'_> {
    fn dfs(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        for w in self.g.neighbors(u).iter() {
            if self.disc[w] == 0 {
                self.stack.push((u, w));
                self.dfs(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    self.out.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
pub(crate) fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut t = Tarjan { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if t.disc[v] == 0 {
            t.dfs(v, None);
        }
    }
    t.out
}

enum Fragment {
    Chord(usize, usize),
    Component(VertexSet),
}

/// Shortest path from `from` to `to` inside `within`, skipping the direct
/// edge between them.
fn bfs_path(adj: &[VertexSet], from: usize, to: usize, within: VertexSet) -> Vec<usize> {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for y in (adj[x] & within).iter() {
            if seen.contains(y) || (x == from && y == to) {
                continue;
            }
            seen.insert(y);
            parent[y] = x;
            if y == to {
                let mut path = vec![to];
                let mut c = to;
                while c != from {
                    c = parent[c];
                    path.push(c);
                }
                path.reverse();
                return path;
            }
            queue.push_back(y);
        }
    }
    unreachable!("block is 2-connected")
}

/// Path from an attachment vertex through `comp` to a different attachment.
fn path_through(adj: &[VertexSet], comp: VertexSet, attach: VertexSet) -> Vec<usize> {
    let a = attach.first().expect("fragment has attachments");
    let mut parent = vec![usize::MAX; adj.len()];
    let mut seen = VertexSet::new();
    let mut queue = std::collections::VecDeque::new();
    for x in (adj[a] & comp).iter() {
        seen.insert(x);
        parent[x] = a;
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        let mut others = adj[x] & attach;
        others.remove(a);
        if let Some(b) = others.first() {
            let mut path = vec![b, x];
            let mut c = x;
            while c != a {
                c = parent[c];
                path.push(c);
            }
            path.reverse();
            return path;
        }
        for y in (adj[x] & comp).iter() {
            if !seen.contains(y) {
                seen.insert(y);
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a 2-connected block has two attachments")
}

/// Rotations for the vertices of one block, or `None` if it is nonplanar.
fn embed_block(n: usize, edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    if let [(u, w)] = edges {
        return Some(vec![(*u, vec![*w]), (*w, vec![*u])]);
    }
    let mut adj = vec![VertexSet::new(); n];
    let mut verts = VertexSet::new();
    for &(u, w) in edges {
        adj[u].insert(w);
        adj[w].insert(u);
        verts.insert(u);
        verts.insert(w);
    }
    let (a, b) = edges[0];
    let cycle = bfs_path(&adj, b, a, verts);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut face_sets: Vec<VertexSet> = vec![cycle.iter().copied().collect(); 2];
    let mut placed: VertexSet = cycle.iter().copied().collect();
    let mut placed_adj = vec![VertexSet::new(); n];
    for i in 0..cycle.len() {
        let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        placed_adj[x].insert(y);
        placed_adj[y].insert(x);
    }
    let mut done = cycle.len();

    while done < edges.len() {
        let mut fragments: Vec<(Fragment, VertexSet)> = Vec::new();
        for u in placed.iter() {
            for w in ((adj[u] & placed) - placed_adj[u]).iter() {
                if w > u {
                    let attach: VertexSet = [u, w].into_iter().collect();
                    fragments.push((Fragment::Chord(u, w), attach));
                }
            }
        }
        let mut rest = verts - placed;
        while let Some(s) = rest.first() {
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for x in frontier.iter() {
                    next |= adj[x] & rest;
                }
                next -= comp;
                comp |= next;
                frontier = next;
            }
            rest -= comp;
            let mut attach = VertexSet::new();
            for x in comp.iter() {
                attach |= adj[x] & placed;
            }
            fragments.push((Fragment::Component(comp), attach));
        }

        let mut choice: Option<(usize, usize)> = None;
        for (fi, (_, attach)) in fragments.iter().enumerate() {
            let mut admissible = face_sets.iter().enumerate().filter(|(_, fs)| attach.is_subset(fs));
            match (admissible.next(), admissible.next()) {
                (None, _) => return None,
                (Some((f, _)), None) => {
                    choice = Some((fi, f));
                    break;
                }
                (Some((f, _)), Some(_)) => {
                    choice.get_or_insert((fi, f));
                }
            }
        }
        let (fi, f) = choice.expect("an unembedded edge leaves a fragment");
        let path = match &fragments[fi] {
            (Fragment::Chord(u, w), _) => vec![*u, *w],
            (Fragment::Component(comp), attach) => path_through(&adj, *comp, *attach),
        };

        let face = &faces[f];
        let start = face.iter().position(|&x| x == path[0]).expect("attachment lies on the face");
        let rotated: Vec<usize> = face[start..].iter().chain(&face[..start]).copied().collect();
        let last = *path.last().expect("path has two ends");
        let k = rotated.iter().position(|&x| x == last).expect("attachment lies on the face");
        let inner = &path[1..path.len() - 1];
        let mut f1: Vec<usize> = rotated[..=k].to_vec();
        f1.extend(inner.iter().rev());
        let mut f2: Vec<usize> = rotated[k..].to_vec();
        f2.extend(&path[..path.len() - 1]);
        face_sets[f] = f1.iter().copied().collect();
        face_sets.push(f2.iter().copied().collect());
        faces[f] = f1;
        faces.push(f2);
        for win in path.windows(2) {
            placed_adj[win[0]].insert(win[1]);
            placed_adj[win[1]].insert(win[0]);
            placed.insert(win[0]);
            placed.insert(win[1]);
        }
        done += path.len() - 1;
    }

    // A face walk u -> v -> w means u follows w in the rotation at v.
    let mut succ: HashMap<(usize, usize), usize> = HashMap::new();
    for face in &faces {
        let m = face.len();
        for i in 0..m {
            succ.insert((face[(i + 1) % m], face[(i + 2) % m]), face[i]);
        }
    }
    let mut out = Vec::with_capacity(verts.len());
    for v in verts.iter() {
        let start = adj[v].first().expect("block vertex has neighbours");
        let mut order = vec![start];
        let mut x = succ[&(v, start)];
        while x != start {
            order.push(x);
            x = succ[&(v, x)];
        }
        debug_assert_eq!(order.len(), adj[v].len());
        out.push((v, order));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::join;

    fn k33() -> Graph {
        Graph::from_edges(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn small_verdicts() {
        assert!(is_planar(&Graph::complete(4).unwrap()));
        assert!(!is_planar(&Graph::complete(5).unwrap()));
        assert!(!is_planar(&k33()));
        assert!(is_planar(&Graph::new(0).unwrap()));
        let mut k5e = Graph::complete(5).unwrap();
        k5e.remove_edge(0, 1);
        assert!(is_planar(&k5e));
    }

    #[test]
    fn k4_has_four_faces() {
        let rs = planarity_embed(&Graph::complete(4).unwrap()).embedding().unwrap();
        assert_eq!(rs.trace_faces().faces().len(), 4);
    }

    #[test]
    fn double_wheel_is_a_triangulation() {
        let g = join(&Graph::new(2).unwrap(), &Graph::cycle(8).unwrap()).unwrap();
        assert_eq!(g.m(), 24);
        let pg = planarity_embed(&g).embedding().unwrap().trace_faces();
        assert_eq!(pg.faces().len(), 16);
        assert!(pg.faces().iter().all(|f| f.size() == 3));
    }

    #[test]
    fn petersen_is_nonplanar_despite_sparse_edges() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let p = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(p.m(), 15);
        assert!(!is_planar(&p));
    }

    #[test]
    fn cut_vertices_and_bridges_are_merged() {
        // bowtie with a pendant path and an isolated vertex
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5), (5, 6)]).unwrap();
        let pg = planarity_embed(&g).embedding().unwrap().trace_faces();
        assert!(pg.satisfies_euler());
        assert_eq!(pg.faces().len(), 3);
    }

    #[test]
    fn kuratowski_witnesses() {
        let w = kuratowski_subgraph(&Graph::complete(6).unwrap()).unwrap();
        assert!(!is_planar(&w));
        assert!(w.m() == 10 || w.m() == 9);
        assert!(kuratowski_subgraph(&Graph::complete(4).unwrap()).is_none());
    }
}
