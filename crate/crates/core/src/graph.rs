//! Simple undirected graphs on dense vertex labels `0..n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

/// A simple undirected graph. Adjacency is stored as one bitset per vertex.
///
/// Vertices are `0..n`. Figures and formulas elsewhere tend to number
/// vertices from 1; the constructors document their own offsets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

/// Edges `(u, v)` with `u < v`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeList(Vec<(usize, usize)>);

impl EdgeList {
    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (usize, usize)> {
        self.0.iter()
    }
}

impl IntoIterator for EdgeList {
    type Item = (usize, usize);
    type IntoIter = std::vec::IntoIter<(usize, usize)>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { adj: vec![VertexSet::new(); n], m: 0 })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderTooSmall { what: "cycle", n, min: 3 });
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if self.adj[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    /// Returns whether the edge was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        self.m -= 1;
        true
    }

    /// A copy of `self` with the edge `uv` added. Panics if `uv` is not a
    /// valid non-edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v).expect("with_edge on an invalid pair");
        g
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> EdgeList {
        EdgeList(self.edges().collect())
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Relabels vertex `i` as `perm[i]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![VertexSet::new(); self.n()];
        for (u, nb) in self.adj.iter().enumerate() {
            adj[perm[u]] = nb.iter().map(|v| perm[v]).collect();
        }
        Graph { adj, m: self.m }
    }

    /// The subgraph induced by `set`, with vertices renumbered in ascending
    /// order. Also returns the original label of each new vertex.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = set.iter().filter(|&v| v < self.n()).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(verts.len()).expect("subgraph is no larger than its host");
        for (i, &v) in verts.iter().enumerate() {
            for w in (self.adj[v] & set).iter() {
                if index[w] > i {
                    g.add_edge(i, index[w]).expect("fresh edge");
                }
            }
        }
        (g, verts)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(s, self.vertices());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `within`.
    pub fn reach(&self, s: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(s);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            next = (next & within) - comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.reach(0, self.vertices()).len() == self.n()
    }

    /// Renders the edge-list text format accepted by [`parse_edge_list`].
    pub fn to_edge_list_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// The join `g ∨ h`: disjoint union plus every edge between the two parts.
/// Vertices of `g` keep their labels; vertex `i` of `h` becomes `g.n() + i`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.n();
    let mut out = Graph::new(off + h.n())?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        out.add_edge(off + u, off + v)?;
    }
    for u in 0..g.n() {
        for v in 0..h.n() {
            out.add_edge(u, off + v)?;
        }
    }
    Ok(out)
}

/// Disjoint union; vertices of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.n();
    let mut out = Graph::new(off + h.n())?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        out.add_edge(off + u, off + v)?;
    }
    Ok(out)
}

/// Parses the edge-list text format: the first non-comment line is `n m`,
/// followed by exactly `m` lines `u v`. `#` starts a comment; blank lines are
/// skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim())).filter(|(_, l)| !l.is_empty());

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace();
        let bad = |what: &str| Error::Parse { line, message: format!("expected two integers ({what})") };
        let a = it.next().ok_or_else(|| bad("missing field"))?;
        let b = it.next().ok_or_else(|| bad("missing field"))?;
        if it.next().is_some() {
            return Err(bad("extra field"));
        }
        let a = a.parse().map_err(|_| bad(a))?;
        let b = b.parse().map_err(|_| bad(b))?;
        Ok((a, b))
    };

    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header".into() })?;
    let (n, m) = parse_pair(hline, header)
        .map_err(|_| Error::Parse { line: hline, message: "malformed header, expected `n m`".into() })?;
    let mut g = Graph::new(n).map_err(|e| Error::Parse { line: hline, message: e.to_string() })?;
    let mut last_line = hline;
    for _ in 0..m {
        let (line, l) =
            lines.next().ok_or(Error::Parse { line: last_line + 1, message: format!("expected {m} edges, found {}", g.m()) })?;
        let (u, v) = parse_pair(line, l)?;
        g.add_edge(u, v).map_err(|e| Error::Parse { line, message: e.to_string() })?;
        last_line = line;
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, message: "trailing data after the declared edges".into() });
    }
    Ok(g)
}
