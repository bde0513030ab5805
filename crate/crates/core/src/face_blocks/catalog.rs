//! Named exceptional 3-face-blocks.
//!
//! The published drawings of these blocks are not available, so every entry
//! is rebuilt from the case analysis that introduces it and carries
//! `reconstructed: true`. Reports show the flag next to each match.

use std::sync::OnceLock;

use serde::Serialize;

use crate::canon::{are_isomorphic, CANON_MAX};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    C3C3,
    C3C4,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub family: Family,
    pub graph: Graph,
    pub reconstructed: bool,
}

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("catalog graphs are simple")
}

fn k5_minus_edge() -> Graph {
    let mut k = Graph::complete(5).expect("K5");
    k.remove_edge(3, 4);
    k
}

fn build() -> Vec<CatalogEntry> {
    let entry = |name, family, graph| CatalogEntry { name, family, graph, reconstructed: true };
    vec![
        // the 5-vertex triangulation
        entry("B1_c33", Family::C3C3, k5_minus_edge()),
        // W4 (hub 0, rim 1-2-3-4), chord 1-3 and vertex 5 on 1 and 3
        entry(
            "B2_c33",
            Family::C3C3,
            g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (5, 1), (5, 3)]),
        ),
        entry("B3_c33", Family::C3C3, Graph::complete(4).expect("K4")),
        entry("B1_c34", Family::C3C4, k5_minus_edge()),
        // W5 (hub 0, rim 1..5) with chords 1-3 and 1-4: degrees 5,5,4,4,3,3
        entry(
            "B2_c34",
            Family::C3C4,
            g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (1, 4)]),
        ),
        // octahedron: antipodal pairs 0-5, 1-3, 2-4 are the non-edges
        entry(
            "B3_c34",
            Family::C3C4,
            g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1), (5, 1), (5, 2), (5, 3), (5, 4)]),
        ),
        // hub 0 with fan rim path 1..6, plus 1-5, 2-5 and 3-5
        entry(
            "B4_c34",
            Family::C3C4,
            g(
                7,
                &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 5), (2, 5), (3, 5)],
            ),
        ),
    ]
}

pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

/// Entries isomorphic to `h`, in catalog order.
pub fn catalog_matches(h: &Graph) -> Vec<&'static CatalogEntry> {
    if h.n() > CANON_MAX {
        return Vec::new();
    }
    catalog()
        .iter()
        .filter(|e| e.graph.n() == h.n() && e.graph.m() == h.m())
        .filter(|e| are_isomorphic(&e.graph, h).expect("orders checked"))
        .collect()
}
