//! Extremal graphs, the closed-form values they attain, and named fixtures.
//!
//! Vertex numbering is fixed so every output is reproducible:
//! - [`double_wheel`]: hubs 0 and 1, rim cycle 2..n-1.
//! - [`c3c3_extremal`]: apex `u = 0`, apex `v = 1`, path 2..n-1.
//! - [`c3c4_extremal`]: hub `v = 0`, rim path 1..5, the triangle pairs
//!   `(6, 7), (8, 9), ..`, and for odd `n` the extra vertex `n - 1`.
//!
//! Rim vertex `v_i` is vertex `i` (labels start at 0, not 1).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::face_blocks::catalog;
use crate::graph::{join, Graph};
use crate::graph6;
use crate::patterns::Pattern;

/// One closed-form candidate value with the formula that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub formula: &'static str,
    pub value: usize,
}

fn check_order(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::OrderTooSmall { what, n, min });
    }
    Ok(())
}

/// Every published candidate for `ex_P(n, p)`. There are two for `C3uC4`
/// from `n = 8` on: `floor(5n/2)-5` and `floor(5n/2)-4`, listed in that
/// order. Exactly one candidate otherwise.
pub fn turan_candidates(n: usize, p: &Pattern) -> Result<Vec<FormulaValue>> {
    check_order("turan_formula", n, 3)?;
    let v = |formula, value| FormulaValue { formula, value };
    Ok(match *p {
        Pattern::Linked(3, 3) | Pattern::Union(3, 3) => vec![match n {
            ..=5 => v("3n-6", 3 * n - 6),
            6 => v("3n-7", 3 * n - 7),
            _ => v("ceil(5n/2)-5", (5 * n).div_ceil(2) - 5),
        }],
        Pattern::Linked(3, 4) => vec![match n {
            ..=6 => v("3n-6", 3 * n - 6),
            7 => v("3n-7", 3 * n - 7),
            _ => v("floor(5n/2)-4", 5 * n / 2 - 4),
        }],
        Pattern::Union(3, 4) => match n {
            ..=6 => vec![v("3n-6", 3 * n - 6)],
            7 => vec![v("3n-7", 3 * n - 7)],
            _ => vec![v("floor(5n/2)-5", 5 * n / 2 - 5), v("floor(5n/2)-4", 5 * n / 2 - 4)],
        },
        Pattern::DisjointCycles(t) if t >= 3 => vec![v("3n-6", 3 * n - 6)],
        _ => return Err(Error::UnsupportedPattern(p.to_string())),
    })
}

/// The first (printed) candidate of [`turan_candidates`].
pub fn turan_formula(n: usize, p: &Pattern) -> Result<usize> {
    Ok(turan_candidates(n, p)?[0].value)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalSpec {
    pub pattern: Pattern,
    pub n: usize,
    pub expected_edges: usize,
}

impl ExtremalSpec {
    pub fn new(pattern: Pattern, n: usize) -> Result<Self> {
        Ok(ExtremalSpec { pattern, n, expected_edges: turan_formula(n, &pattern)? })
    }
}

/// `2K1 ∨ C_{n-2}`.
pub fn double_wheel(n: usize) -> Result<Graph> {
    check_order("double_wheel", n, 5)?;
    join(&Graph::new(2)?, &Graph::cycle(n - 2)?)
}

/// Two apexes over a path: `u` sees the whole path and `v`, and `v` sees a
/// maximum independent set of the path that contains both of its ends.
pub fn c3c3_extremal(n: usize) -> Result<Graph> {
    check_order("c3c3_extremal", n, 7)?;
    let len = n - 2;
    let mut g = Graph::new(n)?;
    g.add_edge(0, 1)?;
    for i in 0..len {
        g.add_edge(0, 2 + i)?;
        if i + 1 < len {
            g.add_edge(2 + i, 3 + i)?;
        }
    }
    let independent: Vec<usize> =
        if len % 2 == 1 { (0..len).step_by(2).collect() } else { (0..len - 2).step_by(2).chain([len - 1]).collect() };
    for i in independent {
        g.add_edge(1, 2 + i)?;
    }
    Ok(g)
}

/// Hub 0 over the rim path 1..5 (four 3-faces) and `t` triangles `0 a b`,
/// then vertex 3 joined to every vertex it does not yet see. For odd `n` one
/// more vertex is joined to 0 and 3. Every cycle passes through 0 or 3.
///
/// The edge count is `5t + 11` for `n = 2t + 6`.
pub fn c3c4_extremal(n: usize) -> Result<Graph> {
    check_order("c3c4_extremal", n, 8)?;
    let t = (n - 6) / 2;
    let mut g = Graph::new(n)?;
    for i in 1..=5 {
        g.add_edge(0, i)?;
        if i < 5 {
            g.add_edge(i, i + 1)?;
        }
    }
    for p in 0..t {
        let (a, b) = (6 + 2 * p, 7 + 2 * p);
        g.add_edge(0, a)?;
        g.add_edge(0, b)?;
        g.add_edge(a, b)?;
    }
    for w in 0..2 * t + 6 {
        if w != 3 && !g.has_edge(3, w) {
            g.add_edge(3, w)?;
        }
    }
    if n % 2 == 1 {
        g.add_edge(0, n - 1)?;
        g.add_edge(3, n - 1)?;
    }
    Ok(g)
}

fn triangulation(n: usize) -> Result<Graph> {
    match n {
        3 | 4 => Graph::complete(n),
        5 => named_graph("k5-e"),
        6 => named_graph("octahedron"),
        _ => Err(Error::SizeBound { what: "small triangulation", n, max: 6 }),
    }
}

/// Search witness for `ex_P(7, C3-C4) = 14`, which is also `C3uC4`-free.
const FIXTURE_7_C3C4: &str = "F@V~w";

/// Extremal graphs below the general-formula range.
pub fn small_extremal(n: usize, p: &Pattern) -> Result<Graph> {
    check_order("small_extremal", n, 3)?;
    match *p {
        Pattern::Linked(3, 3) | Pattern::Union(3, 3) => match n {
            ..=5 => triangulation(n),
            6 => named_graph("b2_c33"),
            _ => Err(Error::SizeBound { what: "small_extremal", n, max: 6 }),
        },
        Pattern::Linked(3, 4) | Pattern::Union(3, 4) => match n {
            ..=6 => triangulation(n),
            7 => graph6::decode(FIXTURE_7_C3C4),
            _ => Err(Error::SizeBound { what: "small_extremal", n, max: 7 }),
        },
        Pattern::DisjointCycles(t) if t >= 3 => match n {
            3 | 4 => triangulation(n),
            _ => double_wheel(n),
        },
        _ => Err(Error::UnsupportedPattern(p.to_string())),
    }
}

/// An extremal graph for `p` on `n` vertices from whichever family covers
/// `n`.
pub fn extremal_graph(n: usize, p: &Pattern) -> Result<Graph> {
    match *p {
        Pattern::Linked(3, 3) | Pattern::Union(3, 3) if n >= 7 => c3c3_extremal(n),
        Pattern::Linked(3, 4) | Pattern::Union(3, 4) if n >= 8 => c3c4_extremal(n),
        _ => small_extremal(n, p),
    }
}

/// Fixtures by name. Parameterized families take `name:k`: `fan:k`
/// (`K1 ∨ P_k`), `wheel:k` (`K1 ∨ C_k`), `cycle:k`, `path:k`,
/// `complete:k`, `star:k` (`K_{1,k}`), `empty:k`, `double_wheel:n`,
/// `c3c3_extremal:n`, `c3c4_extremal:n`. Fixed ones: `theta4`, `prism`,
/// `bowtie`, `paw`, `octahedron`, `k4`, `k5`, `k5-e`, `k33`, `figure1`
/// (a hub whose 3-faces split as 2, 2, 1, 1) and the catalog blocks
/// (`b1_c33`, .., `b4_c34`).
pub fn named_graph(name: &str) -> Result<Graph> {
    let lower = name.trim().to_ascii_lowercase();
    let unknown = || Error::UnknownName(name.to_string());
    if let Some((base, arg)) = lower.split_once(':') {
        let k: usize = arg.parse().map_err(|_| unknown())?;
        let k1 = Graph::new(1)?;
        return match base {
            "fan" => join(&k1, &Graph::path(k)?),
            "wheel" => join(&k1, &Graph::cycle(k)?),
            "cycle" => Graph::cycle(k),
            "path" => Graph::path(k),
            "complete" => Graph::complete(k),
            "star" => join(&k1, &Graph::new(k)?),
            "empty" => Graph::new(k),
            "double_wheel" => double_wheel(k),
            "c3c3_extremal" => c3c3_extremal(k),
            "c3c4_extremal" => c3c4_extremal(k),
            _ => Err(unknown()),
        };
    }
    let edges = |n: usize, e: &[(usize, usize)]| Graph::from_edges(n, e.iter().copied());
    match lower.as_str() {
        "theta4" => edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        "prism" => edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
        "bowtie" => edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
        "paw" => edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]),
        "k4" => Graph::complete(4),
        "k5" => Graph::complete(5),
        "k5-e" => {
            let mut g = Graph::complete(5)?;
            g.remove_edge(3, 4);
            Ok(g)
        }
        "k33" => edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
        "octahedron" => Ok(catalog().iter().find(|e| e.name == "B3_c34").expect("catalog entry").graph.clone()),
        "figure1" => {
            // hub 0; fans on rims 1-2-3, 4-5-6, 7-8 and 9-10
            let mut g = join(&Graph::new(1)?, &Graph::new(10)?)?;
            for (a, b) in [(1, 2), (2, 3), (4, 5), (5, 6), (7, 8), (9, 10)] {
                g.add_edge(a, b)?;
            }
            Ok(g)
        }
        other => catalog().iter().find(|e| e.name.eq_ignore_ascii_case(other)).map(|e| e.graph.clone()).ok_or_else(unknown),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        assert_eq!(turan_formula(7, &Pattern::C3C3).unwrap(), 13);
        assert_eq!(turan_formula(8, &Pattern::C3C4).unwrap(), 16);
        assert_eq!(turan_formula(6, &Pattern::TWO_C3).unwrap(), 11);
        let c = turan_candidates(8, &Pattern::C3_U_C4).unwrap();
        assert_eq!(c.iter().map(|f| f.value).collect::<Vec<_>>(), vec![15, 16]);
        assert_eq!(turan_formula(10, &Pattern::DisjointCycles(3)).unwrap(), 24);
        assert!(turan_formula(2, &Pattern::C3C3).is_err());
        assert!(turan_formula(8, &Pattern::Theta4).is_err());
    }

    #[test]
    fn construction_sizes() {
        assert_eq!(double_wheel(10).unwrap().m(), 24);
        assert_eq!(double_wheel(5).unwrap().m(), 9);
        assert_eq!(c3c3_extremal(11).unwrap().m(), 23);
        assert_eq!(c3c3_extremal(7).unwrap().m(), 13);
        assert_eq!(c3c3_extremal(8).unwrap().m(), 15);
        assert_eq!(c3c4_extremal(10).unwrap().m(), 21);
        assert_eq!(c3c4_extremal(8).unwrap().m(), 16);
        assert_eq!(c3c4_extremal(9).unwrap().m(), 18);
        assert!(c3c3_extremal(6).is_err());
        assert!(c3c4_extremal(7).is_err());
    }

    #[test]
    fn named() {
        let w4 = named_graph("wheel:4").unwrap();
        assert_eq!((w4.n(), w4.m()), (5, 8));
        let t = named_graph("theta4").unwrap();
        assert_eq!((t.n(), t.m()), (4, 5));
        assert_eq!(named_graph("prism").unwrap().m(), 9);
        let f = named_graph("figure1").unwrap();
        assert_eq!((f.n(), f.m()), (11, 16));
        assert_eq!(named_graph("B4_c34").unwrap().n(), 7);
        assert!(matches!(named_graph("nope"), Err(Error::UnknownName(_))));
        assert!(named_graph("fan:x").is_err());
    }
}
