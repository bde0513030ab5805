//! Report payloads. Field order is the JSON key order.

use std::collections::BTreeMap;

use serde::Serialize;
use turan_core::constructions::FormulaValue;
use turan_core::embedding::{FaceStats, PlaneGraph};
use turan_core::face_blocks::BlockReport;
use turan_core::graph6;
use turan_core::patterns::Witness;
use turan_core::search::HarnessReport;
use turan_core::Graph;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct GraphOut {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
}

impl GraphOut {
    pub fn of(g: &Graph) -> Self {
        GraphOut { graph6: graph6::encode(g), n: g.n(), edges: g.m() }
    }
}

#[derive(Debug, Serialize)]
pub struct CandidateCheck {
    pub formula: &'static str,
    pub value: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl CandidateCheck {
    pub fn against(candidates: &[FormulaValue], value: Option<usize>) -> Vec<CandidateCheck> {
        candidates
            .iter()
            .map(|c| CandidateCheck { formula: c.formula, value: c.value, matches: value == Some(c.value) })
            .collect()
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyRow {
    pub n: usize,
    /// `None` when the budget ran out.
    pub computed: Option<usize>,
    pub formula: usize,
    #[serde(rename = "match")]
    pub matches: bool,
    pub formula_expr: &'static str,
    pub candidates: Vec<CandidateCheck>,
    /// `[lower, upper]` when the budget ran out.
    pub bracket: Option<[usize; 2]>,
    pub witness: Option<GraphOut>,
    pub graphs_examined: u64,
    pub classes: Vec<usize>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct Discrepancy {
    pub n: usize,
    pub computed: usize,
    pub candidates: Vec<CandidateCheck>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub tool_version: &'static str,
    pub pattern: String,
    pub strategy: String,
    pub n_min: usize,
    pub n_max: usize,
    pub rows: Vec<VerifyRow>,
    pub discrepancies: Vec<Discrepancy>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn text(&self) -> String {
        let mut s = format!("pattern {} ({} search)\n", self.pattern, self.strategy);
        s.push_str(&format!(
            "{:>3}  {:>8}  {:>7}  {:<14}  {:<5}  {:>10}  witness\n",
            "n", "computed", "formula", "expression", "match", "examined"
        ));
        for r in &self.rows {
            let computed = match (r.computed, r.bracket) {
                (Some(v), _) => v.to_string(),
                (None, Some([l, u])) => format!("[{l},{u}]"),
                (None, None) => "-".into(),
            };
            let witness = r.witness.as_ref().map_or("-", |w| w.graph6.as_str());
            s.push_str(&format!(
                "{:>3}  {:>8}  {:>7}  {:<14}  {:<5}  {:>10}  {}\n",
                r.n,
                computed,
                r.formula,
                r.formula_expr,
                if r.matches { "yes" } else { "NO" },
                r.graphs_examined,
                witness
            ));
            for c in r.candidates.iter().skip(1) {
                s.push_str(&format!(
                    "{:>3}  {:>8}  {:>7}  {:<14}  {:<5}\n",
                    "",
                    "",
                    c.value,
                    c.formula,
                    if c.matches { "yes" } else { "NO" }
                ));
            }
        }
        for d in &self.discrepancies {
            let parts: Vec<String> = d.candidates.iter().map(|c| format!("{} gives {}", c.formula, c.value)).collect();
            s.push_str(&format!("DISCREPANCY n={}: computed {}; {}\n", d.n, d.computed, parts.join(", ")));
        }
        s.push_str(if self.pass { "all rows match\n" } else { "MISMATCH\n" });
        s
    }

    pub fn csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "computed", "formula", "expected", "match", "witness_graph6", "graphs_examined"])?;
        for r in &self.rows {
            for c in &r.candidates {
                w.write_record([
                    r.n.to_string(),
                    r.computed.map(|v| v.to_string()).unwrap_or_default(),
                    c.formula.to_string(),
                    c.value.to_string(),
                    c.matches.to_string(),
                    r.witness.as_ref().map(|g| g.graph6.clone()).unwrap_or_default(),
                    r.graphs_examined.to_string(),
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[derive(Debug, Serialize)]
pub struct ExtremalReport {
    pub command: &'static str,
    pub tool_version: &'static str,
    pub pattern: String,
    pub n: usize,
    pub graph: GraphOut,
    pub edge_list: Vec<[usize; 2]>,
    pub candidates: Vec<CandidateCheck>,
    pub planar: bool,
    pub free: bool,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub command: &'static str,
    pub tool_version: &'static str,
    pub pattern: String,
    pub graph: GraphOut,
    pub planar: bool,
    pub free: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn text(&self) -> String {
        let mut s = format!(
            "graph: n={} m={} graph6={}\nplanar: {}\n",
            self.graph.n,
            self.graph.edges,
            self.graph.graph6,
            if self.planar { "yes" } else { "no" }
        );
        if self.free {
            s.push_str(&format!("FREE of {}\n", self.pattern));
        } else {
            s.push_str(&format!("NOT FREE: contains {}\n", self.pattern));
            match self.witness.as_ref().expect("witness present") {
                Witness::Linked(w) => s.push_str(&format!(
                    "  cycle1 {:?}\n  cycle2 {:?}\n  bridge {:?}\n",
                    w.cycle1.vertices(),
                    w.cycle2.vertices(),
                    w.bridge
                )),
                Witness::Union { cycle1, cycle2 } => {
                    s.push_str(&format!("  cycle1 {:?}\n  cycle2 {:?}\n", cycle1.vertices(), cycle2.vertices()))
                }
                Witness::Cycles { cycles } => {
                    for c in cycles {
                        s.push_str(&format!("  cycle {:?}\n", c.vertices()));
                    }
                }
                Witness::Theta4 { cycle } => s.push_str(&format!("  cycle {cycle:?} with chord {}-{}\n", cycle[0], cycle[2])),
            }
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct BlocksReport {
    pub command: &'static str,
    pub tool_version: &'static str,
    pub graph: GraphOut,
    pub planar: bool,
    /// Edges of a Kuratowski subgraph when the graph is not planar.
    pub kuratowski: Option<Vec<[usize; 2]>>,
    pub rotation: Vec<Vec<usize>>,
    pub blocks: Vec<BlockReport>,
    pub rv_total: usize,
    pub three_f3: usize,
    pub identity_ok: bool,
}

impl BlocksReport {
    pub fn text(&self) -> String {
        let mut s = format!("graph: n={} m={} graph6={}\n", self.graph.n, self.graph.edges, self.graph.graph6);
        if !self.planar {
            s.push_str("NOT PLANAR\n");
            if let Some(k) = &self.kuratowski {
                s.push_str(&format!("kuratowski subgraph edges: {k:?}\n"));
            }
            return s;
        }
        s.push_str(&rotation_text(&self.rotation));
        s.push_str("blocks\n");
        s.push_str(&format!(
            "  {:<24} {:>5} {:>6} {:>9} {:>6}  {:<11} catalog\n",
            "vertices", "order", "rv_sum", "threshold", "excess", "class"
        ));
        for b in &self.blocks {
            let class = serde_json::to_value(b.class).expect("class serializes");
            let catalog = if b.catalog.is_empty() {
                "-".to_string()
            } else {
                format!("{}{}", b.catalog.join(","), if b.reconstructed { " (reconstructed)" } else { "" })
            };
            s.push_str(&format!(
                "  {:<24} {:>5} {:>6} {:>9} {:>+6}  {:<11} {}\n",
                format!("{:?}", b.vertices),
                b.order(),
                b.rv_sum,
                b.threshold,
                b.excess,
                class.as_str().unwrap_or("?"),
                catalog
            ));
        }
        s.push_str(&format!(
            "sum |R_v| = {}, 3 f3 = {}: {}\n",
            self.rv_total,
            self.three_f3,
            if self.identity_ok { "ok" } else { "MISMATCH" }
        ));
        s
    }
}

fn rotation_text(rot: &[Vec<usize>]) -> String {
    let mut s = String::from("rotation (clockwise)\n");
    for (v, r) in rot.iter().enumerate() {
        let list: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("  {v}: {}\n", list.join(" ")));
    }
    s
}

pub fn rotation_of(pg: &PlaneGraph) -> Vec<Vec<usize>> {
    (0..pg.graph().n()).map(|v| pg.rotation_system().rotation(v).to_vec()).collect()
}

#[derive(Debug, Serialize)]
pub struct FaceOut {
    pub size: usize,
    pub walk: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct FacesReport {
    pub command: &'static str,
    pub tool_version: &'static str,
    pub graph: GraphOut,
    pub planar: bool,
    pub rotation: Vec<Vec<usize>>,
    pub faces: Vec<FaceOut>,
    pub plane_face_sizes: Vec<usize>,
    /// `f_i` keyed by `i`.
    pub f: BTreeMap<String, usize>,
    /// `e_i` keyed by `i`.
    pub e: BTreeMap<String, usize>,
    /// `e_{i,j}` keyed by `"i,j"`.
    pub e_pairs: BTreeMap<String, usize>,
    pub euler_ok: bool,
    pub property1_ok: bool,
    pub property1_violations: Vec<usize>,
}

impl FacesReport {
    pub fn from_plane(graph: GraphOut, pg: &PlaneGraph, st: &FaceStats) -> Self {
        // numeric order for the keys, then stringified
        let f = st.faces_by_size.iter().map(|(i, c)| (format!("{i}"), *c)).collect();
        let e = st.edges_on_size.iter().map(|(i, c)| (format!("{i}"), *c)).collect();
        let e_pairs = st.edges_by_sides.iter().map(|((i, j), c)| (format!("{i},{j}"), *c)).collect();
        FacesReport {
            command: "faces",
            tool_version: TOOL_VERSION,
            graph,
            planar: true,
            rotation: rotation_of(pg),
            faces: pg.faces().iter().map(|f| FaceOut { size: f.size(), walk: f.walk().collect() }).collect(),
            plane_face_sizes: pg.plane_face_sizes(),
            f,
            e,
            e_pairs,
            euler_ok: pg.satisfies_euler(),
            property1_ok: st.property1_holds(),
            property1_violations: st.property1_violations(),
        }
    }

    pub fn text(&self, st: Option<&FaceStats>) -> String {
        let mut s = format!("graph: n={} m={} graph6={}\n", self.graph.n, self.graph.edges, self.graph.graph6);
        let Some(st) = st else {
            s.push_str("NOT PLANAR\n");
            return s;
        };
        s.push_str(&rotation_text(&self.rotation));
        s.push_str("faces\n");
        for f in &self.faces {
            let walk: Vec<String> = f.walk.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("  size {:>2}: {}\n", f.size, walk.join(" ")));
        }
        s.push_str(&format!("{:>4} {:>5} {:>5} {:>6}\n", "i", "f_i", "e_i", "e_ii"));
        for (&i, &fi) in &st.faces_by_size {
            s.push_str(&format!("{:>4} {:>5} {:>5} {:>6}\n", i, fi, st.e(i), st.e_pair(i, i)));
        }
        for (&(i, j), &c) in &st.edges_by_sides {
            if i != j {
                s.push_str(&format!("  e_{{{i},{j}}} = {c}\n"));
            }
        }
        s.push_str(&format!("euler: {}\n", if self.euler_ok { "ok" } else { "FAILED" }));
        s.push_str(&format!(
            "property 1: {}\n",
            if self.property1_ok { "ok".to_string() } else { format!("FAILED at sizes {:?}", self.property1_violations) }
        ));
        s
    }
}

#[derive(Debug, Serialize)]
pub struct HarnessOut {
    pub command: &'static str,
    pub tool_version: &'static str,
    pub examined: usize,
    #[serde(flatten)]
    pub report: HarnessReport,
    pub elapsed_ms: u64,
}

impl HarnessOut {
    pub fn text(&self) -> String {
        let r = &self.report;
        let mut s = format!(
            "lemma {} over n = {}..={}: {} graphs, {} embeddings, {} checks ({} vacuous)\n",
            r.lemma.name(),
            r.n_min,
            r.n_max,
            r.graphs,
            r.embeddings,
            r.checks,
            r.vacuous
        );
        for b in &r.observed_blocks {
            let catalog = if b.catalog.is_empty() { "-".into() } else { b.catalog.join(",") };
            s.push_str(&format!(
                "  positive-excess block {:<8} order {} excess {:+} seen {} times, catalog {}{}\n",
                b.graph6,
                b.order,
                b.excess,
                b.occurrences,
                catalog,
                if b.reconstructed { " (reconstructed)" } else { "" }
            ));
        }
        for v in &r.violations {
            s.push_str(&format!("  VIOLATION {} embedding {} {}: {}\n", v.graph6, v.embedding, v.subject, v.observed));
        }
        s.push_str(&format!("{} violations\n", r.violations.len()));
        s
    }
}
