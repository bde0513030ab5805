//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criterion 7 has one sub-check, `face_block_c34`, that fails against the
//! exhaustive data. The run still exits 0 when that is the only failure and
//! the failing blocks are exactly the known ones; any other outcome,
//! including that sub-check starting to pass, exits 1.

use std::process::Command;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use turan_core::constructions::{c3c3_extremal, c3c4_extremal, named_graph, turan_formula};
use turan_core::embedding::{face_stats, is_planar, planarity_embed};
use turan_core::face_blocks::{block_decomposition, rv_identity};
use turan_core::patterns::{is_free, Pattern};
use turan_core::search::{exact_ex_p, lemma_harness, LemmaId, SearchOptions};
use turan_core::{graph6, Graph, VertexSet};

const FIXTURES: [&str; 24] = [
    "theta4",
    "prism",
    "bowtie",
    "paw",
    "octahedron",
    "k4",
    "k5-e",
    "figure1",
    "b1_c33",
    "b2_c33",
    "b3_c33",
    "b1_c34",
    "b2_c34",
    "b3_c34",
    "b4_c34",
    "fan:5",
    "wheel:5",
    "wheel:8",
    "double_wheel:10",
    "c3c3_extremal:11",
    "c3c4_extremal:10",
    "cycle:7",
    "path:4",
    "star:5",
];

struct Line {
    pass: bool,
    detail: String,
}

fn line(pass: bool, detail: impl Into<String>) -> Line {
    Line { pass, detail: detail.into() }
}

fn cli_json(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_planar-turan")).args(args).output().expect("binary runs");
    let v = serde_json::from_slice(&out.stdout).expect("json report");
    (out.status.code().unwrap_or(-1), v)
}

fn computed(v: &Value) -> Vec<u64> {
    v["rows"].as_array().unwrap().iter().filter_map(|r| r["computed"].as_u64()).collect()
}

fn verify_values(pattern: &str, expected: [u64; 6]) -> Line {
    let t = Instant::now();
    let (code, v) = cli_json(&["verify", "--pattern", pattern, "--n-max", "8", "--format", "json"]);
    let got = computed(&v);
    line(code == 0 && got == expected, format!("n=3..8 -> {got:?}, exit {code}, {:.1}s", t.elapsed().as_secs_f64()))
}

fn criterion3() -> Line {
    let r = exact_ex_p(6, &Pattern::TWO_C3, &SearchOptions::default()).unwrap();
    line(r.value == 11, format!("ex_P(6, 2C3) = {} (witness {})", r.value, graph6::encode(&r.witness)))
}

fn criterion4() -> Line {
    let (code, v) = cli_json(&["verify", "--pattern", "c3uc4", "--n-min", "8", "--n-max", "8", "--format", "json"]);
    let row = &v["rows"][0];
    let cands: Vec<(String, u64)> = row["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["formula"].as_str().unwrap().to_string(), c["value"].as_u64().unwrap()))
        .collect();
    let value = row["computed"].as_u64();
    let mismatch = value.is_some_and(|x| cands.iter().any(|c| c.1 != x));
    let flagged = !v["discrepancies"].as_array().unwrap().is_empty();
    let both = cands.iter().map(|c| c.1).collect::<Vec<_>>() == [15, 16];
    line(
        value.is_some() && both && flagged == mismatch && flagged && code == 1,
        format!("ex_P(8, C3uC4) = {value:?} vs {cands:?}; discrepancy flagged: {flagged}, exit {code}"),
    )
}

fn criterion5() -> Line {
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in 7..=200 {
        let g = c3c3_extremal(n).unwrap();
        let ok = is_planar(&g)
            && is_free(&g, &Pattern::C3C3).unwrap()
            && is_free(&g, &Pattern::TWO_C3).unwrap()
            && g.m() == turan_formula(n, &Pattern::C3C3).unwrap();
        if !ok {
            bad.push(format!("c3c3 n={n}"));
        }
    }
    for n in 8..=200 {
        let g = c3c4_extremal(n).unwrap();
        let ok = is_planar(&g)
            && is_free(&g, &Pattern::C3C4).unwrap()
            && is_free(&g, &Pattern::C3_U_C4).unwrap()
            && g.m() == turan_formula(n, &Pattern::C3C4).unwrap();
        if !ok {
            bad.push(format!("c3c4 n={n}"));
        }
    }
    line(bad.is_empty(), format!("387 constructions, failures {bad:?}, {:.1}s", t.elapsed().as_secs_f64()))
}

fn random_planar(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(1..=10);
    let max = if n >= 3 { 3 * n - 6 } else { n - 1 };
    let target = rng.gen_range(0..=max);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::new(n).unwrap();
    for (u, v) in pairs {
        if g.m() == target {
            break;
        }
        let h = g.with_edge(u, v);
        if is_planar(&h) {
            g = h;
        }
    }
    g
}

/// Names of the identities that fail on `g`'s embedding.
fn identity_failures(g: &Graph) -> Vec<&'static str> {
    let pg = planarity_embed(g).embedding().expect("planar").trace_faces();
    let mut bad = Vec::new();
    for c in g.components().into_iter().filter(|c| c.len() > 1) {
        let e_c = g.edges().filter(|&(u, _)| c.contains(u)).count() as i64;
        let f_c = pg.faces().iter().filter(|f| c.contains(f.darts()[0].0)).count() as i64;
        if c.len() as i64 - e_c + f_c != 2 {
            bad.push("euler");
        }
    }
    let st = face_stats(&pg);
    for (&i, &fi) in &st.faces_by_size {
        let (ei, eii) = (st.e(i), st.e_pair(i, i));
        if i * fi != ei + eii || eii > ei || ei > st.edges {
            bad.push("property1");
        }
    }
    let (sum, three_f3) = rv_identity(&pg);
    if sum != three_f3 {
        bad.push("rv_sum");
    }
    let mut cover = VertexSet::new();
    for b in block_decomposition(&pg) {
        if cover.intersects(&b.vertices) {
            bad.push("blocks_overlap");
        }
        cover |= b.vertices;
    }
    if cover != g.vertices() {
        bad.push("blocks_cover");
    }
    bad
}

fn criterion6() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7572_616e);
    let mut graphs: Vec<Graph> = (0..1000).map(|_| random_planar(&mut rng)).collect();
    graphs.extend(FIXTURES.iter().map(|f| named_graph(f).unwrap()));
    let failures: Vec<_> = graphs.iter().flat_map(identity_failures).collect();
    line(
        failures.is_empty(),
        format!("{} graphs (1000 random, {} fixtures), violations {failures:?}", graphs.len(), FIXTURES.len()),
    )
}

/// `(all sub-checks except face_block_c34 pass, face_block_c34 fails exactly as recorded, detail)`
fn criterion7() -> (Line, bool) {
    let t = Instant::now();
    let mut parts = Vec::new();
    let mut others_ok = true;
    for (lemma, n_max) in [
        (LemmaId::Lemma41, 7),
        (LemmaId::FaceBlockC33, 6),
        (LemmaId::Partition, 6),
        (LemmaId::Rv, 6),
        (LemmaId::BadBlockIsolation, 7),
    ] {
        let r = lemma_harness(lemma, n_max).unwrap();
        others_ok &= r.passed();
        let bad: Vec<String> = r.observed_blocks.iter().map(|b| format!("{}:{:+}", b.order, b.excess)).collect();
        let blocks = if bad.is_empty() { String::new() } else { format!(" positive-excess {bad:?}") };
        parts.push(format!("{lemma} {} violations/{} embeddings{blocks}", r.violations.len(), r.embeddings));
    }
    let c34 = lemma_harness(LemmaId::FaceBlockC34, 7).unwrap();
    let failing: Vec<String> =
        c34.violations.iter().map(|v| v.graph6.clone()).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let over: Vec<String> = c34
        .observed_blocks
        .iter()
        .filter(|b| b.excess > 3)
        .map(|b| format!("{} {:+} {:?}", b.graph6, b.excess, b.catalog))
        .collect();
    parts.push(format!(
        "face_block_c34 {} violations/{} embeddings, hosts {failing:?}, blocks over +3: {over:?}",
        c34.violations.len(),
        c34.embeddings
    ));
    let known = !c34.passed()
        && over.len() == 2
        && c34.observed_blocks.iter().filter(|b| b.excess > 3).all(|b| b.order == 6 && b.excess == 6);
    let pass = others_ok && c34.passed();
    (line(pass, format!("{} ({:.1}s)", parts.join("; "), t.elapsed().as_secs_f64())), others_ok && known)
}

fn criterion8() -> Line {
    let mut checked = 0;
    let mut bad = Vec::new();
    for p in [Pattern::C3C3, Pattern::C3C4, Pattern::TWO_C3, Pattern::C3_U_C4] {
        for n in 3..=8 {
            let r = exact_ex_p(n, &p, &SearchOptions::default()).unwrap();
            let w = &r.witness;
            checked += 1;
            let round = graph6::decode(&graph6::encode(w)).unwrap() == *w;
            if !(planarity_embed(w).is_planar() && is_free(w, &p).unwrap() && w.m() == r.value && round) {
                bad.push(format!("{p} n={n}"));
            }
        }
    }
    let mut corpus: Vec<Graph> = FIXTURES.iter().map(|f| named_graph(f).unwrap()).collect();
    corpus.extend((7..=200).map(|n| c3c3_extremal(n).unwrap()));
    corpus.extend((8..=200).map(|n| c3c4_extremal(n).unwrap()));
    for g in &corpus {
        if graph6::decode(&graph6::encode(g)).unwrap() != *g {
            bad.push(format!("graph6 {}", graph6::encode(g)));
        }
    }
    line(
        bad.is_empty(),
        format!("{checked} witnesses re-validated, {} corpus graphs round-tripped, failures {bad:?}", corpus.len()),
    )
}

fn main() {
    let c7 = criterion7();
    let lines = [
        ("C3-C3 values", verify_values("c3c3", [3, 6, 9, 11, 13, 15])),
        ("C3-C4 values", verify_values("c3c4", [3, 6, 9, 12, 14, 16])),
        ("2C3 at n=6", criterion3()),
        ("C3uC4 at n=8", criterion4()),
        ("constructions", criterion5()),
        ("property suite", criterion6()),
        ("lemma harness", c7.0),
        ("witness re-validation", criterion8()),
    ];
    let mut unexpected = false;
    for (i, (name, l)) in lines.iter().enumerate() {
        println!("criterion {} [{name}]: {} - {}", i + 1, if l.pass { "PASS" } else { "FAIL" }, l.detail);
        let expected_failure = i + 1 == 7 && c7.1;
        unexpected |= !l.pass && !expected_failure;
    }
    let failed = lines.iter().filter(|(_, l)| !l.pass).count();
    println!("{} passed, {failed} failed", lines.len() - failed);
    if !c7.1 && lines[6].1.pass {
        println!("criterion 7 now passes; the recorded face_block_c34 failure no longer reproduces");
        unexpected = true;
    }
    if unexpected {
        std::process::exit(1);
    }
}
