//! Acceptance run: one `[PASS]`/`[FAIL]` line per criterion, nonzero exit on
//! any failure. Runs under `cargo test`; `cargo test --release --test
//! acceptance` gives timings closer to what users see.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hexcut::boundary::{emit_word, from_hexagons, parse_word, BoundaryCycle, BoundaryError, BoundaryWord};
use hexcut::generators::{generate, standard_corpus, FamilySpec, SplitMix64};
use hexcut::indices::{compute_all, IndexValues};
use hexcut::lattice::{EdgeClass, HexCoord, StepDir, VertexCoord};
use hexcut::oracle::{build_graph, edge_wiener_line_graph, oracle_values, OracleError, DEFAULT_BOUND, LINE_GRAPH_BOUND};
use hexcut::quotient::{quotient_trees, reference_with_component_edges, sweep_direction};
use hexcut::treealgo::{definitional_oracle, TreeIndex, WeightedTree};

const DESK_BUDGET: Duration = Duration::from_secs(1);
const CORPUS_BUDGET: Duration = Duration::from_secs(60);
const TREE_BUDGET: Duration = Duration::from_secs(10);
const RANDOM_TREES: usize = 1000;
const ROTATIONS: usize = 10;
const SCALING_KS: [u32; 3] = [64, 128, 256];
const SCALING_REPS: usize = 31;
const MAX_TIME_RATIO: f64 = 3.0;
const SOFT_H256_MS: f64 = 100.0;

type Outcome = Result<String, String>;

struct System {
    name: String,
    hexagons: HashSet<HexCoord>,
    cycle: BoundaryCycle,
}

fn corpus() -> Vec<System> {
    standard_corpus()
        .into_iter()
        .map(|spec| {
            let hexagons = generate(&spec).expect("corpus spec is valid");
            let cycle = from_hexagons(&hexagons).expect("corpus member is a benzenoid");
            System { name: spec.to_string(), hexagons, cycle }
        })
        .collect()
}

fn hexes(list: &[(i64, i64)]) -> HashSet<HexCoord> {
    list.iter().map(|&(q, r)| HexCoord::new(q, r)).collect()
}

fn fast(z: &BoundaryCycle) -> Result<IndexValues, String> {
    compute_all(z).map(|r| r.values).map_err(|e| e.to_string())
}

fn oracle(hs: &HashSet<HexCoord>) -> Result<IndexValues, String> {
    let g = build_graph(hs).map_err(|e| e.to_string())?;
    oracle_values(&g, DEFAULT_BOUND).map_err(|e| e.to_string())
}

fn within(start: Instant, budget: Duration, detail: String) -> Outcome {
    let took = start.elapsed();
    if took > budget {
        Err(format!("{detail}; took {took:.2?}, budget {budget:?}"))
    } else {
        Ok(format!("{detail}; {took:.2?}"))
    }
}

fn desk_values() -> Outcome {
    let start = Instant::now();
    // (name, hexagons, W, We, Ŵe, Sz, Sze, PI, PIv); zero means not pinned
    let cases: [(&str, &[(i64, i64)], [u128; 7]); 3] = [
        ("benzene", &[(0, 0)], [27, 27, 12, 54, 24, 24, 36]),
        ("naphthalene", &[(0, 0), (1, 0)], [109, 127, 72, 243, 160, 96, 110]),
        ("anthracene", &[(0, 0), (1, 0), (2, 0)], [279, 0, 0, 656, 0, 0, 0]),
    ];
    for (name, list, want) in cases {
        let hs = hexes(list);
        let o = oracle(&hs)?;
        let f = fast(&from_hexagons(&hs).map_err(|e| e.to_string())?)?;
        if f != o {
            return Err(format!("{name}: fast {f:?} != oracle {o:?}"));
        }
        let got = [o.wiener, o.edge_wiener, o.edge_wiener_hat, o.szeged, o.edge_szeged, o.pi, o.vertex_pi];
        for (g, w) in got.iter().zip(want) {
            if w != 0 && *g != w {
                return Err(format!("{name}: got {got:?}, expected {want:?}"));
            }
        }
    }
    within(start, DESK_BUDGET, "benzene, naphthalene, anthracene exact".into())
}

fn corpus_equivalence(systems: &[System]) -> Outcome {
    let start = Instant::now();
    for s in systems {
        let (f, o) = (fast(&s.cycle)?, oracle(&s.hexagons)?);
        if f != o {
            return Err(format!("{}: fast {f:?} != oracle {o:?}", s.name));
        }
    }
    within(start, CORPUS_BUDGET, format!("{} systems, all fields equal", systems.len()))
}

fn random_tree(rng: &mut SplitMix64) -> WeightedTree {
    let n = 1 + rng.below(12);
    let weights = (0..n).map(|_| rng.below(10) as u64).collect();
    let edges = (1..n).map(|i| (rng.below(i), i, rng.below(10) as u64)).collect();
    WeightedTree::new(weights, edges).expect("parent links form a tree")
}

fn tree_primitives() -> Outcome {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0x7ee5);
    for i in 0..RANDOM_TREES {
        let t = random_tree(&mut rng);
        for which in TreeIndex::ALL {
            let f = which.fast(&t).map_err(|e| e.to_string())?;
            let o = definitional_oracle(&t, which).map_err(|e| e.to_string())?;
            if f != o {
                return Err(format!("tree {i} {which:?}: fast {f} != oracle {o} on {t:?}"));
            }
        }
    }
    within(start, TREE_BUDGET, format!("{RANDOM_TREES} trees x 7 primitives"))
}

fn identities(systems: &[System]) -> Outcome {
    for s in systems {
        let v = fast(&s.cycle)?;
        let (n, m) = (v.vertices as u128, v.edges as u128);
        if v.edge_wiener != v.edge_wiener_hat + m * (m - 1) / 2 {
            return Err(format!("{}: We != We_hat + C(m,2)", s.name));
        }
        if v.vertex_pi != n * m {
            return Err(format!("{}: PIv != n*m", s.name));
        }
        let trees = quotient_trees(&s.cycle).map_err(|e| e.to_string())?;
        let vsum: Vec<u64> = trees.iter().map(|t| t.vertex_total()).collect();
        let esum: Vec<u64> = trees.iter().map(|t| t.edge_total()).collect();
        if vsum.iter().any(|&x| x != vsum[0]) || esum.iter().any(|&x| x != esum[0]) {
            return Err(format!("{}: direction sums differ: vcount {vsum:?}, w'+ecount {esum:?}", s.name));
        }
        if vsum[0] as u128 != n || esum[0] as u128 != m {
            return Err(format!("{}: direction sums {} / {} vs n={n} m={m}", s.name, vsum[0], esum[0]));
        }
        for (t, class) in trees.iter().zip(EdgeClass::ALL) {
            let (reference, ecounts) =
                reference_with_component_edges(&s.hexagons, class).map_err(|e| e.to_string())?;
            let mut explicit: Vec<(u64, u64)> = reference.vcounts.iter().copied().zip(ecounts).collect();
            let mut derived: Vec<(u64, u64)> = (0..t.node_count()).map(|i| (t.vcounts[i], t.ecount(i))).collect();
            explicit.sort_unstable();
            derived.sort_unstable();
            if explicit != derived {
                return Err(format!("{} {class}: (vcount, ecount) multisets differ", s.name));
            }
        }
    }
    Ok(format!("{} systems x 5 identities", systems.len()))
}

fn line_graph(systems: &[System]) -> Outcome {
    let mut checked = 0;
    for s in systems {
        let g = build_graph(&s.hexagons).map_err(|e| e.to_string())?;
        if g.vertex_count() > LINE_GRAPH_BOUND {
            continue;
        }
        let want = edge_wiener_line_graph(&g).map_err(|e| e.to_string())?;
        let got = fast(&s.cycle)?.edge_wiener;
        if got != want {
            return Err(format!("{}: We {got} != W(L(G)) {want}", s.name));
        }
        checked += 1;
    }
    Ok(format!("{checked} systems with n <= {LINE_GRAPH_BOUND}"))
}

fn structural(systems: &[System]) -> Outcome {
    for s in systems {
        for class in EdgeClass::ALL {
            let swept = sweep_direction(&s.cycle, class).map_err(|e| e.to_string())?;
            let (reference, _) = reference_with_component_edges(&s.hexagons, class).map_err(|e| e.to_string())?;
            if swept.canonical_encoding() != reference.canonical_encoding() {
                return Err(format!("{} {class}: sweep tree not isomorphic to reference", s.name));
            }
        }
    }
    Ok(format!("{} systems x 3 directions", systems.len()))
}

fn reversed(z: &BoundaryCycle) -> Result<BoundaryCycle, String> {
    let mut vs = z.vertices().to_vec();
    vs.reverse();
    BoundaryCycle::from_vertices(vs).map_err(|e| e.to_string())
}

fn invariance(systems: &[System]) -> Outcome {
    let mut rng = SplitMix64::new(0x51a7);
    for s in systems {
        let base = compute_all(&s.cycle).map_err(|e| e.to_string())?;
        let word = emit_word(&s.cycle);
        let reparsed = parse_word(&word).map_err(|e| e.to_string())?;
        let mut variants = vec![reparsed.clone(), reversed(&reparsed)?];
        for _ in 0..ROTATIONS {
            let rotated = reparsed.rotate_start(rng.below(reparsed.len()));
            variants.push(reversed(&rotated)?);
            variants.push(rotated);
        }
        for z in &variants {
            let r = compute_all(z).map_err(|e| e.to_string())?;
            if r.values != base.values || r.per_direction != base.per_direction {
                return Err(format!("{}: result depends on start or orientation", s.name));
            }
        }
        if fast(&s.cycle.rotate120())? != base.values {
            return Err(format!("{}: result changes under 120 degree rotation", s.name));
        }
    }
    Ok(format!("{} systems x {} variants", systems.len(), 2 * ROTATIONS + 2))
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.total_cmp(b));
    xs[xs.len() / 2]
}

fn scaling() -> Outcome {
    let mut medians = Vec::new();
    for k in SCALING_KS {
        let hs = generate(&FamilySpec::Circumcoronene(k)).map_err(|e| e.to_string())?;
        let z = from_hexagons(&hs).map_err(|e| e.to_string())?;
        fast(&z)?;
        let times = (0..SCALING_REPS)
            .map(|_| {
                let t = Instant::now();
                let v = compute_all(&z).map(|r| r.values);
                let ns = t.elapsed().as_nanos() as f64;
                v.map(|_| ns).map_err(|e| e.to_string())
            })
            .collect::<Result<Vec<_>, _>>()?;
        medians.push((k, z.len(), median(times)));
    }
    let ratios: Vec<f64> = medians.windows(2).map(|w| w[1].2 / w[0].2).collect();
    let table: Vec<String> =
        medians.iter().map(|(k, b, ns)| format!("k={k} |Z|={b} {:.3} ms", ns / 1e6)).collect();
    let h256_ms = medians.last().map_or(0.0, |m| m.2 / 1e6);
    let soft = if h256_ms < SOFT_H256_MS { "under" } else { "over" };
    let detail = format!(
        "{}; ratios {:.2?} (limit {MAX_TIME_RATIO}); H_256 {soft} {SOFT_H256_MS} ms (informational)",
        table.join(", "),
        ratios
    );
    if ratios.iter().all(|&r| r <= MAX_TIME_RATIO) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn word(x: i64, y: i64, steps: &str) -> BoundaryWord {
    BoundaryWord {
        start: VertexCoord::new(x, y),
        steps: steps.chars().map(|c| StepDir::from_char(c).expect("digit 0-5")).collect(),
    }
}

fn validation() -> Outcome {
    let ring = hexes(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]);
    match from_hexagons(&ring) {
        Err(BoundaryError::HasHoles(_)) => {}
        other => return Err(format!("holed ring gave {other:?}")),
    }
    let corrupted: [(&str, fn(&BoundaryError) -> bool); 4] = [
        ("334501", |e| matches!(e, BoundaryError::IllegalStep { index: 0, .. })),
        ("234503", |e| matches!(e, BoundaryError::NotClosed { .. })),
        ("03", |e| matches!(e, BoundaryError::TooShort(2))),
        ("234501234501", |e| matches!(e, BoundaryError::NotSimple(_))),
    ];
    for (steps, expected) in corrupted {
        match parse_word(&word(2, 0, steps)) {
            Err(e) if expected(&e) => {}
            other => return Err(format!("word {steps:?} gave {other:?}")),
        }
    }
    let g = build_graph(&generate(&FamilySpec::Circumcoronene(3)).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    match oracle_values(&g, g.vertex_count() - 1) {
        Err(OracleError::BoundExceeded { .. }) => {}
        other => return Err(format!("oracle over bound gave {other:?}")),
    }
    Ok("HasHoles, 4 corrupted words, BoundExceeded".into())
}

fn main() -> ExitCode {
    let systems = corpus();
    let criteria: [(&str, Box<dyn Fn() -> Outcome + '_>); 9] = [
        ("desk-scale values", Box::new(desk_values)),
        ("corpus fast = oracle", Box::new(|| corpus_equivalence(&systems))),
        ("tree primitives = definitional oracle", Box::new(tree_primitives)),
        ("index identities", Box::new(|| identities(&systems))),
        ("edge-Wiener = Wiener of line graph", Box::new(|| line_graph(&systems))),
        ("sweep tree isomorphic to reference", Box::new(|| structural(&systems))),
        ("start/orientation invariance", Box::new(|| invariance(&systems))),
        ("sub-linear scaling", Box::new(scaling)),
        ("validation errors", Box::new(validation)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] criterion {}: {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name} ({detail})", i + 1);
            }
        }
    }
    println!("{}/9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
