//! Runtime scaling of the fast path over one benzenoid family.

use std::collections::HashSet;
use std::time::Instant;

use anyhow::Result;
use hexcut::boundary::{from_hexagons, BoundaryCycle};
use hexcut::generators::{generate, FamilySpec};
use hexcut::indices::values_from_trees;
use hexcut::lattice::HexCoord;
use hexcut::quotient::{quotient_trees, quotient_trees_parallel};

pub const CSV_HEADER: &str = "k,vertices,boundary,rep,phase,us";
pub const PHASES: [&str; 3] = ["trees", "indices", "total"];

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub k: u32,
    pub vertices: u64,
    pub boundary: usize,
    pub rep: usize,
    pub phase: &'static str,
    pub us: f64,
}

pub fn family_member(family: &str, k: u32) -> Result<FamilySpec> {
    let params: Vec<u64> = match family {
        "parallelogram" => vec![k as u64, k as u64],
        _ => vec![k as u64],
    };
    Ok(FamilySpec::from_parts(family, &params, 0)?)
}

fn time_once(z: &BoundaryCycle, parallel: bool) -> Result<(u64, [f64; 3])> {
    let t0 = Instant::now();
    let trees = if parallel { quotient_trees_parallel(z)? } else { quotient_trees(z)? };
    let t1 = Instant::now();
    let (values, _) = values_from_trees(&trees)?;
    let t2 = Instant::now();
    let us = |d: std::time::Duration| d.as_secs_f64() * 1e6;
    Ok((values.vertices, [us(t1 - t0), us(t2 - t1), us(t2 - t0)]))
}

/// Generates each member once (untimed), discards one warm-up run, then
/// times `reps` runs of the fast path from the boundary cycle.
pub fn run(family: &str, ks: &[u32], reps: usize, parallel: bool) -> Result<Vec<Row>> {
    let mut rows = Vec::with_capacity(ks.len() * reps * PHASES.len());
    for &k in ks {
        let hs: HashSet<HexCoord> = generate(&family_member(family, k)?)?;
        let z = from_hexagons(&hs)?;
        time_once(&z, parallel)?;
        for rep in 0..reps {
            let (vertices, times) = time_once(&z, parallel)?;
            for (phase, us) in PHASES.iter().zip(times) {
                rows.push(Row { k, vertices, boundary: z.len(), rep, phase, us });
            }
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&format!("{},{},{},{},{},{:.3}\n", r.k, r.vertices, r.boundary, r.rep, r.phase, r.us));
    }
    s
}

pub fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.total_cmp(b));
    let n = xs.len();
    if n == 0 {
        return f64::NAN;
    }
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    }
}
