//! Parametric benzenoid families and seeded random benzenoids.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::lattice::{hex_neighbors, HexCoord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("InvalidParameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Single,
    LinearChain(u32),
    Parallelogram(u32, u32),
    Triangulene(u32),
    Circumcoronene(u32),
    Random { hexagons: u32, seed: u64 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GeneratorError> {
        let ok = match *self {
            FamilySpec::Single => true,
            FamilySpec::LinearChain(h) => h >= 1,
            FamilySpec::Parallelogram(p, q) => p >= 1 && q >= 1,
            FamilySpec::Triangulene(k) | FamilySpec::Circumcoronene(k) => k >= 1,
            FamilySpec::Random { hexagons, .. } => hexagons >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(GeneratorError::InvalidParameter(format!("{self}: parameters must be at least 1")))
        }
    }

    /// Builds a spec from a family name, its numeric parameters and a seed
    /// (used only by `random`).
    pub fn from_parts(name: &str, params: &[u64], seed: u64) -> Result<Self, GeneratorError> {
        let bad = || GeneratorError::InvalidParameter(format!("{name} with parameters {params:?}"));
        let small = |x: u64| u32::try_from(x).map_err(|_| bad());
        let spec = match (name, params) {
            ("single", []) => FamilySpec::Single,
            ("linear_chain", [h]) => FamilySpec::LinearChain(small(*h)?),
            ("parallelogram", [p, q]) => FamilySpec::Parallelogram(small(*p)?, small(*q)?),
            ("triangulene", [k]) => FamilySpec::Triangulene(small(*k)?),
            ("circumcoronene", [k]) => FamilySpec::Circumcoronene(small(*k)?),
            ("random", [c]) => FamilySpec::Random { hexagons: small(*c)?, seed },
            ("random", [c, s]) => FamilySpec::Random { hexagons: small(*c)?, seed: *s },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Single => write!(f, "single"),
            FamilySpec::LinearChain(h) => write!(f, "linear_chain:{h}"),
            FamilySpec::Parallelogram(p, q) => write!(f, "parallelogram:{p},{q}"),
            FamilySpec::Triangulene(k) => write!(f, "triangulene:{k}"),
            FamilySpec::Circumcoronene(k) => write!(f, "circumcoronene:{k}"),
            FamilySpec::Random { hexagons, seed } => write!(f, "random:{hexagons},{seed}"),
        }
    }
}

/// Parses `name` or `name:p1,p2,...`, the form produced by `Display`.
impl FromStr for FamilySpec {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| GeneratorError::InvalidParameter(format!("bad number {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_parts(name.trim(), &params, 0)
    }
}

pub fn generate(spec: &FamilySpec) -> Result<HashSet<HexCoord>, GeneratorError> {
    spec.validate()?;
    let set = match *spec {
        FamilySpec::Single => HashSet::from([HexCoord::new(0, 0)]),
        FamilySpec::LinearChain(h) => (0..h as i64).map(|i| HexCoord::new(i, 0)).collect(),
        FamilySpec::Parallelogram(p, q) => (0..p as i64)
            .flat_map(|i| (0..q as i64).map(move |j| HexCoord::new(i, j)))
            .collect(),
        FamilySpec::Triangulene(k) => {
            let k = k as i64;
            (0..k)
                .flat_map(|i| (0..k - i).map(move |j| HexCoord::new(i, j)))
                .collect()
        }
        FamilySpec::Circumcoronene(k) => {
            let k = k as i64;
            (1 - k..k)
                .flat_map(|q| (1 - k..k).map(move |r| HexCoord::new(q, r)))
                .filter(|h| (h.q + h.r).abs() < k)
                .collect()
        }
        FamilySpec::Random { hexagons, seed } => random_benzenoid(hexagons as usize, seed).into_iter().collect(),
    };
    Ok(set)
}

/// SplitMix64: `state += 0x9E3779B97F4A7C15`, then
/// `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9`,
/// `z = (z ^ (z >> 27)) * 0x94D049BB133111EB`, output `z ^ (z >> 31)`,
/// all arithmetic wrapping mod 2^64.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish index in `0..n` by plain modulo reduction.
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Seeded accretion, in insertion order.
///
/// Start from hexagon `(0, 0)` with a frontier of its six neighbours (listed
/// in side order). Repeatedly draw `i = next_u64() mod |frontier|`. Adding
/// frontier hexagon `c` creates `Δn` new vertices (corners whose other two
/// hexagons are both absent) and `Δm` new edges (sides whose neighbour is
/// absent); it is accepted iff `Δn - Δm + 1 = 0`, i.e. the union stays
/// simply connected. An accepted `c` is removed by swap-remove at `i` and its
/// absent, not-yet-listed neighbours are appended in side order. A rejected
/// candidate stays in the frontier.
pub fn random_benzenoid(hexagons: usize, seed: u64) -> Vec<HexCoord> {
    let mut rng = SplitMix64::new(seed);
    let origin = HexCoord::new(0, 0);
    let mut order = vec![origin];
    let mut set = HashSet::from([origin]);
    let mut frontier: Vec<HexCoord> = hex_neighbors(origin).to_vec();
    let mut listed: HashSet<HexCoord> = frontier.iter().copied().collect();

    while order.len() < hexagons {
        let i = rng.below(frontier.len());
        let c = frontier[i];
        let present = hex_neighbors(c).map(|n| set.contains(&n));
        let new_edges = present.iter().filter(|&&p| !p).count() as i64;
        // corner k is shared with the neighbours across sides k-1 and k
        let new_vertices = (0..6).filter(|&k| !present[(k + 5) % 6] && !present[k]).count() as i64;
        if new_vertices - new_edges + 1 != 0 {
            continue;
        }
        frontier.swap_remove(i);
        set.insert(c);
        order.push(c);
        for n in hex_neighbors(c) {
            if !set.contains(&n) && listed.insert(n) {
                frontier.push(n);
            }
        }
    }
    order
}

/// The fixed corpus used for cross-validation: small members of every
/// family plus 200 random systems of at most 40 hexagons.
pub fn standard_corpus() -> Vec<FamilySpec> {
    let mut out = vec![FamilySpec::Single];
    out.extend((1..=8).map(FamilySpec::LinearChain));
    out.extend((1..=5).flat_map(|p| (1..=5).map(move |q| FamilySpec::Parallelogram(p, q))));
    out.extend((1..=5).map(FamilySpec::Triangulene));
    out.extend((1..=3).map(FamilySpec::Circumcoronene));
    out.extend((1..=200u64).map(|seed| FamilySpec::Random {
        hexagons: 1 + ((seed - 1) % 40) as u32,
        seed,
    }));
    out
}
