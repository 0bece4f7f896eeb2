//! The boundary cycle of a benzenoid system and its word encoding.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::lattice::{hex_neighbors, hex_vertices, rotate120, HexCoord, StepDir, VertexCoord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundaryError {
    #[error("IllegalStep: step {index} leaves {at} in a direction its vertex type does not admit")]
    IllegalStep { index: usize, at: VertexCoord },
    #[error("NotClosed: walk ends at {end}, not at its start {start}")]
    NotClosed { start: VertexCoord, end: VertexCoord },
    #[error("NotSimple: vertex {0} is visited twice")]
    NotSimple(VertexCoord),
    #[error("TooShort: boundary has {0} vertices, at least 6 required")]
    TooShort(usize),
    #[error("InvalidVertex: {0} is not a lattice vertex")]
    InvalidVertex(VertexCoord),
    #[error("Empty: no hexagons given")]
    Empty,
    #[error("NotConnected: hexagon set is not edge-connected")]
    NotConnected,
    #[error("HasHoles: vertices - edges + hexagons = {0}, expected 1")]
    HasHoles(i64),
}

/// A simple counterclockwise cycle on the hexagonal lattice.
///
/// The start vertex is whatever the caller supplied; use [`emit_word`] for a
/// canonical rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCycle {
    vertices: Vec<VertexCoord>,
}

impl BoundaryCycle {
    /// Validates a cyclic vertex sequence and reorients it counterclockwise
    /// (keeping the first vertex in place).
    pub fn from_vertices(mut vertices: Vec<VertexCoord>) -> Result<Self, BoundaryError> {
        let len = vertices.len();
        if let Some(&bad) = vertices.iter().find(|v| !v.is_valid()) {
            return Err(BoundaryError::InvalidVertex(bad));
        }
        for i in 0..len {
            let (u, w) = (vertices[i], vertices[(i + 1) % len]);
            let ok = StepDir::from_vector(w.x - u.x, w.y - u.y).is_some_and(|s| s.is_legal_from(u));
            if !ok {
                return Err(if i + 1 == len {
                    BoundaryError::NotClosed { start: w, end: u }
                } else {
                    BoundaryError::IllegalStep { index: i, at: u }
                });
            }
        }
        if len < 6 {
            return Err(BoundaryError::TooShort(len));
        }
        let mut seen = HashSet::with_capacity(len);
        if let Some(&dup) = vertices.iter().find(|v| !seen.insert(**v)) {
            return Err(BoundaryError::NotSimple(dup));
        }
        if shoelace(&vertices) < 0 {
            vertices[1..].reverse();
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[VertexCoord] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Shoelace sum `Σ (x_i y_{i+1} - x_{i+1} y_i)`: twice the enclosed
    /// doubled-frame area, which is `12` per hexagon.
    pub fn shoelace_sum(&self) -> i64 {
        shoelace(&self.vertices)
    }

    /// Number of enclosed hexagons, read off the enclosed area.
    pub fn hexagon_count(&self) -> u64 {
        (self.shoelace_sum() / 12) as u64
    }

    /// The same cycle started `k` vertices later.
    pub fn rotate_start(&self, k: usize) -> Self {
        let mut vertices = self.vertices.clone();
        if !vertices.is_empty() {
            vertices.rotate_left(k % self.vertices.len());
        }
        Self { vertices }
    }

    /// The cycle rotated by 120° about the origin. Orientation is preserved.
    pub fn rotate120(&self) -> Self {
        Self {
            vertices: self.vertices.iter().map(|&v| rotate120(v)).collect(),
        }
    }
}

fn shoelace(vs: &[VertexCoord]) -> i64 {
    let n = vs.len();
    (0..n)
        .map(|i| {
            let (a, b) = (vs[i], vs[(i + 1) % n]);
            a.x * b.y - b.x * a.y
        })
        .sum()
}

/// A start vertex and the steps that walk the cycle from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryWord {
    pub start: VertexCoord,
    pub steps: Vec<StepDir>,
}

impl BoundaryWord {
    pub fn steps_string(&self) -> String {
        self.steps.iter().map(|s| s.to_char()).collect()
    }
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.start, self.steps_string())
    }
}

pub fn parse_word(w: &BoundaryWord) -> Result<BoundaryCycle, BoundaryError> {
    if !w.start.is_valid() {
        return Err(BoundaryError::InvalidVertex(w.start));
    }
    let mut vertices = Vec::with_capacity(w.steps.len());
    let mut at = w.start;
    for (index, &step) in w.steps.iter().enumerate() {
        if !step.is_legal_from(at) {
            return Err(BoundaryError::IllegalStep { index, at });
        }
        vertices.push(at);
        at = at.step(step);
    }
    if at != w.start {
        return Err(BoundaryError::NotClosed { start: w.start, end: at });
    }
    BoundaryCycle::from_vertices(vertices)
}

/// Canonical word: counterclockwise, starting at the lexicographically
/// smallest vertex.
pub fn emit_word(c: &BoundaryCycle) -> BoundaryWord {
    let vs = c.vertices();
    let first = vs
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map_or(0, |(i, _)| i);
    let n = vs.len();
    let steps = (0..n)
        .map(|k| {
            let (a, b) = (vs[(first + k) % n], vs[(first + k + 1) % n]);
            StepDir::from_vector(b.x - a.x, b.y - a.y).expect("validated cycle")
        })
        .collect();
    BoundaryWord { start: vs[first], steps }
}

/// Checks that `hs` is nonempty, edge-connected and hole-free.
pub fn validate_hexagons(hs: &HashSet<HexCoord>) -> Result<(), BoundaryError> {
    let Some(&seed) = hs.iter().next() else {
        return Err(BoundaryError::Empty);
    };
    let mut seen = HashSet::with_capacity(hs.len());
    let mut queue = VecDeque::from([seed]);
    seen.insert(seed);
    while let Some(h) = queue.pop_front() {
        for n in hex_neighbors(h) {
            if hs.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    if seen.len() != hs.len() {
        return Err(BoundaryError::NotConnected);
    }

    // Each vertex belongs to at most three hexagons and each edge to at most
    // two, so counting distinct corners and sides is exact.
    let mut vertices = HashSet::with_capacity(2 * hs.len() + 6);
    for &h in hs {
        vertices.extend(hex_vertices(h));
    }
    let euler = vertices.len() as i64 - count_edges(hs) + hs.len() as i64;
    if euler != 1 {
        return Err(BoundaryError::HasHoles(euler));
    }
    Ok(())
}

// a side shared by two hexagons is seen from both
fn count_edges(hs: &HashSet<HexCoord>) -> i64 {
    let mut twice = 0i64;
    for &h in hs {
        for n in hex_neighbors(h) {
            twice += if hs.contains(&n) { 1 } else { 2 };
        }
    }
    twice / 2
}

/// Outer-face cycle of a union of hexagons.
///
/// Runs in time proportional to the number of hexagons, not to `|Z|`.
pub fn from_hexagons(hs: &HashSet<HexCoord>) -> Result<BoundaryCycle, BoundaryError> {
    validate_hexagons(hs)?;
    let mut next: HashMap<VertexCoord, VertexCoord> = HashMap::new();
    for &h in hs {
        let corners = hex_vertices(h);
        for (i, n) in hex_neighbors(h).into_iter().enumerate() {
            if !hs.contains(&n) {
                next.insert(corners[i], corners[(i + 1) % 6]);
            }
        }
    }
    let start = *next.keys().min().expect("nonempty set has boundary");
    let mut vertices = Vec::with_capacity(next.len());
    let mut at = start;
    loop {
        vertices.push(at);
        at = next[&at];
        if at == start {
            break;
        }
    }
    debug_assert_eq!(vertices.len(), next.len());
    BoundaryCycle::from_vertices(vertices)
}
