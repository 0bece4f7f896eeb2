//! Integer coordinates on the hexagonal lattice.
//!
//! Vertices live in a doubled frame `(X, Y)` whose true planar position is
//! `(X / 2, sqrt(3) * Y / 2)`. In this frame every lattice edge is one of
//! `±(2, 0)`, `±(1, 1)` or `±(1, -1)`, so all geometry stays integral.
//!
//! A vertex with `X ≡ 2 (mod 3)` is a "right" corner of its hexagon and only
//! steps by `(2, 0)`, `(-1, 1)` or `(-1, -1)`; a vertex with `X ≡ 1 (mod 3)`
//! steps by the negated set. Hexagon centres sit at `X ≡ 0 (mod 3)`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("NotALatticeEdge: {0} -> {1} is not a hexagonal lattice edge")]
    NotALatticeEdge(VertexCoord, VertexCoord),
}

/// Axial coordinate of a hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexCoord {
    pub q: i64,
    pub r: i64,
}

impl HexCoord {
    pub const fn new(q: i64, r: i64) -> Self {
        Self { q, r }
    }

    /// Centre of the hexagon in the doubled vertex frame.
    pub fn center(self) -> (i64, i64) {
        (3 * self.q, 2 * self.r + self.q)
    }

    /// Inverse of [`HexCoord::center`]; `None` if the point is not a hexagon centre.
    pub fn from_center(x: i64, y: i64) -> Option<Self> {
        if x.rem_euclid(3) != 0 {
            return None;
        }
        let q = x / 3;
        let twice_r = y - q;
        (twice_r.rem_euclid(2) == 0).then(|| Self::new(q, twice_r / 2))
    }
}

impl fmt::Display for HexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.q, self.r)
    }
}

/// A lattice vertex in the doubled frame. Ordered lexicographically by `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexCoord {
    pub x: i64,
    pub y: i64,
}

/// The two vertex parities of the bipartite lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    /// `X ≡ 1 (mod 3)`: steps `(-2,0)`, `(1,1)`, `(1,-1)`.
    Left,
    /// `X ≡ 2 (mod 3)`: steps `(2,0)`, `(-1,1)`, `(-1,-1)`.
    Right,
}

impl VertexCoord {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn kind(self) -> Option<VertexKind> {
        if (self.x + self.y).rem_euclid(2) != 0 {
            return None;
        }
        match self.x.rem_euclid(3) {
            1 => Some(VertexKind::Left),
            2 => Some(VertexKind::Right),
            _ => None,
        }
    }

    pub fn is_valid(self) -> bool {
        self.kind().is_some()
    }

    pub fn step(self, dir: StepDir) -> Self {
        let (dx, dy) = dir.vector();
        Self::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for VertexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Direction class of a lattice edge, compared up to sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    /// `±(2, 0)`
    D1,
    /// `±(1, 1)`
    D2,
    /// `±(1, -1)`
    D3,
}

impl EdgeClass {
    pub const ALL: [EdgeClass; 3] = [EdgeClass::D1, EdgeClass::D2, EdgeClass::D3];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Class of the image of an edge of this class under [`rotate120`].
    pub fn rotated(self) -> Self {
        match self {
            EdgeClass::D1 => EdgeClass::D3,
            EdgeClass::D3 => EdgeClass::D2,
            EdgeClass::D2 => EdgeClass::D1,
        }
    }

    /// Number of [`rotate120`] applications that carry this class onto `D1`.
    pub fn turns_to_d1(self) -> usize {
        match self {
            EdgeClass::D1 => 0,
            EdgeClass::D2 => 1,
            EdgeClass::D3 => 2,
        }
    }

    fn from_displacement(dx: i64, dy: i64) -> Option<Self> {
        match (dx, dy) {
            (2, 0) | (-2, 0) => Some(EdgeClass::D1),
            (1, 1) | (-1, -1) => Some(EdgeClass::D2),
            (1, -1) | (-1, 1) => Some(EdgeClass::D3),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}", self.index() + 1)
    }
}

/// One of the six signed unit steps; symbol `k` is the `k`-th vector of
/// `(2,0), (1,1), (-1,1), (-2,0), (-1,-1), (1,-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StepDir(u8);

const STEP_VECTORS: [(i64, i64); 6] = [(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)];

impl StepDir {
    pub fn new(symbol: u8) -> Option<Self> {
        (symbol < 6).then_some(Self(symbol))
    }

    pub fn from_char(c: char) -> Option<Self> {
        c.to_digit(10).and_then(|d| Self::new(d as u8))
    }

    pub fn from_vector(dx: i64, dy: i64) -> Option<Self> {
        STEP_VECTORS
            .iter()
            .position(|&v| v == (dx, dy))
            .map(|i| Self(i as u8))
    }

    pub fn symbol(self) -> u8 {
        self.0
    }

    pub fn to_char(self) -> char {
        char::from(b'0' + self.0)
    }

    pub fn vector(self) -> (i64, i64) {
        STEP_VECTORS[self.0 as usize]
    }

    /// Even symbols leave right corners, odd symbols leave left corners.
    pub fn is_legal_from(self, v: VertexCoord) -> bool {
        match v.kind() {
            Some(VertexKind::Right) => self.0.is_multiple_of(2),
            Some(VertexKind::Left) => self.0 % 2 == 1,
            None => false,
        }
    }
}

/// Corners of a hexagon in counterclockwise order starting at its rightmost corner.
pub fn hex_vertices(h: HexCoord) -> [VertexCoord; 6] {
    let (cx, s) = h.center();
    [
        VertexCoord::new(cx + 2, s),
        VertexCoord::new(cx + 1, s + 1),
        VertexCoord::new(cx - 1, s + 1),
        VertexCoord::new(cx - 2, s),
        VertexCoord::new(cx - 1, s - 1),
        VertexCoord::new(cx + 1, s - 1),
    ]
}

/// `hex_neighbors(h)[i]` shares the side between corners `i` and `i + 1` of `h`.
pub fn hex_neighbors(h: HexCoord) -> [HexCoord; 6] {
    let HexCoord { q, r } = h;
    [
        HexCoord::new(q + 1, r),
        HexCoord::new(q, r + 1),
        HexCoord::new(q - 1, r + 1),
        HexCoord::new(q - 1, r),
        HexCoord::new(q, r - 1),
        HexCoord::new(q + 1, r - 1),
    ]
}

pub fn edge_class(u: VertexCoord, v: VertexCoord) -> Result<EdgeClass, LatticeError> {
    let (dx, dy) = (v.x - u.x, v.y - u.y);
    let legal = StepDir::from_vector(dx, dy).is_some_and(|s| s.is_legal_from(u));
    match EdgeClass::from_displacement(dx, dy) {
        Some(class) if legal => Ok(class),
        _ => Err(LatticeError::NotALatticeEdge(u, v)),
    }
}

/// Rotation by 120° counterclockwise about the origin (a hexagon centre).
pub fn rotate120(v: VertexCoord) -> VertexCoord {
    let (x, y) = rotate120_raw(v.x, v.y);
    VertexCoord::new(x, y)
}

/// [`rotate120`] on any doubled-frame point with `x + y` even.
pub fn rotate120_raw(x: i64, y: i64) -> (i64, i64) {
    debug_assert!((x + y).rem_euclid(2) == 0);
    ((-x - 3 * y) / 2, (x - y) / 2)
}

/// Apply [`rotate120_raw`] `turns` times (taken mod 3).
pub fn rotate_raw_n(x: i64, y: i64, turns: usize) -> (i64, i64) {
    (0..turns % 3).fold((x, y), |(x, y), _| rotate120_raw(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64) -> VertexCoord {
        VertexCoord::new(x, y)
    }

    #[test]
    fn benzene_corners() {
        assert_eq!(
            hex_vertices(HexCoord::new(0, 0)),
            [v(2, 0), v(1, 1), v(-1, 1), v(-2, 0), v(-1, -1), v(1, -1)]
        );
        assert_eq!(
            hex_vertices(HexCoord::new(1, 0)),
            [v(5, 1), v(4, 2), v(2, 2), v(1, 1), v(2, 0), v(4, 0)]
        );
    }

    #[test]
    fn neighbouring_hexagons_share_one_edge() {
        let a = hex_vertices(HexCoord::new(0, 0));
        let b = hex_vertices(HexCoord::new(1, 0));
        let shared: Vec<_> = a.iter().filter(|p| b.contains(p)).copied().collect();
        assert_eq!(shared, vec![v(2, 0), v(1, 1)]);
        assert_eq!(edge_class(v(2, 0), v(1, 1)), Ok(EdgeClass::D3));

        for h in [HexCoord::new(0, 0), HexCoord::new(-3, 7), HexCoord::new(5, -2)] {
            let corners = hex_vertices(h);
            for (i, n) in hex_neighbors(h).into_iter().enumerate() {
                let other = hex_vertices(n);
                let shared: Vec<_> = corners.iter().filter(|p| other.contains(p)).collect();
                assert_eq!(shared.len(), 2);
                assert!(shared.contains(&&corners[i]));
                assert!(shared.contains(&&corners[(i + 1) % 6]));
            }
        }
    }

    #[test]
    fn corners_are_valid_and_adjacent() {
        for q in -4..5 {
            for r in -4..5 {
                let c = hex_vertices(HexCoord::new(q, r));
                for i in 0..6 {
                    assert!(c[i].is_valid());
                    assert!(edge_class(c[i], c[(i + 1) % 6]).is_ok());
                }
            }
        }
    }

    #[test]
    fn classify_edges() {
        assert_eq!(edge_class(v(1, 1), v(-1, 1)), Ok(EdgeClass::D1));
        assert_eq!(edge_class(v(2, 0), v(1, 1)), Ok(EdgeClass::D3));
        assert_eq!(edge_class(v(1, 1), v(2, 2)), Ok(EdgeClass::D2));
        assert!(edge_class(v(2, 0), v(2, 2)).is_err());
        // right corners never step by (-2, 0)
        assert!(edge_class(v(2, 0), v(0, 0)).is_err());
    }

    #[test]
    fn rotation_values() {
        assert_eq!(rotate120(v(2, 0)), v(-1, 1));
        assert_eq!(rotate120(v(1, 1)), v(-2, 0));
    }

    #[test]
    fn hex_centre_round_trip() {
        for q in -3..4 {
            for r in -3..4 {
                let h = HexCoord::new(q, r);
                let (x, y) = h.center();
                assert_eq!(HexCoord::from_center(x, y), Some(h));
            }
        }
        assert_eq!(HexCoord::from_center(1, 1), None);
    }

    #[test]
    fn step_legality_by_kind() {
        let right = v(2, 0);
        let left = v(1, 1);
        for s in 0..6u8 {
            let d = StepDir::new(s).unwrap();
            assert_eq!(d.is_legal_from(right), s % 2 == 0);
            assert_eq!(d.is_legal_from(left), s % 2 == 1);
        }
    }
}
