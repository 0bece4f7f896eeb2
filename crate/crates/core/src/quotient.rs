//! Weighted quotient trees of a benzenoid system, built from the boundary
//! cycle alone.
//!
//! For one edge class, the cycle is first rotated so the class becomes `D1`
//! (horizontal edges). Vertical lines `X ≡ 0 (mod 3)` through the hexagon
//! centres then cross only `D1` edges, and cut the region into pieces, each
//! holding exactly one component of `G - E_1`: a vertical zigzag path whose
//! two ends lie on the boundary. Each maximal vertical segment of a cut line
//! inside the region is one tree edge; its multiplicity is the number of
//! `D1` edges it crosses.
//!
//! The boundary walk visits the pieces in Euler-tour order of the tree, so a
//! stack of open cut segments recovers the tree in one pass. Which boundary
//! edges bound the same segment is decided beforehand by ordering the
//! crossings of each cut line by height (a counting sort, linear in `|Z|`).

use std::collections::{BTreeMap, HashMap, HashSet};

use thiserror::Error;

use crate::boundary::{BoundaryCycle, BoundaryError};
use crate::lattice::{rotate120, rotate_raw_n, EdgeClass, HexCoord, VertexCoord};
use crate::oracle::build_graph;
use crate::treealgo::WeightedTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("UnbalancedCuts: cut segments left open after the boundary walk")]
    UnbalancedCuts,
    #[error("UnbalancedCuts: crossings of cut line at level {level} do not alternate (at y = {y})")]
    MismatchedCrossings { level: i64, y: i64 },
}

/// One cut segment, in the frame where its class is `D1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutRecord {
    pub class: EdgeClass,
    /// `X` of the left endpoints of the crossed edges (`≡ 2 mod 3`).
    pub level: i64,
    /// `Y` of the boundary edge where the walk first reached the segment.
    pub y_open: i64,
    /// `Y` of the other boundary edge of the segment.
    pub y_close: i64,
    pub multiplicity: u64,
}

impl CutRecord {
    /// Midpoints of the two boundary edges that end this segment, in the
    /// input frame, with both coordinates doubled once more so they stay
    /// integral.
    pub fn chord_endpoints(&self) -> [(i64, i64); 2] {
        let back = 3 - self.class.turns_to_d1();
        [self.y_open, self.y_close].map(|y| rotate_raw_n(2 * self.level + 2, 2 * y, back))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub weight: u64,
}

/// `(T_i, w_i, w′_i)` for one edge class. Node weights are vertex counts of
/// the components of `G - E_i`; since those components are paths, their edge
/// counts are `vcount - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientTree {
    pub class: EdgeClass,
    pub vcounts: Vec<u64>,
    pub edges: Vec<TreeEdge>,
}

impl QuotientTree {
    pub fn node_count(&self) -> usize {
        self.vcounts.len()
    }

    pub fn ecount(&self, node: usize) -> u64 {
        self.vcounts[node] - 1
    }

    /// `Σ vcount`, the number of vertices of the benzenoid.
    pub fn vertex_total(&self) -> u64 {
        self.vcounts.iter().sum()
    }

    /// `Σ w′`, the number of edges in this class.
    pub fn cut_total(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// `Σ w′ + Σ ecount`, the number of edges of the benzenoid.
    pub fn edge_total(&self) -> u64 {
        self.cut_total() + self.vertex_total() - self.node_count() as u64
    }

    fn weighted(&self, weights: Vec<u64>) -> WeightedTree {
        let edges = self.edges.iter().map(|e| (e.a, e.b, e.weight)).collect();
        WeightedTree::new(weights, edges).expect("quotient graph of a benzenoid is a tree")
    }

    /// Node weights are component vertex counts.
    pub fn vertex_weighted(&self) -> WeightedTree {
        self.weighted(self.vcounts.clone())
    }

    /// Node weights are component edge counts.
    pub fn edge_weighted(&self) -> WeightedTree {
        self.weighted(self.vcounts.iter().map(|v| v - 1).collect())
    }

    /// A string equal for two trees iff they are isomorphic as node- and
    /// edge-weighted trees. Rooted at the centroid, taking the smaller
    /// encoding when there are two.
    pub fn canonical_encoding(&self) -> String {
        let n = self.node_count();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.a].push((e.b, e.weight));
            adj[e.b].push((e.a, e.weight));
        }
        centroids(&adj)
            .into_iter()
            .map(|root| encode(&adj, &self.vcounts, root, usize::MAX))
            .min()
            .unwrap_or_default()
    }
}

fn centroids(adj: &[Vec<(usize, u64)>]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX; n];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &(v, _) in &adj[u] {
            if v != parent[u] {
                parent[v] = u;
                order.push(v);
            }
        }
        i += 1;
    }
    let mut size = vec![1usize; n];
    for &u in order.iter().rev().take(n - 1) {
        size[parent[u]] += size[u];
    }
    (0..n)
        .filter(|&u| {
            let heaviest_child = adj[u]
                .iter()
                .filter(|&&(v, _)| v != parent[u])
                .map(|&(v, _)| size[v])
                .max()
                .unwrap_or(0);
            heaviest_child.max(n - size[u]) <= n / 2
        })
        .collect()
}

fn encode(adj: &[Vec<(usize, u64)>], labels: &[u64], u: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[u]
        .iter()
        .filter(|&&(v, _)| v != parent)
        .map(|&(v, w)| format!("{w}:{}", encode(adj, labels, v, u)))
        .collect();
    children.sort_unstable();
    format!("({}{})", labels[u], children.concat())
}

/// Tree plus the cut segments it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    pub tree: QuotientTree,
    pub cuts: Vec<CutRecord>,
}

pub fn sweep_direction(z: &BoundaryCycle, class: EdgeClass) -> Result<QuotientTree, QuotientError> {
    sweep_with_cuts(z, class).map(|s| s.tree)
}

fn canonical_frame(z: &BoundaryCycle, class: EdgeClass) -> Vec<VertexCoord> {
    let turns = class.turns_to_d1();
    z.vertices()
        .iter()
        .map(|&v| (0..turns).fold(v, |v, _| rotate120(v)))
        .collect()
}

#[derive(Debug, Clone, Copy)]
struct Crossing {
    pos: usize,
    level: i64,
    y: i64,
    rightward: bool,
}

fn crossings(vs: &[VertexCoord]) -> Vec<Crossing> {
    let n = vs.len();
    (0..n)
        .filter_map(|pos| {
            let (u, v) = (vs[pos], vs[(pos + 1) % n]);
            (u.y == v.y).then(|| Crossing {
                pos,
                level: u.x.min(v.x),
                y: u.y,
                rightward: v.x > u.x,
            })
        })
        .collect()
}

fn counting_sort(items: Vec<Crossing>, buckets: usize, key: impl Fn(&Crossing) -> usize) -> Vec<Crossing> {
    let mut start = vec![0usize; buckets + 1];
    for c in &items {
        start[key(c) + 1] += 1;
    }
    for b in 0..buckets {
        start[b + 1] += start[b];
    }
    let mut out = vec![None; items.len()];
    for c in items {
        let slot = &mut start[key(&c)];
        out[*slot] = Some(c);
        *slot += 1;
    }
    out.into_iter().map(|c| c.expect("every slot filled")).collect()
}

/// Groups the crossings of each cut line into segments. Returns, per
/// boundary position, the segment index it ends (or `usize::MAX`), and per
/// segment its level and the `y` range `(low, high)`.
#[allow(clippy::type_complexity)]
fn pair_crossings(
    vs: &[VertexCoord],
) -> Result<(Vec<usize>, Vec<(i64, i64, i64)>), QuotientError> {
    let list = crossings(vs);
    let mut chord_at = vec![usize::MAX; vs.len()];
    let mut chords = Vec::with_capacity(list.len() / 2);
    if list.is_empty() {
        return Ok((chord_at, chords));
    }
    let (min_y, max_y) = list.iter().fold((i64::MAX, i64::MIN), |(lo, hi), c| (lo.min(c.y), hi.max(c.y)));
    let (min_l, max_l) =
        list.iter().fold((i64::MAX, i64::MIN), |(lo, hi), c| (lo.min(c.level), hi.max(c.level)));
    let by_y = counting_sort(list, (max_y - min_y) as usize + 1, |c| (c.y - min_y) as usize);
    let sorted = counting_sort(by_y, ((max_l - min_l) / 3) as usize + 1, |c| ((c.level - min_l) / 3) as usize);

    // Along one cut line, scanning upward, the region is entered through an
    // edge walked rightward and left through one walked leftward.
    let mut i = 0;
    while i < sorted.len() {
        let low = sorted[i];
        let high = sorted.get(i + 1).filter(|h| h.level == low.level);
        match high {
            Some(high) if low.rightward && !high.rightward => {
                chord_at[low.pos] = chords.len();
                chord_at[high.pos] = chords.len();
                chords.push((low.level, low.y, high.y));
                i += 2;
            }
            _ => return Err(QuotientError::MismatchedCrossings { level: low.level, y: low.y }),
        }
    }
    Ok((chord_at, chords))
}

/// Quotient tree for one class together with its cut segments. `O(|Z|)`.
pub fn sweep_with_cuts(z: &BoundaryCycle, class: EdgeClass) -> Result<Sweep, QuotientError> {
    let vs = canonical_frame(z, class);
    let (chord_at, chords) = pair_crossings(&vs)?;

    let mut extents: Vec<(i64, i64)> = vec![(vs[0].y, vs[0].y)];
    let mut edges = Vec::with_capacity(chords.len());
    let mut cuts = Vec::with_capacity(chords.len());
    let mut open: Vec<(usize, usize)> = Vec::new();
    let mut current = 0usize;
    for (pos, v) in vs.iter().enumerate() {
        let ext = &mut extents[current];
        ext.0 = ext.0.min(v.y);
        ext.1 = ext.1.max(v.y);

        let chord = chord_at[pos];
        if chord == usize::MAX {
            continue;
        }
        if open.last().is_some_and(|&(c, _)| c == chord) {
            current = open.pop().expect("checked nonempty").1;
            continue;
        }
        let (level, low, high) = chords[chord];
        let y_open = v.y;
        let y_close = if y_open == low { high } else { low };
        let multiplicity = ((high - low) / 2 + 1) as u64;
        let child = extents.len();
        extents.push((i64::MAX, i64::MIN));
        edges.push(TreeEdge { a: current, b: child, weight: multiplicity });
        cuts.push(CutRecord { class, level, y_open, y_close, multiplicity });
        open.push((chord, current));
        current = child;
    }
    if !open.is_empty() || current != 0 {
        return Err(QuotientError::UnbalancedCuts);
    }
    let vcounts = extents.iter().map(|&(lo, hi)| (hi - lo + 1) as u64).collect();
    Ok(Sweep { tree: QuotientTree { class, vcounts, edges }, cuts })
}

/// The three quotient trees, in class order `D1, D2, D3`.
pub fn quotient_trees(z: &BoundaryCycle) -> Result<[QuotientTree; 3], QuotientError> {
    Ok([
        sweep_direction(z, EdgeClass::D1)?,
        sweep_direction(z, EdgeClass::D2)?,
        sweep_direction(z, EdgeClass::D3)?,
    ])
}

/// As [`quotient_trees`], one thread per class.
pub fn quotient_trees_parallel(z: &BoundaryCycle) -> Result<[QuotientTree; 3], QuotientError> {
    let [a, b, c] = std::thread::scope(|s| {
        EdgeClass::ALL
            .map(|class| s.spawn(move || sweep_direction(z, class)))
            .map(|h| h.join().expect("sweep thread panicked"))
    });
    Ok([a?, b?, c?])
}

/// Hexagons enclosed by the cycle, read off the `D1` cut segments: every
/// segment at level `l` passes through the centres of the hexagons strictly
/// between its two boundary edges. Linear in `|Z|` plus the output.
pub fn interior_hexagons(z: &BoundaryCycle) -> Result<Vec<HexCoord>, QuotientError> {
    let (_, chords) = pair_crossings(z.vertices())?;
    let mut out = Vec::new();
    for (level, low, high) in chords {
        let x = level + 1;
        out.extend((low + 1..high).step_by(2).map(|y| {
            HexCoord::from_center(x, y).expect("cut lines pass through hexagon centres")
        }));
    }
    Ok(out)
}

/// Quotient tree built the slow way, from the explicit graph: delete the
/// class, find components, count. Also returns each component's edge count.
pub fn reference_with_component_edges(
    hs: &HashSet<HexCoord>,
    class: EdgeClass,
) -> Result<(QuotientTree, Vec<u64>), BoundaryError> {
    let g = build_graph(hs)?;
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &(a, b, c) in g.edges() {
                // linear scan keeps this obviously correct; fine at oracle sizes
                if c == class || (a != u && b != u) {
                    continue;
                }
                let v = if a == u { b } else { a };
                if comp[v] == usize::MAX {
                    comp[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    let mut vcounts = vec![0u64; count];
    for &c in &comp {
        vcounts[c] += 1;
    }
    let mut ecounts = vec![0u64; count];
    let mut between: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for &(a, b, c) in g.edges() {
        let (ca, cb) = (comp[a], comp[b]);
        if c == class {
            *between.entry((ca.min(cb), ca.max(cb))).or_default() += 1;
        } else {
            ecounts[ca] += 1;
        }
    }
    let edges = between
        .into_iter()
        .map(|((a, b), weight)| TreeEdge { a, b, weight })
        .collect();
    Ok((QuotientTree { class, vcounts, edges }, ecounts))
}

pub fn quotient_tree_reference(
    hs: &HashSet<HexCoord>,
    class: EdgeClass,
) -> Result<QuotientTree, BoundaryError> {
    reference_with_component_edges(hs, class).map(|(t, _)| t)
}

/// Multiset of `(vcount)` per node, handy for quick shape assertions.
pub fn node_weight_histogram(t: &QuotientTree) -> HashMap<u64, usize> {
    let mut h = HashMap::new();
    for &v in &t.vcounts {
        *h.entry(v).or_default() += 1;
    }
    h
}
