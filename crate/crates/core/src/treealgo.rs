//! Vertex- and edge-weighted trees and the linear-time index primitives on them.
//!
//! In a tree every vertex and every edge other than `e = uv` is strictly
//! closer to exactly one endpoint of `e`, so the "closer to `u`" and "closer
//! to `v`" sums in the distance-based indices are simply the weight sums of
//! the two components of `T - e`. One rooted pass computes those sums for
//! every edge ([`edge_splits`]); each primitive is then a single fold.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("Overflow: index accumulation exceeded the integer range")]
    Overflow,
    #[error("BoundExceeded: tree has {nodes} nodes, oracle bound is {bound}")]
    BoundExceeded { nodes: usize, bound: usize },
    #[error("NotATree: {0}")]
    NotATree(String),
}

/// A tree with nonnegative integer weights on nodes (`w`) and edges (`w′`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTree {
    weights: Vec<u64>,
    edges: Vec<(usize, usize, u64)>,
}

impl WeightedTree {
    pub fn new(weights: Vec<u64>, edges: Vec<(usize, usize, u64)>) -> Result<Self, TreeError> {
        let n = weights.len();
        if n == 0 {
            return Err(TreeError::NotATree("no nodes".into()));
        }
        if edges.len() != n - 1 {
            return Err(TreeError::NotATree(format!("{} nodes but {} edges", n, edges.len())));
        }
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut [usize], mut x: usize) -> usize {
            while dsu[x] != x {
                dsu[x] = dsu[dsu[x]];
                x = dsu[x];
            }
            x
        }
        for &(a, b, _) in &edges {
            if a >= n || b >= n {
                return Err(TreeError::NotATree(format!("edge {a}-{b} out of range")));
            }
            let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
            if ra == rb {
                return Err(TreeError::NotATree(format!("edge {a}-{b} closes a cycle")));
            }
            dsu[ra] = rb;
        }
        Ok(Self { weights, edges })
    }

    pub fn single(weight: u64) -> Self {
        Self { weights: vec![weight], edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    pub fn total_weight(&self) -> Result<u64, TreeError> {
        checked_sum(self.weights.iter().copied())
    }

    pub fn total_edge_weight(&self) -> Result<u64, TreeError> {
        checked_sum(self.edges.iter().map(|e| e.2))
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.len()];
        for (i, &(a, b, _)) in self.edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        adj
    }
}

fn checked_sum(mut it: impl Iterator<Item = u64>) -> Result<u64, TreeError> {
    it.try_fold(0u64, |acc, x| acc.checked_add(x)).ok_or(TreeError::Overflow)
}

/// Weight sums on the two sides of one tree edge `(a, b)`: side 1 holds `a`.
/// `m1`/`m2` exclude the edge itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSplit {
    pub n1: u64,
    pub n2: u64,
    pub m1: u64,
    pub m2: u64,
}

/// Split sums for every edge, in edge order. Rooted at node 0.
pub fn edge_splits(t: &WeightedTree) -> Result<Vec<EdgeSplit>, TreeError> {
    let n = t.len();
    let adj = t.adjacency();
    let mut order = Vec::with_capacity(n);
    let mut parent_edge = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut stack = vec![0usize];
    visited[0] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &(v, e) in &adj[u] {
            if !visited[v] {
                visited[v] = true;
                parent_edge[v] = e;
                stack.push(v);
            }
        }
    }

    // subtree sums: node weights, and edge weights strictly inside the subtree
    let mut sub_w = t.weights.clone();
    let mut sub_m = vec![0u64; n];
    for &u in order.iter().rev() {
        let e = parent_edge[u];
        if e == usize::MAX {
            continue;
        }
        let (a, b, w) = t.edges[e];
        let p = if a == u { b } else { a };
        sub_w[p] = sub_w[p].checked_add(sub_w[u]).ok_or(TreeError::Overflow)?;
        sub_m[p] = sub_m[p]
            .checked_add(sub_m[u])
            .and_then(|x| x.checked_add(w))
            .ok_or(TreeError::Overflow)?;
    }

    let total_w = t.total_weight()?;
    let total_m = t.total_edge_weight()?;
    let mut splits = vec![EdgeSplit { n1: 0, n2: 0, m1: 0, m2: 0 }; t.edges.len()];
    for u in 0..n {
        let e = parent_edge[u];
        if e == usize::MAX {
            continue;
        }
        let (a, _, w) = t.edges[e];
        let (inner_n, inner_m) = (sub_w[u], sub_m[u]);
        let (outer_n, outer_m) = (total_w - inner_n, total_m - inner_m - w);
        splits[e] = if a == u {
            EdgeSplit { n1: inner_n, n2: outer_n, m1: inner_m, m2: outer_m }
        } else {
            EdgeSplit { n1: outer_n, n2: inner_n, m1: outer_m, m2: inner_m }
        };
    }
    Ok(splits)
}

fn mul3(a: u64, b: u64, c: u64) -> Result<u128, TreeError> {
    (a as u128)
        .checked_mul(b as u128)
        .and_then(|x| x.checked_mul(c as u128))
        .ok_or(TreeError::Overflow)
}

fn add(acc: u128, x: u128) -> Result<u128, TreeError> {
    acc.checked_add(x).ok_or(TreeError::Overflow)
}

fn fold_edges<F>(t: &WeightedTree, splits: &[EdgeSplit], mut term: F) -> Result<u128, TreeError>
where
    F: FnMut(u64, &EdgeSplit) -> Result<u128, TreeError>,
{
    t.edges
        .iter()
        .zip(splits)
        .try_fold(0u128, |acc, (&(_, _, w), s)| add(acc, term(w, s)?))
}

/// The seven weighted-tree indices, evaluated from one set of split sums.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeIndices {
    pub szeged: u128,
    pub wiener_vertex: u128,
    pub wiener_edge: u128,
    pub wiener_ve: u128,
    pub total_szeged: u128,
    pub pi_edge: u128,
    pub pi_vertex: u128,
}

impl TreeIndices {
    pub fn get(&self, which: TreeIndex) -> u128 {
        match which {
            TreeIndex::Szeged => self.szeged,
            TreeIndex::WienerVertex => self.wiener_vertex,
            TreeIndex::WienerEdge => self.wiener_edge,
            TreeIndex::WienerVertexEdge => self.wiener_ve,
            TreeIndex::TotalSzeged => self.total_szeged,
            TreeIndex::PiEdge => self.pi_edge,
            TreeIndex::PiVertex => self.pi_vertex,
        }
    }
}

pub fn all_indices(t: &WeightedTree) -> Result<TreeIndices, TreeError> {
    let s = edge_splits(t)?;
    Ok(TreeIndices {
        szeged: szeged_from(t, &s)?,
        wiener_vertex: wiener_vertex_from(t, &s)?,
        wiener_edge: wiener_edge_from(t, &s)?,
        wiener_ve: wiener_ve_from(t, &s)?,
        total_szeged: total_szeged_from(t, &s)?,
        pi_edge: pi_edge_from(t, &s)?,
        pi_vertex: pi_vertex_from(t, &s)?,
    })
}

fn szeged_from(t: &WeightedTree, s: &[EdgeSplit]) -> Result<u128, TreeError> {
    fold_edges(t, s, |w, s| mul3(w, s.n1, s.n2))
}

fn wiener_vertex_from(t: &WeightedTree, s: &[EdgeSplit]) -> Result<u128, TreeError> {
    fold_edges(t, s, |_, s| mul3(1, s.n1, s.n2))
}

fn wiener_edge_from(t: &WeightedTree, s: &[EdgeSplit]) -> Result<u128, TreeError> {
    fold_edges(t, s, |_, s| mul3(1, s.m1, s.m2))
}

fn wiener_ve_from(t: &WeightedTree, s: &[EdgeSplit]) -> Result<u128, TreeError> {
    fold_edges(t, s, |_, s| add(mul3(1, s.n1, s.m2)?, mul3(1, s.n2, s.m1)?))
}

fn total_szeged_from(t: &WeightedTree, s: &[EdgeSplit]) -> Result<u128, TreeError> {
    fold_edges(t, s, |w, s| {
        let r1 = s.n1.checked_add(s.m1).ok_or(TreeError::Overflow)?;
        let r2 = s.n2.checked_add(s.m2).ok_or(TreeError::Overflow)?;
        mul3(w, r1, r2)
    })
}

fn pi_edge_from(t: &WeightedTree, s: &[EdgeSplit]) -> Result<u128, TreeError> {
    fold_edges(t, s, |w, s| mul3(w, s.m1.checked_add(s.m2).ok_or(TreeError::Overflow)?, 1))
}

fn pi_vertex_from(t: &WeightedTree, s: &[EdgeSplit]) -> Result<u128, TreeError> {
    fold_edges(t, s, |w, s| mul3(w, s.n1.checked_add(s.n2).ok_or(TreeError::Overflow)?, 1))
}

/// `Σ_e w′(e)·n1·n2`
pub fn szeged_weighted(t: &WeightedTree) -> Result<u128, TreeError> {
    szeged_from(t, &edge_splits(t)?)
}

/// `Σ_e n1·n2`, the vertex-weighted Wiener index.
pub fn wiener_vertex(t: &WeightedTree) -> Result<u128, TreeError> {
    wiener_vertex_from(t, &edge_splits(t)?)
}

/// `Σ_e m1·m2`, the edge-weighted Wiener index under the minimum
/// endpoint-distance convention.
pub fn wiener_edge(t: &WeightedTree) -> Result<u128, TreeError> {
    wiener_edge_from(t, &edge_splits(t)?)
}

/// `Σ_e (n1·m2 + n2·m1)`, the vertex-to-edge Wiener index.
pub fn wiener_ve(t: &WeightedTree) -> Result<u128, TreeError> {
    wiener_ve_from(t, &edge_splits(t)?)
}

/// `Σ_e w′(e)·(n1 + m1)·(n2 + m2)`
pub fn total_szeged(t: &WeightedTree) -> Result<u128, TreeError> {
    total_szeged_from(t, &edge_splits(t)?)
}

/// `Σ_e w′(e)·(m1 + m2)`
pub fn pi_edge(t: &WeightedTree) -> Result<u128, TreeError> {
    pi_edge_from(t, &edge_splits(t)?)
}

/// `Σ_e w′(e)·(n1 + n2)`, which is `Σw′ · Σw` in a tree.
pub fn pi_vertex(t: &WeightedTree) -> Result<u128, TreeError> {
    pi_vertex_from(t, &edge_splits(t)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeIndex {
    Szeged,
    WienerVertex,
    WienerEdge,
    WienerVertexEdge,
    TotalSzeged,
    PiEdge,
    PiVertex,
}

impl TreeIndex {
    pub const ALL: [TreeIndex; 7] = [
        TreeIndex::Szeged,
        TreeIndex::WienerVertex,
        TreeIndex::WienerEdge,
        TreeIndex::WienerVertexEdge,
        TreeIndex::TotalSzeged,
        TreeIndex::PiEdge,
        TreeIndex::PiVertex,
    ];

    pub fn fast(self, t: &WeightedTree) -> Result<u128, TreeError> {
        match self {
            TreeIndex::Szeged => szeged_weighted(t),
            TreeIndex::WienerVertex => wiener_vertex(t),
            TreeIndex::WienerEdge => wiener_edge(t),
            TreeIndex::WienerVertexEdge => wiener_ve(t),
            TreeIndex::TotalSzeged => total_szeged(t),
            TreeIndex::PiEdge => pi_edge(t),
            TreeIndex::PiVertex => pi_vertex(t),
        }
    }
}

pub const DEFAULT_ORACLE_BOUND: usize = 64;

pub fn definitional_oracle(t: &WeightedTree, which: TreeIndex) -> Result<u128, TreeError> {
    definitional_oracle_bounded(t, which, DEFAULT_ORACLE_BOUND)
}

/// Literal evaluation of the weighted definitions from all-pairs tree
/// distances, with `N`/`M` membership decided by strict distance comparison.
/// Quadratic; meant for testing.
pub fn definitional_oracle_bounded(
    t: &WeightedTree,
    which: TreeIndex,
    bound: usize,
) -> Result<u128, TreeError> {
    let n = t.len();
    if n > bound {
        return Err(TreeError::BoundExceeded { nodes: n, bound });
    }
    let adj = t.adjacency();
    let dist: Vec<Vec<u64>> = (0..n)
        .map(|src| {
            let mut d = vec![u64::MAX; n];
            d[src] = 0;
            let mut queue = std::collections::VecDeque::from([src]);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &adj[u] {
                    if d[v] == u64::MAX {
                        d[v] = d[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            d
        })
        .collect();
    let w = &t.weights;
    let edges = &t.edges;
    let d_ve = |x: usize, e: usize| dist[x][edges[e].0].min(dist[x][edges[e].1]);
    let d_ee = |e: usize, f: usize| d_ve(edges[e].0, f).min(d_ve(edges[e].1, f));

    let mut total: u128 = 0;
    let mut acc = |x: u128| -> Result<(), TreeError> {
        total = total.checked_add(x).ok_or(TreeError::Overflow)?;
        Ok(())
    };
    match which {
        TreeIndex::WienerVertex => {
            for x in 0..n {
                for y in (x + 1)..n {
                    acc(mul3(w[x], w[y], dist[x][y])?)?;
                }
            }
        }
        TreeIndex::WienerEdge => {
            for e in 0..edges.len() {
                for f in (e + 1)..edges.len() {
                    acc(mul3(edges[e].2, edges[f].2, d_ee(e, f))?)?;
                }
            }
        }
        TreeIndex::WienerVertexEdge => {
            for x in 0..n {
                for e in 0..edges.len() {
                    acc(mul3(w[x], edges[e].2, d_ve(x, e))?)?;
                }
            }
        }
        _ => {
            for &(u, v, we) in edges.iter() {
                let (mut n1, mut n2, mut m1, mut m2) = (0u128, 0u128, 0u128, 0u128);
                for x in 0..n {
                    match dist[x][u].cmp(&dist[x][v]) {
                        std::cmp::Ordering::Less => n1 += w[x] as u128,
                        std::cmp::Ordering::Greater => n2 += w[x] as u128,
                        std::cmp::Ordering::Equal => {}
                    }
                }
                for f in 0..edges.len() {
                    let (du, dv) = (d_ve(u, f), d_ve(v, f));
                    if du < dv {
                        m1 += edges[f].2 as u128;
                    } else if dv < du {
                        m2 += edges[f].2 as u128;
                    }
                }
                let we = we as u128;
                let term = match which {
                    TreeIndex::Szeged => we.checked_mul(n1).and_then(|x| x.checked_mul(n2)),
                    TreeIndex::TotalSzeged => {
                        we.checked_mul(n1 + m1).and_then(|x| x.checked_mul(n2 + m2))
                    }
                    TreeIndex::PiEdge => we.checked_mul(m1 + m2),
                    TreeIndex::PiVertex => we.checked_mul(n1 + n2),
                    _ => unreachable!(),
                };
                acc(term.ok_or(TreeError::Overflow)?)?;
            }
        }
    }
    Ok(total)
}
