//! Index values of a benzenoid system assembled from its three quotient trees.
//!
//! With `T_i` weighted by component vertex counts, the Szeged and Wiener
//! indices are sums of the weighted-tree indices over the three classes.
//! With the same trees weighted by component edge counts, so are the
//! edge-Wiener (hat variant), edge-Szeged and PI indices.

use std::time::Instant;

use thiserror::Error;

use crate::boundary::BoundaryCycle;
use crate::lattice::EdgeClass;
use crate::quotient::{quotient_trees, quotient_trees_parallel, QuotientError, QuotientTree};
use crate::treealgo::{all_indices, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("InconsistentDirections: {0}")]
    InconsistentDirections(String),
}

/// The counts and the seven index values, without any run metadata.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IndexValues {
    pub vertices: u64,
    pub edges: u64,
    pub wiener: u128,
    /// Line-graph convention.
    pub edge_wiener: u128,
    /// Minimum endpoint-distance convention; `edge_wiener - C(edges, 2)`.
    pub edge_wiener_hat: u128,
    pub szeged: u128,
    pub edge_szeged: u128,
    pub pi: u128,
    pub vertex_pi: u128,
}

impl IndexValues {
    /// `(name, value)` for the seven indices, in report order.
    pub fn named(&self) -> [(&'static str, u128); 7] {
        [
            ("wiener", self.wiener),
            ("edge_wiener", self.edge_wiener),
            ("edge_wiener_hat", self.edge_wiener_hat),
            ("szeged", self.szeged),
            ("edge_szeged", self.edge_szeged),
            ("pi", self.pi),
            ("vertex_pi", self.vertex_pi),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Fast,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Fast => "fast",
            Method::Oracle => "oracle",
        }
    }
}

/// Contribution of one edge class to each tree-decomposed index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectionPartial {
    pub class: EdgeClass,
    pub tree_nodes: usize,
    pub wiener: u128,
    pub szeged: u128,
    pub edge_wiener_hat: u128,
    pub edge_szeged: u128,
    pub pi: u128,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Timings {
    pub parse_us: u64,
    pub trees_us: u64,
    pub indices_us: u64,
    pub total_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub boundary_length: u64,
    pub values: IndexValues,
    pub per_direction: Vec<DirectionPartial>,
    pub method: Method,
    pub timings: Timings,
}

/// `(|V|, |E|)` from the tree weights, checked to agree across classes.
pub fn counts(trees: &[QuotientTree; 3]) -> Result<(u64, u64), IndexError> {
    let per: Vec<(u64, u64)> = trees.iter().map(|t| (t.vertex_total(), t.edge_total())).collect();
    if per.iter().any(|&c| c != per[0]) {
        return Err(IndexError::InconsistentDirections(format!(
            "(vertices, edges) per class: {per:?}"
        )));
    }
    Ok(per[0])
}

fn partial(t: &QuotientTree) -> Result<DirectionPartial, TreeError> {
    let by_vertices = all_indices(&t.vertex_weighted())?;
    let by_edges = all_indices(&t.edge_weighted())?;
    let sum = |xs: &[u128]| xs.iter().try_fold(0u128, |a, &x| a.checked_add(x)).ok_or(TreeError::Overflow);
    Ok(DirectionPartial {
        class: t.class,
        tree_nodes: t.node_count(),
        wiener: by_vertices.wiener_vertex,
        szeged: by_vertices.szeged,
        edge_wiener_hat: sum(&[by_edges.wiener_edge, by_edges.wiener_vertex, by_edges.wiener_ve])?,
        edge_szeged: by_edges.total_szeged,
        pi: sum(&[by_edges.pi_edge, by_edges.pi_vertex])?,
    })
}

/// Evaluates every index on already-built trees.
pub fn values_from_trees(trees: &[QuotientTree; 3]) -> Result<(IndexValues, Vec<DirectionPartial>), IndexError> {
    let (vertices, edges) = counts(trees)?;
    let partials = trees.iter().map(partial).collect::<Result<Vec<_>, _>>()?;
    let total = |f: fn(&DirectionPartial) -> u128| {
        partials.iter().try_fold(0u128, |a, p| a.checked_add(f(p))).ok_or(TreeError::Overflow)
    };
    let edge_wiener_hat = total(|p| p.edge_wiener_hat)?;
    let m = edges as u128;
    let pairs = m * m.saturating_sub(1) / 2;
    let values = IndexValues {
        vertices,
        edges,
        wiener: total(|p| p.wiener)?,
        edge_wiener: edge_wiener_hat.checked_add(pairs).ok_or(TreeError::Overflow)?,
        edge_wiener_hat,
        szeged: total(|p| p.szeged)?,
        edge_szeged: total(|p| p.edge_szeged)?,
        pi: total(|p| p.pi)?,
        vertex_pi: (vertices as u128).checked_mul(m).ok_or(TreeError::Overflow)?,
    };
    Ok((values, partials))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    /// Build the three trees on separate threads.
    pub parallel: bool,
}

pub fn compute_all(z: &BoundaryCycle) -> Result<IndexReport, IndexError> {
    compute_all_with(z, Options::default())
}

/// Builds the trees once and evaluates every index on them.
pub fn compute_all_with(z: &BoundaryCycle, opts: Options) -> Result<IndexReport, IndexError> {
    let start = Instant::now();
    let trees = if opts.parallel { quotient_trees_parallel(z)? } else { quotient_trees(z)? };
    let trees_done = Instant::now();
    let (values, per_direction) = values_from_trees(&trees)?;
    let end = Instant::now();
    Ok(IndexReport {
        boundary_length: z.len() as u64,
        values,
        per_direction,
        method: Method::Fast,
        timings: Timings {
            parse_us: 0,
            trees_us: (trees_done - start).as_micros() as u64,
            indices_us: (end - trees_done).as_micros() as u64,
            total_us: (end - start).as_micros() as u64,
        },
    })
}

fn fast_values(z: &BoundaryCycle) -> Result<IndexValues, IndexError> {
    Ok(values_from_trees(&quotient_trees(z)?)?.0)
}

pub fn szeged_index(z: &BoundaryCycle) -> Result<u128, IndexError> {
    Ok(fast_values(z)?.szeged)
}

pub fn wiener_index(z: &BoundaryCycle) -> Result<u128, IndexError> {
    Ok(fast_values(z)?.wiener)
}

/// `(W_e, Ŵ_e)`: line-graph convention and minimum endpoint-distance convention.
pub fn edge_wiener_index(z: &BoundaryCycle) -> Result<(u128, u128), IndexError> {
    let v = fast_values(z)?;
    Ok((v.edge_wiener, v.edge_wiener_hat))
}

pub fn edge_szeged_index(z: &BoundaryCycle) -> Result<u128, IndexError> {
    Ok(fast_values(z)?.edge_szeged)
}

pub fn pi_index(z: &BoundaryCycle) -> Result<u128, IndexError> {
    Ok(fast_values(z)?.pi)
}

/// `|V|·|E|`, exact for bipartite graphs.
pub fn vertex_pi_index(z: &BoundaryCycle) -> Result<u128, IndexError> {
    Ok(fast_values(z)?.vertex_pi)
}
