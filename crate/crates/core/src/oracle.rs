//! Brute-force evaluation of every index straight from its definition on the
//! explicit molecular graph. Ground truth for the fast path; shares nothing
//! with it beyond the lattice types.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::boundary::{validate_hexagons, BoundaryError};
use crate::indices::IndexValues;
use crate::lattice::{edge_class, hex_vertices, EdgeClass, HexCoord, VertexCoord};

pub const DEFAULT_BOUND: usize = 5000;
pub const LINE_GRAPH_BOUND: usize = 300;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("BoundExceeded: graph has {vertices} vertices, oracle bound is {bound}")]
    BoundExceeded { vertices: usize, bound: usize },
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
}

/// Full vertex/edge realisation of a benzenoid system.
#[derive(Debug, Clone)]
pub struct ExplicitGraph {
    vertices: Vec<VertexCoord>,
    index: HashMap<VertexCoord, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize, EdgeClass)>,
    hexagons: usize,
}

pub fn build_graph(hs: &HashSet<HexCoord>) -> Result<ExplicitGraph, BoundaryError> {
    validate_hexagons(hs)?;
    let mut sorted: Vec<HexCoord> = hs.iter().copied().collect();
    sorted.sort_unstable();

    let mut g = ExplicitGraph {
        vertices: Vec::new(),
        index: HashMap::new(),
        adjacency: Vec::new(),
        edges: Vec::new(),
        hexagons: sorted.len(),
    };
    let mut seen_edges = HashSet::new();
    for h in sorted {
        let corners = hex_vertices(h);
        let ids: Vec<usize> = corners.iter().map(|&c| g.intern(c)).collect();
        for i in 0..6 {
            let (a, b) = (ids[i], ids[(i + 1) % 6]);
            if seen_edges.insert((a.min(b), a.max(b))) {
                let class = edge_class(corners[i], corners[(i + 1) % 6])
                    .expect("hexagon sides are lattice edges");
                g.edges.push((a, b, class));
                g.adjacency[a].push(b);
                g.adjacency[b].push(a);
            }
        }
    }
    Ok(g)
}

impl ExplicitGraph {
    fn intern(&mut self, v: VertexCoord) -> usize {
        if let Some(&id) = self.index.get(&v) {
            return id;
        }
        let id = self.vertices.len();
        self.vertices.push(v);
        self.index.insert(v, id);
        self.adjacency.push(Vec::new());
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn hexagon_count(&self) -> usize {
        self.hexagons
    }

    pub fn vertices(&self) -> &[VertexCoord] {
        &self.vertices
    }

    pub fn vertex_id(&self, v: VertexCoord) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn edges(&self) -> &[(usize, usize, EdgeClass)] {
        &self.edges
    }

    pub fn bfs(&self, src: usize) -> Vec<u32> {
        bfs(&self.adjacency, src)
    }

    pub fn is_bipartite(&self) -> bool {
        let d = self.bfs(0);
        self.edges.iter().all(|&(a, b, _)| d[a] % 2 != d[b] % 2)
    }

    /// Vertices are the edges of `self`, adjacent when they share an endpoint.
    pub fn line_graph(&self) -> Vec<Vec<usize>> {
        let mut incident = vec![Vec::new(); self.vertex_count()];
        for (i, &(a, b, _)) in self.edges.iter().enumerate() {
            incident[a].push(i);
            incident[b].push(i);
        }
        let mut adj = vec![Vec::new(); self.edge_count()];
        for around in &incident {
            for (k, &e) in around.iter().enumerate() {
                for &f in &around[k + 1..] {
                    adj[e].push(f);
                    adj[f].push(e);
                }
            }
        }
        adj
    }
}

fn bfs(adj: &[Vec<usize>], src: usize) -> Vec<u32> {
    let mut d = vec![u32::MAX; adj.len()];
    d[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if d[v] == u32::MAX {
                d[v] = d[u] + 1;
                queue.push_back(v);
            }
        }
    }
    d
}

/// All-pairs vertex distances by one BFS per source.
pub struct DistanceTable<'g> {
    graph: &'g ExplicitGraph,
    n: usize,
    dist: Vec<u16>,
}

impl<'g> DistanceTable<'g> {
    pub fn new(graph: &'g ExplicitGraph, bound: usize) -> Result<Self, OracleError> {
        let n = graph.vertex_count();
        if n > bound {
            return Err(OracleError::BoundExceeded { vertices: n, bound });
        }
        let mut dist = Vec::with_capacity(n * n);
        for src in 0..n {
            dist.extend(graph.bfs(src).into_iter().map(|d| u16::try_from(d).expect("diameter fits u16")));
        }
        Ok(Self { graph, n, dist })
    }

    pub fn vertex(&self, a: usize, b: usize) -> u32 {
        self.dist[a * self.n + b] as u32
    }

    /// `d(x, f) = min(d(x, a), d(x, b))` for `f = ab`.
    pub fn vertex_edge(&self, x: usize, f: usize) -> u32 {
        let (a, b, _) = self.graph.edges[f];
        self.vertex(x, a).min(self.vertex(x, b))
    }

    /// Minimum endpoint distance between two edges.
    pub fn edge_hat(&self, e: usize, f: usize) -> u32 {
        let (a, b, _) = self.graph.edges[e];
        self.vertex_edge(a, f).min(self.vertex_edge(b, f))
    }

    /// `(|N1|, |N2|, |M1|, |M2|)` for edge `e = uv`: vertices and edges strictly
    /// closer to `u` and to `v` respectively.
    pub fn split_counts(&self, e: usize) -> (u64, u64, u64, u64) {
        let (u, v, _) = self.graph.edges[e];
        let (mut n1, mut n2, mut m1, mut m2) = (0, 0, 0, 0);
        for x in 0..self.n {
            let (du, dv) = (self.vertex(x, u), self.vertex(x, v));
            if du < dv {
                n1 += 1;
            } else if dv < du {
                n2 += 1;
            }
        }
        for f in 0..self.graph.edge_count() {
            let (du, dv) = (self.vertex_edge(u, f), self.vertex_edge(v, f));
            if du < dv {
                m1 += 1;
            } else if dv < du {
                m2 += 1;
            }
        }
        (n1, n2, m1, m2)
    }

    pub fn wiener(&self) -> u128 {
        let mut total = 0u128;
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                total += self.vertex(a, b) as u128;
            }
        }
        total
    }

    /// Edge distances follow the line-graph convention: `d̂ + 1` for distinct edges.
    pub fn edge_wiener(&self) -> u128 {
        let m = self.graph.edge_count();
        let mut total = 0u128;
        for e in 0..m {
            for f in (e + 1)..m {
                total += self.edge_hat(e, f) as u128 + 1;
            }
        }
        total
    }

    pub fn values(&self) -> IndexValues {
        let (mut sz, mut sze, mut pi, mut piv) = (0u128, 0u128, 0u128, 0u128);
        for e in 0..self.graph.edge_count() {
            let (n1, n2, m1, m2) = self.split_counts(e);
            sz += (n1 * n2) as u128;
            sze += (m1 * m2) as u128;
            pi += (m1 + m2) as u128;
            piv += (n1 + n2) as u128;
        }
        let edges = self.graph.edge_count() as u128;
        let edge_wiener = self.edge_wiener();
        IndexValues {
            vertices: self.n as u64,
            edges: edges as u64,
            wiener: self.wiener(),
            edge_wiener,
            edge_wiener_hat: edge_wiener - edges * edges.saturating_sub(1) / 2,
            szeged: sz,
            edge_szeged: sze,
            pi,
            vertex_pi: piv,
        }
    }
}

pub fn wiener_bf(g: &ExplicitGraph) -> Result<u128, OracleError> {
    Ok(DistanceTable::new(g, DEFAULT_BOUND)?.wiener())
}

pub fn edge_wiener_bf(g: &ExplicitGraph) -> Result<u128, OracleError> {
    Ok(DistanceTable::new(g, DEFAULT_BOUND)?.edge_wiener())
}

pub fn szeged_bf(g: &ExplicitGraph) -> Result<u128, OracleError> {
    Ok(DistanceTable::new(g, DEFAULT_BOUND)?.values().szeged)
}

pub fn edge_szeged_bf(g: &ExplicitGraph) -> Result<u128, OracleError> {
    Ok(DistanceTable::new(g, DEFAULT_BOUND)?.values().edge_szeged)
}

pub fn pi_bf(g: &ExplicitGraph) -> Result<u128, OracleError> {
    Ok(DistanceTable::new(g, DEFAULT_BOUND)?.values().pi)
}

pub fn vertex_pi_bf(g: &ExplicitGraph) -> Result<u128, OracleError> {
    Ok(DistanceTable::new(g, DEFAULT_BOUND)?.values().vertex_pi)
}

/// Every index from one distance table.
pub fn oracle_values(g: &ExplicitGraph, bound: usize) -> Result<IndexValues, OracleError> {
    Ok(DistanceTable::new(g, bound)?.values())
}

/// Wiener index of the materialised line graph; cross-check for the
/// edge-Wiener convention.
pub fn edge_wiener_line_graph(g: &ExplicitGraph) -> Result<u128, OracleError> {
    if g.vertex_count() > LINE_GRAPH_BOUND {
        return Err(OracleError::BoundExceeded {
            vertices: g.vertex_count(),
            bound: LINE_GRAPH_BOUND,
        });
    }
    let adj = g.line_graph();
    let mut total = 0u128;
    for src in 0..adj.len() {
        let d = bfs(&adj, src);
        total += d[src + 1..].iter().map(|&x| x as u128).sum::<u128>();
    }
    Ok(total)
}
