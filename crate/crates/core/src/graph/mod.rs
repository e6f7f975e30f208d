//! Simple graphs on up to 64 vertices as adjacency bitrows, permutation
//! graphs, split recognition, and graph6 text form.

pub(crate) mod canon;
mod catalog;
mod embed;
mod graph6;
mod search;
mod verify;

pub use canon::{canonical_form, graph_iso};
pub use catalog::{realization_chart, GraphCatalog, CATALOG_NAMES};
pub use embed::induced_subgraph_iso;
pub use graph6::{from_graph6, to_graph6};
pub use search::{enumerate_graphs_avoiding, realizing_permutations};
pub use verify::{verify_forbidden_characterization, CharacterizationReport};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const MAX_VERTICES: usize = 64;

/// An undirected, loop-free graph with vertices 0..n, stored as one u64
/// neighbor bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                got: n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::TooLarge {
                got: u.max(v),
                max: self.n.saturating_sub(1),
            });
        }
        if u == v {
            return Err(Error::Parse(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edge-flip off the diagonal.
    pub fn complement(&self) -> Graph {
        let mask = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let adj = (0..self.n)
            .map(|u| !self.adj[u] & mask & !(1 << u))
            .collect();
        Graph { n: self.n, adj }
    }

    /// The subgraph induced by the given vertices, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph {
            n: vertices.len(),
            adj: vec![0; vertices.len()],
        };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// The subgraph induced by the set bits of `mask`, keeping vertex order.
    pub fn induced_mask(&self, mask: u64) -> Graph {
        let vertices: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        self.induced(&vertices)
    }

    /// Builds a graph from a column-major edge bitmask: bit t covers the
    /// pair (i, j), i < j, with t = j(j-1)/2 + i. Requires n <= 11 so the
    /// mask fits in a u64.
    pub(crate) fn from_pair_mask(n: usize, mask: u64) -> Graph {
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut g = Graph {
            n,
            adj: vec![0; n],
        };
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> t & 1 == 1 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
                t += 1;
            }
        }
        g
    }

    /// The column-major edge bitmask of this graph; inverse of
    /// `from_pair_mask`.
    pub(crate) fn pair_mask(&self) -> u64 {
        debug_assert!(self.n * self.n.saturating_sub(1) / 2 <= 64);
        let mut mask = 0u64;
        let mut t = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << t;
                }
                t += 1;
            }
        }
        mask
    }

    /// Deletes one vertex, renumbering the rest in order.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let vertices: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&vertices)
    }

    /// True iff the vertices split into a clique and an independent set.
    /// Direct subset search; intended for small graphs.
    pub fn is_split(&self) -> bool {
        let n = self.n;
        if n >= 26 {
            // subset search would be astronomically slow; callers stay small
            panic!("is_split is a small-graph operation (n = {n})");
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        'outer: for clique in 0u64..=full {
            let mut rest = clique;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.adj[v] & clique != clique & !(1 << v) {
                    continue 'outer;
                }
            }
            let indep = full & !clique;
            let mut rest = indep;
            let mut ok = true;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.adj[v] & indep != 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                return true;
            }
        }
        false
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The permutation graph of `pi`: vertices 1..n become 0..n-1, with an edge
/// exactly at each inversion.
pub fn perm_graph(pi: &Permutation) -> Graph {
    let n = pi.len();
    let v = pi.values();
    let mut g = Graph {
        n,
        adj: vec![0; n],
    };
    for i in 0..n {
        for j in i + 1..n {
            if v[i] > v[j] {
                g.adj[i] |= 1 << j;
                g.adj[j] |= 1 << i;
            }
        }
    }
    g
}
