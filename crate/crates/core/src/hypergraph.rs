//! Hypergraphs and the dual / orthogonal constructions.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// Vertices `0..K` plus an ordered list of non-empty hyperedges.
///
/// Each edge is stored as a strictly increasing list of vertex indices.
/// Identical edges may appear more than once and stay distinct entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    num_vertices: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Vertex lists are sorted; empty edges, repeated vertices and
    /// out-of-range indices are rejected.
    pub fn new(num_vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        for (i, e) in edges.iter_mut().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= num_vertices) {
                return Err(Error::VertexOutOfRange {
                    edge: i,
                    vertex: v,
                    k: num_vertices,
                });
            }
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex {
                    edge: i,
                    vertex: w[0],
                });
            }
        }
        Ok(Self {
            num_vertices,
            edges,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, m: usize) -> &[usize] {
        &self.edges[m]
    }

    /// Number of edges containing each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.vertex_degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// Row `m` is the indicator vector of edge `m` over the vertices.
    pub fn edge_matrix(&self) -> Result<BitMatrix> {
        let rows = self
            .edges
            .iter()
            .map(|e| BitVector::from_indices(self.num_vertices, e))
            .collect::<Result<Vec<_>>>()?;
        BitMatrix::from_rows(self.num_vertices, rows)
    }

    /// GF(2) rank of the edge vectors.
    pub fn rank(&self) -> Result<usize> {
        Ok(self.edge_matrix()?.rank())
    }

    /// Swaps the roles of vertices and edges: the result has one vertex per
    /// edge of `self`, and its edge `i` collects the edges containing vertex `i`.
    pub fn dual(&self) -> Result<Hypergraph> {
        let mut edges = vec![Vec::new(); self.num_vertices];
        for (m, e) in self.edges.iter().enumerate() {
            for &v in e {
                edges[v].push(m);
            }
        }
        if let Some(v) = edges.iter().position(Vec::is_empty) {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(Hypergraph {
            num_vertices: self.edges.len(),
            edges,
        })
    }

    /// Same vertices; edges form the canonical null-space basis of the edge
    /// matrix, so each has even overlap with every edge of `self`.
    pub fn orthogonal(&self) -> Result<Hypergraph> {
        let edges = self
            .edge_matrix()?
            .null_space_basis()
            .iter()
            .map(BitVector::support)
            .collect();
        Ok(Hypergraph {
            num_vertices: self.num_vertices,
            edges,
        })
    }

    /// Maximum edge count accepted by [`Self::constraint_space_bruteforce`].
    pub const BRUTEFORCE_EDGE_LIMIT: usize = 20;

    /// Enumerates every edge subset covering each vertex an even number of
    /// times and returns a reduced echelon basis of that space, as lists of
    /// edge indices.
    pub fn constraint_space_bruteforce(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.edges.len();
        if n > Self::BRUTEFORCE_EDGE_LIMIT {
            return Err(Error::capacity(
                "edge count",
                n,
                Self::BRUTEFORCE_EDGE_LIMIT,
            ));
        }
        let words: Vec<u64> = self
            .edge_matrix()?
            .rows()
            .iter()
            .map(BitVector::word)
            .collect();
        let solutions = (1u64..1 << n)
            .filter(|subset| {
                let cover = words
                    .iter()
                    .enumerate()
                    .filter(|(m, _)| subset >> m & 1 == 1)
                    .fold(0u64, |acc, (_, w)| acc ^ w);
                cover == 0
            })
            .map(|subset| BitVector::from_word(n, subset))
            .collect::<Result<Vec<_>>>()?;
        Ok(BitMatrix::from_rows(n, solutions)?
            .row_echelon_basis()
            .iter()
            .map(BitVector::support)
            .collect())
    }

    /// Same vertex count and the same multiset of edges.
    pub fn labeled_equal(&self, other: &Hypergraph) -> bool {
        if self.num_vertices != other.num_vertices || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort();
        b.sort();
        a == b
    }
}
