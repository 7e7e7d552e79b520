//! Lattice families: cycles and periodic tori with their Ising models,
//! toric-code hypergraphs, and hexagonal 2-colexes.
//!
//! Vertex and edge orderings are row-major and fixed, so outputs are stable.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::spin::SpinModel;

/// Undirected multigraph without self-loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= num_vertices || b >= num_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} ({a}, {b}) out of range for {num_vertices} vertices"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("edge {i} is a self-loop at {a}")));
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

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The graph as a 2-uniform hypergraph, edge order preserved.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let edges = self.edges.iter().map(|&(a, b)| vec![a, b]).collect();
        Hypergraph::new(self.num_vertices, edges).expect("graph edges are valid hyperedges")
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidValue(msg()))
    }
}

/// `n` vertices joined in a ring; `n = 2` gives a double bond.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    require(n >= 2, || format!("cycle length {n} < 2"))?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// Periodic `lx x ly` square lattice: vertex `(x, y)` is `y * lx + x` and
/// contributes its +x edge then its +y edge.
pub fn square_torus(lx: usize, ly: usize) -> Result<Graph> {
    require(lx >= 2 && ly >= 2, || format!("torus size {lx}x{ly} below 2x2"))?;
    let idx = |x: usize, y: usize| (y % ly) * lx + (x % lx);
    let mut edges = Vec::with_capacity(2 * lx * ly);
    for y in 0..ly {
        for x in 0..lx {
            edges.push((idx(x, y), idx(x + 1, y)));
            edges.push((idx(x, y), idx(x, y + 1)));
        }
    }
    Graph::new(lx * ly, edges)
}

/// Periodic `l^3` cubic lattice, edges in +x, +y, +z order per vertex.
pub fn cubic_torus(l: usize) -> Result<Graph> {
    require(l >= 2, || format!("cube size {l} < 2"))?;
    let idx = |x: usize, y: usize, z: usize| ((z % l) * l + (y % l)) * l + (x % l);
    let mut edges = Vec::with_capacity(3 * l * l * l);
    for z in 0..l {
        for y in 0..l {
            for x in 0..l {
                edges.push((idx(x, y, z), idx(x + 1, y, z)));
                edges.push((idx(x, y, z), idx(x, y + 1, z)));
                edges.push((idx(x, y, z), idx(x, y, z + 1)));
            }
        }
    }
    Graph::new(l * l * l, edges)
}

/// Qubits on the graph edges; one hyperedge per graph vertex holding the
/// edges incident to it.
pub fn toric_code_hypergraph(g: &Graph) -> Result<Hypergraph> {
    let mut stars = vec![Vec::new(); g.num_vertices()];
    for (q, &(a, b)) in g.edges().iter().enumerate() {
        stars[a].push(q);
        stars[b].push(q);
    }
    if let Some(v) = stars.iter().position(Vec::is_empty) {
        return Err(Error::IsolatedVertex(v));
    }
    Hypergraph::new(g.edges().len(), stars)
}

/// Ising model on `g` with uniform coupling.
pub fn ising_model(g: &Graph, coupling: f64, beta: f64) -> Result<SpinModel> {
    SpinModel::uniform(g.to_hypergraph(), coupling, beta)
}

/// Face labels of the honeycomb torus: face `(i, j)` is `j * lx + i`.
fn face(lx: usize, ly: usize, i: isize, j: isize) -> usize {
    let i = i.rem_euclid(lx as isize) as usize;
    let j = j.rem_euclid(ly as isize) as usize;
    j * lx + i
}

/// Honeycomb vertices are the triangles of the face lattice. Vertex `2t` is
/// the up-triangle `{(i,j), (i+1,j), (i,j+1)}` and `2t+1` the down-triangle
/// `{(i+1,j), (i,j+1), (i+1,j+1)}`, with `t = j * lx + i`.
fn honeycomb_triangles(lx: usize, ly: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(2 * lx * ly);
    for j in 0..ly as isize {
        for i in 0..lx as isize {
            let f = |di, dj| face(lx, ly, i + di, j + dj);
            out.push([f(0, 0), f(1, 0), f(0, 1)]);
            out.push([f(1, 0), f(0, 1), f(1, 1)]);
        }
    }
    out
}

/// Proper 3-coloring of the hexagonal faces, or an error when none exists.
///
/// Every vertex of the honeycomb touches three mutually adjacent faces, so a
/// coloring is forced triangle by triangle once the first one is fixed.
pub fn hexagonal_face_coloring(lx: usize, ly: usize) -> Result<Vec<u8>> {
    if lx < 2 || ly < 2 {
        return Err(Error::NotThreeColorable { lx, ly });
    }
    let triangles = honeycomb_triangles(lx, ly);
    let mut color: Vec<Option<u8>> = vec![None; lx * ly];
    for (slot, c) in triangles[0].iter().zip(0u8..) {
        color[*slot] = Some(c);
    }
    let mut changed = true;
    while changed {
        changed = false;
        for t in &triangles {
            let known: Vec<u8> = t.iter().filter_map(|&f| color[f]).collect();
            if known.len() == 2 && known[0] != known[1] {
                let missing = 3 - known[0] - known[1];
                let f = t.iter().find(|&&f| color[f].is_none()).copied().unwrap();
                color[f] = Some(missing);
                changed = true;
            }
        }
    }
    let color: Vec<u8> = color
        .into_iter()
        .collect::<Option<_>>()
        .ok_or(Error::NotThreeColorable { lx, ly })?;
    let proper = triangles.iter().all(|t| {
        let [a, b, c] = t.map(|f| color[f]);
        a != b && b != c && a != c
    });
    if proper {
        Ok(color)
    } else {
        Err(Error::NotThreeColorable { lx, ly })
    }
}

/// Hexagonal 2-colex on a torus: `2 lx ly` qubits (honeycomb vertices) and
/// one 6-qubit hyperedge per hexagonal face, faces in row-major order.
pub fn hexagonal_2colex(lx: usize, ly: usize) -> Result<Hypergraph> {
    hexagonal_face_coloring(lx, ly)?;
    let mut faces = vec![Vec::with_capacity(6); lx * ly];
    for (v, t) in honeycomb_triangles(lx, ly).iter().enumerate() {
        for &f in t {
            faces[f].push(v);
        }
    }
    Hypergraph::new(2 * lx * ly, faces)
}
