//! CSS states attached to hypergraphs.
//!
//! Qubits sit on the vertices of the hypergraph. A maximal independent set of
//! edges gives the X-type generators and the orthogonal hypergraph gives the
//! Z-type generators. Stabilizer elements are handled purely as GF(2)
//! support vectors since X and Z never mix.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{BitVector, SpanChunks};
use crate::hypergraph::Hypergraph;

/// Largest generator count for group enumeration.
pub const MAX_GROUP_RANK: usize = 26;
/// Largest qubit count for dense statevectors.
pub const MAX_DENSE_QUBITS: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct CssState {
    hypergraph: Hypergraph,
    x_generators: Vec<BitVector>,
    z_generators: Vec<BitVector>,
}

/// Number of stabilizer-group elements of each Pauli weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn from_counts(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    /// Count for weight `l`, zero beyond the qubit count.
    pub fn count(&self, l: usize) -> u64 {
        self.counts.get(l).copied().unwrap_or(0)
    }

    /// Counts indexed by weight, `0..=num_qubits`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn num_qubits(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Probability that i.i.d. flips with rate `p` land exactly on a group
    /// element: `sum_l count(l) p^l (1-p)^(n-l)`.
    pub fn hit_probability(&self, p: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::ProbabilityOutOfRange(p));
        }
        let n = self.num_qubits() as i32;
        Ok(self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(l, &c)| c as f64 * p.powi(l as i32) * (1.0 - p).powi(n - l as i32))
            .sum())
    }
}

fn weight_distribution(num_qubits: usize, generators: &[BitVector]) -> Result<WeightDistribution> {
    if generators.len() > MAX_GROUP_RANK {
        return Err(Error::capacity(
            "generator count",
            generators.len(),
            MAX_GROUP_RANK,
        ));
    }
    let words: Vec<u64> = generators.iter().map(BitVector::word).collect();
    let chunks = SpanChunks::new(&words);
    let counts = (0..chunks.chunk_count())
        .into_par_iter()
        .map(|c| {
            let mut local = vec![0u64; num_qubits + 1];
            for g in chunks.chunk(c) {
                local[g.count_ones() as usize] += 1;
            }
            local
        })
        .reduce(
            || vec![0u64; num_qubits + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(WeightDistribution { counts })
}

impl CssState {
    /// X-generators from the first maximal independent set of edges (in edge
    /// order), Z-generators from the orthogonal hypergraph.
    pub fn from_hypergraph(hypergraph: Hypergraph) -> Result<Self> {
        let matrix = hypergraph.edge_matrix()?;
        let x_generators = matrix
            .independent_row_indices()
            .into_iter()
            .map(|i| *matrix.row(i))
            .collect();
        let z_generators = matrix.null_space_basis();
        Ok(Self {
            hypergraph,
            x_generators,
            z_generators,
        })
    }

    /// Explicit generator sets. Only lengths are checked; commutation and
    /// independence are not enforced (see [`Self::verify_stabilized`]).
    pub fn from_generators(
        hypergraph: Hypergraph,
        x_generators: Vec<BitVector>,
        z_generators: Vec<BitVector>,
    ) -> Result<Self> {
        let n = hypergraph.num_vertices();
        if let Some(bad) = x_generators.iter().chain(&z_generators).find(|g| g.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        Ok(Self {
            hypergraph,
            x_generators,
            z_generators,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn num_qubits(&self) -> usize {
        self.hypergraph.num_vertices()
    }

    /// Number of X-type generators.
    pub fn x_rank(&self) -> usize {
        self.x_generators.len()
    }

    pub fn x_generators(&self) -> &[BitVector] {
        &self.x_generators
    }

    pub fn z_generators(&self) -> &[BitVector] {
        &self.z_generators
    }

    pub fn x_weight_distribution(&self) -> Result<WeightDistribution> {
        weight_distribution(self.num_qubits(), &self.x_generators)
    }

    pub fn z_weight_distribution(&self) -> Result<WeightDistribution> {
        weight_distribution(self.num_qubits(), &self.z_generators)
    }

    fn check_dense(&self) -> Result<()> {
        let n = self.num_qubits();
        if n > MAX_DENSE_QUBITS {
            return Err(Error::capacity("qubit count", n, MAX_DENSE_QUBITS));
        }
        if self.x_rank() > MAX_GROUP_RANK {
            return Err(Error::capacity("generator count", self.x_rank(), MAX_GROUP_RANK));
        }
        Ok(())
    }

    /// Real amplitudes over the computational basis (qubit `q` is bit `q` of
    /// the index): `2^(-M/2)` on every X-group element applied to `|0...0>`.
    pub fn statevector(&self) -> Result<Vec<f64>> {
        self.check_dense()?;
        let mut amps = vec![0.0; 1 << self.num_qubits()];
        let words: Vec<u64> = self.x_generators.iter().map(BitVector::word).collect();
        let chunks = SpanChunks::new(&words);
        let norm = 2f64.powf(-(self.x_rank() as f64) / 2.0);
        for c in 0..chunks.chunk_count() {
            for g in chunks.chunk(c) {
                amps[g as usize] += norm;
            }
        }
        Ok(amps)
    }

    /// The same state built from the Z side: `prod_n (1 + B_n) |+...+>`,
    /// normalized by `2^(-(N-M)/2)` where `N - M` is the Z-generator count.
    pub fn statevector_from_z(&self) -> Result<Vec<f64>> {
        self.check_dense()?;
        let n = self.num_qubits();
        let z_rank = self.z_generators.len();
        let mut amps = vec![2f64.powf(-(n as f64) / 2.0); 1 << n];
        for b in &self.z_generators {
            let w = b.word();
            amps = (0..amps.len())
                .map(|x| {
                    // (1 + B) in the Z basis: diagonal 1 + (-1)^{b.x}
                    let sign = if (x as u64 & w).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
                    amps[x] * (1.0 + sign)
                })
                .collect();
        }
        let norm = 2f64.powf(-(z_rank as f64) / 2.0);
        amps.iter_mut().for_each(|a| *a *= norm);
        Ok(amps)
    }

    /// Applies each X-generator (index XOR) and each Z-generator (sign flip)
    /// to the statevector and checks that it is left unchanged.
    pub fn verify_stabilized(&self) -> Result<bool> {
        let amps = self.statevector()?;
        let x_ok = self.x_generators.iter().all(|g| {
            let w = g.word() as usize;
            (0..amps.len()).all(|i| amps[i ^ w] == amps[i])
        });
        let z_ok = self.z_generators.iter().all(|g| {
            let w = g.word();
            amps.iter().enumerate().all(|(i, &a)| {
                let flipped = (i as u64 & w).count_ones() % 2 == 1;
                !flipped || a == 0.0
            })
        });
        Ok(x_ok && z_ok)
    }
}
