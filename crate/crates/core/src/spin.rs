//! Classical spin models on hypergraphs.
//!
//! The Hamiltonian is `H(s) = sum_m J_m * prod_{i in e_m} s_i` and the
//! Boltzmann weight is `exp(-beta * H)`, with `k_B = 1`. Ferromagnetic
//! coupling therefore means `J < 0`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::SpanChunks;
use crate::hypergraph::Hypergraph;
use crate::numeric::log_sum_exp;

/// Largest vertex count for brute-force enumeration over spin configurations.
pub const MAX_SPINS: usize = 24;
/// Largest edge count for enumeration over edge variables.
pub const MAX_EDGE_VARIABLES: usize = 20;

const CONFIG_CHUNK_BITS: usize = 14;

#[derive(Clone, Debug, PartialEq)]
pub struct SpinModel {
    hypergraph: Hypergraph,
    couplings: Vec<f64>,
    beta: f64,
}

/// One value in `{+1, -1}` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinConfig(Vec<i8>);

impl SpinConfig {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidValue(format!("spin value {bad}")));
        }
        Ok(Self(values))
    }

    /// Spin `i` is `-1` exactly when bit `i` of `index` is set.
    pub fn from_index(len: usize, index: u64) -> Self {
        Self(
            (0..len)
                .map(|i| if index >> i & 1 == 1 { -1 } else { 1 })
                .collect(),
        )
    }

    pub fn values(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl SpinModel {
    pub fn new(hypergraph: Hypergraph, couplings: Vec<f64>, beta: f64) -> Result<Self> {
        if couplings.len() != hypergraph.num_edges() {
            return Err(Error::LengthMismatch {
                expected: hypergraph.num_edges(),
                got: couplings.len(),
            });
        }
        if let Some(j) = couplings.iter().find(|j| !j.is_finite()) {
            return Err(Error::InvalidValue(format!("coupling {j}")));
        }
        if !(beta.is_finite() && beta >= 0.0) {
            return Err(Error::InvalidValue(format!("beta {beta}")));
        }
        Ok(Self {
            hypergraph,
            couplings,
            beta,
        })
    }

    pub fn uniform(hypergraph: Hypergraph, coupling: f64, beta: f64) -> Result<Self> {
        let n = hypergraph.num_edges();
        Self::new(hypergraph, vec![coupling; n], beta)
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn couplings(&self) -> &[f64] {
        &self.couplings
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        Self::new(self.hypergraph.clone(), self.couplings.clone(), beta)
    }

    pub fn with_couplings(&self, couplings: Vec<f64>) -> Result<Self> {
        Self::new(self.hypergraph.clone(), couplings, self.beta)
    }

    /// The shared coupling when all edges carry the same positive value.
    pub fn uniform_positive_coupling(&self) -> Result<f64> {
        match self.couplings.first() {
            Some(&j) if j > 0.0 && self.couplings.iter().all(|&c| c == j) => Ok(j),
            _ => Err(Error::NonUniformCoupling),
        }
    }

    pub fn energy(&self, config: &SpinConfig) -> Result<f64> {
        let k = self.hypergraph.num_vertices();
        if config.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                got: config.len(),
            });
        }
        let s = config.values();
        Ok(self
            .hypergraph
            .edges()
            .iter()
            .zip(&self.couplings)
            .map(|(e, j)| {
                let sign: i32 = e.iter().map(|&i| s[i] as i32).product();
                j * sign as f64
            })
            .sum())
    }

    /// `ln Z` by enumerating all `2^K` spin configurations.
    pub fn ln_partition_function(&self) -> Result<f64> {
        let k = self.hypergraph.num_vertices();
        if k > MAX_SPINS {
            return Err(Error::capacity("vertex count", k, MAX_SPINS));
        }
        let masks: Vec<u64> = self
            .hypergraph
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u64, |m, &i| m | 1 << i))
            .collect();
        let chunk_bits = k.min(CONFIG_CHUNK_BITS);
        let chunks = 1u64 << (k - chunk_bits);
        let partials: Vec<f64> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let start = c << chunk_bits;
                let exponents: Vec<f64> = (start..start + (1 << chunk_bits))
                    .map(|x| {
                        let e: f64 = masks
                            .iter()
                            .zip(&self.couplings)
                            .map(|(m, j)| if (x & m).count_ones() % 2 == 1 { -j } else { *j })
                            .sum();
                        -self.beta * e
                    })
                    .collect();
                log_sum_exp(&exponents)
            })
            .collect();
        Ok(log_sum_exp(&partials))
    }

    /// `Z = sum_s exp(-beta H(s))` over all spin configurations.
    pub fn partition_function(&self) -> Result<f64> {
        Ok(self.ln_partition_function()?.exp())
    }

    /// `ln Z` through edge variables `S_m = prod_{i in e_m} s_i`.
    ///
    /// Every assignment of the `N` edge variables is visited and kept only if
    /// it satisfies all constraints, i.e. has even overlap with every vector
    /// of the left null space of the edge matrix. Each admissible assignment
    /// is hit by exactly `2^(K-M)` spin configurations, which restores the
    /// count of the plain spin sum.
    pub fn ln_partition_function_edge_vars(&self) -> Result<f64> {
        let n = self.hypergraph.num_edges();
        if n > MAX_EDGE_VARIABLES {
            return Err(Error::capacity("edge count", n, MAX_EDGE_VARIABLES));
        }
        let matrix = self.hypergraph.edge_matrix()?;
        let rank = matrix.rank();
        let constraints: Vec<u64> = matrix
            .transpose()?
            .null_space_basis()
            .iter()
            .map(|c| c.word())
            .collect();
        let exponents: Vec<f64> = (0u64..1 << n)
            .filter(|s| constraints.iter().all(|c| (s & c).count_ones() % 2 == 0))
            .map(|s| {
                let e: f64 = self
                    .couplings
                    .iter()
                    .enumerate()
                    .map(|(m, j)| if s >> m & 1 == 1 { -j } else { *j })
                    .sum();
                -self.beta * e
            })
            .collect();
        let multiplicity = (self.hypergraph.num_vertices() - rank) as f64;
        Ok(multiplicity * std::f64::consts::LN_2 + log_sum_exp(&exponents))
    }

    pub fn partition_function_edge_vars(&self) -> Result<f64> {
        Ok(self.ln_partition_function_edge_vars()?.exp())
    }
}

/// `ln sum_{g in span} exp(-beta sum_m J_m sigma_m(g))`, with
/// `sigma_m(g) = -1` when coordinate `m` is in the support of `g`.
pub(crate) fn ln_signed_group_sum(generators: &[u64], couplings: &[f64], beta: f64) -> f64 {
    // Byte lookup tables: per byte position, sum of J_m over the set bits.
    let tables: Vec<[f64; 256]> = couplings
        .chunks(8)
        .map(|js| {
            let mut t = [0.0; 256];
            for (b, slot) in t.iter_mut().enumerate() {
                *slot = js
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| b >> i & 1 == 1)
                    .map(|(_, j)| j)
                    .sum();
            }
            t
        })
        .collect();
    let total: f64 = couplings.iter().sum();
    let chunks = SpanChunks::new(generators);
    let partials: Vec<f64> = (0..chunks.chunk_count())
        .into_par_iter()
        .map(|c| {
            let exponents: Vec<f64> = chunks
                .chunk(c)
                .map(|g| {
                    let flipped: f64 = tables
                        .iter()
                        .enumerate()
                        .map(|(i, t)| t[(g >> (8 * i) & 0xff) as usize])
                        .sum();
                    -beta * (total - 2.0 * flipped)
                })
                .collect();
            log_sum_exp(&exponents)
        })
        .collect();
    log_sum_exp(&partials)
}
