//! Partition function / CSS overlap identity and noise stability.
//!
//! For a spin model on `H` with `K` spins, `N` edges and edge-matrix rank `M`,
//! let `|CSS>` be the CSS state on the dual hypergraph (`N` qubits) and
//! `|alpha> = prod_m exp(-beta J_m Z_m) |+>^N`. Then
//!
//! ```text
//! Z = 2^(K-M) * 2^((N+M)/2) * <alpha|CSS>
//! ```
//!
//! The factor `2^(K-M)` counts the spin configurations that share one
//! assignment of edge variables (for instance a global flip).
//!
//! The stability probabilities `W_S(p)` (bit-flip) and `V(p)` (phase-flip) are
//! the chances that i.i.d. X / Z errors land on an X / Z stabilizer. Both are
//! computed directly from weight distributions and, for uniform coupling,
//! through the partition function of the ferromagnetic model
//! `H = -J sum_m S_m` after the change of variable
//! `p / (1 - p) = exp(-2 beta J)` (bit-flip) or `1 - 2p = exp(-2 beta J)`
//! (phase-flip).

use std::f64::consts::LN_2;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::css::{CssState, MAX_GROUP_RANK};
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::hypergraph::Hypergraph;
use crate::numeric::{compensated_sum, relative_error};
use crate::spin::{ln_signed_group_sum, SpinModel, MAX_SPINS};

/// Relative error below which the identity is considered verified.
pub const DUALITY_TOLERANCE: f64 = 1e-9;

/// Outcome of checking the partition function against the CSS overlap.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DualityReport {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub z_bruteforce: f64,
    pub overlap: f64,
    /// `2^(K-M) * 2^((N+M)/2)`.
    pub constant: f64,
    /// `2^((N+M)/2)`, the prefactor without the multiplicity of the spin map.
    pub uncorrected_constant: f64,
    pub relative_error: f64,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.relative_error <= DUALITY_TOLERANCE
    }
}

fn dual_css(h: &Hypergraph) -> Result<CssState> {
    CssState::from_hypergraph(h.dual()?)
}

/// `ln <alpha|CSS>` for the CSS state on the dual hypergraph.
pub fn ln_overlap_group_sum(model: &SpinModel) -> Result<f64> {
    let css = dual_css(model.hypergraph())?;
    let m = css.x_rank();
    if m > MAX_GROUP_RANK {
        return Err(Error::capacity("dual rank", m, MAX_GROUP_RANK));
    }
    let n = css.num_qubits();
    let gens: Vec<u64> = css.x_generators().iter().map(BitVector::word).collect();
    let sum = ln_signed_group_sum(&gens, model.couplings(), model.beta());
    Ok(sum - (n + m) as f64 / 2.0 * LN_2)
}

/// `<alpha|CSS> = 2^(-(N+M)/2) sum_{g in X-group} prod_m exp(-beta J_m sigma_m(g))`
/// with `sigma_m(g) = -1` on the support of `g`.
pub fn overlap_group_sum(model: &SpinModel) -> Result<f64> {
    Ok(ln_overlap_group_sum(model)?.exp())
}

/// `<alpha|CSS>` as an explicit inner product of dense amplitude vectors.
pub fn overlap_dense(model: &SpinModel) -> Result<f64> {
    let css = dual_css(model.hypergraph())?;
    let state = css.statevector()?;
    let n = css.num_qubits();
    let beta = model.beta();
    let norm = 2f64.powf(-(n as f64) / 2.0);
    let alpha = |x: usize| -> f64 {
        let e: f64 = model
            .couplings()
            .iter()
            .enumerate()
            .map(|(q, j)| if x >> q & 1 == 1 { -j } else { *j })
            .sum();
        norm * (-beta * e).exp()
    };
    Ok(compensated_sum(
        state
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0.0)
            .map(|(x, a)| alpha(x) * a),
    ))
}

/// Brute-force partition function against `constant * <alpha|CSS>`.
pub fn verify_duality(model: &SpinModel) -> Result<DualityReport> {
    let h = model.hypergraph();
    let k = h.num_vertices();
    if k > MAX_SPINS {
        return Err(Error::capacity("vertex count", k, MAX_SPINS));
    }
    let n = h.num_edges();
    let overlap = overlap_group_sum(model)?;
    let m = h.rank()?;
    let z = model.partition_function()?;
    let uncorrected_constant = 2f64.powf((n + m) as f64 / 2.0);
    let constant = 2f64.powi((k - m) as i32) * uncorrected_constant;
    Ok(DualityReport {
        k,
        n,
        m,
        z_bruteforce: z,
        overlap,
        constant,
        uncorrected_constant,
        relative_error: relative_error(z, constant * overlap),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseKind {
    BitFlip,
    PhaseFlip,
}

impl fmt::Display for NoiseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NoiseKind::BitFlip => "bitflip",
            NoiseKind::PhaseFlip => "phaseflip",
        })
    }
}

impl FromStr for NoiseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bitflip" => Ok(NoiseKind::BitFlip),
            "phaseflip" => Ok(NoiseKind::PhaseFlip),
            other => Err(Error::InvalidValue(format!("noise kind {other:?}"))),
        }
    }
}

/// `W_S(p)`: probability that i.i.d. bit flips form an X-stabilizer.
pub fn stability_bitflip_direct(css: &CssState, p: f64) -> Result<f64> {
    css.x_weight_distribution()?.hit_probability(p)
}

/// `V(p)`: probability that i.i.d. phase flips form a Z-stabilizer.
pub fn stability_phaseflip_direct(css: &CssState, p: f64) -> Result<f64> {
    css.z_weight_distribution()?.hit_probability(p)
}

fn check_open_half(p: f64) -> Result<()> {
    if p > 0.0 && p < 0.5 {
        Ok(())
    } else {
        Err(Error::ProbabilityOutOfRange(p))
    }
}

/// `ln Z` of the ferromagnetic model `-J sum S_m` on the same hypergraph.
fn ln_ferromagnetic_z(model: &SpinModel, coupling: f64, beta: f64) -> Result<f64> {
    let n = model.hypergraph().num_edges();
    SpinModel::new(model.hypergraph().clone(), vec![-coupling; n], beta)?.ln_partition_function()
}

/// `W_S(p) = [p(1-p)]^(N/2) Z / 2^(K-M)` with `p/(1-p) = exp(-2 beta J)`.
///
/// The model's own `beta` is ignored; `J` is read as a ferromagnetic strength.
pub fn stability_bitflip_via_z(model: &SpinModel, p: f64) -> Result<f64> {
    let j = model.uniform_positive_coupling()?;
    check_open_half(p)?;
    let h = model.hypergraph();
    let (k, n, m) = (h.num_vertices(), h.num_edges(), h.rank()?);
    let beta = beta_from_p_bitflip(p, j)?;
    let ln_z = ln_ferromagnetic_z(model, j, beta)?;
    Ok((n as f64 / 2.0 * (p * (1.0 - p)).ln() + ln_z - (k - m) as f64 * LN_2).exp())
}

/// `V(p) = (1-2p)^(N/2) Z / 2^K` with `1 - 2p = exp(-2 beta J)`.
pub fn stability_phaseflip_via_z(model: &SpinModel, p: f64) -> Result<f64> {
    let j = model.uniform_positive_coupling()?;
    check_open_half(p)?;
    let h = model.hypergraph();
    let (k, n) = (h.num_vertices(), h.num_edges());
    let beta = beta_from_p_phaseflip(p, j)?;
    let ln_z = ln_ferromagnetic_z(model, j, beta)?;
    Ok((n as f64 / 2.0 * (1.0 - 2.0 * p).ln() + ln_z - k as f64 * LN_2).exp())
}

fn check_coupling(j: f64) -> Result<()> {
    if j > 0.0 && j.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidValue(format!("coupling {j} must be positive")))
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta >= 0.0 && !beta.is_nan() {
        Ok(())
    } else {
        Err(Error::InvalidValue(format!("beta {beta}")))
    }
}

/// `p = 1 / (1 + exp(2 beta J))`, i.e. `p/(1-p) = exp(-2 beta J)`.
pub fn p_from_beta_bitflip(beta: f64, j: f64) -> Result<f64> {
    check_beta(beta)?;
    check_coupling(j)?;
    Ok(1.0 / (1.0 + (2.0 * beta * j).exp()))
}

pub fn beta_from_p_bitflip(p: f64, j: f64) -> Result<f64> {
    check_coupling(j)?;
    if !(p > 0.0 && p <= 0.5) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    Ok(((1.0 - p) / p).ln() / (2.0 * j))
}

/// `p = (1 - exp(-2 beta J)) / 2`, i.e. `1 - 2p = exp(-2 beta J)`.
pub fn p_from_beta_phaseflip(beta: f64, j: f64) -> Result<f64> {
    check_beta(beta)?;
    check_coupling(j)?;
    Ok(-(-2.0 * beta * j).exp_m1() / 2.0)
}

pub fn beta_from_p_phaseflip(p: f64, j: f64) -> Result<f64> {
    check_coupling(j)?;
    if !(0.0..0.5).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    Ok(-(-2.0 * p).ln_1p() / (2.0 * j))
}

/// Phase-flip critical probability matching a bit-flip one at the same
/// coupling: `p_f = 1/2 - (p_b/2) / (1 - p_b)`.
pub fn critical_pf_from_pb(p_b: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&p_b) {
        return Err(Error::ProbabilityOutOfRange(p_b));
    }
    Ok(0.5 - (p_b / 2.0) / (1.0 - p_b))
}

/// Square-lattice Ising critical coupling `beta J = ln(1 + sqrt 2) / 2`.
pub fn ising_square_critical_coupling() -> f64 {
    std::f64::consts::SQRT_2.ln_1p() / 2.0
}

/// Root of `tanh(x) = exp(-2x)` on `(0, 1)` by bisection.
pub fn solve_self_dual_coupling() -> f64 {
    let f = |x: f64| x.tanh() - (-2.0 * x).exp();
    let (mut lo, mut hi) = (1e-6, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    0.5 * (lo + hi)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityRow {
    pub p: f64,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityCurve {
    pub noise: NoiseKind,
    /// Qubits of the dual CSS state (edges of the model hypergraph).
    pub n_qubits: usize,
    pub m_rank: usize,
    pub rows: Vec<StabilityRow>,
}

/// `steps` evenly spaced points from `pmin` to `pmax` inclusive; one point
/// gives `[pmin]`.
pub fn p_grid(pmin: f64, pmax: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![pmin],
        _ => (0..steps)
            .map(|i| pmin + (pmax - pmin) * i as f64 / (steps - 1) as f64)
            .collect(),
    }
}

/// Stability of the CSS state on the dual of `h` at each grid point, by
/// direct enumeration. Rows keep grid order.
pub fn sweep_stability(h: &Hypergraph, grid: &[f64], noise: NoiseKind) -> Result<StabilityCurve> {
    if let Some(&p) = grid.iter().find(|&&p| !(0.0..=0.5).contains(&p)) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    let css = dual_css(h)?;
    let weights = match noise {
        NoiseKind::BitFlip => css.x_weight_distribution()?,
        NoiseKind::PhaseFlip => css.z_weight_distribution()?,
    };
    let rows = grid
        .par_iter()
        .map(|&p| Ok(StabilityRow {
            p,
            value: weights.hit_probability(p)?,
        }))
        .collect::<Result<Vec<_>>>()?;
    Ok(StabilityCurve {
        noise,
        n_qubits: css.num_qubits(),
        m_rank: css.x_rank(),
        rows,
    })
}
