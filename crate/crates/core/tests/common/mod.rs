#![allow(dead_code)]

use hypercss::{Hypergraph, SpinModel};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random hypergraph with `1..=max_k` vertices and `1..=max_n` non-empty
/// edges. With `cover`, every vertex lies in at least one edge.
pub fn random_hypergraph(rng: &mut impl Rng, max_k: usize, max_n: usize, cover: bool) -> Hypergraph {
    loop {
        let k = rng.gen_range(1..=max_k);
        let n = rng.gen_range(1..=max_n);
        let mut edges: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                let size = rng.gen_range(1..=k);
                let mut vs: Vec<usize> = (0..k).collect();
                vs.shuffle(rng);
                vs.truncate(size);
                vs
            })
            .collect();
        if cover {
            for v in 0..k {
                if !edges.iter().any(|e| e.contains(&v)) {
                    let m = rng.gen_range(0..n);
                    edges[m].push(v);
                }
            }
        }
        if let Ok(h) = Hypergraph::new(k, edges) {
            return h;
        }
    }
}

pub fn random_model(rng: &mut impl Rng, max_k: usize, max_n: usize, couplings: &[f64], betas: &[f64]) -> SpinModel {
    let h = random_hypergraph(rng, max_k, max_n, true);
    let js = (0..h.num_edges()).map(|_| *couplings.choose(rng).unwrap()).collect();
    let beta = *betas.choose(rng).unwrap();
    SpinModel::new(h, js, beta).unwrap()
}

pub fn rel(reference: f64, value: f64) -> f64 {
    if reference == value {
        0.0
    } else {
        (reference - value).abs() / reference.abs()
    }
}
