//! Seeded generators for property tests and smoke runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::engine::Atoms;
use crate::error::Result;
use crate::info::JointDistribution;
use crate::lattice::universe;

/// Cell masses drawn from a symmetric Dirichlet with concentration one.
pub fn random_distribution(source_alphabets: &[usize], target_alphabet: usize, seed: u64) -> Result<JointDistribution> {
    let cells = source_alphabets.iter().product::<usize>() * target_alphabet;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probs: Vec<f64> = (0..cells).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = probs.iter().sum();
    for p in &mut probs {
        *p /= total;
    }
    JointDistribution::from_dense(source_alphabets.to_vec(), target_alphabet, probs)
}

/// `n` binary sources and a binary target.
pub fn random_binary_distribution(n: usize, seed: u64) -> Result<JointDistribution> {
    random_distribution(&vec![2; n], 2, seed)
}

/// Independent uniform atom values in `[-0.5, 1)`.
pub fn random_atoms(n: usize, seed: u64) -> Result<Atoms> {
    let count = universe(n)?.atoms().len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..count).map(|_| rng.random_range(-0.5..1.0)).collect();
    Atoms::new(n, values)
}
