//! Shared helpers for the in-crate unit tests.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::perm::AffinePermutation;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random window: a shuffled residue system plus k-step offsets of size at
/// most `max_step`, giving bounded deviation.
pub fn random_perm(rng: &mut StdRng, max_k: usize, max_step: i64) -> AffinePermutation {
    let k = rng.gen_range(1..=max_k);
    random_perm_with_k(rng, k, max_step)
}

pub fn random_perm_with_k(rng: &mut StdRng, k: usize, max_step: i64) -> AffinePermutation {
    let mut residues: Vec<i64> = (0..k as i64).collect();
    residues.shuffle(rng);
    let window = residues
        .into_iter()
        .map(|r| r + k as i64 * rng.gen_range(-max_step..=max_step))
        .collect();
    AffinePermutation::from_window(k, window).expect("distinct residues by construction")
}

/// A random element of the k-affine symmetric group proper (shift zero).
pub fn random_core_perm(rng: &mut StdRng, max_k: usize, max_step: i64) -> AffinePermutation {
    let tau = random_perm(rng, max_k, max_step);
    tau.add_constant(tau.shift())
}
