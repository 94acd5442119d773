//! Deterministic inputs for the benchmarks.

use modrep_core::FpMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_matrix(p: u32, rows: usize, cols: usize, seed: u64) -> FpMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
    FpMatrix::from_vec(p, rows, cols, entries).expect("entries are reduced")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_reproducible() {
        assert_eq!(random_matrix(3, 5, 7, 1), random_matrix(3, 5, 7, 1));
        assert_ne!(random_matrix(3, 5, 7, 1), random_matrix(3, 5, 7, 2));
    }
}
