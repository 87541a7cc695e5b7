//! Seeded inputs shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rsfix::sample::{random_system, SampleConfig, SystemClass};
use rsfix::{Formula, ReactionSystem};

pub fn system(class: SystemClass, width: usize, seed: u64) -> ReactionSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_system(&mut rng, &SampleConfig::new(class, width))
}

/// A random 3-CNF with `m` clauses over `n` variables.
pub fn three_cnf(n: usize, m: usize, seed: u64) -> Formula {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clauses: Vec<Vec<i32>> = (0..m)
        .map(|_| {
            rand::seq::index::sample(&mut rng, n, 3.min(n))
                .into_iter()
                .map(|v| if rng.gen_bool(0.5) { v as i32 + 1 } else { -(v as i32 + 1) })
                .collect()
        })
        .collect();
    let refs: Vec<&[i32]> = clauses.iter().map(Vec::as_slice).collect();
    Formula::cnf(n, &refs).expect("literals in range")
}
