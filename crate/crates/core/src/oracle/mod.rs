//! Brute-force cross-checks and random test data.

mod random;
mod universe;

pub use random::{
    corpus, random_isometry, random_maximal_chain, random_minimal_factorization, random_reflection,
    random_vector, rng, sample_interval,
};
pub use universe::{check_join, check_meet, curated_universe, is_normal_form_bowtie, FiniteUniverse};
