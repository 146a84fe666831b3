//! Shared fixtures for the criterion benches.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toric_janet::text::parse_binomial;
use toric_janet::{Binomial, MonomialOrder, VarNames};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generators of one of the ideals under `data/`, with degrevlex.
pub fn ideal(name: &str) -> Vec<Binomial> {
    let path = format!("{}/../../data/{name}.ideal", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    let mut lines = text.lines();
    let vars = lines.next().and_then(|l| l.strip_prefix("vars:")).expect("vars line");
    let names = VarNames::new(vars.split_whitespace()).expect("valid names");
    lines
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_binomial(l, &names, &MonomialOrder::DegRevLex).expect("valid binomial"))
        .collect()
}
