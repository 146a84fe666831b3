#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_janet::sample::random_binomial_ideal;
use toric_janet::text::parse_binomial;
use toric_janet::{Binomial, MonomialOrder, VarNames};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn parse_all(names: &VarNames, ord: &MonomialOrder, lines: &[&str]) -> Vec<Binomial> {
    lines.iter().map(|l| parse_binomial(l, names, ord).unwrap()).collect()
}

pub fn sorted(mut v: Vec<Binomial>, ord: &MonomialOrder) -> Vec<Binomial> {
    toric_janet::sort_descending(&mut v, ord);
    v
}

/// Random binomial ideals: up to 4 variables and generators, degree at most 5.
pub fn random_corpus(seed: u64, count: usize) -> Vec<(Vec<Binomial>, MonomialOrder)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            use rand::Rng;
            let n = rng.gen_range(1..=4);
            let k = rng.gen_range(1..=4);
            let ord = if i % 4 == 3 { MonomialOrder::Lex } else { MonomialOrder::DegRevLex };
            (random_binomial_ideal(&mut rng, n, k, 5, &ord), ord)
        })
        .collect()
}
