//! Seeded random instances for tests, benchmarks and the `bench` command.

use std::collections::HashSet;

use rand::Rng;

use crate::binomial::Binomial;
use crate::monomial::{Monomial, Var};
use crate::order::MonomialOrder;
use crate::toric::Matrix;

/// A monomial of total degree at most `max_deg`, spread over `support`.
fn spread<R: Rng + ?Sized>(rng: &mut R, nvars: u32, support: &[u32], deg: u64) -> Monomial {
    let mut exps = vec![0u64; nvars as usize];
    if !support.is_empty() {
        for _ in 0..deg {
            exps[support[rng.gen_range(0..support.len())] as usize] += 1;
        }
    }
    Monomial::from_exponents(&exps).expect("small exponents")
}

/// Uniform total degree in `0..=max_deg`, each unit on a uniform variable.
pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, nvars: u32, max_deg: u64) -> Monomial {
    let all: Vec<u32> = (0..nvars).collect();
    let deg = rng.gen_range(0..=max_deg);
    spread(rng, nvars, &all, deg)
}

/// Like [`random_monomial`] but each variable takes part with probability
/// `density`; at least one does when the degree is positive.
pub fn random_sparse_monomial<R: Rng + ?Sized>(rng: &mut R, nvars: u32, max_deg: u64, density: f64) -> Monomial {
    let mut support: Vec<u32> = (0..nvars).filter(|_| rng.gen_bool(density.clamp(0.0, 1.0))).collect();
    if support.is_empty() && nvars > 0 {
        support.push(rng.gen_range(0..nvars));
    }
    let deg = rng.gen_range(0..=max_deg);
    spread(rng, nvars, &support, deg)
}

/// `size` distinct sparse monomials, fewer if the space runs dry.
pub fn random_monomial_set<R: Rng + ?Sized>(
    rng: &mut R,
    nvars: u32,
    max_deg: u64,
    size: usize,
    density: f64,
) -> Vec<Monomial> {
    let mut seen = HashSet::with_capacity(size);
    let mut out = Vec::with_capacity(size);
    let mut misses = 0;
    while out.len() < size && misses < 50 * size + 100 {
        let m = random_sparse_monomial(rng, nvars, max_deg, density);
        if seen.insert(m.clone()) {
            out.push(m);
        } else {
            misses += 1;
        }
    }
    out
}

/// A binomial with two distinct random terms of degree at most `max_deg`.
pub fn random_binomial<R: Rng + ?Sized>(rng: &mut R, nvars: u32, max_deg: u64, ord: &MonomialOrder) -> Binomial {
    loop {
        let a = random_monomial(rng, nvars, max_deg);
        let b = random_monomial(rng, nvars, max_deg);
        if let Some(f) = Binomial::orient(a, b, ord) {
            return f;
        }
    }
}

pub fn random_binomial_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    nvars: u32,
    ngens: usize,
    max_deg: u64,
    ord: &MonomialOrder,
) -> Vec<Binomial> {
    (0..ngens).map(|_| random_binomial(rng, nvars, max_deg, ord)).collect()
}

/// A `rows x cols` matrix with entries in `0..=max_entry`. The first row is
/// strictly positive, which keeps every fiber `{x >= 0 : A x = b}` finite.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, max_entry: i64) -> Matrix {
    let data = (0..rows)
        .map(|i| {
            let low = if i == 0 { 1 } else { 0 };
            (0..cols).map(|_| rng.gen_range(low..=max_entry.max(1))).collect()
        })
        .collect();
    Matrix::from_rows(data, cols).expect("rectangular by construction")
}

/// A random multiple of `u` by a monomial of degree at most `extra`.
pub fn random_multiple<R: Rng + ?Sized>(rng: &mut R, u: &Monomial, extra: u64) -> Monomial {
    let n = u.nvars();
    let k = rng.gen_range(0..=extra);
    let mut w = u.clone();
    for _ in 0..k {
        w = w.mul_var(Var(rng.gen_range(0..n))).expect("small exponents");
    }
    w
}

/// A stored set and a query stream for divisor-search benchmarks: half the
/// queries are multiples of stored monomials, half are unrelated, all of
/// degree at most `max_deg`.
pub fn divisor_workload<R: Rng + ?Sized>(
    rng: &mut R,
    nvars: u32,
    max_deg: u64,
    size: usize,
    queries: usize,
    density: f64,
) -> (Vec<Monomial>, Vec<Monomial>) {
    let set = random_monomial_set(rng, nvars, max_deg, size, density);
    let queries = (0..queries)
        .map(|_| {
            if !set.is_empty() && rng.gen_bool(0.5) {
                let u = &set[rng.gen_range(0..set.len())];
                let room = max_deg.saturating_sub(u.degree());
                random_multiple(rng, u, room)
            } else {
                random_sparse_monomial(rng, nvars, max_deg, density)
            }
        })
        .collect();
    (set, queries)
}

/// Linear scan for a Janet divisor with precomputed nonmultiplicative sets.
/// Returns the index found and the number of elements examined.
pub fn naive_janet_scan(set: &[Monomial], nonmult: &[crate::monomial::VarSet], w: &Monomial) -> (Option<usize>, usize) {
    for (i, (u, nm)) in set.iter().zip(nonmult).enumerate() {
        if crate::janet::is_janet_divisor(u, nm, w) {
            return (Some(i), i + 1);
        }
    }
    (None, set.len())
}
