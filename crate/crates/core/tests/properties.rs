mod common;

use proptest::prelude::*;
use rand::Rng;

use toric_janet::janet::{j_divisor_naive, nm_vars, JanetTree};
use toric_janet::sample::{random_binomial_ideal, random_matrix};
use toric_janet::toric::is_pi_homogeneous;
use toric_janet::{
    autoreduce, binomial_janet_basis, buchberger, is_janet_basis, kernel_lattice, nf_ordinary, toric_generators,
    Binomial, Matrix, Monomial, MonomialOrder,
};

fn order_strategy(n: u32) -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::DegRevLex),
        Just(MonomialOrder::Lex),
        proptest::collection::vec(0u64..4, n as usize).prop_map(MonomialOrder::weighted),
    ]
}

fn ideal_strategy() -> impl Strategy<Value = (Vec<Binomial>, MonomialOrder)> {
    (1u32..=3, 1usize..=3, any::<u64>())
        .prop_flat_map(|(n, k, seed)| (Just((n, k, seed)), order_strategy(n)))
        .prop_map(|((n, k, seed), ord)| {
            let mut rng = common::rng(seed);
            (random_binomial_ideal(&mut rng, n, k, 4, &ord), ord)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn janet_basis_is_groebner((gens, ord) in ideal_strategy()) {
        let basis = binomial_janet_basis(&gens, &ord).unwrap();
        prop_assert!(is_janet_basis(&basis, &ord).unwrap());
        let gb = autoreduce(&buchberger(&gens, &ord).unwrap(), &ord).unwrap();
        for g in &basis {
            prop_assert!(nf_ordinary(g, &gb, &ord).unwrap().is_none());
        }
        for g in gens.iter().chain(&gb) {
            prop_assert!(nf_ordinary(g, &basis, &ord).unwrap().is_none());
        }
        prop_assert_eq!(autoreduce(&basis, &ord).unwrap(), gb);
    }

    #[test]
    fn toric_bases_are_pi_homogeneous(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(1..=2);
        let a = random_matrix(&mut rng, m, n, 3);
        let ord = MonomialOrder::DegRevLex;
        let gens = toric_generators(&a, &ord).unwrap();
        prop_assert!(gens.iter().all(|g| is_pi_homogeneous(&a, g)));
        if !gens.is_empty() {
            let basis = binomial_janet_basis(&gens, &ord).unwrap();
            prop_assert!(basis.iter().all(|g| is_pi_homogeneous(&a, g)));
        }
    }

    #[test]
    fn kernel_is_exact(rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 1..=3)) {
        let a = Matrix::from_rows(rows.clone(), 4).unwrap();
        let ker = kernel_lattice(&a).unwrap();
        for u in &ker {
            let x: Vec<i128> = u.u.iter().map(|&k| k as i128).collect();
            prop_assert!(a.apply(&x).iter().all(|&v| v == 0));
        }
        prop_assert_eq!(ker.len(), 4 - rank(&rows));
        // kernel vectors of a saturated lattice have coprime entries
        for u in &ker {
            prop_assert_eq!(u.u.iter().fold(0i64, |g, &k| gcd(g, k.abs())), 1);
        }
    }

    #[test]
    fn ip_reduction_never_raises_cost(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(2..=4);
        let a = random_matrix(&mut rng, 1, n, 3);
        let c: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=5)).collect();
        let ord = MonomialOrder::weighted(c.clone());
        let gens = toric_generators(&a, &ord).unwrap();
        prop_assume!(!gens.is_empty());
        let basis = binomial_janet_basis(&gens, &ord).unwrap();
        let tree = JanetTree::build(n as u32, basis.iter().map(|b| (b.lead().clone(), b))).unwrap();
        let x0: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
        let cost = |w: &Monomial| -> u64 { w.to_exponents().iter().zip(&c).map(|(e, k)| e * k).sum() };
        let mut w = Monomial::from_exponents(&x0).unwrap();
        while let Some((lead, g)) = tree.j_divisor(&w) {
            let next = w.div(lead).unwrap().mul(g.tail()).unwrap();
            prop_assert!(cost(&next) <= cost(&w));
            prop_assert_eq!(ord.cmp(&next, &w), std::cmp::Ordering::Less);
            w = next;
        }
    }

    #[test]
    fn tree_mutation_tracks_naive_partition(
        ops in proptest::collection::vec((any::<bool>(), proptest::collection::vec(0u64..=4, 6)), 1..80),
        queries in proptest::collection::vec(proptest::collection::vec(0u64..=6, 6), 20),
    ) {
        let mut tree: JanetTree<Monomial> = JanetTree::new(6);
        let mut set: Vec<Monomial> = Vec::new();
        for (add, e) in ops {
            let u = Monomial::from_exponents(&e).unwrap();
            if add && !set.contains(&u) {
                tree.insert(u.clone(), u.clone()).unwrap();
                set.push(u);
            } else if !add && set.contains(&u) {
                prop_assert_eq!(tree.remove(&u).unwrap(), u.clone());
                set.retain(|x| *x != u);
            }
        }
        prop_assert_eq!(tree.check_invariants(), Ok(()));
        let nm = nm_vars(&set).unwrap();
        for (u, nmu) in set.iter().zip(&nm) {
            let got = tree.nonmultiplicative(u);
            prop_assert_eq!(got.as_ref(), Some(nmu));
        }
        for q in queries {
            let q = Monomial::from_exponents(&q).unwrap();
            let naive = j_divisor_naive(&set, &q).unwrap().map(|i| &set[i]);
            prop_assert_eq!(tree.j_divisor(&q).map(|(m, _)| m), naive);
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn rank(rows: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&k| k as i128).collect()).collect();
    let cols = rows[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            let (f, g) = (rows[i][c], rows[r][c]);
            for k in 0..cols {
                rows[i][k] = rows[i][k] * g - rows[r][k] * f;
            }
        }
        r += 1;
    }
    r
}
