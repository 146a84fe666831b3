//! Admissible monomial orders.

use std::cmp::Ordering;

use crate::monomial::Monomial;

/// An admissible monomial order over `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Compare `c . u` first, then fall back to `tiebreak`.
    Weight { weights: Vec<u64>, tiebreak: Box<MonomialOrder> },
    /// Compare the variables before `split` with `left`; on a tie compare the
    /// remaining ones with `right`. Both sub-orders see their block renumbered
    /// from zero.
    Block { split: u32, left: Box<MonomialOrder>, right: Box<MonomialOrder> },
}

impl MonomialOrder {
    /// The cost order used for integer programming: `c . u`, ties by degrevlex.
    pub fn weighted(weights: Vec<u64>) -> Self {
        MonomialOrder::Weight { weights, tiebreak: Box::new(MonomialOrder::DegRevLex) }
    }

    /// An elimination order: the first `split` variables are compared
    /// lexicographically and dominate, the rest use `rest`.
    pub fn eliminate(split: u32, rest: MonomialOrder) -> Self {
        MonomialOrder::Block {
            split,
            left: Box::new(MonomialOrder::Lex),
            right: Box::new(rest),
        }
    }

    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.nvars(), v.nvars());
        match self {
            // fast path for the common case, avoids re-summing degrees
            MonomialOrder::DegRevLex => u
                .degree()
                .cmp(&v.degree())
                .then_with(|| revlex(u.raw(), v.raw())),
            _ => self.cmp_block(u.raw(), v.raw(), 0),
        }
    }

    /// A key whose lexicographic order agrees with `cmp` on monomials of
    /// one ring, for use in ordered collections.
    pub fn sort_key(&self, u: &Monomial) -> Vec<u128> {
        let mut key = Vec::with_capacity(u.nvars() as usize + 1);
        self.key_block(u.raw(), 0, u.nvars(), &mut key);
        key
    }

    fn key_block(&self, u: &[(u32, u64)], offset: u32, len: u32, key: &mut Vec<u128>) {
        let dense = |key: &mut Vec<u128>, flip: bool| {
            let start = key.len();
            key.resize(start + len as usize, if flip { u64::MAX as u128 } else { 0 });
            for &(x, k) in u {
                let slot = &mut key[start + (x - offset) as usize];
                *slot = if flip { (u64::MAX - k) as u128 } else { k as u128 };
            }
        };
        match self {
            MonomialOrder::Lex => dense(key, false),
            MonomialOrder::DegRevLex => {
                key.push(u.iter().map(|&(_, k)| k as u128).sum());
                let start = key.len();
                dense(key, true);
                key[start..].reverse();
            }
            MonomialOrder::Weight { weights, tiebreak } => {
                key.push(weight(weights, u, offset));
                tiebreak.key_block(u, offset, len, key);
            }
            MonomialOrder::Block { split, left, right } => {
                let bound = offset + split;
                let s = u.partition_point(|&(x, _)| x < bound);
                left.key_block(&u[..s], offset, *split, key);
                right.key_block(&u[s..], bound, len - split, key);
            }
        }
    }

    /// Compares two monomials restricted to a block of variables starting at
    /// `offset`; the slices hold only that block's exponents.
    fn cmp_block(&self, u: &[(u32, u64)], v: &[(u32, u64)], offset: u32) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(u, v),
            MonomialOrder::DegRevLex => {
                let du: u128 = u.iter().map(|&(_, k)| k as u128).sum();
                let dv: u128 = v.iter().map(|&(_, k)| k as u128).sum();
                du.cmp(&dv).then_with(|| revlex(u, v))
            }
            MonomialOrder::Weight { weights, tiebreak } => weight(weights, u, offset)
                .cmp(&weight(weights, v, offset))
                .then_with(|| tiebreak.cmp_block(u, v, offset)),
            MonomialOrder::Block { split, left, right } => {
                let bound = offset + split;
                let su = u.partition_point(|&(x, _)| x < bound);
                let sv = v.partition_point(|&(x, _)| x < bound);
                left.cmp_block(&u[..su], &v[..sv], offset)
                    .then_with(|| right.cmp_block(&u[su..], &v[sv..], bound))
            }
        }
    }
}

fn weight(weights: &[u64], u: &[(u32, u64)], offset: u32) -> u128 {
    u.iter().fold(0u128, |acc, &(x, k)| {
        let c = weights.get((x - offset) as usize).copied().unwrap_or(0) as u128;
        c.checked_mul(k as u128)
            .and_then(|t| acc.checked_add(t))
            .expect("weighted degree overflows u128")
    })
}

// The first differing variable decides; the larger exponent wins.
fn lex(u: &[(u32, u64)], v: &[(u32, u64)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (u.get(i), v.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(a, da)), Some(&(b, db))) => {
                if a < b {
                    return Ordering::Greater;
                } else if a > b {
                    return Ordering::Less;
                } else if da != db {
                    return da.cmp(&db);
                }
                i += 1;
                j += 1;
            }
        }
    }
}

// The last differing variable decides; the smaller exponent wins.
fn revlex(u: &[(u32, u64)], v: &[(u32, u64)]) -> Ordering {
    let (mut i, mut j) = (u.len(), v.len());
    loop {
        match (i.checked_sub(1).map(|k| u[k]), j.checked_sub(1).map(|k| v[k])) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some((a, da)), Some((b, db))) => {
                if a > b {
                    return Ordering::Less;
                } else if a < b {
                    return Ordering::Greater;
                } else if da != db {
                    return db.cmp(&da);
                }
                i -= 1;
                j -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u64]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // x^2y vs xz^2: equal degree, smaller z exponent wins
        assert_eq!(o.cmp(&m(&[2, 1, 0]), &m(&[1, 0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2, 3]), &m(&[1, 2, 3])), Ordering::Equal);
        // y^4 vs xzw^2 in x > y > z > w
        assert_eq!(o.cmp(&m(&[0, 4, 0, 0]), &m(&[1, 0, 1, 2])), Ordering::Greater);
        // xy^4 vs x^2zw^2: the w exponent decides
        assert_eq!(o.cmp(&m(&[1, 4, 0, 0]), &m(&[2, 0, 1, 2])), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 9])), Ordering::Greater);
    }

    #[test]
    fn weight_with_tiebreak() {
        // c = (1,2): c.x1^3 = 3 = c.x1x2, degrevlex decides
        let o = MonomialOrder::weighted(vec![1, 2]);
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[3, 0])), Ordering::Greater);
    }

    #[test]
    fn block_eliminates_leading_block() {
        let o = MonomialOrder::eliminate(1, MonomialOrder::DegRevLex);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2, 0]), &m(&[1, 1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    fn orders(n: usize) -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Lex,
            MonomialOrder::DegRevLex,
            MonomialOrder::weighted((0..n as u64).map(|i| i % 3).collect()),
            MonomialOrder::eliminate(2.min(n as u32), MonomialOrder::DegRevLex),
            MonomialOrder::Block {
                split: 1,
                left: Box::new(MonomialOrder::DegRevLex),
                right: Box::new(MonomialOrder::weighted(vec![0; n])),
            },
        ]
    }

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u64..=10, n).prop_map(|e| Monomial::from_exponents(&e).unwrap())
    }

    proptest! {
        #[test]
        fn admissible((u, v, w) in (1usize..=6).prop_flat_map(|n| (mono(n), mono(n), mono(n)))) {
            let n = u.nvars();
            let one = Monomial::one(n);
            for o in orders(n as usize) {
                let c = o.cmp(&u, &v);
                prop_assert_eq!(c == Ordering::Equal, u == v);
                prop_assert_eq!(o.cmp(&v, &u), c.reverse());
                prop_assert_eq!(o.cmp(&u.mul(&w).unwrap(), &v.mul(&w).unwrap()), c);
                if !u.is_one() {
                    prop_assert_eq!(o.cmp(&u, &one), Ordering::Greater);
                }
            }
        }

        #[test]
        fn transitive((u, v, w) in (1usize..=4).prop_flat_map(|n| (mono(n), mono(n), mono(n)))) {
            for o in orders(u.nvars() as usize) {
                if o.cmp(&u, &v) == Ordering::Greater && o.cmp(&v, &w) == Ordering::Greater {
                    prop_assert_eq!(o.cmp(&u, &w), Ordering::Greater);
                }
            }
        }

        #[test]
        fn sort_key_agrees((u, v) in (1usize..=6).prop_flat_map(|n| (mono(n), mono(n)))) {
            for o in orders(u.nvars() as usize) {
                prop_assert_eq!(o.sort_key(&u).cmp(&o.sort_key(&v)), o.cmp(&u, &v));
            }
        }
    }
}
