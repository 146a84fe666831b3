//! Buchberger's algorithm for binomial ideals.
//!
//! Independent of the Janet machinery so it can serve as a reference for it.

use crate::binomial::{sort_descending, Binomial};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
}

impl CriticalPair {
    fn new(a: usize, b: usize, basis: &[Binomial]) -> Self {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        CriticalPair { i, j, lcm: basis[i].lead().lcm(basis[j].lead()) }
    }
}

/// The S-polynomial of two binomials, `None` when it cancels.
pub fn spoly(f: &Binomial, g: &Binomial, ord: &MonomialOrder) -> Result<Option<Binomial>> {
    let l = f.lead().lcm(g.lead());
    let a = l.div(f.lead())?.mul(f.tail())?;
    let b = l.div(g.lead())?.mul(g.tail())?;
    Ok(Binomial::orient(a, b, ord))
}

/// Full normal form by ordinary division. Divisors are tried in order of
/// decreasing leading monomial.
pub fn nf_ordinary(h: &Binomial, basis: &[Binomial], ord: &MonomialOrder) -> Result<Option<Binomial>> {
    let mut sorted = basis.to_vec();
    sort_descending(&mut sorted, ord);
    nf_sorted(h.clone(), &sorted, ord)
}

fn nf_sorted(mut h: Binomial, sorted: &[Binomial], ord: &MonomialOrder) -> Result<Option<Binomial>> {
    loop {
        if let Some(g) = sorted.iter().find(|g| g.lead().divides(h.lead())) {
            match h.reduce_lead(g, ord)? {
                Some(r) => h = r,
                None => return Ok(None),
            }
        } else if let Some(g) = sorted.iter().find(|g| g.lead().divides(h.tail())) {
            match h.reduce_tail(g, ord)? {
                Some(r) => h = r,
                None => return Ok(None),
            }
        } else {
            return Ok(Some(h));
        }
    }
}

struct Work<'o> {
    ord: &'o MonomialOrder,
    all: Vec<Binomial>,
    active: Vec<bool>,
    pairs: Vec<CriticalPair>,
}

impl Work<'_> {
    /// Gebauer-Moeller update with the new element `all[h]`.
    fn update(&mut self, h: usize) {
        let lh = self.all[h].lead().clone();
        let candidates: Vec<CriticalPair> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| CriticalPair::new(g, h, &self.all))
            .collect();
        let mut kept: Vec<CriticalPair> = Vec::new();
        for (k, p) in candidates.iter().enumerate() {
            let other = if p.i == h { p.j } else { p.i };
            let coprime = lh.is_coprime(self.all[other].lead());
            let dominated = candidates[k + 1..].iter().chain(&kept).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p.clone());
            }
        }
        kept.retain(|p| {
            let other = if p.i == h { p.j } else { p.i };
            !lh.is_coprime(self.all[other].lead())
        });
        let all = &self.all;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && all[p.i].lead().lcm(&lh) != p.lcm
                && all[p.j].lead().lcm(&lh) != p.lcm)
        });
        self.pairs.extend(kept);
        for g in 0..h {
            if self.active[g] && lh.divides(self.all[g].lead()) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn add(&mut self, b: Binomial) {
        self.all.push(b);
        self.active.push(false);
        self.update(self.all.len() - 1);
    }

    /// Normal strategy: least lcm degree, then least lcm under the order.
    fn next_pair(&mut self) -> Option<CriticalPair> {
        let ord = self.ord;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.lcm
                .degree()
                .cmp(&q.lcm.degree())
                .then_with(|| ord.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn basis(&self) -> Vec<Binomial> {
        let mut sorted: Vec<Binomial> =
            self.all.iter().zip(&self.active).filter(|(_, &a)| a).map(|(b, _)| b.clone()).collect();
        sort_descending(&mut sorted, self.ord);
        sorted
    }
}

/// A Groebner basis of the ideal generated by `gens`, not necessarily reduced.
pub fn buchberger(gens: &[Binomial], ord: &MonomialOrder) -> Result<Vec<Binomial>> {
    let nvars = gens.first().ok_or(Error::EmptyInput)?.nvars();
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::AmbientMismatch(nvars, g.nvars()));
    }
    let mut work = Work { ord, all: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for g in gens {
        let g = g.clone().reorient(ord);
        if let Some(h) = nf_sorted(g, &work.basis(), ord)? {
            work.add(h);
        }
    }
    while let Some(pair) = work.next_pair() {
        let Some(s) = spoly(&work.all[pair.i], &work.all[pair.j], ord)? else {
            continue;
        };
        if let Some(h) = nf_sorted(s, &work.basis(), ord)? {
            work.add(h);
        }
    }
    Ok(work.basis())
}

/// Turns a Groebner basis into the reduced one: minimal leading monomials
/// and fully reduced tails, sorted by decreasing leading monomial.
pub fn autoreduce(basis: &[Binomial], ord: &MonomialOrder) -> Result<Vec<Binomial>> {
    let mut sorted: Vec<Binomial> = basis.iter().map(|b| b.clone().reorient(ord)).collect();
    // ascending, so an element can only be made redundant by an earlier one
    sorted.sort_by(|a, b| ord.cmp(a.lead(), b.lead()).then_with(|| ord.cmp(a.tail(), b.tail())));
    let mut minimal: Vec<Binomial> = Vec::new();
    for g in sorted {
        if !minimal.iter().any(|m| m.lead().divides(g.lead())) {
            minimal.push(g);
        }
    }
    sort_descending(&mut minimal, ord);
    let mut reduced = Vec::with_capacity(minimal.len());
    for g in &minimal {
        let mut h = g.clone();
        while let Some(d) = minimal.iter().find(|d| d.lead().divides(h.tail())) {
            h = h.reduce_tail(d, ord)?.expect("tail stays below the lead");
        }
        reduced.push(h);
    }
    Ok(reduced)
}

/// The reduced Groebner basis of the ideal generated by `gens`.
pub fn reduced_groebner_basis(gens: &[Binomial], ord: &MonomialOrder) -> Result<Vec<Binomial>> {
    autoreduce(&buchberger(gens, ord)?, ord)
}

/// Whether two generating sets define the same ideal.
pub fn ideal_equal(a: &[Binomial], b: &[Binomial], ord: &MonomialOrder) -> Result<bool> {
    Ok(reduced_groebner_basis(a, ord)? == reduced_groebner_basis(b, ord)?)
}

/// Whether every S-polynomial of `basis` reduces to zero modulo it.
pub fn is_groebner_basis(basis: &[Binomial], ord: &MonomialOrder) -> Result<bool> {
    let mut sorted: Vec<Binomial> = basis.iter().map(|b| b.clone().reorient(ord)).collect();
    sort_descending(&mut sorted, ord);
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            if let Some(s) = spoly(&sorted[i], &sorted[j], ord)? {
                if nf_sorted(s, &sorted, ord)?.is_some() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u64]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    fn b(a: &[u64], c: &[u64]) -> Binomial {
        Binomial::orient(m(a), m(c), &MonomialOrder::DegRevLex).unwrap()
    }

    const DRL: MonomialOrder = MonomialOrder::DegRevLex;

    #[test]
    fn spoly_examples() {
        let f = b(&[2, 0], &[0, 1]);
        assert_eq!(spoly(&f, &f, &DRL).unwrap(), None);
        let g = b(&[0, 2], &[1, 0]);
        assert_eq!(spoly(&f, &g, &DRL).unwrap(), Some(b(&[3, 0], &[0, 3])));

        let (p, q) = (b(&[1, 0], &[0, 0]), b(&[0, 1], &[0, 0]));
        let s = spoly(&p, &q, &DRL).unwrap().unwrap();
        assert_eq!(s, b(&[1, 0], &[0, 1]));
        assert_eq!(nf_ordinary(&s, &[p, q], &DRL).unwrap(), None);
    }

    #[test]
    fn nf_examples() {
        let g = b(&[2, 0], &[0, 2]);
        assert_eq!(nf_ordinary(&g, std::slice::from_ref(&g), &DRL).unwrap(), None);
        let h = b(&[1, 0], &[0, 1]);
        assert_eq!(nf_ordinary(&h, &[g], &DRL).unwrap(), Some(h));
    }

    fn small_generators() -> Vec<Binomial> {
        vec![b(&[7, 0, 0, 0], &[0, 2, 1, 0]), b(&[4, 0, 0, 1], &[0, 3, 0, 0]), b(&[3, 1, 0, 0], &[0, 0, 1, 1])]
    }

    fn small_reduced() -> Vec<Binomial> {
        vec![
            b(&[7, 0, 0, 0], &[0, 2, 1, 0]),
            b(&[4, 0, 0, 1], &[0, 3, 0, 0]),
            b(&[3, 1, 0, 0], &[0, 0, 1, 1]),
            b(&[0, 4, 0, 0], &[1, 0, 1, 2]),
        ]
    }

    #[test]
    fn small_example() {
        let gb = buchberger(&small_generators(), &DRL).unwrap();
        assert!(is_groebner_basis(&gb, &DRL).unwrap());
        let mut expected = small_reduced();
        sort_descending(&mut expected, &DRL);
        assert_eq!(autoreduce(&gb, &DRL).unwrap(), expected);
        assert_eq!(autoreduce(&expected, &DRL).unwrap(), expected);
        let x4y = b(&[4, 1, 0, 0], &[1, 0, 1, 1]);
        assert_eq!(nf_ordinary(&x4y, &expected, &DRL).unwrap(), None);
        assert!(ideal_equal(&small_generators(), &small_reduced(), &DRL).unwrap());
    }

    #[test]
    fn trivial_cases() {
        let f = b(&[1, 0, 0], &[0, 1, 0]);
        assert_eq!(buchberger(std::slice::from_ref(&f), &DRL).unwrap(), vec![f.clone()]);
        assert!(!ideal_equal(&[f], &[b(&[1, 0, 0], &[0, 0, 1])], &DRL).unwrap());
        assert_eq!(buchberger(&[], &DRL), Err(Error::EmptyInput));
    }
}
