//! Binomials `x^u - x^v` with unit coefficients.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Var};
use crate::order::MonomialOrder;

/// `lead - tail` with `lead > tail` under the order it was oriented by.
///
/// A tail equal to [`Monomial::one`] represents `x^u - 1`. The zero
/// polynomial is never a `Binomial`; operations that can cancel return
/// `Option<Binomial>` with `None` standing for zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    lead: Monomial,
    tail: Monomial,
}

impl Binomial {
    /// Orders the two monomials so the larger one leads; `None` if they coincide.
    pub fn orient(a: Monomial, b: Monomial, ord: &MonomialOrder) -> Option<Binomial> {
        match ord.cmp(&a, &b) {
            Ordering::Greater => Some(Binomial { lead: a, tail: b }),
            Ordering::Less => Some(Binomial { lead: b, tail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> &Monomial {
        &self.tail
    }

    pub fn nvars(&self) -> u32 {
        self.lead.nvars()
    }

    pub fn into_parts(self) -> (Monomial, Monomial) {
        (self.lead, self.tail)
    }

    /// `m * self`. Admissibility keeps the orientation.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<Binomial> {
        Ok(Binomial { lead: self.lead.mul(m)?, tail: self.tail.mul(m)? })
    }

    /// The prolongation `self * x_v`.
    pub fn mul_var(&self, v: Var) -> Result<Binomial> {
        Ok(Binomial { lead: self.lead.mul_var(v)?, tail: self.tail.mul_var(v)? })
    }

    /// Re-orients under another order.
    pub fn reorient(self, ord: &MonomialOrder) -> Binomial {
        Binomial::orient(self.lead, self.tail, ord).expect("binomial terms are distinct")
    }

    /// Replaces the term `t` of `self` by `(t / lm(g)) * tail(g)`, i.e. computes
    /// `self - (t / lm(g)) * g` up to sign, and re-orients.
    pub fn reduce_step(&self, g: &Binomial, t: &Monomial, ord: &MonomialOrder) -> Result<Option<Binomial>> {
        if *t == self.lead {
            self.reduce_lead(g, ord)
        } else if *t == self.tail {
            self.reduce_tail(g, ord)
        } else {
            Err(Error::NotATerm)
        }
    }

    pub fn reduce_lead(&self, g: &Binomial, ord: &MonomialOrder) -> Result<Option<Binomial>> {
        let q = self.lead.div(&g.lead)?;
        let replaced = q.mul(&g.tail)?;
        Ok(Binomial::orient(replaced, self.tail.clone(), ord))
    }

    pub fn reduce_tail(&self, g: &Binomial, ord: &MonomialOrder) -> Result<Option<Binomial>> {
        let q = self.tail.div(&g.lead)?;
        let replaced = q.mul(&g.tail)?;
        // replaced < tail < lead, but orient anyway in case g is not oriented under `ord`
        Ok(Binomial::orient(self.lead.clone(), replaced, ord))
    }

    pub fn shift(&self, extra: u32) -> Binomial {
        Binomial { lead: self.lead.shift(extra), tail: self.tail.shift(extra) }
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.tail)
    }
}

/// Sorts binomials by decreasing leading monomial.
pub fn sort_descending(basis: &mut [Binomial], ord: &MonomialOrder) {
    basis.sort_by(|a, b| ord.cmp(b.lead(), a.lead()).then_with(|| ord.cmp(b.tail(), a.tail())));
}
