//! Direct implementation of the Janet partition, used as the reference
//! for the tree-based search.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Var, VarSet};

/// Janet nonmultiplicative variables `NM_J(u, U)` for every `u` in `set`,
/// returned in input order.
///
/// `x_1` is multiplicative for `u` iff `deg_1(u)` is maximal over the set;
/// `x_i` is multiplicative iff `deg_i(u)` is maximal among the elements that
/// agree with `u` in `x_1, ..., x_{i-1}`.
pub fn nm_vars(set: &[Monomial]) -> Result<Vec<VarSet>> {
    check_distinct(set)?;
    let Some(first) = set.first() else {
        return Ok(Vec::new());
    };
    let n = first.nvars();
    Ok(set
        .iter()
        .map(|u| {
            let mut nm = VarSet::new();
            for i in 0..n {
                let max = set
                    .iter()
                    .filter(|g| (0..i).all(|j| g.deg(Var(j)) == u.deg(Var(j))))
                    .map(|g| g.deg(Var(i)))
                    .max()
                    .unwrap_or(0);
                if u.deg(Var(i)) < max {
                    nm.insert(Var(i));
                }
            }
            nm
        })
        .collect())
}

/// True iff `u | w` and `w / u` involves only variables outside `nonmult`.
pub fn is_janet_divisor(u: &Monomial, nonmult: &VarSet, w: &Monomial) -> bool {
    u.divides(w) && nonmult.iter().all(|v| w.deg(v) == u.deg(v))
}

/// Scans the whole set for the Janet divisor of `w` and returns its index.
/// Fails if two elements qualify, which cannot happen for a valid set.
pub fn j_divisor_naive(set: &[Monomial], w: &Monomial) -> Result<Option<usize>> {
    let nm = nm_vars(set)?;
    let mut found = None;
    for (i, (u, nmu)) in set.iter().zip(&nm).enumerate() {
        if is_janet_divisor(u, nmu, w) {
            if found.is_some() {
                return Err(Error::AmbiguousJanetDivisor);
            }
            found = Some(i);
        }
    }
    Ok(found)
}

fn check_distinct(set: &[Monomial]) -> Result<()> {
    let mut seen = HashSet::with_capacity(set.len());
    if set.iter().all(|u| seen.insert(u)) {
        Ok(())
    } else {
        Err(Error::DuplicateMonomial)
    }
}
