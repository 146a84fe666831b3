//! Sparse monomials and variable sets.
//!
//! Variables are numbered from 0 in decreasing order of precedence, so
//! `Var(0)` is the highest variable `x_1` of the ring `K[x_1, ..., x_n]`.

use std::fmt;

use crate::error::{Error, Result};

/// Position of a variable in the fixed order `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

impl Var {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0 + 1)
    }
}

/// A monomial `x^u` stored as the sorted list of its nonzero exponents.
///
/// No stored exponent is zero, so two monomials are equal exactly when
/// their exponent vectors are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    nvars: u32,
    exps: Vec<(u32, u64)>,
    degree: u64,
}

impl Monomial {
    /// The empty monomial `1`.
    pub fn one(nvars: u32) -> Self {
        Monomial { nvars, exps: Vec::new(), degree: 0 }
    }

    /// `x_v^k`.
    pub fn var_pow(nvars: u32, v: Var, k: u64) -> Result<Self> {
        Self::from_pairs(nvars, [(v, k)])
    }

    /// Builds a monomial from `(variable, degree)` pairs in any order.
    /// Repeated variables are multiplied together, zero degrees are dropped.
    pub fn from_pairs(nvars: u32, pairs: impl IntoIterator<Item = (Var, u64)>) -> Result<Self> {
        let mut exps: Vec<(u32, u64)> = Vec::new();
        for (v, k) in pairs {
            if v.0 >= nvars {
                return Err(Error::VarOutOfRange { index: v.0, nvars });
            }
            if k != 0 {
                exps.push((v.0, k));
            }
        }
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(u32, u64)> = Vec::with_capacity(exps.len());
        for (v, k) in exps {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 = last.1.checked_add(k).ok_or(Error::Overflow)?,
                _ => merged.push((v, k)),
            }
        }
        Self::from_sorted(nvars, merged)
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_exponents(exponents: &[u64]) -> Result<Self> {
        let nvars = exponents.len() as u32;
        let exps = exponents
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, &k)| (i as u32, k))
            .collect();
        Self::from_sorted(nvars, exps)
    }

    fn from_sorted(nvars: u32, exps: Vec<(u32, u64)>) -> Result<Self> {
        let mut degree: u64 = 0;
        for &(_, k) in &exps {
            degree = degree.checked_add(k).ok_or(Error::Overflow)?;
        }
        Ok(Monomial { nvars, exps, degree })
    }

    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// `deg_v(self)`; zero for variables that do not occur.
    pub fn deg(&self, v: Var) -> u64 {
        self.deg_at(v.0)
    }

    #[inline]
    pub(crate) fn deg_at(&self, v: u32) -> u64 {
        // Monomials are short; a linear scan beats binary search here.
        for &(w, k) in &self.exps {
            if w == v {
                return k;
            }
            if w > v {
                break;
            }
        }
        0
    }

    /// Nonzero `(variable, degree)` pairs in increasing variable order.
    pub fn support(&self) -> impl Iterator<Item = (Var, u64)> + '_ {
        self.exps.iter().map(|&(v, k)| (Var(v), k))
    }

    pub(crate) fn raw(&self) -> &[(u32, u64)] {
        &self.exps
    }

    /// Last variable with a nonzero exponent.
    pub fn last_var(&self) -> Option<Var> {
        self.exps.last().map(|&(v, _)| Var(v))
    }

    pub fn to_exponents(&self) -> Vec<u64> {
        let mut out = vec![0; self.nvars as usize];
        for &(v, k) in &self.exps {
            out[v as usize] = k;
        }
        out
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.nvars, other.nvars))
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (va, ka) = a[i];
            let (vb, kb) = b[j];
            if va < vb {
                out.push((va, ka));
                i += 1;
            } else if vb < va {
                out.push((vb, kb));
                j += 1;
            } else {
                out.push((va, ka.checked_add(kb).ok_or(Error::Overflow)?));
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        let degree = self.degree.checked_add(other.degree).ok_or(Error::Overflow)?;
        Ok(Monomial { nvars: self.nvars, exps: out, degree })
    }

    /// `self * x_v`.
    pub fn mul_var(&self, v: Var) -> Result<Monomial> {
        if v.0 >= self.nvars {
            return Err(Error::VarOutOfRange { index: v.0, nvars: self.nvars });
        }
        let mut exps = self.exps.clone();
        match exps.binary_search_by_key(&v.0, |&(w, _)| w) {
            Ok(pos) => exps[pos].1 = exps[pos].1.checked_add(1).ok_or(Error::Overflow)?,
            Err(pos) => exps.insert(pos, (v.0, 1)),
        }
        let degree = self.degree.checked_add(1).ok_or(Error::Overflow)?;
        Ok(Monomial { nvars: self.nvars, exps, degree })
    }

    /// `self / divisor`, failing with [`Error::NotDivisible`] unless `divisor | self`.
    pub fn div(&self, divisor: &Monomial) -> Result<Monomial> {
        self.check_ambient(divisor)?;
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        let d = &divisor.exps;
        for &(v, k) in &self.exps {
            if j < d.len() && d[j].0 < v {
                return Err(Error::NotDivisible);
            }
            if j < d.len() && d[j].0 == v {
                let kd = d[j].1;
                j += 1;
                match k.cmp(&kd) {
                    std::cmp::Ordering::Less => return Err(Error::NotDivisible),
                    std::cmp::Ordering::Equal => {}
                    std::cmp::Ordering::Greater => out.push((v, k - kd)),
                }
            } else {
                out.push((v, k));
            }
        }
        if j < d.len() {
            return Err(Error::NotDivisible);
        }
        Ok(Monomial { nvars: self.nvars, exps: out, degree: self.degree - divisor.degree })
    }

    /// True iff `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars, other.nvars);
        if self.degree > other.degree || self.exps.len() > other.exps.len() {
            return false;
        }
        let b = &other.exps;
        let mut j = 0;
        for &(v, k) in &self.exps {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < k {
                return false;
            }
            j += 1;
        }
        true
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (va, ka) = a[i];
            let (vb, kb) = b[j];
            if va < vb {
                out.push((va, ka));
                i += 1;
            } else if vb < va {
                out.push((vb, kb));
                j += 1;
            } else {
                out.push((va, ka.max(kb)));
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        // max of two u64 exponents never exceeds the larger total degree sum
        let degree = out.iter().map(|&(_, k)| k).sum();
        Monomial { nvars: self.nvars, exps: out, degree }
    }

    /// True iff the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Re-embeds the monomial into a ring with `extra` new leading variables.
    pub fn shift(&self, extra: u32) -> Monomial {
        Monomial {
            nvars: self.nvars + extra,
            exps: self.exps.iter().map(|&(v, k)| (v + extra, k)).collect(),
            degree: self.degree,
        }
    }

    /// Inverse of [`Monomial::shift`]; `None` if a dropped variable occurs.
    pub fn unshift(&self, extra: u32) -> Option<Monomial> {
        if self.exps.first().is_some_and(|&(v, _)| v < extra) {
            return None;
        }
        Some(Monomial {
            nvars: self.nvars - extra,
            exps: self.exps.iter().map(|&(v, k)| (v - extra, k)).collect(),
            degree: self.degree,
        })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (i, &(v, k)) in self.exps.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", Var(v))?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

/// A set of variables, stored as a bitset.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VarSet {
    words: Vec<u64>,
}

impl VarSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: Var) {
        let (w, b) = (v.index() / 64, v.index() % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn contains(&self, v: Var) -> bool {
        let (w, b) = (v.index() / 64, v.index() % 64);
        self.words.get(w).is_some_and(|x| x & (1 << b) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = Var> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| w & (1u64 << b) != 0).map(move |b| Var((i * 64 + b) as u32))
        })
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &VarSet) -> VarSet {
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0))
            .collect();
        VarSet { words }.trimmed()
    }

    pub fn intersection(&self, other: &VarSet) -> VarSet {
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(&a, &b)| a & b)
            .collect();
        VarSet { words }.trimmed()
    }

    // trailing zero words are dropped so that derived equality is set equality
    fn trimmed(mut self) -> Self {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
        self
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.difference(other).is_empty()
    }
}

impl FromIterator<Var> for VarSet {
    fn from_iter<I: IntoIterator<Item = Var>>(iter: I) -> Self {
        let mut s = VarSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
