//! Toric ideals of integer matrices and integer programming over them.
//!
//! For `A` in `Z^{m x n}` the toric ideal is generated by the binomials
//! `x^{u+} - x^{u-}` with `A u = 0`. A lattice basis of the kernel only gives
//! the lattice ideal; saturating by the product of all variables turns it
//! into the toric ideal. Reducing `x^{x0}` modulo a Groebner basis for the
//! cost order then lands on an optimal point of `{x >= 0 : A x = A x0}`.

use crate::binomial::Binomial;
use crate::completion::binomial_janet_basis;
use crate::error::{Error, Result};
use crate::groebner::autoreduce;
use crate::janet::JanetTree;
use crate::monomial::{Monomial, Var};
use crate::order::MonomialOrder;

/// A dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<i64>>, ncols: usize) -> Result<Self> {
        if let Some(r) = rows.iter().position(|r| r.len() != ncols) {
            return Err(Error::InvalidInstance(format!("row {} has {} entries, expected {ncols}", r + 1, rows[r].len())));
        }
        Ok(Matrix { nrows: rows.len(), ncols, data: rows.concat() })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        Matrix::from_rows(rows, n).unwrap()
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.ncols + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    /// `A x` in exact arithmetic.
    pub fn apply(&self, x: &[i128]) -> Vec<i128> {
        assert_eq!(x.len(), self.ncols);
        (0..self.nrows)
            .map(|i| self.row(i).iter().zip(x).map(|(&a, &v)| a as i128 * v).sum())
            .collect()
    }

    pub fn apply_u64(&self, x: &[u64]) -> Vec<i128> {
        self.apply(&x.iter().map(|&v| v as i128).collect::<Vec<_>>())
    }
}

/// An integer vector `u = u+ - u-`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeVector {
    pub u: Vec<i64>,
}

impl LatticeVector {
    pub fn plus(&self) -> Vec<u64> {
        self.u.iter().map(|&k| if k > 0 { k as u64 } else { 0 }).collect()
    }

    pub fn minus(&self) -> Vec<u64> {
        self.u.iter().map(|&k| if k < 0 { k.unsigned_abs() } else { 0 }).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().all(|&k| k == 0)
    }
}

/// A basis of the lattice `{u in Z^n : A u = 0}`.
///
/// Column operations bring `A` to column echelon form while the same
/// operations act on the identity; the transformed identity columns over the
/// zero columns of `A` span the kernel.
pub fn kernel_lattice(a: &Matrix) -> Result<Vec<LatticeVector>> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut cols: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..m).map(|i| a.get(i, j)).chain((0..n).map(|k| (k == j) as i64)).collect())
        .collect();
    let mut pivot = 0;
    for r in 0..m {
        while let Some(best) = (pivot..n).filter(|&j| cols[j][r] != 0).min_by_key(|&j| cols[j][r].unsigned_abs()) {
            cols.swap(pivot, best);
            let mut clean = true;
            for j in pivot + 1..n {
                let q = cols[j][r] / cols[pivot][r];
                if q != 0 {
                    let (head, tail) = cols.split_at_mut(j);
                    axpy(&mut tail[0], -q, &head[pivot])?;
                }
                clean &= cols[j][r] == 0;
            }
            if clean {
                pivot += 1;
                break;
            }
        }
    }
    let mut basis: Vec<Vec<i64>> = cols.drain(pivot..).map(|c| c[m..].to_vec()).collect();
    size_reduce(&mut basis)?;
    Ok(basis.into_iter().map(|u| LatticeVector { u }).collect())
}

// y += k * x
fn axpy(y: &mut [i64], k: i64, x: &[i64]) -> Result<()> {
    for (a, &b) in y.iter_mut().zip(x) {
        *a = b.checked_mul(k).and_then(|t| a.checked_add(t)).ok_or(Error::Overflow)?;
    }
    Ok(())
}

fn norm1(u: &[i64]) -> u128 {
    u.iter().map(|&k| k.unsigned_abs() as u128).sum()
}

/// Greedy pairwise reduction; keeps the lattice but shrinks the entries,
/// which keeps the generator degrees down.
fn size_reduce(basis: &mut [Vec<i64>]) -> Result<()> {
    let mut improved = true;
    while improved {
        improved = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                for k in [1i64, -1] {
                    let mut cand = basis[i].clone();
                    axpy(&mut cand, k, &basis[j])?;
                    if norm1(&cand) < norm1(&basis[i]) {
                        basis[i] = cand;
                        improved = true;
                    }
                }
            }
        }
    }
    Ok(())
}

/// `x^{u+} - x^{u-}`, oriented by `ord`.
pub fn vector_to_binomial(u: &LatticeVector, ord: &MonomialOrder) -> Result<Binomial> {
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    let plus = Monomial::from_exponents(&u.plus())?;
    let minus = Monomial::from_exponents(&u.minus())?;
    Ok(Binomial::orient(plus, minus, ord).expect("disjoint supports of a nonzero vector"))
}

/// Generators of `I : (x_1 ... x_n)^inf`, found by eliminating `t` from
/// `I + (t x_1 ... x_n - 1)`. The result is the reduced Groebner basis.
pub fn saturate(gens: &[Binomial], ord: &MonomialOrder) -> Result<Vec<Binomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let n = first.nvars();
    let elim = MonomialOrder::eliminate(1, ord.clone());
    let all_vars = Monomial::from_pairs(n + 1, (0..=n).map(|v| (Var(v), 1)))?;
    let mut lifted: Vec<Binomial> = gens.iter().map(|g| g.shift(1).reorient(&elim)).collect();
    lifted.push(Binomial::orient(all_vars, Monomial::one(n + 1), &elim).unwrap());
    let basis = autoreduce(&binomial_janet_basis(&lifted, &elim)?, &elim)?;
    let mut out: Vec<Binomial> = basis
        .into_iter()
        .filter_map(|b| {
            let (lead, tail) = b.into_parts();
            Binomial::orient(lead.unshift(1)?, tail.unshift(1)?, ord)
        })
        .collect();
    crate::binomial::sort_descending(&mut out, ord);
    Ok(out)
}

/// Generators of the toric ideal of `a`.
pub fn toric_generators(a: &Matrix, ord: &MonomialOrder) -> Result<Vec<Binomial>> {
    let lattice = kernel_lattice(a)?
        .iter()
        .map(|u| vector_to_binomial(u, ord))
        .collect::<Result<Vec<_>>>()?;
    saturate(&lattice, ord)
}

/// Whether `A` maps both exponent vectors of `b` to the same point.
pub fn is_pi_homogeneous(a: &Matrix, b: &Binomial) -> bool {
    a.apply_u64(&b.lead().to_exponents()) == a.apply_u64(&b.tail().to_exponents())
}

/// `min c.x` subject to `A x = b`, `x >= 0` integral, with a known feasible
/// point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricInstance {
    pub a: Matrix,
    pub b: Vec<i64>,
    pub c: Vec<u64>,
    pub x0: Vec<u64>,
}

impl ToricInstance {
    pub fn new(a: Matrix, b: Vec<i64>, c: Vec<u64>, x0: Vec<u64>) -> Result<Self> {
        let n = a.ncols();
        if b.len() != a.nrows() {
            return Err(Error::InvalidInstance(format!("b has {} entries for {} rows", b.len(), a.nrows())));
        }
        if c.len() != n || x0.len() != n {
            return Err(Error::InvalidInstance(format!("c and x0 need {n} entries")));
        }
        if c.iter().all(|&k| k == 0) {
            return Err(Error::ZeroCost);
        }
        let ax0 = a.apply_u64(&x0);
        if ax0.iter().zip(&b).any(|(&l, &r)| l != r as i128) {
            return Err(Error::InvalidInstance("A x0 differs from b".into()));
        }
        Ok(ToricInstance { a, b, c, x0 })
    }

    pub fn cost(&self, x: &[u64]) -> u128 {
        self.c.iter().zip(x).map(|(&c, &v)| c as u128 * v as u128).sum()
    }
}

/// Solves the instance by normal form reduction of `x^{x0}`.
///
/// `gens`, when given, must generate the toric ideal of `A`; otherwise it is
/// computed. Among several optima the one smallest under the cost order
/// with degrevlex tiebreak is returned.
pub fn ip_solve(inst: &ToricInstance, gens: Option<&[Binomial]>) -> Result<Vec<u64>> {
    let ord = MonomialOrder::weighted(inst.c.clone());
    let gens = match gens {
        Some(g) => g.iter().map(|b| b.clone().reorient(&ord)).collect(),
        None => toric_generators(&inst.a, &ord)?,
    };
    if gens.is_empty() {
        return Ok(inst.x0.clone());
    }
    let basis = binomial_janet_basis(&gens, &ord)?;
    let x = normal_form_monomial(&Monomial::from_exponents(&inst.x0)?, &basis)?;
    Ok(x.to_exponents())
}

/// Reduces a monomial modulo a Janet basis; every step lowers it in the
/// order the basis was computed for.
pub fn normal_form_monomial(w: &Monomial, basis: &[Binomial]) -> Result<Monomial> {
    let Some(first) = basis.first() else {
        return Ok(w.clone());
    };
    let tree = JanetTree::build(first.nvars(), basis.iter().map(|b| (b.lead().clone(), b)))?;
    let mut w = w.clone();
    while let Some((lead, g)) = tree.j_divisor(&w) {
        w = w.div(lead)?.mul(g.tail())?;
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect(), rows[0].len()).unwrap()
    }

    fn m(e: &[u64]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    fn b(a: &[u64], c: &[u64]) -> Binomial {
        Binomial::orient(m(a), m(c), &MonomialOrder::DegRevLex).unwrap()
    }

    // rank by fraction-free elimination over i128
    fn rank(a: &Matrix) -> usize {
        let mut rows: Vec<Vec<i128>> = (0..a.nrows()).map(|i| a.row(i).iter().map(|&k| k as i128).collect()).collect();
        let mut r = 0;
        for c in 0..a.ncols() {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, p);
            for i in r + 1..rows.len() {
                let (f, g) = (rows[i][c], rows[r][c]);
                for k in 0..a.ncols() {
                    rows[i][k] = rows[i][k] * g - rows[r][k] * f;
                }
            }
            r += 1;
        }
        r
    }

    fn check_kernel(a: &Matrix) -> Vec<LatticeVector> {
        let ker = kernel_lattice(a).unwrap();
        assert_eq!(ker.len(), a.ncols() - rank(a));
        for u in &ker {
            let x: Vec<i128> = u.u.iter().map(|&k| k as i128).collect();
            assert!(a.apply(&x).iter().all(|&v| v == 0), "{:?}", u.u);
        }
        ker
    }

    #[test]
    fn kernel_examples() {
        check_kernel(&mat(&[&[1, 1, 1]]));
        assert!(check_kernel(&Matrix::identity(3)).is_empty());
        let ker = check_kernel(&mat(&[&[1, 2]]));
        assert!(ker[0].u == vec![2, -1] || ker[0].u == vec![-2, 1]);
        check_kernel(&mat(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]));
        check_kernel(&mat(&[&[2, 4, 6], &[1, 2, 3]]));
    }

    #[test]
    fn vector_examples() {
        let ord = MonomialOrder::DegRevLex;
        let v = |u: &[i64]| vector_to_binomial(&LatticeVector { u: u.to_vec() }, &ord);
        assert_eq!(v(&[1, -1, 0]).unwrap(), b(&[1, 0, 0], &[0, 1, 0]));
        assert_eq!(v(&[2, -1]).unwrap(), b(&[2, 0], &[0, 1]));
        assert_eq!(v(&[3, -2]).unwrap(), b(&[3, 0], &[0, 2]));
        assert_eq!(v(&[0, 0]), Err(Error::ZeroVector));
    }

    // the same elimination, but through Buchberger
    fn oracle_saturate(gens: &[Binomial], ord: &MonomialOrder) -> Vec<Binomial> {
        let n = gens[0].nvars();
        let elim = MonomialOrder::eliminate(1, ord.clone());
        let mut lifted: Vec<Binomial> = gens.iter().map(|g| g.shift(1).reorient(&elim)).collect();
        lifted.push(Binomial::orient(m(&vec![1; n as usize + 1]), Monomial::one(n + 1), &elim).unwrap());
        let gb = crate::groebner::reduced_groebner_basis(&lifted, &elim).unwrap();
        gb.into_iter()
            .filter_map(|g| {
                let (l, t) = g.into_parts();
                Binomial::orient(l.unshift(1)?, t.unshift(1)?, ord)
            })
            .collect()
    }

    #[test]
    fn saturation_examples() {
        let ord = MonomialOrder::DegRevLex;
        // (x-y)(x+y): neither factor meets a monomial, so nothing is added
        let square = [b(&[2, 0], &[0, 2])];
        let sat = saturate(&square, &ord).unwrap();
        assert_eq!(sat, oracle_saturate(&square, &ord));
        assert_eq!(sat, vec![b(&[2, 0], &[0, 2])]);
        let cusp = [b(&[3, 0], &[0, 2])];
        assert!(ideal_equal(&saturate(&cusp, &ord).unwrap(), &cusp, &ord).unwrap());
        assert!(saturate(&[], &ord).unwrap().is_empty());

        // the lattice basis ideal of the twisted cubic misses x*w - y*z
        let lattice = [b(&[1, 0, 1, 0], &[0, 2, 0, 0]), b(&[0, 1, 0, 1], &[0, 0, 2, 0])];
        let sat = saturate(&lattice, &ord).unwrap();
        assert_eq!(sat, oracle_saturate(&lattice, &ord));
        assert_eq!(sat.len(), 3);
        assert!(sat.contains(&b(&[1, 0, 0, 1], &[0, 1, 1, 0])));
    }

    #[test]
    fn toric_examples() {
        let ord = MonomialOrder::DegRevLex;
        assert_eq!(toric_generators(&mat(&[&[1, 1]]), &ord).unwrap(), vec![b(&[1, 0], &[0, 1])]);
        assert!(toric_generators(&Matrix::identity(3), &ord).unwrap().is_empty());
        assert_eq!(toric_generators(&mat(&[&[2, 3]]), &ord).unwrap(), vec![b(&[3, 0], &[0, 2])]);
        let a = mat(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let gens = toric_generators(&a, &ord).unwrap();
        // the twisted cubic
        assert_eq!(gens.len(), 3);
        assert!(gens.iter().all(|g| is_pi_homogeneous(&a, g)));
    }

    #[test]
    fn ip_examples() {
        let inst = ToricInstance::new(mat(&[&[1, 1]]), vec![5], vec![1, 2], vec![0, 5]).unwrap();
        assert_eq!(ip_solve(&inst, None).unwrap(), vec![5, 0]);
        let inst = ToricInstance::new(mat(&[&[1, 2]]), vec![4], vec![1, 1], vec![4, 0]).unwrap();
        let x = ip_solve(&inst, None).unwrap();
        assert_eq!(x, vec![0, 2]);
        assert_eq!(inst.cost(&x), 2);
        let inst = ToricInstance::new(mat(&[&[1, 2]]), vec![4], vec![1, 1], vec![0, 2]).unwrap();
        assert_eq!(ip_solve(&inst, None).unwrap(), vec![0, 2]);
        assert_eq!(
            ToricInstance::new(mat(&[&[1, 2]]), vec![4], vec![0, 0], vec![0, 2]),
            Err(Error::ZeroCost)
        );
        assert!(ToricInstance::new(mat(&[&[1, 2]]), vec![5], vec![1, 1], vec![0, 2]).is_err());
    }
}
