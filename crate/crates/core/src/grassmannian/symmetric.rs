//! Symmetric-function plumbing: partitions, Newton's identities, dual
//! Jacobi–Trudi determinants, and reduction of symmetric polynomials to
//! elementary symmetric ones.

use std::ops::Range;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{MPoly, Poly, Vars};
use crate::scalar::{Rational, Scalar};

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.0.len() <= rows && self.0.iter().all(|&p| p <= cols)
    }

    /// Complement inside the `rows × cols` box.
    pub fn complement(&self, rows: usize, cols: u32) -> Partition {
        let parts = (0..rows).rev().map(|i| cols - self.0.get(i).copied().unwrap_or(0)).collect();
        Partition::new(parts).expect("complement of a partition in a box")
    }

    pub fn rectangle(rows: usize, cols: u32) -> Partition {
        Partition::new(vec![cols; rows]).expect("rectangle")
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions in the `rows × cols` box, by size and then lexicographically.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn go(rows: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()).unwrap());
        if prefix.len() == rows {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            go(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

/// `x1..xk` with weights `|x_i| = 2i`.
pub fn elementary_vars(k: usize) -> Arc<Vars> {
    Vars::weighted((1..=k).map(|i| format!("x{i}")), (1..=k).map(|i| 2 * i as u32).collect()).expect("positive even weights")
}

/// `e_i` as a polynomial in `vars`, whose first `k` variables are `e_1..e_k`.
fn elementary(vars: &Arc<Vars>, k: usize, i: i64) -> MPoly {
    match i {
        0 => MPoly::one(vars),
        i if i < 0 || i as usize > k => MPoly::zero(vars),
        i => {
            let mut e = vec![0; vars.len()];
            e[i as usize - 1] = 1;
            MPoly::monomial(vars, e, Rational::from_integer(1.into()))
        }
    }
}

/// `p_m` in terms of `e_1..e_k` (the first `k` variables of `vars`), by Newton's identities.
pub fn power_sum_in_elementary(m: usize, vars: &Arc<Vars>, k: usize) -> MPoly {
    let mut p: Vec<MPoly> = vec![MPoly::zero(vars)];
    for j in 1..=m {
        // (-1)^{j-1} j e_j
        let sign = if j % 2 == 1 { 1 } else { -1 };
        let mut acc = elementary(vars, k, j as i64).scale(&Rational::from_integer((sign * j as i64).into()));
        for i in 1..j {
            let e = elementary(vars, k, i as i64);
            if e.is_zero() {
                continue;
            }
            let t = &e * &p[j - i];
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        p.push(acc);
    }
    p.pop().unwrap()
}

/// Determinant by cofactor expansion along the first row, skipping zeros.
pub fn poly_det<C: Scalar>(m: &[Vec<Poly<C>>], vars: &Arc<Vars>) -> Poly<C> {
    let n = m.len();
    if n == 0 {
        return Poly::one(vars);
    }
    let cols: Vec<usize> = (0..n).collect();
    det_rec(m, 0, &cols, vars)
}

fn det_rec<C: Scalar>(m: &[Vec<Poly<C>>], row: usize, cols: &[usize], vars: &Arc<Vars>) -> Poly<C> {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = Poly::zero(vars);
    for (pos, &c) in cols.iter().enumerate() {
        let a = &m[row][c];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(m, row + 1, &rest, vars);
        let t = a * &minor;
        acc = if pos % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// `s_λ = det(e_{λ'_i − i + j})`, in the variables `x_i = e_i` (first `k` variables of `vars`).
pub fn schur_polynomial(lam: &Partition, vars: &Arc<Vars>, k: usize) -> MPoly {
    let conj = lam.conjugate();
    let l = conj.len();
    let m: Vec<Vec<MPoly>> = (0..l)
        .map(|i| (0..l).map(|j| elementary(vars, k, conj.parts()[i] as i64 - i as i64 + j as i64)).collect())
        .collect();
    poly_det(&m, vars)
}

/// `e_i` of the variables in `group`.
pub fn elementary_of_group(vars: &Arc<Vars>, group: Range<usize>, i: usize) -> MPoly {
    let idx: Vec<usize> = group.collect();
    let mut out = MPoly::zero(vars);
    let one = Rational::from_integer(1.into());
    let mut choose = Vec::new();
    fn go(idx: &[usize], start: usize, left: usize, choose: &mut Vec<usize>, vars: &Arc<Vars>, one: &Rational, out: &mut MPoly) {
        if left == 0 {
            let mut e = vec![0; vars.len()];
            for &c in choose.iter() {
                e[c] = 1;
            }
            *out = &*out + &MPoly::monomial(vars, e, one.clone());
            return;
        }
        for s in start..idx.len() {
            choose.push(idx[s]);
            go(idx, s + 1, left - 1, choose, vars, one, out);
            choose.pop();
        }
    }
    go(&idx, 0, i, &mut choose, vars, &one, &mut out);
    out
}

/// Writes a polynomial symmetric in the variables of `group` as
/// `Σ_d e^d · c_d`, where `e^d = Π e_i^{d_i}` over the group and the `c_d`
/// do not involve the group. Repeatedly subtracts the product matching the
/// lex-leading group exponent.
pub fn symmetric_reduce(p: &MPoly, group: Range<usize>) -> Result<Vec<(Vec<u32>, MPoly)>> {
    let vars = p.vars().clone();
    let g = group.len();
    let es: Vec<MPoly> = (1..=g).map(|i| elementary_of_group(&vars, group.clone(), i)).collect();
    let mut rest = p.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let lead: Vec<u32> = rest.terms().keys().map(|e| e[group.clone()].to_vec()).max().unwrap();
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("polynomial is not symmetric in the group".into()));
        }
        let coeff = MPoly::from_terms(
            &vars,
            rest.terms().iter().filter(|(e, _)| e[group.clone()] == lead[..]).map(|(e, c)| {
                let mut e2 = e.clone();
                for i in group.clone() {
                    e2[i] = 0;
                }
                (e2, c.clone())
            }),
        );
        let d: Vec<u32> = (0..g).map(|i| lead[i] - lead.get(i + 1).copied().unwrap_or(0)).collect();
        let mut prod = coeff.clone();
        for (i, &di) in d.iter().enumerate() {
            if di > 0 {
                prod = &prod * &es[i].pow(di);
            }
        }
        rest = &rest - &prod;
        out.push((d, coeff));
    }
    Ok(out)
}
