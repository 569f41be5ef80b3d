//! Buchberger's algorithm over a field `K'` (`Q` or `Q(q)`), normal forms,
//! and staircase (standard monomial) bases of zero-dimensional quotients.
//!
//! The monomial order is graded reverse lexicographic on the polynomial
//! variables; when the ground is `Λ`, `q` lives in the coefficient field.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Poly, Vars};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
}

pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct Mono(Vec<u32>);

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Polynomial as a term list sorted by descending grevlex; monic when stored in a basis.
type Terms<C> = Vec<(Vec<u32>, C)>;

fn to_terms<C: Scalar>(p: &Poly<C>) -> Terms<C> {
    let mut t: Terms<C> = p.terms().iter().map(|(e, c)| (e.clone(), c.clone())).collect();
    t.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
    t
}

fn make_monic<C: Scalar>(t: &mut Terms<C>) {
    if let Some((_, lc)) = t.first() {
        let inv = lc.inv().expect("nonzero leading coefficient");
        for (_, c) in t.iter_mut() {
            *c = c.clone() * inv.clone();
        }
    }
}

/// Full reduction of `p` modulo the monic polynomials `basis`.
fn reduce<C: Scalar>(p: Terms<C>, basis: &[Terms<C>]) -> Terms<C> {
    let mut work: BTreeMap<Mono, C> = p.into_iter().map(|(e, c)| (Mono(e), c)).collect();
    let mut rem = Vec::new();
    while let Some((m, c)) = work.pop_last() {
        match basis.iter().find(|g| divides(&g[0].0, &m.0)) {
            Some(g) => {
                let shift: Vec<u32> = m.0.iter().zip(&g[0].0).map(|(a, b)| a - b).collect();
                for (e, gc) in g.iter().skip(1) {
                    let key = Mono(e.iter().zip(&shift).map(|(a, b)| a + b).collect());
                    let delta = -(c.clone() * gc.clone());
                    match work.get_mut(&key) {
                        Some(v) => {
                            let s = v.clone() + delta;
                            if s.is_zero() {
                                work.remove(&key);
                            } else {
                                *v = s;
                            }
                        }
                        None => {
                            work.insert(key, delta);
                        }
                    }
                }
            }
            None => rem.push((m.0, c)),
        }
    }
    rem
}

fn s_polynomial<C: Scalar>(f: &Terms<C>, g: &Terms<C>) -> Terms<C> {
    let l = lcm(&f[0].0, &g[0].0);
    let mut acc: BTreeMap<Mono, C> = BTreeMap::new();
    let mut push = |t: &Terms<C>, sign: bool| {
        let shift: Vec<u32> = l.iter().zip(&t[0].0).map(|(a, b)| a - b).collect();
        for (e, c) in t.iter().skip(1) {
            let key = Mono(e.iter().zip(&shift).map(|(a, b)| a + b).collect());
            let c = if sign { c.clone() } else { -c.clone() };
            let s = match acc.remove(&key) {
                Some(v) => v + c,
                None => c,
            };
            if !s.is_zero() {
                acc.insert(key, s);
            }
        }
    };
    push(f, true);
    push(g, false);
    acc.into_iter().rev().map(|(m, c)| (m.0, c)).collect()
}

/// Reduced Gröbner basis of an ideal in `K'[x_1..x_k]`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<C> {
    vars: Arc<Vars>,
    order: MonomialOrder,
    basis: Vec<Terms<C>>,
    reduced: bool,
}

impl<C: Scalar> GroebnerBasis<C> {
    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn generators(&self) -> Vec<Poly<C>> {
        self.basis.iter().map(|t| Poly::from_terms(&self.vars, t.iter().cloned())).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Vec<u32>> {
        self.basis.iter().map(|t| t[0].0.clone()).collect()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0][0].0.iter().all(|&e| e == 0)
    }

    /// Unique remainder of `p`: no term is divisible by a leading monomial.
    pub fn normal_form(&self, p: &Poly<C>) -> Result<Poly<C>> {
        if p.vars() != &self.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.names().to_vec(),
                right: p.vars().names().to_vec(),
            });
        }
        let r = reduce(to_terms(p), &self.basis);
        Ok(Poly::from_terms(&self.vars, r))
    }

    /// Normal form of a single monomial `x^exps`.
    pub fn normal_form_monomial(&self, exps: &[u32]) -> Vec<(Vec<u32>, C)> {
        reduce(vec![(exps.to_vec(), C::one())], &self.basis)
    }

    /// Checks Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                if !reduce(s_polynomial(&self.basis[i], &self.basis[j]), &self.basis).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn buchberger<C: Scalar>(generators: &[Poly<C>], order: MonomialOrder) -> Result<GroebnerBasis<C>> {
    let vars = generators
        .first()
        .ok_or_else(|| Error::Invalid("empty generator list".into()))?
        .vars()
        .clone();
    for g in generators {
        if g.vars() != &vars {
            return Err(Error::VariableMismatch { left: vars.names().to_vec(), right: g.vars().names().to_vec() });
        }
    }

    let mut basis: Vec<Terms<C>> = Vec::new();
    for g in generators {
        let mut t = reduce(to_terms(g), &basis);
        if t.is_empty() {
            continue;
        }
        make_monic(&mut t);
        basis.push(t);
    }
    if let Some(unit) = basis.iter().find(|t| t[0].0.iter().all(|&e| e == 0)) {
        let one = vec![(unit[0].0.clone(), C::one())];
        return Ok(GroebnerBasis { vars, order, basis: vec![one], reduced: true });
    }

    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    while !pairs.is_empty() {
        // Normal selection: smallest lcm first, ties by index for determinism.
        let &(i, j) = pairs
            .iter()
            .min_by(|a, b| {
                let la = lcm(&basis[a.0][0].0, &basis[a.1][0].0);
                let lb = lcm(&basis[b.0][0].0, &basis[b.1][0].0);
                grevlex_cmp(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pairs.remove(&(i, j));
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if coprime(li, lj) {
            continue;
        }
        let l = lcm(li, lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k][0].0, &l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let mut r = reduce(s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        if r[0].0.iter().all(|&e| e == 0) {
            return Ok(GroebnerBasis { vars, order, basis: vec![r], reduced: true });
        }
        let n = basis.len();
        basis.push(r);
        for k in 0..n {
            pairs.insert((k, n));
        }
    }

    // Minimalize, then interreduce tails.
    let mut keep: Vec<Terms<C>> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(o, h)| {
            o != idx && divides(&h[0].0, &g[0].0) && (h[0].0 != g[0].0 || o < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<Terms<C>> = keep.iter().enumerate().filter(|&(o, _)| o != idx).map(|(_, g)| g.clone()).collect();
        let head = keep[idx][0].clone();
        let mut t = vec![head];
        t.extend(reduce(keep[idx][1..].to_vec(), &others));
        reduced.push(t);
    }
    reduced.sort_by(|a, b| grevlex_cmp(&a[0].0, &b[0].0));
    Ok(GroebnerBasis { vars, order, basis: reduced, reduced: true })
}

/// Standard monomials of a zero-dimensional quotient, ascending in grevlex (so `1` first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl Staircase {
    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }

    /// Every divisor of a standard monomial is standard.
    pub fn is_divisor_closed(&self) -> bool {
        self.monomials.iter().all(|m| {
            (0..m.len()).all(|i| {
                m[i] == 0 || {
                    let mut d = m.clone();
                    d[i] -= 1;
                    self.index.contains_key(&d)
                }
            })
        })
    }
}

pub fn staircase_basis<C: Scalar>(gb: &GroebnerBasis<C>) -> Result<Staircase> {
    let lts = gb.leading_monomials();
    let n = gb.vars.len();
    let mut bounds = Vec::with_capacity(n);
    for i in 0..n {
        let pure = lts
            .iter()
            .filter(|m| m.iter().enumerate().all(|(j, &e)| j == i || e == 0))
            .map(|m| m[i])
            .min();
        bounds.push(pure.ok_or_else(|| Error::InfiniteDimensional(gb.vars.names()[i].clone()))?);
    }
    let mut monomials = Vec::new();
    if bounds.iter().all(|&b| b > 0) {
        let mut cur = vec![0u32; n];
        'outer: loop {
            if !lts.iter().any(|l| divides(l, &cur)) {
                monomials.push(cur.clone());
            }
            for i in 0..n {
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    continue 'outer;
                }
                cur[i] = 0;
            }
            break;
        }
    }
    monomials.sort_by(|a, b| grevlex_cmp(a, b));
    let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    Ok(Staircase { monomials, index })
}
