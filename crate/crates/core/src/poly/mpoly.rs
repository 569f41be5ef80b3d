use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::One;

use super::{format_terms, RatFn};
use crate::error::{Error, Result};
use crate::scalar::{Ground, Rational, Scalar};

/// Ordered variable names with optional grading weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vars {
    names: Vec<String>,
    weights: Option<Vec<u32>>,
}

impl Vars {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Vars> {
        Arc::new(Vars { names: names.into_iter().map(Into::into).collect(), weights: None })
    }

    /// Weights must be positive and even (cohomological degrees).
    pub fn weighted<S: Into<String>>(names: impl IntoIterator<Item = S>, weights: Vec<u32>) -> Result<Arc<Vars>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if weights.len() != names.len() {
            return Err(Error::DimensionMismatch { expected: names.len(), got: weights.len() });
        }
        if let Some(w) = weights.iter().find(|&&w| w == 0 || w % 2 == 1) {
            return Err(Error::Invalid(format!("weight {w} is not a positive even integer")));
        }
        Ok(Arc::new(Vars { names, weights: Some(weights) }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Sparse multivariate polynomial. Terms are keyed by exponent tuple and
/// kept in lexicographic order; zero coefficients are never stored.
#[derive(Clone)]
pub struct Poly<C> {
    vars: Arc<Vars>,
    terms: BTreeMap<Vec<u32>, C>,
}

pub type MPoly = Poly<Rational>;

impl<C: Scalar> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars) && self.terms == other.terms
    }
}

impl<C: Scalar> Poly<C> {
    pub fn zero(vars: &Arc<Vars>) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vars>, c: C) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn one(vars: &Arc<Vars>) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn monomial(vars: &Arc<Vars>, exps: Vec<u32>, c: C) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent tuple length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { vars: vars.clone(), terms }
    }

    pub fn var(vars: &Arc<Vars>, name: &str) -> Result<Self> {
        let i = vars.index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Ok(Self::monomial(vars, exps, C::one()))
    }

    pub fn from_terms(vars: &Arc<Vars>, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Vec<u32>, C> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// The constant value if the polynomial has no variable-bearing terms.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.names.clone(),
                right: other.vars.names.clone(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.clone() * c.clone())).collect(),
        }
    }

    /// Multiplies by the monomial `x^exps`.
    pub fn shift(&self, exps: &[u32]) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.iter().zip(exps).map(|(x, y)| x + y).collect(), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn diff(&self, name: &str) -> Result<Self> {
        let i = self.vars.index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c.clone() * C::from_i64(e[i] as i64));
        }
        Ok(out)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn weighted_degree_of(&self, exps: &[u32]) -> Option<u64> {
        let w = self.vars.weights()?;
        Some(exps.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum())
    }

    /// Common weighted degree of all terms, if weights exist and the polynomial is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degs = self.terms.keys().map(|e| self.weighted_degree_of(e));
        let first = degs.next()??;
        degs.all(|d| d == Some(first)).then_some(first)
    }

    /// Substitutes `values[i]` for the i-th variable. All values must share one variable set.
    pub fn substitute(&self, values: &[Poly<C>]) -> Result<Poly<C>> {
        if values.len() != self.vars.len() {
            return Err(Error::DimensionMismatch { expected: self.vars.len(), got: values.len() });
        }
        let target = match values.first() {
            Some(v) => v.vars.clone(),
            None => return Ok(self.clone()),
        };
        for v in values {
            if v.vars != target {
                return Err(Error::VariableMismatch {
                    left: target.names.clone(),
                    right: v.vars.names.clone(),
                });
            }
        }
        // Cache powers per variable.
        let mut powers: Vec<Vec<Poly<C>>> = vec![vec![Poly::one(&target)]; values.len()];
        let mut out = Poly::zero(&target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &values[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            for (e2, c2) in term.terms {
                out.add_term(e2, c2);
            }
        }
        Ok(out)
    }

    /// Rewrites the polynomial over a variable set that contains all of its variables.
    pub fn embed(&self, target: &Arc<Vars>) -> Result<Poly<C>> {
        let map: Vec<usize> = self
            .vars
            .names
            .iter()
            .map(|n| target.index(n).ok_or_else(|| Error::UnknownVariable(n.clone())))
            .collect::<Result<_>>()?;
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] = k;
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Term list for printing; for Laurent coefficients `q` becomes a trailing variable.
    fn display_terms(&self) -> Option<(Vec<String>, Vec<(Vec<i64>, Rational)>)> {
        let mut names = self.vars.names.clone();
        let mut terms = Vec::new();
        match C::GROUND {
            Ground::Q => {
                for (e, c) in &self.terms {
                    let c = c.to_ratfn().as_constant()?;
                    terms.push((e.iter().map(|&x| x as i64).collect::<Vec<_>>(), c));
                }
            }
            Ground::Lambda => {
                names.push("q".to_string());
                for (e, c) in &self.terms {
                    for (qe, qc) in c.to_ratfn().laurent_terms()? {
                        let mut ex: Vec<i64> = e.iter().map(|&x| x as i64).collect();
                        ex.push(qe);
                        terms.push((ex, qc));
                    }
                }
            }
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Some((names, terms))
    }
}

impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((names, terms)) = self.display_terms() {
            return f.write_str(&format_terms(&names, &terms));
        }
        // Non-Laurent coefficients: not re-parseable, display only.
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono = format_terms(&self.vars.names, &[(e.iter().map(|&x| x as i64).collect(), Rational::one())]);
                format!("({c})*{mono}")
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl<C: Scalar> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({self})", self.vars.names.join(","))
    }
}

impl<C: Scalar> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        self.checked_add(rhs).expect("polynomial variable sets differ")
    }
}

impl<C: Scalar> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self.checked_sub(rhs).expect("polynomial variable sets differ")
    }
}

impl<C: Scalar> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        self.checked_mul(rhs).expect("polynomial variable sets differ")
    }
}

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.scale(&-C::one())
    }
}

/// Moves the variable `q` of `p` into the coefficient field `Q(q)`.
pub fn promote_q(p: &MPoly, q: &str) -> Result<Poly<RatFn>> {
    let qi = p.vars.index(q).ok_or_else(|| Error::UnknownVariable(q.to_string()))?;
    let names: Vec<String> = p.vars.names.iter().enumerate().filter(|&(i, _)| i != qi).map(|(_, n)| n.clone()).collect();
    let vars = match p.vars.weights() {
        Some(w) => Vars::weighted(names, w.iter().enumerate().filter(|&(i, _)| i != qi).map(|(_, &w)| w).collect())?,
        None => Vars::new(names),
    };
    let mut out = Poly::zero(&vars);
    for (e, c) in &p.terms {
        let mut e2 = e.clone();
        let k = e2.remove(qi);
        out.add_term(e2, RatFn::laurent_monomial(c.clone(), k as i64));
    }
    Ok(out)
}

/// Inverse of [`promote_q`]: returns `(m, s)` with `p = q^{-s} · m`, `s` minimal.
/// Fails if any coefficient has a denominator other than a power of `q`.
pub fn demote_q(p: &Poly<RatFn>, q: &str) -> Result<(MPoly, u32)> {
    if p.vars.index(q).is_some() {
        return Err(Error::Invalid(format!("`{q}` is already a polynomial variable")));
    }
    let mut shift = 0usize;
    for c in p.terms.values() {
        shift = shift.max(c.laurent_shift().ok_or_else(|| Error::NonLaurent(c.to_string()))?);
    }
    let mut names = p.vars.names.clone();
    names.push(q.to_string());
    let vars = Vars::new(names);
    let mut out = MPoly::zero(&vars);
    for (e, c) in &p.terms {
        for (qe, qc) in c.laurent_terms().unwrap() {
            let mut e2 = e.clone();
            e2.push((qe + shift as i64) as u32);
            out.add_term(e2, qc);
        }
    }
    Ok((out, shift as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn xy() -> Arc<Vars> {
        Vars::new(["x", "y"])
    }

    fn p(s: &str, v: &Arc<Vars>) -> MPoly {
        parse_poly(s, v).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let v = Vars::new(["x"]);
        assert_eq!(&p("x+1", &v) * &p("x-1", &v), p("x^2-1", &v));
    }

    #[test]
    fn rational_scalar_path() {
        let v = Vars::new(["x1"]);
        let r = p("x1^5", &v).scale(&rat(1, 5));
        assert_eq!(r.coeff(&[5]), rat(1, 5));
        assert_eq!(r.to_string(), "1/5*x1^5");
    }

    #[test]
    fn cancellation_removes_terms() {
        let v = Vars::new(["x1", "x2"]);
        let s = &p("x1^2 - 2*x2", &v) + &p("2*x2", &v);
        assert_eq!(s, p("x1^2", &v));
        assert_eq!(s.terms().len(), 1);
    }

    #[test]
    fn mismatched_variables() {
        let a = p("x", &Vars::new(["x"]));
        let b = p("y", &Vars::new(["y"]));
        assert!(matches!(a.checked_add(&b), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn derivatives() {
        let v = Vars::new(["x", "q"]);
        let w = p("1/3*x^3 - q*x", &v);
        assert_eq!(w.diff("x").unwrap(), p("x^2 - q", &v));
        let v2 = Vars::new(["x1", "x2"]);
        let w2 = p("(x1^5 - 5*x1^3*x2 + 5*x1*x2^2)*1/5", &v2);
        assert_eq!(w2.diff("x2").unwrap(), p("-x1^3 + 2*x1*x2", &v2));
        assert!(p("7", &v).diff("x").unwrap().is_zero());
        assert_eq!(w.diff("z"), Err(Error::UnknownVariable("z".into())));
    }

    #[test]
    fn printing_descending_lex() {
        let v = Vars::new(["x1", "x2", "q"]);
        let a = p("q + x2^2 - 3*x1^2*x2 + x1^4", &v);
        assert_eq!(a.to_string(), "x1^4 - 3*x1^2*x2 + x2^2 + q");
    }

    #[test]
    fn promote_demote() {
        let v = Vars::new(["x", "q"]);
        let a = p("x^2*q^2 - 3*q + x", &v);
        let up = promote_q(&a, "q").unwrap();
        assert_eq!(up.vars().names(), &["x".to_string()]);
        let (down, s) = demote_q(&up, "q").unwrap();
        assert_eq!(s, 0);
        assert_eq!(down, a);
        let inv = up.scale(&RatFn::laurent_monomial(int(1), -1));
        let (down, s) = demote_q(&inv, "q").unwrap();
        assert_eq!((down, s), (a, 1));
        let bad = up.scale(&crate::scalar::Scalar::inv(&RatFn::from_poly(crate::poly::UPoly::from_coeffs(vec![int(1), int(1)]))).unwrap());
        assert!(matches!(demote_q(&bad, "q"), Err(Error::NonLaurent(_))));
    }

    #[test]
    fn weighted_degree() {
        let v = Vars::weighted(["x1", "x2", "q"], vec![2, 4, 8]).unwrap();
        let a = p("x1^4 - 3*x1^2*x2 + x2^2 + q", &v);
        assert_eq!(a.homogeneous_degree(), Some(8));
        assert_eq!(p("x1 + x2", &v).homogeneous_degree(), None);
        assert!(Vars::weighted(["x"], vec![3]).is_err());
    }

    fn arb_poly(v: Arc<Vars>) -> impl Strategy<Value = MPoly> {
        prop::collection::vec(((0u32..4, 0u32..4), -5i64..6, 1i64..4), 0..6).prop_map(move |ts| {
            MPoly::from_terms(&v, ts.into_iter().map(|((a, b), n, d)| (vec![a, b], rat(n, d))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(xy()), b in arb_poly(xy()), c in arb_poly(xy())) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn print_parse_roundtrip(a in arb_poly(xy())) {
            prop_assert_eq!(parse_poly(&a.to_string(), &xy()).unwrap(), a);
        }

        #[test]
        fn weighted_degree_additive(
            ea in (0u32..4, 0u32..4), eb in (0u32..4, 0u32..4),
            ca in (1i64..5, -4i64..5), cb in (1i64..5, -4i64..5),
        ) {
            // x^3 and y share weight 6, so these binomials are homogeneous
            let v = Vars::weighted(["x", "y"], vec![2, 6]).unwrap();
            let a = MPoly::from_terms(&v, [(vec![ea.0 + 3, ea.1], int(ca.0)), (vec![ea.0, ea.1 + 1], int(ca.1))]);
            let b = MPoly::from_terms(&v, [(vec![eb.0 + 3, eb.1], int(cb.0)), (vec![eb.0, eb.1 + 1], int(cb.1))]);
            let da = a.homogeneous_degree().unwrap();
            let db = b.homogeneous_degree().unwrap();
            prop_assert_eq!((&a * &b).homogeneous_degree(), Some(da + db));
        }
    }

    #[test]
    fn weighted_degree_of_homogeneous_products() {
        let v = Vars::weighted(["x", "y"], vec![2, 4]).unwrap();
        let a = p("x^2 + 3*y", &v);
        let b = p("x^3 - x*y", &v);
        assert_eq!((&a * &b).homogeneous_degree(), Some(a.homogeneous_degree().unwrap() + b.homogeneous_degree().unwrap()));
    }
}
