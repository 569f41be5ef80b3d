//! Finite-dimensional commutative algebras with a chosen basis.
//!
//! An algebra is either presented by an ideal (basis = staircase, products
//! by normal forms) or by an explicit structure-constant table. In both
//! cases the full table `b_i · b_j = Σ_k c_ij^k b_k` is materialized at
//! construction, so multiplication is a table lookup.
//!
//! Elements are plain coordinate vectors in the algebra's basis.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, staircase_basis, GroebnerBasis, MonomialOrder};
use crate::linalg::Matrix;
use crate::poly::{Poly, Vars};
use crate::scalar::{Ground, Scalar};

/// Default dimension cap for structure-constant validation.
pub const DEFAULT_TABLE_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct QuotientAlgebra<S> {
    vars: Arc<Vars>,
    basis: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    table: Vec<Vec<S>>,
    identity: Vec<S>,
    ideal: Option<GroebnerBasis<S>>,
}

fn unit_vec<S: Scalar>(dim: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[i] = S::one();
    v
}

pub fn add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale<S: Scalar>(c: &S, a: &[S]) -> Vec<S> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn is_zero_vec<S: Scalar>(a: &[S]) -> bool {
    a.iter().all(|x| x.is_zero())
}

impl<S: Scalar> QuotientAlgebra<S> {
    /// `K'[x]/I` with the staircase basis of a reduced grevlex Gröbner basis of `I`.
    pub fn from_ideal(generators: &[Poly<S>]) -> Result<Self> {
        let gb = buchberger(generators, MonomialOrder::GrevLex)?;
        Self::from_groebner(gb)
    }

    pub fn from_groebner(gb: GroebnerBasis<S>) -> Result<Self> {
        let stairs = staircase_basis(&gb)?;
        if stairs.is_empty() {
            return Err(Error::ZeroQuotient);
        }
        let dim = stairs.len();
        let basis = stairs.monomials().to_vec();
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let prod: Vec<u32> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
                let mut coords = vec![S::zero(); dim];
                for (e, c) in gb.normal_form_monomial(&prod) {
                    let k = stairs.position(&e).expect("normal form lies in the staircase");
                    coords[k] = c;
                }
                table[j * dim + i] = coords.clone();
                table[i * dim + j] = coords;
            }
        }
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(QuotientAlgebra {
            vars: gb.vars().clone(),
            basis,
            index,
            table,
            // The staircase is sorted ascending, so the empty monomial comes first.
            identity: unit_vec(dim, 0),
            ideal: Some(gb),
        })
    }

    /// Algebra given by `table[i][j]` = coordinates of `b_i · b_j`.
    ///
    /// Basis elements are labelled by monomials in `vars` (`labels[i]` is an
    /// exponent vector). Commutativity and associativity are checked, and
    /// the identity is solved for.
    pub fn from_table(vars: Arc<Vars>, labels: Vec<Vec<u32>>, table: Vec<Vec<Vec<S>>>, cap: usize) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::ZeroQuotient);
        }
        if dim > cap {
            return Err(Error::TooLarge { dim, cap });
        }
        if table.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: table.len() });
        }
        for row in &table {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            for v in row {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
                }
            }
        }
        for l in &labels {
            if l.len() != vars.len() {
                return Err(Error::DimensionMismatch { expected: vars.len(), got: l.len() });
            }
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate basis label at position {i}")));
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if table[i][j] != table[j][i] {
                    return Err(Error::NotCommutative(i, j));
                }
            }
        }
        let flat: Vec<Vec<S>> = table.into_iter().flatten().collect();
        let mut alg = QuotientAlgebra { vars, basis: labels, index, table: flat, identity: Vec::new(), ideal: None };

        for i in 0..dim {
            for j in i..dim {
                let ij = alg.table[i * dim + j].clone();
                for k in 0..dim {
                    // (b_i b_j) b_k against b_i (b_j b_k)
                    let left = alg.mul_by_basis(&ij, k);
                    let jk = &alg.table[j * dim + k];
                    let right = alg.mul_by_basis(jk, i);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }

        // Σ_i e_i c_ij^k = δ_jk for all j, k.
        let mut rows = Vec::with_capacity(dim * dim);
        let mut rhs = Vec::with_capacity(dim * dim);
        for j in 0..dim {
            for k in 0..dim {
                rows.push((0..dim).map(|i| alg.table[i * dim + j][k].clone()).collect());
                rhs.push(if j == k { S::one() } else { S::zero() });
            }
        }
        let m = Matrix::from_rows(rows);
        let e = m.solve(&rhs).ok_or(Error::MissingIdentity)?;
        if m.mul_vec(&e) != rhs {
            return Err(Error::MissingIdentity);
        }
        alg.identity = e;
        Ok(alg)
    }

    pub fn ground(&self) -> Ground {
        S::GROUND
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    /// Exponent vectors labelling the basis.
    pub fn basis_labels(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn basis_strings(&self) -> Vec<String> {
        self.basis.iter().map(|m| Poly::monomial(&self.vars, m.clone(), S::one()).to_string()).collect()
    }

    pub fn position(&self, label: &[u32]) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn groebner(&self) -> Option<&GroebnerBasis<S>> {
        self.ideal.as_ref()
    }

    pub fn identity(&self) -> &[S] {
        &self.identity
    }

    pub fn zero(&self) -> Vec<S> {
        vec![S::zero(); self.dim()]
    }

    pub fn basis_element(&self, i: usize) -> Vec<S> {
        unit_vec(self.dim(), i)
    }

    /// Coordinates of `b_i · b_j`.
    pub fn structure(&self, i: usize, j: usize) -> &[S] {
        &self.table[i * self.dim() + j]
    }

    fn check(&self, a: &[S]) -> Result<()> {
        if a.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: a.len() });
        }
        Ok(())
    }

    fn mul_by_basis(&self, a: &[S], j: usize) -> Vec<S> {
        let dim = self.dim();
        let mut out = vec![S::zero(); dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (k, c) in self.table[i * dim + j].iter().enumerate() {
                if !c.is_zero() {
                    out[k] = out[k].clone() + ai.clone() * c.clone();
                }
            }
        }
        out
    }

    pub fn multiply(&self, a: &[S], b: &[S]) -> Result<Vec<S>> {
        self.check(a)?;
        self.check(b)?;
        let dim = self.dim();
        let mut out = vec![S::zero(); dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai.clone() * bj.clone();
                for (k, t) in self.table[i * dim + j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = out[k].clone() + c.clone() * t.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn power(&self, a: &[S], e: u32) -> Result<Vec<S>> {
        let mut acc = self.identity.clone();
        for _ in 0..e {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// Matrix of multiplication by `a`; column `j` holds `a · b_j`.
    pub fn regular_rep(&self, a: &[S]) -> Result<Matrix<S>> {
        self.check(a)?;
        let cols: Vec<Vec<S>> = (0..self.dim()).map(|j| self.mul_by_basis(a, j)).collect();
        Ok(Matrix::from_columns(&cols))
    }

    /// `tr L(b_m)` for every basis element.
    pub fn basis_traces(&self) -> Vec<S> {
        let dim = self.dim();
        (0..dim)
            .map(|m| (0..dim).fold(S::zero(), |acc, k| acc + self.table[m * dim + k][k].clone()))
            .collect()
    }

    /// Coordinates of a polynomial in the algebra's variables.
    ///
    /// Ideal presentations reduce to normal form; table algebras evaluate each
    /// monomial, taking basis labels literally and otherwise multiplying the
    /// basis elements labelled by single variables.
    pub fn element_of_poly(&self, p: &Poly<S>) -> Result<Vec<S>> {
        if p.vars() != &self.vars {
            return Err(Error::VariableMismatch { left: self.vars.names().to_vec(), right: p.vars().names().to_vec() });
        }
        let mut out = self.zero();
        if let Some(gb) = &self.ideal {
            for (e, c) in gb.normal_form(p)?.terms() {
                let k = self.index[e];
                out[k] = c.clone();
            }
            return Ok(out);
        }
        for (e, c) in p.terms() {
            let v = self.monomial_value(e)?;
            out = add(&out, &scale(c, &v));
        }
        Ok(out)
    }

    fn monomial_value(&self, e: &[u32]) -> Result<Vec<S>> {
        if let Some(&k) = self.index.get(e) {
            return Ok(self.basis_element(k));
        }
        let mut acc = self.identity.clone();
        for (v, &power) in e.iter().enumerate() {
            if power == 0 {
                continue;
            }
            let mut unit = vec![0u32; e.len()];
            unit[v] = 1;
            let k = self.index.get(&unit).ok_or_else(|| {
                Error::Invalid(format!("`{}` is not a basis element", self.vars.names()[v]))
            })?;
            acc = self.multiply(&acc, &self.power(&self.basis_element(*k), power)?)?;
        }
        Ok(acc)
    }

    pub fn element_to_poly(&self, a: &[S]) -> Poly<S> {
        Poly::from_terms(&self.vars, self.basis.iter().cloned().zip(a.iter().cloned()))
    }

    pub fn format_element(&self, a: &[S]) -> String {
        self.element_to_poly(a).to_string()
    }

    pub fn parse_element(&self, text: &str) -> Result<Vec<S>> {
        let p = S::parse_poly(text, &self.vars)?;
        self.element_of_poly(&p)
    }

    /// Applies `f` to every structure constant, keeping the basis.
    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<QuotientAlgebra<T>> {
        let conv = |v: &Vec<S>| v.iter().map(&f).collect::<Result<Vec<T>>>();
        Ok(QuotientAlgebra {
            vars: self.vars.clone(),
            basis: self.basis.clone(),
            index: self.index.clone(),
            table: self.table.iter().map(conv).collect::<Result<_>>()?,
            identity: conv(&self.identity)?,
            ideal: None,
        })
    }

    pub(crate) fn with_ideal(mut self, gb: GroebnerBasis<S>) -> Self {
        self.ideal = Some(gb);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_laurent, parse_poly, RatFn};
    use crate::scalar::{int, Rational};
    use num_traits::Zero;

    fn q_algebra(gens: &[&str], names: &[&str]) -> QuotientAlgebra<Rational> {
        let v = Vars::new(names.iter().copied());
        let gs: Vec<_> = gens.iter().map(|g| parse_poly(g, &v).unwrap()).collect();
        QuotientAlgebra::from_ideal(&gs).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn truncated_polynomial_ring() {
        let a = q_algebra(&["x^3"], &["x"]);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.basis_strings(), vec!["1", "x", "x^2"]);
        let x = a.parse_element("x").unwrap();
        let rep = a.regular_rep(&x).unwrap();
        assert!(rep.det().is_zero());
        assert_eq!(rep.column(0), ints(&[0, 1, 0]));
        assert_eq!(rep.column(2), ints(&[0, 0, 0]));
        assert_eq!(a.regular_rep(a.identity()).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn laurent_quotient() {
        let v = Vars::new(["x"]);
        let a = QuotientAlgebra::from_ideal(&[parse_laurent("x^2 - q", &v).unwrap()]).unwrap();
        assert_eq!(a.dim(), 2);
        let x = a.parse_element("x").unwrap();
        let xx = a.multiply(&x, &x).unwrap();
        assert_eq!(xx, vec![RatFn::q(), RatFn::zero()]);
        assert_eq!(a.format_element(&xx), "q");
    }

    #[test]
    fn quantum_g24_product() {
        let v = Vars::new(["x1", "x2"]);
        let gens = [
            parse_laurent("x1^4 - 3*x1^2*x2 + x2^2 + q", &v).unwrap(),
            parse_laurent("-x1^3 + 2*x1*x2", &v).unwrap(),
        ];
        let a = QuotientAlgebra::from_ideal(&gens).unwrap();
        assert_eq!(a.dim(), 6);
        let x1 = a.parse_element("x1").unwrap();
        let x1sq = a.parse_element("x1^2").unwrap();
        let p = a.multiply(&x1, &x1sq).unwrap();
        assert_eq!(p, a.parse_element("2*x1*x2").unwrap());
    }

    #[test]
    fn infinite_and_zero_quotients() {
        let v = Vars::new(["x", "y"]);
        let g = [parse_poly("x*y", &v).unwrap()];
        assert!(matches!(QuotientAlgebra::from_ideal(&g), Err(Error::InfiniteDimensional(_))));
        let g = [parse_poly("x - 1", &v).unwrap(), parse_poly("x", &v).unwrap()];
        assert_eq!(QuotientAlgebra::from_ideal(&g).unwrap_err(), Error::ZeroQuotient);
    }

    fn split_table() -> (Arc<Vars>, Vec<Vec<u32>>, Vec<Vec<Vec<Rational>>>) {
        let v = Vars::new(["e1", "e2"]);
        let t = vec![
            vec![ints(&[1, 0]), ints(&[0, 0])],
            vec![ints(&[0, 0]), ints(&[0, 1])],
        ];
        (v, vec![vec![1, 0], vec![0, 1]], t)
    }

    #[test]
    fn split_algebra_from_table() {
        let (v, l, t) = split_table();
        let a = QuotientAlgebra::from_table(v, l, t, DEFAULT_TABLE_CAP).unwrap();
        assert_eq!(a.identity(), &ints(&[1, 1])[..]);
        let e1 = a.basis_element(0);
        assert_eq!(a.multiply(&e1, &e1).unwrap(), e1);
        assert_eq!(a.parse_element("3 + e1").unwrap(), ints(&[4, 3]));
        assert_eq!(a.format_element(&ints(&[4, 3])), "4*e1 + 3*e2");
    }

    #[test]
    fn one_dimensional_table() {
        let v = Vars::new(Vec::<String>::new());
        let a = QuotientAlgebra::from_table(v, vec![vec![]], vec![vec![ints(&[1])]], 4).unwrap();
        assert_eq!(a.identity(), &ints(&[1])[..]);
        assert_eq!(a.format_element(a.identity()), "1");
    }

    #[test]
    fn table_validation() {
        let (v, l, mut t) = split_table();
        t[0][1] = ints(&[1, 0]);
        assert_eq!(
            QuotientAlgebra::from_table(v.clone(), l.clone(), t, 64).unwrap_err(),
            Error::NotCommutative(0, 1)
        );

        // e1 e1 = e2, e2 e2 = e2, e1 e2 = 0 is not associative: (e1 e1) e2 = e2, e1 (e1 e2) = 0.
        let t = vec![
            vec![ints(&[0, 1]), ints(&[0, 0])],
            vec![ints(&[0, 0]), ints(&[0, 1])],
        ];
        assert!(matches!(QuotientAlgebra::from_table(v.clone(), l.clone(), t, 64), Err(Error::NotAssociative(..))));

        // x^2 = 0 on {x, y}, everything else 0: associative but no unit.
        let t = vec![vec![ints(&[0, 0]); 2]; 2];
        assert_eq!(QuotientAlgebra::from_table(v.clone(), l.clone(), t, 64).unwrap_err(), Error::MissingIdentity);

        let (v, l, t) = split_table();
        assert_eq!(QuotientAlgebra::from_table(v, l, t, 1).unwrap_err(), Error::TooLarge { dim: 2, cap: 1 });
    }

    #[test]
    fn parse_format_roundtrip() {
        let a = q_algebra(&["x^2", "y^2"], &["x", "y"]);
        let e = a.parse_element("1/2 - 3*x*y + y").unwrap();
        assert_eq!(a.parse_element(&a.format_element(&e)).unwrap(), e);
        assert_eq!(a.multiply(&a.parse_element("x").unwrap(), &a.parse_element("x*y").unwrap()).unwrap(), a.zero());
    }
}
