//! Frobenius forms on finite-dimensional commutative algebras: Gram matrix,
//! dual basis, characteristic element, comultiplication, and the algebraic
//! invariants (units, nilradical, socle) used to decide semisimplicity.

use std::sync::Arc;

use crate::algebra::{add, is_zero_vec, scale, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::Vars;
use crate::scalar::{Ground, Rational, Scalar};

/// An algebra together with a nondegenerate linear form `f`.
#[derive(Clone, Debug)]
pub struct FrobeniusData<S: Scalar> {
    algebra: Arc<QuotientAlgebra<S>>,
    functional: Vec<S>,
    gram: Matrix<S>,
    gram_inv: Matrix<S>,
    dual_basis: Vec<Vec<S>>,
    omega: Vec<S>,
}

/// Outcome of [`is_unit`].
#[derive(Clone, Debug, PartialEq)]
pub enum UnitVerdict<S> {
    Unit { inverse: Vec<S> },
    /// `a · witness = 0` with `witness ≠ 0`.
    ZeroDivisor { witness: Vec<S> },
    /// Over `Λ` only: the determinant is nonzero but not of the form `c·q^m`.
    NonUnit { det: S },
}

impl<S> UnitVerdict<S> {
    pub fn is_unit(&self) -> bool {
        matches!(self, UnitVerdict::Unit { .. })
    }
}

pub fn gram_matrix<S: Scalar>(algebra: &QuotientAlgebra<S>, functional: &[S]) -> Matrix<S> {
    let dim = algebra.dim();
    let mut g = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let v = algebra
                .structure(i, j)
                .iter()
                .zip(functional)
                .fold(S::zero(), |acc, (c, f)| acc + c.clone() * f.clone());
            g[(i, j)] = v.clone();
            g[(j, i)] = v;
        }
    }
    g
}

impl<S: Scalar> FrobeniusData<S> {
    pub fn new(algebra: Arc<QuotientAlgebra<S>>, functional: Vec<S>) -> Result<Self> {
        let dim = algebra.dim();
        if functional.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: functional.len() });
        }
        let gram = gram_matrix(&algebra, &functional);
        let det = gram.det();
        if det.is_zero() {
            return Err(Error::DegenerateForm("Gram matrix is singular".into()));
        }
        if !det.is_ground_unit() {
            return Err(Error::DegenerateForm(format!("Gram determinant {det} is not a unit of the ground ring")));
        }
        let gram_inv = gram.inverse().expect("nonzero determinant");
        let dual_basis: Vec<Vec<S>> = (0..dim).map(|j| gram_inv.column(j)).collect();
        let mut omega = algebra.zero();
        for i in 0..dim {
            for l in 0..dim {
                let c = &gram_inv[(i, l)];
                if !c.is_zero() {
                    omega = add(&omega, &scale(c, algebra.structure(i, l)));
                }
            }
        }
        Ok(FrobeniusData { algebra, functional, gram, gram_inv, dual_basis, omega })
    }

    pub fn algebra(&self) -> &Arc<QuotientAlgebra<S>> {
        &self.algebra
    }

    pub fn functional(&self) -> &[S] {
        &self.functional
    }

    pub fn gram(&self) -> &Matrix<S> {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &Matrix<S> {
        &self.gram_inv
    }

    /// `b_j^#` with `f(b_i b_j^#) = δ_ij`.
    pub fn dual_basis(&self) -> &[Vec<S>] {
        &self.dual_basis
    }

    /// Characteristic element `Σ_i b_i b_i^#`.
    pub fn omega(&self) -> &[S] {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn evaluate(&self, a: &[S]) -> S {
        a.iter().zip(&self.functional).fold(S::zero(), |acc, (x, f)| acc + x.clone() * f.clone())
    }

    /// `α(a) = Σ_i (a b_i) ⊗ b_i^#` as the matrix `M` with `α(a) = Σ M_pr b_p ⊗ b_r`.
    pub fn coproduct(&self, a: &[S]) -> Result<Matrix<S>> {
        let dim = self.dim();
        let rep = self.algebra.regular_rep(a)?;
        let mut m = Matrix::<S>::zeros(dim, dim);
        for i in 0..dim {
            for p in 0..dim {
                let x = &rep[(p, i)];
                if x.is_zero() {
                    continue;
                }
                for r in 0..dim {
                    let y = &self.dual_basis[i][r];
                    if !y.is_zero() {
                        m[(p, r)] = m[(p, r)].clone() + x.clone() * y.clone();
                    }
                }
            }
        }
        Ok(m)
    }

    /// `(f ⊗ id)` applied to a tensor given by its coefficient matrix.
    pub fn counit_left(&self, t: &Matrix<S>) -> Vec<S> {
        (0..self.dim())
            .map(|r| (0..self.dim()).fold(S::zero(), |acc, p| acc + self.functional[p].clone() * t[(p, r)].clone()))
            .collect()
    }

    /// Multiplication `β : A ⊗ A → A` applied to a coefficient matrix.
    pub fn multiply_tensor(&self, t: &Matrix<S>) -> Vec<S> {
        let mut out = self.algebra.zero();
        for p in 0..self.dim() {
            for r in 0..self.dim() {
                let c = &t[(p, r)];
                if !c.is_zero() {
                    out = add(&out, &scale(c, self.algebra.structure(p, r)));
                }
            }
        }
        out
    }

    /// Frobenius data for the form `f ∘ L(u)`, i.e. `a ↦ f(u a)`.
    pub fn twist(&self, u: &[S]) -> Result<Self> {
        let rep = self.algebra.regular_rep(u)?;
        let g: Vec<S> = (0..self.dim()).map(|j| self.evaluate(&rep.column(j))).collect();
        FrobeniusData::new(self.algebra.clone(), g)
    }
}

/// Unit test through the regular representation.
///
/// Over `Λ` a nonzero determinant that is not a Laurent unit gives
/// [`UnitVerdict::NonUnit`]; zero-divisor witnesses have their q-denominators
/// cleared.
pub fn is_unit<S: Scalar>(algebra: &QuotientAlgebra<S>, a: &[S]) -> Result<UnitVerdict<S>> {
    let rep = algebra.regular_rep(a)?;
    let det = rep.det();
    if det.is_zero() {
        let mut witness = rep.kernel().into_iter().next().expect("singular matrix has a kernel");
        S::clear_denominators(&mut witness);
        return Ok(UnitVerdict::ZeroDivisor { witness });
    }
    if !det.is_ground_unit() {
        return Ok(UnitVerdict::NonUnit { det });
    }
    let inverse = rep.solve(algebra.identity()).expect("invertible matrix");
    Ok(UnitVerdict::Unit { inverse })
}

fn require_field<S: Scalar>() -> Result<()> {
    if S::GROUND != Ground::Q {
        return Err(Error::GroundNotAField);
    }
    Ok(())
}

/// `T_ij = tr L(b_i b_j)`.
pub fn trace_form<S: Scalar>(algebra: &QuotientAlgebra<S>) -> Matrix<S> {
    gram_matrix(algebra, &algebra.basis_traces())
}

/// Basis of the nilradical, as the radical of the trace form.
pub fn nilradical<S: Scalar>(algebra: &QuotientAlgebra<S>) -> Result<Vec<Vec<S>>> {
    require_field::<S>()?;
    Ok(trace_form(algebra).kernel())
}

/// Basis of the annihilator of the nilradical.
pub fn socle<S: Scalar>(algebra: &QuotientAlgebra<S>) -> Result<Vec<Vec<S>>> {
    let nil = nilradical(algebra)?;
    let dim = algebra.dim();
    if nil.is_empty() {
        return Ok((0..dim).map(|i| algebra.basis_element(i)).collect());
    }
    let mut rows = Vec::with_capacity(nil.len() * dim);
    for n in &nil {
        rows.extend(algebra.regular_rep(n)?.to_rows());
    }
    Ok(Matrix::from_rows(rows).kernel())
}

/// Semisimplicity verdict for an algebra over `Q`.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Semisimple,
    NotSemisimple { witness: Option<Vec<Rational>> },
}

impl Verdict {
    pub fn is_semisimple(&self) -> bool {
        matches!(self, Verdict::Semisimple)
    }
}

/// Semisimple iff `ω` is a unit; the witness annihilates `ω`.
pub fn is_semisimple_via_omega(f: &FrobeniusData<Rational>) -> Result<Verdict> {
    Ok(match is_unit(f.algebra(), f.omega())? {
        UnitVerdict::Unit { .. } => Verdict::Semisimple,
        UnitVerdict::ZeroDivisor { witness } => Verdict::NotSemisimple { witness: Some(witness) },
        UnitVerdict::NonUnit { .. } => unreachable!("every nonzero rational is a unit"),
    })
}

/// Semisimple iff the trace form is nondegenerate (characteristic zero).
pub fn is_semisimple_trace_oracle<S: Scalar>(algebra: &QuotientAlgebra<S>) -> Result<Verdict> {
    require_field::<S>()?;
    Ok(if trace_form(algebra).det().is_zero() {
        Verdict::NotSemisimple { witness: None }
    } else {
        Verdict::Semisimple
    })
}

/// Orthogonal direct sum. Basis labels become `a<i>` for the first summand
/// and `b<j>` for the second.
pub fn direct_sum<S: Scalar>(f1: &FrobeniusData<S>, f2: &FrobeniusData<S>) -> Result<FrobeniusData<S>> {
    let (d1, d2) = (f1.dim(), f2.dim());
    let dim = d1 + d2;
    let names: Vec<String> = (0..d1).map(|i| format!("a{i}")).chain((0..d2).map(|j| format!("b{j}"))).collect();
    let vars = Vars::new(names);
    let labels: Vec<Vec<u32>> = (0..dim)
        .map(|i| {
            let mut e = vec![0; dim];
            e[i] = 1;
            e
        })
        .collect();
    let mut table = vec![vec![vec![S::zero(); dim]; dim]; dim];
    for (alg, off) in [(f1.algebra(), 0), (f2.algebra(), d1)] {
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                for (k, c) in alg.structure(i, j).iter().enumerate() {
                    table[off + i][off + j][off + k] = c.clone();
                }
            }
        }
    }
    let algebra = QuotientAlgebra::from_table(vars, labels, table, usize::MAX)?;
    let functional = f1.functional().iter().chain(f2.functional()).cloned().collect();
    FrobeniusData::new(Arc::new(algebra), functional)
}

/// A Frobenius form chosen without user input.
///
/// Over `Q`, the coordinate functionals `b_m^*` of basis elements lying in
/// the socle are tried from the top of the basis down. Failing that (and
/// always over `Λ`, after trying every coordinate functional), the forms
/// `Σ_m t^m b_m^*` for `t = 1, 2, …` are tried.
pub fn auto_functional<S: Scalar>(algebra: &QuotientAlgebra<S>) -> Result<Vec<S>> {
    let dim = algebra.dim();
    let works = |f: &[S]| {
        let d = gram_matrix(algebra, f).det();
        !d.is_zero() && d.is_ground_unit()
    };
    let candidates: Vec<usize> = if S::GROUND == Ground::Q {
        let soc = socle(algebra)?;
        (0..dim)
            .rev()
            .filter(|&m| {
                let e = algebra.basis_element(m);
                crate::linalg::same_span(&[soc.clone(), vec![e]].concat(), &soc, dim)
            })
            .collect()
    } else {
        (0..dim).rev().collect()
    };
    for m in candidates {
        let f = algebra.basis_element(m);
        if works(&f) {
            return Ok(f);
        }
    }
    for t in 1..=(dim * dim + 1) as i64 {
        let base = S::from_i64(t);
        let mut f = Vec::with_capacity(dim);
        let mut p = S::one();
        for _ in 0..dim {
            f.push(p.clone());
            p = p * base.clone();
        }
        if works(&f) {
            return Ok(f);
        }
    }
    Err(Error::DegenerateForm("no Frobenius form found".into()))
}

/// `span{ω b_i}`.
pub fn omega_ideal<S: Scalar>(f: &FrobeniusData<S>) -> Result<Vec<Vec<S>>> {
    let rep = f.algebra().regular_rep(f.omega())?;
    Ok((0..f.dim()).map(|j| rep.column(j)).filter(|c| !is_zero_vec(c)).collect())
}
