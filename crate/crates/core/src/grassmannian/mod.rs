//! Classical and quantum cohomology of Grassmannians from the
//! Landau–Ginzburg potential.
//!
//! The ring is `K[x_1..x_k]/dW` (classical) or `Λ[x_1..x_k]/dW_q` (quantum)
//! with `x_i` the Chern classes of the tautological subbundle. The
//! intersection functional is read off the Schur expansion: `f(a)` is
//! `(−1)^{k(n−k)}` times the coefficient of the rectangle class. That sign
//! is checked against the Euler polynomial whenever `k(n−k)` is within the
//! Euler cap.

pub mod euler;
pub mod symmetric;

use std::sync::Arc;

use num_traits::{One, Signed};

use crate::algebra::QuotientAlgebra;
use crate::error::{Error, Result};
use crate::frobenius::{is_unit, FrobeniusData};
use crate::linalg::Matrix;
use crate::poly::{promote_q, MPoly, Poly, RatFn, Vars};
use crate::scalar::{Rational, Scalar};
use crate::specialization::{SpecializationMap, Specialized};

pub use euler::{euler_polynomial, DEFAULT_EULER_CAP};
pub use symmetric::{
    elementary_vars, partitions_in_box, poly_det, power_sum_in_elementary, schur_polynomial, Partition,
};

/// Largest `C(n, k)` built by default.
pub const DEFAULT_DIM_CAP: usize = 35;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannianSpec {
    pub k: usize,
    pub n: usize,
    pub quantum: bool,
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl GrassmannianSpec {
    pub fn new(k: usize, n: usize, quantum: bool) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::Invalid(format!("need 1 <= k < n, got k={k}, n={n}")));
        }
        Ok(GrassmannianSpec { k, n, quantum })
    }

    pub fn classical(self) -> Self {
        GrassmannianSpec { quantum: false, ..self }
    }

    pub fn dimension(&self) -> usize {
        binomial(self.n, self.k)
    }

    /// `(−1)^{k(n−k)}`.
    pub fn functional_sign(&self) -> i32 {
        if (self.k * (self.n - self.k)).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `(−1)^{C(n,2)}`.
    pub fn binomial_sign(&self) -> i32 {
        if binomial(self.n, 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn check_cap(&self, cap: usize) -> Result<()> {
        if self.dimension() > cap {
            return Err(Error::CapExceeded(format!("C({}, {}) = {} exceeds the cap {cap}", self.n, self.k, self.dimension())));
        }
        Ok(())
    }

    /// `x1..xk` of weights `2i`, followed by `q` of weight `2n` when quantum.
    pub fn potential_vars(&self) -> Arc<Vars> {
        let mut names: Vec<String> = (1..=self.k).map(|i| format!("x{i}")).collect();
        let mut weights: Vec<u32> = (1..=self.k).map(|i| 2 * i as u32).collect();
        if self.quantum {
            names.push("q".into());
            weights.push(2 * self.n as u32);
        }
        Vars::weighted(names, weights).expect("positive even weights")
    }
}

/// `W = p_{n+1}/(n+1)` in the `x_i`, plus `(−1)^k q x_1` when quantum.
pub fn landau_ginzburg(spec: &GrassmannianSpec) -> MPoly {
    let vars = spec.potential_vars();
    let w = power_sum_in_elementary(spec.n + 1, &vars, spec.k).scale(&Rational::new(1.into(), ((spec.n + 1) as i64).into()));
    if !spec.quantum {
        return w;
    }
    let mut e = vec![0; vars.len()];
    e[0] = 1;
    e[spec.k] = 1;
    let sign = if spec.k.is_multiple_of(2) { 1 } else { -1 };
    &w + &MPoly::monomial(&vars, e, Rational::from_integer(sign.into()))
}

/// `∂W/∂x_1, …, ∂W/∂x_k`.
pub fn potential_ideal(spec: &GrassmannianSpec) -> Vec<MPoly> {
    let w = landau_ginzburg(spec);
    (1..=spec.k).map(|i| w.diff(&format!("x{i}")).expect("declared variable")).collect()
}

/// `det(∂²W/∂x_i∂x_j)`.
pub fn hessian_polynomial(spec: &GrassmannianSpec) -> MPoly {
    let w = landau_ginzburg(spec);
    let names: Vec<String> = (1..=spec.k).map(|i| format!("x{i}")).collect();
    let first: Vec<MPoly> = names.iter().map(|a| w.diff(a).unwrap()).collect();
    let m: Vec<Vec<MPoly>> = first.iter().map(|d| names.iter().map(|b| d.diff(b).unwrap()).collect()).collect();
    poly_det(&m, w.vars())
}

/// A built (quantum) cohomology ring with its geometric functional.
#[derive(Clone, Debug)]
pub struct Cohomology<S: Scalar> {
    pub spec: GrassmannianSpec,
    pub frobenius: FrobeniusData<S>,
    pub partitions: Vec<Partition>,
    /// Coordinates of `s_λ`, one per entry of `partitions`.
    pub schur: Vec<Vec<S>>,
}

/// Outcome of comparing the Hessian with the characteristic element.
#[derive(Clone, Debug)]
pub struct HessianReport<S> {
    pub spec: GrassmannianSpec,
    pub omega: Vec<S>,
    pub hessian: Vec<S>,
    /// `hessian = ε·ω` for this rational `ε`, if one exists.
    pub epsilon: Option<Rational>,
    pub binomial_sign: i32,
    /// A solution `u` of `hessian = u·ω`.
    pub unit_factor: Option<Vec<S>>,
    pub unit_factor_is_unit: bool,
}

impl<S> HessianReport<S> {
    pub fn epsilon_is_sign(&self) -> bool {
        self.epsilon.as_ref().is_some_and(|e| e.abs().is_one())
    }
}

fn to_ground<S: Scalar>(p: &MPoly) -> Poly<S> {
    p.map_coeffs(|c| S::from_rational(c.clone()))
}

fn finish<S: Scalar>(spec: GrassmannianSpec, gens: Vec<Poly<S>>) -> Result<Cohomology<S>> {
    let algebra = QuotientAlgebra::from_ideal(&gens)?;
    if algebra.dim() != spec.dimension() {
        return Err(Error::TheoremViolation(format!(
            "quotient has dimension {}, expected C({}, {}) = {}",
            algebra.dim(),
            spec.n,
            spec.k,
            spec.dimension()
        )));
    }
    let xv = elementary_vars(spec.k);
    let partitions = partitions_in_box(spec.k, (spec.n - spec.k) as u32);
    let schur: Vec<Vec<S>> = partitions
        .iter()
        .map(|lam| algebra.element_of_poly(&to_ground(&schur_polynomial(lam, &xv, spec.k))))
        .collect::<Result<_>>()?;
    let rect = Partition::rectangle(spec.k, (spec.n - spec.k) as u32);
    let r = partitions.iter().position(|p| *p == rect).expect("rectangle fits its box");

    // b_i = Σ_λ c_{λ i} s_λ, so the rectangle coefficients y solve S^T y = e_rect.
    let s = Matrix::from_columns(&schur);
    let mut e_rect = vec![S::zero(); s.rows()];
    e_rect[r] = S::one();
    let y = s
        .transpose()
        .solve(&e_rect)
        .ok_or_else(|| Error::TheoremViolation("Schur classes do not span the quotient".into()))?;
    let sign = S::from_i64(spec.functional_sign() as i64);
    let functional: Vec<S> = y.into_iter().map(|c| sign.clone() * c).collect();
    let frobenius = FrobeniusData::new(Arc::new(algebra), functional)?;
    Ok(Cohomology { spec, frobenius, partitions, schur })
}

fn check_normalization(classical: &Cohomology<Rational>, euler_cap: usize) -> Result<()> {
    let spec = classical.spec;
    if spec.k * (spec.n - spec.k) > euler_cap {
        return Ok(());
    }
    let p = euler_polynomial(spec.k, spec.n, euler_cap)?;
    let nf = classical.frobenius.algebra().element_of_poly(&p)?;
    if nf != classical.frobenius.omega() {
        let a = classical.frobenius.algebra();
        return Err(Error::Normalization(format!(
            "NF(P') = {} but omega = {}",
            a.format_element(&nf),
            a.format_element(classical.frobenius.omega())
        )));
    }
    Ok(())
}

/// `H*(G(k, n); Q)` with the geometric functional.
pub fn build_classical(k: usize, n: usize, cap: usize, euler_cap: usize) -> Result<Cohomology<Rational>> {
    let spec = GrassmannianSpec::new(k, n, false)?;
    spec.check_cap(cap)?;
    let out = finish(spec, potential_ideal(&spec))?;
    check_normalization(&out, euler_cap)?;
    Ok(out)
}

/// `QH*(G(k, n))` over `Λ`. The functional's sign is checked on the classical ring.
pub fn build_quantum(k: usize, n: usize, cap: usize, euler_cap: usize) -> Result<Cohomology<RatFn>> {
    let spec = GrassmannianSpec::new(k, n, true)?;
    spec.check_cap(cap)?;
    if k * (n - k) <= euler_cap {
        build_classical(k, n, cap, euler_cap)?;
    }
    let gens = potential_ideal(&spec).iter().map(|g| promote_q(g, "q")).collect::<Result<Vec<_>>>()?;
    finish(spec, gens)
}

impl<S: Scalar> Cohomology<S> {
    pub fn algebra(&self) -> &Arc<QuotientAlgebra<S>> {
        self.frobenius.algebra()
    }

    pub fn omega(&self) -> &[S] {
        self.frobenius.omega()
    }

    /// `f(s_λ s_μ)` over the box partitions.
    pub fn schur_gram(&self) -> Result<Matrix<S>> {
        let a = self.algebra();
        let n = self.schur.len();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.frobenius.evaluate(&a.multiply(&self.schur[i], &self.schur[j])?);
            }
        }
        Ok(g)
    }

    /// `s` times the permutation matrix pairing `λ` with its box complement.
    pub fn expected_schur_gram(&self) -> Matrix<S> {
        let (k, m) = (self.spec.k, (self.spec.n - self.spec.k) as u32);
        let n = self.partitions.len();
        let sign = S::from_i64(self.spec.functional_sign() as i64);
        let mut g = Matrix::zeros(n, n);
        for (i, lam) in self.partitions.iter().enumerate() {
            let c = lam.complement(k, m);
            let j = self.partitions.iter().position(|p| *p == c).unwrap();
            g[(i, j)] = sign.clone();
        }
        g
    }

    /// Normal form of the Hessian determinant.
    pub fn hessian(&self) -> Result<Vec<S>> {
        let h = hessian_polynomial(&self.spec);
        let h = if self.spec.quantum {
            let p = promote_q(&h, "q")?;
            p.map_coeffs(|c| S::from_ratfn(c).expect("Laurent ground"))
        } else {
            to_ground(&h)
        };
        self.algebra().element_of_poly(&h)
    }

    /// Compares the Hessian with `ω`: a scalar `ε` when one exists, and a
    /// solution `u` of `hessian = u·ω` with its unit test.
    pub fn verify_hessian_theorem(&self) -> Result<HessianReport<S>> {
        let a = self.algebra();
        let omega = self.omega().to_vec();
        let hessian = self.hessian()?;
        let epsilon = omega.iter().position(|c| !c.is_zero()).and_then(|i| {
            let ratio = hessian[i].clone() / omega[i].clone();
            let scaled: Vec<S> = omega.iter().map(|c| ratio.clone() * c.clone()).collect();
            if scaled == hessian {
                ratio.to_ratfn().as_constant()
            } else {
                None
            }
        });
        let unit_factor = a.regular_rep(&omega)?.solve(&hessian);
        let unit_factor_is_unit = match &unit_factor {
            Some(u) => is_unit(a, u)?.is_unit(),
            None => false,
        };
        if epsilon.is_none() && !unit_factor_is_unit {
            return Err(Error::TheoremViolation(format!(
                "Hessian {} is not a unit multiple of omega {}",
                a.format_element(&hessian),
                a.format_element(&omega)
            )));
        }
        Ok(HessianReport {
            spec: self.spec,
            omega,
            hessian,
            epsilon,
            binomial_sign: self.spec.binomial_sign(),
            unit_factor,
            unit_factor_is_unit,
        })
    }
}

impl Cohomology<RatFn> {
    pub fn specialize(&self, r: Rational) -> Result<Specialized> {
        SpecializationMap::new(r)?.frobenius(&self.frobenius)
    }
}
