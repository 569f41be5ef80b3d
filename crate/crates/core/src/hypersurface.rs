//! Quantum cohomology of complete intersections, presented on the basis
//! `1, Γ, …, Γ^n, e_1, …, e_R` by explicit structure constants over `Λ`.
//!
//! Relations, with `D = Π d_i^{d_i}` and `d = Σ(d_i − 1) + 1`:
//! `Γ^{n+1} = D q Γ^{d−1}`, `Γ e_a = 0`, `e_a e_b = P_ab/d · (Γ^n − D q Γ^{d−2})`.
//! The functional is the coordinate of `Γ^n`. In text, `Γ` is written `G`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{add, is_zero_vec, scale, QuotientAlgebra, DEFAULT_TABLE_CAP};
use crate::error::{Error, Result};
use crate::frobenius::{is_unit, FrobeniusData, UnitVerdict, Verdict};
use crate::linalg::Matrix;
use crate::poly::{RatFn, Vars};
use crate::scalar::{Rational, Scalar};
use crate::semisimplicity::TestRegistry;
use crate::specialization::{SpecializationMap, Specialized};

#[derive(Debug, Clone, PartialEq)]
pub struct HypersurfaceSpec {
    pub n: usize,
    pub degrees: Vec<u32>,
    pub primitive_rank: usize,
    pub pairing: Vec<Vec<Rational>>,
}

impl HypersurfaceSpec {
    /// `pairing` defaults to the identity.
    pub fn new(n: usize, degrees: Vec<u32>, primitive_rank: usize, pairing: Option<Vec<Vec<Rational>>>) -> Result<Self> {
        if n < 2 || n % 2 == 1 {
            return Err(Error::Invalid(format!("dimension must be even and at least 2, got {n}")));
        }
        if degrees.is_empty() || degrees.iter().any(|&d| d < 2) {
            return Err(Error::Invalid("degrees must be a nonempty list of integers >= 2".into()));
        }
        let d = degrees.iter().map(|&x| x as usize - 1).sum::<usize>() + 1;
        if n + 2 < d {
            return Err(Error::Invalid(format!("need n >= sum(d_i - 1) - 1, got n = {n}, d = {d}")));
        }
        if d == n + 2 {
            return Err(Error::Invalid(format!(
                "d = n + 2 = {d}: the relation G^(n+1) = D q G^(d-1) does not lower the G-degree"
            )));
        }
        let r = primitive_rank;
        let pairing = pairing.unwrap_or_else(|| {
            (0..r).map(|i| (0..r).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
        });
        if pairing.len() != r || pairing.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch { expected: r, got: pairing.len() });
        }
        let m = Matrix::from_rows(pairing.clone());
        if r > 0 && !m.is_symmetric() {
            return Err(Error::Invalid("pairing matrix is not symmetric".into()));
        }
        if r > 0 && m.det().is_zero() {
            return Err(Error::Invalid("pairing matrix is singular".into()));
        }
        Ok(HypersurfaceSpec { n, degrees, primitive_rank: r, pairing })
    }

    /// `d = Σ(d_i − 1) + 1`.
    pub fn d(&self) -> usize {
        self.degrees.iter().map(|&x| x as usize - 1).sum::<usize>() + 1
    }

    /// `D = Π d_i^{d_i}`.
    pub fn big_d(&self) -> Rational {
        let p = self.degrees.iter().fold(BigInt::one(), |acc, &x| acc * BigInt::from(x).pow(x));
        Rational::from_integer(p)
    }

    /// `|q|` for `|Γ| = 2`.
    pub fn q_degree(&self) -> i64 {
        let r = self.degrees.len() as i64;
        let s: i64 = self.degrees.iter().map(|&x| x as i64).sum();
        2 * (self.n as i64 + r + 1 - s)
    }

    /// Every relation is homogeneous for `|Γ| = 2` and [`Self::q_degree`].
    pub fn grading_consistent(&self) -> bool {
        let (n, d, q) = (self.n as i64, self.d() as i64, self.q_degree());
        let first = 2 * (n + 1) == 2 * (d - 1) + q;
        let second = 2 * n == 2 * (d - 2) + q;
        first && second && q > 0
    }

    pub fn dimension(&self) -> usize {
        self.n + 1 + self.primitive_rank
    }

    pub fn vars(&self) -> Arc<Vars> {
        Vars::new(std::iter::once("G".to_string()).chain((1..=self.primitive_rank).map(|a| format!("e{a}"))))
    }
}

/// Built algebra with its functional `(Γ^n)^*`.
#[derive(Clone, Debug)]
pub struct Hypersurface {
    pub spec: HypersurfaceSpec,
    pub frobenius: FrobeniusData<RatFn>,
}

/// Shape of `L(ω)` in the ordered basis, for the `d = 2` comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaMatrixPattern {
    /// No entry couples the `Γ`-block with the primitive block.
    pub block_diagonal: bool,
    /// Diagonal entries at `Γ, …, Γ^n`.
    pub gamma_diagonal: Vec<RatFn>,
    /// The `Γ`-block below the first row and column is diagonal with one repeated entry.
    pub gamma_block_scalar: Option<RatFn>,
    /// The primitive block is `c·I`.
    pub primitive_block_scalar: Option<RatFn>,
    pub first_column: Vec<RatFn>,
    pub det: RatFn,
    pub det_is_laurent_unit: bool,
}

/// Semisimplicity of a specialization.
#[derive(Clone, Debug)]
pub struct Classification {
    pub specialized: Specialized,
    pub verdicts: Vec<(&'static str, Verdict)>,
    /// For `d > 2`: `e_1`, checked to satisfy `ω e_1 = 0`.
    pub witness: Option<Vec<Rational>>,
    pub omega_unit_over_lambda: bool,
}

impl Classification {
    pub fn semisimple(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| v.is_semisimple())
    }

    pub fn tests_agree(&self) -> bool {
        self.verdicts.windows(2).all(|w| w[0].1.is_semisimple() == w[1].1.is_semisimple())
    }
}

/// Coordinates of `c q^t Γ^m` after rewriting with `Γ^{n+1} = D q Γ^{d−1}`.
fn gamma_power(spec: &HypersurfaceSpec, m: usize) -> (usize, RatFn) {
    let (n, d) = (spec.n, spec.d());
    let drop = n + 2 - d;
    let dq = RatFn::constant(spec.big_d()) * RatFn::q();
    let mut m = m;
    let mut c = RatFn::one();
    while m > n {
        m -= drop;
        c = c * dq.clone();
    }
    (m, c)
}

pub fn build(spec: &HypersurfaceSpec) -> Result<Hypersurface> {
    if !spec.grading_consistent() {
        return Err(Error::TheoremViolation("relations are not homogeneous".into()));
    }
    let (n, r, d) = (spec.n, spec.primitive_rank, spec.d());
    let dim = spec.dimension();
    let vars = spec.vars();
    let labels: Vec<Vec<u32>> = (0..=n)
        .map(|i| {
            let mut e = vec![0; r + 1];
            e[0] = i as u32;
            e
        })
        .chain((0..r).map(|a| {
            let mut e = vec![0; r + 1];
            e[a + 1] = 1;
            e
        }))
        .collect();

    let zero = vec![RatFn::zero(); dim];
    let unit = |i: usize, c: RatFn| {
        let mut v = zero.clone();
        v[i] = c;
        v
    };
    // Γ^n − D q Γ^{d−2}
    let mut pencil = unit(n, RatFn::one());
    let dq = RatFn::constant(spec.big_d()) * RatFn::q();
    pencil[d - 2] = pencil[d - 2].clone() - dq;
    let inv_d = RatFn::constant(Rational::new(1.into(), (d as i64).into()));

    let mut table = vec![vec![zero.clone(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let (gi, gj) = (i <= n, j <= n);
            table[i][j] = match (gi, gj) {
                (true, true) => {
                    let (m, c) = gamma_power(spec, i + j);
                    unit(m, c)
                }
                (true, false) if i == 0 => unit(j, RatFn::one()),
                (false, true) if j == 0 => unit(i, RatFn::one()),
                (true, false) | (false, true) => zero.clone(),
                (false, false) => {
                    let p = RatFn::constant(spec.pairing[i - n - 1][j - n - 1].clone()) * inv_d.clone();
                    scale(&p, &pencil)
                }
            };
        }
    }
    let algebra = QuotientAlgebra::from_table(vars, labels, table, DEFAULT_TABLE_CAP)?;
    let functional = unit(n, RatFn::one());
    let frobenius = FrobeniusData::new(Arc::new(algebra), functional)?;
    Ok(Hypersurface { spec: spec.clone(), frobenius })
}

impl Hypersurface {
    pub fn algebra(&self) -> &Arc<QuotientAlgebra<RatFn>> {
        self.frobenius.algebra()
    }

    pub fn omega(&self) -> &[RatFn] {
        self.frobenius.omega()
    }

    pub fn gamma_power(&self, i: usize) -> Vec<RatFn> {
        self.algebra().basis_element(i)
    }

    pub fn primitive(&self, a: usize) -> Vec<RatFn> {
        self.algebra().basis_element(self.spec.n + a)
    }

    /// The closed form `(n+1)Γ^n + (R/d)(Γ^n − d^d Γ^{d−2} q)` (single degree only).
    pub fn omega_closed_form(&self) -> Result<Vec<RatFn>> {
        if self.spec.degrees.len() != 1 {
            return Err(Error::Invalid("the closed form applies to a single degree".into()));
        }
        let (n, d, r) = (self.spec.n, self.spec.d(), self.spec.primitive_rank);
        let mut pencil = self.gamma_power(n);
        let dd = RatFn::constant(Rational::from_integer(BigInt::from(d).pow(d as u32))) * RatFn::q();
        pencil[d - 2] = pencil[d - 2].clone() - dd;
        let top = scale(&RatFn::from_i64((n + 1) as i64), &self.gamma_power(n));
        let coeff = RatFn::constant(Rational::new((r as i64).into(), (d as i64).into()));
        Ok(add(&top, &scale(&coeff, &pencil)))
    }

    pub fn omega_matrix_pattern(&self) -> Result<OmegaMatrixPattern> {
        let n = self.spec.n;
        let dim = self.spec.dimension();
        let l = self.algebra().regular_rep(self.omega())?;
        let block_diagonal = (0..=n).all(|i| (n + 1..dim).all(|j| l[(i, j)].is_zero() && l[(j, i)].is_zero()));
        let gamma_diagonal: Vec<RatFn> = (1..=n).map(|i| l[(i, i)].clone()).collect();
        let gamma_block_scalar = {
            let off_diag_zero = (1..=n).all(|i| (1..=n).all(|j| i == j || l[(i, j)].is_zero()));
            let same = gamma_diagonal.windows(2).all(|w| w[0] == w[1]);
            (off_diag_zero && same).then(|| gamma_diagonal[0].clone())
        };
        let primitive_block_scalar = if dim > n + 1 {
            let c = l[(n + 1, n + 1)].clone();
            let ok = (n + 1..dim).all(|i| (n + 1..dim).all(|j| l[(i, j)] == if i == j { c.clone() } else { RatFn::zero() }));
            ok.then_some(c)
        } else {
            None
        };
        let det = l.det();
        Ok(OmegaMatrixPattern {
            block_diagonal,
            gamma_diagonal,
            gamma_block_scalar,
            primitive_block_scalar,
            first_column: l.column(0),
            det_is_laurent_unit: det.is_ground_unit(),
            det,
        })
    }

    /// Specializes at `r` and runs every registered test.
    pub fn classify(&self, r: Rational, registry: &TestRegistry) -> Result<Classification> {
        let map = SpecializationMap::new(r)?;
        let specialized = map.frobenius(&self.frobenius)?;
        let verdicts = registry.run_all(&specialized.data)?;
        let omega_unit_over_lambda = matches!(is_unit(self.algebra(), self.omega())?, UnitVerdict::Unit { .. });
        let witness = if self.spec.d() > 2 && self.spec.primitive_rank > 0 {
            let e1 = map.element(&self.primitive(1))?;
            let b = specialized.data.algebra();
            if !is_zero_vec(&b.multiply(specialized.data.omega(), &e1)?) {
                return Err(Error::TheoremViolation("omega * e1 is not zero for d > 2".into()));
            }
            Some(e1)
        } else {
            None
        };
        Ok(Classification { specialized, verdicts, witness, omega_unit_over_lambda })
    }
}
