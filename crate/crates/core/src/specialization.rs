//! Specialization `θ_r : Λ → Q`, `q ↦ r` with `r ≠ 0`, applied to
//! scalars, elements, algebras and Frobenius data.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{is_zero_vec, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::frobenius::{is_unit, FrobeniusData, UnitVerdict};
use crate::groebner::{buchberger, staircase_basis, MonomialOrder};
use crate::poly::{Poly, RatFn};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationMap {
    r: Rational,
}

/// Result of pushing Frobenius data forward along `θ_r`.
#[derive(Clone, Debug)]
pub struct Specialized {
    pub data: FrobeniusData<Rational>,
    /// `θ̃(ω)` of the source data.
    pub omega_image: Vec<Rational>,
}

impl Specialized {
    /// The characteristic element of the specialized form equals `θ̃(ω)`.
    pub fn omega_compatible(&self) -> bool {
        self.data.omega() == self.omega_image.as_slice()
    }
}

/// What the unit test over `Λ` predicts for the specialized algebra.
#[derive(Clone, Debug, PartialEq)]
pub enum Prediction {
    Semisimple,
    NotSemisimple { witness: Vec<Rational> },
    /// The available witness specializes to zero.
    Inconclusive,
}

impl SpecializationMap {
    pub fn new(r: Rational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        Ok(SpecializationMap { r })
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn scalar(&self, c: &RatFn) -> Result<Rational> {
        if !c.is_laurent() {
            return Err(Error::NonLaurent(c.to_string()));
        }
        Ok(c.eval(&self.r).expect("Laurent polynomials are defined at r != 0"))
    }

    pub fn element(&self, a: &[RatFn]) -> Result<Vec<Rational>> {
        a.iter().map(|c| self.scalar(c)).collect()
    }

    /// Specializes every structure constant. An ideal presentation is kept
    /// when the specialized Gröbner basis has the same staircase.
    pub fn algebra(&self, a: &QuotientAlgebra<RatFn>) -> Result<QuotientAlgebra<Rational>> {
        let out = a.try_map(|c| self.scalar(c))?;
        if let Some(gb) = a.groebner() {
            let gens = gb
                .generators()
                .iter()
                .map(|g| {
                    let terms = g.terms().iter().map(|(e, c)| Ok((e.clone(), self.scalar(c)?))).collect::<Result<Vec<_>>>()?;
                    Ok(Poly::from_terms(g.vars(), terms))
                })
                .collect::<Result<Vec<_>>>()?;
            let sgb = buchberger(&gens, MonomialOrder::GrevLex)?;
            if staircase_basis(&sgb).map(|s| s.monomials() == a.basis_labels()).unwrap_or(false) {
                return Ok(out.with_ideal(sgb));
            }
        }
        Ok(out)
    }

    /// Pushforward with the induced form `θ ∘ f`.
    pub fn frobenius(&self, f: &FrobeniusData<RatFn>) -> Result<Specialized> {
        let algebra = Arc::new(self.algebra(f.algebra())?);
        let functional = self.element(f.functional())?;
        let data = FrobeniusData::new(algebra, functional)?;
        let omega_image = self.element(f.omega())?;
        Ok(Specialized { data, omega_image })
    }

    /// Semisimplicity of the specialization as predicted from the unit test
    /// on `ω` over `Λ`.
    pub fn predict(&self, f: &FrobeniusData<RatFn>) -> Result<Prediction> {
        Ok(match is_unit(f.algebra(), f.omega())? {
            UnitVerdict::Unit { .. } => Prediction::Semisimple,
            UnitVerdict::ZeroDivisor { witness } => {
                let w = self.element(&witness)?;
                if is_zero_vec(&w) {
                    Prediction::Inconclusive
                } else {
                    Prediction::NotSemisimple { witness: w }
                }
            }
            UnitVerdict::NonUnit { det } => {
                if self.scalar(&det)?.is_zero() {
                    Prediction::Inconclusive
                } else {
                    Prediction::Semisimple
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{is_semisimple_trace_oracle, is_semisimple_via_omega};
    use crate::poly::{parse_laurent, Vars};
    use crate::scalar::{int, rat};
    use num_traits::One;

    fn laurent(gens: &[&str], names: &[&str]) -> Arc<QuotientAlgebra<RatFn>> {
        let v = Vars::new(names.iter().copied());
        let gs: Vec<_> = gens.iter().map(|g| parse_laurent(g, &v).unwrap()).collect();
        Arc::new(QuotientAlgebra::from_ideal(&gs).unwrap())
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(SpecializationMap::new(int(0)), Err(Error::ZeroSpecialization));
    }

    #[test]
    fn scalars() {
        let t = SpecializationMap::new(int(3)).unwrap();
        assert_eq!(t.scalar(&RatFn::q()).unwrap(), int(3));
        assert_eq!(t.scalar(&RatFn::laurent_monomial(int(2), -2)).unwrap(), rat(2, 9));
        let bad = RatFn::one() / (RatFn::q() + RatFn::one());
        assert!(matches!(t.scalar(&bad), Err(Error::NonLaurent(_))));
    }

    #[test]
    fn square_root_quotient() {
        let a = laurent(&["x^2 - q"], &["x"]);
        let f = FrobeniusData::new(a.clone(), vec![RatFn::zero(), RatFn::one()]).unwrap();
        let t = SpecializationMap::new(int(4)).unwrap();
        let s = t.frobenius(&f).unwrap();
        assert!(s.omega_compatible());
        let b = s.data.algebra();
        assert!(b.groebner().is_some());
        assert_eq!(b.format_element(s.data.omega()), "2*x");
        assert_eq!(b.format_element(&b.parse_element("x^2").unwrap()), "4");
        assert!(is_semisimple_via_omega(&s.data).unwrap().is_semisimple());
        assert!(is_semisimple_trace_oracle(b).unwrap().is_semisimple());
        assert_eq!(t.predict(&f).unwrap(), Prediction::Semisimple);
    }

    #[test]
    fn element_map_is_a_homomorphism() {
        let a = laurent(&["x^3 - q"], &["x"]);
        let t = SpecializationMap::new(rat(-1, 3)).unwrap();
        let b = t.algebra(&a).unwrap();
        let xs = ["x + q", "q^-1*x^2 - 2", "3*q^2*x + x^2"];
        for u in xs {
            for w in xs {
                let (u, w) = (a.parse_element(u).unwrap(), a.parse_element(w).unwrap());
                let lhs = t.element(&a.multiply(&u, &w).unwrap()).unwrap();
                let rhs = b.multiply(&t.element(&u).unwrap(), &t.element(&w).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        let qe = a.parse_element("q").unwrap();
        assert_eq!(SpecializationMap::new(int(3)).unwrap().element(&qe).unwrap(), vec![int(3), int(0), int(0)]);
    }

    #[test]
    fn projective_plane_omega_image() {
        let a = laurent(&["x^3 - q"], &["x"]);
        let f = FrobeniusData::new(a, vec![RatFn::zero(), RatFn::zero(), RatFn::one()]).unwrap();
        let t = SpecializationMap::new(int(5)).unwrap();
        let s = t.frobenius(&f).unwrap();
        assert!(s.omega_compatible());
        assert_eq!(s.data.algebra().format_element(&s.omega_image), "3*x^2");
    }

    #[test]
    fn nilpotent_witness_survives() {
        let a = laurent(&["x^2"], &["x"]);
        let f = FrobeniusData::new(a, vec![RatFn::zero(), RatFn::q()]).unwrap();
        let t = SpecializationMap::new(int(2)).unwrap();
        match t.predict(&f).unwrap() {
            Prediction::NotSemisimple { witness } => assert!(!is_zero_vec(&witness)),
            other => panic!("{other:?}"),
        }
        let s = t.frobenius(&f).unwrap();
        assert!(s.omega_compatible());
        assert!(!is_semisimple_trace_oracle(s.data.algebra()).unwrap().is_semisimple());
    }

    #[test]
    fn non_unit_determinant_depends_on_r() {
        // x^2 = (q - 1)^2, so det L(ω) = -4(q - 1)^2 vanishes at r = 1 only.
        let a = laurent(&["x^2 - q^2 + 2*q - 1"], &["x"]);
        let f = FrobeniusData::new(a, vec![RatFn::zero(), RatFn::one()]).unwrap();
        assert_eq!(SpecializationMap::new(int(2)).unwrap().predict(&f).unwrap(), Prediction::Semisimple);
        let at_one = SpecializationMap::new(int(1)).unwrap();
        assert_eq!(at_one.predict(&f).unwrap(), Prediction::Inconclusive);
        let s = at_one.frobenius(&f).unwrap();
        assert!(!is_semisimple_via_omega(&s.data).unwrap().is_semisimple());
    }
}
