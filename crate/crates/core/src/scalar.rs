//! Coefficient fields used throughout the crate.
//!
//! Two grounds exist: the rationals `Q`, and the Laurent ring
//! `Λ = Q[q, q⁻¹]` whose arithmetic is carried out inside its fraction
//! field `Q(q)` (see [`RatFn`]). Ring-theoretic questions such as "is this a
//! unit" are always answered relative to the ground, never the fraction field.

use std::fmt::{Debug, Display};
use std::ops::{Div, Neg, Sub};

use num_traits::{One, Zero};

use std::sync::Arc;

use crate::error::Result;
use crate::poly::{Poly, RatFn, Vars};

pub type Rational = num_rational::BigRational;

/// Ground ring of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ground {
    Q,
    Lambda,
}

impl Display for Ground {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ground::Q => f.write_str("Q"),
            Ground::Lambda => f.write_str("Lambda"),
        }
    }
}

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Sub<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const GROUND: Ground;

    /// Multiplicative inverse in the field of fractions.
    fn inv(&self) -> Option<Self>;

    /// Unit of the ground ring: nonzero for `Q`, `c·q^m` for `Λ`.
    fn is_ground_unit(&self) -> bool;

    fn from_rational(r: Rational) -> Self;

    fn to_ratfn(&self) -> RatFn;

    /// Inverse of [`Scalar::to_ratfn`]; `None` when the value does not live in this field.
    fn from_ratfn(r: &RatFn) -> Option<Self>;

    fn from_i64(i: i64) -> Self {
        Self::from_rational(Rational::from_integer(i.into()))
    }

    /// Parses polynomial text with coefficients in this field.
    fn parse_poly(text: &str, vars: &Arc<Vars>) -> Result<Poly<Self>>;

    /// Rescales a vector so that every entry lies in the ground ring.
    fn clear_denominators(_v: &mut [Self]) {}
}

impl Scalar for Rational {
    const GROUND: Ground = Ground::Q;

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_ground_unit(&self) -> bool {
        !self.is_zero()
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn to_ratfn(&self) -> RatFn {
        RatFn::constant(self.clone())
    }

    fn from_ratfn(r: &RatFn) -> Option<Self> {
        r.as_constant()
    }

    fn parse_poly(text: &str, vars: &Arc<Vars>) -> Result<Poly<Self>> {
        crate::poly::parse_poly(text, vars)
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
