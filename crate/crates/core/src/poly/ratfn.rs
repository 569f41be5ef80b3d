use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::upoly::UPoly;
use crate::error::{Error, Result};
use crate::scalar::{Ground, Rational, Scalar};

/// Element of `Q(q)` in canonical form: coprime numerator and monic
/// denominator. Equality is representational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: UPoly,
    den: UPoly,
}

/// Classification of an element with respect to the units of `Q[q, q⁻¹]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaurentUnit {
    /// The value is `coeff · q^power`.
    Unit { coeff: Rational, power: i64 },
    NonUnit,
    Zero,
}

impl RatFn {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return RatFn { num, den };
        }
        let (num, den) = if let Some((_, m)) = den.as_monomial() {
            // Denominator c·q^m: only powers of q can cancel.
            let k = m.min(num.valuation().unwrap());
            (num.shift_down(k), den.shift_down(k))
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.divrem(&g).0, den.divrem(&g).0)
            }
        };
        let lc = den.leading().unwrap().clone();
        if lc.is_one() {
            RatFn { num, den }
        } else {
            let inv = lc.recip();
            RatFn { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFn { num: UPoly::constant(c), den: UPoly::one() }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFn { num: p, den: UPoly::one() }
    }

    /// `c · q^m` for any integer `m`.
    pub fn laurent_monomial(c: Rational, m: i64) -> Self {
        if m >= 0 {
            Self::from_poly(UPoly::monomial(c, m as usize))
        } else {
            Self::normalized(UPoly::constant(c), UPoly::monomial(Rational::one(), (-m) as usize))
        }
    }

    pub fn q() -> Self {
        Self::laurent_monomial(Rational::one(), 1)
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        (self.den.is_one() && self.num.degree() == Some(0)).then(|| self.num.coeffs()[0].clone())
    }

    /// Power of `q` in the denominator when the value is a Laurent polynomial.
    pub fn laurent_shift(&self) -> Option<usize> {
        self.den.as_monomial().map(|(_, m)| m)
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent_shift().is_some()
    }

    /// `(exponent, coefficient)` pairs in descending exponent order.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, Rational)>> {
        let shift = self.laurent_shift()? as i64;
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 - shift, c.clone()))
                .collect(),
        )
    }

    pub fn laurent_unit(&self) -> LaurentUnit {
        if self.num.is_zero() {
            return LaurentUnit::Zero;
        }
        match (self.num.as_monomial(), self.den.as_monomial()) {
            (Some((c, a)), Some((_, b))) => LaurentUnit::Unit { coeff: c, power: a as i64 - b as i64 },
            _ => LaurentUnit::NonUnit,
        }
    }

    /// Evaluates at `q = r`; `None` if `r` is a pole.
    pub fn eval(&self, r: &Rational) -> Option<Rational> {
        let d = self.den.eval(r);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(r) / d)
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn { num: UPoly::zero(), den: UPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFn {
    fn one() -> Self {
        RatFn { num: UPoly::one(), den: UPoly::one() }
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFn::normalized(&self.num + &rhs.num, self.den.clone());
        }
        if let (Some((_, a)), Some((_, b))) = (self.den.as_monomial(), rhs.den.as_monomial()) {
            let m = a.max(b);
            let num = &self.num.shift_up(m - a) + &rhs.num.shift_up(m - b);
            return RatFn::normalized(num, UPoly::monomial(Rational::one(), m));
        }
        RatFn::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFn::from_poly(&self.num * &rhs.num);
        }
        RatFn::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        RatFn::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFn {
            type Output = RatFn;
            fn $m(self, rhs: RatFn) -> RatFn { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

impl Scalar for RatFn {
    const GROUND: Ground = Ground::Lambda;

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFn::normalized(self.den.clone(), self.num.clone()))
        }
    }

    fn is_ground_unit(&self) -> bool {
        matches!(self.laurent_unit(), LaurentUnit::Unit { .. })
    }

    fn from_rational(r: Rational) -> Self {
        RatFn::constant(r)
    }

    fn to_ratfn(&self) -> RatFn {
        self.clone()
    }

    fn from_ratfn(r: &RatFn) -> Option<Self> {
        Some(r.clone())
    }

    fn parse_poly(text: &str, vars: &std::sync::Arc<super::Vars>) -> Result<super::Poly<Self>> {
        super::parse_laurent(text, vars)
    }

    fn clear_denominators(v: &mut [Self]) {
        let mut l = UPoly::one();
        for x in v.iter() {
            let g = l.gcd(&x.den);
            l = &l * &x.den.divrem(&g).0;
        }
        if l.is_one() {
            return;
        }
        let l = RatFn::from_poly(l);
        for x in v.iter_mut() {
            *x = &*x * &l;
        }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.laurent_shift() {
            Some(m) => self.num.write_terms(f, m as i64),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_coeffs(c.iter().map(|&x| int(x)).collect())
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFn {
        RatFn::new(up(n), up(d)).unwrap()
    }

    #[test]
    fn normalize_cancels_q() {
        // (q^2 - q)/q = q - 1
        assert_eq!(rf(&[0, -1, 1], &[0, 1]), RatFn::from_poly(up(&[-1, 1])));
    }

    #[test]
    fn normalize_scales_denominator_monic() {
        // 2q/4 = q/2
        let v = rf(&[0, 2], &[4]);
        assert_eq!(v, RatFn::from_poly(UPoly::monomial(rat(1, 2), 1)));
        assert!(v.denom().is_one());
    }

    #[test]
    fn normalize_to_one() {
        assert_eq!(rf(&[1, 1], &[1, 1]), RatFn::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFn::new(up(&[1]), UPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn laurent_classification() {
        assert_eq!(
            RatFn::from_poly(UPoly::monomial(int(-4), 3)).laurent_unit(),
            LaurentUnit::Unit { coeff: int(-4), power: 3 }
        );
        assert_eq!(rf(&[-1, 0, 1], &[1]).laurent_unit(), LaurentUnit::NonUnit);
        assert_eq!(RatFn::zero().laurent_unit(), LaurentUnit::Zero);
        assert_eq!(rf(&[3], &[0, 0, 2]).laurent_unit(), LaurentUnit::Unit { coeff: rat(3, 2), power: -2 });
        assert_eq!(rf(&[1], &[1, 1]).laurent_unit(), LaurentUnit::NonUnit);
    }

    #[test]
    fn arithmetic_identities() {
        let a = rf(&[1, 2], &[0, 1]);
        let b = rf(&[3], &[-1, 1]);
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        let p = &a * &b;
        assert_eq!(&p / &b, a);
        assert_eq!(&a * &a.inv().unwrap(), RatFn::one());
    }

    #[test]
    fn display_laurent_and_general() {
        assert_eq!(rf(&[3, 0, 1], &[0, 1]).to_string(), "q + 3*q^-1");
        assert_eq!(rf(&[1], &[1, 1]).to_string(), "(1)/(q + 1)");
    }
}
