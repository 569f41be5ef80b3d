use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

/// Dense univariate polynomial in `q` over `Q`; `coeffs[i]` multiplies `q^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `Some((c, m))` iff the polynomial is `c·q^m` with `c ≠ 0`.
    pub fn as_monomial(&self) -> Option<(Rational, usize)> {
        let v = self.valuation()?;
        (v + 1 == self.coeffs.len()).then(|| (self.coeffs[v].clone(), v))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides by `q^m`; the caller guarantees `m ≤ valuation`.
    pub fn shift_down(&self, m: usize) -> Self {
        if m == 0 || self.is_zero() {
            return self.clone();
        }
        debug_assert!(self.valuation().unwrap() >= m);
        UPoly { coeffs: self.coeffs[m..].to_vec() }
    }

    pub fn shift_up(&self, m: usize) -> Self {
        if m == 0 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if sd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for i in (dd..=sd).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] * &lc_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = c;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Content-free representative: integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive_part(&self) -> UPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return Self::zero();
        }
        let mut den = num_bigint::BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<num_bigint::BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut g = num_bigint::BigInt::zero();
        for i in &ints {
            g = g.gcd(i);
        }
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        UPoly::from_coeffs(ints.into_iter().map(|i| Rational::new(i, g.clone())).collect())
    }

    pub(crate) fn write_terms(&self, f: &mut fmt::Formatter<'_>, shift: i64) -> fmt::Result {
        let terms: Vec<(Vec<i64>, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![i as i64 - shift], c.clone()))
            .collect();
        f.write_str(&super::format_terms(&["q".to_string()], &terms))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, 0)
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => out.push(a + b),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        UPoly::from_coeffs(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }
}
