//! Top Chern class of the tangent bundle of `G(k, n)` as a polynomial in
//! the Chern classes `x_i` of the tautological subbundle.

use crate::error::{Error, Result};
use crate::poly::{MPoly, Vars};
use crate::scalar::Rational;

use super::symmetric::{elementary_vars, symmetric_reduce};

pub const DEFAULT_EULER_CAP: usize = 12;

/// `P'`: expands `Π_{i,j} (μ_j − λ_i)`, rewrites it in `x_i = e_i(λ)` and
/// `y_j = e_j(μ)`, then eliminates `y` through `y_m = −Σ_{i=1}^{min(k,m)} x_i y_{m−i}`.
pub fn euler_polynomial(k: usize, n: usize, cap: usize) -> Result<MPoly> {
    if k == 0 || k >= n {
        return Err(Error::Invalid(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    let m = n - k;
    if k * m > cap {
        return Err(Error::CapExceeded(format!("k(n-k) = {} exceeds the Euler-polynomial cap {cap}", k * m)));
    }
    let roots = Vars::new((1..=k).map(|i| format!("l{i}")).chain((1..=m).map(|j| format!("u{j}"))));
    let one = Rational::from_integer(1.into());
    let mut e = MPoly::one(&roots);
    for i in 0..k {
        for j in 0..m {
            let mut mu = vec![0; k + m];
            mu[k + j] = 1;
            let mut la = vec![0; k + m];
            la[i] = 1;
            let factor = &MPoly::monomial(&roots, mu, one.clone()) - &MPoly::monomial(&roots, la, one.clone());
            e = &e * &factor;
        }
    }

    let xv = elementary_vars(k);
    let x = |i: usize| {
        let mut ex = vec![0; k];
        ex[i - 1] = 1;
        MPoly::monomial(&xv, ex, one.clone())
    };
    let mut y = vec![MPoly::one(&xv)];
    for j in 1..=m {
        let mut acc = MPoly::zero(&xv);
        for i in 1..=k.min(j) {
            acc = &acc - &(&x(i) * &y[j - i]);
        }
        y.push(acc);
    }

    let mut out = MPoly::zero(&xv);
    for (dl, coeff) in symmetric_reduce(&e, 0..k)? {
        let mut xpart = MPoly::one(&xv);
        for (i, &d) in dl.iter().enumerate() {
            xpart = &xpart * &x(i + 1).pow(d);
        }
        for (dm, c) in symmetric_reduce(&coeff, k..k + m)? {
            let c = c.as_constant().expect("all root variables eliminated");
            let mut t = xpart.scale(&c);
            for (j, &d) in dm.iter().enumerate() {
                t = &t * &y[j + 1].pow(d);
            }
            out = &out + &t;
        }
    }
    Ok(out)
}
