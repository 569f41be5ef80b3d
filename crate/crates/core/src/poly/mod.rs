//! Exact polynomial arithmetic: univariate polynomials and rational
//! functions in `q`, sparse multivariate polynomials over any [`Scalar`],
//! and a parser for the textual polynomial grammar.
//!
//! [`Scalar`]: crate::scalar::Scalar

mod mpoly;
mod parse;
mod ratfn;
mod upoly;

pub use mpoly::{demote_q, promote_q, MPoly, Poly, Vars};
pub use parse::{parse_laurent, parse_poly};
pub use ratfn::{LaurentUnit, RatFn};
pub use upoly::UPoly;

use num_traits::{One, Signed};

use crate::scalar::Rational;

/// Canonical text for a list of terms already sorted in descending order.
///
/// Coefficient `±1` is elided in front of a monomial; other coefficients
/// print as `a` or `a/b` followed by `*`.
pub(crate) fn format_terms(names: &[String], terms: &[(Vec<i64>, Rational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (exps, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let mono: Vec<String> = names
            .iter()
            .zip(exps)
            .filter(|(_, &e)| e != 0)
            .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&mono.join("*"));
        }
    }
    out
}
