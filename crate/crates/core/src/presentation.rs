//! Text format for user-supplied presentations.
//!
//! ```text
//! # comment
//! vars: x, y
//! weights: 2, 4
//! ground: Lambda
//! generators:
//!   x^2 - q*y
//!   y^2
//! functional: auto
//! ```
//!
//! `weights:` is optional. `functional:` is `auto` or a comma-separated list
//! of values on the staircase basis, one per basis element; when omitted it
//! defaults to `auto`.

use std::sync::Arc;

use crate::algebra::QuotientAlgebra;
use crate::error::{Error, Result};
use crate::frobenius::{auto_functional, FrobeniusData};
use crate::poly::{Poly, Vars};
use crate::scalar::{Ground, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctionalSpec {
    Auto,
    Values(Vec<String>),
}

impl FunctionalSpec {
    /// `auto`, or values separated by commas, whitespace or newlines.
    pub fn parse(text: &str) -> Result<Self> {
        let body: String = text.lines().map(strip_comment).collect::<Vec<_>>().join("\n");
        let body = body.trim();
        if body == "auto" {
            return Ok(FunctionalSpec::Auto);
        }
        let values: Vec<String> =
            body.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(str::to_string).collect();
        if values.is_empty() {
            return Err(Error::Invalid("empty functional".into()));
        }
        Ok(FunctionalSpec::Values(values))
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub vars: Arc<Vars>,
    pub ground: Ground,
    pub generators: Vec<String>,
    pub functional: FunctionalSpec,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn list(value: &str) -> Vec<String> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_string).collect()
}

fn header(line: &str) -> Option<(&str, &str)> {
    let (key, rest) = line.split_once(':')?;
    let key = key.trim();
    matches!(key, "vars" | "weights" | "ground" | "generators" | "functional").then_some((key, rest.trim()))
}

impl Presentation {
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Option<Vec<String>> = None;
        let mut weights: Option<Vec<u32>> = None;
        let mut ground: Option<Ground> = None;
        let mut generators: Option<Vec<String>> = None;
        let mut functional: Option<FunctionalSpec> = None;
        let mut in_generators = false;

        for (lineno, raw) in text.lines().enumerate() {
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Invalid(format!("line {}: {msg}", lineno + 1));
            match header(line) {
                Some((key, value)) => {
                    in_generators = false;
                    let seen = match key {
                        "vars" => names.replace(list(value)).is_some(),
                        "weights" => {
                            let w = list(value)
                                .iter()
                                .map(|s| s.parse::<u32>().map_err(|_| bad(format!("bad weight `{s}`"))))
                                .collect::<Result<Vec<_>>>()?;
                            weights.replace(w).is_some()
                        }
                        "ground" => {
                            let g = match value {
                                "Q" => Ground::Q,
                                "Lambda" => Ground::Lambda,
                                other => return Err(bad(format!("unknown ground `{other}`, expected Q or Lambda"))),
                            };
                            ground.replace(g).is_some()
                        }
                        "generators" => {
                            in_generators = true;
                            let first = if value.is_empty() { vec![] } else { vec![value.to_string()] };
                            generators.replace(first).is_some()
                        }
                        _ => functional.replace(FunctionalSpec::parse(value).map_err(|e| bad(e.to_string()))?).is_some(),
                    };
                    if seen {
                        return Err(bad(format!("duplicate `{key}:` header")));
                    }
                }
                None if in_generators => generators.as_mut().expect("generators header seen").push(line.to_string()),
                None => return Err(bad(format!("expected a header, got `{line}`"))),
            }
        }

        let names = names.ok_or_else(|| Error::Invalid("missing `vars:` header".into()))?;
        if names.is_empty() {
            return Err(Error::Invalid("no variables declared".into()));
        }
        let ground = ground.ok_or_else(|| Error::Invalid("missing `ground:` header".into()))?;
        if ground == Ground::Lambda && names.iter().any(|n| n == "q") {
            return Err(Error::Invalid("`q` is the ground parameter and cannot be a variable".into()));
        }
        let generators = generators.ok_or_else(|| Error::Invalid("missing `generators:` header".into()))?;
        if generators.is_empty() {
            return Err(Error::Invalid("no generators".into()));
        }
        let vars = match weights {
            Some(w) => Vars::weighted(names, w)?,
            None => Vars::new(names),
        };
        Ok(Presentation { vars, ground, generators, functional: functional.unwrap_or(FunctionalSpec::Auto) })
    }

    pub fn ideal<S: Scalar>(&self) -> Result<Vec<Poly<S>>> {
        self.check_ground::<S>()?;
        self.generators.iter().map(|g| S::parse_poly(g, &self.vars)).collect()
    }

    pub fn algebra<S: Scalar>(&self) -> Result<QuotientAlgebra<S>> {
        QuotientAlgebra::from_ideal(&self.ideal::<S>()?)
    }

    /// Builds the algebra and its form; `functional` overrides the one in the file.
    pub fn frobenius<S: Scalar>(&self, functional: Option<&FunctionalSpec>) -> Result<FrobeniusData<S>> {
        let algebra = self.algebra::<S>()?;
        let f = match functional.unwrap_or(&self.functional) {
            FunctionalSpec::Auto => auto_functional(&algebra)?,
            FunctionalSpec::Values(v) => {
                if v.len() != algebra.dim() {
                    return Err(Error::DimensionMismatch { expected: algebra.dim(), got: v.len() });
                }
                v.iter().map(|s| parse_scalar::<S>(s)).collect::<Result<Vec<_>>>()?
            }
        };
        FrobeniusData::new(Arc::new(algebra), f)
    }

    fn check_ground<S: Scalar>(&self) -> Result<()> {
        if S::GROUND != self.ground {
            return Err(Error::GroundMismatch);
        }
        Ok(())
    }
}

/// A constant of the ground, written in the polynomial grammar.
pub fn parse_scalar<S: Scalar>(text: &str) -> Result<S> {
    let none = Vars::new(Vec::<String>::new());
    S::parse_poly(text, &none)?
        .as_constant()
        .ok_or_else(|| Error::Invalid(format!("`{text}` is not a constant")))
}
