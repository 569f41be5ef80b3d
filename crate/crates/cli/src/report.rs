//! The report emitted by every subcommand, as JSON or as text.
//!
//! Element strings use the polynomial grammar of the algebra they belong
//! to and parse back to the same coordinates.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Subject {
    Grassmannian { k: usize, n: usize, quantum: bool },
    Hypersurface { n: usize, degrees: Vec<u32>, primitive_rank: usize, d: usize, big_d: String, q_degree: i64 },
    Custom { vars: Vec<String>, generators: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Inverse { element: String },
    ZeroDivisor { witness: String },
    NonUnit { det: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OmegaUnit {
    pub unit: bool,
    pub certificate: Certificate,
}

/// One semisimplicity test on one algebra over `Q`. `r` is the
/// specialization point, absent for algebras that are already over `Q`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TestOutcome {
    pub r: Option<String>,
    pub test: String,
    pub semisimple: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecializationInfo {
    pub r: String,
    pub omega_image: String,
    pub omega_compatible: bool,
    /// `semisimple`, `not_semisimple` or `inconclusive`, from the unit test over `Λ`.
    pub prediction: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypersurfaceInfo {
    /// The closed form, single degree only.
    pub omega_closed_form: Option<String>,
    pub omega_matches_closed_form: Option<bool>,
    /// `d = 2`: shape of the regular representation of `ω`.
    pub omega_matrix: Option<OmegaMatrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OmegaMatrix {
    pub block_diagonal: bool,
    pub gamma_block_scalar: Option<String>,
    pub primitive_block_scalar: Option<String>,
    pub det: String,
    pub det_is_laurent_unit: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub subject: Subject,
    pub ground: String,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub functional: Vec<String>,
    pub omega: String,
    pub omega_unit: OmegaUnit,
    pub specializations: Vec<SpecializationInfo>,
    pub semisimple: Vec<TestOutcome>,
    pub hessian: Option<String>,
    pub epsilon: Option<String>,
    pub binomial_sign: Option<i32>,
    pub hypersurface: Option<HypersurfaceInfo>,
    /// Milliseconds per phase; only with `--timings`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<BTreeMap<String, f64>>,
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Grassmannian { k, n, quantum } => {
                write!(f, "grassmannian k={k} n={n} {}", if *quantum { "quantum" } else { "classical" })
            }
            Subject::Hypersurface { n, degrees, primitive_rank, d, big_d, q_degree } => {
                let ds: Vec<String> = degrees.iter().map(u32::to_string).collect();
                write!(
                    f,
                    "hypersurface n={n} degrees={} R={primitive_rank} d={d} D={big_d} |q|={q_degree}",
                    ds.join(",")
                )
            }
            Subject::Custom { vars, generators } => {
                write!(f, "custom vars=[{}] generators=[{}]", vars.join(", "), generators.join(", "))
            }
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Inverse { element } => write!(f, "inverse {element}"),
            Certificate::ZeroDivisor { witness } => write!(f, "zero divisor, annihilates {witness}"),
            Certificate::NonUnit { det } => write!(f, "non-unit, det {det}"),
        }
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let w = &mut s;
        let _ = writeln!(w, "subject: {}", self.subject);
        let _ = writeln!(w, "ground: {}", self.ground);
        let _ = writeln!(w, "dimension: {}", self.dimension);
        let _ = writeln!(w, "basis: {}", self.basis.join(", "));
        let _ = writeln!(w, "functional: {}", self.functional.join(", "));
        let _ = writeln!(w, "omega: {}", self.omega);
        let _ = writeln!(w, "omega unit: {} ({})", self.omega_unit.unit, self.omega_unit.certificate);
        for sp in &self.specializations {
            let _ = writeln!(
                w,
                "specialization q={}: omega image {}, compatible {}, predicted {}",
                sp.r, sp.omega_image, sp.omega_compatible, sp.prediction
            );
        }
        for t in &self.semisimple {
            let at = t.r.as_ref().map(|r| format!(" at q={r}")).unwrap_or_default();
            let _ = write!(w, "semisimple [{}]{at}: {}", t.test, t.semisimple);
            if let Some(wit) = &t.witness {
                let _ = write!(w, " (witness {wit})");
            }
            let _ = writeln!(w);
        }
        if let Some(h) = &self.hessian {
            let _ = writeln!(w, "hessian: {h}");
        }
        if self.hessian.is_some() || self.epsilon.is_some() {
            let _ = writeln!(w, "epsilon: {}", opt(&self.epsilon));
        }
        if let Some(p) = self.binomial_sign {
            let _ = writeln!(w, "binomial sign: {p}");
        }
        if let Some(h) = &self.hypersurface {
            if let Some(cf) = &h.omega_closed_form {
                let _ = writeln!(w, "omega closed form: {cf} (matches: {})", opt(&h.omega_matches_closed_form));
            }
            if let Some(m) = &h.omega_matrix {
                let _ = writeln!(
                    w,
                    "omega matrix: block diagonal {}, gamma block {}, primitive block {}, det {} (Laurent unit: {})",
                    m.block_diagonal,
                    opt(&m.gamma_block_scalar),
                    opt(&m.primitive_block_scalar),
                    m.det,
                    m.det_is_laurent_unit
                );
            }
        }
        if let Some(t) = &self.timings {
            let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v:.1} ms")).collect();
            let _ = writeln!(w, "timings: {}", parts.join(", "));
        }
        s
    }
}
