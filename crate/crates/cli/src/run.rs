use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use frobex::frobenius::{is_unit, FrobeniusData, UnitVerdict, Verdict};
use frobex::grassmannian::{build_classical, build_quantum, Cohomology, DEFAULT_DIM_CAP, DEFAULT_EULER_CAP};
use frobex::hypersurface::{self, HypersurfaceSpec};
use frobex::poly::RatFn;
use frobex::presentation::{parse_scalar, FunctionalSpec, Presentation};
use frobex::semisimplicity::TestRegistry;
use frobex::specialization::{Prediction, SpecializationMap};
use frobex::{Ground, Rational, Scalar};

use crate::report::{
    Certificate, HypersurfaceInfo, OmegaMatrix, OmegaUnit, Report, SpecializationInfo, Subject, TestOutcome,
};

pub struct Options {
    pub specialize: Vec<Rational>,
    pub tests: Option<Vec<String>>,
    pub timings: bool,
}

impl Options {
    fn registry(&self) -> Result<TestRegistry> {
        let all = TestRegistry::with_defaults();
        Ok(match &self.tests {
            Some(names) => all.restrict(&names.iter().map(String::as_str).collect::<Vec<_>>())?,
            None => all,
        })
    }
}

#[derive(Default)]
struct Clock {
    on: bool,
    phases: BTreeMap<String, f64>,
}

impl Clock {
    fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        *self.phases.entry(phase.to_string()).or_default() += start.elapsed().as_secs_f64() * 1e3;
        out
    }

    fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.on.then_some(self.phases)
    }
}

/// Fields shared by every report.
fn skeleton<S: Scalar>(subject: Subject, f: &FrobeniusData<S>, clock: &mut Clock) -> Result<Report> {
    let a = f.algebra();
    let verdict = clock.time("unit", || is_unit(a, f.omega()))?;
    let certificate = match &verdict {
        UnitVerdict::Unit { inverse } => Certificate::Inverse { element: a.format_element(inverse) },
        UnitVerdict::ZeroDivisor { witness } => Certificate::ZeroDivisor { witness: a.format_element(witness) },
        UnitVerdict::NonUnit { det } => Certificate::NonUnit { det: det.to_string() },
    };
    Ok(Report {
        subject,
        ground: S::GROUND.to_string(),
        dimension: a.dim(),
        basis: a.basis_strings(),
        functional: f.functional().iter().map(ToString::to_string).collect(),
        omega: a.format_element(f.omega()),
        omega_unit: OmegaUnit { unit: verdict.is_unit(), certificate },
        specializations: vec![],
        semisimple: vec![],
        hessian: None,
        epsilon: None,
        binomial_sign: None,
        hypersurface: None,
        timings: None,
    })
}

fn outcomes(
    f: &FrobeniusData<Rational>,
    verdicts: Vec<(&'static str, Verdict)>,
    r: Option<&Rational>,
) -> Vec<TestOutcome> {
    verdicts
        .into_iter()
        .map(|(name, v)| TestOutcome {
            r: r.map(ToString::to_string),
            test: name.to_string(),
            semisimple: v.is_semisimple(),
            witness: match v {
                Verdict::NotSemisimple { witness: Some(w) } => Some(f.algebra().format_element(&w)),
                _ => None,
            },
        })
        .collect()
}

fn prediction_name(p: &Prediction) -> String {
    match p {
        Prediction::Semisimple => "semisimple",
        Prediction::NotSemisimple { .. } => "not_semisimple",
        Prediction::Inconclusive => "inconclusive",
    }
    .to_string()
}

/// Specializes at every requested point and runs the selected tests.
fn specialize_all(report: &mut Report, f: &FrobeniusData<RatFn>, opts: &Options, clock: &mut Clock) -> Result<()> {
    let registry = opts.registry()?;
    for r in &opts.specialize {
        let map = SpecializationMap::new(r.clone())?;
        let s = clock.time("specialize", || map.frobenius(f))?;
        let prediction = map.predict(f)?;
        report.specializations.push(SpecializationInfo {
            r: r.to_string(),
            omega_image: s.data.algebra().format_element(&s.omega_image),
            omega_compatible: s.omega_compatible(),
            prediction: prediction_name(&prediction),
        });
        let verdicts = clock.time("semisimple", || registry.run_all(&s.data))?;
        report.semisimple.extend(outcomes(&s.data, verdicts, Some(r)));
    }
    Ok(())
}

fn check_rational_ground(opts: &Options) -> Result<()> {
    if !opts.specialize.is_empty() {
        bail!(frobex::Error::Invalid("--specialize needs an algebra over Lambda".into()));
    }
    Ok(())
}

fn grassmannian_extras<S: Scalar>(report: &mut Report, c: &Cohomology<S>, verify: bool, clock: &mut Clock) -> Result<()> {
    report.binomial_sign = Some(c.spec.binomial_sign());
    if verify {
        let h = clock.time("hessian", || c.verify_hessian_theorem())?;
        report.hessian = Some(c.algebra().format_element(&h.hessian));
        report.epsilon = h.epsilon.as_ref().map(ToString::to_string);
    }
    Ok(())
}

pub fn grassmannian(k: usize, n: usize, quantum: bool, verify: bool, cap: usize, opts: &Options) -> Result<Report> {
    let mut clock = Clock { on: opts.timings, ..Default::default() };
    let subject = Subject::Grassmannian { k, n, quantum };
    let mut report = if quantum {
        let c = clock.time("build", || build_quantum(k, n, cap, DEFAULT_EULER_CAP))?;
        let mut report = skeleton(subject, &c.frobenius, &mut clock)?;
        grassmannian_extras(&mut report, &c, verify, &mut clock)?;
        specialize_all(&mut report, &c.frobenius, opts, &mut clock)?;
        report
    } else {
        check_rational_ground(opts)?;
        let c = clock.time("build", || build_classical(k, n, cap, DEFAULT_EULER_CAP))?;
        let mut report = skeleton(subject, &c.frobenius, &mut clock)?;
        grassmannian_extras(&mut report, &c, verify, &mut clock)?;
        let registry = opts.registry()?;
        let verdicts = clock.time("semisimple", || registry.run_all(&c.frobenius))?;
        report.semisimple = outcomes(&c.frobenius, verdicts, None);
        report
    };
    report.timings = clock.finish();
    Ok(report)
}

pub fn default_cap() -> usize {
    DEFAULT_DIM_CAP
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Rows of rationals separated by commas or whitespace.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<Rational>>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| Ok(parse_scalar::<Rational>(s)?))
                .collect()
        })
        .collect()
}

pub fn hypersurface(
    n: usize,
    degrees: Vec<u32>,
    primitive_rank: usize,
    pairing: Option<&Path>,
    opts: &Options,
) -> Result<Report> {
    let mut clock = Clock { on: opts.timings, ..Default::default() };
    let pairing = pairing.map(|p| parse_matrix(&read(p)?)).transpose()?;
    let spec = HypersurfaceSpec::new(n, degrees.clone(), primitive_rank, pairing)?;
    let h = clock.time("build", || hypersurface::build(&spec))?;
    let subject = Subject::Hypersurface {
        n,
        degrees,
        primitive_rank,
        d: spec.d(),
        big_d: spec.big_d().to_string(),
        q_degree: spec.q_degree(),
    };
    let mut report = skeleton(subject, &h.frobenius, &mut clock)?;
    let a = h.algebra();

    let closed = if spec.degrees.len() == 1 { Some(h.omega_closed_form()?) } else { None };
    let omega_matrix = if spec.d() == 2 {
        let p = clock.time("omega_matrix", || h.omega_matrix_pattern())?;
        Some(OmegaMatrix {
            block_diagonal: p.block_diagonal,
            gamma_block_scalar: p.gamma_block_scalar.map(|c| c.to_string()),
            primitive_block_scalar: p.primitive_block_scalar.map(|c| c.to_string()),
            det: p.det.to_string(),
            det_is_laurent_unit: p.det_is_laurent_unit,
        })
    } else {
        None
    };
    report.hypersurface = Some(HypersurfaceInfo {
        omega_matches_closed_form: closed.as_ref().map(|c| c.as_slice() == h.omega()),
        omega_closed_form: closed.map(|c| a.format_element(&c)),
        omega_matrix,
    });

    let registry = opts.registry()?;
    for r in &opts.specialize {
        let c = clock.time("semisimple", || h.classify(r.clone(), &registry))?;
        let map = SpecializationMap::new(r.clone())?;
        let s = &c.specialized;
        report.specializations.push(SpecializationInfo {
            r: r.to_string(),
            omega_image: s.data.algebra().format_element(&s.omega_image),
            omega_compatible: s.omega_compatible(),
            prediction: prediction_name(&map.predict(&h.frobenius)?),
        });
        let mut out = outcomes(&s.data, c.verdicts.clone(), Some(r));
        if let Some(w) = &c.witness {
            let e1 = s.data.algebra().format_element(w);
            for t in out.iter_mut().filter(|t| !t.semisimple && t.witness.is_some()) {
                t.witness = Some(e1.clone());
            }
        }
        report.semisimple.extend(out);
    }
    report.timings = clock.finish();
    Ok(report)
}

pub fn analyze(presentation: &Path, functional: Option<&str>, opts: &Options) -> Result<Report> {
    let mut clock = Clock { on: opts.timings, ..Default::default() };
    let p = Presentation::parse(&read(presentation)?)?;
    let functional = match functional {
        None => None,
        Some("auto") => Some(FunctionalSpec::Auto),
        Some(path) => Some(FunctionalSpec::parse(&read(Path::new(path))?)?),
    };
    let subject = Subject::Custom { vars: p.vars.names().to_vec(), generators: p.generators.clone() };
    let mut report = match p.ground {
        Ground::Q => {
            check_rational_ground(opts)?;
            let f = clock.time("build", || p.frobenius::<Rational>(functional.as_ref()))?;
            let mut report = skeleton(subject, &f, &mut clock)?;
            let registry = opts.registry()?;
            let verdicts = clock.time("semisimple", || registry.run_all(&f))?;
            report.semisimple = outcomes(&f, verdicts, None);
            report
        }
        Ground::Lambda => {
            let f = clock.time("build", || p.frobenius::<RatFn>(functional.as_ref()))?;
            let mut report = skeleton(subject, &f, &mut clock)?;
            specialize_all(&mut report, &f, opts, &mut clock)?;
            report
        }
    };
    report.timings = clock.finish();
    Ok(report)
}
