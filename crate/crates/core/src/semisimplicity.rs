//! Named semisimplicity tests, selectable at runtime.

use crate::error::{Error, Result};
use crate::frobenius::{is_semisimple_trace_oracle, is_semisimple_via_omega, FrobeniusData, Verdict};
use crate::scalar::Rational;

pub trait SemisimplicityTest: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn check(&self, data: &FrobeniusData<Rational>) -> Result<Verdict>;
}

/// Unit test on the characteristic element.
#[derive(Debug, Default, Clone, Copy)]
pub struct OmegaUnitTest;

impl SemisimplicityTest for OmegaUnitTest {
    fn name(&self) -> &'static str {
        "omega"
    }

    fn description(&self) -> &'static str {
        "characteristic element is a unit"
    }

    fn check(&self, data: &FrobeniusData<Rational>) -> Result<Verdict> {
        is_semisimple_via_omega(data)
    }
}

/// Nondegeneracy of the trace form; ignores the functional.
#[derive(Debug, Default, Clone, Copy)]
pub struct TraceFormTest;

impl SemisimplicityTest for TraceFormTest {
    fn name(&self) -> &'static str {
        "trace"
    }

    fn description(&self) -> &'static str {
        "trace form of the regular representation is nondegenerate"
    }

    fn check(&self, data: &FrobeniusData<Rational>) -> Result<Verdict> {
        is_semisimple_trace_oracle(data.algebra())
    }
}

/// Ordered collection of tests; registering an existing name replaces it in place.
#[derive(Default)]
pub struct TestRegistry {
    tests: Vec<Box<dyn SemisimplicityTest>>,
}

impl TestRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_defaults() -> Self {
        let mut r = Self::new();
        r.register(Box::new(OmegaUnitTest));
        r.register(Box::new(TraceFormTest));
        r
    }

    pub fn register(&mut self, test: Box<dyn SemisimplicityTest>) {
        match self.tests.iter().position(|t| t.name() == test.name()) {
            Some(i) => self.tests[i] = test,
            None => self.tests.push(test),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn SemisimplicityTest> {
        self.tests.iter().find(|t| t.name() == name).map(|t| t.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.tests.iter().map(|t| t.name()).collect()
    }

    pub fn select(&self, names: &[&str]) -> Result<Vec<&dyn SemisimplicityTest>> {
        names
            .iter()
            .map(|n| {
                self.get(n).ok_or_else(|| {
                    Error::Invalid(format!("unknown test `{n}` (available: {})", self.names().join(", ")))
                })
            })
            .collect()
    }

    /// Keeps only the named tests, in the order given.
    pub fn restrict(mut self, names: &[&str]) -> Result<Self> {
        self.select(names)?;
        let mut kept = Vec::with_capacity(names.len());
        for n in names {
            if let Some(i) = self.tests.iter().position(|t| t.name() == *n) {
                kept.push(self.tests.remove(i));
            }
        }
        self.tests = kept;
        Ok(self)
    }

    pub fn run_all(&self, data: &FrobeniusData<Rational>) -> Result<Vec<(&'static str, Verdict)>> {
        self.tests.iter().map(|t| Ok((t.name(), t.check(data)?))).collect()
    }
}
