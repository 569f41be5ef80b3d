//! Report building behind the `frobex` binary.

pub mod report;
pub mod run;

/// 3 for a failed mathematical invariant, 2 for anything else.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    let violation = e.downcast_ref::<frobex::Error>().is_some_and(frobex::Error::is_violation);
    if violation {
        3
    } else {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let v = anyhow::Error::new(frobex::Error::TheoremViolation("x".into()));
        assert_eq!(exit_code(&v), 3);
        let n = anyhow::Error::new(frobex::Error::Normalization("x".into()));
        assert_eq!(exit_code(&n), 3);
        let bad = anyhow::Error::new(frobex::Error::Invalid("x".into()));
        assert_eq!(exit_code(&bad), 2);
        assert_eq!(exit_code(&anyhow::anyhow!("io")), 2);
    }
}
