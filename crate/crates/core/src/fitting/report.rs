use serde::Serialize;

use crate::ideal::MonomialIdeal;

/// Outcome of one checked statement on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FittingReport {
    pub statement: String,
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl FittingReport {
    pub fn pass(statement: impl Into<String>, instance: impl Into<String>) -> Self {
        FittingReport {
            statement: statement.into(),
            instance: instance.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(
        statement: impl Into<String>,
        instance: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        FittingReport {
            statement: statement.into(),
            instance: instance.into(),
            pass: false,
            witness: Some(witness.into()),
        }
    }

    /// Passes when `failure` is `None`, otherwise fails with it as witness.
    pub fn from_check(
        statement: impl Into<String>,
        instance: impl Into<String>,
        failure: Option<String>,
    ) -> Self {
        match failure {
            None => FittingReport::pass(statement, instance),
            Some(w) => FittingReport::fail(statement, instance, w),
        }
    }
}

/// Ideal in the text file format, on one line: `vars: x,y; gens: x*y, y^2`.
pub fn describe_ideal(ideal: &MonomialIdeal) -> String {
    format!(
        "vars: {}; gens: {}",
        ideal.ring().names().join(","),
        if ideal.is_zero() {
            "0".to_string()
        } else {
            ideal.generator_strings().join(", ")
        }
    )
}

/// A `fitt compute` invocation reproducing `Fitt_j` of the ideal.
pub fn reproduce_command(ideal: &MonomialIdeal, j: usize) -> String {
    format!(
        "fitt compute --vars {} --gens '{}' --j {j}",
        ideal.ring().names().join(","),
        ideal.generator_strings().join(", ")
    )
}
