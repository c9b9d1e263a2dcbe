use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// `K[x_1, ..., x_n]` over the rationals, identified by its variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolynomialRing {
    names: Arc<[String]>,
}

impl PolynomialRing {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        if names.len() > 64 {
            return Err(Error::Invalid("at most 64 variables are supported".into()));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Invalid(format!(
                    "`{n}` is not a valid variable name"
                )));
            }
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("variable `{n}` declared twice")));
            }
        }
        Ok(PolynomialRing {
            names: names.into(),
        })
    }

    /// The ring `K[x1, ..., xn]`.
    pub fn standard(n: usize) -> Self {
        PolynomialRing::new((1..=n).map(|i| format!("x{i}"))).expect("valid names")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn all_vars_mask(&self) -> u64 {
        if self.nvars() == 64 {
            u64::MAX
        } else {
            (1u64 << self.nvars()) - 1
        }
    }
}

impl fmt::Debug for PolynomialRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}]", self.names.join(","))
    }
}
