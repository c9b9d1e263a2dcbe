use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("budget exceeded: {what} needs {needed} units, budget is {budget}")]
    BudgetExceeded {
        what: String,
        needed: u64,
        budget: u64,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("truncation bound {bound} does not certify the tail: {reason}")]
    InsufficientBound { bound: i64, reason: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Work limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of square submatrices a minor enumeration may visit.
    pub max_minors: u64,
    /// Maximum node count for combinatorial searches (covers, multidegrees,
    /// semigroup windows).
    pub max_search: u64,
}

impl Budget {
    pub const DEFAULT_MINORS: u64 = 20_000_000;
    pub const DEFAULT_SEARCH: u64 = 2_000_000;

    pub fn with_minors(max_minors: u64) -> Self {
        Budget {
            max_minors,
            ..Budget::default()
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_minors: u64::MAX,
            max_search: u64::MAX,
        }
    }

    /// Default budget, with `FITT_BUDGET` (if set and numeric) overriding the
    /// minor limit.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(v) = std::env::var("FITT_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            b.max_minors = v;
        }
        b
    }

    pub(crate) fn check_minors(&self, what: impl FnOnce() -> String, needed: u64) -> Result<()> {
        if needed > self.max_minors {
            return Err(Error::BudgetExceeded {
                what: what(),
                needed,
                budget: self.max_minors,
            });
        }
        Ok(())
    }

    pub(crate) fn check_search(&self, what: impl FnOnce() -> String, needed: u64) -> Result<()> {
        if needed > self.max_search {
            return Err(Error::BudgetExceeded {
                what: what(),
                needed,
                budget: self.max_search,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_minors: Budget::DEFAULT_MINORS,
            max_search: Budget::DEFAULT_SEARCH,
        }
    }
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
