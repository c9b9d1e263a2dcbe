use serde::Serialize;

use super::numerical::{semigroups_up_to_genus, NumericalSemigroup};
use super::relative::canonical_ideal;
use super::series::{fitting1_series, MinorRoute};
use crate::error::{Budget, Error, Result};

/// Result for one non-Gorenstein semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchEntry {
    pub semigroup: Vec<i64>,
    #[serde(rename = "type")]
    pub type_: usize,
    /// `Fitt_1(ω)` is a translate of `ω`.
    pub hit: bool,
    pub fitt1_gens: Vec<i64>,
    /// `ω`, shifted into `S`.
    pub omega_gens: Vec<i64>,
    #[serde(skip)]
    pub genus: usize,
    /// For type 2: `Fitt_1(ω) = tr(ω)`.
    #[serde(skip)]
    pub trace_agrees: Option<bool>,
    /// `rad Fitt_1(ω) = rad tr(ω)`; both are the maximal ideal here.
    #[serde(skip)]
    pub radicals_agree: bool,
}

#[derive(Clone, Debug, Default)]
pub struct SearchReport {
    pub max_genus: usize,
    pub examined: usize,
    pub gorenstein_skipped: usize,
    pub entries: Vec<SearchEntry>,
    /// Semigroups whose analysis ran out of budget, with the reason.
    pub skipped: Vec<(Vec<i64>, String)>,
}

impl SearchReport {
    pub fn hits(&self) -> impl Iterator<Item = &SearchEntry> {
        self.entries.iter().filter(|e| e.hit)
    }

    pub fn type_two(&self) -> impl Iterator<Item = &SearchEntry> {
        self.entries.iter().filter(|e| e.type_ == 2)
    }

    /// Type-2 semigroups that are hits or where `Fitt_1(ω) ≠ tr(ω)`.
    pub fn type_two_failures(&self) -> Vec<&SearchEntry> {
        self.type_two()
            .filter(|e| e.hit || e.trace_agrees != Some(true))
            .collect()
    }

    pub fn radical_failures(&self) -> Vec<&SearchEntry> {
        self.entries.iter().filter(|e| !e.radicals_agree).collect()
    }

    pub fn is_clean(&self) -> bool {
        self.hits().next().is_none()
            && self.type_two_failures().is_empty()
            && self.radical_failures().is_empty()
            && self.skipped.is_empty()
    }
}

/// Analyses one semigroup; `None` when it is Gorenstein.
pub fn analyse_canonical(s: &NumericalSemigroup, budget: &Budget) -> Result<Option<SearchEntry>> {
    let omega = canonical_ideal(s);
    if omega.is_principal() {
        return Ok(None);
    }
    let omega = omega.shift(omega.integral_shift());
    let fitt = fitting1_series(&omega, MinorRoute::Auto, budget)?;
    let hit = match fitt.ideal.equal_up_to_shift(&omega) {
        Some(a) => fitt.equals(&omega.shift(a))?,
        None => false,
    };
    let trace = omega.trace();
    let type_ = s.type_();
    let trace_agrees =
        (type_ == 2).then(|| fitt.ideal == trace && fitt.equals(&trace).unwrap_or(false));
    Ok(Some(SearchEntry {
        semigroup: s.generators().to_vec(),
        type_,
        hit,
        fitt1_gens: fitt.ideal.gens().to_vec(),
        omega_gens: omega.gens().to_vec(),
        genus: s.genus(),
        trace_agrees,
        radicals_agree: fitt.ideal.is_unit() == trace.is_unit(),
    }))
}

/// Every numerical semigroup of genus `<= max_genus` that is not Gorenstein,
/// tested for `Fitt_1(ω) ≅ ω`.
pub fn conjecture_search(max_genus: usize, budget: &Budget) -> Result<SearchReport> {
    let mut report = SearchReport {
        max_genus,
        ..SearchReport::default()
    };
    for s in semigroups_up_to_genus(max_genus) {
        report.examined += 1;
        match analyse_canonical(&s, budget) {
            Ok(Some(entry)) => report.entries.push(entry),
            Ok(None) => report.gorenstein_skipped += 1,
            Err(e @ (Error::BudgetExceeded { .. } | Error::InsufficientBound { .. })) => report
                .skipped
                .push((s.generators().to_vec(), e.to_string())),
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}
