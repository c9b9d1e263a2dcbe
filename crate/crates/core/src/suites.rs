//! Named verification suites over enumerated or seeded random instances.
//!
//! Every suite is deterministic for a fixed [`SuiteConfig`]: instances are
//! generated in a fixed order from a ChaCha8 stream seeded with `seed`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Monomial;
use crate::error::{Budget, Error, Result};
use crate::fitting::verify::{
    classify_squarefree, structure_check, verify_containment, verify_hilbert_burch,
    verify_hilbert_burch_converse, verify_radical, verify_squarefree_equivalence,
};
use crate::fitting::{
    describe_ideal, fitting_ideal, fitting_ideal_of_generators, reproduce_command, FittingReport,
    PresentationKind,
};
use crate::graph::{isomorphism_classes, maximal_criterion, radical_fitting_formula, Graph};
use crate::ideal::{MonomialIdeal, PolynomialRing};
use crate::semigroup::{
    canonical_ideal, fitting1_series, semigroups_up_to_genus, MinorRoute, NumericalSemigroup,
    RelativeIdeal,
};

pub const PRESENTATION_INVARIANCE: &str = "presentation-invariance";
pub const LOCALIZATION_COMMUTES: &str = "localization-commutes";
pub const EDGE_FORMULA: &str = "edge-formula";
pub const VERTEX_CRITERION: &str = "vertex-criterion";
pub const NEIGHBOURHOOD_CRITERION: &str = "neighbourhood-criterion";
pub const COMPLETE_GRAPH_TABLE: &str = "complete-graph-table";
pub const TWO_GENERATED_TRACE: &str = "two-generated-trace";
pub const TRACE_POWER_CONTAINMENT: &str = "trace-power-containment";
pub const MULTIPLICITY_TWO_FIXED: &str = "multiplicity-two-fixed-ideals";
pub const COLON_MAXIMALITY: &str = "colon-maximality";
pub const GORENSTEIN_EQUIVALENCE: &str = "gorenstein-equivalence";
pub const INVERSE_TRACE_TABLE: &str = "inverse-trace-table";
pub const FITTING_SERIES_TABLE: &str = "fitting-series-table";
pub const FIXED_FOUR_GENERATED: &str = "fixed-four-generated";

/// Semigroups examined by the two-generated sweep.
pub const TWO_GEN_MAX_MULTIPLICITY: i64 = 4;
pub const TWO_GEN_MAX_CONDUCTOR: i64 = 20;
/// `<2, 2k+1>` for `k` up to this bound in the multiplicity-two checks.
pub const MULTIPLICITY_TWO_MAX_K: i64 = 5;
/// Genus bound of the Gorenstein characterisation sweep.
pub const GORENSTEIN_MAX_GENUS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Containment,
    Radical,
    Presentation,
    SquarefreeEquivalence,
    Structure,
    EdgeFormula,
    CompleteGraph,
    Semigroup,
    SemigroupExamples,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Containment,
        Suite::Radical,
        Suite::Presentation,
        Suite::SquarefreeEquivalence,
        Suite::Structure,
        Suite::EdgeFormula,
        Suite::CompleteGraph,
        Suite::Semigroup,
        Suite::SemigroupExamples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Containment => "containment",
            Suite::Radical => "radical",
            Suite::Presentation => "presentation",
            Suite::SquarefreeEquivalence => "squarefree-equivalence",
            Suite::Structure => "structure",
            Suite::EdgeFormula => "edge-formula",
            Suite::CompleteGraph => "complete-graph",
            Suite::Semigroup => "semigroup",
            Suite::SemigroupExamples => "semigroup-examples",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "kn-example" => Some(Suite::CompleteGraph),
            _ => None,
        };
        alias
            .or_else(|| Suite::ALL.into_iter().find(|x| x.name() == s))
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Invalid(format!(
                    "unknown suite `{s}`, expected one of: {}",
                    names.join(", ")
                ))
            })
    }
}

/// Bounds and seed for one suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_degree: u32,
    pub graph_vertex_bound: usize,
    /// Number of random instances for the sampled suites.
    pub samples: usize,
    pub seed: u64,
    pub budget: Budget,
}

impl SuiteConfig {
    /// Defaults for `suite`: random ideals on at most 4 variables with at most
    /// 5 generators of degree at most 4, graphs on at most 5 vertices, and
    /// squarefree ideals on 5 variables with at most 6 generators.
    pub fn new(suite: Suite) -> Self {
        let (max_vars, max_gens, samples) = match suite {
            Suite::SquarefreeEquivalence | Suite::Structure => (5, 6, 500),
            Suite::Presentation => (4, 5, 100),
            _ => (4, 5, 200),
        };
        SuiteConfig {
            suite,
            max_vars,
            max_gens,
            max_degree: 4,
            graph_vertex_bound: 5,
            samples,
            seed: 0,
            budget: Budget::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_vars == 0
            || self.max_gens == 0
            || self.max_degree == 0
            || self.graph_vertex_bound == 0
        {
            return Err(Error::Invalid("suite bounds must be positive".into()));
        }
        if self.max_vars > 16 {
            return Err(Error::Invalid(format!(
                "max_vars {} exceeds 16",
                self.max_vars
            )));
        }
        if self.graph_vertex_bound > 6 {
            return Err(Error::Invalid(format!(
                "graph vertex bound {} exceeds 6",
                self.graph_vertex_bound
            )));
        }
        Ok(())
    }
}

/// Reports of one suite run, in generation order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub seed: u64,
    pub instances: usize,
    pub reports: Vec<FittingReport>,
    /// Remarks that are not failures, such as corrected boundaries.
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn new(config: &SuiteConfig) -> Self {
        SuiteOutcome {
            suite: config.suite,
            seed: config.seed,
            instances: 0,
            reports: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &FittingReport> {
        self.reports.iter().filter(|r| !r.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }
}

/// Runs the suite named in `config`.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let mut out = SuiteOutcome::new(config);
    match config.suite {
        Suite::Containment => containment(config, &mut out)?,
        Suite::Radical => radical(config, &mut out)?,
        Suite::Presentation => presentation(config, &mut out)?,
        Suite::SquarefreeEquivalence => squarefree(config, &mut out, false)?,
        Suite::Structure => squarefree(config, &mut out, true)?,
        Suite::EdgeFormula => edge_formula(config, &mut out)?,
        Suite::CompleteGraph => complete_graph(config, &mut out)?,
        Suite::Semigroup => semigroup(config, &mut out)?,
        Suite::SemigroupExamples => semigroup_examples(config, &mut out)?,
    }
    Ok(out)
}

/// A random proper nonzero monomial ideal: a uniform number of variables in
/// `1..=max_vars` and of generators in `1..=max_gens`, each generator a
/// uniform exponent vector of degree `1..=max_degree`. Candidates dividing or
/// divisible by an earlier generator are rejected, so in few variables the
/// ideal may end up with fewer generators.
pub fn random_ideal(
    rng: &mut impl Rng,
    max_vars: usize,
    max_gens: usize,
    max_degree: u32,
) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_vars);
    let count = rng.gen_range(1..=max_gens);
    let ring = PolynomialRing::standard(n);
    let mut gens: Vec<Monomial> = Vec::new();
    let mut attempts = 0;
    while gens.len() < count && attempts < 1000 {
        attempts += 1;
        let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_degree)).collect();
        let deg: u32 = exps.iter().sum();
        if deg == 0 || deg > max_degree {
            continue;
        }
        let m = Monomial::from_exponents(&exps);
        if gens.iter().any(|g| g.divides(&m) || m.divides(g)) {
            continue;
        }
        gens.push(m);
    }
    MonomialIdeal::new(&ring, gens)
}

fn sample(config: &SuiteConfig) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.samples)
        .map(|_| {
            random_ideal(
                &mut rng,
                config.max_vars,
                config.max_gens,
                config.max_degree,
            )
        })
        .collect()
}

fn containment(config: &SuiteConfig, out: &mut SuiteOutcome) -> Result<()> {
    for ideal in sample(config) {
        out.instances += 1;
        out.reports
            .extend(verify_containment(&ideal, &config.budget)?);
        out.reports
            .push(verify_hilbert_burch_converse(&ideal, None, &config.budget)?);
        out.reports
            .push(verify_hilbert_burch(&ideal, &config.budget)?);
    }
    Ok(())
}

fn radical(config: &SuiteConfig, out: &mut SuiteOutcome) -> Result<()> {
    for ideal in sample(config) {
        out.instances += 1;
        out.reports.extend(verify_radical(&ideal, &config.budget)?);
    }
    Ok(())
}

/// Adds one redundant generator (a generator times a monomial of degree at
/// most 2) and compares every `Fitt_j` on the Taylor presentation of the
/// enlarged list; then sets a random set of variables to 1 and compares.
fn presentation(config: &SuiteConfig, out: &mut SuiteOutcome) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.samples {
        let ideal = random_ideal(
            &mut rng,
            config.max_vars,
            config.max_gens,
            config.max_degree,
        );
        let ring = ideal.ring().clone();
        let n = ring.nvars();
        let m = ideal.num_gens();
        let base = &ideal.gens()[rng.gen_range(0..m)];
        let factor =
            Monomial::from_pairs((0..rng.gen_range(0..=2)).map(|_| (rng.gen_range(0..n), 1)));
        let extra = base.mul(&factor);
        let mut gens = ideal.gens().to_vec();
        gens.insert(rng.gen_range(0..=m), extra.clone());
        let keep = rng.gen_range(1..=ring.all_vars_mask());
        out.instances += 1;

        let fitt: Vec<MonomialIdeal> = (0..=m + 1)
            .map(|j| fitting_ideal(&ideal, j, &config.budget))
            .collect::<Result<_>>()?;
        let mut failure = None;
        for j in 0..=m + 1 {
            let enlarged = fitting_ideal_of_generators(
                &ring,
                &gens,
                j,
                PresentationKind::Taylor,
                &config.budget,
            )?;
            if enlarged != fitt[j] {
                failure = Some(format!(
                    "j={j}: with extra generator {} Fitt_{j} = {enlarged}, without {}; reproduce: {}",
                    ideal.format_monomial(&extra),
                    fitt[j],
                    reproduce_command(&ideal, j)
                ));
                break;
            }
        }
        let inst = format!(
            "{}; extra: {}",
            describe_ideal(&ideal),
            ideal.format_monomial(&extra)
        );
        out.reports.push(FittingReport::from_check(
            PRESENTATION_INVARIANCE,
            inst,
            failure,
        ));

        let local = ideal.localize(keep);
        let mut failure = None;
        for (j, f) in fitt.iter().enumerate() {
            let direct = fitting_ideal(&local, j, &config.budget)?;
            if direct != f.localize(keep) {
                failure = Some(format!(
                    "j={j}: Fitt_{j} of the localization is {direct}, localization of Fitt_{j} is {}; reproduce: {}",
                    f.localize(keep),
                    reproduce_command(&ideal, j)
                ));
                break;
            }
        }
        let kept: Vec<&str> = (0..n)
            .filter(|v| keep >> v & 1 == 1)
            .map(|v| ring.names()[v].as_str())
            .collect();
        let inst = format!("{}; keep: {}", describe_ideal(&ideal), kept.join(","));
        out.reports.push(FittingReport::from_check(
            LOCALIZATION_COMMUTES,
            inst,
            failure,
        ));
    }
    Ok(())
}

/// Antichains of nonempty subsets of `nvars` variables with at most
/// `max_size` members, in lexicographic order of their mask lists; `None`
/// once more than `limit` have been produced.
pub fn squarefree_antichains(nvars: usize, max_size: usize, limit: u64) -> Option<Vec<Vec<u64>>> {
    fn go(
        last: u64,
        top: u64,
        max_size: usize,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        limit: u64,
    ) -> bool {
        for s in last + 1..top {
            if cur.iter().any(|&t| t & s == t || t & s == s) {
                continue;
            }
            cur.push(s);
            out.push(cur.clone());
            if out.len() as u64 > limit {
                return false;
            }
            if cur.len() < max_size && !go(s, top, max_size, cur, out, limit) {
                return false;
            }
            cur.pop();
        }
        true
    }
    let mut out = Vec::new();
    go(0, 1u64 << nvars, max_size, &mut Vec::new(), &mut out, limit).then_some(out)
}

fn random_antichain(rng: &mut impl Rng, nvars: usize, max_size: usize) -> Vec<u64> {
    let count = rng.gen_range(1..=max_size);
    let top = 1u64 << nvars;
    let mut chosen: Vec<u64> = Vec::new();
    for _ in 0..1000 {
        if chosen.len() == count {
            break;
        }
        let s = rng.gen_range(1..top);
        if chosen.iter().all(|&t| t & s != t && t & s != s) {
            chosen.push(s);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Squarefree ideals on `max_vars` variables with at most `max_gens`
/// generators: every antichain when there are at most `budget.max_search`
/// of them, otherwise `samples` seeded random ones.
fn squarefree(config: &SuiteConfig, out: &mut SuiteOutcome, structural: bool) -> Result<()> {
    let ring = PolynomialRing::standard(config.max_vars);
    let families =
        match squarefree_antichains(config.max_vars, config.max_gens, config.budget.max_search) {
            Some(all) => all,
            None => {
                out.notes.push(format!(
                    "more than {} antichains; using {} seeded samples",
                    config.budget.max_search, config.samples
                ));
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                (0..config.samples)
                    .map(|_| random_antichain(&mut rng, config.max_vars, config.max_gens))
                    .collect()
            }
        };
    for family in families {
        let ideal = MonomialIdeal::new(&ring, family.into_iter().map(Monomial::from_mask));
        let grade = ideal.grade().expect("proper ideal");
        out.instances += 1;
        for j in (2..=3).filter(|&j| j <= grade) {
            if structural {
                out.reports
                    .extend(structure_check(&ideal, j, &config.budget)?);
            } else {
                out.reports
                    .push(verify_squarefree_equivalence(&ideal, j, &config.budget)?);
            }
        }
    }
    Ok(())
}

/// Counts of squarefree ideals per condition pattern, for reporting.
pub fn squarefree_patterns(
    nvars: usize,
    max_gens: usize,
    j: usize,
    budget: &Budget,
) -> Result<Vec<((bool, bool, bool), usize)>> {
    let ring = PolynomialRing::standard(nvars);
    let families = squarefree_antichains(nvars, max_gens, budget.max_search).ok_or_else(|| {
        Error::BudgetExceeded {
            what: "squarefree antichains".into(),
            needed: budget.max_search.saturating_add(1),
            budget: budget.max_search,
        }
    })?;
    let mut counts: Vec<((bool, bool, bool), usize)> = Vec::new();
    for family in families {
        let ideal = MonomialIdeal::new(&ring, family.into_iter().map(Monomial::from_mask));
        if ideal.grade().expect("proper ideal") < j {
            continue;
        }
        let key = classify_squarefree(&ideal, j, budget)?.as_tuple();
        match counts.iter_mut().find(|(k, _)| *k == key) {
            Some((_, c)) => *c += 1,
            None => counts.push((key, 1)),
        }
    }
    counts.sort();
    Ok(counts)
}

fn graph_instance(g: &Graph, j: usize) -> String {
    format!("{g}; j={j}")
}

fn edge_formula(config: &SuiteConfig, out: &mut SuiteOutcome) -> Result<()> {
    for n in 2..=config.graph_vertex_bound {
        for g in isomorphism_classes(n) {
            out.instances += 1;
            let ideal = g.edge_ideal();
            let maximal = MonomialIdeal::maximal(ideal.ring());
            for j in 0..g.num_edges() {
                let oracle = fitting_ideal(&ideal, j, &config.budget)?.radical();
                let formula = radical_fitting_formula(&g, j, &config.budget)?;
                let reproduce = reproduce_command(&ideal, j);
                let failure = (formula != oracle).then(|| {
                    format!("formula gives {formula}, radical of minors is {oracle}; reproduce: {reproduce}")
                });
                out.reports.push(FittingReport::from_check(
                    EDGE_FORMULA,
                    graph_instance(&g, j),
                    failure,
                ));

                let c = maximal_criterion(&g, j);
                let actual = oracle == maximal;
                let failure = (c.maximal != actual).then(|| {
                    format!(
                        "vertex criterion says {}, radical is {oracle}; reproduce: {reproduce}",
                        c.maximal
                    )
                });
                out.reports.push(FittingReport::from_check(
                    VERTEX_CRITERION,
                    graph_instance(&g, j),
                    failure,
                ));
                let failure = (c.neighbourhood_criterion != actual).then(|| {
                    format!(
                        "neighbourhood criterion says {}, radical is {oracle}; reproduce: {reproduce}",
                        c.neighbourhood_criterion
                    )
                });
                out.reports.push(FittingReport::from_check(
                    NEIGHBOURHOOD_CRITERION,
                    graph_instance(&g, j),
                    failure,
                ));
            }
        }
    }
    Ok(())
}

/// `rad Fitt_j(I(K_n))` is `I(K_n)` for `1 <= j <= n-2`, the maximal ideal
/// for `n-1 <= j < C(n,2)` and the unit ideal from `C(n,2)` on.
fn complete_graph(config: &SuiteConfig, out: &mut SuiteOutcome) -> Result<()> {
    for n in 3..=config.graph_vertex_bound {
        let g = Graph::complete(n);
        let ideal = g.edge_ideal();
        let maximal = MonomialIdeal::maximal(ideal.ring());
        let unit = MonomialIdeal::unit(ideal.ring());
        let m = g.num_edges();
        out.instances += 1;
        for j in 1..=m {
            let expected = if j + 2 <= n {
                &ideal
            } else if j < m {
                &maximal
            } else {
                &unit
            };
            let actual = fitting_ideal(&ideal, j, &config.budget)?.radical();
            let failure = (actual != *expected).then(|| {
                format!(
                    "expected {expected}, got {actual}; reproduce: {}",
                    reproduce_command(&ideal, j)
                )
            });
            out.reports.push(FittingReport::from_check(
                COMPLETE_GRAPH_TABLE,
                format!("K_{n}; j={j}"),
                failure,
            ));
            if j == n - 1 && actual == maximal {
                out.notes.push(format!(
                    "K_{n}, j={}: the radical is already the maximal ideal; I(K_n) holds only up to j = n-2",
                    n - 1
                ));
            }
        }
    }
    Ok(())
}

fn sg_reproduce(verb: &str, ideal: &RelativeIdeal) -> String {
    let gens: Vec<String> = ideal
        .semigroup()
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect();
    let elems: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    format!(
        "fitt sg {verb} --gens {} --ideal-gens {}",
        gens.join(","),
        elems.join(",")
    )
}

fn sg_instance(ideal: &RelativeIdeal) -> String {
    format!("S = {}; I = {ideal}", ideal.semigroup())
}

/// Every numerical semigroup of multiplicity `2..=max_m` with conductor at
/// most `max_c`, ordered by multiplicity and Apéry set.
pub fn semigroups_with_small_multiplicity(max_m: i64, max_c: i64) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        // Apéry elements w_r ≡ r (mod m) with m < w_r <= max_c + m - 1.
        let choices = (1..m).map(|r| {
            (1..)
                .map(move |k| k * m + r)
                .take_while(move |&w| w < max_c + m)
        });
        for tuple in choices.multi_cartesian_product() {
            let mut gens = vec![m];
            gens.extend(&tuple);
            let Ok(s) = NumericalSemigroup::new(&gens) else {
                continue;
            };
            let ap = s.apery();
            if s.multiplicity() == m
                && (1..m).all(|r| ap[r as usize] == gens[r as usize])
                && s.conductor() <= max_c
            {
                out.push(s);
            }
        }
    }
    out.sort_by(|a, b| (a.multiplicity(), a.apery()).cmp(&(b.multiplicity(), b.apery())));
    out
}

fn semigroup(config: &SuiteConfig, out: &mut SuiteOutcome) -> Result<()> {
    let b = &config.budget;
    let small = semigroups_with_small_multiplicity(TWO_GEN_MAX_MULTIPLICITY, TWO_GEN_MAX_CONDUCTOR);

    // Two-generated ideals: Fitt_1 equals the trace.
    for s in &small {
        let c = s.conductor();
        let elems: Vec<i64> = s.elements_in(1, c + 4).collect();
        for (x, &a) in elems.iter().enumerate() {
            for &bb in &elems[x + 1..] {
                if s.contains(bb - a) {
                    continue;
                }
                let ideal = RelativeIdeal::new(s, [a, bb])?;
                out.instances += 1;
                let fitt = fitting1_series(&ideal, MinorRoute::Auto, b)?;
                let trace = ideal.trace();
                let failure = (!fitt.equals(&trace)?).then(|| {
                    format!(
                        "Fitt_1 = {}, trace = {trace}; reproduce: {}",
                        fitt.ideal,
                        sg_reproduce("fitt", &ideal)
                    )
                });
                out.reports.push(FittingReport::from_check(
                    TWO_GENERATED_TRACE,
                    sg_instance(&ideal),
                    failure,
                ));
            }
        }
    }

    // Seeded ideals with up to 4 generators: tr(I)^{m-1} ⊆ Fitt_1(I), and
    // the colon against a second ideal is the largest solution.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.samples {
        let s = &small[rng.gen_range(0..small.len())];
        let ideal = random_semigroup_ideal(&mut rng, s, 4);
        let other = random_semigroup_ideal(&mut rng, s, 3);
        out.instances += 1;

        let fitt = fitting1_series(&ideal, MinorRoute::Auto, b)?;
        let power = ideal.trace().power(ideal.num_gens() as u32 - 1);
        let failure = (!power.is_subset_of(&fitt.ideal)).then(|| {
            format!(
                "tr(I)^{} = {power} not in Fitt_1 = {}; reproduce: {}",
                ideal.num_gens() - 1,
                fitt.ideal,
                sg_reproduce("fitt", &ideal)
            )
        });
        out.reports.push(FittingReport::from_check(
            TRACE_POWER_CONTAINMENT,
            sg_instance(&ideal),
            failure,
        ));

        let q = ideal.colon(&other)?;
        let lo = ideal.min() - other.gens().last().expect("nonempty") - 2;
        let hi = ideal.tail_start() - other.min() + 2;
        let moves_in = |z: i64| other.gens().iter().all(|&f| ideal.contains(z + f));
        let failure = (lo..=hi).find(|&z| q.contains(z) != moves_in(z)).map(|z| {
            format!(
                "z = {z}: in colon {}, z + F in E {}",
                q.contains(z),
                moves_in(z)
            )
        });
        let inst = format!("S = {s}; E = {ideal}; F = {other}");
        out.reports
            .push(FittingReport::from_check(COLON_MAXIMALITY, inst, failure));
    }

    // <2, 2k+1>: Fitt_1(I) = I exactly when tr(I) = I, for the listed ideals.
    for k in 1..=MULTIPLICITY_TWO_MAX_K {
        let s = NumericalSemigroup::new(&[2, 2 * k + 1])?;
        let c = s.conductor();
        let elems: Vec<i64> = s.elements_in(1, c + 2).collect();
        let mut fixed = Vec::new();
        let mut candidates: Vec<RelativeIdeal> = elems
            .iter()
            .map(|&a| RelativeIdeal::principal(&s, a))
            .collect();
        for (x, &a) in elems.iter().enumerate() {
            for &bb in &elems[x + 1..] {
                if !s.contains(bb - a) {
                    candidates.push(RelativeIdeal::new(&s, [a, bb])?);
                }
            }
        }
        for ideal in candidates {
            out.instances += 1;
            let fitt = fitting1_series(&ideal, MinorRoute::Auto, b)?;
            let by_fitting = fitt.equals(&ideal)?;
            let by_trace = ideal.trace() == ideal;
            if by_fitting {
                fixed.push(ideal.gens().to_vec());
            }
            let failure = (by_fitting != by_trace).then(|| {
                format!(
                    "Fitt_1 = I is {by_fitting} but tr(I) = I is {by_trace}; reproduce: {}",
                    sg_reproduce("fitt", &ideal)
                )
            });
            out.reports.push(FittingReport::from_check(
                MULTIPLICITY_TWO_FIXED,
                sg_instance(&ideal),
                failure,
            ));
        }
        let expected: Vec<Vec<i64>> = (1..=k)
            .rev()
            .map(|i| vec![2 * (k - i + 1), 2 * k + 1])
            .collect();
        fixed.sort();
        let failure =
            (fixed != expected).then(|| format!("fixed ideals {fixed:?}, expected {expected:?}"));
        out.reports.push(FittingReport::from_check(
            MULTIPLICITY_TWO_FIXED,
            format!("S = {s}; all ideals with generators below c + 2"),
            failure,
        ));
    }

    // Symmetric, type 1 and principal canonical ideal coincide.
    for s in semigroups_up_to_genus(GORENSTEIN_MAX_GENUS) {
        out.instances += 1;
        let flags = (
            s.is_symmetric(),
            s.type_() == 1,
            canonical_ideal(&s).is_principal(),
        );
        let failure = !(flags.0 == flags.1 && flags.1 == flags.2);
        out.reports.push(FittingReport::from_check(
            GORENSTEIN_EQUIVALENCE,
            format!("S = {s}"),
            failure.then(|| format!("(symmetric, type 1, principal canonical) = {flags:?}")),
        ));
    }
    Ok(())
}

fn random_semigroup_ideal(
    rng: &mut impl Rng,
    s: &NumericalSemigroup,
    max_gens: usize,
) -> RelativeIdeal {
    let hi = s.conductor() + s.multiplicity() + 4;
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<i64> = (0..count)
        .map(|_| loop {
            let x = rng.gen_range(1..hi);
            if s.contains(x) {
                break x;
            }
        })
        .collect();
    RelativeIdeal::new(s, gens).expect("nonempty")
}

/// `Fitt_1` of `(0, 2i-1)` in `<2, 2k+1>` (shifted into the ring) is
/// `(2(k-i+1), 2k+1)`, computed as a trace and from minors by both routes;
/// and `(12, 13, 14, 15)` in `<4, 5>` is its own `Fitt_1`.
fn semigroup_examples(config: &SuiteConfig, out: &mut SuiteOutcome) -> Result<()> {
    let b = &config.budget;
    for k in 1..=MULTIPLICITY_TWO_MAX_K {
        let s = NumericalSemigroup::new(&[2, 2 * k + 1])?;
        for i in 1..=k {
            let j = RelativeIdeal::new(&s, [0, 2 * i - 1])?;
            let j = j.shift(j.integral_shift());
            let expected = RelativeIdeal::new(&s, [2 * (k - i + 1), 2 * k + 1])?;
            out.instances += 1;
            let inst = format!("S = {s}; I = (0, {}) shifted to {j}", 2 * i - 1);

            let trace = j.trace();
            let failure =
                (trace != expected).then(|| format!("trace {trace}, expected {expected}"));
            out.reports.push(FittingReport::from_check(
                INVERSE_TRACE_TABLE,
                inst.clone(),
                failure,
            ));

            for route in [MinorRoute::Enumerate, MinorRoute::MatrixTree] {
                let fitt = fitting1_series(&j, route, b)?;
                let failure = (!fitt.equals(&expected)?).then(|| {
                    format!(
                        "{route:?}: Fitt_1 = {}, expected {expected}; reproduce: {}",
                        fitt.ideal,
                        sg_reproduce("fitt", &j)
                    )
                });
                out.reports.push(FittingReport::from_check(
                    FITTING_SERIES_TABLE,
                    format!("{inst}; route {route:?}"),
                    failure,
                ));
            }
        }
    }

    let s = NumericalSemigroup::new(&[4, 5])?;
    let ideal = RelativeIdeal::new(&s, [12, 13, 14, 15])?;
    out.instances += 1;
    for route in [MinorRoute::Enumerate, MinorRoute::MatrixTree] {
        let fitt = fitting1_series(&ideal, route, b)?;
        let failure = (!fitt.equals(&ideal)?).then(|| {
            format!(
                "{route:?}: Fitt_1 = {}; reproduce: {}",
                fitt.ideal,
                sg_reproduce("fitt", &ideal)
            )
        });
        out.reports.push(FittingReport::from_check(
            FIXED_FOUR_GENERATED,
            format!("{}; route {route:?}", sg_instance(&ideal)),
            failure,
        ));
    }
    Ok(())
}
