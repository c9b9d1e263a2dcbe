use std::fs;
use std::path::Path;

use fitting_core::fitting::verify::classify_squarefree;
use fitting_core::fitting::{describe_ideal, fitting_ideal, fitting_ideals, reproduce_command};
use fitting_core::format::{parse_graph, parse_ideal, parse_integer_list, parse_semigroup_file};
use fitting_core::graph::{
    find_admissible_cover, maximal_criterion, radical_fitting_formula, Graph,
};
use fitting_core::semigroup::{
    conjecture_search, fitting1_series, MinorRoute, NumericalSemigroup, RelativeIdeal,
};
use fitting_core::suites::{run_suite, Suite, SuiteConfig};
use fitting_core::{Budget, Error, MonomialIdeal};
use serde_json::{json, Value};

use crate::args::{
    Cli, Command, IdealInput, Route, SemigroupIdealInput, SemigroupInput, SgCommand, VerifyArgs,
};
use crate::outln;
use crate::report::{self, CliError, Outcome};

pub fn run(cli: Cli, out: &mut String) -> Result<Outcome, CliError> {
    let mut budget = Budget::default();
    if let Some(n) = cli.budget {
        budget.max_minors = n;
    }
    if let Some(n) = cli.max_search {
        budget.max_search = n;
    }
    let json = cli.json;
    match cli.command {
        Command::Compute { input, j } => compute(out, &read_ideal(&input)?, j, &budget, json),
        Command::EdgeRadical { graph, j, check } => {
            let g = parse_graph(&read_file(&graph)?)?;
            edge_radical(out, &g, j, check, &budget, json)
        }
        Command::Classify { input, j } => classify(out, &read_ideal(&input)?, j, &budget, json),
        Command::Verify(args) => verify(out, &args, budget, json),
        Command::Sg(cmd) => semigroup(out, cmd, &budget, json),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read_ideal(input: &IdealInput) -> Result<MonomialIdeal, CliError> {
    if let Some(path) = &input.ideal {
        return Ok(parse_ideal(&read_file(path)?)?);
    }
    let vars = input.vars.as_deref().unwrap_or_default();
    let gens = input.gens.as_deref().unwrap_or_default();
    parse_ideal(&format!("vars: {vars}\ngens: {gens}")).map_err(|e| match e {
        // Map the synthetic two-line file back onto the flags.
        Error::Parse {
            line,
            column,
            message,
        } => {
            let flag = if line == 1 { "--vars" } else { "--gens" };
            let offset = if line == 1 {
                "vars: ".len()
            } else {
                "gens: ".len()
            };
            CliError::Usage(format!(
                "{flag}, column {}: {message}",
                column.saturating_sub(offset)
            ))
        }
        other => other.into(),
    })
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    json!(i.generator_strings())
}

fn compute(
    out: &mut String,
    ideal: &MonomialIdeal,
    j: Option<usize>,
    budget: &Budget,
    json: bool,
) -> Result<Outcome, CliError> {
    let indices: Vec<usize> = match j {
        Some(j) => vec![j],
        None => (0..=ideal.num_gens()).collect(),
    };
    let all = match j {
        Some(j) => vec![(j, fitting_ideal(ideal, j, budget)?)],
        None => indices
            .iter()
            .copied()
            .zip(fitting_ideals(ideal, budget)?)
            .collect(),
    };
    let (height, grade) = match ideal.height_and_grade() {
        Some((h, g)) => (Some(h), Some(g)),
        None => (None, None),
    };
    if json {
        let rows: Vec<Value> = all
            .iter()
            .map(|(j, f)| json!({ "j": j, "gens": ideal_json(f), "radical": ideal_json(&f.radical()) }))
            .collect();
        report::push_json(
            out,
            &json!({
                "vars": ideal.ring().names(),
                "ideal": ideal_json(ideal),
                "num_gens": ideal.num_gens(),
                "height": height,
                "grade": grade,
                "radical": ideal_json(&ideal.radical()),
                "fitting": rows,
            }),
        );
    } else {
        outln!(out, "I = {ideal}");
        outln!(out, "mu(I) = {}", ideal.num_gens());
        if let (Some(h), Some(g)) = (height, grade) {
            outln!(out, "height = {h}, grade = {g}");
        }
        outln!(out, "rad I = {}", ideal.radical());
        for (j, f) in &all {
            outln!(out, "Fitt_{j} = {f}");
            outln!(out, "rad Fitt_{j} = {}", f.radical());
        }
    }
    Ok(Outcome::Ok)
}

fn edge_radical(
    out: &mut String,
    g: &Graph,
    j: Option<usize>,
    check: bool,
    budget: &Budget,
    json: bool,
) -> Result<Outcome, CliError> {
    let m = g.num_edges();
    let ideal = g.edge_ideal();
    let indices: Vec<usize> = match j {
        Some(j) => vec![j],
        None => (0..=m).collect(),
    };
    let mut rows = Vec::new();
    let mut mismatch = None;
    for j in indices {
        let formula = radical_fitting_formula(g, j, budget)?;
        let mut covers = Vec::new();
        if j >= 1 && j < m {
            for u in formula.gens().iter().filter(|u| !ideal.contains(u)) {
                if let Some(c) = find_admissible_cover(g, u.support_mask(), m - j, budget)? {
                    covers.push((ideal.format_monomial(u), c.display(g)));
                }
            }
        }
        let oracle = if check {
            let r = fitting_ideal(&ideal, j, budget)?.radical();
            if r != formula && mismatch.is_none() {
                mismatch = Some(format!(
                    "j={j}: covers give {formula}, minors give {r}; reproduce: {}",
                    reproduce_command(&ideal, j)
                ));
            }
            Some(r)
        } else {
            None
        };
        rows.push((j, formula, covers, oracle, maximal_criterion(g, j).maximal));
    }
    if json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|(j, f, covers, oracle, maximal)| {
                json!({
                    "j": j,
                    "radical": ideal_json(f),
                    "maximal": maximal,
                    "covers": covers.iter().map(|(u, c)| json!({ "monomial": u, "cover": c })).collect::<Vec<_>>(),
                    "minors_radical": oracle.as_ref().map(ideal_json),
                })
            })
            .collect();
        report::push_json(
            out,
            &json!({
                "graph": g.to_string(),
                "edge_ideal": ideal_json(&ideal),
                "cover_number": g.vertex_cover_number(),
                "rows": rows,
                "mismatch": mismatch,
            }),
        );
    } else {
        outln!(out, "G: {g}");
        outln!(out, "I(G) = {ideal}");
        outln!(out, "vertex cover number = {}", g.vertex_cover_number());
        for (j, f, covers, oracle, _) in &rows {
            outln!(out, "rad Fitt_{j} = {f}");
            for (u, c) in covers {
                outln!(out, "  {u}: {c}");
            }
            if let Some(r) = oracle {
                outln!(out, "  from minors: {r}");
            }
        }
        if let Some(w) = &mismatch {
            outln!(out, "MISMATCH {w}");
        }
    }
    Ok(if mismatch.is_some() {
        Outcome::Counterexample
    } else {
        Outcome::Ok
    })
}

fn classify(
    out: &mut String,
    ideal: &MonomialIdeal,
    j: usize,
    budget: &Budget,
    json: bool,
) -> Result<Outcome, CliError> {
    let c = classify_squarefree(ideal, j, budget)?;
    if json {
        report::push_json(
            out,
            &json!({
                "ideal": describe_ideal(ideal),
                "j": j,
                "fitting_equals_ideal": c.fitting_equals_ideal,
                "fitting_squarefree": c.fitting_squarefree,
                "structural": c.structural,
                "agree": c.agree(),
            }),
        );
    } else {
        let structural = if j == 2 {
            "perfect of grade 2"
        } else {
            "complete intersection of the grade"
        };
        outln!(out, "I = {ideal}, j = {j}");
        outln!(out, "Fitt_{} = I: {}", j - 1, c.fitting_equals_ideal);
        outln!(out, "Fitt_{} squarefree: {}", j - 1, c.fitting_squarefree);
        outln!(out, "{structural}: {}", c.structural);
        outln!(out, "conditions agree: {}", c.agree());
    }
    Ok(if c.agree() {
        Outcome::Ok
    } else {
        Outcome::Counterexample
    })
}

fn verify(
    out: &mut String,
    args: &VerifyArgs,
    budget: Budget,
    json: bool,
) -> Result<Outcome, CliError> {
    let suite: Suite = args
        .suite
        .parse()
        .map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let mut config = SuiteConfig::new(suite);
    config.seed = args.seed;
    config.budget = budget;
    if let Some(v) = args.max_vars {
        config.max_vars = v;
    }
    if let Some(v) = args.max_gens {
        config.max_gens = v;
    }
    if let Some(v) = args.max_degree {
        config.max_degree = v;
    }
    if let Some(v) = args.graph_vertices {
        config.graph_vertex_bound = v;
    }
    if let Some(v) = args.samples {
        config.samples = v;
    }
    config
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let outcome = run_suite(&config)?;
    if json {
        report::push_json(out, &serde_json::to_value(&outcome).expect("serializable"));
    } else {
        report::push_suite_table(out, &outcome, args.verbose);
    }
    Ok(if outcome.all_pass() {
        Outcome::Ok
    } else {
        Outcome::Counterexample
    })
}

fn read_semigroup(
    input: &SemigroupInput,
) -> Result<(NumericalSemigroup, Option<RelativeIdeal>), CliError> {
    if let Some(path) = &input.file {
        return Ok(parse_semigroup_file(&read_file(path)?)?);
    }
    let gens = input.gens.as_deref().unwrap_or_default();
    let list = parse_integer_list(gens).map_err(|e| CliError::Usage(format!("--gens: {e}")))?;
    let s = NumericalSemigroup::new(&list).map_err(|e| CliError::Usage(format!("--gens: {e}")))?;
    Ok((s, None))
}

fn read_semigroup_ideal(input: &SemigroupIdealInput) -> Result<RelativeIdeal, CliError> {
    let (s, from_file) = read_semigroup(&input.semigroup)?;
    match (&input.ideal_gens, from_file) {
        (Some(text), _) => {
            let list = parse_integer_list(text)
                .map_err(|e| CliError::Usage(format!("--ideal-gens: {e}")))?;
            RelativeIdeal::new(&s, list).map_err(|e| CliError::Usage(format!("--ideal-gens: {e}")))
        }
        (None, Some(i)) => Ok(i),
        (None, None) => Err(CliError::Usage(
            "an ideal is required: pass --ideal-gens or an `ideal:` line".into(),
        )),
    }
}

fn semigroup(
    out: &mut String,
    cmd: SgCommand,
    budget: &Budget,
    json: bool,
) -> Result<Outcome, CliError> {
    match cmd {
        SgCommand::Invariants(input) => {
            let (s, _) = read_semigroup(&input)?;
            let inv = s.invariants();
            if json {
                report::push_json(
                    out,
                    &json!({
                        "generators": inv.generators,
                        "multiplicity": inv.multiplicity,
                        "frobenius": inv.frobenius,
                        "conductor": inv.conductor,
                        "genus": inv.genus,
                        "gaps": inv.gaps,
                        "apery": inv.apery,
                        "pseudo_frobenius": inv.pseudo_frobenius,
                        "type": inv.type_,
                        "symmetric": inv.symmetric,
                    }),
                );
            } else {
                outln!(out, "S = {s}");
                outln!(out, "multiplicity = {}", inv.multiplicity);
                outln!(out, "Frobenius number = {}", inv.frobenius);
                outln!(out, "conductor = {}", inv.conductor);
                outln!(out, "genus = {}", inv.genus);
                outln!(out, "gaps = {:?}", inv.gaps);
                outln!(out, "Apery set = {:?}", inv.apery);
                outln!(out, "pseudo-Frobenius numbers = {:?}", inv.pseudo_frobenius);
                outln!(out, "type = {}", inv.type_);
                outln!(out, "symmetric = {}", inv.symmetric);
            }
            Ok(Outcome::Ok)
        }
        SgCommand::Fitt { input, route } => {
            let ideal = read_semigroup_ideal(&input)?;
            let shift = ideal.integral_shift();
            let ideal = ideal.shift(shift);
            let route = match route {
                Route::Auto => MinorRoute::Auto,
                Route::Enumerate => MinorRoute::Enumerate,
                Route::MatrixTree => MinorRoute::MatrixTree,
            };
            let fitt = fitting1_series(&ideal, route, budget)?;
            let fixed = fitt.equals(&ideal)?;
            let trace = ideal.trace();
            let equals_trace = fitt.equals(&trace)?;
            if json {
                report::push_json(
                    out,
                    &json!({
                        "semigroup": ideal.semigroup().generators(),
                        "ideal": ideal.gens(),
                        "shift": shift,
                        "fitt1": fitt.ideal.gens(),
                        "route": format!("{:?}", fitt.route),
                        "relations": fitt.num_relations,
                        "fitt1_equals_ideal": fixed,
                        "trace": trace.gens(),
                        "fitt1_equals_trace": equals_trace,
                    }),
                );
            } else {
                outln!(out, "S = {}", ideal.semigroup());
                if shift != 0 {
                    outln!(out, "shifted by {shift} into S");
                }
                outln!(out, "I = {ideal}");
                outln!(
                    out,
                    "Fitt_1(I) = {} ({} relations, {:?} route)",
                    fitt.ideal,
                    fitt.num_relations,
                    fitt.route
                );
                outln!(out, "Fitt_1(I) = I: {fixed}");
                outln!(out, "tr(I) = {trace}");
                outln!(out, "Fitt_1(I) = tr(I): {equals_trace}");
            }
            Ok(Outcome::Ok)
        }
        SgCommand::Trace { input } => {
            let ideal = read_semigroup_ideal(&input)?;
            let inverse = ideal.inverse();
            let trace = ideal.trace();
            if json {
                report::push_json(
                    out,
                    &json!({
                        "semigroup": ideal.semigroup().generators(),
                        "ideal": ideal.gens(),
                        "inverse": inverse.gens(),
                        "trace": trace.gens(),
                    }),
                );
            } else {
                outln!(out, "S = {}", ideal.semigroup());
                outln!(out, "I = {ideal}");
                outln!(out, "I^-1 = {inverse}");
                outln!(out, "tr(I) = {trace}");
            }
            Ok(Outcome::Ok)
        }
        SgCommand::Search { max_genus, verbose } => {
            let r = conjecture_search(max_genus, budget)?;
            let hits: Vec<_> = r.hits().collect();
            let type_two = r.type_two().count();
            let type_two_failures = r.type_two_failures();
            let radical_failures = r.radical_failures();
            if json {
                report::push_json(
                    out,
                    &json!({
                        "max_genus": r.max_genus,
                        "examined": r.examined,
                        "gorenstein": r.gorenstein_skipped,
                        "non_gorenstein": r.entries.len(),
                        "hits": hits,
                        "type_two": type_two,
                        "type_two_failures": type_two_failures,
                        "radical_failures": radical_failures,
                        "skipped": r.skipped,
                    }),
                );
            } else {
                outln!(
                    out,
                    "examined {} semigroups of genus <= {}: {} Gorenstein, {} not",
                    r.examined,
                    r.max_genus,
                    r.gorenstein_skipped,
                    r.entries.len()
                );
                if verbose {
                    for e in &r.entries {
                        outln!(
                            out,
                            "  {:?} type {}: omega = {:?}, Fitt_1(omega) = {:?}{}",
                            e.semigroup,
                            e.type_,
                            e.omega_gens,
                            e.fitt1_gens,
                            if e.hit { "  HIT" } else { "" }
                        );
                    }
                }
                outln!(out, "{} hits", hits.len());
                for e in &hits {
                    outln!(
                        out,
                        "HIT S = {:?}: Fitt_1(omega) = {:?} is a shift of omega = {:?}",
                        e.semigroup,
                        e.fitt1_gens,
                        e.omega_gens
                    );
                }
                outln!(
                    out,
                    "type 2: {type_two} semigroups, Fitt_1(omega) = tr(omega) fails on {}",
                    type_two_failures.len()
                );
                for e in &type_two_failures {
                    outln!(
                        out,
                        "FAIL type 2 S = {:?}: Fitt_1(omega) = {:?}",
                        e.semigroup,
                        e.fitt1_gens
                    );
                }
                for e in &radical_failures {
                    outln!(out, "FAIL radicals differ for S = {:?}", e.semigroup);
                }
                for (s, why) in &r.skipped {
                    outln!(out, "skipped {s:?}: {why}");
                }
            }
            let clean =
                hits.is_empty() && type_two_failures.is_empty() && radical_failures.is_empty();
            if !r.skipped.is_empty() && clean {
                return Ok(Outcome::Budget);
            }
            Ok(if clean {
                Outcome::Ok
            } else {
                Outcome::Counterexample
            })
        }
    }
}
