use super::ideal::{fitting_ideal, fitting_ideals};
use super::report::{describe_ideal, reproduce_command, FittingReport};
use crate::error::{Budget, Error, Result};
use crate::ideal::MonomialIdeal;

pub const POWER_CONTAINMENT: &str = "power-containment";
pub const REGULAR_SEQUENCE_EQUALITY: &str = "regular-sequence-equality";
pub const FITTING_CHAIN: &str = "fitting-chain";
pub const GRADE_CONTAINMENT: &str = "grade-containment";
pub const RADICAL_BELOW_GRADE: &str = "radical-below-grade";
pub const RADICAL_BELOW_HEIGHT: &str = "radical-below-height";
pub const RADICAL_OF_RADICAL: &str = "radical-of-radical";
pub const HILBERT_BURCH: &str = "hilbert-burch";
pub const HILBERT_BURCH_CONVERSE: &str = "hilbert-burch-converse";
pub const UNMIXED_WHEN_EQUAL: &str = "unmixed-when-fitting-equal";
pub const LOCAL_COMPLETE_INTERSECTION: &str = "local-complete-intersection";
pub const SQUAREFREE_EQUIVALENCE: &str = "squarefree-equivalence";

fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::PreconditionViolated(format!(
            "{ideal} must be proper and nonzero"
        )));
    }
    Ok(())
}

fn vacuous(instance: String, holds: bool) -> String {
    if holds {
        instance
    } else {
        format!("{instance} [hypothesis not met]")
    }
}

/// Powers, chain and grade containments of the Fitting ideals of `ideal`,
/// plus the radical equality below the grade.
pub fn verify_containment(ideal: &MonomialIdeal, budget: &Budget) -> Result<Vec<FittingReport>> {
    require_proper_nonzero(ideal)?;
    let fitt = fitting_ideals(ideal, budget)?;
    let m = ideal.num_gens();
    let inst = describe_ideal(ideal);
    let mut out = Vec::new();

    let powers: Vec<MonomialIdeal> = (0..=m).map(|j| ideal.power((m - j) as u32)).collect();
    let failure = (1..=m)
        .find(|&j| !powers[j].is_subset_of(&fitt[j]))
        .map(|j| {
            format!(
                "j={j}: I^{} = {} not in Fitt_{j} = {}; reproduce: {}",
                m - j,
                powers[j],
                fitt[j],
                reproduce_command(ideal, j)
            )
        });
    out.push(FittingReport::from_check(
        POWER_CONTAINMENT,
        inst.clone(),
        failure,
    ));

    let regular = ideal.is_regular_sequence();
    let failure = if regular {
        (1..=m).find(|&j| powers[j] != fitt[j]).map(|j| {
            format!(
                "j={j}: Fitt_{j} = {} but I^{} = {}; reproduce: {}",
                fitt[j],
                m - j,
                powers[j],
                reproduce_command(ideal, j)
            )
        })
    } else {
        None
    };
    out.push(FittingReport::from_check(
        REGULAR_SEQUENCE_EQUALITY,
        vacuous(inst.clone(), regular),
        failure,
    ));

    let failure = (0..m)
        .find(|&j| !fitt[j].is_subset_of(&fitt[j + 1]))
        .map(|j| {
            format!(
                "Fitt_{j} = {} not in Fitt_{} = {}",
                fitt[j],
                j + 1,
                fitt[j + 1]
            )
        })
        .or_else(|| {
            (!fitt[m].is_unit()).then(|| format!("Fitt_{m} = {} is not the unit ideal", fitt[m]))
        });
    out.push(FittingReport::from_check(
        FITTING_CHAIN,
        inst.clone(),
        failure,
    ));

    let grade = ideal.grade().expect("proper ideal");
    let j = grade - 1;
    let failure = (!fitt[j].is_subset_of(ideal)).then(|| {
        format!(
            "grade {grade}: Fitt_{j} = {} not in I; reproduce: {}",
            fitt[j],
            reproduce_command(ideal, j)
        )
    });
    out.push(FittingReport::from_check(
        GRADE_CONTAINMENT,
        inst.clone(),
        failure,
    ));

    let rad = ideal.radical();
    let failure = (1..grade).find(|&i| fitt[i].radical() != rad).map(|i| {
        format!(
            "i={i}: rad Fitt_{i} = {} but rad I = {rad}; reproduce: {}",
            fitt[i].radical(),
            reproduce_command(ideal, i)
        )
    });
    out.push(FittingReport::from_check(
        RADICAL_BELOW_GRADE,
        vacuous(inst, grade >= 2),
        failure,
    ));
    Ok(out)
}

/// `rad Fitt_j(I) = rad I = rad Fitt_j(rad I)` for `1 <= j < height(I)`.
pub fn verify_radical(ideal: &MonomialIdeal, budget: &Budget) -> Result<Vec<FittingReport>> {
    require_proper_nonzero(ideal)?;
    let h = ideal.height().expect("proper ideal");
    let inst = vacuous(describe_ideal(ideal), h >= 2);
    let rad = ideal.radical();
    let mut below = None;
    let mut of_radical = None;
    for j in 1..h {
        let f = fitting_ideal(ideal, j, budget)?.radical();
        if below.is_none() && f != rad {
            below = Some(format!(
                "j={j}: rad Fitt_{j} = {f} but rad I = {rad}; reproduce: {}",
                reproduce_command(ideal, j)
            ));
        }
        let g = fitting_ideal(&rad, j, budget)?.radical();
        if of_radical.is_none() && f != g {
            of_radical = Some(format!(
                "j={j}: rad Fitt_{j}(I) = {f} but rad Fitt_{j}(rad I) = {g}; reproduce: {}",
                reproduce_command(ideal, j)
            ));
        }
    }
    Ok(vec![
        FittingReport::from_check(RADICAL_BELOW_HEIGHT, inst.clone(), below),
        FittingReport::from_check(RADICAL_OF_RADICAL, inst, of_radical),
    ])
}

/// The three conditions compared for a squarefree ideal of grade `>= j >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquarefreeClassification {
    /// `Fitt_{j-1}(I) = I`.
    pub fitting_equals_ideal: bool,
    /// `Fitt_{j-1}(I)` is squarefree.
    pub fitting_squarefree: bool,
    /// `j = 2`: perfect of grade 2; `j > 2`: a regular sequence of length `j`.
    pub structural: bool,
}

impl SquarefreeClassification {
    pub fn as_tuple(&self) -> (bool, bool, bool) {
        (
            self.fitting_equals_ideal,
            self.fitting_squarefree,
            self.structural,
        )
    }

    pub fn agree(&self) -> bool {
        self.fitting_equals_ideal == self.fitting_squarefree
            && self.fitting_squarefree == self.structural
    }
}

fn require_squarefree_grade(ideal: &MonomialIdeal, j: usize) -> Result<usize> {
    require_proper_nonzero(ideal)?;
    if !ideal.is_squarefree() {
        return Err(Error::PreconditionViolated(format!(
            "{ideal} is not squarefree"
        )));
    }
    let grade = ideal.grade().expect("proper ideal");
    if j < 2 || grade < j {
        return Err(Error::PreconditionViolated(format!(
            "need grade(I) >= j >= 2, got grade {grade} and j = {j}"
        )));
    }
    Ok(grade)
}

pub fn classify_squarefree(
    ideal: &MonomialIdeal,
    j: usize,
    budget: &Budget,
) -> Result<SquarefreeClassification> {
    require_squarefree_grade(ideal, j)?;
    let fitt = fitting_ideal(ideal, j - 1, budget)?;
    let structural = if j == 2 {
        ideal.is_perfect_grade2(budget)?
    } else {
        ideal.is_regular_sequence() && ideal.num_gens() == j
    };
    Ok(SquarefreeClassification {
        fitting_equals_ideal: fitt == *ideal,
        fitting_squarefree: fitt.is_squarefree(),
        structural,
    })
}

/// Report form of [`classify_squarefree`]: fails when the conditions disagree.
pub fn verify_squarefree_equivalence(
    ideal: &MonomialIdeal,
    j: usize,
    budget: &Budget,
) -> Result<FittingReport> {
    let c = classify_squarefree(ideal, j, budget)?;
    let inst = format!("{}; j={j}", describe_ideal(ideal));
    let failure = (!c.agree()).then(|| {
        format!(
            "conditions (fitting = I, fitting squarefree, structural) = {:?}; reproduce: {}",
            c.as_tuple(),
            reproduce_command(ideal, j - 1)
        )
    });
    Ok(FittingReport::from_check(
        SQUAREFREE_EQUIVALENCE,
        inst,
        failure,
    ))
}

/// `grade(I) >= 2` and `Fitt_1(I) = I` force height 2 and `pd(S/I) = 2`.
/// Works for any monomial ideal; pass `fitt1` when it is already known.
pub fn verify_hilbert_burch_converse(
    ideal: &MonomialIdeal,
    fitt1: Option<&MonomialIdeal>,
    budget: &Budget,
) -> Result<FittingReport> {
    require_proper_nonzero(ideal)?;
    let grade = ideal.grade().expect("proper ideal");
    let inst = describe_ideal(ideal);
    if grade < 2 {
        return Ok(FittingReport::pass(
            HILBERT_BURCH_CONVERSE,
            vacuous(inst, false),
        ));
    }
    let computed;
    let fitt1 = match fitt1 {
        Some(f) => f,
        None => {
            computed = fitting_ideal(ideal, 1, budget)?;
            &computed
        }
    };
    if fitt1 != ideal {
        return Ok(FittingReport::pass(
            HILBERT_BURCH_CONVERSE,
            vacuous(inst, false),
        ));
    }
    let h = ideal.height().expect("proper ideal");
    let pd = ideal.projective_dimension(budget)?;
    let failure = (h != 2 || pd != 2).then(|| {
        format!(
            "Fitt_1 = I but height {h}, pd(S/I) {pd}; reproduce: {}",
            reproduce_command(ideal, 1)
        )
    });
    Ok(FittingReport::from_check(
        HILBERT_BURCH_CONVERSE,
        inst,
        failure,
    ))
}

/// Perfect ideals of grade 2 satisfy `Fitt_1(I) = I`.
pub fn verify_hilbert_burch(ideal: &MonomialIdeal, budget: &Budget) -> Result<FittingReport> {
    require_proper_nonzero(ideal)?;
    let inst = describe_ideal(ideal);
    if !ideal.is_perfect_grade2(budget)? {
        return Ok(FittingReport::pass(HILBERT_BURCH, vacuous(inst, false)));
    }
    let f = fitting_ideal(ideal, 1, budget)?;
    let failure = (f != *ideal).then(|| {
        format!(
            "perfect of grade 2 but Fitt_1 = {f}; reproduce: {}",
            reproduce_command(ideal, 1)
        )
    });
    Ok(FittingReport::from_check(HILBERT_BURCH, inst, failure))
}

/// Structural consequences of `Fitt_{j-1}(I) = I` for a radical ideal of
/// grade `>= j >= 2`, and the local complete intersection criterion for it.
pub fn structure_check(
    ideal: &MonomialIdeal,
    j: usize,
    budget: &Budget,
) -> Result<Vec<FittingReport>> {
    let grade = require_squarefree_grade(ideal, j)?;
    let nv = ideal.ring().nvars();
    if nv > 24 {
        return Err(Error::BudgetExceeded {
            what: "monomial primes over all variable subsets".into(),
            needed: 1u64 << nv.min(63),
            budget: 1 << 24,
        });
    }
    let inst = format!("{}; j={j}", describe_ideal(ideal));
    let fitt = fitting_ideal(ideal, j - 1, budget)?;
    let equal = fitt == *ideal;
    let mut out = Vec::new();

    if j == 2 {
        out.push(verify_hilbert_burch_converse(ideal, Some(&fitt), budget)?);
    }

    let primes = ideal.minimal_primes();
    let failure = if equal {
        if !ideal.is_unmixed() || grade != j {
            Some(format!(
                "Fitt_{} = I but unmixed={} grade={grade}",
                j - 1,
                ideal.is_unmixed()
            ))
        } else {
            primes
                .iter()
                .map(|&p| (p, ideal.localize(p).num_gens()))
                .find(|&(_, mu)| mu != j)
                .map(|(p, mu)| {
                    format!(
                        "localization at {} needs {mu} generators",
                        MonomialIdeal::prime(ideal.ring(), p)
                    )
                })
        }
    } else {
        None
    };
    out.push(FittingReport::from_check(
        UNMIXED_WHEN_EQUAL,
        vacuous(inst.clone(), equal),
        failure,
    ));

    let all = ideal.ring().all_vars_mask();
    let hypothesis = grade == j
        && (0..=all)
            .filter(|&s| primes.iter().any(|&p| p & s == p))
            .all(|s| ideal.localize(s).num_gens() == j);
    let failure = (hypothesis && !equal).then(|| {
        format!(
            "locally {j}-generated of grade {j} but Fitt_{} = {fitt}; reproduce: {}",
            j - 1,
            reproduce_command(ideal, j - 1)
        )
    });
    out.push(FittingReport::from_check(
        LOCAL_COMPLETE_INTERSECTION,
        vacuous(inst, hypothesis),
        failure,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_monomial;
    use crate::ideal::PolynomialRing;

    fn ideal(vars: &[&str], gens: &[&str]) -> MonomialIdeal {
        let r = PolynomialRing::new(vars.iter().copied()).unwrap();
        let g: Vec<_> = gens
            .iter()
            .map(|s| parse_monomial(s, r.names()).unwrap())
            .collect();
        MonomialIdeal::new(&r, g)
    }

    fn all_pass(reports: &[FittingReport]) -> bool {
        reports.iter().all(|r| r.pass)
    }

    #[test]
    fn containment_examples() {
        let b = Budget::default();
        let m = ideal(&["x", "y", "z"], &["x", "y", "z"]);
        let r = verify_containment(&m, &b).unwrap();
        assert!(all_pass(&r));
        assert!(!r[1].instance.contains("not met"));
        let tri = ideal(&["x", "y", "z"], &["x*y", "x*z", "y*z"]);
        assert!(all_pass(&verify_containment(&tri, &b).unwrap()));
        let sq = ideal(&["x", "y"], &["x^2", "y^2"]);
        assert!(all_pass(&verify_containment(&sq, &b).unwrap()));
        assert_eq!(fitting_ideal(&sq, 1, &b).unwrap(), sq);
    }

    #[test]
    fn radical_examples() {
        let b = Budget::default();
        let sq = ideal(&["x", "y"], &["x^2", "y^2"]);
        assert!(all_pass(&verify_radical(&sq, &b).unwrap()));
        assert_eq!(
            fitting_ideal(&sq, 1, &b).unwrap().radical(),
            ideal(&["x", "y"], &["x", "y"])
        );
        let star = ideal(&["x", "y", "z"], &["x*y", "x*z"]);
        let r = verify_radical(&star, &b).unwrap();
        assert!(all_pass(&r) && r[0].instance.contains("not met"));
        let v = ["a", "b", "c", "d"];
        let k4 = ideal(&v, &["a*b", "a*c", "a*d", "b*c", "b*d", "c*d"]);
        assert!(all_pass(&verify_radical(&k4, &b).unwrap()));
        for j in 1..=2 {
            assert_eq!(fitting_ideal(&k4, j, &b).unwrap().radical(), k4);
        }
    }

    #[test]
    fn squarefree_classification() {
        let b = Budget::default();
        let v = ["x1", "x2", "x3", "x4", "x5"];
        let c4 = ideal(&v[..4], &["x1*x2", "x2*x3", "x3*x4", "x1*x4"]);
        assert_eq!(
            classify_squarefree(&c4, 2, &b).unwrap().as_tuple(),
            (false, false, false)
        );
        let tri = ideal(&["x", "y", "z"], &["x*y", "x*z", "y*z"]);
        assert_eq!(
            classify_squarefree(&tri, 2, &b).unwrap().as_tuple(),
            (true, true, true)
        );
        let reg = ideal(&["x", "y", "z", "w", "u", "v"], &["x*y", "z*w", "u*v"]);
        assert_eq!(
            classify_squarefree(&reg, 3, &b).unwrap().as_tuple(),
            (true, true, true)
        );
        let c5 = ideal(&v, &["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"]);
        assert_eq!(
            classify_squarefree(&c5, 2, &b).unwrap().as_tuple(),
            (false, false, false)
        );
    }

    #[test]
    fn classification_preconditions() {
        let b = Budget::default();
        let sq = ideal(&["x", "y"], &["x^2", "y"]);
        assert!(matches!(
            classify_squarefree(&sq, 2, &b),
            Err(Error::PreconditionViolated(_))
        ));
        let star = ideal(&["x", "y", "z"], &["x*y", "x*z"]);
        assert!(matches!(
            classify_squarefree(&star, 2, &b),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn structure_examples() {
        let b = Budget::default();
        let tri = ideal(&["x", "y", "z"], &["x*y", "x*z", "y*z"]);
        let r = structure_check(&tri, 2, &b).unwrap();
        assert!(all_pass(&r));
        assert_eq!(r[0].statement, HILBERT_BURCH_CONVERSE);
        assert!(!r[0].instance.contains("not met"));

        let reg = ideal(&["x", "y", "z", "w", "u", "v"], &["x*y", "z*w", "u*v"]);
        assert_eq!(reg.minimal_primes().len(), 8);
        let r = structure_check(&reg, 3, &b).unwrap();
        assert!(all_pass(&r));
        assert!(!r[0].instance.contains("not met"));

        let xy = ideal(&["x", "y"], &["x", "y"]);
        let r = structure_check(&xy, 2, &b).unwrap();
        assert!(all_pass(&r));
        let lci = r
            .iter()
            .find(|r| r.statement == LOCAL_COMPLETE_INTERSECTION)
            .unwrap();
        assert!(!lci.instance.contains("not met"));
    }

    #[test]
    fn hilbert_burch_on_the_triangle() {
        let b = Budget::default();
        let tri = ideal(&["x", "y", "z"], &["x*y", "x*z", "y*z"]);
        let r = verify_hilbert_burch(&tri, &b).unwrap();
        assert!(r.pass && !r.instance.contains("not met"));
    }
}
