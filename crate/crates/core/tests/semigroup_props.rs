use fitting_core::semigroup::{
    canonical_ideal, fitting1_series, semigroups_up_to_genus, MinorRoute, NumericalSemigroup,
    RelativeIdeal, TruncatedIdeal,
};
use fitting_core::suites::semigroups_with_small_multiplicity;
use fitting_core::Budget;
use proptest::prelude::*;

/// Membership by dynamic programming over sums of generators, up to `limit`.
fn reachable(gens: &[i64], limit: i64) -> Vec<bool> {
    let mut r = vec![false; limit as usize + 1];
    r[0] = true;
    for x in 1..=limit {
        r[x as usize] = gens.iter().any(|&g| g <= x && r[(x - g) as usize]);
    }
    r
}

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..=12, 2..=4)
        .prop_filter_map("gcd > 1", |g| NumericalSemigroup::new(&g).ok())
}

/// A semigroup together with an integral ideal of 1 to `max_gens` elements.
fn with_ideal(max_gens: usize) -> impl Strategy<Value = RelativeIdeal> {
    semigroup().prop_flat_map(move |s| {
        let elems: Vec<i64> = s
            .elements_in(1, s.conductor() + s.multiplicity() + 4)
            .collect();
        prop::collection::vec(prop::sample::select(elems), 1..=max_gens)
            .prop_map(move |g| RelativeIdeal::new(&s, g).unwrap())
    })
}

fn budget() -> Budget {
    Budget::with_minors(2_000_000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn membership_and_invariants_match_dynamic_programming(s in semigroup()) {
        let f = s.frobenius();
        let limit = f + 2 * s.multiplicity() + 2;
        let r = reachable(s.generators(), limit);
        for x in 0..=limit {
            prop_assert_eq!(s.contains(x), r[x as usize], "x = {}", x);
        }
        prop_assert!(f < 0 || !r[f as usize]);
        prop_assert!((f + 1..=limit).all(|x| r[x as usize]));
        prop_assert_eq!(s.genus(), (0..=limit).filter(|&x| !r[x as usize]).count());
        for (res, &w) in s.apery().iter().enumerate() {
            let brute = (0..=limit).find(|&x| r[x as usize] && x.rem_euclid(s.multiplicity()) == res as i64);
            prop_assert_eq!(Some(w), brute);
        }
        prop_assert!(2 * s.genus() as i64 >= s.conductor());
    }

    #[test]
    fn two_generators_closed_forms(a in 2i64..=15, b in 2i64..=15) {
        let Ok(s) = NumericalSemigroup::new(&[a, b]) else { return Ok(()) };
        prop_assert_eq!(s.frobenius(), a * b - a - b);
        prop_assert_eq!(s.genus() as i64, (a - 1) * (b - 1) / 2);
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(s.type_(), 1);
    }

    #[test]
    fn colon_is_the_largest_solution(e in with_ideal(3), k in 0usize..3) {
        let s = e.semigroup().clone();
        let f = RelativeIdeal::new(&s, e.gens().iter().skip(k % e.num_gens()).map(|g| g + 1)).unwrap();
        let q = e.colon(&f).unwrap();
        let lo = e.min() - f.gens().last().unwrap() - 3;
        let hi = e.tail_start() - f.min() + 3;
        for z in lo..=hi {
            let brute = f.gens().iter().all(|&g| e.contains(z + g));
            prop_assert_eq!(q.contains(z), brute, "z = {}", z);
        }
    }

    #[test]
    fn inverse_and_trace_basics(e in with_ideal(4)) {
        let inv = e.inverse();
        prop_assert!(e.product(&inv).unwrap().is_subset_of(&RelativeIdeal::principal(e.semigroup(), 0)));
        let tr = e.trace();
        prop_assert!(tr.is_integral());
        prop_assert_eq!(tr.is_unit(), e.is_principal());
        prop_assert_eq!(e.shift(7).trace(), tr);
    }

    #[test]
    fn two_generated_fitting_ideal_is_the_trace(e in with_ideal(2)) {
        prop_assume!(e.num_gens() == 2);
        let fitt = fitting1_series(&e, MinorRoute::Auto, &budget()).unwrap();
        prop_assert!(fitt.equals(&e.trace()).unwrap());
    }

    #[test]
    fn trace_power_lies_in_the_fitting_ideal(e in with_ideal(4)) {
        prop_assume!(e.num_gens() >= 2);
        let fitt = fitting1_series(&e, MinorRoute::Auto, &budget()).unwrap();
        let power = e.trace().power(e.num_gens() as u32 - 1);
        prop_assert!(power.is_subset_of(&fitt.ideal));
        prop_assert!(fitt.ideal.is_subset_of(&e.trace()));
    }

    #[test]
    fn minor_routes_agree(e in with_ideal(4)) {
        prop_assume!(e.num_gens() >= 2);
        let b = budget();
        let a = fitting1_series(&e, MinorRoute::Enumerate, &b).unwrap();
        let t = fitting1_series(&e, MinorRoute::MatrixTree, &b).unwrap();
        prop_assert_eq!(&a.ideal, &t.ideal);
        prop_assert!(a.equals(&t.ideal).unwrap());
    }

    #[test]
    fn fitting_ideal_is_shift_invariant(e in with_ideal(3), a in 1i64..6) {
        prop_assume!(e.num_gens() >= 2);
        let b = budget();
        let x = fitting1_series(&e, MinorRoute::Auto, &b).unwrap();
        let y = fitting1_series(&e.shift(a * e.semigroup().multiplicity()), MinorRoute::Auto, &b).unwrap();
        prop_assert_eq!(x.ideal, y.ideal);
    }

    #[test]
    fn truncated_spans_of_monomials(e in with_ideal(4), extra in 0i64..10) {
        let s = e.semigroup();
        let bound = e.tail_start() + extra;
        let t = TruncatedIdeal::from_monomials(s, e.gens(), bound);
        for d in 0..bound {
            prop_assert_eq!(t.contains_monomial(d), Some(e.contains(d)), "d = {}", d);
        }
    }
}

#[test]
fn gorenstein_characterisations_agree_up_to_genus_eight() {
    for s in semigroups_up_to_genus(8) {
        let symmetric = s.is_symmetric();
        assert_eq!(symmetric, s.type_() == 1, "{s}");
        assert_eq!(symmetric, canonical_ideal(&s).is_principal(), "{s}");
    }
}

#[test]
fn canonical_ideal_matches_pseudo_frobenius_count() {
    for s in semigroups_up_to_genus(8) {
        assert_eq!(canonical_ideal(&s).num_gens(), s.type_(), "{s}");
    }
}

/// In `<2, 2k+1>` the ideals equal to their own `Fitt_1` are exactly
/// `(2(k-i+1), 2k+1)` for `i = 1..k`, which are also the trace ideals.
#[test]
fn multiplicity_two_fixed_ideals() {
    let b = budget();
    for k in 1..=5i64 {
        let s = NumericalSemigroup::new(&[2, 2 * k + 1]).unwrap();
        let elems: Vec<i64> = s.elements_in(1, s.conductor() + 2).collect();
        let mut fixed = Vec::new();
        for (x, &a) in elems.iter().enumerate() {
            let mut ideals = vec![RelativeIdeal::principal(&s, a)];
            ideals.extend(
                elems[x + 1..]
                    .iter()
                    .filter(|&&c| !s.contains(c - a))
                    .map(|&c| RelativeIdeal::new(&s, [a, c]).unwrap()),
            );
            for i in ideals {
                let by_fitting = fitting1_series(&i, MinorRoute::Auto, &b)
                    .unwrap()
                    .equals(&i)
                    .unwrap();
                assert_eq!(by_fitting, i.trace() == i, "{s} {i}");
                if by_fitting {
                    fixed.push(i.gens().to_vec());
                }
            }
        }
        fixed.sort();
        let expected: Vec<Vec<i64>> = (1..=k).map(|j| vec![2 * j, 2 * k + 1]).collect();
        assert_eq!(fixed, expected, "<2,{}>", 2 * k + 1);
    }
}

#[test]
fn small_multiplicity_enumeration_is_complete() {
    // Cross-check against the genus tree: every semigroup with multiplicity
    // <= 4 and conductor <= 12 has genus <= 12.
    let from_tree: Vec<String> = semigroups_up_to_genus(12)
        .into_iter()
        .filter(|s| (2..=4).contains(&s.multiplicity()) && s.conductor() <= 12)
        .map(|s| s.to_string())
        .collect();
    let mut direct: Vec<String> = semigroups_with_small_multiplicity(4, 12)
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut tree = from_tree;
    tree.sort();
    direct.sort();
    assert_eq!(direct, tree);
}
