use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fitting_core::fitting::{fitting_ideal_of_generators, PresentationKind};
use fitting_core::format::parse_ideal;
use fitting_core::graph::{radical_fitting_formula, Graph};
use fitting_core::ideal::betti_table;
use fitting_core::semigroup::{
    canonical_ideal, fitting1_series, semigroups_up_to_genus, MinorRoute, NumericalSemigroup,
    RelativeIdeal,
};
use fitting_core::{fitting_ideal, Budget, MonomialIdeal, PolynomialRing};

fn fitting_ideals(c: &mut Criterion) {
    let b = Budget::unlimited();
    let mut group = c.benchmark_group("fitting_ideal");
    for n in [3, 4, 5] {
        let m = MonomialIdeal::maximal(&PolynomialRing::standard(n));
        group.bench_with_input(BenchmarkId::new("maximal_j1", n), &m, |bch, m| {
            bch.iter(|| fitting_ideal(black_box(m), 1, &b).unwrap())
        });
    }
    let cycle = Graph::cycle(6).unwrap().edge_ideal();
    for kind in [PresentationKind::Taylor, PresentationKind::Minimal] {
        group.bench_function(format!("c6_edge_ideal_j2_{kind:?}"), |bch| {
            bch.iter(|| {
                fitting_ideal_of_generators(cycle.ring(), black_box(cycle.gens()), 2, kind, &b)
                    .unwrap()
            })
        });
    }
    group.finish();
}

fn betti_numbers(c: &mut Criterion) {
    let b = Budget::unlimited();
    let ideal =
        parse_ideal("vars: a,b,c,d,e\ngens: a^2*b, b*c^2, c*d, d^2*e, a*e^3, b*d*e\n").unwrap();
    c.bench_function("betti_table_6_gens", |bch| {
        bch.iter(|| betti_table(black_box(&ideal), &b).unwrap())
    });
}

fn edge_formula(c: &mut Criterion) {
    let b = Budget::unlimited();
    let mut group = c.benchmark_group("edge_formula");
    for (name, g) in [("k5", Graph::complete(5)), ("c6", Graph::cycle(6).unwrap())] {
        let m = g.num_edges();
        group.bench_function(name, |bch| {
            bch.iter(|| {
                for j in 0..m {
                    black_box(radical_fitting_formula(&g, j, &b).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn semigroup_series(c: &mut Criterion) {
    let b = Budget::unlimited();
    let s = NumericalSemigroup::new(&[5, 7, 9]).unwrap();
    let omega = canonical_ideal(&s);
    let omega = omega.shift(omega.integral_shift());
    let four =
        RelativeIdeal::new(&NumericalSemigroup::new(&[4, 5]).unwrap(), [12, 13, 14, 15]).unwrap();
    let mut group = c.benchmark_group("fitting1_series");
    for (name, ideal) in [("omega_5_7_9", &omega), ("four_generated_4_5", &four)] {
        for route in [MinorRoute::Enumerate, MinorRoute::MatrixTree] {
            group.bench_function(format!("{name}_{route:?}"), |bch| {
                bch.iter(|| fitting1_series(black_box(ideal), route, &b).unwrap())
            });
        }
    }
    group.finish();
}

fn semigroup_tree(c: &mut Criterion) {
    c.bench_function("semigroups_up_to_genus_10", |bch| {
        bch.iter(|| semigroups_up_to_genus(black_box(10)))
    });
}

criterion_group!(
    benches,
    fitting_ideals,
    betti_numbers,
    edge_formula,
    semigroup_series,
    semigroup_tree
);
criterion_main!(benches);
