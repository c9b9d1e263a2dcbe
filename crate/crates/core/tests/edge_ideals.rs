use fitting_core::fitting::fitting_ideal;
use fitting_core::graph::{
    find_admissible_cover, is_chordal, isomorphism_classes, maximal_criterion,
    radical_fitting_formula, Graph,
};
use fitting_core::{Budget, Monomial, MonomialIdeal};

fn all_small_graphs() -> Vec<Graph> {
    (2..=5).flat_map(isomorphism_classes).collect()
}

fn budget() -> Budget {
    Budget::with_minors(50_000_000)
}

#[test]
fn formula_agrees_with_minors_on_all_graphs_up_to_five_vertices() {
    let b = budget();
    for g in all_small_graphs() {
        let ideal = g.edge_ideal();
        for j in 0..g.num_edges() {
            let oracle = fitting_ideal(&ideal, j, &b).unwrap().radical();
            let formula = radical_fitting_formula(&g, j, &b).unwrap();
            assert_eq!(formula, oracle, "{g}, j={j}");

            let linear: u64 = formula
                .gens()
                .iter()
                .filter(|u| u.degree() == 1)
                .fold(0, |acc, u| acc | u.support_mask());
            assert_eq!(maximal_criterion(&g, j).vertices, linear, "{g}, j={j}");
        }
    }
}

#[test]
fn below_the_cover_number_the_formula_is_the_edge_ideal() {
    let b = budget();
    for g in all_small_graphs() {
        for j in 1..g.vertex_cover_number().min(g.num_edges()) {
            assert_eq!(
                radical_fitting_formula(&g, j, &b).unwrap(),
                g.edge_ideal(),
                "{g}, j={j}"
            );
        }
    }
}

#[test]
fn both_maximal_criteria_agree_with_the_oracle() {
    let b = budget();
    for g in all_small_graphs() {
        let maximal = MonomialIdeal::maximal(g.edge_ideal().ring());
        for j in 0..g.num_edges() {
            let c = maximal_criterion(&g, j);
            let actual = fitting_ideal(&g.edge_ideal(), j, &b).unwrap().radical() == maximal;
            assert_eq!(c.maximal, actual, "{g}, j={j}");
            assert_eq!(c.neighbourhood_criterion, actual, "{g}, j={j}");
        }
    }
}

#[test]
fn complete_graph_closed_form() {
    let b = budget();
    for n in 2..=5 {
        let g = Graph::complete(n);
        let ideal = g.edge_ideal();
        let maximal = MonomialIdeal::maximal(ideal.ring());
        let m = n * (n - 1) / 2;
        for j in 1..m {
            let r = fitting_ideal(&ideal, j, &b).unwrap().radical();
            let expected = if j + 2 <= n { &ideal } else { &maximal };
            assert_eq!(&r, expected, "K_{n}, j={j}");
        }
        assert!(fitting_ideal(&ideal, m, &b).unwrap().is_unit());
    }
}

#[test]
fn regular_cycles_criterion() {
    let b = budget();
    for n in 3..=6 {
        let g = Graph::cycle(n).unwrap();
        let maximal = MonomialIdeal::maximal(g.edge_ideal().ring());
        for j in 0..n {
            let threshold = (0..n).all(|i| j >= 2 + g.edges_outside_closed_neighbourhood(i));
            let actual = fitting_ideal(&g.edge_ideal(), j, &b).unwrap().radical() == maximal;
            assert_eq!(threshold, actual, "C_{n}, j={j}");
        }
    }
}

#[test]
fn covers_witness_formula_generators() {
    let b = budget();
    for g in all_small_graphs() {
        let m = g.num_edges();
        for j in g.vertex_cover_number().max(1)..m {
            let r = radical_fitting_formula(&g, j, &b).unwrap();
            for u in r.gens().iter().filter(|u| !g.edge_ideal().contains(u)) {
                let f = u.support_mask();
                let cover = find_admissible_cover(&g, f, m - j, &b)
                    .unwrap()
                    .expect("cover");
                assert!(cover.is_valid(&g));
                assert_eq!(cover.size(), m - j);
                assert_eq!(cover.vertices(), f);
                assert_eq!(Monomial::from_mask(f), *u);
            }
        }
    }
}

fn has_induced_long_cycle(g: &Graph) -> bool {
    let n = g.num_vertices();
    (0u64..1 << n).filter(|s| s.count_ones() >= 4).any(|s| {
        let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let two_regular = verts
            .iter()
            .all(|&v| (g.neighbours(v) & s).count_ones() == 2);
        if !two_regular {
            return false;
        }
        let mut seen = 1u64 << verts[0];
        let mut frontier = seen;
        while frontier != 0 {
            let next = verts
                .iter()
                .filter(|&&v| frontier >> v & 1 == 1)
                .fold(0, |acc, &v| acc | g.neighbours(v) & s)
                & !seen;
            seen |= next;
            frontier = next;
        }
        seen == s
    })
}

#[test]
fn chordality_matches_induced_cycle_search() {
    for n in 1..=6 {
        for g in isomorphism_classes(n) {
            assert_eq!(is_chordal(&g), !has_induced_long_cycle(&g), "{g}");
        }
    }
}
