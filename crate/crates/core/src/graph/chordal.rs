use super::graph::Graph;

/// An elimination order from maximum cardinality search: each vertex's
/// neighbours later in the order form a clique exactly when `G` is chordal.
pub fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.num_vertices();
    let mut weight = vec![0usize; n];
    let mut numbered = 0u64;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| numbered >> v & 1 == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex");
        numbered |= 1 << v;
        visit.push(v);
        for u in 0..n {
            if numbered >> u & 1 == 0 && g.has_edge(u, v) {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// Whether every later neighbourhood in `order` is a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut later = order.iter().fold(0u64, |acc, &v| acc | 1 << v);
    for &v in order {
        later &= !(1 << v);
        let nb = g.neighbours(v) & later;
        let clique = (0..g.num_vertices())
            .filter(|&u| nb >> u & 1 == 1)
            .all(|u| nb & !(1 << u) & !g.neighbours(u) == 0);
        if !clique {
            return false;
        }
    }
    true
}

pub fn is_chordal(g: &Graph) -> bool {
    is_perfect_elimination_order(g, &mcs_elimination_order(g))
}
