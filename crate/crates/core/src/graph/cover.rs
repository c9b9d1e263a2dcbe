use itertools::Itertools;

use super::graph::Graph;
use crate::algebra::Monomial;
use crate::error::{Budget, Error, Result};
use crate::ideal::MonomialIdeal;

/// A family of disjoint edge blocks `A_s ⊆ E(i_s)`, one per vertex of `F`,
/// with `{i_s} ∪ e ≠ {i_t} ∪ e'` across distinct blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleCover {
    /// `(i_s, A_s)` with edge indices into [`Graph::edges`].
    pub blocks: Vec<(usize, Vec<usize>)>,
}

impl AdmissibleCover {
    pub fn size(&self) -> usize {
        self.blocks.iter().map(|(_, a)| a.len()).sum()
    }

    pub fn vertices(&self) -> u64 {
        self.blocks.iter().fold(0, |acc, &(i, _)| acc | 1 << i)
    }

    /// Rechecks both defining conditions from scratch.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut used = 0u128;
        let mut triples = Vec::new();
        for (i, block) in &self.blocks {
            if block.is_empty() {
                return false;
            }
            let nbhd = g.edge_neighbourhood(*i);
            for &e in block {
                if !nbhd.contains(&e) || used >> e & 1 == 1 {
                    return false;
                }
                used |= 1 << e;
                triples.push((*i, 1u64 << i | g.edge_mask(e)));
            }
        }
        triples
            .iter()
            .tuple_combinations()
            .all(|(a, b)| a.0 == b.0 || a.1 != b.1)
    }

    pub fn display(&self, g: &Graph) -> String {
        self.blocks
            .iter()
            .map(|(i, block)| {
                let edges = block
                    .iter()
                    .map(|&e| {
                        let (a, b) = g.edges()[e];
                        format!("{}-{}", a + 1, b + 1)
                    })
                    .join(", ");
                format!("A_{} = {{{edges}}}", i + 1)
            })
            .join("; ")
    }
}

struct Search<'a> {
    g: &'a Graph,
    vertices: Vec<usize>,
    nbhd: Vec<u128>,
    size: usize,
    nodes: u64,
    budget: &'a Budget,
}

impl Search<'_> {
    fn new<'a>(g: &'a Graph, vertices: u64, size: usize, budget: &'a Budget) -> Search<'a> {
        let vertices: Vec<usize> = (0..g.num_vertices())
            .filter(|&i| vertices >> i & 1 == 1)
            .collect();
        let nbhd = vertices
            .iter()
            .map(|&i| {
                g.edge_neighbourhood(i)
                    .iter()
                    .fold(0u128, |acc, &e| acc | 1 << e)
            })
            .collect();
        Search {
            g,
            vertices,
            nbhd,
            size,
            nodes: 0,
            budget,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_search {
            return Err(Error::BudgetExceeded {
                what: format!(
                    "admissible cover search for {} vertices of size {}",
                    self.vertices.len(),
                    self.size
                ),
                needed: self.nodes,
                budget: self.budget.max_search,
            });
        }
        Ok(())
    }

    /// Depth-first over the vertices of `F`. `visit` returns `true` to stop.
    fn run(&mut self, visit: &mut dyn FnMut(&[(usize, u128)]) -> bool) -> Result<bool> {
        if self.vertices.is_empty()
            || self.size < self.vertices.len()
            || self.nbhd.iter().any(|&m| m == 0)
        {
            return Ok(false);
        }
        let mut chosen = Vec::with_capacity(self.vertices.len());
        let mut triples = Vec::new();
        self.step(0, 0, self.size, &mut chosen, &mut triples, visit)
    }

    fn step(
        &mut self,
        k: usize,
        used: u128,
        remaining: usize,
        chosen: &mut Vec<(usize, u128)>,
        triples: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[(usize, u128)]) -> bool,
    ) -> Result<bool> {
        self.tick()?;
        if k == self.vertices.len() {
            return Ok(remaining == 0 && visit(chosen));
        }
        let later = self.vertices.len() - k - 1;
        let avail = self.nbhd[k] & !used;
        let later_avail = self.nbhd[k + 1..].iter().fold(0u128, |a, &m| a | m) & !used;
        if (avail | later_avail).count_ones() < remaining as u32 {
            return Ok(false);
        }
        let i = self.vertices[k];
        let max_here = remaining - later;
        let mut sub = avail;
        while sub != 0 {
            let c = sub.count_ones() as usize;
            let fits = if later == 0 {
                c == remaining
            } else {
                c <= max_here
            };
            if fits {
                let new: Vec<u64> = (0..128)
                    .filter(|&e| sub >> e & 1 == 1)
                    .map(|e| 1u64 << i | self.g.edge_mask(e))
                    .collect();
                if !new.iter().any(|t| triples.contains(t)) {
                    let base = triples.len();
                    triples.extend(&new);
                    chosen.push((i, sub));
                    let stop =
                        self.step(k + 1, used | sub, remaining - c, chosen, triples, visit)?;
                    chosen.pop();
                    triples.truncate(base);
                    if stop {
                        return Ok(true);
                    }
                }
            }
            sub = (sub - 1) & avail;
        }
        Ok(false)
    }
}

fn to_cover(chosen: &[(usize, u128)]) -> AdmissibleCover {
    AdmissibleCover {
        blocks: chosen
            .iter()
            .map(|&(i, m)| (i, (0..128).filter(|&e| m >> e & 1 == 1).collect()))
            .collect(),
    }
}

/// Every admissible cover of the vertex set `f` (a mask) with total size `size`.
pub fn admissible_covers(
    g: &Graph,
    f: u64,
    size: usize,
    budget: &Budget,
) -> Result<Vec<AdmissibleCover>> {
    let mut out = Vec::new();
    Search::new(g, f, size, budget).run(&mut |c| {
        out.push(to_cover(c));
        false
    })?;
    Ok(out)
}

/// Some admissible cover of `f` of the given size, if one exists.
pub fn find_admissible_cover(
    g: &Graph,
    f: u64,
    size: usize,
    budget: &Budget,
) -> Result<Option<AdmissibleCover>> {
    let mut found = None;
    Search::new(g, f, size, budget).run(&mut |c| {
        found = Some(to_cover(c));
        true
    })?;
    Ok(found)
}

/// The inclusion-minimal independent sets of `G` having an admissible cover
/// of size `size`, found level by level in increasing cardinality.
pub fn minimal_covered_sets(g: &Graph, size: usize, budget: &Budget) -> Result<Vec<u64>> {
    let usable: Vec<usize> = (0..g.num_vertices())
        .filter(|&i| !g.edge_neighbourhood(i).is_empty())
        .collect();
    let mut minimal: Vec<u64> = Vec::new();
    let mut visited = 0u64;
    for k in 1..=size.min(usable.len()) {
        for combo in usable.iter().combinations(k) {
            let f = combo.iter().fold(0u64, |acc, &&i| acc | 1 << i);
            if !g.is_independent(f) || minimal.iter().any(|&s| s & f == s) {
                continue;
            }
            visited += 1;
            budget.check_search(
                || format!("independent sets with covers of size {size}"),
                visited,
            )?;
            if find_admissible_cover(g, f, size, budget)?.is_some() {
                minimal.push(f);
            }
        }
    }
    Ok(minimal)
}

/// `rad Fitt_j(I(G))` from admissible covers: `I(G)` when `j < c_G`, otherwise
/// `I(G)` plus `x_F` for each minimal independent `F` with a cover of size
/// `m - j`. `j >= m` gives the unit ideal, and `j = 0` the zero ideal since
/// a nonzero ideal has rank one.
pub fn radical_fitting_formula(g: &Graph, j: usize, budget: &Budget) -> Result<MonomialIdeal> {
    let ideal = g.edge_ideal();
    let m = g.num_edges();
    if j >= m {
        return Ok(MonomialIdeal::unit(ideal.ring()));
    }
    if j == 0 {
        return Ok(MonomialIdeal::zero(ideal.ring()));
    }
    if j < g.vertex_cover_number() {
        return Ok(ideal);
    }
    let extra = MonomialIdeal::new(
        ideal.ring(),
        minimal_covered_sets(g, m - j, budget)?
            .into_iter()
            .map(Monomial::from_mask),
    );
    Ok(ideal.sum(&extra))
}

/// The vertex criterion `|E(i)| >= m - j` and the neighbourhood criterion
/// for the radical of `Fitt_j(I(G))` to be the maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalCriterion {
    /// Vertices `i` with `|E(i)| >= m - j`, as a mask.
    pub vertices: u64,
    /// All vertices satisfy the vertex criterion and `j < m`.
    pub maximal: bool,
    /// `max_i (|N(i)| + |E(G \ N[i])|) <= j < m`.
    pub neighbourhood_criterion: bool,
}

pub fn maximal_criterion(g: &Graph, j: usize) -> MaximalCriterion {
    let m = g.num_edges();
    let need = m.saturating_sub(j);
    let vertices = (0..g.num_vertices())
        .filter(|&i| g.edge_neighbourhood(i).len() >= need)
        .fold(0u64, |acc, i| acc | 1 << i);
    let all = if g.num_vertices() == 64 {
        u64::MAX
    } else {
        (1u64 << g.num_vertices()) - 1
    };
    let worst = (0..g.num_vertices())
        .map(|i| g.degree(i) + g.edges_outside_closed_neighbourhood(i))
        .max()
        .unwrap_or(0);
    MaximalCriterion {
        vertices,
        maximal: j < m && vertices == all,
        neighbourhood_criterion: worst <= j && j < m,
    }
}
