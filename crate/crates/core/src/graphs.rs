//! The graph of normal words `Γ_N` and the graph of obstructions `Γ_W`.
//!
//! Both live on the vertex set `X`: `x -> y` is an edge of `Γ_M` iff
//! `xy ∈ M`. For a PBW algebra `Γ_N` counts normal words (paths with `m`
//! vertices are the basis of `A_m`) and decides growth, while `Γ_W` decides
//! global dimension: `gl.dim = d` iff `Γ_W` is an acyclic oriented graph
//! whose longest path has length `d - 1`.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{binomial, binomial_big, render};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Normal,
    Obstruction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadGraph {
    n: usize,
    adj: Vec<bool>,
    kind: GraphKind,
}

impl QuadGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)], kind: GraphKind) -> Self {
        let mut adj = vec![false; n * n];
        for &(a, b) in edges {
            adj[a * n + b] = true;
        }
        QuadGraph { n, adj, kind }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.n + b]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n * self.n)
            .filter(|&c| self.adj[c])
            .map(|c| (c / self.n, c % self.n))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&e| e).count()
    }

    /// One `a -> b` line per edge.
    pub fn to_edge_list(&self, names: &[String]) -> String {
        self.edges()
            .into_iter()
            .map(|(a, b)| format!("{} -> {}\n", names[a], names[b]))
            .collect()
    }

    /// Transitive closure including paths of length zero.
    fn reachability(&self) -> Vec<bool> {
        let n = self.n;
        let mut reach = self.adj.clone();
        for v in 0..n {
            reach[v * n + v] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i * n + k] {
                    for j in 0..n {
                        if reach[k * n + j] {
                            reach[i * n + j] = true;
                        }
                    }
                }
            }
        }
        reach
    }

    /// Strongly connected components, each sorted, listed by smallest vertex.
    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let reach = self.reachability();
        let mut comp_of = vec![usize::MAX; n];
        let mut comps = Vec::new();
        for v in 0..n {
            if comp_of[v] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = (v..n)
                .filter(|&u| reach[v * n + u] && reach[u * n + v])
                .collect();
            for &u in &members {
                comp_of[u] = comps.len();
            }
            comps.push(members);
        }
        comps
    }

    /// Topological order if the graph has no cycles (loops count).
    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut indeg: Vec<usize> = (0..n).map(|b| (0..n).filter(|&a| self.has_edge(a, b)).count()).collect();
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for b in 0..n {
                if self.has_edge(v, b) {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        ready.push(b);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Length (in edges) of the longest path, if the graph is acyclic.
    pub fn longest_path(&self) -> Option<usize> {
        let order = self.topological_order()?;
        let mut best = vec![0usize; self.n];
        for &v in order.iter().rev() {
            best[v] = (0..self.n)
                .filter(|&b| self.has_edge(v, b))
                .map(|b| best[b] + 1)
                .max()
                .unwrap_or(0);
        }
        Some(best.into_iter().max().unwrap_or(0))
    }
}

/// `(Γ_N, Γ_W)` for the obstruction set `w ⊆ X^2`.
pub fn build_graphs(n: usize, w: &[(usize, usize)]) -> (QuadGraph, QuadGraph) {
    let obstruction = QuadGraph::from_edges(n, w, GraphKind::Obstruction);
    let normal = QuadGraph {
        n,
        adj: obstruction.adj.iter().map(|&e| !e).collect(),
        kind: GraphKind::Normal,
    };
    (normal, obstruction)
}

/// Number of paths with `m` vertices in `Γ_N`, for `m = 0..=bound`.
pub fn hilbert_coefficients(normal: &QuadGraph, bound: usize) -> Vec<BigUint> {
    let n = normal.n;
    let mut out = vec![BigUint::one()];
    let mut ends = vec![BigUint::one(); n];
    for m in 1..=bound {
        if m > 1 {
            let mut next = vec![BigUint::zero(); n];
            for a in 0..n {
                if ends[a].is_zero() {
                    continue;
                }
                for (b, slot) in next.iter_mut().enumerate() {
                    if normal.has_edge(a, b) {
                        *slot += &ends[a];
                    }
                }
            }
            ends = next;
        }
        out.push(ends.iter().sum());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    pub polynomial: bool,
    /// Largest number of cycles met by one path of `Γ_N`, when polynomial.
    pub degree: Option<usize>,
    /// `None` encodes infinite global dimension.
    pub gldim: Option<usize>,
    pub hilbert: Vec<BigUint>,
}

/// Growth from `Γ_N` (no two cycles share a vertex), global dimension from
/// `Γ_W` (longest path plus one when acyclic).
pub fn growth_and_gldim(normal: &QuadGraph, obstruction: &QuadGraph, bound: usize) -> GrowthReport {
    let (polynomial, degree) = growth(normal);
    GrowthReport {
        polynomial,
        degree,
        gldim: obstruction.longest_path().map(|l| l + 1),
        hilbert: hilbert_coefficients(normal, bound),
    }
}

fn growth(g: &QuadGraph) -> (bool, Option<usize>) {
    let comps = g.components();
    let mut comp_of = vec![0; g.n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    // a strongly connected component is a single simple cycle exactly when
    // it has as many internal edges as vertices
    let mut cyclic = vec![false; comps.len()];
    for (i, c) in comps.iter().enumerate() {
        let internal = c
            .iter()
            .flat_map(|&a| c.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| g.has_edge(a, b))
            .count();
        if internal > c.len() {
            return (false, None);
        }
        cyclic[i] = internal == c.len();
    }
    // longest chain of cyclic components in the condensation
    let k = comps.len();
    let mut succ = vec![Vec::new(); k];
    for (a, b) in g.edges() {
        let (ca, cb) = (comp_of[a], comp_of[b]);
        if ca != cb && !succ[ca].contains(&cb) {
            succ[ca].push(cb);
        }
    }
    let mut memo = vec![None; k];
    fn best(c: usize, succ: &[Vec<usize>], cyclic: &[bool], memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(v) = memo[c] {
            return v;
        }
        let tail = succ[c]
            .iter()
            .map(|&d| best(d, succ, cyclic, memo))
            .max()
            .unwrap_or(0);
        let v = tail + cyclic[c] as usize;
        memo[c] = Some(v);
        v
    }
    let degree = (0..k).map(|c| best(c, &succ, &cyclic, &mut memo)).max().unwrap_or(0);
    (true, Some(degree))
}

/// No loops, exactly one directed edge between any two distinct vertices,
/// no directed cycles.
pub fn is_acyclic_tournament(g: &QuadGraph) -> bool {
    let n = g.n;
    let complete = (0..n).all(|a| {
        !g.has_edge(a, a) && (a + 1..n).all(|b| g.has_edge(a, b) != g.has_edge(b, a))
    });
    complete && g.topological_order().is_some()
}

/// Labels `y_1, .., y_n` (returned as `y[0..n]`) with every edge going
/// from a higher label to a lower one. Reversing the result gives the
/// labelling with every edge going upwards.
pub fn tournament_relabel(g: &QuadGraph) -> Result<Vec<usize>> {
    if !is_acyclic_tournament(g) {
        return Err(Error::Precondition("graph is not an acyclic tournament".into()));
    }
    let mut order = g.topological_order().unwrap();
    order.reverse();
    Ok(order)
}

/// The seven conditions characterising monomial algebras `k<X>/(W)` with
/// Hilbert series `1/(1-z)^n`, each evaluated on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonomialVerdict {
    /// finite global dimension and polynomial growth
    pub gldim_and_growth: bool,
    /// finite global dimension and `|W| = C(n,2)`
    pub gldim_and_count: bool,
    /// polynomial growth, no `xx` in `W`, `|W| = C(n,2)`
    pub growth_square_free_count: bool,
    /// `Γ_W` is an acyclic tournament
    pub acyclic_tournament: bool,
    /// Hilbert coefficients `C(n+m-1, m)` up to the bound
    pub hilbert_series: bool,
    /// normal words are `y_1^a1 .. y_n^an` for some relabelling
    pub ordered_normal_words: bool,
    /// `W = { y_j y_i : i < j }` for some relabelling
    pub standard_obstructions: bool,
}

impl MonomialVerdict {
    pub fn as_array(&self) -> [bool; 7] {
        [
            self.gldim_and_growth,
            self.gldim_and_count,
            self.growth_square_free_count,
            self.acyclic_tournament,
            self.hilbert_series,
            self.ordered_normal_words,
            self.standard_obstructions,
        ]
    }

    pub fn all_equal(&self) -> bool {
        self.as_array().iter().all_equal()
    }
}

/// Largest `n` for which the relabelling conditions are decided by trying
/// every permutation.
pub const MAX_RELABEL_SEARCH: usize = 8;

pub fn monomial_algebra_check(n: usize, w: &[(usize, usize)], bound: usize) -> Result<MonomialVerdict> {
    if n > MAX_RELABEL_SEARCH {
        return Err(Error::BoundExceeded(format!("{n}! relabellings")));
    }
    let (normal, obstruction) = build_graphs(n, w);
    let report = growth_and_gldim(&normal, &obstruction, bound);
    let count = obstruction.edge_count();
    let square_free = (0..n).all(|x| !obstruction.has_edge(x, x));
    let hilbert_series = report
        .hilbert
        .iter()
        .enumerate()
        .all(|(m, h)| *h == binomial_big(n + m - 1 + (m == 0 && n == 0) as usize, m));
    let exists_relabelling = |pred: &dyn Fn(&[usize]) -> bool| {
        (0..n).permutations(n).any(|ascending| {
            let mut rank = vec![0; n];
            for (k, &x) in ascending.iter().enumerate() {
                rank[x] = k;
            }
            pred(&rank)
        })
    };
    let ordered_normal_words = exists_relabelling(&|rank: &[usize]| {
        (0..n).all(|a| (0..n).all(|b| normal.has_edge(a, b) == (rank[a] <= rank[b])))
    });
    let standard_obstructions = exists_relabelling(&|rank: &[usize]| {
        (0..n).all(|a| (0..n).all(|b| obstruction.has_edge(a, b) == (rank[a] > rank[b])))
    });
    let verdict = MonomialVerdict {
        gldim_and_growth: report.gldim.is_some() && report.polynomial,
        gldim_and_count: report.gldim.is_some() && count == binomial(n, 2),
        growth_square_free_count: report.polynomial && square_free && count == binomial(n, 2),
        acyclic_tournament: is_acyclic_tournament(&obstruction),
        hilbert_series,
        ordered_normal_words,
        standard_obstructions,
    };
    if !verdict.all_equal() {
        return Err(Error::violation(
            "monomial algebra characterisation",
            format!("W = {w:?} on n = {n}: {verdict:?}"),
        ));
    }
    Ok(verdict)
}

/// `W = { x_j x_i : i < j }`.
pub fn descending_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (j, i))).collect()
}

pub fn render_pairs(names: &[String], pairs: &[(usize, usize)]) -> Vec<String> {
    pairs.iter().map(|&(a, b)| render(names, &[a, b])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn complementary_edges() {
        let w = vec![(0, 1), (2, 2), (1, 0)];
        let (gn, gw) = build_graphs(3, &w);
        assert_eq!(gn.edge_count() + gw.edge_count(), 9);
        for a in 0..3 {
            for b in 0..3 {
                assert_ne!(gn.has_edge(a, b), gw.has_edge(a, b));
            }
        }
    }

    #[test]
    fn empty_and_full_obstructions() {
        let (gn, gw) = build_graphs(2, &[]);
        assert_eq!(gn.edge_count(), 4);
        assert_eq!(gw.edge_count(), 0);
        let all: Vec<_> = (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).collect();
        let (gn, _) = build_graphs(2, &all);
        assert_eq!(gn.edge_count(), 0);
        assert_eq!(hilbert_coefficients(&gn, 3), big(&[1, 2, 0, 0]));
    }

    #[test]
    fn single_loop_counts() {
        let (gn, _) = build_graphs(1, &[]);
        assert_eq!(hilbert_coefficients(&gn, 4), big(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn skew_obstructions_n4() {
        let (gn, _) = build_graphs(4, &descending_pairs(4));
        assert_eq!(hilbert_coefficients(&gn, 4), big(&[1, 4, 10, 20, 35]));
    }

    #[test]
    fn skew_obstructions_n5_growth() {
        let (gn, gw) = build_graphs(5, &descending_pairs(5));
        assert_eq!(gn.edge_count(), 15);
        let r = growth_and_gldim(&gn, &gw, 3);
        assert!(r.polynomial);
        assert_eq!(r.degree, Some(5));
        assert_eq!(r.gldim, Some(5));
        assert!(is_acyclic_tournament(&gw));
        assert_eq!(tournament_relabel(&gw).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn free_algebra_on_two_generators() {
        let (gn, gw) = build_graphs(2, &[]);
        let r = growth_and_gldim(&gn, &gw, 4);
        assert!(!r.polynomial);
        assert_eq!(r.degree, None);
        assert_eq!(r.gldim, Some(1));
        assert_eq!(r.hilbert, big(&[1, 2, 4, 8, 16]));
    }

    #[test]
    fn two_cycle_in_obstructions() {
        let (gn, gw) = build_graphs(2, &[(0, 1), (1, 0)]);
        let r = growth_and_gldim(&gn, &gw, 2);
        assert_eq!(r.gldim, None);
        assert!(!is_acyclic_tournament(&gw));
    }

    #[test]
    fn finite_dimensional_algebra_has_degree_zero() {
        // W = X^2: A = k + V
        let all: Vec<_> = (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).collect();
        let (gn, gw) = build_graphs(2, &all);
        let r = growth_and_gldim(&gn, &gw, 2);
        assert!(r.polynomial);
        assert_eq!(r.degree, Some(0));
        assert_eq!(r.gldim, None);
    }

    #[test]
    fn tournament_small_cases() {
        let g = QuadGraph::from_edges(1, &[], GraphKind::Obstruction);
        assert!(is_acyclic_tournament(&g));
        // b -> a with a = 0, b = 1
        let g = QuadGraph::from_edges(2, &[(1, 0)], GraphKind::Obstruction);
        assert_eq!(tournament_relabel(&g).unwrap(), vec![0, 1]);
        let g = QuadGraph::from_edges(2, &[(0, 1)], GraphKind::Obstruction);
        assert_eq!(tournament_relabel(&g).unwrap(), vec![1, 0]);
        let g = QuadGraph::from_edges(2, &[(0, 1), (1, 0)], GraphKind::Obstruction);
        assert!(!is_acyclic_tournament(&g));
        assert!(tournament_relabel(&g).is_err());
    }

    #[test]
    fn monomial_check_single_obstruction_n2() {
        // W = {xy}: the tournament x -> y, so every condition holds
        let v = monomial_algebra_check(2, &[(0, 1)], 6).unwrap();
        assert!(v.as_array().iter().all(|&b| b));
        // W = {xx}: none hold
        let v = monomial_algebra_check(2, &[(0, 0)], 6).unwrap();
        assert!(v.as_array().iter().all(|&b| !b));
    }

    #[test]
    fn monomial_check_empty_w() {
        for n in 2..5 {
            let v = monomial_algebra_check(n, &[], 6).unwrap();
            assert!(v.as_array().iter().all(|&b| !b));
        }
    }

    #[test]
    fn edge_list_format() {
        let names: Vec<String> = vec!["a".into(), "b".into()];
        let g = QuadGraph::from_edges(2, &[(1, 0)], GraphKind::Obstruction);
        assert_eq!(g.to_edge_list(&names), "b -> a\n");
    }
}
