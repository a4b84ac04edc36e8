use std::cmp::Reverse;

use super::Coloring;
use crate::graph::ConflictGraph;

/// Smallest color not marked with `stamp`.
fn min_absent(mark: &[usize], stamp: usize) -> usize {
    mark.iter().position(|&m| m != stamp).unwrap_or(mark.len())
}

/// Welsh-Powell: visit vertices by degree descending (ties by id) and give
/// each the smallest color unused among its colored neighbors.
pub fn welsh_powell(g: &ConflictGraph) -> Coloring {
    let n = g.num_courses();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(g.deg(v)), v));

    // Uncolored vertices hold the scratch color `width`, one past the last
    // real color, so neighbor marking needs no branch.
    let width = g.max_degree() + 1;
    let mut color = vec![width; n];
    // mark[c] == stamp means color c is taken around the current vertex
    let mut mark = vec![0usize; width + 1];
    for (step, &v) in order.iter().enumerate() {
        let stamp = step + 1;
        for u in g.neighbors(v) {
            mark[color[u]] = stamp;
        }
        color[v] = min_absent(&mark[..width], stamp);
    }
    Coloring::new(color)
}

/// Saturation bookkeeping for DSatur.
///
/// `saturation[v]` is the number of distinct colors among the colored
/// neighbors of `v`. Each vertex keeps a row of flags recording which colors
/// it already sees, so an update costs O(1) per (vertex, new color).
#[derive(Debug, Clone)]
pub struct DSaturState {
    pub saturation: Vec<usize>,
    /// uncolored vertices, in no particular order
    pub uncolored: Vec<usize>,
    degree: Vec<usize>,
    width: usize,
    seen: Vec<bool>,
}

impl DSaturState {
    pub fn new(g: &ConflictGraph) -> Self {
        let n = g.num_courses();
        let width = g.max_degree() + 1;
        Self {
            saturation: vec![0; n],
            uncolored: (0..n).collect(),
            degree: (0..n).map(|v| g.deg(v)).collect(),
            width,
            seen: vec![false; n * width],
        }
    }

    fn row(&self, v: usize) -> &[bool] {
        &self.seen[v * self.width..(v + 1) * self.width]
    }

    /// Position in `uncolored` of the vertex maximizing (saturation, degree),
    /// lowest id on ties.
    fn select(&self) -> Option<usize> {
        let key = |v: usize| (self.saturation[v], self.degree[v], Reverse(v));
        let mut best = *self.uncolored.first()?;
        let mut best_at = 0;
        for (i, &v) in self.uncolored.iter().enumerate().skip(1) {
            if key(v) > key(best) {
                best = v;
                best_at = i;
            }
        }
        Some(best_at)
    }

    /// Colors the vertex at position `at` of `uncolored` with `c`. Every
    /// neighbor's row is updated, so saturation stays exact for colored
    /// vertices too.
    fn color(&mut self, g: &ConflictGraph, at: usize, c: usize) -> usize {
        let v = self.uncolored.swap_remove(at);
        for u in g.neighbors(v) {
            let i = u * self.width + c;
            self.saturation[u] += usize::from(!self.seen[i]);
            self.seen[i] = true;
        }
        v
    }
}

/// DSatur: repeatedly color the uncolored vertex with the most distinct
/// neighbor colors, preferring higher (static) degree and then lower id.
pub fn dsatur(g: &ConflictGraph) -> Coloring {
    let n = g.num_courses();
    let mut state = DSaturState::new(g);
    let mut color = vec![0usize; n];
    while let Some(at) = state.select() {
        let v = state.uncolored[at];
        // the row holds exactly the colors of v's colored neighbors
        let c = state.row(v).iter().position(|&s| !s).unwrap_or(state.width);
        color[v] = c;
        state.color(g, at, c);
    }
    Coloring::new(color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate_coloring;
    use proptest::prelude::*;

    #[test]
    fn edgeless_uses_one_color() {
        let g = ConflictGraph::new(5);
        assert_eq!(welsh_powell(&g).num_colors(), 1);
        assert_eq!(dsatur(&g).num_colors(), 1);
        assert_eq!(welsh_powell(&g).colors(), &[0; 5]);
    }

    #[test]
    fn empty_graph_uses_no_colors() {
        let g = ConflictGraph::new(0);
        assert_eq!(welsh_powell(&g).num_colors(), 0);
        assert_eq!(dsatur(&g).num_colors(), 0);
        assert!(validate_coloring(&g, &dsatur(&g)).is_ok());
    }

    #[test]
    fn clique_needs_n_colors() {
        let g = ConflictGraph::complete(4);
        assert_eq!(welsh_powell(&g).num_colors(), 4);
        assert_eq!(dsatur(&g).num_colors(), 4);
    }

    #[test]
    fn welsh_powell_five_cycle_trace() {
        // all degrees 2: order 0,1,2,3,4 -> colors 0,1,0,1,2
        let g = ConflictGraph::cycle(5);
        let c = welsh_powell(&g);
        assert_eq!(c.colors(), &[0, 1, 0, 1, 2]);
        assert_eq!(c.num_colors(), 3);
    }

    #[test]
    fn dsatur_six_cycle_trace() {
        // 0 first (all ties), then 1 (sat 1, lower id than 5), then 2, 3, 4, 5 alternate
        let g = ConflictGraph::cycle(6);
        let c = dsatur(&g);
        assert_eq!(c.colors(), &[0, 1, 0, 1, 0, 1]);
        assert_eq!(c.num_colors(), 2);
    }

    #[test]
    fn welsh_powell_orders_by_degree() {
        // star centred on 3 plus an isolated vertex 0
        let g = ConflictGraph::from_edges(5, [(3, 1), (3, 2), (3, 4)]).unwrap();
        let c = welsh_powell(&g);
        assert_eq!(c.colors(), &[0, 1, 1, 0, 1]);
    }

    #[test]
    fn dsatur_beats_welsh_powell_on_crown() {
        // crown graph on 8 vertices: u_i ~ v_j for i != j; bipartite
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    edges.push((i, 4 + j));
                }
            }
        }
        let g = ConflictGraph::from_edges(8, edges).unwrap();
        assert_eq!(dsatur(&g).num_colors(), 2);
        assert!(validate_coloring(&g, &welsh_powell(&g)).is_ok());
    }

    fn arb_graph() -> impl Strategy<Value = ConflictGraph> {
        (0usize..40).prop_flat_map(|n| {
            prop::collection::vec((0..n.max(1), 0..n.max(1)), 0..150).prop_map(move |pairs| {
                ConflictGraph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v && *u < n && *v < n))
                    .unwrap()
            })
        })
    }

    /// Random tree on n vertices with parent(v) < v.
    fn arb_tree() -> impl Strategy<Value = ConflictGraph> {
        (2usize..40).prop_flat_map(|n| {
            prop::collection::vec(any::<prop::sample::Index>(), n - 1).prop_map(move |picks| {
                let edges = picks.iter().enumerate().map(|(i, ix)| (i + 1, ix.index(i + 1)));
                ConflictGraph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn greedy_colorings_are_proper_compact_and_bounded(g in arb_graph()) {
            let bound = g.max_degree() + 1;
            for c in [welsh_powell(&g), dsatur(&g)] {
                prop_assert!(validate_coloring(&g, &c).is_ok());
                prop_assert!(c.is_compact());
                prop_assert!(g.num_courses() == 0 || c.num_colors() <= bound);
            }
        }

        #[test]
        fn greedy_is_deterministic(g in arb_graph()) {
            prop_assert_eq!(welsh_powell(&g), welsh_powell(&g.clone()));
            prop_assert_eq!(dsatur(&g), dsatur(&g.clone()));
        }

        #[test]
        fn dsatur_two_colors_trees(g in arb_tree()) {
            prop_assert_eq!(dsatur(&g).num_colors(), 2);
        }

        #[test]
        fn dsatur_two_colors_even_cycles(half in 2usize..30) {
            prop_assert_eq!(dsatur(&ConflictGraph::cycle(2 * half)).num_colors(), 2);
        }

        #[test]
        fn saturation_matches_definition(g in arb_graph(), steps in 0usize..40) {
            let mut state = DSaturState::new(&g);
            let mut color = vec![None; g.num_courses()];
            for _ in 0..steps {
                let Some(at) = state.select() else { break };
                let v = state.uncolored[at];
                let c = state.row(v).iter().position(|&s| !s).unwrap();
                color[v] = Some(c);
                state.color(&g, at, c);
            }
            for v in 0..g.num_courses() {
                let mut distinct: Vec<usize> = g.neighbors(v).filter_map(|u| color[u]).collect();
                distinct.sort_unstable();
                distinct.dedup();
                prop_assert_eq!(state.saturation[v], distinct.len());
            }
        }
    }
}
