use std::cmp::Reverse;

use super::Coloring;
use crate::error::{Error, Result};
use crate::graph::ConflictGraph;

/// Largest graph the exact search accepts.
pub const EXACT_LIMIT: usize = 12;

fn guard(g: &ConflictGraph) -> Result<()> {
    if g.num_courses() > EXACT_LIMIT {
        return Err(Error::OracleGuard {
            what: "courses",
            actual: g.num_courses(),
            limit: EXACT_LIMIT,
        });
    }
    Ok(())
}

/// A proper coloring with at most `k` colors, if one exists. Backtracking
/// over vertices in degree-descending order; a vertex may open at most one
/// new color beyond those already used.
pub fn k_coloring(g: &ConflictGraph, k: usize) -> Result<Option<Coloring>> {
    guard(g)?;
    let n = g.num_courses();
    if n == 0 {
        return Ok(Some(Coloring::new(Vec::new())));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(g.deg(v)), v));

    fn extend(g: &ConflictGraph, order: &[usize], i: usize, k: usize, used: usize, color: &mut [Option<usize>]) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).all(|u| color[u] != Some(c)) {
                color[v] = Some(c);
                if extend(g, order, i + 1, k, used.max(c + 1), color) {
                    return true;
                }
                color[v] = None;
            }
        }
        false
    }

    let mut color = vec![None; n];
    Ok(extend(g, &order, 0, k, 0, &mut color)
        .then(|| Coloring::new(color.into_iter().map(|c| c.expect("all colored")).collect())))
}

/// An optimal coloring, trying k = 1, 2, ... up to Δ+1.
pub fn exact_coloring(g: &ConflictGraph) -> Result<Coloring> {
    guard(g)?;
    if g.num_courses() == 0 {
        return Ok(Coloring::new(Vec::new()));
    }
    for k in 1..=g.max_degree() + 1 {
        if let Some(c) = k_coloring(g, k)? {
            return Ok(c);
        }
    }
    unreachable!("greedy coloring always fits in max degree + 1 colors")
}

/// χ(g); zero for the empty graph.
pub fn exact_chromatic_number(g: &ConflictGraph) -> Result<usize> {
    exact_coloring(g).map(|c| c.num_colors())
}
