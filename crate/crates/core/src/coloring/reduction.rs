//! Graph k-coloring as a course-scheduling question, and the identity map
//! between their certificates.

use super::{k_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::ConflictGraph;

/// "Is this graph k-colorable?"
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphColoringQuestion {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

/// "Can these courses be scheduled in at most `max_slots` slots?"
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheduleQuestion {
    pub courses: ConflictGraph,
    pub max_slots: usize,
}

impl ScheduleQuestion {
    /// A schedule using at most `max_slots` slots, if any exists. Exhaustive,
    /// so subject to the exact-search size limit.
    pub fn find_schedule(&self) -> Result<Option<Coloring>> {
        k_coloring(&self.courses, self.max_slots)
    }

    pub fn answer(&self) -> Result<bool> {
        self.find_schedule().map(|s| s.is_some())
    }
}

/// One course per vertex, one conflict per edge, same bound. Linear in the
/// size of the graph.
pub fn coloring_instance_to_csp(q: &GraphColoringQuestion) -> Result<ScheduleQuestion> {
    Ok(ScheduleQuestion {
        courses: ConflictGraph::from_edges(q.vertex_count, q.edges.iter().copied())?,
        max_slots: q.k,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    ColoringToSchedule,
    ScheduleToColoring,
}

/// Carries a witness across the reduction. Vertex `i` and course `i` are the
/// same object, so the map is the identity in both directions.
pub fn translate_certificate(direction: Direction, witness: &[Option<usize>]) -> Result<Coloring> {
    let _ = direction;
    let colors = witness
        .iter()
        .enumerate()
        .map(|(v, c)| c.ok_or(Error::PartialWitness(v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Coloring::new(colors))
}
