//! Course scheduling as graph coloring.
//!
//! Courses are vertices, shared-student conflicts are edges and time slots are
//! colors. Colors are 0-based here; reports shown to people add one.

mod exact;
mod greedy;
mod reduction;

use std::fmt;

pub use exact::{exact_chromatic_number, exact_coloring, k_coloring, EXACT_LIMIT};
pub use greedy::{dsatur, welsh_powell, DSaturState};
pub use reduction::{
    coloring_instance_to_csp, translate_certificate, Direction, GraphColoringQuestion, ScheduleQuestion,
};

use crate::graph::ConflictGraph;
use crate::report::ValidationReport;

/// Total map from vertex to color index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    color_of: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    pub fn new(color_of: Vec<usize>) -> Self {
        let num_colors = color_of.iter().max().map_or(0, |&c| c + 1);
        Self { color_of, num_colors }
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.color_of[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.color_of
    }

    /// One more than the largest color used; zero for the empty graph.
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.color_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.color_of.is_empty()
    }

    /// Whether every color in `0..num_colors` is used.
    pub fn is_compact(&self) -> bool {
        let mut used = vec![false; self.num_colors];
        for &c in &self.color_of {
            used[c] = true;
        }
        used.into_iter().all(|u| u)
    }

    pub fn to_partial(&self) -> Vec<Option<usize>> {
        self.color_of.iter().copied().map(Some).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringViolation {
    /// The witness covers a different number of vertices than the graph has.
    WrongLength { expected: usize, actual: usize },
    Uncolored(usize),
    Monochromatic { u: usize, v: usize, color: usize },
}

impl fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongLength { expected, actual } => {
                write!(f, "schedule covers {actual} courses, instance has {expected}")
            }
            Self::Uncolored(v) => write!(f, "course {v} has no slot"),
            Self::Monochromatic { u, v, color } => {
                write!(f, "conflict ({u}, {v}) both in slot {}", color + 1)
            }
        }
    }
}

/// Checks that every course has a slot and no conflicting pair shares one.
/// One pass over the conflict pairs.
pub fn validate_assignment(g: &ConflictGraph, slots: &[Option<usize>]) -> ValidationReport<ColoringViolation> {
    let mut violations = Vec::new();
    let n = g.num_courses();
    if slots.len() != n {
        violations.push(ColoringViolation::WrongLength {
            expected: n,
            actual: slots.len(),
        });
    }
    let slot = |v: usize| slots.get(v).copied().flatten();
    for v in 0..n {
        if slot(v).is_none() {
            violations.push(ColoringViolation::Uncolored(v));
        }
    }
    for (u, v) in g.conflicts() {
        if let (Some(a), Some(b)) = (slot(u), slot(v)) {
            if a == b {
                violations.push(ColoringViolation::Monochromatic { u, v, color: a });
            }
        }
    }
    ValidationReport { violations }
}

pub fn validate_coloring(g: &ConflictGraph, c: &Coloring) -> ValidationReport<ColoringViolation> {
    validate_assignment(g, &c.to_partial())
}
