//! Dense integer-id graph representations shared by the solvers.
//!
//! Vertices are `0..n`. Name legends (patients, beds, courses) live with the
//! problem modules.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A directed edge with integer capacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
}

/// Directed capacitated graph with a distinguished source and sink.
///
/// At most one edge is stored per ordered vertex pair; inserting the same
/// pair again adds to its capacity.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    vertex_count: usize,
    source: usize,
    sink: usize,
    edges: Vec<Edge>,
    index: HashMap<(usize, usize), usize>,
}

impl FlowNetwork {
    pub fn new(vertex_count: usize, source: usize, sink: usize) -> Result<Self> {
        for v in [source, sink] {
            if v >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                });
            }
        }
        if source == sink {
            return Err(Error::SourceIsSink(source));
        }
        Ok(Self {
            vertex_count,
            source,
            sink,
            edges: Vec::new(),
            index: HashMap::new(),
        })
    }

    pub fn add_edge(&mut self, from: usize, to: usize, capacity: u64) -> Result<()> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        if from == to {
            return Err(Error::SelfLoop(from));
        }
        match self.index.get(&(from, to)) {
            Some(&i) => self.edges[i].capacity += capacity,
            None => {
                self.index.insert((from, to), self.edges.len());
                self.edges.push(Edge { from, to, capacity });
            }
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Edges in first-insertion order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Position of the edge `from -> to` in [`FlowNetwork::edges`].
    pub fn edge_index(&self, from: usize, to: usize) -> Option<usize> {
        self.index.get(&(from, to)).copied()
    }

    /// Capacity of `from -> to`, zero when the edge is absent.
    pub fn capacity(&self, from: usize, to: usize) -> u64 {
        self.edge_index(from, to)
            .map_or(0, |i| self.edges[i].capacity)
    }
}

/// Undirected simple graph of course conflicts.
///
/// Duplicate pair inserts are ignored, so generators may propose the same
/// pair twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    adjacency: Vec<Vec<u32>>,
    edge_count: usize,
}

impl ConflictGraph {
    pub fn new(num_courses: usize) -> Self {
        assert!(num_courses <= u32::MAX as usize, "course ids must fit in 32 bits");
        Self {
            adjacency: vec![Vec::new(); num_courses],
            edge_count: 0,
        }
    }

    pub fn from_edges(num_courses: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(num_courses);
        for (u, v) in edges {
            g.add_conflict(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.push_unchecked(u, v);
            }
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            let v = (u + 1) % n;
            g.add_conflict(u, v).expect("cycle needs at least 3 vertices");
        }
        g
    }

    /// Inserts the pair `{u, v}`. Returns whether the pair was new.
    pub fn add_conflict(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.num_courses();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_conflict(u, v) {
            return Ok(false);
        }
        self.push_unchecked(u, v);
        Ok(true)
    }

    /// Caller guarantees the pair is valid and not yet present.
    pub(crate) fn push_unchecked(&mut self, u: usize, v: usize) {
        self.adjacency[u].push(v as u32);
        self.adjacency[v].push(u as u32);
        self.edge_count += 1;
    }

    pub fn num_courses(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_conflicts(&self) -> usize {
        self.edge_count
    }

    pub fn has_conflict(&self, u: usize, v: usize) -> bool {
        match (self.adjacency.get(u), self.adjacency.get(v)) {
            (Some(a), Some(b)) => {
                // scan the shorter list
                if a.len() <= b.len() {
                    a.contains(&(v as u32))
                } else {
                    b.contains(&(u as u32))
                }
            }
            _ => false,
        }
    }

    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&u| u as usize)
    }

    /// Degree of an in-range vertex.
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.num_courses(),
            })
    }

    /// Maximum degree Δ; zero for empty or edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Conflict pairs as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn conflicts(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().map(|&v| v as usize).filter(move |&v| u < v).map(move |v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }
}
