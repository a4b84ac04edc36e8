//! Edmonds-Karp maximum flow.
//!
//! The residual graph keeps one arc per ordered vertex pair that carries
//! capacity in either direction, so an edge `u -> v` and its reverse share a
//! residual pair. Arcs out of each vertex are sorted by head id and BFS scans
//! them in that order, which fixes the sequence of augmenting paths.

use std::collections::VecDeque;

use crate::graph::FlowNetwork;

const NONE: usize = usize::MAX;

/// Residual capacities of a flow network under some flow.
#[derive(Debug, Clone)]
pub struct ResidualState {
    offsets: Vec<usize>,
    head: Vec<usize>,
    twin: Vec<usize>,
    residual: Vec<u64>,
    /// arc carrying each original edge `from -> to`, indexed like `FlowNetwork::edges`
    edge_arc: Vec<usize>,
}

impl ResidualState {
    /// Residual graph of the zero flow.
    pub fn new(net: &FlowNetwork) -> Self {
        let n = net.vertex_count();
        let edges = net.edges();

        // pair every edge with its reverse edge when one exists
        let mut pair_of_edge = vec![NONE; edges.len()];
        // (tail, head, cap forward, cap backward)
        let mut pairs: Vec<(usize, usize, u64, u64)> = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            match net.edge_index(e.to, e.from) {
                Some(j) if j < i => {
                    let p = pair_of_edge[j];
                    pair_of_edge[i] = p;
                    pairs[p].3 = e.capacity;
                }
                _ => {
                    pair_of_edge[i] = pairs.len();
                    pairs.push((e.from, e.to, e.capacity, 0));
                }
            }
        }

        let mut out_degree = vec![0usize; n];
        for &(u, v, _, _) in &pairs {
            out_degree[u] += 1;
            out_degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &out_degree {
            offsets.push(offsets.last().unwrap() + d);
        }

        // (head, pair, forward?) grouped by tail
        let arc_total = offsets[n];
        let mut slots: Vec<(usize, usize, bool)> = vec![(0, 0, false); arc_total];
        let mut fill = offsets[..n].to_vec();
        for (p, &(u, v, _, _)) in pairs.iter().enumerate() {
            slots[fill[u]] = (v, p, true);
            fill[u] += 1;
            slots[fill[v]] = (u, p, false);
            fill[v] += 1;
        }
        for u in 0..n {
            slots[offsets[u]..offsets[u + 1]].sort_unstable_by_key(|s| s.0);
        }

        let mut head = Vec::with_capacity(arc_total);
        let mut residual = Vec::with_capacity(arc_total);
        let mut arc_of_pair = vec![[NONE; 2]; pairs.len()];
        for (a, &(h, p, forward)) in slots.iter().enumerate() {
            head.push(h);
            let (_, _, fwd, bwd) = pairs[p];
            residual.push(if forward { fwd } else { bwd });
            arc_of_pair[p][usize::from(!forward)] = a;
        }
        let mut twin = vec![NONE; arc_total];
        for [f, b] in &arc_of_pair {
            twin[*f] = *b;
            twin[*b] = *f;
        }

        let edge_arc = edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let [f, b] = arc_of_pair[pair_of_edge[i]];
                if pairs[pair_of_edge[i]].0 == e.from {
                    f
                } else {
                    b
                }
            })
            .collect();

        Self {
            offsets,
            head,
            twin,
            residual,
            edge_arc,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    fn arcs(&self, u: usize) -> std::ops::Range<usize> {
        self.offsets[u]..self.offsets[u + 1]
    }

    fn find_arc(&self, u: usize, v: usize) -> Option<usize> {
        let range = self.arcs(u);
        let base = range.start;
        self.head[range].binary_search(&v).ok().map(|i| base + i)
    }

    /// Residual capacity `c_f(u, v)`; zero when no arc exists.
    pub fn residual(&self, u: usize, v: usize) -> u64 {
        if u >= self.vertex_count() {
            return 0;
        }
        self.find_arc(u, v).map_or(0, |a| self.residual[a])
    }

    /// BFS from `s`; fills `parent` with the arc used to reach each vertex.
    /// Stops as soon as `t` is discovered.
    fn bfs(&self, s: usize, t: usize, parent: &mut [usize], queue: &mut VecDeque<usize>) -> bool {
        parent.fill(NONE);
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for a in self.arcs(u) {
                let v = self.head[a];
                if v == s || parent[v] != NONE || self.residual[a] == 0 {
                    continue;
                }
                parent[v] = a;
                if v == t {
                    return true;
                }
                queue.push_back(v);
            }
        }
        false
    }

    /// Shortest `s -> t` path (fewest edges) through arcs with positive
    /// residual capacity, as a vertex sequence from `s` to `t`.
    pub fn augmenting_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if s >= n || t >= n || s == t {
            return None;
        }
        let mut parent = vec![NONE; n];
        let mut queue = VecDeque::new();
        if !self.bfs(s, t, &mut parent, &mut queue) {
            return None;
        }
        let mut path = vec![t];
        let mut v = t;
        while v != s {
            v = self.head[self.twin[parent[v]]];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }

    /// Pushes the bottleneck amount along the BFS tree path ending at `t`.
    fn augment(&mut self, s: usize, t: usize, parent: &[usize]) -> u64 {
        let mut delta = u64::MAX;
        let mut v = t;
        while v != s {
            let a = parent[v];
            delta = delta.min(self.residual[a]);
            v = self.head[self.twin[a]];
        }
        let mut v = t;
        while v != s {
            let a = parent[v];
            self.residual[a] -= delta;
            self.residual[self.twin[a]] += delta;
            v = self.head[self.twin[a]];
        }
        delta
    }

    /// Flow on an original edge, recovered from its residual pair.
    fn edge_flow(&self, edge: usize, capacity: u64) -> u64 {
        let a = self.edge_arc[edge];
        // net = c(u,v) - c_f(u,v); negative means the flow cancels through the reverse edge
        let net = capacity as i128 - self.residual[a] as i128;
        net.clamp(0, capacity as i128) as u64
    }
}

/// A maximum flow: its value and the flow on every network edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowResult {
    pub value: u64,
    /// indexed like [`FlowNetwork::edges`]
    pub edge_flow: Vec<u64>,
    pub augmentations: usize,
}

/// Edmonds-Karp: augment along BFS-shortest residual paths until none remain.
pub fn max_flow(net: &FlowNetwork) -> FlowResult {
    let mut state = ResidualState::new(net);
    let (s, t) = (net.source(), net.sink());
    let mut parent = vec![NONE; net.vertex_count()];
    let mut queue = VecDeque::with_capacity(net.vertex_count());
    let mut value = 0u64;
    let mut augmentations = 0;
    while state.bfs(s, t, &mut parent, &mut queue) {
        value += state.augment(s, t, &parent);
        augmentations += 1;
    }
    let edge_flow = net
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| state.edge_flow(i, e.capacity))
        .collect();
    FlowResult {
        value,
        edge_flow,
        augmentations,
    }
}

/// Saturated edges `u -> v` with `u` in `from_set` and `v` in `to_set`, in
/// edge insertion order.
pub fn saturated_edges(
    net: &FlowNetwork,
    result: &FlowResult,
    from_set: &[usize],
    to_set: &[usize],
) -> Vec<(usize, usize)> {
    let mut member = vec![0u8; net.vertex_count()];
    for &v in from_set {
        member[v] |= 1;
    }
    for &v in to_set {
        member[v] |= 2;
    }
    debug_assert!(member.iter().all(|&m| m != 3), "from_set and to_set overlap");
    net.edges()
        .iter()
        .zip(&result.edge_flow)
        .filter(|(e, &f)| {
            e.capacity > 0 && f == e.capacity && member[e.from] & 1 != 0 && member[e.to] & 2 != 0
        })
        .map(|(e, _)| (e.from, e.to))
        .collect()
}
