//! Simple undirected graphs with a canonical edge indexing.
//!
//! Vertices are `0..n`. Edges are stored once as pairs `(u, v)` with `u < v`,
//! sorted lexicographically; the position of a pair in that order is its edge
//! index, which fixes the coordinates of every [`EdgeVector`](crate::EdgeVector).
//! Adjacency is kept as sorted neighbor lists so that sparse graphs with
//! `10^5` vertices stay cheap; the exact search kernels derive dense `u64`
//! neighbor masks on demand through [`Graph::neighbor_masks`].

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;
use thiserror::Error;

use crate::rng::UniformStream;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("K^(s^,s-1) needs s >= 3, got {0}")]
    KHatTooSmall(usize),
    #[error("square of a circuit needs n >= 5, got {0}")]
    SquareCycleTooSmall(usize),
    #[error("a circuit needs n >= 3, got {0}")]
    CycleTooSmall(usize),
    #[error("edge probability {0} is not in [0, 1]")]
    InvalidProbability(f64),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph has no vertices")]
    EmptyGraph,
}

/// A simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an arbitrary list of vertex pairs.
    ///
    /// Pairs may be given in either orientation and in any order. Loops,
    /// repeated pairs and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            edges.push((u as u32, v as u32));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0 as usize, w[0].1 as usize));
        }
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// `edges` must be strictly increasing pairs `(u, v)` with `u < v < n`.
    fn from_sorted_edges(n: usize, edges: Vec<(u32, u32)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && (v as usize) < n));
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut adj: Vec<Vec<u32>> = deg.iter().map(|&d| Vec::with_capacity(d)).collect();
        // Lexicographic order pushes smaller neighbors first on both sides,
        // so every list comes out sorted.
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        Self { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u as u32, v as u32));
            }
        }
        Self::from_sorted_edges(n, edges)
    }

    /// The circuit `0, 1, ..., n-1, 0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooSmall(n));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| ((i - 1) as u32, i as u32)).collect();
        Self::from_sorted_edges(n, edges)
    }

    /// `K^{s^,s-1}`: the complete bipartite graph between the odd vertices
    /// `1, 3, ..., 2s-1` and the even vertices `2, 4, ..., 2s-2`, plus vertex
    /// `0` joined to `1` and `2s-1`.
    pub fn k_hat(s: usize) -> Result<Self, GraphError> {
        if s < 3 {
            return Err(GraphError::KHatTooSmall(s));
        }
        let n = 2 * s;
        let mut pairs = vec![(0, 1), (0, 2 * s - 1)];
        for odd in (1..n).step_by(2) {
            for even in (2..n - 1).step_by(2) {
                pairs.push((odd, even));
            }
        }
        Self::new(n, pairs)
    }

    /// The square `C_n^2` of the circuit on `n` vertices.
    pub fn square_cycle(n: usize) -> Result<Self, GraphError> {
        if n < 5 {
            return Err(GraphError::SquareCycleTooSmall(n));
        }
        Self::new(n, (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)]))
    }

    /// Samples `G(n, p)` with one uniform variate per vertex pair.
    ///
    /// Pairs are visited in lexicographic edge order and `{u, v}` is kept when
    /// its variate is below `p`. The stream position of every pair is fixed,
    /// so two calls with the same seed and `p1 <= p2` return nested edge sets.
    pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Self, GraphError> {
        check_probability(p)?;
        let mut stream = UniformStream::new(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if stream.next_f64() < p {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// Samples `G(n, p)` by geometric skipping over the lexicographic pair
    /// order: one variate per kept edge instead of one per pair.
    ///
    /// Same distribution as [`Graph::gnp`], but a different consumption of
    /// the stream, so the two samplers do not produce the same graph for the
    /// same seed.
    pub fn gnp_geometric(n: usize, p: f64, seed: u64) -> Result<Self, GraphError> {
        check_probability(p)?;
        if p == 0.0 || n < 2 {
            return Ok(Self::empty(n));
        }
        if p == 1.0 {
            return Ok(Self::complete(n));
        }
        let mut stream = UniformStream::new(seed);
        let log_q = libm::log1p(-p);
        let mut edges = Vec::new();
        // (u, v) is the last visited pair; v == u means "before row u".
        let (mut u, mut v) = (0usize, 0usize);
        loop {
            let r = stream.next_f64();
            let skip = libm::floor(libm::log1p(-r) / log_q);
            let skip = if skip < (n * n) as f64 { skip as usize } else { n * n };
            v += 1 + skip;
            while v >= n {
                let overflow = v - n;
                u += 1;
                if u + 1 >= n {
                    return Ok(Self::from_sorted_edges(n, edges));
                }
                v = u + 1 + overflow;
            }
            edges.push((u as u32, v as u32));
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in index order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        let (u, v) = self.edges[index];
        (u as usize, v as usize)
    }

    /// Index of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u == v || u >= self.n || v >= self.n {
            return None;
        }
        let key = if u < v { (u as u32, v as u32) } else { (v as u32, u as u32) };
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&w| w as usize)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// Dense neighbor masks, one `u64` per vertex; `None` when `n > 64`.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|ns| ns.iter().fold(0u64, |acc, &w| acc | 1 << w))
                .collect(),
        )
    }

    /// Deletes `v` and relabels the survivors `0..n-1` in their old order.
    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let relabel = |x: u32| if (x as usize) > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a as usize != v && b as usize != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Ok(Self::from_sorted_edges(self.n - 1, edges))
    }

    /// A copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        Self::new(self.n, self.edges().chain(core::iter::once((u, v))))
    }

    /// Connected components: the count and a component label per vertex.
    /// Labels are assigned in order of each component's smallest vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = count;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn is_connected(&self) -> bool {
        self.components().0 <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().0 == self.n
    }

    /// Connected and 2-regular.
    pub fn is_circuit(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|ns| ns.len() == 2) && self.is_connected()
    }

    /// A proper 2-coloring, or an odd circuit (as a closed vertex sequence
    /// without the repeated first vertex) proving there is none.
    pub fn bipartition(&self) -> Bipartition {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return Bipartition::OddCycle(odd_cycle(x, y, &parent, &depth));
                    }
                }
            }
        }
        Bipartition::Coloring(color)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Coloring(_))
    }

    /// Triangles through each vertex, and the total number of triangles.
    pub fn triangle_counts(&self) -> (u64, Vec<u64>) {
        let mut per_vertex = vec![0u64; self.n];
        let mut total = 0u64;
        for &(u, v) in &self.edges {
            // Count each triangle {u, v, w} once, at its two smallest vertices.
            for w in sorted_intersection(&self.adj[u as usize], &self.adj[v as usize]) {
                if w > v {
                    total += 1;
                    per_vertex[u as usize] += 1;
                    per_vertex[v as usize] += 1;
                    per_vertex[w as usize] += 1;
                }
            }
        }
        (total, per_vertex)
    }

    pub fn has_triangle(&self) -> bool {
        if let Some(masks) = self.neighbor_masks() {
            return self.edges.iter().any(|&(u, v)| masks[u as usize] & masks[v as usize] != 0);
        }
        self.edges
            .iter()
            .any(|&(u, v)| sorted_intersection(&self.adj[u as usize], &self.adj[v as usize]).next().is_some())
    }

    pub fn degree2_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 2).collect()
    }

    /// The structural summary used by reports and predicates.
    pub fn structure(&self) -> Result<Structure, GraphError> {
        let min_degree = self.min_degree().ok_or(GraphError::EmptyGraph)?;
        let (components, _) = self.components();
        Ok(Structure {
            n: self.n,
            m: self.m(),
            min_degree,
            max_degree: self.adj.iter().map(Vec::len).max().unwrap_or(0),
            components,
            is_forest: self.m() + components == self.n,
            is_circuit: self.is_circuit(),
            is_connected: components == 1,
            bipartition: self.bipartition(),
            has_triangle: self.has_triangle(),
            degree2_vertices: self.degree2_vertices(),
        })
    }
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::InvalidProbability(p))
    }
}

fn sorted_intersection<'a>(a: &'a [u32], b: &'a [u32]) -> impl Iterator<Item = u32> + 'a {
    let (mut i, mut j) = (0, 0);
    core::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    let x = a[i];
                    i += 1;
                    j += 1;
                    return Some(x);
                }
            }
        }
        None
    })
}

/// `x` and `y` are adjacent, same color, hence same BFS depth.
fn odd_cycle(x: usize, y: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    debug_assert_eq!(depth[x], depth[y]);
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Outcome of a 2-coloring attempt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartition {
    /// `color[v]` in `{0, 1}`; the vertex of smallest index in each component
    /// gets color 0.
    Coloring(Vec<u8>),
    /// An odd circuit, listed as its vertex sequence.
    OddCycle(Vec<usize>),
}

/// Structural summary of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub components: usize,
    pub is_forest: bool,
    pub is_circuit: bool,
    pub is_connected: bool,
    pub bipartition: Bipartition,
    pub has_triangle: bool,
    pub degree2_vertices: Vec<usize>,
}

impl Structure {
    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition, Bipartition::Coloring(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_hat_sizes() {
        let g = Graph::k_hat(4).unwrap();
        assert_eq!((g.n(), g.m()), (8, 14));
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(1), 4);
        let g = Graph::k_hat(3).unwrap();
        assert_eq!((g.n(), g.m()), (6, 8));
        assert_eq!(Graph::k_hat(2), Err(GraphError::KHatTooSmall(2)));
    }

    #[test]
    fn k_hat_edge_order_is_lexicographic() {
        let g = Graph::k_hat(4).unwrap();
        let expected = [
            (0, 1), (0, 7), (1, 2), (1, 4), (1, 6), (2, 3), (2, 5),
            (2, 7), (3, 4), (3, 6), (4, 5), (4, 7), (5, 6), (6, 7),
        ];
        assert!(g.edges().eq(expected.iter().copied()));
        assert_eq!(g.edge_index(7, 6), Some(13));
        assert_eq!(g.edge_index(1, 3), None);
    }

    #[test]
    fn k_hat_family_invariants() {
        // At s = 3 the middle odd vertex 3 has degree s - 1 = 2 as well.
        assert_eq!(Graph::k_hat(3).unwrap().degree2_vertices(), vec![0, 3]);
        for s in 3..12 {
            let g = Graph::k_hat(s).unwrap();
            assert_eq!(g.n(), 2 * s);
            assert_eq!(g.m(), s * (s - 1) + 2);
            if s >= 4 {
                assert_eq!(g.degree2_vertices(), vec![0]);
            }
            assert!(g.is_bipartite());
        }
    }

    #[test]
    fn square_cycles() {
        let g = Graph::square_cycle(5).unwrap();
        assert_eq!(g, Graph::complete(5));
        let g = Graph::square_cycle(6).unwrap();
        assert_eq!(g.m(), 12);
        assert!((0..6).all(|v| g.degree(v) == 4));
        let g = Graph::square_cycle(7).unwrap();
        for v in 0..7 {
            let mut expected: Vec<usize> = [1, 2, 5, 6].iter().map(|d| (v + d) % 7).collect();
            expected.sort();
            assert_eq!(g.neighbors(v).collect::<Vec<_>>(), expected);
        }
        assert_eq!(Graph::square_cycle(4), Err(GraphError::SquareCycleTooSmall(4)));
    }

    #[test]
    fn gnp_extremes_and_reproducibility() {
        assert_eq!(Graph::gnp(9, 0.0, 1).unwrap().m(), 0);
        assert_eq!(Graph::gnp(9, 1.0, 1).unwrap(), Graph::complete(9));
        assert_eq!(Graph::gnp_geometric(9, 0.0, 1).unwrap().m(), 0);
        assert_eq!(Graph::gnp_geometric(9, 1.0, 1).unwrap(), Graph::complete(9));
        assert_eq!(Graph::gnp(30, 0.4, 99).unwrap(), Graph::gnp(30, 0.4, 99).unwrap());
        assert_eq!(
            Graph::gnp_geometric(300, 0.04, 99).unwrap(),
            Graph::gnp_geometric(300, 0.04, 99).unwrap()
        );
        assert!(matches!(Graph::gnp(3, 1.5, 0), Err(GraphError::InvalidProbability(_))));
        assert!(matches!(Graph::gnp(3, -0.1, 0), Err(GraphError::InvalidProbability(_))));
    }

    #[test]
    fn gnp_shared_variates_couple_monotonically() {
        for seed in 0..50 {
            let lo = Graph::gnp(20, 0.2, seed).unwrap();
            let hi = Graph::gnp(20, 0.55, seed).unwrap();
            assert!(lo.edges().all(|(u, v)| hi.has_edge(u, v)));
        }
    }

    #[test]
    fn structure_of_k_hat() {
        let s = Graph::k_hat(4).unwrap().structure().unwrap();
        assert!(s.is_bipartite());
        assert_eq!(s.bipartition, Bipartition::Coloring(vec![0, 1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(s.min_degree, 2);
        assert_eq!(s.degree2_vertices, vec![0]);
        assert!(!s.is_forest && !s.is_circuit && s.is_connected && !s.has_triangle);
    }

    #[test]
    fn structure_small_cases() {
        let c7 = Graph::cycle(7).unwrap().structure().unwrap();
        assert!(c7.is_circuit && !c7.is_forest);
        match c7.bipartition {
            Bipartition::OddCycle(ref c) => assert_eq!(c.len(), 7),
            _ => panic!("C_7 is not bipartite"),
        }
        let k4 = Graph::complete(4).structure().unwrap();
        assert!(k4.has_triangle && !k4.is_bipartite());
        assert_eq!(Graph::empty(0).structure(), Err(GraphError::EmptyGraph));
        let path = Graph::path(4).structure().unwrap();
        assert!(path.is_forest && !path.is_circuit && path.is_bipartite());
    }

    #[test]
    fn odd_cycle_witness_is_a_circuit() {
        for seed in 0..200 {
            let g = Graph::gnp(9, 0.4, seed).unwrap();
            if let Bipartition::OddCycle(c) = g.bipartition() {
                assert_eq!(c.len() % 2, 1);
                for i in 0..c.len() {
                    assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
                let mut sorted = c.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), c.len());
            }
        }
    }

    #[test]
    fn delete_vertex_examples() {
        let g = Graph::k_hat(4).unwrap().delete_vertex(0).unwrap();
        assert_eq!((g.n(), g.m()), (7, 12));
        assert_eq!(g.structure().unwrap().bipartition, Bipartition::Coloring(vec![0, 1, 0, 1, 0, 1, 0]));
        for v in 0..4 {
            assert_eq!(Graph::complete(4).delete_vertex(v).unwrap(), Graph::complete(3));
        }
        let g = Graph::path(3).delete_vertex(1).unwrap();
        assert_eq!((g.n(), g.m()), (2, 0));
        assert_eq!(
            Graph::path(3).delete_vertex(3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn constructor_rejects_bad_pairs() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn triangle_counts_of_complete_graph() {
        let (total, per) = Graph::complete(6).triangle_counts();
        assert_eq!(total, 20);
        assert!(per.iter().all(|&t| t == 10));
    }
}
