//! Hamilton circuits, Hamilton paths and fixed-length circuits by pruned
//! backtracking, and the classification of how much of the cycle space the
//! Hamilton circuits span.
//!
//! All searches run on dense `u64` neighbor masks, so they are limited to
//! graphs with at most 64 vertices; the practical limit is far lower.
//!
//! Circuits are produced in canonical form: the sequence starts at the
//! smallest vertex of the circuit, and of the two directions the one whose
//! second vertex is smaller than its last vertex is taken. Every circuit is
//! therefore visited exactly once without a seen-set.
//!
//! The Hamilton search prunes a partial path `0, ..., head` whenever the
//! unvisited set `U` cannot be covered by a path that starts next to `head`
//! and ends next to the closing vertex:
//!
//! - `U` must induce a connected subgraph;
//! - every vertex of `U` with at most one neighbor inside `U` must be one of
//!   the two ends of that path, so there are at most two of them and they
//!   must attach to `head` or to the closing side respectively.
//!
//! [`Pruning::Articulation`] additionally rejects states where a cut vertex
//! of `U` splits it into three or more pieces, or into two pieces that the
//! two ends cannot reach from opposite sides. It never changes what is
//! visited, only how much of the tree is explored.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::cycle_space::cycle_space_dim;
use crate::gf2::{EdgeVector, Gf2Basis};
use crate::graph::Graph;
use crate::rng::UniformStream;

/// Largest graph the mask-based kernels accept.
pub const MAX_SEARCH_VERTICES: usize = 64;

/// Default maximum number of circuits visited by a single enumeration.
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HamiltonError {
    #[error("needs at least {need} vertices, graph has {n}")]
    TooFewVertices { need: usize, n: usize },
    #[error("graph has {n} vertices, exact search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("circuit length {len} outside 3..={n}")]
    LengthOutOfRange { len: usize, n: usize },
    #[error("enumeration cap of {0} circuits reached")]
    Capped(u64),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pruning {
    /// Connectivity of the unvisited region and end-degree feasibility.
    #[default]
    Basic,
    /// `Basic` plus cut-vertex feasibility.
    Articulation,
}

/// Knobs shared by the exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchLimits {
    /// Maximum number of circuits one enumeration may visit.
    pub cap: u64,
    /// Graphs above this many vertices are not searched at all.
    pub max_vertices: usize,
    pub pruning: Pruning,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, max_vertices: MAX_SEARCH_VERTICES, pruning: Pruning::Basic }
    }
}

impl SearchLimits {
    fn check_size(&self, n: usize) -> Result<(), HamiltonError> {
        let limit = self.max_vertices.min(MAX_SEARCH_VERTICES);
        if n > limit {
            Err(HamiltonError::TooLarge { n, limit })
        } else {
            Ok(())
        }
    }
}

/// Result of an enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    /// Circuits passed to the visitor.
    pub count: u64,
    /// The search space was exhausted.
    pub completed: bool,
    /// The search stopped because another circuit was found after `cap`.
    pub capped: bool,
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

enum Stop {
    Visitor,
    Cap,
}

struct Search<'v, F> {
    masks: Vec<u64>,
    n: usize,
    edge_id: Vec<usize>,
    pruning: Pruning,
    cap: u64,
    count: u64,
    path: Vec<usize>,
    vector: EdgeVector,
    visit: &'v mut F,
}

impl<'v, F> Search<'v, F>
where
    F: FnMut(&[usize], &EdgeVector) -> ControlFlow<()>,
{
    fn new(g: &Graph, limits: &SearchLimits, visit: &'v mut F) -> Self {
        let n = g.n();
        let mut edge_id = vec![usize::MAX; n * n];
        for (e, (u, v)) in g.edges().enumerate() {
            edge_id[u * n + v] = e;
            edge_id[v * n + u] = e;
        }
        Self {
            masks: g.neighbor_masks().expect("caller checked the size"),
            n,
            edge_id,
            pruning: limits.pruning,
            cap: limits.cap,
            count: 0,
            path: Vec::with_capacity(n),
            vector: EdgeVector::zeros(g.m()),
            visit,
        }
    }

    fn push(&mut self, v: usize) {
        if let Some(&last) = self.path.last() {
            self.vector.flip(self.edge_id[last * self.n + v]);
        }
        self.path.push(v);
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        if let Some(&last) = self.path.last() {
            self.vector.flip(self.edge_id[last * self.n + v]);
        }
    }

    /// Closes the current path into a circuit and reports it.
    fn emit_circuit(&mut self) -> ControlFlow<Stop> {
        if self.count >= self.cap {
            return ControlFlow::Break(Stop::Cap);
        }
        self.count += 1;
        let closing = self.edge_id[self.path[0] * self.n + *self.path.last().expect("path")];
        self.vector.flip(closing);
        let flow = (self.visit)(&self.path, &self.vector);
        self.vector.flip(closing);
        match flow {
            ControlFlow::Continue(()) => ControlFlow::Continue(()),
            ControlFlow::Break(()) => ControlFlow::Break(Stop::Visitor),
        }
    }

    fn connected(&self, set: u64) -> bool {
        if set == 0 {
            return true;
        }
        let mut reach = set & set.wrapping_neg();
        let mut frontier = reach;
        while frontier != 0 {
            let mut next = 0;
            for w in bits(frontier) {
                next |= self.masks[w];
            }
            next &= set & !reach;
            reach |= next;
            frontier = next;
        }
        reach == set
    }

    fn component_of(&self, set: u64, seed: u64) -> u64 {
        let mut reach = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0;
            for w in bits(frontier) {
                next |= self.masks[w];
            }
            next &= set & !reach;
            reach |= next;
            frontier = next;
        }
        reach
    }

    /// Can `unvisited` (non-empty) be covered by a path starting at a
    /// neighbor of `head` and ending in `ends`?
    fn feasible(&self, head: usize, unvisited: u64, ends: u64) -> bool {
        let starts = self.masks[head] & unvisited;
        let ends = ends & unvisited;
        if starts == 0 || ends == 0 {
            return false;
        }
        if unvisited.count_ones() == 1 {
            return starts & ends != 0;
        }
        let mut low = 0u64;
        for w in bits(unvisited) {
            match (self.masks[w] & unvisited).count_ones() {
                0 => return false,
                1 => low |= bit(w),
                _ => {}
            }
        }
        match low.count_ones() {
            0 => {}
            1 => {
                if low & (starts | ends) == 0 {
                    return false;
                }
            }
            2 => {
                let a = low & low.wrapping_neg();
                let b = low & !a;
                let forward = starts & a != 0 && ends & b != 0;
                let backward = starts & b != 0 && ends & a != 0;
                if !forward && !backward {
                    return false;
                }
            }
            _ => return false,
        }
        if !self.connected(unvisited) {
            return false;
        }
        if self.pruning == Pruning::Articulation && !self.cut_vertices_feasible(unvisited, starts, ends) {
            return false;
        }
        true
    }

    fn cut_vertices_feasible(&self, unvisited: u64, starts: u64, ends: u64) -> bool {
        if unvisited.count_ones() < 3 {
            return true;
        }
        for x in bits(unvisited) {
            let rest = unvisited & !bit(x);
            let first = self.component_of(rest, rest & rest.wrapping_neg());
            if first == rest {
                continue;
            }
            let other = rest & !first;
            let second = self.component_of(rest, other & other.wrapping_neg());
            if second != other {
                return false;
            }
            let forward = starts & first != 0 && ends & second != 0;
            let backward = starts & second != 0 && ends & first != 0;
            if !forward && !backward {
                return false;
            }
        }
        true
    }

    /// Extends the path from `head` over all of `unvisited`, finishing at a
    /// vertex of `ends`, and emits each completed circuit.
    fn extend_spanning(&mut self, head: usize, unvisited: u64, ends: u64) -> ControlFlow<Stop> {
        if unvisited == 0 {
            if ends & bit(head) != 0 {
                return self.emit_circuit();
            }
            return ControlFlow::Continue(());
        }
        if !self.feasible(head, unvisited, ends) {
            return ControlFlow::Continue(());
        }
        for w in bits(self.masks[head] & unvisited) {
            self.push(w);
            let flow = self.extend_spanning(w, unvisited & !bit(w), ends);
            self.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Looks for one spanning path with neighbors tried in random order,
    /// giving up after `budget` extensions. On success the path is left in
    /// place.
    fn probe(&mut self, head: usize, unvisited: u64, ends: u64, rng: &mut UniformStream, budget: &mut u32) -> bool {
        if unvisited == 0 {
            return ends & bit(head) != 0;
        }
        if *budget == 0 || !self.feasible(head, unvisited, ends) {
            return false;
        }
        *budget -= 1;
        let mut order = [0u8; 64];
        let mut len = 0;
        for w in bits(self.masks[head] & unvisited) {
            order[len] = w as u8;
            len += 1;
        }
        for i in (1..len).rev() {
            order.swap(i, (rng.next_u64() % (i as u64 + 1)) as usize);
        }
        for &w in &order[..len] {
            let w = usize::from(w);
            self.push(w);
            if self.probe(w, unvisited & !bit(w), ends, rng, budget) {
                return true;
            }
            self.pop();
        }
        false
    }

    /// Like `extend_spanning`, but only asks whether one path exists.
    fn path_exists(&self, head: usize, unvisited: u64, ends: u64) -> bool {
        if unvisited == 0 {
            return ends & bit(head) != 0;
        }
        if !self.feasible(head, unvisited, ends) {
            return false;
        }
        bits(self.masks[head] & unvisited).any(|w| self.path_exists(w, unvisited & !bit(w), ends))
    }

    /// Grows a path of `remaining` more vertices inside `allowed`, then
    /// closes it through `ends`.
    fn extend_length(&mut self, head: usize, allowed: u64, remaining: usize, ends: u64) -> ControlFlow<Stop> {
        if remaining == 0 {
            if ends & bit(head) != 0 {
                return self.emit_circuit();
            }
            return ControlFlow::Continue(());
        }
        if ends & allowed == 0 || (allowed.count_ones() as usize) < remaining {
            return ControlFlow::Continue(());
        }
        let mut next = self.masks[head] & allowed;
        if remaining == 1 {
            next &= ends;
        }
        for w in bits(next) {
            self.push(w);
            let flow = self.extend_length(w, allowed & !bit(w), remaining - 1, ends);
            self.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn finish(&self, flow: ControlFlow<Stop>) -> Enumeration {
        match flow {
            ControlFlow::Continue(()) => Enumeration { count: self.count, completed: true, capped: false },
            ControlFlow::Break(Stop::Visitor) => Enumeration { count: self.count, completed: false, capped: false },
            ControlFlow::Break(Stop::Cap) => Enumeration { count: self.count, completed: false, capped: true },
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// Runs `attempts` randomized searches for a Hamilton circuit and feeds each
/// one found to `visit` (repeats are possible). Returns how many were found.
fn probe_hamilton_circuits<F>(g: &Graph, attempts: usize, seed: u64, mut visit: F) -> u64
where
    F: FnMut(&EdgeVector) -> ControlFlow<()>,
{
    let n = g.n();
    let mut noop = |_: &[usize], _: &EdgeVector| ControlFlow::Continue(());
    let mut search = Search::new(g, &SearchLimits::default(), &mut noop);
    let mut rng = UniformStream::new(seed);
    let mut found = 0;
    for _ in 0..attempts {
        let mut budget = 64 * n as u32;
        search.push(0);
        let ok = search.probe(0, full_mask(n) & !bit(0), search.masks[0], &mut rng, &mut budget);
        if ok {
            found += 1;
            let closing = search.edge_id[*search.path.last().expect("path")];
            search.vector.flip(closing);
            let flow = visit(&search.vector);
            search.vector.flip(closing);
            if flow.is_break() {
                clear_path(&mut search);
                break;
            }
        }
        clear_path(&mut search);
    }
    found
}

fn clear_path<F>(search: &mut Search<'_, F>)
where
    F: FnMut(&[usize], &EdgeVector) -> ControlFlow<()>,
{
    while !search.path.is_empty() {
        search.pop();
    }
}

/// Visits every Hamilton circuit of `g` once, as its canonical vertex
/// sequence (starting at 0) and its edge vector.
pub fn enumerate_hamilton_circuits<F>(g: &Graph, limits: &SearchLimits, mut visit: F) -> Result<Enumeration, HamiltonError>
where
    F: FnMut(&[usize], &EdgeVector) -> ControlFlow<()>,
{
    let n = g.n();
    if n < 3 {
        return Err(HamiltonError::TooFewVertices { need: 3, n });
    }
    limits.check_size(n)?;
    let mut search = Search::new(g, limits, &mut visit);
    let full = full_mask(n);
    let flow = (|| {
        for a in bits(search.masks[0]) {
            // The last vertex must be a neighbor of 0 above `a`.
            let ends = search.masks[0] & !full_mask(a + 1);
            if ends == 0 {
                continue;
            }
            search.push(0);
            search.push(a);
            let flow = search.extend_spanning(a, full & !bit(0) & !bit(a), ends);
            search.pop();
            search.pop();
            flow?;
        }
        ControlFlow::Continue(())
    })();
    Ok(search.finish(flow))
}

/// Visits every circuit with exactly `len` vertices once.
pub fn enumerate_circuits_of_length<F>(
    g: &Graph,
    len: usize,
    limits: &SearchLimits,
    mut visit: F,
) -> Result<Enumeration, HamiltonError>
where
    F: FnMut(&[usize], &EdgeVector) -> ControlFlow<()>,
{
    let n = g.n();
    if len < 3 || len > n {
        return Err(HamiltonError::LengthOutOfRange { len, n });
    }
    if len == n {
        return enumerate_hamilton_circuits(g, limits, visit);
    }
    limits.check_size(n)?;
    let mut search = Search::new(g, limits, &mut visit);
    let full = full_mask(n);
    let flow = (|| {
        for anchor in 0..n {
            let above = full & !full_mask(anchor + 1);
            for b in bits(search.masks[anchor] & above) {
                let ends = search.masks[anchor] & above & !full_mask(b + 1);
                if ends == 0 {
                    continue;
                }
                search.push(anchor);
                search.push(b);
                let flow = search.extend_length(b, above & !bit(b), len - 2, ends);
                search.pop();
                search.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    })();
    Ok(search.finish(flow))
}

/// All Hamilton circuits as canonical vertex sequences.
pub fn hamilton_circuits(g: &Graph, limits: &SearchLimits) -> Result<Vec<Vec<usize>>, HamiltonError> {
    let mut out = Vec::new();
    let run = enumerate_hamilton_circuits(g, limits, |path, _| {
        out.push(path.to_vec());
        ControlFlow::Continue(())
    })?;
    if run.capped {
        return Err(HamiltonError::Capped(limits.cap));
    }
    Ok(out)
}

/// Whether `g` has a Hamilton circuit.
pub fn is_hamiltonian(g: &Graph, limits: &SearchLimits) -> Result<bool, HamiltonError> {
    if g.n() < 3 {
        return Ok(false);
    }
    let run = enumerate_hamilton_circuits(g, limits, |_, _| ControlFlow::Break(()))?;
    Ok(run.count > 0)
}

/// Whether a path from `from` to `to` covers every vertex except `skip`.
pub fn spanning_path_exists(
    g: &Graph,
    from: usize,
    to: usize,
    skip: Option<usize>,
    limits: &SearchLimits,
) -> Result<bool, HamiltonError> {
    limits.check_size(g.n())?;
    if from == to || skip == Some(from) || skip == Some(to) {
        return Ok(false);
    }
    let mut noop = |_: &[usize], _: &EdgeVector| ControlFlow::Continue(());
    let search = Search::new(g, limits, &mut noop);
    let mut unvisited = full_mask(g.n()) & !bit(from);
    if let Some(x) = skip {
        unvisited &= !bit(x);
    }
    Ok(search.path_exists(from, unvisited, bit(to)))
}

/// Every pair of distinct vertices is joined by a Hamilton path.
pub fn is_hamilton_connected(g: &Graph, limits: &SearchLimits) -> Result<bool, HamiltonError> {
    let n = g.n();
    if n < 2 {
        return Err(HamiltonError::TooFewVertices { need: 2, n });
    }
    for u in 0..n {
        for v in u + 1..n {
            if !spanning_path_exists(g, u, v, None, limits)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every pair of distinct vertices is joined by a path on at least `n - 1`
/// vertices.
pub fn is_long_path_connected(g: &Graph, limits: &SearchLimits) -> Result<bool, HamiltonError> {
    let n = g.n();
    if n < 2 {
        return Err(HamiltonError::TooFewVertices { need: 2, n });
    }
    for u in 0..n {
        for v in u + 1..n {
            let mut found = spanning_path_exists(g, u, v, None, limits)?;
            for x in (0..n).filter(|&x| x != u && x != v) {
                if found {
                    break;
                }
                found = spanning_path_exists(g, u, v, Some(x), limits)?;
            }
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// How much of `Z_1` the Hamilton circuits span.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HamKind {
    /// `g` is a forest: `Z_1` is trivial.
    VacuousNoCycle,
    /// The Hamilton circuits span `Z_1`.
    Full,
    /// The quotient of `Z_1` by the Hamilton span has this dimension (>= 1).
    Deficient(usize),
    /// `Z_1` is non-trivial and there is no Hamilton circuit.
    NoHamiltonCircuit,
    /// The search was capped or the graph is too large to search.
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HamStatus {
    pub kind: HamKind,
    pub circuits_examined: u64,
    /// Enumeration stopped once the rank reached the largest value possible:
    /// `dim Z_1`, or `dim Z_1 - 1` for a non-bipartite graph of even order.
    pub early_stopped: bool,
    /// Enumeration hit the cap before finishing.
    pub capped: bool,
    pub cycle_space_dim: usize,
    /// Rank of the circuits examined.
    pub rank: usize,
}

impl HamStatus {
    /// `dim Z_1 / <H(G)>`, when known.
    pub fn quotient_dim(&self) -> Option<usize> {
        match self.kind {
            HamKind::VacuousNoCycle | HamKind::Full => Some(0),
            HamKind::Deficient(d) => Some(d),
            HamKind::NoHamiltonCircuit => Some(self.cycle_space_dim),
            HamKind::Unknown => None,
        }
    }

    pub fn is_full(&self) -> bool {
        self.kind == HamKind::Full
    }
}

/// Seed of the randomized probes in [`hamilton_generated_status`].
const PROBE_SEED: u64 = 0x68_616d_7370_616e;

/// Streams Hamilton circuits into a basis, stopping as soon as the rank
/// cannot grow further. A short randomized phase runs first; if it does not
/// settle the answer, every Hamilton circuit is enumerated.
pub fn hamilton_generated_status(g: &Graph, limits: &SearchLimits) -> HamStatus {
    let mut status = HamStatus {
        kind: HamKind::Unknown,
        circuits_examined: 0,
        early_stopped: false,
        capped: false,
        cycle_space_dim: 0,
        rank: 0,
    };
    let (components, _) = g.components();
    let dim = g.m() + components - g.n();
    status.cycle_space_dim = dim;
    if dim == 0 {
        status.kind = HamKind::VacuousNoCycle;
        return status;
    }
    if components > 1 || g.min_degree().unwrap_or(0) < 2 {
        status.kind = HamKind::NoHamiltonCircuit;
        return status;
    }
    if limits.check_size(g.n()).is_err() {
        return status;
    }
    // With n even every Hamilton circuit has even length, so a non-bipartite
    // graph can reach at most the even-length subspace, of codimension 1.
    let ceiling = if g.n().is_multiple_of(2) && !g.is_bipartite() { dim - 1 } else { dim };
    let mut basis = Gf2Basis::new(g.m());
    // Random probes raise the rank much faster than the depth-first order,
    // where consecutive circuits share long prefixes.
    let mut stale = 0;
    let attempts = (4 * ceiling as u64 + 16).min(limits.cap) as usize;
    let probed = probe_hamilton_circuits(g, attempts, PROBE_SEED, |v| {
        if basis.insert(v).expect("same dimension") {
            stale = 0;
        } else {
            stale += 1;
        }
        if basis.rank() == ceiling || stale > g.n() + 16 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if basis.rank() == ceiling {
        status.circuits_examined = probed;
        status.rank = basis.rank();
        status.early_stopped = true;
        status.kind = if ceiling == dim { HamKind::Full } else { HamKind::Deficient(dim - ceiling) };
        return status;
    }
    let rest = SearchLimits { cap: limits.cap - probed, ..*limits };
    let run = enumerate_hamilton_circuits(g, &rest, |_, v| {
        basis.insert(v).expect("same dimension");
        if basis.rank() == ceiling {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .expect("size and vertex count checked");
    status.circuits_examined = probed + run.count;
    status.rank = basis.rank();
    status.capped = run.capped;
    status.early_stopped = basis.rank() == ceiling && !run.completed;
    status.kind = if basis.rank() == dim {
        HamKind::Full
    } else if basis.rank() == ceiling {
        HamKind::Deficient(dim - ceiling)
    } else if run.capped {
        HamKind::Unknown
    } else if run.count == 0 {
        HamKind::NoHamiltonCircuit
    } else {
        HamKind::Deficient(dim - basis.rank())
    };
    status
}

/// Whether the circuits with `n` or `n - 1` vertices span `Z_1`.
pub fn near_hamilton_span_full(g: &Graph, limits: &SearchLimits) -> Result<bool, HamiltonError> {
    let dim = cycle_space_dim(g);
    if dim == 0 {
        return Ok(true);
    }
    limits.check_size(g.n())?;
    let n = g.n();
    let mut basis = Gf2Basis::new(g.m());
    let mut feed = |_: &[usize], v: &EdgeVector| {
        basis.insert(v).expect("same dimension");
        if basis.rank() == dim {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };
    let mut capped = enumerate_hamilton_circuits(g, limits, &mut feed)?.capped;
    if n > 3 {
        capped |= enumerate_circuits_of_length(g, n - 1, limits, &mut feed)?.capped;
    }
    if basis.rank() == dim {
        Ok(true)
    } else if capped {
        Err(HamiltonError::Capped(limits.cap))
    } else {
        Ok(false)
    }
}

/// Membership in the three monotone classes combining path connectivity
/// with a spanning condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MClassMembership {
    /// Hamilton-connected and the Hamilton circuits span `Z_1`.
    pub in_m_ham_0: bool,
    /// Hamilton-connected and the Hamilton span has codimension 1.
    pub in_m_ham_1: bool,
    /// Long-path-connected and circuits of length `n`, `n - 1` span `Z_1`.
    pub in_m_near_0: bool,
}

/// Graphs with fewer than two vertices belong to none of the classes.
pub fn m_class_membership(g: &Graph, limits: &SearchLimits) -> Result<MClassMembership, HamiltonError> {
    if g.n() < 2 {
        return Ok(MClassMembership { in_m_ham_0: false, in_m_ham_1: false, in_m_near_0: false });
    }
    let hc = is_hamilton_connected(g, limits)?;
    let status = hamilton_generated_status(g, limits);
    let quotient = status.quotient_dim().ok_or(HamiltonError::Capped(limits.cap))?;
    let near = is_long_path_connected(g, limits)? && near_hamilton_span_full(g, limits)?;
    Ok(MClassMembership { in_m_ham_0: hc && quotient == 0, in_m_ham_1: hc && quotient == 1, in_m_near_0: near })
}
