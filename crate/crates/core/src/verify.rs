//! Reproduction of the deterministic certificates around `K^{s^,s-1}`:
//! seven Hamilton circuits of `K^{4^,3}` with a rank-7 incidence matrix, the
//! Hamilton span of small members of the family, and degree-2 vertex deletion
//! as an executable check.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::cycle_space::cycle_space_dim;
use crate::gf2::{rank_of, EdgeVector, Gf2Basis};
use crate::graph::{Graph, GraphError};
use crate::hamilton::{
    enumerate_circuits_of_length, enumerate_hamilton_circuits, hamilton_generated_status, HamKind,
    HamStatus, HamiltonError, SearchLimits,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Hamilton(#[from] HamiltonError),
    #[error("vertex {vertex} has degree {degree}, expected 2")]
    NotDegreeTwo { vertex: usize, degree: usize },
}

/// The seven Hamilton circuits of `K^{4^,3}`, as closed vertex sequences.
pub const K43_CIRCUITS: [[usize; 9]; 7] = [
    [0, 1, 4, 5, 2, 3, 6, 7, 0],
    [0, 1, 6, 3, 4, 5, 2, 7, 0],
    [0, 1, 4, 3, 2, 5, 6, 7, 0],
    [0, 1, 2, 5, 4, 3, 6, 7, 0],
    [0, 1, 6, 5, 2, 3, 4, 7, 0],
    [0, 1, 2, 3, 6, 5, 4, 7, 0],
    [0, 1, 2, 5, 6, 3, 4, 7, 0],
];

/// Incidence matrix of [`K43_CIRCUITS`], transcribed by hand: one row per
/// edge in lexicographic order, one column per circuit.
pub const K43_GOLDEN_MATRIX: [[u8; 7]; 14] = [
    [1, 1, 1, 1, 1, 1, 1], // 0,1
    [1, 1, 1, 1, 1, 1, 1], // 0,7
    [0, 0, 0, 1, 0, 1, 1], // 1,2
    [1, 0, 1, 0, 0, 0, 0], // 1,4
    [0, 1, 0, 0, 1, 0, 0], // 1,6
    [1, 0, 1, 0, 1, 1, 0], // 2,3
    [1, 1, 1, 1, 1, 0, 1], // 2,5
    [0, 1, 0, 0, 0, 0, 0], // 2,7
    [0, 1, 1, 1, 1, 0, 1], // 3,4
    [1, 1, 0, 1, 0, 1, 1], // 3,6
    [1, 1, 0, 1, 0, 1, 0], // 4,5
    [0, 0, 0, 0, 1, 1, 1], // 4,7
    [0, 0, 1, 0, 1, 1, 1], // 5,6
    [1, 0, 1, 1, 0, 0, 0], // 6,7
];

/// Edge vector of a closed vertex sequence, if it is a Hamilton circuit of `g`.
pub fn hamilton_circuit_vector(g: &Graph, closed: &[usize]) -> Option<EdgeVector> {
    let n = g.n();
    if n < 3 || closed.len() != n + 1 || closed.first() != closed.last() {
        return None;
    }
    let mut seen = vec![false; n];
    for &v in &closed[..n] {
        if v >= n || core::mem::replace(&mut seen[v], true) {
            return None;
        }
    }
    let mut vector = EdgeVector::zeros(g.m());
    for w in closed.windows(2) {
        vector.flip(g.edge_index(w[0], w[1])?);
    }
    Some(vector)
}

/// Everything checked about `K^{4^,3}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K43Report {
    pub n: usize,
    pub m: usize,
    pub circuits: Vec<Vec<usize>>,
    /// Per circuit: is it a Hamilton circuit of the graph.
    pub circuit_valid: Vec<bool>,
    pub seven_circuits_valid: bool,
    /// Row labels of `matrix`.
    pub edges: Vec<(usize, usize)>,
    /// Rows are edges, columns are circuits; `0`/`1`.
    pub matrix: Vec<Vec<u8>>,
    pub matrix_matches_golden: bool,
    pub rank: usize,
    pub cycle_space_dim: usize,
    pub total_hamilton_circuits: u64,
    pub hamilton_rank: usize,
    pub quotient_dim: usize,
    pub full_span: bool,
}

impl K43Report {
    /// All checks hold: valid circuits, matching matrix, rank 7, twelve
    /// Hamilton circuits spanning the cycle space.
    pub fn passed(&self) -> bool {
        self.seven_circuits_valid
            && self.matrix_matches_golden
            && self.rank == 7
            && self.cycle_space_dim == 7
            && self.total_hamilton_circuits == 12
            && self.quotient_dim == 0
            && self.full_span
    }
}

pub fn verify_k43() -> K43Report {
    let g = Graph::k_hat(4).expect("s = 4 is valid");
    let vectors: Vec<Option<EdgeVector>> =
        K43_CIRCUITS.iter().map(|c| hamilton_circuit_vector(&g, c)).collect();
    let circuit_valid: Vec<bool> = vectors.iter().map(Option::is_some).collect();
    let columns: Vec<EdgeVector> =
        vectors.iter().map(|v| v.clone().unwrap_or_else(|| EdgeVector::zeros(g.m()))).collect();
    let matrix: Vec<Vec<u8>> = (0..g.m())
        .map(|e| columns.iter().map(|c| u8::from(c.get(e))).collect())
        .collect();
    let matrix_matches_golden =
        matrix.len() == K43_GOLDEN_MATRIX.len() && matrix.iter().zip(&K43_GOLDEN_MATRIX).all(|(a, b)| a[..] == b[..]);

    let mut basis = Gf2Basis::new(g.m());
    let total = enumerate_hamilton_circuits(&g, &SearchLimits::default(), |_, v| {
        basis.insert(v).expect("same dimension");
        ControlFlow::Continue(())
    })
    .expect("K^{4^,3} is small");
    let dim = cycle_space_dim(&g);
    K43Report {
        n: g.n(),
        m: g.m(),
        circuits: K43_CIRCUITS.iter().map(|c| c.to_vec()).collect(),
        seven_circuits_valid: circuit_valid.iter().all(|&b| b),
        circuit_valid,
        edges: g.edges().collect(),
        matrix,
        matrix_matches_golden,
        rank: rank_of(&columns).expect("same dimension"),
        cycle_space_dim: dim,
        total_hamilton_circuits: total.count,
        hamilton_rank: basis.rank(),
        quotient_dim: dim - basis.rank(),
        full_span: total.completed && basis.rank() == dim,
    }
}

/// Exhaustive census of the Hamilton circuits of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub circuits: u64,
    pub rank: usize,
    /// `false` when the enumeration cap was hit; counts are then lower bounds.
    pub completed: bool,
}

/// Hamilton span of `K^{s^,s-1}`: the early-stopping status plus an
/// exhaustive count of all Hamilton circuits and their rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KHatReport {
    pub s: usize,
    pub n: usize,
    pub m: usize,
    pub cycle_space_dim: usize,
    pub status: HamStatus,
    pub census: Census,
}

pub fn check_k_hat(s: usize, limits: &SearchLimits) -> Result<KHatReport, VerifyError> {
    let g = Graph::k_hat(s)?;
    let status = hamilton_generated_status(&g, limits);
    let mut basis = Gf2Basis::new(g.m());
    let run = enumerate_hamilton_circuits(&g, limits, |_, v| {
        basis.insert(v).expect("same dimension");
        ControlFlow::Continue(())
    })?;
    Ok(KHatReport {
        s,
        n: g.n(),
        m: g.m(),
        cycle_space_dim: cycle_space_dim(&g),
        status,
        census: Census { circuits: run.count, rank: basis.rank(), completed: run.completed },
    })
}

/// Why degree-2 vertex deletion does not apply to a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Inapplicable {
    Forest,
    Circuit,
    NoDegreeTwoVertex,
    NotHamiltonGenerated(HamKind),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeletionOutcome {
    /// Every degree-2 vertex deletion leaves a bipartite graph.
    Pass,
    Inapplicable(Inapplicable),
    /// Deleting this degree-2 vertex leaves a non-bipartite graph.
    Counterexample(usize),
    /// The Hamilton span could not be decided within the limits.
    Unknown,
}

/// If `g` is neither a forest nor a circuit, its Hamilton circuits span the
/// cycle space and it has a degree-2 vertex, then deleting any degree-2
/// vertex leaves a bipartite graph. Checks that implication on `g`.
pub fn check_degree2_deletion(g: &Graph, limits: &SearchLimits) -> DeletionOutcome {
    if g.is_forest() {
        return DeletionOutcome::Inapplicable(Inapplicable::Forest);
    }
    if g.is_circuit() {
        return DeletionOutcome::Inapplicable(Inapplicable::Circuit);
    }
    let deg2 = g.degree2_vertices();
    if deg2.is_empty() {
        return DeletionOutcome::Inapplicable(Inapplicable::NoDegreeTwoVertex);
    }
    match hamilton_generated_status(g, limits).kind {
        HamKind::Full => {}
        HamKind::Unknown => return DeletionOutcome::Unknown,
        other => return DeletionOutcome::Inapplicable(Inapplicable::NotHamiltonGenerated(other)),
    }
    for v in deg2 {
        if !g.delete_vertex(v).expect("vertex in range").is_bipartite() {
            return DeletionOutcome::Counterexample(v);
        }
    }
    DeletionOutcome::Pass
}

/// Edge indices of the maximal run of degree-2 vertices through `v`,
/// extended on each side up to the first vertex whose degree is not 2.
pub fn degree2_chain(g: &Graph, v: usize) -> Result<Vec<usize>, VerifyError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
    }
    if g.degree(v) != 2 {
        return Err(VerifyError::NotDegreeTwo { vertex: v, degree: g.degree(v) });
    }
    let mut chain = Vec::new();
    let mut ends = g.neighbors(v);
    let (a, b) = (ends.next().expect("degree 2"), ends.next().expect("degree 2"));
    for start in [a, b] {
        let (mut prev, mut cur) = (v, start);
        let e = g.edge_index(prev, cur).expect("adjacent");
        if chain.contains(&e) {
            // The other direction already walked all the way round.
            break;
        }
        chain.push(e);
        while cur != v && g.degree(cur) == 2 {
            let next = g.neighbors(cur).find(|&x| x != prev).expect("degree 2");
            chain.push(g.edge_index(cur, next).expect("adjacent"));
            prev = cur;
            cur = next;
        }
    }
    chain.sort_unstable();
    chain.dedup();
    Ok(chain)
}

/// Whether every circuit of `g` contains all or none of the edges of
/// [`degree2_chain`]`(g, v)`, checked over all circuits of every length.
pub fn check_all_or_none(g: &Graph, v: usize, limits: &SearchLimits) -> Result<bool, VerifyError> {
    let chain = degree2_chain(g, v)?;
    let mut holds = true;
    for len in 3..=g.n() {
        let run = enumerate_circuits_of_length(g, len, limits, |_, c| {
            let hit = chain.iter().filter(|&&e| c.get(e)).count();
            if hit != 0 && hit != chain.len() {
                holds = false;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })?;
        if !holds {
            return Ok(false);
        }
        if run.capped {
            return Err(HamiltonError::Capped(limits.cap).into());
        }
    }
    Ok(true)
}
