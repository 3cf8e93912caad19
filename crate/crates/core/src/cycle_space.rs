//! The cycle space `Z_1(G; F_2)`: fundamental bases, membership and
//! quotient dimensions.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::gf2::{EdgeVector, Gf2Basis, Gf2Error};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleSpaceError {
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error("generator {0} is not an element of the cycle space")]
    NotACycle(usize),
    #[error("vertex order must be a permutation of 0..{0}")]
    BadVertexOrder(usize),
}

/// Fundamental cycles of a BFS spanning forest.
#[derive(Clone, Debug)]
pub struct CycleBasis<'g> {
    graph: &'g Graph,
    cycles: Vec<EdgeVector>,
    components: usize,
}

impl<'g> CycleBasis<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// One vector per non-tree edge, in edge-index order of those edges.
    pub fn cycles(&self) -> &[EdgeVector] {
        &self.cycles
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// `m - n + c`.
    pub fn dim(&self) -> usize {
        self.cycles.len()
    }

    /// Membership by reduction against the fundamental cycles.
    pub fn contains(&self, v: &EdgeVector) -> Result<bool, Gf2Error> {
        let mut basis = Gf2Basis::new(self.graph.m());
        for c in &self.cycles {
            basis.insert(c)?;
        }
        basis.in_span(v)
    }
}

/// Fundamental cycle basis of the BFS forest rooted at the lowest vertex of
/// each component, scanning neighbors in increasing order.
pub fn fundamental_cycle_basis(g: &Graph) -> CycleBasis<'_> {
    let order: Vec<usize> = (0..g.n()).collect();
    build(g, &order)
}

/// Same construction, but roots and neighbor scans follow `order` (a
/// permutation of the vertices, highest priority first).
pub fn fundamental_cycle_basis_with_order<'g>(
    g: &'g Graph,
    order: &[usize],
) -> Result<CycleBasis<'g>, CycleSpaceError> {
    let mut seen = vec![false; g.n()];
    if order.len() != g.n() || order.iter().any(|&v| v >= g.n() || core::mem::replace(&mut seen[v], true)) {
        return Err(CycleSpaceError::BadVertexOrder(g.n()));
    }
    Ok(build(g, order))
}

fn build<'g>(g: &'g Graph, order: &[usize]) -> CycleBasis<'g> {
    let n = g.n();
    let mut rank = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut parent = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut tree_edge = vec![false; g.m()];
    let mut components = 0;
    let mut queue = VecDeque::new();
    let mut scan = Vec::new();
    for &root in order {
        if visited[root] {
            continue;
        }
        components += 1;
        visited[root] = true;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            scan.clear();
            scan.extend(g.neighbors(x));
            scan.sort_by_key(|&y| rank[y]);
            for &y in &scan {
                if !visited[y] {
                    visited[y] = true;
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    let e = g.edge_index(x, y).expect("neighbor edge exists");
                    parent_edge[y] = e;
                    tree_edge[e] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut cycles = Vec::with_capacity(g.m() + components - n);
    for (e, (u, v)) in g.edges().enumerate() {
        if tree_edge[e] {
            continue;
        }
        let mut c = EdgeVector::zeros(g.m());
        c.flip(e);
        let (mut a, mut b) = (u, v);
        while depth[a] > depth[b] {
            c.flip(parent_edge[a]);
            a = parent[a];
        }
        while depth[b] > depth[a] {
            c.flip(parent_edge[b]);
            b = parent[b];
        }
        while a != b {
            c.flip(parent_edge[a]);
            c.flip(parent_edge[b]);
            a = parent[a];
            b = parent[b];
        }
        cycles.push(c);
    }
    CycleBasis { graph: g, cycles, components }
}

/// Whether every vertex has even degree in the edge set `v`.
pub fn is_cycle(g: &Graph, v: &EdgeVector) -> Result<bool, Gf2Error> {
    if v.dim() != g.m() {
        return Err(Gf2Error::DimensionMismatch { expected: g.m(), found: v.dim() });
    }
    let mut odd = vec![false; g.n()];
    for e in v.support() {
        let (a, b) = g.edge(e);
        odd[a] ^= true;
        odd[b] ^= true;
    }
    Ok(!odd.contains(&true))
}

/// `dim Z_1 - rank(generators)`; every generator must lie in `Z_1`.
pub fn quotient_dim(g: &Graph, generators: &[EdgeVector]) -> Result<usize, CycleSpaceError> {
    let mut basis = Gf2Basis::new(g.m());
    for (i, v) in generators.iter().enumerate() {
        if !is_cycle(g, v)? {
            return Err(CycleSpaceError::NotACycle(i));
        }
        basis.insert(v)?;
    }
    Ok(cycle_space_dim(g) - basis.rank())
}

/// `m - n + c`, without building the basis.
pub fn cycle_space_dim(g: &Graph) -> usize {
    g.m() + g.components().0 - g.n()
}

/// Codimension in `Z_1` of the subspace of cycles with even support: 1 if
/// some cycle has odd length, else 0.
pub fn even_subspace_codim(g: &Graph) -> usize {
    usize::from(fundamental_cycle_basis(g).cycles().iter().any(|c| c.parity() == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_of_small_graphs() {
        assert_eq!(fundamental_cycle_basis(&Graph::path(6)).dim(), 0);
        assert_eq!(fundamental_cycle_basis(&Graph::k_hat(4).unwrap()).dim(), 7);
        assert_eq!(fundamental_cycle_basis(&Graph::complete(4)).dim(), 3);
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let b = fundamental_cycle_basis(&two_triangles);
        assert_eq!((b.dim(), b.components()), (2, 2));
    }

    #[test]
    fn fundamental_cycles_are_circuits() {
        for seed in 0..100 {
            let g = Graph::gnp(9, 0.45, seed).unwrap();
            for c in fundamental_cycle_basis(&g).cycles() {
                assert!(is_cycle(&g, c).unwrap());
                let sub = Graph::new(g.n(), c.support().map(|e| g.edge(e))).unwrap();
                let touched: Vec<usize> = (0..g.n()).filter(|&v| sub.degree(v) > 0).collect();
                assert!(touched.iter().all(|&v| sub.degree(v) == 2));
                let (_, labels) = sub.components();
                assert!(touched.iter().all(|&v| labels[v] == labels[touched[0]]));
            }
        }
    }

    #[test]
    fn is_cycle_examples() {
        let g = Graph::complete(4);
        assert!(is_cycle(&g, &EdgeVector::zeros(6)).unwrap());
        assert!(!is_cycle(&g, &EdgeVector::from_support(6, [0])).unwrap());
        assert!(is_cycle(&g, &EdgeVector::zeros(5)).is_err());
    }

    #[test]
    fn quotient_examples() {
        let g = Graph::complete(4);
        let e = |u, v| g.edge_index(u, v).unwrap();
        let hams = [
            EdgeVector::from_support(6, [e(0, 1), e(1, 2), e(2, 3), e(0, 3)]),
            EdgeVector::from_support(6, [e(0, 1), e(1, 3), e(2, 3), e(0, 2)]),
            EdgeVector::from_support(6, [e(0, 2), e(1, 2), e(1, 3), e(0, 3)]),
        ];
        assert_eq!(quotient_dim(&g, &hams), Ok(1));
        let basis = fundamental_cycle_basis(&g);
        assert_eq!(quotient_dim(&g, basis.cycles()), Ok(0));
        assert_eq!(
            quotient_dim(&g, &[EdgeVector::from_support(6, [0])]),
            Err(CycleSpaceError::NotACycle(0))
        );
    }

    #[test]
    fn forest_independence_under_reversed_order() {
        for seed in 0..100 {
            let g = Graph::gnp(8, 0.5, seed).unwrap();
            let rev: Vec<usize> = (0..g.n()).rev().collect();
            let a = fundamental_cycle_basis(&g);
            let b = fundamental_cycle_basis_with_order(&g, &rev).unwrap();
            assert_eq!(a.dim(), b.dim());
            assert_eq!(quotient_dim(&g, a.cycles()), Ok(0));
            assert_eq!(quotient_dim(&g, b.cycles()), Ok(0));
            for c in b.cycles() {
                assert!(a.contains(c).unwrap());
            }
        }
        assert!(fundamental_cycle_basis_with_order(&Graph::path(3), &[0, 0, 1]).is_err());
    }

    #[test]
    fn even_codim() {
        assert_eq!(even_subspace_codim(&Graph::k_hat(4).unwrap()), 0);
        assert_eq!(even_subspace_codim(&Graph::complete(4)), 1);
        assert_eq!(even_subspace_codim(&Graph::path(4)), 0);
    }
}
