//! Invariants checked over many random or exhaustively listed small graphs.

mod common;

use std::collections::HashSet;
use std::ops::ControlFlow;

use common::Lcg;
use hamspan_core::cycle_space::{
    cycle_space_dim, even_subspace_codim, fundamental_cycle_basis, is_cycle, quotient_dim,
};
use hamspan_core::hamilton::{
    enumerate_circuits_of_length, enumerate_hamilton_circuits, m_class_membership, HamiltonError,
};
use hamspan_core::verify::{check_all_or_none, check_degree2_deletion, DeletionOutcome};
use hamspan_core::{hamilton_generated_status, EdgeVector, Graph, HamKind, SearchLimits};

fn limits() -> SearchLimits {
    SearchLimits::default()
}

fn hamilton_vectors(g: &Graph) -> Vec<EdgeVector> {
    let mut out = Vec::new();
    if g.n() >= 3 {
        enumerate_hamilton_circuits(g, &limits(), |_, v| {
            out.push(v.clone());
            ControlFlow::Continue(())
        })
        .unwrap();
    }
    out
}

#[test]
fn delete_vertex_preserves_surviving_adjacency() {
    let mut rng = Lcg(1);
    for _ in 0..500 {
        let n = 1 + rng.below(8) as usize;
        let g = rng.graph(n, 0.5);
        let v = rng.below(n as u64) as usize;
        let h = g.delete_vertex(v).unwrap();
        let old = |x: usize| if x < v { x } else { x + 1 };
        let naive = Graph::new(
            n - 1,
            (0..n - 1).flat_map(|a| (a + 1..n - 1).map(move |b| (a, b))).filter(|&(a, b)| g.has_edge(old(a), old(b))),
        )
        .unwrap();
        assert_eq!(h, naive);
    }
}

#[test]
fn bipartite_iff_no_odd_circuit_on_all_graphs_up_to_six_vertices() {
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
            let mut odd = false;
            for len in (3..=n).step_by(2) {
                enumerate_circuits_of_length(&g, len, &limits(), |_, _| {
                    odd = true;
                    ControlFlow::Break(())
                })
                .unwrap();
            }
            assert_eq!(g.is_bipartite(), !odd);
        }
    }
}

#[test]
fn cycle_space_dimension_and_membership() {
    let mut rng = Lcg(2);
    for _ in 0..10_000 {
        let n = 1 + rng.below(7) as usize;
        let p = [0.2, 0.4, 0.6, 0.8][rng.below(4) as usize];
        let g = rng.graph(n, p);
        let (c, _) = g.components();
        let basis = fundamental_cycle_basis(&g);
        assert_eq!(basis.dim(), g.m() + c - n);
        assert_eq!(basis.components(), c);
        let probe = EdgeVector::from_support(g.m(), (0..g.m()).filter(|_| rng.chance(0.5)));
        assert_eq!(is_cycle(&g, &probe).unwrap(), basis.contains(&probe).unwrap());
        let mut sum = EdgeVector::zeros(g.m());
        for c in basis.cycles() {
            if rng.chance(0.5) {
                sum.add_assign(c).unwrap();
            }
        }
        assert!(is_cycle(&g, &sum).unwrap());
    }
}

#[test]
fn even_subspace_codimension_tracks_bipartiteness() {
    let mut rng = Lcg(3);
    for _ in 0..2000 {
        let n = 1 + rng.below(7) as usize;
        let g = rng.graph(n, 0.45);
        let dim = cycle_space_dim(&g);
        let codim = even_subspace_codim(&g);
        if g.is_bipartite() {
            assert_eq!(codim, 0);
        } else {
            assert!(dim > 0);
            assert_eq!(codim, 1);
        }
        if g.m() <= 14 {
            let evens = common::even_subsets(&g);
            let even_support = evens.iter().filter(|v| v.parity() == 0).count();
            assert_eq!(evens.len() >> codim, even_support);
        }
    }
}

#[test]
fn complete_graph_circuit_counts_and_dedup() {
    let mut expected = 2u64;
    for n in 4..=10usize {
        expected *= n as u64 - 1;
        let g = Graph::complete(n);
        let mut seen = HashSet::new();
        let run = enumerate_hamilton_circuits(&g, &limits(), |path, v| {
            assert_eq!(v.weight(), n);
            assert_eq!(path.len(), n);
            assert!(seen.insert(v.clone()));
            ControlFlow::Continue(())
        })
        .unwrap();
        assert!(run.completed);
        assert_eq!(run.count, expected / 2);
        assert_eq!(seen.len() as u64, expected / 2);
    }
}

#[test]
fn visited_vectors_are_distinct_cycles_of_the_right_size() {
    let mut rng = Lcg(4);
    for _ in 0..150 {
        let n = 4 + rng.below(7) as usize;
        let g = rng.graph(n, 0.6);
        for len in [3, n - 1, n] {
            let mut seen = HashSet::new();
            enumerate_circuits_of_length(&g, len, &limits(), |_, v| {
                assert_eq!(v.weight(), len);
                assert!(is_cycle(&g, v).unwrap());
                assert!(seen.insert(v.clone()));
                ControlFlow::Continue(())
            })
            .unwrap();
        }
    }
}

#[test]
fn early_stopped_status_agrees_with_exhaustive_quotient() {
    let mut rng = Lcg(5);
    for _ in 0..400 {
        let n = 3 + rng.below(8) as usize;
        let g = rng.graph(n, 0.65);
        let status = hamilton_generated_status(&g, &limits());
        let hams = hamilton_vectors(&g);
        let exhaustive = quotient_dim(&g, &hams).unwrap();
        assert_eq!(status.quotient_dim(), Some(exhaustive));
        match status.kind {
            HamKind::Full => assert_eq!(exhaustive, 0),
            HamKind::Deficient(d) => assert!(d >= 1 && !hams.is_empty()),
            HamKind::NoHamiltonCircuit => assert!(hams.is_empty() && cycle_space_dim(&g) > 0),
            HamKind::VacuousNoCycle => assert_eq!(cycle_space_dim(&g), 0),
            HamKind::Unknown => panic!("no cap at this size"),
        }
    }
}

#[test]
fn hamilton_rank_respects_parity_for_even_n() {
    let mut rng = Lcg(6);
    for _ in 0..300 {
        let n = 2 * (2 + rng.below(4) as usize);
        let g = rng.graph(n, 0.6);
        let hams = hamilton_vectors(&g);
        assert!(hams.iter().all(|v| v.parity() == 0));
        let rank = hamspan_core::rank_of(&hams).unwrap();
        assert!(rank <= cycle_space_dim(&g) - even_subspace_codim(&g));
        if !g.is_bipartite() && !hams.is_empty() {
            assert!(quotient_dim(&g, &hams).unwrap() >= 1);
        }
    }
}

#[test]
fn m_class_flags_are_monotone_under_edge_addition() {
    let mut rng = Lcg(7);
    let mut witnessed = [0usize; 3];
    for _ in 0..40 {
        let n = 5 + rng.below(5) as usize;
        let g = rng.graph(n, 0.75);
        let base = m_class_membership(&g, &limits()).unwrap();
        let flags = [base.in_m_ham_0, base.in_m_ham_1, base.in_m_near_0];
        for (w, f) in witnessed.iter_mut().zip(flags) {
            *w += usize::from(f);
        }
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    continue;
                }
                let more = m_class_membership(&g.with_edge(u, v).unwrap(), &limits()).unwrap();
                assert!(!base.in_m_ham_0 || more.in_m_ham_0);
                assert!(!base.in_m_ham_1 || more.in_m_ham_1);
                assert!(!base.in_m_near_0 || more.in_m_near_0);
            }
        }
    }
    assert!(witnessed.iter().all(|&w| w > 0), "{witnessed:?}");
}

/// A random bipartite graph plus one extra vertex joined to two vertices of
/// the same side, so the extra vertex has degree 2 and closes odd circuits.
fn planted(rng: &mut Lcg, a: usize, b: usize) -> Graph {
    let n = a + b + 1;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.chance(0.8) {
                pairs.push((u, v));
            }
        }
    }
    let x = rng.below(a as u64) as usize;
    let y = (x + 1 + rng.below(a as u64 - 1) as usize) % a;
    pairs.push((x, n - 1));
    pairs.push((y, n - 1));
    Graph::new(n, pairs).unwrap()
}

#[test]
fn degree2_deletion_on_random_connected_graphs() {
    let mut rng = Lcg(8);
    let mut applicable = 0;
    let mut done = 0;
    while done < 3000 {
        let n = 4 + rng.below(7) as usize;
        let g = if done % 3 == 0 {
            let a = 2 + rng.below(3) as usize;
            let b = 1 + rng.below(5) as usize;
            planted(&mut rng, a, b)
        } else {
            let p = [0.3, 0.5, 0.7][rng.below(3) as usize];
            rng.graph(n, p)
        };
        if !g.is_connected() {
            continue;
        }
        done += 1;
        match check_degree2_deletion(&g, &limits()) {
            DeletionOutcome::Pass => applicable += 1,
            DeletionOutcome::Counterexample(v) => panic!("counterexample at vertex {v}: {g:?}"),
            DeletionOutcome::Unknown => panic!("undecided"),
            DeletionOutcome::Inapplicable(_) => {}
        }
    }
    assert!(applicable > 0);
}

#[test]
fn degree2_chains_are_all_or_none() {
    let mut rng = Lcg(9);
    let mut checked = 0;
    while checked < 300 {
        let n = 4 + rng.below(5) as usize;
        let g = rng.graph(n, 0.4);
        for v in g.degree2_vertices() {
            assert!(check_all_or_none(&g, v, &limits()).unwrap());
            checked += 1;
        }
    }
}

#[test]
fn gnp_edge_count_mean() {
    // Mean of Binomial(C(n,2), p) over 100 trials: variance of the mean is
    // C(n,2) p (1-p) / 100.
    let (n, p, trials) = (10_000usize, 2e-3, 100u64);
    let pairs = (n * (n - 1) / 2) as f64;
    let total: usize = (0..trials).map(|s| Graph::gnp(n, p, s).unwrap().m()).sum();
    let mean = total as f64 / trials as f64;
    let sd_of_mean = (pairs * p * (1.0 - p) / trials as f64).sqrt();
    assert!((mean - pairs * p).abs() < 3.0 * sd_of_mean, "mean {mean}");
}

#[test]
fn geometric_sampler_edge_count_mean() {
    let (n, p, trials) = (10_000usize, 2e-3, 100u64);
    let pairs = (n * (n - 1) / 2) as f64;
    let total: usize = (0..trials).map(|s| Graph::gnp_geometric(n, p, s).unwrap().m()).sum();
    let mean = total as f64 / trials as f64;
    let sd_of_mean = (pairs * p * (1.0 - p) / trials as f64).sqrt();
    assert!((mean - pairs * p).abs() < 3.0 * sd_of_mean, "mean {mean}");
}

#[test]
fn geometric_sampler_pair_frequencies() {
    // Each pair of a 6-vertex graph should appear with frequency p.
    let (n, p, trials) = (6usize, 0.3, 20_000u64);
    let mut hits = vec![0u32; 15];
    for s in 0..trials {
        let g = Graph::gnp_geometric(n, p, s).unwrap();
        for (u, v) in g.edges() {
            hits[Graph::complete(n).edge_index(u, v).unwrap()] += 1;
        }
    }
    let sd = (p * (1.0 - p) / trials as f64).sqrt();
    for h in hits {
        assert!((h as f64 / trials as f64 - p).abs() < 5.0 * sd);
    }
}

#[test]
fn capped_search_reports_error_not_answer() {
    let tiny = SearchLimits { cap: 3, ..limits() };
    assert_eq!(
        hamspan_core::hamilton::near_hamilton_span_full(&Graph::complete(7), &SearchLimits { cap: 1, ..limits() }),
        Err(HamiltonError::Capped(1))
    );
    assert_eq!(hamilton_generated_status(&Graph::complete(6), &tiny).kind, HamKind::Unknown);
}
