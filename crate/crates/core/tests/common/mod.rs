//! Brute-force oracles, independent of the library's search and elimination.
#![allow(dead_code)]

use std::collections::HashSet;

use hamspan_core::{EdgeVector, Graph};

/// All permutations of `items` (Heap's algorithm).
pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
        heap(k - 1, a, out);
    }
    let mut out = Vec::new();
    heap(items.len(), &mut items.to_vec(), &mut out);
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

/// Circuits on exactly `len` vertices as canonical vertex sequences, by
/// trying every vertex subset in every cyclic order.
pub fn brute_circuits(g: &Graph, len: usize) -> HashSet<Vec<usize>> {
    let mut out = HashSet::new();
    for sub in subsets(g.n(), len) {
        for perm in permutations(&sub[1..]) {
            if perm[0] > perm[perm.len() - 1] {
                continue;
            }
            let mut seq = vec![sub[0]];
            seq.extend(perm);
            if (0..len).all(|i| g.has_edge(seq[i], seq[(i + 1) % len])) {
                out.insert(seq);
            }
        }
    }
    out
}

/// Edge vector of a circuit given as an open vertex sequence.
pub fn circuit_vector(g: &Graph, seq: &[usize]) -> EdgeVector {
    let l = seq.len();
    EdgeVector::from_support(g.m(), (0..l).map(|i| g.edge_index(seq[i], seq[(i + 1) % l]).expect("edge")))
}

/// Rank as log2 of the number of distinct subset sums.
pub fn subset_rank(vectors: &[EdgeVector]) -> usize {
    let mut span = HashSet::new();
    span.insert(EdgeVector::zeros(vectors.first().map_or(0, |v| v.dim())));
    for v in vectors {
        let shifted: Vec<EdgeVector> = span.iter().map(|s| s.add(v).unwrap()).collect();
        span.extend(shifted);
    }
    span.len().trailing_zeros() as usize
}

/// All `2^m` edge subsets with every vertex of even degree.
pub fn even_subsets(g: &Graph) -> Vec<EdgeVector> {
    let m = g.m();
    assert!(m <= 20);
    (0u32..1 << m)
        .filter_map(|mask| {
            let mut deg = vec![0u8; g.n()];
            for e in 0..m {
                if mask >> e & 1 == 1 {
                    let (u, v) = g.edge(e);
                    deg[u] ^= 1;
                    deg[v] ^= 1;
                }
            }
            deg.iter().all(|&d| d == 0).then(|| EdgeVector::from_support(m, (0..m).filter(|e| mask >> e & 1 == 1)))
        })
        .collect()
}

/// A small deterministic generator for test inputs (xorshift64*).
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        self.0.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    pub fn below(&mut self, k: u64) -> u64 {
        self.next() % k
    }

    pub fn chance(&mut self, p: f64) -> bool {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64 <= p
    }

    pub fn graph(&mut self, n: usize, p: f64) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.chance(p) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::new(n, pairs).unwrap()
    }
}
