//! Unlabelled isomorphism by colour refinement and backtracking.

use std::collections::BTreeMap;

use serde::Serialize;

use super::search::for_each_embedding_within;
use super::{PrimeGraph, Vertex};

/// Joint colour refinement over several graphs so colours are comparable.
fn refine(adjs: &[&[u64]]) -> Vec<Vec<usize>> {
    let mut colours: Vec<Vec<usize>> = adjs
        .iter()
        .map(|adj| adj.iter().map(|m| m.count_ones() as usize).collect())
        .collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<Vec<(usize, Vec<usize>)>> = adjs
            .iter()
            .zip(&colours)
            .map(|(adj, col)| {
                adj.iter()
                    .enumerate()
                    .map(|(i, &m)| {
                        let mut nb: Vec<usize> = super::bits(m).map(|j| col[j]).collect();
                        nb.sort_unstable();
                        (col[i], nb)
                    })
                    .collect()
            })
            .collect();
        let mut all: Vec<&(usize, Vec<usize>)> = sigs.iter().flatten().collect();
        all.sort();
        all.dedup();
        colours = sigs
            .iter()
            .map(|s| {
                s.iter()
                    .map(|sig| all.binary_search(&sig).expect("present"))
                    .collect()
            })
            .collect();
        if all.len() == classes {
            return colours;
        }
        classes = all.len();
    }
}

/// A bijection `g1 -> g2` preserving adjacency and non-adjacency, if one exists.
pub fn is_isomorphic(g1: &PrimeGraph, g2: &PrimeGraph) -> Option<BTreeMap<Vertex, Vertex>> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let (d1, d2) = (g1.dense(), g2.dense());
    let colours = refine(&[&d1.adj, &d2.adj]);
    let (c1, c2) = (&colours[0], &colours[1]);
    let histogram = |c: &[usize]| {
        let mut h = c.to_vec();
        h.sort_unstable();
        h
    };
    if histogram(c1) != histogram(c2) {
        return None;
    }
    let class_size = |c: usize| c1.iter().filter(|&&x| x == c).count();
    let mut order: Vec<usize> = (0..d1.len()).collect();
    order.sort_by_key(|&i| (class_size(c1[i]), i));
    let allowed: Vec<u64> = c1
        .iter()
        .map(|&c| {
            c2.iter()
                .enumerate()
                .filter(|&(_, &x)| x == c)
                .fold(0, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let mut result = None;
    for_each_embedding_within(&d1.adj, &d2.adj, true, &order, &allowed, |map| {
        result = Some(
            map.iter()
                .enumerate()
                .map(|(i, &j)| (d1.labels[i], d2.labels[j]))
                .collect(),
        );
        true
    });
    result
}

/// The first invariant on which two graphs differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantDifference {
    pub invariant: String,
    pub left: String,
    pub right: String,
}

impl std::fmt::Display for InvariantDifference {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {} vs {}", self.invariant, self.left, self.right)
    }
}

/// Names the first differing invariant of two non-isomorphic graphs, or the
/// refinement/backtracking stage when all summary invariants agree. Returns
/// `None` for isomorphic graphs.
pub fn distinguishing_invariant(g1: &PrimeGraph, g2: &PrimeGraph) -> Option<InvariantDifference> {
    if is_isomorphic(g1, g2).is_some() {
        return None;
    }
    let (a, b) = (g1.invariants().fields(), g2.invariants().fields());
    let diff = a.into_iter().zip(b).find(|(x, y)| x.1 != y.1);
    Some(match diff {
        Some(((name, left), (_, right))) => InvariantDifference {
            invariant: name.to_string(),
            left,
            right,
        },
        None => InvariantDifference {
            invariant: "no adjacency-preserving bijection".into(),
            left: g1.vertex_count().to_string(),
            right: g2.vertex_count().to_string(),
        },
    })
}
