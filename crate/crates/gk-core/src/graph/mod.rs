//! Prime graphs and the analytics run over them.
//!
//! A [`PrimeGraph`] is an immutable value; every update returns a new graph.
//! Analytics convert to a dense bitmask form ([`Dense`]) first, which limits
//! graphs to 64 vertices.

mod io;
mod iso;
pub(crate) mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

pub use iso::{distinguishing_invariant, is_isomorphic, InvariantDifference};

pub const MAX_VERTICES: usize = 64;

/// A vertex label: a concrete prime or an anonymous symbolic prime `rN`.
///
/// Concrete primes sort before every symbolic vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Prime(u64),
    Symbolic(u32),
}

impl Vertex {
    pub fn prime(self) -> Option<u64> {
        match self {
            Vertex::Prime(p) => Some(p),
            Vertex::Symbolic(_) => None,
        }
    }

    pub fn is_symbolic(self) -> bool {
        matches!(self, Vertex::Symbolic(_))
    }
}

impl From<u64> for Vertex {
    fn from(p: u64) -> Self {
        Vertex::Prime(p)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Prime(p) => write!(f, "{p}"),
            Vertex::Symbolic(n) => write!(f, "r{n}"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid vertex label {s:?}"));
        if let Some(rest) = s.strip_prefix('r') {
            let n: u32 = rest.parse().map_err(|_| bad())?;
            if n == 0 || rest.starts_with('0') {
                return Err(bad());
            }
            return Ok(Vertex::Symbolic(n));
        }
        if s.starts_with('0') || s.starts_with('+') {
            return Err(bad());
        }
        s.parse().map(Vertex::Prime).map_err(|_| bad())
    }
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Vertex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An undirected simple graph on prime labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PrimeGraph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
}

fn ordered(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

fn check_label(v: Vertex) -> Result<()> {
    match v {
        Vertex::Prime(p) if !is_prime(p as u128)? => Err(Error::InvalidArgument(format!(
            "vertex label {p} is not prime"
        ))),
        _ => Ok(()),
    }
}

impl PrimeGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph, checking labels, endpoints, loops and the size limit.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(MAX_VERTICES));
        }
        for &v in &vertices {
            check_label(v)?;
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
            for w in [u, v] {
                if !vertices.contains(&w) {
                    return Err(Error::VertexNotFound(w.to_string()));
                }
            }
            set.insert(ordered(u, v));
        }
        Ok(Self {
            vertices,
            edges: set,
        })
    }

    /// Convenience constructor over concrete primes.
    pub fn from_primes(vertices: &[u64], edges: &[(u64, u64)]) -> Result<Self> {
        Self::new(
            vertices.iter().map(|&p| Vertex::Prime(p)),
            edges
                .iter()
                .map(|&(a, b)| (Vertex::Prime(a), Vertex::Prime(b))),
        )
    }

    /// Disjoint union of cliques on the given vertex sets.
    pub fn from_cliques<I, C>(cliques: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = Vertex>,
    {
        let mut vertices = BTreeSet::new();
        let mut edges = Vec::new();
        for clique in cliques {
            let members: Vec<Vertex> = clique.into_iter().collect();
            for (i, &u) in members.iter().enumerate() {
                edges.extend(members[i + 1..].iter().map(|&v| (u, v)));
            }
            vertices.extend(members);
        }
        Self::new(vertices, edges)
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&ordered(u, v))
    }

    pub fn neighbours(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match () {
                _ if a == v => Some(b),
                _ if b == v => Some(a),
                _ => None,
            })
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbours(v).len()
    }

    /// Concrete prime labels, ascending.
    pub fn primes(&self) -> BTreeSet<u64> {
        self.vertices.iter().filter_map(|v| v.prime()).collect()
    }

    pub fn with_vertex(&self, v: Vertex) -> Result<Self> {
        if self.contains(v) {
            return Ok(self.clone());
        }
        check_label(v)?;
        if self.vertices.len() >= MAX_VERTICES {
            return Err(Error::TooManyVertices(MAX_VERTICES));
        }
        let mut out = self.clone();
        out.vertices.insert(v);
        Ok(out)
    }

    /// Adds the edge `{u, v}`, adding either endpoint as a vertex if needed.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        if u == v {
            return Err(Error::SelfLoop(u.to_string()));
        }
        let mut out = self.with_vertex(u)?.with_vertex(v)?;
        out.edges.insert(ordered(u, v));
        Ok(out)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        Self::new(
            self.vertices.union(&other.vertices).copied(),
            self.edges.union(&other.edges).copied(),
        )
    }

    /// Relabels vertices through `map`; unmapped vertices keep their label.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> Result<Self> {
        let f = |v: &Vertex| *map.get(v).unwrap_or(v);
        let out = Self::new(
            self.vertices.iter().map(f),
            self.edges.iter().map(|(a, b)| (f(a), f(b))),
        )?;
        if out.vertex_count() != self.vertex_count() {
            return Err(Error::InvalidArgument(
                "relabelling is not injective".into(),
            ));
        }
        Ok(out)
    }

    /// The induced subgraph on `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Self {
        Self {
            vertices: self.vertices.intersection(keep).copied().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .copied()
                .collect(),
        }
    }

    pub(crate) fn dense(&self) -> Dense {
        Dense::from_graph(self)
    }

    /// Connected components; the component of 2 comes first, the rest by least vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let d = self.dense();
        let mut comps: Vec<BTreeSet<Vertex>> = d
            .component_masks()
            .into_iter()
            .map(|m| d.labels_of(m))
            .collect();
        comps.sort_by_key(|c| (!c.contains(&Vertex::Prime(2)), c.first().copied()));
        comps
    }

    pub fn component_count(&self) -> usize {
        self.dense().component_masks().len()
    }

    pub fn isolated_vertices(&self) -> BTreeSet<Vertex> {
        let d = self.dense();
        (0..d.len())
            .filter(|&i| d.adj[i] == 0)
            .map(|i| d.labels[i])
            .collect()
    }

    pub fn independence_number(&self) -> usize {
        let d = self.dense();
        search::max_independent(&d.adj, d.full()) as usize
    }

    /// Largest independent set containing `v`.
    pub fn t_at(&self, v: Vertex) -> Result<usize> {
        let d = self.dense();
        let i = d
            .index(v)
            .ok_or_else(|| Error::VertexNotFound(v.to_string()))?;
        let rest = d.full() & !d.adj[i] & !(1 << i);
        Ok(1 + search::max_independent(&d.adj, rest) as usize)
    }

    pub fn clique_number(&self) -> usize {
        let d = self.dense();
        search::max_independent(&d.complement(), d.full()) as usize
    }

    pub fn has_clique_of_size(&self, k: usize) -> bool {
        self.clique_number() >= k
    }

    /// Every maximal clique, each sorted, listed in lexicographic order.
    pub fn all_maximal_cliques(&self) -> Vec<BTreeSet<Vertex>> {
        let d = self.dense();
        let mut out: Vec<BTreeSet<Vertex>> = search::maximal_cliques(&d.adj, d.full())
            .into_iter()
            .map(|m| d.labels_of(m))
            .collect();
        out.sort();
        out
    }

    pub fn is_clique(&self, set: &BTreeSet<Vertex>) -> bool {
        let members: Vec<Vertex> = set.iter().copied().collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Degrees in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let d = self.dense();
        let mut seq: Vec<usize> = d.adj.iter().map(|m| m.count_ones() as usize).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn invariants(&self) -> GraphInvariants {
        GraphInvariants {
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            component_count: self.component_count(),
            independence_number: self.independence_number(),
            t_at_two: self.t_at(Vertex::Prime(2)).ok(),
            clique_number: self.clique_number(),
            isolated_vertex_count: self.isolated_vertices().len(),
            degree_sequence: self.degree_sequence(),
        }
    }

    /// An embedding of `pattern` into this graph, as pattern index to vertex.
    pub fn contains_pattern(&self, pattern: &Pattern, induced: bool) -> Option<Vec<Vertex>> {
        let d = self.dense();
        let order: Vec<usize> = (0..pattern.vertex_count).collect();
        let mut found = None;
        search::for_each_embedding(&pattern.adjacency(), &d.adj, induced, &order, |map| {
            found = Some(map.iter().map(|&j| d.labels[j]).collect());
            true
        });
        found
    }

    /// Calls `f` with every injective edge-preserving map from this graph into
    /// `target`, stopping when `f` returns `true`. Vertices are assigned in
    /// ascending label order, or descending when `reverse` is set.
    pub fn for_each_embedding_into<F>(
        &self,
        target: &PrimeGraph,
        induced: bool,
        reverse: bool,
        mut f: F,
    ) -> bool
    where
        F: FnMut(&BTreeMap<Vertex, Vertex>) -> bool,
    {
        let src = self.dense();
        let dst = target.dense();
        let mut order: Vec<usize> = (0..src.len()).collect();
        // Most constrained first: high degree before low.
        order.sort_by_key(|&i| std::cmp::Reverse(src.adj[i].count_ones()));
        if reverse {
            order.reverse();
        }
        search::for_each_embedding(&src.adj, &dst.adj, induced, &order, |map| {
            let m: BTreeMap<Vertex, Vertex> = map
                .iter()
                .enumerate()
                .map(|(i, &j)| (src.labels[i], dst.labels[j]))
                .collect();
            f(&m)
        })
    }

    /// Whether this graph is a (possibly non-induced) subgraph of `target` up to relabelling.
    pub fn embeds_into(&self, target: &PrimeGraph, induced: bool) -> bool {
        self.for_each_embedding_into(target, induced, false, |_| true)
    }
}

/// Summary numbers of a prime graph, in a fixed field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub independence_number: usize,
    pub t_at_two: Option<usize>,
    pub clique_number: usize,
    pub isolated_vertex_count: usize,
    pub degree_sequence: Vec<usize>,
}

impl GraphInvariants {
    /// (field name, rendered value) pairs in declaration order.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("vertex_count", self.vertex_count.to_string()),
            ("edge_count", self.edge_count.to_string()),
            ("component_count", self.component_count.to_string()),
            ("independence_number", self.independence_number.to_string()),
            (
                "t_at_two",
                self.t_at_two
                    .map_or_else(|| "none".to_string(), |t| t.to_string()),
            ),
            ("clique_number", self.clique_number.to_string()),
            (
                "isolated_vertex_count",
                self.isolated_vertex_count.to_string(),
            ),
            ("degree_sequence", format!("{:?}", self.degree_sequence)),
        ]
    }
}

/// An unlabelled graph on indices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Pattern {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooManyVertices(MAX_VERTICES));
        }
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::SelfLoop(a.to_string()));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::VertexNotFound(a.max(b).to_string()));
            }
        }
        Ok(Self {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// A triangle and a disjoint edge.
    pub fn triangle_and_edge() -> Self {
        Self {
            vertex_count: 5,
            edges: vec![(0, 1), (0, 2), (1, 2), (3, 4)],
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Self {
            vertex_count: n,
            edges,
        }
    }

    /// The eight-vertex subgraph carried by every large Ree group of type F4:
    /// indices 0 and 1 stand for 2 and 3, then p1..p6 at 2..=7.
    pub fn two_f4_compact() -> Self {
        let (two, three) = (0, 1);
        let p = |i: usize| i + 1;
        Self {
            vertex_count: 8,
            edges: vec![
                (two, three),
                (p(4), two),
                (p(4), three),
                (p(3), p(4)),
                (p(3), two),
                (p(5), two),
                (p(5), three),
                (p(6), three),
                (p(4), p(5)),
            ],
        }
    }

    /// The unlabelled shape of a prime graph.
    pub fn from_graph(g: &PrimeGraph) -> Self {
        let d = g.dense();
        let adj = &d.adj;
        let edges = (0..d.len())
            .flat_map(|i| {
                ((i + 1)..adj.len())
                    .filter(move |&j| adj[i] >> j & 1 == 1)
                    .map(move |j| (i, j))
            })
            .collect();
        Self {
            vertex_count: d.len(),
            edges,
        }
    }

    pub(crate) fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }
}

/// Bitmask adjacency over the vertices of a graph in ascending label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Dense {
    pub labels: Vec<Vertex>,
    pub adj: Vec<u64>,
}

impl Dense {
    fn from_graph(g: &PrimeGraph) -> Self {
        let labels: Vec<Vertex> = g.vertices.iter().copied().collect();
        let pos: BTreeMap<Vertex, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![0u64; labels.len()];
        for (a, b) in &g.edges {
            let (i, j) = (pos[a], pos[b]);
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Self { labels, adj }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn full(&self) -> u64 {
        mask_of(self.len())
    }

    pub fn index(&self, v: Vertex) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    pub fn labels_of(&self, mask: u64) -> BTreeSet<Vertex> {
        bits(mask).map(|i| self.labels[i]).collect()
    }

    pub fn complement(&self) -> Vec<u64> {
        complement(&self.adj)
    }

    pub fn component_masks(&self) -> Vec<u64> {
        component_masks(&self.adj)
    }
}

pub(crate) fn mask_of(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            i
        })
    })
}

pub(crate) fn complement(adj: &[u64]) -> Vec<u64> {
    let full = mask_of(adj.len());
    adj.iter()
        .enumerate()
        .map(|(i, &m)| full & !m & !(1 << i))
        .collect()
}

pub(crate) fn component_masks(adj: &[u64]) -> Vec<u64> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in 0..adj.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, i| acc | adj[i]) & !comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests;
