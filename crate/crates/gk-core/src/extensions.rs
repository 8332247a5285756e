//! Prime graphs of extensions: affine groups V:G, automorphism extensions,
//! and the Brauer fixed-point dimension check.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::families::{self, GroupId, Sporadic};
use crate::graph::{distinguishing_invariant, is_isomorphic, PrimeGraph, Vertex};
use crate::numtheory::is_prime;

/// One step of a witness construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionStep {
    /// V:G for a module V in characteristic `characteristic`.
    Affine {
        avoiding: BTreeSet<Vertex>,
        characteristic: Vertex,
        citation: String,
        fixing: BTreeSet<Vertex>,
    },
    /// Edges known from element orders of the extension.
    AddEdges {
        citation: String,
        edges: Vec<(Vertex, Vertex)>,
    },
    /// G:⟨φ⟩ for an outer automorphism φ of new prime order `prime`.
    AddOuterPrime {
        citation: String,
        edges: Vec<(Vertex, Vertex)>,
        prime: Vertex,
    },
}

impl ExtensionStep {
    pub fn citation(&self) -> &str {
        match self {
            ExtensionStep::Affine { citation, .. }
            | ExtensionStep::AddEdges { citation, .. }
            | ExtensionStep::AddOuterPrime { citation, .. } => citation,
        }
    }

    pub fn describe(&self) -> String {
        let set = |s: &BTreeSet<Vertex>| {
            format!(
                "{{{}}}",
                s.iter()
                    .map(Vertex::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )
        };
        let edges = |e: &[(Vertex, Vertex)]| {
            e.iter()
                .map(|(a, b)| format!("{{{a},{b}}}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            ExtensionStep::Affine {
                avoiding,
                characteristic,
                fixing,
                ..
            } => {
                format!(
                    "affine r={characteristic} fixing={} avoiding={}",
                    set(fixing),
                    set(avoiding)
                )
            }
            ExtensionStep::AddEdges { edges: e, .. } => format!("add edges {}", edges(e)),
            ExtensionStep::AddOuterPrime {
                edges: e, prime, ..
            } => format!("outer prime {prime} with edges {}", edges(e)),
        }
    }

    /// Applies the step to `g`.
    pub fn apply(&self, g: &PrimeGraph) -> Result<PrimeGraph> {
        if self.citation().trim().is_empty() {
            return Err(Error::Catalog(format!(
                "step '{}' has no citation",
                self.describe()
            )));
        }
        match self {
            ExtensionStep::Affine {
                avoiding,
                characteristic,
                fixing,
                ..
            } => affine_extension(g, *characteristic, fixing, avoiding),
            ExtensionStep::AddEdges { edges, .. } => {
                edges.iter().try_fold(g.clone(), |acc, &(u, v)| {
                    for w in [u, v] {
                        if !acc.contains(w) {
                            return Err(Error::VertexNotFound(w.to_string()));
                        }
                    }
                    acc.with_edge(u, v)
                })
            }
            ExtensionStep::AddOuterPrime { edges, prime, .. } => {
                if g.contains(*prime) {
                    return Err(Error::Conflict(format!(
                        "outer prime {prime} already divides the order"
                    )));
                }
                let out = g.with_vertex(*prime)?;
                edges.iter().try_fold(out, |acc, &(u, v)| {
                    if u != *prime && v != *prime {
                        return Err(Error::InvalidArgument(format!(
                            "edge {{{u},{v}}} does not involve {prime}"
                        )));
                    }
                    for w in [u, v] {
                        if !acc.contains(w) {
                            return Err(Error::VertexNotFound(w.to_string()));
                        }
                    }
                    acc.with_edge(u, v)
                })
            }
        }
    }
}

/// A construction of a group whose prime graph is isomorphic to Γ(target)
/// but which is not isomorphic to the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSpec {
    pub base: GroupId,
    pub citation: String,
    /// The replayed graph must equal Γ(target) as a labelled graph.
    pub labelled_equality: bool,
    pub steps: Vec<ExtensionStep>,
    pub target: Sporadic,
}

/// Γ(V:G) from Γ(G): adds `r` and the edges {r,p} for p in `fixing`.
///
/// Every other vertex must be in `avoiding` or already adjacent to `r`.
pub fn affine_extension(
    base: &PrimeGraph,
    r: Vertex,
    fixing: &BTreeSet<Vertex>,
    avoiding: &BTreeSet<Vertex>,
) -> Result<PrimeGraph> {
    if let Some(p) = fixing.intersection(avoiding).next() {
        return Err(Error::Conflict(format!(
            "{p} is listed as both fixing and avoiding"
        )));
    }
    for &p in fixing.iter().chain(avoiding) {
        if !base.contains(p) {
            return Err(Error::VertexNotFound(p.to_string()));
        }
    }
    if let Some(&p) = avoiding.iter().find(|&&p| p != r && base.has_edge(r, p)) {
        return Err(Error::Conflict(format!(
            "{p} avoids but is already adjacent to {r}"
        )));
    }
    for &p in base.vertices() {
        let classified = p == r || fixing.contains(&p) || avoiding.contains(&p);
        if !classified && !base.has_edge(r, p) {
            return Err(Error::AmbiguousPrime(p.to_string()));
        }
    }
    fixing
        .iter()
        .filter(|&&p| p != r)
        .try_fold(base.with_vertex(r)?, |g, &p| g.with_edge(r, p))
}

/// dim C_V(g) = (χ(1) + Σ_{k=1}^{p-1} χ(g^k)) / p for g of prime order p.
pub fn fixed_point_dimension(p: u64, degree: i64, tail_sum: i64) -> Result<u64> {
    if !is_prime(p as u128)? {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if degree < 1 {
        return Err(Error::InvalidArgument(format!(
            "degree {degree} must be positive"
        )));
    }
    let value = degree
        .checked_add(tail_sum)
        .ok_or_else(|| Error::Overflow(format!("{degree} + {tail_sum}")))?;
    let p_signed = i64::try_from(p).map_err(|_| Error::Overflow(p.to_string()))?;
    if value % p_signed != 0 {
        return Err(Error::NotIntegral { p, value });
    }
    let dim = value / p_signed;
    u64::try_from(dim).map_err(|_| Error::Negative(dim))
}

/// The result of replaying a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub target: Sporadic,
    pub base: GroupId,
    pub citation: String,
    pub trace: Vec<String>,
    pub graph: PrimeGraph,
    pub isomorphism: BTreeMap<Vertex, Vertex>,
    pub labelled_equality: bool,
}

pub fn verify_witness(spec: &WitnessSpec) -> Result<WitnessReport> {
    verify_witness_in(Catalog::builtin(), spec)
}

/// Replays the steps from Γ(base) and checks the result against Γ(target).
pub fn verify_witness_in(catalog: &Catalog, spec: &WitnessSpec) -> Result<WitnessReport> {
    if spec.citation.trim().is_empty() {
        return Err(Error::Catalog(format!(
            "witness for {} has no citation",
            spec.target
        )));
    }
    let mut g = families::prime_graph_in(catalog, spec.base)?;
    let mut trace = vec![format!(
        "base {}: {} vertices, {} edges",
        spec.base.display_name(),
        g.vertex_count(),
        g.edge_count()
    )];
    for step in &spec.steps {
        let next = step.apply(&g)?;
        let added: Vec<String> = next
            .edges()
            .difference(g.edges())
            .map(|(a, b)| format!("{{{a},{b}}}"))
            .collect();
        trace.push(format!(
            "{}: added edges [{}] ({})",
            step.describe(),
            added.join(" "),
            step.citation()
        ));
        g = next;
    }
    let target = catalog.sporadic_graph(spec.target)?;
    if spec.labelled_equality && g != *target {
        return Err(Error::NotIsomorphic {
            target: spec.target.to_string(),
            invariant: "labelled graphs differ".into(),
        });
    }
    let isomorphism = is_isomorphic(&g, target).ok_or_else(|| Error::NotIsomorphic {
        target: spec.target.to_string(),
        invariant: distinguishing_invariant(&g, target)
            .map(|d| d.to_string())
            .unwrap_or_else(|| "no bijection found".into()),
    })?;
    trace.push(format!(
        "isomorphic to the prime graph of {}{}",
        spec.target.display_name(),
        if spec.labelled_equality {
            " (labelled graphs equal)"
        } else {
            ""
        }
    ));
    Ok(WitnessReport {
        target: spec.target,
        base: spec.base,
        citation: spec.citation.clone(),
        trace,
        graph: g,
        isomorphism,
        labelled_equality: spec.labelled_equality,
    })
}
