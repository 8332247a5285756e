//! Replay of the elimination argument for sporadic groups determined by the
//! isomorphism type of their prime graph.
//!
//! Suppose H is not isomorphic to the target G but Γ(H) ≅ Γ(G). Then H/F(H)
//! is almost simple with some socle S. Every admissible S is pushed through
//! rules R1 to R6 in order and the first failing rule eliminates it. Targets
//! outside the recognisable list resolve through their catalog witnesses.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::catalog::{
    Catalog, Characteristic, FactKind, FactRecord, UnlabelledStatus, RECOGNISABLE_BY_TYPE,
};
use crate::error::{Error, Result};
use crate::extensions::{verify_witness_in, WitnessReport};
use crate::families::{
    self, CliqueStructure, FamilyProfile, FamilyRef, FamilySlice, GroupId, Sporadic,
};
use crate::graph::{PrimeGraph, Vertex};
use crate::numtheory;

/// Most new primes R6 will place.
pub const MAX_NEW_PRIMES: usize = 4;

/// Pipeline stages, in the order they are tried.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

impl RuleId {
    pub fn title(self) -> &'static str {
        match self {
            RuleId::R1 => "cardinalities",
            RuleId::R2 => "coclique bound",
            RuleId::R3 => "coclique bound at 2",
            RuleId::R4 => "structure",
            RuleId::R5 => "forced edges",
            RuleId::R6 => "exhaustive completion",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            RuleId::R1 => "Gruenberg-Kegel theorem: H/F(H) is almost simple with socle S and Γ(S) is a subgraph of Γ(H)",
            RuleId::R2 => "Vasil'ev refinement of the Gruenberg-Kegel theorem: a coclique of size >= 3 contains at most one prime of |H|/|S|",
            RuleId::R3 => "Vasil'ev refinement of the Gruenberg-Kegel theorem: primes not adjacent to 2 do not divide |H|/|S|",
            RuleId::R4 => "Γ(S) is a subgraph of Γ(H) on π(S); isolated vertices of Γ(H) lie in π(S) and are isolated in Γ(S)",
            RuleId::R5 => "F(H) is nilpotent; a chief factor of F(H) is a faithful irreducible H/F(H)-module whose fixed points give edges; Out(S) cyclic gives commuting outer primes",
            RuleId::R6 => "exhaustive placement of Γ(S) and the new primes into Γ(G) under the Fitting/outer constraints",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A possible socle of H/F(H).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Candidate {
    Concrete(GroupId),
    Slice(FamilySlice),
}

impl Candidate {
    pub fn display_name(self) -> String {
        match self {
            Candidate::Concrete(id) => id.display_name(),
            Candidate::Slice(s) => s.description().to_string(),
        }
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Candidate::Concrete(id) => write!(f, "{id}"),
            Candidate::Slice(s) => f.write_str(s.tag()),
        }
    }
}

impl Serialize for Candidate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Eliminated {
        rule: RuleId,
        /// The reference argument disposes of this candidate at a later rule.
        earlier_rule: bool,
        citation: String,
        trace: Vec<String>,
    },
    /// A completion isomorphic to Γ(G) satisfying every encoded constraint.
    Survives {
        completion: PrimeGraph,
        trace: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationReport {
    pub target: Sporadic,
    pub candidate: Candidate,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl EliminationReport {
    pub fn rule(&self) -> Option<RuleId> {
        match &self.verdict {
            Verdict::Eliminated { rule, .. } => Some(*rule),
            Verdict::Survives { .. } => None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.verdict {
            Verdict::Eliminated {
                rule,
                earlier_rule,
                citation,
                trace,
            } => {
                out.push_str(&format!(
                    "{}: eliminated at {rule} ({})",
                    self.candidate,
                    rule.title()
                ));
                if *earlier_rule {
                    out.push_str(" [earlier-rule elimination]");
                }
                out.push('\n');
                for line in trace {
                    out.push_str(&format!("    {line}\n"));
                }
                out.push_str(&format!("    source: {citation}\n"));
            }
            Verdict::Survives { completion, trace } => {
                out.push_str(&format!("{}: survives\n", self.candidate));
                for line in trace {
                    out.push_str(&format!("    {line}\n"));
                }
                out.push_str(&format!("    completion: {}\n", render_edges(completion)));
            }
        }
        out
    }
}

/// Outcome of [`recognise`] for one sporadic group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionReport {
    pub target: Sporadic,
    pub verdict: UnlabelledStatus,
    pub shortcut: Option<String>,
    pub eliminations: Vec<EliminationReport>,
    pub witnesses: Vec<WitnessReport>,
}

impl RecognitionReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "target: {}\nverdict: {}\n",
            self.target.display_name(),
            self.verdict
        );
        if let Some(s) = &self.shortcut {
            out.push_str(&format!("shortcut: {s}\n"));
        }
        if !self.eliminations.is_empty() || self.witnesses.is_empty() {
            out.push_str(&format!("candidates: {}\n", self.eliminations.len()));
        }
        for r in &self.eliminations {
            out.push_str(&r.to_text());
        }
        for w in &self.witnesses {
            out.push_str(&format!(
                "witness: {} from {}\n",
                w.target.display_name(),
                w.base.display_name()
            ));
            for line in &w.trace {
                out.push_str(&format!("    {line}\n"));
            }
        }
        out
    }
}

/// How candidate evaluations are scheduled. Without the `parallel` feature
/// both variants run sequentially.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Parallel,
    Sequential,
}

fn map_ordered<T, R, F>(items: &[T], strategy: Strategy, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

fn render_edges(g: &PrimeGraph) -> String {
    let vs: Vec<String> = g.vertices().iter().map(Vertex::to_string).collect();
    let es: Vec<String> = g.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    format!("vertices {{{}}} edges {{{}}}", vs.join(","), es.join(","))
}

fn count(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

fn render_set<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// The rule at which the reference argument disposes of a candidate.
pub fn reference_rule(target: Sporadic, candidate: Candidate) -> Option<RuleId> {
    use FamilySlice as F;
    use GroupId as Id;
    use RuleId::*;
    use Sporadic as Sp;
    let c = |id| Candidate::Concrete(id);
    let sp = |s| Candidate::Concrete(Id::Sporadic(s));
    let t3_small = [
        sp(Sp::HS),
        sp(Sp::J3),
        sp(Sp::M11),
        Candidate::Slice(F::Psl2),
        Candidate::Slice(F::G2),
        c(Id::Psu6_2),
        c(Id::Alt(7)),
        c(Id::Alt(13)),
        c(Id::Psu4_3),
    ];
    let rule = match target {
        Sp::M => R2,
        Sp::Fi24 => {
            if [c(Id::TwoE6_2), sp(Sp::ON), sp(Sp::Ly)].contains(&candidate) {
                R5
            } else {
                R2
            }
        }
        Sp::Ly => match candidate {
            Candidate::Concrete(Id::TwoE6_2) => R1,
            Candidate::Concrete(Id::Sporadic(Sp::ON)) => R5,
            _ => R2,
        },
        Sp::ON => R5,
        Sp::B => match candidate {
            Candidate::Concrete(Id::Sporadic(Sp::J4)) => R5,
            Candidate::Slice(F::F4Large)
            | Candidate::Concrete(Id::Alt(19))
            | Candidate::Concrete(Id::Alt(31)) => R4,
            _ => R2,
        },
        Sp::Th => match candidate {
            _ if t3_small.contains(&candidate) => R2,
            Candidate::Concrete(Id::Sporadic(Sp::ON)) => R6,
            Candidate::Concrete(Id::POmegaMinus(5)) => R4,
            Candidate::Slice(F::TwoG2Large) => R1,
            _ => R5,
        },
        Sp::Fi23 => match candidate {
            _ if t3_small.contains(&candidate) => R2,
            Candidate::Concrete(Id::Sporadic(Sp::Ly)) | Candidate::Concrete(Id::TwoE6_2) => R6,
            Candidate::Concrete(Id::Alt(19))
            | Candidate::Concrete(Id::TwoF4(1))
            | Candidate::Slice(F::TwoF4Large) => R4,
            Candidate::Slice(F::F4Large) | Candidate::Slice(F::TwoG2Large) => R1,
            _ => R5,
        },
        _ => return None,
    };
    Some(rule)
}

/// Invariants of Γ(G) the rules compare against.
#[derive(Debug, Clone)]
struct Target {
    id: Sporadic,
    graph: PrimeGraph,
    n: usize,
    edges: usize,
    s: usize,
    t: usize,
    t2: usize,
    omega: usize,
    isolated: usize,
    degrees: Vec<usize>,
}

impl Target {
    fn new(catalog: &Catalog, id: Sporadic) -> Result<Self> {
        let graph = catalog.sporadic_graph(id)?.clone();
        Ok(Target {
            id,
            n: graph.vertex_count(),
            edges: graph.edge_count(),
            s: graph.component_count(),
            t: graph.independence_number(),
            t2: graph.t_at(Vertex::Prime(2))?,
            omega: graph.clique_number(),
            isolated: graph.isolated_vertices().len(),
            degrees: graph.degree_sequence(),
            graph,
        })
    }

    fn vertices_of_degree_at_least(&self, d: usize) -> usize {
        self.degrees.iter().filter(|&&x| x >= d).count()
    }
}

/// Outer automorphism data: prime divisors of |Out(S)| when known.
#[derive(Debug, Clone)]
struct OutData {
    primes: Option<BTreeSet<u64>>,
    cyclic: bool,
}

/// A socle with explicit graph: a concrete group or a Suzuki shape.
struct Socle<'a> {
    name: String,
    graph: PrimeGraph,
    out: OutData,
    facts: Vec<&'a FactRecord>,
}

impl Socle<'_> {
    fn old_primes(&self) -> BTreeSet<u64> {
        self.graph.primes()
    }

    fn next_symbol(&self) -> u32 {
        self.graph
            .vertices()
            .iter()
            .filter_map(|v| match v {
                Vertex::Symbolic(n) => Some(*n),
                Vertex::Prime(_) => None,
            })
            .max()
            .unwrap_or(0)
            + 1
    }

    /// Facts constraining a Fitting prime `v`; `old` says whether it divides |S|.
    fn module_facts(&self, v: Vertex, old: bool) -> impl Iterator<Item = &FactRecord> {
        self.facts.iter().copied().filter(move |f| {
            f.kind
                .characteristic()
                .is_some_and(|c| c.applies_to(v.prime(), old))
        })
    }

    fn centraliser_facts(&self, outer: u64) -> impl Iterator<Item = &FactRecord> {
        self.facts.iter().copied().filter(
            move |f| matches!(f.kind, FactKind::CentralizerEdge { outer: o, .. } if o == outer),
        )
    }

    fn citations(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        self.facts
            .iter()
            .map(|f| f.citation.clone())
            .filter(|c| seen.insert(c.clone()))
            .collect()
    }
}

struct Elim {
    rule: RuleId,
    trace: Vec<String>,
    sources: Vec<String>,
}

impl Elim {
    fn new(rule: RuleId, line: String) -> Self {
        Elim {
            rule,
            trace: vec![line],
            sources: Vec::new(),
        }
    }
}

enum Outcome {
    Eliminated(Elim),
    Survives {
        completion: PrimeGraph,
        trace: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tag {
    Fitting,
    Outer(Option<u64>),
}

/// Result of the exhaustive R6 search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum R6Outcome {
    Eliminated {
        completions: usize,
        configurations: usize,
        rejections: BTreeMap<String, usize>,
    },
    Survives {
        completion: PrimeGraph,
        description: String,
    },
    MissingFact {
        subject: String,
        characteristic: String,
    },
}

/// Candidate evaluation for one target.
pub struct Engine<'a> {
    catalog: &'a Catalog,
    target: Target,
}

impl<'a> Engine<'a> {
    pub fn new(catalog: &'a Catalog, target: Sporadic) -> Result<Self> {
        Ok(Engine {
            catalog,
            target: Target::new(catalog, target)?,
        })
    }

    /// Admissible socles, ordered by candidate key.
    pub fn candidates(&self) -> Result<Vec<Candidate>> {
        let t = &self.target;
        let mut pool: Vec<GroupId> = Sporadic::ALL.into_iter().map(GroupId::Sporadic).collect();
        pool.extend([
            GroupId::Psl3_4,
            GroupId::Psu4_3,
            GroupId::Psu6_2,
            GroupId::POmegaMinus(5),
            GroupId::F4(1),
            GroupId::TwoF4(1),
            GroupId::TwoG2(1),
            GroupId::TwoE6_2,
            GroupId::E7_2,
            GroupId::E7_3,
        ]);
        // Alt_p with p and p-2 prime; beyond 47 |π(Alt_p)| exceeds every target.
        pool.extend(
            numtheory::primes_up_to(47)
                .into_iter()
                .filter(|&p| p > 6 && numtheory::is_prime(p as u128 - 2).unwrap_or(false))
                .map(|p| GroupId::Alt(p as u32)),
        );
        let mut out = Vec::new();
        for id in pool {
            if id == GroupId::Sporadic(t.id) {
                continue;
            }
            let s = families::component_partition_in(self.catalog, id)?.len();
            let pi = families::order_in(self.catalog, id)?.factors().len();
            let coclique_room = t.s != 3 || pi + 1 >= t.t;
            if s >= t.s && pi <= t.n && coclique_room {
                out.push(Candidate::Concrete(id));
            }
        }
        for slice in FamilySlice::ALL {
            let p = families::family_profile(FamilyRef::Slice(slice))?;
            if p.component_count.is_none_or(|c| c >= t.s) && p.pi_lower_bound <= t.n {
                out.push(Candidate::Slice(slice));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Runs the rule pipeline on one candidate.
    pub fn evaluate(&self, candidate: Candidate) -> Result<EliminationReport> {
        let outcome = match candidate {
            Candidate::Concrete(id) => self.run_group(id)?,
            Candidate::Slice(FamilySlice::TwoB2) => self.run_suzuki()?,
            Candidate::Slice(slice) => {
                self.run_profile(&families::family_profile(FamilyRef::Slice(slice))?)?
            }
        };
        Ok(self.report(candidate, outcome))
    }

    fn report(&self, candidate: Candidate, outcome: Outcome) -> EliminationReport {
        let verdict = match outcome {
            Outcome::Eliminated(mut e) => {
                let reference = reference_rule(self.target.id, candidate);
                let earlier = reference.is_some_and(|r| e.rule < r);
                if let Some(r) = reference.filter(|_| earlier) {
                    e.trace.push(format!(
                        "earlier-rule elimination: the reference argument uses {r}"
                    ));
                }
                let mut sources = vec![e.rule.citation().to_string()];
                for s in e.sources {
                    if !sources.contains(&s) {
                        sources.push(s);
                    }
                }
                Verdict::Eliminated {
                    rule: e.rule,
                    earlier_rule: earlier,
                    citation: sources.join("; "),
                    trace: e.trace,
                }
            }
            Outcome::Survives { completion, trace } => Verdict::Survives { completion, trace },
        };
        EliminationReport {
            target: self.target.id,
            candidate,
            verdict,
        }
    }

    fn socle(&self, id: GroupId) -> Result<Socle<'a>> {
        let graph = families::prime_graph_in(self.catalog, id)?;
        let out = match self.catalog.entry(id) {
            Ok(e) => OutData {
                primes: Some(e.out_order.primes().map(|p| p as u64).collect()),
                cyclic: e.out_cyclic,
            },
            Err(_) => match families::out_group(id)? {
                Some((f, cyclic)) => OutData {
                    primes: Some(f.primes().map(|p| p as u64).collect()),
                    cyclic,
                },
                None => OutData {
                    primes: None,
                    cyclic: false,
                },
            },
        };
        Ok(Socle {
            name: id.display_name(),
            graph,
            out,
            facts: self.catalog.facts_for(id, None),
        })
    }

    fn run_group(&self, id: GroupId) -> Result<Outcome> {
        match self.socle(id) {
            Ok(s) => self.run_socle(&s),
            Err(Error::FullGraphUnknown { .. }) => {
                self.run_profile(&families::family_profile(FamilyRef::Group(id))?)
            }
            Err(e) => Err(e),
        }
    }

    fn run_socle(&self, s: &Socle) -> Result<Outcome> {
        if let Some(e) = self.structural(s)? {
            return Ok(Outcome::Eliminated(e));
        }
        if let Some(e) = self.r5(s)? {
            return Ok(Outcome::Eliminated(e));
        }
        match self.r6(s, false)? {
            R6Outcome::Eliminated {
                completions,
                configurations,
                rejections,
            } => {
                let again = self.r6(s, true)?;
                let expected = R6Outcome::Eliminated {
                    completions,
                    configurations,
                    rejections: rejections.clone(),
                };
                if again != expected {
                    return Err(Error::CheckFailed(format!(
                        "{}: reverse-order search disagrees with the forward search",
                        s.name
                    )));
                }
                let mut trace = vec![format!(
                    "R6: {} of Γ({}) plus {} into Γ(G), {}, none consistent",
                    count(completions, "completion"),
                    s.name,
                    count(self.target.n - s.graph.vertex_count(), "new prime"),
                    count(configurations, "Fitting/outer configuration"),
                )];
                trace.extend(
                    rejections
                        .iter()
                        .map(|(why, n)| format!("  {n} rejected: {why}")),
                );
                trace.push("reverse-order search agrees".into());
                Ok(Outcome::Eliminated(Elim {
                    rule: RuleId::R6,
                    trace,
                    sources: s.citations(),
                }))
            }
            R6Outcome::Survives {
                completion,
                description,
            } => Ok(Outcome::Survives {
                completion,
                trace: vec![format!("R6: consistent configuration {description}")],
            }),
            R6Outcome::MissingFact {
                subject,
                characteristic,
            } => Err(Error::MissingFact {
                subject,
                characteristic,
            }),
        }
    }

    /// R1 to R4 on an explicit graph.
    fn structural(&self, s: &Socle) -> Result<Option<Elim>> {
        let t = &self.target;
        let g = &s.graph;
        let n = g.vertex_count();
        if n > t.n {
            return Ok(Some(Elim::new(
                RuleId::R1,
                format!("|pi(S)| = {n} > |pi(G)| = {}", t.n),
            )));
        }
        if g.edge_count() > t.edges {
            return Ok(Some(Elim::new(
                RuleId::R1,
                format!("Γ(S) has {} edges, Γ(G) only {}", g.edge_count(), t.edges),
            )));
        }
        let ts = g.independence_number();
        if ts + 1 < t.t {
            return Ok(Some(Elim::new(
                RuleId::R2,
                format!("t(S) = {ts} < t(G) - 1 = {}", t.t - 1),
            )));
        }
        if g.contains(Vertex::Prime(2)) {
            let t2 = g.t_at(Vertex::Prime(2))?;
            if t2 < t.t2 {
                return Ok(Some(Elim::new(
                    RuleId::R3,
                    format!("t(2,S) = {t2} < t(2,G) = {}", t.t2),
                )));
            }
        }
        let omega = g.clique_number();
        if omega > t.omega {
            return Ok(Some(Elim::new(
                RuleId::R4,
                format!(
                    "Γ(S) has a clique of size {omega}, Γ(G) none larger than {}",
                    t.omega
                ),
            )));
        }
        let iso = g.isolated_vertices().len();
        if iso < t.isolated {
            return Ok(Some(Elim::new(
                RuleId::R4,
                format!("Γ(S) has {iso} isolated vertices, Γ(G) has {}", t.isolated),
            )));
        }
        let seq = g.degree_sequence();
        if let Some(i) = (0..seq.len()).find(|&i| seq[i] > t.degrees[i]) {
            let d = seq[i];
            let ks = seq.iter().filter(|&&x| x >= d).count();
            return Ok(Some(Elim::new(
                RuleId::R4,
                format!(
                    "Γ(S) has {ks} vertices of degree >= {d}, Γ(G) only {}",
                    t.vertices_of_degree_at_least(d)
                ),
            )));
        }
        if !g.embeds_into(&t.graph, false) {
            return Ok(Some(Elim::new(
                RuleId::R4,
                "Γ(S) is not a subgraph of Γ(G)".into(),
            )));
        }
        Ok(None)
    }

    /// R1 to R4 from family bounds alone.
    fn run_profile(&self, p: &FamilyProfile) -> Result<Outcome> {
        let t = &self.target;
        let source = |rule: RuleId, line: String| {
            Ok(Outcome::Eliminated(Elim {
                rule,
                trace: vec![line],
                sources: vec![p.citation.to_string()],
            }))
        };
        if p.pi_lower_bound > t.n {
            return source(
                RuleId::R1,
                format!("|pi(S)| >= {} > |pi(G)| = {}", p.pi_lower_bound, t.n),
            );
        }
        if p.edges_lower_bound > t.edges {
            return source(
                RuleId::R1,
                format!(
                    "Γ(S) has at least {} edges, Γ(G) only {}",
                    p.edges_lower_bound, t.edges
                ),
            );
        }
        if let Some(rule) = p
            .isolated_rule
            .filter(|r| t.isolated >= r.isolated && r.pi_lower_bound > t.n)
        {
            return source(
                RuleId::R1,
                format!(
                    "Γ(S) needs {} isolated vertices, which forces |pi(S)| >= {} > |pi(G)| = {}",
                    t.isolated, rule.pi_lower_bound, t.n
                ),
            );
        }
        if let Some(tu) = p.t_upper_bound.filter(|&tu| tu + 1 < t.t) {
            return source(RuleId::R2, format!("t(S) <= {tu} < t(G) - 1 = {}", t.t - 1));
        }
        if p.clique_structure == CliqueStructure::CliqueComponents {
            if let Some(c) = p.component_count.filter(|&c| c < t.t2) {
                return source(
                    RuleId::R3,
                    format!("t(2,S) = {c} (clique components) < t(2,G) = {}", t.t2),
                );
            }
        }
        if let Some(h) = p.high_degree {
            let have = t.vertices_of_degree_at_least(h.degree);
            if have < h.vertices {
                return source(
                    RuleId::R4,
                    format!(
                        "Γ(S) has at least {} vertices of degree >= {}, Γ(G) only {have}",
                        h.vertices, h.degree
                    ),
                );
            }
        }
        if let Some(pattern) = p.pattern() {
            if t.graph.contains_pattern(&pattern, false).is_none() {
                return source(
                    RuleId::R4,
                    format!(
                        "Γ(S) contains the {} subgraph, Γ(G) does not",
                        p.required_pattern.as_deref().unwrap_or("")
                    ),
                );
            }
        }
        Err(Error::MissingFact {
            subject: p.subject.clone(),
            characteristic: "family-level bound".into(),
        })
    }

    /// R5: edges forced on the new primes alone.
    fn r5(&self, s: &Socle) -> Result<Option<Elim>> {
        let t = &self.target;
        let old = s.old_primes();
        let k = t.n - s.graph.vertex_count();
        if k == 0 {
            return Ok(None);
        }
        let available: Option<Vec<u64>> = s
            .out
            .primes
            .as_ref()
            .map(|ps| ps.iter().copied().filter(|p| !old.contains(p)).collect());
        let first = s.next_symbol();
        let mut trace = vec![format!(
            "{}, adjacent to 2; Out(S) {} with prime divisors outside pi(S) {}",
            count(k, "new prime"),
            if s.out.cyclic { "cyclic" } else { "not cyclic" },
            available
                .as_ref()
                .map_or_else(|| "unknown".to_string(), render_set),
        )];
        let mut sources = BTreeSet::new();
        for outer in 0..=k {
            let choices: Vec<Vec<Option<u64>>> = match &available {
                Some(a) => combinations(a, outer)
                    .into_iter()
                    .map(|c| c.into_iter().map(Some).collect())
                    .collect(),
                None => vec![vec![None; outer]],
            };
            let label = format!("{} Fitting, {outer} outer", k - outer);
            if choices.is_empty() {
                trace.push(format!(
                    "{label}: |Out(S)| has fewer than {} outside pi(S)",
                    count(outer, "prime divisor")
                ));
                continue;
            }
            for values in choices {
                let (forced, used) = self.forced_graph(s, k - outer, &values, first)?;
                let shown = if values.iter().any(Option::is_some) {
                    format!("{label} {}", render_set(values.iter().flatten()))
                } else {
                    label.clone()
                };
                match self.forced_failure(&forced) {
                    Some(why) => {
                        trace.push(format!("{shown}: {why}"));
                        sources.extend(used);
                    }
                    None => return Ok(None),
                }
            }
        }
        Ok(Some(Elim {
            rule: RuleId::R5,
            trace,
            sources: sources.into_iter().collect(),
        }))
    }

    fn forced_graph(
        &self,
        s: &Socle,
        fitting: usize,
        outer: &[Option<u64>],
        first: u32,
    ) -> Result<(PrimeGraph, Vec<String>)> {
        let old: Vec<Vertex> = s.graph.vertices().iter().copied().collect();
        let fit: Vec<Vertex> = (0..fitting as u32)
            .map(|i| Vertex::Symbolic(first + i))
            .collect();
        let out: Vec<Vertex> = outer
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.map_or(
                    Vertex::Symbolic(first + (fitting + i) as u32),
                    Vertex::Prime,
                )
            })
            .collect();
        let mut edges: Vec<(Vertex, Vertex)> = s.graph.edges().iter().copied().collect();
        let mut used = Vec::new();
        let two = Vertex::Prime(2);
        for &v in fit.iter().chain(&out) {
            edges.push((v, two));
        }
        for (i, &a) in fit.iter().enumerate() {
            edges.extend(fit[i + 1..].iter().map(|&b| (a, b)));
            for f in s.module_facts(a, false) {
                match &f.kind {
                    FactKind::ForcedFix { primes, .. } => {
                        edges.extend(
                            primes
                                .iter()
                                .map(|&p| Vertex::Prime(p))
                                .filter(|p| old.contains(p))
                                .map(|p| (a, p)),
                        );
                        used.push(f.citation.clone());
                    }
                    FactKind::ForcedFixAll { .. } => {
                        edges.extend(old.iter().map(|&p| (a, p)));
                        used.push(f.citation.clone());
                    }
                    _ => {}
                }
            }
        }
        if s.out.cyclic {
            for (i, &a) in out.iter().enumerate() {
                edges.extend(out[i + 1..].iter().map(|&b| (a, b)));
            }
        }
        for &o in outer.iter().flatten() {
            for f in s.centraliser_facts(o) {
                if let FactKind::CentralizerEdge { edges: es, .. } = &f.kind {
                    let present = |p: u64| old.contains(&Vertex::Prime(p)) || p == o;
                    edges.extend(
                        es.iter()
                            .filter(|&&(a, b)| present(a) && present(b))
                            .map(|&(a, b)| (Vertex::Prime(a), Vertex::Prime(b))),
                    );
                    used.push(f.citation.clone());
                }
            }
        }
        edges.retain(|(a, b)| a != b);
        let vertices = old.into_iter().chain(fit).chain(out);
        Ok((PrimeGraph::new(vertices, edges)?, used))
    }

    fn forced_failure(&self, f: &PrimeGraph) -> Option<String> {
        let t = &self.target;
        let s = f.component_count();
        if s < t.s {
            return Some(format!("forced graph has {s} components, Γ(G) has {}", t.s));
        }
        if f.edge_count() > t.edges {
            return Some(format!(
                "forced graph has {} edges, Γ(G) has {}",
                f.edge_count(),
                t.edges
            ));
        }
        let iso = f.isolated_vertices();
        if iso.len() < t.isolated {
            return Some(format!(
                "forced graph has isolated vertices {}, Γ(G) needs {}",
                render_set(&iso),
                t.isolated
            ));
        }
        let omega = f.clique_number();
        if omega > t.omega {
            return Some(format!(
                "forced graph has a clique of size {omega}, Γ(G) none larger than {}",
                t.omega
            ));
        }
        if !f.embeds_into(&t.graph, false) {
            return Some("forced graph is not a spanning subgraph of Γ(G)".into());
        }
        None
    }

    /// R6: every placement of Γ(S) and the new primes onto Γ(G), with every
    /// choice of primes dividing |H|/|S| and their Fitting/outer roles.
    pub fn r6_search(&self, candidate: GroupId, reverse: bool) -> Result<R6Outcome> {
        let s = self.socle(candidate)?;
        self.r6(&s, reverse)
    }

    fn r6(&self, s: &Socle, reverse: bool) -> Result<R6Outcome> {
        let t = &self.target;
        let k = t.n.checked_sub(s.graph.vertex_count()).ok_or_else(|| {
            Error::InvalidArgument(format!("{} has more primes than the target", s.name))
        })?;
        if k > MAX_NEW_PRIMES {
            return Err(Error::InvalidArgument(format!(
                "{k} new primes exceed the search bound {MAX_NEW_PRIMES}"
            )));
        }
        let first = s.next_symbol();
        let new: Vec<Vertex> = (0..k as u32).map(|i| Vertex::Symbolic(first + i)).collect();
        let src = new
            .iter()
            .try_fold(s.graph.clone(), |g, &v| g.with_vertex(v))?;

        // Completions up to permuting the new primes, each in canonical labelling.
        let mut keys = BTreeSet::new();
        let mut failure = None;
        // The new vertices are isolated in `src`, so embed the old graph and
        // hand the unused target primes to the new vertices.
        s.graph
            .for_each_embedding_into(&t.graph, false, reverse, |phi| {
                let mut back: BTreeMap<Vertex, Vertex> =
                    phi.iter().map(|(&a, &b)| (b, a)).collect();
                let unused: Vec<Vertex> = t
                    .graph
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|v| !back.contains_key(v))
                    .collect();
                back.extend(unused.into_iter().zip(new.iter().copied()));
                let edges = t.graph.edges().iter().map(|(a, b)| (back[a], back[b]));
                match PrimeGraph::new(src.vertices().iter().copied(), edges) {
                    Ok(c) => {
                        keys.insert(canonical_key(&c, &new));
                        false
                    }
                    Err(e) => {
                        failure = Some(e);
                        true
                    }
                }
            });
        if let Some(e) = failure {
            return Err(e);
        }
        let completions = keys
            .into_iter()
            .map(|es| PrimeGraph::new(src.vertices().iter().copied(), es))
            .collect::<Result<Vec<_>>>()?;

        let old = s.old_primes();
        let available: Option<Vec<u64>> = s
            .out
            .primes
            .as_ref()
            .map(|ps| ps.iter().copied().filter(|p| !old.contains(p)).collect());
        let two = Vertex::Prime(2);
        let mut configurations = 0;
        let mut rejections: BTreeMap<String, usize> = BTreeMap::new();
        let mut uncovered: Option<(String, String)> = None;
        for c in &completions {
            if new.iter().any(|&v| !c.has_edge(v, two)) {
                configurations += 1;
                *rejections
                    .entry("new prime not adjacent to 2".into())
                    .or_default() += 1;
                continue;
            }
            let mut optional: Vec<Vertex> = s
                .graph
                .vertices()
                .iter()
                .copied()
                .filter(|&v| v == two || c.has_edge(v, two))
                .collect();
            if reverse {
                optional.reverse();
            }
            let masks: Vec<u64> = if reverse {
                (0..1u64 << optional.len()).rev().collect()
            } else {
                (0..1u64 << optional.len()).collect()
            };
            for mask in masks {
                let members: Vec<Vertex> = new
                    .iter()
                    .copied()
                    .chain(
                        optional
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask >> i & 1 == 1)
                            .map(|(_, &v)| v),
                    )
                    .collect();
                for tags in tag_assignments(&members, s, &old, available.as_deref()) {
                    configurations += 1;
                    match check_configuration(s, c, &tags, &old) {
                        Err(why) => *rejections.entry(why).or_default() += 1,
                        Ok(()) => match coverage_gap(s, &tags, &old) {
                            None => {
                                let description = tags
                                    .iter()
                                    .map(|(v, tag)| match tag {
                                        Tag::Fitting => format!("{v}:fitting"),
                                        Tag::Outer(Some(o)) => format!("{v}:outer({o})"),
                                        Tag::Outer(None) => format!("{v}:outer"),
                                    })
                                    .collect::<Vec<_>>()
                                    .join(" ");
                                return Ok(R6Outcome::Survives {
                                    completion: c.clone(),
                                    description,
                                });
                            }
                            Some(gap) => {
                                uncovered.get_or_insert(gap);
                            }
                        },
                    }
                }
            }
        }
        if let Some((subject, characteristic)) = uncovered {
            return Ok(R6Outcome::MissingFact {
                subject,
                characteristic,
            });
        }
        Ok(R6Outcome::Eliminated {
            completions: completions.len(),
            configurations,
            rejections,
        })
    }

    /// The Suzuki family: enumerate the clique shapes of Γ(²B₂(q)).
    fn run_suzuki(&self) -> Result<Outcome> {
        let t = &self.target;
        let profile = families::family_profile(FamilyRef::Slice(FamilySlice::TwoB2))?;
        if let Ok(Outcome::Eliminated(e)) = self.run_profile(&profile) {
            return Ok(Outcome::Eliminated(e));
        }
        let slice_facts = self.catalog.facts_for_slice(FamilySlice::TwoB2, None);
        let mut trace = vec![format!(
            "Γ(S) is {{2}} plus cliques of sizes a <= b <= c with 3 <= a+b+c <= {}",
            t.n - 1
        )];
        let mut sources = vec![profile.citation.to_string()];
        let mut worst = RuleId::R1;
        for (a, b, c) in suzuki_shapes(t.n - 1) {
            if (a, b, c) == (1, 1, 1) {
                let ms: Vec<u32> = (1..=12)
                    .filter(|&m| numtheory::suzuki_both_prime_powers(m).unwrap_or(false))
                    .collect();
                if ms != [1, 2] {
                    return Err(Error::CheckFailed(format!(
                        "Suzuki prime-power criterion gives {ms:?}"
                    )));
                }
                trace.push(
                    "shape (1,1,1): both q±sqrt(2q)+1 are prime powers, so m in {1,2}".into(),
                );
                for m in [1, 2] {
                    let id = GroupId::TwoB2(m);
                    match self.run_group(id)? {
                        Outcome::Eliminated(e) => {
                            worst = worst.max(e.rule);
                            trace.push(format!("  {}: {}", id.display_name(), e.rule));
                            trace.extend(e.trace.into_iter().map(|l| format!("    {l}")));
                            sources.extend(e.sources);
                        }
                        survivor => return Ok(survivor),
                    }
                }
                continue;
            }
            let socle = Socle {
                name: format!("2B2 shape ({a},{b},{c})"),
                graph: suzuki_shape_graph(&[a, b, c])?,
                out: OutData {
                    primes: None,
                    cyclic: true,
                },
                facts: slice_facts.clone(),
            };
            let elim = match self.structural(&socle)? {
                Some(e) => e,
                None => self.r5(&socle)?.ok_or_else(|| Error::CandidateSurvives {
                    target: t.id.to_string(),
                    candidate: socle.name.clone(),
                })?,
            };
            worst = worst.max(elim.rule);
            trace.push(format!(
                "shape ({a},{b},{c}), N = {}: {}",
                a + b + c,
                elim.rule
            ));
            trace.extend(elim.trace.into_iter().map(|l| format!("    {l}")));
            sources.extend(elim.sources);
        }
        let mut unique = Vec::new();
        for s in sources {
            if !unique.contains(&s) {
                unique.push(s);
            }
        }
        Ok(Outcome::Eliminated(Elim {
            rule: worst,
            trace,
            sources: unique,
        }))
    }
}

/// Shapes (a,b,c), a <= b <= c, with 3 <= a+b+c <= max_n.
pub fn suzuki_shapes(max_n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for a in 1..=n / 3 {
            for b in a..=(n - a) / 2 {
                out.push((a, b, n - a - b));
            }
        }
    }
    out
}

fn suzuki_shape_graph(sizes: &[usize]) -> Result<PrimeGraph> {
    let mut next = 1u32;
    let mut cliques = vec![vec![Vertex::Prime(2)]];
    for &k in sizes {
        cliques.push((next..next + k as u32).map(Vertex::Symbolic).collect());
        next += k as u32;
    }
    PrimeGraph::from_cliques(cliques)
}

fn combinations(items: &[u64], k: usize) -> Vec<Vec<u64>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<u64>> = combinations(&items[1..], k - 1)
        .into_iter()
        .map(|mut c| {
            c.insert(0, items[0]);
            c
        })
        .collect();
    out.extend(combinations(&items[1..], k));
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Edge list up to permuting the anonymous new primes.
fn canonical_key(g: &PrimeGraph, new: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    permutations(new.len())
        .into_iter()
        .map(|p| {
            let map: BTreeMap<Vertex, Vertex> = new
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, new[p[i]]))
                .collect();
            let at = |v: Vertex| *map.get(&v).unwrap_or(&v);
            let mut es: Vec<(Vertex, Vertex)> = g
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (at(a), at(b));
                    if x <= y {
                        (x, y)
                    } else {
                        (y, x)
                    }
                })
                .collect();
            es.sort();
            es
        })
        .min()
        .unwrap_or_default()
}

/// Every Fitting/outer labelling of `members`. Old primes may be outer only
/// when they divide |Out(S)|; new outer primes take distinct values from
/// `available`, or stay symbolic when |Out(S)| is unknown.
fn tag_assignments(
    members: &[Vertex],
    s: &Socle,
    old: &BTreeSet<u64>,
    available: Option<&[u64]>,
) -> Vec<Vec<(Vertex, Tag)>> {
    let mut out = vec![Vec::new()];
    for &v in members {
        let mut next = Vec::new();
        for partial in &out {
            let mut push = |tag: Tag| {
                let mut p: Vec<(Vertex, Tag)> = partial.clone();
                p.push((v, tag));
                next.push(p);
            };
            push(Tag::Fitting);
            match v.prime() {
                Some(p) if old.contains(&p) => {
                    if s.out.primes.as_ref().is_none_or(|ps| ps.contains(&p)) {
                        push(Tag::Outer(Some(p)));
                    }
                }
                _ => match available {
                    None => push(Tag::Outer(None)),
                    Some(values) => {
                        let taken: BTreeSet<u64> = partial
                            .iter()
                            .filter(|(w, _)| w.prime().is_none_or(|p| !old.contains(&p)))
                            .filter_map(|(_, t)| match t {
                                Tag::Outer(Some(o)) => Some(*o),
                                _ => None,
                            })
                            .collect();
                        for &o in values.iter().filter(|o| !taken.contains(o)) {
                            push(Tag::Outer(Some(o)));
                        }
                    }
                },
            }
        }
        out = next;
    }
    out
}

fn check_configuration(
    s: &Socle,
    c: &PrimeGraph,
    tags: &[(Vertex, Tag)],
    old: &BTreeSet<u64>,
) -> std::result::Result<(), String> {
    let two = Vertex::Prime(2);
    let members: BTreeSet<Vertex> = tags.iter().map(|(v, _)| *v).collect();
    let mut tags = tags.to_vec();
    tags.sort_by_key(|(v, _)| *v);
    let fitting: Vec<Vertex> = tags
        .iter()
        .filter(|(_, t)| *t == Tag::Fitting)
        .map(|(v, _)| *v)
        .collect();
    let outer: Vec<(Vertex, Option<u64>)> = tags
        .iter()
        .filter_map(|(v, t)| match t {
            Tag::Outer(o) => Some((*v, *o)),
            Tag::Fitting => None,
        })
        .collect();
    if members.iter().any(|&v| v != two && !c.has_edge(v, two)) {
        return Err("prime of |H|/|S| not adjacent to 2".into());
    }
    if c.edges()
        .difference(s.graph.edges())
        .any(|(a, b)| !members.contains(a) && !members.contains(b))
    {
        return Err("new edge avoids the primes of |H|/|S|".into());
    }
    if !is_clique(c, &fitting) {
        return Err("Fitting primes not pairwise adjacent".into());
    }
    if s.out.cyclic && !is_clique(c, &outer.iter().map(|(v, _)| *v).collect::<Vec<_>>()) {
        return Err("outer primes of a cyclic Out(S) not pairwise adjacent".into());
    }
    let ms: Vec<Vertex> = members.iter().copied().collect();
    for (i, &a) in ms.iter().enumerate() {
        for &b in &ms[i + 1..] {
            if !c.has_edge(a, b)
                && c.vertices()
                    .iter()
                    .any(|&w| w != a && w != b && !c.has_edge(w, a) && !c.has_edge(w, b))
            {
                return Err("coclique of size 3 contains two primes of |H|/|S|".into());
            }
        }
    }
    for &r in &fitting {
        let is_old = r.prime().is_some_and(|p| old.contains(&p));
        let mut fixes: BTreeSet<u64> = BTreeSet::new();
        for f in s.module_facts(r, is_old) {
            match &f.kind {
                FactKind::ForcedFix { primes, .. } => {
                    for &p in primes
                        .iter()
                        .filter(|&&p| old.contains(&p) && Some(p) != r.prime())
                    {
                        if !c.has_edge(r, Vertex::Prime(p)) {
                            return Err("module fixed points force an edge to a fixed prime".into());
                        }
                        fixes.insert(p);
                    }
                }
                FactKind::ForcedFixAll { .. } => {
                    if s.graph
                        .vertices()
                        .iter()
                        .any(|&p| p != r && !c.has_edge(r, p))
                    {
                        return Err("module fixed points force an edge to a fixed prime".into());
                    }
                    fixes.extend(old.iter().copied());
                }
                _ => {}
            }
        }
        let avoid: BTreeSet<u64> = old
            .iter()
            .copied()
            .filter(|&p| Some(p) != r.prime() && !c.has_edge(r, Vertex::Prime(p)))
            .collect();
        fixes.extend(old.iter().copied().filter(|&p| {
            c.has_edge(r, Vertex::Prime(p)) && !s.graph.has_edge(r, Vertex::Prime(p))
        }));
        for f in s.module_facts(r, is_old) {
            if let FactKind::NoModuleAvoiding {
                avoiding,
                while_fixing,
                ..
            } = &f.kind
            {
                if avoiding.is_subset(&avoid) && while_fixing.is_subset(&fixes) {
                    return Err(
                        "no module avoids the primes not adjacent to the characteristic".into(),
                    );
                }
            }
        }
    }
    for &(v, o) in &outer {
        let Some(o) = o else { continue };
        for f in s.centraliser_facts(o) {
            if let FactKind::CentralizerEdge { edges, .. } = &f.kind {
                let at = |p: u64| if p == o { v } else { Vertex::Prime(p) };
                for &(a, b) in edges {
                    let (x, y) = (at(a), at(b));
                    if c.contains(x) && c.contains(y) && x != y && !c.has_edge(x, y) {
                        return Err(
                            "outer automorphism centralises elements giving a missing edge".into(),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

/// The first member whose role no catalog fact speaks to.
fn coverage_gap(
    s: &Socle,
    tags: &[(Vertex, Tag)],
    old: &BTreeSet<u64>,
) -> Option<(String, String)> {
    for &(v, tag) in tags {
        match tag {
            Tag::Fitting => {
                let is_old = v.prime().is_some_and(|p| old.contains(&p));
                if s.module_facts(v, is_old).next().is_none() {
                    let ch = if is_old {
                        v.to_string()
                    } else {
                        Characteristic::Coprime.to_string()
                    };
                    return Some((s.name.clone(), ch));
                }
            }
            Tag::Outer(o) => {
                if o.is_none_or(|o| s.centraliser_facts(o).next().is_none()) {
                    let what = o.map_or_else(
                        || "outer automorphism".to_string(),
                        |o| format!("outer automorphism of order {o}"),
                    );
                    return Some((s.name.clone(), what));
                }
            }
        }
    }
    None
}

fn is_clique(g: &PrimeGraph, vs: &[Vertex]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Admissible socles for a recognisable target.
pub fn candidate_socles(target: Sporadic) -> Result<Vec<Candidate>> {
    candidate_socles_in(Catalog::builtin(), target)
}

pub fn candidate_socles_in(catalog: &Catalog, target: Sporadic) -> Result<Vec<Candidate>> {
    require_target(target)?;
    Engine::new(catalog, target)?.candidates()
}

pub fn apply_filters(target: Sporadic, candidate: Candidate) -> Result<EliminationReport> {
    require_target(target)?;
    Engine::new(Catalog::builtin(), target)?.evaluate(candidate)
}

pub fn eliminate_family(target: Sporadic, slice: FamilySlice) -> Result<EliminationReport> {
    apply_filters(target, Candidate::Slice(slice))
}

fn require_target(target: Sporadic) -> Result<()> {
    if RECOGNISABLE_BY_TYPE.contains(&target) {
        Ok(())
    } else {
        Err(Error::UnsupportedTarget(target.to_string()))
    }
}

pub fn recognise(target: Sporadic) -> Result<RecognitionReport> {
    recognise_in(Catalog::builtin(), target, Strategy::default())
}

/// Recognisable targets run the elimination pipeline; the others replay
/// their witnesses.
pub fn recognise_in(
    catalog: &Catalog,
    target: Sporadic,
    strategy: Strategy,
) -> Result<RecognitionReport> {
    if !RECOGNISABLE_BY_TYPE.contains(&target) {
        let specs = catalog.witnesses_for(target);
        if specs.is_empty() {
            return Err(Error::NotFound(format!("witness for {target}")));
        }
        let witnesses = specs
            .into_iter()
            .map(|w| verify_witness_in(catalog, w))
            .collect::<Result<Vec<_>>>()?;
        return Ok(RecognitionReport {
            target,
            verdict: UnlabelledStatus::Unrecognisable,
            shortcut: None,
            eliminations: Vec::new(),
            witnesses,
        });
    }
    let engine = Engine::new(catalog, target)?;
    let shortcut = if target == Sporadic::J4 {
        let s = engine.target.s;
        if s != 6 {
            return Err(Error::CheckFailed(format!(
                "Γ(J4) has {s} components, expected 6"
            )));
        }
        Some("J4 is the only finite group whose prime graph has 6 connected components (Zavarnitsine, finite groups with a prime graph of six components)".to_string())
    } else {
        None
    };
    let candidates = engine.candidates()?;
    let eliminations = map_ordered(&candidates, strategy, |&c| engine.evaluate(c))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    if let Some(r) = eliminations.iter().find(|r| r.rule().is_none()) {
        return Err(Error::CandidateSurvives {
            target: target.to_string(),
            candidate: r.candidate.to_string(),
        });
    }
    Ok(RecognitionReport {
        target,
        verdict: UnlabelledStatus::Recognisable,
        shortcut,
        eliminations,
        witnesses: Vec::new(),
    })
}

#[cfg(test)]
mod tests;
