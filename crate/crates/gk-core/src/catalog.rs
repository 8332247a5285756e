//! Embedded, citation-annotated data: prime graphs of the sporadic and
//! explicit exceptional groups, outer automorphism data, the labelled
//! recognisability table, module facts and witness constructions.
//!
//! The JSON document is the single source of truth. Parsing rejects only
//! structural problems; semantic problems are reported by [`Catalog::validate`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extensions::{ExtensionStep, WitnessSpec};
use crate::families::{self, FamilySlice, GroupId, Sporadic};
use crate::graph::{PrimeGraph, Vertex};
use crate::numtheory::Factorization;

/// The catalog shipped with the library.
pub const BUILTIN_JSON: &str = include_str!("../data/catalog.json");

/// Groups whose prime graph isomorphism type determines them.
pub const RECOGNISABLE_BY_TYPE: [Sporadic; 8] = [
    Sporadic::ON,
    Sporadic::Ly,
    Sporadic::Th,
    Sporadic::Fi23,
    Sporadic::J4,
    Sporadic::Fi24,
    Sporadic::B,
    Sporadic::M,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct RawEntry {
    citations: Vec<String>,
    edges: Vec<(Vertex, Vertex)>,
    id: GroupId,
    order: Vec<(u128, u32)>,
    out_cyclic: bool,
    out_order: Vec<(u128, u32)>,
    vertices: Vec<Vertex>,
}

/// One group with its tabulated prime graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawEntry", into = "RawEntry")]
pub struct CatalogEntry {
    pub id: GroupId,
    pub graph: PrimeGraph,
    pub order: Factorization,
    pub out_order: Factorization,
    pub out_cyclic: bool,
    pub citations: Vec<String>,
}

impl TryFrom<RawEntry> for CatalogEntry {
    type Error = Error;

    fn try_from(raw: RawEntry) -> Result<Self> {
        Ok(CatalogEntry {
            id: raw.id,
            graph: PrimeGraph::new(raw.vertices, raw.edges)?,
            order: Factorization::from_factors(raw.order)?,
            out_order: Factorization::from_factors(raw.out_order)?,
            out_cyclic: raw.out_cyclic,
            citations: raw.citations,
        })
    }
}

impl From<CatalogEntry> for RawEntry {
    fn from(e: CatalogEntry) -> Self {
        RawEntry {
            citations: e.citations,
            edges: e.graph.edges().iter().copied().collect(),
            id: e.id,
            order: e.order.factors().to_vec(),
            out_cyclic: e.out_cyclic,
            out_order: e.out_order.factors().to_vec(),
            vertices: e.graph.vertices().iter().copied().collect(),
        }
    }
}

/// What a fact is about: one group, or every member of a family slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subject {
    Group(GroupId),
    Slice(FamilySlice),
}

impl Subject {
    pub fn covers(self, id: GroupId) -> bool {
        match self {
            Subject::Group(g) => g == id,
            Subject::Slice(s) => s.contains(id),
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Group(g) => write!(f, "{g}"),
            Subject::Slice(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for Subject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match FamilySlice::ALL.into_iter().find(|slice| slice.tag() == s) {
            Some(slice) => Ok(Subject::Slice(slice)),
            None => s.parse().map(Subject::Group),
        }
    }
}

/// Characteristic of the modules a fact speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Characteristic {
    Prime(u64),
    /// Any prime not dividing |S|.
    Coprime,
    /// Any prime dividing |F(H)|.
    AnyFitting,
}

impl Characteristic {
    /// Whether the fact applies to modules in characteristic `r`, where
    /// `r_divides_order` says whether `r` divides |S|. A symbolic `r` is
    /// passed as `None`.
    pub fn applies_to(self, r: Option<u64>, r_divides_order: bool) -> bool {
        match self {
            Characteristic::Prime(p) => r == Some(p),
            Characteristic::Coprime => !r_divides_order,
            Characteristic::AnyFitting => true,
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Prime(p) => write!(f, "{p}"),
            Characteristic::Coprime => f.write_str("coprime"),
            Characteristic::AnyFitting => f.write_str("any"),
        }
    }
}

impl FromStr for Characteristic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coprime" => Ok(Characteristic::Coprime),
            "any" => Ok(Characteristic::AnyFitting),
            _ => match s.parse::<Vertex>()? {
                Vertex::Prime(p) => Ok(Characteristic::Prime(p)),
                Vertex::Symbolic(_) => Err(Error::Parse(format!("invalid characteristic {s:?}"))),
            },
        }
    }
}

macro_rules! string_serde {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
            }
        }
    )*};
}

string_serde!(Subject, Characteristic, LabelledStatus, UnlabelledStatus);

/// A cited statement about modules or automorphisms of a simple group.
///
/// Field names are declared in alphabetical order so the serialized form
/// has sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactKind {
    /// Outer elements of order `outer` centralise elements giving `edges` in Γ(S:⟨outer⟩).
    CentralizerEdge {
        context: String,
        edges: Vec<(u64, u64)>,
        outer: u64,
    },
    /// Elements of these prime orders fix a non-zero vector in every faithful
    /// irreducible module in the given characteristic.
    ForcedFix {
        characteristic: Characteristic,
        primes: BTreeSet<u64>,
    },
    /// As `ForcedFix`, for every prime divisor of |S|.
    ForcedFixAll { characteristic: Characteristic },
    /// A faithful module on which the `fixing` orders fix vectors and the
    /// `avoiding` orders act fixed-point freely.
    ModuleExists {
        avoiding: BTreeSet<u64>,
        characteristic: Characteristic,
        fixing: BTreeSet<u64>,
        module: String,
    },
    /// No faithful irreducible module lets every `avoiding` order act
    /// fixed-point freely while fixed points occur only among `while_fixing`.
    NoModuleAvoiding {
        avoiding: BTreeSet<u64>,
        characteristic: Characteristic,
        while_fixing: BTreeSet<u64>,
    },
}

/// Discriminant of [`FactKind`], for filtering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactKindTag {
    CentralizerEdge,
    ForcedFix,
    ForcedFixAll,
    ModuleExists,
    NoModuleAvoiding,
}

impl FactKind {
    pub fn tag(&self) -> FactKindTag {
        match self {
            FactKind::CentralizerEdge { .. } => FactKindTag::CentralizerEdge,
            FactKind::ForcedFix { .. } => FactKindTag::ForcedFix,
            FactKind::ForcedFixAll { .. } => FactKindTag::ForcedFixAll,
            FactKind::ModuleExists { .. } => FactKindTag::ModuleExists,
            FactKind::NoModuleAvoiding { .. } => FactKindTag::NoModuleAvoiding,
        }
    }

    pub fn characteristic(&self) -> Option<Characteristic> {
        match self {
            FactKind::CentralizerEdge { .. } => None,
            FactKind::ForcedFix { characteristic, .. }
            | FactKind::ForcedFixAll { characteristic }
            | FactKind::ModuleExists { characteristic, .. }
            | FactKind::NoModuleAvoiding { characteristic, .. } => Some(*characteristic),
        }
    }

    /// Every concrete prime the fact mentions.
    pub fn primes(&self) -> BTreeSet<u64> {
        match self {
            FactKind::CentralizerEdge { edges, .. } => {
                edges.iter().flat_map(|&(a, b)| [a, b]).collect()
            }
            FactKind::ForcedFix { primes, .. } => primes.clone(),
            FactKind::ForcedFixAll { .. } => BTreeSet::new(),
            FactKind::ModuleExists {
                avoiding, fixing, ..
            } => avoiding | fixing,
            FactKind::NoModuleAvoiding {
                avoiding,
                while_fixing,
                ..
            } => avoiding | while_fixing,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactRecord {
    pub citation: String,
    pub kind: FactKind,
    pub subject: Subject,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelledStatus {
    Recognisable,
    /// Exactly `k` groups share the labelled prime graph.
    KRecognisable(u32),
    Unrecognisable,
}

impl fmt::Display for LabelledStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelledStatus::Recognisable => f.write_str("recognisable"),
            LabelledStatus::KRecognisable(k) => write!(f, "{k}-recognisable"),
            LabelledStatus::Unrecognisable => f.write_str("unrecognisable"),
        }
    }
}

impl FromStr for LabelledStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recognisable" => Ok(LabelledStatus::Recognisable),
            "unrecognisable" => Ok(LabelledStatus::Unrecognisable),
            _ => s
                .strip_suffix("-recognisable")
                .and_then(|k| k.parse().ok())
                .filter(|&k| k >= 2)
                .map(LabelledStatus::KRecognisable)
                .ok_or_else(|| Error::Parse(format!("invalid labelled status {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnlabelledStatus {
    Recognisable,
    Unrecognisable,
}

impl fmt::Display for UnlabelledStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnlabelledStatus::Recognisable => "recognisable",
            UnlabelledStatus::Unrecognisable => "unrecognisable",
        })
    }
}

impl FromStr for UnlabelledStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recognisable" => Ok(UnlabelledStatus::Recognisable),
            "unrecognisable" => Ok(UnlabelledStatus::Unrecognisable),
            _ => Err(Error::Parse(format!("invalid unlabelled status {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognisabilityRow {
    pub group: Sporadic,
    pub labelled: LabelledStatus,
    pub unlabelled: UnlabelledStatus,
}

/// The whole catalog document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub facts: Vec<FactRecord>,
    pub recognisability: Vec<RecognisabilityRow>,
    pub witnesses: Vec<WitnessSpec>,
}

/// Category of a validation failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationClass {
    DuplicateEntry,
    MissingEntry,
    VertexNotInOrder,
    PrimeWithoutVertex,
    SymbolicVertex,
    OrderMismatch,
    OutOrderMismatch,
    ComponentMismatch,
    MissingCitation,
    FixAvoidOverlap,
    FactPrimeOutsideOrder,
    Recognisability,
    Witness,
}

impl fmt::Display for ViolationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub class: ViolationClass,
    pub subject: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.class, self.subject, self.message)
    }
}

static BUILTIN: OnceLock<Catalog> = OnceLock::new();

fn render<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl Catalog {
    /// The embedded catalog.
    pub fn builtin() -> &'static Catalog {
        BUILTIN.get_or_init(|| Catalog::from_json(BUILTIN_JSON).expect("embedded catalog parses"))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Catalog(e.to_string()))
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog serializes");
        s.push('\n');
        s
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn entry(&self, id: GroupId) -> Result<&CatalogEntry> {
        let id = match id {
            GroupId::POmegaMinus(3) => GroupId::Psu4_3,
            other => other,
        };
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::NotFound(id.to_string()))
    }

    pub fn sporadic_graph(&self, s: Sporadic) -> Result<&PrimeGraph> {
        Ok(&self.entry(GroupId::Sporadic(s))?.graph)
    }

    /// Facts about `id`, including facts stated for a family slice containing it.
    pub fn facts_for(&self, id: GroupId, kind: Option<FactKindTag>) -> Vec<&FactRecord> {
        self.facts
            .iter()
            .filter(|f| f.subject.covers(id) && kind.is_none_or(|k| f.kind.tag() == k))
            .collect()
    }

    /// Facts stated for the slice as a whole.
    pub fn facts_for_slice(
        &self,
        slice: FamilySlice,
        kind: Option<FactKindTag>,
    ) -> Vec<&FactRecord> {
        self.facts
            .iter()
            .filter(|f| {
                f.subject == Subject::Slice(slice) && kind.is_none_or(|k| f.kind.tag() == k)
            })
            .collect()
    }

    pub fn recognisability(&self, s: Sporadic) -> Result<&RecognisabilityRow> {
        self.recognisability
            .iter()
            .find(|r| r.group == s)
            .ok_or_else(|| Error::NotFound(format!("recognisability row for {s}")))
    }

    pub fn witnesses_for(&self, s: Sporadic) -> Vec<&WitnessSpec> {
        self.witnesses.iter().filter(|w| w.target == s).collect()
    }

    /// Checks every entry, fact, status row and witness. An empty list means healthy.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |class, subject: &dyn fmt::Display, message: String| {
            out.push(Violation {
                class,
                subject: subject.to_string(),
                message,
            });
        };

        let mut seen = BTreeSet::new();
        for e in &self.entries {
            if !seen.insert(e.id) {
                push(
                    ViolationClass::DuplicateEntry,
                    &e.id,
                    "listed more than once".into(),
                );
            }
            self.check_entry(e, &mut push);
        }
        for s in Sporadic::ALL {
            if !seen.contains(&GroupId::Sporadic(s)) {
                push(ViolationClass::MissingEntry, &s, "no catalog entry".into());
            }
        }

        for f in &self.facts {
            self.check_fact(f, &mut push);
        }
        self.check_recognisability(&mut push);
        for w in &self.witnesses {
            self.check_witness(w, &mut push);
        }
        out
    }

    fn check_entry(
        &self,
        e: &CatalogEntry,
        push: &mut impl FnMut(ViolationClass, &dyn fmt::Display, String),
    ) {
        let order_primes: BTreeSet<u64> = e.order.primes().map(|p| p as u64).collect();
        let vertex_primes = e.graph.primes();
        if e.graph.vertices().iter().any(|v| v.is_symbolic()) {
            push(
                ViolationClass::SymbolicVertex,
                &e.id,
                "entry graphs must use concrete primes".into(),
            );
        }
        let extra: Vec<_> = vertex_primes.difference(&order_primes).collect();
        if !extra.is_empty() {
            push(
                ViolationClass::VertexNotInOrder,
                &e.id,
                format!("vertices {} do not divide the order", render(extra)),
            );
        }
        let missing: Vec<_> = order_primes.difference(&vertex_primes).collect();
        if !missing.is_empty() {
            push(
                ViolationClass::PrimeWithoutVertex,
                &e.id,
                format!("primes {} of the order have no vertex", render(missing)),
            );
        }
        if e.citations.is_empty() || e.citations.iter().any(|c| c.trim().is_empty()) {
            push(
                ViolationClass::MissingCitation,
                &e.id,
                "entry needs non-empty citations".into(),
            );
        }

        match e.id {
            GroupId::Sporadic(s) => {
                if e.order.value().to_string() != s.atlas_order() {
                    push(
                        ViolationClass::OrderMismatch,
                        &e.id,
                        format!("order {} differs from {}", e.order.value(), s.atlas_order()),
                    );
                }
            }
            id => match families::order_in(self, id) {
                Ok(f) if f == e.order => {}
                Ok(f) => push(
                    ViolationClass::OrderMismatch,
                    &e.id,
                    format!(
                        "order {} differs from formula value {}",
                        e.order.value(),
                        f.value()
                    ),
                ),
                Err(err) => push(ViolationClass::OrderMismatch, &e.id, err.to_string()),
            },
        }

        match families::out_group(e.id) {
            Ok(Some((f, cyclic))) if f == e.out_order && cyclic == e.out_cyclic => {}
            Ok(Some((f, cyclic))) => push(
                ViolationClass::OutOrderMismatch,
                &e.id,
                format!(
                    "|Out| = {} (cyclic: {}) but standard data gives {} (cyclic: {cyclic})",
                    e.out_order.value(),
                    e.out_cyclic,
                    f.value()
                ),
            ),
            Ok(None) => {}
            Err(err) => push(ViolationClass::OutOrderMismatch, &e.id, err.to_string()),
        }

        let expected = match e.id {
            GroupId::Sporadic(s) => families::sporadic_table_row(s).map(Ok),
            id => Some(families::component_partition_in(self, id)),
        };
        match expected {
            None => {}
            Some(Err(err)) => push(ViolationClass::ComponentMismatch, &e.id, err.to_string()),
            Some(Ok(rows)) => {
                let actual: BTreeSet<BTreeSet<u64>> = e
                    .graph
                    .components()
                    .iter()
                    .map(|c| c.iter().filter_map(|v| v.prime()).collect())
                    .collect();
                let expected: BTreeSet<BTreeSet<u64>> = rows.iter().cloned().collect();
                if actual != expected {
                    push(
                        ViolationClass::ComponentMismatch,
                        &e.id,
                        format!(
                            "components {} differ from table row {}",
                            families::render_partition(&actual.into_iter().collect::<Vec<_>>()),
                            families::render_partition(&rows)
                        ),
                    );
                }
            }
        }
    }

    fn check_fact(
        &self,
        f: &FactRecord,
        push: &mut impl FnMut(ViolationClass, &dyn fmt::Display, String),
    ) {
        if f.citation.trim().is_empty() {
            push(
                ViolationClass::MissingCitation,
                &f.subject,
                "fact without citation".into(),
            );
        }
        let overlap = match &f.kind {
            FactKind::ModuleExists {
                avoiding, fixing, ..
            } => avoiding & fixing,
            FactKind::NoModuleAvoiding {
                avoiding,
                while_fixing,
                ..
            } => avoiding & while_fixing,
            _ => BTreeSet::new(),
        };
        if !overlap.is_empty() {
            push(
                ViolationClass::FixAvoidOverlap,
                &f.subject,
                format!("{} both fix and avoid", render(overlap)),
            );
        }
        if let Subject::Group(id) = f.subject {
            if let Ok(order) = families::order_in(self, id) {
                let out = families::out_group(id)
                    .ok()
                    .flatten()
                    .map(|(f, _)| f)
                    .unwrap_or_else(Factorization::one);
                let pi: BTreeSet<u64> = order.mul(&out).primes().map(|p| p as u64).collect();
                let outside: BTreeSet<u64> = f.kind.primes().difference(&pi).copied().collect();
                if !outside.is_empty() {
                    push(
                        ViolationClass::FactPrimeOutsideOrder,
                        &f.subject,
                        format!("{} do not divide |Aut(S)|", render(outside)),
                    );
                }
            }
        }
    }

    fn check_recognisability(
        &self,
        push: &mut impl FnMut(ViolationClass, &dyn fmt::Display, String),
    ) {
        let mut rows = BTreeMap::new();
        for r in &self.recognisability {
            if rows.insert(r.group, *r).is_some() {
                push(
                    ViolationClass::Recognisability,
                    &r.group,
                    "duplicate row".into(),
                );
            }
        }
        for s in Sporadic::ALL {
            let Some(r) = rows.get(&s) else {
                push(ViolationClass::Recognisability, &s, "missing row".into());
                continue;
            };
            let target = RECOGNISABLE_BY_TYPE.contains(&s);
            let unlabelled = r.unlabelled == UnlabelledStatus::Recognisable;
            if unlabelled && r.labelled != LabelledStatus::Recognisable {
                push(
                    ViolationClass::Recognisability,
                    &s,
                    format!(
                        "recognisable by isomorphism type but labelled status is {}",
                        r.labelled
                    ),
                );
            }
            if unlabelled != target {
                push(
                    ViolationClass::Recognisability,
                    &s,
                    format!(
                        "unlabelled status {} contradicts the classification",
                        r.unlabelled
                    ),
                );
            }
            let witnesses = self.witnesses_for(s);
            if !unlabelled && witnesses.is_empty() {
                push(
                    ViolationClass::Recognisability,
                    &s,
                    "unrecognisable without a witness".into(),
                );
            }
            if unlabelled && !witnesses.is_empty() {
                push(
                    ViolationClass::Recognisability,
                    &s,
                    "recognisable but a witness is listed".into(),
                );
            }
            if witnesses.iter().any(|w| w.labelled_equality)
                && r.labelled != LabelledStatus::Unrecognisable
            {
                push(
                    ViolationClass::Recognisability,
                    &s,
                    format!("a witness has the same labelled prime graph, so labelled status {} is impossible", r.labelled),
                );
            }
        }
    }

    fn check_witness(
        &self,
        w: &WitnessSpec,
        push: &mut impl FnMut(ViolationClass, &dyn fmt::Display, String),
    ) {
        let subject = format!("witness {} from {}", w.target, w.base);
        if w.citation.trim().is_empty() {
            push(
                ViolationClass::MissingCitation,
                &subject,
                "witness without citation".into(),
            );
        }
        for step in &w.steps {
            if step.citation().trim().is_empty() {
                push(
                    ViolationClass::MissingCitation,
                    &subject,
                    "extension step without citation".into(),
                );
            }
            if let ExtensionStep::Affine {
                fixing, avoiding, ..
            } = step
            {
                let overlap: Vec<_> = fixing.intersection(avoiding).collect();
                if !overlap.is_empty() {
                    push(
                        ViolationClass::FixAvoidOverlap,
                        &subject,
                        format!("{} both fix and avoid", render(overlap)),
                    );
                }
            }
        }
        if w.steps.is_empty() && w.labelled_equality && w.base != GroupId::Sporadic(w.target) {
            push(
                ViolationClass::Witness,
                &subject,
                "a literature witness must be based on the target itself".into(),
            );
        }
        if let Err(e) = crate::extensions::verify_witness_in(self, w) {
            push(ViolationClass::Witness, &subject, e.to_string());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sporadic(s: Sporadic) -> GroupId {
        GroupId::Sporadic(s)
    }

    fn classes(c: &Catalog) -> BTreeSet<ViolationClass> {
        c.validate().into_iter().map(|v| v.class).collect()
    }

    #[test]
    fn golden_round_trip() {
        let c = Catalog::builtin();
        assert_eq!(c.to_json(), BUILTIN_JSON);
        assert!(BUILTIN_JSON.ends_with("}\n"));
    }

    #[test]
    fn builtin_is_valid() {
        let v = Catalog::builtin().validate();
        assert!(
            v.is_empty(),
            "{}",
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\n")
        );
    }

    #[test]
    fn j4_entry() {
        let g = Catalog::builtin().sporadic_graph(Sporadic::J4).unwrap();
        assert_eq!(g.vertex_count(), 10);
        let expected = PrimeGraph::from_primes(
            &[2, 3, 5, 7, 11, 23, 29, 31, 37, 43],
            &[
                (2, 3),
                (2, 5),
                (2, 7),
                (2, 11),
                (3, 5),
                (3, 7),
                (3, 11),
                (5, 7),
            ],
        )
        .unwrap();
        assert_eq!(*g, expected);
    }

    #[test]
    fn ru_entry() {
        let g = Catalog::builtin().sporadic_graph(Sporadic::Ru).unwrap();
        let expected = PrimeGraph::from_primes(
            &[2, 3, 5, 7, 13, 29],
            &[(2, 3), (2, 5), (2, 7), (2, 13), (3, 5)],
        )
        .unwrap();
        assert_eq!(*g, expected);
    }

    #[test]
    fn unknown_entry() {
        assert!(matches!(
            Catalog::builtin().entry(GroupId::Psl2(7)),
            Err(Error::NotFound(_))
        ));
    }

    #[test]
    fn fact_queries() {
        let c = Catalog::builtin();
        let ru = c.facts_for(sporadic(Sporadic::Ru), Some(FactKindTag::ModuleExists));
        assert_eq!(ru.len(), 1);
        match &ru[0].kind {
            FactKind::ModuleExists {
                avoiding,
                characteristic,
                module,
                ..
            } => {
                assert_eq!(*avoiding, BTreeSet::from([29]));
                assert_eq!(*characteristic, Characteristic::Prime(2));
                assert_eq!(module, "F2^28");
            }
            other => panic!("{other:?}"),
        }
        let e6 = c.facts_for(GroupId::TwoE6_2, Some(FactKindTag::ForcedFix));
        assert!(e6.iter().any(|f| f.kind
            == FactKind::ForcedFix {
                characteristic: Characteristic::Coprime,
                primes: BTreeSet::from([13, 17, 19])
            }));
        let sz = c.facts_for(GroupId::TwoB2(5), Some(FactKindTag::ForcedFixAll));
        assert_eq!(sz.len(), 1);
        assert_eq!(sz[0].subject, Subject::Slice(FamilySlice::TwoB2));
        assert_eq!(c.facts_for_slice(FamilySlice::TwoB2, None).len(), 1);
        assert!(c.facts.iter().all(|f| !f.citation.is_empty()));
    }

    #[test]
    fn status_strings() {
        for s in [
            "recognisable",
            "2-recognisable",
            "3-recognisable",
            "unrecognisable",
        ] {
            assert_eq!(s.parse::<LabelledStatus>().unwrap().to_string(), s);
        }
        assert!("1-recognisable".parse::<LabelledStatus>().is_err());
        assert!("x".parse::<UnlabelledStatus>().is_err());
        for s in ["coprime", "any", "7"] {
            assert_eq!(s.parse::<Characteristic>().unwrap().to_string(), s);
        }
        assert!("r1".parse::<Characteristic>().is_err());
    }

    #[test]
    fn eight_recognisable() {
        let c = Catalog::builtin();
        let yes: BTreeSet<Sporadic> = c
            .recognisability
            .iter()
            .filter(|r| r.unlabelled == UnlabelledStatus::Recognisable)
            .map(|r| r.group)
            .collect();
        assert_eq!(yes, RECOGNISABLE_BY_TYPE.into_iter().collect());
    }

    #[test]
    fn fault_vertex_outside_order() {
        let mut c = Catalog::builtin().clone();
        let e = c
            .entries
            .iter_mut()
            .find(|e| e.id == sporadic(Sporadic::M11))
            .unwrap();
        e.graph = e.graph.with_vertex(Vertex::Prime(13)).unwrap();
        assert!(classes(&c).contains(&ViolationClass::VertexNotInOrder));
    }

    #[test]
    fn fault_ru_labelled_recognisable() {
        let mut c = Catalog::builtin().clone();
        let r = c
            .recognisability
            .iter_mut()
            .find(|r| r.group == Sporadic::Ru)
            .unwrap();
        r.labelled = LabelledStatus::Recognisable;
        let v = c.validate();
        assert_eq!(v.len(), 1, "{v:?}");
        assert_eq!(v[0].class, ViolationClass::Recognisability);
        assert_eq!(v[0].subject, "Ru");
    }

    #[test]
    fn fault_classes() {
        let base = Catalog::builtin();

        let mut c = base.clone();
        c.entries.retain(|e| e.id != sporadic(Sporadic::Th));
        assert_eq!(classes(&c), BTreeSet::from([ViolationClass::MissingEntry]));

        let mut c = base.clone();
        c.entries[0].citations.clear();
        assert_eq!(
            classes(&c),
            BTreeSet::from([ViolationClass::MissingCitation])
        );

        let mut c = base.clone();
        let e = c
            .entries
            .iter_mut()
            .find(|e| e.id == sporadic(Sporadic::HS))
            .unwrap();
        e.graph = e
            .graph
            .with_edge(Vertex::Prime(5), Vertex::Prime(7))
            .unwrap();
        assert!(classes(&c).contains(&ViolationClass::ComponentMismatch));

        let mut c = base.clone();
        let e = c
            .entries
            .iter_mut()
            .find(|e| e.id == sporadic(Sporadic::He))
            .unwrap();
        e.out_order = Factorization::one();
        assert_eq!(
            classes(&c),
            BTreeSet::from([ViolationClass::OutOrderMismatch])
        );

        let mut c = base.clone();
        let e = c
            .entries
            .iter_mut()
            .find(|e| e.id == GroupId::TwoE6_2)
            .unwrap();
        e.order = e.order.mul(&Factorization::from_factors([(2, 1)]).unwrap());
        assert!(classes(&c).contains(&ViolationClass::OrderMismatch));

        let mut c = base.clone();
        c.facts.push(FactRecord {
            citation: "test".into(),
            kind: FactKind::ModuleExists {
                avoiding: BTreeSet::from([7]),
                characteristic: Characteristic::Prime(2),
                fixing: BTreeSet::from([7]),
                module: "V".into(),
            },
            subject: Subject::Group(sporadic(Sporadic::M22)),
        });
        assert_eq!(
            classes(&c),
            BTreeSet::from([ViolationClass::FixAvoidOverlap])
        );

        let mut c = base.clone();
        c.facts.push(FactRecord {
            citation: "test".into(),
            kind: FactKind::ForcedFix {
                characteristic: Characteristic::Coprime,
                primes: BTreeSet::from([13]),
            },
            subject: Subject::Group(sporadic(Sporadic::M22)),
        });
        assert_eq!(
            classes(&c),
            BTreeSet::from([ViolationClass::FactPrimeOutsideOrder])
        );

        let mut c = base.clone();
        c.witnesses.retain(|w| w.target != Sporadic::HN);
        assert_eq!(
            classes(&c),
            BTreeSet::from([ViolationClass::Recognisability])
        );

        let mut c = base.clone();
        let w = c
            .witnesses
            .iter_mut()
            .find(|w| w.target == Sporadic::Fi22)
            .unwrap();
        w.base = sporadic(Sporadic::M23);
        assert_eq!(classes(&c), BTreeSet::from([ViolationClass::Witness]));
    }

    #[test]
    fn structural_errors_fail_parsing() {
        assert!(Catalog::from_json("{}").is_err());
        let bad = BUILTIN_JSON.replacen("\"sporadic:M11\"", "\"sporadic:M99\"", 1);
        assert!(Catalog::from_json(&bad).is_err());
    }

    #[test]
    fn parse_serialize_idempotent() {
        let c = Catalog::builtin();
        let again = Catalog::from_json(&c.to_json()).unwrap();
        assert_eq!(*c, again);
    }
}
