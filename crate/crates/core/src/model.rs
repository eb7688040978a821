//! Ovopub classification, validation and extraction.
//!
//! A named graph is a valid ovopub when it satisfies the full rule catalog:
//! graph-name consistency, a single kind type, the mandatory provenance
//! trio (creator, timestamp, rights), and the kind-specific payload shape.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::term::{GraphName, Iri, Quad, Term, Triple};
use crate::vocab;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OvopubKind {
    Assertion,
    Record,
    Collection,
}

impl OvopubKind {
    pub fn class_iri(&self) -> Iri {
        match self {
            OvopubKind::Assertion => vocab::sio::assertion_ovopub(),
            OvopubKind::Record => vocab::sio::record_ovopub(),
            OvopubKind::Collection => vocab::sio::collection_ovopub(),
        }
    }

    fn from_class(iri: &Iri) -> Option<Self> {
        if *iri == vocab::sio::assertion_ovopub() {
            Some(OvopubKind::Assertion)
        } else if *iri == vocab::sio::record_ovopub() {
            Some(OvopubKind::Record)
        } else if *iri == vocab::sio::collection_ovopub() {
            Some(OvopubKind::Collection)
        } else {
            None
        }
    }
}

/// An ovopub creator: a linked-data IRI or a plain name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Creator {
    Agent(Iri),
    Name(String),
}

impl Creator {
    pub fn to_term(&self) -> Term {
        match self {
            Creator::Agent(iri) => Term::Iri(iri.clone()),
            Creator::Name(name) => Term::Literal(crate::term::Literal::string(name.clone())),
        }
    }
}

/// Text with an optional BCP-47 language tag, for labels and descriptions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LangText {
    pub text: String,
    pub language: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub creators: Vec<Creator>,
    pub date: String,
    pub rights: Iri,
    pub label: Option<LangText>,
    pub identifier: Option<String>,
    pub description: Option<LangText>,
}

impl Provenance {
    pub fn new(creators: Vec<Creator>, date: impl Into<String>, rights: Iri) -> Self {
        Provenance {
            creators,
            date: date.into(),
            rights,
            label: None,
            identifier: None,
            description: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssertionPayload {
    pub triple: Triple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordPayload {
    /// Skolem statement node paired with the statement it reifies.
    pub statements: Vec<(Iri, Triple)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollectionPayload {
    pub members: Vec<Iri>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Assertion(AssertionPayload),
    Record(RecordPayload),
    Collection(CollectionPayload),
}

/// A fully parsed ovopub: one named graph plus its interpreted content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OvopubGraph {
    pub iri: Iri,
    pub kind: OvopubKind,
    pub quads: Vec<Quad>,
    pub payload: Payload,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RuleCode {
    MissingType,
    MultipleTypes,
    UnknownType,
    MissingCreator,
    MissingDate,
    MultipleDate,
    BadDateLexical,
    MissingRights,
    RightsNotIri,
    AssertionArity,
    AssertionRawTripleMissing,
    RecordEmpty,
    RecordNotConnected,
    RecordMemberNotReified,
    CollectionEmpty,
    CollectionForeignTriple,
    GraphNameMismatch,
    DefaultGraphStatement,
    BlankNodePresent,
}

impl RuleCode {
    pub const ALL: [RuleCode; 19] = [
        RuleCode::MissingType,
        RuleCode::MultipleTypes,
        RuleCode::UnknownType,
        RuleCode::MissingCreator,
        RuleCode::MissingDate,
        RuleCode::MultipleDate,
        RuleCode::BadDateLexical,
        RuleCode::MissingRights,
        RuleCode::RightsNotIri,
        RuleCode::AssertionArity,
        RuleCode::AssertionRawTripleMissing,
        RuleCode::RecordEmpty,
        RuleCode::RecordNotConnected,
        RuleCode::RecordMemberNotReified,
        RuleCode::CollectionEmpty,
        RuleCode::CollectionForeignTriple,
        RuleCode::GraphNameMismatch,
        RuleCode::DefaultGraphStatement,
        RuleCode::BlankNodePresent,
    ];
}

impl fmt::Display for RuleCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: RuleCode,
    pub message: String,
    pub quad: Option<Quad>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub subject: Iri,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn codes(&self) -> BTreeSet<RuleCode> {
        self.violations.iter().map(|v| v.code).collect()
    }

    /// Line-oriented text form: `CODE<TAB>graph-iri<TAB>message`, one line
    /// per violation.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.violations {
            out.push_str(&format!("{}\t{}\t{}\n", v.code, self.subject.as_str(), v.message));
        }
        out
    }

    /// Structured form for machine consumption: one object per violation.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.violations
                .iter()
                .map(|v| {
                    serde_json::json!({
                        "code": v.code,
                        "graph": self.subject.as_str(),
                        "message": v.message,
                        "quad": v.quad.as_ref().map(crate::nquads::quad_to_line),
                    })
                })
                .collect(),
        )
    }
}

/// Number of connected components of the undirected term-graph induced by
/// the triples. Literals are vertices like any other term.
pub fn connected_components(triples: &[Triple]) -> usize {
    let mut vertices: Vec<Term> = Vec::new();
    let mut index: HashMap<Term, usize> = HashMap::new();
    let vertex = |t: Term, vertices: &mut Vec<Term>, index: &mut HashMap<Term, usize>| {
        *index.entry(t.clone()).or_insert_with(|| {
            vertices.push(t);
            vertices.len() - 1
        })
    };
    let mut adj: Vec<Vec<usize>> = Vec::new();
    for triple in triples {
        let s = vertex(Term::Iri(triple.subject.clone()), &mut vertices, &mut index);
        let o = vertex(triple.object.clone(), &mut vertices, &mut index);
        adj.resize(vertices.len(), Vec::new());
        adj[s].push(o);
        adj[o].push(s);
    }
    let mut seen = vec![false; vertices.len()];
    let mut components = 0;
    for start in 0..vertices.len() {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            for &next in &adj[v] {
                if !seen[next] {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    components
}

/// Determines the ovopub kind from the unique `rdf:type` triple naming the
/// graph itself, or reports why no kind can be assigned.
pub fn classify(quads: &[Quad], graph: &Iri) -> Result<OvopubKind, ValidationReport> {
    let mut violations = Vec::new();
    let kind = classify_inner(quads, graph, &mut violations);
    match kind {
        Some(kind) if violations.is_empty() => Ok(kind),
        _ => Err(ValidationReport {
            subject: graph.clone(),
            violations,
        }),
    }
}

fn classify_inner(quads: &[Quad], graph: &Iri, violations: &mut Vec<Violation>) -> Option<OvopubKind> {
    let type_quads: Vec<&Quad> = quads
        .iter()
        .filter(|q| q.subject == *graph && q.predicate == vocab::rdf::type_())
        .collect();
    match type_quads.as_slice() {
        [] => {
            violations.push(Violation {
                code: RuleCode::MissingType,
                message: "no rdf:type triple names the graph".into(),
                quad: None,
            });
            None
        }
        [single] => match single.object.as_iri().and_then(OvopubKind::from_class) {
            Some(kind) => Some(kind),
            None => {
                violations.push(Violation {
                    code: RuleCode::UnknownType,
                    message: "rdf:type object is not an ovopub class".into(),
                    quad: Some((*single).clone()),
                });
                None
            }
        },
        many => {
            violations.push(Violation {
                code: RuleCode::MultipleTypes,
                message: format!("{} rdf:type triples name the graph", many.len()),
                quad: Some(many[0].clone()),
            });
            None
        }
    }
}

const DATE_ERROR: &str = "dc:date must be an xsd:dateTime literal in ISO 8601 form";

fn date_lexical_ok(lexical: &str) -> bool {
    // YYYY-MM-DDThh:mm:ss with optional .fraction and optional zone
    let bytes = lexical.as_bytes();
    if bytes.len() < 19 {
        return false;
    }
    let digits = |range: std::ops::Range<usize>| bytes[range].iter().all(u8::is_ascii_digit);
    let fixed = digits(0..4)
        && bytes[4] == b'-'
        && digits(5..7)
        && bytes[7] == b'-'
        && digits(8..10)
        && bytes[10] == b'T'
        && digits(11..13)
        && bytes[13] == b':'
        && digits(14..16)
        && bytes[16] == b':'
        && digits(17..19);
    if !fixed {
        return false;
    }
    let mut rest = &lexical[19..];
    if let Some(stripped) = rest.strip_prefix('.') {
        let frac_len = stripped.bytes().take_while(u8::is_ascii_digit).count();
        if frac_len == 0 {
            return false;
        }
        rest = &stripped[frac_len..];
    }
    match rest {
        "" | "Z" => true,
        zone => {
            let b = zone.as_bytes();
            b.len() == 6
                && (b[0] == b'+' || b[0] == b'-')
                && b[1].is_ascii_digit()
                && b[2].is_ascii_digit()
                && b[3] == b':'
                && b[4].is_ascii_digit()
                && b[5].is_ascii_digit()
        }
    }
}

fn is_blankish(iri: &Iri) -> bool {
    iri.as_str().starts_with("_:")
}

struct Validator<'a> {
    graph: &'a Iri,
    quads: &'a [Quad],
    violations: Vec<Violation>,
}

impl<'a> Validator<'a> {
    fn push(&mut self, code: RuleCode, message: impl Into<String>, quad: Option<&Quad>) {
        self.violations.push(Violation {
            code,
            message: message.into(),
            quad: quad.cloned(),
        });
    }

    fn objects_of(&self, subject: &Iri, predicate: &Iri) -> Vec<&'a Quad> {
        self.quads
            .iter()
            .filter(|q| q.subject == *subject && q.predicate == *predicate)
            .collect()
    }

    fn graph_name_checks(&mut self) {
        for quad in self.quads {
            match &quad.graph {
                GraphName::Default => self.push(
                    RuleCode::DefaultGraphStatement,
                    "statement is not in a named graph",
                    Some(quad),
                ),
                GraphName::Named(name) if name != self.graph => self.push(
                    RuleCode::GraphNameMismatch,
                    format!("quad graph <{}> differs from ovopub <{}>", name.as_str(), self.graph.as_str()),
                    Some(quad),
                ),
                GraphName::Named(_) => {}
            }
        }
    }

    fn blank_node_checks(&mut self) {
        for quad in self.quads {
            let mut terms: Vec<&Iri> = vec![&quad.subject, &quad.predicate];
            if let Some(iri) = quad.object.as_iri() {
                terms.push(iri);
            }
            if let Some(iri) = quad.graph.as_iri() {
                terms.push(iri);
            }
            if terms.into_iter().any(is_blankish) {
                self.push(
                    RuleCode::BlankNodePresent,
                    "blank node label present; ovopubs require skolem IRIs",
                    Some(quad),
                );
            }
        }
    }

    fn provenance_checks(&mut self) {
        if self.objects_of(self.graph, &vocab::dc::creator()).is_empty() {
            self.push(RuleCode::MissingCreator, "at least one dc:creator is required", None);
        }
        let dates = self.objects_of(self.graph, &vocab::dc::date());
        match dates.as_slice() {
            [] => self.push(RuleCode::MissingDate, "exactly one dc:date is required", None),
            [single] => {
                let ok = match &single.object {
                    Term::Literal(lit) => {
                        lit.datatype() == &vocab::xsd::date_time() && date_lexical_ok(lit.lexical())
                    }
                    Term::Iri(_) => false,
                };
                if !ok {
                    let quad = (*single).clone();
                    self.push(RuleCode::BadDateLexical, DATE_ERROR, Some(&quad));
                }
            }
            many => {
                let quad = many[1].clone();
                self.push(
                    RuleCode::MultipleDate,
                    format!("{} dc:date quads, expected exactly one", many.len()),
                    Some(&quad),
                );
            }
        }
        let rights = self.objects_of(self.graph, &vocab::dc::rights());
        match rights.as_slice() {
            [] => self.push(RuleCode::MissingRights, "exactly one dc:rights is required", None),
            [single] => {
                if single.object.as_iri().is_none() {
                    let quad = (*single).clone();
                    self.push(
                        RuleCode::RightsNotIri,
                        "dc:rights must point to a license IRI, not a literal",
                        Some(&quad),
                    );
                }
            }
            many => {
                let quad = many[1].clone();
                self.push(
                    RuleCode::MissingRights,
                    format!("{} dc:rights quads, expected exactly one", many.len()),
                    Some(&quad),
                );
            }
        }
    }

    fn assertion_checks(&mut self) {
        let subjects = self.objects_of(self.graph, &vocab::rdf::subject());
        let predicates = self.objects_of(self.graph, &vocab::rdf::predicate());
        let objects = self.objects_of(self.graph, &vocab::rdf::object());
        if subjects.len() != 1 || predicates.len() != 1 || objects.len() != 1 {
            self.push(
                RuleCode::AssertionArity,
                format!(
                    "expected exactly one reified triple, found {} rdf:subject / {} rdf:predicate / {} rdf:object",
                    subjects.len(),
                    predicates.len(),
                    objects.len()
                ),
                None,
            );
            return;
        }
        let (Some(s), Some(p)) = (subjects[0].object.as_iri(), predicates[0].object.as_iri())
        else {
            self.push(
                RuleCode::AssertionArity,
                "reified subject and predicate must be IRIs",
                None,
            );
            return;
        };
        let o = objects[0].object.clone();
        let raw_present = self
            .quads
            .iter()
            .any(|q| q.subject == *s && q.predicate == *p && q.object == o);
        if !raw_present {
            self.push(
                RuleCode::AssertionRawTripleMissing,
                "reified triple is not present as a raw statement in the graph",
                None,
            );
        }
    }

    fn record_checks(&mut self) {
        let members = self.objects_of(self.graph, &vocab::rdfs::member());
        if members.is_empty() {
            self.push(RuleCode::RecordEmpty, "record has no rdfs:member statements", None);
            return;
        }
        let mut reified: Vec<Triple> = Vec::new();
        let mut member_quads: Vec<Quad> = Vec::new();
        for m in &members {
            member_quads.push((*m).clone());
        }
        for member in member_quads {
            let Some(node) = member.object.as_iri().cloned() else {
                self.push(
                    RuleCode::RecordMemberNotReified,
                    "rdfs:member object must be a statement node IRI",
                    Some(&member),
                );
                continue;
            };
            match self.reified_triple(&node) {
                Ok(triple) => {
                    let raw_present = self.quads.iter().any(|q| {
                        q.subject == triple.subject
                            && q.predicate == triple.predicate
                            && q.object == triple.object
                    });
                    if !raw_present {
                        self.push(
                            RuleCode::RecordMemberNotReified,
                            format!("statement node <{}> lacks its raw triple", node.as_str()),
                            Some(&member),
                        );
                    }
                    reified.push(triple);
                }
                Err(message) => {
                    self.push(RuleCode::RecordMemberNotReified, message, Some(&member));
                }
            }
        }
        if !reified.is_empty() {
            let components = connected_components(&reified);
            if components != 1 {
                self.push(
                    RuleCode::RecordNotConnected,
                    format!("payload statements form {components} connected components, expected 1"),
                    None,
                );
            }
        }
    }

    fn reified_triple(&self, node: &Iri) -> Result<Triple, String> {
        let subjects = self.objects_of(node, &vocab::rdf::subject());
        let predicates = self.objects_of(node, &vocab::rdf::predicate());
        let objects = self.objects_of(node, &vocab::rdf::object());
        if subjects.len() != 1 || predicates.len() != 1 || objects.len() != 1 {
            return Err(format!(
                "statement node <{}> has {} rdf:subject / {} rdf:predicate / {} rdf:object, expected one each",
                node.as_str(),
                subjects.len(),
                predicates.len(),
                objects.len()
            ));
        }
        let (Some(s), Some(p)) = (subjects[0].object.as_iri(), predicates[0].object.as_iri())
        else {
            return Err(format!(
                "statement node <{}> reifies a non-IRI subject or predicate",
                node.as_str()
            ));
        };
        Ok(Triple::new(s.clone(), p.clone(), objects[0].object.clone()))
    }

    fn collection_checks(&mut self) {
        let members = self.objects_of(self.graph, &vocab::rdfs::member());
        if members.is_empty() {
            self.push(RuleCode::CollectionEmpty, "collection has no members", None);
        }
        let provenance_predicates = [
            vocab::dc::creator(),
            vocab::dc::date(),
            vocab::dc::rights(),
            vocab::dc::identifier(),
            vocab::dc::description(),
            vocab::rdfs::label(),
        ];
        let foreign: Vec<Quad> = self
            .quads
            .iter()
            .filter(|q| {
                let about_graph = q.subject == *self.graph;
                let is_type = about_graph && q.predicate == vocab::rdf::type_();
                let is_member = about_graph
                    && q.predicate == vocab::rdfs::member()
                    && q.object.as_iri().is_some();
                let is_prov = about_graph && provenance_predicates.contains(&q.predicate);
                !(is_type || is_member || is_prov)
            })
            .cloned()
            .collect();
        for quad in foreign {
            self.push(
                RuleCode::CollectionForeignTriple,
                "collections may only contain typing, membership and provenance statements",
                Some(&quad),
            );
        }
    }
}

/// Runs the full rule catalog against one named graph. All violations are
/// accumulated; an empty report means the graph is a conformant ovopub.
pub fn validate(quads: &[Quad], graph: &Iri) -> ValidationReport {
    let mut v = Validator {
        graph,
        quads,
        violations: Vec::new(),
    };
    v.graph_name_checks();
    let kind = classify_inner(quads, graph, &mut v.violations);
    v.provenance_checks();
    match kind {
        Some(OvopubKind::Assertion) => v.assertion_checks(),
        Some(OvopubKind::Record) => v.record_checks(),
        Some(OvopubKind::Collection) => v.collection_checks(),
        None => {}
    }
    v.blank_node_checks();
    ValidationReport {
        subject: graph.clone(),
        violations: v.violations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("graph <{0}> is not a valid ovopub")]
pub struct ExtractError(pub Iri, pub ValidationReport);

/// Parses a validated graph into its structured form. Fails with the
/// validation report when the graph does not conform.
pub fn extract(quads: &[Quad], graph: &Iri) -> Result<OvopubGraph, ExtractError> {
    let report = validate(quads, graph);
    if !report.is_valid() {
        return Err(ExtractError(graph.clone(), report));
    }
    let kind = classify(quads, graph).expect("validated graph has a kind");
    let provenance = extract_provenance(quads, graph);
    let payload = match kind {
        OvopubKind::Assertion => {
            let s = object_iri(quads, graph, &vocab::rdf::subject());
            let p = object_iri(quads, graph, &vocab::rdf::predicate());
            let o = single_object(quads, graph, &vocab::rdf::object());
            Payload::Assertion(AssertionPayload {
                triple: Triple::new(s, p, o),
            })
        }
        OvopubKind::Record => {
            let mut statements: Vec<(Iri, Triple)> = Vec::new();
            for quad in quads
                .iter()
                .filter(|q| q.subject == *graph && q.predicate == vocab::rdfs::member())
            {
                let node = quad.object.as_iri().expect("validated member node").clone();
                let s = object_iri(quads, &node, &vocab::rdf::subject());
                let p = object_iri(quads, &node, &vocab::rdf::predicate());
                let o = single_object(quads, &node, &vocab::rdf::object());
                statements.push((node, Triple::new(s, p, o)));
            }
            statements.sort();
            Payload::Record(RecordPayload { statements })
        }
        OvopubKind::Collection => {
            let members: BTreeSet<Iri> = quads
                .iter()
                .filter(|q| q.subject == *graph && q.predicate == vocab::rdfs::member())
                .filter_map(|q| q.object.as_iri().cloned())
                .collect();
            Payload::Collection(CollectionPayload {
                members: members.into_iter().collect(),
            })
        }
    };
    Ok(OvopubGraph {
        iri: graph.clone(),
        kind,
        quads: quads.to_vec(),
        payload,
        provenance,
    })
}

fn single_object(quads: &[Quad], subject: &Iri, predicate: &Iri) -> Term {
    quads
        .iter()
        .find(|q| q.subject == *subject && q.predicate == *predicate)
        .expect("validated cardinality")
        .object
        .clone()
}

fn object_iri(quads: &[Quad], subject: &Iri, predicate: &Iri) -> Iri {
    single_object(quads, subject, predicate)
        .as_iri()
        .expect("validated IRI object")
        .clone()
}

fn extract_provenance(quads: &[Quad], graph: &Iri) -> Provenance {
    let mut creators: Vec<Creator> = quads
        .iter()
        .filter(|q| q.subject == *graph && q.predicate == vocab::dc::creator())
        .map(|q| match &q.object {
            Term::Iri(iri) => Creator::Agent(iri.clone()),
            Term::Literal(lit) => Creator::Name(lit.lexical().to_string()),
        })
        .collect();
    creators.sort();
    creators.dedup();

    let date = match single_object(quads, graph, &vocab::dc::date()) {
        Term::Literal(lit) => lit.lexical().to_string(),
        Term::Iri(_) => unreachable!("validated date literal"),
    };
    let rights = object_iri(quads, graph, &vocab::dc::rights());

    let lang_text = |predicate: Iri| -> Option<LangText> {
        let mut found: BTreeMap<Option<String>, String> = BTreeMap::new();
        for q in quads
            .iter()
            .filter(|q| q.subject == *graph && q.predicate == predicate)
        {
            if let Term::Literal(lit) = &q.object {
                found
                    .entry(lit.language().map(str::to_string))
                    .or_insert_with(|| lit.lexical().to_string());
            }
        }
        found.into_iter().next().map(|(language, text)| LangText { text, language })
    };

    let identifier = quads
        .iter()
        .filter(|q| q.subject == *graph && q.predicate == vocab::dc::identifier())
        .find_map(|q| match &q.object {
            Term::Literal(lit) => Some(lit.lexical().to_string()),
            Term::Iri(_) => None,
        });

    Provenance {
        creators,
        date,
        rights,
        label: lang_text(vocab::rdfs::label()),
        identifier,
        description: lang_text(vocab::dc::description()),
    }
}
