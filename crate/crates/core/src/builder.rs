//! Construction of conformant ovopubs: assertions, records, collections,
//! plus the chaining and aggregation patterns.
//!
//! Builders are pure: timestamps come from the caller's `Provenance` and
//! the random IRI policy takes caller-supplied entropy, so construction is
//! deterministic and testable.

use std::collections::BTreeSet;

use sha2::{Digest as _, Sha256};

use crate::model::{
    AssertionPayload, CollectionPayload, OvopubGraph, OvopubKind, Payload, Provenance,
    RecordPayload, connected_components,
};
use crate::nquads::quad_to_line;
use crate::term::{Iri, Literal, Quad, Term, Triple};
use crate::vocab;

/// How the ovopub IRI is minted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IriPolicy {
    /// Use the given IRI as-is.
    Explicit(Iri),
    /// `base + "/" + hex sha-256 of the canonical payload`. Equal payloads
    /// mint equal IRIs regardless of provenance.
    ContentAddressed { base: Iri },
    /// `base + "/" + 128-bit hex`. The entropy is caller-supplied so that
    /// seeded runs stay reproducible.
    Random { base: Iri, entropy: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("record payload is disconnected: {components} components")]
    Disconnected { components: usize },
    #[error("record requires at least one statement")]
    EmptyRecord,
    #[error("collection requires at least one member")]
    EmptyCollection,
    #[error("aggregation requires at least one source")]
    EmptySources,
    #[error("aggregation sources must be pairwise distinct")]
    DuplicateSources,
    #[error("provenance requires at least one creator")]
    NoCreator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildWarning {
    /// A chain links an ovopub to itself.
    SelfLink(Iri),
    /// Duplicate collection members were collapsed.
    DuplicateMembers { removed: usize },
}

/// A built ovopub plus any non-fatal warnings raised during construction.
#[derive(Debug, Clone)]
pub struct Built {
    pub graph: OvopubGraph,
    pub warnings: Vec<BuildWarning>,
}

/// The canonical payload text a content-addressed IRI hashes: the kind tag
/// followed by the sorted payload lines (triples in the default graph, or
/// member IRIs for collections).
fn payload_canonical_text(kind: OvopubKind, payload_lines: &[String]) -> String {
    let tag = match kind {
        OvopubKind::Assertion => "assertion",
        OvopubKind::Record => "record",
        OvopubKind::Collection => "collection",
    };
    let mut lines = payload_lines.to_vec();
    lines.sort();
    let mut out = format!("{tag}\n");
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn triple_line(triple: &Triple) -> String {
    let quad = Quad {
        subject: triple.subject.clone(),
        predicate: triple.predicate.clone(),
        object: triple.object.clone(),
        graph: crate::term::GraphName::Default,
    };
    quad_to_line(&quad)
}

fn mint_iri(policy: &IriPolicy, kind: OvopubKind, payload_lines: &[String]) -> Iri {
    match policy {
        IriPolicy::Explicit(iri) => iri.clone(),
        IriPolicy::ContentAddressed { base } => {
            let digest = Sha256::digest(payload_canonical_text(kind, payload_lines).as_bytes());
            base.join(&format!("/{}", hex::encode(digest)))
        }
        IriPolicy::Random { base, entropy } => base.join(&format!("/{entropy:032x}")),
    }
}

fn provenance_quads(graph: &Iri, prov: &Provenance) -> Vec<Quad> {
    let mut quads = Vec::new();
    for creator in &prov.creators {
        quads.push(Quad::new(
            graph.clone(),
            vocab::dc::creator(),
            creator.to_term(),
            graph.clone(),
        ));
    }
    quads.push(Quad::new(
        graph.clone(),
        vocab::dc::date(),
        Literal::typed(prov.date.clone(), vocab::xsd::date_time()).expect("dateTime datatype"),
        graph.clone(),
    ));
    quads.push(Quad::new(
        graph.clone(),
        vocab::dc::rights(),
        prov.rights.clone(),
        graph.clone(),
    ));
    let lang_literal = |text: &crate::model::LangText| match &text.language {
        Some(tag) => Literal::lang(text.text.clone(), tag.clone()),
        None => Literal::string(text.text.clone()),
    };
    if let Some(label) = &prov.label {
        quads.push(Quad::new(
            graph.clone(),
            vocab::rdfs::label(),
            lang_literal(label),
            graph.clone(),
        ));
    }
    if let Some(identifier) = &prov.identifier {
        quads.push(Quad::new(
            graph.clone(),
            vocab::dc::identifier(),
            Literal::string(identifier.clone()),
            graph.clone(),
        ));
    }
    if let Some(description) = &prov.description {
        quads.push(Quad::new(
            graph.clone(),
            vocab::dc::description(),
            lang_literal(description),
            graph.clone(),
        ));
    }
    quads
}

fn check_provenance(prov: &Provenance) -> Result<(), BuildError> {
    if prov.creators.is_empty() {
        return Err(BuildError::NoCreator);
    }
    Ok(())
}

/// Builds an assertion ovopub: the type quad, the reification of the
/// payload triple from the ovopub IRI, the raw triple, and provenance.
pub fn build_assertion(
    triple: Triple,
    prov: &Provenance,
    policy: &IriPolicy,
) -> Result<Built, BuildError> {
    check_provenance(prov)?;
    let payload_lines = vec![triple_line(&triple)];
    let graph = mint_iri(policy, OvopubKind::Assertion, &payload_lines);
    let mut quads = vec![
        Quad::new(graph.clone(), vocab::rdf::type_(), vocab::sio::assertion_ovopub(), graph.clone()),
        Quad::new(graph.clone(), vocab::rdf::subject(), triple.subject.clone(), graph.clone()),
        Quad::new(graph.clone(), vocab::rdf::predicate(), triple.predicate.clone(), graph.clone()),
        Quad::new(graph.clone(), vocab::rdf::object(), triple.object.clone(), graph.clone()),
        triple.in_graph(&graph),
    ];
    quads.extend(provenance_quads(&graph, prov));
    Ok(Built {
        graph: OvopubGraph {
            iri: graph.clone(),
            kind: OvopubKind::Assertion,
            quads,
            payload: Payload::Assertion(AssertionPayload { triple }),
            provenance: prov.clone(),
        },
        warnings: Vec::new(),
    })
}

/// Builds a record ovopub over a connected set of statements. Each
/// statement gets a skolem node `<ovopub>#st<i>` carrying its reification,
/// and the raw triple is included alongside.
pub fn build_record(
    triples: &[Triple],
    prov: &Provenance,
    policy: &IriPolicy,
) -> Result<Built, BuildError> {
    check_provenance(prov)?;
    if triples.is_empty() {
        return Err(BuildError::EmptyRecord);
    }
    let components = connected_components(triples);
    if components != 1 {
        return Err(BuildError::Disconnected { components });
    }
    let payload_lines: Vec<String> = triples.iter().map(triple_line).collect();
    let graph = mint_iri(policy, OvopubKind::Record, &payload_lines);
    let mut quads = vec![Quad::new(
        graph.clone(),
        vocab::rdf::type_(),
        vocab::sio::record_ovopub(),
        graph.clone(),
    )];
    let mut statements = Vec::with_capacity(triples.len());
    for (i, triple) in triples.iter().enumerate() {
        let node = graph.join(&format!("#st{}", i + 1));
        quads.push(Quad::new(graph.clone(), vocab::rdfs::member(), node.clone(), graph.clone()));
        quads.push(Quad::new(node.clone(), vocab::rdf::subject(), triple.subject.clone(), graph.clone()));
        quads.push(Quad::new(node.clone(), vocab::rdf::predicate(), triple.predicate.clone(), graph.clone()));
        quads.push(Quad::new(node.clone(), vocab::rdf::object(), triple.object.clone(), graph.clone()));
        quads.push(triple.in_graph(&graph));
        statements.push((node, triple.clone()));
    }
    quads.extend(provenance_quads(&graph, prov));
    statements.sort();
    Ok(Built {
        graph: OvopubGraph {
            iri: graph.clone(),
            kind: OvopubKind::Record,
            quads,
            payload: Payload::Record(RecordPayload { statements }),
            provenance: prov.clone(),
        },
        warnings: Vec::new(),
    })
}

/// Builds a collection ovopub linking each member with `rdfs:member`.
/// Duplicate members are collapsed with a warning.
pub fn build_collection(
    members: &[Iri],
    prov: &Provenance,
    policy: &IriPolicy,
) -> Result<Built, BuildError> {
    check_provenance(prov)?;
    if members.is_empty() {
        return Err(BuildError::EmptyCollection);
    }
    let distinct: BTreeSet<Iri> = members.iter().cloned().collect();
    let mut warnings = Vec::new();
    if distinct.len() < members.len() {
        warnings.push(BuildWarning::DuplicateMembers {
            removed: members.len() - distinct.len(),
        });
    }
    let payload_lines: Vec<String> = distinct.iter().map(|m| m.as_str().to_string()).collect();
    let graph = mint_iri(policy, OvopubKind::Collection, &payload_lines);
    let mut quads = vec![Quad::new(
        graph.clone(),
        vocab::rdf::type_(),
        vocab::sio::collection_ovopub(),
        graph.clone(),
    )];
    for member in &distinct {
        quads.push(Quad::new(graph.clone(), vocab::rdfs::member(), member.clone(), graph.clone()));
    }
    quads.extend(provenance_quads(&graph, prov));
    Ok(Built {
        graph: OvopubGraph {
            iri: graph.clone(),
            kind: OvopubKind::Collection,
            quads,
            payload: Payload::Collection(CollectionPayload {
                members: distinct.into_iter().collect(),
            }),
            provenance: prov.clone(),
        },
        warnings,
    })
}

/// Links two ovopubs through a fresh assertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpec {
    pub left: Iri,
    pub predicate: Iri,
    pub right: Iri,
}

/// Chains two ovopubs: a new assertion `(left, predicate, right)` carrying
/// its own provenance. The member graphs are untouched.
pub fn chain(spec: &ChainSpec, prov: &Provenance, policy: &IriPolicy) -> Result<Built, BuildError> {
    let mut built = build_assertion(
        Triple::new(spec.left.clone(), spec.predicate.clone(), Term::Iri(spec.right.clone())),
        prov,
        policy,
    )?;
    if spec.left == spec.right {
        built.warnings.push(BuildWarning::SelfLink(spec.left.clone()));
    }
    Ok(built)
}

/// An aggregation request: a canonical statement plus the source ovopubs
/// it summarizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregationSpec {
    pub canonical: Triple,
    pub sources: Vec<Iri>,
    /// Predicate linking the canonical assertion to each source. Defaults
    /// to the tool's `aggregates` relation.
    pub link_predicate: Option<Iri>,
}

/// Builds the aggregation pattern: an assertion for the canonical triple
/// and a record whose payload is the star of links from that assertion to
/// every source.
pub fn aggregate(
    spec: &AggregationSpec,
    prov: &Provenance,
    policy: &IriPolicy,
) -> Result<(Built, Built), BuildError> {
    if spec.sources.is_empty() {
        return Err(BuildError::EmptySources);
    }
    let distinct: BTreeSet<&Iri> = spec.sources.iter().collect();
    if distinct.len() < spec.sources.len() {
        return Err(BuildError::DuplicateSources);
    }
    let assertion = build_assertion(spec.canonical.clone(), prov, policy)?;
    // One policy mints two graphs here; derive a distinct identity for the
    // record so Explicit and Random policies cannot collide with the
    // assertion. Content addressing is already payload-distinct.
    let record_policy = match policy {
        IriPolicy::Explicit(iri) => IriPolicy::Explicit(iri.join("-sources")),
        IriPolicy::Random { base, entropy } => IriPolicy::Random {
            base: base.clone(),
            entropy: entropy.wrapping_add(1),
        },
        content_addressed => content_addressed.clone(),
    };
    let link = spec
        .link_predicate
        .clone()
        .unwrap_or_else(vocab::ovo::aggregates);
    let star: Vec<Triple> = spec
        .sources
        .iter()
        .map(|source| {
            Triple::new(assertion.graph.iri.clone(), link.clone(), Term::Iri(source.clone()))
        })
        .collect();
    let record = build_record(&star, prov, &record_policy)?;
    Ok((assertion, record))
}
