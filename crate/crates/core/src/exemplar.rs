//! The protein-interaction exemplar corpus: six ovopubs describing an
//! iRefIndex-style entry for the interaction "BioGRID:464511".
//!
//! Only the BioGRID identifier is real data; every other IRI is a clearly
//! synthetic placeholder in this tool's example namespace.

use crate::builder::{ChainSpec, IriPolicy, build_assertion, build_collection, build_record, chain};
use crate::model::{Creator, OvopubGraph, Provenance};
use crate::term::{Iri, Triple};

const NS: &str = "http://ovopub.example/ns/";
const PUB: &str = "http://ovopub.example/pub/exemplar/";

fn ns(path: &str) -> Iri {
    Iri::new_unchecked(format!("{NS}{path}"))
}

fn pub_iri(name: &str) -> IriPolicy {
    IriPolicy::Explicit(Iri::new_unchecked(format!("{PUB}{name}")))
}

fn base_provenance() -> Provenance {
    Provenance::new(
        vec![Creator::Agent(Iri::new_unchecked(
            "http://ovopub.example/agent/exemplar-generator",
        ))],
        "2013-06-21T00:00:00Z",
        Iri::new_unchecked("http://creativecommons.org/licenses/by/3.0/"),
    )
}

/// Generates the six exemplar ovopubs, keyed `b` through `g`:
///
/// * `b` — assertion: the protein-protein interaction itself
/// * `c` — record: the BioGRID entry (participants, method, publication),
///   carrying identifier "BioGRID:464511"
/// * `d` — record: the interaction's membership in an interaction group
/// * `e` — record: the proteins' membership in a similarity group
/// * `f` — assertion: chain giving `b` its source `c`
/// * `g` — collection over `b`, `c`, `d` and `f` (`e` left out so scoped
///   retrieval has something to exclude)
pub fn generate() -> Vec<(String, OvopubGraph)> {
    let protein_a = ns("protein/A");
    let protein_b = ns("protein/B");
    let interaction = ns("interaction/BG464511");
    let interacts_with = ns("vocab/interacts-with");
    let has_participant = ns("vocab/has-participant");
    let identified_by = ns("vocab/identified-by");
    let described_in = ns("vocab/described-in");
    let in_interaction_group = ns("vocab/in-interaction-group");
    let in_similarity_group = ns("vocab/in-similarity-group");
    let has_source = ns("vocab/has-source");

    let prov = base_provenance();

    let b = build_assertion(
        Triple::new(protein_a.clone(), interacts_with, protein_b.clone()),
        &prov,
        &pub_iri("b"),
    )
    .expect("exemplar assertion is well-formed")
    .graph;

    let mut record_prov = prov.clone();
    record_prov.identifier = Some("BioGRID:464511".to_string());
    let c = build_record(
        &[
            Triple::new(interaction.clone(), has_participant.clone(), protein_a.clone()),
            Triple::new(interaction.clone(), has_participant, protein_b.clone()),
            Triple::new(interaction.clone(), identified_by, ns("method/M1")),
            Triple::new(interaction.clone(), described_in, ns("publication/PUB1")),
        ],
        &record_prov,
        &pub_iri("c"),
    )
    .expect("exemplar record is connected")
    .graph;

    let d = build_record(
        &[Triple::new(interaction, in_interaction_group, ns("group/interaction-1"))],
        &prov,
        &pub_iri("d"),
    )
    .expect("single statement record")
    .graph;

    let e = build_record(
        &[
            Triple::new(protein_a, in_similarity_group.clone(), ns("group/similarity-1")),
            Triple::new(protein_b, in_similarity_group, ns("group/similarity-1")),
        ],
        &prov,
        &pub_iri("e"),
    )
    .expect("similarity record is connected through the group")
    .graph;

    let f = chain(
        &ChainSpec {
            left: b.iri.clone(),
            predicate: has_source,
            right: c.iri.clone(),
        },
        &prov,
        &pub_iri("f"),
    )
    .expect("source chain is well-formed")
    .graph;

    let g = build_collection(
        &[b.iri.clone(), c.iri.clone(), d.iri.clone(), f.iri.clone()],
        &prov,
        &pub_iri("g"),
    )
    .expect("collection members are distinct")
    .graph;

    vec![
        ("b".into(), b),
        ("c".into(), c),
        ("d".into(), d),
        ("e".into(), e),
        ("f".into(), f),
        ("g".into(), g),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{OvopubKind, validate};

    #[test]
    fn all_six_validate_with_expected_kinds() {
        let corpus = generate();
        assert_eq!(corpus.len(), 6);
        let kinds: Vec<OvopubKind> = corpus.iter().map(|(_, g)| g.kind).collect();
        assert_eq!(
            kinds,
            vec![
                OvopubKind::Assertion,
                OvopubKind::Record,
                OvopubKind::Record,
                OvopubKind::Record,
                OvopubKind::Assertion,
                OvopubKind::Collection,
            ]
        );
        for (name, graph) in &corpus {
            let report = validate(&graph.quads, &graph.iri);
            assert!(report.is_valid(), "{name}: {}", report.to_text());
        }
    }

    #[test]
    fn record_c_carries_the_biogrid_identifier() {
        let corpus = generate();
        let (_, c) = &corpus[1];
        assert_eq!(c.provenance.identifier.as_deref(), Some("BioGRID:464511"));
    }
}
