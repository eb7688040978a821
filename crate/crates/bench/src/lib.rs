//! Synthetic corpus generators shared by the benchmarks.

use ovo_core::{
    Creator, IriPolicy, Iri, OvopubGraph, Provenance, Quad, Triple, build_assertion,
    build_collection,
};

pub fn bench_provenance() -> Provenance {
    Provenance::new(
        vec![Creator::Agent(Iri::new_unchecked("http://ovopub.example/agent/bench"))],
        "2013-06-21T00:00:00Z",
        Iri::new_unchecked("http://creativecommons.org/licenses/by/3.0/"),
    )
}

/// `count` assertion ovopubs with `distinct` distinct payload triples.
pub fn synthetic_assertions(count: usize, distinct: usize) -> Vec<OvopubGraph> {
    let prov = bench_provenance();
    (0..count)
        .map(|i| {
            let payload = i % distinct.max(1);
            build_assertion(
                Triple::new(
                    Iri::new_unchecked(format!("http://ovopub.example/ns/s{payload}")),
                    Iri::new_unchecked("http://ovopub.example/ns/p"),
                    Iri::new_unchecked(format!("http://ovopub.example/ns/o{payload}")),
                ),
                &prov,
                &IriPolicy::Explicit(Iri::new_unchecked(format!(
                    "http://ovopub.example/pub/bench/{i}"
                ))),
            )
            .expect("well-formed bench assertion")
            .graph
        })
        .collect()
}

/// A chain of nested collections, each containing the previous one, plus
/// the given leaf ovopubs at the bottom.
pub fn nested_collections(depth: usize, leaves: &[Iri]) -> Vec<OvopubGraph> {
    let prov = bench_provenance();
    let mut graphs = Vec::new();
    let mut members: Vec<Iri> = leaves.to_vec();
    for level in 0..depth {
        let built = build_collection(
            &members,
            &prov,
            &IriPolicy::Explicit(Iri::new_unchecked(format!(
                "http://ovopub.example/pub/bench/coll{level}"
            ))),
        )
        .expect("non-empty collection");
        members = vec![built.graph.iri.clone()];
        graphs.push(built.graph);
    }
    graphs
}

pub fn all_quads(graphs: &[OvopubGraph]) -> Vec<Quad> {
    graphs.iter().flat_map(|g| g.quads.clone()).collect()
}
