//! Ovopubs: self-contained RDF named graphs carrying statements plus
//! minimal provenance (creator, timestamp, rights).
//!
//! This crate provides the full model: a strict N-Quads parser and
//! deterministic serializer, ovopub classification and validation,
//! builders for the assertion/record/collection kinds and the chaining and
//! aggregation patterns, canonical SHA-256 hashing for integrity checking
//! and cardinal grouping, and an indexed quad store with membership
//! closure and graph-scoped pattern matching.

pub use serde_json;

pub mod builder;
pub mod exemplar;
pub mod integrity;
pub mod model;
pub mod nquads;
pub mod store;
pub mod term;
pub mod vocab;

pub use builder::{
    AggregationSpec, BuildError, BuildWarning, Built, ChainSpec, IriPolicy, aggregate,
    build_assertion, build_collection, build_record, chain,
};
pub use integrity::{
    CardinalKey, Digest, canonicalize, canonicalize_quads, cardinal_key, emit_integrity_ovopub,
    hash_ovopub, hash_quads, verify,
};
pub use model::{
    Creator, OvopubGraph, OvopubKind, Payload, Provenance, RuleCode, ValidationReport, Violation,
    classify, connected_components, extract, validate,
};
pub use nquads::{ParseError, parse_nquads, serialize_nquads};
pub use store::{
    Binding, CardinalGroups, Direction, Pattern, PatternTerm, Scope, Store, bgp_query,
    find_cardinal_groups, match_pattern, membership_closure, transitive_reach,
};
pub use term::{GraphName, Iri, Literal, Quad, Term, Triple, compare_terms};
