//! Canonical serialization and SHA-256 hashing for integrity checking and
//! cardinal-assertion grouping.
//!
//! Two hashing scopes exist on purpose: the ovopub digest covers the whole
//! graph including provenance, while the cardinal key covers only the
//! payload triple line, so republished identical content groups together.

use sha2::{Digest as Sha2Digest, Sha256};

use crate::builder::{BuildError, Built, IriPolicy, build_assertion};
use crate::model::{OvopubGraph, OvopubKind, Payload, Provenance};
use crate::nquads::{quad_to_line, serialize_nquads};
use crate::term::{GraphName, Iri, Literal, Quad, Term, Triple};
use crate::vocab;

/// An algorithm-tagged hash value. SHA-256 is the only algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digest {
    value: [u8; 32],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed digest: {0}")]
pub struct DigestParseError(String);

impl Digest {
    pub fn of_bytes(bytes: &[u8]) -> Self {
        Digest {
            value: Sha256::digest(bytes).into(),
        }
    }

    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.value
    }

    /// Renders as `sha256:` followed by 64 lowercase hex characters.
    pub fn render(&self) -> String {
        format!("sha256:{}", hex::encode(self.value))
    }

    pub fn parse(text: &str) -> Result<Self, DigestParseError> {
        let hex_part = text
            .strip_prefix("sha256:")
            .ok_or_else(|| DigestParseError(text.to_string()))?;
        if hex_part.len() != 64 || hex_part.chars().any(|c| c.is_ascii_uppercase()) {
            return Err(DigestParseError(text.to_string()));
        }
        let bytes = hex::decode(hex_part).map_err(|_| DigestParseError(text.to_string()))?;
        Ok(Digest {
            value: bytes.try_into().expect("length checked"),
        })
    }
}

impl std::fmt::Display for Digest {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Digest over the canonical payload triple line of an assertion,
/// independent of the ovopub IRI and provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CardinalKey(pub Digest);

/// Canonical form of a quad set: sorted, escaped N-Quads lines joined and
/// terminated with LF.
pub fn canonicalize_quads(quads: &[Quad]) -> String {
    serialize_nquads(quads, true)
}

/// Canonical form of a whole ovopub.
pub fn canonicalize(graph: &OvopubGraph) -> String {
    canonicalize_quads(&graph.quads)
}

/// SHA-256 over the canonical UTF-8 bytes of a quad set.
pub fn hash_quads(quads: &[Quad]) -> Digest {
    Digest::of_bytes(canonicalize_quads(quads).as_bytes())
}

/// SHA-256 over the canonical form of the whole ovopub, provenance
/// included.
pub fn hash_ovopub(graph: &OvopubGraph) -> Digest {
    hash_quads(&graph.quads)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cardinal keys are defined for assertion ovopubs only, got {0:?}")]
pub struct NotAnAssertion(pub OvopubKind);

/// The single canonical default-graph line of an assertion's payload
/// triple, LF-terminated. This is what the cardinal key hashes.
pub fn cardinal_line(triple: &Triple) -> String {
    let quad = Quad {
        subject: triple.subject.clone(),
        predicate: triple.predicate.clone(),
        object: triple.object.clone(),
        graph: GraphName::Default,
    };
    format!("{}\n", quad_to_line(&quad))
}

/// Groups syntactically identical payload triples: the key is independent
/// of the ovopub IRI and all provenance.
pub fn cardinal_key(graph: &OvopubGraph) -> Result<CardinalKey, NotAnAssertion> {
    let Payload::Assertion(payload) = &graph.payload else {
        return Err(NotAnAssertion(graph.kind));
    };
    Ok(CardinalKey(Digest::of_bytes(
        cardinal_line(&payload.triple).as_bytes(),
    )))
}

/// Constant-time digest comparison against a freshly computed hash.
pub fn verify(graph: &OvopubGraph, expected: &Digest) -> bool {
    let actual = hash_ovopub(graph);
    let mut diff = 0u8;
    for (a, b) in actual.as_bytes().iter().zip(expected.as_bytes()) {
        diff |= a ^ b;
    }
    diff == 0
}

/// Publishes a digest as an external assertion ovopub:
/// `(target, has-digest, "sha256:...")`.
pub fn emit_integrity_ovopub(
    target: &Iri,
    digest: &Digest,
    prov: &Provenance,
    policy: &IriPolicy,
) -> Result<Built, BuildError> {
    build_assertion(
        Triple::new(
            target.clone(),
            vocab::ovo::has_digest(),
            Term::Literal(Literal::string(digest.render())),
        ),
        prov,
        policy,
    )
}

/// Sidecar file body: the rendered digest plus LF.
pub fn sidecar_text(digest: &Digest) -> String {
    format!("{}\n", digest.render())
}

/// Parses a sidecar file: one rendered digest line.
pub fn parse_sidecar(text: &str) -> Result<Digest, DigestParseError> {
    Digest::parse(text.trim_end_matches(['\n', '\r']))
}
