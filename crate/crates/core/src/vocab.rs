//! Vocabulary constants: SIO ovopub classes, RDF/RDFS, Dublin Core Terms,
//! XSD datatypes, and the tool's own namespace.

use crate::term::Iri;

macro_rules! iri_const {
    ($(#[$meta:meta])* $name:ident, $value:expr) => {
        $(#[$meta])*
        pub fn $name() -> Iri {
            Iri::new_unchecked($value)
        }
    };
}

pub mod sio {
    use super::*;

    pub const BASE: &str = "http://semanticscience.org/resource/";

    iri_const!(/// sio:ovopub
        ovopub, "http://semanticscience.org/resource/SIO_001300");
    iri_const!(/// sio:assertion-ovopub
        assertion_ovopub, "http://semanticscience.org/resource/SIO_001301");
    iri_const!(/// sio:record-ovopub
        record_ovopub, "http://semanticscience.org/resource/SIO_001302");
    iri_const!(/// sio:collection-ovopub
        collection_ovopub, "http://semanticscience.org/resource/SIO_001303");
    iri_const!(/// sio:is-transitively-related-to
        is_transitively_related_to, "http://semanticscience.org/resource/SIO_001247");
}

pub mod rdf {
    use super::*;

    iri_const!(type_, "http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
    iri_const!(subject, "http://www.w3.org/1999/02/22-rdf-syntax-ns#subject");
    iri_const!(predicate, "http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate");
    iri_const!(object, "http://www.w3.org/1999/02/22-rdf-syntax-ns#object");
    iri_const!(lang_string, "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString");
}

pub mod rdfs {
    use super::*;

    iri_const!(member, "http://www.w3.org/2000/01/rdf-schema#member");
    iri_const!(label, "http://www.w3.org/2000/01/rdf-schema#label");
}

/// Dublin Core Terms. The modern `dcterms` namespace binding is used for
/// the `dc:` prefix.
pub mod dc {
    use super::*;

    iri_const!(creator, "http://purl.org/dc/terms/creator");
    iri_const!(date, "http://purl.org/dc/terms/date");
    iri_const!(rights, "http://purl.org/dc/terms/rights");
    iri_const!(identifier, "http://purl.org/dc/terms/identifier");
    iri_const!(description, "http://purl.org/dc/terms/description");
}

pub mod xsd {
    use super::*;

    iri_const!(string, "http://www.w3.org/2001/XMLSchema#string");
    iri_const!(date_time, "http://www.w3.org/2001/XMLSchema#dateTime");
}

/// Relations minted in the tool's own namespace where the model needs a
/// predicate no standard vocabulary provides.
pub mod ovo {
    use super::*;

    pub const BASE: &str = "http://ovopub.example/vocab#";

    iri_const!(/// Default predicate linking an aggregating assertion to its sources.
        aggregates, "http://ovopub.example/vocab#aggregates");
    iri_const!(/// Predicate of integrity ovopubs: target has-digest "sha256:...".
        has_digest, "http://ovopub.example/vocab#has-digest");
}
