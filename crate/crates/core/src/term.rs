//! RDF term model: IRIs, literals, triples and quads.
//!
//! Blank nodes are deliberately not representable; publishers mint skolem
//! IRIs instead, which keeps canonicalization and hashing deterministic.

use std::cmp::Ordering;
use std::fmt;

use crate::vocab;

/// An absolute IRI.
///
/// Validation is structural only: non-empty, no whitespace or angle
/// brackets, and a leading scheme followed by `:`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(String);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IriError {
    #[error("IRI is empty")]
    Empty,
    #[error("IRI contains whitespace or angle brackets: {0}")]
    ForbiddenChar(String),
    #[error("IRI has no scheme: {0}")]
    MissingScheme(String),
}

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, IriError> {
        let value = value.into();
        if value.is_empty() {
            return Err(IriError::Empty);
        }
        if value
            .chars()
            .any(|c| c.is_whitespace() || c == '<' || c == '>' || c.is_control())
        {
            return Err(IriError::ForbiddenChar(value));
        }
        if !has_scheme(&value) {
            return Err(IriError::MissingScheme(value));
        }
        Ok(Iri(value))
    }

    /// Builds an `Iri` without any structural checks.
    ///
    /// Intended for trusted vocabulary constants and for tests that need to
    /// materialize ill-formed identifiers the validator must flag.
    pub fn new_unchecked(value: impl Into<String>) -> Self {
        Iri(value.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Appends a suffix, e.g. a path segment or fragment.
    pub fn join(&self, suffix: &str) -> Iri {
        Iri(format!("{}{}", self.0, suffix))
    }
}

fn has_scheme(value: &str) -> bool {
    let Some(colon) = value.find(':') else {
        return false;
    };
    let scheme = &value[..colon];
    let mut chars = scheme.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '+' || c == '-' || c == '.')
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

/// An RDF literal: lexical form plus datatype, with a language tag iff the
/// datatype is `rdf:langString`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    lexical: String,
    datatype: Iri,
    language: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiteralError {
    #[error("language tag present but datatype is not rdf:langString")]
    LanguageWithoutLangString,
    #[error("rdf:langString literal without a language tag")]
    LangStringWithoutLanguage,
}

impl Literal {
    /// A plain string literal (`xsd:string`).
    pub fn string(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: vocab::xsd::string(),
            language: None,
        }
    }

    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Result<Self, LiteralError> {
        let datatype_is_lang = datatype == vocab::rdf::lang_string();
        if datatype_is_lang {
            return Err(LiteralError::LangStringWithoutLanguage);
        }
        Ok(Literal {
            lexical: lexical.into(),
            datatype,
            language: None,
        })
    }

    pub fn lang(lexical: impl Into<String>, tag: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: vocab::rdf::lang_string(),
            language: Some(tag.into()),
        }
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &Iri {
        &self.datatype
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }
}

/// Either an IRI or a literal. Blank nodes have no representation here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Iri(Iri),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            Term::Literal(_) => None,
        }
    }

    pub fn iri(value: &str) -> Term {
        Term::Iri(Iri::new_unchecked(value))
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<Literal> for Term {
    fn from(lit: Literal) -> Self {
        Term::Literal(lit)
    }
}

/// Total order over terms: IRIs before literals, code-point order of the
/// canonical serialization within each class.
pub fn compare_terms(a: &Term, b: &Term) -> Ordering {
    match (a, b) {
        (Term::Iri(x), Term::Iri(y)) => x.as_str().cmp(y.as_str()),
        (Term::Iri(_), Term::Literal(_)) => Ordering::Less,
        (Term::Literal(_), Term::Iri(_)) => Ordering::Greater,
        (Term::Literal(x), Term::Literal(y)) => {
            crate::nquads::literal_to_string(x).cmp(&crate::nquads::literal_to_string(y))
        }
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_terms(self, other)
    }
}

/// A statement without a graph component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub subject: Iri,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: Iri, predicate: Iri, object: impl Into<Term>) -> Self {
        Triple {
            subject,
            predicate,
            object: object.into(),
        }
    }
}

/// Graph component of a quad: a named graph or the default graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphName {
    Named(Iri),
    Default,
}

impl GraphName {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            GraphName::Named(iri) => Some(iri),
            GraphName::Default => None,
        }
    }
}

impl From<Iri> for GraphName {
    fn from(iri: Iri) -> Self {
        GraphName::Named(iri)
    }
}

/// An RDF quad. Subject and predicate are always IRIs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quad {
    pub subject: Iri,
    pub predicate: Iri,
    pub object: Term,
    pub graph: GraphName,
}

impl Quad {
    pub fn new(
        subject: Iri,
        predicate: Iri,
        object: impl Into<Term>,
        graph: impl Into<GraphName>,
    ) -> Self {
        Quad {
            subject,
            predicate,
            object: object.into(),
            graph: graph.into(),
        }
    }

    pub fn triple(&self) -> Triple {
        Triple {
            subject: self.subject.clone(),
            predicate: self.predicate.clone(),
            object: self.object.clone(),
        }
    }
}

impl Triple {
    pub fn in_graph(&self, graph: &Iri) -> Quad {
        Quad {
            subject: self.subject.clone(),
            predicate: self.predicate.clone(),
            object: self.object.clone(),
            graph: GraphName::Named(graph.clone()),
        }
    }
}
