//! The declarative build manifest: a line-oriented `key: value` document
//! describing one ovopub to construct.
//!
//! ```text
//! kind: assertion
//! policy: content-addressed <http://ovopub.example/pub>
//! creator: <http://ovopub.example/agent/alice>
//! date: 2013-06-21T00:00:00Z
//! rights: <http://creativecommons.org/licenses/by/3.0/>
//! label: "interaction"@en
//! triple: <http://a> <http://b> <http://c> .
//! ```
//!
//! `triple:` lines (one for assertions, one or more for records) and
//! `member:` lines (collections) carry their values in N-Quads syntax.

use ovo_core::model::{Creator, LangText, Provenance};
use ovo_core::{Iri, IriPolicy, Term, Triple, parse_nquads};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("manifest line {line}: {reason}")]
pub struct ManifestError {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifestKind {
    Assertion,
    Record,
    Collection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolicySpec {
    Explicit(Iri),
    ContentAddressed(Iri),
    /// Needs entropy from the CLI `--seed` before it becomes an `IriPolicy`.
    Random(Iri),
}

impl PolicySpec {
    pub fn into_policy(self, entropy: Option<u128>) -> Result<IriPolicy, String> {
        match self {
            PolicySpec::Explicit(iri) => Ok(IriPolicy::Explicit(iri)),
            PolicySpec::ContentAddressed(base) => Ok(IriPolicy::ContentAddressed { base }),
            PolicySpec::Random(base) => match entropy {
                Some(entropy) => Ok(IriPolicy::Random { base, entropy }),
                None => Err("random policy requires --seed".to_string()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub kind: ManifestKind,
    pub policy: PolicySpec,
    pub provenance: Provenance,
    pub triples: Vec<Triple>,
    pub members: Vec<Iri>,
}

struct Builder {
    kind: Option<ManifestKind>,
    policy: Option<PolicySpec>,
    creators: Vec<Creator>,
    date: Option<String>,
    rights: Option<Iri>,
    label: Option<LangText>,
    identifier: Option<String>,
    description: Option<LangText>,
    triples: Vec<Triple>,
    members: Vec<Iri>,
}

fn err(line: usize, reason: impl Into<String>) -> ManifestError {
    ManifestError {
        line,
        reason: reason.into(),
    }
}

/// Parses one term given in N-Quads syntax by wrapping it into a synthetic
/// statement and reusing the strict parser.
fn parse_term(value: &str, line: usize) -> Result<Term, ManifestError> {
    let synthetic = format!("<http://manifest.invalid/s> <http://manifest.invalid/p> {value} .");
    let quads = parse_nquads(&synthetic).map_err(|e| err(line, e.reason))?;
    Ok(quads.into_iter().next().expect("one quad").object)
}

fn parse_iri_value(value: &str, line: usize) -> Result<Iri, ManifestError> {
    match parse_term(value, line)? {
        Term::Iri(iri) => Ok(iri),
        Term::Literal(_) => Err(err(line, format!("expected an IRI, got a literal: {value}"))),
    }
}

fn parse_triple_value(value: &str, line: usize) -> Result<Triple, ManifestError> {
    let quads = parse_nquads(value).map_err(|e| err(line, e.reason))?;
    match quads.as_slice() {
        [quad] if quad.graph == ovo_core::GraphName::Default => Ok(quad.triple()),
        [_] => Err(err(line, "triple must not carry a graph term")),
        _ => Err(err(line, "expected exactly one triple")),
    }
}

fn parse_lang_text(value: &str, line: usize) -> Result<LangText, ManifestError> {
    match parse_term(value, line)? {
        Term::Literal(lit) => Ok(LangText {
            text: lit.lexical().to_string(),
            language: lit.language().map(str::to_string),
        }),
        Term::Iri(_) => Err(err(line, "expected a quoted literal")),
    }
}

pub fn parse_manifest(input: &str) -> Result<Manifest, ManifestError> {
    let mut b = Builder {
        kind: None,
        policy: None,
        creators: Vec::new(),
        date: None,
        rights: None,
        label: None,
        identifier: None,
        description: None,
        triples: Vec::new(),
        members: Vec::new(),
    };
    let mut last_line = 0;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((key, value)) = trimmed.split_once(':') else {
            return Err(err(line, format!("expected 'key: value', got {trimmed:?}")));
        };
        let value = value.trim();
        match key.trim() {
            "kind" => {
                let kind = match value {
                    "assertion" => ManifestKind::Assertion,
                    "record" => ManifestKind::Record,
                    "collection" => ManifestKind::Collection,
                    other => return Err(err(line, format!("unknown kind {other:?}"))),
                };
                if b.kind.replace(kind).is_some() {
                    return Err(err(line, "duplicate 'kind'"));
                }
            }
            "policy" => {
                let (mode, rest) = value
                    .split_once(' ')
                    .ok_or_else(|| err(line, "policy needs a mode and an IRI"))?;
                let iri = parse_iri_value(rest.trim(), line)?;
                let policy = match mode {
                    "explicit" => PolicySpec::Explicit(iri),
                    "content-addressed" => PolicySpec::ContentAddressed(iri),
                    "random" => PolicySpec::Random(iri),
                    other => return Err(err(line, format!("unknown policy {other:?}"))),
                };
                if b.policy.replace(policy).is_some() {
                    return Err(err(line, "duplicate 'policy'"));
                }
            }
            "creator" => {
                let creator = match parse_term(value, line)? {
                    Term::Iri(iri) => Creator::Agent(iri),
                    Term::Literal(lit) => Creator::Name(lit.lexical().to_string()),
                };
                b.creators.push(creator);
            }
            "date" => {
                if b.date.replace(value.to_string()).is_some() {
                    return Err(err(line, "duplicate 'date'"));
                }
            }
            "rights" => {
                let iri = parse_iri_value(value, line)?;
                if b.rights.replace(iri).is_some() {
                    return Err(err(line, "duplicate 'rights'"));
                }
            }
            "label" => b.label = Some(parse_lang_text(value, line)?),
            "identifier" => {
                b.identifier = Some(match parse_term(value, line)? {
                    Term::Literal(lit) => lit.lexical().to_string(),
                    Term::Iri(_) => return Err(err(line, "identifier must be a quoted literal")),
                })
            }
            "description" => b.description = Some(parse_lang_text(value, line)?),
            "triple" => b.triples.push(parse_triple_value(value, line)?),
            "member" => b.members.push(parse_iri_value(value, line)?),
            other => return Err(err(line, format!("unknown key {other:?}"))),
        }
    }

    let kind = b.kind.ok_or_else(|| err(last_line, "missing 'kind'"))?;
    let policy = b.policy.ok_or_else(|| err(last_line, "missing 'policy'"))?;
    if b.creators.is_empty() {
        return Err(err(last_line, "at least one 'creator' is required"));
    }
    let date = b.date.ok_or_else(|| err(last_line, "missing 'date'"))?;
    let rights = b.rights.ok_or_else(|| err(last_line, "missing 'rights'"))?;

    match kind {
        ManifestKind::Assertion if b.triples.len() != 1 => {
            return Err(err(last_line, "assertions need exactly one 'triple'"));
        }
        ManifestKind::Record if b.triples.is_empty() => {
            return Err(err(last_line, "records need at least one 'triple'"));
        }
        ManifestKind::Collection if b.members.is_empty() => {
            return Err(err(last_line, "collections need at least one 'member'"));
        }
        _ => {}
    }
    if kind == ManifestKind::Collection && !b.triples.is_empty() {
        return Err(err(last_line, "collections take 'member' lines, not 'triple'"));
    }
    if kind != ManifestKind::Collection && !b.members.is_empty() {
        return Err(err(last_line, "'member' lines are for collections"));
    }

    let mut provenance = Provenance::new(b.creators, date, rights);
    provenance.label = b.label;
    provenance.identifier = b.identifier;
    provenance.description = b.description;

    Ok(Manifest {
        kind,
        policy,
        provenance,
        triples: b.triples,
        members: b.members,
    })
}
