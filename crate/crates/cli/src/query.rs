//! The line-oriented query language: optional `FROM <iri>` header lines
//! naming closure roots, then one quad pattern per line. Terms use N-Quads
//! syntax, variables are `?name`, the wildcard is `*`, and a trailing `.`
//! is optional. Three-position lines leave the graph slot as a wildcard.

use ovo_core::{Iri, Pattern, PatternTerm, Term, parse_nquads};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("query line {line}: {reason}")]
pub struct QueryError {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QueryFile {
    pub roots: Vec<Iri>,
    pub patterns: Vec<Pattern>,
    /// Variable names in order of first appearance, for the TSV header.
    pub variables: Vec<String>,
}

fn err(line: usize, reason: impl Into<String>) -> QueryError {
    QueryError {
        line,
        reason: reason.into(),
    }
}

fn tokenize(line: &str, line_no: usize) -> Result<Vec<String>, QueryError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        match chars[i] {
            c if c.is_whitespace() => i += 1,
            '<' => {
                let start = i;
                while i < chars.len() && chars[i] != '>' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(err(line_no, "unterminated IRI"));
                }
                i += 1;
                tokens.push(chars[start..i].iter().collect());
            }
            '"' => {
                let start = i;
                i += 1;
                while i < chars.len() {
                    match chars[i] {
                        '\\' => i += 2,
                        '"' => break,
                        _ => i += 1,
                    }
                }
                if i >= chars.len() {
                    return Err(err(line_no, "unterminated literal"));
                }
                i += 1;
                // language tag or datatype suffix
                if i < chars.len() && chars[i] == '@' {
                    while i < chars.len() && !chars[i].is_whitespace() {
                        i += 1;
                    }
                } else if i + 1 < chars.len() && chars[i] == '^' && chars[i + 1] == '^' {
                    i += 2;
                    while i < chars.len() && chars[i] != '>' {
                        i += 1;
                    }
                    if i == chars.len() {
                        return Err(err(line_no, "unterminated datatype IRI"));
                    }
                    i += 1;
                }
                tokens.push(chars[start..i].iter().collect());
            }
            '?' => {
                let start = i;
                while i < chars.len() && !chars[i].is_whitespace() {
                    i += 1;
                }
                tokens.push(chars[start..i].iter().collect());
            }
            '*' => {
                tokens.push("*".to_string());
                i += 1;
            }
            '.' => {
                i += 1;
                let rest: String = chars[i..].iter().collect();
                if !rest.trim().is_empty() {
                    return Err(err(line_no, "content after terminating '.'"));
                }
            }
            c => return Err(err(line_no, format!("unexpected character '{c}'"))),
        }
    }
    Ok(tokens)
}

fn parse_pattern_term(token: &str, line: usize) -> Result<PatternTerm, QueryError> {
    if token == "*" {
        return Ok(PatternTerm::Wildcard);
    }
    if let Some(name) = token.strip_prefix('?') {
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(err(line, format!("malformed variable {token:?}")));
        }
        return Ok(PatternTerm::Var(name.to_string()));
    }
    let synthetic = format!("<http://query.invalid/s> <http://query.invalid/p> {token} .");
    let quads = parse_nquads(&synthetic).map_err(|e| err(line, e.reason))?;
    Ok(PatternTerm::Term(quads.into_iter().next().expect("one quad").object))
}

pub fn parse_query(input: &str) -> Result<QueryFile, QueryError> {
    let mut query = QueryFile::default();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("FROM ") {
            let rest = rest.trim();
            let value = rest
                .strip_prefix('<')
                .and_then(|s| s.strip_suffix('>'))
                .ok_or_else(|| err(line_no, "FROM expects <iri>"))?;
            query
                .roots
                .push(Iri::new(value).map_err(|e| err(line_no, e.to_string()))?);
            continue;
        }
        let tokens = tokenize(trimmed, line_no)?;
        let mut terms = Vec::with_capacity(4);
        for token in &tokens {
            terms.push(parse_pattern_term(token, line_no)?);
        }
        let graph = match terms.len() {
            4 => terms.pop().expect("len checked"),
            3 => PatternTerm::Wildcard,
            n => return Err(err(line_no, format!("expected 3 or 4 positions, found {n}"))),
        };
        let mut it = terms.into_iter();
        let pattern = Pattern {
            subject: it.next().expect("len checked"),
            predicate: it.next().expect("len checked"),
            object: it.next().expect("len checked"),
            graph,
        };
        for slot in [&pattern.subject, &pattern.predicate, &pattern.object, &pattern.graph] {
            if let PatternTerm::Var(name) = slot {
                if !query.variables.contains(name) {
                    query.variables.push(name.clone());
                }
            }
        }
        query.patterns.push(pattern);
    }
    Ok(query)
}

/// Renders a term for TSV output: bare IRI text, or the N-Quads form for
/// literals.
pub fn render_binding_term(term: &Term) -> String {
    match term {
        Term::Iri(iri) => iri.as_str().to_string(),
        Term::Literal(_) => ovo_core::nquads::term_to_string(term),
    }
}
