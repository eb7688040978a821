//! Strict N-Quads parsing and byte-deterministic serialization.
//!
//! The parser follows the W3C N-Quads grammar with two deviations: blank
//! node labels are rejected (this model skolemizes instead), and only
//! full-line `#` comments are recognized.

use crate::term::{GraphName, Iri, Literal, Quad, Term};
use crate::vocab;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at line {line}, column {column}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub reason: String,
}

/// Parses an N-Quads document. Triples (3 terms) land in the default graph.
pub fn parse_nquads(input: &str) -> Result<Vec<Quad>, ParseError> {
    let mut quads = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        quads.push(parse_line(line, line_no)?);
    }
    Ok(quads)
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ') | Some('\t')) {
            self.pos += 1;
        }
    }

    fn err(&self, reason: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.pos + 1,
            reason: reason.into(),
        }
    }
}

fn parse_line(line: &str, line_no: usize) -> Result<Quad, ParseError> {
    let mut cur = Cursor::new(line, line_no);
    let mut terms: Vec<Term> = Vec::new();
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => return Err(cur.err("unexpected end of line, expected '.'")),
            Some('.') => {
                cur.bump();
                cur.skip_ws();
                if cur.peek().is_some() {
                    return Err(cur.err("trailing content after '.'"));
                }
                break;
            }
            Some(_) => {
                if terms.len() == 4 {
                    return Err(cur.err("more than 4 terms on one line"));
                }
                terms.push(parse_term(&mut cur)?);
            }
        }
    }
    build_quad(terms, &cur)
}

fn build_quad(terms: Vec<Term>, cur: &Cursor) -> Result<Quad, ParseError> {
    if terms.len() < 3 {
        return Err(cur.err(format!("expected 3 or 4 terms, found {}", terms.len())));
    }
    let mut it = terms.into_iter();
    let subject = match it.next().unwrap() {
        Term::Iri(iri) => iri,
        Term::Literal(_) => return Err(cur.err("literal in subject position")),
    };
    let predicate = match it.next().unwrap() {
        Term::Iri(iri) => iri,
        Term::Literal(_) => return Err(cur.err("literal in predicate position")),
    };
    let object = it.next().unwrap();
    let graph = match it.next() {
        None => GraphName::Default,
        Some(Term::Iri(iri)) => GraphName::Named(iri),
        Some(Term::Literal(_)) => return Err(cur.err("literal in graph position")),
    };
    Ok(Quad {
        subject,
        predicate,
        object,
        graph,
    })
}

fn parse_term(cur: &mut Cursor) -> Result<Term, ParseError> {
    match cur.peek() {
        Some('<') => parse_iri(cur).map(Term::Iri),
        Some('"') => parse_literal(cur).map(Term::Literal),
        Some('_') => Err(cur.err("blank node in strict mode")),
        Some(c) => Err(cur.err(format!("unexpected character '{c}'"))),
        None => Err(cur.err("unexpected end of line")),
    }
}

fn parse_iri(cur: &mut Cursor) -> Result<Iri, ParseError> {
    debug_assert_eq!(cur.peek(), Some('<'));
    cur.bump();
    let mut value = String::new();
    loop {
        match cur.bump() {
            None => return Err(cur.err("unterminated IRI")),
            Some('>') => break,
            Some('\\') => value.push(parse_uchar(cur)?),
            Some(c) if c.is_whitespace() || c == '<' || c.is_control() => {
                return Err(cur.err(format!("forbidden character in IRI: {c:?}")));
            }
            Some(c) => value.push(c),
        }
    }
    Iri::new(value).map_err(|e| cur.err(e.to_string()))
}

fn parse_uchar(cur: &mut Cursor) -> Result<char, ParseError> {
    let width = match cur.bump() {
        Some('u') => 4,
        Some('U') => 8,
        other => return Err(cur.err(format!("invalid escape in IRI: {other:?}"))),
    };
    read_hex_escape(cur, width)
}

fn read_hex_escape(cur: &mut Cursor, width: usize) -> Result<char, ParseError> {
    let mut code = 0u32;
    for _ in 0..width {
        let c = cur
            .bump()
            .ok_or_else(|| cur.err("truncated \\u escape"))?;
        let digit = c
            .to_digit(16)
            .ok_or_else(|| cur.err(format!("bad hex digit '{c}' in escape")))?;
        code = code * 16 + digit;
    }
    char::from_u32(code).ok_or_else(|| cur.err(format!("escape U+{code:04X} is not a character")))
}

fn parse_literal(cur: &mut Cursor) -> Result<Literal, ParseError> {
    debug_assert_eq!(cur.peek(), Some('"'));
    cur.bump();
    let mut lexical = String::new();
    loop {
        match cur.bump() {
            None => return Err(cur.err("unterminated literal")),
            Some('"') => break,
            Some('\\') => lexical.push(parse_echar(cur)?),
            Some(c) => lexical.push(c),
        }
    }
    match cur.peek() {
        Some('@') => {
            cur.bump();
            let mut tag = String::new();
            while let Some(c) = cur.peek() {
                if c.is_ascii_alphanumeric() || c == '-' {
                    tag.push(c);
                    cur.bump();
                } else {
                    break;
                }
            }
            if tag.is_empty() || !tag.starts_with(|c: char| c.is_ascii_alphabetic()) {
                return Err(cur.err("malformed language tag"));
            }
            Ok(Literal::lang(lexical, tag))
        }
        Some('^') => {
            cur.bump();
            if cur.bump() != Some('^') {
                return Err(cur.err("expected '^^' before datatype IRI"));
            }
            if cur.peek() != Some('<') {
                return Err(cur.err("expected datatype IRI after '^^'"));
            }
            let datatype = parse_iri(cur)?;
            if datatype == vocab::rdf::lang_string() {
                return Err(cur.err("rdf:langString literal without a language tag"));
            }
            Ok(Literal::typed(lexical, datatype).expect("langString excluded above"))
        }
        _ => Ok(Literal::string(lexical)),
    }
}

fn parse_echar(cur: &mut Cursor) -> Result<char, ParseError> {
    match cur.bump() {
        Some('t') => Ok('\t'),
        Some('b') => Ok('\u{8}'),
        Some('n') => Ok('\n'),
        Some('r') => Ok('\r'),
        Some('f') => Ok('\u{c}'),
        Some('"') => Ok('"'),
        Some('\'') => Ok('\''),
        Some('\\') => Ok('\\'),
        Some('u') => read_hex_escape(cur, 4),
        Some('U') => read_hex_escape(cur, 8),
        other => Err(cur.err(format!("invalid string escape: {other:?}"))),
    }
}

/// Serializes quads, one N-Quads line each. With `sorted`, lines are in
/// code-point order. Output ends with a newline iff non-empty.
pub fn serialize_nquads(quads: &[Quad], sorted: bool) -> String {
    let mut lines: Vec<String> = quads.iter().map(quad_to_line).collect();
    if sorted {
        lines.sort();
    }
    let mut out = String::new();
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// One N-Quads line for a quad, without the trailing newline.
pub fn quad_to_line(quad: &Quad) -> String {
    let mut line = String::new();
    line.push_str(&format!("<{}>", quad.subject.as_str()));
    line.push(' ');
    line.push_str(&format!("<{}>", quad.predicate.as_str()));
    line.push(' ');
    line.push_str(&term_to_string(&quad.object));
    if let GraphName::Named(graph) = &quad.graph {
        line.push(' ');
        line.push_str(&format!("<{}>", graph.as_str()));
    }
    line.push_str(" .");
    line
}

pub fn term_to_string(term: &Term) -> String {
    match term {
        Term::Iri(iri) => format!("<{}>", iri.as_str()),
        Term::Literal(lit) => literal_to_string(lit),
    }
}

pub fn literal_to_string(lit: &Literal) -> String {
    let mut out = String::from("\"");
    out.push_str(&escape_string(lit.lexical()));
    out.push('"');
    if let Some(tag) = lit.language() {
        out.push('@');
        out.push_str(tag);
    } else if lit.datatype() != &vocab::xsd::string() {
        out.push_str("^^");
        out.push_str(&format!("<{}>", lit.datatype().as_str()));
    }
    out
}

fn escape_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if c.is_control() => out.push_str(&format!("\\u{:04X}", c as u32)),
            c => out.push(c),
        }
    }
    out
}
