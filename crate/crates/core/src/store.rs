//! Immutable indexed quad store with membership/reification closure and
//! graph-scoped pattern matching.
//!
//! The closure follows exactly the four relations the model hard-wires as
//! sub-properties of the transitive relation: rdfs:member, rdf:subject,
//! rdf:predicate and rdf:object. Scope is computed eagerly, FROM-style,
//! before any matching.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::integrity::{CardinalKey, cardinal_key};
use crate::model::{OvopubKind, ValidationReport, classify, extract, validate};
use crate::term::{GraphName, Iri, Quad, Term};
use crate::vocab;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StoreError {
    #[error("default-graph statement cannot be stored: {0}")]
    DefaultGraphQuad(String),
}

/// An immutable quad store. Duplicate quads collapse; indexes cover graph,
/// (graph, subject), (graph, predicate) and (graph, object).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Store {
    quads: BTreeSet<Quad>,
    by_graph: BTreeMap<Iri, BTreeSet<Quad>>,
    by_graph_subject: BTreeMap<(Iri, Iri), BTreeSet<Quad>>,
    by_graph_predicate: BTreeMap<(Iri, Iri), BTreeSet<Quad>>,
    by_graph_object: BTreeMap<(Iri, Term), BTreeSet<Quad>>,
    kinds: BTreeMap<Iri, Option<OvopubKind>>,
}

impl Store {
    /// Builds a store from quads. Non-ovopub graphs may be loaded;
    /// validation is a separate concern. Default-graph quads are rejected.
    pub fn load(quads: impl IntoIterator<Item = Quad>) -> Result<Store, StoreError> {
        let mut store = Store::default();
        for quad in quads {
            let graph = match &quad.graph {
                GraphName::Default => {
                    return Err(StoreError::DefaultGraphQuad(crate::nquads::quad_to_line(&quad)));
                }
                GraphName::Named(iri) => iri.clone(),
            };
            store.by_graph.entry(graph.clone()).or_default().insert(quad.clone());
            store
                .by_graph_subject
                .entry((graph.clone(), quad.subject.clone()))
                .or_default()
                .insert(quad.clone());
            store
                .by_graph_predicate
                .entry((graph.clone(), quad.predicate.clone()))
                .or_default()
                .insert(quad.clone());
            store
                .by_graph_object
                .entry((graph.clone(), quad.object.clone()))
                .or_default()
                .insert(quad.clone());
            store.quads.insert(quad);
        }
        let graphs: Vec<Iri> = store.by_graph.keys().cloned().collect();
        for graph in graphs {
            let kind = classify(store.graph_quads(&graph).as_slice(), &graph).ok();
            store.kinds.insert(graph, kind);
        }
        Ok(store)
    }

    pub fn len(&self) -> usize {
        self.quads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quads.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Iri> {
        self.by_graph.keys()
    }

    pub fn contains_graph(&self, graph: &Iri) -> bool {
        self.by_graph.contains_key(graph)
    }

    pub fn kind_of(&self, graph: &Iri) -> Option<OvopubKind> {
        self.kinds.get(graph).copied().flatten()
    }

    pub fn quads(&self) -> impl Iterator<Item = &Quad> {
        self.quads.iter()
    }

    pub fn graph_quads(&self, graph: &Iri) -> Vec<Quad> {
        self.by_graph
            .get(graph)
            .map(|set| set.iter().cloned().collect())
            .unwrap_or_default()
    }

    /// Quads with the given subject, in any graph.
    fn quads_with_subject<'a>(&'a self, subject: &Iri) -> impl Iterator<Item = &'a Quad> {
        let subject = subject.clone();
        self.quads.iter().filter(move |q| q.subject == subject)
    }
}

/// The transitive reach of a set of roots: every resource reachable via
/// the closure relations, plus every reached IRI that names a graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Scope {
    pub graphs: BTreeSet<Iri>,
    pub resources: BTreeSet<Iri>,
}

impl Scope {
    pub fn contains_graph(&self, graph: &Iri) -> bool {
        self.graphs.contains(graph)
    }
}

fn closure_predicates() -> [Iri; 4] {
    [
        vocab::rdfs::member(),
        vocab::rdf::subject(),
        vocab::rdf::predicate(),
        vocab::rdf::object(),
    ]
}

/// Least fixed point of the four closure relations from the roots.
/// Follows edges asserted in any graph; cycles are handled by the visited
/// set. Unknown roots yield a scope containing only themselves.
pub fn membership_closure(store: &Store, roots: &BTreeSet<Iri>) -> Scope {
    let predicates = closure_predicates();
    let mut scope = Scope::default();
    let mut queue: VecDeque<Iri> = roots.iter().cloned().collect();
    for root in roots {
        scope.resources.insert(root.clone());
    }
    while let Some(current) = queue.pop_front() {
        if store.contains_graph(&current) {
            scope.graphs.insert(current.clone());
        }
        for quad in store.quads_with_subject(&current) {
            if !predicates.contains(&quad.predicate) {
                continue;
            }
            if let Some(next) = quad.object.as_iri() {
                if scope.resources.insert(next.clone()) {
                    queue.push_back(next.clone());
                }
            }
        }
    }
    scope
}

/// One position of a quad pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternTerm {
    Term(Term),
    Var(String),
    Wildcard,
}

impl PatternTerm {
    pub fn var(name: impl Into<String>) -> Self {
        PatternTerm::Var(name.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub subject: PatternTerm,
    pub predicate: PatternTerm,
    pub object: PatternTerm,
    pub graph: PatternTerm,
}

/// A solution mapping from variable names to terms.
pub type Binding = BTreeMap<String, Term>;

fn position_matches(pattern: &PatternTerm, term: &Term, binding: &mut Binding) -> bool {
    match pattern {
        PatternTerm::Wildcard => true,
        PatternTerm::Term(expected) => expected == term,
        PatternTerm::Var(name) => match binding.get(name) {
            Some(bound) => bound == term,
            None => {
                binding.insert(name.clone(), term.clone());
                true
            }
        },
    }
}

fn quad_matches(pattern: &Pattern, quad: &Quad, seed: &Binding) -> Option<Binding> {
    let graph_iri = quad.graph.as_iri().expect("store holds named graphs only");
    let mut binding = seed.clone();
    let positions: [(&PatternTerm, Term); 4] = [
        (&pattern.subject, Term::Iri(quad.subject.clone())),
        (&pattern.predicate, Term::Iri(quad.predicate.clone())),
        (&pattern.object, quad.object.clone()),
        (&pattern.graph, Term::Iri(graph_iri.clone())),
    ];
    for (slot, term) in positions {
        if !position_matches(slot, &term, &mut binding) {
            return None;
        }
    }
    Some(binding)
}

fn in_scope(quad: &Quad, scope: Option<&Scope>) -> bool {
    match scope {
        None => true,
        Some(scope) => quad
            .graph
            .as_iri()
            .is_some_and(|g| scope.contains_graph(g)),
    }
}

/// All bindings of one pattern over the (optionally scoped) store, in
/// canonical quad order.
pub fn match_pattern(store: &Store, pattern: &Pattern, scope: Option<&Scope>) -> Vec<Binding> {
    match_pattern_seeded(store, pattern, scope, &Binding::new())
}

fn match_pattern_seeded(
    store: &Store,
    pattern: &Pattern,
    scope: Option<&Scope>,
    seed: &Binding,
) -> Vec<Binding> {
    store
        .quads()
        .filter(|q| in_scope(q, scope))
        .filter_map(|q| quad_matches(pattern, q, seed))
        .collect()
}

/// Natural join of the patterns on shared variable names. The empty
/// pattern sequence yields a single empty binding.
pub fn bgp_query(store: &Store, patterns: &[Pattern], scope: Option<&Scope>) -> Vec<Binding> {
    let mut solutions: Vec<Binding> = vec![Binding::new()];
    for pattern in patterns {
        let mut next = Vec::new();
        for seed in &solutions {
            next.extend(match_pattern_seeded(store, pattern, scope, seed));
        }
        solutions = next;
        if solutions.is_empty() {
            break;
        }
    }
    solutions.sort();
    solutions.dedup();
    solutions
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Terms reachable from `start` via one or more hops of `predicate`,
/// restricted to quads in scope when one is given.
pub fn transitive_reach(
    store: &Store,
    start: &Iri,
    predicate: &Iri,
    scope: Option<&Scope>,
    direction: Direction,
) -> BTreeSet<Term> {
    let mut reached: BTreeSet<Term> = BTreeSet::new();
    let mut frontier: VecDeque<Term> = VecDeque::from([Term::Iri(start.clone())]);
    let mut visited: BTreeSet<Term> = BTreeSet::new();
    while let Some(current) = frontier.pop_front() {
        if !visited.insert(current.clone()) {
            continue;
        }
        for quad in store.quads() {
            if quad.predicate != *predicate || !in_scope(quad, scope) {
                continue;
            }
            let next = match direction {
                Direction::Forward => {
                    if Term::Iri(quad.subject.clone()) != current {
                        continue;
                    }
                    quad.object.clone()
                }
                Direction::Inverse => {
                    if quad.object != current {
                        continue;
                    }
                    Term::Iri(quad.subject.clone())
                }
            };
            if reached.insert(next.clone()) {
                frontier.push_back(next);
            }
        }
    }
    reached
}

/// Cardinal grouping over every graph in the store: valid assertions are
/// grouped by payload hash; graphs that fail validation are reported, and
/// valid non-assertions are skipped silently.
#[derive(Debug, Clone, Default)]
pub struct CardinalGroups {
    pub groups: Vec<(CardinalKey, BTreeSet<Iri>)>,
    pub skipped: Vec<(Iri, ValidationReport)>,
}

pub fn find_cardinal_groups(store: &Store) -> CardinalGroups {
    let mut groups: BTreeMap<CardinalKey, BTreeSet<Iri>> = BTreeMap::new();
    let mut skipped = Vec::new();
    for graph in store.graphs() {
        let quads = store.graph_quads(graph);
        let report = validate(&quads, graph);
        if !report.is_valid() {
            skipped.push((graph.clone(), report));
            continue;
        }
        let ovopub = extract(&quads, graph).expect("validated above");
        if let Ok(key) = cardinal_key(&ovopub) {
            groups.entry(key).or_default().insert(graph.clone());
        }
    }
    CardinalGroups {
        groups: groups.into_iter().collect(),
        skipped,
    }
}
