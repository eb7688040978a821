//! Acceptance suite. Each test checks one numbered criterion end to end
//! and prints a PASS line on success (run with `--nocapture` to see them).

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write as _;
use std::process::{Command, Stdio};

use rand::prelude::*;
use rand_chacha::ChaCha20Rng;

use ovo_core::model::{Creator, Provenance};
use ovo_core::nquads::quad_to_line;
use ovo_core::store::Direction;
use ovo_core::{
    AggregationSpec, ChainSpec, GraphName, Iri, IriPolicy, Literal, OvopubGraph, Pattern,
    PatternTerm, Quad, RuleCode, Store, Term, Triple, aggregate, bgp_query, build_assertion,
    build_collection, build_record, canonicalize_quads, chain, find_cardinal_groups,
    hash_quads, match_pattern, membership_closure, parse_nquads, transitive_reach, validate,
    vocab,
};

fn iri(s: &str) -> Iri {
    Iri::new_unchecked(s.to_string())
}

fn prov() -> Provenance {
    Provenance::new(
        vec![Creator::Agent(iri("http://ex.org/alice"))],
        "2013-06-21T00:00:00Z",
        iri("http://creativecommons.org/licenses/by/3.0/"),
    )
}

fn explicit(s: &str) -> IriPolicy {
    IriPolicy::Explicit(iri(s))
}

fn pass(n: u32, what: &str) {
    println!("ACCEPTANCE criterion {n}: PASS — {what}");
}

// --- criterion 1: conformance + mutation catalog ------------------------

fn golden_assertion() -> OvopubGraph {
    build_assertion(
        Triple::new(iri("http://ex/S"), iri("http://ex/P"), iri("http://ex/O")),
        &prov(),
        &explicit("http://ex/pub/assertion"),
    )
    .unwrap()
    .graph
}

fn golden_record() -> OvopubGraph {
    build_record(
        &[
            Triple::new(iri("http://ex/a"), iri("http://ex/p"), iri("http://ex/b")),
            Triple::new(iri("http://ex/b"), iri("http://ex/q"), iri("http://ex/c")),
        ],
        &prov(),
        &explicit("http://ex/pub/record"),
    )
    .unwrap()
    .graph
}

fn golden_collection() -> OvopubGraph {
    build_collection(
        &[iri("http://ex/pub/assertion"), iri("http://ex/pub/record")],
        &prov(),
        &explicit("http://ex/pub/collection"),
    )
    .unwrap()
    .graph
}

fn remove_where(graph: &OvopubGraph, f: impl Fn(&Quad) -> bool) -> Vec<Quad> {
    graph.quads.iter().filter(|q| !f(q)).cloned().collect()
}

/// One minimal mutant per rule code, derived from the golden ovopubs.
fn mutants() -> Vec<(RuleCode, Vec<Quad>, Iri)> {
    let a = golden_assertion();
    let r = golden_record();
    let c = golden_collection();
    let mut out: Vec<(RuleCode, Vec<Quad>, Iri)> = Vec::new();

    out.push((
        RuleCode::MissingType,
        remove_where(&a, |q| q.predicate == vocab::rdf::type_()),
        a.iri.clone(),
    ));
    {
        let mut quads = a.quads.clone();
        quads.push(Quad::new(a.iri.clone(), vocab::rdf::type_(), vocab::sio::collection_ovopub(), a.iri.clone()));
        out.push((RuleCode::MultipleTypes, quads, a.iri.clone()));
    }
    {
        let mut quads = remove_where(&a, |q| q.predicate == vocab::rdf::type_());
        quads.push(Quad::new(a.iri.clone(), vocab::rdf::type_(), iri("http://ex/NotAClass"), a.iri.clone()));
        out.push((RuleCode::UnknownType, quads, a.iri.clone()));
    }
    out.push((
        RuleCode::MissingCreator,
        remove_where(&a, |q| q.predicate == vocab::dc::creator()),
        a.iri.clone(),
    ));
    out.push((
        RuleCode::MissingDate,
        remove_where(&a, |q| q.predicate == vocab::dc::date()),
        a.iri.clone(),
    ));
    {
        let mut quads = a.quads.clone();
        quads.push(Quad::new(
            a.iri.clone(),
            vocab::dc::date(),
            Literal::typed("2014-01-01T00:00:00Z", vocab::xsd::date_time()).unwrap(),
            a.iri.clone(),
        ));
        out.push((RuleCode::MultipleDate, quads, a.iri.clone()));
    }
    {
        let mut quads = remove_where(&a, |q| q.predicate == vocab::dc::date());
        quads.push(Quad::new(
            a.iri.clone(),
            vocab::dc::date(),
            Literal::typed("June 21, 2013", vocab::xsd::date_time()).unwrap(),
            a.iri.clone(),
        ));
        out.push((RuleCode::BadDateLexical, quads, a.iri.clone()));
    }
    out.push((
        RuleCode::MissingRights,
        remove_where(&a, |q| q.predicate == vocab::dc::rights()),
        a.iri.clone(),
    ));
    {
        let mut quads = remove_where(&a, |q| q.predicate == vocab::dc::rights());
        quads.push(Quad::new(
            a.iri.clone(),
            vocab::dc::rights(),
            Literal::string("all rights reserved"),
            a.iri.clone(),
        ));
        out.push((RuleCode::RightsNotIri, quads, a.iri.clone()));
    }
    {
        let mut quads = a.quads.clone();
        quads.push(Quad::new(a.iri.clone(), vocab::rdf::subject(), iri("http://ex/S2"), a.iri.clone()));
        out.push((RuleCode::AssertionArity, quads, a.iri.clone()));
    }
    out.push((
        RuleCode::AssertionRawTripleMissing,
        remove_where(&a, |q| q.subject == iri("http://ex/S")),
        a.iri.clone(),
    ));
    out.push((
        RuleCode::RecordEmpty,
        remove_where(&r, |q| q.predicate == vocab::rdfs::member()),
        r.iri.clone(),
    ));
    {
        // detach the second statement: (b,q,c) becomes (d,q,c)
        let node2 = r.iri.join("#st2");
        let quads: Vec<Quad> = r
            .quads
            .iter()
            .map(|q| {
                let mut q = q.clone();
                if q.subject == node2 && q.predicate == vocab::rdf::subject() {
                    q.object = Term::Iri(iri("http://ex/d"));
                }
                if q.subject == iri("http://ex/b") && q.predicate == iri("http://ex/q") {
                    q.subject = iri("http://ex/d");
                }
                q
            })
            .collect();
        out.push((RuleCode::RecordNotConnected, quads, r.iri.clone()));
    }
    {
        let node1 = r.iri.join("#st1");
        let quads = remove_where(&r, |q| q.subject == node1 && q.predicate == vocab::rdf::predicate());
        out.push((RuleCode::RecordMemberNotReified, quads, r.iri.clone()));
    }
    out.push((
        RuleCode::CollectionEmpty,
        remove_where(&c, |q| q.predicate == vocab::rdfs::member()),
        c.iri.clone(),
    ));
    {
        let mut quads = c.quads.clone();
        quads.push(Quad::new(iri("http://ex/x"), iri("http://ex/y"), iri("http://ex/z"), c.iri.clone()));
        out.push((RuleCode::CollectionForeignTriple, quads, c.iri.clone()));
    }
    {
        let quads: Vec<Quad> = a
            .quads
            .iter()
            .map(|q| {
                let mut q = q.clone();
                if q.predicate == vocab::dc::rights() {
                    q.graph = GraphName::Named(iri("http://ex/other-graph"));
                }
                q
            })
            .collect();
        out.push((RuleCode::GraphNameMismatch, quads, a.iri.clone()));
    }
    {
        let quads: Vec<Quad> = a
            .quads
            .iter()
            .map(|q| {
                let mut q = q.clone();
                if q.predicate == vocab::dc::rights() {
                    q.graph = GraphName::Default;
                }
                q
            })
            .collect();
        out.push((RuleCode::DefaultGraphStatement, quads, a.iri.clone()));
    }
    {
        // blank label in both the reification object and the raw triple
        let blank = Iri::new_unchecked("_:b0");
        let quads: Vec<Quad> = a
            .quads
            .iter()
            .map(|q| {
                let mut q = q.clone();
                if q.predicate == vocab::rdf::subject() {
                    q.object = Term::Iri(blank.clone());
                }
                if q.subject == iri("http://ex/S") {
                    q.subject = blank.clone();
                }
                q
            })
            .collect();
        out.push((RuleCode::BlankNodePresent, quads, a.iri.clone()));
    }
    out
}

#[test]
fn criterion_1_conformance_and_mutation_catalog() {
    for graph in [golden_assertion(), golden_record(), golden_collection()] {
        let report = validate(&graph.quads, &graph.iri);
        assert!(report.is_valid(), "golden ovopub invalid: {}", report.to_text());
    }
    let mutants = mutants();
    assert!(mutants.len() >= 19, "need one mutant per rule code");
    let covered: BTreeSet<RuleCode> = mutants.iter().map(|(code, _, _)| *code).collect();
    assert_eq!(covered.len(), RuleCode::ALL.len(), "every code needs a mutant");
    let mut passed = 0;
    for (code, quads, graph) in &mutants {
        let report = validate(quads, graph);
        assert_eq!(
            report.codes(),
            BTreeSet::from([*code]),
            "mutant for {code} triggered {:?}",
            report.codes()
        );
        passed += 1;
    }
    assert_eq!(passed, 19);
    pass(1, "builders validate cleanly; 19/19 mutants trigger exactly their rule code");
}

// --- criterion 2: chaining pattern -------------------------------------

struct ChainNetwork {
    record_a: OvopubGraph,
    assertion_b: OvopubGraph,
    assertion_c: OvopubGraph,
    chain_d: OvopubGraph,
    collection: OvopubGraph,
}

fn chain_network() -> ChainNetwork {
    let e = iri("http://ex/res/E");
    let f = iri("http://ex/res/F");
    let g = iri("http://ex/res/G");
    let p1 = iri("http://ex/res/P1");
    let p2 = iri("http://ex/res/P2");
    let t1 = Triple::new(e, p1, f.clone());
    let t2 = Triple::new(f, p2, g);

    let record_a = build_record(&[t1.clone(), t2.clone()], &prov(), &explicit("http://ex/pub/A"))
        .unwrap()
        .graph;
    let assertion_b = build_assertion(t1, &prov(), &explicit("http://ex/pub/B")).unwrap().graph;
    let assertion_c = build_assertion(t2, &prov(), &explicit("http://ex/pub/C")).unwrap().graph;
    let chain_d = chain(
        &ChainSpec {
            left: record_a.iri.clone(),
            predicate: iri("http://ex/res/related-to"),
            right: assertion_b.iri.clone(),
        },
        &prov(),
        &explicit("http://ex/pub/D"),
    )
    .unwrap()
    .graph;
    let collection = build_collection(
        &[
            record_a.iri.clone(),
            assertion_b.iri.clone(),
            assertion_c.iri.clone(),
            chain_d.iri.clone(),
        ],
        &prov(),
        &explicit("http://ex/pub/E"),
    )
    .unwrap()
    .graph;
    ChainNetwork {
        record_a,
        assertion_b,
        assertion_c,
        chain_d,
        collection,
    }
}

/// Independent BFS over the four closure predicates, written directly
/// against the quad list rather than the store.
fn bfs_closure_oracle(quads: &[Quad], roots: &BTreeSet<Iri>) -> BTreeSet<Iri> {
    let preds = [
        vocab::rdfs::member(),
        vocab::rdf::subject(),
        vocab::rdf::predicate(),
        vocab::rdf::object(),
    ];
    let mut seen: BTreeSet<Iri> = roots.clone();
    let mut frontier: Vec<Iri> = roots.iter().cloned().collect();
    while let Some(current) = frontier.pop() {
        for quad in quads {
            if quad.subject == current && preds.contains(&quad.predicate) {
                if let Term::Iri(next) = &quad.object {
                    if seen.insert(next.clone()) {
                        frontier.push(next.clone());
                    }
                }
            }
        }
    }
    seen
}

#[test]
fn criterion_2_chaining_reproduction() {
    let net = chain_network();
    let all = [&net.record_a, &net.assertion_b, &net.assertion_c, &net.chain_d, &net.collection];
    for graph in all {
        let report = validate(&graph.quads, &graph.iri);
        assert!(report.is_valid(), "{}: {}", graph.iri.as_str(), report.to_text());
    }
    let quads: Vec<Quad> = all.iter().flat_map(|g| g.quads.clone()).collect();
    let store = Store::load(quads.clone()).unwrap();
    let roots = BTreeSet::from([net.collection.iri.clone()]);
    let scope = membership_closure(&store, &roots);

    assert_eq!(scope.resources, bfs_closure_oracle(&quads, &roots));
    for expected in [
        "http://ex/pub/A",
        "http://ex/pub/B",
        "http://ex/pub/C",
        "http://ex/pub/D",
        "http://ex/res/E",
        "http://ex/res/F",
        "http://ex/res/G",
        "http://ex/res/P1",
        "http://ex/res/P2",
    ] {
        assert!(scope.resources.contains(&iri(expected)), "missing {expected}");
    }
    assert_eq!(
        scope.graphs,
        BTreeSet::from([
            net.collection.iri.clone(),
            net.record_a.iri.clone(),
            net.assertion_b.iri.clone(),
            net.assertion_c.iri.clone(),
            net.chain_d.iri.clone(),
        ])
    );
    pass(2, "5 ovopubs validate; closure from the collection matches the BFS oracle exactly");
}

// --- criterion 3: aggregation pattern -----------------------------------

#[test]
fn criterion_3_aggregation_reproduction() {
    let shared = Triple::new(iri("http://ex/S"), iri("http://ex/P"), iri("http://ex/O"));
    let sources: Vec<OvopubGraph> = (1..=3)
        .map(|i| {
            build_assertion(shared.clone(), &prov(), &explicit(&format!("http://ex/pub/src{i}")))
                .unwrap()
                .graph
        })
        .collect();
    let spec = AggregationSpec {
        canonical: shared,
        sources: sources.iter().map(|g| g.iri.clone()).collect(),
        link_predicate: None,
    };
    let (assertion, record) = aggregate(
        &spec,
        &prov(),
        &IriPolicy::ContentAddressed { base: iri("http://ex/pub") },
    )
    .unwrap();
    assert!(validate(&record.graph.quads, &record.graph.iri).is_valid());
    let ovo_core::Payload::Record(payload) = &record.graph.payload else {
        panic!("record payload expected");
    };
    assert_eq!(payload.statements.len(), 3);
    let star: Vec<Triple> = payload.statements.iter().map(|(_, t)| t.clone()).collect();
    assert!(star.iter().all(|t| t.subject == assertion.graph.iri));
    assert_eq!(ovo_core::connected_components(&star), 1);

    let store = Store::load(sources.iter().flat_map(|g| g.quads.clone())).unwrap();
    let groups = find_cardinal_groups(&store);
    assert!(groups.skipped.is_empty());
    assert_eq!(groups.groups.len(), 1);
    assert_eq!(groups.groups[0].1.len(), 3);
    pass(3, "aggregation yields a connected 3-edge star; 3 shared payloads form one cardinal group");
}

// --- criterion 4: exemplar + negative containment ------------------------

fn random_pattern_term(rng: &mut ChaCha20Rng, pool: &[Term]) -> PatternTerm {
    match rng.gen_range(0..4) {
        0 => PatternTerm::Wildcard,
        1 => PatternTerm::Var(format!("v{}", rng.gen_range(0..3))),
        _ => PatternTerm::Term(pool[rng.gen_range(0..pool.len())].clone()),
    }
}

#[test]
fn criterion_4_exemplar_and_scoped_query_containment() {
    let corpus = ovo_core::exemplar::generate();
    assert_eq!(corpus.len(), 6);
    for (name, graph) in &corpus {
        let report = validate(&graph.quads, &graph.iri);
        assert!(report.is_valid(), "{name}: {}", report.to_text());
    }
    let kinds: Vec<_> = corpus.iter().map(|(_, g)| g.kind).collect();
    use ovo_core::OvopubKind::*;
    assert_eq!(kinds, vec![Assertion, Record, Record, Record, Assertion, Collection]);
    let (_, c) = &corpus[1];
    assert_eq!(c.provenance.identifier.as_deref(), Some("BioGRID:464511"));

    let quads: Vec<Quad> = corpus.iter().flat_map(|(_, g)| g.quads.clone()).collect();
    let store = Store::load(quads.clone()).unwrap();
    assert_eq!(store.graphs().count(), 6);
    let g_iri = corpus[5].1.iri.clone();
    let scope = membership_closure(&store, &BTreeSet::from([g_iri]));

    // pool of terms occurring in the store, to make matches likely
    let mut pool: Vec<Term> = Vec::new();
    for q in &quads {
        pool.push(Term::Iri(q.subject.clone()));
        pool.push(Term::Iri(q.predicate.clone()));
        pool.push(q.object.clone());
    }
    let mut rng = ChaCha20Rng::seed_from_u64(0x0404);
    let mut violations = 0;
    let mut matched = 0;
    for _ in 0..1000 {
        let pattern = Pattern {
            subject: random_pattern_term(&mut rng, &pool),
            predicate: random_pattern_term(&mut rng, &pool),
            object: random_pattern_term(&mut rng, &pool),
            graph: PatternTerm::Var("g".to_string()),
        };
        for binding in match_pattern(&store, &pattern, Some(&scope)) {
            matched += 1;
            let Term::Iri(bound) = &binding["g"] else { panic!("graph binds IRI") };
            if !scope.graphs.contains(bound) {
                violations += 1;
            }
        }
    }
    assert!(matched > 0, "trial patterns never matched anything");
    assert_eq!(violations, 0);
    // ovopub e is outside the collection: its graph never appears
    let e_iri = &corpus[3].1.iri;
    assert!(!scope.graphs.contains(e_iri));
    pass(4, "6 exemplar ovopubs validate; 1000 scoped patterns produced 0 out-of-scope bindings");
}

// --- criterion 5: tamper detection + external oracle ---------------------

fn external_sort_sha256(lines: &[String]) -> String {
    let sort = Command::new("sort")
        .env("LC_ALL", "C")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn sort");
    sort.stdin
        .as_ref()
        .unwrap()
        .write_all(lines.iter().map(|l| format!("{l}\n")).collect::<String>().as_bytes())
        .unwrap();
    let sorted = sort.wait_with_output().unwrap();
    let sha = Command::new("sha256sum")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn sha256sum");
    sha.stdin.as_ref().unwrap().write_all(&sorted.stdout).unwrap();
    let out = sha.wait_with_output().unwrap();
    String::from_utf8(out.stdout)
        .unwrap()
        .split_whitespace()
        .next()
        .unwrap()
        .to_string()
}

fn mutate_one_quad(rng: &mut ChaCha20Rng, graph: &OvopubGraph) -> Vec<Quad> {
    let mut quads = graph.quads.clone();
    if rng.gen_bool(0.5) {
        // single-quad addition
        quads.push(Quad::new(
            iri(&format!("http://tamper/{}", rng.gen::<u32>())),
            iri("http://tamper/p"),
            iri("http://tamper/o"),
            graph.iri.clone(),
        ));
    } else {
        // term mutation in a random quad
        let idx = rng.gen_range(0..quads.len());
        quads[idx].object = Term::Literal(Literal::string(format!("tampered-{}", rng.gen::<u32>())));
    }
    quads
}

#[test]
fn criterion_5_tamper_detection_and_external_oracle() {
    let corpus = ovo_core::exemplar::generate();
    for (name, graph) in &corpus {
        let ours = hash_quads(&graph.quads).render();
        let lines: Vec<String> = graph.quads.iter().map(quad_to_line).collect();
        let external = format!("sha256:{}", external_sort_sha256(&lines));
        assert_eq!(ours, external, "{name}: digest disagrees with sort+sha256 oracle");
    }
    let mut rng = ChaCha20Rng::seed_from_u64(0x0505);
    let mut mismatches = 0;
    for i in 0..100 {
        let (_, graph) = &corpus[i % corpus.len()];
        let original = hash_quads(&graph.quads);
        let tampered = mutate_one_quad(&mut rng, graph);
        if hash_quads(&tampered) != original {
            mismatches += 1;
        }
    }
    assert_eq!(mismatches, 100);
    pass(5, "digests match the external sort+sha256 oracle; 100/100 tampers detected");
}

// --- criterion 6: hash determinism under permutation ---------------------

#[test]
fn criterion_6_hash_determinism() {
    let corpus = ovo_core::exemplar::generate();
    let mut rng = ChaCha20Rng::seed_from_u64(0x0606);
    for (name, graph) in &corpus {
        let digests: BTreeSet<String> = (0..100)
            .map(|_| {
                let mut quads = graph.quads.clone();
                quads.shuffle(&mut rng);
                hash_quads(&quads).render()
            })
            .collect();
        assert_eq!(digests.len(), 1, "{name}: permutation changed the digest");
    }
    pass(6, "100 quad permutations per ovopub produce exactly one digest each");
}

// --- criterion 7: cardinal grouping at scale -----------------------------

#[test]
fn criterion_7_cardinal_grouping() {
    let mut rng = ChaCha20Rng::seed_from_u64(0x0707);
    let payloads: Vec<Triple> = (0..50)
        .map(|k| Triple::new(iri(&format!("http://ex/s{k}")), iri("http://ex/p"), iri(&format!("http://ex/o{k}"))))
        .collect();
    let mut quads = Vec::new();
    // independent oracle: payload line -> ovopub IRIs
    let mut oracle: BTreeMap<String, BTreeSet<Iri>> = BTreeMap::new();
    for i in 0..500 {
        let payload = &payloads[rng.gen_range(0..payloads.len())];
        let graph = build_assertion(payload.clone(), &prov(), &explicit(&format!("http://ex/pub/n{i}")))
            .unwrap()
            .graph;
        let line = quad_to_line(&Quad {
            subject: payload.subject.clone(),
            predicate: payload.predicate.clone(),
            object: payload.object.clone(),
            graph: GraphName::Default,
        });
        oracle.entry(line).or_default().insert(graph.iri.clone());
        quads.extend(graph.quads);
    }
    // every payload drawn at least once with this seed
    assert_eq!(oracle.len(), 50);
    let store = Store::load(quads).unwrap();
    let result = find_cardinal_groups(&store);
    assert!(result.skipped.is_empty());
    assert_eq!(result.groups.len(), 50);
    let total: usize = result.groups.iter().map(|(_, g)| g.len()).sum();
    assert_eq!(total, 500);
    let ours: BTreeSet<BTreeSet<Iri>> = result.groups.iter().map(|(_, g)| g.clone()).collect();
    let expected: BTreeSet<BTreeSet<Iri>> = oracle.into_values().collect();
    assert_eq!(ours, expected);
    pass(7, "500 assertions over 50 payloads form exactly 50 groups matching the hash-map oracle");
}

// --- criterion 8: closure/query engine vs oracles -------------------------

fn bfs_reach_oracle(edges: &[(usize, usize)], start: usize) -> BTreeSet<usize> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (a, b) in edges {
        adj.entry(*a).or_default().push(*b);
    }
    let mut seen = BTreeSet::new();
    let mut frontier = vec![start];
    while let Some(node) = frontier.pop() {
        for &next in adj.get(&node).into_iter().flatten() {
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    seen
}

#[test]
fn criterion_8_closure_and_scope_soundness() {
    let mut rng = ChaCha20Rng::seed_from_u64(0x0808);
    let pred = iri("http://ex/p");
    for trial in 0..200 {
        let n = rng.gen_range(2..=1000);
        let edge_count = rng.gen_range(1..=(2 * n).min(3000));
        let edges: Vec<(usize, usize)> = (0..edge_count)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect();
        let node = |i: usize| iri(&format!("http://ex/n{i}"));
        let quads: Vec<Quad> = edges
            .iter()
            .map(|(a, b)| Quad::new(node(*a), pred.clone(), node(*b), iri("http://ex/g")))
            .collect();
        let store = Store::load(quads).unwrap();
        let start = rng.gen_range(0..n);
        let reach = transitive_reach(&store, &node(start), &pred, None, Direction::Forward);
        let expected: BTreeSet<Term> = bfs_reach_oracle(&edges, start)
            .into_iter()
            .map(|i| Term::Iri(node(i)))
            .collect();
        assert_eq!(reach, expected, "trial {trial} diverged from the BFS oracle");
    }

    // scope soundness: 10,000 randomized trials
    let node = |tag: &str, i: usize| iri(&format!("http://{tag}/{i}"));
    let mut violations = 0;
    let mut checked = 0;
    for _ in 0..100 {
        let quads: Vec<Quad> = (0..rng.gen_range(5..40))
            .map(|_| {
                Quad::new(
                    node("s", rng.gen_range(0..8)),
                    node("p", rng.gen_range(0..4)),
                    node("o", rng.gen_range(0..8)),
                    node("g", rng.gen_range(0..6)),
                )
            })
            .collect();
        let store = Store::load(quads.clone()).unwrap();
        for _ in 0..100 {
            let scope = ovo_core::Scope {
                graphs: (0..6).filter(|_| rng.gen_bool(0.5)).map(|i| node("g", i)).collect(),
                resources: BTreeSet::new(),
            };
            let pattern = Pattern {
                subject: if rng.gen_bool(0.5) {
                    PatternTerm::Wildcard
                } else {
                    PatternTerm::Term(Term::Iri(node("s", rng.gen_range(0..8))))
                },
                predicate: PatternTerm::Wildcard,
                object: PatternTerm::Var("o".to_string()),
                graph: PatternTerm::Var("g".to_string()),
            };
            for binding in bgp_query(&store, std::slice::from_ref(&pattern), Some(&scope)) {
                checked += 1;
                let Term::Iri(g) = &binding["g"] else { panic!("graph binds IRI") };
                if !scope.graphs.contains(g) {
                    violations += 1;
                }
            }
        }
    }
    assert!(checked > 0);
    assert_eq!(violations, 0);
    pass(8, "transitive reach equals the BFS oracle on 200 random graphs; scope soundness held over 10,000 trials");
}

// --- criterion 9: round-trip at scale ------------------------------------

fn random_iri(rng: &mut ChaCha20Rng) -> Iri {
    iri(&format!("http://ex{}/r{}", rng.gen_range(0..10), rng.gen::<u32>()))
}

fn random_literal(rng: &mut ChaCha20Rng) -> Literal {
    let mut lexical = String::new();
    for _ in 0..rng.gen_range(0..12) {
        let c = match rng.gen_range(0..8) {
            0 => '"',
            1 => '\\',
            2 => '\n',
            3 => '\t',
            4 => '\r',
            5 => char::from_u32(rng.gen_range(1..32)).unwrap(),
            6 => char::from_u32(rng.gen_range(0x80..0x2FFF)).unwrap_or('é'),
            _ => char::from(rng.gen_range(b'a'..=b'z')),
        };
        lexical.push(c);
    }
    match rng.gen_range(0..3) {
        0 => Literal::string(lexical),
        1 => Literal::lang(lexical, ["fr", "en", "de-CH"][rng.gen_range(0..3)]),
        _ => Literal::typed(lexical, iri("http://www.w3.org/2001/XMLSchema#token")).unwrap(),
    }
}

#[test]
fn criterion_9_round_trip_ten_thousand_quads() {
    let mut rng = ChaCha20Rng::seed_from_u64(0x0909);
    let quads: Vec<Quad> = (0..10_000)
        .map(|_| {
            let object = if rng.gen_bool(0.5) {
                Term::Iri(random_iri(&mut rng))
            } else {
                Term::Literal(random_literal(&mut rng))
            };
            let graph = if rng.gen_bool(0.8) {
                GraphName::Named(random_iri(&mut rng))
            } else {
                GraphName::Default
            };
            Quad {
                subject: random_iri(&mut rng),
                predicate: random_iri(&mut rng),
                object,
                graph,
            }
        })
        .collect();
    let text = ovo_core::serialize_nquads(&quads, false);
    let parsed = parse_nquads(&text).unwrap();
    assert_eq!(parsed, quads);
    // canonical form is stable through one more cycle
    let canonical = canonicalize_quads(&quads);
    assert_eq!(canonicalize_quads(&parse_nquads(&canonical).unwrap()), canonical);
    pass(9, "10,000 random quads round-trip byte-identically");
}
