//! `ovo` — build, validate, hash, verify, scope and query ovopubs.

mod manifest;
mod query;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use ovo_core::model::validate;
use ovo_core::{
    GraphName, Iri, Quad, Store, bgp_query, find_cardinal_groups, hash_quads,
    membership_closure, parse_nquads, serialize_nquads,
};

use manifest::{ManifestKind, parse_manifest};
use query::{parse_query, render_binding_term};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATIONS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_INTEGRITY: u8 = 4;

#[derive(Parser)]
#[command(name = "ovo", version, about = "Modular data publication with minimal provenance")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Nquads,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build an ovopub from a manifest and write N-Quads plus a digest sidecar
    Build {
        manifest: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Hex seed for the random IRI policy
        #[arg(long)]
        seed: Option<String>,
        #[arg(long, value_enum, default_value = "nquads")]
        format: OutputFormat,
    },
    /// Validate every named graph in the given N-Quads files
    Validate {
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
    },
    /// Print the digest of each named graph in a file
    Hash { path: PathBuf },
    /// Check a file against its digest sidecar
    Verify { path: PathBuf, sidecar: PathBuf },
    /// Compute the membership/reification closure from root IRIs
    Closure {
        paths: Vec<PathBuf>,
        #[arg(long = "from", required = true)]
        from: Vec<String>,
    },
    /// Run a pattern query over the given stores
    Query {
        query: PathBuf,
        paths: Vec<PathBuf>,
    },
    /// Group assertion ovopubs by identical payload
    Dedupe { paths: Vec<PathBuf> },
    /// Generate the protein-interaction exemplar corpus
    Exemplar {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "nquads")]
        format: OutputFormat,
    },
}

struct CmdError {
    code: u8,
    message: String,
}

impl CmdError {
    fn usage(message: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(context: &str, error: std::io::Error) -> Self {
        CmdError {
            code: EXIT_IO,
            message: format!("{context}: {error}"),
        }
    }

    fn integrity(message: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_INTEGRITY,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ovo: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn read_file(path: &Path) -> Result<String, CmdError> {
    fs::read_to_string(path).map_err(|e| CmdError::io(&path.display().to_string(), e))
}

fn parse_file(path: &Path) -> Result<Vec<Quad>, CmdError> {
    let text = read_file(path)?;
    parse_nquads(&text).map_err(|e| CmdError::usage(format!("{}: {e}", path.display())))
}

fn load_store(paths: &[PathBuf]) -> Result<Store, CmdError> {
    let mut quads = Vec::new();
    for path in paths {
        quads.extend(parse_file(path)?);
    }
    Store::load(quads).map_err(|e| CmdError::usage(e.to_string()))
}

fn group_by_graph(quads: Vec<Quad>) -> (BTreeMap<Iri, Vec<Quad>>, Vec<Quad>) {
    let mut graphs: BTreeMap<Iri, Vec<Quad>> = BTreeMap::new();
    let mut default_graph = Vec::new();
    for quad in quads {
        match &quad.graph {
            GraphName::Named(iri) => graphs.entry(iri.clone()).or_default().push(quad),
            GraphName::Default => default_graph.push(quad),
        }
    }
    (graphs, default_graph)
}

fn parse_seed(seed: Option<&str>) -> Result<Option<ChaCha20Rng>, CmdError> {
    let Some(seed) = seed else {
        return Ok(None);
    };
    let trimmed = seed.trim_start_matches("0x");
    let bytes = (0..trimmed.len())
        .step_by(2)
        .map(|i| u8::from_str_radix(trimmed.get(i..i + 2).unwrap_or("zz"), 16))
        .collect::<Result<Vec<u8>, _>>()
        .map_err(|_| CmdError::usage(format!("--seed must be hex, got {seed:?}")))?;
    let mut key = [0u8; 32];
    for (i, b) in bytes.iter().enumerate().take(32) {
        key[i] = *b;
    }
    Ok(Some(ChaCha20Rng::from_seed(key)))
}

fn run(command: Command) -> Result<u8, CmdError> {
    match command {
        Command::Build { manifest, out, seed, format: _ } => cmd_build(&manifest, &out, seed.as_deref()),
        Command::Validate { paths, report } => cmd_validate(&paths, report),
        Command::Hash { path } => cmd_hash(&path),
        Command::Verify { path, sidecar } => cmd_verify(&path, &sidecar),
        Command::Closure { paths, from } => cmd_closure(&paths, &from),
        Command::Query { query, paths } => cmd_query(&query, &paths),
        Command::Dedupe { paths } => cmd_dedupe(&paths),
        Command::Exemplar { out, format: _ } => cmd_exemplar(&out),
    }
}

fn write_ovopub(graph: &ovo_core::OvopubGraph, out: &Path) -> Result<(), CmdError> {
    let text = serialize_nquads(&graph.quads, true);
    let digest = hash_quads(&graph.quads);
    fs::write(out, &text).map_err(|e| CmdError::io(&out.display().to_string(), e))?;
    let sidecar = sidecar_path(out);
    fs::write(&sidecar, ovo_core::integrity::sidecar_text(&digest))
        .map_err(|e| CmdError::io(&sidecar.display().to_string(), e))?;
    Ok(())
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_os_string();
    name.push(".sha256");
    PathBuf::from(name)
}

fn cmd_build(manifest_path: &Path, out: &Path, seed: Option<&str>) -> Result<u8, CmdError> {
    let text = read_file(manifest_path)?;
    let manifest = parse_manifest(&text).map_err(|e| CmdError::usage(e.to_string()))?;
    let mut rng = parse_seed(seed)?;
    let entropy = rng.as_mut().map(|r| {
        let mut bytes = [0u8; 16];
        r.fill_bytes(&mut bytes);
        u128::from_be_bytes(bytes)
    });
    let policy = manifest
        .policy
        .clone()
        .into_policy(entropy)
        .map_err(CmdError::usage)?;
    let built = match manifest.kind {
        ManifestKind::Assertion => ovo_core::build_assertion(
            manifest.triples[0].clone(),
            &manifest.provenance,
            &policy,
        ),
        ManifestKind::Record => {
            ovo_core::build_record(&manifest.triples, &manifest.provenance, &policy)
        }
        ManifestKind::Collection => {
            ovo_core::build_collection(&manifest.members, &manifest.provenance, &policy)
        }
    }
    .map_err(|e| CmdError::usage(e.to_string()))?;
    for warning in &built.warnings {
        eprintln!("ovo: warning: {warning:?}");
    }
    write_ovopub(&built.graph, out)?;
    println!("{}", built.graph.iri.as_str());
    Ok(EXIT_OK)
}

fn cmd_validate(paths: &[PathBuf], report_format: ReportFormat) -> Result<u8, CmdError> {
    let mut any_violations = false;
    let mut json_reports = Vec::new();
    for path in paths {
        let (graphs, default_graph) = group_by_graph(parse_file(path)?);
        for quad in &default_graph {
            any_violations = true;
            match report_format {
                ReportFormat::Text => println!(
                    "DefaultGraphStatement\t{}\tstatement outside any named graph: {}",
                    path.display(),
                    ovo_core::nquads::quad_to_line(quad)
                ),
                ReportFormat::Json => json_reports.push(serde_default_graph(path, quad)),
            }
        }
        for (graph, quads) in graphs {
            let report = validate(&quads, &graph);
            if report.is_valid() {
                continue;
            }
            any_violations = true;
            match report_format {
                ReportFormat::Text => print!("{}", report.to_text()),
                ReportFormat::Json => {
                    if let ovo_core::serde_json::Value::Array(items) = report.to_json() {
                        json_reports.extend(items);
                    }
                }
            }
        }
    }
    if report_format == ReportFormat::Json {
        println!(
            "{}",
            ovo_core::serde_json::Value::Array(json_reports)
        );
    }
    Ok(if any_violations { EXIT_VIOLATIONS } else { EXIT_OK })
}

fn serde_default_graph(path: &Path, quad: &Quad) -> ovo_core::serde_json::Value {
    ovo_core::serde_json::json!({
        "code": "DefaultGraphStatement",
        "graph": path.display().to_string(),
        "message": "statement outside any named graph",
        "quad": ovo_core::nquads::quad_to_line(quad),
    })
}

fn cmd_hash(path: &Path) -> Result<u8, CmdError> {
    let (graphs, default_graph) = group_by_graph(parse_file(path)?);
    if !default_graph.is_empty() {
        return Err(CmdError::usage(format!(
            "{}: default-graph statements cannot be hashed as ovopubs",
            path.display()
        )));
    }
    for (graph, quads) in graphs {
        println!("{}\t{}", hash_quads(&quads).render(), graph.as_str());
    }
    Ok(EXIT_OK)
}

fn cmd_verify(path: &Path, sidecar: &Path) -> Result<u8, CmdError> {
    let quads = parse_file(path)?;
    let expected = ovo_core::integrity::parse_sidecar(&read_file(sidecar)?)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let actual = hash_quads(&quads);
    if actual != expected {
        return Err(CmdError::integrity(format!(
            "{}: digest mismatch: computed {}, sidecar {}",
            path.display(),
            actual.render(),
            expected.render()
        )));
    }
    println!("{}\tOK", path.display());
    Ok(EXIT_OK)
}

fn parse_roots(from: &[String]) -> Result<BTreeSet<Iri>, CmdError> {
    from.iter()
        .map(|raw| {
            let value = raw
                .strip_prefix('<')
                .and_then(|s| s.strip_suffix('>'))
                .unwrap_or(raw);
            Iri::new(value).map_err(|e| CmdError::usage(e.to_string()))
        })
        .collect()
}

fn cmd_closure(paths: &[PathBuf], from: &[String]) -> Result<u8, CmdError> {
    let store = load_store(paths)?;
    let roots = parse_roots(from)?;
    let scope = membership_closure(&store, &roots);
    for iri in &scope.resources {
        if scope.graphs.contains(iri) {
            println!("G\t{}", iri.as_str());
        } else {
            println!("{}", iri.as_str());
        }
    }
    Ok(EXIT_OK)
}

fn cmd_query(query_path: &Path, paths: &[PathBuf]) -> Result<u8, CmdError> {
    let query = parse_query(&read_file(query_path)?).map_err(|e| CmdError::usage(e.to_string()))?;
    let store = load_store(paths)?;
    let scope = if query.roots.is_empty() {
        None
    } else {
        let roots: BTreeSet<Iri> = query.roots.iter().cloned().collect();
        Some(membership_closure(&store, &roots))
    };
    let solutions = bgp_query(&store, &query.patterns, scope.as_ref());
    println!("{}", query.variables.join("\t"));
    for solution in solutions {
        let row: Vec<String> = query
            .variables
            .iter()
            .map(|v| {
                solution
                    .get(v)
                    .map(render_binding_term)
                    .unwrap_or_default()
            })
            .collect();
        println!("{}", row.join("\t"));
    }
    Ok(EXIT_OK)
}

fn cmd_dedupe(paths: &[PathBuf]) -> Result<u8, CmdError> {
    let store = load_store(paths)?;
    let result = find_cardinal_groups(&store);
    for (graph, report) in &result.skipped {
        eprintln!(
            "ovo: skipped invalid graph <{}>: {} violations",
            graph.as_str(),
            report.violations.len()
        );
    }
    for (key, members) in &result.groups {
        let iris: Vec<&str> = members.iter().map(Iri::as_str).collect();
        println!("{}\t{}", key.0.render(), iris.join(","));
    }
    Ok(EXIT_OK)
}

const EXEMPLAR_README: &str = "\
# Exemplar corpus

Six ovopubs describing a protein-protein interaction entry, generated by
`ovo exemplar`:

| file | kind       | content                                             |
|------|------------|-----------------------------------------------------|
| b.nq | assertion  | the interaction between two proteins                |
| c.nq | record     | the source entry (participants, method, publication); identifier \"BioGRID:464511\" |
| d.nq | record     | interaction-group membership of the interaction     |
| e.nq | record     | similarity-group membership of the proteins         |
| f.nq | assertion  | chain giving b its source c                         |
| g.nq | collection | members b, c, d and f (e deliberately excluded)     |

Only the identifier \"BioGRID:464511\" is real data. Every protein, method,
publication and group IRI is a synthetic placeholder under
`http://ovopub.example/ns/`. Each `.nq` file has a `.sha256` sidecar with
its canonical digest.
";

fn cmd_exemplar(out_dir: &Path) -> Result<u8, CmdError> {
    fs::create_dir_all(out_dir).map_err(|e| CmdError::io(&out_dir.display().to_string(), e))?;
    for (name, graph) in ovo_core::exemplar::generate() {
        let path = out_dir.join(format!("{name}.nq"));
        write_ovopub(&graph, &path)?;
        println!("{}\t{}", path.display(), graph.iri.as_str());
    }
    let readme = out_dir.join("README.md");
    fs::write(&readme, EXEMPLAR_README)
        .map_err(|e| CmdError::io(&readme.display().to_string(), e))?;
    Ok(EXIT_OK)
}
