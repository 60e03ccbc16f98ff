//! Subcommand implementations. Each returns an [`Outcome`] rather than
//! printing, so that tests can drive them in-process.

use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use d2color::corpus::{build, CorpusError, GeneratorSpec};
use d2color::embed::{embed, euler_check};
use d2color::oracle::{
    exact_chromatic2_bounded, verify_coloring, Chromatic, OracleError, Relation, Verdict,
    DEFAULT_SIZE_BOUND,
};
use d2color::reducer::{ColorError, ColorOptions, Colorer, Diagnostic};
use d2color::Coloring;

use crate::document::{DocumentError, GraphDocument, LoadedGraph, FORMAT_VERSION};
use crate::trace_file::{DiagnosticRecord, TraceDocument, TraceFileError};

/// Environment variable that, when set, is the root for relative `gen --out` paths.
pub const FIXTURE_ROOT_VAR: &str = "D2COLOR_FIXTURE_ROOT";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NON_PLANAR: i32 = 2;
pub const EXIT_DEGREE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_VIOLATIONS: i32 = 5;
pub const EXIT_SIZE_BOUND: i32 = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Trace(#[from] TraceFileError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("graph is not planar: {0}")]
    NonPlanar(String),
    #[error("vertex `{vertex}` has degree {degree}; maximum degree must be at most 3")]
    Degree { vertex: String, degree: usize },
    #[error("internal assertion in {kind}: {message} (diagnostic bundle: {bundle})")]
    Internal {
        kind: String,
        message: String,
        bundle: String,
    },
    #[error("{count} violations\n{listing}")]
    Violations { count: usize, listing: String },
    #[error("{0}")]
    SizeBound(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Document(_)
            | CliError::Trace(_)
            | CliError::Corpus(_)
            | CliError::Io { .. }
            | CliError::Usage(_) => EXIT_USAGE,
            CliError::NonPlanar(_) => EXIT_NON_PLANAR,
            CliError::Degree { .. } => EXIT_DEGREE,
            CliError::Internal { .. } => EXIT_INTERNAL,
            CliError::Violations { .. } => EXIT_VIOLATIONS,
            CliError::SizeBound(_) => EXIT_SIZE_BOUND,
        }
    }
}

/// What a successful command prints.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> Result<LoadedGraph, CliError> {
    Ok(GraphDocument::read(path)?.load()?)
}

/// Writes `text` to `path`, or returns it for stdout.
fn emit(path: Option<&Path>, text: String, out: &mut Outcome) -> Result<(), CliError> {
    match path {
        Some(p) => write(p, &text),
        None => {
            out.stdout.push_str(&text);
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ColorArgs {
    pub input: PathBuf,
    pub out: Option<PathBuf>,
    pub trace: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub palette: usize,
    /// Fail with exit 4 on the first failed proof-step check instead of
    /// recovering by exact search.
    pub strict: bool,
    pub diagnostic: Option<PathBuf>,
}

#[derive(Serialize)]
struct DiagnosticBundle<'a> {
    format_version: u32,
    graph: GraphDocument,
    diagnostics: &'a [DiagnosticRecord],
}

fn bundle_path(args: &ColorArgs) -> PathBuf {
    if let Some(p) = &args.diagnostic {
        return p.clone();
    }
    match &args.out {
        Some(out) => {
            let mut name = out.file_name().unwrap_or_default().to_os_string();
            name.push(".diagnostic.json");
            out.with_file_name(name)
        }
        None => PathBuf::from("d2color-diagnostic.json"),
    }
}

fn write_bundle(g: &LoadedGraph, diagnostics: &[Diagnostic], path: &Path) -> Result<(), CliError> {
    let trace = d2color::reducer::ReductionTrace {
        steps: Vec::new(),
        diagnostics: diagnostics.to_vec(),
    };
    let records = TraceDocument::from_trace(&trace, g, 0).diagnostics;
    let bundle = DiagnosticBundle {
        format_version: FORMAT_VERSION,
        graph: g.document(None, None),
        diagnostics: &records,
    };
    let mut text = serde_json::to_string_pretty(&bundle).expect("bundles always serialize");
    text.push('\n');
    write(path, &text)
}

pub fn color(args: &ColorArgs) -> Result<Outcome, CliError> {
    let g = load(&args.input)?;
    let colorer = Colorer::new(ColorOptions {
        palette: args.palette,
        fallback: !args.strict,
        ..ColorOptions::default()
    });
    let (coloring, trace) = match colorer.color(&g.graph) {
        Ok(result) => result,
        Err(ColorError::NonPlanar(np)) => return Err(CliError::NonPlanar(np.to_string())),
        Err(ColorError::DegreeViolation { vertex, degree }) => {
            return Err(CliError::Degree {
                vertex: g.name(vertex).to_string(),
                degree,
            })
        }
        Err(ColorError::Palette(p)) => {
            return Err(CliError::Usage(format!("palette {p} is outside 8..=64")))
        }
        Err(ColorError::InternalAssertion(diagnostic)) => {
            let path = bundle_path(args);
            write_bundle(&g, std::slice::from_ref(&diagnostic), &path)?;
            return Err(CliError::Internal {
                kind: diagnostic.kind.to_string(),
                message: diagnostic.message.clone(),
                bundle: path.display().to_string(),
            });
        }
    };

    let mut out = Outcome::default();
    let doc = g.document(None, Some(&coloring));
    emit(args.out.as_deref(), doc.to_text(), &mut out)?;
    if let Some(path) = &args.trace {
        write(path, &TraceDocument::from_trace(&trace, &g, args.palette).to_text())?;
    }
    if let Some(path) = &args.svg {
        let e = embed(&g.graph).map_err(|np| CliError::NonPlanar(np.to_string()))?;
        write(path, &crate::svg::render(&g, &e, Some(&coloring)))?;
    }
    if !trace.diagnostics.is_empty() {
        let path = bundle_path(args);
        write_bundle(&g, &trace.diagnostics, &path)?;
        out.stderr.push_str(&format!(
            "warning: {} proof-step checks failed and were recovered by exact search; see {}\n",
            trace.diagnostics.len(),
            path.display()
        ));
    }
    out.stderr.push_str(&format!(
        "colored {} vertices with {} colors in {} steps\n",
        g.graph.vertex_count(),
        coloring.colors_used(),
        trace.steps.len()
    ));
    Ok(out)
}

pub fn verify(graph: &Path, coloring: &Path) -> Result<Outcome, CliError> {
    let g = load(graph)?;
    let doc = GraphDocument::read(coloring)?;
    let map = doc
        .coloring
        .ok_or_else(|| CliError::Usage(format!("{} has no coloring", coloring.display())))?;
    let mut colors = std::collections::BTreeMap::new();
    for (name, c) in map {
        let v = g
            .names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| CliError::Usage(format!("coloring names unknown vertex `{name}`")))?;
        colors.insert(v as u32, c);
    }
    let widest = colors.values().max().map_or(1, |&c| c + 1);
    let c = Coloring::from_map(widest, colors);
    match verify_coloring(&g.graph, &c) {
        Ok(Verdict::Valid) => Ok(Outcome {
            stdout: format!(
                "valid: {} vertices, {} colors\n",
                g.graph.vertex_count(),
                c.colors_used()
            ),
            stderr: String::new(),
        }),
        Ok(Verdict::Invalid(violations)) => {
            let listing = violations
                .iter()
                .map(|x| {
                    let (u, v) = (g.name(x.u), g.name(x.v));
                    let color = c.get(x.u).unwrap();
                    match (x.relation, x.witness) {
                        (Relation::FirstOrder, _) | (_, None) => {
                            format!("`{u}` and `{v}` are adjacent and share color {color}")
                        }
                        (Relation::SecondOrder, Some(w)) => format!(
                            "`{u}` and `{v}` share color {color} and are both adjacent to `{}`",
                            g.name(w)
                        ),
                    }
                })
                .collect::<Vec<_>>()
                .join("\n");
            Err(CliError::Violations {
                count: violations.len(),
                listing,
            })
        }
        Err(OracleError::Partial(missing)) => Err(CliError::Usage(format!(
            "coloring is partial: {} uncolored vertices (first: `{}`)",
            missing.len(),
            g.name(missing[0])
        ))),
        Err(e) => Err(CliError::Usage(e.to_string())),
    }
}

pub fn chromatic(graph: &Path, max: usize, bound: Option<usize>) -> Result<Outcome, CliError> {
    if !(1..=64).contains(&max) {
        return Err(CliError::Usage(format!("--max {max} is outside 1..=64")));
    }
    let g = load(graph)?;
    let bound = bound.unwrap_or(DEFAULT_SIZE_BOUND);
    let stdout = match exact_chromatic2_bounded(&g.graph, max, bound) {
        Ok(Chromatic::Exact { colors, .. }) => format!("{colors}\n"),
        Ok(Chromatic::Exceeds(k)) => format!("exceeds {k}\n"),
        Err(e @ OracleError::SizeBound { .. }) => return Err(CliError::SizeBound(e.to_string())),
        Err(e) => return Err(CliError::Usage(e.to_string())),
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
    })
}

/// Resolves a relative output path against the fixture root override.
pub fn fixture_path(out: &Path) -> PathBuf {
    match std::env::var_os(FIXTURE_ROOT_VAR) {
        Some(root) if out.is_relative() => Path::new(&root).join(out),
        _ => out.to_path_buf(),
    }
}

pub fn gen(spec: &str, out: Option<&Path>) -> Result<Outcome, CliError> {
    let spec: GeneratorSpec = spec.parse()?;
    let g = build(&spec)?;
    let text = GraphDocument::from_graph(&g).to_text();
    let mut outcome = Outcome::default();
    match out {
        Some(p) => {
            let path = fixture_path(p);
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(|source| CliError::Io {
                    path: parent.display().to_string(),
                    source,
                })?;
            }
            write(&path, &text)?;
            outcome.stderr = format!("wrote {spec} to {}\n", path.display());
        }
        None => outcome.stdout = text,
    }
    Ok(outcome)
}

pub fn dot(input: &Path) -> Result<Outcome, CliError> {
    let g = load(input)?;
    let coloring = g.coloring(8);
    Ok(Outcome {
        stdout: crate::dot::to_dot(&g, coloring.as_ref()),
        stderr: String::new(),
    })
}

/// Writes the document with a planar rotation system and reports the faces.
pub fn embed_cmd(input: &Path, out: Option<&Path>) -> Result<Outcome, CliError> {
    let g = load(input)?;
    let e = embed(&g.graph).map_err(|np| CliError::NonPlanar(np.to_string()))?;
    euler_check(&e).map_err(|err| CliError::NonPlanar(err.to_string()))?;
    let mut outcome = Outcome::default();
    let coloring = g.coloring(8);
    emit(out, g.document(Some(&e), coloring.as_ref()).to_text(), &mut outcome)?;
    let faces = e.faces();
    let lengths: Vec<String> = faces.iter().map(|f| f.len().to_string()).collect();
    outcome.stderr = format!("{} faces of lengths {}\n", faces.len(), lengths.join(" "));
    Ok(outcome)
}

/// Rebuilds a coloring from a trace file and checks it.
pub fn replay(graph: &Path, trace: &Path, out: Option<&Path>) -> Result<Outcome, CliError> {
    let g = load(graph)?;
    let text = std::fs::read_to_string(trace).map_err(|source| CliError::Io {
        path: trace.display().to_string(),
        source,
    })?;
    let doc: TraceDocument = serde_json::from_str(&text).map_err(|source| DocumentError::Json {
        path: trace.display().to_string(),
        source,
    })?;
    let rebuilt = doc
        .to_trace(&g)?
        .replay(&g.graph, doc.palette)
        .map_err(|e| CliError::Usage(format!("replay failed: {e}")))?;
    match verify_coloring(&g.graph, &rebuilt) {
        Ok(Verdict::Valid) => {}
        _ => {
            return Err(CliError::Usage(
                "replayed coloring is not a distance-2 coloring".to_string(),
            ))
        }
    }
    let mut outcome = Outcome::default();
    emit(out, g.document(None, Some(&rebuilt)).to_text(), &mut outcome)?;
    Ok(outcome)
}
