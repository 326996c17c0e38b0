//! On-disk JSON documents.
//!
//! Every document carries a `kind` tag and a format `version`. Unknown
//! fields are rejected. Floats are written in shortest round-trip form, so
//! parsing a written document gives back the same bits.

use affine_rigidity::registration::{Scan, ScanSet, Trust};
use affine_rigidity::rigidity::Configuration;
use affine_rigidity::{Graph, Hypergraph};
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Graph,
    Hypergraph,
    Framework,
    Scanset,
    Report,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Graph => "graph",
            Kind::Hypergraph => "hypergraph",
            Kind::Framework => "framework",
            Kind::Scanset => "scanset",
            Kind::Report => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub kind: Kind,
    pub version: u32,
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDoc {
    pub kind: Kind,
    pub version: u32,
    pub vertex_count: usize,
    pub hyperedges: Vec<Vec<usize>>,
    /// Display names of the vertices, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameworkDoc {
    pub kind: Kind,
    pub version: u32,
    pub dim: usize,
    pub coordinates: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanDoc {
    pub hyperedge: Vec<usize>,
    /// One point per entry of `hyperedge`, in the same order.
    pub coordinates: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanSetDoc {
    pub kind: Kind,
    pub version: u32,
    pub vertex_count: usize,
    pub dim: usize,
    pub trust: Trust,
    pub scans: Vec<ScanDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timing {
    pub seconds: f64,
}

/// Machine-readable outcome of a command. `timing` is the only field that
/// may differ between identical runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub kind: Kind,
    pub version: u32,
    pub command: String,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_corank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residuals: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing: Timing,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            kind: Kind::Report,
            version: FORMAT_VERSION,
            command: command.to_string(),
            exit_code: 0,
            verdict: None,
            corank: None,
            expected_corank: None,
            certificate: None,
            residuals: None,
            details: None,
            seed: None,
            tol: None,
            error: None,
            timing: Timing { seconds: 0.0 },
        }
    }
}

/// A parsed document of any kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Graph(GraphDoc),
    Hypergraph(HypergraphDoc),
    Framework(FrameworkDoc),
    ScanSet(ScanSetDoc),
    Report(Report),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Graph(_) => Kind::Graph,
            Document::Hypergraph(_) => Kind::Hypergraph,
            Document::Framework(_) => Kind::Framework,
            Document::ScanSet(_) => Kind::Scanset,
            Document::Report(_) => Kind::Report,
        }
    }

    pub fn to_json(&self) -> String {
        let s = match self {
            Document::Graph(d) => serde_json::to_string_pretty(d),
            Document::Hypergraph(d) => serde_json::to_string_pretty(d),
            Document::Framework(d) => serde_json::to_string_pretty(d),
            Document::ScanSet(d) => serde_json::to_string_pretty(d),
            Document::Report(d) => serde_json::to_string_pretty(d),
        };
        let mut s = s.expect("documents always serialize");
        s.push('\n');
        s
    }
}

#[derive(Deserialize)]
struct Peek {
    kind: Option<Value>,
}

fn parse_error(source: &str, e: &serde_json::Error) -> CliError {
    CliError::Parse {
        path: source.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses any document. The `kind` tag is read first, then the text is
/// parsed again as the typed document so errors point at the real position.
pub fn parse_document(text: &str, source: &str) -> Result<Document, CliError> {
    let peek: Peek = serde_json::from_str(text).map_err(|e| parse_error(source, &e))?;
    let kind = match peek.kind {
        None => {
            return Err(CliError::Parse {
                path: source.to_string(),
                line: 1,
                column: 1,
                message: "missing field `kind`".into(),
            })
        }
        Some(v) => serde_json::from_value::<Kind>(v.clone()).map_err(|_| CliError::Parse {
            path: source.to_string(),
            line: 1,
            column: 1,
            message: format!("unknown document kind {v}"),
        })?,
    };
    let doc = match kind {
        Kind::Graph => serde_json::from_str(text).map(Document::Graph),
        Kind::Hypergraph => serde_json::from_str(text).map(Document::Hypergraph),
        Kind::Framework => serde_json::from_str(text).map(Document::Framework),
        Kind::Scanset => serde_json::from_str(text).map(Document::ScanSet),
        Kind::Report => serde_json::from_str(text).map(Document::Report),
    }
    .map_err(|e| parse_error(source, &e))?;
    let version = match &doc {
        Document::Graph(d) => d.version,
        Document::Hypergraph(d) => d.version,
        Document::Framework(d) => d.version,
        Document::ScanSet(d) => d.version,
        Document::Report(d) => d.version,
    };
    if version != FORMAT_VERSION {
        return Err(CliError::Usage(format!(
            "{source}: unsupported format version {version} (expected {FORMAT_VERSION})"
        )));
    }
    Ok(doc)
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc {
            kind: Kind::Graph,
            version: FORMAT_VERSION,
            vertex_count: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, w)| [u, w]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, CliError> {
        Ok(Graph::new(self.vertex_count, self.edges.iter().map(|e| (e[0], e[1])))?)
    }
}

impl HypergraphDoc {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        HypergraphDoc {
            kind: Kind::Hypergraph,
            version: FORMAT_VERSION,
            vertex_count: h.vertex_count(),
            hyperedges: h.hyperedges().to_vec(),
            labels: None,
        }
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph, CliError> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.vertex_count {
                return Err(CliError::Usage(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    self.vertex_count
                )));
            }
        }
        Ok(Hypergraph::new(self.vertex_count, self.hyperedges.iter().cloned())?)
    }
}

impl FrameworkDoc {
    pub fn from_config(c: &Configuration) -> Self {
        FrameworkDoc {
            kind: Kind::Framework,
            version: FORMAT_VERSION,
            dim: c.dim(),
            coordinates: c.to_rows(),
        }
    }

    pub fn to_config(&self) -> Result<Configuration, CliError> {
        Ok(Configuration::from_rows(self.dim, &self.coordinates)?)
    }
}

impl ScanSetDoc {
    pub fn from_scanset(s: &ScanSet) -> Self {
        ScanSetDoc {
            kind: Kind::Scanset,
            version: FORMAT_VERSION,
            vertex_count: s.vertex_count(),
            dim: s.dim(),
            trust: s.trust(),
            scans: s
                .scans()
                .iter()
                .map(|scan| ScanDoc {
                    hyperedge: scan.hyperedge().to_vec(),
                    coordinates: scan
                        .coords()
                        .row_iter()
                        .map(|r| r.iter().copied().collect())
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_scanset(&self) -> Result<ScanSet, CliError> {
        let mut scans = Vec::with_capacity(self.scans.len());
        for s in &self.scans {
            if let Some(bad) = s.coordinates.iter().find(|p| p.len() != self.dim) {
                return Err(CliError::Usage(format!(
                    "scan {:?} has a {}-dimensional point, expected {}",
                    s.hyperedge,
                    bad.len(),
                    self.dim
                )));
            }
            let coords = DMatrix::from_fn(s.coordinates.len(), self.dim, |i, j| s.coordinates[i][j]);
            scans.push(Scan::new(s.hyperedge.clone(), coords)?);
        }
        Ok(ScanSet::new(self.vertex_count, self.dim, scans, self.trust)?)
    }
}
