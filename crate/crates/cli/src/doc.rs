//! JSON documents: every file carries a `kind` tag and `"version": 1`.

use std::io::{Read, Write};

use edgematch::euler::{EdgeId, MultiDigraph, MultiGraph, VertexId};
use edgematch::games::{GameInstance, GeoGraph, GeoInstance, GeoRule, Partizan};
use edgematch::model::{Instance, Solution};
use edgematch::reductions::{Cnf, Ipc};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const VERSION: u32 = 1;

/// Vertex list plus `[id, tail, head, directed]` edges. All edges must agree
/// on `directed`; an edgeless graph is undirected unless `directed` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphBody {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(EdgeId, VertexId, VertexId, bool)>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub directed: bool,
    /// Path endpoints, when the graph comes with them.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ends: Option<(VertexId, VertexId)>,
}

impl GraphBody {
    pub fn from_graph(g: &GeoGraph, ends: Option<(VertexId, VertexId)>) -> GraphBody {
        let d = g.directed();
        GraphBody {
            vertices: (0..g.vertex_count()).collect(),
            edges: g.edges().iter().enumerate().map(|(i, &(a, b))| (i, a, b, d)).collect(),
            directed: d,
            ends,
        }
    }

    pub fn to_graph(&self) -> Result<GeoGraph, CliError> {
        let n = self.vertices.len();
        if self.vertices.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(CliError::Parse("vertices must be listed as 0..n".into()));
        }
        let mut directed = self.directed;
        if let Some(&(_, _, _, d)) = self.edges.first() {
            directed = d;
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, &(id, a, b, d)) in self.edges.iter().enumerate() {
            if id != i || d != directed || a >= n || b >= n {
                return Err(CliError::Parse(format!("bad edge entry {i}: ids run 0..m, endpoints < n, one direction flag")));
            }
            edges.push((a, b));
        }
        Ok(if directed {
            GeoGraph::Directed(MultiDigraph::with_edges(n, &edges))
        } else {
            GeoGraph::Undirected(MultiGraph::with_edges(n, &edges))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeoBody {
    pub graph: GraphBody,
    pub start: VertexId,
    pub rule: GeoRule,
    #[serde(default)]
    pub partizan: Partizan,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Doc {
    Instance {
        version: u32,
        #[serde(flatten)]
        instance: Instance,
    },
    Solution {
        version: u32,
        solution: Solution,
    },
    Cnf {
        version: u32,
        #[serde(flatten)]
        cnf: Cnf,
    },
    Ipc {
        version: u32,
        #[serde(flatten)]
        ipc: Ipc,
    },
    Graph {
        version: u32,
        #[serde(flatten)]
        graph: GraphBody,
    },
    Geo {
        version: u32,
        #[serde(flatten)]
        geo: GeoBody,
    },
    Game {
        version: u32,
        #[serde(flatten)]
        game: GameInstance,
    },
    /// Certificate-mapping sidecar written next to a reduction's output.
    Map {
        version: u32,
        stage: String,
        data: Value,
    },
}

impl Doc {
    pub fn version(&self) -> u32 {
        match self {
            Doc::Instance { version, .. }
            | Doc::Solution { version, .. }
            | Doc::Cnf { version, .. }
            | Doc::Ipc { version, .. }
            | Doc::Graph { version, .. }
            | Doc::Geo { version, .. }
            | Doc::Game { version, .. }
            | Doc::Map { version, .. } => *version,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Doc::Instance { .. } => "instance",
            Doc::Solution { .. } => "solution",
            Doc::Cnf { .. } => "cnf",
            Doc::Ipc { .. } => "ipc",
            Doc::Graph { .. } => "graph",
            Doc::Geo { .. } => "geo",
            Doc::Game { .. } => "game",
            Doc::Map { .. } => "map",
        }
    }

    pub fn instance(instance: Instance) -> Doc {
        Doc::Instance { version: VERSION, instance }
    }

    pub fn solution(solution: Solution) -> Doc {
        Doc::Solution { version: VERSION, solution }
    }

    pub fn graph(g: &GeoGraph, ends: Option<(VertexId, VertexId)>) -> Doc {
        Doc::Graph { version: VERSION, graph: GraphBody::from_graph(g, ends) }
    }

    pub fn geo(g: &GeoInstance) -> Doc {
        Doc::Geo {
            version: VERSION,
            geo: GeoBody {
                graph: GraphBody::from_graph(&g.graph, None),
                start: g.start,
                rule: g.rule,
                partizan: g.partizan.clone(),
            },
        }
    }

    pub fn parse(text: &str) -> Result<Doc, CliError> {
        let doc: Doc = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if doc.version() != VERSION {
            return Err(CliError::Parse(format!("unsupported version {}", doc.version())));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize") + "\n"
    }
}

impl GeoBody {
    pub fn to_geo(&self) -> Result<GeoInstance, CliError> {
        let g = GeoInstance {
            graph: self.graph.to_graph()?,
            start: self.start,
            rule: self.rule,
            partizan: self.partizan.clone(),
        };
        g.validate()?;
        Ok(g)
    }
}

/// Reads a file, or stdin for `-`.
pub fn read_doc(path: &str) -> Result<Doc, CliError> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    Doc::parse(&text)
}

/// Writes a file, or stdout for `-`.
pub fn write_doc(path: &str, doc: &Doc) -> Result<(), CliError> {
    let text = doc.to_json();
    if path == "-" {
        std::io::stdout().write_all(text.as_bytes())?;
    } else {
        std::fs::write(path, text)?;
    }
    Ok(())
}
