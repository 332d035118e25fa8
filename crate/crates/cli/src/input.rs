//! Graph loading from bundled fixtures or edge-list files.

use std::path::Path;

use anyhow::Context;
use kclique_core::graph::{fixtures, parse_edge_list};
use kclique_core::Graph;

/// A loaded graph and where it came from.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub source: String,
}

/// `g4`, `g6` and `star4` name bundled graphs; anything else is read as an
/// edge-list file.
pub fn load_graph(spec: &str) -> anyhow::Result<LoadedGraph> {
    if let Some(graph) = fixtures::by_name(spec) {
        return Ok(LoadedGraph {
            graph,
            source: spec.into(),
        });
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("graph {spec:?} is not a bundled name and could not be read"))?;
    let graph = parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(LoadedGraph {
        graph,
        source: path.display().to_string(),
    })
}
