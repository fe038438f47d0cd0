//! Graph files: JSON edge lists and Graphviz DOT export.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GridCoord};

/// On-disk form: `{"n": 3, "edges": [[0, 1], [1, 2]]}` with 0-based ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile { n: g.n(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }
}

impl GraphFile {
    pub fn into_graph(self) -> Result<Graph> {
        let pairs: Vec<_> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let (g, dups) = Graph::from_edges_counting(self.n, &pairs)?;
        if dups > 0 {
            log::warn!("graph file listed {dups} duplicate edge(s); merged");
        }
        Ok(g)
    }
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphFile>(text)?.into_graph()
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphFile::from(g)).expect("graph file serializes")
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let file: GraphFile =
        serde_json::from_str(&text).map_err(|e| Error::Malformed { path: path.to_owned(), msg: e.to_string() })?;
    file.into_graph()
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, graph_to_json(g) + "\n")?;
    Ok(())
}

/// DOT text labelling nodes by id. With `grid_side`, nodes get `pos`
/// attributes from their grid coordinates (row 1 at the top).
pub fn to_dot(g: &Graph, grid_side: Option<usize>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match grid_side {
            Some(side) => {
                let c = GridCoord::from_id(v, side);
                let _ = writeln!(out, "  {v} [label=\"{v}\", pos=\"{},{}!\"];", c.col, side + 1 - c.row);
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{v}\"];");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn export_dot(g: &Graph, path: impl AsRef<Path>, grid_side: Option<usize>) -> Result<()> {
    fs::write(path, to_dot(g, grid_side))?;
    Ok(())
}
