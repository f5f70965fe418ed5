//! Reading clutters and graphs.
//!
//! JSON clutter: `{"vertices": [..], "edges": [[..], ..]}`.
//! JSON graph: `{"vertices": [..], "adjacency": [[a, b], ..]}`.
//! Plain text: the first line lists the vertex names separated by spaces,
//! every later nonblank line is one edge.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use clutterlab::{make_clutter, make_graph, Clutter, Graph};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClutterFile {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub adjacency: Vec<[String; 2]>,
}

#[derive(Debug, Clone)]
pub enum Parsed {
    Clutter(Clutter),
    Graph(Graph),
}

impl ClutterFile {
    pub fn from_clutter(c: &Clutter) -> Self {
        ClutterFile {
            vertices: c.set_names(c.ground()).into_iter().map(str::to_string).collect(),
            edges: c.edges().iter().map(|&e| c.set_names(e).into_iter().map(str::to_string).collect()).collect(),
        }
    }

    pub fn build(&self) -> Result<Clutter, CliError> {
        Ok(make_clutter(&self.vertices, &self.edges)?)
    }
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        let name = |v: usize| g.names()[v].clone();
        GraphFile {
            vertices: g.ground().iter().map(name).collect(),
            adjacency: g.edges().into_iter().map(|(a, b)| [name(a), name(b)]).collect(),
        }
    }

    pub fn build(&self) -> Result<Graph, CliError> {
        let pairs: Vec<(&str, &str)> = self.adjacency.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        Ok(make_graph(&self.vertices.iter().map(String::as_str).collect::<Vec<_>>(), &pairs)?)
    }
}

pub fn parse(text: &str) -> Result<Parsed, CliError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_plain(text).map(Parsed::Clutter)
    }
}

fn parse_json(text: &str) -> Result<Parsed, CliError> {
    let bad = |e: serde_json::Error| CliError::Input(format!("malformed JSON input: {e}"));
    let value: Value = serde_json::from_str(text).map_err(bad)?;
    let object = value.as_object().ok_or_else(|| CliError::Input("JSON input must be an object".into()))?;
    if object.contains_key("edges") {
        let file: ClutterFile = serde_json::from_value(value).map_err(bad)?;
        file.build().map(Parsed::Clutter)
    } else if object.contains_key("adjacency") {
        let file: GraphFile = serde_json::from_value(value).map_err(bad)?;
        file.build().map(Parsed::Graph)
    } else {
        Err(CliError::Input("JSON input needs an \"edges\" or an \"adjacency\" key".into()))
    }
}

fn parse_plain(text: &str) -> Result<Clutter, CliError> {
    let mut lines = text.lines();
    let vertices: Vec<&str> =
        lines.next().ok_or_else(|| CliError::Input("empty input".into()))?.split_whitespace().collect();
    let edges: Vec<Vec<&str>> =
        lines.filter(|l| !l.trim().is_empty()).map(|l| l.split_whitespace().collect()).collect();
    Ok(make_clutter(&vertices, &edges)?)
}

/// Reads `path`, or standard input when `path` is `-`.
pub fn read_source(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}
