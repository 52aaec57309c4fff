use std::io::Read;

use sha2::{Digest, Sha256};
use tollhull::graph::{fixture, parse_graph, to_edge_list, InputFormat};
use tollhull::{Error, Graph};

use crate::CliError;

/// A parsed graph together with what it was read from.
pub struct Input {
    pub source: String,
    pub graph: Graph,
    pub sha256: String,
}

/// Reads `FILE`, `-` for stdin, or `fixture:NAME`.
pub fn load(path: &str, format: InputFormat) -> Result<Input, CliError> {
    let (text, graph) = if let Some(name) = path.strip_prefix("fixture:") {
        let g = fixture(name).ok_or_else(|| CliError::usage(format!("unknown fixture `{name}`")))?;
        (to_edge_list(&g), g)
    } else {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::usage(format!("stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{path}: {e}")))?
        };
        let g = parse_graph(&text, format)?;
        (text, g)
    };
    Ok(Input { source: path.to_string(), graph, sha256: hex(&Sha256::digest(text.as_bytes())) })
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn vertex(g: &Graph, label: &str) -> Result<usize, CliError> {
    g.vertex_by_label(label).ok_or_else(|| CliError::usage(format!("no vertex labelled `{label}`")))
}

pub fn vertex_list(g: &Graph, list: &str) -> Result<Vec<usize>, CliError> {
    let ids = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|l| vertex(g, l))
        .collect::<Result<Vec<_>, _>>()?;
    if ids.is_empty() {
        return Err(Error::InvalidArgument("empty vertex set".into()).into());
    }
    Ok(ids)
}
