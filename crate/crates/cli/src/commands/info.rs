use std::path::Path;

use crate::error::CliResult;

use super::{join, load_hypergraph};

pub fn run(input: &Path) -> CliResult<String> {
    let h = load_hypergraph(input)?;
    let empty = h.edges().iter().filter(|e| e.is_empty()).count();
    Ok(format!(
        "vertices: {}\nhyperedges: {}\nvertex weights: {}\nhyperedge weights: {}\n\
         vertex degrees: {}\nhyperedge degrees: {}\nempty hyperedges: {empty}\n",
        h.n_vertices(),
        h.n_edges(),
        join(h.vertex_weights()),
        join(&h.edge_weights()),
        join(&h.vertex_degrees()),
        join(&h.edge_degrees()),
    ))
}
