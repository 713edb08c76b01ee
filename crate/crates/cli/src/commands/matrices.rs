use std::path::Path;

use crate::error::CliResult;
use crate::format::{create_dir, labelled_matrix, write_file};

use super::load_hypergraph;

pub fn run(input: &Path, out: &Path) -> CliResult<String> {
    let h = load_hypergraph(input)?;
    create_dir(out)?;
    let files = [
        (
            "incidence.csv",
            labelled_matrix(&h.incidence_matrix(), "v", "e"),
        ),
        (
            "vertex_degree.csv",
            labelled_matrix(&h.vertex_degree_matrix(), "v", "v"),
        ),
        (
            "edge_degree.csv",
            labelled_matrix(&h.edge_degree_matrix(), "e", "e"),
        ),
        (
            "edge_weight.csv",
            labelled_matrix(&h.edge_weight_matrix(), "e", "e"),
        ),
        (
            "edge_weight_sum.csv",
            labelled_matrix(&h.edge_weight_sum_matrix(), "e", "e"),
        ),
        (
            "adjacency.csv",
            labelled_matrix(&h.adjacency_matrix(), "v", "v"),
        ),
        (
            "laplacian.csv",
            labelled_matrix(&h.momentum_laplacian(), "v", "v"),
        ),
        (
            "position_laplacian.csv",
            labelled_matrix(&h.position_laplacian(), "v", "v"),
        ),
    ];
    let mut summary = String::new();
    for (name, csv) in &files {
        let path = out.join(name);
        write_file(&path, csv)?;
        summary.push_str(&format!("wrote {}\n", path.display()));
    }
    Ok(summary)
}
