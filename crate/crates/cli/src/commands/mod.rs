pub mod encode;
pub mod evolve;
pub mod info;
pub mod matrices;
pub mod transform;

use std::path::Path;

use whn_core::Hypergraph;

use crate::document::parse_hypergraph;
use crate::error::CliResult;
use crate::format::read_file;

pub fn load_hypergraph(path: &Path) -> CliResult<Hypergraph<f64>> {
    parse_hypergraph(&read_file(path)?)
}

fn join(xs: &[f64]) -> String {
    xs.iter()
        .map(|&x| crate::format::number(x))
        .collect::<Vec<_>>()
        .join(" ")
}
