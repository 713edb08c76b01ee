use std::path::Path;

use clap::Args;
use serde::Serialize;
use whn_core::hyperstate::{boolean_function, encode_hypergraph, encode_partitioned};
use whn_core::{PartitionEnsemble, StateVector64};

use crate::error::{invalid, CliResult};
use crate::format::{create_dir, sig17, to_json, write_file};

use super::load_hypergraph;

/// Tolerance for the equal-weight check in the report.
const EQUAL_WEIGHT_TOL: f64 = 1e-12;
/// Bitstrings with `f(v) = 1` listed in the report before truncating.
const LISTED_ONES: usize = 16;

#[derive(Debug, Clone, Args)]
pub struct EncodeArgs {
    pub input: std::path::PathBuf,
    /// Vertex parts, 1-based, e.g. "1,4|2,3".
    #[arg(long)]
    pub partition: Option<String>,
    /// Balance tolerance for the partition report.
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    /// Also apply a controlled-Z over all qubits.
    #[arg(long)]
    pub with_global_gate: bool,
}

/// One line per basis state: bitstring (qubit 1 leftmost), real, imaginary.
pub fn state_dump(s: &StateVector64) -> String {
    let mut out = String::with_capacity(s.amplitudes().len() * 64);
    for (v, a) in s.amplitudes().iter().enumerate() {
        out.push_str(&s.bitstring(v));
        out.push(' ');
        out.push_str(&sig17(a.re));
        out.push(' ');
        out.push_str(&sig17(a.im));
        out.push('\n');
    }
    out
}

/// Parses "1,4|2,3" into 0-based parts.
pub fn parse_partition(spec: &str, n_vertices: usize) -> CliResult<Vec<Vec<usize>>> {
    spec.split('|')
        .enumerate()
        .map(|(k, part)| {
            part.split(',')
                .map(str::trim)
                .enumerate()
                .map(|(i, label)| {
                    let v: usize = label.parse().map_err(|_| {
                        invalid(format!(
                            "partition part {}, entry {}: '{label}' is not a vertex",
                            k + 1,
                            i + 1
                        ))
                    })?;
                    if v == 0 || v > n_vertices {
                        return Err(invalid(format!(
                            "partition part {}, entry {}: vertex {v} out of range 1..={n_vertices}",
                            k + 1,
                            i + 1
                        )));
                    }
                    Ok(v - 1)
                })
                .collect()
        })
        .collect()
}

#[derive(Serialize)]
struct BooleanSummary {
    ones: usize,
    zeros: usize,
    /// First bitstrings with `f(v) = 1`, ascending.
    ones_listed: Vec<String>,
}

#[derive(Serialize)]
struct PartitionSummary {
    parts: Vec<Vec<usize>>,
    part_weights: Vec<f64>,
    mean_weight: f64,
    bound: f64,
    delta: f64,
    balanced: bool,
    cut_cost: usize,
    part_files: Vec<String>,
    product_file: String,
    product_equals_whole: bool,
}

#[derive(Serialize)]
struct EncodeReport {
    n_qubits: usize,
    global_gate: bool,
    /// Empty hyperedges each contribute a global factor of −1.
    empty_hyperedges: usize,
    real_equally_weighted: bool,
    boolean_function: BooleanSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    partition: Option<PartitionSummary>,
}

pub fn run(args: &EncodeArgs, out: &Path) -> CliResult<String> {
    let h = load_hypergraph(&args.input)?;
    let parts = args
        .partition
        .as_deref()
        .map(|spec| parse_partition(spec, h.n_vertices()))
        .transpose()?;
    let state: StateVector64 = encode_hypergraph(&h, args.with_global_gate)?;
    let table = boolean_function(&h)?;
    create_dir(out)?;
    write_file(&out.join("state.txt"), &state_dump(&state))?;

    let partition = match parts {
        None => None,
        Some(parts) => {
            let ensemble = PartitionEnsemble::new(&h, parts, args.delta)?;
            let balance = ensemble.is_balanced()?;
            let encoding = encode_partitioned::<f64, f64>(&ensemble)?;
            let mut part_files = Vec::new();
            for (k, s) in encoding.parts.iter().enumerate() {
                let name = format!("part_{}.txt", k + 1);
                write_file(&out.join(&name), &state_dump(s))?;
                part_files.push(name);
            }
            write_file(&out.join("product.txt"), &state_dump(&encoding.product))?;
            let whole: StateVector64 = encode_hypergraph(&h, false)?;
            Some(PartitionSummary {
                parts: ensemble
                    .parts()
                    .iter()
                    .map(|p| p.iter().map(|&v| v + 1).collect())
                    .collect(),
                part_weights: balance.part_weights,
                mean_weight: balance.mean,
                bound: balance.bound,
                delta: args.delta,
                balanced: balance.balanced,
                cut_cost: ensemble.cut_cost()?,
                part_files,
                product_file: "product.txt".into(),
                product_equals_whole: encoding.product == whole,
            })
        }
    };

    let report = EncodeReport {
        n_qubits: state.n_qubits(),
        global_gate: args.with_global_gate,
        empty_hyperedges: h.edges().iter().filter(|e| e.is_empty()).count(),
        real_equally_weighted: state.is_real_equally_weighted(EQUAL_WEIGHT_TOL),
        boolean_function: BooleanSummary {
            ones: table.count_ones(),
            zeros: table.outputs().len() - table.count_ones(),
            ones_listed: (0..table.outputs().len())
                .filter(|&v| table.eval(v))
                .take(LISTED_ONES)
                .map(|v| state.bitstring(v))
                .collect(),
        },
        partition,
    };
    write_file(&out.join("report.json"), &to_json(&report))?;

    let mut summary = format!(
        "encoded {} qubits into {}\nreal equally weighted: {}\n",
        report.n_qubits,
        out.join("state.txt").display(),
        report.real_equally_weighted
    );
    if let Some(p) = &report.partition {
        summary.push_str(&format!(
            "parts: {}, cut cost: {}, balanced at delta {}: {}\n",
            p.parts.len(),
            p.cut_cost,
            p.delta,
            p.balanced
        ));
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_spec() {
        assert_eq!(
            parse_partition("1,4|2,3", 4).unwrap(),
            vec![vec![0, 3], vec![1, 2]]
        );
        assert_eq!(parse_partition(" 2 , 1 ", 2).unwrap(), vec![vec![1, 0]]);
        let err = parse_partition("1,5|2", 4).unwrap_err().to_string();
        assert_eq!(
            err,
            "partition part 1, entry 2: vertex 5 out of range 1..=4"
        );
        assert!(parse_partition("1,|2", 4).is_err());
        assert!(parse_partition("a", 4).is_err());
    }

    #[test]
    fn dump_format() {
        let s = StateVector64::plus(1).unwrap().apply_ckz(&[0]).unwrap();
        assert_eq!(
            state_dump(&s),
            "0 7.0710678118654757e-1 0.0000000000000000e0\n\
             1 -7.0710678118654757e-1 0.0000000000000000e0\n"
        );
    }
}
