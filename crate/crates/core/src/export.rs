//! Text interchange formats for built graphs.
//!
//! Matrix Market (coordinate, integer, symmetric) writes the lower triangle
//! including the diagonal, 1-based, one entry per line. The edge list writes
//! `u v multiplicity` for `u <= v`, 1-based, with loops as `u u count`.

use std::fmt::Write;

use serde::Serialize;

use crate::graph::{GraphKind, LoopyGraph, VertexLabel};

pub const MATRIX_MARKET_HEADER: &str = "%%MatrixMarket matrix coordinate integer symmetric";

pub fn to_matrix_market(g: &LoopyGraph) -> String {
    let n = g.vertex_count();
    let mut entries = Vec::new();
    for col in 0..n {
        for row in col..n {
            let m = g.multiplicity(row, col);
            if m > 0 {
                entries.push((row + 1, col + 1, m));
            }
        }
    }
    let mut out = String::new();
    writeln!(out, "{MATRIX_MARKET_HEADER}").unwrap();
    writeln!(out, "% {}", g.kind()).unwrap();
    writeln!(out, "{n} {n} {}", entries.len()).unwrap();
    for (r, c, m) in entries {
        writeln!(out, "{r} {c} {m}").unwrap();
    }
    out
}

pub fn to_edge_list(g: &LoopyGraph) -> String {
    let mut out = String::new();
    for u in 0..g.vertex_count() {
        if g.loops(u) > 0 {
            writeln!(out, "{} {} {}", u + 1, u + 1, g.loops(u)).unwrap();
        }
        for &(v, m) in g.neighbors(u).iter().filter(|&&(v, _)| v > u) {
            writeln!(out, "{} {} {m}", u + 1, v + 1).unwrap();
        }
    }
    out
}

#[derive(Debug, Serialize)]
pub struct LabelTable<'a> {
    pub graph: GraphKind,
    pub vertex_count: usize,
    pub vertices: Vec<LabelEntry<'a>>,
}

#[derive(Debug, Serialize)]
pub struct LabelEntry<'a> {
    /// 1-based, matching the other export formats.
    pub index: usize,
    pub rank: usize,
    pub label: &'a VertexLabel,
}

pub fn label_table(g: &LoopyGraph) -> LabelTable<'_> {
    LabelTable {
        graph: g.kind(),
        vertex_count: g.vertex_count(),
        vertices: g
            .labels()
            .iter()
            .enumerate()
            .map(|(rank, label)| LabelEntry {
                index: rank + 1,
                rank,
                label,
            })
            .collect(),
    }
}

pub fn to_label_json(g: &LoopyGraph) -> String {
    let mut s = serde_json::to_string_pretty(&label_table(g)).expect("label table serializes");
    s.push('\n');
    s
}
