//! JSON report envelope shared by every subcommand.
//!
//! `payload` is a pure function of the inputs; anything run-dependent goes
//! in `metadata`.

use std::time::Instant;

use serde::Serialize;
use startrans_core::exact::CoordinateMismatch;
use startrans_core::export::LabelEntry;
use startrans_core::graph::{MapCheck, VertexMap};
use startrans_core::numeric::SpectrumReport;
use startrans_core::GraphKind;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema_version: &'static str,
    pub kind: &'static str,
    pub payload: &'a T,
    pub metadata: Metadata,
}

#[derive(Debug, Serialize)]
pub struct Metadata {
    pub tool_version: &'static str,
    pub elapsed_ms: u64,
}

/// Pretty JSON with a trailing newline.
pub fn render<T: Serialize>(kind: &'static str, payload: &T, started: Instant) -> String {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        kind,
        payload,
        metadata: Metadata {
            tool_version: env!("CARGO_PKG_VERSION"),
            elapsed_ms: started.elapsed().as_millis() as u64,
        },
    };
    let mut s = serde_json::to_string_pretty(&envelope).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
pub struct GraphPayload<'a> {
    pub graph: GraphKind,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub loop_count: usize,
    pub regular_degree: Option<usize>,
    pub vertices: Vec<LabelEntry<'a>>,
    /// `[u, v, multiplicity]`, 1-based, `u <= v`; loops as `[u, u, count]`.
    pub edges: Vec<[usize; 3]>,
}

#[derive(Debug, Serialize)]
#[serde(tag = "method", rename_all = "lowercase")]
pub enum SpectrumPayload {
    Numeric {
        graph: GraphKind,
        report: SpectrumReport,
    },
    Nullity {
        graph: GraphKind,
        lambda: i64,
        nullity: usize,
    },
    Verify {
        graph: GraphKind,
        lambda: i64,
        passed: bool,
        first_failure: Option<CoordinateMismatch>,
    },
}

#[derive(Debug, Serialize)]
pub struct MapsPayload<'a> {
    pub map: &'a VertexMap,
    pub check: &'a MapCheck,
    pub fiber_size: Option<usize>,
    pub expected_fiber_size: usize,
}
