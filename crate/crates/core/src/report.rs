//! JSON documents emitted by the command-line tool.
//!
//! Every document is an [`Envelope`] carrying the schema version, the
//! command name and a command-specific `result`. Field order is fixed by the
//! struct definitions, so output is byte-stable. The layout is described in
//! `docs/report-schema.md`.

use serde::Serialize;

use crate::constructions::PushOffCase;
use crate::invariants::InvariantReport;
use crate::moves::MoveInstance;
use crate::obstructions::{GenusBound, SliceCertificate, SteinReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema_version: u32,
    pub command: &'static str,
    pub result: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &'static str, result: T) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report types serialize")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsDoc {
    pub word: String,
    pub invariants: InvariantReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct PushOffDoc {
    pub word: String,
    pub framing: i64,
    pub knot_index: usize,
    pub companion_index: usize,
    pub stab_count: usize,
    pub positive_twists: usize,
    pub case: PushOffCase,
    pub invariants: InvariantReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct DoubleDoc {
    pub word: String,
    pub iterations: usize,
    pub invariants: InvariantReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct LegendrianizeDoc {
    pub grid_size: usize,
    pub word: String,
    pub invariants: InvariantReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzDoc {
    pub steps: usize,
    pub seed: u64,
    pub allow_stab: bool,
    pub applied: usize,
    pub skipped: usize,
    pub net_stabilizations: i64,
    pub word_before: String,
    pub word_after: String,
    pub before: InvariantReport,
    pub after: InvariantReport,
    /// invariants agree (up to the stabilization count when enabled)
    pub invariance_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SteinDoc {
    pub word: String,
    pub report: SteinReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct SliceDoc {
    pub word: String,
    pub certificate: SliceCertificate,
}

#[derive(Debug, Clone, Serialize)]
pub struct GenusDoc {
    pub word: String,
    pub bounds: Vec<GenusBound>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentCheck {
    pub component: usize,
    pub writhe: i64,
    pub oracle_writhe: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LinkingCheck {
    pub pair: [usize; 2],
    pub linking: i64,
    pub oracle_linking: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyDoc {
    pub word: String,
    pub pd: String,
    pub components: Vec<ComponentCheck>,
    pub linking: Vec<LinkingCheck>,
    /// `None` when the diagram exceeds the state-sum cap
    pub bracket: Option<String>,
    pub agrees: bool,
}

/// Stabilization sites named in a Stein report, for display.
pub fn describe_sites(sites: &[MoveInstance]) -> Vec<String> {
    sites.iter().map(ToString::to_string).collect()
}
