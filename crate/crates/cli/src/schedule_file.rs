//! The schedule file format: versioned JSON with a canonical writer.
//!
//! Writing is hand-rolled so that the output is byte-stable: fixed
//! field order, two-space indentation, one gate per line, and phases
//! printed with 17 significant digits (exact for f64), so
//! serialize -> parse -> serialize is byte-identical. Parsing accepts
//! any JSON with the right shape.

use serde::{Deserialize, Serialize};

use xyseq_core::{PulseGate, Schedule};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateEntry {
    pub pair: [usize; 2],
    pub phi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScheduleFile {
    pub version: u32,
    pub num_qubits: usize,
    pub gates: Vec<GateEntry>,
}

impl ScheduleFile {
    pub fn from_schedule(schedule: &Schedule) -> Self {
        ScheduleFile {
            version: FORMAT_VERSION,
            num_qubits: schedule.num_qubits(),
            gates: schedule
                .gates()
                .iter()
                .map(|g| GateEntry {
                    pair: [g.pair().0, g.pair().1],
                    phi: g.phi(),
                })
                .collect(),
        }
    }

    pub fn to_schedule(&self) -> Result<Schedule, String> {
        if self.version != FORMAT_VERSION {
            return Err(format!(
                "unsupported schedule file version {} (expected {})",
                self.version, FORMAT_VERSION
            ));
        }
        let mut s = Schedule::new(self.num_qubits).map_err(|e| e.to_string())?;
        for (k, g) in self.gates.iter().enumerate() {
            let gate = PulseGate::new(g.pair[0], g.pair[1], g.phi)
                .map_err(|e| format!("gate {k}: {e}"))?;
            s.push(gate).map_err(|e| format!("gate {k}: {e}"))?;
        }
        Ok(s)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("schedule file: {e}"))
    }

    /// Canonical text form; the writer, not serde, defines the bytes.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"version\": {},\n", self.version));
        out.push_str(&format!("  \"num_qubits\": {},\n", self.num_qubits));
        if self.gates.is_empty() {
            out.push_str("  \"gates\": []\n");
        } else {
            out.push_str("  \"gates\": [\n");
            for (k, g) in self.gates.iter().enumerate() {
                let comma = if k + 1 < self.gates.len() { "," } else { "" };
                out.push_str(&format!(
                    "    {{\"pair\": [{}, {}], \"phi\": {:.16e}}}{}\n",
                    g.pair[0], g.pair[1], g.phi, comma
                ));
            }
            out.push_str("  ]\n");
        }
        out.push_str("}\n");
        out
    }
}

pub fn read_schedule(path: &std::path::Path) -> Result<(ScheduleFile, Schedule), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file = ScheduleFile::parse(&text)?;
    let schedule = file.to_schedule()?;
    Ok((file, schedule))
}

pub fn write_schedule(path: &std::path::Path, schedule: &Schedule) -> Result<(), String> {
    let file = ScheduleFile::from_schedule(schedule);
    std::fs::write(path, file.to_canonical_string())
        .map_err(|e| format!("cannot write {}: {e}", path.display()))
}
