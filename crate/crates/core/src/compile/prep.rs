//! State preparation and readout: excitation shifts, the all-blocks
//! |0_L> product state, and logical measurement statistics.

use std::f64::consts::FRAC_PI_2;

use crate::compile::{logical_labels, Block, Encoding};
use crate::error::{Error, Result};
use crate::pulse::Schedule;
use crate::sim::{bit_at, StateVector};
use crate::tol;

/// Move an excitation from one site to another: a single pulse of
/// phase pi/2, which maps |..1_from..0_to..> to i |..0_from..1_to..>
/// (a full transfer up to the factor of i).
pub fn shift_excitation(num_qubits: usize, from: usize, to: usize) -> Result<Schedule> {
    let mut s = Schedule::new(num_qubits)?;
    if from >= num_qubits || to >= num_qubits {
        return Err(Error::QubitOutOfRange {
            qubit: from.max(to),
            num_qubits,
        });
    }
    s.push_pulse(from, to, FRAC_PI_2)?;
    Ok(s)
}

/// The product state with every block in |0_L>: |100> per block under
/// the canonical contiguous placement, 3 qubits per block.
pub fn prepare_logical_zero(num_blocks: usize, _encoding: Encoding) -> Result<StateVector> {
    let n = 3 * num_blocks;
    let mut index = 0usize;
    for k in 0..num_blocks {
        index |= 1 << (n - 1 - 3 * k);
    }
    StateVector::basis_state(n, index)
}

/// Born-rule probabilities of the joint logical outcomes over `blocks`,
/// indexed with blocks[0] as the most significant digit. Weight on any
/// basis state whose block sites do not spell a logical label counts as
/// leakage and is an error above the leakage tolerance.
pub fn measure_logical(
    state: &StateVector,
    encoding: Encoding,
    blocks: &[Block],
) -> Result<Vec<f64>> {
    let n = state.num_qubits();
    crate::compile::validate_blocks(n, encoding, blocks)?;
    let d = encoding.logical_dim();
    let num_outcomes = d.pow(blocks.len() as u32);
    let mut probs = vec![0.0f64; num_outcomes];
    let mut leakage = 0.0f64;

    'states: for x in 0..state.dim() {
        let p = state.probability(x);
        if p == 0.0 {
            continue;
        }
        let mut outcome = 0usize;
        for block in blocks {
            let sites = block.sites();
            let bits: Vec<u8> = sites.iter().map(|&s| bit_at(x, s, n)).collect();
            let label = match classify(encoding, &bits) {
                Some(l) => l,
                None => {
                    leakage += p;
                    continue 'states;
                }
            };
            outcome = outcome * d + label;
        }
        probs[outcome] += p;
    }

    if leakage > tol::LEAKAGE {
        return Err(Error::CodeSpaceLeakage { weight: leakage });
    }
    Ok(probs)
}

/// Logical label spelled by the bits on a block's sites, or None for a
/// non-code pattern. Pair-only truncated blocks match on two bits.
fn classify(encoding: Encoding, bits: &[u8]) -> Option<usize> {
    for label in 0..encoding.logical_dim() {
        let pattern = encoding.pattern(label);
        if bits.iter().zip(pattern.iter()).all(|(b, p)| b == p) {
            return Some(label);
        }
    }
    None
}

/// Human-readable labels for the outcome vector of [`measure_logical`],
/// e.g. "00", "01", ... with blocks[0] leftmost.
pub fn outcome_labels(encoding: Encoding, num_blocks: usize) -> Vec<String> {
    logical_labels(encoding, num_blocks)
        .into_iter()
        .map(|ls| ls.iter().map(|l| l.to_string()).collect())
        .collect()
}
