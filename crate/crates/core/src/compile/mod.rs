//! Synthesis of logical gates on encoded qudits into pulse schedules.
//!
//! Logical states live in the single-excitation sector of small blocks
//! of physical qubits:
//!
//! * **Qutrit**: |0_L> = |100>, |1_L> = |010>, |2_L> = |001> on three
//!   code qubits.
//! * **Truncated qubit**: |0_L> = |10>, |1_L> = |01> on two code
//!   qubits, with an optional third qubit held in |0> that phase gates
//!   borrow and return.
//!
//! Single-qudit gates are built from the X-Z-X angle decomposition,
//! where the X factors are single pulses on the code pair and the Z
//! factors are diagonal five-pulse sequences routed through a third
//! qubit. Two-qudit entanglers place those same diagonal sequences
//! across two blocks.

mod euler;
mod prep;
mod qubit;
mod qutrit;

pub use prep::{measure_logical, outcome_labels, prepare_logical_zero, shift_excitation};
pub use qubit::{
    compile_cnot, compile_su2, controlled_phase_flip, encoded_x, encoded_z, sqrt_minus_zz,
    SqrtZzVariant,
};
pub use qutrit::{
    compile_su3, compile_two_level_exact, qutrit_entangler, qutrit_su2_embedded_target,
    qutrit_su2_on_pair, qutrit_z, EntanglerVariant, LevelPair,
};

use crate::error::{Error, Result};

/// Which encoded qudit a block of physical qubits carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Encoding {
    /// Two logical states on the first two code qubits; the third site,
    /// when present, is an ancilla required to be |0> at gate
    /// boundaries.
    TruncatedQubit,
    /// Three logical states across all three code qubits.
    Qutrit,
}

impl Encoding {
    /// Number of logical levels (2 or 3).
    pub fn logical_dim(self) -> usize {
        match self {
            Encoding::TruncatedQubit => 2,
            Encoding::Qutrit => 3,
        }
    }

    /// Bits held by (q0, q1, third) when the block encodes `label`.
    fn pattern(self, label: usize) -> [u8; 3] {
        match label {
            0 => [1, 0, 0],
            1 => [0, 1, 0],
            2 => [0, 0, 1],
            _ => unreachable!("label checked against logical_dim"),
        }
    }
}

/// Placement of one encoded block on physical qubits. `third` is the
/// ancilla of a truncated qubit or the third code qubit of a qutrit;
/// operations that only touch the code pair accept blocks without it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    q0: usize,
    q1: usize,
    third: Option<usize>,
}

impl Block {
    /// Full three-site placement.
    pub fn new(q0: usize, q1: usize, third: usize) -> Result<Self> {
        if q0 == q1 || q0 == third || q1 == third {
            return Err(Error::NonDistinctQubits);
        }
        Ok(Block {
            q0,
            q1,
            third: Some(third),
        })
    }

    /// Code pair only; phase gates on this block will fail for lack of
    /// a third qubit.
    pub fn pair(q0: usize, q1: usize) -> Result<Self> {
        if q0 == q1 {
            return Err(Error::NonDistinctQubits);
        }
        Ok(Block {
            q0,
            q1,
            third: None,
        })
    }

    /// Block `k` of the canonical contiguous placement (3k, 3k+1, 3k+2).
    pub fn contiguous(k: usize) -> Self {
        Block {
            q0: 3 * k,
            q1: 3 * k + 1,
            third: Some(3 * k + 2),
        }
    }

    pub fn q0(&self) -> usize {
        self.q0
    }

    pub fn q1(&self) -> usize {
        self.q1
    }

    pub fn third(&self) -> Option<usize> {
        self.third
    }

    /// The third site, or an error for pair-only blocks.
    pub fn require_third(&self) -> Result<usize> {
        self.third.ok_or(Error::MissingThirdQubit)
    }

    /// Sites of the block in order (q0, q1[, third]).
    pub fn sites(&self) -> Vec<usize> {
        match self.third {
            Some(t) => vec![self.q0, self.q1, t],
            None => vec![self.q0, self.q1],
        }
    }

    pub fn overlaps(&self, other: &Block) -> bool {
        self.sites().iter().any(|s| other.sites().contains(s))
    }

    fn max_site(&self) -> usize {
        self.sites().into_iter().max().expect("non-empty")
    }
}

/// Validate that blocks fit the register, are pairwise disjoint, and
/// carry a third site whenever the encoding needs all three.
pub fn validate_blocks(num_qubits: usize, encoding: Encoding, blocks: &[Block]) -> Result<()> {
    for (k, b) in blocks.iter().enumerate() {
        if b.max_site() >= num_qubits {
            return Err(Error::QubitOutOfRange {
                qubit: b.max_site(),
                num_qubits,
            });
        }
        if encoding == Encoding::Qutrit {
            b.require_third()?;
        }
        for other in &blocks[k + 1..] {
            if b.overlaps(other) {
                return Err(Error::OverlappingBlocks);
            }
        }
    }
    Ok(())
}

/// Physical basis index of the logical basis state `labels` (one label
/// per block, blocks[0] most significant); every qubit outside the
/// blocks sits in |0>.
pub fn logical_basis_index(
    num_qubits: usize,
    encoding: Encoding,
    blocks: &[Block],
    labels: &[usize],
) -> Result<usize> {
    if labels.len() != blocks.len() {
        return Err(Error::DimensionMismatch {
            expected: blocks.len(),
            actual: labels.len(),
        });
    }
    let mut index = 0usize;
    for (block, &label) in blocks.iter().zip(labels) {
        if label >= encoding.logical_dim() {
            return Err(Error::DimensionMismatch {
                expected: encoding.logical_dim(),
                actual: label,
            });
        }
        let pattern = encoding.pattern(label);
        let sites = block.sites();
        if pattern[2] == 1 && sites.len() < 3 {
            return Err(Error::MissingThirdQubit);
        }
        for (slot, &site) in sites.iter().enumerate() {
            if pattern[slot] == 1 {
                index |= crate::sim::site_mask(num_qubits, site);
            }
        }
    }
    Ok(index)
}

/// All logical label tuples over `blocks`, in row-major order with
/// blocks[0] as the most significant digit.
pub fn logical_labels(encoding: Encoding, num_blocks: usize) -> Vec<Vec<usize>> {
    let d = encoding.logical_dim();
    let total = d.pow(num_blocks as u32);
    (0..total)
        .map(|mut x| {
            let mut labels = vec![0usize; num_blocks];
            for slot in (0..num_blocks).rev() {
                labels[slot] = x % d;
                x /= d;
            }
            labels
        })
        .collect()
}
