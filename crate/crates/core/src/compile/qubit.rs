//! Gates on encoded truncated qubits: single-qubit synthesis via the
//! X-Z-X decomposition and the two-qubit entangling family built from
//! the diagonal five-pulse sequence.

use std::f64::consts::FRAC_PI_2;

use crate::compile::euler::xzx_angles;
use crate::compile::Block;
use crate::error::{Error, Result};
use crate::pulse::{normalize_phase, p3, Schedule};
use crate::sim::Unitary;
use crate::tol;

fn check_block(num_qubits: usize, block: &Block) -> Result<()> {
    for s in block.sites() {
        if s >= num_qubits {
            return Err(Error::QubitOutOfRange {
                qubit: s,
                num_qubits,
            });
        }
    }
    Ok(())
}

fn check_disjoint(num_qubits: usize, a: &Block, b: &Block) -> Result<()> {
    check_block(num_qubits, a)?;
    check_block(num_qubits, b)?;
    if a.overlaps(b) {
        return Err(Error::OverlappingBlocks);
    }
    Ok(())
}

/// Logical e^{i phi X}: a single pulse on the code pair. The third
/// block qubit and the |001>-type level are untouched. A phase that
/// normalizes to zero produces an empty schedule.
pub fn encoded_x(num_qubits: usize, phi: f64, block: &Block) -> Result<Schedule> {
    check_block(num_qubits, block)?;
    if !phi.is_finite() {
        return Err(Error::NonFinite);
    }
    let mut s = Schedule::new(num_qubits)?;
    if normalize_phase(phi).abs() >= tol::ZERO_PHASE {
        s.push_pulse(block.q0(), block.q1(), phi)?;
    }
    Ok(s)
}

/// Logical diag(e^{+i phi/2}, e^{-i phi/2}) on (|0_L>, |1_L>): the
/// five-pulse sequence routed through the block's third qubit with
/// central argument -phi. The third qubit starts and ends in |0>
/// (the sequence is diagonal, so its population never moves).
/// Always exactly 5 pulses.
pub fn encoded_z(num_qubits: usize, phi: f64, block: &Block) -> Result<Schedule> {
    check_block(num_qubits, block)?;
    if !phi.is_finite() {
        return Err(Error::NonFinite);
    }
    let anc = block.require_third()?;
    p3(num_qubits, block.q0(), block.q1(), anc, -phi)
}

/// Compile an arbitrary 2x2 unitary onto the encoded qubit, up to
/// global phase: U ~ e^{iaX} e^{ibZ} e^{icX} becomes the pulse for c,
/// the phase sequence for b (argument 2b, since the phase gate's
/// half-angle convention is diag(e^{+i phi/2}, e^{-i phi/2})), then the
/// pulse for a. At most 7 pulses before simplification; the outer
/// pulses share a pair with the phase sequence's conjugation pulses,
/// so the simplified count is usually 5.
pub fn compile_su2(num_qubits: usize, u: &Unitary, block: &Block) -> Result<Schedule> {
    check_block(num_qubits, block)?;
    let angles = xzx_angles(u)?;
    let mut s = Schedule::new(num_qubits)?;
    s.append(&encoded_x(num_qubits, angles.first, block)?)?;
    if normalize_phase(2.0 * angles.z).abs() >= tol::ZERO_PHASE {
        s.append(&encoded_z(num_qubits, 2.0 * angles.z, block)?)?;
    }
    s.append(&encoded_x(num_qubits, angles.last, block)?)?;
    Ok(s.simplify())
}

/// Which code qubit of the second block the entangling sequence runs
/// through. Both routes produce the same logical action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqrtZzVariant {
    /// Five pulses through the second block's first code qubit,
    /// central argument -pi/2.
    ViaFirst,
    /// Five pulses through the second block's second code qubit,
    /// central argument +pi/2.
    ViaSecond,
}

/// The entangling square root of -Z(x)Z: logical
/// diag(e^{-i pi/4}, e^{+i pi/4}, e^{+i pi/4}, e^{-i pi/4}) on the four
/// states |a_L b_L>, exactly 5 pulses. The blocks' third qubits are not
/// involved; pair-only placements are accepted.
pub fn sqrt_minus_zz(
    num_qubits: usize,
    block_a: &Block,
    block_b: &Block,
    variant: SqrtZzVariant,
) -> Result<Schedule> {
    check_disjoint(num_qubits, block_a, block_b)?;
    match variant {
        SqrtZzVariant::ViaFirst => p3(
            num_qubits,
            block_a.q0(),
            block_a.q1(),
            block_b.q0(),
            -FRAC_PI_2,
        ),
        SqrtZzVariant::ViaSecond => p3(
            num_qubits,
            block_a.q0(),
            block_a.q1(),
            block_b.q1(),
            FRAC_PI_2,
        ),
    }
}

/// Controlled phase flip diag(1, 1, 1, -1) up to global phase: the
/// entangling core dressed with a +pi/4 Z half-angle on each block
/// (eight gates of which cancel or merge under simplification). Needs
/// both blocks' third qubits for the corrections.
pub fn controlled_phase_flip(
    num_qubits: usize,
    block_a: &Block,
    block_b: &Block,
) -> Result<Schedule> {
    check_disjoint(num_qubits, block_a, block_b)?;
    block_a.require_third()?;
    block_b.require_third()?;
    let mut s = sqrt_minus_zz(num_qubits, block_a, block_b, SqrtZzVariant::ViaFirst)?;
    s.append(&encoded_z(num_qubits, FRAC_PI_2, block_a)?)?;
    s.append(&encoded_z(num_qubits, FRAC_PI_2, block_b)?)?;
    Ok(s.simplify())
}

/// Logical controlled-NOT up to global phase: Hadamard on the target,
/// controlled phase flip, Hadamard on the target.
pub fn compile_cnot(num_qubits: usize, control: &Block, target: &Block) -> Result<Schedule> {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let h = Unitary::from_fn(2, |r, c| {
        let sign = if r == 1 && c == 1 { -1.0 } else { 1.0 };
        num_complex::Complex64::new(sign * inv_sqrt2, 0.0)
    });
    let mut s = compile_su2(num_qubits, &h, target)?;
    s.append(&controlled_phase_flip(num_qubits, control, target)?)?;
    s.append(&compile_su2(num_qubits, &h, target)?)?;
    Ok(s.simplify())
}
