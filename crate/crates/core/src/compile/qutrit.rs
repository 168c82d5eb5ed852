//! Gates on full encoded qutrits: pairwise SU(2) control, exact
//! three-level synthesis, and the two-qutrit entangler.
//!
//! # Level phase sequences
//!
//! The workhorse is a ten-pulse diagonal built from two five-pulse
//! sequences. For a distinguished level `d` of the block it realizes
//!
//! ```text
//!   level d      ->  e^{-i 2 phi / 3}
//!   other levels ->  e^{+i phi / 3}
//! ```
//!
//! i.e. one relative phase between `d` and the rest, with the rest kept
//! mutually in phase. Products of two such sequences at different
//! distinguished levels reach any diagonal on the three levels up to a
//! global phase, which is what the exact two-level compiler uses.
//!
//! # Phase bookkeeping
//!
//! [`qutrit_su2_on_pair`] uses a single level-phase sequence, which
//! caps it at 12 pulses but restricts the embedded matrix it can hit
//! exactly: the compiled action is `e^{i delta} U` on the pair (and
//! identity on the third level) for a canonical delta fixed by U's
//! determinant phase and middle angle. [`qutrit_su2_embedded_target`]
//! returns that exact embedding so callers can verify against it.
//! [`compile_two_level_exact`] spends a second level-phase sequence to
//! pin delta to zero; three-level synthesis is built from it.

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use crate::compile::euler::{su2_split, xzx_angles};
use crate::compile::Block;
use crate::error::{Error, Result};
use crate::pulse::{normalize_phase, p3, PulseGate, Schedule};
use crate::sim::Unitary;
use crate::tol;

/// A pair of qutrit levels carrying an embedded two-level rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelPair {
    ZeroOne,
    OneTwo,
    ZeroTwo,
}

impl LevelPair {
    pub fn levels(self) -> (usize, usize) {
        match self {
            LevelPair::ZeroOne => (0, 1),
            LevelPair::OneTwo => (1, 2),
            LevelPair::ZeroTwo => (0, 2),
        }
    }

    pub fn third_level(self) -> usize {
        match self {
            LevelPair::ZeroOne => 2,
            LevelPair::OneTwo => 0,
            LevelPair::ZeroTwo => 1,
        }
    }
}

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

/// Sites of a full qutrit block indexed by level.
fn level_sites(block: &Block) -> Result<[usize; 3]> {
    let third = block.require_third()?;
    Ok([block.q0(), block.q1(), third])
}

/// Ten-pulse diagonal distinguishing one level: e^{-i 2 phi/3} on
/// `level`, e^{+i phi/3} on the other two.
fn level_phase(num_qubits: usize, block: &Block, level: usize, phi: f64) -> Result<Schedule> {
    let sites = level_sites(block)?;
    let d = sites[level];
    let others: Vec<usize> = (0..3).filter(|&l| l != level).map(|l| sites[l]).collect();
    let (u, v) = (others[0], others[1]);
    let mut s = p3(num_qubits, u, d, v, -2.0 * phi / 3.0)?;
    s.append(&p3(num_qubits, d, v, u, 2.0 * phi / 3.0)?)?;
    Ok(s)
}

/// Qutrit phase gate, ten pulses: net map
///
/// ```text
///   |0_L> -> e^{+i phi/3} |0_L>
///   |1_L> -> e^{-i 2 phi/3} |1_L>
///   |2_L> -> e^{+i phi/3} |2_L>
/// ```
///
/// One relative phase between levels 0 and 1 (equal to e^{-i phi}), no
/// relative phase between levels 0 and 2.
pub fn qutrit_z(num_qubits: usize, phi: f64, block: &Block) -> Result<Schedule> {
    check_block(num_qubits, block)?;
    if !phi.is_finite() {
        return Err(Error::NonFinite);
    }
    level_phase(num_qubits, block, 1, phi)
}

/// Canonical phase adjustment for the twelve-pulse pair compiler: the
/// compiled action embeds e^{i delta} U, delta = -(middle angle) -
/// (determinant half-phase).
fn canonical_delta(u: &Unitary) -> Result<f64> {
    let (gamma, _) = su2_split(u)?;
    let angles = xzx_angles(u)?;
    Ok(-angles.z - gamma)
}

/// The exact 3x3 matrix realized by [`qutrit_su2_on_pair`] (up to a
/// global phase): e^{i delta} U on the level pair, 1 on the third
/// level, with the canonical delta.
pub fn qutrit_su2_embedded_target(u: &Unitary, pair: LevelPair) -> Result<Unitary> {
    let delta = canonical_delta(u)?;
    let ph = Complex64::from_polar(1.0, delta);
    let (p, q) = pair.levels();
    let mut m = ndarray::Array2::from_diag_elem(3, Complex64::ONE);
    m[[p, p]] = ph * u.entry(0, 0);
    m[[p, q]] = ph * u.entry(0, 1);
    m[[q, p]] = ph * u.entry(1, 0);
    m[[q, q]] = ph * u.entry(1, 1);
    Unitary::from_array(m)
}

/// SU(2) control on one pair of qutrit levels with at most 12 pulses:
/// single pulses on the physical pair carrying the two levels around
/// one level-phase sequence. The third level's amplitude changes only
/// by the schedule's global phase; the pair action equals U up to the
/// canonical phase (see [`qutrit_su2_embedded_target`]).
pub fn qutrit_su2_on_pair(
    num_qubits: usize,
    u: &Unitary,
    pair: LevelPair,
    block: &Block,
) -> Result<Schedule> {
    check_block(num_qubits, block)?;
    let sites = level_sites(block)?;
    let angles = xzx_angles(u)?;
    let (p, q) = pair.levels();
    let (sp, sq) = (sites[p], sites[q]);

    let mut s = Schedule::new(num_qubits)?;
    if normalize_phase(angles.first).abs() >= tol::ZERO_PHASE {
        s.push_pulse(sp, sq, angles.first)?;
    }
    if normalize_phase(2.0 * angles.z).abs() >= tol::ZERO_PHASE {
        s.append(&level_phase(num_qubits, block, q, 2.0 * angles.z)?)?;
    }
    if normalize_phase(angles.last).abs() >= tol::ZERO_PHASE {
        s.push_pulse(sp, sq, angles.last)?;
    }
    Ok(s.simplify())
}

/// Compile an embedded two-level unitary exactly: the logical action is
/// B on the level pair and 1 on the third level up to one global phase,
/// with no residual pair/third phase twist. Costs up to two level-phase
/// sequences (at most 22 pulses before simplification).
pub fn compile_two_level_exact(
    num_qubits: usize,
    b: &Unitary,
    pair: LevelPair,
    block: &Block,
) -> Result<Schedule> {
    check_block(num_qubits, block)?;
    let sites = level_sites(block)?;
    let (gamma, _) = su2_split(b)?;
    let angles = xzx_angles(b)?;
    // B = e^{i a X} diag(e^{i mu}, e^{i nu}) e^{i c X} exactly.
    let mu = gamma + angles.z;
    let nu = gamma - angles.z;
    let (p, q) = pair.levels();
    let r = pair.third_level();
    let (sp, sq) = (sites[p], sites[q]);

    let mut s = Schedule::new(num_qubits)?;
    if normalize_phase(angles.first).abs() >= tol::ZERO_PHASE {
        s.push_pulse(sp, sq, angles.first)?;
    }
    if normalize_phase(mu - nu).abs() >= tol::ZERO_PHASE {
        s.append(&level_phase(num_qubits, block, q, mu - nu)?)?;
    }
    if normalize_phase(mu).abs() >= tol::ZERO_PHASE {
        s.append(&level_phase(num_qubits, block, r, mu)?)?;
    }
    if normalize_phase(angles.last).abs() >= tol::ZERO_PHASE {
        s.push_pulse(sp, sq, angles.last)?;
    }
    Ok(s.simplify())
}

/// Compile an arbitrary 3x3 unitary onto the qutrit, up to global
/// phase: zero the (2,0) entry with a (0,2)-level factor, then (2,1)
/// with a (1,2)-level factor, and finish with the remaining (0,1)
/// block. Each factor is compiled exactly.
pub fn compile_su3(num_qubits: usize, u: &Unitary, block: &Block) -> Result<Schedule> {
    check_block(num_qubits, block)?;
    block.require_third()?;
    if u.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            actual: u.dim(),
        });
    }
    let defect = u.unitarity_defect();
    if defect > tol::TARGET_UNITARITY {
        return Err(Error::NotUnitary { defect });
    }

    let mut w = [[Complex64::ZERO; 3]; 3];
    for (r, row) in w.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = u.entry(r, c);
        }
    }

    // Right-multiplying by a two-level factor on columns (j, k) mixes
    // those columns; pick the factor to zero w[2][j].
    let mut factors: Vec<(Unitary, LevelPair)> = Vec::new();
    for (j, pair) in [(0usize, LevelPair::ZeroTwo), (1usize, LevelPair::OneTwo)] {
        let x = w[2][j];
        let z = w[2][2];
        if x.norm() < 1e-14 {
            continue;
        }
        let rho = (x.norm_sqr() + z.norm_sqr()).sqrt();
        // G with (x z) G = (0 rho).
        let g = Unitary::from_fn(2, |r, c| match (r, c) {
            (0, 0) => -z / rho,
            (0, 1) => x.conj() / rho,
            (1, 0) => x / rho,
            (1, 1) => z.conj() / rho,
            _ => unreachable!(),
        });
        // Apply on columns (j, 2).
        for row in w.iter_mut() {
            let a = row[j];
            let b = row[2];
            row[j] = a * g.entry(0, 0) + b * g.entry(1, 0);
            row[2] = a * g.entry(0, 1) + b * g.entry(1, 1);
        }
        factors.push((g, pair));
    }

    // What remains is a (0,1) block plus a phase on level 2.
    let wp = w[2][2];
    let b01 = Unitary::from_fn(2, |r, c| w[r][c] / wp);

    // u = (b01 (+) 1) * f_last^dag * ... * f_first^dag up to phase, so
    // the inverses are applied first, in elimination order.
    let mut s = Schedule::new(num_qubits)?;
    for (g, pair) in &factors {
        s.append(&compile_two_level_exact(
            num_qubits,
            &g.dagger(),
            *pair,
            block,
        )?)?;
    }
    s.append(&compile_two_level_exact(
        num_qubits,
        &b01,
        LevelPair::ZeroOne,
        block,
    )?)?;
    Ok(s.simplify())
}

/// Which circuit realizes the two-qutrit entangler.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntanglerVariant {
    /// Two five-pulse sequences through different qubits of the second
    /// block; the facing conjugation pulses cancel, leaving 8 pulses.
    Serial,
    /// Both five-pulse sequences through the same qubit of the second
    /// block, with the partner excitation swapped in and back out;
    /// 10 pulses but fewer distinct triples, which suits
    /// nearest-neighbor layouts.
    SwapConjugated,
}

/// Entangler on the first two levels of two qutrits: the square root of
/// -Z(x)Z on {|0_L>,|1_L>} x {|0_L>,|1_L>} (phases e^{-i pi/4},
/// e^{+i pi/4}, e^{+i pi/4}, e^{-i pi/4}) and the exact identity on
/// every state where either qutrit sits in |2_L>. Only the code pairs
/// participate; the third qubits are spectators. Both variants produce
/// the same unitary.
pub fn qutrit_entangler(
    num_qubits: usize,
    block_a: &Block,
    block_b: &Block,
    variant: EntanglerVariant,
) -> Result<Schedule> {
    check_block(num_qubits, block_a)?;
    check_block(num_qubits, block_b)?;
    if block_a.overlaps(block_b) {
        return Err(Error::OverlappingBlocks);
    }
    let (a0, a1) = (block_a.q0(), block_a.q1());
    let (b0, b1) = (block_b.q0(), block_b.q1());
    match variant {
        EntanglerVariant::Serial => {
            let mut s = p3(num_qubits, a0, a1, b0, -FRAC_PI_4)?;
            s.append(&p3(num_qubits, a0, a1, b1, FRAC_PI_4)?)?;
            Ok(s.simplify())
        }
        EntanglerVariant::SwapConjugated => {
            // Conjugating the second sequence by the excitation swap on
            // (b0, b1) retargets it from b0 to b1; the swap pulse's
            // stray factors of i cancel against its inverse on every
            // diagonal. The swap pulse commutes with the facing
            // (a0, a1) conjugation pulses, which therefore cancel and
            // are omitted at construction.
            let first = p3(num_qubits, a0, a1, b0, -FRAC_PI_4)?;
            let second = p3(num_qubits, a0, a1, b0, FRAC_PI_4)?;
            let mut gates: Vec<PulseGate> = Vec::with_capacity(10);
            gates.extend_from_slice(&first.gates()[..4]);
            gates.push(PulseGate::new(b0, b1, std::f64::consts::FRAC_PI_2)?);
            gates.extend_from_slice(&second.gates()[1..]);
            gates.push(PulseGate::new(b0, b1, -std::f64::consts::FRAC_PI_2)?);
            Ok(Schedule::from_gates(num_qubits, gates)?.simplify())
        }
    }
}
