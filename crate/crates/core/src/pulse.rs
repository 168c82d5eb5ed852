//! The pulse instruction set: gates, schedules, the five-pulse P3
//! primitive, schedule algebra, and peephole simplification.
//!
//! A [`Schedule`] is an ordered list of pulses over a fixed register;
//! simulation applies the first listed gate first. Because every pulse
//! is exp(i*phi*A_ij) for some pair, every schedule is unitary and
//! preserves excitation number.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use crate::error::{Error, Result};
use crate::sim::{apply_xy_pulse_mut, StateVector, Unitary, MAX_DENSE_QUBITS, MAX_STATE_QUBITS};
use crate::tol;

/// Map an angle to the canonical interval (-pi, pi]. Pulses are
/// 2pi-periodic in their phase (the generator has eigenvalues 0, +-1),
/// so this never changes the gate.
pub fn normalize_phase(phi: f64) -> f64 {
    let r = phi.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// One XY pulse: an unordered qubit pair and a phase in (-pi, pi].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseGate {
    i: usize,
    j: usize,
    phi: f64,
}

impl PulseGate {
    /// Build a pulse; the pair is stored with the smaller index first
    /// and the phase normalized into (-pi, pi].
    pub fn new(i: usize, j: usize, phi: f64) -> Result<Self> {
        if i == j {
            return Err(Error::IdenticalQubits(i));
        }
        if !phi.is_finite() {
            return Err(Error::NonFinite);
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Ok(PulseGate {
            i,
            j,
            phi: normalize_phase(phi),
        })
    }

    /// The pair, smaller index first.
    pub fn pair(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The same pair with negated phase.
    pub fn inverse(&self) -> PulseGate {
        PulseGate {
            i: self.i,
            j: self.j,
            phi: normalize_phase(-self.phi),
        }
    }

    fn is_zero(&self) -> bool {
        self.phi.abs() < tol::ZERO_PHASE
    }
}

/// Ordered pulse list over `num_qubits` physical qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    num_qubits: usize,
    gates: Vec<PulseGate>,
}

impl Schedule {
    pub fn new(num_qubits: usize) -> Result<Self> {
        if num_qubits > MAX_STATE_QUBITS {
            return Err(Error::RegisterTooLarge {
                num_qubits,
                cap: MAX_STATE_QUBITS,
            });
        }
        Ok(Schedule {
            num_qubits,
            gates: Vec::new(),
        })
    }

    pub fn from_gates(num_qubits: usize, gates: Vec<PulseGate>) -> Result<Self> {
        let mut s = Schedule::new(num_qubits)?;
        for g in gates {
            s.push(g)?;
        }
        Ok(s)
    }

    /// Append one gate, validating its indices against the register.
    pub fn push(&mut self, gate: PulseGate) -> Result<()> {
        let (_, j) = gate.pair();
        if j >= self.num_qubits {
            return Err(Error::QubitOutOfRange {
                qubit: j,
                num_qubits: self.num_qubits,
            });
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Append a pulse built from raw parts.
    pub fn push_pulse(&mut self, i: usize, j: usize, phi: f64) -> Result<()> {
        self.push(PulseGate::new(i, j, phi)?)
    }

    /// Append all gates of `other`, which must span the same register.
    pub fn append(&mut self, other: &Schedule) -> Result<()> {
        if other.num_qubits != self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                actual: other.num_qubits,
            });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[PulseGate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Apply the gates in list order to `input`.
    pub fn simulate(&self, input: &StateVector) -> Result<StateVector> {
        if input.num_qubits() != self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: 1 << self.num_qubits,
                actual: input.dim(),
            });
        }
        let mut state = input.clone();
        for g in &self.gates {
            apply_xy_pulse_mut(&mut state, g.i, g.j, g.phi)?;
        }
        Ok(state)
    }

    /// The full 2^n x 2^n matrix of the schedule, built column by column.
    pub fn unitary(&self) -> Result<Unitary> {
        if self.num_qubits > MAX_DENSE_QUBITS {
            return Err(Error::RegisterTooLarge {
                num_qubits: self.num_qubits,
                cap: MAX_DENSE_QUBITS,
            });
        }
        let dim = 1usize << self.num_qubits;
        let mut m = ndarray::Array2::zeros((dim, dim));
        for col in 0..dim {
            let e = StateVector::basis_state(self.num_qubits, col)?;
            let out = self.simulate(&e)?;
            for (row, amp) in out.amplitudes().iter().enumerate() {
                m[[row, col]] = *amp;
            }
        }
        Unitary::from_array(m)
    }

    /// Gates reversed with negated phases; undoes the schedule exactly.
    pub fn inverse(&self) -> Schedule {
        Schedule {
            num_qubits: self.num_qubits,
            gates: self.gates.iter().rev().map(PulseGate::inverse).collect(),
        }
    }

    /// Merge adjacent gates on the same pair (phases add, renormalized)
    /// and drop gates whose phase cancels to zero, repeating to a
    /// fixpoint. The simulated unitary is unchanged; only adjacency is
    /// exploited, gates are never reordered.
    pub fn simplify(&self) -> Schedule {
        let mut out: Vec<PulseGate> = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            if g.is_zero() {
                continue;
            }
            let mut incoming = *g;
            while let Some(top) = out.last() {
                if top.pair() != incoming.pair() {
                    break;
                }
                let merged = normalize_phase(top.phi + incoming.phi);
                let top = out.pop().expect("non-empty");
                incoming = PulseGate {
                    i: top.i,
                    j: top.j,
                    phi: merged,
                };
                if incoming.is_zero() {
                    break;
                }
            }
            if !incoming.is_zero() {
                out.push(incoming);
            }
        }
        Schedule {
            num_qubits: self.num_qubits,
            gates: out,
        }
    }
}

/// The five-pulse sequence over three distinct qubits (a, b, c):
///
/// ```text
///   (a,b,+pi/4) (b,c,+pi/2) (a,c,phi/2) (b,c,-pi/2) (a,b,-pi/4)
/// ```
///
/// Its unitary is diagonal in the computational basis of {a, b, c}: it
/// multiplies the four basis states where a and b hold unequal bits by
///
/// ```text
///   |0_a 1_b 0_c> -> e^{+i phi/2}     |1_a 0_b 0_c> -> e^{-i phi/2}
///   |0_a 1_b 1_c> -> e^{-i phi/2}     |1_a 0_b 1_c> -> e^{+i phi/2}
/// ```
///
/// and leaves the remaining four unchanged.
pub fn p3(num_qubits: usize, a: usize, b: usize, c: usize, phi: f64) -> Result<Schedule> {
    if a == b || b == c || a == c {
        return Err(Error::NonDistinctQubits);
    }
    let mut s = Schedule::new(num_qubits)?;
    s.push_pulse(a, b, FRAC_PI_4)?;
    s.push_pulse(b, c, FRAC_PI_2)?;
    s.push_pulse(a, c, phi / 2.0)?;
    s.push_pulse(b, c, -FRAC_PI_2)?;
    s.push_pulse(a, b, -FRAC_PI_4)?;
    Ok(s)
}
