//! Independent ground truth: generic matrix exponentiation,
//! logical-subspace extraction, and equivalence-up-to-global-phase
//! metrics.
//!
//! [`oracle_expm`] deliberately shares nothing with the closed-form
//! pulse path: it runs scaling-and-squaring with a Pade(13)
//! approximant on the full matrix, so agreement between the two routes
//! is evidence rather than tautology.

use ndarray::{s, Array2};
use num_complex::Complex64;

use crate::compile::{logical_basis_index, logical_labels, Block, Encoding};
use crate::error::{Error, Result};
use crate::sim::Unitary;
use crate::tol;

/// exp(i * t * H) for Hermitian H, via scaling-and-squaring.
pub fn oracle_expm(h: &Array2<Complex64>, t: f64) -> Result<Unitary> {
    if h.nrows() != h.ncols() {
        return Err(Error::NotSquare {
            rows: h.nrows(),
            cols: h.ncols(),
        });
    }
    if !t.is_finite() {
        return Err(Error::NonFinite);
    }
    let mut defect = 0.0f64;
    for r in 0..h.nrows() {
        for c in 0..h.ncols() {
            defect = defect.max((h[[r, c]] - h[[c, r]].conj()).norm());
        }
    }
    if defect > tol::HERMITICITY {
        return Err(Error::NotHermitian { defect });
    }
    let a = h.mapv(|x| x * Complex64::new(0.0, t));
    Unitary::from_array(matrix_exp(&a))
}

/// Pade(13,13) coefficients for the matrix exponential.
const PADE13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

/// Scaling threshold for the (13,13) approximant.
const THETA13: f64 = 5.371_920_351_148_152;

/// exp(A) for a general complex square matrix.
fn matrix_exp(a: &Array2<Complex64>) -> Array2<Complex64> {
    let n = a.nrows();
    if n == 0 {
        return Array2::zeros((0, 0));
    }
    let norm = one_norm(a);
    let squarings = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let scale = Complex64::new(1.0 / (1u64 << squarings) as f64, 0.0);
    let mut m = pade13(&a.mapv(|x| x * scale));
    for _ in 0..squarings {
        m = m.dot(&m);
    }
    m
}

fn pade13(a: &Array2<Complex64>) -> Array2<Complex64> {
    let n = a.nrows();
    let eye = Array2::from_diag_elem(n, Complex64::ONE);
    let c = |k: usize| Complex64::new(PADE13[k], 0.0);

    let a2 = a.dot(a);
    let a4 = a2.dot(&a2);
    let a6 = a2.dot(&a4);

    let w1 = &a6 * c(13) + &a4 * c(11) + &a2 * c(9);
    let w2 = w1.dot(&a6) + &a6 * c(7) + &a4 * c(5) + &a2 * c(3) + &eye * c(1);
    let u = a.dot(&w2);

    let v1 = &a6 * c(12) + &a4 * c(10) + &a2 * c(8);
    let v = v1.dot(&a6) + &a6 * c(6) + &a4 * c(4) + &a2 * c(2) + &eye * c(0);

    let num = &v + &u;
    let den = &v - &u;
    solve(den, num)
}

/// Solve A X = B by Gaussian elimination with partial pivoting.
fn solve(a: Array2<Complex64>, b: Array2<Complex64>) -> Array2<Complex64> {
    let n = a.nrows();
    let m = b.ncols();
    let mut aug = Array2::zeros((n, n + m));
    aug.slice_mut(s![.., ..n]).assign(&a);
    aug.slice_mut(s![.., n..]).assign(&b);

    for col in 0..n {
        let mut pivot_row = col;
        let mut pivot_mag = aug[[col, col]].norm();
        for row in col + 1..n {
            let mag = aug[[row, col]].norm();
            if mag > pivot_mag {
                pivot_row = row;
                pivot_mag = mag;
            }
        }
        if pivot_row != col {
            for j in 0..n + m {
                let tmp = aug[[col, j]];
                aug[[col, j]] = aug[[pivot_row, j]];
                aug[[pivot_row, j]] = tmp;
            }
        }
        let pivot = aug[[col, col]];
        for row in col + 1..n {
            let factor = aug[[row, col]] / pivot;
            for j in col..n + m {
                let v = aug[[col, j]];
                aug[[row, j]] -= factor * v;
            }
        }
    }

    let mut x = Array2::<Complex64>::zeros((n, m));
    for col in (0..n).rev() {
        let pivot = aug[[col, col]];
        for j in 0..m {
            let mut sum = aug[[col, n + j]];
            for k in col + 1..n {
                sum -= aug[[col, k]] * x[[k, j]];
            }
            x[[col, j]] = sum / pivot;
        }
    }
    x
}

fn one_norm(a: &Array2<Complex64>) -> f64 {
    let mut worst = 0.0f64;
    for c in 0..a.ncols() {
        let sum: f64 = (0..a.nrows()).map(|r| a[[r, c]].norm()).sum();
        worst = worst.max(sum);
    }
    worst
}

/// Result of comparing two matrices up to a global phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalenceReport {
    /// |tr(U^dag V)| / dim; 1 exactly when U = e^{i alpha} V.
    pub fidelity: f64,
    /// The alpha minimizing ||U - e^{i alpha} V||.
    pub global_phase: f64,
    /// Largest entrywise |U - e^{i alpha} V| at that alpha.
    pub max_entry_deviation: f64,
}

impl EquivalenceReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.fidelity >= 1.0 - tol
    }
}

/// Quantify agreement of two equal-size matrices up to global phase.
pub fn equivalent_up_to_phase(u: &Unitary, v: &Unitary) -> Result<EquivalenceReport> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            actual: v.dim(),
        });
    }
    let overlap = u.overlap(v); // tr(U^dag V)
    let fidelity = overlap.norm() / u.dim() as f64;
    let global_phase = if overlap.norm() > 0.0 {
        crate::pulse::normalize_phase(-overlap.arg())
    } else {
        0.0
    };
    let ph = Complex64::from_polar(1.0, global_phase);
    let mut max_dev = 0.0f64;
    for r in 0..u.dim() {
        for c in 0..u.dim() {
            max_dev = max_dev.max((u.entry(r, c) - ph * v.entry(r, c)).norm());
        }
    }
    Ok(EquivalenceReport {
        fidelity,
        global_phase,
        max_entry_deviation: max_dev,
    })
}

/// A physical unitary restricted to the code space.
#[derive(Debug, Clone)]
pub struct RestrictedAction {
    /// The d^k x d^k matrix of logical matrix elements.
    pub matrix: Unitary,
    /// max |L^dag L - I|; small exactly when the physical unitary
    /// keeps the code space closed.
    pub unitarity_defect: f64,
}

/// Extract the logical action of a physical unitary over the given
/// blocks. Errors with the defect when the restriction is not unitary,
/// which signals leakage out of the code space.
pub fn restrict_to_logical(
    u: &Unitary,
    encoding: Encoding,
    blocks: &[Block],
) -> Result<RestrictedAction> {
    let dim = u.dim();
    if !dim.is_power_of_two() {
        return Err(Error::DimensionMismatch {
            expected: dim.next_power_of_two(),
            actual: dim,
        });
    }
    let num_qubits = dim.trailing_zeros() as usize;
    crate::compile::validate_blocks(num_qubits, encoding, blocks)?;
    let labels = logical_labels(encoding, blocks.len());
    let indices: Vec<usize> = labels
        .iter()
        .map(|ls| logical_basis_index(num_qubits, encoding, blocks, ls))
        .collect::<Result<_>>()?;
    // Logical basis states are computational basis states, so the
    // restriction is a plain submatrix.
    let matrix = Unitary::from_fn(indices.len(), |r, c| u.entry(indices[r], indices[c]));
    let unitarity_defect = matrix.unitarity_defect();
    if unitarity_defect > tol::UNITARITY_DEFECT {
        return Err(Error::CodeSpaceLeakage {
            weight: unitarity_defect,
        });
    }
    Ok(RestrictedAction {
        matrix,
        unitarity_defect,
    })
}

/// Result of scanning a unitary for mixing between excitation sectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorCheck {
    pub preserved: bool,
    /// Largest |matrix element| between different Hamming-weight sectors.
    pub worst_leakage: f64,
}

/// Check that a 2^n x 2^n matrix never couples basis states of
/// different excitation number.
pub fn check_sector_preservation(u: &Unitary, num_qubits: usize) -> Result<SectorCheck> {
    let dim = u.dim();
    if dim != 1usize << num_qubits {
        return Err(Error::DimensionMismatch {
            expected: 1usize << num_qubits,
            actual: dim,
        });
    }
    let mut worst = 0.0f64;
    for r in 0..dim {
        for c in 0..dim {
            if r.count_ones() != c.count_ones() {
                worst = worst.max(u.entry(r, c).norm());
            }
        }
    }
    Ok(SectorCheck {
        preserved: worst < tol::SECTOR_LEAKAGE,
        worst_leakage: worst,
    })
}
