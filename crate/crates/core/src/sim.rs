//! Dense complex linear algebra for small registers: statevectors,
//! unitaries, closed-form XY-pulse application, and excitation-number
//! sector machinery.
//!
//! # Index convention
//!
//! Ket strings are written left to right with qubit 0 leftmost, and
//! qubit 0 maps to the *most significant* bit of the amplitude index.
//! For three qubits, |100> is index 4, |001> is index 1.
//!
//! # Pulse semantics
//!
//! A pulse on the pair (i, j) with phase phi applies exp(i*phi*A_ij),
//! where A_ij = (X_i X_j + Y_i Y_j) / 2. A_ij swaps |01> and |10> on
//! the pair and annihilates |00> and |11>, so the exponential is the
//! identity on basis states with equal bits at i and j and rotates the
//! two-dimensional block spanned by the unequal-bit partners:
//!
//! ```text
//!   |..0_i..1_j..>  ->  cos(phi) |..0..1..> + i sin(phi) |..1..0..>
//! ```
//!
//! Every pulse therefore conserves the total excitation number (the
//! Hamming weight of the basis label).

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest register simulated as a dense amplitude vector.
pub const MAX_STATE_QUBITS: usize = 16;

/// Largest register for which full 2^n x 2^n unitaries are materialized.
pub const MAX_DENSE_QUBITS: usize = 10;

/// Bit mask selecting `qubit` in an amplitude index (qubit 0 = MSB).
#[inline]
pub fn site_mask(num_qubits: usize, qubit: usize) -> usize {
    1 << (num_qubits - 1 - qubit)
}

/// The bit of `qubit` in basis-state `index` (qubit 0 = MSB).
#[inline]
pub fn bit_at(index: usize, qubit: usize, num_qubits: usize) -> u8 {
    ((index >> (num_qubits - 1 - qubit)) & 1) as u8
}

fn check_qubit(qubit: usize, num_qubits: usize) -> Result<()> {
    if qubit >= num_qubits {
        return Err(Error::QubitOutOfRange { qubit, num_qubits });
    }
    Ok(())
}

fn check_register(num_qubits: usize, cap: usize) -> Result<()> {
    if num_qubits > cap {
        return Err(Error::RegisterTooLarge { num_qubits, cap });
    }
    Ok(())
}

/// Dense state of `num_qubits` qubits: 2^n complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The computational basis state with the given index.
    pub fn basis_state(num_qubits: usize, index: usize) -> Result<Self> {
        check_register(num_qubits, MAX_STATE_QUBITS)?;
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: index,
            });
        }
        let mut amps = vec![Complex64::ZERO; dim];
        amps[index] = Complex64::ONE;
        Ok(StateVector { num_qubits, amps })
    }

    /// |0...0>.
    pub fn zero_state(num_qubits: usize) -> Result<Self> {
        Self::basis_state(num_qubits, 0)
    }

    /// Basis state from a bit string, leftmost bit = qubit 0.
    /// `from_bits(&[1, 0, 0])` is |100>, index 4.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let n = bits.len();
        check_register(n, MAX_STATE_QUBITS)?;
        let mut index = 0usize;
        for &b in bits {
            if b > 1 {
                return Err(Error::NonFinite);
            }
            index = (index << 1) | b as usize;
        }
        Self::basis_state(n, index)
    }

    /// Wrap raw amplitudes; the length must be 2^num_qubits and every
    /// entry finite. The norm is not forced to 1.
    pub fn from_amplitudes(num_qubits: usize, amps: Vec<Complex64>) -> Result<Self> {
        check_register(num_qubits, MAX_STATE_QUBITS)?;
        let dim = 1usize << num_qubits;
        if amps.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: amps.len(),
            });
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(StateVector { num_qubits, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn probability(&self, index: usize) -> f64 {
        self.amps[index].norm_sqr()
    }

    /// L2 norm.
    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// <self|other>.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Product state self (x) other; self occupies the high bits.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        let n = self.num_qubits + other.num_qubits;
        check_register(n, MAX_STATE_QUBITS)?;
        let mut amps = Vec::with_capacity(1 << n);
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Ok(StateVector {
            num_qubits: n,
            amps,
        })
    }

    /// Largest |amplitude difference| against another state of the same size.
    pub fn max_deviation(&self, other: &StateVector) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Apply exp(i*phi*A_ij) to a state in closed form.
///
/// Identity on every basis state whose bits at `i` and `j` agree; on
/// the unequal-bit pairs the amplitudes mix as
/// `cos(phi) * self + i sin(phi) * partner`.
pub fn apply_xy_pulse(state: &StateVector, i: usize, j: usize, phi: f64) -> Result<StateVector> {
    let mut out = state.clone();
    apply_xy_pulse_mut(&mut out, i, j, phi)?;
    Ok(out)
}

/// In-place variant of [`apply_xy_pulse`].
pub fn apply_xy_pulse_mut(state: &mut StateVector, i: usize, j: usize, phi: f64) -> Result<()> {
    let n = state.num_qubits;
    check_qubit(i, n)?;
    check_qubit(j, n)?;
    if i == j {
        return Err(Error::IdenticalQubits(i));
    }
    if !phi.is_finite() {
        return Err(Error::NonFinite);
    }
    let mi = site_mask(n, i);
    let mj = site_mask(n, j);
    let c = Complex64::new(phi.cos(), 0.0);
    let s = Complex64::new(0.0, phi.sin());
    // Visit each unequal-bit pair once, from the representative with
    // bit_i = 1 and bit_j = 0.
    for x in 0..state.amps.len() {
        if x & mi != 0 && x & mj == 0 {
            let y = x ^ mi ^ mj;
            let a = state.amps[x];
            let b = state.amps[y];
            state.amps[x] = c * a + s * b;
            state.amps[y] = c * b + s * a;
        }
    }
    Ok(())
}

/// The 2^n x 2^n matrix of A_ij = (X_i X_j + Y_i Y_j)/2: ones between
/// basis states related by swapping unequal bits at i and j, zero
/// elsewhere. Real, symmetric, traceless.
pub fn xy_generator_matrix(num_qubits: usize, i: usize, j: usize) -> Result<Array2<Complex64>> {
    check_register(num_qubits, MAX_DENSE_QUBITS)?;
    check_qubit(i, num_qubits)?;
    check_qubit(j, num_qubits)?;
    if i == j {
        return Err(Error::IdenticalQubits(i));
    }
    let dim = 1usize << num_qubits;
    let mi = site_mask(num_qubits, i);
    let mj = site_mask(num_qubits, j);
    let mut m = Array2::zeros((dim, dim));
    for x in 0..dim {
        if x & mi != 0 && x & mj == 0 {
            let y = x ^ mi ^ mj;
            m[[x, y]] = Complex64::ONE;
            m[[y, x]] = Complex64::ONE;
        }
    }
    Ok(m)
}

/// All basis indices of Hamming weight `excitation`, ascending.
/// The list length is binomial(num_qubits, excitation).
pub fn sector_basis(num_qubits: usize, excitation: usize) -> Result<Vec<usize>> {
    check_register(num_qubits, MAX_STATE_QUBITS)?;
    if excitation > num_qubits {
        return Err(Error::ExcitationOutOfRange {
            excitation,
            num_qubits,
        });
    }
    Ok((0..1usize << num_qubits)
        .filter(|x| x.count_ones() as usize == excitation)
        .collect())
}

/// Dense complex square matrix, typically a gate unitary or a logical
/// restriction of one. Unitarity is a property to query, not an
/// invariant enforced on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    m: Array2<Complex64>,
}

impl Unitary {
    pub fn identity(dim: usize) -> Self {
        Unitary {
            m: Array2::from_diag_elem(dim, Complex64::ONE),
        }
    }

    /// Wrap a square matrix with finite entries.
    pub fn from_array(m: Array2<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        if m.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Unitary { m })
    }

    /// Wrap a matrix and require it to be unitary within `tol`.
    pub fn new_checked(m: Array2<Complex64>, tol: f64) -> Result<Self> {
        let u = Self::from_array(m)?;
        let defect = u.unitarity_defect();
        if defect > tol {
            return Err(Error::NotUnitary { defect });
        }
        Ok(u)
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        Unitary {
            m: Array2::from_shape_fn((dim, dim), |(r, c)| f(r, c)),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[[row, col]]
    }

    pub fn as_array(&self) -> &Array2<Complex64> {
        &self.m
    }

    pub fn into_array(self) -> Array2<Complex64> {
        self.m
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Unitary {
        Unitary {
            m: self.m.t().mapv(|a| a.conj()),
        }
    }

    /// Matrix product self * other.
    pub fn dot(&self, other: &Unitary) -> Result<Unitary> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(Unitary {
            m: self.m.dot(&other.m),
        })
    }

    /// tr(self^dag * other) without forming the product.
    pub fn overlap(&self, other: &Unitary) -> Complex64 {
        self.m
            .iter()
            .zip(other.m.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// max |U^dag U - I|.
    pub fn unitarity_defect(&self) -> f64 {
        let p = self.dagger().m.dot(&self.m);
        let dim = self.dim();
        let mut worst = 0.0f64;
        for r in 0..dim {
            for c in 0..dim {
                let want = if r == c { Complex64::ONE } else { Complex64::ZERO };
                worst = worst.max((p[[r, c]] - want).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    /// Largest entrywise |difference| against another matrix of equal size.
    pub fn max_deviation(&self, other: &Unitary) -> f64 {
        self.m
            .iter()
            .zip(other.m.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    use crate::tol;

    const I: Complex64 = Complex64::new(0.0, 1.0);

    #[test]
    fn index_convention_msb_first() {
        // |100> on three qubits is index 4.
        let s = StateVector::from_bits(&[1, 0, 0]).unwrap();
        assert_eq!(s.amplitude(4), Complex64::ONE);
        assert_eq!(bit_at(4, 0, 3), 1);
        assert_eq!(bit_at(4, 1, 3), 0);
        assert_eq!(bit_at(4, 2, 3), 0);
    }

    #[test]
    fn pulse_fixes_equal_bit_states() {
        let s = StateVector::from_bits(&[0, 0]).unwrap();
        let out = apply_xy_pulse(&s, 0, 1, 1.234).unwrap();
        assert!(out.max_deviation(&s) < tol::EXACT_PHASE);
        let s = StateVector::from_bits(&[1, 1]).unwrap();
        let out = apply_xy_pulse(&s, 0, 1, 1.234).unwrap();
        assert!(out.max_deviation(&s) < tol::EXACT_PHASE);
    }

    #[test]
    fn quarter_swap_moves_excitation_with_phase_i() {
        // |10> -> i|01> at phi = pi/2.
        let s = StateVector::from_bits(&[1, 0]).unwrap();
        let out = apply_xy_pulse(&s, 0, 1, FRAC_PI_2).unwrap();
        assert!((out.amplitude(0b01) - I).norm() < tol::EXACT_PHASE);
        assert!(out.amplitude(0b10).norm() < tol::EXACT_PHASE);
    }

    #[test]
    fn zero_phase_is_identity() {
        let amps = vec![
            Complex64::new(0.5, 0.0),
            Complex64::new(0.0, 0.5),
            Complex64::new(-0.5, 0.0),
            Complex64::new(0.0, -0.5),
        ];
        let s = StateVector::from_amplitudes(2, amps).unwrap();
        let out = apply_xy_pulse(&s, 0, 1, 0.0).unwrap();
        assert!(out.max_deviation(&s) < tol::EXACT_PHASE);
    }

    #[test]
    fn pulse_acts_as_x_rotation_on_the_single_excitation_pair() {
        // alpha|10> + beta|01> evolves by the 2x2 rotation
        // [cos, i sin; i sin, cos] for any phi.
        let alpha = Complex64::new(0.6, 0.0);
        let beta = Complex64::new(0.0, 0.8);
        let amps = vec![Complex64::ZERO, beta, alpha, Complex64::ZERO];
        let s = StateVector::from_amplitudes(2, amps).unwrap();
        let phi = 0.7431;
        let out = apply_xy_pulse(&s, 0, 1, phi).unwrap();
        let c = Complex64::new(phi.cos(), 0.0);
        let is = Complex64::new(0.0, phi.sin());
        assert!((out.amplitude(0b10) - (c * alpha + is * beta)).norm() < tol::EXACT_PHASE);
        assert!((out.amplitude(0b01) - (c * beta + is * alpha)).norm() < tol::EXACT_PHASE);
        assert!((out.norm() - 1.0).abs() < tol::EXACT_PHASE);
    }

    #[test]
    fn pulse_index_errors() {
        let s = StateVector::zero_state(2).unwrap();
        assert!(matches!(
            apply_xy_pulse(&s, 0, 2, 0.1),
            Err(Error::QubitOutOfRange { .. })
        ));
        assert!(matches!(
            apply_xy_pulse(&s, 1, 1, 0.1),
            Err(Error::IdenticalQubits(1))
        ));
        assert!(matches!(
            apply_xy_pulse(&s, 0, 1, f64::NAN),
            Err(Error::NonFinite)
        ));
    }

    #[test]
    fn generator_matrix_two_qubits() {
        // A_01 on two qubits couples |01> (index 1) and |10> (index 2).
        let a = xy_generator_matrix(2, 0, 1).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                let want = if (r, c) == (1, 2) || (r, c) == (2, 1) {
                    Complex64::ONE
                } else {
                    Complex64::ZERO
                };
                assert_eq!(a[[r, c]], want, "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn generator_is_symmetric_in_the_pair_and_traceless() {
        let a = xy_generator_matrix(3, 0, 2).unwrap();
        let b = xy_generator_matrix(3, 2, 0).unwrap();
        assert_eq!(a, b);
        let trace: Complex64 = (0..8).map(|k| a[[k, k]]).sum();
        assert!(trace.norm() < tol::EXACT_PHASE);
        // Hermitian.
        for r in 0..8 {
            for c in 0..8 {
                assert!((a[[r, c]] - a[[c, r]].conj()).norm() < tol::EXACT_PHASE);
            }
        }
    }

    #[test]
    fn generator_commutes_with_excitation_number() {
        let n = 4;
        let dim = 1 << n;
        let a = xy_generator_matrix(n, 1, 3).unwrap();
        let num = Array2::from_shape_fn((dim, dim), |(r, c)| {
            if r == c {
                Complex64::new(r.count_ones() as f64, 0.0)
            } else {
                Complex64::ZERO
            }
        });
        let comm = a.dot(&num) - num.dot(&a);
        let worst = comm.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(worst < tol::EXACT_PHASE);
    }

    #[test]
    fn sector_basis_small_cases() {
        assert_eq!(sector_basis(3, 1).unwrap(), vec![1, 2, 4]);
        assert_eq!(sector_basis(3, 0).unwrap(), vec![0]);
        assert_eq!(sector_basis(4, 2).unwrap().len(), 6);
        assert!(matches!(
            sector_basis(3, 4),
            Err(Error::ExcitationOutOfRange { .. })
        ));
    }

    #[test]
    fn tensor_products() {
        let a = StateVector::from_bits(&[1, 0]).unwrap();
        let t = a.tensor(&a).unwrap();
        // |10> (x) |10> = |1010>, index 10.
        assert_eq!(t.amplitude(0b1010), Complex64::ONE);
        assert_eq!(t.num_qubits(), 4);

        // |0> (x) psi puts psi in the low half.
        let psi = StateVector::from_amplitudes(
            1,
            vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)],
        )
        .unwrap();
        let zero = StateVector::zero_state(1).unwrap();
        let t = zero.tensor(&psi).unwrap();
        assert_eq!(t.amplitude(0), Complex64::new(0.6, 0.0));
        assert_eq!(t.amplitude(1), Complex64::new(0.0, 0.8));
        assert_eq!(t.amplitude(2), Complex64::ZERO);
        assert_eq!(t.amplitude(3), Complex64::ZERO);

        // Two blocks of |100> form |100100>.
        let b = StateVector::from_bits(&[1, 0, 0]).unwrap();
        let two = b.tensor(&b).unwrap();
        assert_eq!(two.amplitude(0b100100), Complex64::ONE);
    }

    #[test]
    fn unitary_checks() {
        let u = Unitary::identity(4);
        assert!(u.unitarity_defect() < 1e-15);
        let bad = Array2::from_diag_elem(2, Complex64::new(2.0, 0.0));
        assert!(matches!(
            Unitary::new_checked(bad, 1e-10),
            Err(Error::NotUnitary { .. })
        ));
        let rect = Array2::<Complex64>::zeros((2, 3));
        assert!(matches!(
            Unitary::from_array(rect),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn register_caps() {
        assert!(matches!(
            StateVector::zero_state(17),
            Err(Error::RegisterTooLarge { .. })
        ));
        assert!(matches!(
            xy_generator_matrix(11, 0, 1),
            Err(Error::RegisterTooLarge { .. })
        ));
    }
}
