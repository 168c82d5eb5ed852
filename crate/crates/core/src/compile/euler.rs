//! X-Z-X angle extraction for 2x2 unitaries.
//!
//! Every U in U(2) factors, up to a global phase, as
//!
//! ```text
//!   U ~ e^{i a X} . e^{i b Z} . e^{i c X}
//! ```
//!
//! with b in [0, pi/2] in the generic branch. Conjugating by the
//! Hadamard swaps X and Z, so the angles are read off the Z-X-Z form
//! of H U H: for V = e^{iaZ} e^{ibX} e^{icZ} in SU(2),
//!
//! ```text
//!   V = [ e^{i(a+c)} cos b     i e^{i(a-c)} sin b ]
//!       [ i e^{-i(a-c)} sin b  e^{-i(a+c)} cos b  ]
//! ```
//!
//! which pins b from the moduli and (a, c) from the phases.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sim::Unitary;
use crate::tol;

const DEGENERATE_EPS: f64 = 1e-14;

/// Angles of U ~ e^{i a X} e^{i b Z} e^{i c X}; `first` (c) is applied
/// first when the factors become a schedule, `last` (a) last.
#[derive(Debug, Clone, Copy)]
pub(crate) struct XzxAngles {
    pub last: f64,
    pub z: f64,
    pub first: f64,
}

/// Split a 2x2 unitary into det-phase and special part: U = e^{i gamma} S
/// with det S = 1 and gamma = arg(det U)/2 on the principal branch.
pub(crate) fn su2_split(u: &Unitary) -> Result<(f64, [[Complex64; 2]; 2])> {
    if u.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: u.dim(),
        });
    }
    let defect = u.unitarity_defect();
    if defect > tol::TARGET_UNITARITY {
        return Err(Error::NotUnitary { defect });
    }
    let det = u.entry(0, 0) * u.entry(1, 1) - u.entry(0, 1) * u.entry(1, 0);
    let gamma = det.arg() / 2.0;
    let root = Complex64::from_polar(det.norm().sqrt(), gamma);
    let s = [
        [u.entry(0, 0) / root, u.entry(0, 1) / root],
        [u.entry(1, 0) / root, u.entry(1, 1) / root],
    ];
    Ok((gamma, s))
}

/// Extract X-Z-X angles of U up to global phase.
pub(crate) fn xzx_angles(u: &Unitary) -> Result<XzxAngles> {
    let (_, s) = su2_split(u)?;

    // Pure Z rotation: keep both X factors at zero.
    if u.entry(0, 1).norm() < DEGENERATE_EPS && u.entry(1, 0).norm() < DEGENERATE_EPS {
        return Ok(XzxAngles {
            last: 0.0,
            z: s[0][0].arg(),
            first: 0.0,
        });
    }

    // V = H S H, written out to avoid a matrix product.
    let half = Complex64::new(0.5, 0.0);
    let alpha = (s[0][0] + s[0][1] + s[1][0] + s[1][1]) * half;
    let beta = (s[0][0] - s[0][1] + s[1][0] - s[1][1]) * half;

    if beta.norm() < DEGENERATE_EPS {
        // V diagonal: U is a pure X rotation (possibly phased).
        return Ok(XzxAngles {
            last: alpha.arg(),
            z: 0.0,
            first: 0.0,
        });
    }
    let minus_i_beta = beta * Complex64::new(0.0, -1.0);
    if alpha.norm() < DEGENERATE_EPS {
        // V anti-diagonal: half-turn Z factor, residual phase folded
        // into the last X factor.
        return Ok(XzxAngles {
            last: minus_i_beta.arg(),
            z: std::f64::consts::FRAC_PI_2,
            first: 0.0,
        });
    }
    let z = beta.norm().atan2(alpha.norm());
    let sum = alpha.arg();
    let diff = minus_i_beta.arg();
    Ok(XzxAngles {
        last: (sum + diff) / 2.0,
        z,
        first: (sum - diff) / 2.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn mat2(m: [[Complex64; 2]; 2]) -> Unitary {
        Unitary::from_array(array![[m[0][0], m[0][1]], [m[1][0], m[1][1]]]).unwrap()
    }

    fn exp_ix(a: f64) -> [[Complex64; 2]; 2] {
        [
            [c(a.cos(), 0.0), c(0.0, a.sin())],
            [c(0.0, a.sin()), c(a.cos(), 0.0)],
        ]
    }

    fn exp_iz(b: f64) -> [[Complex64; 2]; 2] {
        [
            [Complex64::from_polar(1.0, b), Complex64::ZERO],
            [Complex64::ZERO, Complex64::from_polar(1.0, -b)],
        ]
    }

    fn mul(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
        let mut out = [[Complex64::ZERO; 2]; 2];
        for r in 0..2 {
            for cc in 0..2 {
                out[r][cc] = a[r][0] * b[0][cc] + a[r][1] * b[1][cc];
            }
        }
        out
    }

    fn fidelity(u: &Unitary, m: [[Complex64; 2]; 2]) -> f64 {
        let v = mat2(m);
        u.overlap(&v).norm() / 2.0
    }

    fn reconstructs(u: &Unitary) {
        let ang = xzx_angles(u).unwrap();
        let m = mul(mul(exp_ix(ang.last), exp_iz(ang.z)), exp_ix(ang.first));
        assert!(
            1.0 - fidelity(u, m) < tol::EXACT_PHASE,
            "angles {ang:?} fail for {u:?}"
        );
    }

    #[test]
    fn reconstructs_named_gates() {
        let h = mat2([
            [c(1.0 / 2f64.sqrt(), 0.0), c(1.0 / 2f64.sqrt(), 0.0)],
            [c(1.0 / 2f64.sqrt(), 0.0), c(-1.0 / 2f64.sqrt(), 0.0)],
        ]);
        reconstructs(&h);
        let x = mat2([[Complex64::ZERO, Complex64::ONE], [Complex64::ONE, Complex64::ZERO]]);
        reconstructs(&x);
        let t = mat2([
            [Complex64::ONE, Complex64::ZERO],
            [Complex64::ZERO, Complex64::from_polar(1.0, FRAC_PI_4)],
        ]);
        reconstructs(&t);
        reconstructs(&Unitary::identity(2));
    }

    #[test]
    fn diagonal_inputs_take_the_pure_z_branch() {
        for w in [0.3, -1.2, FRAC_PI_2 + 0.4, PI - 1e-3] {
            let u = mat2(exp_iz(w));
            let ang = xzx_angles(&u).unwrap();
            assert_eq!(ang.last, 0.0);
            assert_eq!(ang.first, 0.0);
            reconstructs(&u);
        }
    }

    #[test]
    fn x_rotations_take_the_single_pulse_branch() {
        for w in [0.3, -2.9, FRAC_PI_2] {
            let u = mat2(exp_ix(w));
            let ang = xzx_angles(&u).unwrap();
            assert!(ang.z.abs() < 1e-12);
            assert!(ang.first.abs() < 1e-12);
            reconstructs(&u);
        }
    }

    #[test]
    fn parameter_sweep_reconstructs() {
        // Deterministic sweep over a grid of U(2) elements.
        let mut count = 0;
        for &a in &[0.0, 0.5, -1.3, 2.9] {
            for &b in &[0.0, 0.2, 1.1, FRAC_PI_2] {
                for &cc in &[0.0, -0.7, 2.2] {
                    for &g in &[0.0, 0.9, -2.4] {
                        let m = mul(mul(exp_ix(a), exp_iz(b)), exp_ix(cc));
                        let ph = Complex64::from_polar(1.0, g);
                        let u = mat2([
                            [m[0][0] * ph, m[0][1] * ph],
                            [m[1][0] * ph, m[1][1] * ph],
                        ]);
                        reconstructs(&u);
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 144);
    }

    #[test]
    fn rejects_non_unitary_input() {
        let m = mat2([[c(1.5, 0.0), Complex64::ZERO], [Complex64::ZERO, Complex64::ONE]]);
        assert!(matches!(xzx_angles(&m), Err(Error::NotUnitary { .. })));
    }
}
