//! Reference matrices for the named gate targets the CLI verifies
//! against.

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use xyseq_core::Unitary;

fn phase(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

fn diag(entries: &[Complex64]) -> Unitary {
    Unitary::from_fn(entries.len(), |r, c| {
        if r == c {
            entries[r]
        } else {
            Complex64::ZERO
        }
    })
}

/// e^{i phi X}.
pub fn x_rotation(phi: f64) -> Unitary {
    Unitary::from_fn(2, |r, c| {
        if r == c {
            Complex64::new(phi.cos(), 0.0)
        } else {
            Complex64::new(0.0, phi.sin())
        }
    })
}

/// diag(e^{+i phi/2}, e^{-i phi/2}), the encoded phase gate's action.
pub fn z_rotation(phi: f64) -> Unitary {
    diag(&[phase(phi / 2.0), phase(-phi / 2.0)])
}

/// diag(1, 1, 1, -1).
pub fn controlled_phase_flip() -> Unitary {
    diag(&[
        Complex64::ONE,
        Complex64::ONE,
        Complex64::ONE,
        -Complex64::ONE,
    ])
}

/// Controlled-NOT on logical |a b>.
pub fn cnot() -> Unitary {
    Unitary::from_fn(4, |r, c| {
        let want = [0usize, 1, 3, 2][c];
        if r == want {
            Complex64::ONE
        } else {
            Complex64::ZERO
        }
    })
}

/// diag(e^{-i pi/4}, e^{+i pi/4}, e^{+i pi/4}, e^{-i pi/4}).
pub fn sqrt_minus_zz() -> Unitary {
    diag(&[
        phase(-FRAC_PI_4),
        phase(FRAC_PI_4),
        phase(FRAC_PI_4),
        phase(-FRAC_PI_4),
    ])
}

/// diag(e^{i phi/3}, e^{-2i phi/3}, e^{i phi/3}).
pub fn qutrit_z(phi: f64) -> Unitary {
    diag(&[
        phase(phi / 3.0),
        phase(-2.0 * phi / 3.0),
        phase(phi / 3.0),
    ])
}

/// The two-qutrit entangler on the 9-dimensional logical space: the
/// square root of -Z(x)Z phases on labels {0,1} x {0,1}, identity on
/// everything touching level 2.
pub fn qutrit_entangler() -> Unitary {
    Unitary::from_fn(9, |r, c| {
        if r != c {
            return Complex64::ZERO;
        }
        let (a, b) = (r / 3, r % 3);
        if a == 2 || b == 2 {
            Complex64::ONE
        } else if a == b {
            phase(-FRAC_PI_4)
        } else {
            phase(FRAC_PI_4)
        }
    })
}
