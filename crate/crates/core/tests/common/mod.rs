//! Shared helpers for the integration suites: seeded Haar-random
//! unitaries and small conveniences.

use ndarray::Array2;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use xyseq_core::Unitary;

pub fn normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// Haar-random SU(2) via a uniform unit quaternion.
pub fn haar_su2(rng: &mut ChaCha8Rng) -> Unitary {
    let q: Vec<f64> = (0..4).map(|_| normal(rng)).collect();
    let norm = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    let (a, b, c, d) = (q[0] / norm, q[1] / norm, q[2] / norm, q[3] / norm);
    Unitary::from_fn(2, |r, col| match (r, col) {
        (0, 0) => Complex64::new(a, b),
        (0, 1) => Complex64::new(c, d),
        (1, 0) => Complex64::new(-c, d),
        (1, 1) => Complex64::new(a, -b),
        _ => unreachable!(),
    })
}

/// Haar-random U(2): SU(2) times a uniform phase.
pub fn haar_u2(rng: &mut ChaCha8Rng) -> Unitary {
    let su = haar_su2(rng);
    let ph = Complex64::from_polar(1.0, rng.random_range(-std::f64::consts::PI..std::f64::consts::PI));
    Unitary::from_fn(2, |r, c| su.entry(r, c) * ph)
}

/// Haar-random SU(3): QR of a complex Ginibre matrix with the positive
/// diagonal convention, then the determinant phase divided out.
pub fn haar_su3(rng: &mut ChaCha8Rng) -> Unitary {
    let g = Array2::from_shape_fn((3, 3), |_| Complex64::new(normal(rng), normal(rng)));
    // Gram-Schmidt on columns; normalizing to positive diagonal makes
    // the resulting Q Haar on U(3).
    let mut q = [[Complex64::ZERO; 3]; 3];
    for col in 0..3 {
        let mut v: Vec<Complex64> = (0..3).map(|r| g[[r, col]]).collect();
        #[allow(clippy::needless_range_loop)]
        for prev in 0..col {
            let proj: Complex64 = (0..3).map(|r| q[r][prev].conj() * v[r]).sum();
            for r in 0..3 {
                v[r] -= proj * q[r][prev];
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for r in 0..3 {
            q[r][col] = v[r] / norm;
        }
    }
    let det = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1])
        - q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0])
        + q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
    let fix = Complex64::from_polar(1.0, -det.arg() / 3.0);
    Unitary::from_fn(3, |r, c| q[r][c] * fix)
}
