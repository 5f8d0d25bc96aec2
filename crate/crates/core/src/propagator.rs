//! Free-space photon propagator for the electric field, in the
//! frequency/coordinate representation.
//!
//! D^{νν′}(ω, r) = [ δ_{νν′} (ω² + i|ω|/r − 1/r²)
//!                 + r̂_ν r̂_ν′ (3/r² − 3i|ω|/r − ω²) ] · e^{i|ω|r} / r
//!
//! which reduces to the static dipole tensor (3 r̂ r̂ − 1)/r³ as ω r → 0.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Vec3 = [f64; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Time-ordered branch, D₁₁.
    Forward,
    /// Anti-time-ordered branch, D₂₂ = D₁₁*.
    Conjugate,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DyadicKernel {
    pub m: [[Complex64; 3]; 3],
    pub omega: f64,
    pub r: Vec3,
}

impl DyadicKernel {
    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    /// Σ_{νν′} self[ν][ν′] · other[ν′][ν]
    pub fn contract(&self, other: &DyadicKernel) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for i in 0..3 {
            for j in 0..3 {
                s += self.m[i][j] * other.m[j][i];
            }
        }
        s
    }
}

pub fn dyadic(omega: f64, r: Vec3, branch: Branch) -> Result<DyadicKernel> {
    let dist = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if !(dist > 0.0) || !dist.is_finite() {
        return Err(Error::ZeroSeparation(dist));
    }
    let w = omega.abs();
    let unit = [r[0] / dist, r[1] / dist, r[2] / dist];
    let inv_r = 1.0 / dist;
    let inv_r2 = inv_r * inv_r;

    let transverse = Complex64::new(w * w - inv_r2, w * inv_r);
    let longitudinal = Complex64::new(3.0 * inv_r2 - w * w, -3.0 * w * inv_r);
    let phase = Complex64::from_polar(inv_r, w * dist);

    let mut m = [[Complex64::new(0.0, 0.0); 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let delta = if i == j { 1.0 } else { 0.0 };
            let mut v = (transverse * delta + longitudinal * (unit[i] * unit[j])) * phase;
            if branch == Branch::Conjugate {
                v = v.conj();
            }
            *cell = v;
        }
    }
    Ok(DyadicKernel { m, omega, r })
}

/// Σ_{νν′} D^{νν′}(ω, R) D^{ν′ν}(ω, −R) / 9.
///
/// The two factors of 1/3 from isotropic averaging are already carried by
/// the scalar polarizabilities, so the near-zone value is (2/3)/R⁶.
pub fn contracted_pair_kernel(omega: f64, separation: f64) -> Result<Complex64> {
    if !(separation > 0.0) {
        return Err(Error::ZeroSeparation(separation));
    }
    let forward = dyadic(omega, [0.0, 0.0, separation], Branch::Forward)?;
    let backward = dyadic(omega, [0.0, 0.0, -separation], Branch::Forward)?;
    Ok(forward.contract(&backward) / 9.0)
}
