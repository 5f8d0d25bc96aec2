//! Brute-force verifiers for the closed forms.
//!
//! Nothing here calls into the closed-form code paths it is used to check:
//! the spectral integrals are evaluated on the real frequency axis, the
//! geometric factors by nested quadrature over the medium.

mod provenance;
mod quad;

use num_complex::Complex64;

pub use provenance::{provenance_checks, Check};
pub use quad::{quad_adaptive, quad_adaptive_with, QuadError, QuadSettings, QuadratureReport, Tolerance};

use crate::atom::PairConfiguration;
use crate::error::{Error, Result};
use crate::response::SharpPole;

/// How the integrand behaves beyond the quadrature cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tail {
    /// `weight(ω) ~ C±/ω²` on each side; the remainder is added analytically.
    InverseSquare,
    /// The weight is already negligible past the cutoff.
    Negligible,
}

/// ∫ Σ_k s_k / (ω − p_k − iσ_k 0⁺) · weight(ω) dω over the whole real line.
///
/// Each sharp pole is split as PV(1/(ω − p)) + iσπ δ(ω − p); the principal
/// value is folded about the pole,
/// PV∫ g(ω)/(ω − p) dω = ∫_0^∞ [g(p + t) − g(p − t)] / t dt,
/// which leaves a regular integrand. `features` are frequencies where the
/// weight is peaked or kinked; they seed the subdivision in the folded
/// variable.
pub fn sharp_pole_integral<W: Fn(f64) -> Complex64>(
    poles: &[SharpPole],
    weight: W,
    cutoff: f64,
    features: &[f64],
    tail: Tail,
    settings: &QuadSettings,
) -> std::result::Result<QuadratureReport, QuadError> {
    let folded = |t: f64| {
        let mut s = Complex64::new(0.0, 0.0);
        for p in poles {
            s += p.weight * (weight(p.at + t) - weight(p.at - t)) / t;
        }
        s
    };
    let mut seeds = Vec::with_capacity(poles.len() * features.len());
    for p in poles {
        for f in features {
            seeds.push((f - p.at).abs());
        }
    }
    let mut report = quad_adaptive_with(folded, 0.0, cutoff, settings, &seeds)?;

    let mut delta = Complex64::new(0.0, 0.0);
    for p in poles {
        delta += Complex64::new(0.0, p.side * std::f64::consts::PI) * p.weight * weight(p.at);
    }
    report.value += delta;

    if tail == Tail::InverseSquare {
        // weight ≈ C±/ω² beyond the cutoff. For a pole at p and t > T:
        // [C+/(p+t)² − C−/(p−t)²]/t ≈ (C+ − C−)/t³ − 2p (C+ + C−)/t⁴.
        let c_plus = weight(cutoff) * cutoff * cutoff;
        let c_minus = weight(-cutoff) * cutoff * cutoff;
        let mut t = Complex64::new(0.0, 0.0);
        let mut reach: f64 = 0.0;
        for p in poles {
            t += p.weight
                * ((c_plus - c_minus) / (2.0 * cutoff * cutoff)
                    - 2.0 * p.at * (c_plus + c_minus) / (3.0 * cutoff.powi(3)));
            reach = reach.max(p.at.abs());
        }
        report.value += t;
        report.abs_error_estimate += t.norm() * (reach / cutoff).max(f64::EPSILON);
    }
    Ok(report)
}

/// ∫_halfspace dV / |r − r_probe|⁶ for a probe at height `z0` above the
/// interface, by nested quadrature in cylindrical coordinates.
///
/// The inner radial integral runs over ρ on a mapped variable so that both
/// levels are plain finite-interval quadratures.
pub fn halfspace_factor_cubature(z0: f64, tol: f64) -> Result<f64> {
    if !(z0 > 0.0) {
        return Err(Error::ZeroSeparation(z0));
    }
    let inner_tol = Tolerance {
        abs: 0.0,
        rel: tol * 1e-3,
    };
    // Depth below the interface: z = z0 + d, d ∈ [0, ∞) mapped by d = z0 s/(1−s).
    let outer = |s: f64| -> Complex64 {
        if s >= 1.0 {
            return Complex64::new(0.0, 0.0);
        }
        let z = z0 + z0 * s / (1.0 - s);
        let dz_ds = z0 / ((1.0 - s) * (1.0 - s));
        // ρ = z v/(1−v), 2π ρ dρ / (z² + ρ²)³
        let radial = |v: f64| -> Complex64 {
            if v >= 1.0 {
                return Complex64::new(0.0, 0.0);
            }
            let rho = z * v / (1.0 - v);
            let drho = z / ((1.0 - v) * (1.0 - v));
            let r2 = z * z + rho * rho;
            Complex64::new(2.0 * std::f64::consts::PI * rho * drho / (r2 * r2 * r2), 0.0)
        };
        let inner = quad_adaptive(radial, 0.0, 1.0, inner_tol, &[])
            .map(|r| r.value)
            .unwrap_or(Complex64::new(f64::NAN, 0.0));
        inner * dz_ds
    };
    let report = quad_adaptive(
        outer,
        0.0,
        1.0,
        Tolerance {
            abs: 0.0,
            rel: tol * 1e-2,
        },
        &[],
    )?;
    Ok(report.value.re)
}

/// ∫_L^∞ z⁻³ dz.
pub fn slab_factor(gap: f64) -> Result<f64> {
    if !(gap > 0.0) {
        return Err(Error::ZeroSeparation(gap));
    }
    Ok(1.0 / (2.0 * gap * gap))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairCheck {
    pub closed: f64,
    pub quadrature: f64,
    pub gap: f64,
    pub passed: bool,
}

/// Compare the near-zone closed-form shift against its real-axis quadrature.
pub fn verify_pair_closed(cfg: &PairConfiguration, separation: f64, tol: f64) -> Result<PairCheck> {
    let closed = crate::pair::pair_closed_nearzone(cfg, separation)?.shift;
    let quadrature = crate::pair::pair_quadrature_nearzone(cfg, separation)?.shift;
    let gap = relative_gap(quadrature, closed);
    Ok(PairCheck {
        closed,
        quadrature,
        gap,
        passed: gap <= tol,
    })
}

/// |a − b| / |b|, falling back to the absolute difference when b is zero.
pub fn relative_gap(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        (a - b).abs()
    } else {
        ((a - b) / b).abs()
    }
}
