//! Dispersion interaction of two atoms: energy shift U and induced
//! half-width Γ_A/2 of the probe atom A.
//!
//! Both come from one spectral integral over real frequencies of the
//! product of coherent polarizabilities and two photon propagators,
//! M = (i/4π) ∫ Tr[D(ω, R) D(ω, −R)] α_A(ω) α_B(ω) dω,
//! with U = Re M and Γ_A/2 = −Im M. The probe's own width is neglected, so
//! its poles sit infinitesimally off the real axis.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::atom::{AtomState, PairConfiguration};
use crate::error::{Error, Result};
use crate::oracle::{sharp_pole_integral, QuadSettings, Tail, Tolerance};
use crate::propagator::contracted_pair_kernel;
use crate::response::{polarizability_at, sharp_polarizability, ResponseKind};

/// Near-zone validity threshold on R · max(ω_A, ω_B).
pub const NEAR_ZONE_LIMIT: f64 = 1e-2;

/// Quadrature cutoff in units of the largest transition frequency.
pub const CUTOFF_FACTOR: f64 = 1e4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftWidth {
    pub shift: f64,
    pub half_width: f64,
    /// Exact resonance with zero width: the shift is reported as its limit
    /// 0 and the width is unbounded.
    pub degenerate: bool,
}

impl ShiftWidth {
    fn from_mass_operator(m: Complex64) -> Self {
        Self {
            shift: m.re,
            half_width: -m.im,
            degenerate: false,
        }
    }
}

fn check_separation(r: f64) -> Result<()> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::ZeroSeparation(r));
    }
    Ok(())
}

/// Near-zone closed forms, U ∝ 1/R⁶.
///
/// With K = 2 d2_A d2_B / (3 R⁶), Δ = ω_A − ω_B, Σ = ω_A + ω_B, g = γ_B/2:
///
/// | A B | U               | Γ_A/2           |
/// |-----|-----------------|-----------------|
/// | e g | +K Δ/(Δ² + g²)  | K g/(Δ² + g²)   |
/// | g e | −K Δ/(Δ² + g²)  | K g/(Δ² + g²)   |
/// | g g | −K Σ/(Σ² + g²)  | K g/(Σ² + g²)   |
/// | e e | +K Σ/(Σ² + g²)  | K g/(Σ² + g²)   |
pub fn pair_closed_nearzone(cfg: &PairConfiguration, separation: f64) -> Result<ShiftWidth> {
    check_separation(separation)?;
    let wa = cfg.atom_a.omega();
    let wb = cfg.atom_b.omega();
    let g = cfg.atom_b.half_gamma();
    let k = 2.0 / (3.0 * separation.powi(6)) * (cfg.atom_a.d2() * cfg.atom_b.d2());

    let resonant = matches!(
        (cfg.state_a, cfg.state_b),
        (AtomState::Excited, AtomState::Ground) | (AtomState::Ground, AtomState::Excited)
    );
    let mismatch = if resonant { wa - wb } else { wa + wb };
    let den = mismatch * mismatch + g * g;
    if den == 0.0 {
        return Ok(ShiftWidth {
            shift: 0.0,
            half_width: f64::INFINITY,
            degenerate: true,
        });
    }
    let lorentz = k * (mismatch / den);
    let shift = match (cfg.state_a, cfg.state_b) {
        (AtomState::Excited, AtomState::Ground) | (AtomState::Excited, AtomState::Excited) => lorentz,
        (AtomState::Ground, AtomState::Excited) | (AtomState::Ground, AtomState::Ground) => -lorentz,
    };
    Ok(ShiftWidth {
        shift,
        half_width: k * (g / den),
        degenerate: false,
    })
}

fn require_partner_width(cfg: &PairConfiguration) -> Result<()> {
    if cfg.atom_b.gamma() <= 0.0 {
        return Err(Error::PoleOnAxis {
            omega: cfg.atom_b.omega(),
        });
    }
    Ok(())
}

fn features(cfg: &PairConfiguration) -> [f64; 5] {
    let wa = cfg.atom_a.omega();
    let wb = cfg.atom_b.omega();
    [-wb, wb, 0.0, -wa, wa]
}

/// ∫ α_A(ω) α_B(ω) dω for the near-zone kernel, on the real axis.
pub(crate) fn response_product_integral(cfg: &PairConfiguration) -> Result<Complex64> {
    require_partner_width(cfg)?;
    let probe = sharp_polarizability(&cfg.atom_a, cfg.state_a, ResponseKind::Coherent);
    let partner = cfg.atom_b;
    let state_b = cfg.state_b;
    let weight = move |w: f64| {
        polarizability_at(&partner, state_b, ResponseKind::Coherent, Complex64::new(w, 0.0))
            .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
    };
    let cutoff = CUTOFF_FACTOR * cfg.atom_a.omega().max(cfg.atom_b.omega());
    let settings = QuadSettings::new(Tolerance { abs: 0.0, rel: 1e-11 }).with_budget(8000);
    let report = sharp_pole_integral(&probe, weight, cutoff, &features(cfg), Tail::InverseSquare, &settings)?;
    Ok(report.value)
}

/// Near-zone shift and width by direct quadrature of
/// M = (3i / 2πR⁶) ∫ α_A(ω) α_B(ω) dω.
pub fn pair_quadrature_nearzone(cfg: &PairConfiguration, separation: f64) -> Result<ShiftWidth> {
    check_separation(separation)?;
    let integral = response_product_integral(cfg)?;
    let m = Complex64::new(0.0, 3.0 / (2.0 * PI * separation.powi(6))) * integral;
    Ok(ShiftWidth::from_mass_operator(m))
}

/// Shift and width from the full propagator contraction at any separation,
/// with the integrand damped by e^{−η|ω|}.
///
/// Retardation makes the undamped integrand oscillate with O(1) amplitude,
/// so a finite η is required; see [`pair_spectral_extrapolated`] for the
/// η → 0 limit.
pub fn pair_spectral_general(cfg: &PairConfiguration, separation: f64, eta: f64) -> Result<ShiftWidth> {
    check_separation(separation)?;
    require_partner_width(cfg)?;
    let limit = 0.1 * cfg.atom_a.omega().min(cfg.atom_b.omega());
    if !(eta > 0.0) || eta > limit {
        return Err(Error::RegulatorTooLarge { eta, limit });
    }
    let probe = sharp_polarizability(&cfg.atom_a, cfg.state_a, ResponseKind::Coherent);
    let partner = cfg.atom_b;
    let state_b = cfg.state_b;
    let weight = move |w: f64| {
        let kernel = contracted_pair_kernel(w, separation).unwrap_or(Complex64::new(f64::NAN, 0.0));
        let alpha = polarizability_at(&partner, state_b, ResponseKind::Coherent, Complex64::new(w, 0.0))
            .unwrap_or(Complex64::new(f64::NAN, f64::NAN));
        9.0 * kernel * alpha * (-eta * w.abs()).exp()
    };
    // e^{−40} leaves nothing the tolerance can see.
    let cutoff = (40.0 / eta).max(CUTOFF_FACTOR * cfg.atom_a.omega().max(cfg.atom_b.omega()));
    let mut marks = features(cfg).to_vec();
    let period = PI / separation;
    let n_periods = ((cutoff / period) as usize).min(4000);
    marks.extend((1..=n_periods).map(|k| k as f64 * period));
    let settings = QuadSettings::new(Tolerance { abs: 0.0, rel: 1e-11 }).with_budget(60_000);
    let report = sharp_pole_integral(&probe, weight, cutoff, &marks, Tail::Negligible, &settings)?;
    let m = Complex64::new(0.0, 1.0 / (4.0 * PI)) * report.value;
    Ok(ShiftWidth::from_mass_operator(m))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralEstimate {
    pub value: ShiftWidth,
    /// The ladder η, η/2, η/4 that was extrapolated.
    pub eta: [f64; 3],
    /// Whether R · max(ω) is inside the near zone, the only regime where
    /// this path has been checked against a closed form.
    pub near_zone: bool,
}

/// Richardson extrapolation of [`pair_spectral_general`] to η → 0 from the
/// geometric ladder η₀, η₀/2, η₀/4 (removes the O(η) and O(η²) terms).
pub fn pair_spectral_extrapolated(cfg: &PairConfiguration, separation: f64, eta0: f64) -> Result<SpectralEstimate> {
    let eta = [eta0, 0.5 * eta0, 0.25 * eta0];
    let v = [
        pair_spectral_general(cfg, separation, eta[0])?,
        pair_spectral_general(cfg, separation, eta[1])?,
        pair_spectral_general(cfg, separation, eta[2])?,
    ];
    let extrapolate = |a: f64, b: f64, c: f64| (8.0 * c - 6.0 * b + a) / 3.0;
    let value = ShiftWidth {
        shift: extrapolate(v[0].shift, v[1].shift, v[2].shift),
        half_width: extrapolate(v[0].half_width, v[1].half_width, v[2].half_width),
        degenerate: false,
    };
    let near_zone = separation * cfg.atom_a.omega().max(cfg.atom_b.omega()) <= NEAR_ZONE_LIMIT;
    Ok(SpectralEstimate { value, eta, near_zone })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atom::TwoLevelAtom;

    use AtomState::{Excited as E, Ground as G};

    fn cfg(sa: AtomState, sb: AtomState) -> PairConfiguration {
        let a = TwoLevelAtom::new(1.0, 0.0, 1.0).unwrap();
        let b = TwoLevelAtom::new(0.9, 0.02, 1.0).unwrap();
        PairConfiguration::new(a, sa, b, sb)
    }

    #[test]
    fn canonical_closed_values() {
        // (2/3)·0.1/0.0101, (2/3)·1.9/3.6101, (2/3)·0.01/0.0101
        let eg = pair_closed_nearzone(&cfg(E, G), 1.0).unwrap();
        assert!((eg.shift - 2.0 / 3.0 * 0.1 / 0.0101).abs() < 1e-13);
        assert!((eg.shift - 6.6007).abs() < 1e-4);
        assert!((eg.half_width - 0.66007).abs() < 1e-5);
        let gg = pair_closed_nearzone(&cfg(G, G), 1.0).unwrap();
        assert!((gg.shift + 0.35087).abs() < 1e-5);
        let ee = pair_closed_nearzone(&cfg(E, E), 1.0).unwrap();
        assert!((ee.shift - 0.35087).abs() < 1e-5);
    }

    #[test]
    fn on_resonance_shift_vanishes() {
        let mut c = cfg(E, G);
        c.atom_b = TwoLevelAtom::new(1.0, 0.02, 1.0).unwrap();
        let r = pair_closed_nearzone(&c, 1.0).unwrap();
        assert_eq!(r.shift, 0.0);
        assert!(!r.degenerate);
        assert!((r.half_width - 2.0 / 3.0 / 0.01).abs() < 1e-12);
    }

    #[test]
    fn degenerate_resonance_flagged() {
        let mut c = cfg(E, G);
        c.atom_b = TwoLevelAtom::new(1.0, 0.0, 1.0).unwrap();
        let r = pair_closed_nearzone(&c, 1.0).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.shift, 0.0);
    }

    #[test]
    fn zero_separation_rejected() {
        assert!(matches!(
            pair_closed_nearzone(&cfg(E, G), 0.0),
            Err(Error::ZeroSeparation(_))
        ));
        assert!(matches!(
            pair_quadrature_nearzone(&cfg(E, G), 0.0),
            Err(Error::ZeroSeparation(_))
        ));
    }

    #[test]
    fn quadrature_needs_partner_width() {
        let mut c = cfg(G, G);
        c.atom_b = TwoLevelAtom::new(0.9, 0.0, 1.0).unwrap();
        assert!(matches!(
            pair_quadrature_nearzone(&c, 1.0),
            Err(Error::PoleOnAxis { .. })
        ));
    }

    #[test]
    fn quadrature_matches_closed_forms() {
        for (sa, sb) in [(E, G), (G, E), (G, G), (E, E)] {
            let c = cfg(sa, sb);
            let q = pair_quadrature_nearzone(&c, 1.0).unwrap();
            let k = pair_closed_nearzone(&c, 1.0).unwrap();
            assert!(
                ((q.shift - k.shift) / k.shift).abs() < 1e-8,
                "{sa:?}{sb:?}: {} vs {}",
                q.shift,
                k.shift
            );
            assert!(
                ((q.half_width - k.half_width) / k.half_width).abs() < 1e-6,
                "{sa:?}{sb:?} width: {} vs {}",
                q.half_width,
                k.half_width
            );
        }
    }

    #[test]
    fn extrapolated_spectral_path_collapses_to_near_zone() {
        let r: f64 = 1e-3;
        for (sa, sb, want) in [(E, G, 6.6007e18), (G, G, -0.35087e18)] {
            let c = cfg(sa, sb);
            let est = pair_spectral_extrapolated(&c, r, 0.1 * 0.02).unwrap();
            assert!(est.near_zone);
            assert_eq!(est.eta, [0.002, 0.001, 0.0005]);
            let closed = pair_closed_nearzone(&c, r).unwrap().shift;
            assert!(
                ((est.value.shift - closed) / closed).abs() < 1e-3,
                "{:?} vs {closed}",
                est.value
            );
            assert!(((est.value.shift - want) / want).abs() < 1e-3);
        }
    }

    #[test]
    fn regulator_bound() {
        let c = cfg(E, G);
        assert!(matches!(
            pair_spectral_general(&c, 1e-3, 0.2),
            Err(Error::RegulatorTooLarge { .. })
        ));
        assert!(matches!(
            pair_spectral_general(&c, 1e-3, 0.0),
            Err(Error::RegulatorTooLarge { .. })
        ));
    }
}
