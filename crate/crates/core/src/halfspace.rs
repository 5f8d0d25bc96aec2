//! A single atom in front of a dilute gas filling a half-space.
//!
//! Summing the near-zone pair potential over the medium volume turns 1/R⁶
//! into π/(6 z0³) per unit density, so every potential here is the pair
//! coefficient times n π/(6 z0³), superposed over ground and excited
//! partners.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::atom::{AtomState, MediumState, PairConfiguration, TwoLevelAtom};
use crate::error::{Error, Result};
use crate::oracle::{sharp_pole_integral, QuadSettings, Tail, Tolerance};
use crate::pair::{pair_closed_nearzone, CUTOFF_FACTOR};
use crate::response::{permittivity, sharp_polarizability, ResponseKind};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceProblem {
    pub probe: TwoLevelAtom,
    pub probe_state: AtomState,
    pub medium: MediumState,
    pub z0: f64,
}

impl SurfaceProblem {
    pub fn new(probe: TwoLevelAtom, probe_state: AtomState, medium: MediumState, z0: f64) -> Result<Self> {
        if !(z0 > 0.0 && z0.is_finite()) {
            return Err(Error::ZeroSeparation(z0));
        }
        Ok(Self {
            probe,
            probe_state,
            medium,
            z0,
        })
    }

    /// Excited probe in front of a partly excited medium: computed by the
    /// same superposition but not one of the tabulated cases.
    pub fn beyond_printed_forms(&self) -> bool {
        self.probe_state == AtomState::Excited && self.medium.n_e() > 0.0
    }

    /// Whether any contributing pair term sits on an exact zero-width resonance.
    pub fn is_degenerate(&self) -> bool {
        self.partner_terms()
            .any(|(cfg, _)| pair_closed_nearzone(&cfg, 1.0).map(|r| r.degenerate).unwrap_or(false))
    }

    fn partner_terms(&self) -> impl Iterator<Item = (PairConfiguration, f64)> + '_ {
        [
            (AtomState::Ground, self.medium.n_g()),
            (AtomState::Excited, self.medium.n_e()),
        ]
        .into_iter()
        .filter(|(_, n)| *n > 0.0)
        .map(move |(state, n)| {
            (
                PairConfiguration::new(self.probe, self.probe_state, *self.medium.species(), state),
                n,
            )
        })
    }
}

/// Half-space volume integral of 1/R⁶ for a probe at height z0.
pub fn halfspace_factor(z0: f64) -> f64 {
    PI / (6.0 * z0 * z0 * z0)
}

/// Pairwise-summed near-zone potential of the probe.
pub fn surface_potential_qed(p: &SurfaceProblem) -> f64 {
    let geometric = halfspace_factor(p.z0);
    p.partner_terms()
        .map(|(cfg, n)| {
            // R = 1 gives the bare coefficient K of K/R⁶; separation is validated.
            let k = pair_closed_nearzone(&cfg, 1.0).map(|r| r.shift).unwrap_or(0.0);
            k * n * geometric
        })
        .sum()
}

/// The same potential from U = Re[(i / 16π z0³) ∫ α_A(ω) (ε(ω) − 1) dω]
/// with the coherent permittivity of the medium, integrated numerically.
pub fn surface_potential_spectral(p: &SurfaceProblem) -> Result<f64> {
    let species = *p.medium.species();
    if species.gamma() <= 0.0 {
        return Err(Error::PoleOnAxis { omega: species.omega() });
    }
    let probe = sharp_polarizability(&p.probe, p.probe_state, ResponseKind::Coherent);
    let medium = p.medium;
    let weight = move |w: f64| {
        permittivity(&medium, ResponseKind::Coherent, w)
            .map(|e| e.value() - 1.0)
            .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
    };
    let wa = p.probe.omega();
    let wb = species.omega();
    let cutoff = CUTOFF_FACTOR * wa.max(wb);
    let settings = QuadSettings::new(Tolerance { abs: 0.0, rel: 1e-11 }).with_budget(8000);
    let report = sharp_pole_integral(
        &probe,
        weight,
        cutoff,
        &[-wb, wb, 0.0, -wa, wa],
        Tail::InverseSquare,
        &settings,
    )?;
    let z3 = p.z0 * p.z0 * p.z0;
    Ok((Complex64::new(0.0, 1.0 / (16.0 * PI * z3)) * report.value).re)
}

/// Single-atom potential implied by the dilute Lifshitz force formula for a
/// cold medium: ±(π/9 z0³) d2_A d2_B n Σ/(Σ² + (γ_B/2)²), positive for an
/// excited probe and negative for a ground-state one.
pub fn surface_potential_lifshitz(p: &SurfaceProblem) -> Result<f64> {
    if !p.medium.is_cold() {
        return Err(Error::NotApplicable(
            "Lifshitz single-atom potential needs a cold medium",
        ));
    }
    let species = p.medium.species();
    if species.gamma() >= species.omega() {
        return Err(Error::WidthTooLarge {
            gamma: species.gamma(),
            omega: species.omega(),
        });
    }
    let sum = p.probe.omega() + species.omega();
    let g = species.half_gamma();
    let z3 = p.z0 * p.z0 * p.z0;
    let magnitude = PI / (9.0 * z3) * (p.probe.d2() * species.d2()) * p.medium.n_g() * (sum / (sum * sum + g * g));
    Ok(match p.probe_state {
        AtomState::Excited => magnitude,
        AtomState::Ground => -magnitude,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(state: AtomState, n_g: f64, n_e: f64) -> SurfaceProblem {
        let probe = TwoLevelAtom::new(1.0, 0.0, 1.0).unwrap();
        let species = TwoLevelAtom::new(0.9, 0.02, 1.0).unwrap();
        SurfaceProblem::new(probe, state, MediumState::new(species, n_g, n_e).unwrap(), 1.0).unwrap()
    }

    #[test]
    fn tabulated_cases() {
        let d = 0.1;
        let s = 1.9;
        let g2 = 1e-4;
        let u1 = surface_potential_qed(&problem(AtomState::Excited, 1.0, 0.0));
        assert!((u1 - PI / 9.0 * d / (d * d + g2)).abs() < 1e-13);
        assert!((u1 - 3.4561).abs() < 1e-4);
        let u2 = surface_potential_qed(&problem(AtomState::Ground, 1.0, 0.0));
        assert!((u2 + PI / 9.0 * s / (s * s + g2)).abs() < 1e-14);
        assert!((u2 + 0.18372).abs() < 1e-5);
        let u3 = surface_potential_qed(&problem(AtomState::Ground, 0.5, 0.5));
        let want = PI / 9.0 * (0.5 * (-d) / (d * d + g2) - 0.5 * s / (s * s + g2));
        assert!((u3 - want).abs() < 1e-13);
        assert!((u3 + 1.8199).abs() < 1e-4);
    }

    #[test]
    fn spectral_matches_closed() {
        for (state, ng, ne) in [
            (AtomState::Excited, 1.0, 0.0),
            (AtomState::Ground, 1.0, 0.0),
            (AtomState::Ground, 0.3, 0.7),
            (AtomState::Excited, 0.6, 0.4),
        ] {
            let p = problem(state, ng, ne);
            let q = surface_potential_spectral(&p).unwrap();
            let c = surface_potential_qed(&p);
            assert!(((q - c) / c).abs() < 1e-8, "{state:?} {ng} {ne}: {q} vs {c}");
        }
    }

    #[test]
    fn lifshitz_single_atom() {
        let u = surface_potential_lifshitz(&problem(AtomState::Excited, 1.0, 0.0)).unwrap();
        assert!((u - 0.18372).abs() < 1e-5);
        // Depends on ω_A + ω_B only.
        let mut p = problem(AtomState::Excited, 1.0, 0.0);
        p.probe = TwoLevelAtom::new(0.9, 0.0, 1.0).unwrap();
        p.medium = p.medium.with_species(TwoLevelAtom::new(1.0, 0.02, 1.0).unwrap());
        assert_eq!(surface_potential_lifshitz(&p).unwrap(), u);
        assert!(matches!(
            surface_potential_lifshitz(&problem(AtomState::Excited, 0.5, 0.5)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn ground_probe_cold_medium_agrees_with_lifshitz() {
        let p = problem(AtomState::Ground, 1.0, 0.0);
        let qed = surface_potential_qed(&p);
        let lif = surface_potential_lifshitz(&p).unwrap();
        assert!(((qed - lif) / lif).abs() < 1e-15);
        let excited = surface_potential_lifshitz(&problem(AtomState::Excited, 1.0, 0.0)).unwrap();
        assert_eq!(lif.abs(), excited);
    }

    #[test]
    fn inverse_cube_scaling() {
        let p = problem(AtomState::Ground, 0.5, 0.5);
        let far = SurfaceProblem { z0: 2.0, ..p };
        assert_eq!(surface_potential_qed(&far), surface_potential_qed(&p) / 8.0);
    }

    #[test]
    fn flags() {
        assert!(problem(AtomState::Excited, 0.5, 0.5).beyond_printed_forms());
        assert!(!problem(AtomState::Ground, 0.5, 0.5).beyond_printed_forms());
        assert!(SurfaceProblem::new(
            TwoLevelAtom::new(1.0, 0.0, 1.0).unwrap(),
            AtomState::Ground,
            MediumState::cold(TwoLevelAtom::new(1.0, 0.0, 1.0).unwrap(), 1.0).unwrap(),
            0.0
        )
        .is_err());
    }
}
