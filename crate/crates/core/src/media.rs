//! Force per unit area between two dilute half-spaces separated by a gap L.
//!
//! Forces are reported with the sign convention of the pairwise sum: the
//! all-ground case, which integrates the attractive ground–ground pair
//! potential, comes out positive, so positive means attraction. The energy
//! per unit area u(L) obeys F = ∂u/∂L.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::atom::{MediumState, TwoLevelAtom};
use crate::error::{Error, Result};
use crate::oracle::{quad_adaptive_with, sharp_pole_integral, QuadSettings, Tail, Tolerance};
use crate::pair::CUTOFF_FACTOR;
use crate::response::{permittivity, permittivity_imag_axis, sharp_susceptibility, ResponseKind};

/// Imaginary-axis cutoff in units of the largest transition frequency.
pub const IMAG_CUTOFF_FACTOR: f64 = 1e3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabProblem {
    pub medium_a: MediumState,
    pub medium_b: MediumState,
    pub gap: f64,
}

impl SlabProblem {
    pub fn new(medium_a: MediumState, medium_b: MediumState, gap: f64) -> Result<Self> {
        if !(gap > 0.0 && gap.is_finite()) {
            return Err(Error::ZeroSeparation(gap));
        }
        Ok(Self {
            medium_a,
            medium_b,
            gap,
        })
    }

    fn with_gap(&self, gap: f64) -> Result<Self> {
        Self::new(self.medium_a, self.medium_b, gap)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcePair {
    pub qed: f64,
    pub lifshitz: f64,
}

/// Thermal populations n_e = n_g e^{−ω/T} with n_g + n_e = n_total.
pub fn boltzmann_populations(species: TwoLevelAtom, n_total: f64, temperature: f64) -> Result<MediumState> {
    if !(temperature > 0.0) {
        return Err(Error::NonPositiveTemperature(temperature));
    }
    if !(n_total > 0.0) || !n_total.is_finite() {
        return Err(Error::NonPositiveDensity(n_total));
    }
    let boltzmann = (-species.omega() / temperature).exp();
    let n_g = n_total / (1.0 + boltzmann);
    let n_e = n_total - n_g;
    MediumState::new(species, n_g, n_e)
}

fn lorentzian_ratio(x: f64, g: f64) -> f64 {
    let den = x * x + g * g;
    if den == 0.0 {
        0.0
    } else {
        x / den
    }
}

fn require_narrow(species: &TwoLevelAtom) -> Result<()> {
    if species.gamma() >= species.omega() {
        return Err(Error::WidthTooLarge {
            gamma: species.gamma(),
            omega: species.omega(),
        });
    }
    Ok(())
}

/// Closed-form QED and dilute-Lifshitz forces.
///
/// With S± = (ω_A ± ω_B)/((ω_A ± ω_B)² + (γ_B/2)²) and C = π d2_A d2_B / (9 L³):
/// F_qed = C [n_g^A n_g^B S₊ − (n_e^A n_g^B − n_g^A n_e^B) S₋ − n_e^A n_e^B S₊],
/// F_L   = C (n_g^A − n_e^A)(n_g^B − n_e^B) S₊.
pub fn media_force(p: &SlabProblem) -> Result<ForcePair> {
    let a = p.medium_a.species();
    let b = p.medium_b.species();
    require_narrow(a)?;
    require_narrow(b)?;
    let g = b.half_gamma();
    let s_plus = lorentzian_ratio(a.omega() + b.omega(), g);
    let s_minus = lorentzian_ratio(a.omega() - b.omega(), g);
    let c = PI / (9.0 * p.gap.powi(3)) * (a.d2() * b.d2());
    let (nga, nea) = (p.medium_a.n_g(), p.medium_a.n_e());
    let (ngb, neb) = (p.medium_b.n_g(), p.medium_b.n_e());
    let qed = c * (nga * ngb * s_plus - (nea * ngb - nga * neb) * s_minus - nea * neb * s_plus);
    let lifshitz = c * ((nga - nea) * (ngb - neb) * s_plus);
    Ok(ForcePair { qed, lifshitz })
}

/// [`media_force`] for two media in thermal equilibrium at `temperature`.
pub fn media_force_thermal(
    species_a: TwoLevelAtom,
    species_b: TwoLevelAtom,
    n_a: f64,
    n_b: f64,
    temperature: f64,
    gap: f64,
) -> Result<ForcePair> {
    let a = boltzmann_populations(species_a, n_a, temperature)?;
    let b = boltzmann_populations(species_b, n_b, temperature)?;
    media_force(&SlabProblem::new(a, b, gap)?)
}

/// Dilute Lifshitz force F_L = (1/32π² L³) ∫_0^∞ (ε_A(iu) − 1)(ε_B(iu) − 1) du
/// with conventional permittivities, each species carrying its own width.
pub fn media_force_lifshitz_quadrature(p: &SlabProblem) -> Result<f64> {
    let (ma, mb) = (p.medium_a, p.medium_b);
    let integrand = move |u: f64| -> Complex64 {
        let ea = permittivity_imag_axis(&ma, ResponseKind::Conventional, u);
        let eb = permittivity_imag_axis(&mb, ResponseKind::Conventional, u);
        match (ea, eb) {
            (Ok(ea), Ok(eb)) => (ea.value() - 1.0) * (eb.value() - 1.0),
            _ => Complex64::new(f64::NAN, 0.0),
        }
    };
    let top = ma.species().omega().max(mb.species().omega());
    let cutoff = IMAG_CUTOFF_FACTOR * top;
    let seeds = [ma.species().omega(), mb.species().omega()];
    let settings = QuadSettings::new(Tolerance {
        abs: 1e-300,
        rel: 1e-12,
    })
    .with_budget(4000);
    let report = quad_adaptive_with(integrand, 0.0, cutoff, &settings, &seeds)?;
    // Each ε − 1 falls off as 1/u², the product as C/u⁴.
    let c = integrand(cutoff).re * cutoff.powi(4);
    let integral = report.value.re + c / (3.0 * cutoff.powi(3));
    Ok(integral / (32.0 * PI * PI * p.gap.powi(3)))
}

/// Energy per unit area from the closed form, u = −F_qed L / 2.
pub fn media_potential_per_area(p: &SlabProblem) -> Result<f64> {
    Ok(-0.5 * media_force(p)?.qed * p.gap)
}

/// u(L) = Re[(i / 128 π² L²) ∫ (ε_A(ω) − 1)(ε_B(ω) − 1) dω] with coherent
/// permittivities, by real-axis quadrature. Medium A atoms are taken
/// sharp; medium B carries its width, which must be positive.
pub fn media_potential_per_area_quadrature(p: &SlabProblem) -> Result<f64> {
    let b = *p.medium_b.species();
    if b.gamma() <= 0.0 {
        return Err(Error::PoleOnAxis { omega: b.omega() });
    }
    let poles = sharp_susceptibility(&p.medium_a, ResponseKind::Coherent);
    let mb = p.medium_b;
    let weight = move |w: f64| {
        permittivity(&mb, ResponseKind::Coherent, w)
            .map(|e| e.value() - 1.0)
            .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
    };
    let wa = p.medium_a.species().omega();
    let wb = b.omega();
    let cutoff = CUTOFF_FACTOR * wa.max(wb);
    let settings = QuadSettings::new(Tolerance { abs: 0.0, rel: 1e-11 }).with_budget(8000);
    let report = sharp_pole_integral(
        &poles,
        weight,
        cutoff,
        &[-wb, wb, 0.0, -wa, wa],
        Tail::InverseSquare,
        &settings,
    )?;
    let l2 = p.gap * p.gap;
    Ok((Complex64::new(0.0, 1.0 / (128.0 * PI * PI * l2)) * report.value).re)
}

/// Central finite difference of `u` with respect to the gap.
pub fn finite_difference_force(p: &SlabProblem, step: f64, u: impl Fn(&SlabProblem) -> Result<f64>) -> Result<f64> {
    let up = u(&p.with_gap(p.gap + step)?)?;
    let down = u(&p.with_gap(p.gap - step)?)?;
    Ok((up - down) / (2.0 * step))
}
