//! Orientation-averaged polarizabilities of a two-level atom and the dilute
//! permittivities built from them.
//!
//! Each polarizability is a pair of partial fractions carrying `d2 / 3`
//! (the isotropic average of d^ν d^ν′). The coherent and conventional kinds
//! differ only in the sign of `iγ/2` in the second fraction: the
//! conventional one keeps both poles in the lower half plane, the coherent
//! one has one pole in each half plane.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::atom::{AtomState, MediumState, TwoLevelAtom};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResponseKind {
    Coherent,
    Conventional,
}

/// Complex, dimensionless response value in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexResponse(pub Complex64);

impl ComplexResponse {
    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }
}

/// The two partial fractions `(d2/3) / denominator_k` as denominators.
///
/// ground:  ω_eg − ω − iγ/2 ,  ω_eg + ω ∓ iγ/2
/// excited: −ω_eg − ω − iγ/2, −ω_eg + ω ∓ iγ/2
/// where the upper sign is coherent and the lower conventional.
fn denominators(atom: &TwoLevelAtom, state: AtomState, kind: ResponseKind, z: Complex64) -> [Complex64; 2] {
    let w = atom.omega();
    let hg = Complex64::new(0.0, atom.half_gamma());
    let second_sign = match kind {
        ResponseKind::Coherent => -1.0,
        ResponseKind::Conventional => 1.0,
    };
    match state {
        AtomState::Ground => [w - z - hg, w + z + second_sign * hg],
        AtomState::Excited => [-w - z - hg, -w + z + second_sign * hg],
    }
}

/// Polarizability at a complex frequency; `None` exactly at a pole.
pub fn polarizability_at(atom: &TwoLevelAtom, state: AtomState, kind: ResponseKind, z: Complex64) -> Option<Complex64> {
    let [d1, d2] = denominators(atom, state, kind, z);
    if d1 == Complex64::new(0.0, 0.0) || d2 == Complex64::new(0.0, 0.0) {
        return None;
    }
    let amp = atom.d2() / 3.0;
    Some(amp / d1 + amp / d2)
}

/// Pole locations in the complex frequency plane, one per partial fraction.
pub fn polarizability_poles(atom: &TwoLevelAtom, state: AtomState, kind: ResponseKind) -> [Complex64; 2] {
    // Each denominator is ±z + c, so the pole is at ∓c.
    let w = atom.omega();
    let hg = atom.half_gamma();
    let second_im = match kind {
        ResponseKind::Coherent => hg,
        ResponseKind::Conventional => -hg,
    };
    match state {
        AtomState::Ground => [Complex64::new(w, -hg), Complex64::new(-w, second_im)],
        AtomState::Excited => [Complex64::new(-w, -hg), Complex64::new(w, second_im)],
    }
}

pub fn polarizability(
    atom: &TwoLevelAtom,
    state: AtomState,
    kind: ResponseKind,
    omega: f64,
) -> Result<ComplexResponse> {
    polarizability_at(atom, state, kind, Complex64::new(omega, 0.0))
        .map(ComplexResponse)
        .ok_or(Error::PoleOnAxis { omega })
}

fn permittivity_at(medium: &MediumState, kind: ResponseKind, z: Complex64) -> Option<Complex64> {
    let species = medium.species();
    let mut sum = Complex64::new(0.0, 0.0);
    if medium.n_g() > 0.0 {
        sum += medium.n_g() * polarizability_at(species, AtomState::Ground, kind, z)?;
    }
    if medium.n_e() > 0.0 {
        sum += medium.n_e() * polarizability_at(species, AtomState::Excited, kind, z)?;
    }
    Some(1.0 + 4.0 * PI * sum)
}

/// Dilute permittivity ε = 1 + 4π (n_e α_e + n_g α_g) with responses of `kind`.
pub fn permittivity(medium: &MediumState, kind: ResponseKind, omega: f64) -> Result<ComplexResponse> {
    permittivity_at(medium, kind, Complex64::new(omega, 0.0))
        .map(ComplexResponse)
        .ok_or(Error::PoleOnAxis { omega })
}

/// Conventional permittivity on the imaginary frequency axis, ε(iu).
///
/// The coherent response has a pole in the upper half plane and is refused
/// here.
pub fn permittivity_imag_axis(medium: &MediumState, kind: ResponseKind, u: f64) -> Result<ComplexResponse> {
    if kind == ResponseKind::Coherent {
        return Err(Error::CoherentOnImaginaryAxis);
    }
    if !(u >= 0.0) {
        return Err(Error::NegativeImaginaryFrequency(u));
    }
    if u.is_infinite() {
        return Ok(ComplexResponse(Complex64::new(1.0, 0.0)));
    }
    permittivity_at(medium, kind, Complex64::new(0.0, u))
        .map(ComplexResponse)
        .ok_or(Error::PoleOnAxis { omega: 0.0 })
}

/// One partial fraction `weight / (ω − at − i·side·0⁺)` of a response whose
/// width has been taken to zero; `side` is +1 for a pole just above the
/// real axis and −1 just below.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpPole {
    pub weight: f64,
    pub at: f64,
    pub side: f64,
}

/// The polarizability of `atom` in the limit of vanishing width, keeping the
/// infinitesimal pole displacements of the selected kind.
pub fn sharp_polarizability(atom: &TwoLevelAtom, state: AtomState, kind: ResponseKind) -> [SharpPole; 2] {
    let amp = atom.d2() / 3.0;
    let w = atom.omega();
    let second_side = match kind {
        ResponseKind::Coherent => 1.0,
        ResponseKind::Conventional => -1.0,
    };
    let (first_at, second_at) = match state {
        AtomState::Ground => (w, -w),
        AtomState::Excited => (-w, w),
    };
    [
        SharpPole {
            weight: -amp,
            at: first_at,
            side: -1.0,
        },
        SharpPole {
            weight: amp,
            at: second_at,
            side: second_side,
        },
    ]
}

/// ε − 1 of a medium whose atoms have vanishing width.
pub fn sharp_susceptibility(medium: &MediumState, kind: ResponseKind) -> Vec<SharpPole> {
    let mut poles = Vec::with_capacity(4);
    for (state, n) in [(AtomState::Ground, medium.n_g()), (AtomState::Excited, medium.n_e())] {
        if n > 0.0 {
            poles.extend(sharp_polarizability(medium.species(), state, kind).map(|p| SharpPole {
                weight: 4.0 * PI * n * p.weight,
                ..p
            }));
        }
    }
    poles
}
