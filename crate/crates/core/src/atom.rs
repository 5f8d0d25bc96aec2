//! Two-level atoms, their initial states and dilute media made of them.
//!
//! Everything is in natural units (ħ = c = k_B = 1) scaled by a reference
//! frequency chosen by the caller: frequencies and widths in units of ω_ref,
//! lengths in 1/ω_ref, energies in ω_ref.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Widths at or above this fraction of the transition frequency are flagged
/// as outside the narrow-line regime assumed by the closed forms.
pub const BROAD_LINE_RATIO: f64 = 0.5;

/// Unvalidated atom parameters as they appear in configuration files.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomParams {
    pub omega: f64,
    pub gamma: f64,
    pub d2: f64,
}

/// A validated two-level species: transition frequency, width of the excited
/// level and squared dipole matrix element |d_eg|².
///
/// Only [`validate_atom`] (and the constructors that go through it) can
/// produce one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "AtomParams", into = "AtomParams")]
pub struct TwoLevelAtom {
    omega: f64,
    gamma: f64,
    d2: f64,
}

impl TwoLevelAtom {
    pub fn new(omega: f64, gamma: f64, d2: f64) -> Result<Self> {
        validate_atom(AtomParams { omega, gamma, d2 })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn d2(&self) -> f64 {
        self.d2
    }

    /// Half of the width, the quantity that enters every denominator.
    pub fn half_gamma(&self) -> f64 {
        0.5 * self.gamma
    }

    pub fn is_narrow_line(&self) -> bool {
        self.gamma < BROAD_LINE_RATIO * self.omega
    }

    pub fn with_omega(self, omega: f64) -> Result<Self> {
        Self::new(omega, self.gamma, self.d2)
    }

    pub fn with_gamma(self, gamma: f64) -> Result<Self> {
        Self::new(self.omega, gamma, self.d2)
    }

    pub fn params(&self) -> AtomParams {
        AtomParams {
            omega: self.omega,
            gamma: self.gamma,
            d2: self.d2,
        }
    }
}

impl TryFrom<AtomParams> for TwoLevelAtom {
    type Error = Error;

    fn try_from(p: AtomParams) -> Result<Self> {
        validate_atom(p)
    }
}

impl From<TwoLevelAtom> for AtomParams {
    fn from(a: TwoLevelAtom) -> Self {
        a.params()
    }
}

pub fn validate_atom(p: AtomParams) -> Result<TwoLevelAtom> {
    for (field, value) in [("omega", p.omega), ("gamma", p.gamma), ("d2", p.d2)] {
        if !value.is_finite() {
            return Err(Error::NonFinite { field });
        }
    }
    if p.omega <= 0.0 {
        return Err(Error::NonPositiveFrequency {
            field: "omega",
            value: p.omega,
        });
    }
    if p.gamma < 0.0 {
        return Err(Error::NegativeWidth {
            field: "gamma",
            value: p.gamma,
        });
    }
    if p.d2 <= 0.0 {
        return Err(Error::NonPositiveDipole {
            field: "d2",
            value: p.d2,
        });
    }
    Ok(TwoLevelAtom {
        omega: p.omega,
        gamma: p.gamma,
        d2: p.d2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AtomState {
    #[serde(rename = "g")]
    Ground,
    #[serde(rename = "e")]
    Excited,
}

impl AtomState {
    pub fn label(self) -> &'static str {
        match self {
            AtomState::Ground => "g",
            AtomState::Excited => "e",
        }
    }
}

/// Probe atom A and partner atom B with their initial levels.
///
/// The probe is treated as having a negligible width; only `atom_b.gamma()`
/// enters the interaction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairConfiguration {
    pub atom_a: TwoLevelAtom,
    pub state_a: AtomState,
    pub atom_b: TwoLevelAtom,
    pub state_b: AtomState,
}

impl PairConfiguration {
    pub fn new(atom_a: TwoLevelAtom, state_a: AtomState, atom_b: TwoLevelAtom, state_b: AtomState) -> Self {
        Self {
            atom_a,
            state_a,
            atom_b,
            state_b,
        }
    }

    /// Same atoms and levels with the roles of A and B exchanged in the
    /// level assignment only (EG <-> GE).
    pub fn with_states(self, state_a: AtomState, state_b: AtomState) -> Self {
        Self {
            state_a,
            state_b,
            ..self
        }
    }
}

/// A dilute gas of one species with given ground and excited densities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumState {
    species: TwoLevelAtom,
    n_g: f64,
    n_e: f64,
}

impl MediumState {
    pub fn new(species: TwoLevelAtom, n_g: f64, n_e: f64) -> Result<Self> {
        for (field, value) in [("n_g", n_g), ("n_e", n_e)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { field });
            }
            if value < 0.0 {
                return Err(Error::NegativeDensity { field, value });
            }
        }
        if n_g + n_e <= 0.0 {
            return Err(Error::EmptyMedium);
        }
        Ok(Self { species, n_g, n_e })
    }

    pub fn cold(species: TwoLevelAtom, n: f64) -> Result<Self> {
        Self::new(species, n, 0.0)
    }

    pub fn species(&self) -> &TwoLevelAtom {
        &self.species
    }

    pub fn n_g(&self) -> f64 {
        self.n_g
    }

    pub fn n_e(&self) -> f64 {
        self.n_e
    }

    pub fn n_total(&self) -> f64 {
        self.n_g + self.n_e
    }

    pub fn is_cold(&self) -> bool {
        self.n_e == 0.0
    }

    /// Same populations, rescaled by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.species, self.n_g * factor, self.n_e * factor)
    }

    pub fn with_species(&self, species: TwoLevelAtom) -> Self {
        Self { species, ..*self }
    }
}
