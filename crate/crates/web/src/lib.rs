//! Browser bindings: normalized curves for the single-atom and two-media
//! problems, computed by the core crate and plotted by `www/main.js`.

use std::f64::consts::PI;

use excited_vdw::config::SweepAxis;
use excited_vdw::{
    figure_dataset, media_force_thermal, Axis, Figure, FigureOverrides, Scale, SweepOverrides, TwoLevelAtom,
};
use wasm_bindgen::prelude::*;

/// Abscissae and two value series; missing values are NaN.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    x: Vec<f64>,
    qed: Vec<f64>,
    lifshitz: Vec<f64>,
}

#[wasm_bindgen]
impl Curve {
    #[wasm_bindgen(getter)]
    pub fn x(&self) -> Vec<f64> {
        self.x.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn qed(&self) -> Vec<f64> {
        self.qed.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn lifshitz(&self) -> Vec<f64> {
        self.lifshitz.clone()
    }
}

fn to_js(e: String) -> JsError {
    JsError::new(&e)
}

/// Single excited atom above a cold dilute medium, against ω_A/ω_B.
pub fn surface_curve_inner(gamma_ratio: f64, min: f64, max: f64, points: usize) -> Result<Curve, String> {
    let overrides = FigureOverrides {
        sweep: SweepOverrides {
            points: Some(points),
            min: Some(min),
            max: Some(max),
        },
        gamma_ratio: Some(gamma_ratio),
    };
    let r = figure_dataset(Figure::Fig7, &overrides).map_err(|e| e.to_string())?;
    let col = |i: usize| r.rows.iter().map(|row| row.values[i].unwrap_or(f64::NAN)).collect();
    Ok(Curve {
        x: r.axis_values(),
        qed: col(0),
        lifshitz: col(1),
    })
}

fn thermal_point(omega_ratio: f64, gamma_ratio: f64, temperature_ratio: f64) -> Result<(f64, f64), String> {
    let a = TwoLevelAtom::new(omega_ratio, 0.0, 1.0).map_err(|e| e.to_string())?;
    let b = TwoLevelAtom::new(1.0, gamma_ratio, 1.0).map_err(|e| e.to_string())?;
    let f = media_force_thermal(a, b, 1.0, 1.0, temperature_ratio, 1.0).map_err(|e| e.to_string())?;
    Ok((f.qed / (PI / 9.0), f.lifshitz / (PI / 9.0)))
}

fn sweep(axis: Axis, min: f64, max: f64, points: usize) -> Result<Vec<f64>, String> {
    Ok(SweepAxis::new(axis, min, max, points, Scale::Lin)
        .map_err(|e| e.to_string())?
        .values())
}

fn thermal_curve(x: Vec<f64>, point: impl Fn(f64) -> Result<(f64, f64), String>) -> Result<Curve, String> {
    let mut qed = Vec::with_capacity(x.len());
    let mut lifshitz = Vec::with_capacity(x.len());
    for &v in &x {
        let (q, l) = point(v)?;
        qed.push(q);
        lifshitz.push(l);
    }
    Ok(Curve { x, qed, lifshitz })
}

/// Force between two thermal media against ω_A/ω_B at fixed T/ω_B.
pub fn force_vs_frequency_inner(
    temperature_ratio: f64,
    gamma_ratio: f64,
    min: f64,
    max: f64,
    points: usize,
) -> Result<Curve, String> {
    let x = sweep(Axis::OmegaA, min, max, points)?;
    thermal_curve(x, |w| thermal_point(w, gamma_ratio, temperature_ratio))
}

/// Force between two thermal media against T/ω_B at fixed ω_A/ω_B.
pub fn force_vs_temperature_inner(
    omega_ratio: f64,
    gamma_ratio: f64,
    min: f64,
    max: f64,
    points: usize,
) -> Result<Curve, String> {
    let x = sweep(Axis::Temperature, min, max, points)?;
    thermal_curve(x, |t| thermal_point(omega_ratio, gamma_ratio, t))
}

#[wasm_bindgen]
pub fn surface_curve(gamma_ratio: f64, min: f64, max: f64, points: usize) -> Result<Curve, JsError> {
    surface_curve_inner(gamma_ratio, min, max, points).map_err(to_js)
}

#[wasm_bindgen]
pub fn force_vs_frequency(
    temperature_ratio: f64,
    gamma_ratio: f64,
    min: f64,
    max: f64,
    points: usize,
) -> Result<Curve, JsError> {
    force_vs_frequency_inner(temperature_ratio, gamma_ratio, min, max, points).map_err(to_js)
}

#[wasm_bindgen]
pub fn force_vs_temperature(
    omega_ratio: f64,
    gamma_ratio: f64,
    min: f64,
    max: f64,
    points: usize,
) -> Result<Curve, JsError> {
    force_vs_temperature_inner(omega_ratio, gamma_ratio, min, max, points).map_err(to_js)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surface_curve_matches_figure() {
        let c = surface_curve_inner(0.02, 0.5, 1.5, 11).unwrap();
        assert_eq!(c.x.len(), 11);
        assert_eq!(c.qed[5], 0.0);
        assert!(c.qed[4] < 0.0 && c.qed[6] > 0.0);
        assert!(c.lifshitz.iter().all(|&v| v > 0.0));
    }

    #[test]
    fn surface_resonance_without_width_is_nan() {
        let c = surface_curve_inner(0.0, 0.5, 1.5, 3).unwrap();
        assert!(c.qed[1].is_nan());
        assert!(c.qed[0].is_finite());
    }

    #[test]
    fn thermal_point_value() {
        let c = force_vs_frequency_inner(0.3, 0.02, 0.8, 1.0, 3).unwrap();
        assert_eq!(c.x[1], 0.9);
        assert!((c.qed[1] - 0.611734).abs() < 1e-6);
        assert!((c.lifshitz[1] - 0.443563).abs() < 1e-6);
    }

    #[test]
    fn temperature_curve_matches_frequency_curve() {
        let t = force_vs_temperature_inner(0.9, 0.02, 0.1, 0.3, 3).unwrap();
        let f = force_vs_frequency_inner(0.3, 0.02, 0.8, 1.0, 3).unwrap();
        assert_eq!(t.qed[2], f.qed[1]);
        assert_eq!(t.lifshitz[2], f.lifshitz[1]);
    }

    #[test]
    fn invalid_input_is_an_error() {
        assert!(force_vs_temperature_inner(0.9, 0.02, 0.0, 1.0, 10).is_err());
        assert!(force_vs_frequency_inner(0.3, -1.0, 0.5, 1.5, 10).is_err());
        assert!(surface_curve_inner(0.02, 0.5, 1.5, 1).is_err());
    }
}
