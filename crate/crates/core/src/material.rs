//! Isotropic elastic material parameters.
//!
//! The canonical representation is the triple (rho, lambda, mu); wave
//! speeds and the Poisson ratio are derived views. All quantities are in
//! the scaled units of the experiments (lengths in cavity radii, speeds
//! relative to the background P speed).

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MaterialError {
    #[error("density must be positive, got {0}")]
    NonPositiveDensity(f64),
    #[error("P speed must exceed S speed, got cp={cp}, cs={cs}")]
    SpeedOrdering { cp: f64, cs: f64 },
    #[error("shear modulus must be non-negative, got {0}")]
    NegativeShear(f64),
    #[error("Poisson ratio {0} outside (-1, 0.5)")]
    PoissonRange(f64),
    #[error("maximum frequency must be positive, got {0}")]
    NonPositiveFrequency(f64),
    #[error("wavelength must be positive, got {0}")]
    NonPositiveWavelength(f64),
    #[error("points per wavelength must be at least 2, got {0}")]
    PpwTooSmall(f64),
}

/// Isotropic elastic material: density and the Lame pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Material {
    pub rho: f64,
    pub lambda: f64,
    pub mu: f64,
}

impl Material {
    /// Construct from wave speeds; lambda = rho (cp^2 - 2 cs^2), mu = rho cs^2.
    pub fn from_speeds(cp: f64, cs: f64, rho: f64) -> Result<Self, MaterialError> {
        if !(rho > 0.0) {
            return Err(MaterialError::NonPositiveDensity(rho));
        }
        if !(cp > cs) || cs < 0.0 {
            return Err(MaterialError::SpeedOrdering { cp, cs });
        }
        let m = Material {
            rho,
            lambda: rho * (cp * cp - 2.0 * cs * cs),
            mu: rho * cs * cs,
        };
        let nu = m.nu();
        if !(nu > -1.0 && nu < 0.5) {
            return Err(MaterialError::PoissonRange(nu));
        }
        Ok(m)
    }

    pub fn from_lame(rho: f64, lambda: f64, mu: f64) -> Result<Self, MaterialError> {
        if !(rho > 0.0) {
            return Err(MaterialError::NonPositiveDensity(rho));
        }
        if mu < 0.0 {
            return Err(MaterialError::NegativeShear(mu));
        }
        let m = Material { rho, lambda, mu };
        if !(m.cp() > m.cs()) {
            return Err(MaterialError::SpeedOrdering {
                cp: m.cp(),
                cs: m.cs(),
            });
        }
        Ok(m)
    }

    /// P wave speed, sqrt((lambda + 2 mu)/rho).
    pub fn cp(&self) -> f64 {
        ((self.lambda + 2.0 * self.mu) / self.rho).sqrt()
    }

    /// S wave speed, sqrt(mu/rho).
    pub fn cs(&self) -> f64 {
        (self.mu / self.rho).sqrt()
    }

    /// Poisson ratio (cp^2 - 2 cs^2) / (2 (cp^2 - cs^2)).
    pub fn nu(&self) -> f64 {
        let (p2, s2) = (self.cp().powi(2), self.cs().powi(2));
        (p2 - 2.0 * s2) / (2.0 * (p2 - s2))
    }
}

/// Shortest wavelength present at maximum frequency `f_max`: the slower
/// nonzero speed divided by the frequency. A fluid-like material (cs = 0)
/// carries only P waves.
pub fn shortest_wavelength(material: &Material, f_max: f64) -> Result<f64, MaterialError> {
    if !(f_max > 0.0) {
        return Err(MaterialError::NonPositiveFrequency(f_max));
    }
    let cs = material.cs();
    let c = if cs > 0.0 { cs.min(material.cp()) } else { material.cp() };
    Ok(c / f_max)
}

/// Grid spacing that resolves `wavelength` with `ppw` points per wavelength.
pub fn spacing_for_ppw(wavelength: f64, ppw: f64) -> Result<f64, MaterialError> {
    if !(wavelength > 0.0) {
        return Err(MaterialError::NonPositiveWavelength(wavelength));
    }
    if !(ppw >= 2.0) {
        return Err(MaterialError::PpwTooSmall(ppw));
    }
    Ok(wavelength / ppw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn aluminum_like_poisson_third() {
        let m = Material::from_speeds(1.0, 0.5, 1.0).unwrap();
        assert_relative_eq!(m.nu(), 1.0 / 3.0, max_relative = 1e-14);
    }

    #[test]
    fn crust_rock_poisson_ratios() {
        let upper = Material::from_speeds(1.765, 1.0, 1.0).unwrap();
        assert!((upper.nu() - 0.2636).abs() < 1e-4);
        let lower = Material::from_speeds(1.892, 1.088, 1.0).unwrap();
        assert!((lower.nu() - 0.2530).abs() < 1e-4);
    }

    #[test]
    fn zero_lambda_material() {
        let m = Material::from_speeds(2.0_f64.sqrt(), 1.0, 1.0).unwrap();
        assert_relative_eq!(m.lambda, 0.0, epsilon = 1e-15);
        assert_relative_eq!(m.mu, 1.0, max_relative = 1e-15);
    }

    #[test]
    fn speeds_round_trip() {
        let m = Material::from_speeds(1.765, 1.0, 2.7).unwrap();
        assert_relative_eq!(m.cp(), 1.765, max_relative = 1e-14);
        assert_relative_eq!(m.cs(), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn nu_scale_invariant() {
        let a = Material::from_speeds(1.3, 0.6, 1.0).unwrap();
        for s in [0.1, 2.0, 17.0] {
            let b = Material::from_speeds(1.3 * s, 0.6 * s, 1.0).unwrap();
            assert_relative_eq!(a.nu(), b.nu(), max_relative = 1e-12);
        }
    }

    #[test]
    fn wavelength_of_converted_shear() {
        let m = Material::from_speeds(1.0, 0.5, 1.0).unwrap();
        // highest significant frequency 2*omega with omega = 2
        assert_relative_eq!(shortest_wavelength(&m, 4.0).unwrap(), 0.125);
    }

    #[test]
    fn wavelength_fluid_uses_cp() {
        let m = Material::from_speeds(1.0, 0.0, 1.0).unwrap();
        assert_relative_eq!(shortest_wavelength(&m, 4.0).unwrap(), 0.25);
    }

    #[test]
    fn wavelength_rejects_bad_frequency() {
        let m = Material::from_speeds(1.0, 0.5, 1.0).unwrap();
        assert!(shortest_wavelength(&m, 0.0).is_err());
    }

    #[test]
    fn spacing_examples() {
        assert_relative_eq!(spacing_for_ppw(0.125, 12.0).unwrap(), 1.0 / 96.0);
        assert_relative_eq!(spacing_for_ppw(1.0, 2.0).unwrap(), 0.5);
        assert_relative_eq!(spacing_for_ppw(0.25, 12.0).unwrap(), 1.0 / 48.0);
        assert!(spacing_for_ppw(0.25, 1.5).is_err());
    }

    #[test]
    fn invalid_materials_rejected() {
        assert!(Material::from_speeds(1.0, 0.5, 0.0).is_err());
        assert!(Material::from_speeds(0.5, 1.0, 1.0).is_err());
        assert!(Material::from_lame(1.0, 0.5, -0.1).is_err());
    }
}
