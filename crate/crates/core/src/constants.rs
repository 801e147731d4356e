//! Physical constants in SI units (CODATA 2018, IAU nominal values).
//!
//! Everything downstream works in SI; astronomy units are converted at the
//! I/O boundary only.

/// The set of constants every operation in this crate reads.
///
/// A single immutable instance, [`DEFAULT`], is baked in at build time.
/// Alternative instances exist only for sensitivity checks in tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Reduced Planck constant (J s).
    pub hbar: f64,
    /// Stefan-Boltzmann constant (W m^-2 K^-4).
    pub sigma_sb: f64,
    /// Reference nucleon mass entering the collapse coupling (kg).
    pub m0: f64,
    /// Solar luminosity (W), IAU nominal.
    pub l_sun: f64,
    /// Solar mass (kg).
    pub m_sun: f64,
    /// Parsec (m), IAU definition.
    pub parsec: f64,
    /// Solar absolute bolometric magnitude (mag), IAU resolution B2.
    pub mbol_sun: f64,
}

impl Constants {
    /// All values strictly positive and finite.
    pub fn is_valid(&self) -> bool {
        [
            self.hbar,
            self.sigma_sb,
            self.m0,
            self.l_sun,
            self.m_sun,
            self.parsec,
            self.mbol_sun,
        ]
        .iter()
        .all(|v| v.is_finite() && *v > 0.0)
    }
}

/// The build-time constants instance.
///
/// `m0` is the CODATA 2018 proton mass; the bounds reported by this crate
/// reproduce the reference Earth/Moon values with the proton mass and miss
/// by ~1.5% with the atomic mass unit (kept as [`M0_AMU`] for sensitivity
/// checks).
pub const DEFAULT: Constants = Constants {
    hbar: 1.054_571_817e-34,
    sigma_sb: 5.670_374_419e-8,
    m0: 1.672_621_923_69e-27,
    l_sun: 3.828e26,
    m_sun: 1.989e30,
    parsec: 3.085_677_581_491_367_3e16,
    mbol_sun: 4.74,
};

/// Atomic mass unit (kg); alternative `m0` convention, not used by default.
pub const M0_AMU: f64 = 1.660_539_066_60e-27;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_constants_are_valid() {
        assert!(DEFAULT.is_valid());
    }

    #[test]
    fn amu_differs_from_proton_mass_by_under_one_percent() {
        let rel = (DEFAULT.m0 - M0_AMU) / M0_AMU;
        assert!(rel > 0.0 && rel < 0.01);
    }
}
