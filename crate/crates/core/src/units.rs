//! Unit conventions and physical constants.
//!
//! Internal bookkeeping:
//! - energies are stored as E/h in GHz ("h GHz"), so a 1 GHz transition has
//!   energy value 1.0 and angular frequency `TWO_PI` rad/ns;
//! - times are in ns, angular frequencies in rad/ns (GHz and 1/ns coincide);
//! - charge noise amplitudes follow the conventions of [`crate::noise`].

use crate::scalar::{lit, Scalar};

/// 1 meV expressed as E/h in GHz.
pub const MEV_TO_GHZ: f64 = 241.798935;

/// 1 ueV expressed as E/h in GHz.
pub const UEV_TO_GHZ: f64 = MEV_TO_GHZ * 1e-3;

/// e^2/(2h) in GHz * farad: charging energy E_C/h = E2_OVER_2H_GHZ_F / C_sigma[F].
pub const E2_OVER_2H_GHZ_F: f64 = 1.93702293e-14;

pub const TWO_PI: f64 = std::f64::consts::TAU;

#[inline]
pub fn two_pi<T: Scalar>() -> T {
    lit(TWO_PI)
}

/// GHz (cyclic) -> rad/ns (angular).
#[inline]
pub fn ghz_to_rad_ns<T: Scalar>(nu: T) -> T {
    nu * two_pi()
}

/// rad/ns (angular) -> GHz (cyclic).
#[inline]
pub fn rad_ns_to_ghz<T: Scalar>(w: T) -> T {
    w / two_pi()
}

/// Cyclic-GHz charge sensitivity -> Grad/s (the Fig. axis unit; 1 rad/ns = 1 Grad/s).
#[inline]
pub fn ghz_per_ng_to_grad_s<T: Scalar>(slope: T) -> T {
    slope * two_pi()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charging_energy_constant() {
        // e^2/(2hC) with e = 1.602176634e-19 C, h = 6.62607015e-34 J s, C = 1 fF
        let e = 1.602176634e-19_f64;
        let h = 6.62607015e-34_f64;
        let ec_ghz = e * e / (2.0 * h * 1e-15) / 1e9;
        let ours = E2_OVER_2H_GHZ_F / 1e-15;
        assert!((ec_ghz - ours).abs() / ec_ghz < 1e-6, "{ec_ghz} vs {ours}");
    }

    #[test]
    fn mev_conversion_round_trip() {
        assert_eq!(ghz_to_rad_ns(1.0f64), TWO_PI);
        assert!((rad_ns_to_ghz(ghz_to_rad_ns(3.7f64)) - 3.7).abs() < 1e-15);
    }
}
