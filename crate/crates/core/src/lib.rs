//! Simulation toolkit for a microwave-activated CZ gate between two remote
//! triple-quantum-dot spin qubits coupled through an offset-charge-sensitive
//! transmon.
//!
//! The crate is organized along the physical pipeline:
//!
//! - [`rx_qubit`]: Fermi-Hubbard model of one exchange-only qubit;
//! - [`ocs_transmon`]: charge-basis coupler spectrum and gate-charge biasing;
//! - [`capnet`]: capacitance-network quantization and lever arms;
//! - [`hybrid`]: coupling strength, conditional coupler ladder, rotating frame;
//! - [`pulses`]: off-resonant CZ and two-stage CPhase envelope synthesis;
//! - [`propagator`]: block-diagonal time-ordered evolution and phases;
//! - [`noise`]: 1/f^beta dephasing analytics, cumulant solver, MC oracle;
//! - [`fidelity`]: entanglement/averaged gate fidelity assembly.
//!
//! All core math is generic over the floating-point [`scalar::Scalar`];
//! concrete `f64` aliases live at the crate root.

pub mod capnet;
pub mod error;
pub mod fidelity;
pub mod hybrid;
pub mod linalg;
pub mod noise;
pub mod ocs_transmon;
pub mod optimize;
pub mod propagator;
pub mod pulses;
pub mod quad;
pub mod rx_qubit;
pub mod scalar;
pub mod special;
pub mod units;

pub use error::{Error, Result};

/// Default scalar for applications; the stated tolerances assume this width.
pub type Real = f64;

// concrete aliases are introduced as the modules land
pub type QubitParams64 = rx_qubit::QubitParams<Real>;
pub type RxSpectrum64 = rx_qubit::RxSpectrum<Real>;











