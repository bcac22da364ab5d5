//! Three-electron exchange-only qubit in a triple quantum dot, modeled by a
//! Fermi-Hubbard Hamiltonian. Covers the 4-state low-energy subspace in the
//! basis {|T>, |S>, |L>, |R>} as well as the full 8-dimensional S = S_z = 1/2
//! sector with double occupancy, used to validate the charge sensitivity.
//!
//! All energies are E/h in GHz.

use crate::error::{Error, Result};
use crate::linalg::SymMat;
use crate::scalar::{as_f64, lit, Scalar};

/// Fermi-Hubbard parameters of one triple-dot qubit (all E/h in GHz).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitParams<T> {
    /// On-site Hubbard energy U.
    pub u: T,
    /// Nearest-neighbor Hubbard energy U_C.
    pub u_c: T,
    /// Middle-dot detuning eps_m.
    pub eps_m: T,
    /// Symmetric detuning eps; must be zero for the implemented subspace.
    pub eps: T,
    /// Tunneling amplitude t (t_12 = t_23).
    pub t_hop: T,
}

impl<T: Scalar> QubitParams<T> {
    pub fn new(u: T, u_c: T, eps_m: T, t_hop: T) -> Result<Self> {
        let p = QubitParams { u, u_c, eps_m, eps: T::zero(), t_hop };
        p.validate()?;
        Ok(p)
    }

    /// Convenience constructor from the paper-style ratios at a given U in meV.
    pub fn from_ratios(u_mev: T, uc_over_u: T, eps_m_over_u: T, t_over_u: T) -> Result<Self> {
        let u = u_mev * lit(crate::units::MEV_TO_GHZ);
        Self::new(u, uc_over_u * u, eps_m_over_u * u, t_over_u * u)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.u > T::zero()) {
            return Err(Error::ParamDomain("U must be positive".into()));
        }
        if self.t_hop < T::zero() {
            return Err(Error::ParamDomain("t must be non-negative".into()));
        }
        if self.eps != T::zero() {
            return Err(Error::ParamDomain(
                "eps must be 0: the 4-state subspace assumes symmetric outer dots".into(),
            ));
        }
        Ok(())
    }

    /// Relative energy of the doubly-occupied outer configurations,
    /// Delta_FH = U - 2 U_C - eps_m.
    #[inline]
    pub fn delta_fh(&self) -> T {
        self.u - lit::<T>(2.0) * self.u_c - self.eps_m
    }

    /// Subspace-truncation sanity: |Delta_FH| < U.
    pub fn in_rx_regime(&self) -> bool {
        self.delta_fh().abs() < self.u
    }
}

/// Eigensystem of the 4-state subspace; `states[k]` holds eigenvector k in the
/// basis {|T>, |S>, |L>, |R>}, energies ascending.
#[derive(Debug, Clone)]
pub struct RxSpectrum<T> {
    pub energies: [T; 4],
    pub states: [[T; 4]; 4],
}

/// Method selector for the charge-sensitivity calculation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SensitivityMethod {
    /// Closed form from the eigenenergy derivatives.
    Analytic,
    /// Middle-dot occupation difference of the logical states.
    Occupation,
    /// Central finite difference of the lowest gap of the 8-dim Hamiltonian.
    Full8,
}

/// 4x4 subspace Hamiltonian in the basis {|T>, |S>, |L>, |R>}: off-diagonals
/// +-(sqrt6/2) t and -(sqrt2/2) t, diagonal (0, 0, Delta_FH, Delta_FH).
pub fn fh_subspace_hamiltonian<T: Scalar>(p: &QubitParams<T>) -> Result<SymMat<T>> {
    p.validate()?;
    let d = p.delta_fh();
    let t = p.t_hop;
    let s6 = lit::<T>(6.0).sqrt() / lit::<T>(2.0) * t;
    let s2 = lit::<T>(2.0).sqrt() / lit::<T>(2.0) * t;
    let mut h = SymMat::zeros(4);
    h.set(2, 2, d);
    h.set(3, 3, d);
    h.set(0, 2, -s6);
    h.set(0, 3, s6);
    h.set(1, 2, -s2);
    h.set(1, 3, -s2);
    Ok(h)
}

/// Closed-form eigenenergies: (Delta -+ sqrt(Delta^2 + 12 t^2))/2 for
/// states 0/3 and (Delta -+ sqrt(Delta^2 + 4 t^2))/2 for states 1/2.
pub fn closed_form_energies<T: Scalar>(p: &QubitParams<T>) -> [T; 4] {
    let d = p.delta_fh();
    let t2 = p.t_hop * p.t_hop;
    let half = lit::<T>(0.5);
    let s12 = (d * d + lit::<T>(12.0) * t2).sqrt();
    let s4 = (d * d + lit::<T>(4.0) * t2).sqrt();
    [(d - s12) * half, (d - s4) * half, (d + s4) * half, (d + s12) * half]
}

/// Numeric eigendecomposition of the subspace Hamiltonian.
pub fn rx_eigensystem<T: Scalar>(p: &QubitParams<T>) -> Result<RxSpectrum<T>> {
    let h = fh_subspace_hamiltonian(p)?;
    let (vals, vecs) = h.eigh();
    let mut energies = [T::zero(); 4];
    let mut states = [[T::zero(); 4]; 4];
    for k in 0..4 {
        energies[k] = vals[k];
        for i in 0..4 {
            states[k][i] = vecs[i * 4 + k];
        }
    }
    Ok(RxSpectrum { energies, states })
}

/// Qubit frequency omega_q = omega_1 - omega_0 (h GHz), from the closed forms.
pub fn qubit_frequency<T: Scalar>(p: &QubitParams<T>) -> Result<T> {
    p.validate()?;
    let e = closed_form_energies(p);
    Ok(e[1] - e[0])
}

/// Middle-dot occupation <n_2> of logical state 0 or 1: the weight on the
/// (1,1,1)-charge components |T> and |S>.
pub fn middle_dot_occupation<T: Scalar>(p: &QubitParams<T>, state: usize) -> Result<T> {
    assert!(state < 2, "logical state index must be 0 or 1");
    let spec = rx_eigensystem(p)?;
    let v = spec.states[state];
    Ok(v[0] * v[0] + v[1] * v[1])
}

/// Expected electron number on each of the three dots for a logical state.
pub fn dot_occupations<T: Scalar>(p: &QubitParams<T>, state: usize) -> Result<[T; 3]> {
    assert!(state < 2);
    let spec = rx_eigensystem(p)?;
    let v = spec.states[state];
    let (pt, ps, pl, pr) = (v[0] * v[0], v[1] * v[1], v[2] * v[2], v[3] * v[3]);
    let two = lit::<T>(2.0);
    Ok([pt + ps + two * pl + pr, pt + ps, pt + ps + pl + two * pr])
}

/// Charge sensitivity d omega_q / d eps_m (dimensionless).
pub fn charge_sensitivity<T: Scalar>(p: &QubitParams<T>, method: SensitivityMethod) -> Result<T> {
    p.validate()?;
    match method {
        SensitivityMethod::Analytic => {
            let d = p.delta_fh();
            let t2 = p.t_hop * p.t_hop;
            let s4 = (d * d + lit::<T>(4.0) * t2).sqrt();
            let s12 = (d * d + lit::<T>(12.0) * t2).sqrt();
            Ok((d / s4 - d / s12) * lit::<T>(0.5))
        }
        SensitivityMethod::Occupation => {
            let n0 = middle_dot_occupation(p, 0)?;
            let n1 = middle_dot_occupation(p, 1)?;
            Ok(n1 - n0)
        }
        SensitivityMethod::Full8 => {
            let step = p.u * lit::<T>(1e-6);
            if !(step > T::zero()) {
                return Err(Error::StepUnderflow);
            }
            let gap = |eps_m: T| -> Result<T> {
                let q = QubitParams { eps_m, ..*p };
                let h = fh_full_hamiltonian(&q)?;
                let (vals, _) = h.eigh();
                Ok(vals[1] - vals[0])
            };
            let hi = gap(p.eps_m + step)?;
            let lo = gap(p.eps_m - step)?;
            let denom = lit::<T>(2.0) * step;
            if denom == T::zero() {
                return Err(Error::StepUnderflow);
            }
            Ok((hi - lo) / denom)
        }
    }
}

/// Exchange energy J = 2 t^2 U / (U^2 - eps_m^2) (h GHz).
pub fn exchange_energy<T: Scalar>(p: &QubitParams<T>) -> Result<T> {
    p.validate()?;
    if p.eps_m.abs() >= p.u {
        return Err(Error::ExchangeSingularity);
    }
    let t2 = p.t_hop * p.t_hop;
    Ok(lit::<T>(2.0) * t2 * p.u / (p.u * p.u - p.eps_m * p.eps_m))
}

// ---------------------------------------------------------------------------
// Full 8-dimensional S = S_z = 1/2 sector
// ---------------------------------------------------------------------------

// Fermionic modes 0..6: (dot1 up, dot1 dn, dot2 up, dot2 dn, dot3 up, dot3 dn).
// Slater determinants are ascending-mode products c^+_{m1} c^+_{m2} c^+_{m3} |0>.
const N_MODES: usize = 6;

/// The nine S_z = 1/2 determinants (two up, one down electron), as mode masks.
fn sz_half_determinants() -> Vec<u8> {
    let mut dets = Vec::new();
    let ups = [(0u8, 2u8), (0, 4), (2, 4)];
    let downs = [1u8, 3, 5];
    for &(a, b) in &ups {
        for &d in &downs {
            dets.push((1 << a) | (1 << b) | (1 << d));
        }
    }
    dets
}

fn parity_below(mask: u8, mode: u8) -> i32 {
    let below = mask & ((1u8 << mode) - 1);
    if below.count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Applies c^+_p c_q to a determinant, returning (new mask, sign).
fn hop(mask: u8, p: u8, q: u8) -> Option<(u8, i32)> {
    if mask & (1 << q) == 0 {
        return None;
    }
    let mut sign = parity_below(mask, q);
    let removed = mask & !(1 << q);
    if removed & (1 << p) != 0 {
        return None;
    }
    sign *= parity_below(removed, p);
    Some((removed | (1 << p), sign))
}

fn site_occupations(mask: u8) -> [u8; 3] {
    let mut occ = [0u8; 3];
    for m in 0..N_MODES as u8 {
        if mask & (1 << m) != 0 {
            occ[(m / 2) as usize] += 1;
        }
    }
    occ
}

/// Diagonal Fermi-Hubbard energy of a determinant, referenced to the (1,1,1)
/// configuration so that the doubly-occupied outer states sit at Delta_FH.
/// The middle-dot on-site energy is eps_m in this bookkeeping.
fn det_energy<T: Scalar>(p: &QubitParams<T>, mask: u8) -> T {
    let occ = site_occupations(mask);
    let half = lit::<T>(0.5);
    let mut e = T::zero();
    for i in 0..3 {
        let n = lit::<T>(occ[i] as f64);
        e = e + half * p.u * n * (n - T::one());
    }
    let n1 = lit::<T>(occ[0] as f64);
    let n2 = lit::<T>(occ[1] as f64);
    let n3 = lit::<T>(occ[2] as f64);
    e = e + p.u_c * (n1 * n2 + n2 * n3);
    e = e + p.eps_m * n2;
    // subtract the (1,1,1) reference: 2 U_C + eps_m
    e - (lit::<T>(2.0) * p.u_c + p.eps_m)
}

/// Spin-adapted S = 1/2 basis as coefficient lists over the nine determinants.
/// Order: |T>, |S>, |L>=(2,0,1), |R>=(1,0,2), (2,1,0), (0,1,2), (1,2,0), (0,2,1).
fn spin_adapted_basis<T: Scalar>(dets: &[u8]) -> Vec<Vec<(usize, T)>> {
    let find = |mask: u8| dets.iter().position(|&d| d == mask).expect("determinant");
    let m = |modes: &[u8]| modes.iter().fold(0u8, |acc, &b| acc | (1 << b));
    let d_udu = find(m(&[0, 3, 4])); // |up, dn, up>
    let d_uud = find(m(&[0, 2, 5])); // |up, up, dn>
    let d_duu = find(m(&[1, 2, 4])); // |dn, up, up>
    let s6 = lit::<T>(6.0).sqrt();
    let s2 = lit::<T>(2.0).sqrt();
    vec![
        vec![
            (d_udu, lit::<T>(2.0) / s6),
            (d_uud, -T::one() / s6),
            (d_duu, -T::one() / s6),
        ],
        vec![(d_uud, T::one() / s2), (d_duu, -T::one() / s2)],
        vec![(find(m(&[0, 1, 4])), T::one())], // |ud, 0, u>
        vec![(find(m(&[0, 4, 5])), T::one())], // |u, 0, ud>
        vec![(find(m(&[0, 1, 2])), T::one())], // |ud, u, 0>
        vec![(find(m(&[2, 4, 5])), T::one())], // |0, u, ud>
        vec![(find(m(&[0, 2, 3])), T::one())], // |u, ud, 0>
        vec![(find(m(&[2, 3, 4])), T::one())], // |0, ud, u>
    ]
}

/// Full Fermi-Hubbard Hamiltonian on the 8-dimensional S = S_z = 1/2 sector
/// with double occupancy. Basis documented at [`spin_adapted_basis`]; its
/// restriction to the first four states reproduces the 4x4 subspace model.
pub fn fh_full_hamiltonian<T: Scalar>(p: &QubitParams<T>) -> Result<SymMat<T>> {
    p.validate()?;
    let dets = sz_half_determinants();
    let nd = dets.len();
    let mut h9 = vec![T::zero(); nd * nd];
    for (i, &d) in dets.iter().enumerate() {
        h9[i * nd + i] = det_energy(p, d);
    }
    // hopping: -t sum over nearest-neighbor site pairs and spins, both directions
    let pairs = [(0usize, 1usize), (1, 2)];
    for (i, &d) in dets.iter().enumerate() {
        for &(a, b) in &pairs {
            for spin in 0..2u8 {
                for &(src, dst) in &[(a, b), (b, a)] {
                    let q = (src * 2) as u8 + spin;
                    let pm = (dst * 2) as u8 + spin;
                    if let Some((new_mask, sign)) = hop(d, pm, q) {
                        if let Some(j) = dets.iter().position(|&x| x == new_mask) {
                            h9[j * nd + i] =
                                h9[j * nd + i] - p.t_hop * lit::<T>(sign as f64);
                        }
                    }
                }
            }
        }
    }
    let basis = spin_adapted_basis::<T>(&dets);
    let mut h8 = SymMat::zeros(8);
    for a in 0..8 {
        for b in a..8 {
            let mut sum = T::zero();
            for &(i, ci) in &basis[a] {
                for &(j, cj) in &basis[b] {
                    sum = sum + ci * cj * h9[i * nd + j];
                }
            }
            h8.set(a, b, sum);
        }
    }
    Ok(h8)
}

/// Description of the operating point used in reports.
pub fn describe<T: Scalar>(p: &QubitParams<T>) -> String {
    format!(
        "U = {:.4} GHz, U_C = {:.4} GHz, eps_m = {:.4} GHz, t = {:.4} GHz (Delta_FH = {:.4} GHz)",
        as_f64(p.u),
        as_f64(p.u_c),
        as_f64(p.eps_m),
        as_f64(p.t_hop),
        as_f64(p.delta_fh())
    )
}
