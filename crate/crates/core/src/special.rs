//! Special functions for the 1/f^beta noise kernels: the cosine integral Ci,
//! band-limited cosine-transform integrals for general beta, and the
//! time-averaged sqrt-log factor of the free-induction dephasing rate.

use num_complex::Complex;

use crate::quad::adaptive_simpson;
use crate::scalar::{lit, Scalar};

const EULER_GAMMA: f64 = 0.5772156649015329;

/// Cosine integral Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt, x > 0.
///
/// Power series below x = 2, Lentz continued fraction of E1(ix) above.
pub fn cosine_integral<T: Scalar>(x: T) -> T {
    assert!(x > T::zero(), "Ci requires x > 0");
    if x < lit::<T>(2.0) {
        // sum_k (-1)^k x^(2k) / (2k (2k)!)
        let x2 = x * x;
        let mut p = -x2 / lit::<T>(2.0); // (-1)^k x^(2k) / (2k)! at k = 1
        let mut sum = p / lit::<T>(2.0);
        let mut k = 1usize;
        loop {
            k += 1;
            let tk = lit::<T>((2 * k) as f64);
            p = -p * x2 / (tk * (tk - T::one()));
            let contrib = p / tk;
            sum = sum + contrib;
            if contrib.abs() < T::epsilon() * sum.abs().max(T::one()) || k > 60 {
                break;
            }
        }
        lit::<T>(EULER_GAMMA) + x.ln() + sum
    } else {
        // E1(ix) continued fraction (modified Lentz); Ci(x) = -Re[e^{-ix} h(x)]
        let one = Complex::new(T::one(), T::zero());
        let mut b = Complex::new(T::one(), x);
        // large-but-safe start for c: 1/fpmin would underflow norm_sqr in division
        let mut c = Complex::new(lit::<T>(1e150), T::zero());
        let mut d = one / b;
        let mut h = d;
        for i in 1..10_000 {
            let a = Complex::new(-lit::<T>((i * i) as f64), T::zero());
            b = b + Complex::new(lit::<T>(2.0), T::zero());
            d = one / (a * d + b);
            c = b + a / c;
            let del = c * d;
            h = h * del;
            if (del - one).norm() < T::epsilon() {
                break;
            }
        }
        let phase = Complex::new(x.cos(), -x.sin());
        let hh = h * phase;
        -hh.re
    }
}

/// int_a^b f(u) u^(-p) du in log space (u = e^v), robust against the
/// near-singular power-law head at small a.
fn power_weighted_head<T: Scalar, F: Fn(T) -> T + Copy>(a: T, b: T, p: T, f: F) -> T {
    adaptive_simpson(
        |v: T| {
            let u = v.exp();
            f(u) * u.powf(T::one() - p)
        },
        a.ln(),
        b.ln(),
        lit::<T>(1e-11),
    )
    .expect("log-space head quadrature")
}

/// G(a, b; beta) = int_a^b cos(u) u^(-beta) du for 0 < a <= b, beta in (0, 2).
///
/// Log-space quadrature up to u = 40, then an integration-by-parts asymptotic
/// tail so arbitrarily large b (high-frequency cutoffs) stays cheap.
pub fn band_cos_integral<T: Scalar>(a: T, b: T, beta: T) -> T {
    assert!(a > T::zero() && b >= a);
    let split = lit::<T>(40.0);
    let lo_end = b.min(split);
    let mut total = T::zero();
    if a < lo_end {
        total = total + power_weighted_head(a, lo_end, beta, |u: T| u.cos());
    }
    if b > split {
        total = total + cos_tail(split.max(a), b, beta);
    }
    total
}

/// Asymptotic tail of int cos(u) u^(-beta) du by repeated integration by parts.
fn cos_tail<T: Scalar>(a: T, b: T, beta: T) -> T {
    // int cos u * u^-p du = [sin u * u^-p] + p int sin u * u^-(p+1) du
    // int sin u * u^-p du = [-cos u * u^-p] - p int cos u * u^-(p+1) du
    let mut total = T::zero();
    let mut coeff = T::one();
    let mut p = beta;
    for _ in 0..6 {
        // cosine level
        total = total + coeff * (b.sin() * b.powf(-p) - a.sin() * a.powf(-p));
        let c2 = coeff * p;
        p = p + T::one();
        // sine level
        total = total + c2 * (-(b.cos() * b.powf(-p)) + a.cos() * a.powf(-p));
        coeff = -c2 * p;
        p = p + T::one();
    }
    total
}

/// J_fid(x0, x1; beta) = int_{x0}^{x1} sinc^2(u/2) u^(-beta) du, the
/// free-induction filter integral (chi = 2 A (2 pi)^(beta-1) t^(1+beta) J).
pub fn filter_integral_fid<T: Scalar>(x0: T, x1: T, beta: T) -> T {
    // sinc^2(u/2) u^-beta = 2 (1 - cos u) u^(-2-beta)
    let two = lit::<T>(2.0);
    let split = lit::<T>(40.0).min(x1);
    let mut total = T::zero();
    if x0 < split {
        total = total
            + power_weighted_head(x0, split, beta, |u: T| {
                if u.abs() < lit::<T>(1e-4) {
                    T::one() - u * u / lit::<T>(12.0)
                } else {
                    two * (T::one() - u.cos()) / (u * u)
                }
            });
    }
    if x1 > split {
        let p = T::one() + beta;
        // 2 int u^(-2-beta) du  minus the oscillatory part
        total = total + two * (split.powf(-p) - x1.powf(-p)) / p;
        total = total - two * cos_tail(split, x1, two + beta);
    }
    total
}

/// J_echo(x0, x1; beta) = 16 int_{x0}^{x1} sin^4(u/4) u^(-2-beta) du, the
/// single-echo filter integral; equals ln 2 for beta = 1, x0 -> 0, x1 -> inf.
pub fn filter_integral_echo<T: Scalar>(x0: T, x1: T, beta: T) -> T {
    let sixteen = lit::<T>(16.0);
    let split = lit::<T>(40.0).min(x1);
    let two = lit::<T>(2.0);
    let mut total = T::zero();
    if x0 < split {
        total = total
            + power_weighted_head(x0, split, beta, |u: T| {
                let s = (u / lit::<T>(4.0)).sin();
                sixteen * s * s * s * s / (u * u)
            });
    }
    if x1 > split {
        // sin^4(u/4) = 3/8 - cos(u/2)/2 + cos(u)/8
        let p = T::one() + beta;
        let half = lit::<T>(0.5);
        total = total + sixteen * lit::<T>(0.375) * (split.powf(-p) - x1.powf(-p)) / p;
        // int_a^b cos(u/2) u^(-q) du = 2^(1-q) int cos(v) v^(-q) dv on [a/2, b/2]
        let sc = two.powf(T::one() - (two + beta));
        total = total - sixteen * half * sc * cos_tail(split * half, x1 * half, two + beta);
        total = total + sixteen / lit::<T>(8.0) * cos_tail(split, x1, two + beta);
    }
    total
}

/// Time average over [0, t_g] of sqrt(ln(1/(omega_l t))), squared use is the
/// caller's business. Expressed as int_0^infty sqrt(L + y) e^-y dy with
/// L = ln(1/(omega_l t_g)).
pub fn mean_sqrt_log<T: Scalar>(big_l: T) -> T {
    adaptive_simpson(
        |y: T| (big_l + y).sqrt() * (-y).exp(),
        T::zero(),
        lit::<T>(45.0),
        lit::<T>(1e-13),
    )
    .expect("mean sqrt log quadrature")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::adaptive_simpson;

    /// Oracle: Ci(x) = -int_x^inf cos(t)/t dt by quadrature with asymptotic tail.
    fn ci_quadrature(x: f64) -> f64 {
        let split = 60.0f64.max(x);
        let head = if x < split {
            adaptive_simpson(|v: f64| v.exp().cos(), x.ln(), split.ln(), 1e-13).unwrap()
        } else {
            0.0
        };
        // tail by parts from `split`
        let tail = cos_tail(split, 1e14, 1.0) + {
            // remainder beyond 1e14 is below 1e-14
            0.0
        };
        -(head + tail)
    }

    #[test]
    fn ci_matches_quadrature() {
        for &x in &[0.05, 0.3, 1.0, 1.9, 2.0, 2.1, 5.0, 12.0, 40.0, 300.0] {
            let a = cosine_integral(x);
            let b = ci_quadrature(x);
            assert!((a - b).abs() < 1e-10, "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn ci_known_values() {
        // Ci(1) = 0.3374039229..., Ci(10) = -0.0454564330...
        assert!((cosine_integral(1.0f64) - 0.3374039229009681).abs() < 1e-12);
        assert!((cosine_integral(10.0f64) + 0.04545643300445537).abs() < 1e-12);
    }

    #[test]
    fn band_integral_reduces_to_ci_at_beta_one() {
        for &(a, b) in &[(1e-3, 50.0), (0.5, 2000.0), (2.0, 1e6)] {
            let g = band_cos_integral(a, b, 1.0f64);
            let ci = cosine_integral(b) - cosine_integral(a);
            assert!((g - ci).abs() < 1e-9, "({a},{b}): {g} vs {ci}");
        }
    }

    #[test]
    fn echo_filter_recovers_ln2() {
        let j = filter_integral_echo(1e-7f64, 1e9, 1.0);
        assert!((j - std::f64::consts::LN_2).abs() < 1e-5, "{j}");
    }

    #[test]
    fn fid_filter_log_behaviour() {
        // J_fid ~ ln(1/x0) + (3/2 - gamma) for small x0, beta = 1
        let x0 = 1e-6f64;
        let j = filter_integral_fid(x0, 1e9, 1.0);
        let expect = (1.0 / x0).ln() + 1.5 - EULER_GAMMA;
        assert!((j - expect).abs() < 1e-3, "{j} vs {expect}");
    }

    #[test]
    fn mean_sqrt_log_values() {
        // frozen from independent quadrature of int_0^inf sqrt(9 + y) e^-y dy
        let e = mean_sqrt_log(9.0f64);
        assert!((e - 3.158635639863988).abs() < 1e-9, "{e}");
        // asymptotic series at large L: sqrt(L)(1 + 1/(2L) - 1/(4L^2) + 3/(8L^3))
        let l = 100.0f64;
        let approx =
            l.sqrt() * (1.0 + 1.0 / (2.0 * l) - 1.0 / (4.0 * l * l) + 3.0 / (8.0 * l * l * l));
        assert!((mean_sqrt_log(l) - approx).abs() < 1e-6);
    }
}
