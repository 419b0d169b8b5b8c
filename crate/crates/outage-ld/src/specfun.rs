//! Closed-form special functions used by the energy and rate formulas.
//!
//! * [`g_fun`] — the kernel `G(x, y) = (1/pi) int_0^1 sqrt(t(1-t)) log(t+x)/(t+y) dt`
//!   in closed logarithmic form.
//! * [`q_fun`] / [`q_fun_log`] — the Gaussian tail `Q(x)` and its logarithm,
//!   built on a series/continued-fraction erfc evaluation.
//!
//! Every function here is a pure closed form; the quadrature oracles that
//! validate them live in the integration tests.

use crate::real::{c, Real};
use thiserror::Error;

/// Domain violations for the special-function kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("{func}: argument {name} = {value} outside domain ({requirement})")]
    Domain {
        func: &'static str,
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },
}

fn domain<T: Real>(
    func: &'static str,
    name: &'static str,
    value: T,
    requirement: &'static str,
) -> SpecFunError {
    SpecFunError::Domain {
        func,
        name,
        value: value.to_f64().unwrap_or(f64::NAN),
        requirement,
    }
}

/// Closed form of `(1/pi) int_0^1 sqrt(t(1-t)) log(t+x)/(t+y) dt` for `x, y >= 0`.
///
/// At `x = 0` the expression below already is the analytic limit: the first
/// logarithm's numerator degenerates to `sqrt(y)` exactly, the second
/// logarithm to `-log 2` and the square to `1`, so no branch-point arithmetic
/// with tiny `x` ever happens. `y = 0` kills the first term (its coefficient
/// vanishes faster than the logarithm diverges), which the code makes explicit
/// to avoid `0 * inf`.
pub fn g_fun<T: Real>(x: T, y: T) -> Result<T, SpecFunError> {
    if !(x >= T::zero()) {
        return Err(domain("g_fun", "x", x, "x >= 0"));
    }
    if !(y >= T::zero()) {
        return Err(domain("g_fun", "y", y, "y >= 0"));
    }
    let one = T::one();
    let sx = x.sqrt();
    let sx1 = (one + x).sqrt();
    let edge = -(sx1 - sx).powi(2) / c(2.0);
    if y == T::zero() {
        // the repulsion term's coefficient vanishes faster than its
        // logarithm diverges
        return Ok(((sx1 + sx) / c(2.0)).ln() + edge);
    }
    let sy = y.sqrt();
    let sy1 = (one + y).sqrt();
    // regrouped against cancellation at large arguments: the two O(y log)
    // terms combine into one log of a ratio near 1 plus an exactly
    // representable small coefficient (sqrt(1+y) - sqrt(y))^2
    let cross = (x * (one + y)).sqrt() + (y * (one + x)).sqrt();
    let log_ratio = ((sx1 + sx) * (sy1 + sy) / (c::<T>(2.0) * cross)).ln();
    let log_cross = (cross / (sy1 + sy)).ln();
    Ok((one + c::<T>(2.0) * y) * log_ratio + (sy1 - sy).powi(2) * log_cross + edge)
}

/// Gaussian tail probability `Q(x) = int_x^inf exp(-t^2/2)/sqrt(2 pi) dt`.
///
/// Saturates to 1 (0) for large negative (positive) arguments; use
/// [`q_fun_log`] when the tail underflows.
pub fn q_fun<T: Real>(x: T) -> T {
    let z = x.abs() / c::<T>(2.0).sqrt();
    let tail = erfc_scaled(z).map_or_else(
        // series region: erfc directly
        |e| e / c(2.0),
        // cf region: erfc = exp(-z^2) * scaled
        |s| (-z * z).exp() * s / c(2.0),
    );
    if x >= T::zero() {
        tail
    } else {
        T::one() - tail
    }
}

/// `ln Q(x)` for `x >= 0`, safe against tail underflow.
///
/// Below `x = 8` this is literally `ln(q_fun(x))`; above, the continued
/// fraction for the scaled tail gives
/// `ln Q = -x^2/2 - ln(x sqrt(2 pi)) + ln F(x)` with `F` of order one, so no
/// intermediate quantity ever underflows.
pub fn q_fun_log<T: Real>(x: T) -> Result<T, SpecFunError> {
    if !(x >= T::zero()) {
        return Err(domain("q_fun_log", "x", x, "x >= 0"));
    }
    if x <= c(8.0) {
        return Ok(q_fun(x).ln());
    }
    let z = x / c::<T>(2.0).sqrt();
    // Q(x) = erfc(z)/2 = exp(-z^2) * scaled / 2 and scaled = cf / (z sqrt(pi))
    let cf = tail_cf(z);
    Ok(-z * z - (x * c::<T>(std::f64::consts::TAU).sqrt()).ln() + cf.ln())
}

/// `erfc(z)` for `z >= 0`, split at `z = 3`.
///
/// Returns `Err(value)` from the stable all-positive series in the central
/// region and `Ok(scaled)` with `erfc = exp(-z^2) * scaled` from the
/// Laplace continued fraction in the tail. The odd encoding keeps the one
/// underflow-prone factor out of the tail branch.
fn erfc_scaled<T: Real>(z: T) -> Result<T, T> {
    if z < c(3.0) {
        // erf(z) = 2 z exp(-z^2)/sqrt(pi) * sum_n (2 z^2)^n / (2n+1)!!
        let two_z2 = c::<T>(2.0) * z * z;
        let mut term = T::one();
        let mut sum = T::one();
        let mut n = 0;
        loop {
            n += 1;
            term = term * two_z2 / c(2.0 * n as f64 + 1.0);
            let next = sum + term;
            if next == sum || n > 200 {
                break;
            }
            sum = next;
        }
        let erf =
            c::<T>(2.0) * z * (-z * z).exp() / c::<T>(std::f64::consts::PI).sqrt() * sum;
        Err(T::one() - erf)
    } else {
        Ok(tail_cf(z) / (z * c::<T>(std::f64::consts::PI).sqrt()))
    }
}

/// Laplace continued fraction `F(z) = 1/(1 + u/(1 + 2u/(1 + 3u/(...))))`,
/// `u = 1/(2 z^2)`, so that `erfc(z) = exp(-z^2) F(z) / (z sqrt(pi))`.
fn tail_cf<T: Real>(z: T) -> T {
    let u = T::one() / (c::<T>(2.0) * z * z);
    let mut t = T::one();
    for n in (1..=64u32).rev() {
        t = T::one() + c::<T>(n as f64) * u / t;
    }
    T::one() / t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_at_zero_is_half() {
        assert_eq!(q_fun(0.0f64), 0.5);
    }

    #[test]
    fn q_reflection() {
        for x in [0.5f64, 1.0, 3.0] {
            let s = q_fun(x) + q_fun(-x);
            assert!((s - 1.0).abs() < 1e-15, "x={x}: {s}");
        }
    }

    #[test]
    fn q_log_consistency() {
        let d = (q_fun_log(2.0f64).unwrap().exp() - q_fun(2.0)).abs();
        assert!(d < 1e-12, "diff {d}");
        assert_eq!(q_fun_log(0.0f64).unwrap(), 0.5f64.ln());
    }

    #[test]
    fn q_log_relative_accuracy_across_switch() {
        // both branches live near x = 8; they must agree tightly
        for x in [7.5f64, 7.99, 8.0] {
            let via_q = q_fun(x).ln();
            let direct = {
                let z = x / 2.0f64.sqrt();
                -z * z - (x * std::f64::consts::TAU.sqrt()).ln() + tail_cf(z).ln()
            };
            assert!(
                ((via_q - direct) / direct).abs() < 1e-13,
                "x={x}: {via_q} vs {direct}"
            );
        }
    }

    #[test]
    fn q_saturates() {
        assert_eq!(q_fun(60.0f64), 0.0);
        assert_eq!(q_fun(-60.0f64), 1.0);
        assert!(q_fun_log(60.0f64).unwrap().is_finite());
    }

    #[test]
    fn g_rejects_negative() {
        assert!(g_fun(-0.1f64, 1.0).is_err());
        assert!(g_fun(1.0f64, -1e-9).is_err());
    }

    #[test]
    fn q_log_rejects_negative() {
        assert!(q_fun_log(-1.0f64).is_err());
    }

    #[test]
    fn g_continuity_at_origin() {
        for y in [0.1f64, 1.0, 10.0] {
            let d = (g_fun(1e-10, y).unwrap() - g_fun(0.0, y).unwrap()).abs();
            assert!(d <= 1e-8, "y={y}: jump {d}");
        }
    }

    #[test]
    fn g_monotone_in_x() {
        // integrand log(t+x) increases with x
        for y in [0.0f64, 0.3, 2.0] {
            let mut prev = g_fun(0.0f64, y).unwrap();
            for i in 1..=20 {
                let v = g_fun(0.5 * i as f64, y).unwrap();
                assert!(v > prev, "y={y} i={i}");
                prev = v;
            }
        }
    }
}
