//! Energy minima of the eigenvalue functional and the outage exponent.
//!
//! `E0` is the unconstrained minimum (attained by the Marchenko-Pastur
//! density), `E1(r)` the minimum under the rate constraint. The exponent
//! `E1(r) - E0` controls `P_N(r) ~ exp(-N^2 (E1 - E0))`; its first
//! derivative in `r` is the tilt multiplier `k` (envelope property of the
//! constrained minimization), which is what [`exponent`] reports, and the
//! second and third derivatives follow by differencing `k(r)`.

use crate::baselines::ergodic_stats;
use crate::real::{c, Real};
use crate::specfun::g_fun;
use crate::spectrum::{
    critical_rate, solve_constrained, ChannelEnsemble, ConstrainedSpectrum, Regime, SolveError,
};

/// Exponent data at one rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentPoint<T> {
    /// Rate in nats per transmit antenna.
    pub r: T,
    /// `E1(r) - E0 >= 0`, zero only at the ergodic rate.
    pub exponent: T,
    /// Tilt `k = E1'(r)`; negative below the ergodic rate, positive above.
    pub k: T,
    /// Convexity `E1''(r) = dk/dr > 0`, by central difference.
    pub e1_second: T,
}

/// Unconstrained minimum energy.
///
/// `3/2` exactly in the square case; for `beta > 1` the closed form over the
/// Marchenko-Pastur support `(a, b) = (sqrt(beta) -+ 1)^2`, `D = b - a`:
/// `E0 = D^2/32 + a/2 - log D - (beta-1)/2 log(a D)
///       - D/2 [G(0, a/D) + (beta-1)/2 G(a/D, a/D)]`.
pub fn e0<T: Real>(beta: T) -> Result<T, SolveError> {
    if !(beta >= T::one()) {
        return Err(SolveError::Domain(format!("beta must be >= 1, got {beta}")));
    }
    if beta == T::one() {
        return Ok(c(1.5));
    }
    let s = beta.sqrt();
    let a = (s - T::one()).powi(2);
    let b = (s + T::one()).powi(2);
    let d = b - a;
    let x2 = a / d;
    let g0 = g_fun(T::zero(), x2).expect("nonnegative args");
    let g22 = g_fun(x2, x2).expect("nonnegative args");
    Ok(d * d / c(32.0) + a / c(2.0) - d.ln() - (beta - T::one()) / c(2.0) * (a * d).ln()
        - d / c(2.0) * (g0 + (beta - T::one()) / c(2.0) * g22))
}

/// Constrained minimum energy of a solved spectrum.
pub fn e1<T: Real>(spec: &ConstrainedSpectrum<T>) -> T {
    let (beta, rho, k, r) = (spec.beta(), spec.rho(), spec.tilt(), spec.rate());
    match spec.regime() {
        Regime::HardEdge => {
            // E1 - E0 = k/2 (r - b/4) - log(b/4) - k log((1+B)/2)
            //           + (b-4)(4/rho + 3b + 12)/32,  B = sqrt(1 + rho b)
            let b = spec.upper_edge();
            let big = (T::one() + rho * b).sqrt();
            let delta = k / c(2.0) * (r - b / c(4.0)) - (b / c(4.0)).ln()
                - k * ((T::one() + big) / c(2.0)).ln()
                + (b - c(4.0)) * (c::<T>(4.0) / rho + c::<T>(3.0) * b + c(12.0)) / c(32.0);
            c::<T>(1.5) + delta
        }
        Regime::Interior if beta == T::one() => {
            // E1 - E0 = (k-1)/2 (r - log rho) + k - 1/2 - 1/rho - k log(k)/2
            let delta = (k - T::one()) / c(2.0) * (r - rho.ln()) + k
                - c(0.5)
                - rho.recip()
                - k * k.ln() / c(2.0);
            c::<T>(1.5) + delta
        }
        Regime::Interior => {
            let (a, b) = (spec.lower_edge(), spec.upper_edge());
            let d = b - a;
            let sa = (T::one() + rho * a).sqrt();
            let sb = (T::one() + rho * b).sqrt();
            let s = sa * sb;
            let x1 = (T::one() + rho * a) / (d * rho);
            let x2 = a / d;
            let half_bm1 = (beta - T::one()) / c(2.0);
            let g = |x, y| g_fun(x, y).expect("nonnegative args");
            d * d / c(32.0) + a / c(2.0) - d.ln() - half_bm1 * (a * d).ln()
                + k / c(2.0)
                    * (r - (rho * a).ln_1p() - (sb - sa).powi(2) / (c::<T>(4.0) * rho * s))
                - d * k * rho / (c::<T>(2.0) * s) * (g(T::zero(), x1) + half_bm1 * g(x2, x1))
                - d / c(2.0) * (T::one() - k * rho / s)
                    * (g(T::zero(), x2) + half_bm1 * g(x2, x2))
        }
    }
}

/// Finite-difference step for the curvature at rate `r`.
fn curvature_step<T: Real>(r: T) -> T {
    c::<T>(1e-5).max(c::<T>(1e-4) * r)
}

/// Solve the spectrum at `r` and report the exponent, its slope `k`, and the
/// curvature `dk/dr` (central difference re-solving at `r +- h`,
/// `h = max(1e-5, 1e-4 r)`).
pub fn exponent<T: Real>(
    ens: &ChannelEnsemble<T>,
    r: T,
) -> Result<ExponentPoint<T>, SolveError> {
    let spec = solve_constrained(ens, r)?;
    let e = e1(&spec) - e0(ens.beta())?;
    let h = curvature_step(r);
    let k_plus = solve_constrained(ens, r + h)?.tilt();
    let k_minus = solve_constrained(ens, r - h)?.tilt();
    Ok(ExponentPoint {
        r,
        exponent: e,
        k: spec.tilt(),
        e1_second: (k_plus - k_minus) / (c::<T>(2.0) * h),
    })
}

/// Third derivative of `E1` at the ergodic rate, as the second derivative of
/// `k(r)` by a five-point stencil.
///
/// The step is `1e-3 max(1, r_erg)`, capped in the square case at
/// `0.2 (r_c - r_erg)`: for beta = 1 the critical rate sits only
/// `O(rho^(-1/2) log rho)` above the ergodic rate and the third derivative
/// jumps there, so a wider stencil would straddle the phase transition and
/// difference across two analytic branches.
pub fn s_erg<T: Real>(ens: &ChannelEnsemble<T>) -> Result<T, SolveError> {
    let r_erg = ergodic_stats(ens).r_erg;
    let mut h = c::<T>(1e-3) * T::one().max(r_erg);
    if ens.is_square() {
        let gap = critical_rate(ens.rho())? - r_erg;
        h = h.min(c::<T>(0.2) * gap);
    }
    let k_at = |r: T| solve_constrained(ens, r).map(|s| s.tilt());
    let km2 = k_at(r_erg - c::<T>(2.0) * h)?;
    let km1 = k_at(r_erg - h)?;
    let k0 = k_at(r_erg)?;
    let kp1 = k_at(r_erg + h)?;
    let kp2 = k_at(r_erg + c::<T>(2.0) * h)?;
    Ok(
        (-km2 + c::<T>(16.0) * km1 - c::<T>(30.0) * k0 + c::<T>(16.0) * kp1 - kp2)
            / (c::<T>(12.0) * h * h),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::ergodic_stats;

    #[test]
    fn e0_square_is_three_halves() {
        assert_eq!(e0(1.0f64).unwrap(), 1.5);
    }

    #[test]
    fn e0_continuous_in_beta() {
        let v = e0(1.0 + 1e-6f64).unwrap();
        assert!((v - 1.5).abs() <= 1e-3, "e0(1+1e-6) = {v}");
    }

    #[test]
    fn e0_rejects_beta_below_one() {
        assert!(e0(0.99f64).is_err());
    }

    #[test]
    fn square_unit_tilt_exponent() {
        // k = 1, rho = 100: E1 - E0 = 1 - 1/2 - 1/100 = 0.49
        let ens = ChannelEnsemble::new(1.0f64, 100.0).unwrap();
        let r = 100.0f64.ln() + 2.0 * 2.0f64.ln() - 1.0;
        let spec = solve_constrained(&ens, r).unwrap();
        let delta = e1(&spec) - e0(1.0).unwrap();
        assert!((delta - 0.49).abs() < 1e-8, "exponent = {delta}");
    }

    #[test]
    fn exponent_vanishes_at_ergodic_rate() {
        for (beta, rho) in [(1.0f64, 10.0), (2.0, 100.0), (4.0, 100.0)] {
            let ens = ChannelEnsemble::new(beta, rho).unwrap();
            let r_erg = ergodic_stats(&ens).r_erg;
            let p = exponent(&ens, r_erg).unwrap();
            assert!(p.exponent.abs() < 1e-7, "beta={beta}: e={}", p.exponent);
            assert!(p.k.abs() < 1e-6, "beta={beta}: k={}", p.k);
            assert!(p.e1_second > 0.0);
        }
    }

    #[test]
    fn exponent_sign_pattern() {
        let ens = ChannelEnsemble::new(2.0f64, 100.0).unwrap();
        let r_erg = ergodic_stats(&ens).r_erg;
        let below = exponent(&ens, 0.5 * r_erg).unwrap();
        let above = exponent(&ens, 1.5 * r_erg).unwrap();
        assert!(below.exponent > 0.0 && below.k < 0.0);
        assert!(above.exponent > 0.0 && above.k > 0.0);
    }

    #[test]
    fn curvature_matches_inverse_variance_at_peak() {
        for (beta, rho) in [(1.0f64, 100.0), (2.0, 100.0), (4.0, 100.0), (1.0, 1.0)] {
            let ens = ChannelEnsemble::new(beta, rho).unwrap();
            let stats = ergodic_stats(&ens);
            let p = exponent(&ens, stats.r_erg).unwrap();
            let rel = (p.e1_second * stats.v_erg - 1.0).abs();
            assert!(rel < 1e-3, "beta={beta} rho={rho}: rel={rel}");
        }
    }

    #[test]
    fn s_erg_negative_at_moderate_snr_square() {
        for rho in [1.0f64, 10.0, 100.0] {
            let ens = ChannelEnsemble::new(1.0f64, rho).unwrap();
            let v = s_erg(&ens).unwrap();
            assert!(v < 0.0, "rho={rho}: s_erg={v}");
        }
    }

    #[test]
    fn s_erg_square_matches_exact_curve() {
        // exact values from symbolic differentiation of the hard-edge branch
        for (rho, expect) in [(1e4f64, -0.0040820948223441), (1e6, -0.0010395312721810)] {
            let ens = ChannelEnsemble::new(1.0f64, rho).unwrap();
            let v = s_erg(&ens).unwrap();
            assert!(
                ((v - expect) / expect).abs() < 1e-4,
                "rho={rho}: {v} vs {expect}"
            );
        }
    }
}
