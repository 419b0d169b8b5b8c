//! Comparison curves: ergodic statistics, Gaussian outage, the
//! diversity-multiplexing exponent, the throughput-reliability model, and
//! the closed-form regime asymptotes of the exponent.

use crate::distribution::{Method, OutageResult};
use crate::real::{c, Real};
use crate::specfun::{q_fun, q_fun_log};
use crate::spectrum::{ChannelEnsemble, SolveError};

/// Mean and variance of the mutual-information distribution in the large
/// antenna limit.
///
/// `u = (1 + rho(beta-1) + sqrt((1 + rho(beta-1))^2 + 4 rho)) / 2`,
/// `r_erg = log u + beta log(1 + rho/u) - (1 - 1/u)` (nats per antenna),
/// `v_erg = -log(1 - (1-u)^2 / (beta u^2))` (variance of the total mutual
/// information).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErgodicStats<T> {
    pub u: T,
    pub r_erg: T,
    pub v_erg: T,
}

pub fn ergodic_stats<T: Real>(ens: &ChannelEnsemble<T>) -> ErgodicStats<T> {
    let (beta, rho) = (ens.beta(), ens.rho());
    let one = T::one();
    let w = one + rho * (beta - one);
    let u = (w + (w * w + c::<T>(4.0) * rho).sqrt()) / c(2.0);
    let r_erg = u.ln() + beta * (rho / u).ln_1p() - (one - u.recip());
    let v_erg = -(-((one - u).powi(2) / (beta * u * u))).ln_1p();
    ErgodicStats { u, r_erg, v_erg }
}

/// Gaussian-approximation outage `Q(N (r_erg - r) / sqrt(v_erg))`, with the
/// complementary form above the mean and log-domain evaluation deep in the
/// tails.
pub fn gaussian_outage<T: Real>(ens: &ChannelEnsemble<T>, n: usize, r: T) -> OutageResult<T> {
    let stats = ergodic_stats(ens);
    let nf = c::<T>(n as f64);
    let arg = nf * (stats.r_erg - r) / stats.v_erg.sqrt();
    let mut res = OutageResult::new(ens, n, r, Method::Gaussian);
    if arg > c(8.0) {
        // deep lower tail: only the logarithm is representable far out
        let ln_p = q_fun_log(arg).expect("arg > 0");
        res.set_from_ln(ln_p);
    } else {
        res.set_p(q_fun(arg));
    }
    res
}

/// Diversity-multiplexing exponent `(1-q)(beta-q)` at multiplexing fraction
/// `q = r / log rho`, the `rho -> inf` limit of `(E1 - E0) / log rho`.
pub fn dmt_exponent<T: Real>(beta: T, q: T) -> Result<T, SolveError> {
    if !(q > T::zero() && q < T::one()) {
        return Err(SolveError::Domain(format!(
            "multiplexing fraction must lie in (0, 1), got {q}"
        )));
    }
    Ok((T::one() - q) * (beta - q))
}

/// Throughput-reliability piecewise-linear model in base 2.
///
/// For `R` bits per channel use (total) and large `rho`,
/// `log2 P_out = c(k) R - g(k) log2 rho` on the segment
/// `k log2 rho < R < (k+1) log2 rho`, with `c(k) = M + N - 2k - 1` and
/// `g(k) = MN - k(k+1)`. The segment index is `floor(R / log2 rho)` clipped
/// to `[0, N-1]`; breakpoints belong to the lower segment.
pub fn trt_log2_outage<T: Real>(
    n: usize,
    m: usize,
    rho: T,
    r_bits_total: T,
) -> Result<T, SolveError> {
    if n < 1 || m < n {
        return Err(SolveError::Domain(format!(
            "need m >= n >= 1, got n={n} m={m}"
        )));
    }
    if !(rho > T::one()) {
        return Err(SolveError::Domain(format!(
            "TRT needs log2(rho) > 0, got rho = {rho}"
        )));
    }
    if !(r_bits_total > T::zero()) {
        return Err(SolveError::Domain(format!(
            "rate must be > 0, got {r_bits_total}"
        )));
    }
    let log2_rho = rho.ln() / c(std::f64::consts::LN_2);
    let seg = (r_bits_total / log2_rho)
        .floor()
        .to_f64()
        .unwrap_or(0.0)
        .clamp(0.0, (n - 1) as f64);
    let ck = c::<T>((m + n) as f64 - 2.0 * seg - 1.0);
    let gk = c::<T>((m * n) as f64 - seg * (seg + 1.0));
    Ok(ck * r_bits_total - gk * log2_rho)
}

/// Closed-form tail exponents of `E1 - E0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailExponents<T> {
    /// `e^r / rho`, the `r >> r_erg` limit (independent of beta).
    pub high_rate: T,
    /// `-beta log(e r / (beta rho))`, the `r -> 0` limit.
    pub low_rate: T,
}

pub fn tail_exponents<T: Real>(ens: &ChannelEnsemble<T>, r: T) -> Result<TailExponents<T>, SolveError> {
    if !(r > T::zero()) {
        return Err(SolveError::Domain(format!("rate must be > 0, got {r}")));
    }
    let (beta, rho) = (ens.beta(), ens.rho());
    Ok(TailExponents {
        high_rate: r.exp() / rho,
        low_rate: -beta * (c::<T>(std::f64::consts::E) * r / (beta * rho)).ln(),
    })
}

/// Large-SNR asymptote of the third derivative of the exponent at the
/// ergodic rate: `-2 / (log rho)^3` for `beta = 1`, else
/// `-1 / (beta (beta-1) log(1 - 1/beta)^3)`.
pub fn s_erg_asymptote<T: Real>(beta: T, rho: T) -> T {
    if beta == T::one() {
        -c::<T>(2.0) / rho.ln().powi(3)
    } else {
        -(beta * (beta - T::one()) * (-beta.recip()).ln_1p().powi(3)).recip()
    }
}
