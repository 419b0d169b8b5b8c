//! Probability density and outage probability assembled from the exponent.
//!
//! The density of the normalized mutual information is
//! `P_N(r) ~ (N / sqrt(2 pi v_erg)) exp(-N^2 (E1(r) - E0))`; the outage
//! probability follows by a Laplace-type tail integration,
//!
//! `P_out(r) ~ exp(-N^2 [E - k^2/(2 E'')]) Q(N |k| / sqrt(E'')) / sqrt(E'' v_erg)`
//!
//! below the ergodic rate, and one minus the analogous expression above it.
//! Both are evaluated in the log domain when the tails underflow.

use crate::baselines::ergodic_stats;
use crate::energy::{e0, e1, exponent, s_erg};
use crate::real::{c, Real};
use crate::specfun::{q_fun, q_fun_log};
use crate::spectrum::{ChannelEnsemble, SolveError};

/// Which curve produced an outage value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Ld,
    Gaussian,
    Trt,
    Dmt,
    Mc,
    LdCorrected,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Ld => "ld",
            Method::Gaussian => "gaussian",
            Method::Trt => "trt",
            Method::Dmt => "dmt",
            Method::Mc => "mc",
            Method::LdCorrected => "ld-corrected",
        }
    }
}

/// An outage probability at `(N, M, rho, r)` with its base-10 logarithm.
///
/// When the linear value underflows (`N^2` times the exponent beyond ~700),
/// `p_out` is 0, `underflowed` is set, and only `log10_p_out` carries the
/// tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutageResult<T> {
    pub n: usize,
    pub m: usize,
    pub rho: T,
    pub r: T,
    pub p_out: T,
    pub log10_p_out: T,
    pub method: Method,
    pub underflowed: bool,
    /// Binomial standard error, Monte Carlo estimates only.
    pub stderr: Option<T>,
}

impl<T: Real> OutageResult<T> {
    pub(crate) fn new(ens: &ChannelEnsemble<T>, n: usize, r: T, method: Method) -> Self {
        let m = (ens.beta() * c(n as f64)).round().to_f64().unwrap_or(0.0) as usize;
        Self::from_parts(n, m, ens.rho(), r, method)
    }

    pub(crate) fn from_parts(n: usize, m: usize, rho: T, r: T, method: Method) -> Self {
        Self {
            n,
            m,
            rho,
            r,
            p_out: T::nan(),
            log10_p_out: T::nan(),
            method,
            underflowed: false,
            stderr: None,
        }
    }

    pub(crate) fn set_p(&mut self, p: T) {
        self.p_out = p.max(T::zero()).min(T::one());
        self.log10_p_out = self.p_out.log10();
        self.underflowed = false;
    }

    pub(crate) fn set_from_ln(&mut self, ln_p: T) {
        self.log10_p_out = ln_p / c(std::f64::consts::LN_10);
        let p = ln_p.exp();
        if p > T::zero() {
            self.p_out = p.min(T::one());
            self.underflowed = false;
        } else {
            self.p_out = T::zero();
            self.underflowed = true;
        }
    }
}

/// Exponent threshold beyond which the linear probability is reported as an
/// underflowed zero.
const UNDERFLOW_EXPONENT: f64 = 700.0;

/// Large-deviations density `(N / sqrt(2 pi v_erg)) exp(-N^2 (E1(r) - E0))`.
pub fn ld_pdf<T: Real>(ens: &ChannelEnsemble<T>, n: usize, r: T) -> Result<T, SolveError> {
    ld_log_pdf(ens, n, r).map(|l| l.exp())
}

/// Natural log of [`ld_pdf`], safe for deep tails.
pub fn ld_log_pdf<T: Real>(ens: &ChannelEnsemble<T>, n: usize, r: T) -> Result<T, SolveError> {
    if n < 1 {
        return Err(SolveError::Domain(format!("n must be >= 1, got {n}")));
    }
    let stats = ergodic_stats(ens);
    // one spectrum solve; the curvature machinery of `exponent` is not needed
    let spec = crate::spectrum::solve_constrained(ens, r)?;
    let e = e1(&spec) - e0(ens.beta())?;
    let nf = c::<T>(n as f64);
    Ok(nf.ln() - (c::<T>(std::f64::consts::TAU) * stats.v_erg).ln() / c(2.0) - nf * nf * e)
}

/// Watson-lemma outage probability at rate `r`.
///
/// Within `|r - r_erg| <= 1e-3 sqrt(v_erg)` the prefactor `k^2 / (2 E'')`
/// is a numerical 0/0 and the expression analytically degenerates to the
/// Gaussian CDF, which is substituted directly.
pub fn ld_outage<T: Real>(
    ens: &ChannelEnsemble<T>,
    n: usize,
    r: T,
) -> Result<OutageResult<T>, SolveError> {
    if n < 1 {
        return Err(SolveError::Domain(format!("n must be >= 1, got {n}")));
    }
    let stats = ergodic_stats(ens);
    let nf = c::<T>(n as f64);
    let mut res = OutageResult::new(ens, n, r, Method::Ld);

    if (r - stats.r_erg).abs() <= c::<T>(1e-3) * stats.v_erg.sqrt() {
        let arg = nf * (stats.r_erg - r) / stats.v_erg.sqrt();
        res.set_p(q_fun(arg));
        return Ok(res);
    }

    let point = exponent(ens, r)?;
    let e = point.exponent;
    let k = point.k;
    let dd = point.e1_second;
    let watson = e - k * k / (c::<T>(2.0) * dd);
    let arg = nf * k.abs() / dd.sqrt();
    let prefactor_ln = -(dd * stats.v_erg).ln() / c(2.0);
    // ln of the tail integral on the side of r
    let ln_tail = -nf * nf * watson + tail_q_ln(arg) + prefactor_ln;

    if r < stats.r_erg {
        if nf * nf * e > c(UNDERFLOW_EXPONENT) {
            res.set_from_ln(ln_tail);
            res.underflowed = true;
            res.p_out = T::zero();
        } else {
            res.set_from_ln(ln_tail);
        }
    } else {
        // above the mean the same integral is the complementary tail
        let tail = ln_tail.exp();
        res.set_p(T::one() - tail);
    }
    Ok(res)
}

fn tail_q_ln<T: Real>(arg: T) -> T {
    if arg > c(8.0) {
        q_fun_log(arg).expect("arg > 0")
    } else {
        q_fun(arg).ln()
    }
}

/// Skewness-corrected density: [`ld_pdf`] times the cubic bracket
/// `1 - s3/(2 v^2) (r - r_erg) + (N^2/6)(s3/v^3 + s_erg)(r - r_erg)^3`,
/// clamped at zero where the bracket goes negative.
///
/// `s3` is the third-moment coefficient of the distribution, supplied by the
/// caller (it is external input, never computed here). Rejects an `s3` whose
/// bracket turns negative inside `|r - r_erg| <= 3 sqrt(v_erg)/N`, where the
/// correction is supposed to be a small perturbation.
pub fn corrected_pdf<T: Real>(
    ens: &ChannelEnsemble<T>,
    n: usize,
    r: T,
    s3: T,
) -> Result<T, SolveError> {
    let serg = s_erg(ens)?;
    corrected_pdf_with(ens, n, r, s3, serg)
}

/// [`corrected_pdf`] with an explicit third-derivative value (used when the
/// caller has already computed or overridden `s_erg`).
pub fn corrected_pdf_with<T: Real>(
    ens: &ChannelEnsemble<T>,
    n: usize,
    r: T,
    s3: T,
    serg: T,
) -> Result<T, SolveError> {
    let stats = ergodic_stats(ens);
    let bracket = correction_bracket(n, r - stats.r_erg, s3, serg, stats.v_erg);
    if bracket < T::zero() {
        // clamping is only legitimate in the far tail
        let width = c::<T>(3.0) * stats.v_erg.sqrt() / c(n as f64);
        if (r - stats.r_erg).abs() <= width {
            return Err(SolveError::Domain(format!(
                "correction bracket negative at |r - r_erg| = {} <= {width}: s3 = {s3} is not \
                 a small perturbation for this ensemble",
                (r - stats.r_erg).abs()
            )));
        }
        return Ok(T::zero());
    }
    Ok(ld_pdf(ens, n, r)? * bracket)
}

fn correction_bracket<T: Real>(n: usize, dr: T, s3: T, serg: T, v: T) -> T {
    let nf = c::<T>(n as f64);
    T::one() - s3 / (c::<T>(2.0) * v * v) * dr
        + nf * nf / c(6.0) * (s3 / v.powi(3) + serg) * dr.powi(3)
}
