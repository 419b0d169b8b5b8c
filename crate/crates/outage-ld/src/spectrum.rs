//! Rate-constrained equilibrium eigenvalue densities.
//!
//! For an ensemble `(beta, rho)` and a target rate `r` (nats per transmit
//! antenna), [`solve_constrained`] finds the unique compactly supported
//! density that minimizes the eigenvalue energy functional subject to
//! normalization and `int p(x) log(1 + rho x) dx = r`. The density is a
//! generalized Marchenko-Pastur law described by support edges `(a, b)` and
//! a rate-tilt multiplier `k`:
//!
//! * `beta > 1` — interior support `0 < a < b`, `p(a) = p(b) = 0`; `(a, b, k)`
//!   solved by nested one-dimensional bisection (edge condition inside
//!   normalization inside the rate equation).
//! * `beta = 1`, `r > r_c(rho)` — interior support with closed-form edges.
//! * `beta = 1`, `r <= r_c(rho)` — hard edge at the origin with an
//!   `x^(-1/2)` divergence; the support collapses onto zero and the two
//!   solution families meet at the critical rate `r_c`.
//!
//! All solvers are deterministic pure functions: the same `(beta, rho, r)`
//! reproduces the same spectrum bit for bit.

use crate::quad::{integrate, QuadratureSpec};
use crate::real::{c, root_tolerance, Real};
use crate::specfun::g_fun;
use thiserror::Error;

/// Solver failures and domain violations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("domain: {0}")]
    Domain(String),
    #[error("{equation}: could not bracket a sign change")]
    Bracket { equation: &'static str },
    #[error("{equation}: residual {residual:e} after {iterations} iterations")]
    Convergence {
        equation: &'static str,
        residual: f64,
        iterations: u32,
    },
}

/// The random matrix ensemble: antenna ratio `beta = M/N >= 1` and linear SNR.
///
/// Ratios within `1e-9` of one collapse to exactly one; the `beta -> 1+`
/// closed forms are ill-conditioned there and the square case has its own
/// analytic branches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelEnsemble<T> {
    beta: T,
    rho: T,
}

impl<T: Real> ChannelEnsemble<T> {
    pub fn new(beta: T, rho: T) -> Result<Self, SolveError> {
        if !(beta >= T::one()) {
            return Err(SolveError::Domain(format!(
                "beta must be >= 1 (normalize first), got {beta}"
            )));
        }
        if !(rho > T::zero()) {
            return Err(SolveError::Domain(format!("rho must be > 0, got {rho}")));
        }
        let beta = if (beta - T::one()).abs() <= c(1e-9) {
            T::one()
        } else {
            beta
        };
        Ok(Self { beta, rho })
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn rho(&self) -> T {
        self.rho
    }

    pub fn is_square(&self) -> bool {
        self.beta == T::one()
    }
}

/// Map raw antenna counts onto a `beta >= 1` ensemble.
///
/// When the transmitter has more antennas than the receiver, the roles of
/// `M` and `N` interchange and the SNR rescales to `rho * n_rx / n_tx`,
/// which leaves the mutual-information distribution invariant (the entry
/// variance is tied to the transmit dimension). Returns the ensemble and
/// the effective `N = min(n_tx, n_rx)`.
pub fn normalize_ensemble<T: Real>(
    n_tx: usize,
    n_rx: usize,
    rho: T,
) -> Result<(ChannelEnsemble<T>, usize), SolveError> {
    if n_tx < 1 || n_rx < 1 {
        return Err(SolveError::Domain(format!(
            "antenna counts must be >= 1, got {n_tx} x {n_rx}"
        )));
    }
    if !(rho > T::zero()) {
        return Err(SolveError::Domain(format!("rho must be > 0, got {rho}")));
    }
    let (small, large) = (n_tx.min(n_rx), n_tx.max(n_rx));
    let beta = c::<T>(large as f64) / c(small as f64);
    let rho_eff = if n_rx >= n_tx {
        rho
    } else {
        rho * c::<T>(n_rx as f64) / c(n_tx as f64)
    };
    Ok((ChannelEnsemble::new(beta, rho_eff)?, small))
}

/// Solution family of a constrained spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `a > 0`, density vanishes at both edges.
    Interior,
    /// `a = 0` with an integrable `x^(-1/2)` divergence (square case only).
    HardEdge,
}

/// A solved rate-constrained eigenvalue density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstrainedSpectrum<T> {
    regime: Regime,
    a: T,
    b: T,
    k: T,
    beta: T,
    rho: T,
    r: T,
}

/// Critical tilt `k_c = 1/rho + 2/sqrt(rho)` where the square-case interior
/// solution's lower edge reaches zero.
pub fn critical_k<T: Real>(rho: T) -> Result<T, SolveError> {
    if !(rho > T::zero()) {
        return Err(SolveError::Domain(format!("rho must be > 0, got {rho}")));
    }
    Ok(rho.recip() + c::<T>(2.0) / rho.sqrt())
}

/// Critical rate `r_c(rho)` separating the square-case solution branches.
///
/// Equal to the rate of the interior branch evaluated at `k = k_c`:
/// `r_c = ((1 + 2 sqrt(rho))/rho) log(1 + rho/(1 + 2 sqrt(rho))) + 2 log(1 + sqrt(rho)) - 1`.
pub fn critical_rate<T: Real>(rho: T) -> Result<T, SolveError> {
    if !(rho > T::zero()) {
        return Err(SolveError::Domain(format!("rho must be > 0, got {rho}")));
    }
    let s = rho.sqrt();
    let w = T::one() + c::<T>(2.0) * s;
    Ok(w / rho * (rho / w).ln_1p() + c::<T>(2.0) * s.ln_1p() - T::one())
}

/// The unconstrained Marchenko-Pastur spectrum with edges `(sqrt(beta) -+ 1)^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnconstrainedSpectrum<T> {
    pub a: T,
    pub b: T,
    beta: T,
}

impl<T: Real> UnconstrainedSpectrum<T> {
    pub fn new(beta: T) -> Result<Self, SolveError> {
        if !(beta >= T::one()) {
            return Err(SolveError::Domain(format!("beta must be >= 1, got {beta}")));
        }
        let s = beta.sqrt();
        Ok(Self {
            a: (s - T::one()).powi(2),
            b: (s + T::one()).powi(2),
            beta,
        })
    }

    /// Density `sqrt((b-x)(x-a)) / (2 pi x)`, zero outside the support.
    pub fn density_at(&self, x: T) -> T {
        if x <= self.a || x >= self.b {
            if self.beta == T::one() && x == T::zero() {
                return T::infinity();
            }
            return T::zero();
        }
        ((self.b - x) * (x - self.a)).sqrt() / (c::<T>(std::f64::consts::TAU) * x)
    }

    /// CDF by singularity-free quadrature of the density.
    pub fn cdf_at(&self, x: T) -> T {
        let (a, b) = (self.a, self.b);
        if self.beta == T::one() {
            // hard edge: 2u p(u^2) = sqrt(b - u^2) / pi
            cdf_by_substitution(
                a,
                b,
                x,
                &|u| (b - u * u).sqrt() / c(std::f64::consts::PI),
                &|v| c::<T>(2.0) * v * self.density_at(b - v * v),
            )
        } else {
            cdf_by_substitution(
                a,
                b,
                x,
                &|u| c::<T>(2.0) * u * self.density_at(a + u * u),
                &|v| c::<T>(2.0) * v * self.density_at(b - v * v),
            )
        }
    }
}

impl<T: Real> ConstrainedSpectrum<T> {
    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// Lower support edge (zero in the hard-edge regime).
    pub fn lower_edge(&self) -> T {
        self.a
    }

    /// Upper support edge.
    pub fn upper_edge(&self) -> T {
        self.b
    }

    /// Rate-tilt Lagrange multiplier.
    pub fn tilt(&self) -> T {
        self.k
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn rho(&self) -> T {
        self.rho
    }

    /// The rate this spectrum was solved at.
    pub fn rate(&self) -> T {
        self.r
    }

    /// Closed-form density at `x`; zero outside `(a, b)`, `+inf` exactly at
    /// the hard edge `x = 0`.
    pub fn density_at(&self, x: T) -> T {
        let (a, b, k, beta, rho) = (self.a, self.b, self.k, self.beta, self.rho);
        let two_pi = c::<T>(std::f64::consts::TAU);
        match self.regime {
            Regime::Interior => {
                if x <= a || x >= b {
                    return T::zero();
                }
                if beta == T::one() {
                    rho / two_pi * ((b - x) * (x - a)).sqrt() / (T::one() + rho * x)
                } else {
                    ((b - x) * (x - a)).sqrt() / (two_pi * x * (T::one() + rho * x))
                        * (rho * x + (beta - T::one()) / (a * b).sqrt())
                }
            }
            Regime::HardEdge => {
                if x == T::zero() {
                    return T::infinity();
                }
                if x < T::zero() || x >= b {
                    return T::zero();
                }
                let edge = T::one() - k * rho / (T::one() + rho * b).sqrt();
                (b - x).sqrt() / (two_pi * (T::one() + rho * x) * x.sqrt()) * (rho * x + edge)
            }
        }
    }

    /// Closed-form value of `int p(x) log(1 + rho x) dx` for this spectrum.
    pub fn rate_of(&self) -> T {
        match self.regime {
            Regime::HardEdge => hard_edge_rate(self.rho, self.k, self.b),
            Regime::Interior if self.beta == T::one() => interior_rate_square(self.rho, self.k),
            Regime::Interior => interior_rate(self.beta, self.rho, self.a, self.b, self.k),
        }
    }

    /// CDF of the density at `x` by adaptive quadrature.
    ///
    /// Square-root edge behavior (and the hard-edge `x^(-1/2)` divergence)
    /// is removed by the substitutions `x = a + u^2` / `x = b - v^2` before
    /// integrating.
    pub fn cdf_at(&self, x: T) -> T {
        let (a, b, k, rho) = (self.a, self.b, self.k, self.rho);
        let right = |v: T| c::<T>(2.0) * v * self.density_at(b - v * v);
        match self.regime {
            // density vanishes at a: 2u p(a + u^2) is zero at u = 0
            Regime::Interior => cdf_by_substitution(
                a,
                b,
                x,
                &|u| c::<T>(2.0) * u * self.density_at(a + u * u),
                &right,
            ),
            // x = u^2 cancels the x^(-1/2) divergence analytically:
            // 2u p(u^2) = sqrt(b - u^2) (rho u^2 + edge) / (pi (1 + rho u^2))
            Regime::HardEdge => {
                let edge = T::one() - k * rho / (T::one() + rho * b).sqrt();
                cdf_by_substitution(
                    a,
                    b,
                    x,
                    &|u| {
                        let t = u * u;
                        (b - t).sqrt() * (rho * t + edge)
                            / (c::<T>(std::f64::consts::PI) * (T::one() + rho * t))
                    },
                    &right,
                )
            }
        }
    }
}

/// Shared CDF evaluation over `[a, min(x, b)]` after edge substitutions.
///
/// `left` must be the already-transformed integrand `u -> 2u p(a + u^2)`
/// (with any edge singularity cancelled analytically) and `right` the
/// integrand `v -> 2v p(b - v^2)`.
fn cdf_by_substitution<T: Real>(
    a: T,
    b: T,
    x: T,
    left: &impl Fn(T) -> T,
    right: &impl Fn(T) -> T,
) -> T {
    if x <= a {
        return T::zero();
    }
    if x >= b {
        return T::one();
    }
    let spec = QuadratureSpec::default();
    let mid = (a + b) / c(2.0);
    let left_to = x.min(mid);
    let left_part = integrate(left, T::zero(), (left_to - a).sqrt(), spec);
    if x <= mid {
        return left_part.min(T::one()).max(T::zero());
    }
    let right_part = integrate(right, (b - x).sqrt(), (b - mid).sqrt(), spec);
    (left_part + right_part).min(T::one()).max(T::zero())
}

/// Solve the constrained spectrum at rate `r > 0`.
pub fn solve_constrained<T: Real>(
    ens: &ChannelEnsemble<T>,
    r: T,
) -> Result<ConstrainedSpectrum<T>, SolveError> {
    if !(r > T::zero()) {
        return Err(SolveError::Domain(format!("rate must be > 0, got {r}")));
    }
    if ens.is_square() {
        solve_square(ens, r)
    } else {
        solve_rectangular(ens, r)
    }
}

// ---------------------------------------------------------------------------
// beta > 1: nested bisection a(b, k) -> b(k) -> k
// ---------------------------------------------------------------------------

/// Edge condition residual `k rho / sqrt((1+rho a)(1+rho b)) + (beta-1)/sqrt(ab) - 1`,
/// strictly decreasing in `a`.
fn edge_residual<T: Real>(beta: T, rho: T, a: T, b: T, k: T) -> T {
    k * rho / ((T::one() + rho * a) * (T::one() + rho * b)).sqrt()
        + (beta - T::one()) / (a * b).sqrt()
        - T::one()
}

/// Lower edge `a` for given `(b, k)`, or `None` when no admissible edge
/// exists below `b` (signals that `b` is too small).
fn lower_edge_for<T: Real>(beta: T, rho: T, b: T, k: T) -> Option<T> {
    if edge_residual(beta, rho, b, b, k) > T::zero() {
        return None;
    }
    let mut lo = b * c(1e-3);
    let mut guard = 0;
    while edge_residual(beta, rho, lo, b, k) < T::zero() {
        lo = lo * c(1e-3);
        guard += 1;
        if guard > 120 || lo < T::min_positive_value() {
            return None; // residual never turns positive: degenerate parameters
        }
    }
    bisect_log("edge condition", &|a| edge_residual(beta, rho, a, b, k), lo, b).ok()
}

/// Normalization residual at `b` (with `a = a(b, k)` substituted), increasing in `b`.
fn norm_residual<T: Real>(beta: T, rho: T, b: T, k: T) -> Option<(T, T)> {
    let a = lower_edge_for(beta, rho, b, k)?;
    let s = ((T::one() + rho * a) * (T::one() + rho * b)).sqrt();
    let val = (a + b - c::<T>(2.0) * k - c::<T>(2.0) * (beta - T::one())) / c(4.0)
        + k / (c::<T>(2.0) * s)
        - T::one();
    Some((val, a))
}

/// Support `(a, b)` for a given tilt `k`, `beta > 1`.
fn support_for_tilt<T: Real>(beta: T, rho: T, k: T) -> Result<(T, T), SolveError> {
    let eq = "normalization";
    let mut hi = ((k.abs() + beta).sqrt() + T::one()).powi(2) + (beta.sqrt() + T::one()).powi(2) + c(2.0);
    let mut guard = 0;
    while norm_residual(beta, rho, hi, k).map_or(true, |(g, _)| g < T::zero()) {
        hi = hi * c(2.0);
        guard += 1;
        if guard > 200 {
            return Err(SolveError::Bracket { equation: eq });
        }
    }
    let mut lo = hi / c(2.0);
    guard = 0;
    while norm_residual(beta, rho, lo, k).map_or(false, |(g, _)| g >= T::zero()) {
        lo = lo / c(2.0);
        guard += 1;
        if guard > 1200 {
            return Err(SolveError::Bracket { equation: eq });
        }
    }
    // treat "no admissible edge" as a negative residual: the admissible b
    // region is upward closed and contains the root
    let b = bisect_log(
        eq,
        &|b| norm_residual(beta, rho, b, k).map_or(-T::one(), |(g, _)| g),
        lo,
        hi,
    )?;
    let (_, a) = norm_residual(beta, rho, b, k).ok_or(SolveError::Convergence {
        equation: eq,
        residual: f64::NAN,
        iterations: 0,
    })?;
    Ok((a, b))
}

/// Rate closed form for `beta > 1` (uses `G`).
fn interior_rate<T: Real>(beta: T, rho: T, a: T, b: T, k: T) -> T {
    let _ = beta;
    let d = b - a;
    let s = ((T::one() + rho * a) * (T::one() + rho * b)).sqrt();
    let x1 = (T::one() + rho * a) / (d * rho);
    let x2 = a / d;
    let g11 = g_fun(x1, x1).expect("nonnegative args");
    let g12 = g_fun(x1, x2).expect("nonnegative args");
    (d * rho).ln() + d * k * rho / (c::<T>(2.0) * s) * g11
        + d / c(2.0) * (T::one() - k * rho / s) * g12
}

fn solve_rectangular<T: Real>(
    ens: &ChannelEnsemble<T>,
    r: T,
) -> Result<ConstrainedSpectrum<T>, SolveError> {
    let (beta, rho) = (ens.beta, ens.rho);
    let eq = "rate constraint";
    let rate_at = |k: T| -> Result<T, SolveError> {
        let (a, b) = support_for_tilt(beta, rho, k)?;
        Ok(interior_rate(beta, rho, a, b, k))
    };
    // brackets from the tilt asymptotics: r ~ beta/|k| as k -> -inf and
    // r ~ log(k rho) as k -> +inf
    let mut lo = -c::<T>(2.0) * beta / r - T::one();
    let mut guard = 0;
    while rate_at(lo)? >= r {
        lo = lo * c(2.0);
        guard += 1;
        if guard > 200 {
            return Err(SolveError::Bracket { equation: eq });
        }
    }
    let mut hi = c::<T>(2.0) * r.exp() / rho + T::one();
    guard = 0;
    while rate_at(hi)? <= r {
        hi = hi * c(2.0);
        guard += 1;
        if guard > 200 {
            return Err(SolveError::Bracket { equation: eq });
        }
    }
    let k = bisect_linear(eq, &|k| rate_at(k).unwrap_or(T::nan()) - r, lo, hi)?;
    let (a, b) = support_for_tilt(beta, rho, k)?;
    Ok(ConstrainedSpectrum {
        regime: Regime::Interior,
        a,
        b,
        k,
        beta,
        rho,
        r,
    })
}

// ---------------------------------------------------------------------------
// beta = 1
// ---------------------------------------------------------------------------

/// Interior-branch rate for the square case:
/// `r = log rho + (k+1) log(k+1) - k log k - 1`, increasing in `k`.
fn interior_rate_square<T: Real>(rho: T, k: T) -> T {
    rho.ln() + (k + T::one()) * (k + T::one()).ln() - k * k.ln() - T::one()
}

/// Upper edge for the hard-edge branch at tilt `k`: the unique root of
/// `(b/2 - 2) / (1 - 1/sqrt(1 + rho b)) = k`.
fn hard_edge_upper<T: Real>(rho: T, k: T) -> Result<T, SolveError> {
    let eq = "hard-edge normalization";
    // 1 - 1/sqrt(1+s) written as s/(sqrt(1+s)(1+sqrt(1+s))) to stay exact
    // for tiny rho b
    let phi = |b: T| {
        let s = rho * b;
        let root = (T::one() + s).sqrt();
        let denom = s / (root * (T::one() + root));
        (b / c(2.0) - c(2.0)) / denom - k
    };
    let mut hi = c::<T>(8.0) + c::<T>(2.0) * k.max(T::zero());
    let mut guard = 0;
    while phi(hi) < T::zero() {
        hi = hi * c(2.0);
        guard += 1;
        if guard > 200 {
            return Err(SolveError::Bracket { equation: eq });
        }
    }
    let mut lo = c::<T>(2.0);
    guard = 0;
    while phi(lo) > T::zero() {
        lo = lo / c(2.0);
        guard += 1;
        if guard > 1200 {
            return Err(SolveError::Bracket { equation: eq });
        }
    }
    bisect_log(eq, &phi, lo, hi)
}

/// Hard-edge branch rate at `(k, b)`:
/// `r = 2(k+1) log((1+B)/2) - (B-1)^2/(4 rho) - k log B`, `B = sqrt(1 + rho b)`.
fn hard_edge_rate<T: Real>(rho: T, k: T, b: T) -> T {
    let s = rho * b;
    let big = (T::one() + s).sqrt();
    let bm1 = s / (T::one() + big); // B - 1 without cancellation
    let log_half = (bm1 / c(2.0)).ln_1p(); // log((1+B)/2)
    let log_big = s.ln_1p() / c(2.0); // log B
    c::<T>(2.0) * (k + T::one()) * log_half - bm1 * bm1 / (c::<T>(4.0) * rho) - k * log_big
}

fn solve_square<T: Real>(
    ens: &ChannelEnsemble<T>,
    r: T,
) -> Result<ConstrainedSpectrum<T>, SolveError> {
    let rho = ens.rho;
    let k_c = critical_k(rho)?;
    let r_c = critical_rate(rho)?;
    if r > r_c {
        // interior branch: closed-form edges, scalar monotone rate equation
        let eq = "square interior rate";
        let f = |k: T| interior_rate_square(rho, k) - r;
        let mut hi = c::<T>(4.0) * r.exp() / rho + k_c + c(4.0);
        let mut guard = 0;
        while f(hi) < T::zero() {
            hi = hi * c(2.0);
            guard += 1;
            if guard > 200 {
                return Err(SolveError::Bracket { equation: eq });
            }
        }
        let k = bisect_linear(eq, &f, k_c, hi)?;
        let root = (k + T::one()).sqrt();
        Ok(ConstrainedSpectrum {
            regime: Regime::Interior,
            a: (root - T::one()).powi(2) - rho.recip(),
            b: (root + T::one()).powi(2) - rho.recip(),
            k,
            beta: T::one(),
            rho,
            r,
        })
    } else {
        let eq = "square hard-edge rate";
        let f = |k: T| -> Result<T, SolveError> {
            let b = hard_edge_upper(rho, k)?;
            Ok(hard_edge_rate(rho, k, b) - r)
        };
        let mut lo = -c::<T>(2.0) / r - T::one();
        let mut guard = 0;
        while f(lo)? > T::zero() {
            lo = lo * c(2.0);
            guard += 1;
            if guard > 200 {
                return Err(SolveError::Bracket { equation: eq });
            }
        }
        let k = bisect_linear(eq, &|k| f(k).unwrap_or(T::nan()), lo, k_c)?;
        let b = hard_edge_upper(rho, k)?;
        Ok(ConstrainedSpectrum {
            regime: Regime::HardEdge,
            a: T::zero(),
            b,
            k,
            beta: T::one(),
            rho,
            r,
        })
    }
}

// ---------------------------------------------------------------------------
// bisection primitives
// ---------------------------------------------------------------------------

const MAX_BISECTIONS: u32 = 200;

/// Geometry of one bisection step.
#[derive(Clone, Copy)]
enum Split {
    /// Arithmetic midpoint.
    Linear,
    /// Geometric midpoint, for positive roots spanning many decades
    /// (support edges can sit anywhere between `1/(rho |k|)` and `k`).
    Log,
}

/// Bisection run to interval exhaustion in the working precision.
///
/// `f(lo)` and `f(hi)` must straddle zero. Early exit on a small residual is
/// deliberately avoided: near extreme tilts some residuals go flat (the edge
/// condition's slope in `a` can fall below `1e-7`), and an early residual
/// exit there would leave orders of magnitude of achievable accuracy on the
/// table for the enclosing solver. Returns the bracketed point with the
/// smallest residual; errors only if no sign change exists, the function
/// turns NaN, or the best residual is grossly off.
fn bisect<T: Real>(
    equation: &'static str,
    f: &impl Fn(T) -> T,
    mut lo: T,
    mut hi: T,
    split: Split,
) -> Result<T, SolveError> {
    let flo = f(lo);
    let fhi = f(hi);
    if flo.is_nan() || fhi.is_nan() || (flo > T::zero()) == (fhi > T::zero()) {
        return Err(SolveError::Bracket { equation });
    }
    let lo_positive = flo > T::zero();
    let (mut best, mut best_res) = if flo.abs() < fhi.abs() {
        (lo, flo)
    } else {
        (hi, fhi)
    };
    let mut iterations = 0;
    for i in 0..MAX_BISECTIONS {
        iterations = i;
        let m = match split {
            Split::Linear => (lo + hi) / c(2.0),
            Split::Log => (lo * hi).sqrt(),
        };
        if m == lo || m == hi {
            break;
        }
        let fm = f(m);
        if fm.is_nan() {
            return Err(SolveError::Convergence {
                equation,
                residual: f64::NAN,
                iterations: i,
            });
        }
        if fm.abs() < best_res.abs() {
            best = m;
            best_res = fm;
        }
        if (fm > T::zero()) == lo_positive {
            lo = m;
        } else {
            hi = m;
        }
    }
    // residuals are normally at roundoff here; anything past the gross
    // threshold means the equation could not actually be met
    if best_res.abs() > root_tolerance::<T>().sqrt() {
        return Err(SolveError::Convergence {
            equation,
            residual: best_res.to_f64().unwrap_or(f64::NAN),
            iterations,
        });
    }
    Ok(best)
}

fn bisect_linear<T: Real>(
    equation: &'static str,
    f: &impl Fn(T) -> T,
    lo: T,
    hi: T,
) -> Result<T, SolveError> {
    bisect(equation, f, lo, hi, Split::Linear)
}

fn bisect_log<T: Real>(
    equation: &'static str,
    f: &impl Fn(T) -> T,
    lo: T,
    hi: T,
) -> Result<T, SolveError> {
    bisect(equation, f, lo, hi, Split::Log)
}
