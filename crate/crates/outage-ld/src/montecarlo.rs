//! Ground-truth simulator: seeded complex Gaussian channels, exact
//! mutual informations, eigenvalue spectra, empirical outage curves and
//! rate-conditioned spectral CDFs.
//!
//! Sampling is embarrassingly parallel: `streams` independent generators are
//! derived deterministically from `(seed, stream index)` (one ChaCha stream
//! per index), each fills a private accumulator, and the accumulators merge
//! in stream order. The same `(seed, streams, trials)` therefore reproduces
//! identical results regardless of scheduling.

use crate::distribution::{Method, OutageResult};
use crate::real::{c, Real};
use num_complex::Complex;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

/// Monte Carlo failures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum McError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("Cholesky breakdown at pivot {pivot}: matrix not positive definite (NaN input?)")]
    Cholesky { pivot: usize },
    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal {off:e})")]
    JacobiNoConvergence { sweeps: u32, off: f64 },
    #[error(
        "insufficient acceptance: {accepted} of {total} trials satisfied the rate condition \
         (need >= {minimum})"
    )]
    InsufficientAcceptance {
        accepted: u64,
        total: u64,
        minimum: u64,
    },
}

/// Simulation settings. `n`/`m` are transmit/receive antenna counts with
/// `m >= n` (normalize wide channels first), `rho` the linear SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McConfig<T> {
    pub n: usize,
    pub m: usize,
    pub rho: T,
    pub trials: u64,
    pub seed: u64,
    pub streams: usize,
}

impl<T: Real> McConfig<T> {
    pub fn validate(&self) -> Result<(), McError> {
        if self.n < 1 || self.m < self.n {
            return Err(McError::Config(format!(
                "need m >= n >= 1, got n={} m={}",
                self.n, self.m
            )));
        }
        if !(self.rho > T::zero()) {
            return Err(McError::Config(format!("rho must be > 0, got {}", self.rho)));
        }
        if self.trials < 1 {
            return Err(McError::Config("trials must be >= 1".into()));
        }
        if self.streams < 1 {
            return Err(McError::Config("streams must be >= 1".into()));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// dense complex matrices (row-major, just big enough for this module)
// ---------------------------------------------------------------------------

/// A dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex<T>) {
        self.data[i * self.cols + j] = v;
    }

    /// Gram matrix `H' H` (conjugate transpose times self), `cols x cols`
    /// Hermitian positive semidefinite.
    pub fn gram(&self) -> CMatrix<T> {
        let n = self.cols;
        let mut g = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Complex::new(T::zero(), T::zero());
                for k in 0..self.rows {
                    acc = acc + self.get(k, i).conj() * self.get(k, j);
                }
                g.set(i, j, acc);
                g.set(j, i, acc.conj());
            }
        }
        g
    }

    /// Frobenius norm.
    pub fn frobenius(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |s, z| s + z.norm_sqr())
            .sqrt()
    }
}

// ---------------------------------------------------------------------------
// sampling
// ---------------------------------------------------------------------------

/// Uniform in `(0, 1]` from the top 53 bits of one draw.
#[inline]
fn uniform_open<T: Real, R: RngCore>(rng: &mut R) -> T {
    let u = ((rng.next_u64() >> 11) as f64) * (1.0 / (1u64 << 53) as f64);
    c::<T>(1.0 - u)
}

/// One Box-Muller pair of independent standard normals.
fn normal_pair<T: Real, R: RngCore>(rng: &mut R) -> (T, T) {
    let u1: T = uniform_open(rng);
    let u2: T = uniform_open(rng);
    let radius = (-c::<T>(2.0) * u1.ln()).sqrt();
    let angle = c::<T>(std::f64::consts::TAU) * u2;
    (radius * angle.cos(), radius * angle.sin())
}

/// Draw an `m x n` channel with independent `CN(0, 1/n)` entries
/// (real and imaginary parts each `N(0, 1/(2n))`).
pub fn sample_channel<T: Real, R: RngCore>(rng: &mut R, n: usize, m: usize) -> CMatrix<T> {
    let sigma = (c::<T>(2.0) * c(n as f64)).sqrt().recip();
    let mut h = CMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            let (re, im): (T, T) = normal_pair(rng);
            h.set(i, j, Complex::new(re * sigma, im * sigma));
        }
    }
    h
}

/// Exact mutual information `log det(I + rho H' H)` in nats, via the
/// Cholesky factor of the positive-definite `n x n` matrix: the log
/// determinant is twice the sum of the log diagonal. Eigenvalues are never
/// formed.
pub fn mutual_information<T: Real>(h: &CMatrix<T>, rho: T) -> Result<T, McError> {
    let mut a = h.gram();
    let n = a.cols;
    for i in 0..n {
        let d = a.get(i, i);
        a.set(i, i, Complex::new(T::one() + rho * d.re, T::zero()));
        for j in (i + 1)..n {
            let v = a.get(i, j);
            a.set(i, j, Complex::new(rho * v.re, rho * v.im));
        }
    }
    cholesky_log_det(&mut a)
}

/// In-place lower Cholesky of a Hermitian positive-definite matrix (upper
/// triangle read, lower written); returns `2 sum log L_ii`.
fn cholesky_log_det<T: Real>(a: &mut CMatrix<T>) -> Result<T, McError> {
    let n = a.rows;
    let mut log_det = T::zero();
    for j in 0..n {
        let mut d = a.get(j, j).re;
        for k in 0..j {
            d = d - a.get(j, k).norm_sqr();
        }
        if !(d > T::zero()) {
            return Err(McError::Cholesky { pivot: j });
        }
        let l = d.sqrt();
        log_det = log_det + l.ln();
        a.set(j, j, Complex::new(l, T::zero()));
        for i in (j + 1)..n {
            // row i of the factor; source entry is the conjugate of the
            // stored upper triangle
            let mut v = a.get(j, i).conj();
            for k in 0..j {
                v = v - a.get(i, k) * a.get(j, k).conj();
            }
            a.set(i, j, v / l);
        }
    }
    Ok(c::<T>(2.0) * log_det)
}

/// All eigenvalues of a Hermitian matrix by cyclic Jacobi rotations,
/// ascending. The input is symmetrized as `(A + A')/2` first; convergence
/// requires the off-diagonal Frobenius norm below `1e-12 ||A||` within 100
/// sweeps.
pub fn hermitian_eigenvalues<T: Real>(a: &CMatrix<T>) -> Result<Vec<T>, McError> {
    assert_eq!(a.rows, a.cols, "square input required");
    let n = a.rows;
    let mut w = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = (a.get(i, j) + a.get(j, i).conj()) / Complex::new(c(2.0), T::zero());
            w.set(i, j, v);
        }
    }
    let norm = w.frobenius();
    let tol = c::<T>(1e-12).max(T::epsilon() * c(16.0)) * norm;
    const MAX_SWEEPS: u32 = 100;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&w) <= tol {
            let mut eig: Vec<T> = (0..n).map(|i| w.get(i, i).re).collect();
            eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
            return Ok(eig);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut w, p, q);
            }
        }
    }
    if off_diagonal_norm(&w) <= tol {
        let mut eig: Vec<T> = (0..n).map(|i| w.get(i, i).re).collect();
        eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
        return Ok(eig);
    }
    Err(McError::JacobiNoConvergence {
        sweeps: MAX_SWEEPS,
        off: off_diagonal_norm(&w).to_f64().unwrap_or(f64::NAN),
    })
}

fn off_diagonal_norm<T: Real>(a: &CMatrix<T>) -> T {
    let n = a.rows;
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s = s + a.get(i, j).norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One complex Jacobi rotation annihilating `A[p][q]`.
///
/// The pivot's phase is absorbed first (so the 2x2 block becomes real
/// symmetric), then the classical rotation angle is chosen from
/// `tau = (A_qq - A_pp) / (2 |A_pq|)` with the smaller-angle root.
fn jacobi_rotate<T: Real>(a: &mut CMatrix<T>, p: usize, q: usize) {
    let apq = a.get(p, q);
    let norm = apq.norm();
    if norm < T::min_positive_value() {
        return;
    }
    let phase = apq / Complex::new(norm, T::zero());
    let tau = (a.get(q, q).re - a.get(p, p).re) / (c::<T>(2.0) * norm);
    let t = if tau >= T::zero() {
        (tau + (T::one() + tau * tau).sqrt()).recip()
    } else {
        -(-tau + (T::one() + tau * tau).sqrt()).recip()
    };
    let cos = (T::one() + t * t).sqrt().recip();
    let sin = t * cos;
    let n = a.rows;
    // column update: A <- A U with U[p][p]=cos, U[p][q]=sin,
    // U[q][p]=-conj(phase) sin, U[q][q]=conj(phase) cos
    let (cosc, sinc) = (Complex::new(cos, T::zero()), Complex::new(sin, T::zero()));
    for i in 0..n {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, aip * cosc - aiq * phase.conj() * sinc);
        a.set(i, q, aip * sinc + aiq * phase.conj() * cosc);
    }
    // row update: A <- U' A
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, apj * cosc - aqj * phase * sinc);
        a.set(q, j, apj * sinc + aqj * phase * cosc);
    }
    // clean the annihilated pair against roundoff
    let zero = Complex::new(T::zero(), T::zero());
    a.set(p, q, zero);
    a.set(q, p, zero);
}

// ---------------------------------------------------------------------------
// accumulators
// ---------------------------------------------------------------------------

/// What one simulation pass should collect.
#[derive(Debug, Clone, PartialEq)]
pub struct CollectorSpec<T> {
    /// Histogram bin width for total mutual informations (nats).
    pub hist_bin_width: T,
    /// Total-rate thresholds `N r` for outage counting.
    pub outage_thresholds: Vec<T>,
    /// Total-rate threshold for pooling eigenvalues of accepted trials.
    pub eig_threshold: Option<T>,
}

impl<T: Real> CollectorSpec<T> {
    /// Defaults for `n` transmit antennas: bin width `0.01 n` nats, no
    /// thresholds.
    pub fn for_antennas(n: usize) -> Self {
        Self {
            hist_bin_width: c::<T>(0.01) * c(n as f64),
            outage_thresholds: Vec::new(),
            eig_threshold: None,
        }
    }
}

/// Streaming statistics of sampled mutual informations and conditioned
/// eigenvalues. Merging is associative and commutative up to floating-point
/// reassociation; the driver always merges in stream order so results are
/// reproducible bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct McAccumulator<T> {
    spec: CollectorSpec<T>,
    count: u64,
    sum: T,
    sum_sq: T,
    hist: Vec<u64>,
    counts_le: Vec<u64>,
    eigenvalues: Vec<T>,
    accepted: u64,
}

impl<T: Real> McAccumulator<T> {
    pub fn new(spec: CollectorSpec<T>) -> Self {
        let thresholds = spec.outage_thresholds.len();
        Self {
            spec,
            count: 0,
            sum: T::zero(),
            sum_sq: T::zero(),
            hist: Vec::new(),
            counts_le: vec![0; thresholds],
            eigenvalues: Vec::new(),
            accepted: 0,
        }
    }

    /// Whether a trial with mutual information `i_n` needs its eigenvalues.
    pub fn wants_eigenvalues(&self, i_n: T) -> bool {
        self.spec.eig_threshold.map_or(false, |t| i_n <= t)
    }

    /// Record one trial. `eigenvalues` must be provided exactly when
    /// [`Self::wants_eigenvalues`] says so.
    pub fn record(&mut self, i_n: T, eigenvalues: Option<&[T]>) {
        self.count += 1;
        self.sum = self.sum + i_n;
        self.sum_sq = self.sum_sq + i_n * i_n;
        let bin = (i_n / self.spec.hist_bin_width)
            .floor()
            .to_f64()
            .unwrap_or(0.0)
            .max(0.0) as usize;
        if bin >= self.hist.len() {
            self.hist.resize(bin + 1, 0);
        }
        self.hist[bin] += 1;
        for (i, t) in self.spec.outage_thresholds.iter().enumerate() {
            if i_n <= *t {
                self.counts_le[i] += 1;
            }
        }
        if self.wants_eigenvalues(i_n) {
            let eig = eigenvalues.expect("eigenvalues required for accepted trial");
            self.accepted += 1;
            self.eigenvalues.extend_from_slice(eig);
        }
    }

    /// Merge another accumulator collected with the same spec.
    pub fn merge(mut self, other: Self) -> Self {
        assert_eq!(self.spec, other.spec, "incompatible collector specs");
        self.count += other.count;
        self.sum = self.sum + other.sum;
        self.sum_sq = self.sum_sq + other.sum_sq;
        if other.hist.len() > self.hist.len() {
            self.hist.resize(other.hist.len(), 0);
        }
        for (i, v) in other.hist.iter().enumerate() {
            self.hist[i] += v;
        }
        for (i, v) in other.counts_le.iter().enumerate() {
            self.counts_le[i] += v;
        }
        self.eigenvalues.extend_from_slice(&other.eigenvalues);
        self.eigenvalues
            .sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
        self.accepted += other.accepted;
        self
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> T {
        self.sum / c(self.count as f64)
    }

    pub fn variance(&self) -> T {
        let m = self.mean();
        self.sum_sq / c(self.count as f64) - m * m
    }

    /// Fraction of trials at or below each configured threshold.
    pub fn outage_fractions(&self) -> Vec<T> {
        self.counts_le
            .iter()
            .map(|&k| c::<T>(k as f64) / c(self.count as f64))
            .collect()
    }

    /// Histogram of total mutual informations as `(bin_start, count)` pairs.
    pub fn histogram(&self) -> impl Iterator<Item = (T, u64)> + '_ {
        let w = self.spec.hist_bin_width;
        self.hist
            .iter()
            .enumerate()
            .map(move |(i, &k)| (w * c(i as f64), k))
    }

    pub fn bin_width(&self) -> T {
        self.spec.hist_bin_width
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }

    /// Pooled eigenvalues of accepted trials, ascending.
    pub fn pooled_eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }
}

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

/// Run the configured number of trials across deterministic streams and
/// merge the per-stream accumulators in stream order.
pub fn run<T: Real>(cfg: &McConfig<T>, spec: &CollectorSpec<T>) -> Result<McAccumulator<T>, McError> {
    cfg.validate()?;
    let streams = cfg.streams.min(cfg.trials as usize).max(1);
    let base = cfg.trials / streams as u64;
    let rem = (cfg.trials % streams as u64) as usize;

    let results: Vec<Result<McAccumulator<T>, McError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..streams)
            .map(|s| {
                let trials = base + u64::from(s < rem);
                scope.spawn(move || run_stream(cfg, spec, s as u64, trials))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("stream panicked")).collect()
    });

    let mut merged: Option<McAccumulator<T>> = None;
    for res in results {
        let acc = res?;
        merged = Some(match merged {
            None => acc,
            Some(m) => m.merge(acc),
        });
    }
    Ok(merged.expect("at least one stream"))
}

fn run_stream<T: Real>(
    cfg: &McConfig<T>,
    spec: &CollectorSpec<T>,
    stream: u64,
    trials: u64,
) -> Result<McAccumulator<T>, McError> {
    let mut rng = ChaCha12Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    let mut acc = McAccumulator::new(spec.clone());
    for _ in 0..trials {
        let h = sample_channel(&mut rng, cfg.n, cfg.m);
        let i_n = mutual_information(&h, cfg.rho)?;
        if acc.wants_eigenvalues(i_n) {
            let eig = hermitian_eigenvalues(&h.gram())?;
            acc.record(i_n, Some(&eig));
        } else {
            acc.record(i_n, None);
        }
    }
    Ok(acc)
}

/// Empirical outage curve: for each rate (nats per antenna), the fraction of
/// trials with `I_N <= N r` and its binomial standard error.
pub fn empirical_outage<T: Real>(
    cfg: &McConfig<T>,
    r_grid: &[T],
) -> Result<Vec<OutageResult<T>>, McError> {
    let nf = c::<T>(cfg.n as f64);
    let mut spec = CollectorSpec::for_antennas(cfg.n);
    spec.outage_thresholds = r_grid.iter().map(|&r| nf * r).collect();
    let acc = run(cfg, &spec)?;
    let trials = c::<T>(acc.count() as f64);
    Ok(acc
        .outage_fractions()
        .into_iter()
        .zip(r_grid)
        .map(|(p, &r)| {
            let mut res = OutageResult::from_parts(cfg.n, cfg.m, cfg.rho, r, Method::Mc);
            res.set_p(p);
            res.stderr = Some((p * (T::one() - p) / trials).sqrt());
            res
        })
        .collect())
}

/// Empirical CDF backed by a sorted sample.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf<T> {
    samples: Vec<T>,
}

impl<T: Real> EmpiricalCdf<T> {
    /// Build from samples (sorted internally).
    pub fn new(mut samples: Vec<T>) -> Self {
        samples.sort_by(|x, y| x.partial_cmp(y).expect("finite samples"));
        Self { samples }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[T] {
        &self.samples
    }

    /// Fraction of samples `<= x`.
    pub fn eval(&self, x: T) -> T {
        let idx = self.samples.partition_point(|&s| s <= x);
        c::<T>(idx as f64) / c(self.samples.len() as f64)
    }

    /// Kolmogorov distance `sup_x |F_emp(x) - F(x)|` against a reference CDF.
    pub fn kolmogorov_distance(&self, reference: impl Fn(T) -> T) -> T {
        let n = c::<T>(self.samples.len() as f64);
        let mut sup = T::zero();
        for (i, &x) in self.samples.iter().enumerate() {
            let f = reference(x);
            let lo = (f - c::<T>(i as f64) / n).abs();
            let hi = (c::<T>((i + 1) as f64) / n - f).abs();
            sup = sup.max(lo).max(hi);
        }
        sup
    }
}

/// Conditioned-spectrum estimate: eigenvalues of `H'H` pooled over trials
/// with `I_N <= N r`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionedSpectrum<T> {
    pub cdf: EmpiricalCdf<T>,
    pub accepted_trials: u64,
    pub total_trials: u64,
}

impl<T: Real> ConditionedSpectrum<T> {
    pub fn acceptance_rate(&self) -> T {
        c::<T>(self.accepted_trials as f64) / c(self.total_trials as f64)
    }
}

/// Minimum accepted trials for a conditioned CDF.
const MIN_ACCEPTED: u64 = 100;

/// Pool eigenvalues over all trials whose mutual information stayed at or
/// below `N r`; errors out when fewer than 100 trials are accepted.
pub fn conditioned_spectrum<T: Real>(
    cfg: &McConfig<T>,
    r: T,
) -> Result<ConditionedSpectrum<T>, McError> {
    let mut spec = CollectorSpec::for_antennas(cfg.n);
    spec.eig_threshold = Some(c::<T>(cfg.n as f64) * r);
    let acc = run(cfg, &spec)?;
    if acc.accepted() < MIN_ACCEPTED {
        return Err(McError::InsufficientAcceptance {
            accepted: acc.accepted(),
            total: acc.count(),
            minimum: MIN_ACCEPTED,
        });
    }
    Ok(ConditionedSpectrum {
        cdf: EmpiricalCdf::new(acc.pooled_eigenvalues().to_vec()),
        accepted_trials: acc.accepted(),
        total_trials: acc.count(),
    })
}
