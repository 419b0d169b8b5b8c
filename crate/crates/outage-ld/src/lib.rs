//! Large-deviations analysis of the MIMO mutual information
//! `I_N = log det(I + rho H'H)` for an `M x N` complex Gaussian channel.
//!
//! The library computes, for a channel ensemble `(beta = M/N, rho)`:
//!
//! * the rate-constrained equilibrium eigenvalue density of `H'H`
//!   (a generalized Marchenko-Pastur law, [`spectrum`]),
//! * the energy minima `E0`, `E1(r)` and the exponent `E1(r) - E0`
//!   that governs `P_N(r) ~ exp(-N^2 (E1 - E0))` ([`energy`]),
//! * the resulting probability density and outage probability in linear
//!   and log domains ([`distribution`]),
//! * the classical comparison curves: Gaussian approximation, diversity-
//!   multiplexing exponent, throughput-reliability model, and the regime
//!   asymptotes ([`baselines`]),
//! * a seeded Monte Carlo simulator for ground-truth validation
//!   ([`montecarlo`]).
//!
//! All analytic modules are generic over the scalar type through the
//! [`real::Real`] trait; `f64` is the intended production type and the
//! crate root re-exports `f64` aliases for the common structs. Rates are
//! in nats per transmit antenna throughout; bit and total-rate conversions
//! belong to front ends.

pub mod baselines;
pub mod distribution;
pub mod energy;
pub mod montecarlo;
pub mod quad;
pub mod real;
pub mod specfun;
pub mod spectrum;

pub use distribution::{Method, OutageResult};
pub use spectrum::{ChannelEnsemble, ConstrainedSpectrum, Regime};

/// `f64` channel ensemble.
pub type ChannelEnsemble64 = spectrum::ChannelEnsemble<f64>;
/// `f64` constrained spectrum.
pub type ConstrainedSpectrum64 = spectrum::ConstrainedSpectrum<f64>;
/// `f64` unconstrained (Marchenko-Pastur) spectrum.
pub type UnconstrainedSpectrum64 = spectrum::UnconstrainedSpectrum<f64>;
/// `f64` exponent point.
pub type ExponentPoint64 = energy::ExponentPoint<f64>;
/// `f64` ergodic statistics.
pub type ErgodicStats64 = baselines::ErgodicStats<f64>;
/// `f64` outage result.
pub type OutageResult64 = distribution::OutageResult<f64>;
