//! Adaptive Simpson quadrature.
//!
//! Used by the library for spectral CDF evaluation. The closed forms in
//! [`crate::specfun`], [`crate::spectrum`] and [`crate::energy`] never go
//! through here; the independent integral oracles that cross-check them
//! live in the test suite.

use crate::real::{c, Real};

/// Error target and recursion budget for one adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec<T> {
    /// Absolute error target for the whole interval.
    pub abs_tol: T,
    /// Maximum adaptive bisection depth.
    pub max_depth: u32,
}

impl<T: Real> QuadratureSpec<T> {
    /// Build a spec, rejecting a non-positive tolerance or zero depth.
    pub fn new(abs_tol: T, max_depth: u32) -> Result<Self, String> {
        if !(abs_tol > T::zero()) {
            return Err(format!("abs_tol must be > 0, got {abs_tol}"));
        }
        if max_depth < 1 {
            return Err("max_depth must be >= 1".into());
        }
        Ok(Self { abs_tol, max_depth })
    }
}

impl<T: Real> Default for QuadratureSpec<T> {
    fn default() -> Self {
        Self {
            abs_tol: crate::real::quad_tolerance::<T>(),
            max_depth: 60,
        }
    }
}

/// Integrate `f` over `[a, b]` by adaptive Simpson bisection.
///
/// Subintervals are accepted when the Richardson estimate `|S2 - S1| / 15`
/// meets the locally halved tolerance or the depth budget is exhausted.
pub fn integrate<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T, spec: QuadratureSpec<T>) -> T {
    if a == b {
        return T::zero();
    }
    let m = midpoint(a, b);
    let fa = f(a);
    let fb = f(b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    adapt(f, a, b, fa, fm, fb, whole, spec.abs_tol, spec.max_depth)
}

fn midpoint<T: Real>(a: T, b: T) -> T {
    (a + b) / c(2.0)
}

fn simpson<T: Real>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / c(6.0) * (fa + c::<T>(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<T: Real, F: Fn(T) -> T>(
    f: &F,
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    tol: T,
    depth: u32,
) -> T {
    let m = midpoint(a, b);
    let lm = midpoint(a, m);
    let rm = midpoint(m, b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= c::<T>(15.0) * tol {
        return left + right + delta / c(15.0);
    }
    let half_tol = tol / c(2.0);
    adapt(f, a, m, fa, flm, fm, left, half_tol, depth - 1)
        + adapt(f, m, b, fm, frm, fb, right, half_tol, depth - 1)
}
