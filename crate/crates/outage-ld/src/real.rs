//! Scalar abstraction for the analytic kernels.
//!
//! Everything numerical in this crate is written against [`Real`], a thin
//! alias over `num_traits::Float`. `f64` is the production type; `f32`
//! compiles and runs but cannot reach the default solver tolerances, which
//! is why those scale with the type's epsilon.

use num_traits::{Float, FromPrimitive};
use std::fmt::{Debug, Display};

/// Floating-point scalar usable by every solver and closed form in the crate.
pub trait Real:
    Float + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

/// Shorthand conversion for literals inside generic code.
#[inline]
pub fn c<T: Real>(x: f64) -> T {
    T::from(x).expect("literal representable in scalar type")
}

/// Default absolute residual tolerance for scalar root equations.
///
/// `1e-12` for `f64`; wider types of lower precision get `100 * epsilon`.
#[inline]
pub fn root_tolerance<T: Real>() -> T {
    c::<T>(1e-12).max(T::epsilon() * c(100.0))
}

/// Default absolute tolerance for the library's quadrature (CDF evaluation).
#[inline]
pub fn quad_tolerance<T: Real>() -> T {
    c::<T>(1e-10).max(T::epsilon() * c(1000.0))
}
