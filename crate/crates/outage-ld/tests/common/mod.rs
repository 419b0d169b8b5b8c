//! Shared test oracles: an adaptive quadrature independent of the library's
//! integrator, plus substitution helpers for endpoint singularities. The
//! closed forms under test never flow through this code.

/// Adaptive Simpson with interval-halved tolerance; independent
/// implementation kept deliberately plain.
pub fn quad(f: &dyn Fn(f64) -> f64, a: f64, b: f64, abs_tol: f64, max_depth: u32) -> f64 {
    fn simpson(_f: &dyn Fn(f64) -> f64, a: f64, fa: f64, fm: f64, fb: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    fn go(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(f, a, fa, flm, fm, m);
        let right = simpson(f, m, fm, frm, fb, b);
        let err = left + right - whole;
        if depth == 0 || err.abs() <= 15.0 * tol {
            return left + right + err / 15.0;
        }
        go(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + go(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(f, a, fa, fm, fb, b);
    go(f, a, b, fa, fm, fb, whole, abs_tol, max_depth)
}

/// Integrate a density-like function over its full support `[a, b]` with the
/// substitutions `x = a + u^2` on the left half and `x = b - v^2` on the
/// right half, which absorb square-root edge factors (and the hard-edge
/// `x^(-1/2)` divergence when weighted accordingly).
pub fn quad_sqrt_edges(f: &dyn Fn(f64) -> f64, a: f64, b: f64, abs_tol: f64) -> f64 {
    let mid = 0.5 * (a + b);
    // the lower limit dodges 0 * inf when f has an inverse-square-root edge
    let left = quad(
        &|u: f64| 2.0 * u * f(a + u * u),
        1e-150 * (mid - a).sqrt(),
        (mid - a).sqrt(),
        abs_tol / 2.0,
        60,
    );
    let right = quad(
        &|v: f64| 2.0 * v * f(b - v * v),
        0.0,
        (b - mid).sqrt(),
        abs_tol / 2.0,
        60,
    );
    left + right
}

/// Linearly spaced grid including both endpoints.
pub fn linspace(a: f64, b: f64, points: usize) -> Vec<f64> {
    assert!(points >= 2);
    (0..points)
        .map(|i| a + (b - a) * i as f64 / (points - 1) as f64)
        .collect()
}
