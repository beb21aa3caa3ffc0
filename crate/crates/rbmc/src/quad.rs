//! Small numeric helpers: the standard normal quantile and a deterministic
//! adaptive quadrature over the unit interval.

use statrs::distribution::{ContinuousCDF, Normal};

use crate::Real;

/// Inverse CDF of the standard normal.
pub fn standard_normal_quantile(p: Real) -> Real {
    debug_assert!(p > 0.0 && p < 1.0);
    // Normal::new(0, 1) cannot fail.
    Normal::new(0.0, 1.0).unwrap().inverse_cdf(p)
}

/// Adaptive Simpson integration of `g` over `(0, 1)`.
///
/// The integrand is evaluated strictly inside the interval (endpoints are
/// nudged in by half the initial panel width), which suits integrands defined
/// via quantile transforms of unbounded distributions. Deterministic: the
/// refinement order depends only on `g`.
pub fn integrate_unit_interval<G: Fn(Real) -> Real>(g: G, tol: Real) -> Real {
    const PANELS: usize = 16;
    const MAX_DEPTH: u32 = 22;
    let h = 1.0 / PANELS as Real;
    let mut total = 0.0;
    for i in 0..PANELS {
        let a = i as Real * h;
        let b = a + h;
        let (a, b) = if i == 0 {
            (a + h * 1e-12, b)
        } else if i == PANELS - 1 {
            (a, b - h * 1e-12)
        } else {
            (a, b)
        };
        let fa = g(a);
        let fb = g(b);
        let m = 0.5 * (a + b);
        let fm = g(m);
        let whole = simpson(a, b, fa, fm, fb);
        total += adaptive(&g, a, b, fa, fm, fb, whole, tol / PANELS as Real, MAX_DEPTH);
    }
    total
}

fn simpson(a: Real, b: Real, fa: Real, fm: Real, fb: Real) -> Real {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<G: Fn(Real) -> Real>(
    g: &G,
    a: Real,
    b: Real,
    fa: Real,
    fm: Real,
    fb: Real,
    whole: Real,
    tol: Real,
    depth: u32,
) -> Real {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = g(lm);
    let frm = g(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adaptive(g, a, m, fa, flm, fm, left, tol * 0.5, depth - 1)
            + adaptive(g, m, b, fm, frm, fb, right, tol * 0.5, depth - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_smooth_functions() {
        let v = integrate_unit_interval(|u| u * u, 1e-10);
        assert!((v - 1.0 / 3.0).abs() < 1e-9);
        let v = integrate_unit_interval(|u| (std::f64::consts::PI * u).sin(), 1e-10);
        assert!((v - 2.0 / std::f64::consts::PI).abs() < 1e-9);
    }

    #[test]
    fn handles_kinks() {
        let v = integrate_unit_interval(|u| (u - 0.3).abs(), 1e-10);
        let exact = 0.5 * (0.3 * 0.3 + 0.7 * 0.7);
        assert!((v - exact).abs() < 1e-8);
    }

    #[test]
    fn quantile_matches_known_points() {
        assert!((standard_normal_quantile(0.5)).abs() < 1e-12);
        assert!((standard_normal_quantile(0.975) - 1.959_963_984_540_054).abs() < 1e-6);
    }
}
