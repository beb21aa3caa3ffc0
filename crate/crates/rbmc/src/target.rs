//! Target distributions: unnormalized densities over a reference measure.

use std::fmt::Debug;

use crate::rng::Stream;
use crate::Real;

/// Base measure against which all densities are expressed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReferenceMeasure {
    /// Lebesgue measure on the real line.
    Continuous1D,
    /// Counting measure on `{0, .., state_count - 1}` with `state_count >= 2`.
    DiscreteFinite { state_count: usize },
}

/// A point of the state space: `f64` (continuous) or `usize` (discrete).
pub trait StatePoint: Copy + PartialEq + Debug + Send + Sync + 'static {}
impl StatePoint for f64 {}
impl StatePoint for usize {}

/// An unnormalized target density.
///
/// `log_density` may return `-inf` (zero density) but never `+inf` or NaN.
/// The optional pieces feed validation and experiment setup: an exact
/// normalization constant, an exact sampler used to initialize chains, and a
/// log-gradient for gradient-informed proposals.
pub trait Target: Send + Sync {
    type Point: StatePoint;

    fn reference(&self) -> ReferenceMeasure;

    fn log_density(&self, x: Self::Point) -> Real;

    fn has_log_gradient(&self) -> bool {
        false
    }

    fn log_gradient(&self, _x: Self::Point) -> Option<Real> {
        None
    }

    /// Integral of the unnormalized density over the reference measure, when
    /// known exactly.
    fn exact_normalization(&self) -> Option<Real> {
        None
    }

    fn sample_exact(&self, _rng: &mut Stream) -> Option<Self::Point> {
        None
    }
}

impl<T: Target + ?Sized> Target for &T {
    type Point = T::Point;
    fn reference(&self) -> ReferenceMeasure {
        (**self).reference()
    }
    fn log_density(&self, x: Self::Point) -> Real {
        (**self).log_density(x)
    }
    fn has_log_gradient(&self) -> bool {
        (**self).has_log_gradient()
    }
    fn log_gradient(&self, x: Self::Point) -> Option<Real> {
        (**self).log_gradient(x)
    }
    fn exact_normalization(&self) -> Option<Real> {
        (**self).exact_normalization()
    }
    fn sample_exact(&self, rng: &mut Stream) -> Option<Self::Point> {
        (**self).sample_exact(rng)
    }
}

pub(crate) const LN_SQRT_2PI: Real = 0.918_938_533_204_672_8;

/// Gaussian target, optionally scaled away from unit mass.
///
/// With `scale = c` the unnormalized density is `c * phi((x - mean) / sd) / sd`,
/// so the exact normalization constant is `c`.
#[derive(Clone, Debug)]
pub struct GaussianTarget {
    mean: Real,
    std_dev: Real,
    log_scale: Real,
    scale: Real,
}

impl GaussianTarget {
    pub fn standard() -> Self {
        Self::new(0.0, 1.0)
    }

    pub fn new(mean: Real, std_dev: Real) -> Self {
        Self::scaled(mean, std_dev, 1.0)
    }

    pub fn scaled(mean: Real, std_dev: Real, scale: Real) -> Self {
        assert!(std_dev > 0.0, "standard deviation must be positive");
        assert!(scale > 0.0, "scale must be positive");
        Self {
            mean,
            std_dev,
            log_scale: scale.ln(),
            scale,
        }
    }

    pub fn mean(&self) -> Real {
        self.mean
    }

    pub fn std_dev(&self) -> Real {
        self.std_dev
    }
}

impl Target for GaussianTarget {
    type Point = f64;

    fn reference(&self) -> ReferenceMeasure {
        ReferenceMeasure::Continuous1D
    }

    fn log_density(&self, x: f64) -> Real {
        let z = (x - self.mean) / self.std_dev;
        self.log_scale - 0.5 * z * z - LN_SQRT_2PI - self.std_dev.ln()
    }

    fn has_log_gradient(&self) -> bool {
        true
    }

    fn log_gradient(&self, x: f64) -> Option<Real> {
        Some(-(x - self.mean) / (self.std_dev * self.std_dev))
    }

    fn exact_normalization(&self) -> Option<Real> {
        Some(self.scale)
    }

    fn sample_exact(&self, rng: &mut Stream) -> Option<f64> {
        Some(self.mean + self.std_dev * rng.standard_normal())
    }
}

/// Exponential target with the given rate, supported on `[0, inf)`.
#[derive(Clone, Debug)]
pub struct ExponentialTarget {
    rate: Real,
}

impl ExponentialTarget {
    pub fn new(rate: Real) -> Self {
        assert!(rate > 0.0, "rate must be positive");
        Self { rate }
    }

    pub fn rate(&self) -> Real {
        self.rate
    }
}

impl Target for ExponentialTarget {
    type Point = f64;

    fn reference(&self) -> ReferenceMeasure {
        ReferenceMeasure::Continuous1D
    }

    fn log_density(&self, x: f64) -> Real {
        if x < 0.0 {
            Real::NEG_INFINITY
        } else {
            self.rate.ln() - self.rate * x
        }
    }

    fn has_log_gradient(&self) -> bool {
        true
    }

    fn log_gradient(&self, x: f64) -> Option<Real> {
        if x < 0.0 {
            None
        } else {
            Some(-self.rate)
        }
    }

    fn exact_normalization(&self) -> Option<Real> {
        Some(1.0)
    }

    fn sample_exact(&self, rng: &mut Stream) -> Option<f64> {
        Some(rng.exponential(self.rate))
    }
}

/// Finite discrete target given by nonnegative weights.
#[derive(Clone, Debug)]
pub struct DiscreteTarget {
    log_weights: Vec<Real>,
    cumulative: Vec<Real>,
    total: Real,
}

impl DiscreteTarget {
    /// Builds from raw weights. At least two states, all weights finite and
    /// nonnegative, at least one positive.
    pub fn from_weights(weights: &[Real]) -> Self {
        assert!(weights.len() >= 2, "a discrete space needs at least two states");
        assert!(
            weights.iter().all(|w| w.is_finite() && *w >= 0.0),
            "weights must be finite and nonnegative"
        );
        let total: Real = weights.iter().sum();
        assert!(total > 0.0, "at least one weight must be positive");
        let mut cumulative = Vec::with_capacity(weights.len());
        let mut run = 0.0;
        for &w in weights {
            run += w;
            cumulative.push(run);
        }
        let log_weights = weights
            .iter()
            .map(|&w| if w == 0.0 { Real::NEG_INFINITY } else { w.ln() })
            .collect();
        Self {
            log_weights,
            cumulative,
            total,
        }
    }

    pub fn state_count(&self) -> usize {
        self.log_weights.len()
    }
}

impl Target for DiscreteTarget {
    type Point = usize;

    fn reference(&self) -> ReferenceMeasure {
        ReferenceMeasure::DiscreteFinite {
            state_count: self.log_weights.len(),
        }
    }

    fn log_density(&self, x: usize) -> Real {
        self.log_weights[x]
    }

    fn exact_normalization(&self) -> Option<Real> {
        Some(self.total)
    }

    fn sample_exact(&self, rng: &mut Stream) -> Option<usize> {
        let u = rng.open01() * self.total;
        Some(
            self.cumulative
                .iter()
                .position(|&c| u <= c)
                .unwrap_or(self.cumulative.len() - 1),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{RngStreamSpec, StreamContext};

    #[test]
    fn discrete_normalization_is_weight_sum() {
        let t = DiscreteTarget::from_weights(&[0.5, 0.3, 0.2]);
        assert!((t.exact_normalization().unwrap() - 1.0).abs() < 1e-15);
        let sum: Real = (0..3).map(|s| t.log_density(s).exp()).sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_weight_encodes_minus_infinity() {
        let t = DiscreteTarget::from_weights(&[1.0, 0.0]);
        assert_eq!(t.log_density(1), Real::NEG_INFINITY);
        assert!(t.log_density(0).is_finite());
    }

    #[test]
    fn gaussian_scaled_normalization() {
        let t = GaussianTarget::scaled(0.0, 1.0, 2.0);
        assert_eq!(t.exact_normalization(), Some(2.0));
        // density is twice the standard normal density
        let phi0 = (-LN_SQRT_2PI as Real).exp();
        assert!((t.log_density(0.0).exp() - 2.0 * phi0).abs() < 1e-14);
    }

    #[test]
    fn exact_samplers_hit_support() {
        let mut rng = RngStreamSpec::new(3, 0).stream(StreamContext::Chain);
        let g = GaussianTarget::standard();
        let e = ExponentialTarget::new(1.0);
        let d = DiscreteTarget::from_weights(&[0.5, 0.3, 0.2]);
        for _ in 0..1000 {
            assert!(g.sample_exact(&mut rng).unwrap().is_finite());
            assert!(e.sample_exact(&mut rng).unwrap() >= 0.0);
            assert!(d.sample_exact(&mut rng).unwrap() < 3);
        }
    }
}
