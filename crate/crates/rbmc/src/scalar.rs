//! Scalar abstraction for the numeric kernels.
//!
//! The accumulation and summary-statistics code is generic over [`Scalar`]
//! so it works at `f32` or `f64`; the samplers themselves run at
//! [`crate::Real`].

use std::fmt::Debug;
use std::ops::AddAssign;

/// Floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    num_traits::Float + num_traits::FromPrimitive + AddAssign + Debug + Default + Send + Sync + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Neumaier-compensated running sum.
///
/// Keeps the low-order bits that a naive sum of many similarly-sized terms
/// would drop.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum<F: Scalar> {
    sum: F,
    compensation: F,
}

impl<F: Scalar> CompensatedSum<F> {
    pub fn new() -> Self {
        Self {
            sum: F::zero(),
            compensation: F::zero(),
        }
    }

    pub fn add(&mut self, value: F) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> F {
        self.sum + self.compensation
    }
}

impl<F: Scalar> std::iter::FromIterator<F> for CompensatedSum<F> {
    fn from_iter<I: IntoIterator<Item = F>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Ratio-of-sums accumulator: one weighted sum per integrand plus the shared
/// total weight. The final estimate of each integral is
/// `weighted_sum / total_weight`, which is exact on constant integrands by
/// construction.
#[derive(Clone, Debug)]
pub struct EstimatorAccumulator<F: Scalar> {
    weighted_sums: Vec<CompensatedSum<F>>,
    total_weight: CompensatedSum<F>,
}

impl<F: Scalar> EstimatorAccumulator<F> {
    pub fn new(integrand_count: usize) -> Self {
        Self {
            weighted_sums: vec![CompensatedSum::new(); integrand_count],
            total_weight: CompensatedSum::new(),
        }
    }

    /// Adds `weight * f_i` to each weighted sum and `weight` to the total.
    pub fn add(&mut self, weight: F, values: &[F]) {
        debug_assert_eq!(values.len(), self.weighted_sums.len());
        for (acc, &v) in self.weighted_sums.iter_mut().zip(values) {
            acc.add(weight * v);
        }
        self.total_weight.add(weight);
    }

    /// Adds a unit-weight term `(1 - alpha) * f_i(x) + alpha * f_i(y)`
    /// for each integrand, scaled by `weight`.
    pub fn add_mixture(&mut self, weight: F, alpha: F, values_x: &[F], values_y: &[F]) {
        debug_assert_eq!(values_x.len(), self.weighted_sums.len());
        debug_assert_eq!(values_y.len(), self.weighted_sums.len());
        let one = F::one();
        for ((acc, &fx), &fy) in self.weighted_sums.iter_mut().zip(values_x).zip(values_y) {
            acc.add(weight * ((one - alpha) * fx + alpha * fy));
        }
        self.total_weight.add(weight);
    }

    pub fn total_weight(&self) -> F {
        self.total_weight.total()
    }

    pub fn weighted_sums(&self) -> Vec<F> {
        self.weighted_sums.iter().map(|s| s.total()).collect()
    }

    /// Final ratio-of-sums estimates. The total weight must be positive.
    pub fn estimates(&self) -> Vec<F> {
        let w = self.total_weight();
        debug_assert!(w > F::zero(), "estimator finalized with nonpositive total weight");
        self.weighted_sums.iter().map(|s| s.total() / w).collect()
    }

    /// Folds another accumulator in; used when tours are aggregated.
    pub fn merge_scaled(&mut self, weight: F, sums: &[F]) {
        for (acc, &v) in self.weighted_sums.iter_mut().zip(sums) {
            acc.add(v);
        }
        self.total_weight.add(weight);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::<f64>::new();
        acc.add(1e16);
        for _ in 0..10 {
            acc.add(1.0);
        }
        acc.add(-1e16);
        assert_eq!(acc.total(), 10.0);
    }

    #[test]
    fn constant_integrand_is_exact() {
        let mut acc = EstimatorAccumulator::<f64>::new(1);
        let mut w = 0.1;
        for _ in 0..1000 {
            acc.add(w, &[3.7]);
            w = (w * 1.37).rem_euclid(5.0) + 1e-3;
        }
        let est = acc.estimates()[0];
        assert!((est - 3.7).abs() <= 1e-12 * 3.7);
    }

    #[test]
    fn works_at_f32() {
        let mut acc = EstimatorAccumulator::<f32>::new(2);
        acc.add(2.0, &[1.0, -1.0]);
        acc.add(2.0, &[3.0, 1.0]);
        assert_eq!(acc.estimates(), vec![2.0, 0.0]);
    }
}
