//! # rbmc
//!
//! Monte Carlo integral estimation with interchangeable variance-reduced
//! estimators, for two samplers:
//!
//! * the discrete-time **Metropolis–Hastings** chain ([`mh`]), and
//! * the continuous-time **Jump Restore** process ([`restore`]), a
//!   regenerative pure-jump sampler whose local dynamics are themselves a
//!   Metropolis–Hastings chain.
//!
//! Both samplers support three estimators of `∫ f dμ` selected by
//! [`mh::EstimatorMode`]:
//!
//! * `Standard` — the plain ergodic average,
//! * `WasteRecycling` — rejected proposals contribute through the one-step
//!   conditional expectation,
//! * `Vanilla` — each tour's integer occupation count is replaced by a
//!   weight estimating the reciprocal expected acceptance probability,
//!   built solely from proposals the run draws anyway.
//!
//! The [`bias`] module quantifies the truncation bias of the vanilla weight
//! against exact per-state oracles available on finite discrete spaces, and
//! [`experiments`] drives seeded, stream-matched comparisons that emit
//! machine-readable variance tables and fan charts.
//!
//! All randomness flows through explicit [`rng::RngStreamSpec`] values, so
//! any run is reproducible bit-for-bit at any degree of parallelism.

pub mod accept;
pub mod bias;
pub mod error;
pub mod experiments;
pub mod mh;
pub mod proposal;
pub mod quad;
pub mod restore;
pub mod rng;
pub mod scalar;
pub mod stats;
pub mod target;

pub use accept::{acceptance_probability, expected_acceptance_exact, rejection_second_moment_exact};
pub use error::{Error, Result};
pub use mh::EstimatorMode;
pub use rng::RngStreamSpec;
pub use scalar::Scalar;

/// Concrete scalar used throughout the samplers and experiment harness.
///
/// The numeric kernels in [`scalar`] and [`stats`] are generic over
/// [`Scalar`]; everything distribution-facing is pinned to this alias.
pub type Real = f64;
