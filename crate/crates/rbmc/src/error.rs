use thiserror::Error;

/// Errors surfaced by samplers, oracles and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A single tour ran past the configured proposal cap without an
    /// acceptance, which signals a degenerate target/proposal pair.
    #[error("tour exceeded {limit} proposals without an acceptance")]
    TourLengthExceeded { limit: u64 },

    /// A single Jump Restore tour ran past the configured event cap.
    #[error("tour exceeded {limit} events without terminating")]
    TourEventsExceeded { limit: u64 },

    /// An exhaustive oracle was requested on a continuous reference measure.
    #[error("operation requires a finite discrete reference measure")]
    ContinuousReference,

    /// The killing-rate variant with an explicit normalization constant was
    /// selected but the target does not provide one.
    #[error("killing rate with explicit normalization requires the target's normalization constant")]
    MissingNormalization,

    /// A gradient-based proposal was paired with a target lacking a
    /// log-gradient.
    #[error("target does not provide a log-gradient")]
    MissingGradient,

    /// Chain initialization from the target was requested but the target has
    /// no exact sampler.
    #[error("target does not provide an exact sampler")]
    MissingExactSampler,

    /// Regeneration draws kept landing outside the target support.
    #[error("regeneration failed to land in the target support after {retries} attempts")]
    RegenerationFailed { retries: u32 },

    /// The rejection probability has second moment one at some state, so no
    /// proposal from it is ever accepted.
    #[error("rejection second moment is 1 at state {state}: no proposal is ever accepted")]
    DegenerateRejection { state: usize },

    /// The completion tail failed to underflow within the term cap.
    #[error("completion tail did not converge within {cap} terms (running product {product:e})")]
    TailNotConverged { cap: u64, product: f64 },

    /// A run specification failed validation.
    #[error("invalid run specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
