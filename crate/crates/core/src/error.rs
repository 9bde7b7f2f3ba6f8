use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `|A A*|` at or below the invertibility threshold (light-like element).
    #[error("null quaternion: |A A*| = {norm:e} is not invertible")]
    NullQuaternion { norm: f64 },

    #[error("degenerate denominator in {context}: |{value}| <= {threshold:e}")]
    DegenerateDenominator {
        context: &'static str,
        value: String,
        threshold: f64,
    },

    #[error("superluminal input: |{name}| = {speed} is not below c = {c}")]
    SuperluminalInput {
        name: &'static str,
        speed: f64,
        c: f64,
    },

    /// The rotational limit needs an imaginary Lorentz factor.
    #[error("rotational limit needs |v| > c, got |v| = {speed}, c = {c}")]
    SubluminalLimit { speed: f64, c: f64 },

    #[error("mismatched speed constants: rotor has c = {rotor}, event has c = {event}")]
    MismatchedC { rotor: f64, event: f64 },

    #[error("collinear input: x and v must be nonzero and not parallel")]
    CollinearInput,

    #[error("speed constant must be positive and finite, got c = {0}")]
    NonpositiveC(f64),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

impl Error {
    pub(crate) fn degenerate(
        context: &'static str,
        value: impl std::fmt::Display,
        threshold: f64,
    ) -> Self {
        Error::DegenerateDenominator {
            context,
            value: value.to_string(),
            threshold,
        }
    }
}
