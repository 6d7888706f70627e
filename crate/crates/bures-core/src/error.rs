//! Error type shared by every module of the crate.

use core::fmt;

/// Errors reported by the closed-form state, geometry, and dynamics
/// operations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A parameter that must be a finite real number was NaN or infinite.
    NonFinite {
        /// Name of the offending parameter.
        name: &'static str,
        /// The rejected value.
        value: f64,
    },
    /// An inverse temperature outside the supported range
    /// `[MIN_BETA, +inf)`.
    BetaOutOfRange {
        /// The rejected value.
        value: f64,
    },
    /// A quantity that must be strictly positive was zero or negative.
    NonPositive {
        /// Name of the offending parameter.
        name: &'static str,
        /// The rejected value.
        value: f64,
    },
    /// Bath rates must satisfy `gamma_down > gamma_up >= 0`.
    BathRates {
        /// Downward (cooling) rate.
        gamma_down: f64,
        /// Upward (heating) rate.
        gamma_up: f64,
    },
    /// A time argument was negative.
    NegativeTime {
        /// The rejected value.
        value: f64,
    },
    /// An integration interval had its endpoints out of order.
    TimeOrder {
        /// Lower endpoint.
        t0: f64,
        /// Upper endpoint.
        t1: f64,
    },
    /// A finite-difference step incompatible with the evaluation point
    /// (the stencil would leave the domain).
    StepTooLarge {
        /// Evaluation point.
        beta: f64,
        /// Requested base step.
        h: f64,
    },
    /// Adaptive quadrature exhausted its evaluation budget before reaching
    /// the requested tolerance. The partially refined value is included.
    QuadratureBudget {
        /// Best estimate of the integral at the time the budget ran out.
        best_estimate: f64,
        /// Number of integrand evaluations spent.
        evaluations: u32,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite { name, value } => {
                write!(f, "parameter `{name}` must be finite, got {value}")
            }
            Error::BetaOutOfRange { value } => write!(
                f,
                "inverse temperature must be at least {:e}, got {value}",
                crate::states::MIN_BETA
            ),
            Error::NonPositive { name, value } => {
                write!(f, "parameter `{name}` must be positive, got {value}")
            }
            Error::BathRates {
                gamma_down,
                gamma_up,
            } => write!(
                f,
                "bath rates must satisfy gamma_down > gamma_up >= 0, \
                 got gamma_down = {gamma_down}, gamma_up = {gamma_up}"
            ),
            Error::NegativeTime { value } => {
                write!(f, "time must be non-negative, got {value}")
            }
            Error::TimeOrder { t0, t1 } => {
                write!(f, "interval endpoints out of order: t0 = {t0}, t1 = {t1}")
            }
            Error::StepTooLarge { beta, h } => write!(
                f,
                "finite-difference step h = {h} too large for beta = {beta} \
                 (need beta > 2h after scaling)"
            ),
            Error::QuadratureBudget {
                best_estimate,
                evaluations,
            } => write!(
                f,
                "quadrature did not converge within {evaluations} evaluations \
                 (best estimate {best_estimate})"
            ),
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn check_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { name, value })
    }
}
