//! Displaced thermal states of the unit harmonic oscillator and the closed
//! forms for their Uhlmann transition probability and Bures distance.
//!
//! A displaced thermal state is parametrized by an inverse temperature
//! `beta` (in units with `hbar*omega = 1`) and phase-space displacements
//! `p` (momentum) and `q` (coordinate). The pure coherent state arises as
//! the `beta -> inf` limit and is represented explicitly instead of by a
//! huge `beta`, which keeps every branch well conditioned.
//!
//! All ratios of partition functions are evaluated as differences of
//! `ln sinh` in log domain, so inverse temperatures up to about `1e3`
//! (and far beyond) lose no precision to overflow or underflow.

use crate::error::{check_finite, Error, Result};
use crate::numeric;

/// Smallest accepted inverse temperature. Below this the thermal state is
/// numerically indistinguishable from the (non-normalizable) infinite
/// temperature limit and the closed forms become ill conditioned.
pub const MIN_BETA: f64 = 1e-8;

/// A displaced thermal state `D(p,q) rho(beta) D(p,q)^dagger`, or its pure
/// coherent-state limit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DisplacedThermalState {
    beta: f64,
    p: f64,
    q: f64,
    pure: bool,
}

impl DisplacedThermalState {
    /// A thermal state of inverse temperature `beta` displaced by `p` in
    /// momentum and `q` in coordinate.
    pub fn new(beta: f64, p: f64, q: f64) -> Result<Self> {
        if !beta.is_finite() || beta < MIN_BETA {
            return Err(Error::BetaOutOfRange { value: beta });
        }
        check_finite("p", p)?;
        check_finite("q", q)?;
        Ok(Self {
            beta,
            p,
            q,
            pure: false,
        })
    }

    /// The pure coherent state at displacement `(p, q)`, i.e. the
    /// `beta -> inf` limit of [`DisplacedThermalState::new`].
    pub fn pure(p: f64, q: f64) -> Result<Self> {
        check_finite("p", p)?;
        check_finite("q", q)?;
        Ok(Self {
            beta: f64::INFINITY,
            p,
            q,
            pure: true,
        })
    }

    pub(crate) fn from_raw(beta: f64, p: f64, q: f64, pure: bool) -> Self {
        Self { beta, p, q, pure }
    }

    /// Inverse temperature; `+inf` for the pure coherent limit.
    #[inline]
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Momentum displacement.
    #[inline]
    pub fn p(&self) -> f64 {
        self.p
    }

    /// Coordinate displacement.
    #[inline]
    pub fn q(&self) -> f64 {
        self.q
    }

    /// Whether this is the pure coherent-state limit.
    #[inline]
    pub fn is_pure(&self) -> bool {
        self.pure
    }
}

/// The pair of hyperbolic weight functions
///
/// ```text
/// f(g1, g2) = sinh(g1) sinh(g2) / sinh(g1 + g2)
/// g(g1, g2) = sinh(g1) cosh(g2) / sinh(g1 + g2)
/// ```
///
/// `f` is symmetric; `g` satisfies `g(a, b) + g(b, a) = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FGPair {
    /// Symmetric component `f(g1, g2)`.
    pub f: f64,
    /// Asymmetric component `g(g1, g2)`.
    pub g: f64,
}

/// Partition function `Z(beta) = 1 / (2 sinh(beta/2))` of the unit
/// oscillator.
///
/// Evaluated as `exp(-ln 2 - ln sinh(beta/2))`; for very large `beta` the
/// result underflows gracefully to the true (subnormal or zero) limit
/// instead of tripping over an intermediate overflow of `sinh`.
pub fn partition_function(beta: f64) -> Result<f64> {
    if !beta.is_finite() || beta < MIN_BETA {
        return Err(Error::BetaOutOfRange { value: beta });
    }
    Ok(numeric::exp(
        -core::f64::consts::LN_2 - numeric::log_sinh(0.5 * beta),
    ))
}

/// The weight pair `(f, g)` at `(gamma1, gamma2)`; both arguments must be
/// strictly positive.
///
/// Computed in log domain, so arguments of order `1e3` are as exact as
/// small ones.
pub fn fg_pair(gamma1: f64, gamma2: f64) -> Result<FGPair> {
    check_finite("gamma1", gamma1)?;
    check_finite("gamma2", gamma2)?;
    if gamma1 <= 0.0 {
        return Err(Error::NonPositive {
            name: "gamma1",
            value: gamma1,
        });
    }
    if gamma2 <= 0.0 {
        return Err(Error::NonPositive {
            name: "gamma2",
            value: gamma2,
        });
    }
    let ls1 = numeric::log_sinh(gamma1);
    let lc2 = numeric::log_cosh(gamma2);
    let ls12 = numeric::log_sinh(gamma1 + gamma2);
    let f = numeric::exp(ls1 + numeric::log_sinh(gamma2) - ls12);
    let g = numeric::exp(ls1 + lc2 - ls12);
    Ok(FGPair { f, g })
}

/// Natural logarithm of the transition probability between two displaced
/// thermal states.
///
/// Exposed separately because quantities like the Bures distance between
/// nearly identical states need `ln P` at full relative precision, which
/// `exp` would destroy.
pub fn log_transition_probability(
    s1: &DisplacedThermalState,
    s2: &DisplacedThermalState,
) -> Result<f64> {
    if s1 == s2 {
        return Ok(0.0);
    }
    let dp = s2.p - s1.p;
    let dq = s2.q - s1.q;
    let d2 = dp * dp + dq * dq;
    let log_p = match (s1.pure, s2.pure) {
        (true, true) => -0.5 * d2,
        (true, false) | (false, true) => {
            let beta = if s1.pure { s2.beta } else { s1.beta };
            // 1 - e^{-beta}, exact down to beta = MIN_BETA
            let w = -numeric::exp_m1(-beta);
            numeric::ln(w) - 0.5 * w * d2
        }
        (false, false) => {
            let g1 = 0.5 * s1.beta;
            let g2 = 0.5 * s2.beta;
            let ls1 = numeric::log_sinh(g1);
            let ls2 = numeric::log_sinh(g2);
            // prefactor Z(mean)^2 / (Z(b1) Z(b2)) in log form; the sum
            // ls1 + ls2 is symmetric in the two states by construction
            let log_pref = ls1 + ls2 - 2.0 * numeric::log_sinh(0.5 * (g1 + g2));
            // Gaussian coefficient Z(b1+b2) / (2 Z(b1) Z(b2))
            //   = sinh(b1/2) sinh(b2/2) / sinh((b1+b2)/2)
            let coeff = numeric::exp(ls1 + ls2 - numeric::log_sinh(g1 + g2));
            log_pref - coeff * d2
        }
    };
    // the exact value is <= 0; rounding may leave a stray positive ulp
    Ok(log_p.min(0.0))
}

/// Uhlmann transition probability (squared fidelity)
/// `P(rho1, rho2) = (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2` for two
/// displaced thermal states, in closed form.
///
/// The result depends on the displacements only through the differences
/// `p2 - p1` and `q2 - q1`, it is symmetric under swapping the states, and
/// lies in `(0, 1]` with `P = 1` exactly when the states are equal.
pub fn transition_probability(
    s1: &DisplacedThermalState,
    s2: &DisplacedThermalState,
) -> Result<f64> {
    Ok(numeric::exp(log_transition_probability(s1, s2)?))
}

/// Bures distance `D_B = sqrt(2 (1 - sqrt(P)))`, in `[0, sqrt(2))`.
pub fn bures_distance(
    s1: &DisplacedThermalState,
    s2: &DisplacedThermalState,
) -> Result<f64> {
    let log_p = log_transition_probability(s1, s2)?;
    // 2 (1 - sqrt P) = -2 expm1(ln P / 2), full precision for P near 1
    let d2 = -2.0 * numeric::exp_m1(0.5 * log_p);
    Ok(numeric::sqrt(d2.max(0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn state(beta: f64, p: f64, q: f64) -> DisplacedThermalState {
        DisplacedThermalState::new(beta, p, q).unwrap()
    }

    const LN_2: f64 = core::f64::consts::LN_2;

    #[test]
    fn partition_function_reference_points() {
        // sinh(ln 2) = 3/4, so Z(2 ln 2) = 2/3
        assert_relative_eq!(
            partition_function(2.0 * LN_2).unwrap(),
            2.0 / 3.0,
            max_relative = 1e-15
        );
        // definition inverted exactly: sinh(x) = 1/2 at x = arcsinh(1/2)
        let beta = 2.0 * 0.5f64.asinh();
        assert_relative_eq!(partition_function(beta).unwrap(), 1.0, max_relative = 1e-15);
        // large beta stays finite and positive: Z(100) ~ e^{-50}
        let z = partition_function(100.0).unwrap();
        assert!(z > 0.0);
        assert_relative_eq!(z, (-50.0f64).exp(), max_relative = 1e-13);
    }

    #[test]
    fn partition_function_domain() {
        assert!(matches!(
            partition_function(0.0),
            Err(Error::BetaOutOfRange { .. })
        ));
        assert!(matches!(
            partition_function(-1.0),
            Err(Error::BetaOutOfRange { .. })
        ));
        assert!(matches!(
            partition_function(f64::NAN),
            Err(Error::BetaOutOfRange { .. })
        ));
        assert!(matches!(
            partition_function(f64::INFINITY),
            Err(Error::BetaOutOfRange { .. })
        ));
        assert!(partition_function(MIN_BETA).is_ok());
        assert!(partition_function(0.9e-8).is_err());
    }

    #[test]
    fn fg_pair_equal_arguments() {
        // f(g, g) = tanh(g)/2; tanh(ln 2) = 3/5
        let pair = fg_pair(LN_2, LN_2).unwrap();
        assert_relative_eq!(pair.f, 0.3, max_relative = 1e-15);
        assert_relative_eq!(pair.g, 0.5, max_relative = 1e-15);
    }

    #[test]
    fn fg_pair_large_arguments_no_overflow() {
        let pair = fg_pair(50.0, 50.0).unwrap();
        assert_relative_eq!(pair.f, 0.5, max_relative = 1e-12);
        // far beyond the naive sinh overflow point
        let pair = fg_pair(800.0, 900.0).unwrap();
        assert_relative_eq!(pair.f, 0.5, max_relative = 1e-12);
        assert!(pair.g.is_finite());
    }

    #[test]
    fn fg_pair_complement_identity() {
        for &(a, b) in &[(0.3, 1.7), (2.0, 0.01), (5.0, 5.0), (40.0, 0.2)] {
            let ab = fg_pair(a, b).unwrap();
            let ba = fg_pair(b, a).unwrap();
            assert_relative_eq!(ab.g + ba.g, 1.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn fg_pair_domain() {
        assert!(fg_pair(0.0, 1.0).is_err());
        assert!(fg_pair(1.0, -2.0).is_err());
        assert!(fg_pair(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn transition_probability_identity() {
        let s = state(1.3, 0.4, -0.7);
        assert_eq!(transition_probability(&s, &s).unwrap(), 1.0);
        let c = DisplacedThermalState::pure(2.0, -1.0).unwrap();
        assert_eq!(transition_probability(&c, &c).unwrap(), 1.0);
    }

    #[test]
    fn transition_probability_equal_beta_reduction() {
        // P = exp(-(dp^2+dq^2) tanh(beta/2) / 2); tanh(ln 2 / 2) = 1/3,
        // dp = dq = sqrt(3) gives P = e^{-1}
        let s1 = state(LN_2, 0.0, 0.0);
        let s2 = state(LN_2, 3f64.sqrt(), 3f64.sqrt());
        assert_relative_eq!(
            transition_probability(&s1, &s2).unwrap(),
            (-1.0f64).exp(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn transition_probability_pure_limits() {
        // thermal(ln 2) against the vacuum coherent state: P = 1 - e^{-ln 2} = 1/2
        let s1 = state(LN_2, 0.0, 0.0);
        let vac = DisplacedThermalState::pure(0.0, 0.0).unwrap();
        assert_relative_eq!(
            transition_probability(&s1, &vac).unwrap(),
            0.5,
            max_relative = 1e-15
        );
        // both pure at displacement difference (2, 0): P = e^{-2}
        let c1 = DisplacedThermalState::pure(0.0, 0.0).unwrap();
        let c2 = DisplacedThermalState::pure(2.0, 0.0).unwrap();
        assert_relative_eq!(
            transition_probability(&c1, &c2).unwrap(),
            (-2.0f64).exp(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn pure_branch_is_the_large_beta_limit() {
        // beta2 = 50 is numerically indistinguishable from the pure limit
        let s1 = state(0.8, 0.3, -0.2);
        let nearly_pure = state(50.0, 1.0, 1.5);
        let pure = DisplacedThermalState::pure(1.0, 1.5).unwrap();
        let a = transition_probability(&s1, &nearly_pure).unwrap();
        let b = transition_probability(&s1, &pure).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-10);
    }

    #[test]
    fn transition_probability_extreme_beta() {
        // log-domain evaluation: beta of order 1e3 must not degrade
        let s1 = state(1000.0, 0.0, 0.0);
        let s2 = state(1000.0, 1.0, 0.0);
        // equal-beta reduction with tanh(500) = 1: P = e^{-1/2}
        assert_relative_eq!(
            transition_probability(&s1, &s2).unwrap(),
            (-0.5f64).exp(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn bures_distance_reference_points() {
        let s = state(0.9, 0.1, 0.2);
        assert_eq!(bures_distance(&s, &s).unwrap(), 0.0);
        // P = e^{-1} case: D = sqrt(2 (1 - e^{-1/2})) = 0.8870956434199940
        let s1 = state(LN_2, 0.0, 0.0);
        let s2 = state(LN_2, 3f64.sqrt(), 3f64.sqrt());
        assert_relative_eq!(
            bures_distance(&s1, &s2).unwrap(),
            0.887_095_643_419_994_0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn bures_distance_saturates_below_sqrt2() {
        let s1 = state(1.0, 0.0, 0.0);
        let mut last = 0.0;
        for &dp in &[1.0, 3.0, 10.0] {
            let d = bures_distance(&s1, &state(1.0, dp, 0.0)).unwrap();
            assert!(d > last);
            assert!(d < core::f64::consts::SQRT_2);
            last = d;
        }
        // P underflows far out; the distance saturates at sqrt(2) exactly
        let far = bures_distance(&s1, &state(1.0, 100.0, 0.0)).unwrap();
        assert!(far >= last);
        assert!(far <= core::f64::consts::SQRT_2);
        assert_relative_eq!(far, core::f64::consts::SQRT_2, max_relative = 1e-15);
    }

    #[test]
    fn bures_distance_near_identity_keeps_precision() {
        // states differing by 1e-8 in displacement: D ~ 1e-8 sqrt(g_pp),
        // which a naive 1 - sqrt(exp(ln P)) would round to zero
        let s1 = state(1.0, 0.0, 0.0);
        let s2 = state(1.0, 1e-8, 0.0);
        let d = bures_distance(&s1, &s2).unwrap();
        let g_pp = 0.5 * (0.5f64).tanh();
        assert_relative_eq!(d, 1e-8 * g_pp.sqrt(), max_relative = 1e-6);
    }

    #[test]
    fn state_validation() {
        assert!(DisplacedThermalState::new(1e-9, 0.0, 0.0).is_err());
        assert!(DisplacedThermalState::new(f64::INFINITY, 0.0, 0.0).is_err());
        assert!(DisplacedThermalState::new(1.0, f64::NAN, 0.0).is_err());
        assert!(DisplacedThermalState::pure(0.0, f64::INFINITY).is_err());
        let s = DisplacedThermalState::pure(1.0, 2.0).unwrap();
        assert!(s.is_pure());
        assert_eq!(s.beta(), f64::INFINITY);
    }
}
