//! Dissipative evolution of a displaced thermal state under the damped
//! quantum oscillator, and the induced statistical-distance kinematics.
//!
//! The bath couples through downward and upward rates `gamma_down >
//! gamma_up >= 0`. The displacements rotate at the oscillator frequency
//! and shrink at the net rate `k = gamma_down - gamma_up`, while
//! `coth(beta_t / 2)` relaxes exponentially (rate `2k`) toward the bath
//! value `coth(beta_inf / 2) = (gamma_down + gamma_up) / k`, with
//! `beta_inf = ln(gamma_down / gamma_up)`:
//!
//! ```text
//! q_t = ( q0 cos(w t) + p0 sin(w t)) e^{-k t}
//! p_t = (-q0 sin(w t) + p0 cos(w t)) e^{-k t}
//! coth(beta_t/2) = e^{-2kt} coth(beta_0/2) + (1 - e^{-2kt}) coth(beta_inf/2)
//! ```
//!
//! The speed along the trajectory in the Bures metric is
//!
//! ```text
//! (ds/dt)^2 = (1/2) tanh(beta_t/2) (k^2 + w^2) (q_t^2 + p_t^2)
//!           + k^2 sinh^2(beta_t/2) (coth(beta_t/2) - coth(beta_inf/2))^2
//! ```
//!
//! which diverges at `t = 0` when the initial state is pure and the bath
//! temperature is finite.

use crate::error::{check_finite, Error, Result};
use crate::numeric;
use crate::quad;
use crate::states::{DisplacedThermalState, MIN_BETA};

/// Parameters of the damped-oscillator bath.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DampedOscillatorParams {
    omega: f64,
    gamma_down: f64,
    gamma_up: f64,
    k: f64,
    /// coth(beta_inf / 2) - 1 = 2 gamma_up / k, kept in offset form so
    /// near-pure baths do not lose the offset to the ulp of 1.
    coth_inf_m1: f64,
}

impl DampedOscillatorParams {
    /// Bath with oscillator frequency `omega > 0` and rates
    /// `gamma_down > gamma_up >= 0`.
    pub fn new(omega: f64, gamma_down: f64, gamma_up: f64) -> Result<Self> {
        check_finite("omega", omega)?;
        check_finite("gamma_down", gamma_down)?;
        check_finite("gamma_up", gamma_up)?;
        if omega <= 0.0 {
            return Err(Error::NonPositive {
                name: "omega",
                value: omega,
            });
        }
        if !(gamma_down > gamma_up && gamma_up >= 0.0) {
            return Err(Error::BathRates {
                gamma_down,
                gamma_up,
            });
        }
        let k = gamma_down - gamma_up;
        // coth(beta_inf / 2) = (gd + gu) / (gd - gu), i.e. an offset of
        // 2 gu / k above 1; exactly 0 for a zero-temperature bath
        let coth_inf_m1 = 2.0 * gamma_up / k;
        Ok(Self {
            omega,
            gamma_down,
            gamma_up,
            k,
            coth_inf_m1,
        })
    }

    /// Bath specified by the net damping rate `k > 0` and the asymptotic
    /// inverse temperature `beta_inf` (use `f64::INFINITY` for a
    /// zero-temperature bath).
    pub fn from_relaxation(omega: f64, k: f64, beta_inf: f64) -> Result<Self> {
        check_finite("k", k)?;
        if k <= 0.0 {
            return Err(Error::NonPositive { name: "k", value: k });
        }
        let coth_inf_m1 = if beta_inf == f64::INFINITY {
            0.0
        } else {
            if !beta_inf.is_finite() || beta_inf < MIN_BETA {
                return Err(Error::BetaOutOfRange { value: beta_inf });
            }
            // coth(x) - 1 = e^{-x} / sinh(x), exact even for large beta_inf
            let x = 0.5 * beta_inf;
            numeric::exp(-x) / numeric::sinh(x)
        };
        let gamma_up = 0.5 * k * coth_inf_m1;
        let gamma_down = gamma_up + k;
        Self::new(omega, gamma_down, gamma_up)
    }

    /// Oscillator angular frequency.
    #[inline]
    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Downward (cooling) rate.
    #[inline]
    pub fn gamma_down(&self) -> f64 {
        self.gamma_down
    }

    /// Upward (heating) rate.
    #[inline]
    pub fn gamma_up(&self) -> f64 {
        self.gamma_up
    }

    /// Net damping rate `gamma_down - gamma_up`.
    #[inline]
    pub fn k(&self) -> f64 {
        self.k
    }

    /// Asymptotic inverse temperature `ln(gamma_down / gamma_up)`;
    /// `+inf` for a zero-temperature bath.
    pub fn beta_inf(&self) -> f64 {
        if self.gamma_up == 0.0 {
            f64::INFINITY
        } else {
            numeric::ln(self.gamma_down / self.gamma_up)
        }
    }

    /// `coth(beta_inf / 2)`, the relaxation target of `coth(beta_t / 2)`.
    #[inline]
    pub fn coth_half_beta_inf(&self) -> f64 {
        1.0 + self.coth_inf_m1
    }

    /// The stationary state of the bath: thermal at `beta_inf` with zero
    /// displacement (the vacuum for a zero-temperature bath).
    pub fn stationary_state(&self) -> DisplacedThermalState {
        if self.gamma_up == 0.0 {
            DisplacedThermalState::from_raw(f64::INFINITY, 0.0, 0.0, true)
        } else {
            let beta = numeric::ln_1p(2.0 / self.coth_inf_m1);
            DisplacedThermalState::from_raw(beta.max(MIN_BETA), 0.0, 0.0, false)
        }
    }
}

/// A point along a dissipative trajectory.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectorySample {
    /// Sample time.
    pub t: f64,
    /// Momentum displacement at `t`.
    pub p: f64,
    /// Coordinate displacement at `t`.
    pub q: f64,
    /// Inverse temperature at `t` (`+inf` while the state is pure).
    pub beta: f64,
    /// Statistical-distance speed `ds/dt`; `+inf` for a pure state in a
    /// finite-temperature bath.
    pub speed: f64,
    /// The thermal part of `(ds/dt)^2` alone.
    pub thermal_speed: f64,
}

/// Closed-form state of the damped oscillator at time `t >= 0`.
pub fn evolve(
    initial: &DisplacedThermalState,
    params: &DampedOscillatorParams,
    t: f64,
) -> Result<DisplacedThermalState> {
    check_finite("t", t)?;
    if t < 0.0 {
        return Err(Error::NegativeTime { value: t });
    }
    Ok(evolve_unchecked(initial, params, t))
}

fn evolve_unchecked(
    initial: &DisplacedThermalState,
    params: &DampedOscillatorParams,
    t: f64,
) -> DisplacedThermalState {
    if t == 0.0 {
        return *initial;
    }
    let (s, c) = {
        let wt = params.omega * t;
        (numeric::sin(wt), numeric::cos(wt))
    };
    let decay = numeric::exp(-params.k * t);
    let q_t = (initial.q() * c + initial.p() * s) * decay;
    let p_t = (-initial.q() * s + initial.p() * c) * decay;

    // Interpolate coth(beta_t/2) in offset-from-1 form: adding the offset
    // onto 1 and subtracting it back would quantize near-pure states to
    // the ulp of 1 and poison everything computed from beta_t.
    let cm1_0 = if initial.is_pure() {
        0.0
    } else {
        // coth(x) - 1 = e^{-x} / sinh(x)
        let x = 0.5 * initial.beta();
        numeric::exp(-x) / numeric::sinh(x)
    };
    // w = 1 - e^{-2kt} via expm1 keeps full precision at small t, where
    // the offset change is proportional to w
    let w = -numeric::exp_m1(-2.0 * params.k * t);
    let mut cm1_t = cm1_0 + w * (params.coth_inf_m1 - cm1_0);
    // interpolation is monotone; keep rounding from pushing it outside
    let (lo, hi) = if cm1_0 <= params.coth_inf_m1 {
        (cm1_0, params.coth_inf_m1)
    } else {
        (params.coth_inf_m1, cm1_0)
    };
    cm1_t = cm1_t.clamp(lo, hi);
    if cm1_t <= 1e-12 {
        // roundoff (or a pure state in a zero-temperature bath) lands at
        // the pure boundary coth = 1
        DisplacedThermalState::from_raw(f64::INFINITY, p_t, q_t, true)
    } else {
        let beta_t = numeric::ln_1p(2.0 / cm1_t); // = 2 arccoth(1 + cm1)
        DisplacedThermalState::from_raw(beta_t.max(MIN_BETA), p_t, q_t, false)
    }
}

/// `sinh(beta/2) * (coth(beta/2) - coth_inf)`, evaluated as
/// `((2 + c) e^{-beta/2} - c e^{beta/2}) / 2` with `c = coth_inf - 1` so
/// the zero-temperature-bath case decays like `e^{-beta/2}` instead of
/// cancelling catastrophically.
fn thermal_amplitude(beta: f64, coth_inf_m1: f64) -> f64 {
    let half = 0.5 * beta;
    0.5 * ((2.0 + coth_inf_m1) * numeric::exp(-half) - coth_inf_m1 * numeric::exp(half))
}

fn squared_speed_parts(
    state: &DisplacedThermalState,
    params: &DampedOscillatorParams,
) -> (f64, f64) {
    let r2 = state.p() * state.p() + state.q() * state.q();
    let rates = params.k * params.k + params.omega * params.omega;
    if state.is_pure() {
        let displacement = 0.5 * rates * r2; // tanh -> 1
        let thermal = if params.coth_inf_m1 == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        (displacement, thermal)
    } else {
        let displacement = 0.5 * numeric::tanh(0.5 * state.beta()) * rates * r2;
        let amp = params.k * thermal_amplitude(state.beta(), params.coth_inf_m1);
        (displacement, amp * amp)
    }
}

/// Statistical-distance speed `ds/dt` at the given state.
///
/// Returns `+inf` for a pure state coupled to a finite-temperature bath,
/// reflecting the genuine divergence of the Bures speed there.
pub fn speed(state: &DisplacedThermalState, params: &DampedOscillatorParams) -> Result<f64> {
    let (displacement, thermal) = squared_speed_parts(state, params);
    Ok(numeric::sqrt(displacement + thermal))
}

/// The thermal term of `(ds/dt)^2` alone:
/// `k^2 sinh^2(beta/2) (coth(beta/2) - coth(beta_inf/2))^2`.
///
/// Vanishes at the bath temperature and as `t -> inf` along any
/// trajectory; `+inf` for a pure state in a finite-temperature bath.
pub fn thermal_speed_component(
    state: &DisplacedThermalState,
    params: &DampedOscillatorParams,
) -> Result<f64> {
    let (_, thermal) = squared_speed_parts(state, params);
    Ok(thermal)
}

/// Maximum number of integrand evaluations the path-length quadrature may
/// spend before giving up.
pub const PATH_LENGTH_BUDGET: u32 = 1_000_000;

/// Bures length of the trajectory between times `t0` and `t1`, i.e. the
/// integral of [`speed`] along [`evolve`], by adaptive Simpson quadrature
/// to absolute tolerance `tol`.
///
/// For a pure initial state in a finite-temperature bath the speed
/// diverges like `sqrt(a/t)` at `t = 0` with `a = k (coth_inf - 1) / 4`.
/// The integral is finite: quadrature starts at a small offset chosen so
/// the head `2 sqrt(a eps)` it replaces stays below `tol / 2`, and that
/// closed-form head is accounted for in the result. (The offset is
/// floored where `coth(beta_t/2)` becomes numerically indistinguishable
/// from a pure state; the head model is exact there to far better than
/// any representable tolerance.)
///
/// Fails with [`Error::QuadratureBudget`] (carrying the best estimate)
/// if [`PATH_LENGTH_BUDGET`] evaluations do not reach the tolerance.
pub fn bures_path_length(
    initial: &DisplacedThermalState,
    params: &DampedOscillatorParams,
    t0: f64,
    t1: f64,
    tol: f64,
) -> Result<f64> {
    check_finite("t0", t0)?;
    check_finite("t1", t1)?;
    check_finite("tol", tol)?;
    if t0 < 0.0 {
        return Err(Error::NegativeTime { value: t0 });
    }
    if t1 < t0 {
        return Err(Error::TimeOrder { t0, t1 });
    }
    if tol <= 0.0 {
        return Err(Error::NonPositive {
            name: "tol",
            value: tol,
        });
    }
    if t0 == t1 {
        return Ok(0.0);
    }

    let mut start = t0;
    let mut head = 0.0;
    let singular_start = t0 == 0.0 && initial.is_pure() && params.coth_inf > 1.0;
    if singular_start {
        let a = 0.25 * params.k * (params.coth_inf - 1.0);
        // keep the modelled head below tol / 2 ...
        let eps_tol = (0.25 * tol) * (0.25 * tol) / a;
        // ... but stay above the region where coth(beta_t/2) - 1 falls
        // under the pure-state clamp (2 k t (coth_inf - 1) <= 1e-12)
        let eps_floor = 1e-11 / (2.0 * params.k * (params.coth_inf - 1.0));
        let eps = eps_tol.max(eps_floor).min(0.5 * (t1 - t0));
        start = eps;
        head = 2.0 * numeric::sqrt(a * start);
    }

    let integrand = |t: f64| {
        let state = evolve_unchecked(initial, params, t);
        let (displacement, thermal) = squared_speed_parts(&state, params);
        numeric::sqrt(displacement + thermal)
    };
    let quad_tol = if singular_start { 0.5 * tol } else { tol };
    let out = quad::adaptive_simpson(integrand, start, t1, quad_tol, PATH_LENGTH_BUDGET);
    if out.converged {
        Ok(head + out.value)
    } else {
        Err(Error::QuadratureBudget {
            best_estimate: head + out.value,
            evaluations: out.evaluations,
        })
    }
}

/// Samples of the trajectory from `t = 0` to `t_max` at `steps + 1`
/// equally spaced times (including both endpoints).
pub fn trajectory(
    initial: &DisplacedThermalState,
    params: &DampedOscillatorParams,
    t_max: f64,
    steps: usize,
) -> Result<impl Iterator<Item = TrajectorySample>> {
    check_finite("t_max", t_max)?;
    if t_max < 0.0 {
        return Err(Error::NegativeTime { value: t_max });
    }
    if steps == 0 {
        return Err(Error::NonPositive {
            name: "steps",
            value: 0.0,
        });
    }
    let initial = *initial;
    let params = *params;
    let dt = t_max / steps as f64;
    Ok((0..=steps).map(move |i| {
        let t = if i == steps { t_max } else { i as f64 * dt };
        let state = evolve_unchecked(&initial, &params, t);
        let (displacement, thermal) = squared_speed_parts(&state, &params);
        TrajectorySample {
            t,
            p: state.p(),
            q: state.q(),
            beta: state.beta(),
            speed: numeric::sqrt(displacement + thermal),
            thermal_speed: thermal,
        }
    }))
}
