//! Scalar math shims and log-domain helpers.
//!
//! With the `std` feature (default) everything forwards to the intrinsic
//! `f64` methods. Without it, `libm` provides the same functions so the
//! crate stays `no_std`-compatible.

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("bures-core needs at least one of the `std` or `libm` features");

macro_rules! fwd {
    ($($name:ident),* $(,)?) => {
        $(
            #[inline]
            pub(crate) fn $name(x: f64) -> f64 {
                #[cfg(feature = "std")]
                {
                    x.$name()
                }
                #[cfg(not(feature = "std"))]
                {
                    libm::$name(x)
                }
            }
        )*
    };
}

fwd!(sinh, cosh, tanh, exp, sqrt, sin, cos);

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.ln()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::log(x)
    }
}

#[inline]
pub(crate) fn ln_1p(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.ln_1p()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::log1p(x)
    }
}

#[inline]
pub(crate) fn exp_m1(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.exp_m1()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::expm1(x)
    }
}

/// Threshold above which `sinh`/`cosh` are replaced by their exponential
/// asymptotics inside the log-domain helpers. `e^{-2x} < 4e-18` there, so
/// `ln_1p` keeps full precision while `sinh(x)` itself stays far from
/// overflow on either branch.
const LOG_ASYMPTOTIC: f64 = 20.0;

/// ln(sinh(x)) for x > 0, valid for arbitrarily large x.
#[inline]
pub(crate) fn log_sinh(x: f64) -> f64 {
    if x > LOG_ASYMPTOTIC {
        x - core::f64::consts::LN_2 + ln_1p(-exp(-2.0 * x))
    } else {
        ln(sinh(x))
    }
}

/// ln(cosh(x)) for x >= 0, valid for arbitrarily large x.
#[inline]
pub(crate) fn log_cosh(x: f64) -> f64 {
    if x > LOG_ASYMPTOTIC {
        x - core::f64::consts::LN_2 + ln_1p(exp(-2.0 * x))
    } else {
        ln(cosh(x))
    }
}

/// coth(x) for x > 0.
#[inline]
pub(crate) fn coth(x: f64) -> f64 {
    1.0 / tanh(x)
}

/// Inverse of `coth`: given c = coth(x) with c > 1, recovers x > 0.
///
/// Uses x = ln((c+1)/(c-1))/2 rewritten as ln_1p(2/(c-1))/2 so precision
/// is kept both for c near 1 (x large) and c large (x small).
#[inline]
pub(crate) fn arccoth(c: f64) -> f64 {
    0.5 * ln_1p(2.0 / (c - 1.0))
}
