//! The Bures (statistical distance) metric on the displaced-thermal
//! manifold, its volume element, and its scalar curvature.
//!
//! In the coordinates `(p, q, beta)` the metric is diagonal,
//!
//! ```text
//! ds^2 = (1/2) tanh(beta/2) (dp^2 + dq^2) + dbeta^2 / (16 sinh^2(beta/2))
//! ```
//!
//! so the tensor is stored as its three diagonal entries; the off-diagonal
//! entries vanish identically in these coordinates.
//!
//! [`scalar_curvature_numeric`] rebuilds the Ricci scalar from the metric
//! entries alone via finite differences, as an independent cross-check of
//! the closed form `R = -6 + 14 tanh^2(beta/2)`. Curvature signs follow
//! the convention in which the round sphere has positive scalar curvature
//! (Riemann `R^r_{smn} = d_m Gamma^r_{ns} - d_n Gamma^r_{ms} + ...`,
//! Ricci `R_{sn} = R^m_{smn}`).

use crate::error::{check_finite, Error, Result};
use crate::numeric;

/// Diagonal Bures metric tensor at a point of the `(p, q, beta)` manifold.
///
/// The entries depend on `beta` only; homogeneity in the displacements is
/// built into the type (there is no `p` or `q` field to vary).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BuresMetric {
    /// Momentum-displacement entry `(1/2) tanh(beta/2)`.
    pub g_pp: f64,
    /// Coordinate-displacement entry; equal to `g_pp`.
    pub g_qq: f64,
    /// Thermal entry `1 / (16 sinh^2(beta/2))`.
    pub g_bb: f64,
    /// Evaluation point.
    pub beta: f64,
}

impl BuresMetric {
    /// `det g = g_pp * g_qq * g_bb`.
    pub fn determinant(&self) -> f64 {
        self.g_pp * self.g_qq * self.g_bb
    }

    /// The quadratic form `ds^2` on a tangent vector
    /// `(dp, dq, dbeta)`.
    pub fn quadratic_form(&self, dp: f64, dq: f64, dbeta: f64) -> f64 {
        self.g_pp * dp * dp + self.g_qq * dq * dq + self.g_bb * dbeta * dbeta
    }
}

fn check_beta(beta: f64) -> Result<()> {
    check_finite("beta", beta)?;
    if beta <= 0.0 {
        return Err(Error::NonPositive {
            name: "beta",
            value: beta,
        });
    }
    Ok(())
}

/// The Bures metric tensor at inverse temperature `beta`.
pub fn metric_at(beta: f64) -> Result<BuresMetric> {
    check_beta(beta)?;
    let half = 0.5 * beta;
    let g_pp = 0.5 * numeric::tanh(half);
    let s = numeric::sinh(half);
    // overflows of sinh^2 push g_bb to +0 which is the correct limit
    let g_bb = 1.0 / (16.0 * s * s);
    Ok(BuresMetric {
        g_pp,
        g_qq: g_pp,
        g_bb,
        beta,
    })
}

/// Squared line element `ds^2` for the coordinate differentials
/// `(dp, dq, dbeta)` at the point `beta`.
pub fn line_element(beta: f64, dp: f64, dq: f64, dbeta: f64) -> Result<f64> {
    check_finite("dp", dp)?;
    check_finite("dq", dq)?;
    check_finite("dbeta", dbeta)?;
    Ok(metric_at(beta)?.quadratic_form(dp, dq, dbeta))
}

/// Volume-element density `sqrt(det g) = (1/8) sech(beta/2)`, the quantum
/// Jeffreys prior over `(p, q, beta)`.
pub fn volume_element(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok(0.125 / numeric::cosh(0.5 * beta))
}

/// Scalar curvature `R = -6 + 14 tanh^2(beta/2)` of the Bures metric.
///
/// Strictly increasing in `beta`, from `-6` at infinite temperature to
/// `8` in the pure-state limit, with a single zero at
/// `beta = 2 artanh(sqrt(3/7))`.
pub fn scalar_curvature(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let t = numeric::tanh(0.5 * beta);
    Ok(-6.0 + 14.0 * t * t)
}

/// Result of the finite-difference curvature reconstruction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericCurvature {
    /// Reconstructed scalar curvature.
    pub value: f64,
    /// Set when the (scaled) step takes up a large fraction of the
    /// distance to the `beta = 0` boundary, where the stencil accuracy
    /// degrades noticeably.
    pub step_warning: bool,
}

/// Scalar curvature reconstructed from [`metric_at`] alone.
///
/// Central differences of the metric entries build the Christoffel
/// symbols and their derivatives, which are contracted to the Ricci
/// scalar; a single Richardson extrapolation step (`h` and `h/2`)
/// removes the leading `O(h^2)` truncation error. The step used along
/// `beta` is `h * max(1, beta)` so large-`beta` points, where the metric
/// entries decay exponentially, do not drown in roundoff.
///
/// Requires `beta > 2h` (after scaling); a step above an eighth of
/// `beta` is accepted but flagged with
/// [`NumericCurvature::step_warning`].
pub fn scalar_curvature_numeric(beta: f64, h: f64) -> Result<NumericCurvature> {
    check_beta(beta)?;
    check_finite("h", h)?;
    if h <= 0.0 {
        return Err(Error::NonPositive { name: "h", value: h });
    }
    let h_beta = h * beta.max(1.0);
    if beta <= 2.0 * h_beta {
        return Err(Error::StepTooLarge { beta, h });
    }
    let step_warning = h_beta > beta / 8.0;
    let coarse = ricci_scalar_fd(beta, [h, h, h_beta]);
    let fine = ricci_scalar_fd(beta, [0.5 * h, 0.5 * h, 0.5 * h_beta]);
    Ok(NumericCurvature {
        value: (4.0 * fine - coarse) / 3.0,
        step_warning,
    })
}

/// Diagonal metric entries as a function of the full coordinate triple.
/// The closed form only involves `x[2] = beta`, but the reconstruction
/// differentiates along all three coordinates without assuming that.
fn metric_entries(x: [f64; 3]) -> [f64; 3] {
    let half = 0.5 * x[2];
    let g_pp = 0.5 * numeric::tanh(half);
    let s = numeric::sinh(half);
    [g_pp, g_pp, 1.0 / (16.0 * s * s)]
}

/// One plain second-order reconstruction of the Ricci scalar at
/// `(0, 0, beta)` with per-coordinate steps `h`.
fn ricci_scalar_fd(beta: f64, h: [f64; 3]) -> f64 {
    let x0 = [0.0, 0.0, beta];
    let g = metric_entries(x0);
    let ginv = [1.0 / g[0], 1.0 / g[1], 1.0 / g[2]];

    // first and second derivatives of each diagonal entry
    let mut dg = [[0.0; 3]; 3]; // dg[i][k] = d g_ii / d x_k
    let mut d2g = [[[0.0; 3]; 3]; 3]; // d2g[i][k][l] = d^2 g_ii / d x_k d x_l
    for k in 0..3 {
        let mut xp = x0;
        xp[k] += h[k];
        let mut xm = x0;
        xm[k] -= h[k];
        let gp = metric_entries(xp);
        let gm = metric_entries(xm);
        for i in 0..3 {
            dg[i][k] = (gp[i] - gm[i]) / (2.0 * h[k]);
            d2g[i][k][k] = (gp[i] - 2.0 * g[i] + gm[i]) / (h[k] * h[k]);
        }
    }
    for k in 0..3 {
        for l in (k + 1)..3 {
            let mut xpp = x0;
            xpp[k] += h[k];
            xpp[l] += h[l];
            let mut xpm = x0;
            xpm[k] += h[k];
            xpm[l] -= h[l];
            let mut xmp = x0;
            xmp[k] -= h[k];
            xmp[l] += h[l];
            let mut xmm = x0;
            xmm[k] -= h[k];
            xmm[l] -= h[l];
            let gpp = metric_entries(xpp);
            let gpm = metric_entries(xpm);
            let gmp = metric_entries(xmp);
            let gmm = metric_entries(xmm);
            for i in 0..3 {
                let v = (gpp[i] - gpm[i] - gmp[i] + gmm[i]) / (4.0 * h[k] * h[l]);
                d2g[i][k][l] = v;
                d2g[i][l][k] = v;
            }
        }
    }

    // diagonal-metric derivative accessors: d g_ij / d x_k is zero off
    // the diagonal because the off-diagonal entries vanish identically
    let d1 = |i: usize, j: usize, k: usize| if i == j { dg[i][k] } else { 0.0 };
    let d2 = |i: usize, j: usize, k: usize, l: usize| {
        if i == j {
            d2g[i][k][l]
        } else {
            0.0
        }
    };
    let gamma = |r: usize, i: usize, j: usize| {
        0.5 * ginv[r] * (d1(j, r, i) + d1(i, r, j) - d1(i, j, r))
    };
    // d Gamma^r_{ij} / d x_m, assembled from the metric derivatives so no
    // nested differencing is needed
    let dgamma = |m: usize, r: usize, i: usize, j: usize| {
        -0.5 * ginv[r] * ginv[r] * dg[r][m] * (d1(j, r, i) + d1(i, r, j) - d1(i, j, r))
            + 0.5 * ginv[r] * (d2(j, r, i, m) + d2(i, r, j, m) - d2(i, j, r, m))
    };
    let riemann = |r: usize, s: usize, m: usize, n: usize| {
        let mut t = dgamma(m, r, n, s) - dgamma(n, r, m, s);
        for l in 0..3 {
            t += gamma(r, m, l) * gamma(l, n, s) - gamma(r, n, l) * gamma(l, m, s);
        }
        t
    };

    let mut scalar = 0.0;
    for s in 0..3 {
        let mut ricci_ss = 0.0;
        for m in 0..3 {
            ricci_ss += riemann(m, s, m, s);
        }
        scalar += ginv[s] * ricci_ss;
    }
    scalar
}
