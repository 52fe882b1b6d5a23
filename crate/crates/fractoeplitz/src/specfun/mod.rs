//! Self-contained special functions and adaptive quadrature.
//!
//! Everything the Szegő closed forms need: log-Gamma and digamma (recurrence
//! shift plus Bernoulli asymptotic series), the Lobachevsky function, the
//! Catalan and Euler constants with series/limit revalidation, and a
//! Gauss-Kronrod adaptive integrator that grades toward flagged logarithmic
//! endpoint singularities.

mod gamma;
mod quad;

pub use gamma::{digamma, log_gamma};
pub use quad::{integrate, QuadratureSpec};

use crate::error::{Error, Result};
use crate::float;

/// Mathematical constants stored to full double precision. Each one is
/// revalidated by its defining series or limit in [`validate_constants`].
pub mod consts {
    pub const PI: f64 = core::f64::consts::PI;
    pub const LN_2: f64 = core::f64::consts::LN_2;
    /// Euler-Mascheroni constant C = lim (Σ_{k≤m} 1/k − ln m).
    pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    /// Catalan constant G = Σ (−1)^m / (2m+1)².
    pub const CATALAN: f64 = 0.915_965_594_177_219;
    pub(crate) const LN_TWO_PI: f64 = 1.837_877_066_409_345_3;
}

/// Sum an alternating series Σ (−1)^k a_k with the Cohen-Rodriguez
/// Villegas-Zagier acceleration; `n` terms give roughly 5.83^-n accuracy,
/// so `n = 50` is far past double precision.
fn alternating_series<F: Fn(usize) -> f64>(a: F, n: usize) -> f64 {
    let base = 3.0 + float::sqrt(8.0);
    let mut d = float::powf(base, n as f64);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..n {
        c = b - c;
        s += c * a(k);
        let kf = k as f64;
        let nf = n as f64;
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Catalan's constant G.
pub fn catalan() -> f64 {
    consts::CATALAN
}

/// Partial sum Σ_{j=0}^{m} (−1)^j/(2j+1)² of the defining series of G.
pub fn catalan_partial_sum(m: usize) -> f64 {
    let mut s = 0.0;
    for j in (0..=m).rev() {
        let d = (2 * j + 1) as f64;
        let term = 1.0 / (d * d);
        s += if j % 2 == 0 { term } else { -term };
    }
    s
}

/// G evaluated from its defining alternating series under acceleration.
pub fn catalan_series(terms: usize) -> f64 {
    alternating_series(
        |k| {
            let d = (2 * k + 1) as f64;
            1.0 / (d * d)
        },
        terms,
    )
}

/// Euler's constant evaluated from its defining limit
/// `Σ_{k≤m} 1/k − ln m` under Richardson extrapolation over m = 16·2^j.
pub fn euler_gamma_limit(levels: usize) -> f64 {
    let mut rows: alloc::vec::Vec<f64> = (0..=levels)
        .map(|j| {
            let m = 16usize << j;
            let mut h = crate::util::KahanSum::new();
            for k in 1..=m {
                h.add(1.0 / k as f64);
            }
            h.value() - float::ln(m as f64)
        })
        .collect();
    for k in 1..=levels {
        let f = float::powf(2.0, k as f64);
        for j in (k..=levels).rev() {
            rows[j] = (f * rows[j] - rows[j - 1]) / (f - 1.0);
        }
    }
    rows[levels]
}

/// Lobachevsky's function `L(x) = −∫_0^x ln(cos u) du` on `[0, π/2)`.
///
/// Sign convention fixed so that `∫_0^x ln cos u du = −L(x)`; on this branch
/// L is nonnegative, increasing, and convex. The operator exponents map to
/// arguments `π(1−α/2) < π/2`, so the open right endpoint is never needed.
pub fn lobachevsky(x: f64) -> Result<f64> {
    if !(x >= 0.0) || x >= consts::PI / 2.0 {
        return Err(Error::Domain("lobachevsky requires 0 <= x < pi/2"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let spec = QuadratureSpec {
        abs_tol: 1e-13,
        rel_tol: 0.0,
        // the integrand is smooth on [0, x] but steepens toward π/2
        singular_right: x > 1.4,
        ..QuadratureSpec::default()
    };
    let v = integrate(|u| float::ln(float::cos(u)), 0.0, x, &spec)?;
    Ok(-v)
}

/// Revalidates the stored constants against their defining series/limits.
/// Intended as a startup guard; all checks are at the 1e-12 level.
pub fn validate_constants() -> Result<()> {
    let pi = 4.0 * alternating_series(|k| 1.0 / (2 * k + 1) as f64, 50);
    if float::abs(pi - consts::PI) > 1e-12 {
        return Err(Error::Domain("stored PI fails its series validation"));
    }
    let ln2 = alternating_series(|k| 1.0 / (k + 1) as f64, 50);
    if float::abs(ln2 - consts::LN_2) > 1e-12 {
        return Err(Error::Domain("stored LN_2 fails its series validation"));
    }
    if float::abs(catalan_series(50) - consts::CATALAN) > 1e-12 {
        return Err(Error::Domain("stored CATALAN fails its series validation"));
    }
    if float::abs(euler_gamma_limit(8) - consts::EULER_GAMMA) > 1e-12 {
        return Err(Error::Domain("stored EULER_GAMMA fails its limit validation"));
    }
    Ok(())
}
