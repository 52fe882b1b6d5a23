//! Grünwald-Letnikov weight sequences.
//!
//! The weights discretizing the fractional derivative of order `α` are
//!
//! ```text
//! w_0 = 1,    w_n = (1 - (α+1)/n) · w_{n-1} = (-1)^n C(α, n)
//! ```
//!
//! For `α ∈ (1, 2)` the only negative weight is `w_1 = -α`; the full series
//! sums to zero. Generation uses the multiplicative recursion (O(1) per term,
//! ratios in (0,1) for n ≥ 2, no cancellation); the binomial/Gamma closed form
//! is kept as an independent oracle.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::float;
use crate::specfun::log_gamma;
use crate::util::KahanSum;

/// A finite prefix `w_0 .. w_N` of the weight sequence for one exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSequence {
    alpha: f64,
    values: Vec<f64>,
}

impl WeightSequence {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The weights `w_0 .. w_N` in order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Highest index stored (`N` for a sequence `w_0 .. w_N`).
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 1.0 && alpha <= 2.0 {
        Ok(())
    } else {
        Err(Error::Domain("alpha must lie in (1, 2]"))
    }
}

/// Weights `w_0 .. w_count` by the multiplicative recursion.
///
/// `alpha = 2` is admitted as the closed endpoint: the recursion hits the
/// factor `1 - 3/3 = 0` at `n = 3` and every later weight is exactly zero,
/// reproducing the centered second-difference stencil.
pub fn weights(alpha: f64, count: usize) -> Result<WeightSequence> {
    check_alpha(alpha)?;
    let mut values = Vec::with_capacity(count + 1);
    let mut w = 1.0;
    values.push(w);
    for n in 1..=count {
        w *= 1.0 - (alpha + 1.0) / n as f64;
        values.push(w);
    }
    Ok(WeightSequence { alpha, values })
}

/// Closed binomial form `(-1)^n C(α, n)`, evaluated through log-Gamma
/// differences. Serves as the independent oracle for [`weights`].
///
/// For `n ≥ 2` and `α ∈ (1, 2)` the value equals
/// `α(α-1) Γ(n-α) / (Γ(2-α) Γ(n+1))`, where every Gamma argument is positive
/// and the overall sign is `+`; `n = 0, 1` and integer `α = 2` are handled
/// directly so no reflection is ever needed.
pub fn weight_binomial(alpha: f64, n: usize) -> Result<f64> {
    check_alpha(alpha)?;
    match n {
        0 => return Ok(1.0),
        1 => return Ok(-alpha),
        _ => {}
    }
    if alpha == 2.0 {
        return Ok(if n == 2 { 1.0 } else { 0.0 });
    }
    let log_ratio =
        log_gamma(n as f64 - alpha)? - log_gamma(2.0 - alpha)? - log_gamma(n as f64 + 1.0)?;
    Ok(alpha * (alpha - 1.0) * float::exp(log_ratio))
}

/// Compensated partial sum `S_N = Σ_{n=0}^{N} w_n`.
///
/// Equals `(-1)^N C(α-1, N)` and decays like `N^{-α}`, realizing the
/// convergence of the full series to zero.
pub fn weight_partial_sum(alpha: f64, n_max: usize) -> Result<f64> {
    check_alpha(alpha)?;
    let mut sum = KahanSum::new();
    let mut w = 1.0;
    sum.add(w);
    for n in 1..=n_max {
        w *= 1.0 - (alpha + 1.0) / n as f64;
        sum.add(w);
    }
    Ok(sum.value())
}

/// Successive-term ratio `a_{n+1}/a_n` of the Besov majorant series
/// `a_n = n (Γ(n+1-α)/Γ(n+2))²`, in the reduced form
/// `(n+1)(n+1-α) / (n (n+2)²)`. Strictly below 1 for every `n ≥ 2`, which is
/// the d'Alembert convergence certificate for the series.
pub fn dalembert_ratio(alpha: f64, n: usize) -> Result<f64> {
    check_alpha(alpha)?;
    if n < 2 {
        return Err(Error::Domain("dalembert_ratio requires n >= 2"));
    }
    let nf = n as f64;
    Ok((nf + 1.0) / nf * (nf + 1.0 - alpha) / ((nf + 2.0) * (nf + 2.0)))
}
