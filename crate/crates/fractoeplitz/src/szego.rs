//! Fourier coefficients of the log-symbol and strong-limit determinant
//! asymptotics.
//!
//! All coefficient routines refer to the β = 0 symbol carrying the prefactor
//! `scale / |cos(πα/2)|` with the grid spacing fixed at 1, so `scale` plays
//! the role of the physical constant `K_α`. The prefactor enters only the
//! zeroth coefficient (additively, as a log); coefficients for k ≥ 1 are
//! scale-free. `shifted` records the origin convention: shifted and unshifted
//! coefficients differ by exactly `(−1)^k`.
//!
//! The symbol vanishes at one point of the circle (θ = π shifted, θ = 0
//! unshifted), so `log f` has an integrable logarithmic singularity there and
//! the strong-limit correction `E(f) = exp Σ k c_k²` diverges; `E` is exposed
//! only as a partial sum with a caller-chosen cutoff. Quadrature near the
//! singular endpoint uses the substitution θ = π − e^{-t} (resp. θ = e^{-t}),
//! which turns the log singularity into an exponentially damped smooth
//! integrand.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::float;
use crate::glweights::check_alpha;
use crate::specfun::consts::{CATALAN, LN_2, PI};
use crate::specfun::{digamma, integrate, lobachevsky, QuadratureSpec};
use crate::spectra::lu_logdet;
use crate::toeplitz::{assemble, StableParams};
use crate::util::KahanSum;

/// Truncation of the exponential substitution: e^-46 ≈ 1e-20, far below any
/// tolerance in play.
const EXP_CUTOFF: f64 = 46.0;

fn default_coeff_spec() -> QuadratureSpec {
    QuadratureSpec {
        abs_tol: 1e-13,
        rel_tol: 0.0,
        ..QuadratureSpec::default()
    }
}

/// log|cos(πα/2)|, the α-dependent part of the symbol prefactor.
fn log_abs_cos_half(alpha: f64) -> f64 {
    float::ln(float::abs(float::cos(PI * alpha / 2.0)))
}

/// Dimensionless shifted log-symbol `α ln(2 cos(θ/2)) + ln cos(θ(1−α/2))`,
/// written in the distance `δ = π − θ` when the caller sits near the zero.
fn log_symbol_shifted(alpha: f64, theta: f64) -> f64 {
    alpha * float::ln(2.0 * float::cos(theta / 2.0))
        + float::ln(float::cos(theta * (1.0 - alpha / 2.0)))
}

fn quadrature_coeff(
    alpha: f64,
    k: usize,
    scale: f64,
    shifted: bool,
    spec: &QuadratureSpec,
) -> Result<f64> {
    check_alpha(alpha)?;
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::Domain("scale must be positive and finite"));
    }
    let s = 1.0 - alpha / 2.0;
    let kf = k as f64;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };

    // smooth piece, one unit away from the symbol zero
    let smooth = if shifted {
        integrate(
            |theta| log_symbol_shifted(alpha, theta) * float::cos(kf * theta),
            0.0,
            PI - 1.0,
            spec,
        )?
    } else {
        integrate(
            |theta| {
                (alpha * float::ln(2.0 * float::sin(theta / 2.0))
                    + float::ln(float::cos((theta - PI) * s)))
                    * float::cos(kf * theta)
            },
            1.0,
            PI,
            spec,
        )?
    };

    // singular piece under θ = π − δ (shifted) or θ = δ (unshifted) with
    // δ = e^{-t}: the integrand is evaluated in δ directly, avoiding the
    // catastrophic cancellation of cos(θ/2) near π
    let singular = integrate(
        |t| {
            let delta = float::exp(-t);
            let level = alpha * float::ln(2.0 * float::sin(delta / 2.0))
                + float::ln(float::cos(PI * s - delta * s));
            let phase = if shifted {
                // cos(k(π − δ)) = (−1)^k cos(kδ)
                sign * float::cos(kf * delta)
            } else {
                float::cos(kf * delta)
            };
            level * phase * delta
        },
        0.0,
        EXP_CUTOFF,
        spec,
    )?;

    let mut coeff = (smooth + singular) / PI;
    if k == 0 {
        coeff += float::ln(scale) - log_abs_cos_half(alpha);
    }
    Ok(coeff)
}

/// Fourier coefficient `(log f)_k = (1/π) ∫_0^π log f(e^{iθ}) cos kθ dθ` of
/// the shifted symbol, by adaptive quadrature; `log(scale)` enters at k = 0
/// only.
pub fn logf_coeff_quadrature(alpha: f64, k: usize, scale: f64) -> Result<f64> {
    quadrature_coeff(alpha, k, scale, true, &default_coeff_spec())
}

/// [`logf_coeff_quadrature`] with caller-controlled quadrature tolerances.
pub fn logf_coeff_quadrature_spec(
    alpha: f64,
    k: usize,
    scale: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    quadrature_coeff(alpha, k, scale, true, spec)
}

/// Quadrature coefficients of the unshifted symbol (zero at θ = 0). Related
/// to the shifted ones by exactly `(−1)^k`.
pub fn logf_coeff_quadrature_unshifted(alpha: f64, k: usize, scale: f64) -> Result<f64> {
    quadrature_coeff(alpha, k, scale, false, &default_coeff_spec())
}

/// Closed form of the zeroth coefficient:
///
/// ```text
/// (log f)_0 = log(scale) − log|cos(πα/2)| − (2/((2−α)π)) L(π(1−α/2))
/// ```
///
/// with L the Lobachevsky function. At α = 2 the Lobachevsky term vanishes
/// as (2−α)² and the value is exactly `log(scale)`.
pub fn logf_coeff0_closed(alpha: f64, scale: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::Domain("scale must be positive and finite"));
    }
    if alpha == 2.0 {
        return Ok(float::ln(scale));
    }
    let arg = PI * (1.0 - alpha / 2.0);
    let lob = lobachevsky(arg)?;
    Ok(float::ln(scale) - log_abs_cos_half(alpha) - 2.0 / ((2.0 - alpha) * PI) * lob)
}

fn closed_coeff(alpha: f64, k: usize, spec: &QuadratureSpec) -> Result<f64> {
    check_alpha(alpha)?;
    if k == 0 {
        return Err(Error::Domain("logf_coeff_closed requires k >= 1"));
    }
    let kf = k as f64;
    let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
    let i1 = sign * alpha / (2.0 * kf);
    let s = 1.0 - alpha / 2.0;
    let upper = PI * s;
    if upper <= 0.0 {
        return Ok(i1); // α = 2: the I₂ interval collapses
    }
    let i2 = integrate(
        |u| (float::cos((kf / s - 1.0) * u) - float::cos((kf / s + 1.0) * u)) / float::cos(u),
        0.0,
        upper,
        spec,
    )? / (2.0 * kf * PI);
    Ok(i1 + i2)
}

/// Closed form of `(log f)_k`, k ≥ 1 (shifted convention):
///
/// ```text
/// (−1)^{k+1} α/(2k)
///   + (1/(2kπ)) ∫_0^{π(1−α/2)} [cos((k/(1−α/2)−1)u) − cos((k/(1−α/2)+1)u)] / cos u du
/// ```
///
/// The integrand is smooth: the upper limit stays below π/2 for α > 1.
pub fn logf_coeff_closed(alpha: f64, k: usize) -> Result<f64> {
    closed_coeff(alpha, k, &default_coeff_spec())
}

/// [`logf_coeff_closed`] with caller-controlled quadrature tolerances.
pub fn logf_coeff_closed_spec(alpha: f64, k: usize, spec: &QuadratureSpec) -> Result<f64> {
    closed_coeff(alpha, k, spec)
}

/// Gaussian (α = 2) coefficients in the unshifted convention: 0 at k = 0
/// (unit scale) and −1/k for k ≥ 1.
pub fn gaussian_coeff(k: usize) -> f64 {
    if k == 0 {
        0.0
    } else {
        -1.0 / k as f64
    }
}

/// Leibniz partial sum `Σ_{m=1}^{2k} sin(mπ/2)/m`, taken exactly (even terms
/// vanish, odd terms alternate).
fn leibniz_partial(k: usize) -> f64 {
    let mut s = KahanSum::new();
    for m in (1..=2 * k).step_by(2) {
        let term = 1.0 / m as f64;
        s.add(if m % 4 == 1 { term } else { -term });
    }
    s.value()
}

/// Holtsmark (α = 3/2) coefficients for k ≥ 1 in the shifted convention,
/// finite-sum form:
///
/// ```text
/// (−1)^{k+1} 3/(4k) − (1/(πk)) (π/4 − Σ_{m=1}^{2k} sin(mπ/2)/m)
/// ```
///
/// Agrees with [`logf_coeff_closed`] at α = 3/2.
pub fn holtsmark_firstline(k: usize) -> f64 {
    assert!(k >= 1, "holtsmark coefficients start at k = 1");
    let kf = k as f64;
    let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
    sign * 3.0 / (4.0 * kf) - (PI / 4.0 - leibniz_partial(k)) / (PI * kf)
}

/// The digamma-based expression
/// `(−1)^k (−3/(4k) + (Ψ((2k+1)/4) − Ψ((2k−1)/4))/(4k))` for the Holtsmark
/// coefficients.
///
/// This form does **not** reproduce the quadrature coefficients (at k = 1 it
/// gives 3/4 − π/4 ≈ −0.0354 where the symbol yields ≈ 0.8183); it is kept
/// only so the discrepancy can be computed and reported, never adopted.
/// See [`holtsmark_digamma_deviation`].
pub fn holtsmark_digamma_line(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("holtsmark coefficients start at k = 1"));
    }
    let kf = k as f64;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let psi_diff = digamma((2.0 * kf + 1.0) / 4.0)? - digamma((2.0 * kf - 1.0) / 4.0)?;
    Ok(sign * (-3.0 / (4.0 * kf) + psi_diff / (4.0 * kf)))
}

/// Absolute deviation of the digamma-based expression from the quadrature
/// oracle at unit scale (≈ 0.854 at k = 1).
pub fn holtsmark_digamma_deviation(k: usize) -> Result<f64> {
    let oracle = logf_coeff_quadrature(1.5, k, 1.0)?;
    Ok(float::abs(holtsmark_digamma_line(k)? - oracle))
}

/// How a coefficient set was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffMethod {
    Quadrature,
    Closed,
    SpecialCase,
}

impl CoeffMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CoeffMethod::Quadrature => "quadrature",
            CoeffMethod::Closed => "closed",
            CoeffMethod::SpecialCase => "special-case",
        }
    }
}

/// The coefficients `(log f)_0 .. (log f)_kmax` with their provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct SzegoCoefficients {
    pub alpha: f64,
    pub scale: f64,
    pub c0: f64,
    pub ck: Vec<f64>,
    pub method: CoeffMethod,
    pub shifted: bool,
}

impl SzegoCoefficients {
    pub fn kmax(&self) -> usize {
        self.ck.len()
    }

    /// The same coefficients in the other origin convention: `c0` is
    /// invariant, `c_k` picks up `(−1)^k`.
    pub fn with_shift(&self, shifted: bool) -> Self {
        if shifted == self.shifted {
            return self.clone();
        }
        let ck = self
            .ck
            .iter()
            .enumerate()
            .map(|(i, &c)| if (i + 1) % 2 == 0 { c } else { -c })
            .collect();
        Self {
            ck,
            shifted,
            ..self.clone()
        }
    }
}

/// Build the coefficient set `c_0 .. c_kmax` by the requested method.
///
/// `SpecialCase` is available for the Gaussian (α = 2, unshifted, `−1/k`)
/// and Holtsmark (α = 3/2, shifted, finite-sum) laws only.
pub fn coefficients(
    alpha: f64,
    scale: f64,
    kmax: usize,
    method: CoeffMethod,
) -> Result<SzegoCoefficients> {
    coefficients_with(alpha, scale, kmax, method, &default_coeff_spec())
}

/// [`coefficients`] with caller-controlled quadrature tolerances.
pub fn coefficients_with(
    alpha: f64,
    scale: f64,
    kmax: usize,
    method: CoeffMethod,
    spec: &QuadratureSpec,
) -> Result<SzegoCoefficients> {
    check_alpha(alpha)?;
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::Domain("scale must be positive and finite"));
    }
    let (c0, ck, shifted) = match method {
        CoeffMethod::Quadrature => {
            let c0 = quadrature_coeff(alpha, 0, scale, true, spec)?;
            let ck = (1..=kmax)
                .map(|k| quadrature_coeff(alpha, k, scale, true, spec))
                .collect::<Result<Vec<_>>>()?;
            (c0, ck, true)
        }
        CoeffMethod::Closed => {
            let c0 = logf_coeff0_closed(alpha, scale)?;
            let ck = (1..=kmax)
                .map(|k| closed_coeff(alpha, k, spec))
                .collect::<Result<Vec<_>>>()?;
            (c0, ck, true)
        }
        CoeffMethod::SpecialCase => {
            if alpha == 2.0 {
                let ck = (1..=kmax).map(gaussian_coeff).collect();
                (float::ln(scale), ck, false)
            } else if float::abs(alpha - 1.5) < 1e-12 {
                let c0 = float::ln(scale) - 0.5 * LN_2 + 2.0 * CATALAN / PI;
                let ck = (1..=kmax).map(holtsmark_firstline).collect();
                (c0, ck, true)
            } else {
                return Err(Error::Domain(
                    "special-case coefficients exist only for alpha = 2 and alpha = 3/2",
                ));
            }
        }
    };
    Ok(SzegoCoefficients {
        alpha,
        scale,
        c0,
        ck,
        method,
        shifted,
    })
}

/// Strong-limit constants from a coefficient set:
/// `log G(f) = c_0` and the partial `log E(f) = Σ_{k=1}^{m} k c_k²`.
///
/// The full E-sum diverges logarithmically because the symbol vanishes on
/// the circle, so the cutoff is the caller's; both conventions give the same
/// value since the coefficients enter squared.
pub fn szego_constants(coeffs: &SzegoCoefficients, m: usize) -> Result<(f64, f64)> {
    if m > coeffs.kmax() {
        return Err(Error::Domain("cutoff m exceeds the stored kmax"));
    }
    let mut e = KahanSum::new();
    for (i, &c) in coeffs.ck.iter().take(m).enumerate() {
        e.add((i + 1) as f64 * c * c);
    }
    Ok((coeffs.c0, e.value()))
}

/// Cutoff rule for the partial `E(f)` diagnostic of [`asymptote_study`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutoffRule {
    /// m = n at each truncation size (for the Gaussian this turns the
    /// diagnostic into exp(H_n)/(n+1) → e^C).
    MatchN,
    Fixed(usize),
}

/// One row of a determinant-asymptotics study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoteRow {
    pub n: usize,
    /// log det of the truncation, in the unit-constant normalization
    /// (K_α = 1, spacing 1).
    pub log_det: f64,
    pub n_c0: f64,
    /// log det − n·c0; grows like a multiple of log n because of the symbol
    /// zero.
    pub residual: f64,
    /// exp(partial log E − residual): how much of the correction the partial
    /// E-sum explains. For α = 2 with `MatchN` this is exp(H_n)/(n+1) → e^C.
    pub diag: f64,
}

/// Determinant asymptotics along `n_list` for the symmetric law (β = 0):
/// assembles each truncation, takes its LU log-determinant, and compares
/// against `n · c0` with a partial-E diagnostic.
pub fn asymptote_study(alpha: f64, n_list: &[usize], rule: CutoffRule) -> Result<Vec<AsymptoteRow>> {
    check_alpha(alpha)?;
    if n_list.is_empty() {
        return Err(Error::Domain("asymptote_study requires at least one size"));
    }
    let c0 = logf_coeff0_closed(alpha, 1.0)?;

    let m_max = match rule {
        CutoffRule::MatchN => *n_list.iter().max().expect("nonempty"),
        CutoffRule::Fixed(m) => m,
    };
    let mut ck = Vec::with_capacity(m_max);
    for k in 1..=m_max {
        ck.push(logf_coeff_closed(alpha, k)?);
    }

    let log_prefactor = -log_abs_cos_half(alpha);
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let params = StableParams::dimensionless(alpha, 0.0, n)?;
        let dense = assemble(&params)?.to_dense();
        let (sign, log_abs) = lu_logdet(&dense);
        if sign <= 0 {
            return Err(Error::Domain(
                "truncation determinant is not positive; asymptote study needs beta = 0",
            ));
        }
        let log_det = log_abs + n as f64 * log_prefactor;
        let residual = log_det - n as f64 * c0;

        let m = match rule {
            CutoffRule::MatchN => n,
            CutoffRule::Fixed(m) => m,
        };
        let mut log_e = KahanSum::new();
        for (i, &c) in ck.iter().take(m).enumerate() {
            log_e.add((i + 1) as f64 * c * c);
        }
        rows.push(AsymptoteRow {
            n,
            log_det,
            n_c0: n as f64 * c0,
            residual,
            diag: float::exp(log_e.value() - residual),
        });
    }
    Ok(rows)
}
