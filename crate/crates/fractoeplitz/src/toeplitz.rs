//! Assembly of the discretized fractional operator as a Toeplitz matrix and
//! evaluation of its generating function (symbol).
//!
//! The physical operator factors as `scale · M` where
//! `scale = K_α / (|cos(πα/2)| ε^α)` and `M` is the dimensionless Toeplitz
//! matrix held here. The normalization divides out the prefactor and flips
//! the sign introduced by `cos(πα/2) < 0`, so `m_0 = α > 0`, the β = 0
//! truncation is positive definite, and the mean eigenvalue equals α.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::float;
use crate::glweights::{self, weights};
use crate::matrix::Matrix;
use crate::specfun::consts::PI;
use crate::util::KahanSum;

/// Validated parameter bundle for a stable law `S_α(β, c)` on a bounded
/// interval: exponent, skewness, physical constant `K_α`, interval length,
/// and grid count. The spacing `ε = L/(n+1)` is always derived (the grid
/// excludes both endpoints), never set independently.
#[derive(Debug, Clone, PartialEq)]
pub struct StableParams {
    alpha: f64,
    beta: f64,
    k_alpha: f64,
    length: f64,
    n: usize,
}

impl StableParams {
    pub fn new(alpha: f64, beta: f64, k_alpha: f64, length: f64, n: usize) -> Result<Self> {
        glweights::check_alpha(alpha)?;
        if !(-1.0..=1.0).contains(&beta) {
            return Err(Error::Domain("beta must lie in [-1, 1]"));
        }
        if !(k_alpha > 0.0) || !k_alpha.is_finite() {
            return Err(Error::Domain("k_alpha must be positive and finite"));
        }
        if !(length > 0.0) || !length.is_finite() {
            return Err(Error::Domain("length must be positive and finite"));
        }
        if n == 0 {
            return Err(Error::Domain("grid count n must be at least 1"));
        }
        Ok(Self {
            alpha,
            beta,
            k_alpha,
            length,
            n,
        })
    }

    /// Unit-free convenience: `K_α = 1` and `L = n + 1`, so `ε = 1` and
    /// `scale = 1/|cos(πα/2)|`.
    pub fn dimensionless(alpha: f64, beta: f64, n: usize) -> Result<Self> {
        Self::new(alpha, beta, 1.0, (n + 1) as f64, n)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn k_alpha(&self) -> f64 {
        self.k_alpha
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Grid spacing `ε = L/(n+1)`.
    pub fn epsilon(&self) -> f64 {
        self.length / (self.n + 1) as f64
    }

    /// Physical prefactor `K_α / (|cos(πα/2)| ε^α)`.
    pub fn scale(&self) -> f64 {
        self.k_alpha / (float::abs(float::cos(PI * self.alpha / 2.0)) * float::powf(self.epsilon(), self.alpha))
    }

    /// Anisotropic constant `K⁺ = K_α (1+β)/2`.
    pub fn k_plus(&self) -> f64 {
        self.k_alpha * (1.0 + self.beta) / 2.0
    }

    /// Anisotropic constant `K⁻ = K_α (1−β)/2`.
    pub fn k_minus(&self) -> f64 {
        self.k_alpha * (1.0 - self.beta) / 2.0
    }
}

/// The dimensionless truncated Toeplitz operator: entry `(i, j)` of the
/// matrix is `m_{i-j}`, and the physical matrix is `scale() · M`.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzOperator {
    params: StableParams,
    /// `m_k` for k = -(n-1) .. n-1, stored at index k + n - 1.
    kernel: Vec<f64>,
}

impl ToeplitzOperator {
    pub fn params(&self) -> &StableParams {
        &self.params
    }

    pub fn size(&self) -> usize {
        self.params.n
    }

    pub fn scale(&self) -> f64 {
        self.params.scale()
    }

    /// Kernel entries `m_{-(n-1)} .. m_{n-1}` in order.
    pub fn kernel(&self) -> &[f64] {
        &self.kernel
    }

    /// Kernel entry `m_k`; zero outside the stored band.
    pub fn kernel_at(&self, k: isize) -> f64 {
        let n = self.params.n as isize;
        if k <= -n || k >= n {
            return 0.0;
        }
        self.kernel[(k + n - 1) as usize]
    }

    /// Materialize the dimensionless dense matrix.
    pub fn to_dense(&self) -> Matrix {
        let n = self.params.n;
        Matrix::from_fn(n, |i, j| self.kernel[i + (n - 1) - j])
    }

    /// Dimensionless trace `n · m_0 = n · α`.
    pub fn trace(&self) -> f64 {
        self.params.n as f64 * self.kernel_at(0)
    }
}

/// Assemble the dimensionless kernel from the weight sequence:
///
/// ```text
/// m_0    = -w_1 = α
/// m_{-1} = -[(1+β) w_0 + (1-β) w_2]/2      (superdiagonal, j = i+1)
/// m_{+1} = -[(1-β) w_0 + (1+β) w_2]/2      (subdiagonal)
/// m_{-k} = -(1-β) w_{k+1}/2,  k ≥ 2
/// m_{+k} = -(1+β) w_{k+1}/2,  k ≥ 2
/// ```
///
/// The lower triangle mirrors the upper with β → −β (the left and right
/// derivative roles swap); β = 0 is symmetric and β = ±1 one-sided.
pub fn assemble(params: &StableParams) -> Result<ToeplitzOperator> {
    let n = params.n;
    let beta = params.beta;
    let w = weights(params.alpha, n.max(2))?;
    let w = w.values();

    let mut kernel = vec![0.0; 2 * n - 1];
    let c = n - 1;
    kernel[c] = -w[1];
    if n >= 2 {
        kernel[c - 1] = -0.5 * ((1.0 + beta) * w[0] + (1.0 - beta) * w[2]);
        kernel[c + 1] = -0.5 * ((1.0 - beta) * w[0] + (1.0 + beta) * w[2]);
    }
    for k in 2..n {
        kernel[c - k] = -0.5 * (1.0 - beta) * w[k + 1];
        kernel[c + k] = -0.5 * (1.0 + beta) * w[k + 1];
    }
    Ok(ToeplitzOperator {
        params: params.clone(),
        kernel,
    })
}

/// The classical Dirichlet Laplacian stencil: kernel `[-1, 2, -1]`, the α = 2,
/// β = 0 member of the family. `K_2` stands in for `ħ²/2m`; with `L = n+1`
/// the spacing is 1 and the physical scale is `K_2/ε² = 1`.
pub fn tridiagonal_laplacian(n: usize) -> ToeplitzOperator {
    let params = StableParams::dimensionless(2.0, 0.0, n).expect("fixed valid parameters");
    assemble(&params).expect("assembly of the stencil cannot fail")
}

/// One point of the symbol on the unit circle, dimensionless. `shifted`
/// selects the origin convention: the unshifted form has its zero at θ = 0,
/// the shifted form (θ → θ−π) at θ = ±π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolSample {
    pub theta: f64,
    pub u: f64,
    pub v: f64,
    pub shifted: bool,
}

/// Closed-form symbol:
///
/// ```text
/// unshifted: u = |2 sin(θ/2)|^α cos[(θ-π)(1-α/2)]
///            v = -β |2 sin(θ/2)|^α sin[(θ-π)(1-α/2)]
/// shifted:   u = |2 cos(θ/2)|^α cos[θ(1-α/2)]
///            v = -β |2 cos(θ/2)|^α sin[θ(1-α/2)]
/// ```
///
/// Multiply by [`StableParams::scale`] for physical values.
pub fn symbol_closed(params: &StableParams, theta: f64, shifted: bool) -> SymbolSample {
    let alpha = params.alpha;
    let half_order = 1.0 - alpha / 2.0;
    let (radius, phase) = if shifted {
        (
            float::powf(float::abs(2.0 * float::cos(theta / 2.0)), alpha),
            theta * half_order,
        )
    } else {
        (
            float::powf(float::abs(2.0 * float::sin(theta / 2.0)), alpha),
            (theta - PI) * half_order,
        )
    };
    SymbolSample {
        theta,
        u: radius * float::cos(phase),
        v: -params.beta * radius * float::sin(phase),
        shifted,
    }
}

/// Partial sums of the cosine/sine series form of the symbol (unshifted
/// convention):
///
/// ```text
/// u ≈ α - cos θ - Σ_{k=1}^{terms} w_{k+1} cos kθ
/// v ≈ β [sin θ - Σ_{k=1}^{terms} w_{k+1} sin kθ]
/// ```
///
/// Converges to [`symbol_closed`] pointwise for θ ∉ 2πZ as terms → ∞, with a
/// tail of order `terms^{-α}`; for α = 2 the series truncates after one term.
pub fn symbol_series(params: &StableParams, theta: f64, terms: usize) -> Result<SymbolSample> {
    if terms < 1 {
        return Err(Error::Domain("symbol_series requires at least one term"));
    }
    let w = weights(params.alpha, terms + 1)?;
    let w = w.values();
    let mut cos_sum = KahanSum::new();
    let mut sin_sum = KahanSum::new();
    for k in 1..=terms {
        let kt = k as f64 * theta;
        cos_sum.add(w[k + 1] * float::cos(kt));
        sin_sum.add(w[k + 1] * float::sin(kt));
    }
    Ok(SymbolSample {
        theta,
        u: params.alpha - float::cos(theta) - cos_sum.value(),
        v: params.beta * (float::sin(theta) - sin_sum.value()),
        shifted: false,
    })
}

/// Uniform samples of the unshifted symbol at the interior points
/// `θ_j = 2π j/(points+1)`, j = 1..points. Each sample satisfies the plane
/// ellipse relation `u² + (v/β)² = |2 sin(θ/2)|^{2α}` (degenerating to
/// `v = 0` for β = 0).
pub fn symbol_curve(params: &StableParams, points: usize) -> Result<Vec<SymbolSample>> {
    if points < 2 {
        return Err(Error::Domain("symbol_curve requires at least two points"));
    }
    Ok((1..=points)
        .map(|j| {
            let theta = 2.0 * PI * j as f64 / (points + 1) as f64;
            symbol_closed(params, theta, false)
        })
        .collect())
}

/// Residual of the ellipse relation for one sample: `|u² + (v/β)² − r^{2α}|`
/// with `r = |2 sin(θ/2)|` (or `|2 cos(θ/2)|` for shifted samples). For β = 0
/// the relation degenerates and the residual is `|v|`.
pub fn ellipse_residual(params: &StableParams, sample: &SymbolSample) -> f64 {
    if params.beta == 0.0 {
        return float::abs(sample.v);
    }
    let r = if sample.shifted {
        float::abs(2.0 * float::cos(sample.theta / 2.0))
    } else {
        float::abs(2.0 * float::sin(sample.theta / 2.0))
    };
    let rhs = float::powf(r, 2.0 * params.alpha);
    let vb = sample.v / params.beta;
    float::abs(sample.u * sample.u + vb * vb - rhs)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Minimal period of the symbol for a rational exponent `α = p/q ∈ (1, 2]`.
///
/// The factor `|2 sin(θ/2)|^α` has period 2π and the phase factor period
/// `4π/(2-α)`; the product is periodic only when `n₁(1 - α/2)` is an integer,
/// giving `n₁ = 2q / gcd(2q - p, 2q)` and `T = 2π n₁`.
pub fn symbol_period(p: u64, q: u64) -> Result<(u64, f64)> {
    if p == 0 || q == 0 || gcd(p, q) != 1 {
        return Err(Error::Domain("symbol_period requires coprime positive p, q"));
    }
    if p <= q || p > 2 * q {
        return Err(Error::Domain("symbol_period requires 1 < p/q <= 2"));
    }
    let n1 = 2 * q / gcd(2 * q - p, 2 * q);
    Ok((n1, 2.0 * PI * n1 as f64))
}

/// Partial coefficient sums against the analytic Wiener and Besov bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientBounds {
    pub wiener_partial: f64,
    pub wiener_bound: f64,
    pub besov_partial: f64,
    pub besov_bound: f64,
}

/// Summability checks placing the symbol in the Wiener algebra and the Besov
/// space B₂^{1/2}:
///
/// ```text
/// wiener_partial = Σ_{|k| ≤ N} |f_k|          ≤ 3 K_α α / |cos(πα/2)|
/// besov_partial  = Σ_{|k| ≤ N} (|k|+1) |f_k|² ≤ (4K_α²/cos²(πα/2)) (α(3α/4−1) + 1 + 16/(9π))
/// ```
///
/// The coefficients carry the normalization `f_k = (K_α/|cos(πα/2)|) m_k`
/// with the grid spacing fixed at 1, matching the bounds (which contain no
/// ε). Both partial-sum sequences are Cauchy; the Wiener sum converges to
/// `2 K_α α / |cos(πα/2)|` independent of β.
pub fn wiener_besov_check(params: &StableParams, n_terms: usize) -> Result<CoefficientBounds> {
    let alpha = params.alpha;
    let beta = params.beta;
    let s = params.k_alpha / float::abs(float::cos(PI * alpha / 2.0));

    let w = weights(alpha, n_terms + 1)?;
    let w = w.values();

    let mut wiener = KahanSum::new();
    let mut besov = KahanSum::new();
    let m0 = alpha;
    wiener.add(m0);
    besov.add(m0 * m0);
    for k in 1..=n_terms {
        let (plus, minus) = if k == 1 {
            (
                -0.5 * ((1.0 - beta) * w[0] + (1.0 + beta) * w[2]),
                -0.5 * ((1.0 + beta) * w[0] + (1.0 - beta) * w[2]),
            )
        } else {
            (-0.5 * (1.0 + beta) * w[k + 1], -0.5 * (1.0 - beta) * w[k + 1])
        };
        wiener.add(float::abs(plus) + float::abs(minus));
        besov.add((k as f64 + 1.0) * (plus * plus + minus * minus));
    }

    let wiener_bound = 3.0 * params.k_alpha * alpha / float::abs(float::cos(PI * alpha / 2.0));
    let cos2 = float::cos(PI * alpha / 2.0) * float::cos(PI * alpha / 2.0);
    let besov_bound = 4.0 * params.k_alpha * params.k_alpha / cos2
        * (alpha * (0.75 * alpha - 1.0) + 1.0 + 16.0 / (9.0 * PI));

    Ok(CoefficientBounds {
        wiener_partial: s * wiener.value(),
        wiener_bound,
        besov_partial: s * s * besov.value(),
        besov_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dimless(alpha: f64, beta: f64, n: usize) -> StableParams {
        StableParams::dimensionless(alpha, beta, n).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(StableParams::new(1.0, 0.0, 1.0, 1.0, 4).is_err());
        assert!(StableParams::new(1.5, 1.5, 1.0, 1.0, 4).is_err());
        assert!(StableParams::new(1.5, 0.0, 0.0, 1.0, 4).is_err());
        assert!(StableParams::new(1.5, 0.0, 1.0, -1.0, 4).is_err());
        assert!(StableParams::new(1.5, 0.0, 1.0, 1.0, 0).is_err());
        let p = StableParams::new(1.5, -1.0, 2.0, 10.0, 4).unwrap();
        assert_eq!(p.epsilon(), 2.0);
        assert_eq!(p.k_plus(), 0.0);
        assert_eq!(p.k_minus(), 2.0);
    }

    #[test]
    fn scale_at_gaussian_endpoint() {
        // |cos(π)| = 1, so scale = K/ε²
        let p = StableParams::new(2.0, 0.0, 3.0, 10.0, 4).unwrap();
        assert!((p.scale() - 3.0 / 4.0).abs() < 1e-14);
    }

    #[test]
    fn assemble_gaussian_is_the_laplacian_stencil() {
        let op = assemble(&dimless(2.0, 0.0, 4)).unwrap();
        assert_eq!(op.kernel(), &[0.0, 0.0, -1.0, 2.0, -1.0, 0.0, 0.0]);
        let tri = tridiagonal_laplacian(4);
        assert_eq!(op.kernel(), tri.kernel());
        assert_eq!(op.to_dense(), tri.to_dense());
        assert_eq!(tri.scale(), 1.0);
        assert_eq!(tri.trace(), 8.0);
    }

    #[test]
    fn assemble_three_halves_kernel() {
        let op = assemble(&dimless(1.5, 0.0, 3)).unwrap();
        assert_eq!(op.kernel_at(0), 1.5);
        assert!((op.kernel_at(1) + 0.6875).abs() < 1e-15);
        assert!((op.kernel_at(-1) + 0.6875).abs() < 1e-15);
        assert!((op.kernel_at(2) + 0.03125).abs() < 1e-15);
        assert_eq!(op.kernel_at(3), 0.0); // outside band
        assert_eq!(op.kernel_at(1), op.kernel_at(-1)); // β = 0 symmetric, bitwise
    }

    #[test]
    fn assemble_one_sided_beta() {
        // β = 1: lower bands carry -w_{k+1}, upper far bands vanish
        let w = weights(1.5, 4).unwrap();
        let w = w.values();
        let op = assemble(&dimless(1.5, 1.0, 4)).unwrap();
        assert_eq!(op.kernel_at(-1), -w[0]);
        assert_eq!(op.kernel_at(-2), 0.0);
        assert_eq!(op.kernel_at(-3), 0.0);
        for k in 1..4 {
            assert!((op.kernel_at(k as isize) + w[k + 1]).abs() < 1e-15);
        }
    }

    #[test]
    fn dense_layout_is_toeplitz() {
        let op = assemble(&dimless(1.5, 0.3, 5)).unwrap();
        let m = op.to_dense();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(m.get(i, j), op.kernel_at(i as isize - j as isize));
            }
        }
    }

    #[test]
    fn kernel_sum_is_minus_weight_partial_sum() {
        // Σ_{|k| ≤ n-1} m_k = -S_n, the symbol's approach to its zero at θ=0
        for &n in &[2usize, 5, 20, 100] {
            let op = assemble(&dimless(1.5, 0.4, n)).unwrap();
            let total: f64 = op.kernel().iter().sum();
            let s = glweights::weight_partial_sum(1.5, n).unwrap();
            assert!((total + s).abs() < 1e-12, "n={n}: {total} vs {}", -s);
        }
    }

    #[test]
    fn symbol_closed_reference_points() {
        let p = dimless(1.5, 0.0, 8);
        let z = symbol_closed(&p, 0.0, false);
        assert_eq!((z.u, z.v), (0.0, 0.0));

        let s = symbol_closed(&p, PI, false);
        assert!((s.u - 2f64.powf(1.5)).abs() < 1e-14);
        assert_eq!(s.v, 0.0);

        let g = dimless(2.0, 0.0, 8);
        for &theta in &[0.3, 1.0, 2.5, 5.0] {
            let s = symbol_closed(&g, theta, false);
            let want = (2.0 * (theta / 2.0).sin()).powi(2);
            assert!((s.u - want).abs() < 1e-13);
        }
    }

    #[test]
    fn shifted_symbol_is_translated_unshifted() {
        let p = dimless(1.4, 0.7, 8);
        for &theta in &[-2.0, -0.5, 0.4, 2.9] {
            let sh = symbol_closed(&p, theta, true);
            let un = symbol_closed(&p, theta + PI, false);
            assert!((sh.u - un.u).abs() < 1e-12);
            assert!((sh.v - un.v).abs() < 1e-12);
        }
    }

    #[test]
    fn series_truncates_at_gaussian_exponent() {
        let p = dimless(2.0, 0.0, 8);
        let s = symbol_series(&p, PI / 2.0, 3).unwrap();
        let c = symbol_closed(&p, PI / 2.0, false);
        assert!((s.u - c.u).abs() < 1e-15);
        assert_eq!(s.v, 0.0);
    }

    #[test]
    fn series_partial_at_zero_is_minus_tail_sum() {
        let p = dimless(1.5, 0.0, 8);
        for &terms in &[1usize, 10, 100, 1000] {
            let s = symbol_series(&p, 0.0, terms).unwrap();
            let tail = glweights::weight_partial_sum(1.5, terms + 1).unwrap();
            assert!((s.u + tail).abs() < 1e-13, "terms={terms}");
        }
    }

    #[test]
    fn series_approaches_closed_form() {
        let p = dimless(1.5, 0.0, 8);
        let closed = symbol_closed(&p, PI / 3.0, false);
        let series = symbol_series(&p, PI / 3.0, 100_000).unwrap();
        assert!((series.u - closed.u).abs() < 1e-6);
    }

    #[test]
    fn curve_satisfies_ellipse_relation() {
        let p = dimless(1.5, 0.8, 200);
        let samples = symbol_curve(&p, 200).unwrap();
        assert_eq!(samples.len(), 200);
        let max_res = samples
            .iter()
            .map(|s| ellipse_residual(&p, s))
            .fold(0.0f64, f64::max);
        assert!(max_res < 1e-10, "max residual {max_res}");
    }

    #[test]
    fn curve_symmetric_law_stays_real() {
        let p = dimless(2.0, 0.0, 4);
        for s in symbol_curve(&p, 4).unwrap() {
            assert_eq!(s.v, 0.0);
        }
        assert!(symbol_curve(&p, 1).is_err());
    }

    #[test]
    fn unshifted_u_positive_inside_period() {
        for &alpha in &[1.2, 1.5, 1.8] {
            let p = dimless(alpha, 0.0, 8);
            for j in 1..1000 {
                let theta = 2.0 * PI * j as f64 / 1000.0;
                let s = symbol_closed(&p, theta, false);
                assert!(s.u > 0.0, "u({theta}) = {} at alpha={alpha}", s.u);
            }
        }
    }

    #[test]
    fn period_examples() {
        assert_eq!(symbol_period(3, 2).unwrap(), (4, 8.0 * PI));
        assert_eq!(symbol_period(4, 3).unwrap(), (3, 6.0 * PI));
        assert_eq!(symbol_period(2, 1).unwrap(), (1, 2.0 * PI));
        assert!(symbol_period(1, 1).is_err());
        assert!(symbol_period(5, 2).is_err());
        assert!(symbol_period(6, 4).is_err()); // not coprime
    }

    #[test]
    fn period_confirmed_by_grid_scan() {
        let (n1, t) = symbol_period(3, 2).unwrap();
        assert_eq!(n1, 4);
        let p = dimless(1.5, 0.0, 8);
        let g = |theta: f64| symbol_closed(&p, theta, false).u;
        let mut max_res = 0.0f64;
        for j in 1..=1000 {
            let theta = 2.0 * PI * j as f64 / 1001.0;
            max_res = max_res.max((g(theta) - g(theta + t)).abs());
        }
        assert!(max_res < 1e-12, "residual over one period: {max_res}");
        // no smaller multiple of 2π works
        for m in 1..4u64 {
            let t_bad = 2.0 * PI * m as f64;
            let mut worst = 0.0f64;
            for j in 1..=200 {
                let theta = 2.0 * PI * j as f64 / 201.0;
                worst = worst.max((g(theta) - g(theta + t_bad)).abs());
            }
            assert!(worst > 0.1, "2π·{m} must not be a period");
        }
    }

    #[test]
    fn wiener_besov_gaussian() {
        let p = dimless(2.0, 0.0, 8);
        let b = wiener_besov_check(&p, 100).unwrap();
        assert!((b.wiener_partial - 4.0).abs() < 1e-12);
        assert!((b.wiener_bound - 6.0).abs() < 1e-12);
        assert!((b.besov_partial - 8.0).abs() < 1e-12);
        assert!(b.wiener_partial <= b.wiener_bound);
        assert!(b.besov_partial <= b.besov_bound);
    }

    #[test]
    fn wiener_besov_superdiffusive() {
        let p = dimless(1.5, 0.0, 8);
        let b = wiener_besov_check(&p, 10_000).unwrap();
        assert!(b.wiener_partial <= b.wiener_bound);
        assert!(b.besov_partial <= b.besov_bound);
        // the Wiener sum converges to 2αK/|cos(πα/2)| regardless of β
        let limit = 2.0 * 1.5 / (PI * 0.75).cos().abs();
        assert!((b.wiener_partial - limit).abs() < 1e-4);

        // Cauchy: pushing the cutoff changes the Besov sum imperceptibly
        let b2 = wiener_besov_check(&p, 20_000).unwrap();
        assert!((b2.besov_partial - b.besov_partial).abs() < 1e-10);

        let skewed = wiener_besov_check(&dimless(1.5, 0.9, 8), 10_000).unwrap();
        assert!((skewed.wiener_partial - b.wiener_partial).abs() < 1e-12);
        assert!(skewed.besov_partial <= skewed.besov_bound);
    }
}
