//! Uncertainty-principle functionals on sampled signals and spectra.
//!
//! For decay rates `alpha` (space) and `beta` (frequency) the sign of
//! `alpha beta - pi^2` decides everything: above `pi^2` only the zero
//! signal satisfies both decay conditions, at `pi^2` only quaternion
//! multiples of `e^{-alpha |x|^2}`, below it infinitely many functions do.
//!
//! Improper integrals over `R^2` cannot be evaluated on a finite window.
//! Every integral here is a Riemann sum over the lattice, paired with
//! boundary-ring diagnostics: a positive integrand that does not decay
//! towards the window edge is flagged as divergent, and
//! [`miyachi_nested`] compares nested windows of one spectrum.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::analytic::AnalyticSignal;
use crate::error::{Error, Result};
use crate::field::{Domain, QField, Samples, SpectrumField};

/// Relative half-width of the band around `pi^2` classified as critical.
pub const CRITICAL_BAND: f64 = 1e-12;

/// Relative slack when comparing ring averages.
const RING_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `alpha beta > pi^2`.
    Supercritical,
    /// `alpha beta = pi^2`.
    Critical,
    /// `alpha beta < pi^2`.
    Subcritical,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Supercritical => "supercritical",
            Regime::Critical => "critical",
            Regime::Subcritical => "subcritical",
        }
    }

    /// What the decay conditions force in this regime.
    pub fn conclusion(self) -> &'static str {
        match self {
            Regime::Supercritical => "f = 0 a.e.",
            Regime::Critical => "f is a constant quaternion multiple of the Gaussian e^{-alpha|x|^2}",
            Regime::Subcritical => "infinitely many functions satisfy both conditions",
        }
    }
}

impl core::fmt::Display for Regime {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_positive(v: f64, what: &'static str) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::InvalidParameter(what))
    }
}

pub fn classify(alpha: f64, beta: f64) -> Result<Regime> {
    check_positive(alpha, "alpha must be positive")?;
    check_positive(beta, "beta must be positive")?;
    let critical = PI * PI;
    let product = alpha * beta;
    Ok(if libm::fabs(product - critical) <= CRITICAL_BAND * critical {
        Regime::Critical
    } else if product > critical {
        Regime::Supercritical
    } else {
        Regime::Subcritical
    })
}

/// Decay rates, Miyachi threshold and Cowling-Price exponents.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UpParams {
    pub alpha: f64,
    pub beta: f64,
    pub rho: f64,
    pub p: f64,
    pub q: f64,
}

impl UpParams {
    pub fn new(alpha: f64, beta: f64, rho: f64, p: f64, q: f64) -> Result<Self> {
        check_positive(alpha, "alpha must be positive")?;
        check_positive(beta, "beta must be positive")?;
        check_positive(rho, "rho must be positive")?;
        for e in [p, q] {
            if e.is_nan() || e < 1.0 {
                return Err(Error::InvalidExponent);
            }
        }
        if p.is_infinite() && q.is_infinite() {
            return Err(Error::InfiniteExponents);
        }
        Ok(UpParams { alpha, beta, rho, p, q })
    }

    pub fn regime(&self) -> Regime {
        // alpha and beta were validated at construction
        classify(self.alpha, self.beta).unwrap_or(Regime::Subcritical)
    }
}

/// Centered index window `[c - w, c + w)` on each axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Window {
    lo1: usize,
    hi1: usize,
    lo2: usize,
    hi2: usize,
}

impl Window {
    fn full<D: Domain>(s: &Samples<D>) -> Self {
        Window { lo1: 0, hi1: s.grid().n1(), lo2: 0, hi2: s.grid().n2() }
    }

    fn centered<D: Domain>(s: &Samples<D>, w1: usize, w2: usize) -> Self {
        let (c1, c2) = (s.grid().n1() / 2, s.grid().n2() / 2);
        Window { lo1: c1 - w1, hi1: c1 + w1, lo2: c2 - w2, hi2: c2 + w2 }
    }

    /// 0 on the outermost ring, 1 on the next one, larger inside.
    fn depth(&self, m1: usize, m2: usize) -> usize {
        (m1 - self.lo1).min(self.hi1 - 1 - m1).min(m2 - self.lo2).min(self.hi2 - 1 - m2)
    }
}

/// Sums of a nonnegative integrand over a window and its two outer rings.
#[derive(Clone, Copy, Debug, Default)]
struct RingStats {
    total: f64,
    outer_sum: f64,
    outer_mean: f64,
    inner_mean: f64,
    outer_max: f64,
    inner_max: f64,
}

fn ring_stats<D, F>(s: &Samples<D>, window: Window, mut integrand: F) -> RingStats
where
    D: Domain,
    F: FnMut(f64, f64) -> f64,
{
    let mut st = RingStats::default();
    let (mut n_outer, mut n_inner) = (0usize, 0usize);
    for m1 in window.lo1..window.hi1 {
        for m2 in window.lo2..window.hi2 {
            let (a, b) = s.node(m1, m2);
            let v = integrand(a * a + b * b, s.get(m1, m2).modulus());
            st.total += v;
            match window.depth(m1, m2) {
                0 => {
                    st.outer_sum += v;
                    st.outer_max = st.outer_max.max(v);
                    n_outer += 1;
                }
                1 => {
                    st.inner_mean += v;
                    st.inner_max = st.inner_max.max(v);
                    n_inner += 1;
                }
                _ => {}
            }
        }
    }
    st.outer_mean = st.outer_sum / n_outer.max(1) as f64;
    st.inner_mean /= n_inner.max(1) as f64;
    st
}

/// A positive integrand that is not decreasing towards the edge.
fn integral_diverges(st: &RingStats) -> bool {
    st.outer_mean > 0.0 && st.outer_mean >= st.inner_mean * (1.0 - RING_TOLERANCE)
}

/// A weighted modulus still growing at the edge.
fn sup_grows(st: &RingStats) -> bool {
    st.outer_max > 0.0 && st.outer_max > st.inner_max * (1.0 + RING_TOLERANCE)
}

/// Windowed integral with boundary diagnostics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WindowValue {
    /// Riemann sum over the window; may be `+inf`.
    pub value: f64,
    /// Contribution of the outermost ring of nodes.
    pub tail_estimate: f64,
    /// Integrand positive and non-decreasing at the window edge.
    pub divergent: bool,
}

/// Moduli below the smallest normal binary64 carry too few significant
/// bits to be amplified by a Gaussian weight; they count as zero.
#[inline]
fn negligible(modulus: f64) -> bool {
    modulus < f64::MIN_POSITIVE
}

/// `log+(|F(y)| e^{beta |y|^2} / rho)`, computed in the log domain so the
/// Gaussian weight never overflows. `log+` is zero for arguments `<= 1`,
/// including zero modulus.
#[inline]
fn log_plus_weighted(s: f64, modulus: f64, beta: f64, ln_rho: f64) -> f64 {
    if negligible(modulus) {
        return 0.0;
    }
    let t = libm::log(modulus) + beta * s - ln_rho;
    if t > 0.0 {
        t
    } else {
        0.0
    }
}

fn miyachi_window(spectrum: &SpectrumField, beta: f64, rho: f64, window: Window) -> Result<WindowValue> {
    check_positive(beta, "beta must be positive")?;
    check_positive(rho, "rho must be positive")?;
    let ln_rho = libm::log(rho);
    let st = ring_stats(spectrum, window, |s, m| log_plus_weighted(s, m, beta, ln_rho));
    let cell = spectrum.cell();
    Ok(WindowValue { value: st.total * cell, tail_estimate: st.outer_sum * cell, divergent: integral_diverges(&st) })
}

/// `int log+(|F(y)| e^{beta |y|^2} / rho) dy` over the whole frequency lattice.
pub fn miyachi_functional(spectrum: &SpectrumField, beta: f64, rho: f64) -> Result<WindowValue> {
    miyachi_window(spectrum, beta, rho, Window::full(spectrum))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NestedPoint {
    /// Half-width of the window along the first frequency axis.
    pub extent: f64,
    pub value: WindowValue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NestedVerdict {
    /// Strictly increasing and still growing at the outermost edge.
    Diverging,
    /// Successive increments shrink at least tenfold.
    Stabilizing,
    Inconclusive,
}

impl NestedVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            NestedVerdict::Diverging => "diverging",
            NestedVerdict::Stabilizing => "stabilizing",
            NestedVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NestedSeries {
    pub points: Vec<NestedPoint>,
    pub verdict: NestedVerdict,
}

/// Required shrink factor between successive nested increments.
pub const STABILIZING_RATIO: f64 = 0.1;

/// Miyachi functional on `levels` centered windows of one spectrum whose
/// half-widths double from level to level, the last being the full lattice.
pub fn miyachi_nested(spectrum: &SpectrumField, beta: f64, rho: f64, levels: usize) -> Result<NestedSeries> {
    if levels == 0 {
        return Err(Error::InvalidParameter("at least one nesting level"));
    }
    let grid = spectrum.grid();
    let shift = (levels - 1) as u32;
    let (h1, h2) = (grid.n1() / 2, grid.n2() / 2);
    if shift >= usize::BITS || (h1 >> shift) < 2 || (h2 >> shift) < 2 {
        return Err(Error::InvalidParameter("too many nesting levels for this grid"));
    }
    let mut points = Vec::with_capacity(levels);
    for t in 0..levels {
        let s = (levels - 1 - t) as u32;
        let (w1, w2) = (h1 >> s, h2 >> s);
        let value = miyachi_window(spectrum, beta, rho, Window::centered(spectrum, w1, w2))?;
        points.push(NestedPoint { extent: w1 as f64 * grid.freq_spacing1(), value });
    }
    let verdict = nested_verdict(&points);
    Ok(NestedSeries { points, verdict })
}

fn nested_verdict(points: &[NestedPoint]) -> NestedVerdict {
    let values: Vec<f64> = points.iter().map(|p| p.value.value).collect();
    let last_divergent = points.last().is_some_and(|p| p.value.divergent);
    let increasing = values.len() >= 2 && values.windows(2).all(|w| w[1] > w[0]);
    if increasing && last_divergent {
        return NestedVerdict::Diverging;
    }
    if values.len() < 3 || values.iter().any(|v| !v.is_finite()) || last_divergent {
        return NestedVerdict::Inconclusive;
    }
    let diffs: Vec<f64> = values.windows(2).map(|w| libm::fabs(w[1] - w[0])).collect();
    if diffs.windows(2).all(|d| d[1] <= STABILIZING_RATIO * d[0]) {
        NestedVerdict::Stabilizing
    } else {
        NestedVerdict::Inconclusive
    }
}

/// Smallest constants with `|f(x)| <= C e^{-alpha|x|^2}` and
/// `|F(y)| <= C' e^{-beta|y|^2}` on the sampled windows.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HardyReport {
    pub c_spatial: f64,
    pub c_frequency: f64,
    /// Weighted modulus still increasing at the window edge.
    pub spatial_growing: bool,
    pub frequency_growing: bool,
}

fn weighted_modulus(s: f64, modulus: f64, rate: f64) -> f64 {
    if negligible(modulus) {
        0.0
    } else {
        libm::exp(libm::log(modulus) + rate * s)
    }
}

pub fn hardy_check(f: &QField, spectrum: &SpectrumField, alpha: f64, beta: f64) -> Result<HardyReport> {
    let c_spatial = f.weighted_sup(alpha)?;
    let c_frequency = spectrum.weighted_sup(beta)?;
    let sp = ring_stats(f, Window::full(f), |s, m| weighted_modulus(s, m, alpha));
    let fr = ring_stats(spectrum, Window::full(spectrum), |s, m| weighted_modulus(s, m, beta));
    Ok(HardyReport { c_spatial, c_frequency, spatial_growing: sup_grows(&sp), frequency_growing: sup_grows(&fr) })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CowlingPriceReport {
    /// `int (|f(x)| e^{alpha|x|^2})^p dx`, or the weighted sup for `p = inf`.
    pub spatial: WindowValue,
    /// `int (|F(y)| e^{beta|y|^2})^q dy`, or the weighted sup for `q = inf`.
    pub frequency: WindowValue,
}

fn weighted_power<D: Domain>(s: &Samples<D>, rate: f64, exponent: f64) -> Result<WindowValue> {
    if exponent.is_infinite() {
        let sup = s.weighted_sup(rate)?;
        let st = ring_stats(s, Window::full(s), |r, m| weighted_modulus(r, m, rate));
        return Ok(WindowValue { value: sup, tail_estimate: st.outer_max, divergent: sup_grows(&st) });
    }
    let st = ring_stats(s, Window::full(s), |r, m| {
        if negligible(m) {
            0.0
        } else {
            libm::exp(exponent * (libm::log(m) + rate * r))
        }
    });
    let cell = s.cell();
    Ok(WindowValue { value: st.total * cell, tail_estimate: st.outer_sum * cell, divergent: integral_diverges(&st) })
}

pub fn cowling_price_check(
    f: &QField,
    spectrum: &SpectrumField,
    alpha: f64,
    beta: f64,
    p: f64,
    q: f64,
) -> Result<CowlingPriceReport> {
    check_positive(alpha, "alpha must be positive")?;
    check_positive(beta, "beta must be positive")?;
    for e in [p, q] {
        if e.is_nan() || e < 1.0 {
            return Err(Error::InvalidExponent);
        }
    }
    if p.is_infinite() && q.is_infinite() {
        return Err(Error::InfiniteExponents);
    }
    Ok(CowlingPriceReport { spatial: weighted_power(f, alpha, p)?, frequency: weighted_power(spectrum, beta, q)? })
}

/// `phi_k(x1) phi_l(x2) e^{-pi gamma |x|^2}` satisfying both decay
/// conditions when `alpha beta < pi^2`.
///
/// The nominal choice is the midpoint of `(alpha/pi, pi/beta)`. Since
/// `phi_k` carries its own `e^{-pi x^2}`, the actual rates are
/// `pi (1 + gamma)` in space and `pi / (1 + gamma)` in frequency, so
/// admissibility needs `alpha/pi - 1 < gamma < pi/beta - 1`. When the
/// nominal midpoint violates that, the midpoint of the admissible interval
/// (clipped at `-1`) is used instead.
pub fn witness_subcritical(alpha: f64, beta: f64, k: u32, l: u32) -> Result<AnalyticSignal> {
    if classify(alpha, beta)? != Regime::Subcritical {
        return Err(Error::NoSubcriticalWitness);
    }
    let nominal = 0.5 * (alpha / PI + PI / beta);
    let lo = (alpha / PI - 1.0).max(-1.0);
    let hi = PI / beta - 1.0;
    let gamma = if nominal > lo && nominal < hi { nominal } else { 0.5 * (lo + hi) };
    AnalyticSignal::hermite(k, l, gamma)
}

/// Everything evaluated for one `(f, F{f}, params)` triple.
#[derive(Clone, Debug, PartialEq)]
pub struct UpReport {
    pub params: UpParams,
    pub regime: Regime,
    pub miyachi: WindowValue,
    /// `Err(WeightOverflow)` when `e^{alpha|x|^2}` or `e^{beta|y|^2}`
    /// leaves binary64 on the window.
    pub hardy: core::result::Result<HardyReport, Error>,
    pub cowling_price: core::result::Result<CowlingPriceReport, Error>,
}

pub fn evaluate(f: &QField, spectrum: &SpectrumField, params: &UpParams) -> Result<UpReport> {
    if f.grid() != spectrum.grid() {
        return Err(Error::GridMismatch);
    }
    Ok(UpReport {
        params: *params,
        regime: params.regime(),
        miyachi: miyachi_functional(spectrum, params.beta, params.rho)?,
        hardy: hardy_check(f, spectrum, params.alpha, params.beta),
        cowling_price: cowling_price_check(f, spectrum, params.alpha, params.beta, params.p, params.q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid2D;
    use crate::quat::Quaternion;

    #[test]
    fn classify_examples() {
        assert_eq!(classify(PI, PI).unwrap(), Regime::Critical);
        assert_eq!(classify(2.0 * PI, PI).unwrap(), Regime::Supercritical);
        assert_eq!(classify(1.0, 1.0).unwrap(), Regime::Subcritical);
        assert!(classify(0.0, 1.0).is_err());
        assert!(classify(1.0, -2.0).is_err());
    }

    #[test]
    fn classify_depends_on_product_only() {
        for c in [0.25, 0.5, 3.0, 7.0] {
            for (a, b) in [(PI, PI), (2.0, 5.0), (1.0, 20.0)] {
                assert_eq!(classify(a * c, b / c).unwrap(), classify(a, b).unwrap());
            }
        }
    }

    fn critical_gaussian_spectrum(grid: &Grid2D, q: Quaternion, alpha: f64) -> SpectrumField {
        AnalyticSignal::gaussian(q, alpha, alpha).unwrap().sample_spectrum(grid).unwrap()
    }

    #[test]
    fn miyachi_of_critical_gaussian() {
        let grid = Grid2D::self_dual(64).unwrap();
        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        let alpha = 2.0;
        let beta = PI * PI / alpha;
        let spec = critical_gaussian_spectrum(&grid, q, alpha);
        let threshold = q.modulus() * PI / alpha;

        let above = miyachi_functional(&spec, beta, threshold * 1.01).unwrap();
        assert_eq!(above.value, 0.0);
        assert!(!above.divergent);
        // at the threshold itself log+ sees (approximately) 1
        assert!(miyachi_functional(&spec, beta, threshold).unwrap().value < 1e-9);

        let rho = threshold / 3.0;
        let below = miyachi_functional(&spec, beta, rho).unwrap();
        let area = grid.len() as f64 * grid.freq_cell_area();
        assert!((below.value - area * libm::log(3.0)).abs() < 1e-9, "{below:?}");
        assert!(below.divergent);
    }

    #[test]
    fn miyachi_is_antitone_in_rho() {
        let grid = Grid2D::self_dual(32).unwrap();
        let spec = AnalyticSignal::hermite(1, 2, 0.2).unwrap().sample_spectrum(&grid).unwrap();
        let mut last = f64::INFINITY;
        for rho in [1e-6, 1e-4, 1e-2, 1.0, 10.0] {
            let v = miyachi_functional(&spec, 1.0, rho).unwrap().value;
            assert!(v <= last);
            last = v;
        }
        let top = spec.iter_nodes().map(|(_, (a, b), q)| q.modulus() * libm::exp(a * a + b * b)).fold(0.0, f64::max);
        assert_eq!(miyachi_functional(&spec, 1.0, top * (1.0 + 1e-12)).unwrap().value, 0.0);
    }

    #[test]
    fn nested_supercritical_probe_diverges() {
        let grid = Grid2D::new(128, 128, 1.0 / 16.0, 1.0 / 16.0).unwrap();
        // spectrum e^{-0.5 |y|^2} probed at beta = 1
        let probe = AnalyticSignal::gaussian(Quaternion::ONE, 2.0 * PI * PI, 2.0 * PI * PI).unwrap();
        let spec = probe.sample_spectrum(&grid).unwrap();
        let series = miyachi_nested(&spec, 1.0, 1.0, 3).unwrap();
        assert_eq!(series.verdict, NestedVerdict::Diverging, "{series:?}");
        assert_eq!(series.points[2].extent, 8.0);
    }

    #[test]
    fn subnormal_tail_does_not_leak() {
        // e^{-pi |y|^2} is subnormal beyond |y| ~ 8.5 on this lattice
        let grid = Grid2D::new(256, 256, 1.0 / 32.0, 1.0 / 32.0).unwrap();
        let spec = critical_gaussian_spectrum(&grid, Quaternion::ONE, PI);
        let series = miyachi_nested(&spec, PI, 1.01, 3).unwrap();
        assert!(series.points.iter().all(|p| p.value.value == 0.0), "{series:?}");
    }

    #[test]
    fn nested_levels_checked() {
        let grid = Grid2D::self_dual(16).unwrap();
        let spec = SpectrumField::zeros(grid);
        assert!(miyachi_nested(&spec, 1.0, 1.0, 3).is_ok());
        assert!(miyachi_nested(&spec, 1.0, 1.0, 4).is_err());
        assert!(miyachi_nested(&spec, 1.0, 1.0, 0).is_err());
    }

    #[test]
    fn witness_examples() {
        match witness_subcritical(1.0, 1.0, 0, 0).unwrap() {
            AnalyticSignal::HermiteGauss { gamma, .. } => {
                assert!((gamma - 0.5 * (1.0 / PI + PI)).abs() < 1e-15);
                assert!((gamma - 1.7299).abs() < 1e-3);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(witness_subcritical(PI, PI, 0, 0), Err(Error::NoSubcriticalWitness));
        assert_eq!(witness_subcritical(4.0, 4.0, 0, 0), Err(Error::NoSubcriticalWitness));
    }

    #[test]
    fn witness_rates_are_admissible() {
        for (alpha, beta) in [(1.0, 1.0), (3.0, 3.0), (0.1, 5.0), (8.0, 0.2), (0.01, 0.01)] {
            let w = witness_subcritical(alpha, beta, 1, 1).unwrap();
            let AnalyticSignal::HermiteGauss { gamma, .. } = w else { panic!() };
            assert!(PI * (1.0 + gamma) > alpha, "({alpha},{beta})");
            assert!(w.envelope().rate > beta, "({alpha},{beta})");
        }
    }

    #[test]
    fn hardy_examples() {
        let grid = Grid2D::self_dual(64).unwrap();
        let alpha = 2.0;
        let beta = PI * PI / alpha;
        let g = AnalyticSignal::gaussian(Quaternion::ONE, alpha, alpha).unwrap();
        let f = g.sample(&grid).unwrap();
        let spec = g.sample_spectrum(&grid).unwrap();
        let h = hardy_check(&f, &spec, alpha, beta).unwrap();
        assert!((h.c_spatial - 1.0).abs() < 1e-12);
        assert!((h.c_frequency - PI / alpha).abs() < 1e-12);
        assert!(!h.spatial_growing && !h.frequency_growing);

        let z = QField::zeros(grid);
        let zs = SpectrumField::zeros(grid);
        let h0 = hardy_check(&z, &zs, alpha, beta).unwrap();
        assert_eq!((h0.c_spatial, h0.c_frequency), (0.0, 0.0));
    }

    #[test]
    fn hardy_flags_slow_frequency_decay() {
        let grid = Grid2D::self_dual(64).unwrap();
        let w = AnalyticSignal::hermite(1, 1, 1.0).unwrap();
        let f = w.sample(&grid).unwrap();
        let spec = w.sample_spectrum(&grid).unwrap();
        let h = hardy_check(&f, &spec, 2.0, 2.0).unwrap();
        assert!(h.c_spatial.is_finite() && !h.spatial_growing);
        assert!(h.frequency_growing, "{h:?}");
    }

    #[test]
    fn cowling_price_examples() {
        let grid = Grid2D::with_extent(128, 4.0).unwrap();
        let alpha = 1.5;
        let beta = 1.0;
        let area = grid.len() as f64 * grid.cell_area();

        let g = AnalyticSignal::gaussian(Quaternion::ONE, alpha, alpha).unwrap();
        let f = g.sample(&grid).unwrap();
        let spec = g.sample_spectrum(&grid).unwrap();
        let cp = cowling_price_check(&f, &spec, alpha, beta, 1.0, 1.0).unwrap();
        assert!((cp.spatial.value - area).abs() < 1e-9);
        assert!(cp.spatial.divergent);

        let g2 = AnalyticSignal::gaussian(Quaternion::ONE, 2.0 * alpha, 2.0 * alpha).unwrap();
        let f2 = g2.sample(&grid).unwrap();
        let cp2 = cowling_price_check(&f2, &spec, alpha, beta, 1.0, 1.0).unwrap();
        assert!((cp2.spatial.value - PI / alpha).abs() < 1e-6);
        assert!(!cp2.spatial.divergent);

        let z = QField::zeros(grid);
        let zs = SpectrumField::zeros(grid);
        let cz = cowling_price_check(&z, &zs, alpha, beta, 2.0, 3.0).unwrap();
        assert_eq!((cz.spatial.value, cz.frequency.value), (0.0, 0.0));

        assert_eq!(
            cowling_price_check(&z, &zs, alpha, beta, f64::INFINITY, f64::INFINITY),
            Err(Error::InfiniteExponents)
        );
        assert!(cowling_price_check(&z, &zs, alpha, beta, f64::INFINITY, 1.0).is_ok());
    }

    #[test]
    fn params_validation() {
        assert!(UpParams::new(1.0, 1.0, 1.0, 1.0, f64::INFINITY).is_ok());
        assert_eq!(UpParams::new(1.0, 1.0, 1.0, f64::INFINITY, f64::INFINITY), Err(Error::InfiniteExponents));
        assert!(UpParams::new(1.0, 1.0, 0.0, 1.0, 1.0).is_err());
        assert_eq!(UpParams::new(1.0, 1.0, 1.0, 0.5, 1.0), Err(Error::InvalidExponent));
    }

    #[test]
    fn evaluate_critical_gaussian() {
        let grid = Grid2D::self_dual(64).unwrap();
        let g = AnalyticSignal::gaussian(Quaternion::ONE, PI, PI).unwrap();
        let f = g.sample(&grid).unwrap();
        let spec = g.sample_spectrum(&grid).unwrap();
        let params = UpParams::new(PI, PI, 1.5, 2.0, 2.0).unwrap();
        let r = evaluate(&f, &spec, &params).unwrap();
        assert_eq!(r.regime, Regime::Critical);
        assert_eq!(r.miyachi.value, 0.0);
        let h = r.hardy.unwrap();
        assert!((h.c_frequency - 1.0).abs() < 1e-12);
    }
}
