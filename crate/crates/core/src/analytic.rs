//! Closed-form signal families: quaternion Gaussians, real polynomials
//! times isotropic Gaussians, and the Hermite-type products
//! `phi_k(x1) phi_l(x2) e^{-pi gamma |x|^2}`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fft::Complex;
use crate::field::{QField, SpectrumField};
use crate::grid::Grid2D;
use crate::hermite;
use crate::quat::Quaternion;

/// Real polynomial in `(x1, x2)` stored in graded order:
/// `c00, c10, c01, c20, c11, c02, ...` (within a total degree, the power of
/// `x1` descends).
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial2 {
    degree: u32,
    coeffs: Vec<f64>,
}

impl Polynomial2 {
    /// Number of coefficients of a graded polynomial of total degree `d`.
    pub fn coeff_count(degree: u32) -> usize {
        let d = degree as usize;
        (d + 1) * (d + 2) / 2
    }

    pub fn new(degree: u32, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != Self::coeff_count(degree) {
            return Err(Error::InvalidParameter("polynomial coefficient count"));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter("polynomial coefficients must be finite"));
        }
        if coeffs.iter().all(|&c| c == 0.0) {
            return Err(Error::InvalidParameter("polynomial must have a nonzero coefficient"));
        }
        Ok(Polynomial2 { degree, coeffs })
    }

    /// Builds from `(power of x1, power of x2, coefficient)` triples.
    pub fn from_terms(terms: &[(u32, u32, f64)]) -> Result<Self> {
        let degree = terms.iter().map(|&(a, b, _)| a + b).max().unwrap_or(0);
        let mut coeffs = vec![0.0; Self::coeff_count(degree)];
        for &(a, b, c) in terms {
            coeffs[Self::slot(a, b)] += c;
        }
        Polynomial2::new(degree, coeffs)
    }

    fn slot(a: u32, b: u32) -> usize {
        let t = (a + b) as usize;
        t * (t + 1) / 2 + (t - a as usize)
    }

    /// Declared degree (length of the coefficient list).
    pub fn declared_degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, a: u32, b: u32) -> f64 {
        if a + b > self.degree {
            return 0.0;
        }
        self.coeffs[Self::slot(a, b)]
    }

    /// `(power of x1, power of x2, coefficient)` in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, f64)> + '_ {
        (0..=self.degree)
            .flat_map(|t| (0..=t).rev().map(move |a| (a, t - a)))
            .zip(&self.coeffs)
            .map(|((a, b), &c)| (a, b, c))
    }

    /// Highest total degree carrying a nonzero coefficient.
    pub fn total_degree(&self) -> u32 {
        self.terms().filter(|t| t.2 != 0.0).map(|(a, b, _)| a + b).max().unwrap_or(0)
    }

    pub fn eval(&self, x1: f64, x2: f64) -> f64 {
        self.terms().map(|(a, b, c)| c * libm::pow(x1, a as f64) * libm::pow(x2, b as f64)).sum()
    }
}

/// Signal descriptor, evaluable pointwise.
#[derive(Clone, Debug, PartialEq)]
pub enum AnalyticSignal {
    /// `q e^{-(alpha1 x1^2 + alpha2 x2^2)}`.
    Gaussian { q: Quaternion, alpha1: f64, alpha2: f64 },
    /// `P(x) e^{-pi gamma |x|^2}` with real `P`.
    PolyGaussian { poly: Polynomial2, gamma: f64 },
    /// `phi_k(x1) phi_l(x2) e^{-pi gamma |x|^2}`. Because `phi_k` already
    /// carries `e^{-pi x^2}`, the total spatial rate is `pi (1 + gamma)`;
    /// `gamma` may therefore be anything above `-1` (`gamma = 0` is the bare
    /// basis function).
    HermiteGauss { k: u32, l: u32, gamma: f64 },
}

/// Degree and Gaussian rate of `Q(xi) e^{-rate |xi|^2}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Envelope {
    pub degree: u32,
    pub rate: f64,
}

/// What [`AnalyticSignal::exact_qft`] can say about the transform.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactTransform {
    /// The transform of a quaternion Gaussian is again one.
    Gaussian(AnalyticSignal),
    /// Only the structure `Q(xi) e^{-rate |xi|^2}` with `deg Q` known.
    Envelope(Envelope),
}

fn positive(v: f64, what: &'static str) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::InvalidParameter(what))
    }
}

impl AnalyticSignal {
    pub fn gaussian(q: Quaternion, alpha1: f64, alpha2: f64) -> Result<Self> {
        if !q.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(AnalyticSignal::Gaussian {
            q,
            alpha1: positive(alpha1, "alpha1 must be positive")?,
            alpha2: positive(alpha2, "alpha2 must be positive")?,
        })
    }

    pub fn poly_gaussian(poly: Polynomial2, gamma: f64) -> Result<Self> {
        Ok(AnalyticSignal::PolyGaussian { poly, gamma: positive(gamma, "gamma must be positive")? })
    }

    pub fn hermite(k: u32, l: u32, gamma: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > -1.0) {
            return Err(Error::InvalidParameter("gamma must exceed -1"));
        }
        Ok(AnalyticSignal::HermiteGauss { k, l, gamma })
    }

    pub fn eval(&self, x1: f64, x2: f64) -> Quaternion {
        let r2 = x1 * x1 + x2 * x2;
        match self {
            AnalyticSignal::Gaussian { q, alpha1, alpha2 } => *q * libm::exp(-(alpha1 * x1 * x1 + alpha2 * x2 * x2)),
            AnalyticSignal::PolyGaussian { poly, gamma } => {
                Quaternion::from_real(poly.eval(x1, x2) * libm::exp(-PI * gamma * r2))
            }
            AnalyticSignal::HermiteGauss { k, l, gamma } => {
                let poly = hermite::prefactor(*k, x1) * hermite::prefactor(*l, x2);
                Quaternion::from_real(poly * libm::exp(-PI * (1.0 + gamma) * r2))
            }
        }
    }

    /// Pointwise evaluation on every spatial node.
    pub fn sample(&self, grid: &Grid2D) -> Result<QField> {
        QField::from_fn(*grid, |a, b| self.eval(a, b))
    }

    /// Frequency-side envelope `deg Q` and decay rate.
    pub fn envelope(&self) -> Envelope {
        match self {
            AnalyticSignal::Gaussian { alpha1, alpha2, .. } => {
                Envelope { degree: 0, rate: (PI * PI / alpha1).min(PI * PI / alpha2) }
            }
            AnalyticSignal::PolyGaussian { poly, gamma } => Envelope { degree: poly.total_degree(), rate: PI / gamma },
            AnalyticSignal::HermiteGauss { k, l, gamma } => Envelope { degree: k + l, rate: PI / (1.0 + gamma) },
        }
    }

    /// Closed form of the transform where one exists: for a Gaussian
    ///
    /// ```text
    /// F(xi) = q pi / sqrt(alpha1 alpha2) e^{-(pi^2/alpha1) xi1^2 - (pi^2/alpha2) xi2^2}
    /// ```
    ///
    /// returned as a new Gaussian descriptor; otherwise the envelope only.
    pub fn exact_qft(&self) -> ExactTransform {
        match self {
            AnalyticSignal::Gaussian { q, alpha1, alpha2 } => {
                let amplitude = PI / libm::sqrt(alpha1 * alpha2);
                ExactTransform::Gaussian(AnalyticSignal::Gaussian {
                    q: *q * amplitude,
                    alpha1: PI * PI / alpha1,
                    alpha2: PI * PI / alpha2,
                })
            }
            _ => ExactTransform::Envelope(self.envelope()),
        }
    }

    /// Exact transform sampled on the frequency nodes of `grid`.
    ///
    /// Gaussians use the closed form above. The polynomial families are
    /// transformed term by term: each monomial `x1^a x2^b` times the
    /// isotropic Gaussian is separable, so its transform is an `i`-complex
    /// function of `xi1` times a `j`-complex function of `xi2`, each obtained
    /// from `F{x g} = (i / 2 pi) d/dxi F{g}`. No aliasing or round-off from
    /// a discrete transform enters, which keeps `|F| e^{beta |xi|^2}`
    /// meaningful far into the tails.
    pub fn sample_spectrum(&self, grid: &Grid2D) -> Result<SpectrumField> {
        match self {
            AnalyticSignal::Gaussian { .. } => match self.exact_qft() {
                ExactTransform::Gaussian(g) => SpectrumField::from_fn(*grid, |a, b| g.eval(a, b)),
                ExactTransform::Envelope(_) => unreachable!(),
            },
            AnalyticSignal::PolyGaussian { poly, gamma } => {
                let terms: Vec<_> = poly.terms().filter(|t| t.2 != 0.0).collect();
                let max_a = terms.iter().map(|t| t.0).max().unwrap_or(0);
                let max_b = terms.iter().map(|t| t.1).max().unwrap_or(0);
                let axis1 = MonomialTransforms::new(max_a, *gamma);
                let axis2 = MonomialTransforms::new(max_b, *gamma);
                SpectrumField::from_fn(*grid, |xi1, xi2| {
                    let t1 = axis1.eval_all(xi1);
                    let t2 = axis2.eval_all(xi2);
                    terms
                        .iter()
                        .fold(Quaternion::ZERO, |acc, &(a, b, c)| acc + ij_product(t1[a as usize], t2[b as usize]) * c)
                })
            }
            AnalyticSignal::HermiteGauss { k, l, gamma } => {
                let c = 1.0 + gamma;
                let pk = hermite::prefactor_coeffs(*k);
                let pl = hermite::prefactor_coeffs(*l);
                let axis1 = MonomialTransforms::new(*k, c);
                let axis2 = MonomialTransforms::new(*l, c);
                SpectrumField::from_fn(*grid, |xi1, xi2| {
                    let a = axis1.combine(&pk, xi1);
                    let b = axis2.combine(&pl, xi2);
                    ij_product(a, b)
                })
            }
        }
    }
}

/// `(a.re + i a.im)(b.re + j b.im)` as a quaternion.
#[inline]
fn ij_product(a: Complex, b: Complex) -> Quaternion {
    Quaternion::new(a.re * b.re, a.im * b.re, a.re * b.im, a.im * b.im)
}

/// 1D transforms `T_a(xi) = int x^a e^{-pi c x^2} e^{-2 pi u xi x} dx`
/// for `a <= max`, with `u` the complex unit of the axis. Each is
/// `c^{-1/2} R_a(xi) e^{-pi xi^2 / c}` where `R_0 = 1` and
/// `R_{a+1} = (u / 2 pi) R_a' - (u / c) xi R_a`.
struct MonomialTransforms {
    /// Coefficients of `R_a`, lowest degree first.
    polys: Vec<Vec<Complex>>,
    c: f64,
}

impl MonomialTransforms {
    fn new(max: u32, c: f64) -> Self {
        let mut polys: Vec<Vec<Complex>> = vec![vec![Complex::new(1.0, 0.0)]];
        for _ in 0..max {
            let r = polys.last().unwrap();
            let mut next = vec![Complex::ZERO; r.len() + 1];
            // (u / 2 pi) R'
            for d in 1..r.len() {
                let v = r[d].scale(d as f64 / (2.0 * PI));
                next[d - 1] = next[d - 1] + times_unit(v);
            }
            // -(u / c) xi R
            for (d, v) in r.iter().enumerate() {
                next[d + 1] = next[d + 1] - times_unit(v.scale(1.0 / c));
            }
            polys.push(next);
        }
        MonomialTransforms { polys, c }
    }

    fn gauss(&self, xi: f64) -> f64 {
        libm::exp(-PI * xi * xi / self.c) / libm::sqrt(self.c)
    }

    fn eval_all(&self, xi: f64) -> Vec<Complex> {
        let g = self.gauss(xi);
        self.polys.iter().map(|p| horner(p, xi).scale(g)).collect()
    }

    /// Transform of `sum_m coeffs[m] x^m e^{-pi c x^2}`.
    fn combine(&self, coeffs: &[f64], xi: f64) -> Complex {
        let g = self.gauss(xi);
        coeffs.iter().zip(&self.polys).fold(Complex::ZERO, |acc, (&w, p)| acc + horner(p, xi).scale(w)).scale(g)
    }
}

#[inline]
fn times_unit(v: Complex) -> Complex {
    Complex::new(-v.im, v.re)
}

fn horner(p: &[Complex], x: f64) -> Complex {
    p.iter().rev().fold(Complex::ZERO, |acc, &c| acc.scale(x) + c)
}

/// Result of [`verify_envelope`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnvelopeFit {
    pub expected_rate: f64,
    pub fitted_rate: f64,
    pub relative_error: f64,
    /// RMS residual of the log-modulus fit.
    pub residual: f64,
    /// Radial bins that entered the fit.
    pub bins_used: usize,
}

impl EnvelopeFit {
    pub fn within(&self, tolerance: f64) -> bool {
        self.relative_error <= tolerance
    }
}

/// Smallest modulus treated as signal rather than underflow.
pub const ENVELOPE_FLOOR: f64 = 1e-12;
const ENVELOPE_BINS: usize = 16;
const MIN_BINS: usize = 4;

/// Fits `log |F(xi)| ~ c - rate |xi|^2 + degree log |xi|` over the outer
/// part of the usable spectrum.
///
/// Usable nodes have modulus above [`ENVELOPE_FLOOR`] and lie inside the
/// largest centered disc the lattice covers. The fit runs over
/// `|xi|^2 in [s_max / 4, s_max]`, split into radial bins; each bin
/// contributes its largest modulus, so zeros of the unknown polynomial
/// factor do not drag the fit down.
pub fn verify_envelope(spectrum: &SpectrumField, rate: f64, degree: u32) -> Result<EnvelopeFit> {
    let rate = positive(rate, "rate must be positive")?;
    let grid = spectrum.grid();
    let edge1 = ((grid.n1() / 2 - 1) as f64) * grid.freq_spacing1();
    let edge2 = ((grid.n2() / 2 - 1) as f64) * grid.freq_spacing2();
    let disc = edge1.min(edge2);
    let disc2 = disc * disc;

    let usable: Vec<(f64, f64)> = spectrum
        .iter_nodes()
        .filter_map(|(_, (a, b), q)| {
            let s = a * a + b * b;
            let m = q.modulus();
            (s > 0.0 && s <= disc2 && m > ENVELOPE_FLOOR).then_some((s, m))
        })
        .collect();
    let s_hi = usable.iter().map(|u| u.0).fold(0.0, f64::max);
    if usable.is_empty() || s_hi <= 0.0 {
        return Err(Error::SpectrumUnderflow);
    }
    let s_lo = s_hi / 4.0;
    let width = (s_hi - s_lo) / ENVELOPE_BINS as f64;

    let mut bins: [Option<(f64, f64)>; ENVELOPE_BINS] = [None; ENVELOPE_BINS];
    for &(s, m) in usable.iter().filter(|u| u.0 >= s_lo) {
        let b = (((s - s_lo) / width) as usize).min(ENVELOPE_BINS - 1);
        if bins[b].is_none_or(|(_, best)| m > best) {
            bins[b] = Some((s, m));
        }
    }
    let points: Vec<(f64, f64)> =
        bins.iter().flatten().map(|&(s, m)| (s, libm::log(m) - 0.5 * degree as f64 * libm::log(s))).collect();
    if points.len() < MIN_BINS {
        return Err(Error::SpectrumUnderflow);
    }

    let n = points.len() as f64;
    let mean_s = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_s) * (p.0 - mean_s)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_s) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return Err(Error::SpectrumUnderflow);
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_s;
    let residual = libm::sqrt(
        points
            .iter()
            .map(|p| {
                let r = p.1 - intercept - slope * p.0;
                r * r
            })
            .sum::<f64>()
            / n,
    );
    let fitted_rate = -slope;
    Ok(EnvelopeFit {
        expected_rate: rate,
        fitted_rate,
        relative_error: libm::fabs(fitted_rate - rate) / rate,
        residual,
        bins_used: points.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qft::{qft_direct, qft_fast};

    #[test]
    fn polynomial_layout() {
        let p = Polynomial2::new(2, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(p.coeff(0, 0), 1.0);
        assert_eq!(p.coeff(1, 0), 2.0);
        assert_eq!(p.coeff(0, 1), 3.0);
        assert_eq!(p.coeff(2, 0), 4.0);
        assert_eq!(p.coeff(1, 1), 5.0);
        assert_eq!(p.coeff(0, 2), 6.0);
        assert_eq!(p.eval(2.0, -1.0), 1.0 + 4.0 - 3.0 + 16.0 - 10.0 + 6.0);
        let q = Polynomial2::from_terms(&[(2, 0, 1.0)]).unwrap();
        assert_eq!(q.coeffs(), &[0.0, 0.0, 0.0, 1.0, 0.0, 0.0]);
        let trailing_zero = Polynomial2::new(2, vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(trailing_zero.total_degree(), 1);
        assert!(Polynomial2::new(1, vec![0.0; 3]).is_err());
        assert!(Polynomial2::new(1, vec![1.0; 2]).is_err());
    }

    #[test]
    fn constructors_validate() {
        assert!(AnalyticSignal::gaussian(Quaternion::ONE, 0.0, 1.0).is_err());
        assert!(AnalyticSignal::gaussian(Quaternion::ONE, 1.0, f64::NAN).is_err());
        let p = Polynomial2::from_terms(&[(0, 0, 1.0)]).unwrap();
        assert!(AnalyticSignal::poly_gaussian(p, -1.0).is_err());
        assert!(AnalyticSignal::hermite(1, 1, -1.0).is_err());
        assert!(AnalyticSignal::hermite(1, 1, 0.0).is_ok());
    }

    #[test]
    fn eval_examples() {
        let h = AnalyticSignal::hermite(0, 0, 0.0).unwrap();
        assert_eq!(h.eval(0.0, 0.0), Quaternion::ONE);
        let h1 = AnalyticSignal::hermite(1, 0, 0.0).unwrap();
        assert_eq!(h1.eval(0.0, 0.4), Quaternion::ZERO);
        let g = AnalyticSignal::gaussian(Quaternion::I, PI, PI).unwrap();
        assert_eq!(g.eval(0.0, 0.0), Quaternion::I);
    }

    #[test]
    fn exact_qft_examples() {
        let g = AnalyticSignal::gaussian(Quaternion::ONE, PI, PI).unwrap();
        match g.exact_qft() {
            ExactTransform::Gaussian(AnalyticSignal::Gaussian { q, alpha1, alpha2 }) => {
                assert_eq!(q, Quaternion::ONE);
                assert_eq!(alpha1, PI);
                assert_eq!(alpha2, PI);
            }
            other => panic!("{other:?}"),
        }
        let q = Quaternion::new(0.5, -1.0, 0.25, 2.0);
        let alpha = 2.5;
        let g = AnalyticSignal::gaussian(q, alpha, alpha).unwrap();
        match g.exact_qft() {
            ExactTransform::Gaussian(AnalyticSignal::Gaussian { q: q2, alpha1, .. }) => {
                assert!(q2.max_abs_diff(q * (PI / alpha)) < 1e-15);
                assert!((alpha1 - PI * PI / alpha).abs() < 1e-15);
            }
            other => panic!("{other:?}"),
        }
        let cubic = Polynomial2::from_terms(&[(3, 0, 1.0), (1, 1, -2.0)]).unwrap();
        let pg = AnalyticSignal::poly_gaussian(cubic, 1.0).unwrap();
        assert_eq!(pg.exact_qft(), ExactTransform::Envelope(Envelope { degree: 3, rate: PI }));
    }

    #[test]
    fn exact_qft_twice_restores_rates() {
        let g = AnalyticSignal::gaussian(Quaternion::new(1.0, 2.0, 0.0, -1.0), 1.7, 4.2).unwrap();
        let ExactTransform::Gaussian(once) = g.exact_qft() else { panic!() };
        let ExactTransform::Gaussian(AnalyticSignal::Gaussian { q, alpha1, alpha2 }) = once.exact_qft() else {
            panic!()
        };
        assert!((alpha1 - 1.7).abs() <= 4.0 * f64::EPSILON * 1.7);
        assert!((alpha2 - 4.2).abs() <= 4.0 * f64::EPSILON * 4.2);
        assert!(q.max_abs_diff(Quaternion::new(1.0, 2.0, 0.0, -1.0)) < 1e-14);
    }

    #[test]
    fn hermite_sample_parity() {
        let grid = Grid2D::new(16, 16, 0.25, 0.25).unwrap();
        let f = AnalyticSignal::hermite(1, 0, 0.7).unwrap().sample(&grid).unwrap();
        for m1 in 1..16 {
            for m2 in 1..16 {
                let v = f.get(m1, m2).q0;
                assert_eq!(f.get(16 - m1, m2).q0, -v);
                assert_eq!(f.get(m1, 16 - m2).q0, v);
            }
        }
    }

    // 1D transforms of x^a e^{-1.5 pi x^2} at xi = 0.4, from symbolic
    // integration: (re, im).
    #[allow(clippy::excessive_precision)]
    const MONOMIAL_FT: [(f64, f64); 5] = [
        (5.84010819118894853e-01, 0.0),
        (0.0, -1.55736218431705320e-01),
        (2.04358142061578513e-02, 0.0),
        (0.0, -3.84978024307688141e-02),
        (-3.76115895416981880e-03, 0.0),
    ];

    #[test]
    fn monomial_transforms_match_symbolic_integrals() {
        let t = MonomialTransforms::new(4, 1.5).eval_all(0.4);
        for (got, &(re, im)) in t.iter().zip(MONOMIAL_FT.iter()) {
            assert!((got.re - re).abs() < 1e-15 && (got.im - im).abs() < 1e-15, "{got:?}");
        }
    }

    #[test]
    fn closed_form_spectra_match_direct_transform() {
        let grid = Grid2D::self_dual(64).unwrap();
        let cubic = Polynomial2::from_terms(&[(0, 0, 0.5), (3, 0, 1.0), (1, 1, -2.0), (0, 2, 0.75)]).unwrap();
        let signals = [
            AnalyticSignal::gaussian(Quaternion::new(1.0, -0.5, 0.25, 2.0), 2.0, 5.0).unwrap(),
            AnalyticSignal::poly_gaussian(cubic, 1.3).unwrap(),
            AnalyticSignal::hermite(2, 3, 0.4).unwrap(),
            AnalyticSignal::hermite(1, 0, -0.3).unwrap(),
        ];
        for s in &signals {
            let direct = qft_direct(&s.sample(&grid).unwrap());
            let exact = s.sample_spectrum(&grid).unwrap();
            let err = exact.max_abs_diff(&direct).unwrap();
            assert!(err < 1e-9, "{s:?}: {err}");
        }
    }

    #[test]
    fn gaussian_envelope_fit() {
        let grid = Grid2D::self_dual(64).unwrap();
        let g = AnalyticSignal::gaussian(Quaternion::ONE, PI, PI).unwrap();
        let spec = qft_fast(&g.sample(&grid).unwrap()).unwrap();
        let fit = verify_envelope(&spec, PI, 0).unwrap();
        assert!(fit.within(0.01), "{fit:?}");
    }

    #[test]
    fn hermite_envelope_fit_uses_composed_rate() {
        let grid = Grid2D::self_dual(128).unwrap();
        let h = AnalyticSignal::hermite(0, 0, 1.0).unwrap();
        let env = h.envelope();
        assert_eq!(env, Envelope { degree: 0, rate: PI / 2.0 });
        let spec = qft_fast(&h.sample(&grid).unwrap()).unwrap();
        let fit = verify_envelope(&spec, env.rate, env.degree).unwrap();
        assert!(fit.within(0.01), "{fit:?}");
    }

    #[test]
    fn quadratic_envelope_has_zeros_but_fits() {
        let grid = Grid2D::self_dual(64).unwrap();
        let p = Polynomial2::from_terms(&[(2, 0, 1.0)]).unwrap();
        let s = AnalyticSignal::poly_gaussian(p, 1.0).unwrap();
        let spec = qft_direct(&s.sample(&grid).unwrap());
        // the factor 1/(2 pi) - xi1^2 vanishes near |xi1| = 0.399
        let near_zero = spec.values().iter().map(|q| q.modulus()).fold(f64::INFINITY, f64::min);
        assert!(near_zero < 1e-3 * spec.max_modulus());
        let fit = verify_envelope(&spec, PI, 2).unwrap();
        assert!(fit.within(0.02), "{fit:?}");
    }

    #[test]
    fn underflowing_spectrum_is_rejected() {
        let grid = Grid2D::self_dual(16).unwrap();
        let z = SpectrumField::zeros(grid);
        assert_eq!(verify_envelope(&z, PI, 0), Err(Error::SpectrumUnderflow));
    }
}
