//! Quaternion-valued samples on a [`Grid2D`], in the spatial or the
//! frequency domain, with Riemann-sum quadrature.

use alloc::vec::Vec;
use core::marker::PhantomData;

use crate::error::{Error, Result};
use crate::grid::Grid2D;
use crate::quat::Quaternion;

mod sealed {
    pub trait Sealed {}
}

/// Which lattice of a [`Grid2D`] the samples live on.
pub trait Domain: sealed::Sealed + Copy + core::fmt::Debug {
    fn node(grid: &Grid2D, m1: usize, m2: usize) -> (f64, f64);
    fn cell(grid: &Grid2D) -> f64;
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spatial;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Frequency;

impl sealed::Sealed for Spatial {}
impl sealed::Sealed for Frequency {}

impl Domain for Spatial {
    #[inline]
    fn node(grid: &Grid2D, m1: usize, m2: usize) -> (f64, f64) {
        (grid.x1(m1), grid.x2(m2))
    }
    #[inline]
    fn cell(grid: &Grid2D) -> f64 {
        grid.cell_area()
    }
}

impl Domain for Frequency {
    #[inline]
    fn node(grid: &Grid2D, m1: usize, m2: usize) -> (f64, f64) {
        (grid.xi1(m1), grid.xi2(m2))
    }
    #[inline]
    fn cell(grid: &Grid2D) -> f64 {
        grid.freq_cell_area()
    }
}

/// Row-major samples; every entry finite. The grid is always the
/// originating spatial grid, so a spectrum can be inverted without
/// extra bookkeeping.
#[derive(Clone, Debug, PartialEq)]
pub struct Samples<D: Domain> {
    grid: Grid2D,
    values: Vec<Quaternion>,
    _domain: PhantomData<D>,
}

/// Sampled signal `f : R^2 -> H`.
pub type QField = Samples<Spatial>;

/// Sampled transform, indexed by the frequency nodes of its grid.
pub type SpectrumField = Samples<Frequency>;

impl<D: Domain> Samples<D> {
    pub fn new(grid: Grid2D, values: Vec<Quaternion>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::SampleCountMismatch { expected: grid.len(), found: values.len() });
        }
        if let Some(index) = values.iter().position(|q| !q.is_finite()) {
            return Err(Error::NonFiniteSample { index });
        }
        Ok(Samples { grid, values, _domain: PhantomData })
    }

    /// Callers guarantee length and finiteness.
    pub(crate) fn from_parts(grid: Grid2D, values: Vec<Quaternion>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        Samples { grid, values, _domain: PhantomData }
    }

    pub fn zeros(grid: Grid2D) -> Self {
        Samples::from_parts(grid, alloc::vec![Quaternion::ZERO; grid.len()])
    }

    /// Evaluates `f` at every node of this domain's lattice.
    pub fn from_fn<F>(grid: Grid2D, mut f: F) -> Result<Self>
    where
        F: FnMut(f64, f64) -> Quaternion,
    {
        let mut values = Vec::with_capacity(grid.len());
        for m1 in 0..grid.n1() {
            for m2 in 0..grid.n2() {
                let (a, b) = D::node(&grid, m1, m2);
                values.push(f(a, b));
            }
        }
        Samples::new(grid, values)
    }

    #[inline]
    pub fn grid(&self) -> &Grid2D {
        &self.grid
    }

    #[inline]
    pub fn values(&self) -> &[Quaternion] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Quaternion> {
        self.values
    }

    #[inline]
    pub fn get(&self, m1: usize, m2: usize) -> Quaternion {
        self.values[self.grid.index(m1, m2)]
    }

    /// Lattice coordinates of sample `(m1, m2)`.
    #[inline]
    pub fn node(&self, m1: usize, m2: usize) -> (f64, f64) {
        D::node(&self.grid, m1, m2)
    }

    /// Quadrature weight of one cell of this lattice.
    #[inline]
    pub fn cell(&self) -> f64 {
        D::cell(&self.grid)
    }

    /// Iterates `((m1, m2), node, value)` in storage order.
    pub fn iter_nodes(&self) -> impl Iterator<Item = ((usize, usize), (f64, f64), Quaternion)> + '_ {
        let n2 = self.grid.n2();
        self.values.iter().enumerate().map(move |(idx, &q)| {
            let (m1, m2) = (idx / n2, idx % n2);
            ((m1, m2), D::node(&self.grid, m1, m2), q)
        })
    }

    /// Applies `g` to every sample; the result must stay finite.
    pub fn map<F>(&self, mut g: F) -> Result<Self>
    where
        F: FnMut(Quaternion) -> Quaternion,
    {
        Samples::new(self.grid, self.values.iter().map(|&q| g(q)).collect())
    }

    /// Combines two sample sets on the same grid pointwise.
    pub fn zip_with<F>(&self, other: &Self, mut g: F) -> Result<Self>
    where
        F: FnMut(Quaternion, Quaternion) -> Quaternion,
    {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| g(a, b)).collect();
        Samples::new(self.grid, values)
    }

    /// Largest per-component difference against another sample set.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(self.values.iter().zip(&other.values).map(|(a, b)| a.max_abs_diff(*b)).fold(0.0, f64::max))
    }

    /// Largest sample modulus.
    pub fn max_modulus(&self) -> f64 {
        self.values.iter().map(|q| q.modulus()).fold(0.0, f64::max)
    }

    /// Riemann approximation of the `L^p` norm; `p = f64::INFINITY`
    /// gives the grid maximum of the modulus.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        lp_norm(self, p)
    }

    /// `max |f(x)| e^{alpha |x|^2}` over the lattice.
    pub fn weighted_sup(&self, alpha: f64) -> Result<f64> {
        weighted_sup(self, alpha)
    }
}

/// `(sum |f|^p * cell)^(1/p)`, or the grid max for `p = inf`.
pub fn lp_norm<D: Domain>(f: &Samples<D>, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidExponent);
    }
    if p == f64::INFINITY {
        return Ok(f.max_modulus());
    }
    let sum: f64 = if p == 1.0 {
        f.values.iter().map(|q| q.modulus()).sum()
    } else if p == 2.0 {
        f.values.iter().map(|q| q.norm_sqr()).sum()
    } else {
        f.values.iter().map(|q| libm::pow(q.modulus(), p)).sum()
    };
    let integral = sum * f.cell();
    Ok(if p == 1.0 { integral } else { libm::pow(integral, 1.0 / p) })
}

/// Largest `|node|^2` on the lattice (attained at the `m = 0` corner).
pub(crate) fn max_radius_sqr<D: Domain>(grid: &Grid2D) -> f64 {
    let (a, b) = D::node(grid, 0, 0);
    a * a + b * b
}

/// Natural log of `f64::MAX`; weights `e^t` with larger `t` overflow.
pub(crate) const LN_MAX: f64 = 709.782712893384;

pub fn weighted_sup<D: Domain>(f: &Samples<D>, alpha: f64) -> Result<f64> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::InvalidParameter("weight rate must be positive"));
    }
    if alpha * max_radius_sqr::<D>(&f.grid) > LN_MAX {
        return Err(Error::WeightOverflow);
    }
    Ok(f.iter_nodes().map(|(_, (a, b), q)| q.modulus() * libm::exp(alpha * (a * a + b * b))).fold(0.0, f64::max))
}
