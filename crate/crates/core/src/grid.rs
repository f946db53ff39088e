//! Uniform centered sampling lattice and its induced frequency lattice.

use crate::error::{Error, Result};

/// `n1 x n2` nodes with spacings `h1, h2`. The origin is a node:
/// `x_a[m] = (m - n_a/2) h_a` and `xi_a[m] = (m - n_a/2) / (n_a h_a)`.
///
/// Sample index layout is row-major, `m = m1 * n2 + m2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid2D {
    n1: usize,
    n2: usize,
    h1: f64,
    h2: f64,
}

impl Grid2D {
    pub fn new(n1: usize, n2: usize, h1: f64, h2: f64) -> Result<Self> {
        if n1 < 4 || n2 < 4 {
            return Err(Error::InvalidGrid("at least 4 samples per axis"));
        }
        if !n1.is_multiple_of(2) || !n2.is_multiple_of(2) {
            return Err(Error::InvalidGrid("sample counts must be even"));
        }
        if !(h1.is_finite() && h2.is_finite() && h1 > 0.0 && h2 > 0.0) {
            return Err(Error::InvalidGrid("spacings must be positive and finite"));
        }
        Ok(Grid2D { n1, n2, h1, h2 })
    }

    /// Square grid whose spatial and frequency spacings coincide (`n h^2 = 1`),
    /// so both domains cover `[-sqrt(n)/2, sqrt(n)/2)`.
    pub fn self_dual(n: usize) -> Result<Self> {
        let h = 1.0 / libm::sqrt(n as f64);
        Grid2D::new(n, n, h, h)
    }

    /// Square grid spanning `[-half_width, half_width)` on both axes.
    pub fn with_extent(n: usize, half_width: f64) -> Result<Self> {
        let h = 2.0 * half_width / n as f64;
        Grid2D::new(n, n, h, h)
    }

    #[inline]
    pub fn n1(&self) -> usize {
        self.n1
    }
    #[inline]
    pub fn n2(&self) -> usize {
        self.n2
    }
    #[inline]
    pub fn h1(&self) -> f64 {
        self.h1
    }
    #[inline]
    pub fn h2(&self) -> f64 {
        self.h2
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn index(&self, m1: usize, m2: usize) -> usize {
        m1 * self.n2 + m2
    }

    #[inline]
    pub fn x1(&self, m1: usize) -> f64 {
        (m1 as f64 - (self.n1 / 2) as f64) * self.h1
    }

    #[inline]
    pub fn x2(&self, m2: usize) -> f64 {
        (m2 as f64 - (self.n2 / 2) as f64) * self.h2
    }

    #[inline]
    pub fn xi1(&self, m1: usize) -> f64 {
        (m1 as f64 - (self.n1 / 2) as f64) / (self.n1 as f64 * self.h1)
    }

    #[inline]
    pub fn xi2(&self, m2: usize) -> f64 {
        (m2 as f64 - (self.n2 / 2) as f64) / (self.n2 as f64 * self.h2)
    }

    #[inline]
    pub fn freq_spacing1(&self) -> f64 {
        1.0 / (self.n1 as f64 * self.h1)
    }

    #[inline]
    pub fn freq_spacing2(&self) -> f64 {
        1.0 / (self.n2 as f64 * self.h2)
    }

    /// Quadrature weight of one spatial cell.
    #[inline]
    pub fn cell_area(&self) -> f64 {
        self.h1 * self.h2
    }

    /// Quadrature weight of one frequency cell.
    #[inline]
    pub fn freq_cell_area(&self) -> f64 {
        self.freq_spacing1() * self.freq_spacing2()
    }
}
