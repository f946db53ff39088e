//! One-dimensional complex DFT engine: iterative radix-2 for powers of
//! two, Bluestein's chirp-z reduction for every other length.
//!
//! The complex unit here is abstract; the QFT layer decides whether it
//! stands for `i` (axis 1, left kernel) or `j` (axis 2, right kernel).

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::{Add, Mul, Sub};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };

    #[inline]
    pub fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    #[inline]
    pub fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Complex::new(self.re * s, self.im * s)
    }

    /// `e^{i theta}`.
    #[inline]
    pub fn cis(theta: f64) -> Self {
        let (s, c) = libm::sincos(theta);
        Complex::new(c, s)
    }
}

impl Add for Complex {
    type Output = Complex;
    #[inline]
    fn add(self, r: Complex) -> Complex {
        Complex::new(self.re + r.re, self.im + r.im)
    }
}

impl Sub for Complex {
    type Output = Complex;
    #[inline]
    fn sub(self, r: Complex) -> Complex {
        Complex::new(self.re - r.re, self.im - r.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    #[inline]
    fn mul(self, r: Complex) -> Complex {
        Complex::new(self.re * r.re - self.im * r.im, self.re * r.im + self.im * r.re)
    }
}

/// Sign of the exponent in `sum x[t] e^{sign * 2 pi i u t / n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Sign {
    Forward,
    Inverse,
}

impl Sign {
    #[inline]
    fn value(self) -> f64 {
        match self {
            Sign::Forward => -1.0,
            Sign::Inverse => 1.0,
        }
    }
}

/// Unnormalized DFT of a fixed length and sign.
pub(crate) enum Plan {
    Radix2(Radix2),
    Bluestein(Bluestein),
}

impl Plan {
    pub fn new(n: usize, sign: Sign) -> Self {
        if n.is_power_of_two() {
            Plan::Radix2(Radix2::new(n, sign))
        } else {
            Plan::Bluestein(Bluestein::new(n, sign))
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Plan::Radix2(p) => p.n,
            Plan::Bluestein(p) => p.n,
        }
    }

    /// In-place transform; `scratch` is resized as needed.
    pub fn process(&self, data: &mut [Complex], scratch: &mut Vec<Complex>) {
        debug_assert_eq!(data.len(), self.len());
        match self {
            Plan::Radix2(p) => p.process(data),
            Plan::Bluestein(p) => p.process(data, scratch),
        }
    }

    /// DFT on the centered lattice `t, u in {-n/2, .., n/2 - 1}` stored at
    /// offsets `t + n/2`: `out[u] = sum_t x[t] e^{sign 2 pi i u t / n}`.
    ///
    /// The exponent depends only on residues mod `n`, so this is the plain
    /// DFT with a half-length rotation on either side.
    pub fn process_centered(&self, data: &mut [Complex], scratch: &mut Vec<Complex>) {
        let half = data.len() / 2;
        data.rotate_left(half);
        self.process(data, scratch);
        data.rotate_left(half);
    }
}

pub(crate) struct Radix2 {
    n: usize,
    /// `e^{sign 2 pi i k / n}` for `k < n/2`.
    twiddles: Vec<Complex>,
}

impl Radix2 {
    fn new(n: usize, sign: Sign) -> Self {
        let s = sign.value();
        let twiddles = (0..n / 2).map(|k| Complex::cis(s * 2.0 * PI * k as f64 / n as f64)).collect();
        Radix2 { n, twiddles }
    }

    fn process(&self, data: &mut [Complex]) {
        let n = self.n;
        if n <= 1 {
            return;
        }
        let bits = n.trailing_zeros();
        for i in 0..n {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if j > i {
                data.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let stride = n / len;
            for chunk in data.chunks_exact_mut(len) {
                let (lo, hi) = chunk.split_at_mut(half);
                for k in 0..half {
                    let t = hi[k] * self.twiddles[k * stride];
                    hi[k] = lo[k] - t;
                    lo[k] = lo[k] + t;
                }
            }
            len <<= 1;
        }
    }
}

pub(crate) struct Bluestein {
    n: usize,
    /// `e^{sign pi i t^2 / n}`.
    chirp: Vec<Complex>,
    /// Forward transform of the conjugate chirp, zero padded and wrapped.
    kernel_hat: Vec<Complex>,
    forward: Radix2,
    inverse: Radix2,
}

impl Bluestein {
    fn new(n: usize, sign: Sign) -> Self {
        let s = sign.value();
        let m = (2 * n - 1).next_power_of_two();
        // t^2 is reduced mod 2n before scaling so the phase stays small.
        let chirp: Vec<Complex> = (0..n)
            .map(|t| {
                let r = (t * t) % (2 * n);
                Complex::cis(s * PI * r as f64 / n as f64)
            })
            .collect();
        let mut kernel = vec![Complex::ZERO; m];
        kernel[0] = chirp[0].conj();
        for t in 1..n {
            kernel[t] = chirp[t].conj();
            kernel[m - t] = chirp[t].conj();
        }
        let forward = Radix2::new(m, Sign::Forward);
        forward.process(&mut kernel);
        Bluestein { n, chirp, kernel_hat: kernel, forward, inverse: Radix2::new(m, Sign::Inverse) }
    }

    fn process(&self, data: &mut [Complex], scratch: &mut Vec<Complex>) {
        let m = self.kernel_hat.len();
        scratch.clear();
        scratch.resize(m, Complex::ZERO);
        for (t, (x, c)) in data.iter().zip(&self.chirp).enumerate() {
            scratch[t] = *x * *c;
        }
        self.forward.process(scratch);
        for (a, k) in scratch.iter_mut().zip(&self.kernel_hat) {
            *a = *a * *k;
        }
        self.inverse.process(scratch);
        let norm = 1.0 / m as f64;
        for (u, out) in data.iter_mut().enumerate() {
            *out = (scratch[u] * self.chirp[u]).scale(norm);
        }
    }
}
