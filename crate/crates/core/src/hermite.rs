//! Hermite-type functions
//!
//! ```text
//! phi_k(x) = ((-1)^k / k!) e^{pi x^2} d^k/dx^k e^{-2 pi x^2}
//! ```
//!
//! Writing `u = sqrt(2 pi) x`, the derivative is `(2 pi)^{k/2} (-1)^k
//! H_k(u) e^{-u^2}` with `H_k` the physicists' Hermite polynomial, so
//! `phi_k(x) = ((2 pi)^{k/2} / k!) H_k(sqrt(2 pi) x) e^{-pi x^2}`.
//! Substituting into `H_{k+1} = 2u H_k - 2k H_{k-1}` gives the three-term
//! recurrence used everywhere in this module:
//!
//! ```text
//! phi_0(x)     = e^{-pi x^2}
//! phi_1(x)     = 4 pi x e^{-pi x^2}
//! phi_{k+1}(x) = 4 pi / (k + 1) * (x phi_k(x) - phi_{k-1}(x))
//! ```

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

/// `phi_k(x)`.
pub fn phi(k: u32, x: f64) -> f64 {
    let envelope = libm::exp(-PI * x * x);
    prefactor(k, x) * envelope
}

/// `phi_k(x) e^{pi x^2}`, the polynomial part, evaluated by the recurrence.
pub fn prefactor(k: u32, x: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for m in 0..k {
        let next = 4.0 * PI / (m as f64 + 1.0) * (x * cur - prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Monomial coefficients of the polynomial part of `phi_k`, lowest first.
pub fn prefactor_coeffs(k: u32) -> Vec<f64> {
    let mut prev: Vec<f64> = Vec::new();
    let mut cur = vec![1.0];
    for m in 0..k {
        let scale = 4.0 * PI / (m as f64 + 1.0);
        let mut next = vec![0.0; cur.len() + 1];
        for (d, c) in cur.iter().enumerate() {
            next[d + 1] += scale * c;
        }
        for (d, c) in prev.iter().enumerate() {
            next[d] -= scale * c;
        }
        prev = cur;
        cur = next;
    }
    cur
}
