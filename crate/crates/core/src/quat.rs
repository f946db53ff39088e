//! Real quaternions `q0 + i q1 + j q2 + k q3` over binary64.
//!
//! Operator impls are unchecked so that transform inner loops stay
//! branch-free; finiteness is enforced where values enter the library
//! (field construction, file parsing) and by the `checked_*` methods.

use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Quaternion { q0, q1, q2, q3 }
    }

    /// Checked constructor: rejects NaN and infinities.
    pub fn try_new(q0: f64, q1: f64, q2: f64, q3: f64) -> Result<Self> {
        let q = Quaternion::new(q0, q1, q2, q3);
        if q.is_finite() {
            Ok(q)
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub const fn from_real(r: f64) -> Self {
        Quaternion::new(r, 0.0, 0.0, 0.0)
    }

    #[inline]
    pub fn to_array(self) -> [f64; 4] {
        [self.q0, self.q1, self.q2, self.q3]
    }

    #[inline]
    pub fn from_array(c: [f64; 4]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.q0.is_finite() && self.q1.is_finite() && self.q2.is_finite() && self.q3.is_finite()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.q0 == 0.0 && self.q1 == 0.0 && self.q2 == 0.0 && self.q3 == 0.0
    }

    #[inline]
    pub fn conj(self) -> Self {
        Quaternion::new(self.q0, -self.q1, -self.q2, -self.q3)
    }

    /// `q * conj(q)`, a nonnegative real.
    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3
    }

    /// Quaternion modulus `sqrt(q conj(q))`.
    ///
    /// Components are scaled by the largest one first, so tiny and huge
    /// quaternions keep full relative precision.
    pub fn modulus(self) -> f64 {
        let m = libm::fmax(
            libm::fmax(libm::fabs(self.q0), libm::fabs(self.q1)),
            libm::fmax(libm::fabs(self.q2), libm::fabs(self.q3)),
        );
        if m == 0.0 || !m.is_finite() {
            return m;
        }
        let s = Quaternion::new(self.q0 / m, self.q1 / m, self.q2 / m, self.q3 / m);
        m * libm::sqrt(s.norm_sqr())
    }

    /// Largest absolute component difference.
    pub fn max_abs_diff(self, other: Quaternion) -> f64 {
        let d = self - other;
        libm::fmax(libm::fmax(libm::fabs(d.q0), libm::fabs(d.q1)), libm::fmax(libm::fabs(d.q2), libm::fabs(d.q3)))
    }

    /// `conj(q) / |q|^2`.
    pub fn inverse(self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::DivisionByZero);
        }
        let inv = self.conj() / n2;
        if inv.is_finite() {
            Ok(inv)
        } else {
            Err(Error::NonFinite)
        }
    }

    /// Hamilton product with an overflow check on the result.
    pub fn checked_mul(self, rhs: Quaternion) -> Result<Self> {
        let p = self * rhs;
        if p.is_finite() {
            Ok(p)
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.q0 * s, self.q1 * s, self.q2 * s, self.q3 * s)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn add(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.q0 + r.q0, self.q1 + r.q1, self.q2 + r.q2, self.q3 + r.q3)
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, r: Quaternion) {
        *self = *self + r;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn sub(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.q0 - r.q0, self.q1 - r.q1, self.q2 - r.q2, self.q3 - r.q3)
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, r: Quaternion) {
        *self = *self - r;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.q0, -self.q1, -self.q2, -self.q3)
    }
}

/// Hamilton product: `i^2 = j^2 = k^2 = -1`, `ij = k`, `jk = i`, `ki = j`.
impl Mul for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, r: Quaternion) -> Quaternion {
        let (a0, a1, a2, a3) = (self.q0, self.q1, self.q2, self.q3);
        let (b0, b1, b2, b3) = (r.q0, r.q1, r.q2, r.q3);
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl MulAssign for Quaternion {
    #[inline]
    fn mul_assign(&mut self, r: Quaternion) {
        *self = *self * r;
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, s: f64) -> Quaternion {
        self.scale(s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scale(self)
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn div(self, s: f64) -> Quaternion {
        Quaternion::new(self.q0 / s, self.q1 / s, self.q2 / s, self.q3 / s)
    }
}

impl From<f64> for Quaternion {
    fn from(r: f64) -> Self {
        Quaternion::from_real(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const I: Quaternion = Quaternion::I;
    const J: Quaternion = Quaternion::J;
    const K: Quaternion = Quaternion::K;
    const ONE: Quaternion = Quaternion::ONE;

    /// Left-multiplication matrix of `p` acting on coefficient vectors.
    fn left_matrix(p: Quaternion) -> [[f64; 4]; 4] {
        let [a, b, c, d] = p.to_array();
        [[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]]
    }

    fn matrix_mul(p: Quaternion, q: Quaternion) -> Quaternion {
        let m = left_matrix(p);
        let v = q.to_array();
        let mut out = [0.0; 4];
        for (r, row) in m.iter().enumerate() {
            out[r] = row.iter().zip(v.iter()).map(|(x, y)| x * y).sum();
        }
        Quaternion::from_array(out)
    }

    #[test]
    fn hamilton_rules() {
        assert_eq!(I * J, K);
        assert_eq!(J * I, -K);
        assert_eq!(J * K, I);
        assert_eq!(K * J, -I);
        assert_eq!(K * I, J);
        assert_eq!(I * K, -J);
        for u in [I, J, K] {
            assert_eq!(u * u, -ONE);
        }
        assert_eq!(I * J * K, -ONE);
    }

    #[test]
    fn modulus_keeps_precision_at_extremes() {
        for scale in [1e-200, 1e-310, 1.0, 1e200] {
            let q = Quaternion::new(3.0, 0.0, -4.0, 0.0) * scale;
            assert!((q.modulus() / scale - 5.0).abs() < 1e-14, "{scale}");
        }
        assert_eq!(Quaternion::ZERO.modulus(), 0.0);
        assert_eq!(Quaternion::new(f64::INFINITY, 0.0, 0.0, 0.0).modulus(), f64::INFINITY);
    }

    #[test]
    fn anticommutators_vanish() {
        assert!((I * J + J * I).is_zero());
        assert!((J * K + K * J).is_zero());
        assert!((K * I + I * K).is_zero());
    }

    #[test]
    fn product_examples() {
        let q = Quaternion::new(0.3, -1.2, 2.5, 4.0);
        assert_eq!(q * ONE, q);
        assert_eq!(ONE * q, q);
        let lhs = (ONE + I) * (ONE + J);
        assert_eq!(lhs, Quaternion::new(1.0, 1.0, 1.0, 1.0));
        assert_eq!(matrix_mul(ONE + I, ONE + J), lhs);
    }

    #[test]
    fn conj_examples() {
        assert_eq!(ONE.conj(), ONE);
        assert_eq!((I + K).conj(), -I - K);
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(Quaternion::new(1.0, 1.0, 1.0, 1.0).modulus(), 2.0);
        assert_eq!(Quaternion::from_real(-3.5).modulus(), 3.5);
        assert_eq!(Quaternion::ZERO.modulus(), 0.0);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Quaternion::from_real(2.0).inverse().unwrap(), Quaternion::from_real(0.5));
        assert_eq!(I.inverse().unwrap(), -I);
        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        let inv = q.inverse().unwrap();
        assert_eq!(inv, Quaternion::new(0.25, -0.25, -0.25, -0.25));
        assert!((q * inv).max_abs_diff(ONE) <= 4.0 * f64::EPSILON);
        assert_eq!(Quaternion::ZERO.inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn checked_mul_rejects_overflow() {
        let big = Quaternion::new(1e200, 1e200, 0.0, 0.0);
        assert_eq!(big.checked_mul(big), Err(Error::NonFinite));
        assert!(Quaternion::try_new(f64::NAN, 0.0, 0.0, 0.0).is_err());
    }

    fn quat() -> impl Strategy<Value = Quaternion> {
        prop::array::uniform4(-1.0f64..1.0).prop_map(Quaternion::from_array)
    }

    proptest! {
        #[test]
        fn product_matches_matrix_representation(p in quat(), q in quat()) {
            prop_assert!((p * q).max_abs_diff(matrix_mul(p, q)) <= 1e-15);
        }

        #[test]
        fn conj_reverses_products(p in quat(), q in quat()) {
            prop_assert!((p * q).conj().max_abs_diff(q.conj() * p.conj()) <= 1e-15);
        }

        #[test]
        fn conj_is_involution(q in quat()) {
            prop_assert_eq!(q.conj().conj(), q);
        }

        #[test]
        fn associativity(p in quat(), q in quat(), r in quat()) {
            let l = (p * q) * r;
            let rr = p * (q * r);
            prop_assert!(l.max_abs_diff(rr) <= 1e-12 * (1.0 + l.modulus()));
        }
    }
}
