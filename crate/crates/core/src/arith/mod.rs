//! Finite fields, unramified p-adic integers at fixed precision, matrices over both,
//! and Hensel splitting of the unit-root factor of an integer polynomial.

pub mod fq;
pub mod hensel;
pub mod matrix;
pub mod poly;
pub mod zq;

pub use fq::{Embedding, FqContext, FqElement};
pub use hensel::{hensel_unit_factor, UnitFactor};
pub use matrix::{FqMatrix, Matrix, ZqMatrix};
pub use poly::ZqPolynomial;
pub use zq::{PadicContext, ZqElement};

/// Commutative ring operations, implemented by the field and p-adic contexts so that
/// the matrix routines can be shared.
pub trait Ring {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    /// A unit of a local ring: its residue is nonzero.
    fn is_unit(&self, x: &Self::Elem) -> bool;
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;
}

#[inline]
pub(crate) fn mul_mod(x: u64, y: u64, m: u64) -> u64 {
    ((x as u128 * y as u128) % m as u128) as u64
}

#[inline]
pub(crate) fn add_mod(x: u64, y: u64, m: u64) -> u64 {
    let s = x + y;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(x: u64, y: u64, m: u64) -> u64 {
    if x >= y {
        x - y
    } else {
        x + m - y
    }
}

/// Inverse of `x` modulo `m`, if `gcd(x, m) = 1`.
pub(crate) fn inv_mod(x: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (x % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i128) as u64)
}

/// Reduce a signed integer into `[0, m)`.
#[inline]
pub(crate) fn from_i64(x: i64, m: u64) -> u64 {
    (x as i128).rem_euclid(m as i128) as u64
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// `p^e`, or `None` on overflow past 62 bits (products are taken in `u128`).
pub fn checked_prime_power(p: u64, e: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
        if acc >= 1 << 62 {
            return None;
        }
    }
    Some(acc)
}
