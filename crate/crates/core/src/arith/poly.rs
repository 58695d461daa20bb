//! Dense univariate polynomials with residues modulo an integer, coefficient lists in
//! ascending degree.

use super::{add_mod, inv_mod, mul_mod, sub_mod, PadicContext, Ring, ZqElement};

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn add(x: &[u64], y: &[u64], m: u64) -> Vec<u64> {
    let mut out = vec![0; x.len().max(y.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let a = x.get(i).copied().unwrap_or(0);
        let b = y.get(i).copied().unwrap_or(0);
        *o = add_mod(a, b, m);
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(x: &[u64], y: &[u64], m: u64) -> Vec<u64> {
    let mut out = vec![0; x.len().max(y.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let a = x.get(i).copied().unwrap_or(0);
        let b = y.get(i).copied().unwrap_or(0);
        *o = sub_mod(a, b, m);
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(x: &[u64], y: &[u64], m: u64) -> Vec<u64> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; x.len() + y.len() - 1];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(a, b, m), m);
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(x: &[u64], c: u64, m: u64) -> Vec<u64> {
    let mut out: Vec<u64> = x.iter().map(|&a| mul_mod(a, c, m)).collect();
    trim(&mut out);
    out
}

/// Division with remainder by a divisor whose leading coefficient is a unit mod `m`.
pub(crate) fn divrem(x: &[u64], y: &[u64], m: u64) -> (Vec<u64>, Vec<u64>) {
    let mut y = y.to_vec();
    trim(&mut y);
    let dy = y.len().checked_sub(1).expect("division by zero polynomial");
    let lead_inv = inv_mod(y[dy], m).expect("leading coefficient must be a unit");
    let mut rem = x.to_vec();
    trim(&mut rem);
    if rem.len() <= dy {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - dy];
    for k in (0..quot.len()).rev() {
        let c = mul_mod(rem[k + dy], lead_inv, m);
        quot[k] = c;
        if c == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            rem[k + j] = sub_mod(rem[k + j], mul_mod(c, b, m), m);
        }
    }
    rem.truncate(dy);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Extended gcd over the prime field: returns `(g, s, t)` with `s x + t y = g`, `g` monic.
pub(crate) fn xgcd_prime(x: &[u64], y: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (x.to_vec(), y.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    if let Some(&lead) = r0.last() {
        let c = inv_mod(lead, p).expect("nonzero residue mod a prime");
        (scale(&r0, c, p), scale(&s0, c, p), scale(&t0, c, p))
    } else {
        (r0, s0, t0)
    }
}

/// Polynomial in `t` with p-adic coefficients, ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZqPolynomial {
    pub coeffs: Vec<ZqElement>,
}

impl ZqPolynomial {
    pub fn new(coeffs: Vec<ZqElement>) -> Self {
        Self { coeffs }
    }

    /// Embed an integer polynomial (residues in `[0, p^(m+g))`) as constants.
    pub fn from_residues(ctx: &PadicContext, residues: &[u64]) -> Self {
        let mut poly = Self {
            coeffs: residues.iter().map(|&r| ctx.from_u64(r)).collect(),
        };
        poly.normalize(ctx);
        poly
    }

    /// Drop zero leading coefficients.
    pub fn normalize(&mut self, ctx: &PadicContext) {
        while self.coeffs.last().is_some_and(|c| ctx.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients reduced mod `p^k`, with trailing zeros removed.
    pub fn residues(&self, ctx: &PadicContext, k: u32) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = self.coeffs.iter().map(|c| ctx.truncate(c, k)).collect();
        while out.last().is_some_and(|c| c.iter().all(|&x| x == 0)) {
            out.pop();
        }
        out
    }

    /// Coefficientwise equality mod `p^k`.
    pub fn eq_mod(&self, other: &Self, ctx: &PadicContext, k: u32) -> bool {
        self.residues(ctx, k) == other.residues(ctx, k)
    }

    pub fn mul(&self, other: &Self, ctx: &PadicContext) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self { coeffs: Vec::new() };
        }
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(&out[i + j], &ctx.mul(a, b));
            }
        }
        let mut poly = Self { coeffs: out };
        poly.normalize(ctx);
        poly
    }
}
