//! Splitting off the unit-root factor of an integer polynomial `P(t)`, `P(0) = 1`.
//!
//! Work with the reversal `P*(x) = x^D P(1/x)`, monic with the reciprocal roots of `P`
//! as roots. Mod p the Newton polygon's slope-zero segment has length
//! `r = max{k : p does not divide P_k}`, so `P* = x^(D-r) G(x) (mod p)` with `G(0) != 0`.
//! The coprime pair `(G, x^(D-r))` is lifted quadratically and `rho(t) = t^r G(1/t)`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::poly::{self, trim};
use super::{checked_prime_power, PadicContext, ZqPolynomial};
use crate::error::{Error, Result};

/// `rho` with `rho(0) = 1`, its cofactor, and the number of unit reciprocal roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitFactor {
    pub rho: ZqPolynomial,
    pub cofactor: ZqPolynomial,
    pub degree: usize,
}

fn reduce_big(x: &BigInt, m: u64) -> u64 {
    let r = x % BigInt::from(m);
    let r = if r.is_negative() { r + BigInt::from(m) } else { r };
    r.to_u64().expect("residue fits")
}

/// Lift `f = g h (mod p)` with `s g + t h = 1 (mod p)` to modulus `p^target`.
/// `f`, `g`, `h` monic.
fn hensel_lift(
    f: &[u64],
    mut g: Vec<u64>,
    mut h: Vec<u64>,
    mut s: Vec<u64>,
    mut t: Vec<u64>,
    p: u64,
    target: u32,
) -> (Vec<u64>, Vec<u64>) {
    let mut k = 1u32;
    while k < target {
        let next = (2 * k).min(target);
        let m = p.pow(next);
        let fm: Vec<u64> = f.iter().map(|&c| c % m).collect();
        let e = poly::sub(&fm, &poly::mul(&g, &h, m), m);
        let (q, r) = poly::divrem(&poly::mul(&s, &e, m), &h, m);
        let g_new = poly::add(&poly::add(&g, &poly::mul(&t, &e, m), m), &poly::mul(&q, &g, m), m);
        let h_new = poly::add(&h, &r, m);
        let b = poly::sub(
            &poly::add(&poly::mul(&s, &g_new, m), &poly::mul(&t, &h_new, m), m),
            &[1],
            m,
        );
        let (c, d) = poly::divrem(&poly::mul(&s, &b, m), &h_new, m);
        s = poly::sub(&s, &d, m);
        t = poly::sub(&poly::sub(&t, &poly::mul(&t, &b, m), m), &poly::mul(&c, &g_new, m), m);
        g = g_new;
        h = h_new;
        k = next;
    }
    (g, h)
}

/// Unit-root factor of `P` at the working precision of `ctx` (accurate mod p^(m+g)).
pub fn hensel_unit_factor(coeffs: &[BigInt], ctx: &PadicContext) -> Result<UnitFactor> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.first() != Some(&BigInt::from(1)) {
        return Err(Error::InvalidArgument("polynomial must have constant term 1".into()));
    }
    let p = ctx.p();
    let digits = ctx.working_digits();
    let modulus = checked_prime_power(p, digits).ok_or(Error::PrecisionOverflow(digits, p))?;
    let degree = coeffs.len() - 1;
    let unit_degree = (0..=degree)
        .rev()
        .find(|&k| reduce_big(&coeffs[k], p) != 0)
        .expect("constant term is 1");

    if unit_degree == 0 {
        let cof: Vec<u64> = coeffs.iter().map(|c| reduce_big(c, modulus)).collect();
        return Ok(UnitFactor {
            rho: ZqPolynomial::from_residues(ctx, &[1]),
            cofactor: ZqPolynomial::from_residues(ctx, &cof),
            degree: 0,
        });
    }
    if unit_degree == degree {
        let all: Vec<u64> = coeffs.iter().map(|c| reduce_big(c, modulus)).collect();
        return Ok(UnitFactor {
            rho: ZqPolynomial::from_residues(ctx, &all),
            cofactor: ZqPolynomial::from_residues(ctx, &[1]),
            degree,
        });
    }

    // reversed polynomial, monic of degree D
    let reversed: Vec<u64> = coeffs.iter().rev().map(|c| reduce_big(c, modulus)).collect();
    let rev_mod_p: Vec<u64> = reversed.iter().map(|&c| c % p).collect();
    let shift = degree - unit_degree;
    let g0: Vec<u64> = rev_mod_p[shift..].to_vec();
    let mut h0 = vec![0u64; shift + 1];
    h0[shift] = 1;
    let (gcd, s0, t0) = poly::xgcd_prime(&g0, &h0, p);
    assert_eq!(gcd, vec![1], "unit and non-unit parts must be coprime mod p");

    let (g, h) = hensel_lift(&reversed, g0, h0, s0, t0, p, digits);
    debug_assert_eq!(
        {
            let mut prod = poly::mul(&g, &h, modulus);
            trim(&mut prod);
            prod
        },
        {
            let mut r = reversed.clone();
            trim(&mut r);
            r
        }
    );

    let mut rho: Vec<u64> = g.iter().rev().copied().collect();
    rho.resize(unit_degree + 1, 0);
    let mut cof: Vec<u64> = h.iter().rev().copied().collect();
    cof.resize(shift + 1, 0);
    Ok(UnitFactor {
        rho: ZqPolynomial::from_residues(ctx, &rho),
        cofactor: ZqPolynomial::from_residues(ctx, &cof),
        degree: unit_degree,
    })
}
