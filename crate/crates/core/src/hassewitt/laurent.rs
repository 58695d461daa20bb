//! Sparse Laurent polynomials in `Lambda_1..Lambda_N` with exact rational coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{inv_mod, FqContext, FqElement, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl Laurent {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exponent: Vec<i64>, c: BigRational) -> Self {
        assert_eq!(exponent.len(), nvars);
        let mut out = Self::zero(nvars);
        if !c.is_zero() {
            out.terms.insert(exponent, c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: &[i64]) -> BigRational {
        self.terms.get(exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&vec![0; self.nvars])
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, c: BigRational) {
        let entry = self.terms.entry(exponent.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Multiply by the monomial `Lambda^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Reduce mod p and evaluate at `lambda`; `None` if a coefficient has p in its
    /// denominator or a negative power hits a zero coordinate.
    pub fn eval_mod_p(&self, field: &FqContext, lambda: &[FqElement]) -> Option<FqElement> {
        let p = field.p();
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let num = residue(c.numer(), p);
            let den = inv_mod(residue(c.denom(), p), p)?;
            let mut term = field.from_int((num * den % p) as i64);
            for (x, &k) in lambda.iter().zip(e) {
                let base = if k < 0 { field.inv(x)? } else { x.clone() };
                term = field.mul(&term, &field.pow(&base, k.unsigned_abs()));
            }
            acc = field.add(&acc, &term);
        }
        Some(acc)
    }
}

fn residue(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("small residue")
}

/// Determinant by cofactor expansion along the first row.
pub fn laurent_det(m: &[Vec<Laurent>]) -> Laurent {
    let n = m.len();
    let nvars = m.first().and_then(|r| r.first()).map_or(0, Laurent::nvars);
    match n {
        0 => Laurent::constant(nvars, BigRational::one()),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Laurent::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Laurent>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&laurent_det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}
