//! Unramified p-adic integers Z_q = Z_p[t]/(f) truncated mod p^(m+g).

use super::{add_mod, checked_prime_power, mul_mod, sub_mod, FqContext, FqElement, Ring};
use crate::error::{Error, Result};

/// Default number of guard digits carried beyond the requested precision.
pub const GUARD_DIGITS: u32 = 2;

/// `a` residues mod p^(m+g) in the power basis of the lifted modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZqElement(pub Vec<u64>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicContext {
    fq: FqContext,
    precision: u32,
    guard: u32,
    /// p^(precision + guard)
    modulus: u64,
    /// Monic integer lift of the residue field modulus (digits in [0, p)).
    lifted: Vec<u64>,
}

impl PadicContext {
    pub fn new(fq: &FqContext, precision: u32, guard: u32) -> Result<Self> {
        if precision == 0 {
            return Err(Error::InvalidArgument("precision must be >= 1".into()));
        }
        let total = precision + guard;
        let modulus =
            checked_prime_power(fq.p(), total).ok_or(Error::PrecisionOverflow(total, fq.p()))?;
        Ok(Self {
            fq: fq.clone(),
            precision,
            guard,
            modulus,
            lifted: fq.modulus().to_vec(),
        })
    }

    pub fn with_default_guard(fq: &FqContext, precision: u32) -> Result<Self> {
        Self::new(fq, precision, GUARD_DIGITS)
    }

    pub fn fq(&self) -> &FqContext {
        &self.fq
    }

    pub fn p(&self) -> u64 {
        self.fq.p()
    }

    pub fn degree(&self) -> usize {
        self.fq.degree()
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// Number of p-adic digits actually carried.
    pub fn working_digits(&self) -> u32 {
        self.precision + self.guard
    }

    pub fn working_modulus(&self) -> u64 {
        self.modulus
    }

    pub fn lifted_modulus(&self) -> &[u64] {
        &self.lifted
    }

    pub fn from_i64(&self, x: i64) -> ZqElement {
        self.from_u64(super::from_i64(x, self.modulus))
    }

    pub fn from_u64(&self, x: u64) -> ZqElement {
        let mut c = vec![0; self.degree()];
        c[0] = x % self.modulus;
        ZqElement(c)
    }

    /// The digit lift with residues in [0, p).
    pub fn lift_digits(&self, x: &FqElement) -> ZqElement {
        ZqElement(x.coeffs().to_vec())
    }

    pub fn reduce_to_fq(&self, x: &ZqElement) -> FqElement {
        FqElement(x.0.iter().map(|&c| c % self.p()).collect())
    }

    /// Residues of `x` mod p^k.
    pub fn truncate(&self, x: &ZqElement, k: u32) -> Vec<u64> {
        let pk = self.p().pow(k);
        x.0.iter().map(|&c| c % pk).collect()
    }

    /// p-adic valuation of the element (minimum over coordinates), `None` for zero.
    pub fn valuation(&self, x: &ZqElement) -> Option<u32> {
        x.0.iter()
            .filter(|&&c| c != 0)
            .map(|&c| {
                let mut v = 0;
                let mut c = c;
                while c % self.p() == 0 {
                    c /= self.p();
                    v += 1;
                }
                v
            })
            .min()
    }

    pub fn pow(&self, x: &ZqElement, mut e: u64) -> ZqElement {
        let mut acc = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Teichmüller representative of `c`: the unique fixed point of `x -> x^q`
    /// congruent to `c` mod p. Each iteration gains at least one p-adic digit, so
    /// `m + g` iterations from the digit lift suffice.
    pub fn teichmueller(&self, c: &FqElement) -> ZqElement {
        let q = self.fq.order();
        let mut x = self.lift_digits(c);
        for _ in 0..self.working_digits() {
            x = self.pow(&x, q);
        }
        assert_eq!(self.pow(&x, q), x, "Teichmüller iteration did not converge");
        x
    }

    /// `x^(p^k)`.
    pub fn pow_p(&self, x: &ZqElement, k: usize) -> ZqElement {
        let mut y = x.clone();
        for _ in 0..k {
            y = self.pow(&y, self.p());
        }
        y
    }

    fn reduce(&self, mut v: Vec<u64>) -> ZqElement {
        let a = self.degree();
        let m = self.modulus;
        for k in (a..v.len()).rev() {
            let c = v[k];
            if c == 0 {
                continue;
            }
            for j in 0..a {
                v[k - a + j] = sub_mod(v[k - a + j], mul_mod(c, self.lifted[j], m), m);
            }
            v[k] = 0;
        }
        v.resize(a, 0);
        ZqElement(v)
    }
}

impl Ring for PadicContext {
    type Elem = ZqElement;

    fn zero(&self) -> ZqElement {
        ZqElement(vec![0; self.degree()])
    }

    fn one(&self) -> ZqElement {
        self.from_u64(1)
    }

    fn add(&self, x: &ZqElement, y: &ZqElement) -> ZqElement {
        ZqElement(x.0.iter().zip(&y.0).map(|(&a, &b)| add_mod(a, b, self.modulus)).collect())
    }

    fn sub(&self, x: &ZqElement, y: &ZqElement) -> ZqElement {
        ZqElement(x.0.iter().zip(&y.0).map(|(&a, &b)| sub_mod(a, b, self.modulus)).collect())
    }

    fn mul(&self, x: &ZqElement, y: &ZqElement) -> ZqElement {
        let m = self.modulus;
        if self.degree() == 1 {
            return ZqElement(vec![mul_mod(x.0[0], y.0[0], m)]);
        }
        let mut v = vec![0u64; 2 * self.degree() - 1];
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                v[i + j] = add_mod(v[i + j], mul_mod(a, b, m), m);
            }
        }
        self.reduce(v)
    }

    fn neg(&self, x: &ZqElement) -> ZqElement {
        ZqElement(x.0.iter().map(|&a| sub_mod(0, a, self.modulus)).collect())
    }

    fn is_zero(&self, x: &ZqElement) -> bool {
        x.0.iter().all(|&c| c == 0)
    }

    fn is_unit(&self, x: &ZqElement) -> bool {
        !self.fq.is_zero(&self.reduce_to_fq(x))
    }

    /// Newton iteration `y -> y (2 - x y)` from the residue field inverse.
    fn inv(&self, x: &ZqElement) -> Option<ZqElement> {
        let r = self.fq.inv(&self.reduce_to_fq(x))?;
        let mut y = self.lift_digits(&r);
        let two = self.from_u64(2);
        let mut digits = 1;
        while digits < self.working_digits() {
            y = self.mul(&y, &self.sub(&two, &self.mul(x, &y)));
            digits *= 2;
        }
        debug_assert_eq!(self.mul(x, &y), self.one());
        Some(y)
    }
}
