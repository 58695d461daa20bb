//! The field F_q, q = p^a, in the power basis of a monic irreducible modulus.

use serde::{Deserialize, Serialize};

use super::{is_prime, poly, Ring};
use crate::error::{Error, Result};

/// Element of F_q: `a` residues mod p, ascending powers of the generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FqElement(pub Vec<u64>);

impl FqElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqContext {
    p: u64,
    degree: usize,
    /// Monic, `degree + 1` entries.
    modulus: Vec<u64>,
}

impl FqContext {
    /// Build F_{p^a}. Without an explicit modulus the lexicographically least monic
    /// irreducible of degree `a` is used (tuples `(c_0, .., c_{a-1})` scanned ascending).
    pub fn new(p: u64, a: usize, modulus: Option<Vec<u64>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if a == 0 {
            return Err(Error::InvalidArgument("extension degree must be >= 1".into()));
        }
        if p.checked_pow(a as u32).is_none_or(|q| q >= 1 << 40) {
            return Err(Error::InvalidArgument(format!("field F_{p}^{a} is too large")));
        }
        let modulus = match modulus {
            Some(mut m) => {
                poly::trim(&mut m);
                let ok = m.len() == a + 1
                    && m[a] == 1
                    && m.iter().all(|&c| c < p)
                    && is_irreducible(&m, p);
                if !ok {
                    return Err(Error::ReducibleModulus(m, a, p));
                }
                m
            }
            None => least_irreducible(p, a),
        };
        Ok(Self { p, degree: a, modulus })
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.degree as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn from_int(&self, x: i64) -> FqElement {
        let mut c = vec![0; self.degree];
        c[0] = super::from_i64(x, self.p);
        FqElement(c)
    }

    /// Validate and pad a residue list.
    pub fn element(&self, coeffs: &[u64]) -> Result<FqElement> {
        if coeffs.len() > self.degree || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Validation(format!(
                "{coeffs:?} is not an element of F_{}^{} (need at most {} residues in [0, {}))",
                self.p, self.degree, self.degree, self.p
            )));
        }
        let mut c = coeffs.to_vec();
        c.resize(self.degree, 0);
        Ok(FqElement(c))
    }

    /// Position in the enumeration order: lexicographic on `(c_0, .., c_{a-1})`.
    pub fn index_of(&self, x: &FqElement) -> u64 {
        x.0.iter().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn from_index(&self, mut idx: u64) -> FqElement {
        let mut c = vec![0; self.degree];
        for slot in c.iter_mut().rev() {
            *slot = idx % self.p;
            idx /= self.p;
        }
        FqElement(c)
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> + '_ {
        (0..self.order()).map(|i| self.from_index(i))
    }

    /// The class of the generator `t`.
    pub fn generator(&self) -> FqElement {
        if self.degree == 1 {
            self.from_int(-(self.modulus[0] as i64))
        } else {
            let mut c = vec![0; self.degree];
            c[1] = 1;
            FqElement(c)
        }
    }

    pub fn pow(&self, x: &FqElement, mut e: u64) -> FqElement {
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

    /// `x^(p^k)`.
    pub fn frobenius(&self, x: &FqElement, k: usize) -> FqElement {
        let mut y = x.clone();
        for _ in 0..k {
            y = self.pow(&y, self.p);
        }
        y
    }

    /// True when the element lies in the prime field.
    pub fn in_prime_field(&self, x: &FqElement) -> bool {
        x.0[1..].iter().all(|&c| c == 0)
    }

    /// Evaluate a polynomial over F_p (ascending coefficients) at `x`.
    pub fn eval_prime_poly(&self, coeffs: &[u64], x: &FqElement) -> FqElement {
        coeffs.iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, x), &self.from_int(c as i64))
        })
    }

    fn reduce(&self, mut v: Vec<u64>) -> FqElement {
        let a = self.degree;
        let p = self.p;
        for k in (a..v.len()).rev() {
            let c = v[k];
            if c == 0 {
                continue;
            }
            for j in 0..a {
                v[k - a + j] = super::sub_mod(v[k - a + j], super::mul_mod(c, self.modulus[j], p), p);
            }
            v[k] = 0;
        }
        v.resize(a, 0);
        FqElement(v)
    }
}

impl Ring for FqContext {
    type Elem = FqElement;

    fn zero(&self) -> FqElement {
        FqElement(vec![0; self.degree])
    }

    fn one(&self) -> FqElement {
        self.from_int(1)
    }

    fn add(&self, x: &FqElement, y: &FqElement) -> FqElement {
        FqElement(x.0.iter().zip(&y.0).map(|(&a, &b)| super::add_mod(a, b, self.p)).collect())
    }

    fn sub(&self, x: &FqElement, y: &FqElement) -> FqElement {
        FqElement(x.0.iter().zip(&y.0).map(|(&a, &b)| super::sub_mod(a, b, self.p)).collect())
    }

    fn mul(&self, x: &FqElement, y: &FqElement) -> FqElement {
        if self.degree == 1 {
            return FqElement(vec![super::mul_mod(x.0[0], y.0[0], self.p)]);
        }
        let mut v = vec![0u64; 2 * self.degree - 1];
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                v[i + j] = super::add_mod(v[i + j], super::mul_mod(a, b, self.p), self.p);
            }
        }
        self.reduce(v)
    }

    fn neg(&self, x: &FqElement) -> FqElement {
        FqElement(x.0.iter().map(|&a| super::sub_mod(0, a, self.p)).collect())
    }

    fn is_zero(&self, x: &FqElement) -> bool {
        x.0.iter().all(|&c| c == 0)
    }

    fn is_unit(&self, x: &FqElement) -> bool {
        !self.is_zero(x)
    }

    fn inv(&self, x: &FqElement) -> Option<FqElement> {
        if self.is_zero(x) {
            None
        } else {
            Some(self.pow(x, self.order() - 2))
        }
    }
}

/// Irreducibility by trial division with every monic polynomial of degree <= deg/2.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for k in 1..=deg / 2 {
        for idx in 0..p.pow(k as u32) {
            let mut g = vec![0u64; k + 1];
            let mut r = idx;
            for slot in g.iter_mut().take(k) {
                *slot = r % p;
                r /= p;
            }
            g[k] = 1;
            let (_, rem) = poly::divrem(f, &g, p);
            if rem.is_empty() {
                return false;
            }
        }
    }
    true
}

fn least_irreducible(p: u64, a: usize) -> Vec<u64> {
    for idx in 0..p.pow(a as u32) {
        let mut f = vec![0u64; a + 1];
        let mut r = idx;
        for slot in f[..a].iter_mut().rev() {
            *slot = r % p;
            r /= p;
        }
        f[a] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Roots in `big` of a polynomial over F_p, in enumeration order.
pub(crate) fn prime_poly_roots(big: &FqContext, coeffs: &[u64]) -> Vec<FqElement> {
    big.elements()
        .filter(|x| big.is_zero(&big.eval_prime_poly(coeffs, x)))
        .collect()
}

/// An embedding F_q -> F_{q^s}: the image of the generator of `small`.
#[derive(Clone, Debug)]
pub struct Embedding {
    image_of_generator: FqElement,
}

impl Embedding {
    pub fn new(small: &FqContext, big: &FqContext) -> Result<Self> {
        if small.p != big.p || !big.degree.is_multiple_of(small.degree) {
            return Err(Error::InvalidArgument(format!(
                "F_{}^{} does not embed in F_{}^{}",
                small.p, small.degree, big.p, big.degree
            )));
        }
        if small == big {
            return Ok(Self { image_of_generator: big.generator() });
        }
        let root = prime_poly_roots(big, &small.modulus)
            .into_iter()
            .next()
            .expect("an extension of degree divisible by a contains all roots");
        Ok(Self { image_of_generator: root })
    }

    pub fn apply(&self, big: &FqContext, x: &FqElement) -> FqElement {
        big.eval_prime_poly(&x.0, &self.image_of_generator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monic_quadratics_irreducible(p: u64) -> Vec<Vec<u64>> {
        // roots checked by substitution: a quadratic is irreducible iff it has no root
        let mut out = Vec::new();
        for c0 in 0..p {
            for c1 in 0..p {
                if (0..p).all(|x| (x * x + c1 * x + c0) % p != 0) {
                    out.push(vec![c0, c1, 1]);
                }
            }
        }
        out
    }

    #[test]
    fn prime_field_default() {
        let f5 = FqContext::new(5, 1, None).unwrap();
        assert_eq!(f5.modulus(), &[0, 1]);
        assert_eq!(f5.order(), 5);
        let two = f5.from_int(2);
        assert_eq!(f5.mul(&two, &f5.from_int(3)), f5.one());
    }

    #[test]
    fn f4_uses_the_only_irreducible_quadratic() {
        assert_eq!(monic_quadratics_irreducible(2), vec![vec![1, 1, 1]]);
        let f4 = FqContext::new(2, 2, None).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn t2_plus_2_over_f5_is_accepted() {
        assert!(monic_quadratics_irreducible(5).contains(&vec![2, 0, 1]));
        let f25 = FqContext::new(5, 2, Some(vec![2, 0, 1])).unwrap();
        assert_eq!(f25.order(), 25);
        // default compares ascending coefficient lists: [1, 1, 1] < [2, 0, 1]
        assert_eq!(FqContext::new(5, 2, None).unwrap().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(FqContext::new(6, 1, None), Err(Error::NotPrime(6)));
        // t^2 + 1 = (t - 2)(t + 2) over F_5
        assert!(matches!(
            FqContext::new(5, 2, Some(vec![1, 0, 1])),
            Err(Error::ReducibleModulus(..))
        ));
    }

    #[test]
    fn frobenius_fixes_every_element_after_a_steps() {
        for (p, a) in [(2, 3), (3, 2), (5, 2)] {
            let k = FqContext::new(p, a, None).unwrap();
            for x in k.elements() {
                assert_eq!(k.pow(&x, k.order()), x);
                assert_eq!(k.frobenius(&x, a), x);
                if !k.is_zero(&x) {
                    assert_eq!(k.mul(&x, &k.inv(&x).unwrap()), k.one());
                }
            }
        }
    }

    #[test]
    fn index_round_trip_and_order() {
        let k = FqContext::new(3, 2, None).unwrap();
        let all: Vec<_> = k.elements().collect();
        assert_eq!(all[1], FqElement(vec![0, 1]));
        assert_eq!(all[3], FqElement(vec![1, 0]));
        for (i, x) in all.iter().enumerate() {
            assert_eq!(k.index_of(x), i as u64);
        }
    }

    #[test]
    fn embedding_is_a_ring_map() {
        let small = FqContext::new(2, 2, None).unwrap();
        let big = FqContext::new(2, 4, None).unwrap();
        let e = Embedding::new(&small, &big).unwrap();
        for x in small.elements() {
            for y in small.elements() {
                let lhs = e.apply(&big, &small.mul(&x, &y));
                let rhs = big.mul(&e.apply(&big, &x), &e.apply(&big, &y));
                assert_eq!(lhs, rhs);
                let lhs = e.apply(&big, &small.add(&x, &y));
                let rhs = big.add(&e.apply(&big, &x), &e.apply(&big, &y));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
