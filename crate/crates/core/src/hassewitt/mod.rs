//! Hasse-Witt matrices `H(lambda)`, their Laurent companions `B(Lambda)`, the
//! determinant `D(Lambda)`, and the mod-p Frobenius characteristic polynomial.
//!
//! Entry `(i, j)` sums over `nu` in `N^N` with `sum nu_k a_k = p a_i - a_j`; such `nu`
//! always have `sum nu_k = p - 1`. Coefficients follow [`Normalization`].

pub mod laurent;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::arith::{FqContext, FqElement, FqMatrix, Matrix, Ring};
use crate::combinat::{solve_lattice, MonomialBasis};
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use laurent::{laurent_det, Laurent};

/// Coefficient convention for Hasse-Witt entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// `(p-1)! / prod nu_k!`: the coefficient of `x^{p u - v}` in `f^(p-1)`.
    #[default]
    Multinomial,
    /// `1 / prod nu_k!`, which differs from the above by the unit `(p-1)! = -1 mod p`.
    Literal,
}

impl std::str::FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "multinomial" => Ok(Self::Multinomial),
            "literal" => Ok(Self::Literal),
            other => Err(Error::Validation(format!("unknown normalization {other:?}"))),
        }
    }
}

fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// Exact rational coefficient of `Lambda^nu` in `H_ij`.
pub fn coefficient(nu: &[u32], p: u64, norm: Normalization) -> BigRational {
    let den = nu.iter().fold(BigUint::one(), |acc, &v| acc * factorial(v as u64));
    let num = match norm {
        Normalization::Multinomial => factorial(p - 1),
        Normalization::Literal => BigUint::one(),
    };
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Supports of every entry: `support[i][j]` lists the `nu` vectors.
pub fn hasse_witt_support(basis: &MonomialBasis, p: u64) -> Vec<Vec<Vec<Vec<u32>>>> {
    let m = basis.unit_count();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let target: Vec<i64> = basis.augmented(j).iter().map(|x| -x).collect();
                    solve_lattice(basis, i, &target, p)
                        .into_iter()
                        .map(|lv| {
                            let nu: Vec<u32> = lv
                                .l
                                .iter()
                                .enumerate()
                                .map(|(k, &x)| {
                                    let v = if k == i { x + p as i64 } else { x };
                                    assert!(v >= 0, "pivot exponent exceeds p");
                                    v as u32
                                })
                                .collect();
                            assert_eq!(nu.iter().sum::<u32>() as u64, p - 1, "support must have |nu| = p - 1");
                            nu
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// `H-bar(lambda)` with entries in F_q, at an arbitrary coefficient vector.
pub fn hasse_witt_at(
    basis: &MonomialBasis,
    field: &FqContext,
    lambda: &[FqElement],
    norm: Normalization,
) -> FqMatrix {
    let p = field.p();
    let support = hasse_witt_support(basis, p);
    let m = basis.unit_count();
    Matrix::from_fn(m, m, |i, j| {
        support[i][j].iter().fold(field.zero(), |acc, nu| {
            let c = coefficient(nu, p, norm);
            let c = (c.numer() % p).to_u64().unwrap()
                * crate::arith::inv_mod((c.denom() % p).to_u64().unwrap(), p).expect("nu_k < p")
                % p;
            let term = nu.iter().zip(lambda).fold(field.from_int(c as i64), |t, (&e, x)| {
                field.mul(&t, &field.pow(x, e as u64))
            });
            field.add(&acc, &term)
        })
    })
}

pub fn hasse_witt(instance: &ProblemInstance, norm: Normalization) -> FqMatrix {
    hasse_witt_at(instance.basis(), instance.field(), instance.coefficients(), norm)
}

/// `B-bar_ij(lambda) = lambda_i^{-p} lambda_j H-bar_ij(lambda)`.
pub fn b_matrix_at(
    basis: &MonomialBasis,
    field: &FqContext,
    lambda: &[FqElement],
    norm: Normalization,
) -> Result<FqMatrix> {
    let m = basis.unit_count();
    if let Some(k) = (0..m).find(|&k| field.is_zero(&lambda[k])) {
        return Err(Error::ZeroUnitCoefficient(k));
    }
    let h = hasse_witt_at(basis, field, lambda, norm);
    let p = field.p();
    Ok(Matrix::from_fn(m, m, |i, j| {
        let scale = field.mul(&field.inv(&field.pow(&lambda[i], p)).unwrap(), &lambda[j]);
        field.mul(&scale, h.get(i, j))
    }))
}

/// Mod-p Frobenius data: `det(I - t H(lambda^{p^{a-1}}) .. H(lambda))` and, when every
/// U-coefficient is nonzero, the same for the `B` form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCharpoly {
    pub h_product: FqMatrix,
    /// Ascending coefficients in F_p.
    pub charpoly: Vec<u64>,
    pub b_product: Option<FqMatrix>,
}

pub fn hw_frobenius_charpoly(instance: &ProblemInstance) -> Result<FrobeniusCharpoly> {
    let field = instance.field();
    let basis = instance.basis();
    let m = basis.unit_count();
    let a = instance.a();
    let mut h_product = FqMatrix::identity(field, m);
    let mut b_product = Some(FqMatrix::identity(field, m));
    for k in 0..a {
        let lam = instance.twisted_coefficients(k);
        h_product = hasse_witt_at(basis, field, &lam, Normalization::Multinomial).mul(field, &h_product);
        b_product = match (b_product, b_matrix_at(basis, field, &lam, Normalization::Multinomial)) {
            (Some(acc), Ok(b)) => Some(b.mul(field, &acc)),
            _ => None,
        };
    }
    let charpoly = prime_field_coeffs(field, &h_product.reversed_charpoly(field));
    if let Some(b) = &b_product {
        let other = prime_field_coeffs(field, &b.reversed_charpoly(field));
        assert_eq!(other, charpoly, "H and B forms must have the same characteristic polynomial");
    }
    Ok(FrobeniusCharpoly { h_product, charpoly, b_product })
}

fn prime_field_coeffs(field: &FqContext, coeffs: &[FqElement]) -> Vec<u64> {
    coeffs
        .iter()
        .map(|c| {
            assert!(field.in_prime_field(c), "Frobenius characteristic polynomial must lie over F_p");
            c.coeffs()[0]
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ordinarity {
    pub ordinary: bool,
    /// `det H-bar(lambda)`, the certificate.
    pub det: FqElement,
}

/// `det H-bar(lambda) != 0`, equivalently `D-bar(lambda) != 0`.
pub fn ordinarity_check(instance: &ProblemInstance) -> Result<Ordinarity> {
    instance.require_unit_coefficients()?;
    let h = hasse_witt(instance, Normalization::Multinomial);
    let det = h.det(instance.field());
    Ok(Ordinarity { ordinary: !instance.field().is_zero(&det), det })
}

/// Symbolic `B(Lambda)` and `D(Lambda) = det B(Lambda)`.
#[derive(Clone, Debug)]
pub struct SymbolicBD {
    pub b: Vec<Vec<Laurent>>,
    pub d: Laurent,
}

impl SymbolicBD {
    pub fn constant_term(&self) -> BigRational {
        self.d.constant_term()
    }
}

pub fn symbolic_bd(basis: &MonomialBasis, p: u64, norm: Normalization) -> Result<SymbolicBD> {
    if basis.len() > 15 || p > 5 {
        return Err(Error::SizeGuardExceeded { n_monomials: basis.len(), p });
    }
    let nvars = basis.len();
    let support = hasse_witt_support(basis, p);
    let m = basis.unit_count();
    let b: Vec<Vec<Laurent>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut shift = vec![0i64; nvars];
                    shift[i] -= p as i64;
                    shift[j] += 1;
                    let mut entry = Laurent::zero(nvars);
                    for nu in &support[i][j] {
                        let e: Vec<i64> = nu.iter().zip(&shift).map(|(&x, &s)| x as i64 + s).collect();
                        entry.add_term(e, coefficient(nu, p, norm));
                    }
                    entry
                })
                .collect()
        })
        .collect();
    let d = laurent_det(&b);
    Ok(SymbolicBD { b, d })
}
