use crate::arith::{FqContext, FqElement, Ring};
use crate::combinat::MonomialBasis;
use crate::error::{Error, Result};

/// One hypersurface `f = sum_k lambda_k x^{b_k}` over F_q, coefficients in canonical
/// monomial order, plus the requested p-adic precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    field: FqContext,
    basis: MonomialBasis,
    coefficients: Vec<FqElement>,
    precision: u32,
    explicit_modulus: bool,
}

impl ProblemInstance {
    pub fn new(
        p: u64,
        a: usize,
        n: usize,
        d: usize,
        modulus: Option<Vec<u64>>,
        coefficients: &[Vec<u64>],
        precision: u32,
    ) -> Result<Self> {
        let explicit_modulus = modulus.is_some();
        let field = FqContext::new(p, a, modulus).map_err(|e| Error::Validation(e.to_string()))?;
        let basis = MonomialBasis::new(n, d).map_err(|e| Error::Validation(e.to_string()))?;
        if coefficients.len() != basis.len() {
            return Err(Error::Validation(format!(
                "expected {} coefficients for n = {n}, d = {d}, got {}",
                basis.len(),
                coefficients.len()
            )));
        }
        if precision == 0 {
            return Err(Error::Validation("precision m must be >= 1".into()));
        }
        let coefficients = coefficients
            .iter()
            .map(|c| field.element(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { field, basis, coefficients, precision, explicit_modulus })
    }

    pub fn from_parts(field: FqContext, basis: MonomialBasis, coefficients: Vec<FqElement>, precision: u32) -> Self {
        assert_eq!(coefficients.len(), basis.len());
        Self { field, basis, coefficients, precision, explicit_modulus: true }
    }

    pub fn field(&self) -> &FqContext {
        &self.field
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn a(&self) -> usize {
        self.field.degree()
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn d(&self) -> usize {
        self.basis.d()
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        Self { precision, ..self.clone() }
    }

    pub fn explicit_modulus(&self) -> bool {
        self.explicit_modulus
    }

    pub fn coefficients(&self) -> &[FqElement] {
        &self.coefficients
    }

    /// Coefficients raised to `p^k`.
    pub fn twisted_coefficients(&self, k: usize) -> Vec<FqElement> {
        self.coefficients.iter().map(|c| self.field.frobenius(c, k)).collect()
    }

    /// The domain shape needed by the unit-root formula: `lambda_k != 0` for `k < M`.
    pub fn require_unit_coefficients(&self) -> Result<()> {
        match (0..self.basis.unit_count()).find(|&k| self.field.is_zero(&self.coefficients[k])) {
            Some(k) => Err(Error::ZeroUnitCoefficient(k)),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_errors() {
        let nine = vec![vec![1u64]; 9];
        let err = ProblemInstance::new(5, 1, 2, 3, None, &nine, 2).unwrap_err();
        assert!(err.to_string().contains("expected 10"), "{err}");
        let err = ProblemInstance::new(5, 1, 2, 2, None, &nine, 2).unwrap_err();
        assert!(err.to_string().contains("n + 1"), "{err}");
        let bad_residue = vec![vec![7u64]; 10];
        assert!(ProblemInstance::new(5, 1, 2, 3, None, &bad_residue, 2).is_err());
    }

    #[test]
    fn zero_unit_coefficient_is_flagged() {
        let mut c = vec![vec![1u64]; 10];
        c[0] = vec![0];
        let inst = ProblemInstance::new(5, 1, 2, 3, None, &c, 2).unwrap();
        assert_eq!(inst.require_unit_coefficients(), Err(Error::ZeroUnitCoefficient(0)));
    }
}
