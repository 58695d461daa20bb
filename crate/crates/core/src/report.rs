//! Machine-readable command output (schema 1).
//!
//! Field elements are arrays of decimal-string residues, polynomials are ascending
//! coefficient lists. Timing is kept in a separate optional section so that reports of
//! identical inputs are byte-identical by default.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{FqContext, FqElement, FqMatrix, PadicContext, ZqPolynomial};
use crate::combinat::MonomialBasis;
use crate::config::InstanceConfig;
use crate::hyperfrob::Truncation;
use crate::zeta::{SmoothnessVerdict, ZetaSummary};

pub const REPORT_SCHEMA: u32 = 1;

pub type Element = Vec<String>;

pub fn element(x: &FqElement) -> Element {
    x.coeffs().iter().map(u64::to_string).collect()
}

pub fn matrix(m: &FqMatrix) -> Vec<Vec<Element>> {
    m.to_rows().iter().map(|r| r.iter().map(element).collect()).collect()
}

/// Coefficients of `poly` mod p^k, each in the power basis.
pub fn zq_polynomial(poly: &ZqPolynomial, ctx: &PadicContext, k: u32) -> Vec<Element> {
    poly.residues(ctx, k)
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.resize(ctx.degree(), 0);
            c.iter().map(u64::to_string).collect()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct MonomialEntry {
    pub index: usize,
    pub exponent: Vec<u32>,
    pub name: String,
    pub in_u: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisSummary {
    pub n_monomials: usize,
    pub unit_count: usize,
    pub ordering: &'static str,
    pub monomials: Vec<MonomialEntry>,
}

impl BasisSummary {
    pub fn new(basis: &MonomialBasis) -> Self {
        Self {
            n_monomials: basis.len(),
            unit_count: basis.unit_count(),
            ordering: "monomials divisible by x0*..*xn first, then the rest; each block ascending lex",
            monomials: (0..basis.len())
                .map(|k| MonomialEntry {
                    index: k,
                    exponent: basis.exponent(k).to_vec(),
                    name: basis.monomial_name(k),
                    in_u: k < basis.unit_count(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HasseWittReport {
    pub normalization: crate::hassewitt::Normalization,
    pub matrix: Vec<Vec<Element>>,
    pub det: Element,
    pub ordinary: bool,
    /// `det(I - t H(lambda^{p^{a-1}}) .. H(lambda))` over F_p, ascending.
    pub frobenius_charpoly: Vec<String>,
    /// Whether the B form was defined and agreed.
    pub b_form_checked: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaReport {
    pub counts: Vec<String>,
    pub numerator: Vec<String>,
    pub functional_equation_sign: i8,
    pub counts_used: usize,
    pub counts_cross_checked: usize,
    pub smoothness: SmoothnessVerdict,
    pub denominator_check: bool,
    pub unit_degree: usize,
    pub precision: u32,
    pub rho: Vec<Element>,
}

impl ZetaReport {
    pub fn new(z: &ZetaSummary, ctx: &PadicContext) -> Self {
        Self {
            counts: z.counts.iter().map(u64::to_string).collect(),
            numerator: z.numerator.coefficients.iter().map(|c| c.to_string()).collect(),
            functional_equation_sign: z.numerator.functional_equation_sign,
            counts_used: z.numerator.counts_used,
            counts_cross_checked: z.numerator.counts_cross_checked,
            smoothness: z.smoothness.clone(),
            denominator_check: z.denominator_check,
            unit_degree: z.unit_degree,
            precision: ctx.precision(),
            rho: zq_polynomial(&z.unit_factor, ctx, ctx.precision()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub precision: u32,
    pub truncation: Truncation,
    pub rho: Vec<Element>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrecisionAgreement {
    pub precision: u32,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StageError {
    pub stage: &'static str,
    pub kind: &'static str,
    pub message: String,
}

/// The single document produced by every command; unused sections are omitted.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: &'static str,
    pub instance: InstanceConfig,
    pub field_modulus: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hasse_witt: Option<HasseWittReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<ZetaReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub agreement: Vec<PrecisionAgreement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<StageError>,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalization_note: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_seconds: Option<BTreeMap<&'static str, f64>>,
}

impl Report {
    pub fn new(command: &'static str, instance: &crate::ProblemInstance) -> Self {
        let field: &FqContext = instance.field();
        Self {
            schema: REPORT_SCHEMA,
            command,
            instance: InstanceConfig::from_instance(instance),
            field_modulus: field.modulus().iter().map(u64::to_string).collect(),
            basis: None,
            hasse_witt: None,
            zeta: None,
            theorem: None,
            agreement: Vec::new(),
            verified: None,
            errors: Vec::new(),
            exit_code: 0,
            normalization_note: None,
            timing_seconds: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
