//! The point-counting oracle: exact zeta numerators of smooth hypersurfaces and their
//! p-adic unit factors.
//!
//! For smooth `X` of dimension `n - 1` in `P^n`,
//! `N_s = sum_{i<n} q^(is) + (-1)^(n-1) sum_j alpha_j^s`, and the numerator is
//! `P(t) = prod_j (1 - alpha_j t)`, recovered from the power sums by Newton's identities.
//! For plane curves only `g` counts are needed thanks to the functional equation;
//! every further count the budget allows is used as a cross-check.

mod count;
mod table;

pub use count::{
    affine_cone_count, count_points, smoothness_probe, within_budget, ExtensionForms, SmoothnessVerdict,
    POINT_BUDGET,
};
pub use table::ZechField;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{hensel_unit_factor, PadicContext, ZqPolynomial};
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;

/// `((d-1)^(n+1) + (-1)^(n+1) (d-1)) / d`, the degree of the numerator of a smooth
/// degree-`d` hypersurface in `P^n`.
pub fn expected_degree(n: usize, d: usize) -> usize {
    let dm = (d - 1) as i64;
    let sign = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
    ((dm.pow(n as u32 + 1) + sign * dm) / d as i64) as usize
}

/// Counts needed before the functional equation determines the numerator.
pub fn required_counts(n: usize, d: usize) -> usize {
    let deg = expected_degree(n, d);
    if n == 2 {
        deg / 2
    } else {
        deg
    }
}

/// The exact zeta numerator with the data used to certify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaNumerator {
    /// Ascending, `coefficients[0] = 1`, length `expected_degree + 1`.
    #[serde(serialize_with = "serialize_bigints")]
    pub coefficients: Vec<BigInt>,
    /// Sign `epsilon` in `c_(D-k) = epsilon q^(w(D-2k)/2) c_k`, `w = n - 1`.
    pub functional_equation_sign: i8,
    /// Counts consumed to determine the coefficients.
    pub counts_used: usize,
    /// Further counts confirmed against the numerator.
    pub counts_cross_checked: usize,
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn power_sums(q: u64, n: usize, counts: &[u64]) -> Vec<BigInt> {
    let q = BigInt::from(q);
    counts
        .iter()
        .enumerate()
        .map(|(idx, &ns)| {
            let s = idx as u32 + 1;
            let trivial: BigInt = (0..n as u32).map(|i| q.pow(i * s)).sum();
            let diff = BigInt::from(ns) - trivial;
            if n.is_multiple_of(2) {
                -diff
            } else {
                diff
            }
        })
        .collect()
}

/// Power sums `S_1..S_k` of the reciprocal roots of `P`.
fn power_sums_of(coeffs: &[BigInt], k: usize) -> Vec<BigInt> {
    let c = |i: usize| coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
    let mut sums: Vec<BigInt> = Vec::with_capacity(k);
    for j in 1..=k {
        let mut s = -BigInt::from(j) * c(j);
        for i in 1..j {
            s -= &sums[i - 1] * c(j - i);
        }
        sums.push(s);
    }
    sums
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Rebuild `P(t)` from `counts[s-1] = N_s` and certify it against the remaining counts.
pub fn zeta_numerator(instance: &ProblemInstance, counts: &[u64]) -> Result<ZetaNumerator> {
    let (n, d) = (instance.n(), instance.d());
    let q = BigInt::from(instance.q());
    let deg = expected_degree(n, d);
    let needed = required_counts(n, d);
    if counts.len() < needed {
        return Err(Error::InvalidArgument(format!("need {needed} point counts, got {}", counts.len())));
    }
    let sums = power_sums(instance.q(), n, counts);
    let mut c = vec![BigInt::one()];
    for k in 1..=needed {
        let acc: BigInt = (1..=k).map(|i| &sums[i - 1] * &c[k - i]).sum();
        let (quot, rem) = (-acc).div_rem(&BigInt::from(k));
        if !rem.is_zero() {
            return Err(Error::InconsistentCounts(format!(
                "Newton identity at degree {k} is not integral"
            )));
        }
        c.push(quot);
    }
    let weight = (n - 1) as u32;
    let sign: i8 = if n == 2 {
        let g = deg / 2;
        c.resize(deg + 1, BigInt::zero());
        for k in 0..g {
            c[deg - k] = q.pow((g - k) as u32) * &c[k];
        }
        1
    } else {
        if (weight as usize * deg) % 2 == 1 {
            return Err(Error::InconsistentCounts("odd total weight".into()));
        }
        let top = q.pow(weight * deg as u32 / 2);
        let eps = if c[deg] == top {
            1
        } else if c[deg] == -&top {
            -1
        } else {
            return Err(Error::InconsistentCounts(format!("leading coefficient {} is not ±{top}", c[deg])));
        };
        for k in 0..=deg / 2 {
            let factor = BigInt::from(eps) * q.pow(weight * (deg - 2 * k) as u32 / 2);
            if c[deg - k] != factor * &c[k] {
                return Err(Error::InconsistentCounts(format!("functional equation fails at degree {k}")));
            }
        }
        eps
    };
    // Weil bounds |c_k| <= C(D, k) q^(wk/2)
    for (k, ck) in c.iter().enumerate() {
        let bound = binomial(deg, k).pow(2) * q.pow(weight * k as u32);
        if ck * ck > bound {
            return Err(Error::InconsistentCounts(format!("coefficient {k} = {ck} violates the Weil bound")));
        }
    }
    let predicted = power_sums_of(&c, counts.len());
    for s in needed..counts.len() {
        if predicted[s] != sums[s] {
            return Err(Error::InconsistentCounts(format!(
                "N_{} disagrees with the numerator rebuilt from N_1..N_{needed}",
                s + 1
            )));
        }
    }
    Ok(ZetaNumerator {
        coefficients: c,
        functional_equation_sign: sign,
        counts_used: needed,
        counts_cross_checked: counts.len() - needed,
    })
}

/// Largest `s <= cap` whose enumeration fits the budget.
pub fn affordable_counts(instance: &ProblemInstance, cap: usize) -> usize {
    (1..=cap).take_while(|&s| within_budget(instance.q(), s as u32, instance.n())).count()
}

/// `rho(t)` mod p^m from the Hensel split of `P` and its degree.
pub fn unit_factor_of_zeta(numerator: &ZetaNumerator, ctx: &PadicContext) -> Result<(ZqPolynomial, usize)> {
    let uf = hensel_unit_factor(&numerator.coefficients, ctx)?;
    Ok((uf.rho, uf.degree))
}

/// Everything the oracle knows about one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaSummary {
    pub counts: Vec<u64>,
    pub numerator: ZetaNumerator,
    pub smoothness: SmoothnessVerdict,
    /// The numerator passed every consistency check available to a smooth instance.
    pub denominator_check: bool,
    #[serde(skip)]
    pub unit_factor: ZqPolynomial,
    pub unit_degree: usize,
}

/// Count, probe, rebuild and split. Counts run to `expected_degree + 1` or the budget,
/// whichever is smaller; singular instances are refused.
pub fn zeta_summary(instance: &ProblemInstance, ctx: &PadicContext) -> Result<ZetaSummary> {
    let (n, d) = (instance.n(), instance.d());
    let needed = required_counts(n, d);
    let s_max = affordable_counts(instance, expected_degree(n, d) + 1);
    if s_max < needed {
        return Err(Error::EnumerationBudgetExceeded { q: instance.q(), s: needed as u32 });
    }
    let smoothness = smoothness_probe(instance, s_max as u32)?;
    if let SmoothnessVerdict::Singular { s, point } = &smoothness {
        return Err(Error::InconsistentCounts(format!(
            "singular point {point:?} over F_{}^{}; the zeta numerator is not a polynomial of the smooth shape",
            instance.q(),
            s
        )));
    }
    let counts = (1..=s_max as u32).map(|s| count_points(instance, s)).collect::<Result<Vec<_>>>()?;
    let numerator = zeta_numerator(instance, &counts)?;
    let (unit_factor, unit_degree) = unit_factor_of_zeta(&numerator, ctx)?;
    Ok(ZetaSummary { counts, numerator, smoothness, denominator_check: true, unit_factor, unit_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::MonomialBasis;

    #[test]
    fn degree_formula() {
        assert_eq!(expected_degree(2, 3), 2);
        assert_eq!(expected_degree(2, 4), 6);
        assert_eq!(expected_degree(3, 4), 21);
        assert_eq!(expected_degree(1, 3), 2);
        assert_eq!(required_counts(2, 4), 3);
    }

    fn hesse(p: u64, lambda: u64) -> ProblemInstance {
        let basis = MonomialBasis::new(2, 3).unwrap();
        let mut c = vec![vec![0u64]; 10];
        c[0] = vec![lambda];
        for e in [[3, 0, 0], [0, 3, 0], [0, 0, 3]] {
            c[basis.index_of(&e).unwrap()] = vec![1];
        }
        ProblemInstance::new(p, 1, 2, 3, None, &c, 2).unwrap()
    }

    #[test]
    fn genus_one_from_a_single_count() {
        let inst = hesse(5, 2);
        let num = zeta_numerator(&inst, &[7]).unwrap();
        let ints: Vec<i64> = num.coefficients.iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(ints, vec![1, 1, 5]);
        assert_eq!(num.counts_cross_checked, 0);
    }

    #[test]
    fn nodal_counts_fail_the_cross_check() {
        // a non-split node: N_1 = q + 2, N_2 = q^2 (split over F_25)
        let inst = hesse(5, 2);
        assert!(matches!(zeta_numerator(&inst, &[7, 25]), Err(Error::InconsistentCounts(_))));
        let ctx = PadicContext::with_default_guard(inst.field(), 2).unwrap();
        assert!(matches!(zeta_summary(&inst, &ctx), Err(Error::InconsistentCounts(_))));
    }

    #[test]
    fn triple_line_is_rejected() {
        // x0^3: N_1 = 6 and N_2 = 26 give power sums 0 and 0, but c_2 = q forces S_2 = -2q
        let basis = MonomialBasis::new(2, 3).unwrap();
        let mut c = vec![vec![0u64]; 10];
        c[basis.index_of(&[3, 0, 0]).unwrap()] = vec![1];
        let inst = ProblemInstance::new(5, 1, 2, 3, None, &c, 2).unwrap();
        assert!(matches!(zeta_numerator(&inst, &[6, 26]), Err(Error::InconsistentCounts(_))));
    }

    #[test]
    fn supersingular_hesse() {
        let inst = hesse(5, 1);
        let ctx = PadicContext::with_default_guard(inst.field(), 2).unwrap();
        let z = zeta_summary(&inst, &ctx).unwrap();
        assert_eq!(z.counts[0], 6);
        assert_eq!(z.numerator.coefficients, vec![BigInt::from(1), BigInt::from(0), BigInt::from(5)]);
        assert_eq!(z.unit_degree, 0);
        assert!(z.numerator.counts_cross_checked >= 1);
    }

    #[test]
    fn smooth_hesse_unit_factor() {
        // lambda = 3: N_1 = 3, a = 3, unit root 18 mod 25
        let inst = hesse(5, 3);
        let ctx = PadicContext::with_default_guard(inst.field(), 2).unwrap();
        let z = zeta_summary(&inst, &ctx).unwrap();
        assert_eq!(z.counts[0], 3);
        assert_eq!(z.unit_degree, 1);
        assert_eq!(z.unit_factor.residues(&ctx, 2), vec![vec![1], vec![7]]);
        assert!(matches!(z.smoothness, SmoothnessVerdict::LikelySmooth { .. }));
    }

    #[test]
    fn newton_round_trip() {
        // P = (1 - 2t)(1 + 3t) = 1 + t - 6t^2: power sums 2 + (-3) = -1, 4 + 9 = 13
        let c = vec![BigInt::from(1), BigInt::from(1), BigInt::from(-6)];
        assert_eq!(power_sums_of(&c, 3), vec![BigInt::from(-1), BigInt::from(13), BigInt::from(-19)]);
    }
}
