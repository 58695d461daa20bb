//! Exhaustive point enumeration over `F_{q^s}`.

use rayon::prelude::*;
use serde::Serialize;

use super::table::{Rep, ZechField};
use crate::arith::{Embedding, FqContext};
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;

/// Largest allowed `q^(s(n+1))`.
pub const POINT_BUDGET: f64 = 1e8;

/// Sparse form over the enumeration field: `(exponent, coefficient)`, zero terms dropped.
type Form = Vec<(Vec<u32>, Rep)>;

/// `f` and its partial derivatives with coefficients embedded in `F_{q^s}`.
pub struct ExtensionForms {
    table: ZechField,
    n: usize,
    f: Form,
    partials: Vec<Form>,
}

/// Whether `q^(s(n+1))` fits the enumeration budget.
pub fn within_budget(q: u64, s: u32, n: usize) -> bool {
    (q as f64).powi((s as usize * (n + 1)) as i32) <= POINT_BUDGET
}

impl ExtensionForms {
    pub fn new(instance: &ProblemInstance, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidArgument("extension degree s must be >= 1".into()));
        }
        let (q, n) = (instance.q(), instance.n());
        if !within_budget(q, s, n) {
            return Err(Error::EnumerationBudgetExceeded { q, s });
        }
        let small = instance.field();
        let big = FqContext::new(instance.p(), instance.a() * s as usize, None)?;
        let embed = Embedding::new(small, &big)?;
        let table = ZechField::new(big);
        let big = table.field();
        let basis = instance.basis();
        let coeffs: Vec<Rep> = instance
            .coefficients()
            .iter()
            .map(|c| table.rep(&embed.apply(big, c)))
            .collect();
        let f: Form = (0..basis.len())
            .filter(|&k| coeffs[k] != 0)
            .map(|k| (basis.exponent(k).to_vec(), coeffs[k]))
            .collect();
        let partials = (0..=n)
            .map(|i| {
                f.iter()
                    .filter(|(e, _)| e[i] > 0)
                    .filter_map(|(e, c)| {
                        let scale = table.rep(&big.from_int(e[i] as i64));
                        let mut e2 = e.clone();
                        e2[i] -= 1;
                        let c2 = table.mul(scale, *c);
                        (c2 != 0).then_some((e2, c2))
                    })
                    .collect()
            })
            .collect();
        Ok(Self { table, n, f, partials })
    }

    /// `|F_{q^s}|`.
    pub fn order(&self) -> u64 {
        self.table.order()
    }

    fn eval(&self, form: &Form, x: &[Rep]) -> Rep {
        let z = &self.table;
        form.iter().fold(0, |acc, (e, c)| {
            let term = e.iter().zip(x).fold(*c, |t, (&k, &xi)| z.mul(t, z.pow(xi, k)));
            z.add(acc, term)
        })
    }

    /// Visit each projective point once: the first nonzero coordinate is 1.
    /// `visit` returns true for points to be counted.
    fn count_projective(&self, visit: impl Fn(&[Rep]) -> bool + Sync) -> u64 {
        let big_q = self.order();
        let n = self.n;
        (0..=n)
            .map(|lead| {
                let free = n - lead;
                let total = big_q.pow(free as u32);
                (0..total)
                    .into_par_iter()
                    .filter(|&idx| {
                        let mut x = vec![0 as Rep; n + 1];
                        x[lead] = 1;
                        let mut r = idx;
                        for slot in x[lead + 1..].iter_mut() {
                            *slot = (r % big_q) as Rep;
                            r /= big_q;
                        }
                        visit(&x)
                    })
                    .count() as u64
            })
            .sum()
    }

    /// Projective points of `f = 0`.
    pub fn count_points(&self) -> u64 {
        self.count_projective(|x| self.eval(&self.f, x) == 0)
    }

    /// Zeros of `f` in affine `(n+1)`-space, origin included.
    pub fn affine_cone_count(&self) -> u64 {
        let big_q = self.order();
        let n1 = self.n + 1;
        (0..big_q.pow(n1 as u32))
            .into_par_iter()
            .filter(|&idx| {
                let mut r = idx;
                let x: Vec<Rep> = (0..n1)
                    .map(|_| {
                        let d = (r % big_q) as Rep;
                        r /= big_q;
                        d
                    })
                    .collect();
                self.eval(&self.f, &x) == 0
            })
            .count() as u64
    }

    /// Some projective point where `f` and every partial vanish.
    pub fn singular_point(&self) -> Option<Vec<Rep>> {
        let big_q = self.order();
        let n = self.n;
        (0..=n).find_map(|lead| {
            let total = big_q.pow((n - lead) as u32);
            (0..total).into_par_iter().find_map_first(|idx| {
                let mut x = vec![0 as Rep; n + 1];
                x[lead] = 1;
                let mut r = idx;
                for slot in x[lead + 1..].iter_mut() {
                    *slot = (r % big_q) as Rep;
                    r /= big_q;
                }
                let singular = self.eval(&self.f, &x) == 0
                    && self.partials.iter().all(|g| self.eval(g, &x) == 0);
                singular.then_some(x)
            })
        })
    }

    /// Render a point in the enumeration field's power-basis coordinates.
    pub fn describe(&self, x: &[Rep]) -> Vec<Vec<u64>> {
        let big = self.table.field();
        let mut lookup = vec![0u64; self.order() as usize];
        for el in big.elements() {
            lookup[self.table.rep(&el) as usize] = big.index_of(&el);
        }
        x.iter().map(|&r| big.from_index(lookup[r as usize]).0).collect()
    }
}

/// `N_s = #X(F_{q^s})`.
pub fn count_points(instance: &ProblemInstance, s: u32) -> Result<u64> {
    Ok(ExtensionForms::new(instance, s)?.count_points())
}

/// Zeros in `F_{q^s}^(n+1)`; equals `1 + (q^s - 1) N_s` by homogeneity.
pub fn affine_cone_count(instance: &ProblemInstance, s: u32) -> Result<u64> {
    Ok(ExtensionForms::new(instance, s)?.affine_cone_count())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SmoothnessVerdict {
    LikelySmooth { searched_up_to: u32 },
    Singular { s: u32, point: Vec<Vec<u64>> },
    Inconclusive { searched_up_to: u32 },
}

impl SmoothnessVerdict {
    pub fn is_singular(&self) -> bool {
        matches!(self, Self::Singular { .. })
    }
}

/// Search `F_{q^s}`, `s = 1..=s_bound`, for singular points. A clean search is only
/// reported as likely smooth when it reaches the degree bound of the zeta numerator.
pub fn smoothness_probe(instance: &ProblemInstance, s_bound: u32) -> Result<SmoothnessVerdict> {
    for s in 1..=s_bound {
        let forms = ExtensionForms::new(instance, s)?;
        if let Some(x) = forms.singular_point() {
            return Ok(SmoothnessVerdict::Singular { s, point: forms.describe(&x) });
        }
    }
    let bound = super::expected_degree(instance.n(), instance.d()) as u32;
    Ok(if s_bound >= bound {
        SmoothnessVerdict::LikelySmooth { searched_up_to: s_bound }
    } else {
        SmoothnessVerdict::Inconclusive { searched_up_to: s_bound }
    })
}
