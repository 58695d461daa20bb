//! Truncated A-hypergeometric matrices `F(Lambda)` at Teichmüller points, the Frobenius
//! matrix `F(lambda^p)^{-1} F(lambda)` and the characteristic polynomial of its
//! Frobenius-twisted product, whose reciprocal roots are the unit roots.
//!
//! Row `i` of `F` is supported on `L_i` (relations with `l_i <= 0`, other entries
//! nonnegative), graded by the weight `w = -l_i`:
//!
//! * `F_ii` has coefficient `(-1)^w w! / prod_{k != i} l_k!`,
//! * `F_ij` (`i != j`, `l_j > 0`) has `(-1)^(w-1) (w-1)! / ((l_j - 1)! prod_{k != i,j} l_k!)`.
//!
//! Both are integers (multinomials) and are computed exactly mod p^(m+g) by splitting
//! factorials into a p-power and a unit. A truncation order `W` keeps the terms whose
//! top factorial is at most `W!`, so off-diagonal entries reach weight `W + 1`.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{PadicContext, Ring, ZqElement, ZqMatrix, ZqPolynomial};
use crate::combinat::{solve_lattice_within, LatticeVector, MonomialBasis};
use crate::error::{Error, Result};
use crate::hassewitt::ordinarity_check;
use crate::instance::ProblemInstance;

/// Truncation orders for the two series in `F(lambda^p)^{-1} F(lambda)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Truncation {
    /// Order for `F(lambda)`.
    pub numerator: u64,
    /// Order for `F(lambda^p)`.
    pub denominator: u64,
}

impl Truncation {
    /// Default for precision `m`: orders `p^m - 1` and `p^(m-1) - 1`, matching the
    /// coefficients of `f^(p^m - 1)` and `f^(p^(m-1) - 1)`.
    pub fn for_precision(p: u64, m: u32) -> Self {
        Self::from_numerator_cap(p, p.pow(m) - 1)
    }

    /// A user cap `W` on `F(lambda)` pairs with `floor(W / p)` on `F(lambda^p)`.
    pub fn from_numerator_cap(p: u64, cap: u64) -> Self {
        Self { numerator: cap, denominator: cap / p }
    }
}

/// `k!` mod p^N as `p^val * unit`.
struct FactorialTable {
    modulus: u64,
    p: u64,
    digits: u32,
    units: Vec<u64>,
    unit_inverses: Vec<u64>,
    valuations: Vec<u32>,
}

impl FactorialTable {
    fn new(p: u64, digits: u32, modulus: u64, max: u64) -> Self {
        let mut units = vec![1u64];
        let mut valuations = vec![0u32];
        for k in 1..=max {
            let mut x = k;
            let mut v = 0;
            while x % p == 0 {
                x /= p;
                v += 1;
            }
            units.push(crate::arith::mul_mod(*units.last().unwrap(), x % modulus, modulus));
            valuations.push(valuations.last().unwrap() + v);
        }
        let unit_inverses = units
            .iter()
            .map(|&u| crate::arith::inv_mod(u, modulus).expect("unit"))
            .collect();
        Self { modulus, p, digits, units, unit_inverses, valuations }
    }

    /// `top! / prod bottom_k!` mod p^N, assuming the quotient is an integer.
    fn quotient(&self, top: u64, bottom: impl Iterator<Item = u64>) -> u64 {
        let mut val = self.valuations[top as usize] as i64;
        let mut unit = self.units[top as usize];
        for b in bottom {
            val -= self.valuations[b as usize] as i64;
            unit = crate::arith::mul_mod(unit, self.unit_inverses[b as usize], self.modulus);
        }
        assert!(val >= 0, "multinomial must be integral");
        if val as u32 >= self.digits {
            return 0;
        }
        crate::arith::mul_mod(unit, self.p.pow(val as u32), self.modulus)
    }
}

/// One lattice vector with its precomputed coefficients.
#[derive(Clone, Debug)]
struct SeriesTerm {
    /// Nonzero coordinates of `l`.
    exponents: Vec<(usize, i64)>,
    diagonal: u64,
    /// `(j, coefficient)` for `j != i`, `j < M`, `l_j > 0`.
    off_diagonal: Vec<(usize, u64)>,
}

/// The support of all rows of `F` up to a weight cap, with coefficients mod p^(m+g).
#[derive(Clone, Debug)]
pub struct SeriesSupport {
    cap: u64,
    rows: Vec<Vec<SeriesTerm>>,
    unit_count: usize,
}

impl SeriesSupport {
    /// `active[k] = false` drops every term involving `Lambda_k` (a zero coefficient).
    pub fn new(basis: &MonomialBasis, cap: u64, ctx: &PadicContext, active: Option<&[bool]>) -> Self {
        let m = basis.unit_count();
        let origin = vec![0i64; basis.n() + 2];
        let facts = FactorialTable::new(ctx.p(), ctx.working_digits(), ctx.working_modulus(), cap + 1);
        let modulus = ctx.working_modulus();
        let rows = (0..m)
            .into_par_iter()
            .map(|i| {
                solve_lattice_within(basis, i, &origin, cap + 1, active)
                    .iter()
                    .map(|lv| term_for(lv, m, cap, &facts, modulus))
                    .filter(|t| t.diagonal != 0 || !t.off_diagonal.is_empty())
                    .collect()
            })
            .collect();
        Self { cap, rows, unit_count: m }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Number of lattice vectors per row.
    pub fn row_sizes(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }
}

/// Terms are kept while the factorial on top (`w` on the diagonal, `w - 1` off it) is `<= cap`.
fn term_for(lv: &LatticeVector, m: usize, cap: u64, facts: &FactorialTable, modulus: u64) -> SeriesTerm {
    let i = lv.pivot;
    let w = lv.weight();
    let others = || lv.l.iter().enumerate().filter(move |&(k, _)| k != i).map(|(_, &x)| x as u64);
    let sign = |odd: bool, x: u64| if odd { crate::arith::sub_mod(0, x, modulus) } else { x };
    let diagonal = if w <= cap { sign(w % 2 == 1, facts.quotient(w, others())) } else { 0 };
    let off_diagonal = if w == 0 {
        Vec::new()
    } else {
        (0..m)
            .filter(|&j| j != i && lv.l[j] > 0)
            .map(|j| {
                let bottom = lv
                    .l
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(k, &x)| if k == j { x as u64 - 1 } else { x as u64 });
                (j, sign((w - 1) % 2 == 1, facts.quotient(w - 1, bottom)))
            })
            .collect()
    };
    SeriesTerm {
        exponents: lv.l.iter().enumerate().filter(|&(_, &x)| x != 0).map(|(k, &x)| (k, x)).collect(),
        diagonal,
        off_diagonal,
    }
}

/// `F` truncated at a weight cap and evaluated at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeriesMatrix {
    pub matrix: ZqMatrix,
    pub cap: u64,
    /// `k` when the evaluation point is `lambda-hat^(p^k)`.
    pub twist: usize,
}

/// Evaluate the truncated `F` at `point` (coordinates `0..M` must be units).
pub fn eval_f(support: &SeriesSupport, point: &[ZqElement], ctx: &PadicContext, twist: usize) -> Result<TruncatedSeriesMatrix> {
    let m = support.unit_count;
    if let Some(k) = (0..m).find(|&k| !ctx.is_unit(&point[k])) {
        return Err(Error::NonUnitPivotCoordinate(k));
    }
    let cap = support.cap as usize;
    let max_exp = cap + 1;
    // powers[k][e] = point_k^e; inverse powers only needed for pivots
    let powers: Vec<Vec<ZqElement>> = point
        .iter()
        .map(|x| {
            let mut v = Vec::with_capacity(max_exp + 1);
            v.push(ctx.one());
            for e in 1..=max_exp {
                v.push(ctx.mul(&v[e - 1], x));
            }
            v
        })
        .collect();
    let inverse_powers: Vec<Vec<ZqElement>> = point[..m]
        .iter()
        .map(|x| {
            let inv = ctx.inv(x).expect("unit");
            let mut v = Vec::with_capacity(max_exp + 1);
            v.push(ctx.one());
            for e in 1..=max_exp {
                v.push(ctx.mul(&v[e - 1], &inv));
            }
            v
        })
        .collect();

    let rows: Vec<Vec<ZqElement>> = support
        .rows
        .par_iter()
        .enumerate()
        .map(|(i, terms)| {
            let mut row = vec![ctx.zero(); m];
            for term in terms {
                let mono = term.exponents.iter().fold(ctx.one(), |acc, &(k, e)| {
                    let factor = if e < 0 { &inverse_powers[k][(-e) as usize] } else { &powers[k][e as usize] };
                    ctx.mul(&acc, factor)
                });
                let scaled = |c: u64| ctx.mul(&ctx.from_u64(c), &mono);
                row[i] = ctx.add(&row[i], &scaled(term.diagonal));
                for &(j, c) in &term.off_diagonal {
                    row[j] = ctx.add(&row[j], &scaled(c));
                }
            }
            row
        })
        .collect();
    Ok(TruncatedSeriesMatrix { matrix: ZqMatrix::from_rows(rows), cap: support.cap, twist })
}

/// `F(mu^p)^{-1} F(mu)` at one Frobenius twist `mu = lambda-hat^(p^k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusMatrix {
    pub matrix: ZqMatrix,
    pub precision: u32,
    pub truncation: Truncation,
    pub twist: usize,
}

/// Teichmüller lift of the coefficient vector.
pub fn teichmueller_point(instance: &ProblemInstance, ctx: &PadicContext) -> Vec<ZqElement> {
    instance.coefficients().iter().map(|c| ctx.teichmueller(c)).collect()
}

/// Evaluation machinery shared by all twists of one instance.
pub struct FrobeniusEvaluator<'a> {
    ctx: &'a PadicContext,
    numerator: SeriesSupport,
    denominator: SeriesSupport,
    truncation: Truncation,
    lifted: Vec<ZqElement>,
}

impl<'a> FrobeniusEvaluator<'a> {
    pub fn new(instance: &ProblemInstance, ctx: &'a PadicContext, truncation: Truncation) -> Self {
        let basis = instance.basis();
        let field = instance.field();
        let active: Vec<bool> = instance.coefficients().iter().map(|c| !field.is_zero(c)).collect();
        let numerator = SeriesSupport::new(basis, truncation.numerator, ctx, Some(&active));
        let denominator = if truncation.denominator == truncation.numerator {
            numerator.clone()
        } else {
            SeriesSupport::new(basis, truncation.denominator, ctx, Some(&active))
        };
        Self { ctx, numerator, denominator, truncation, lifted: teichmueller_point(instance, ctx) }
    }

    pub fn numerator_support(&self) -> &SeriesSupport {
        &self.numerator
    }

    /// The evaluation point `lambda-hat^(p^k)`.
    pub fn twisted_point(&self, k: usize) -> Vec<ZqElement> {
        self.lifted.iter().map(|x| self.ctx.pow_p(x, k)).collect()
    }

    pub fn frobenius_matrix(&self, k: usize) -> Result<FrobeniusMatrix> {
        let ctx = self.ctx;
        let mu = self.twisted_point(k);
        let mu_p: Vec<ZqElement> = mu.iter().map(|x| ctx.pow(x, ctx.p())).collect();
        let top = eval_f(&self.numerator, &mu, ctx, k)?;
        let bottom = eval_f(&self.denominator, &mu_p, ctx, k + 1)?;
        let inv = bottom.matrix.inverse(ctx)?;
        Ok(FrobeniusMatrix {
            matrix: inv.mul(ctx, &top.matrix),
            precision: ctx.precision(),
            truncation: self.truncation,
            twist: k,
        })
    }

    /// `F(mu_{a-1}) .. F(mu_1) F(mu_0)` with `mu_k = lambda-hat^(p^k)`.
    pub fn twisted_product(&self, a: usize) -> Result<ZqMatrix> {
        let factors: Vec<FrobeniusMatrix> =
            (0..a).into_par_iter().map(|k| self.frobenius_matrix(k)).collect::<Result<_>>()?;
        let m = factors[0].matrix.rows();
        Ok(factors
            .iter()
            .fold(ZqMatrix::identity(self.ctx, m), |acc, f| f.matrix.mul(self.ctx, &acc)))
    }
}

/// `det(I - t F(lambda-hat^(p^(a-1))) .. F(lambda-hat))`, accurate mod p^m.
///
/// Refuses non-ordinary instances before any series work.
pub fn unit_root_charpoly(instance: &ProblemInstance, ctx: &PadicContext, truncation: Truncation) -> Result<ZqPolynomial> {
    let ord = ordinarity_check(instance)?;
    if !ord.ordinary {
        return Err(Error::NonOrdinary);
    }
    let evaluator = FrobeniusEvaluator::new(instance, ctx, truncation);
    let product = evaluator.twisted_product(instance.a())?;
    let det = product.det(ctx);
    if !ctx.is_unit(&det) {
        return Err(Error::NonUnitDeterminant);
    }
    let mut poly = ZqPolynomial::new(product.reversed_charpoly(ctx));
    poly.normalize(ctx);
    Ok(poly)
}
