//! Command orchestration shared by the CLI and the C interface.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{PadicContext, ZqPolynomial};
use crate::error::{Error, Result};
use crate::hassewitt::{hasse_witt, hw_frobenius_charpoly, ordinarity_check, Normalization};
use crate::hyperfrob::{unit_root_charpoly, Truncation};
use crate::instance::ProblemInstance;
use crate::report::{
    element, matrix, zq_polynomial, BasisSummary, HasseWittReport, PrecisionAgreement, Report, StageError,
    TheoremReport, ZetaReport,
};
use crate::zeta::zeta_summary;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Basis,
    HasseWitt,
    Zeta,
    UnitRoots,
    Verify,
}

impl Command {
    pub const ALL: [Command; 5] = [Self::Basis, Self::HasseWitt, Self::Zeta, Self::UnitRoots, Self::Verify];

    pub fn name(self) -> &'static str {
        match self {
            Self::Basis => "basis",
            Self::HasseWitt => "hasse-witt",
            Self::Zeta => "zeta",
            Self::UnitRoots => "unit-roots",
            Self::Verify => "verify",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown command {s:?}")))
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const OTHER: i32 = 1;
    pub const VALIDATION: i32 = 2;
    pub const NON_ORDINARY: i32 = 3;
    pub const ORACLE_INCONSISTENT: i32 = 4;
    pub const DISAGREEMENT: i32 = 5;
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotPrime(_)
        | Error::ReducibleModulus(..)
        | Error::InvalidArgument(_)
        | Error::PrecisionOverflow(..)
        | Error::DegreeTooSmall { .. }
        | Error::SizeGuardExceeded { .. }
        | Error::ZeroUnitCoefficient(_)
        | Error::Validation(_) => exit::VALIDATION,
        Error::NonOrdinary => exit::NON_ORDINARY,
        Error::InconsistentCounts(_) => exit::ORACLE_INCONSISTENT,
        Error::NonUnitDeterminant | Error::NonUnitPivotCoordinate(_) | Error::EnumerationBudgetExceeded { .. } => {
            exit::OTHER
        }
    }
}

fn kind(err: &Error) -> &'static str {
    match err {
        Error::NotPrime(_) => "not-prime",
        Error::ReducibleModulus(..) => "reducible-modulus",
        Error::InvalidArgument(_) => "invalid-argument",
        Error::PrecisionOverflow(..) => "precision-overflow",
        Error::NonUnitDeterminant => "non-unit-determinant",
        Error::DegreeTooSmall { .. } => "degree-too-small",
        Error::SizeGuardExceeded { .. } => "size-guard",
        Error::ZeroUnitCoefficient(_) => "zero-unit-coefficient",
        Error::NonUnitPivotCoordinate(_) => "non-unit-pivot",
        Error::NonOrdinary => "non-ordinary",
        Error::EnumerationBudgetExceeded { .. } => "enumeration-budget",
        Error::InconsistentCounts(_) => "inconsistent-counts",
        Error::Validation(_) => "validation",
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Overrides the instance precision.
    pub precision: Option<u32>,
    /// Truncation order `W` for `F(lambda)`; `F(lambda^p)` uses `floor(W / p)`.
    pub truncation: Option<u64>,
    pub normalization: Normalization,
    pub timing: bool,
}

const LITERAL_NOTE: &str = "literal normalization (1/prod nu_k!) differs from the multinomial one by (p-1)! = -1 mod p";

struct Run<'a> {
    report: Report,
    timing: BTreeMap<&'static str, f64>,
    instance: &'a ProblemInstance,
}

impl<'a> Run<'a> {
    fn stage<T>(&mut self, name: &'static str, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f();
        self.timing.insert(name, start.elapsed().as_secs_f64());
        if let Err(e) = &out {
            self.report.errors.push(StageError { stage: name, kind: kind(e), message: e.to_string() });
            if self.report.exit_code == exit::OK {
                self.report.exit_code = exit_code(e);
            }
        }
        out
    }

    fn hasse_witt(&mut self, norm: Normalization) -> Result<()> {
        let instance = self.instance;
        let hw = self.stage("hasse-witt", || {
            instance.require_unit_coefficients()?;
            let h = hasse_witt(instance, norm);
            let ord = ordinarity_check(instance)?;
            let fc = hw_frobenius_charpoly(instance)?;
            let field = instance.field();
            Ok(HasseWittReport {
                normalization: norm,
                det: element(&h.det(field)),
                matrix: matrix(&h),
                ordinary: ord.ordinary,
                frobenius_charpoly: fc.charpoly.iter().map(u64::to_string).collect(),
                b_form_checked: fc.b_product.is_some(),
            })
        })?;
        self.report.hasse_witt = Some(hw);
        Ok(())
    }
}

fn theorem_side(
    instance: &ProblemInstance,
    ctx: &PadicContext,
    truncation: Truncation,
) -> Result<ZqPolynomial> {
    instance.require_unit_coefficients()?;
    unit_root_charpoly(instance, ctx, truncation)
}

/// Run one command. Never fails: errors are recorded in the report with their stage
/// and mapped to the exit-code contract.
pub fn run_command(command: Command, instance: &ProblemInstance, opts: &RunOptions) -> Report {
    let instance = &match opts.precision {
        Some(m) => instance.with_precision(m),
        None => instance.clone(),
    };
    let mut run = Run { report: Report::new(command.name(), instance), timing: BTreeMap::new(), instance };
    let m = instance.precision();
    let p = instance.p();
    let truncation = match opts.truncation {
        Some(w) => Truncation::from_numerator_cap(p, w),
        None => Truncation::for_precision(p, m),
    };
    let ctx = run.stage("setup", || {
        if m == 0 {
            return Err(Error::Validation("precision m must be >= 1".into()));
        }
        PadicContext::with_default_guard(instance.field(), m)
    });
    let Ok(ctx) = ctx else {
        return finish(run, opts);
    };

    match command {
        Command::Basis => run.report.basis = Some(BasisSummary::new(instance.basis())),
        Command::HasseWitt => {
            run.report.basis = Some(BasisSummary::new(instance.basis()));
            if opts.normalization == Normalization::Literal {
                run.report.normalization_note = Some(LITERAL_NOTE);
            }
            let _ = run.hasse_witt(opts.normalization);
        }
        Command::Zeta => {
            if let Ok(z) = run.stage("zeta", || zeta_summary(instance, &ctx)) {
                run.report.zeta = Some(ZetaReport::new(&z, &ctx));
            }
        }
        Command::UnitRoots => {
            if let Ok(rho) = run.stage("unit-roots", || theorem_side(instance, &ctx, truncation)) {
                run.report.theorem = Some(TheoremReport { precision: m, truncation, rho: zq_polynomial(&rho, &ctx, m) });
            }
        }
        Command::Verify => verify(&mut run, &ctx, truncation),
    }
    finish(run, opts)
}

fn verify(run: &mut Run, ctx: &PadicContext, truncation: Truncation) {
    let instance = run.instance;
    let m = ctx.precision();
    // the oracle always runs first
    let oracle = run.stage("zeta", || zeta_summary(instance, ctx)).ok();
    if let Some(z) = &oracle {
        run.report.zeta = Some(ZetaReport::new(z, ctx));
    }
    let _ = run.hasse_witt(Normalization::Multinomial);
    let theorem = run.stage("unit-roots", || theorem_side(instance, ctx, truncation)).ok();
    if let Some(rho) = &theorem {
        run.report.theorem = Some(TheoremReport { precision: m, truncation, rho: zq_polynomial(rho, ctx, m) });
    }
    if let (Some(z), Some(rho)) = (&oracle, &theorem) {
        run.report.agreement = (1..=m)
            .map(|k| PrecisionAgreement { precision: k, agree: z.unit_factor.eq_mod(rho, ctx, k) })
            .collect();
        let all = run.report.agreement.iter().all(|a| a.agree);
        run.report.verified = Some(all);
        if !all && run.report.exit_code == exit::OK {
            run.report.exit_code = exit::DISAGREEMENT;
        }
    } else {
        run.report.verified = Some(false);
    }
}

fn finish(mut run: Run, opts: &RunOptions) -> Report {
    if opts.timing {
        run.report.timing_seconds = Some(run.timing);
    }
    run.report
}

/// Uniformly random coefficients with every U-coefficient nonzero.
pub fn random_instance(rng: &mut impl Rng, p: u64, a: usize, n: usize, d: usize, m: u32) -> Result<ProblemInstance> {
    let basis = crate::combinat::MonomialBasis::new(n, d)?;
    let coeffs: Vec<Vec<u64>> = (0..basis.len())
        .map(|k| loop {
            let c: Vec<u64> = (0..a).map(|_| rng.gen_range(0..p)).collect();
            if k >= basis.unit_count() || c.iter().any(|&x| x != 0) {
                break c;
            }
        })
        .collect();
    ProblemInstance::new(p, a, n, d, None, &coeffs, m)
}

/// Seeded stream of random instances.
pub fn seeded_instances(seed: u64, p: u64, a: usize, n: usize, d: usize, m: u32) -> impl Iterator<Item = ProblemInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::iter::from_fn(move || random_instance(&mut rng, p, a, n, d, m).ok())
}

/// First instance of a seeded stream that the oracle certifies and that is ordinary,
/// with its position in the stream.
pub fn find_smooth_ordinary(
    seed: u64,
    p: u64,
    a: usize,
    n: usize,
    d: usize,
    m: u32,
    attempts: usize,
) -> Option<(usize, ProblemInstance)> {
    seeded_instances(seed, p, a, n, d, m).take(attempts).enumerate().find(|(_, inst)| {
        let Ok(ord) = ordinarity_check(inst) else { return false };
        if !ord.ordinary {
            return false;
        }
        let Ok(ctx) = PadicContext::with_default_guard(inst.field(), m) else { return false };
        zeta_summary(inst, &ctx).is_ok_and(|z| z.unit_degree == inst.basis().unit_count())
    })
}
