mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use unitroot::arith::{FqContext, PadicContext, Ring};
use unitroot::combinat::{solve_lattice, MonomialBasis};
use unitroot::config::{emit_config, parse_config};
use unitroot::hassewitt::{hw_frobenius_charpoly, ordinarity_check};
use unitroot::hyperfrob::{unit_root_charpoly, Truncation};
use unitroot::pipeline::random_instance;
use unitroot::zeta::zeta_summary;
use unitroot::{Error, ProblemInstance};

const FIELDS: [(u64, usize); 23] = [
    (2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4), (17, 1), (19, 1),
    (23, 1), (5, 2), (3, 3), (29, 1), (31, 1), (2, 5), (37, 1), (41, 1), (43, 1), (47, 1), (7, 2),
];

fn ordinary_instance(seed: u64, p: u64, a: usize, d: usize, m: u32) -> Option<ProblemInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inst = random_instance(&mut rng, p, a, 2, d, m).ok()?;
    ordinarity_check(&inst).ok()?.ordinary.then_some(inst)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn teichmueller_is_a_multiplicative_section(f in 0..FIELDS.len(), x in any::<u64>(), y in any::<u64>()) {
        let (p, a) = FIELDS[f];
        let fq = FqContext::new(p, a, None).unwrap();
        let ctx = PadicContext::with_default_guard(&fq, 3).unwrap();
        let (x, y) = (fq.from_index(x % fq.order()), fq.from_index(y % fq.order()));
        let (tx, ty) = (ctx.teichmueller(&x), ctx.teichmueller(&y));
        prop_assert_eq!(ctx.pow(&tx, fq.order()), tx.clone());
        prop_assert_eq!(ctx.reduce_to_fq(&tx), x.clone());
        prop_assert_eq!(ctx.teichmueller(&fq.mul(&x, &y)), ctx.mul(&tx, &ty));
    }

    #[test]
    fn lattice_matches_naive(nd in prop::sample::select(vec![(1usize, 2usize), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
                             pivot in 0usize..15, cap in 0u64..=8) {
        let (n, d) = nd;
        let basis = MonomialBasis::new(n, d).unwrap();
        prop_assume!(basis.len() <= 15);
        let pivot = pivot % basis.len();
        let mut got: Vec<Vec<i64>> =
            solve_lattice(&basis, pivot, &vec![0; n + 2], cap).into_iter().map(|v| v.l).collect();
        got.sort();
        prop_assert_eq!(got, common::naive_lattice(&basis, pivot, cap));
    }

    #[test]
    fn config_round_trip(seed in any::<u64>(), f in 0..6usize, d in 3usize..=4) {
        let (p, a) = [(2u64, 1usize), (3, 1), (5, 1), (2, 2), (3, 2), (5, 2)][f];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_instance(&mut rng, p, a, 2, d, 2).unwrap();
        prop_assert_eq!(parse_config(&emit_config(&inst)).unwrap(), inst);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    /// The result at precision m + 1 reduces to the result at m.
    #[test]
    fn precision_coherence(seed in any::<u64>(), case in 0..4usize) {
        let (p, a, d, m) = [(2u64, 1usize, 3usize, 3u32), (3, 1, 3, 2), (3, 1, 4, 1), (2, 2, 3, 2)][case];
        let Some(inst) = ordinary_instance(seed, p, a, d, m) else { return Ok(()) };
        let hi = PadicContext::with_default_guard(inst.field(), m + 1).unwrap();
        let lo = PadicContext::with_default_guard(inst.field(), m).unwrap();
        let a_hi = unit_root_charpoly(&inst, &hi, Truncation::for_precision(p, m + 1)).unwrap();
        let a_lo = unit_root_charpoly(&inst, &lo, Truncation::for_precision(p, m)).unwrap();
        prop_assert_eq!(a_hi.residues(&hi, m), a_lo.residues(&lo, m));
    }

    /// Truncation order W(m) and W(m) + p agree mod p^m at m = 2.
    #[test]
    fn truncation_stability_at_m2(seed in any::<u64>(), case in 0..4usize) {
        let (p, a, d) = [(2u64, 1usize, 3usize), (3, 1, 3), (5, 1, 3), (2, 1, 4)][case];
        let Some(inst) = ordinary_instance(seed, p, a, d, 2) else { return Ok(()) };
        let ctx = PadicContext::with_default_guard(inst.field(), 2).unwrap();
        let w = Truncation::for_precision(p, 2);
        let a0 = unit_root_charpoly(&inst, &ctx, w).unwrap();
        let a1 = unit_root_charpoly(&inst, &ctx, Truncation::from_numerator_cap(p, w.numerator + p)).unwrap();
        prop_assert!(a0.eq_mod(&a1, &ctx, 2));
    }

    /// Theorem side against the point-counting oracle.
    #[test]
    fn theorem_matches_oracle(seed in any::<u64>(), case in 0..6usize) {
        let (p, a, d, m) = [(2u64, 1usize, 3usize, 3u32), (3, 1, 3, 2), (5, 1, 3, 2), (2, 2, 3, 2), (3, 1, 4, 2), (2, 1, 5, 2)][case];
        let Some(inst) = ordinary_instance(seed, p, a, d, m) else { return Ok(()) };
        let ctx = PadicContext::with_default_guard(inst.field(), m).unwrap();
        let z = match zeta_summary(&inst, &ctx) {
            Ok(z) => z,
            Err(Error::InconsistentCounts(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert_eq!(z.unit_degree, inst.basis().unit_count());
        let rho = unit_root_charpoly(&inst, &ctx, Truncation::for_precision(p, m)).unwrap();
        prop_assert!(rho.eq_mod(&z.unit_factor, &ctx, m),
            "theorem {:?} oracle {:?}", rho.residues(&ctx, m), z.unit_factor.residues(&ctx, m));
    }

    /// rho mod p is det(I - t H-bar product), and the Frobenius product has unit determinant.
    #[test]
    fn mod_p_degeneration(seed in any::<u64>(), case in 0..4usize) {
        let (p, a, d) = [(2u64, 1usize, 3usize), (3, 1, 4), (2, 2, 3), (5, 1, 3)][case];
        let Some(inst) = ordinary_instance(seed, p, a, d, 1) else { return Ok(()) };
        let ctx = PadicContext::with_default_guard(inst.field(), 1).unwrap();
        let rho = unit_root_charpoly(&inst, &ctx, Truncation::for_precision(p, 1)).unwrap();
        let fc = hw_frobenius_charpoly(&inst).unwrap();
        let got: Vec<u64> = rho.residues(&ctx, 1).iter().map(|c| {
            assert!(c[1..].iter().all(|&x| x == 0), "mod-p charpoly must lie over F_p");
            c[0]
        }).collect();
        prop_assert_eq!(got, fc.charpoly);
    }
}

#[test]
fn hasse_witt_matches_brute_expansion() {
    for (p, d) in [(2u64, 3usize), (3, 3), (5, 3), (3, 4), (2, 5)] {
        for seed in 0..6 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let inst = random_instance(&mut rng, p, 1, 2, d, 1).unwrap();
            let h = unitroot::hassewitt::hasse_witt(&inst, unitroot::hassewitt::Normalization::Multinomial);
            assert_eq!(h.to_rows(), common::brute_hasse_witt(&inst), "p = {p}, d = {d}, seed {seed}");
        }
    }
}

#[test]
fn counts_match_naive_enumeration() {
    for (p, a, d) in [(2u64, 1usize, 3usize), (3, 1, 4), (2, 2, 3), (5, 1, 3), (3, 2, 3)] {
        for seed in 0..4 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let inst = random_instance(&mut rng, p, a, 2, d, 1).unwrap();
            assert_eq!(unitroot::zeta::count_points(&inst, 1).unwrap(), common::naive_count(&inst));
        }
    }
}
