//! Reference computations written independently of the library algorithms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use unitroot::arith::{FqContext, FqElement, Ring};
use unitroot::combinat::MonomialBasis;
use unitroot::ProblemInstance;

/// Plane cubic from `(exponent, value)` pairs over F_p (value in the prime field).
pub fn plane_cubic(p: u64, a: usize, m: u32, terms: &[([u32; 3], u64)]) -> ProblemInstance {
    let basis = MonomialBasis::new(2, 3).unwrap();
    let mut c = vec![vec![0u64]; basis.len()];
    for (e, v) in terms {
        c[basis.index_of(e).unwrap()] = vec![*v];
    }
    ProblemInstance::new(p, a, 2, 3, None, &c, m).unwrap()
}

/// `x^3 + y^3 + z^3 + lambda xyz`.
pub fn hesse(p: u64, a: usize, m: u32, lambda: u64) -> ProblemInstance {
    plane_cubic(p, a, m, &[([1, 1, 1], lambda), ([3, 0, 0], 1), ([0, 3, 0], 1), ([0, 0, 3], 1)])
}

fn eval(field: &FqContext, inst: &ProblemInstance, x: &[FqElement]) -> FqElement {
    let basis = inst.basis();
    inst.coefficients().iter().enumerate().fold(field.zero(), |acc, (k, c)| {
        let term = basis
            .exponent(k)
            .iter()
            .zip(x)
            .fold(c.clone(), |t, (&e, xi)| field.mul(&t, &field.pow(xi, e as u64)));
        field.add(&acc, &term)
    })
}

/// Projective points over F_q by scanning the whole affine cone.
pub fn naive_count(inst: &ProblemInstance) -> u64 {
    let field = inst.field();
    let elems: Vec<FqElement> = field.elements().collect();
    let n1 = inst.n() + 1;
    let q = elems.len() as u64;
    let mut zeros = 0u64;
    let mut idx = vec![0usize; n1];
    loop {
        let x: Vec<FqElement> = idx.iter().map(|&i| elems[i].clone()).collect();
        if field.is_zero(&eval(field, inst, &x)) {
            zeros += 1;
        }
        let mut k = 0;
        loop {
            if k == n1 {
                return (zeros - 1) / (q - 1);
            }
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// `f^(p-1)` expanded term by term.
fn power(inst: &ProblemInstance, e: u64) -> BTreeMap<Vec<u32>, FqElement> {
    let field = inst.field();
    let basis = inst.basis();
    let mut acc: BTreeMap<Vec<u32>, FqElement> = BTreeMap::new();
    acc.insert(vec![0; inst.n() + 1], field.one());
    for _ in 0..e {
        let mut next: BTreeMap<Vec<u32>, FqElement> = BTreeMap::new();
        for (mono, c) in &acc {
            for (k, ck) in inst.coefficients().iter().enumerate() {
                if field.is_zero(ck) {
                    continue;
                }
                let key: Vec<u32> = mono.iter().zip(basis.exponent(k)).map(|(a, b)| a + b).collect();
                let v = field.mul(c, ck);
                let slot = next.entry(key).or_insert_with(|| field.zero());
                *slot = field.add(slot, &v);
            }
        }
        acc = next;
    }
    acc
}

/// `H[i][j]` = coefficient of `x^(p u_i - u_j)` in `f^(p-1)`.
pub fn brute_hasse_witt(inst: &ProblemInstance) -> Vec<Vec<FqElement>> {
    let field = inst.field();
    let basis = inst.basis();
    let p = inst.p() as u32;
    let f = power(inst, inst.p() - 1);
    let m = basis.unit_count();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    // a negative coordinate means no such monomial
                    let key: Option<Vec<u32>> =
                        basis.exponent(i).iter().zip(basis.exponent(j)).map(|(&u, &v)| (p * u).checked_sub(v)).collect();
                    key.and_then(|k| f.get(&k).cloned()).unwrap_or_else(|| field.zero())
                })
                .collect()
        })
        .collect()
}

/// The unit root of `T^2 - a T + q` mod p^k by exhaustive search.
pub fn genus_one_unit_root(p: u64, q: u64, trace: i64, k: u32) -> u64 {
    let pk = p.pow(k) as i128;
    let hits: Vec<u64> = (0..pk)
        .filter(|&x| x % p as i128 != 0 && (x * x - trace as i128 * x + q as i128).rem_euclid(pk) == 0)
        .map(|x| x as u64)
        .collect();
    assert_eq!(hits.len(), 1, "exactly one unit root expected, found {hits:?}");
    hits[0]
}

/// All `l` in `L_i` with weight `<= cap`, by enumerating every nonnegative vector of
/// total `w` off the pivot and filtering on the relation.
pub fn naive_lattice(basis: &MonomialBasis, pivot: usize, cap: u64) -> Vec<Vec<i64>> {
    let n_mono = basis.len();
    let dims = basis.n() + 1;
    let mut out = Vec::new();
    for w in 0..=cap {
        let mut v = vec![0i64; n_mono];
        compositions(&mut v, 0, pivot, w as i64, &mut |v| {
            let mut l = v.to_vec();
            l[pivot] = -(w as i64);
            let ok = (0..dims).all(|c| {
                (0..n_mono).map(|k| l[k] * basis.exponent(k)[c] as i64).sum::<i64>() == 0
            });
            if ok {
                out.push(l);
            }
        });
    }
    out.sort();
    out
}

fn compositions(v: &mut [i64], pos: usize, skip: usize, left: i64, visit: &mut impl FnMut(&[i64])) {
    if pos == v.len() {
        if left == 0 {
            visit(v);
        }
        return;
    }
    if pos == skip {
        return compositions(v, pos + 1, skip, left, visit);
    }
    for x in 0..=left {
        v[pos] = x;
        compositions(v, pos + 1, skip, left - x, visit);
    }
    v[pos] = 0;
}
