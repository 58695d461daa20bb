//! Monomial bases and the lattice solution sets that index Hasse-Witt sums and
//! hypergeometric series terms.

use serde::Serialize;

use crate::error::{Error, Result};

/// All degree-`d` monomials in `x_0..x_n` in canonical order: the `M` monomials
/// divisible by `x_0 ... x_n` first, then the rest, each block ascending lex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialBasis {
    n: usize,
    d: usize,
    exponents: Vec<Vec<u32>>,
    unit_count: usize,
}

impl MonomialBasis {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("dimension n must be >= 1".into()));
        }
        if d < n + 1 {
            return Err(Error::DegreeTooSmall { n, d });
        }
        let mut all = Vec::new();
        compositions(d as u32, n + 1, &mut Vec::new(), &mut all);
        all.sort();
        let (interior, boundary): (Vec<_>, Vec<_>) =
            all.into_iter().partition(|b| b.iter().all(|&e| e > 0));
        let unit_count = interior.len();
        let mut exponents = interior;
        exponents.extend(boundary);
        Ok(Self { n, d, exponents, unit_count })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `N = C(d + n, n)`.
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `M = |U| = C(d - 1, n)`.
    pub fn unit_count(&self) -> usize {
        self.unit_count
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    pub fn exponent(&self, k: usize) -> &[u32] {
        &self.exponents[k]
    }

    /// `a_k = (b_k, 1)`.
    pub fn augmented(&self, k: usize) -> Vec<i64> {
        let mut a: Vec<i64> = self.exponents[k].iter().map(|&e| e as i64).collect();
        a.push(1);
        a
    }

    pub fn index_of(&self, exponent: &[u32]) -> Option<usize> {
        self.exponents.iter().position(|b| b == exponent)
    }

    /// `x0^3`-style rendering used in reports.
    pub fn monomial_name(&self, k: usize) -> String {
        let parts: Vec<String> = self.exponents[k]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        parts.join("*")
    }
}

fn compositions(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// A solution `l` of `sum l_k a_k = u` with `l_k >= 0` off the pivot and `l_pivot <= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub l: Vec<i64>,
    pub pivot: usize,
}

impl LatticeVector {
    /// `-l_pivot`.
    pub fn weight(&self) -> u64 {
        (-self.l[self.pivot]) as u64
    }
}

/// All `l` in `L_{i,u}` with weight `-l_i <= cap`, ordered by weight then lex on `l`.
///
/// For a fixed weight `w` the free coordinates `nu_k = l_k (k != i)` solve
/// `sum nu_k b_k = u' + w b_i` with `sum nu_k = u_{n+1} + w`, enumerated by DFS that
/// prunes whenever a partial sum exceeds the target in some coordinate.
pub fn solve_lattice(basis: &MonomialBasis, pivot: usize, target: &[i64], cap: u64) -> Vec<LatticeVector> {
    solve_lattice_within(basis, pivot, target, cap, None)
}

/// [`solve_lattice`] restricted to vectors vanishing outside `active` (the pivot is
/// always allowed). Used to skip terms that multiply a zero coefficient.
pub fn solve_lattice_within(
    basis: &MonomialBasis,
    pivot: usize,
    target: &[i64],
    cap: u64,
    active: Option<&[bool]>,
) -> Vec<LatticeVector> {
    (0..=cap).flat_map(|w| stratum(basis, pivot, target, w, active)).collect()
}

/// The weight-`w` stratum of [`solve_lattice`].
pub fn solve_stratum(basis: &MonomialBasis, pivot: usize, target: &[i64], w: u64) -> Vec<LatticeVector> {
    stratum(basis, pivot, target, w, None)
}

fn stratum(basis: &MonomialBasis, pivot: usize, target: &[i64], w: u64, active: Option<&[bool]>) -> Vec<LatticeVector> {
    let n1 = basis.n() + 1;
    assert_eq!(target.len(), n1 + 1, "target must live in Z^(n+2)");
    assert!(pivot < basis.len());
    let b_i = basis.exponent(pivot);
    let mut goal: Vec<i64> = (0..n1).map(|c| target[c] + w as i64 * b_i[c] as i64).collect();
    let count = target[n1] + w as i64;
    if count < 0 || goal.iter().any(|&g| g < 0) {
        return Vec::new();
    }
    if goal.iter().sum::<i64>() != count * basis.d() as i64 {
        return Vec::new();
    }
    let free: Vec<usize> = (0..basis.len())
        .filter(|&k| k != pivot && active.is_none_or(|a| a[k]))
        .collect();
    // suffix bounds: the monomials free[pos..] have exponent in [lo, hi] in each coordinate
    let mut lo = vec![vec![i64::MAX; n1]; free.len() + 1];
    let mut hi = vec![vec![i64::MIN; n1]; free.len() + 1];
    for pos in (0..free.len()).rev() {
        let b = basis.exponent(free[pos]);
        for c in 0..n1 {
            lo[pos][c] = lo[pos + 1][c].min(b[c] as i64);
            hi[pos][c] = hi[pos + 1][c].max(b[c] as i64);
        }
    }
    let mut out = Vec::new();
    let mut l = vec![0i64; basis.len()];
    l[pivot] = -(w as i64);
    let mut search = Search { basis, free: &free, lo: &lo, hi: &hi, l: &mut l, pivot, out: &mut out };
    search.dfs(0, &mut goal, count);
    out
}

struct Search<'a> {
    basis: &'a MonomialBasis,
    free: &'a [usize],
    lo: &'a [Vec<i64>],
    hi: &'a [Vec<i64>],
    l: &'a mut [i64],
    pivot: usize,
    out: &'a mut Vec<LatticeVector>,
}

impl Search<'_> {
    fn dfs(&mut self, pos: usize, remaining: &mut [i64], count: i64) {
        if count == 0 {
            if remaining.iter().all(|&r| r == 0) {
                self.out.push(LatticeVector { l: self.l.to_vec(), pivot: self.pivot });
            }
            return;
        }
        if pos == self.free.len() {
            return;
        }
        let feasible = remaining
            .iter()
            .enumerate()
            .all(|(c, &r)| self.lo[pos][c] * count <= r && r <= self.hi[pos][c] * count);
        if !feasible {
            return;
        }
        let k = self.free[pos];
        let b = self.basis.exponent(k);
        // largest multiplicity of b_k that still fits under the remaining target
        let max_mult = b
            .iter()
            .zip(remaining.iter())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, &r)| r / e as i64)
            .min()
            .unwrap_or(count)
            .min(count);
        for mult in 0..=max_mult {
            if mult > 0 {
                for (r, &e) in remaining.iter_mut().zip(b) {
                    *r -= e as i64;
                }
            }
            self.l[k] = mult;
            self.dfs(pos + 1, remaining, count - mult);
        }
        for (r, &e) in remaining.iter_mut().zip(b) {
            *r += max_mult * e as i64;
        }
        self.l[k] = 0;
    }
}
