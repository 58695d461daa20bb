//! Log/Zech tables for fast arithmetic in the enumeration fields.

use crate::arith::{FqContext, FqElement, Ring};

/// Element in log form: `0` is zero, `k + 1` is `g^k` for the chosen primitive `g`.
pub type Rep = u32;

pub struct ZechField {
    field: FqContext,
    /// `q - 1`.
    group: u64,
    rep_of_index: Vec<Rep>,
    /// `zech[k] = rep(1 + g^k)`.
    zech: Vec<Rep>,
}

impl ZechField {
    pub fn new(field: FqContext) -> Self {
        let q = field.order();
        let group = q - 1;
        let g = primitive_element(&field);
        let mut rep_of_index = vec![0 as Rep; q as usize];
        let mut powers = Vec::with_capacity(group as usize);
        let mut x = field.one();
        for k in 0..group {
            rep_of_index[field.index_of(&x) as usize] = (k + 1) as Rep;
            powers.push(x.clone());
            x = field.mul(&x, &g);
        }
        let one = field.one();
        let zech = powers
            .iter()
            .map(|y| rep_of_index[field.index_of(&field.add(&one, y)) as usize])
            .collect();
        Self { field, group, rep_of_index, zech }
    }

    pub fn field(&self) -> &FqContext {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.group + 1
    }

    pub fn rep(&self, x: &FqElement) -> Rep {
        self.rep_of_index[self.field.index_of(x) as usize]
    }

    /// Representations of all elements, zero first.
    pub fn all(&self) -> impl Iterator<Item = Rep> {
        0..=(self.group as Rep)
    }

    #[inline]
    pub fn mul(&self, x: Rep, y: Rep) -> Rep {
        if x == 0 || y == 0 {
            return 0;
        }
        ((x as u64 - 1 + y as u64 - 1) % self.group + 1) as Rep
    }

    /// `x^e` with `0^0 = 1`.
    #[inline]
    pub fn pow(&self, x: Rep, e: u32) -> Rep {
        match (x, e) {
            (_, 0) => 1,
            (0, _) => 0,
            _ => ((x as u64 - 1) * e as u64 % self.group + 1) as Rep,
        }
    }

    #[inline]
    pub fn add(&self, x: Rep, y: Rep) -> Rep {
        if x == 0 {
            return y;
        }
        if y == 0 {
            return x;
        }
        // x + y = x (1 + y/x)
        let d = (y as u64 + self.group - x as u64) % self.group;
        self.mul(x, self.zech[d as usize])
    }
}

fn primitive_element(field: &FqContext) -> FqElement {
    let group = field.order() - 1;
    let factors = prime_factors(group);
    field
        .elements()
        .skip(1)
        .find(|x| factors.iter().all(|&r| field.pow(x, group / r) != field.one()))
        .expect("the multiplicative group is cyclic")
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            out.push(k);
            while n.is_multiple_of(k) {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_agree_with_field_arithmetic() {
        for (p, a) in [(2, 1), (2, 3), (3, 2), (5, 2), (7, 1)] {
            let f = FqContext::new(p, a, None).unwrap();
            let z = ZechField::new(f.clone());
            let elems: Vec<FqElement> = f.elements().collect();
            for x in &elems {
                for y in &elems {
                    assert_eq!(z.add(z.rep(x), z.rep(y)), z.rep(&f.add(x, y)));
                    assert_eq!(z.mul(z.rep(x), z.rep(y)), z.rep(&f.mul(x, y)));
                }
                assert_eq!(z.pow(z.rep(x), 3), z.rep(&f.pow(x, 3)));
            }
        }
    }
}
