//! Table-backed view of a small field.
//!
//! Elements are their canonical indices (`u32`). Multiplication uses
//! discrete-log tables relative to a primitive element; addition is a
//! coordinatewise XOR in characteristic two and a Zech-logarithm lookup
//! otherwise. The wrapped structural field stays available for text I/O and
//! as the reference arithmetic.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::{reduce_index, ElemNode, Field, FrobeniusField};
use crate::arith;
use crate::error::{Error, Result};

/// Largest field accepted by [`ZechField::new`].
pub const MAX_TABLE_SIZE: u128 = 1 << 20;

const NONE: u32 = u32::MAX;

#[derive(Clone)]
pub struct ZechField<F: Field> {
    inner: Arc<Tables<F>>,
}

struct Tables<F: Field> {
    structural: F,
    p: u32,
    size: u32,
    /// `exp[k] = g^k` for `0 ≤ k < Q - 1`.
    exp: Vec<u32>,
    /// `log[a]` for `a ≠ 0`.
    log: Vec<u32>,
    /// `zech[k] = log(1 + g^k)`, or `NONE` when `1 + g^k = 0`.
    zech: Vec<u32>,
}

impl<F: Field> fmt::Debug for ZechField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ZechField")
            .field("size", &self.inner.size)
            .field("structural", &self.inner.structural)
            .finish()
    }
}

impl<F: Field> ZechField<F> {
    pub fn new(structural: F) -> Result<Self> {
        let size = structural.size();
        if size > MAX_TABLE_SIZE {
            return Err(Error::FieldTooLarge(size.to_string()));
        }
        let p = structural.characteristic() as u32;
        let order = size - 1;
        let generator = (1..size)
            .map(|i| structural.from_index(i))
            .find(|g| order == 0 || structural.multiplicative_order(g).unwrap() == order)
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; size as usize];
        let mut cur = structural.one();
        for k in 0..order.max(1) as u32 {
            let idx = structural.index(&cur) as u32;
            exp.push(idx);
            log[idx as usize] = k;
            cur = structural.mul(&cur, &generator);
        }
        let plus_one = |a: u32| a - a % p + (a % p + 1) % p;
        let zech = exp
            .iter()
            .map(|&a| match plus_one(a) {
                0 => NONE,
                b => log[b as usize],
            })
            .collect();
        Ok(Self {
            inner: Arc::new(Tables {
                structural,
                p,
                size: size as u32,
                exp,
                log,
                zech,
            }),
        })
    }

    pub fn structural(&self) -> &F {
        &self.inner.structural
    }

    pub fn to_structural(&self, a: &u32) -> F::Elem {
        self.structural().from_index(*a as u128)
    }

    pub fn from_structural(&self, a: &F::Elem) -> u32 {
        self.structural().index(a) as u32
    }

    fn group_order(&self) -> u64 {
        (self.inner.size - 1).max(1) as u64
    }

    #[inline]
    fn exp_of(&self, k: u64) -> u32 {
        self.inner.exp[(k % self.group_order()) as usize]
    }
}

impl<F: Field> Field for ZechField<F> {
    type Elem = u32;

    fn characteristic(&self) -> u64 {
        self.inner.p as u64
    }

    fn absolute_degree(&self) -> u32 {
        self.structural().absolute_degree()
    }

    fn size(&self) -> u128 {
        self.inner.size as u128
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        if self.inner.p == 2 {
            return a ^ b;
        }
        if *a == 0 {
            return *b;
        }
        if *b == 0 {
            return *a;
        }
        let t = &self.inner;
        let n = self.group_order();
        let la = t.log[*a as usize] as u64;
        let lb = t.log[*b as usize] as u64;
        let d = (lb + n - la) % n;
        match t.zech[d as usize] {
            NONE => 0,
            z => self.exp_of(la + z as u64),
        }
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &u32) -> u32 {
        if self.inner.p == 2 || *a == 0 {
            return *a;
        }
        let half = self.group_order() / 2;
        self.exp_of(self.inner.log[*a as usize] as u64 + half)
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        let t = &self.inner;
        self.exp_of(t.log[*a as usize] as u64 + t.log[*b as usize] as u64)
    }

    fn inv(&self, a: &u32) -> Result<u32> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.group_order();
        Ok(self.exp_of(n - self.inner.log[*a as usize] as u64 % n))
    }

    fn pow(&self, a: &u32, e: u128) -> u32 {
        if e == 0 {
            return 1;
        }
        if *a == 0 {
            return 0;
        }
        let n = self.group_order() as u128;
        let k = (self.inner.log[*a as usize] as u128 * (e % n)) % n;
        self.exp_of(k as u64)
    }

    fn multiplicative_order(&self, a: &u32) -> Result<u128> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.group_order();
        Ok((n / arith::gcd(n, self.inner.log[*a as usize] as u64)) as u128)
    }

    fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.inner.p as i64) as u32
    }

    fn prime_value(&self, a: &u32) -> Option<u64> {
        (*a < self.inner.p).then_some(*a as u64)
    }

    fn index(&self, a: &u32) -> u128 {
        *a as u128
    }

    fn from_index(&self, i: u128) -> u32 {
        (i % self.inner.size as u128) as u32
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.inner.size)
    }

    fn write_elem(&self, a: &u32, out: &mut String) {
        self.structural().write_elem(&self.to_structural(a), out)
    }

    fn parse_node(&self, node: &ElemNode) -> Result<u32> {
        Ok(self.from_structural(&self.structural().parse_node(node)?))
    }
}

impl<F: FrobeniusField> FrobeniusField for ZechField<F> {
    fn fixed_size(&self) -> u64 {
        self.structural().fixed_size()
    }

    fn frobenius_degree(&self) -> u32 {
        self.structural().frobenius_degree()
    }

    fn frobenius(&self, a: &u32, i: i64) -> u32 {
        let j = reduce_index(i, self.frobenius_degree());
        if j == 0 || *a == 0 {
            return *a;
        }
        let n = self.group_order() as u128;
        let qj = (self.fixed_size() as u128).pow(j) % n;
        let k = self.inner.log[*a as usize] as u128 * qj % n;
        self.exp_of(k as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ExtField, PrimeField};
    use crate::poly::PolyRing;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn structural(p: u64, k: usize) -> ExtField<PrimeField> {
        let fp = PrimeField::new(p).unwrap();
        let m = PolyRing::new(fp).iter_monic_irreducibles(k).next().unwrap();
        ExtField::new(fp, m).unwrap()
    }

    #[test]
    fn tables_agree_with_structural_arithmetic() {
        for (p, k) in [(2, 1), (2, 4), (3, 1), (3, 3), (5, 2), (7, 1)] {
            let s = structural(p, k);
            let z = ZechField::new(s.clone()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p * 10 + k as u64);
            for _ in 0..500 {
                let (a, b) = (z.random(&mut rng), z.random(&mut rng));
                let (sa, sb) = (z.to_structural(&a), z.to_structural(&b));
                assert_eq!(z.to_structural(&z.add(&a, &b)), s.add(&sa, &sb));
                assert_eq!(z.to_structural(&z.sub(&a, &b)), s.sub(&sa, &sb));
                assert_eq!(z.to_structural(&z.mul(&a, &b)), s.mul(&sa, &sb));
                assert_eq!(z.to_structural(&z.neg(&a)), s.neg(&sa));
                if a != 0 {
                    assert_eq!(z.to_structural(&z.inv(&a).unwrap()), s.inv(&sa).unwrap());
                }
                let e = rng.gen_range(0..1000u128);
                assert_eq!(z.to_structural(&z.pow(&a, e)), s.pow(&sa, e));
                for i in -3..4 {
                    assert_eq!(z.to_structural(&z.frobenius(&a, i)), s.frobenius(&sa, i));
                }
            }
        }
    }
}
