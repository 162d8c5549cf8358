use rand::Rng;

use super::{ElemNode, Field};
use crate::arith;
use crate::error::{Error, Result};

/// The prime field `Z/pZ`, elements stored reduced in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be prime and below 2^32 so products fit in a `u64`.
    pub fn new(p: u64) -> Result<Self> {
        if !arith::is_prime(p as u128) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(Error::FieldTooLarge(p.to_string()));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn absolute_degree(&self) -> u32 {
        1
    }

    fn size(&self) -> u128 {
        self.p as u128
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, (self.p - 2) as u128))
    }

    fn from_int(&self, k: i64) -> u64 {
        k.rem_euclid(self.p as i64) as u64
    }

    fn prime_value(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }

    fn index(&self, a: &u64) -> u128 {
        *a as u128
    }

    fn from_index(&self, i: u128) -> u64 {
        (i % self.p as u128) as u64
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn write_elem(&self, a: &u64, out: &mut String) {
        out.push_str(&a.to_string());
    }

    fn parse_node(&self, node: &ElemNode) -> Result<u64> {
        match node {
            ElemNode::Int(k) => Ok(self.from_int(*k)),
            ElemNode::List(items) => match items.as_slice() {
                [ElemNode::Int(k)] => Ok(self.from_int(*k)),
                _ => Err(Error::LevelMismatch(format!(
                    "expected an integer mod {}",
                    self.p
                ))),
            },
        }
    }
}
