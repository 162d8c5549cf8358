//! Finite fields: prime fields, generic simple extensions, and the
//! two-level tower `F_p ⊆ F_q ⊆ F_{q^n}`.
//!
//! A field is a context object implementing [`Field`]; elements are plain
//! values whose meaning depends on that context. Polynomial and matrix code
//! is generic over the trait so the same routines run at every level of the
//! tower and in auxiliary splitting fields.

mod ext;
mod prime;
pub(crate) mod text;
mod tower;
pub mod zech;

pub use ext::ExtField;
pub use prime::PrimeField;
pub use text::ElemNode;
pub use tower::FieldTower;
pub use zech::ZechField;

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use rand::Rng;

use crate::error::{Error, Result};

pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn characteristic(&self) -> u64;
    /// Degree over the prime subfield.
    fn absolute_degree(&self) -> u32;
    /// Number of elements.
    fn size(&self) -> u128;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Image of an integer under the prime-field embedding.
    fn from_int(&self, k: i64) -> Self::Elem;
    /// `Some(k)` when `a` lies in the prime subfield.
    fn prime_value(&self, a: &Self::Elem) -> Option<u64>;

    /// Position of `a` in the canonical enumeration `0..size()`.
    ///
    /// Coefficient vectors are read as base-`|B|` numerals with the
    /// constant coefficient as the least significant digit.
    fn index(&self, a: &Self::Elem) -> u128;
    fn from_index(&self, i: u128) -> Self::Elem;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn write_elem(&self, a: &Self::Elem, out: &mut String);
    fn parse_node(&self, node: &ElemNode) -> Result<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn cmp_elem(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        self.index(a).cmp(&self.index(b))
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        let mut s = String::new();
        self.write_elem(a, &mut s);
        s
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        self.parse_node(&ElemNode::parse(s)?)
    }

    /// Multiplicative order of a nonzero element.
    fn multiplicative_order(&self, a: &Self::Elem) -> Result<u128> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(crate::arith::order_from_multiple(self.size() - 1, |e| {
            self.is_one(&self.pow(a, e))
        }))
    }
}

/// A field carrying the Frobenius automorphism `σ_1: α ↦ α^q` relative to
/// a fixed subfield `F_q` of index `n`.
pub trait FrobeniusField: Field {
    /// Size `q` of the fixed subfield.
    fn fixed_size(&self) -> u64;
    /// Index `n` of the fixed subfield.
    fn frobenius_degree(&self) -> u32;
    /// `σ_i(a) = a^{q^{i mod n}}`; negative `i` is allowed.
    fn frobenius(&self, a: &Self::Elem, i: i64) -> Self::Elem;

    /// Least `t | n` with `σ_t(a) = a`.
    fn subfield_degree(&self, a: &Self::Elem) -> u32 {
        let n = self.frobenius_degree();
        crate::arith::divisors(n as u64)
            .into_iter()
            .map(|t| t as u32)
            .find(|&t| self.frobenius(a, t as i64) == *a)
            .unwrap_or(n)
    }
}

/// Every element of a small field, in canonical order.
pub fn elements<F: Field>(field: &F) -> impl Iterator<Item = F::Elem> + '_ {
    (0..field.size()).map(move |i| field.from_index(i))
}

/// `i mod n` in `0..n`.
pub(crate) fn reduce_index(i: i64, n: u32) -> u32 {
    i.rem_euclid(n as i64) as u32
}
