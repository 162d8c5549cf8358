use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;

use super::{reduce_index, ElemNode, Field, FrobeniusField};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

/// Simple extension `B[y]/(m(y))` of a base field `B` by a monic
/// irreducible modulus of degree `d`.
///
/// Elements are coefficient vectors of length exactly `d` over `B`, constant
/// term first. The Frobenius `σ_1: α ↦ α^{|B|}` is `B`-linear and is applied
/// through a table of basis images computed on first use.
#[derive(Clone)]
pub struct ExtField<B: Field> {
    inner: Arc<Inner<B>>,
}

struct Inner<B: Field> {
    base: B,
    /// Monic modulus, `d + 1` coefficients.
    modulus: Vec<B::Elem>,
    degree: usize,
    size: u128,
    /// `frob[j][i] = σ_j(y^i)` for `0 ≤ j < d`.
    frob: OnceLock<Vec<Vec<Vec<B::Elem>>>>,
}

impl<B: Field> fmt::Debug for ExtField<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtField")
            .field("base", &self.inner.base)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl<B: Field> ExtField<B> {
    /// Builds the extension after checking that `modulus` is monic and
    /// irreducible over `base`.
    pub fn new(base: B, modulus: Poly<B::Elem>) -> Result<Self> {
        let ring = PolyRing::new(base.clone());
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        if !ring.is_monic(&modulus) || !ring.is_irreducible(&modulus) {
            return Err(Error::ReducibleModulus(ring.format(&modulus)));
        }
        Self::new_unchecked(base, modulus)
    }

    /// Builds the extension without the irreducibility test. The caller
    /// guarantees that `modulus` is monic irreducible.
    pub fn new_unchecked(base: B, modulus: Poly<B::Elem>) -> Result<Self> {
        let degree = modulus.degree().ok_or(Error::DivisionByZero)?;
        let size = base
            .size()
            .checked_pow(degree as u32)
            .ok_or_else(|| Error::FieldTooLarge(format!("{}^{degree}", base.size())))?;
        Ok(Self {
            inner: Arc::new(Inner {
                base,
                modulus: modulus.into_coeffs(),
                degree,
                size,
                frob: OnceLock::new(),
            }),
        })
    }

    pub fn base(&self) -> &B {
        &self.inner.base
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn modulus(&self) -> Poly<B::Elem> {
        Poly::from_raw(self.inner.modulus.clone())
    }

    /// The class of `y`.
    pub fn generator(&self) -> Vec<B::Elem> {
        let b = self.base();
        let mut v = vec![b.zero(); self.degree()];
        if self.degree() == 1 {
            // y ≡ -m_0 when the modulus is linear
            v[0] = b.neg(&self.inner.modulus[0]);
        } else {
            v[1] = b.one();
        }
        v
    }

    /// Embeds a base-field element as a constant.
    pub fn embed(&self, c: &B::Elem) -> Vec<B::Elem> {
        let mut v = vec![self.base().zero(); self.degree()];
        v[0] = c.clone();
        v
    }

    /// Inverse of [`embed`](Self::embed): `Some(c)` when `a` is a constant.
    pub fn to_base(&self, a: &[B::Elem]) -> Option<B::Elem> {
        let b = self.base();
        if a[1..].iter().all(|c| b.is_zero(c)) {
            Some(a[0].clone())
        } else {
            None
        }
    }

    /// Builds an element from a coefficient vector of length `degree`.
    pub fn from_coeffs(&self, coeffs: Vec<B::Elem>) -> Result<Vec<B::Elem>> {
        if coeffs.len() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: coeffs.len(),
            });
        }
        Ok(coeffs)
    }

    fn scale_acc(&self, acc: &mut [B::Elem], c: &B::Elem, v: &[B::Elem]) {
        let b = self.base();
        for (slot, x) in acc.iter_mut().zip(v) {
            if !b.is_zero(x) {
                *slot = b.add(slot, &b.mul(c, x));
            }
        }
    }

    fn frob_table(&self) -> &Vec<Vec<Vec<B::Elem>>> {
        self.inner.frob.get_or_init(|| {
            let d = self.degree();
            let y = self.generator();
            let y_q = self.pow(&y, self.base().size());
            let mut first = Vec::with_capacity(d);
            let mut cur = self.one();
            for _ in 0..d {
                first.push(cur.clone());
                cur = self.mul(&cur, &y_q);
            }
            let identity: Vec<Vec<B::Elem>> = (0..d)
                .map(|i| {
                    let mut v = vec![self.base().zero(); d];
                    v[i] = self.base().one();
                    v
                })
                .collect();
            let mut table = vec![identity];
            for j in 1..d {
                let prev = &table[j - 1];
                let next: Vec<Vec<B::Elem>> = prev
                    .iter()
                    .map(|img| self.apply_linear(img, &first))
                    .collect();
                table.push(next);
            }
            table
        })
    }

    fn apply_linear(&self, a: &[B::Elem], images: &[Vec<B::Elem>]) -> Vec<B::Elem> {
        let mut out = self.zero();
        for (c, img) in a.iter().zip(images) {
            if !self.base().is_zero(c) {
                self.scale_acc(&mut out, c, img);
            }
        }
        out
    }
}

impl<B: Field> Field for ExtField<B> {
    type Elem = Vec<B::Elem>;

    fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }

    fn absolute_degree(&self) -> u32 {
        self.base().absolute_degree() * self.degree() as u32
    }

    fn size(&self) -> u128 {
        self.inner.size
    }

    fn zero(&self) -> Self::Elem {
        vec![self.base().zero(); self.degree()]
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.base().one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base().is_zero(c))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter()
            .zip(b)
            .map(|(x, y)| self.base().add(x, y))
            .collect()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter()
            .zip(b)
            .map(|(x, y)| self.base().sub(x, y))
            .collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base().neg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let base = self.base();
        let d = self.degree();
        if d == 1 {
            return vec![base.mul(&a[0], &b[0])];
        }
        let mut t = vec![base.zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !base.is_zero(y) {
                    t[i + j] = base.add(&t[i + j], &base.mul(x, y));
                }
            }
        }
        let m = &self.inner.modulus;
        for i in (d..2 * d - 1).rev() {
            let c = std::mem::replace(&mut t[i], base.zero());
            if base.is_zero(&c) {
                continue;
            }
            for j in 0..d {
                if !base.is_zero(&m[j]) {
                    t[i - d + j] = base.sub(&t[i - d + j], &base.mul(&c, &m[j]));
                }
            }
        }
        t.truncate(d);
        t
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let ring = PolyRing::new(self.base().clone());
        let (g, s, _) = ring.ext_gcd(&ring.from_coeffs(a.clone()), &self.modulus());
        // g is a nonzero constant because the modulus is irreducible
        let g0 = self.base().inv(&g.coeffs()[0])?;
        let s = ring.scale(&s, &g0);
        let mut out = self.zero();
        for (slot, c) in out.iter_mut().zip(s.coeffs()) {
            *slot = c.clone();
        }
        Ok(out)
    }

    fn from_int(&self, k: i64) -> Self::Elem {
        self.embed(&self.base().from_int(k))
    }

    fn prime_value(&self, a: &Self::Elem) -> Option<u64> {
        self.to_base(a).and_then(|c| self.base().prime_value(&c))
    }

    fn index(&self, a: &Self::Elem) -> u128 {
        let q = self.base().size();
        a.iter()
            .rev()
            .fold(0u128, |acc, c| acc * q + self.base().index(c))
    }

    fn from_index(&self, mut i: u128) -> Self::Elem {
        let q = self.base().size();
        (0..self.degree())
            .map(|_| {
                let c = self.base().from_index(i % q);
                i /= q;
                c
            })
            .collect()
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        (0..self.degree())
            .map(|_| self.base().random(rng))
            .collect()
    }

    fn write_elem(&self, a: &Self::Elem, out: &mut String) {
        if let Some(k) = self.prime_value(a) {
            out.push_str(&k.to_string());
            return;
        }
        out.push('[');
        for (i, c) in a.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            self.base().write_elem(c, out);
        }
        out.push(']');
    }

    fn parse_node(&self, node: &ElemNode) -> Result<Self::Elem> {
        match node {
            ElemNode::Int(k) => Ok(self.from_int(*k)),
            ElemNode::List(items) => {
                if items.len() != self.degree() {
                    return Err(Error::LevelMismatch(format!(
                        "expected {} entries, found {}",
                        self.degree(),
                        items.len()
                    )));
                }
                items.iter().map(|n| self.base().parse_node(n)).collect()
            }
        }
    }
}

impl<B: Field> FrobeniusField for ExtField<B> {
    fn fixed_size(&self) -> u64 {
        self.base().size() as u64
    }

    fn frobenius_degree(&self) -> u32 {
        self.degree() as u32
    }

    fn frobenius(&self, a: &Self::Elem, i: i64) -> Self::Elem {
        let j = reduce_index(i, self.degree() as u32) as usize;
        if j == 0 {
            return a.clone();
        }
        self.apply_linear(a, &self.frob_table()[j])
    }
}
