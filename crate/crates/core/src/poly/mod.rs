//! Dense univariate polynomials over any [`Field`].
//!
//! [`Poly`] is a plain coefficient vector (constant term first, no trailing
//! zeros); all arithmetic goes through a [`PolyRing`] that carries the
//! coefficient field.

mod factor;
mod irreducible;
mod text;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{Field, FrobeniusField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    /// Wraps a coefficient vector that already has no trailing zeros.
    pub fn from_raw(coeffs: Vec<E>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// Polynomial arithmetic over a fixed coefficient field.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        Self { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly::from_raw(Vec::new())
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn x(&self) -> Poly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(&self, c: F::Elem, k: usize) -> Poly<F::Elem> {
        let mut v = vec![self.field.zero(); k + 1];
        v[k] = c;
        self.from_coeffs(v)
    }

    /// Strips trailing zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly::from_raw(coeffs)
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, f: &Poly<F::Elem>, i: usize) -> F::Elem {
        f.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self, f: &Poly<F::Elem>) -> bool {
        f.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn is_one(&self, f: &Poly<F::Elem>) -> bool {
        f.coeffs.len() == 1 && self.field.is_one(&f.coeffs[0])
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, f: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let lc = f.leading().ok_or(Error::DivisionByZero)?;
        if self.field.is_one(lc) {
            return Ok(f.clone());
        }
        Ok(self.scale(f, &self.field.inv(lc)?))
    }

    pub fn add(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = f.coeffs.len().max(g.coeffs.len());
        let v = (0..n)
            .map(|i| match (f.coeffs.get(i), g.coeffs.get(i)) {
                (Some(a), Some(b)) => self.field.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(v)
    }

    pub fn neg(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly::from_raw(f.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(f, &self.neg(g))
    }

    pub fn scale(&self, f: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Poly::from_raw(f.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        let fld = &self.field;
        let mut out = vec![fld.zero(); f.coeffs.len() + g.coeffs.len() - 1];
        for (i, a) in f.coeffs.iter().enumerate() {
            if fld.is_zero(a) {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                if !fld.is_zero(b) {
                    out[i + j] = fld.add(&out[i + j], &fld.mul(a, b));
                }
            }
        }
        self.from_coeffs(out)
    }

    pub fn divmod(
        &self,
        f: &Poly<F::Elem>,
        g: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let fld = &self.field;
        let Some(df) = f.degree().filter(|&df| df >= dg) else {
            return Ok((self.zero(), f.clone()));
        };
        let lc_inv = fld.inv(g.leading().unwrap())?;
        let mut r = f.coeffs.clone();
        let mut q = vec![fld.zero(); df - dg + 1];
        for i in (dg..=df).rev() {
            let c = std::mem::replace(&mut r[i], fld.zero());
            if fld.is_zero(&c) {
                continue;
            }
            let t = fld.mul(&c, &lc_inv);
            for (j, b) in g.coeffs[..dg].iter().enumerate() {
                if !fld.is_zero(b) {
                    r[i - dg + j] = fld.sub(&r[i - dg + j], &fld.mul(&t, b));
                }
            }
            q[i - dg] = t;
        }
        r.truncate(dg);
        Ok((self.from_coeffs(q), self.from_coeffs(r)))
    }

    pub fn rem(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.divmod(f, g)?.1)
    }

    /// Exact quotient; panics if `g` does not divide `f`.
    pub(crate) fn div_exact(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (q, r) = self.divmod(f, g).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            self.monic(&a).expect("nonzero")
        }
    }

    /// `(g, s, t)` with `g = s·a + t·b`; `g` is not normalized.
    pub fn ext_gcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        (r0, s0, t0)
    }

    pub fn derivative(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let v = f
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(c, &self.field.from_int(i as i64)))
            .collect();
        self.from_coeffs(v)
    }

    pub fn eval(&self, f: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        f.coeffs.iter().rev().fold(self.field.zero(), |acc, c| {
            self.field.add(&self.field.mul(&acc, x), c)
        })
    }

    pub fn pow(&self, f: &Poly<F::Elem>, mut e: u64) -> Poly<F::Elem> {
        let mut base = f.clone();
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

    /// `f^e mod m` by square-and-multiply.
    pub fn powmod(
        &self,
        f: &Poly<F::Elem>,
        mut e: u128,
        m: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>> {
        let mut base = self.rem(f, m)?;
        let mut acc = self.rem(&self.one(), m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.rem(&self.mul(&base, &base), m)?;
            }
        }
        Ok(acc)
    }

    /// `f^{Q^times} mod m` where `Q` is the size of the coefficient field.
    pub fn frobenius_powmod(
        &self,
        f: &Poly<F::Elem>,
        times: usize,
        m: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>> {
        let mut acc = self.rem(f, m)?;
        for _ in 0..times {
            acc = self.powmod(&acc, self.field.size(), m)?;
        }
        Ok(acc)
    }

    /// Monic reciprocal `f(0)^{-1} x^{deg f} f(1/x)`.
    pub fn reciprocal(&self, f: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let c0 = f.coeffs.first().ok_or(Error::ZeroConstantTerm)?;
        if self.field.is_zero(c0) {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = self.field.inv(c0)?;
        let rev = f
            .coeffs
            .iter()
            .rev()
            .map(|c| self.field.mul(c, &inv))
            .collect();
        Ok(Poly::from_raw(rev))
    }

    /// Total order: by degree, then by coefficients from the leading one
    /// down, each compared by canonical element index.
    pub fn cmp(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Ordering {
        f.coeffs.len().cmp(&g.coeffs.len()).then_with(|| {
            f.coeffs
                .iter()
                .rev()
                .zip(g.coeffs.iter().rev())
                .map(|(a, b)| self.field.cmp_elem(a, b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }

    pub fn sort(&self, v: &mut [Poly<F::Elem>]) {
        v.sort_by(|a, b| self.cmp(a, b));
    }

    /// Maps coefficients into another field.
    pub fn map_coeffs<G: Field>(
        &self,
        f: &Poly<F::Elem>,
        target: &PolyRing<G>,
        map: impl Fn(&F::Elem) -> G::Elem,
    ) -> Poly<G::Elem> {
        target.from_coeffs(f.coeffs.iter().map(map).collect())
    }
}

impl<F: FrobeniusField> PolyRing<F> {
    /// Applies `σ_i` coefficientwise.
    pub fn sigma(&self, f: &Poly<F::Elem>, i: i64) -> Poly<F::Elem> {
        Poly::from_raw(
            f.coeffs
                .iter()
                .map(|c| self.field.frobenius(c, i))
                .collect(),
        )
    }

    /// Least `t | n` with `σ_t(f) = f`.
    pub fn min_subfield_degree(&self, f: &Poly<F::Elem>) -> u32 {
        f.coeffs.iter().fold(1u64, |acc, c| {
            crate::arith::lcm(acc, self.field.subfield_degree(c) as u64)
        }) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::FieldTower;

    fn f2() -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(2).unwrap())
    }

    #[test]
    fn gcd_of_square_in_char_two() {
        let r = f2();
        let a = r.parse("1,0,1").unwrap();
        let b = r.parse("1,1").unwrap();
        assert_eq!(r.gcd(&a, &b), b);
    }

    #[test]
    fn division_contract() {
        let r = PolyRing::new(PrimeField::new(7).unwrap());
        let f = r.parse("3,0,5,1").unwrap();
        let g = r.parse("2,1,4").unwrap();
        let rem = r.parse("6,1").unwrap();
        let prod = r.add(&r.mul(&f, &g), &rem);
        assert_eq!(r.divmod(&prod, &g).unwrap(), (f.clone(), rem));
        assert_eq!(r.mul(&f, &r.one()), f);
        assert_eq!(r.divmod(&f, &r.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn reciprocals() {
        let r = f2();
        let f = r.parse("1,1,1").unwrap();
        assert_eq!(r.reciprocal(&f).unwrap(), f);
        let g = r.parse("1,1,0,1").unwrap();
        assert_eq!(r.format(&r.reciprocal(&g).unwrap()), "1,0,1,1");
        assert_eq!(
            r.reciprocal(&r.parse("0,1").unwrap()),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn sigma_on_f4() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let r = PolyRing::new(t.top().clone());
        let f = r.parse("[0,1],1").unwrap();
        assert_eq!(r.format(&r.sigma(&f, 1)), "[1,1],1");
        assert_eq!(r.min_subfield_degree(&f), 2);
        let g = r.parse("1,1,0,1").unwrap();
        assert_eq!(r.sigma(&g, 1), g);
        assert_eq!(r.min_subfield_degree(&g), 1);
    }

    #[test]
    fn powmod_matches_repeated_multiplication() {
        let r = PolyRing::new(PrimeField::new(3).unwrap());
        let f = r.parse("1,2,0,1").unwrap();
        let m = r.parse("2,0,1,1,1").unwrap();
        let mut acc = r.one();
        for e in 0..20u128 {
            assert_eq!(r.powmod(&f, e, &m).unwrap(), r.rem(&acc, &m).unwrap());
            acc = r.mul(&acc, &f);
        }
    }
}
