//! 2×2 matrices over a field, `PGL(2, Q)` classes, and the semilinear
//! group `PΓL(2, q^n) = PGL(2, q^n) ⋊ Gal(F_{q^n}/F_q)`.
//!
//! Conventions:
//!
//! * `[A]∘f` is the monic multiple of `(bx+d)^k f((ax+c)/(bx+d))`; on roots
//!   it is `α ↦ (dα - c)/(-bα + a)`. With this pairing
//!   `(AB)∘f = A∘(B∘f)` and `F_{A,m} = b x^{q^m+1} - a x^{q^m} + d x - c`
//!   vanishes exactly where `[A]∘α = α^{q^m}`.
//! * `[A, σ_i] * f = [A]∘σ_i(f)` and
//!   `[A, σ_i] ⋄ [B, σ_j] = [A σ_i(B), σ_{i+j}]`, Frobenius index kept in
//!   `1..=n`.

mod action;
mod divisor;
mod order;

pub use action::MobiusTable;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::text::split_top_level;
use crate::field::{reduce_index, Field, FrobeniusField};
use crate::poly::PolyRing;

/// Row-major `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

impl<E> Mat2<E> {
    pub fn new(a: E, b: E, c: E, d: E) -> Self {
        Self { a, b, c, d }
    }

    pub fn entries(&self) -> [&E; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

/// Projective class of an invertible matrix, stored as the representative
/// whose first nonzero entry in the order `a, b, c, d` is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjMat2<E>(Mat2<E>);

impl<E> ProjMat2<E> {
    pub fn rep(&self) -> &Mat2<E> {
        &self.0
    }
}

/// `[A, σ_i]` with `1 ≤ i ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semilinear<E> {
    pub mat: ProjMat2<E>,
    pub frob: u32,
}

/// Matrix and group operations over a coefficient field.
#[derive(Clone, Debug)]
pub struct Pgl2<F: Field> {
    field: F,
    ring: PolyRing<F>,
}

impl<F: Field> Pgl2<F> {
    pub fn new(field: F) -> Self {
        Self {
            ring: PolyRing::new(field.clone()),
            field,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn identity(&self) -> Mat2<F::Elem> {
        let f = &self.field;
        Mat2::new(f.one(), f.zero(), f.zero(), f.one())
    }

    /// `[[0, 1], [1, 0]]`.
    pub fn antidiagonal(&self) -> Mat2<F::Elem> {
        let f = &self.field;
        Mat2::new(f.zero(), f.one(), f.one(), f.zero())
    }

    pub fn det(&self, m: &Mat2<F::Elem>) -> F::Elem {
        let f = &self.field;
        f.sub(&f.mul(&m.a, &m.d), &f.mul(&m.b, &m.c))
    }

    pub fn mul(&self, x: &Mat2<F::Elem>, y: &Mat2<F::Elem>) -> Mat2<F::Elem> {
        let f = &self.field;
        let dot =
            |p: &F::Elem, q: &F::Elem, r: &F::Elem, s: &F::Elem| f.add(&f.mul(p, q), &f.mul(r, s));
        Mat2::new(
            dot(&x.a, &y.a, &x.b, &y.c),
            dot(&x.a, &y.b, &x.b, &y.d),
            dot(&x.c, &y.a, &x.d, &y.c),
            dot(&x.c, &y.b, &x.d, &y.d),
        )
    }

    pub fn scale(&self, m: &Mat2<F::Elem>, s: &F::Elem) -> Mat2<F::Elem> {
        let f = &self.field;
        Mat2::new(
            f.mul(&m.a, s),
            f.mul(&m.b, s),
            f.mul(&m.c, s),
            f.mul(&m.d, s),
        )
    }

    pub fn inverse(&self, m: &Mat2<F::Elem>) -> Result<Mat2<F::Elem>> {
        let f = &self.field;
        let det_inv = f.inv(&self.det(m)).map_err(|_| Error::SingularMatrix)?;
        Ok(self.scale(
            &Mat2::new(m.d.clone(), f.neg(&m.b), f.neg(&m.c), m.a.clone()),
            &det_inv,
        ))
    }

    pub fn pow(&self, m: &Mat2<F::Elem>, mut e: u64) -> Mat2<F::Elem> {
        let mut base = m.clone();
        let mut acc = self.identity();
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

    pub fn is_scalar(&self, m: &Mat2<F::Elem>) -> bool {
        let f = &self.field;
        f.is_zero(&m.b) && f.is_zero(&m.c) && m.a == m.d
    }

    pub fn transpose(&self, m: &Mat2<F::Elem>) -> Mat2<F::Elem> {
        Mat2::new(m.a.clone(), m.c.clone(), m.b.clone(), m.d.clone())
    }

    /// Normalized projective class; fails on singular input.
    pub fn proj(&self, m: &Mat2<F::Elem>) -> Result<ProjMat2<F::Elem>> {
        let f = &self.field;
        if f.is_zero(&self.det(m)) {
            return Err(Error::SingularMatrix);
        }
        let lead = m.entries().into_iter().find(|x| !f.is_zero(x)).unwrap();
        Ok(ProjMat2(self.scale(m, &f.inv(lead)?)))
    }

    /// Every class of `PGL(2, Q)`, in canonical order; `Q(Q^2 - 1)` of them.
    pub fn all_classes(&self) -> Vec<ProjMat2<F::Elem>> {
        let f = &self.field;
        let elems: Vec<F::Elem> = crate::field::elements(f).collect();
        let mut out = Vec::new();
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    let m = Mat2::new(f.one(), b.clone(), c.clone(), d.clone());
                    if !f.is_zero(&self.det(&m)) {
                        out.push(ProjMat2(m));
                    }
                }
            }
        }
        for c in elems.iter().filter(|c| !f.is_zero(c)) {
            for d in &elems {
                out.push(ProjMat2(Mat2::new(f.zero(), f.one(), c.clone(), d.clone())));
            }
        }
        out
    }

    pub fn random_class<R: Rng + ?Sized>(&self, rng: &mut R) -> ProjMat2<F::Elem> {
        loop {
            let f = &self.field;
            let m = Mat2::new(f.random(rng), f.random(rng), f.random(rng), f.random(rng));
            if let Ok(p) = self.proj(&m) {
                return p;
            }
        }
    }

    /// `a;b;c;d`.
    pub fn format(&self, m: &Mat2<F::Elem>) -> String {
        m.entries().map(|x| self.field.format_elem(x)).join(";")
    }

    pub fn parse(&self, s: &str) -> Result<Mat2<F::Elem>> {
        let parts = split_top_level(s.trim(), ';')?;
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "matrix needs 4 entries separated by ';', found {}",
                parts.len()
            )));
        }
        let e = parts
            .iter()
            .map(|p| self.field.parse_elem(p))
            .collect::<Result<Vec<_>>>()?;
        let [a, b, c, d]: [F::Elem; 4] = e.try_into().unwrap();
        Ok(Mat2::new(a, b, c, d))
    }
}

impl<F: FrobeniusField> Pgl2<F> {
    pub fn n(&self) -> u32 {
        self.field.frobenius_degree()
    }

    /// Entrywise `σ_i`.
    pub fn sigma(&self, m: &Mat2<F::Elem>, i: i64) -> Mat2<F::Elem> {
        let f = &self.field;
        Mat2::new(
            f.frobenius(&m.a, i),
            f.frobenius(&m.b, i),
            f.frobenius(&m.c, i),
            f.frobenius(&m.d, i),
        )
    }

    /// `[A, σ_i]` with `i` reduced into `1..=n`.
    pub fn semilinear(&self, m: &Mat2<F::Elem>, i: i64) -> Result<Semilinear<F::Elem>> {
        Ok(Semilinear {
            mat: self.proj(m)?,
            frob: self.frob_index(i),
        })
    }

    fn frob_index(&self, i: i64) -> u32 {
        match reduce_index(i, self.n()) {
            0 => self.n(),
            j => j,
        }
    }

    pub fn group_identity(&self) -> Semilinear<F::Elem> {
        Semilinear {
            mat: ProjMat2(self.identity()),
            frob: self.n(),
        }
    }

    /// `[A, σ_i] ⋄ [B, σ_j] = [A σ_i(B), σ_{i+j}]`.
    pub fn group_mul(
        &self,
        g: &Semilinear<F::Elem>,
        h: &Semilinear<F::Elem>,
    ) -> Semilinear<F::Elem> {
        let m = self.mul(g.mat.rep(), &self.sigma(h.mat.rep(), g.frob as i64));
        Semilinear {
            mat: self.proj(&m).expect("product of invertible matrices"),
            frob: self.frob_index(g.frob as i64 + h.frob as i64),
        }
    }

    /// `[A, σ_i]^{-1} = [σ_{n-i}(A^{-1}), σ_{n-i}]`.
    pub fn group_inv(&self, g: &Semilinear<F::Elem>) -> Semilinear<F::Elem> {
        let back = self.n() as i64 - g.frob as i64;
        let inv = self.inverse(g.mat.rep()).expect("invertible");
        Semilinear {
            mat: self.proj(&self.sigma(&inv, back)).unwrap(),
            frob: self.frob_index(back),
        }
    }

    pub fn group_pow(&self, g: &Semilinear<F::Elem>, mut e: u64) -> Semilinear<F::Elem> {
        let mut base = g.clone();
        let mut acc = self.group_identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.group_mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.group_mul(&base, &base);
            }
        }
        acc
    }

    /// `A_i^* = A σ_1(A) ⋯ σ_{i-1}(A)`, `i ≥ 1`.
    pub fn a_star(&self, m: &Mat2<F::Elem>, i: u64) -> Mat2<F::Elem> {
        assert!(i >= 1, "a_star needs i ≥ 1");
        let mut acc = m.clone();
        for l in 1..i {
            acc = self.mul(&acc, &self.sigma(m, l as i64));
        }
        acc
    }

    pub fn format_semilinear(&self, g: &Semilinear<F::Elem>) -> String {
        format!("[{}, σ_{}]", self.format(g.mat.rep()), g.frob)
    }
}
