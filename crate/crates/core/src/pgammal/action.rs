use super::{Mat2, Pgl2, Semilinear};
use crate::error::{Error, Result};
use crate::field::{ExtField, Field, FrobeniusField};
use crate::poly::Poly;

/// Precomputed `P_j = (ax+c)^j (bx+d)^{k-j}` for `j = 0..=k`, so that
/// `A∘f = Σ f_j P_j` costs one pass over the coefficients of `f`.
#[derive(Clone, Debug)]
pub struct MobiusTable<E> {
    degree: usize,
    basis: Vec<Poly<E>>,
}

impl<E> MobiusTable<E> {
    pub fn degree(&self) -> usize {
        self.degree
    }
}

impl<F: Field> Pgl2<F> {
    pub fn mobius_table(&self, m: &Mat2<F::Elem>, k: usize) -> MobiusTable<F::Elem> {
        let r = &self.ring;
        let num = r.from_coeffs(vec![m.c.clone(), m.a.clone()]);
        let den = r.from_coeffs(vec![m.d.clone(), m.b.clone()]);
        let mut num_pows = vec![r.one()];
        let mut den_pows = vec![r.one()];
        for _ in 0..k {
            num_pows.push(r.mul(num_pows.last().unwrap(), &num));
            den_pows.push(r.mul(den_pows.last().unwrap(), &den));
        }
        let basis = (0..=k)
            .map(|j| r.mul(&num_pows[j], &den_pows[k - j]))
            .collect();
        MobiusTable { degree: k, basis }
    }

    /// Unnormalized image `Σ f_j P_j`; `None` if its degree drops, which
    /// happens only for inputs with a root mapped to infinity.
    pub fn act_with_table(
        &self,
        table: &MobiusTable<F::Elem>,
        f: &Poly<F::Elem>,
    ) -> Option<Poly<F::Elem>> {
        let k = table.degree;
        debug_assert_eq!(f.degree(), Some(k));
        let fld = &self.field;
        let mut acc = vec![fld.zero(); k + 1];
        for (fj, pj) in f.coeffs().iter().zip(&table.basis) {
            if fld.is_zero(fj) {
                continue;
            }
            for (slot, c) in acc.iter_mut().zip(pj.coeffs()) {
                if !fld.is_zero(c) {
                    *slot = fld.add(slot, &fld.mul(fj, c));
                }
            }
        }
        if fld.is_zero(&acc[k]) {
            return None;
        }
        Some(Poly::from_raw(acc))
    }

    /// `[A]∘f`: the monic multiple of `(bx+d)^k f((ax+c)/(bx+d))`.
    ///
    /// `f` should be monic irreducible of degree at least two; the image is
    /// then monic irreducible of the same degree.
    pub fn mat_act_poly(&self, m: &Mat2<F::Elem>, f: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        if self.field.is_zero(&self.det(m)) {
            return Err(Error::SingularMatrix);
        }
        let k = f.degree().unwrap_or(0);
        if k < 2 {
            return Err(Error::DegreeTooSmall(k));
        }
        let table = self.mobius_table(m, k);
        let image = self.act_with_table(&table, f).ok_or_else(|| {
            Error::InvariantCheckFailed(format!(
                "leading coefficient of A∘f vanished for {}; input is not irreducible",
                self.ring.format(f)
            ))
        })?;
        self.ring.monic(&image)
    }
}

impl<F: FrobeniusField> Pgl2<F> {
    /// `[A, σ_i] * f = [A]∘σ_i(f)`.
    pub fn semilinear_act(
        &self,
        g: &Semilinear<F::Elem>,
        f: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>> {
        self.mat_act_poly(g.mat.rep(), &self.ring.sigma(f, g.frob as i64))
    }

    /// `[A, σ_i] * α = [A]∘α^{q^i} = (dβ - c)/(-bβ + a)` with `β = α^{q^i}`,
    /// for `α` in an extension of this field.
    ///
    /// The stored index `i = n` is read as `σ_0`, so `[I, σ_n]` fixes every
    /// root.
    pub fn root_act(
        &self,
        g: &Semilinear<F::Elem>,
        ext: &ExtField<F>,
        alpha: &<ExtField<F> as Field>::Elem,
    ) -> Result<<ExtField<F> as Field>::Elem> {
        let i = (g.frob % self.n()) as usize;
        self.root_act_raw(g.mat.rep(), i, ext, alpha)
    }

    /// Root action with an unreduced Frobenius exponent `q^i`.
    pub fn root_act_raw(
        &self,
        m: &Mat2<F::Elem>,
        i: usize,
        ext: &ExtField<F>,
        alpha: &<ExtField<F> as Field>::Elem,
    ) -> Result<<ExtField<F> as Field>::Elem> {
        let beta = q_power(ext, alpha, self.field.fixed_size(), i);
        let num = ext.sub(&ext.mul(&ext.embed(&m.d), &beta), &ext.embed(&m.c));
        let den = ext.sub(&ext.embed(&m.a), &ext.mul(&ext.embed(&m.b), &beta));
        if ext.is_zero(&den) {
            return Err(Error::ZeroDenominator);
        }
        ext.div(&num, &den)
    }
}

/// `α^{q^times}`.
pub fn q_power<L: Field>(ext: &L, alpha: &L::Elem, q: u64, times: usize) -> L::Elem {
    (0..times).fold(alpha.clone(), |acc, _| ext.pow(&acc, q as u128))
}
