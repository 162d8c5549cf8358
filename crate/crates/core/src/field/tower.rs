use super::{ExtField, Field, FrobeniusField, PrimeField, ZechField};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::{Fq, Fqn};

/// `F_p ⊆ F_q = F_p[u]/(g) ⊆ F_{q^n} = F_q[v]/(h)`.
///
/// Both levels are held as table-backed views over the structural
/// quotient rings, so the top field may have at most 2^20 elements.
/// Immutable after construction and cheap to clone.
#[derive(Clone, Debug)]
pub struct FieldTower {
    p: u64,
    e: u32,
    n: u32,
    prime: PrimeField,
    base: Fq,
    top: Fqn,
}

impl FieldTower {
    /// Tower with the deterministic default moduli: the first monic
    /// irreducible in canonical order at each level.
    pub fn new(p: u64, e: u32, n: u32) -> Result<Self> {
        Self::with_moduli(p, e, n, None, None)
    }

    pub fn with_moduli(
        p: u64,
        e: u32,
        n: u32,
        g: Option<Poly<u64>>,
        h: Option<Poly<<Fq as Field>::Elem>>,
    ) -> Result<Self> {
        let prime = PrimeField::new(p)?;
        if e == 0 || n == 0 {
            return Err(Error::InvalidArgument(
                "extension degrees must be positive".into(),
            ));
        }
        let g = match g {
            Some(g) => check_modulus(&prime, g, e as usize)?,
            None => first_irreducible(&prime, e as usize),
        };
        let base = ZechField::new(ExtField::new_unchecked(prime, g)?)?;
        let h = match h {
            Some(h) => check_modulus(&base, h, n as usize)?,
            None => first_irreducible(&base, n as usize),
        };
        let top_size = (base.size()).checked_pow(n).unwrap_or(u128::MAX);
        if top_size > super::zech::MAX_TABLE_SIZE {
            return Err(Error::FieldTooLarge(format!("{p}^({e}*{n})")));
        }
        let top = ZechField::new(ExtField::new_unchecked(base.clone(), h)?)?;
        Ok(Self {
            p,
            e,
            n,
            prime,
            base,
            top,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Size of the fixed field `F_q`.
    pub fn q(&self) -> u64 {
        self.p.pow(self.e)
    }

    pub fn prime(&self) -> &PrimeField {
        &self.prime
    }

    /// `F_q`.
    pub fn base(&self) -> &Fq {
        &self.base
    }

    /// `F_{q^n}`.
    pub fn top(&self) -> &Fqn {
        &self.top
    }

    pub fn g(&self) -> Poly<u64> {
        self.base.structural().modulus()
    }

    pub fn h(&self) -> Poly<<Fq as Field>::Elem> {
        self.top.structural().modulus()
    }

    /// `v`, the class of the indeterminate in `F_q[v]/(h)`.
    pub fn generator(&self) -> <Fqn as Field>::Elem {
        let top = self.top.structural();
        self.top.from_structural(&top.generator())
    }

    pub fn frobenius(&self, a: &<Fqn as Field>::Elem, i: i64) -> <Fqn as Field>::Elem {
        self.top.frobenius(a, i)
    }

    pub fn subfield_degree(&self, a: &<Fqn as Field>::Elem) -> u32 {
        self.top.subfield_degree(a)
    }

    pub fn embed_base(&self, c: &<Fq as Field>::Elem) -> <Fqn as Field>::Elem {
        self.top.from_structural(&self.top.structural().embed(c))
    }

    pub fn to_base(&self, a: &<Fqn as Field>::Elem) -> Option<<Fq as Field>::Elem> {
        self.top.structural().to_base(&self.top.to_structural(a))
    }

    /// Same `F_q` with the top level replaced by a degree-`n` extension.
    pub fn with_top_degree(&self, n: u32) -> Result<Self> {
        Self::with_moduli(self.p, self.e, n, Some(self.g()), None)
    }
}

fn check_modulus<F: Field>(field: &F, m: Poly<F::Elem>, degree: usize) -> Result<Poly<F::Elem>> {
    let ring = PolyRing::new(field.clone());
    if m.degree() != Some(degree) {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: m.degree().unwrap_or(0),
        });
    }
    if !ring.is_monic(&m) || !ring.is_irreducible(&m) {
        return Err(Error::ReducibleModulus(ring.format(&m)));
    }
    Ok(m)
}

fn first_irreducible<F: Field>(field: &F, degree: usize) -> Poly<F::Elem> {
    PolyRing::new(field.clone())
        .iter_monic_irreducibles(degree)
        .next()
        .expect("irreducibles exist in every degree")
}
