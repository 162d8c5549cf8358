//! Irreducibility testing and enumeration of monic polynomials.

use rand::Rng;

use super::{Poly, PolyRing};
use crate::arith;
use crate::field::Field;

impl<F: Field> PolyRing<F> {
    /// Rabin's test: `f` of degree `k` is irreducible iff
    /// `x^{Q^k} ≡ x (mod f)` and `gcd(f, x^{Q^{k/r}} - x) = 1` for every
    /// prime `r | k`.
    pub fn is_irreducible(&self, f: &Poly<F::Elem>) -> bool {
        let k = match f.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(k) => k,
        };
        let f = self.monic(f).expect("nonzero");
        let x = self.x();
        // x^{Q^i} mod f for i = 0..=k
        let mut powers = Vec::with_capacity(k + 1);
        let mut cur = self.rem(&x, &f).unwrap();
        powers.push(cur.clone());
        for _ in 0..k {
            cur = self.powmod(&cur, self.field().size(), &f).unwrap();
            powers.push(cur.clone());
        }
        if powers[k] != self.rem(&x, &f).unwrap() {
            return false;
        }
        arith::prime_divisors(k as u128).into_iter().all(|r| {
            let h = self.sub(&powers[k / r as usize], &x);
            self.is_one(&self.gcd(&f, &h))
        })
    }

    /// Monic polynomial of degree `k` whose lower coefficients are the
    /// base-`Q` digits of `index`, constant term least significant.
    pub fn monic_from_index(&self, k: usize, mut index: u128) -> Poly<F::Elem> {
        let q = self.field().size();
        let mut v = Vec::with_capacity(k + 1);
        for _ in 0..k {
            v.push(self.field().from_index(index % q));
            index /= q;
        }
        v.push(self.field().one());
        Poly::from_raw(v)
    }

    /// Number of monic polynomials of degree `k`, if it fits.
    pub fn monic_count(&self, k: usize) -> Option<u128> {
        self.field().size().checked_pow(k as u32)
    }

    /// Every monic polynomial of degree `k`, in canonical order.
    pub fn iter_monic(&self, k: usize) -> impl Iterator<Item = Poly<F::Elem>> + '_ {
        let count = self.monic_count(k).expect("candidate space overflows u128");
        (0..count).map(move |i| self.monic_from_index(k, i))
    }

    /// Every monic irreducible of degree `k` exactly once, in canonical order.
    pub fn iter_monic_irreducibles(&self, k: usize) -> impl Iterator<Item = Poly<F::Elem>> + '_ {
        assert!(k >= 1, "degree must be positive");
        self.iter_monic(k).filter(move |f| self.is_irreducible(f))
    }

    /// Uniformly random monic polynomial of degree `k`.
    pub fn random_monic<R: Rng + ?Sized>(&self, k: usize, rng: &mut R) -> Poly<F::Elem> {
        let mut v: Vec<F::Elem> = (0..k).map(|_| self.field().random(rng)).collect();
        v.push(self.field().one());
        Poly::from_raw(v)
    }

    /// Rejection-sampled monic irreducible of degree `k ≥ 1`.
    pub fn random_monic_irreducible<R: Rng + ?Sized>(
        &self,
        k: usize,
        rng: &mut R,
    ) -> Poly<F::Elem> {
        loop {
            let f = self.random_monic(k, rng);
            if self.is_irreducible(&f) {
                return f;
            }
        }
    }

    /// Gauss necklace count for this coefficient field.
    pub fn count_irreducibles(&self, k: usize) -> u128 {
        arith::count_irreducibles(self.field().size() as u64, k as u64)
    }
}
