//! Factorization over finite fields: squarefree decomposition, then
//! distinct-degree, then equal-degree splitting.
//!
//! Equal-degree splitting uses the trace map in characteristic two and the
//! `(Q^d - 1)/2` power otherwise. Randomness comes from a seeded ChaCha
//! stream, so results are reproducible for a given seed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Poly, PolyRing};
use crate::field::Field;

impl<F: Field> PolyRing<F> {
    /// Complete factorization of a nonzero `f` into monic irreducibles with
    /// multiplicities, sorted canonically. The leading coefficient is
    /// dropped.
    pub fn factor(&self, f: &Poly<F::Elem>, seed: u64) -> Vec<(Poly<F::Elem>, usize)> {
        let f = self.monic(f).expect("cannot factor the zero polynomial");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (part, mult) in self.squarefree(&f) {
            for (g, d) in self.distinct_degree(&part) {
                for h in self.equal_degree(&g, d, &mut rng) {
                    out.push((h, mult));
                }
            }
        }
        out.sort_by(|a, b| self.cmp(&a.0, &b.0));
        out
    }

    /// Monic irreducible factors of exact degree `k`, sorted canonically.
    pub fn factors_of_degree(&self, f: &Poly<F::Elem>, k: usize, seed: u64) -> Vec<Poly<F::Elem>> {
        let f = self.monic(f).expect("cannot factor the zero polynomial");
        if f.degree().unwrap() < k {
            return Vec::new();
        }
        let x = self.x();
        let xq = self.frobenius_powmod(&x, k, &f).unwrap();
        let g = self.gcd(&f, &self.sub(&xq, &x));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (part, d) in self.distinct_degree(&g) {
            if d == k {
                out.extend(self.equal_degree(&part, d, &mut rng));
            }
        }
        self.sort(&mut out);
        out
    }

    /// Squarefree decomposition of a monic `f`: pairwise coprime squarefree
    /// parts `(a_i, i)` with `f = Π a_i^i`.
    pub fn squarefree(&self, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let p = self.field().characteristic() as usize;
        let mut c = self.gcd(f, &self.derivative(f));
        let mut w = self.div_exact(f, &c);
        let mut i = 1;
        while !self.is_one(&w) {
            let y = self.gcd(&w, &c);
            let z = self.div_exact(&w, &y);
            if !self.is_one(&z) {
                out.push((z, i));
            }
            i += 1;
            c = self.div_exact(&c, &y);
            w = y;
        }
        if !self.is_one(&c) {
            let root = self.pth_root(&c);
            for (g, m) in self.squarefree(&root) {
                out.push((g, m * p));
            }
        }
        out
    }

    /// `g` with `g^p = f`, for `f` a polynomial in `x^p`.
    fn pth_root(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let fld = self.field();
        let p = fld.characteristic() as usize;
        let e = fld.size() / p as u128;
        let v = f
            .coeffs()
            .iter()
            .step_by(p)
            .map(|c| fld.pow(c, e))
            .collect();
        self.from_coeffs(v)
    }

    /// Splits a monic squarefree `f` into `(g_d, d)` where `g_d` is the
    /// product of the irreducible factors of degree `d`.
    pub fn distinct_degree(&self, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let x = self.x();
        let mut h = x.clone();
        let mut d = 0;
        while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
            d += 1;
            h = self.powmod(&h, self.field().size(), &rest).unwrap();
            let g = self.gcd(&rest, &self.sub(&h, &x));
            if !self.is_one(&g) {
                rest = self.div_exact(&rest, &g);
                h = self.rem(&h, &rest).unwrap();
                out.push((g, d));
            }
        }
        if let Some(deg) = rest.degree().filter(|&k| k > 0) {
            out.push((rest, deg));
        }
        out
    }

    /// Splits a monic product of distinct irreducibles of degree `d`.
    pub fn equal_degree(
        &self,
        f: &Poly<F::Elem>,
        d: usize,
        rng: &mut ChaCha8Rng,
    ) -> Vec<Poly<F::Elem>> {
        let n = f.degree().unwrap();
        if n == d {
            return vec![f.clone()];
        }
        loop {
            let a = self.from_coeffs((0..n).map(|_| self.field().random(rng)).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = self.splitting_element(&a, d, f);
            let g = self.gcd(f, &b);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < n {
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&self.div_exact(f, &g), d, rng));
                return out;
            }
        }
    }

    fn splitting_element(&self, a: &Poly<F::Elem>, d: usize, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let fld = self.field();
        if fld.characteristic() == 2 {
            // absolute trace: a + a^2 + ... + a^{2^{D d - 1}}
            let steps = fld.absolute_degree() as usize * d;
            let mut t = self.rem(a, m).unwrap();
            let mut acc = t.clone();
            for _ in 1..steps {
                t = self.rem(&self.mul(&t, &t), m).unwrap();
                acc = self.add(&acc, &t);
            }
            acc
        } else {
            // a^{(Q^d-1)/2} = (a^{1+Q+...+Q^{d-1}})^{(Q-1)/2}
            let q = fld.size();
            let mut t = self.rem(a, m).unwrap();
            let mut norm = t.clone();
            for _ in 1..d {
                t = self.powmod(&t, q, m).unwrap();
                norm = self.rem(&self.mul(&norm, &t), m).unwrap();
            }
            let s = self.powmod(&norm, (q - 1) / 2, m).unwrap();
            self.sub(&s, &self.one())
        }
    }

    /// Product of `(factor^mult)`.
    pub fn reassemble(&self, factors: &[(Poly<F::Elem>, usize)]) -> Poly<F::Elem> {
        factors.iter().fold(self.one(), |acc, (g, m)| {
            self.mul(&acc, &self.pow(g, *m as u64))
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::field::{Field, PrimeField};
    use crate::poly::PolyRing;
    use crate::FieldTower;

    fn show<F: Field>(
        r: &PolyRing<F>,
        fs: &[(crate::Poly<F::Elem>, usize)],
    ) -> Vec<(String, usize)> {
        fs.iter().map(|(g, m)| (r.format(g), *m)).collect()
    }

    #[test]
    fn small_factorizations_over_f2() {
        let r = PolyRing::new(PrimeField::new(2).unwrap());
        let f = r.parse("0,1,0,1").unwrap();
        assert_eq!(
            show(&r, &r.factor(&f, 0)),
            vec![("0,1".to_string(), 1), ("1,1".to_string(), 2)]
        );
        let g = r.parse("0,1,0,0,1").unwrap();
        assert_eq!(
            show(&r, &r.factor(&g, 0)),
            vec![
                ("0,1".to_string(), 1),
                ("1,1".to_string(), 1),
                ("1,1,1".to_string(), 1)
            ]
        );
        let h = r.parse("1,1,0,1").unwrap();
        assert_eq!(show(&r, &r.factor(&h, 0)), vec![("1,1,0,1".to_string(), 1)]);
    }

    #[test]
    fn high_multiplicity_in_odd_characteristic() {
        let r = PolyRing::new(PrimeField::new(3).unwrap());
        // (x+1)^9 (x^2+1)^2 x
        let a = r.pow(&r.parse("1,1").unwrap(), 9);
        let b = r.pow(&r.parse("1,0,1").unwrap(), 2);
        let f = r.mul(&r.mul(&a, &b), &r.x());
        let fs = r.factor(&f, 3);
        assert_eq!(
            show(&r, &fs),
            vec![
                ("0,1".to_string(), 1),
                ("1,1".to_string(), 9),
                ("1,0,1".to_string(), 2)
            ]
        );
    }

    #[test]
    fn x_q_power_minus_x_splits_into_all_irreducibles() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let r = PolyRing::new(t.top().clone());
        // x^{16} - x over F_4 is the product of irreducibles of degree 1 and 2
        let f = r.sub(&r.monomial(t.top().one(), 16), &r.x());
        let fs = r.factor(&f, 9);
        assert_eq!(fs.len(), 4 + 6);
        assert!(fs.iter().all(|(_, m)| *m == 1));
        assert_eq!(r.reassemble(&fs), f);
        assert_eq!(r.factors_of_degree(&f, 2, 1).len(), 6);
        assert_eq!(r.factors_of_degree(&f, 1, 1).len(), 4);
        assert!(r.factors_of_degree(&f, 3, 1).is_empty());
    }
}
