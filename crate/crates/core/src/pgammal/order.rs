//! Orders in `PGL(2, Q)` and `PΓL(2, q^n)`, and the reduction of a
//! semilinear element to one with Frobenius part `σ_t`, `t | n`.

use super::{Mat2, Pgl2, ProjMat2, Semilinear};
use crate::arith;
use crate::field::{ExtField, Field, FrobeniusField};

impl<F: Field> Pgl2<F> {
    /// Least `D ≥ 1` with `M^D` scalar, read off the eigenvalues of `M`:
    ///
    /// * distinct eigenvalues in `F_Q`: the order of `λ_1/λ_2` in `F_Q^*`;
    /// * conjugate eigenvalues in `F_{Q^2}`: the order of `λ^{Q-1}`;
    /// * one repeated eigenvalue: `1` if `M` is scalar, else `p`.
    pub fn proj_order(&self, m: &ProjMat2<F::Elem>) -> u64 {
        let m = m.rep();
        let fld = &self.field;
        if self.is_scalar(m) {
            return 1;
        }
        let r = &self.ring;
        let trace = fld.add(&m.a, &m.d);
        let charpoly = r.from_coeffs(vec![self.det(m), fld.neg(&trace), fld.one()]);
        let q = fld.size();
        let factors = r.factor(&charpoly, 0);
        match factors.as_slice() {
            [(_, 2)] => fld.characteristic(),
            [(l1, 1), (l2, 1)] => {
                let root = |f: &crate::Poly<F::Elem>| fld.neg(&f.coeffs()[0]);
                let ratio = fld.div(&root(l1), &root(l2)).expect("nonzero eigenvalue");
                arith::order_from_multiple(q - 1, |e| fld.is_one(&fld.pow(&ratio, e))) as u64
            }
            [(_, 1)] => {
                let ext =
                    ExtField::new_unchecked(fld.clone(), charpoly).expect("quadratic extension");
                let ratio = ext.pow(&ext.generator(), q - 1);
                arith::order_from_multiple(q + 1, |e| ext.is_one(&ext.pow(&ratio, e))) as u64
            }
            _ => unreachable!("characteristic polynomial has degree 2"),
        }
    }

    /// Iterates `M, M^2, …` until a scalar appears.
    pub fn proj_order_brute(&self, m: &ProjMat2<F::Elem>) -> u64 {
        let q = self.field.size() as u64;
        let cap = q * (q + 1);
        let mut acc = m.rep().clone();
        for d in 1..=cap {
            if self.is_scalar(&acc) {
                return d;
            }
            acc = self.mul(&acc, m.rep());
        }
        unreachable!("projective order exceeds Q(Q+1)")
    }
}

impl<F: FrobeniusField> Pgl2<F> {
    /// `C = A σ_i(A) σ_{2i}(A) ⋯ σ_{i(n/t-1)}(A)` with `t = gcd(i, n)`.
    fn power_core(&self, g: &Semilinear<F::Elem>) -> Mat2<F::Elem> {
        let n = self.n() as u64;
        let i = g.frob as u64;
        let t = arith::gcd(i, n);
        let a = g.mat.rep();
        (1..n / t).fold(a.clone(), |acc, l| {
            self.mul(&acc, &self.sigma(a, (i * l) as i64))
        })
    }

    /// `ord([A, σ_i]) = (n/t)·ord([C])`.
    pub fn semilinear_order(&self, g: &Semilinear<F::Elem>) -> u64 {
        let n = self.n() as u64;
        let t = arith::gcd(g.frob as u64, n);
        let c = self.proj(&self.power_core(g)).expect("invertible");
        n / t * self.proj_order(&c)
    }

    /// Repeated `⋄` until the identity `[I, σ_n]` comes back.
    pub fn semilinear_order_brute(&self, g: &Semilinear<F::Elem>) -> u64 {
        let id = self.group_identity();
        let mut acc = g.clone();
        let mut k = 1;
        while acc != id {
            acc = self.group_mul(&acc, g);
            k += 1;
        }
        k
    }

    /// `g^P` for the least prime `P > ord(g)` with `P ≡ a (mod n/t)`, where
    /// `a·(i/t) ≡ 1 (mod n/t)` and `t = gcd(i, n)`. The result has Frobenius
    /// part `σ_t` and, because `gcd(P, ord g) = 1`, the same invariants as
    /// `g`.
    pub fn reduce_to_sigma_t(&self, g: &Semilinear<F::Elem>) -> Semilinear<F::Elem> {
        let n = self.n() as u64;
        let i = g.frob as u64;
        let t = arith::gcd(i, n);
        let n0 = n / t;
        let a = arith::mod_inverse(i / t, n0).expect("i/t is a unit mod n/t") % n0;
        let ord = self.semilinear_order(g);
        let prime = (ord + 1..)
            .find(|&p| p % n0 == a && arith::is_prime(p as u128))
            .expect("primes in progression");
        let out = self.group_pow(g, prime);
        debug_assert_eq!(out.frob as u64, t);
        out
    }
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use crate::field::Field;
    use crate::pgammal::{Mat2, Pgl2};
    use crate::FieldTower;

    #[test]
    fn orders_of_standard_classes() {
        for p in [2u64, 3, 5, 7] {
            let t = FieldTower::new(p, 1, 1).unwrap();
            let g = Pgl2::new(t.top().clone());
            let f = t.top();
            let unipotent = g
                .proj(&Mat2::new(f.one(), f.one(), f.zero(), f.one()))
                .unwrap();
            assert_eq!(g.proj_order(&unipotent), p);
            assert_eq!(g.proj_order(&g.proj(&g.antidiagonal()).unwrap()), 2);
        }
        // generator 3 of F_7^*
        let t = FieldTower::new(7, 1, 1).unwrap();
        let g = Pgl2::new(t.top().clone());
        let m = g.parse("3;0;0;1").unwrap();
        assert_eq!(g.proj_order(&g.proj(&m).unwrap()), 6);
    }

    #[test]
    fn fast_order_matches_brute_force_on_all_of_pgl2_f4() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let g = Pgl2::new(t.top().clone());
        for m in g.all_classes() {
            assert_eq!(
                g.proj_order(&m),
                g.proj_order_brute(&m),
                "{}",
                g.format(m.rep())
            );
        }
    }

    #[test]
    fn fast_order_matches_brute_force_on_samples() {
        for (p, e, n) in [(3, 1, 2), (2, 1, 3), (5, 1, 1), (2, 2, 2)] {
            let t = FieldTower::new(p, e, n).unwrap();
            let g = Pgl2::new(t.top().clone());
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..60 {
                let m = g.random_class(&mut rng);
                assert_eq!(g.proj_order(&m), g.proj_order_brute(&m));
            }
        }
    }

    #[test]
    fn semilinear_orders() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let g = Pgl2::new(t.top().clone());
        let frob = g.semilinear(&g.identity(), 1).unwrap();
        assert_eq!(g.semilinear_order(&frob), 2);
        let b = g.semilinear(&g.antidiagonal(), 1).unwrap();
        assert_eq!(g.semilinear_order(&b), 2);
        assert_eq!(g.semilinear_order_brute(&b), 2);
        for (p, n) in [(2, 2), (3, 2), (2, 3), (2, 4)] {
            let t = FieldTower::new(p, 1, n).unwrap();
            let g = Pgl2::new(t.top().clone());
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for _ in 0..40 {
                let m = g.random_class(&mut rng);
                let x = g.semilinear(m.rep(), rng.gen_range(1..=n as i64)).unwrap();
                assert_eq!(g.semilinear_order(&x), g.semilinear_order_brute(&x));
            }
        }
    }

    #[test]
    fn reduction_lands_on_gcd_index() {
        let t = FieldTower::new(2, 1, 4).unwrap();
        let g = Pgl2::new(t.top().clone());
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let m = g.random_class(&mut rng);
            for i in 1..=4 {
                let x = g.semilinear(m.rep(), i).unwrap();
                let y = g.reduce_to_sigma_t(&x);
                assert_eq!(y.frob as u64, crate::arith::gcd(i as u64, 4));
            }
        }
        let a = g.semilinear(&g.antidiagonal(), 4).unwrap();
        assert_eq!(g.reduce_to_sigma_t(&a).frob, 4);
        let _ = t.top().one();
    }
}
