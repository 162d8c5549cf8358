//! The polynomials `F_{A,m}` and `F_{A,m,i}` whose roots encode the
//! fixed-point condition `[A]∘α = α^{q^m}`.

use super::{Mat2, Pgl2};
use crate::error::{Error, Result};
use crate::field::FrobeniusField;
use crate::poly::Poly;

impl<F: FrobeniusField> Pgl2<F> {
    /// `q^m + 1`, checked against `cap`.
    fn divisor_degree(&self, m: u32, cap: u128) -> Result<usize> {
        let q = self.field.fixed_size() as u128;
        let qm = q
            .checked_pow(m)
            .filter(|&v| v <= cap)
            .ok_or(Error::DegreeTooLarge {
                degree: q.checked_pow(m).unwrap_or(u128::MAX),
                cap,
            })?;
        Ok(qm as usize)
    }

    /// `F_{A,m} = b x^{q^m+1} - a x^{q^m} + d x - c`.
    ///
    /// Fails with `DegreeTooLarge` when `q^m` exceeds `cap`.
    pub fn build_f(&self, a: &Mat2<F::Elem>, m: u32, cap: u128) -> Result<Poly<F::Elem>> {
        if self.field.is_zero(&self.det(a)) {
            return Err(Error::SingularMatrix);
        }
        let qm = self.divisor_degree(m, cap)?;
        let fld = &self.field;
        let mut v = vec![fld.zero(); qm + 2];
        let mut put = |k: usize, c: F::Elem| v[k] = fld.add(&v[k], &c);
        put(qm + 1, a.b.clone());
        put(qm, fld.neg(&a.a));
        put(1, a.d.clone());
        put(0, fld.neg(&a.c));
        Ok(self.ring.from_coeffs(v))
    }

    /// `F_{A,m,i} = σ_{-i}(F_{A_i^*, m-i})` for `0 ≤ i ≤ m`.
    ///
    /// For `i = 0` the starred matrix is read as the identity, so
    /// `F_{A,m,0} = F_{I,m}`.
    pub fn build_f_i(&self, a: &Mat2<F::Elem>, m: u32, i: u32, cap: u128) -> Result<Poly<F::Elem>> {
        if i > m {
            return Err(Error::InvalidArgument(format!(
                "need i ≤ m, got i = {i}, m = {m}"
            )));
        }
        let star = if i == 0 {
            self.identity()
        } else {
            self.a_star(a, i as u64)
        };
        let f = self.build_f(&star, m - i, cap)?;
        Ok(self.ring.sigma(&f, -(i as i64)))
    }
}

#[cfg(test)]
mod tests {
    use crate::field::Field;
    use crate::pgammal::Pgl2;
    use crate::FieldTower;

    #[test]
    fn special_matrices() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let g = Pgl2::new(t.top().clone());
        let r = g.ring().clone();
        let one = t.top().one();
        // antidiagonal: x^{q^m+1} - 1
        let f = g.build_f(&g.antidiagonal(), 2, 1 << 14).unwrap();
        let expect = r.sub(&r.monomial(one, 5), &r.one());
        assert_eq!(f, expect);
        // identity: x - x^{q^m}
        let f = g.build_f(&g.identity(), 3, 1 << 14).unwrap();
        assert_eq!(f, r.sub(&r.x(), &r.monomial(one, 8)));
    }

    #[test]
    fn cap_is_enforced() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let g = Pgl2::new(t.top().clone());
        assert!(g.build_f(&g.identity(), 14, 1 << 14).is_ok());
        assert!(matches!(
            g.build_f(&g.identity(), 15, 1 << 14),
            Err(crate::Error::DegreeTooLarge { .. })
        ));
    }
}
