//! Self-reciprocal (SRIM) and self-conjugate-reciprocal (SCRIM)
//! polynomials, and the descent of `[A, σ_i]`-invariants to `F_q` when
//! `A` has entries in `F_q`.

use serde::Serialize;

use super::{census_over, scan_monic, Caps, Invariants};
use crate::arith;
use crate::error::{Error, Result};
use crate::pgammal::{Mat2, Pgl2};
use crate::poly::PolyRing;
use crate::{BaseElem, BasePoly, Field, FieldTower, TopElem, TopPoly};

fn odd_at_least_three(n: u64) -> Result<()> {
    if n % 2 == 0 {
        return Err(Error::EvenDegree(n));
    }
    if n < 3 {
        return Err(Error::DegreeTooSmall(n as usize));
    }
    Ok(())
}

fn check_prime_power(q: u64) -> Result<()> {
    arith::prime_power(q)
        .map(|_| ())
        .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))
}

fn checked_pow(q: u64, k: u64) -> Result<u128> {
    (q as u128)
        .checked_pow(k as u32)
        .ok_or_else(|| Error::InvalidArgument(format!("{q}^{k} overflows")))
}

/// Number of degree-`n` SCRIMs over `F_{q^2}`: `(1/n) Σ_{d|n} μ(d) q^{n/d}`.
pub fn scrim_count(q: u64, n: u64) -> Result<u128> {
    check_prime_power(q)?;
    odd_at_least_three(n)?;
    let mut sum: i128 = 0;
    for d in arith::divisors(n) {
        sum += arith::moebius_mu(d) as i128 * checked_pow(q, n / d)? as i128;
    }
    Ok((sum / n as i128) as u128)
}

/// The same count as `(1/n) Σ_{d ∈ D_n} φ(d)`, where `D_n` holds the
/// divisors of `q^n + 1` dividing no `q^k + 1` with `0 ≤ k < n`.
pub fn bju_scrim_count(q: u64, n: u64) -> Result<u128> {
    check_prime_power(q)?;
    odd_at_least_three(n)?;
    let top = checked_pow(q, n)? + 1;
    let top =
        u64::try_from(top).map_err(|_| Error::InvalidArgument(format!("{q}^{n}+1 overflows")))?;
    let lower: Vec<u64> = (0..n).map(|k| q.pow(k as u32) + 1).collect();
    let sum: u128 = arith::divisors(top)
        .into_iter()
        .filter(|d| lower.iter().all(|l| l % d != 0))
        .map(|d| arith::euler_phi(d) as u128)
        .sum();
    if sum % n as u128 != 0 {
        return Err(Error::InvariantCheckFailed(format!(
            "φ-sum {sum} over D_{n} is not divisible by {n}"
        )));
    }
    Ok(sum / n as u128)
}

/// Number of self-reciprocal monic irreducibles of degree `2n` over `F_q`,
/// `n` odd: `(1/2n) Σ_{d|n} μ(d) (q^{n/d} - ε)` with `ε = 1` for odd `q`
/// and `0` otherwise. The `ε` term cancels for `n > 1`.
pub fn srim_count(q: u64, n: u64) -> Result<u128> {
    check_prime_power(q)?;
    if n % 2 == 0 {
        return Err(Error::EvenParameter(n));
    }
    let eps = (q % 2) as i128;
    let mut sum: i128 = 0;
    for d in arith::divisors(n) {
        sum += arith::moebius_mu(d) as i128 * (checked_pow(q, n / d)? as i128 - eps);
    }
    Ok((sum / (2 * n as i128)) as u128)
}

/// SCRIMs of degree `k` over the top field of a tower with `n = 2`, by
/// scanning every monic candidate for `f^* = σ_1(f)`.
pub fn scrim_scan(tower: &FieldTower, k: usize, budget: u128) -> Result<Vec<TopPoly>> {
    if tower.n() != 2 {
        return Err(Error::InvalidArgument(
            "SCRIMs live over F_{q^2}; need n = 2".into(),
        ));
    }
    let ring = PolyRing::new(tower.top().clone());
    scan_monic(&ring, k, budget, |f| {
        let fld = ring.field();
        !fld.is_zero(&f.coeffs()[0])
            && ring.reciprocal(f).unwrap() == ring.sigma(f, 1)
            && ring.is_irreducible(f)
    })
}

/// Self-reciprocal monic irreducibles of degree `k` over `F_q`.
pub fn srim_scan(tower: &FieldTower, k: usize, budget: u128) -> Result<Vec<BasePoly>> {
    let ring = PolyRing::new(tower.base().clone());
    scan_monic(&ring, k, budget, |f| {
        !ring.field().is_zero(&f.coeffs()[0])
            && ring.reciprocal(f).unwrap() == *f
            && ring.is_irreducible(f)
    })
}

/// A self-reciprocal irreducible `G` of degree `2m` over `F_q` and its two
/// factors over `F_{q^2}`, which are SCRIMs and `σ_1`-conjugate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrimPair {
    pub srim: BasePoly,
    pub factors: [TopPoly; 2],
}

/// Splits the first self-reciprocal irreducible of degree `2m` over `F_q`
/// (canonical order) over `F_{q^2}`.
pub fn construct_scrim(tower: &FieldTower, m: u64, seed: u64) -> Result<ScrimPair> {
    if tower.n() != 2 {
        return Err(Error::InvalidArgument(
            "SCRIMs live over F_{q^2}; need n = 2".into(),
        ));
    }
    odd_at_least_three(m)?;
    let base = PolyRing::new(tower.base().clone());
    let top = PolyRing::new(tower.top().clone());
    let k = 2 * m as usize;
    let srim = base
        .iter_monic(k)
        .find(|f| {
            !base.field().is_zero(&f.coeffs()[0])
                && base.reciprocal(f).unwrap() == *f
                && base.is_irreducible(f)
        })
        .ok_or_else(|| Error::NotFound(format!("self-reciprocal irreducible of degree {k}")))?;
    let lifted = base.map_coeffs(&srim, &top, |c| tower.embed_base(c));
    let parts = top.factor(&lifted, seed);
    let [(g1, 1), (g2, 1)] = parts.as_slice() else {
        return Err(Error::InvariantCheckFailed(format!(
            "{} does not split into two factors over F_{{q^2}}",
            base.format(&srim)
        )));
    };
    for g in [g1, g2] {
        if top.reciprocal(g)? != top.sigma(g, 1) {
            return Err(Error::InvariantCheckFailed(format!(
                "factor {} is not self-conjugate-reciprocal",
                top.format(g)
            )));
        }
    }
    if top.sigma(g1, 1) != *g2 {
        return Err(Error::InvariantCheckFailed(
            "factors are not conjugate".into(),
        ));
    }
    Ok(ScrimPair {
        srim,
        factors: [g1.clone(), g2.clone()],
    })
}

/// Outcome of testing the three equivalent descent conditions for an `f`
/// over `F_{q^n}` and `[A] ∈ PGL(2, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    /// `ord([A])`.
    pub d: u64,
    /// `gcd(d, n)`.
    pub d0: u64,
    /// Least `t` with `f ∈ F_{q^t}[x]`.
    pub t: u32,
    /// Minimal polynomial over `F_q` of a root of `f`, `∏_{j<t} σ_j(f)`.
    pub g: String,
    /// `f` is `[A, σ_i]`-invariant for some `i` prime to `n`.
    pub invariant: bool,
    /// The above together with `t = d0`.
    pub subfield: bool,
    /// `g` has degree `d·s`, is irreducible over `F_q` and `[A]∘g = g`.
    pub lifts: bool,
}

impl LiftReport {
    pub fn consistent(&self) -> bool {
        self.invariant == self.subfield && self.subfield == self.lifts
    }
}

/// Evaluates the three descent conditions for `f` and `A ∈ GL(2, q)`.
pub fn lift_check(inv: &Invariants, f: &TopPoly, a: &Mat2<TopElem>) -> Result<LiftReport> {
    let tower = inv.tower();
    let group = inv.group();
    let ring = inv.ring();
    let n = tower.n() as u64;
    let base_entries: Vec<BaseElem> = a
        .entries()
        .into_iter()
        .map(|c| tower.to_base(c))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvalidArgument("matrix entries must lie in F_q".into()))?;
    let d = group.proj_order(&group.proj(a)?);
    let d0 = arith::gcd(d, n);
    let k = f.degree().unwrap_or(0) as u64;
    let shape = d / d0;
    if k <= 2 || k % shape != 0 || arith::gcd(k / shape, n) != 1 {
        return Err(Error::DegreeHypothesisViolated(format!(
            "degree {k} is not (d/d0)·s > 2 with gcd(s, n) = 1 for d = {d}, d0 = {d0}"
        )));
    }
    let s = k / shape;
    let t = ring.min_subfield_degree(f);

    let mut invariant = false;
    for i in (1..=n).filter(|&i| arith::gcd(i, n) == 1) {
        if inv.is_invariant(&group.semilinear(a, i as i64)?, f)? {
            invariant = true;
            break;
        }
    }
    let subfield = invariant && t as u64 == d0;

    let g_top = (1..t).fold(f.clone(), |acc, j| ring.mul(&acc, &ring.sigma(f, j as i64)));
    let base_group = Pgl2::new(tower.base().clone());
    let base_ring = base_group.ring();
    let g = base_ring.from_coeffs(
        g_top
            .coeffs()
            .iter()
            .map(|c| {
                tower
                    .to_base(c)
                    .expect("product of all conjugates lies over F_q")
            })
            .collect(),
    );
    let [ba, bb, bc, bd] = <[BaseElem; 4]>::try_from(base_entries).unwrap();
    let a_base = Mat2::new(ba, bb, bc, bd);
    let lifts = g.degree() == Some((d * s) as usize)
        && base_ring.is_irreducible(&g)
        && base_group.mat_act_poly(&a_base, &g)? == g;
    Ok(LiftReport {
        d,
        d0,
        t,
        g: base_ring.format(&g),
        invariant,
        subfield,
        lifts,
    })
}

/// Invariant counts on both sides of the involution correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionRatio {
    /// Degree-`m` `[B, σ_1]`-invariants over `F_{q^2}`.
    pub count_top: usize,
    /// Degree-`2m` `[B]`-invariants over `F_q`.
    pub count_base: usize,
}

impl InvolutionRatio {
    pub fn holds(&self) -> bool {
        self.count_top == 2 * self.count_base
    }
}

/// Counts both sides by census for an involution `[B] ∈ PGL(2, q)`,
/// `q = p^e`, and odd `m ≥ 3`.
pub fn involution_ratio_check(
    p: u64,
    e: u32,
    b: &Mat2<BaseElem>,
    m: u64,
    caps: Caps,
) -> Result<InvolutionRatio> {
    if m % 2 == 0 {
        return Err(Error::EvenParameter(m));
    }
    if m < 3 {
        return Err(Error::DegreeTooSmall(m as usize));
    }
    let upper = FieldTower::new(p, e, 2)?;
    let lower = FieldTower::new(p, e, 1)?;
    let base_group = Pgl2::new(upper.base().clone());
    if base_group.proj_order(&base_group.proj(b)?) != 2 {
        return Err(Error::NotInvolution);
    }
    let count = |tower: &FieldTower, degree: u64| -> Result<usize> {
        let group = Pgl2::new(tower.top().clone());
        let lifted = Mat2::new(
            tower.embed_base(&b.a),
            tower.embed_base(&b.b),
            tower.embed_base(&b.c),
            tower.embed_base(&b.d),
        );
        let g = group.semilinear(&lifted, 1)?;
        Ok(census_over(&group, &g, degree as usize, caps.census_budget)?.len())
    };
    Ok(InvolutionRatio {
        count_top: count(&upper, m)?,
        count_base: count(&lower, 2 * m)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(scrim_count(2, 3).unwrap(), 2);
        assert_eq!(scrim_count(2, 5).unwrap(), 6);
        assert_eq!(bju_scrim_count(2, 3).unwrap(), 2);
        assert_eq!(bju_scrim_count(2, 5).unwrap(), 6);
        assert_eq!(scrim_count(2, 4), Err(Error::EvenDegree(4)));
        assert_eq!(srim_count(2, 3).unwrap(), 1);
        assert_eq!(srim_count(2, 1).unwrap(), 1);
        assert_eq!(srim_count(3, 1).unwrap(), 1);
        assert_eq!(srim_count(2, 2), Err(Error::EvenParameter(2)));
    }

    #[test]
    fn formulas_agree() {
        for q in [2, 3, 4, 5] {
            for n in [3, 5, 7] {
                assert_eq!(
                    scrim_count(q, n).unwrap(),
                    bju_scrim_count(q, n).unwrap(),
                    "q={q} n={n}"
                );
            }
        }
    }

    #[test]
    fn construct_over_f4() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let pair = construct_scrim(&t, 3, 1).unwrap();
        let base = PolyRing::new(t.base().clone());
        assert_eq!(base.format(&pair.srim), "1,0,0,1,0,0,1");
        let inv = Invariants::new(t.clone(), Caps::default());
        let g0 = inv
            .group()
            .semilinear(&inv.group().antidiagonal(), 1)
            .unwrap();
        for f in &pair.factors {
            assert!(inv.is_invariant(&g0, f).unwrap());
            let report = lift_check(&inv, f, &inv.group().antidiagonal()).unwrap();
            assert!(report.invariant && report.subfield && report.lifts);
            assert_eq!(report.g, "1,0,0,1,0,0,1");
        }
    }

    #[test]
    fn base_polynomials_do_not_lift_for_even_order() {
        let t = FieldTower::new(2, 1, 2).unwrap();
        let inv = Invariants::new(t, Caps::default());
        let b = inv.group().antidiagonal();
        let f = inv.ring().parse("1,1,0,1").unwrap();
        let report = lift_check(&inv, &f, &b).unwrap();
        assert_eq!((report.d, report.d0, report.t), (2, 2, 1));
        assert!(report.consistent());
        assert!(!report.invariant);
    }

    #[test]
    fn involution_ratio_small() {
        let fq = FieldTower::new(2, 1, 1).unwrap();
        let g = Pgl2::new(fq.base().clone());
        let r = involution_ratio_check(2, 1, &g.antidiagonal(), 3, Caps::default()).unwrap();
        assert_eq!((r.count_top, r.count_base), (2, 1));
        assert_eq!(
            involution_ratio_check(2, 1, &g.identity(), 3, Caps::default()),
            Err(Error::NotInvolution)
        );
    }
}
