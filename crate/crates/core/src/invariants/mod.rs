//! Fixed points of `[A, σ_i]` on monic irreducible polynomials: the direct
//! predicate, the exhaustive census, and the enumeration through the
//! divisor polynomials `F_{A, j+s, j}`.

mod asymptotic;
mod report;
mod scrim;

pub use asymptotic::{asymptotic_report, AsymptoticRow};
pub use report::{CensusEntry, CensusReport, Method, ReportParams};
pub use scrim::{
    bju_scrim_count, construct_scrim, involution_ratio_check, lift_check, scrim_count, scrim_scan,
    srim_count, srim_scan, InvolutionRatio, LiftReport, ScrimPair,
};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{ExtField, Field, FrobeniusField};
use crate::pgammal::{Mat2, Pgl2, Semilinear};
use crate::poly::{Poly, PolyRing};
use crate::{FieldTower, Fqn, TopElem, TopPoly};

/// Size limits for the two expensive paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest `q^s` for which `F_{A, j+s, j}` is built and factored.
    pub enum_cap: u128,
    /// Largest candidate space `Q^k` a census may scan.
    pub census_budget: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            enum_cap: 1 << 14,
            census_budget: 1 << 24,
        }
    }
}

/// One admissible `r` with `nr - 1 = s·m` and `j·m ≡ 1 (mod Dn)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RChoice {
    pub r: u64,
    pub m: u64,
    pub j: u64,
}

/// Data fixed by `A` and a degree `k = D·s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationParams {
    /// `ord([A^*])`.
    pub d: u64,
    pub s: u64,
    pub r_values: Vec<RChoice>,
}

/// All `r ∈ [1, Ds]` with `s | nr - 1` and `gcd((nr-1)/s, D) = 1`.
pub fn valid_r_values(s: u64, n: u64, d: u64) -> Vec<u64> {
    (1..=d * s)
        .filter(|&r| {
            let t = n * r - 1;
            t % s == 0 && arith::gcd(t / s, d) == 1
        })
        .collect()
}

/// The invariant machinery bound to one tower.
#[derive(Clone, Debug)]
pub struct Invariants {
    tower: FieldTower,
    group: Pgl2<Fqn>,
    caps: Caps,
    seed: u64,
}

impl Invariants {
    pub fn new(tower: FieldTower, caps: Caps) -> Self {
        let group = Pgl2::new(tower.top().clone());
        Self {
            tower,
            group,
            caps,
            seed: 0,
        }
    }

    /// Seed for the randomized factorization steps.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn group(&self) -> &Pgl2<Fqn> {
        &self.group
    }

    pub fn ring(&self) -> &PolyRing<Fqn> {
        self.group.ring()
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// `[A, σ_i] * f = f`.
    pub fn is_invariant(&self, g: &Semilinear<TopElem>, f: &TopPoly) -> Result<bool> {
        Ok(self.group.semilinear_act(g, f)? == *f)
    }

    /// `D = ord([A^*])` with `A^* = A σ_1(A) ⋯ σ_{n-1}(A)`.
    pub fn star_order(&self, a: &Mat2<TopElem>) -> Result<u64> {
        let star = self.group.a_star(a, self.tower.n() as u64);
        Ok(self.group.proj_order(&self.group.proj(&star)?))
    }

    /// `None` unless `k = D·s` with `gcd(s, n) = 1`.
    pub fn params(&self, a: &Mat2<TopElem>, k: usize) -> Result<Option<EnumerationParams>> {
        let n = self.tower.n() as u64;
        let d = self.star_order(a)?;
        let k = k as u64;
        if k % d != 0 || arith::gcd(k / d, n) != 1 {
            return Ok(None);
        }
        let s = k / d;
        let r_values = valid_r_values(s, n, d)
            .into_iter()
            .map(|r| {
                let m = (n * r - 1) / s;
                let modulus = d * n;
                let j = arith::mod_inverse(m % modulus, modulus).expect("gcd(m, Dn) = 1");
                RChoice { r, m, j }
            })
            .collect();
        Ok(Some(EnumerationParams { d, s, r_values }))
    }

    /// `σ_{-j}(F_{A_j^*, s})`, whose degree-`Ds` factors are the
    /// degree-`Ds` factors of `F_{A, nr, 1}`.
    pub fn target(&self, a: &Mat2<TopElem>, s: u64, choice: &RChoice) -> Result<TopPoly> {
        let j = choice.j as u32;
        self.group.build_f_i(a, j + s as u32, j, self.caps.enum_cap)
    }

    /// Degree-`k` `[A, σ_1]`-invariants grouped by the `r` that produced
    /// them. Every harvested factor is re-checked with the direct predicate.
    pub fn enumerate_by_r(
        &self,
        a: &Mat2<TopElem>,
        k: usize,
    ) -> Result<Vec<(RChoice, Vec<TopPoly>)>> {
        if k <= 2 {
            return Err(Error::DegreeTooSmall(k));
        }
        let Some(params) = self.params(a, k)? else {
            return Ok(Vec::new());
        };
        let g = self.group.semilinear(a, 1)?;
        params
            .r_values
            .par_iter()
            .map(|choice| {
                let target = self.target(a, params.s, choice)?;
                let mut found = self.ring().factors_of_degree(&target, k, self.seed);
                for f in &found {
                    if !self.is_invariant(&g, f)? {
                        return Err(Error::InvariantCheckFailed(format!(
                            "factor {} of the r = {} target is not invariant",
                            self.ring().format(f),
                            choice.r
                        )));
                    }
                }
                self.ring().sort(&mut found);
                Ok((*choice, found))
            })
            .collect()
    }

    /// Degree-`k` `[A, σ_1]`-invariants via the divisor polynomials, sorted.
    ///
    /// The per-`r` sets must be disjoint; an overlap is reported as an
    /// error.
    pub fn enumerate(&self, a: &Mat2<TopElem>, k: usize) -> Result<Vec<TopPoly>> {
        let mut all: Vec<TopPoly> = self
            .enumerate_by_r(a, k)?
            .into_iter()
            .flat_map(|(_, v)| v)
            .collect();
        let before = all.len();
        self.ring().sort(&mut all);
        all.dedup();
        if all.len() != before {
            return Err(Error::InvariantCheckFailed(
                "invariant sets of distinct r overlap".into(),
            ));
        }
        Ok(all)
    }

    /// Degree-`k` `g`-invariants by exhaustive scan of all monic
    /// candidates, sorted.
    pub fn census(&self, g: &Semilinear<TopElem>, k: usize) -> Result<Vec<TopPoly>> {
        census_over(&self.group, g, k, self.caps.census_budget)
    }

    /// The `r ∈ 1..=deg f` with `[A, σ_1] * α = α^{q^{nr}}` for a root `α` of
    /// `f`, computed in `F_{Q^k} = F_Q[y]/(f)`.
    pub fn root_condition_r(&self, a: &Mat2<TopElem>, f: &TopPoly) -> Result<Vec<u64>> {
        let k = f.degree().unwrap_or(0);
        if k < 2 {
            return Err(Error::DegreeTooSmall(k));
        }
        let ext = ExtField::new_unchecked(self.tower.top().clone(), self.ring().monic(f)?)?;
        let alpha = ext.generator();
        let image = self.group.root_act_raw(a, 1, &ext, &alpha)?;
        let big_q = self.tower.top().size();
        let mut conj = alpha;
        let mut hits = Vec::new();
        for r in 1..=k as u64 {
            conj = ext.pow(&conj, big_q);
            if conj == image {
                hits.push(r);
            }
        }
        Ok(hits)
    }
}

/// Exhaustive fixed-point scan of `g` over the monic degree-`k` polynomials.
///
/// The Möbius image is computed from a precomputed basis table and compared
/// with the candidate before the irreducibility test, which only runs on
/// the few fixed candidates.
pub fn census_over<F: FrobeniusField>(
    group: &Pgl2<F>,
    g: &Semilinear<F::Elem>,
    k: usize,
    budget: u128,
) -> Result<Vec<Poly<F::Elem>>> {
    if k < 2 {
        return Err(Error::DegreeTooSmall(k));
    }
    let ring = group.ring();
    let table = group.mobius_table(g.mat.rep(), k);
    let fld = group.field();
    scan_monic(ring, k, budget, |f| {
        let image = match group.act_with_table(&table, &ring.sigma(f, g.frob as i64)) {
            Some(image) => image,
            None => return false,
        };
        let lead = image.leading().expect("nonzero");
        image
            .coeffs()
            .iter()
            .zip(f.coeffs())
            .all(|(u, v)| *u == fld.mul(lead, v))
            && ring.is_irreducible(f)
    })
}

/// Monic degree-`k` polynomials satisfying `keep`, in canonical order.
pub(crate) fn scan_monic<F: Field>(
    ring: &PolyRing<F>,
    k: usize,
    budget: u128,
    keep: impl Fn(&Poly<F::Elem>) -> bool + Sync,
) -> Result<Vec<Poly<F::Elem>>> {
    let space = ring.monic_count(k).unwrap_or(u128::MAX);
    if space > budget {
        return Err(Error::BudgetExceeded { space, budget });
    }
    let mut found: Vec<Poly<F::Elem>> = (0..space as u64)
        .into_par_iter()
        .filter_map(|i| {
            let f = ring.monic_from_index(k, i as u128);
            keep(&f).then_some(f)
        })
        .collect();
    ring.sort(&mut found);
    Ok(found)
}
