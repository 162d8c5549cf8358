use serde::Serialize;

use super::Invariants;
use crate::arith;
use crate::error::{Error, Result};
use crate::pgammal::Mat2;
use crate::TopElem;

/// Exact `n_A(Ds)` against the main term `φ(D) q^s / (Ds)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub s: u64,
    pub degree: u64,
    pub exact: usize,
    pub predicted: f64,
    pub ratio: f64,
}

/// One row per `s`; each `s` must be prime to `n` with `Ds > 2`.
pub fn asymptotic_report(
    inv: &Invariants,
    a: &Mat2<TopElem>,
    s_values: &[u64],
) -> Result<Vec<AsymptoticRow>> {
    let n = inv.tower().n() as u64;
    let q = inv.tower().q() as f64;
    let d = inv.star_order(a)?;
    s_values
        .iter()
        .map(|&s| {
            if arith::gcd(s, n) != 1 {
                return Err(Error::InvalidArgument(format!(
                    "s = {s} shares a factor with n = {n}"
                )));
            }
            let degree = d * s;
            let exact = inv.enumerate(a, degree as usize)?.len();
            let predicted = arith::euler_phi(d) as f64 * q.powi(s as i32) / degree as f64;
            Ok(AsymptoticRow {
                s,
                degree,
                exact,
                predicted,
                ratio: exact as f64 / predicted,
            })
        })
        .collect()
}
