use std::time::Instant;

use serde::Serialize;

use super::Invariants;
use crate::error::Result;
use crate::pgammal::Semilinear;
use crate::{TopElem, TopPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "brute-force")]
    BruteForce,
    #[serde(rename = "theorem-3.4")]
    DivisorPolynomials,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::BruteForce => "brute-force",
            Method::DivisorPolynomials => "theorem-3.4",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    pub p: u64,
    pub e: u32,
    pub n: u32,
    pub g: String,
    pub h: String,
    pub matrix: String,
    pub frob: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub degree: usize,
    pub count: usize,
    pub polys: Vec<String>,
    /// Wall-clock time, present only when timing was requested so that
    /// default output stays byte-stable.
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub schema: u32,
    pub params: ReportParams,
    pub method: Method,
    pub entries: Vec<CensusEntry>,
}

impl CensusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let p = &self.params;
        let mut out = format!(
            "tower     p={} e={} n={}  g={}  h={}\nelement   [{}, σ_{}]\nmethod    {}\n",
            p.p,
            p.e,
            p.n,
            p.g,
            p.h,
            p.matrix,
            p.frob,
            self.method.tag()
        );
        for e in &self.entries {
            out.push_str(&format!("degree {:>3}  count {:>6}", e.degree, e.count));
            if let Some(ms) = e.millis {
                out.push_str(&format!("  {ms} ms"));
            }
            out.push('\n');
            for f in &e.polys {
                out.push_str(&format!("    {f}\n"));
            }
        }
        out
    }

    /// Polynomial sets per degree, for comparing two reports.
    pub fn sets(&self) -> Vec<(usize, &[String])> {
        self.entries
            .iter()
            .map(|e| (e.degree, e.polys.as_slice()))
            .collect()
    }
}

impl Invariants {
    pub fn report_params(&self, g: &Semilinear<TopElem>) -> ReportParams {
        let t = self.tower();
        let base_ring = crate::PolyRing::new(*t.prime());
        let mid_ring = crate::PolyRing::new(t.base().clone());
        ReportParams {
            p: t.p(),
            e: t.e(),
            n: t.n(),
            g: base_ring.format(&t.g()),
            h: mid_ring.format(&t.h()),
            matrix: self.group().format(g.mat.rep()),
            frob: g.frob,
        }
    }

    /// Runs `method` at each degree and assembles a report.
    ///
    /// [`Method::DivisorPolynomials`] requires `g` to have Frobenius part `σ_1`.
    /// Each listed polynomial is re-checked against the direct predicate
    /// and for irreducibility before the report is returned.
    pub fn report(
        &self,
        g: &Semilinear<TopElem>,
        degrees: &[usize],
        method: Method,
        timing: bool,
    ) -> Result<CensusReport> {
        if method == Method::DivisorPolynomials && g.frob % self.tower().n() != 1 % self.tower().n()
        {
            return Err(crate::Error::InvalidArgument(format!(
                "the divisor-polynomial method needs σ_1, got σ_{}",
                g.frob
            )));
        }
        let mut entries = Vec::with_capacity(degrees.len());
        for &k in degrees {
            let start = Instant::now();
            let polys = match method {
                Method::BruteForce => self.census(g, k)?,
                Method::DivisorPolynomials => self.enumerate(g.mat.rep(), k)?,
            };
            let millis = timing.then(|| start.elapsed().as_millis() as u64);
            self.recheck(g, k, &polys)?;
            entries.push(CensusEntry {
                degree: k,
                count: polys.len(),
                polys: polys.iter().map(|f| self.ring().format(f)).collect(),
                millis,
            });
        }
        Ok(CensusReport {
            schema: 1,
            params: self.report_params(g),
            method,
            entries,
        })
    }

    fn recheck(&self, g: &Semilinear<TopElem>, k: usize, polys: &[TopPoly]) -> Result<()> {
        let ring = self.ring();
        for (idx, f) in polys.iter().enumerate() {
            let ok = f.degree() == Some(k)
                && ring.is_monic(f)
                && ring.is_irreducible(f)
                && self.is_invariant(g, f)?
                && (idx == 0 || polys[idx - 1] != *f);
            if !ok {
                return Err(crate::Error::InvariantCheckFailed(format!(
                    "report entry {} fails re-verification",
                    ring.format(f)
                )));
            }
        }
        Ok(())
    }
}
