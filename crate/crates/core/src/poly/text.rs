//! Polynomial text form `c0,c1,...,ck`, each entry in the element grammar.

use super::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::field::text::split_top_level;
use crate::field::Field;

impl<F: Field> PolyRing<F> {
    /// `c0,c1,...,ck`; the zero polynomial prints as `0`.
    pub fn format(&self, f: &Poly<F::Elem>) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in f.coeffs().iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            self.field().write_elem(c, &mut s);
        }
        s
    }

    pub fn parse(&self, s: &str) -> Result<Poly<F::Elem>> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let coeffs = split_top_level(s, ',')?
            .into_iter()
            .map(|c| self.field().parse_elem(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.from_coeffs(coeffs))
    }

    /// JSON form: an array of element arrays.
    pub fn to_json(&self, f: &Poly<F::Elem>) -> serde_json::Value {
        let text = format!(
            "[{}]",
            if f.is_zero() {
                String::new()
            } else {
                self.format(f)
            }
        );
        serde_json::from_str(&text).expect("element grammar is valid JSON")
    }

    pub fn from_json(&self, v: &serde_json::Value) -> Result<Poly<F::Elem>> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON must be an array".into()))?;
        let coeffs = arr
            .iter()
            .map(|c| self.field().parse_elem(&c.to_string()))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.from_coeffs(coeffs))
    }
}
