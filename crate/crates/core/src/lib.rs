//! Möbius–Frobenius action of the projective semilinear group
//! `PΓL(2, q^n)` on monic irreducible polynomials over `F_{q^n}`, and the
//! machinery to count, enumerate and verify its fixed points.

pub mod arith;
pub mod error;
pub mod field;
pub mod invariants;
pub mod pgammal;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use field::{ExtField, Field, FieldTower, FrobeniusField, PrimeField, ZechField};
pub use invariants::{Caps, Invariants};
pub use pgammal::{Mat2, Pgl2, ProjMat2, Semilinear};
pub use poly::{Poly, PolyRing};

/// `F_p`.
pub type Fp = PrimeField;
/// `F_q = F_p[u]/(g)`.
pub type Fq = ZechField<ExtField<Fp>>;
/// `F_{q^n} = F_q[v]/(h)`.
pub type Fqn = ZechField<ExtField<Fq>>;
/// Elements of the top field.
pub type TopElem = <Fqn as Field>::Elem;
/// Elements of `F_q`.
pub type BaseElem = <Fq as Field>::Elem;
/// Polynomials over the top field.
pub type TopPoly = Poly<TopElem>;
/// Polynomials over `F_q`.
pub type BasePoly = Poly<BaseElem>;
