//! Finite fields, polynomial algebra and field towers.

pub mod field;
pub mod linear;
pub mod poly;
pub mod tower;

pub use field::{Elem, Field, MAX_FIELD_ORDER};
pub use poly::GfPoly;
pub use tower::{Embedding, FieldTower, RelativeBasis};

/// Builds `F_q ⊂ F_{q^m} ⊂ F_{q^{mn}}` for `q = p^e`.
pub fn build_field_tower(p: u64, e: u32, m: u32, n: u32) -> crate::Result<FieldTower> {
    FieldTower::new(p, e, m, n)
}

/// Monic gcd of two polynomials over the same field.
pub fn poly_gcd(f: &GfPoly, g: &GfPoly) -> crate::Result<GfPoly> {
    f.gcd(g)
}
