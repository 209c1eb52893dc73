//! Benchmark fixtures.

use std::sync::Arc;

use singer_core::gf::poly;
use singer_core::linalg::{companion, GfMatrix};
use singer_core::{numtheory, Field, FieldTower, GfPoly};

/// Every monic polynomial of degree `d` over `F_q`, in index order.
pub fn monic_polys(q: u64, d: usize) -> (Field, Vec<Vec<u32>>) {
    let (p, e) = numtheory::prime_power(q).expect("prime power");
    let k = Field::canonical(p, e).expect("field of order q");
    let total = q.pow(d as u32);
    let polys = (0..total).map(|i| poly::monic_from_index(&k, d, i)).collect();
    (k, polys)
}

/// Companion matrices of the primitive polynomials of degree `d`.
pub fn primitive_companions(q: u64, d: usize) -> Vec<GfMatrix> {
    let (k, polys) = monic_polys(q, d);
    let k = Arc::new(k);
    polys
        .into_iter()
        .filter(|f| poly::is_primitive(&k, f).unwrap_or(false))
        .map(|f| companion(&GfPoly::new(k.clone(), f).unwrap()).unwrap())
        .collect()
}

/// Tower for `(q, m, n)`.
pub fn tower(q: u64, m: u32, n: u32) -> FieldTower {
    FieldTower::for_q(q, m, n).expect("valid tower parameters")
}
