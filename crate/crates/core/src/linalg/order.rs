use crate::error::{Error, Result};
use crate::gf::field::{Elem, Field};
use crate::gf::linear;
use crate::gf::poly;
use crate::linalg::matrix::{is_identity, mat_pow};
use crate::linalg::{char_poly_in_place, GfMatrix};
use crate::numtheory::{self, Factorization};

/// Exponent of `GL_d(F_q)`: `p^a * lcm(q - 1, ..., q^d - 1)` with `p^a >= d`.
fn gl_exponent(k: &Field, d: usize) -> Result<Factorization> {
    let q = k.order() as u64;
    let p = k.characteristic() as u64;
    let mut parts = Vec::with_capacity(d + 1);
    for i in 1..=d as u32 {
        parts.push(numtheory::factorize(numtheory::checked_pow(q, i)? - 1)?);
    }
    let mut a = 0;
    while (p as u128).pow(a) < d as u128 {
        a += 1;
    }
    parts.push(Factorization::prime_power_of(p, a)?);
    Factorization::lcm(&parts)
}

/// Exact multiplicative order of a nonsingular matrix.
///
/// With an irreducible characteristic polynomial the order divides
/// `q^d - 1`; otherwise the exponent of `GL_d(F_q)` is refined prime by prime.
pub fn matrix_order(t: &GfMatrix) -> Result<u64> {
    let d = t.require_square()?;
    let k = t.field();
    if linear::det_in_place(k, &mut t.data().to_vec(), d) == 0 {
        return Err(Error::Singular);
    }
    let chi = char_poly_in_place(k, &mut t.data().to_vec(), d);
    let exponent = if poly::is_irreducible(k, &chi) {
        numtheory::factorize(numtheory::checked_pow(k.order() as u64, d as u32)? - 1)?
    } else {
        gl_exponent(k, d)?
    };
    Ok(numtheory::order_dividing(&exponent, |e| is_identity(&mat_pow(k, t.data(), d, e), d)))
}

/// Whether `data` (an `n x n` nonsingular matrix) has order exactly `q^n - 1`.
pub(crate) fn has_maximal_order(k: &Field, data: &[Elem], n: usize) -> Result<bool> {
    let target = numtheory::checked_pow(k.order() as u64, n as u32)? - 1;
    if !is_identity(&mat_pow(k, data, n, target), n) {
        return Ok(false);
    }
    let group = numtheory::factorize(target)?;
    let maximal = group.primes().all(|r| !is_identity(&mat_pow(k, data, n, target / r), n));
    Ok(maximal)
}

/// Singer test with a precomputed characteristic polynomial verdict.
pub(crate) fn singer_check(k: &Field, data: &[Elem], n: usize, char_poly_primitive: bool) -> Result<bool> {
    let nonsingular = linear::det_in_place(k, &mut data.to_vec(), n) != 0;
    let by_order = nonsingular && has_maximal_order(k, data, n)?;
    if by_order != char_poly_primitive {
        return Err(Error::CriterionDisagreement(format!(
            "order criterion says {by_order}, primitivity says {char_poly_primitive}"
        )));
    }
    Ok(by_order)
}

/// A nonsingular matrix of order `q^d - 1`. Cross-checked against
/// primitivity of the characteristic polynomial; disagreement is an error.
pub fn is_singer_cycle(t: &GfMatrix) -> Result<bool> {
    let d = t.require_square()?;
    let k = t.field();
    let chi = char_poly_in_place(k, &mut t.data().to_vec(), d);
    singer_check(k, t.data(), d, poly::is_primitive(k, &chi)?)
}
