//! Closed-form counts that the censuses are compared against.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::numtheory;

fn pow(q: u64, e: u32) -> Result<u128> {
    (q as u128).checked_pow(e).ok_or(Error::Overflow("closed-form power"))
}

fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow("closed-form product"))
}

/// `q^(m(m-1)(n-1)) * prod_{i=1}^{m-1} (q^m - q^i)`, the conjectured size of
/// every irreducible fiber of the characteristic map on block companion matrices.
pub fn conjectured_fiber_size(q: u64, m: u32, n: u32) -> Result<u128> {
    let mut acc = pow(q, m * (m - 1) * (n - 1))?;
    let qm = pow(q, m)?;
    for i in 1..m {
        acc = mul(acc, qm - pow(q, i)?)?;
    }
    Ok(acc)
}

/// `q^(2n-1) (q-1)`: the fiber size for `m = 2`.
pub fn m2_fiber_size(q: u64, n: u32) -> Result<u128> {
    mul(pow(q, 2 * n - 1)?, q as u128 - 1)
}

/// `phi(q^(mn) - 1)/(mn)` times the conjectured fiber size.
pub fn conjectured_singer_count(q: u64, m: u32, n: u32) -> Result<u128> {
    let primitive = numtheory::count_primitive_polys(q, m * n)?;
    mul(primitive as u128, conjectured_fiber_size(q, m, n)?)
}

/// Number of irreducible polynomials of degree `mn` times the conjectured fiber size.
pub fn conjectured_bci_count(q: u64, m: u32, n: u32) -> Result<u128> {
    let irreducible = numtheory::count_irreducible_polys(q, m * n)?;
    mul(irreducible as u128, conjectured_fiber_size(q, m, n)?)
}

/// `(q^(mn) - 1)/(q^m - 1) * q^(m(m-1)(n-1))`, the conjectured number of splitting subspaces.
pub fn conjectured_splitting_count(q: u64, m: u32, n: u32) -> Result<u128> {
    let ratio = (pow(q, m * n)? - 1) / (pow(q, m)? - 1);
    mul(ratio, pow(q, m * (m - 1) * (n - 1))?)
}

/// `q^(m(m-1)(n-1))`, the conjectured number of splitting subspaces through a fixed nonzero point.
pub fn conjectured_pointed_count(q: u64, m: u32, n: u32) -> Result<u128> {
    pow(q, m * (m - 1) * (n - 1))
}

/// Number of ordered bases `B_alpha(v_1, v_2)` for `m = 2`: `q^(2n-1) (q-1) (q^(2n) - 1)`.
pub fn m2_ordered_basis_count(q: u64, n: u32) -> Result<u128> {
    mul(m2_fiber_size(q, n)?, pow(q, 2 * n)? - 1)
}

/// `q^(rn) - q^(r(n-1)+1)`: coprime `r`-tuples of monic degree-`n` polynomials.
pub fn coprime_monic_formula(q: u64, r: u32, n: u32) -> Result<u128> {
    Ok(pow(q, r * n)? - pow(q, r * (n - 1) + 1)?)
}

/// `q^(rn) (1 - 1/q^(r-1) + (q-1)/q^(rn))`: coprime `r`-tuples of polynomials of degree `< n`.
pub fn coprime_all_formula(q: u64, r: u32, n: u32) -> Result<u128> {
    let total = Ratio::from_integer(pow(q, r * n)? as i128);
    let prob = Ratio::from_integer(1) - Ratio::new(1, pow(q, r - 1)? as i128)
        + Ratio::new(q as i128 - 1, pow(q, r * n)? as i128);
    let value = total * prob;
    if !value.is_integer() {
        return Err(Error::Internal(format!("coprime count {value} is not an integer")));
    }
    Ok(value.to_integer() as u128)
}

/// `q^(2n-1) - 1`.
pub fn sigma_formula(q: u64, n: u32) -> Result<u128> {
    Ok(pow(q, 2 * n - 1)? - 1)
}

/// `(q^(2n-1) - 1)(q - 1)`.
pub fn sigma1_formula(q: u64, n: u32) -> Result<u128> {
    mul(sigma_formula(q, n)?, q as u128 - 1)
}

/// `q^(2n-1) - q^(2n-2)`: nonsingular `n x n` Toeplitz matrices.
pub fn toeplitz_formula(q: u64, n: u32) -> Result<u128> {
    Ok(pow(q, 2 * n - 1)? - pow(q, 2 * n - 2)?)
}

/// `q^(m(m-1))`: nilpotent `m x m` matrices.
pub fn nilpotent_formula(q: u64, m: u32) -> Result<u128> {
    pow(q, m * (m - 1))
}
