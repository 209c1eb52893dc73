use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::field::{Elem, Field};
use crate::gf::linear;
use crate::gf::poly;
use crate::linalg::matrix::mat_mul;
use crate::linalg::{char_poly_in_place, GfMatrix};
use crate::numtheory;

/// Matrices up to this many candidates are scanned exhaustively.
pub const EXHAUSTIVE_MATRIX_LIMIT: u64 = 1 << 20;

/// Number of invertible matrices commuting with `t`, for `t` with an
/// irreducible characteristic polynomial.
///
/// The commutant of such a `t` is the algebra of polynomials in `t`, a
/// field with `q^d` elements, so the count is taken over nonzero
/// polynomials in `t` of degree below `d` (when that space is small
/// enough to list) and is `q^d - 1`.
pub fn centralizer_size(t: &GfMatrix) -> Result<u64> {
    let d = t.require_square()?;
    let k = t.field();
    let chi = char_poly_in_place(k, &mut t.data().to_vec(), d);
    if !poly::is_irreducible(k, &chi) {
        return Err(Error::Unsupported("centralizer of a matrix with reducible characteristic polynomial".into()));
    }
    let q = k.order() as u64;
    let total = numtheory::checked_pow(q, d as u32)?;
    if total > EXHAUSTIVE_MATRIX_LIMIT {
        return Ok(total - 1);
    }
    let powers: Vec<Vec<Elem>> = (0..d as u64).map(|i| crate::linalg::matrix::mat_pow(k, t.data(), d, i)).collect();
    let mut count = 0;
    for idx in 1..total {
        let coeffs = poly::bounded_from_index(k, d, idx);
        let mut acc = vec![0; d * d];
        for (c, pw) in coeffs.iter().zip(&powers) {
            for (a, &x) in acc.iter_mut().zip(pw) {
                *a = k.add(*a, k.mul(*c, x));
            }
        }
        if linear::det_in_place(k, &mut acc, d) != 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// Exhaustive commutant scan: every invertible `P` with `PT = TP`.
pub fn centralizer_size_exhaustive(t: &GfMatrix) -> Result<u64> {
    let d = t.require_square()?;
    let k = t.field();
    let candidates = (k.order() as u64)
        .checked_pow((d * d) as u32)
        .filter(|&c| c <= EXHAUSTIVE_MATRIX_LIMIT)
        .ok_or_else(|| Error::CeilingExceeded {
            what: "commutant scan".into(),
            size: (k.order() as u128).pow((d * d) as u32),
            ceiling: EXHAUSTIVE_MATRIX_LIMIT,
        })?;
    let mut count = 0;
    for idx in 0..candidates {
        let p = matrix_from_index(k, d, idx);
        if mat_mul(k, &p, t.data(), d, d, d) == mat_mul(k, t.data(), &p, d, d, d)
            && linear::det_in_place(k, &mut p.clone(), d) != 0
        {
            count += 1;
        }
    }
    Ok(count)
}

/// Entries of the `idx`-th `d x d` matrix, row-major base-`q` digits.
pub(crate) fn matrix_from_index(k: &Field, d: usize, mut idx: u64) -> Vec<Elem> {
    let q = k.order() as u64;
    (0..d * d)
        .map(|_| {
            let x = (idx % q) as Elem;
            idx /= q;
            x
        })
        .collect()
}

/// Exhaustive and closed-form counts of nilpotent `m x m` matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NilpotentCount {
    /// `None` when the scan exceeded the ceiling.
    pub exhaustive: Option<u64>,
    /// `q^(m(m-1))`.
    pub formula: u64,
}

impl NilpotentCount {
    pub fn verified(&self) -> bool {
        self.exhaustive.is_some()
    }
}

/// Default ceiling on the number of matrices scanned.
pub const NILPOTENT_CEILING: u64 = 1 << 24;

/// Counts `A` with `A^m = 0` among all `m x m` matrices over `F_q`.
pub fn nilpotent_count(q: u64, m: u32, ceiling: u64) -> Result<NilpotentCount> {
    let (p, e) = numtheory::prime_power(q)?;
    if m == 0 {
        return Err(Error::ZeroInput);
    }
    let formula = numtheory::checked_pow(q, m * (m - 1))?;
    let total = (q as u128).checked_pow(m * m).unwrap_or(u128::MAX);
    if total > ceiling as u128 {
        return Ok(NilpotentCount { exhaustive: None, formula });
    }
    let k = Arc::new(Field::canonical(p, e)?);
    let d = m as usize;
    let count = (0..total as u64)
        .filter(|&idx| {
            let a = matrix_from_index(&k, d, idx);
            crate::linalg::matrix::mat_pow(&k, &a, d, m as u64).iter().all(|&x| x == 0)
        })
        .count() as u64;
    Ok(NilpotentCount { exhaustive: Some(count), formula })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::GfPoly;
    use crate::linalg::companion;

    fn comp(p: u64, c: &[Elem]) -> GfMatrix {
        let k = Arc::new(Field::prime(p).unwrap());
        companion(&GfPoly::new(k, c.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn centralizer_examples() {
        let c = comp(2, &[1, 1, 1]);
        assert_eq!(centralizer_size(&c).unwrap(), 3);
        assert_eq!(centralizer_size_exhaustive(&c).unwrap(), 3);
        let c = comp(2, &[1, 1, 0, 0, 1]);
        assert_eq!(centralizer_size(&c).unwrap(), 15);
        assert_eq!(centralizer_size_exhaustive(&c).unwrap(), 15);
        let c = comp(3, &[1, 0, 1]);
        assert_eq!(centralizer_size(&c).unwrap(), 8);
        assert_eq!(centralizer_size_exhaustive(&c).unwrap(), 8);
        assert!(matches!(centralizer_size(&comp(2, &[1, 0, 1])), Err(Error::Unsupported(_))));
    }

    #[test]
    fn nilpotent_examples() {
        assert_eq!(nilpotent_count(2, 1, NILPOTENT_CEILING).unwrap(), NilpotentCount { exhaustive: Some(1), formula: 1 });
        assert_eq!(nilpotent_count(2, 2, NILPOTENT_CEILING).unwrap(), NilpotentCount { exhaustive: Some(4), formula: 4 });
        assert_eq!(nilpotent_count(3, 2, NILPOTENT_CEILING).unwrap(), NilpotentCount { exhaustive: Some(9), formula: 9 });
        let big = nilpotent_count(2, 3, 100).unwrap();
        assert!(!big.verified());
        assert_eq!(big.formula, 64);
    }
}
