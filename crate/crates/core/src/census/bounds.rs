//! Rational lower and upper bounds on fiber sizes.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsTriple {
    pub q: u64,
    pub m: u32,
    pub n: u32,
    pub l: Rational,
    pub l_star: Rational,
    pub u: Rational,
    pub observed_min_fiber: Option<u64>,
    pub observed_max_fiber: Option<u64>,
}

impl BoundsTriple {
    /// `L <= min` and `max <= U`; vacuous without observations.
    pub fn observed_within(&self) -> bool {
        let within = |v: Option<u64>| v.is_none_or(|v| self.l <= int(v as i128) && int(v as i128) <= self.u);
        within(self.observed_min_fiber) && within(self.observed_max_fiber)
    }

    /// `L* <= L`, asserted only for `q > 2`.
    pub fn l_star_le_l(&self) -> Option<bool> {
        (self.q > 2).then(|| self.l_star <= self.l)
    }
}

fn int(v: i128) -> Rational {
    Ratio::from_integer(v)
}

fn pow(q: i128, e: i64) -> Result<Rational> {
    let mag = q.checked_pow(e.unsigned_abs() as u32).ok_or(Error::Overflow("bound power"))?;
    Ok(if e >= 0 { int(mag) } else { Ratio::new(1, mag) })
}

fn checked(a: Rational, b: Rational) -> Result<Rational> {
    let num = a.numer().checked_mul(*b.numer()).ok_or(Error::Overflow("bound product"))?;
    let den = a.denom().checked_mul(*b.denom()).ok_or(Error::Overflow("bound product"))?;
    Ok(Ratio::new(num, den))
}

/// `L`, `U`, `L*` for `(q, m, n)` together with the observed extremes.
pub fn bounds_check(q: u64, m: u32, n: u32, observed: &[u64]) -> Result<BoundsTriple> {
    if q < 2 || m == 0 || n == 0 {
        return Err(Error::ZeroInput);
    }
    let qi = q as i128;
    let mn = (m * n) as i64;
    let q_mn = pow(qi, mn)?;
    let head = (int(qi - 2) * q_mn) + int(1);
    let l = checked(head / (int(qi - 1) * (q_mn - int(1))), pow(qi, mn * (m as i64 - 1))?)?;
    let mut u = int(1);
    for i in 1..m as i64 {
        u = checked(u, q_mn - pow(qi, i)?)?;
    }
    let l_star = checked(head, pow(qi, mn * (m as i64 - 2) - 1)?)?;
    Ok(BoundsTriple {
        q,
        m,
        n,
        l,
        l_star,
        u,
        observed_min_fiber: observed.iter().min().copied(),
        observed_max_fiber: observed.iter().max().copied(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let b = bounds_check(2, 2, 2, &[8, 8, 8]).unwrap();
        assert_eq!(b.l, Ratio::new(16, 15));
        assert_eq!(b.u, int(14));
        assert!(b.observed_within());
        assert_eq!(b.l_star_le_l(), None);

        let b = bounds_check(3, 2, 2, &[54]).unwrap();
        assert_eq!(b.l, Ratio::new(82 * 81, 160));
        assert_eq!(b.u, int(78));
        assert!(b.observed_within());
        assert_eq!(b.l_star_le_l(), Some(true));

        let b = bounds_check(2, 1, 4, &[1]).unwrap();
        assert_eq!(b.u, int(1));
        assert!(b.observed_within());
    }

    #[test]
    fn violations_detected() {
        let b = bounds_check(2, 2, 2, &[1]).unwrap();
        assert!(!b.observed_within());
        let b = bounds_check(2, 2, 2, &[15]).unwrap();
        assert!(!b.observed_within());
    }
}
