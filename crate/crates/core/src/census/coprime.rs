//! Coprime polynomial tuples and the sets `Sigma`, `Sigma_1`.

use serde::{Deserialize, Serialize};

use super::exec;
use super::formulas;
use crate::error::{Error, Result};
use crate::gf::{poly, Elem, Field};
use crate::numtheory;

/// Observed count next to its closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountPair {
    pub observed: u64,
    pub formula: u128,
}

impl CountPair {
    pub fn matches(&self) -> bool {
        self.observed as u128 == self.formula
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprimeCensus {
    pub q: u64,
    pub r: u32,
    pub n: u32,
    pub monic_coprime: CountPair,
    pub all_coprime: CountPair,
    /// Present for pairs only.
    pub sigma: Option<CountPair>,
    pub sigma1: Option<CountPair>,
}

fn field_of(q: u64) -> Result<Field> {
    let (p, e) = numtheory::prime_power(q)?;
    Field::canonical(p, e)
}

/// A tuple is coprime iff the gcd of all entries is a nonzero constant.
fn tuple_coprime(k: &Field, entries: &[Vec<Elem>]) -> bool {
    let mut g: Vec<Elem> = Vec::new();
    for f in entries {
        g = poly::gcd(k, &g, f);
        if g == [1] {
            return true;
        }
    }
    g == [1]
}

fn scan_tuples(
    q: u64,
    r: u32,
    per_entry: u64,
    ceiling: u64,
    entry: impl Fn(&Field, u64) -> Vec<Elem> + Sync + Send,
) -> Result<u64> {
    if r == 0 {
        return Err(Error::ZeroInput);
    }
    let k = field_of(q)?;
    let total = exec::check_ceiling("polynomial tuples", exec::space_size(per_entry, r), ceiling)?;
    Ok(exec::count_indices(total, |mut idx| {
        let entries: Vec<Vec<Elem>> = (0..r)
            .map(|_| {
                let f = entry(&k, idx % per_entry);
                idx /= per_entry;
                f
            })
            .collect();
        tuple_coprime(&k, &entries)
    }))
}

/// Coprime `r`-tuples of monic polynomials of degree `n`.
pub fn coprime_monic_count(q: u64, r: u32, n: u32, ceiling: u64) -> Result<CountPair> {
    let per = numtheory::checked_pow(q, n)?;
    let observed = scan_tuples(q, r, per, ceiling, |k, i| poly::monic_from_index(k, n as usize, i))?;
    Ok(CountPair { observed, formula: formulas::coprime_monic_formula(q, r, n)? })
}

/// Coprime `r`-tuples of polynomials of degree `< n`, zero included.
pub fn coprime_all_count(q: u64, r: u32, n: u32, ceiling: u64) -> Result<CountPair> {
    let per = numtheory::checked_pow(q, n)?;
    let observed = scan_tuples(q, r, per, ceiling, |k, i| poly::bounded_from_index(k, n as usize, i))?;
    Ok(CountPair { observed, formula: formulas::coprime_all_formula(q, r, n)? })
}

/// `(|Sigma|, |Sigma_1|)`: coprime pairs of nonzero polynomials of degree
/// `< n`, with and without `g` monic.
pub fn sigma_count(q: u64, n: u32, ceiling: u64) -> Result<(CountPair, CountPair)> {
    let k = field_of(q)?;
    let per = numtheory::checked_pow(q, n)?;
    let total = exec::check_ceiling("polynomial pairs", exec::space_size(per, 2), ceiling)?;
    let (sigma, sigma1) = exec::fold_indices(
        total,
        || (0u64, 0u64),
        |acc, idx| {
            let f = poly::bounded_from_index(&k, n as usize, idx % per);
            let g = poly::bounded_from_index(&k, n as usize, idx / per);
            if f.is_empty() || g.is_empty() || !tuple_coprime(&k, &[f, g.clone()]) {
                return;
            }
            acc.1 += 1;
            acc.0 += (g.last() == Some(&1)) as u64;
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    );
    Ok((
        CountPair { observed: sigma, formula: formulas::sigma_formula(q, n)? },
        CountPair { observed: sigma1, formula: formulas::sigma1_formula(q, n)? },
    ))
}

/// Both tuple counts, plus `Sigma` and `Sigma_1` when `r = 2`.
pub fn coprime_census(q: u64, r: u32, n: u32, ceiling: u64) -> Result<CoprimeCensus> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let monic_coprime = coprime_monic_count(q, r, n, ceiling)?;
    let all_coprime = coprime_all_count(q, r, n, ceiling)?;
    let (sigma, sigma1) = if r == 2 {
        let (s, s1) = sigma_count(q, n, ceiling)?;
        (Some(s), Some(s1))
    } else {
        (None, None)
    };
    Ok(CoprimeCensus { q, r, n, monic_coprime, all_coprime, sigma, sigma1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    const C: u64 = 1 << 24;

    #[test]
    fn examples() {
        assert_eq!(coprime_monic_count(2, 2, 1, C).unwrap().observed, 2);
        assert_eq!(coprime_monic_count(2, 2, 2, C).unwrap().observed, 8);
        assert_eq!(coprime_monic_count(3, 2, 1, C).unwrap().observed, 6);
        assert_eq!(coprime_all_count(2, 2, 1, C).unwrap().observed, 3);
        assert_eq!(coprime_all_count(2, 2, 2, C).unwrap().observed, 9);
        assert_eq!(coprime_all_count(3, 2, 1, C).unwrap().observed, 8);
        assert_eq!(sigma_count(2, 1, C).unwrap().0.observed, 1);
        assert_eq!(sigma_count(2, 2, C).unwrap().0.observed, 7);
        let (s, s1) = sigma_count(3, 2, C).unwrap();
        assert_eq!((s.observed, s1.observed), (26, 52));
    }

    #[test]
    fn grid_matches_closed_forms() {
        for q in [2u64, 3] {
            for r in [2u32, 3] {
                for n in 1..=3 {
                    let c = coprime_census(q, r, n, C).unwrap();
                    assert!(c.monic_coprime.matches(), "{c:?}");
                    assert!(c.all_coprime.matches(), "{c:?}");
                    if let (Some(s), Some(s1)) = (c.sigma, c.sigma1) {
                        assert!(s.matches() && s1.matches());
                        assert_eq!(s1.observed, s.observed * (q - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn zero_convention() {
        let k = Field::prime(3).unwrap();
        assert!(!tuple_coprime(&k, &[vec![], vec![]]));
        assert!(tuple_coprime(&k, &[vec![], vec![2]]));
        assert!(!tuple_coprime(&k, &[vec![], vec![0, 1]]));
        assert!(tuple_coprime(&k, &[vec![0, 1], vec![1, 1], vec![0, 1]]));
    }

    #[test]
    fn ceiling() {
        assert!(matches!(coprime_all_count(3, 3, 3, 100), Err(Error::CeilingExceeded { .. })));
    }
}
