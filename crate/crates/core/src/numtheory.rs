//! Integer arithmetic below 2^64: factorization, totient, Möbius and the
//! closed-form counts of primitive and irreducible polynomials.

use crate::error::{Error, Result};

/// Default integer ceiling.
pub const DEFAULT_CEILING: u64 = u64::MAX;

const TRIAL_LIMIT: u64 = 1 << 20;

/// Prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    /// Least common multiple of several factorizations.
    pub fn lcm(parts: &[Factorization]) -> Result<Factorization> {
        let mut merged: Vec<(u64, u32)> = Vec::new();
        for part in parts {
            for &(p, e) in &part.factors {
                match merged.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, f)) => *f = (*f).max(e),
                    None => merged.push((p, e)),
                }
            }
        }
        merged.sort_unstable();
        let mut value: u64 = 1;
        for &(p, e) in &merged {
            value = value
                .checked_mul(checked_pow(p, e)?)
                .ok_or(Error::Overflow("lcm of factorizations"))?;
        }
        Ok(Factorization { value, factors: merged })
    }

    /// `p^e` for a prime `p`.
    pub fn prime_power_of(p: u64, e: u32) -> Result<Factorization> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let value = checked_pow(p, e)?;
        let factors = if e == 0 { Vec::new() } else { vec![(p, e)] };
        Ok(Factorization { value, factors })
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Brent's variant of Pollard rho. `n` must be an odd composite.
fn brent_rho(n: u64) -> u64 {
    const BATCH: u64 = 128;
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let (mut x, mut ys, mut g);
        loop {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            loop {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
                if k >= r || g != 1 {
                    break;
                }
            }
            r *= 2;
            if g != 1 {
                break;
            }
        }
        if g == n {
            // Batch overshot; step one at a time from the saved point.
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g != 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho parameter space exhausted")
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = brent_rho(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Complete prime factorization of `n` with the default ceiling.
pub fn factorize(n: u64) -> Result<Factorization> {
    factorize_with_ceiling(n, DEFAULT_CEILING)
}

/// Trial division below 2^20, then Brent-Pollard rho on the cofactor.
pub fn factorize_with_ceiling(n: u64, ceiling: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if n > ceiling {
        return Err(Error::AboveCeiling { value: n as u128, ceiling });
    }
    let mut primes = Vec::new();
    let mut rest = n;
    while rest.is_multiple_of(2) {
        primes.push(2);
        rest /= 2;
    }
    let mut d = 3u64;
    while d < TRIAL_LIMIT && d * d <= rest && !is_prime(rest) {
        while rest.is_multiple_of(d) {
            primes.push(d);
            rest /= d;
        }
        d += 2;
    }
    split_into(rest, &mut primes);
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { value: n, factors })
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors.iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

pub fn moebius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if !f.is_square_free() {
        return Ok(0);
    }
    Ok(if f.factors.len() % 2 == 0 { 1 } else { -1 })
}

/// `q^d`, failing when the result leaves `u64`.
pub fn checked_pow(q: u64, d: u32) -> Result<u64> {
    q.checked_pow(d).ok_or(Error::Overflow("integer power"))
}

/// Splits a prime power `q = p^e` into `(p, e)`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let f = factorize(q)?;
    match f.factors() {
        [(p, e)] => Ok((*p, *e)),
        _ => Err(Error::NotPrimePower(q)),
    }
}

/// Number of primitive polynomials of degree `d` over `F_q`: `φ(q^d - 1)/d`.
pub fn count_primitive_polys(q: u64, d: u32) -> Result<u64> {
    prime_power(q)?;
    if d == 0 {
        return Err(Error::ZeroInput);
    }
    let phi = euler_phi(checked_pow(q, d)? - 1)?;
    if phi % d as u64 != 0 {
        return Err(Error::Internal(format!("phi({q}^{d} - 1) = {phi} not divisible by {d}")));
    }
    Ok(phi / d as u64)
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`
/// (Gauss's formula via Möbius inversion).
pub fn count_irreducible_polys(q: u64, d: u32) -> Result<u64> {
    prime_power(q)?;
    if d == 0 {
        return Err(Error::ZeroInput);
    }
    checked_pow(q, d)?;
    let mut sum: i128 = 0;
    for e in factorize(d as u64)?.divisors() {
        let mu = moebius(d as u64 / e)? as i128;
        sum += mu * q.pow(e as u32) as i128;
    }
    if sum % d as i128 != 0 {
        return Err(Error::Internal(format!("necklace sum {sum} not divisible by {d}")));
    }
    Ok((sum / d as i128) as u64)
}

/// Order of a group element whose order is known to divide `exponent`.
///
/// `is_identity(k)` must report whether the element raised to `k` is the
/// identity. Each prime is stripped while the power stays trivial.
pub fn order_dividing(exponent: &Factorization, mut is_identity: impl FnMut(u64) -> bool) -> u64 {
    let mut order = exponent.value();
    for &(p, e) in exponent.factors() {
        for _ in 0..e {
            if is_identity(order / p) {
                order /= p;
            } else {
                break;
            }
        }
    }
    order
}

/// `|GL_m(F_q)| = prod_{i<m} (q^m - q^i)`.
pub fn gl_order(q: u64, m: u32) -> Result<u128> {
    let qm = (q as u128).checked_pow(m).ok_or(Error::Overflow("GL order"))?;
    let mut acc: u128 = 1;
    for i in 0..m {
        let term = qm - (q as u128).pow(i);
        acc = acc.checked_mul(term).ok_or(Error::Overflow("GL order"))?;
    }
    Ok(acc)
}

/// Gaussian binomial `[n choose k]_q`: number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num
            .checked_mul(q.checked_pow(n - i).ok_or(Error::Overflow("gaussian binomial"))? - 1)
            .ok_or(Error::Overflow("gaussian binomial"))?;
        den = den
            .checked_mul(q.pow(i + 1) - 1)
            .ok_or(Error::Overflow("gaussian binomial"))?;
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(15).unwrap().factors(), &[(3, 1), (5, 1)]);
        assert_eq!(factorize(255).unwrap().factors(), &[(3, 1), (5, 1), (17, 1)]);
        assert_eq!(factorize(0), Err(Error::ZeroInput));
        assert!(matches!(factorize_with_ceiling(100, 99), Err(Error::AboveCeiling { .. })));
    }

    #[test]
    fn factorize_large() {
        // 2^64 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
        let f = factorize(u64::MAX).unwrap();
        assert_eq!(
            f.factors(),
            &[(3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6700417, 1)]
        );
        // product of two primes above the trial bound
        let (a, b) = (4_294_967_291u64, 4_294_967_279u64);
        let f = factorize(a * b).unwrap();
        assert_eq!(f.factors(), &[(b, 1), (a, 1)]);
        let f = factorize(1_048_583u64 * 1_048_583 * 3).unwrap();
        assert_eq!(f.factors(), &[(3, 1), (1_048_583, 2)]);
    }

    #[test]
    fn totient_and_moebius_examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(15).unwrap(), brute_phi(15));
        assert_eq!(euler_phi(15).unwrap(), 8);
        assert_eq!(euler_phi(255).unwrap(), 128);
        assert_eq!(brute_phi(255), 128);
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(4).unwrap(), 0);
        assert_eq!(moebius(6).unwrap(), 1);
        assert_eq!(moebius(30).unwrap(), -1);
    }

    #[test]
    fn divisor_sums() {
        for n in 1..=5000u64 {
            let divs = factorize(n).unwrap().divisors();
            let phi_sum: u64 = divs.iter().map(|&d| euler_phi(d).unwrap()).sum();
            assert_eq!(phi_sum, n);
            let mu_sum: i64 = divs.iter().map(|&d| moebius(d).unwrap() as i64).sum();
            assert_eq!(mu_sum, (n == 1) as i64);
        }
    }

    #[test]
    fn primality_against_sieve() {
        let limit = 20_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &p) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), p, "{n}");
        }
        // strong pseudoprime to several small bases
        assert!(!is_prime(3_215_031_751));
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn polynomial_counts() {
        assert_eq!(count_primitive_polys(2, 4).unwrap(), 2);
        assert_eq!(count_primitive_polys(2, 1).unwrap(), 1);
        assert_eq!(count_primitive_polys(3, 2).unwrap(), 2);
        assert_eq!(count_irreducible_polys(2, 4).unwrap(), 3);
        assert_eq!(count_irreducible_polys(2, 1).unwrap(), 2);
        assert_eq!(count_irreducible_polys(2, 2).unwrap(), 1);
        assert_eq!(count_irreducible_polys(6, 2), Err(Error::NotPrimePower(6)));
        assert_eq!(count_irreducible_polys(2, 0), Err(Error::ZeroInput));
        assert!(count_primitive_polys(2, 70).is_err());
    }

    #[test]
    fn primitive_never_exceeds_irreducible() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            for d in 1..=20u32 {
                if q.pow(d) > 1 << 20 {
                    break;
                }
                assert!(count_primitive_polys(q, d).unwrap() <= count_irreducible_polys(q, d).unwrap());
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(gl_order(2, 2).unwrap(), 6);
        assert_eq!(gl_order(2, 3).unwrap(), 168);
        assert_eq!(gl_order(3, 2).unwrap(), 48);
        assert_eq!(gaussian_binomial(4, 2, 2).unwrap(), 35);
        assert_eq!(gaussian_binomial(6, 3, 2).unwrap(), 1395);
        assert_eq!(gaussian_binomial(3, 5, 2).unwrap(), 0);
    }

    #[test]
    fn order_stripping() {
        // order of 2 mod 7 is 3
        let f = factorize(6).unwrap();
        assert_eq!(order_dividing(&f, |k| pow_mod(2, k, 7) == 1), 3);
        assert_eq!(order_dividing(&f, |k| pow_mod(3, k, 7) == 1), 6);
    }

    #[test]
    fn lcm_of_factorizations() {
        let parts = [factorize(12).unwrap(), factorize(18).unwrap(), Factorization::prime_power_of(5, 2).unwrap()];
        let l = Factorization::lcm(&parts).unwrap();
        assert_eq!(l.value(), 900);
        assert_eq!(l.factors(), &[(2, 2), (3, 2), (5, 2)]);
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(7).unwrap(), (7, 1));
        assert!(prime_power(12).is_err());
        assert!(prime_power(1).is_err());
    }
}
