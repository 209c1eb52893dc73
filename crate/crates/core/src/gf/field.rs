use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::gf::poly;
use crate::numtheory;

/// Field element in canonical encoding: `sum coords[i] * p^i` where
/// `coords` are the coordinates over the prime field in the power basis
/// of the field's modulus.
pub type Elem = u32;

/// Largest field order this crate will construct.
pub const MAX_FIELD_ORDER: u64 = 1 << 30;

const TABLE_ORDER: u32 = 256;
const LOG_ORDER: u32 = 1 << 22;

#[derive(Clone)]
enum Arith {
    /// Full addition and multiplication tables.
    Table { add: Vec<Elem>, mul: Vec<Elem>, inv: Vec<Elem> },
    /// Discrete log tables with respect to a primitive element.
    Log { exp: Vec<Elem>, log: Vec<u32> },
    Direct,
}

/// A finite field `F_p[X]/(modulus)` stored over its prime field.
///
/// Degree-one fields are prime fields; their modulus is the marker `X`.
#[derive(Clone)]
pub struct Field {
    p: u32,
    degree: u32,
    order: u32,
    modulus: Vec<Elem>,
    pow_p: Vec<u32>,
    arith: Arith,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}[{}]", self.p, self.degree, poly::to_text(&self.modulus))
    }
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if !numtheory::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_FIELD_ORDER {
            return Err(Error::AboveCeiling { value: p as u128, ceiling: MAX_FIELD_ORDER });
        }
        Ok(Self::build(p as u32, vec![0, 1]))
    }

    /// `F_p[X]/(modulus)`; the modulus must be monic and irreducible over `F_p`.
    pub fn with_modulus(p: u64, modulus: Vec<Elem>) -> Result<Self> {
        let prime = Self::prime(p)?;
        let modulus = poly::trimmed(modulus);
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= prime.p) {
            return Err(Error::Parse(format!("modulus {} is not monic over F_{p}", poly::to_text(&modulus))));
        }
        if modulus.len() == 2 {
            // Every monic linear modulus gives the prime field; keep the marker.
            return Ok(prime);
        }
        let degree = (modulus.len() - 1) as u32;
        let order = (p as u128).pow(degree);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::AboveCeiling { value: order, ceiling: MAX_FIELD_ORDER });
        }
        if !poly::is_irreducible(&prime, &modulus) {
            return Err(Error::NotIrreducible(poly::to_text(&modulus)));
        }
        Ok(Self::build(p as u32, modulus))
    }

    /// `F_{p^degree}` with the least monic irreducible modulus, ordered by
    /// the canonical integer encoding of the coefficient vector.
    pub fn canonical(p: u64, degree: u32) -> Result<Self> {
        let prime = Self::prime(p)?;
        if degree == 0 {
            return Err(Error::ZeroInput);
        }
        if degree == 1 {
            return Ok(prime);
        }
        let order = (p as u128).pow(degree);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::AboveCeiling { value: order, ceiling: MAX_FIELD_ORDER });
        }
        let modulus = poly::least_irreducible(&prime, degree as usize)
            .ok_or_else(|| Error::Internal(format!("no irreducible of degree {degree} over F_{p}")))?;
        Ok(Self::build(p as u32, modulus))
    }

    fn build(p: u32, modulus: Vec<Elem>) -> Self {
        let degree = (modulus.len() - 1) as u32;
        let order = p.pow(degree);
        let pow_p = (0..degree).map(|i| p.pow(i)).collect();
        let mut field = Field { p, degree, order, modulus, pow_p, arith: Arith::Direct };
        field.arith = field.make_tables();
        field
    }

    fn make_tables(&self) -> Arith {
        let q = self.order;
        if q <= TABLE_ORDER {
            let n = q as usize;
            let mut add = vec![0; n * n];
            let mut mul = vec![0; n * n];
            let mut inv = vec![0; n];
            for a in 0..q {
                for b in 0..q {
                    add[a as usize * n + b as usize] = self.add_direct(a, b);
                    let ab = self.mul_direct(a, b);
                    mul[a as usize * n + b as usize] = ab;
                    if ab == 1 {
                        inv[a as usize] = b;
                    }
                }
            }
            Arith::Table { add, mul, inv }
        } else if q <= LOG_ORDER {
            let g = self.find_primitive_direct();
            let mut exp = Vec::with_capacity(q as usize - 1);
            let mut log = vec![0u32; q as usize];
            let mut x = 1;
            for k in 0..q - 1 {
                exp.push(x);
                log[x as usize] = k;
                x = self.mul_direct(x, g);
            }
            Arith::Log { exp, log }
        } else {
            Arith::Direct
        }
    }

    fn find_primitive_direct(&self) -> Elem {
        let group = numtheory::factorize(self.order as u64 - 1).expect("order below 2^64");
        (1..self.order)
            .find(|&g| {
                numtheory::order_dividing(&group, |k| self.pow_with(g, k, Self::mul_direct) == 1)
                    == group.value()
            })
            .expect("multiplicative group is cyclic")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    /// Modulus over `F_p`, constant term first. `[0, 1]` for prime fields.
    pub fn modulus(&self) -> &[Elem] {
        &self.modulus
    }

    /// `"p^e"` tag used by the text formats.
    pub fn tag(&self) -> String {
        format!("{}^{}", self.p, self.degree)
    }

    /// All elements in ascending encoding.
    pub fn elements(&self) -> Range<Elem> {
        0..self.order
    }

    /// The class of `X`, which generates the field over `F_p`.
    pub fn generator(&self) -> Elem {
        if self.degree == 1 {
            1
        } else {
            self.p
        }
    }

    pub fn coords(&self, mut a: Elem) -> Vec<u32> {
        let mut out = vec![0; self.degree as usize];
        for c in out.iter_mut() {
            *c = a % self.p;
            a /= self.p;
        }
        out
    }

    pub fn from_coords(&self, coords: &[u32]) -> Elem {
        debug_assert!(coords.len() <= self.degree as usize);
        coords.iter().zip(&self.pow_p).map(|(&c, &w)| (c % self.p) * w).sum()
    }

    /// Image of a prime-field residue.
    pub fn from_prime(&self, c: u64) -> Elem {
        (c % self.p as u64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.arith {
            Arith::Table { add, .. } => add[(a * self.order + b) as usize],
            _ => self.add_direct(a, b),
        }
    }

    fn add_direct(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        if self.degree == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out) = (a, b, 0);
        for &w in &self.pow_p {
            out += ((a % self.p + b % self.p) % self.p) * w;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        if self.degree == 1 {
            return (self.p - a) % self.p;
        }
        let mut a = a;
        let mut out = 0;
        for &w in &self.pow_p {
            out += ((self.p - a % self.p) % self.p) * w;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.arith {
            Arith::Table { mul, .. } => mul[(a * self.order + b) as usize],
            Arith::Log { exp, log } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    let k = (log[a as usize] as u64 + log[b as usize] as u64) % (self.order as u64 - 1);
                    exp[k as usize]
                }
            }
            Arith::Direct => self.mul_direct(a, b),
        }
    }

    /// Schoolbook product reduced by the modulus; independent of the tables.
    pub fn mul_direct(&self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as Elem;
        }
        let p = self.p as u64;
        let d = self.degree as usize;
        let (ca, cb) = (self.coords(a), self.coords(b));
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus[..d].iter().enumerate() {
                prod[k - d + i] = (prod[k - d + i] + (p - c) * m as u64) % p;
            }
            prod[k] = 0;
        }
        prod[..d].iter().zip(&self.pow_p).map(|(&c, &w)| c as u32 * w).sum()
    }

    fn pow_with(&self, mut base: Elem, mut exp: u64, mul: impl Fn(&Self, Elem, Elem) -> Elem) -> Elem {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(self, acc, base);
            }
            base = mul(self, base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn pow(&self, base: Elem, exp: u64) -> Elem {
        self.pow_with(base, exp, Self::mul)
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::ZeroElement);
        }
        Ok(match &self.arith {
            Arith::Table { inv, .. } => inv[a as usize],
            Arith::Log { exp, log } => {
                let k = log[a as usize];
                exp[((self.order - 1 - k) % (self.order - 1)) as usize]
            }
            Arith::Direct => self.pow(a, self.order as u64 - 2),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroElement);
        }
        let group = numtheory::factorize(self.order as u64 - 1)?;
        Ok(numtheory::order_dividing(&group, |k| self.pow(a, k) == 1))
    }

    /// Least primitive element by encoding.
    pub fn primitive_element(&self) -> Elem {
        if self.order == 2 {
            return 1;
        }
        let group = numtheory::factorize(self.order as u64 - 1).expect("order below 2^64");
        self.elements()
            .skip(1)
            .find(|&g| numtheory::order_dividing(&group, |k| self.pow(g, k) == 1) == group.value())
            .expect("multiplicative group is cyclic")
    }
}
