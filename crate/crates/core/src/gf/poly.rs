//! Dense univariate polynomials over a [`Field`].
//!
//! The free functions work on coefficient slices (constant term first, no
//! trailing zeros) and are what the enumeration engines call in their inner
//! loops. [`GfPoly`] wraps them with the field attached.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::field::{Elem, Field};
use crate::numtheory;

pub fn trim(f: &mut Vec<Elem>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub fn trimmed(mut f: Vec<Elem>) -> Vec<Elem> {
    trim(&mut f);
    f
}

/// `None` is the degree of the zero polynomial and orders below every `Some`.
pub fn degree(f: &[Elem]) -> Option<usize> {
    f.len().checked_sub(1)
}

/// Constant term first, comma separated; `"0"` for the zero polynomial.
pub fn to_text(f: &[Elem]) -> String {
    if f.is_empty() {
        return "0".to_string();
    }
    f.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_text(s: &str) -> Result<Vec<Elem>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let coeffs = s
        .split(',')
        .map(|t| t.trim().parse::<Elem>().map_err(|e| Error::Parse(format!("coefficient {t:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(trimmed(coeffs))
}

pub fn add(k: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = k.add(*o, s);
    }
    trimmed(out)
}

pub fn neg(k: &Field, a: &[Elem]) -> Vec<Elem> {
    a.iter().map(|&c| k.neg(c)).collect()
}

pub fn sub(k: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    add(k, a, &neg(k, b))
}

pub fn scale(k: &Field, a: &[Elem], c: Elem) -> Vec<Elem> {
    trimmed(a.iter().map(|&x| k.mul(x, c)).collect())
}

pub fn mul(k: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = k.add(out[i + j], k.mul(x, y));
        }
    }
    trimmed(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(k: &Field, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = k.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trimmed(r));
    }
    let mut q = vec![0; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = k.mul(r[i], lead_inv);
        if c == 0 {
            continue;
        }
        q[i - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            let t = i - db + j;
            r[t] = k.sub(r[t], k.mul(c, bj));
        }
    }
    r.truncate(db);
    (trimmed(q), trimmed(r))
}

pub fn rem(k: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    divrem(k, a, b).1
}

pub fn monic(k: &Field, a: &[Elem]) -> Vec<Elem> {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => scale(k, a, k.inv(lead).expect("nonzero leading coefficient")),
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(k: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let (mut a, mut b) = (trimmed(a.to_vec()), trimmed(b.to_vec()));
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

pub fn mul_mod(k: &Field, a: &[Elem], b: &[Elem], modulus: &[Elem]) -> Vec<Elem> {
    rem(k, &mul(k, a, b), modulus)
}

pub fn pow_mod(k: &Field, base: &[Elem], mut exp: u64, modulus: &[Elem]) -> Vec<Elem> {
    let mut acc = rem(k, &[1], modulus);
    let mut base = rem(k, base, modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(k, &acc, &base, modulus);
        }
        exp >>= 1;
        if exp > 0 {
            base = mul_mod(k, &base, &base, modulus);
        }
    }
    acc
}

/// Horner evaluation at a point of the same field.
pub fn eval(k: &Field, f: &[Elem], x: Elem) -> Elem {
    f.iter().rev().fold(0, |acc, &c| k.add(k.mul(acc, x), c))
}

/// Rabin's test: `f` of degree `d` is irreducible over `F_Q` iff
/// `X^(Q^d) = X mod f` and `gcd(X^(Q^(d/r)) - X, f) = 1` for every prime `r | d`.
pub fn is_irreducible(k: &Field, f: &[Elem]) -> bool {
    let d = match degree(f) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(d) => d,
    };
    let f = monic(k, f);
    let q = k.order() as u64;
    let x = vec![0, 1];
    let maximal: Vec<usize> = numtheory::factorize(d as u64)
        .expect("degree is positive")
        .primes()
        .map(|r| d / r as usize)
        .collect();
    let mut h = x.clone();
    for i in 1..=d {
        h = pow_mod(k, &h, q, &f);
        if maximal.contains(&i) {
            let g = gcd(k, &sub(k, &h, &x), &f);
            if g.len() != 1 {
                return false;
            }
        }
    }
    h == rem(k, &x, &f)
}

/// Irreducible and `X` has order `Q^d - 1` modulo `f` (after monicizing).
pub fn is_primitive(k: &Field, f: &[Elem]) -> Result<bool> {
    let d = match degree(f) {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(false),
        Some(d) => d,
    };
    if !is_irreducible(k, f) {
        return Ok(false);
    }
    let f = monic(k, f);
    if f[0] == 0 {
        // f = X
        return Ok(false);
    }
    let group_order = (k.order() as u64)
        .checked_pow(d as u32)
        .ok_or(Error::Overflow("Q^d in primitivity test"))?
        - 1;
    let group = numtheory::factorize(group_order)?;
    let x = [0, 1];
    let one = rem(k, &[1], &f);
    Ok(numtheory::order_dividing(&group, |e| pow_mod(k, &x, e, &f) == one) == group_order)
}

/// Monic polynomial of degree `d` whose lower coefficients have encoding `index`
/// (base-`Q` digits, constant term least significant).
pub fn monic_from_index(k: &Field, d: usize, mut index: u64) -> Vec<Elem> {
    let q = k.order() as u64;
    let mut f = Vec::with_capacity(d + 1);
    for _ in 0..d {
        f.push((index % q) as Elem);
        index /= q;
    }
    f.push(1);
    f
}

/// Polynomial of degree `< n` (possibly zero) with coefficient encoding `index`.
pub fn bounded_from_index(k: &Field, n: usize, mut index: u64) -> Vec<Elem> {
    let q = k.order() as u64;
    let mut f = Vec::with_capacity(n);
    for _ in 0..n {
        f.push((index % q) as Elem);
        index /= q;
    }
    trimmed(f)
}

/// Least monic irreducible of degree `d` in encoding order.
pub fn least_irreducible(k: &Field, d: usize) -> Option<Vec<Elem>> {
    let count = (k.order() as u64).checked_pow(d as u32)?;
    (0..count).map(|i| monic_from_index(k, d, i)).find(|f| is_irreducible(k, f))
}

/// Polynomial attached to its coefficient field.
#[derive(Clone, PartialEq, Eq)]
pub struct GfPoly {
    field: Arc<Field>,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GfPoly({})", self.to_tagged_text())
    }
}

impl fmt::Display for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl GfPoly {
    pub fn new(field: Arc<Field>, coeffs: Vec<Elem>) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= field.order()) {
            return Err(Error::Parse(format!("coefficient {bad} outside {}", field.tag())));
        }
        Ok(GfPoly { field, coeffs: trimmed(coeffs) })
    }

    pub fn zero(field: Arc<Field>) -> Self {
        GfPoly { field, coeffs: Vec::new() }
    }

    pub fn x(field: Arc<Field>) -> Self {
        GfPoly { field, coeffs: vec![0, 1] }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        degree(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check_field(&self, other: &GfPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, coeffs: Vec<Elem>) -> GfPoly {
        GfPoly { field: self.field.clone(), coeffs }
    }

    pub fn add(&self, other: &GfPoly) -> Result<GfPoly> {
        self.check_field(other)?;
        Ok(self.with(add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &GfPoly) -> Result<GfPoly> {
        self.check_field(other)?;
        Ok(self.with(sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &GfPoly) -> Result<GfPoly> {
        self.check_field(other)?;
        Ok(self.with(mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn divrem(&self, other: &GfPoly) -> Result<(GfPoly, GfPoly)> {
        self.check_field(other)?;
        if other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (q, r) = divrem(&self.field, &self.coeffs, &other.coeffs);
        Ok((self.with(q), self.with(r)))
    }

    pub fn monic(&self) -> GfPoly {
        self.with(monic(&self.field, &self.coeffs))
    }

    /// Monic gcd; `gcd(0, 0) = 0` and `gcd(f, 0)` is `f` made monic.
    pub fn gcd(&self, other: &GfPoly) -> Result<GfPoly> {
        self.check_field(other)?;
        Ok(self.with(gcd(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn eval(&self, x: Elem) -> Elem {
        eval(&self.field, &self.coeffs, x)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(is_irreducible(&self.field, &self.coeffs))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        is_primitive(&self.field, &self.coeffs)
    }

    pub fn to_text(&self) -> String {
        to_text(&self.coeffs)
    }

    /// `"p^e:c0,c1,..."`.
    pub fn to_tagged_text(&self) -> String {
        format!("{}:{}", self.field.tag(), self.to_text())
    }

    pub fn parse(field: Arc<Field>, s: &str) -> Result<GfPoly> {
        let body = match s.split_once(':') {
            Some((tag, body)) if tag.trim() == field.tag() => body,
            Some((tag, _)) => return Err(Error::Parse(format!("field tag {tag:?} does not match {}", field.tag()))),
            None => s,
        };
        GfPoly::new(field, parse_text(body)?)
    }
}
