use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::field::{Elem, Field, MAX_FIELD_ORDER};
use crate::gf::linear;
use crate::gf::poly::{self, GfPoly};

/// Field homomorphism `sub -> sup`, stored as the images of the power basis
/// `1, g, ..., g^(k-1)` of `sub`'s generator `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    images: Vec<Elem>,
}

impl Embedding {
    /// Sends the generator of `sub` to the least root of its modulus in `sup`.
    pub fn least_root(sub: &Field, sup: &Field) -> Result<Self> {
        if sub.characteristic() != sup.characteristic() || !sup.degree().is_multiple_of(sub.degree()) {
            return Err(Error::FieldMismatch);
        }
        if sub.is_prime_field() {
            return Ok(Embedding { images: vec![1] });
        }
        let modulus = sub.modulus();
        let root = sup
            .elements()
            .find(|&x| poly::eval(sup, modulus, x) == 0)
            .ok_or_else(|| Error::Internal(format!("modulus of {sub:?} has no root in {sup:?}")))?;
        Ok(Self::from_generator_image(sub, sup, root))
    }

    fn from_generator_image(sub: &Field, sup: &Field, root: Elem) -> Self {
        let mut images = Vec::with_capacity(sub.degree() as usize);
        let mut x = 1;
        for _ in 0..sub.degree() {
            images.push(x);
            x = sup.mul(x, root);
        }
        Embedding { images }
    }

    pub fn identity(field: &Field) -> Self {
        Self::from_generator_image(field, field, field.generator())
    }

    /// `outer ∘ self`.
    pub fn then(&self, sub: &Field, mid: &Field, outer: &Embedding, sup: &Field) -> Self {
        let root = outer.apply(mid, sup, self.generator_image());
        Self::from_generator_image(sub, sup, root)
    }

    pub fn generator_image(&self) -> Elem {
        self.images.get(1).copied().unwrap_or(1)
    }

    pub fn apply(&self, sub: &Field, sup: &Field, x: Elem) -> Elem {
        sub.coords(x)
            .iter()
            .zip(&self.images)
            .fold(0, |acc, (&c, &img)| sup.add(acc, sup.mul(c, img)))
    }

    /// Preimage of `y`, if `y` lies in the image.
    pub fn preimage(&self, sub: &Field, sup: &Field, y: Elem) -> Option<Elem> {
        let k = sub.degree() as usize;
        let d = sup.degree() as usize;
        let prime = Field::prime(sup.characteristic() as u64).expect("characteristic is prime");
        // Columns: coordinates of the images, then the target.
        let w = k + 1;
        let mut aug = vec![0; d * w];
        for (j, &img) in self.images.iter().enumerate() {
            for (i, c) in sup.coords(img).into_iter().enumerate() {
                aug[i * w + j] = c;
            }
        }
        for (i, c) in sup.coords(y).into_iter().enumerate() {
            aug[i * w + k] = c;
        }
        let pivots = linear::rref(&prime, &mut aug, d, w);
        if pivots.contains(&k) {
            return None;
        }
        let mut coords = vec![0; k];
        for (r, &c) in pivots.iter().enumerate() {
            coords[c] = aug[r * w + k];
        }
        Some(sub.from_coords(&coords))
    }
}

/// Coordinates of an extension `L ⊇ F_q` over `F_q` in the basis
/// `1, θ, ..., θ^(k-1)` for a chosen `θ` of degree `k` over `F_q`.
#[derive(Debug, Clone)]
pub struct RelativeBasis {
    base: Arc<Field>,
    ext: Arc<Field>,
    embed: Embedding,
    dim: usize,
    theta_powers: Vec<Elem>,
    /// `None` when coordinates are the prime-field digits themselves.
    inverse: Option<Vec<Elem>>,
}

impl RelativeBasis {
    pub fn new(base: Arc<Field>, ext: Arc<Field>, embed: Embedding, theta: Elem) -> Result<Self> {
        let e = base.degree() as usize;
        let big_d = ext.degree() as usize;
        if !big_d.is_multiple_of(e) {
            return Err(Error::FieldMismatch);
        }
        let dim = big_d / e;
        let mut theta_powers = Vec::with_capacity(dim);
        let mut x = 1;
        for _ in 0..dim {
            theta_powers.push(x);
            x = ext.mul(x, theta);
        }
        let identity = e == 1 && (dim == 1 || theta == ext.generator());
        let inverse = if identity {
            None
        } else {
            let prime = Field::prime(ext.characteristic() as u64)?;
            let mut cols = vec![0; big_d * big_d];
            for (i, &tp) in theta_powers.iter().enumerate() {
                for (j, &omega) in embed.images.iter().enumerate() {
                    let v = ext.mul(omega, tp);
                    for (r, c) in ext.coords(v).into_iter().enumerate() {
                        cols[r * big_d + i * e + j] = c;
                    }
                }
            }
            Some(linear::inverse(&prime, &cols, big_d).ok_or(Error::DependentBasis)?)
        };
        Ok(RelativeBasis { base, ext, embed, dim, theta_powers, inverse })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn base(&self) -> &Arc<Field> {
        &self.base
    }

    pub fn ext(&self) -> &Arc<Field> {
        &self.ext
    }

    /// Coordinates over `F_q`, written into `out` (length `dim`).
    pub fn coords_into(&self, x: Elem, out: &mut [Elem]) {
        match &self.inverse {
            None => {
                let p = self.ext.characteristic();
                let mut x = x;
                for o in out.iter_mut() {
                    *o = x % p;
                    x /= p;
                }
            }
            Some(inv) => {
                let prime_digits = self.ext.coords(x);
                let d = prime_digits.len();
                let e = self.base.degree() as usize;
                let p = self.ext.characteristic() as u64;
                let mut digits = vec![0u32; d];
                for (r, dig) in digits.iter_mut().enumerate() {
                    let mut acc = 0u64;
                    for (c, &v) in prime_digits.iter().enumerate() {
                        acc += inv[r * d + c] as u64 * v as u64;
                    }
                    *dig = (acc % p) as u32;
                }
                for (i, o) in out.iter_mut().enumerate() {
                    *o = self.base.from_coords(&digits[i * e..(i + 1) * e]);
                }
            }
        }
    }

    pub fn coords(&self, x: Elem) -> Vec<Elem> {
        let mut out = vec![0; self.dim];
        self.coords_into(x, &mut out);
        out
    }

    pub fn from_coords(&self, coords: &[Elem]) -> Elem {
        if self.inverse.is_none() {
            return self.ext.from_coords(coords);
        }
        coords.iter().zip(&self.theta_powers).fold(0, |acc, (&c, &tp)| {
            let c = self.embed.apply(&self.base, &self.ext, c);
            self.ext.add(acc, self.ext.mul(c, tp))
        })
    }
}

/// `F_q ⊂ F_{q^m} ⊂ F_{q^{mn}}`, each stored over `F_p` with its canonical
/// modulus, plus the embeddings between them.
#[derive(Debug, Clone)]
pub struct FieldTower {
    p: u64,
    e: u32,
    m: u32,
    n: u32,
    base: Arc<Field>,
    mid: Arc<Field>,
    top: Arc<Field>,
    base_mid: Embedding,
    mid_top: Embedding,
    base_top: Embedding,
    top_basis: RelativeBasis,
    mid_basis: RelativeBasis,
}

impl FieldTower {
    pub fn new(p: u64, e: u32, m: u32, n: u32) -> Result<Self> {
        if e == 0 || m == 0 || n == 0 {
            return Err(Error::ZeroInput);
        }
        let total = e as u128 * m as u128 * n as u128;
        let top_order = (p as u128).checked_pow(total as u32).unwrap_or(u128::MAX);
        if total > 64 || top_order > MAX_FIELD_ORDER as u128 {
            return Err(Error::AboveCeiling { value: top_order, ceiling: MAX_FIELD_ORDER });
        }
        let base = Arc::new(Field::canonical(p, e)?);
        let mid = Arc::new(Field::canonical(p, e * m)?);
        let top = Arc::new(Field::canonical(p, e * m * n)?);
        let base_mid = Embedding::least_root(&base, &mid)?;
        let mid_top = Embedding::least_root(&mid, &top)?;
        let base_top = base_mid.then(&base, &mid, &mid_top, &top);
        let top_basis = RelativeBasis::new(base.clone(), top.clone(), base_top.clone(), top.generator())?;
        let mid_basis = RelativeBasis::new(base.clone(), mid.clone(), base_mid.clone(), mid.generator())?;
        Ok(FieldTower { p, e, m, n, base, mid, top, base_mid, mid_top, base_top, top_basis, mid_basis })
    }

    /// Tower for `q = p^e` given as an integer.
    pub fn for_q(q: u64, m: u32, n: u32) -> Result<Self> {
        let (p, e) = crate::numtheory::prime_power(q)?;
        Self::new(p, e, m, n)
    }

    pub fn q(&self) -> u64 {
        self.base.order() as u64
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `mn`, the dimension of the top field over the base.
    pub fn dim(&self) -> usize {
        (self.m * self.n) as usize
    }

    pub fn base(&self) -> &Arc<Field> {
        &self.base
    }

    pub fn mid(&self) -> &Arc<Field> {
        &self.mid
    }

    pub fn top(&self) -> &Arc<Field> {
        &self.top
    }

    pub fn embedding_base_mid(&self) -> &Embedding {
        &self.base_mid
    }

    pub fn embedding_mid_top(&self) -> &Embedding {
        &self.mid_top
    }

    pub fn embedding_base_top(&self) -> &Embedding {
        &self.base_top
    }

    pub fn base_to_mid(&self, x: Elem) -> Elem {
        self.base_mid.apply(&self.base, &self.mid, x)
    }

    pub fn mid_to_top(&self, x: Elem) -> Elem {
        self.mid_top.apply(&self.mid, &self.top, x)
    }

    pub fn base_to_top(&self, x: Elem) -> Elem {
        self.base_top.apply(&self.base, &self.top, x)
    }

    pub fn top_to_mid(&self, y: Elem) -> Option<Elem> {
        self.mid_top.preimage(&self.mid, &self.top, y)
    }

    pub fn top_to_base(&self, y: Elem) -> Option<Elem> {
        self.base_top.preimage(&self.base, &self.top, y)
    }

    /// Coordinates of the top field over `F_q` (power basis of the top generator).
    pub fn top_basis(&self) -> &RelativeBasis {
        &self.top_basis
    }

    /// Coordinates of the mid field over `F_q` (power basis of the mid generator).
    pub fn mid_basis(&self) -> &RelativeBasis {
        &self.mid_basis
    }

    fn orbit(&self, field: &Field, alpha: Elem, q: u64) -> Vec<Elem> {
        let mut orbit = vec![alpha];
        let mut x = field.pow(alpha, q);
        while x != alpha {
            orbit.push(x);
            x = field.pow(x, q);
        }
        orbit
    }

    fn product_of_linears(&self, roots: &[Elem]) -> Vec<Elem> {
        let top = &*self.top;
        roots.iter().fold(vec![1], |acc, &r| poly::mul(top, &acc, &[top.neg(r), 1]))
    }

    /// Degree of a top element over the base field.
    pub fn degree_over_base(&self, alpha: Elem) -> usize {
        self.orbit(&self.top, alpha, self.q()).len()
    }

    /// Monic minimal polynomial of a top element over the mid field.
    pub fn min_poly_over_mid(&self, alpha: Elem) -> Result<GfPoly> {
        if alpha >= self.top.order() {
            return Err(Error::Parse(format!("{alpha} is not an element of {}", self.top.tag())));
        }
        let qm = (self.q()).pow(self.m);
        let roots = self.orbit(&self.top, alpha, qm);
        let coeffs = self
            .product_of_linears(&roots)
            .into_iter()
            .map(|c| self.top_to_mid(c).ok_or_else(|| Error::Internal("min poly coefficient outside mid field".into())))
            .collect::<Result<Vec<_>>>()?;
        GfPoly::new(self.mid.clone(), coeffs)
    }

    /// Monic minimal polynomial of a top element over the base field.
    pub fn min_poly_over_base(&self, alpha: Elem) -> Result<GfPoly> {
        let roots = self.orbit(&self.top, alpha, self.q());
        let coeffs = self
            .product_of_linears(&roots)
            .into_iter()
            .map(|c| self.top_to_base(c).ok_or_else(|| Error::Internal("min poly coefficient outside base field".into())))
            .collect::<Result<Vec<_>>>()?;
        GfPoly::new(self.base.clone(), coeffs)
    }

    /// Roots in the top field of a polynomial over the base, ascending.
    pub fn roots_in_top(&self, f: &GfPoly) -> Result<Vec<Elem>> {
        if **f.field() != *self.base {
            return Err(Error::FieldMismatch);
        }
        let lifted: Vec<Elem> = f.coeffs().iter().map(|&c| self.base_to_top(c)).collect();
        Ok(self.top.elements().filter(|&x| poly::eval(&self.top, &lifted, x) == 0).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_homomorphism(sub: &Field, sup: &Field, emb: &Embedding) {
        for a in sub.elements() {
            for b in sub.elements() {
                assert_eq!(emb.apply(sub, sup, sub.add(a, b)), sup.add(emb.apply(sub, sup, a), emb.apply(sub, sup, b)));
                assert_eq!(emb.apply(sub, sup, sub.mul(a, b)), sup.mul(emb.apply(sub, sup, a), emb.apply(sub, sup, b)));
            }
            assert_eq!(emb.preimage(sub, sup, emb.apply(sub, sup, a)), Some(a));
        }
        for c in 0..sub.characteristic() {
            assert_eq!(emb.apply(sub, sup, c), c);
        }
    }

    #[test]
    fn tower_shapes() {
        let t = FieldTower::new(2, 1, 2, 2).unwrap();
        assert_eq!((t.base().degree(), t.mid().degree(), t.top().degree()), (1, 2, 4));
        let t = FieldTower::new(2, 1, 1, 3).unwrap();
        assert_eq!((t.mid().order(), t.top().order()), (2, 8));
        for x in t.base().elements() {
            assert_eq!(t.base_to_mid(x), x);
        }
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        for (p, e, m, n) in [(3, 1, 2, 2), (2, 1, 2, 2), (2, 2, 2, 1), (2, 2, 1, 3), (3, 2, 2, 1), (2, 1, 3, 2)] {
            let t = FieldTower::new(p, e, m, n).unwrap();
            check_homomorphism(t.base(), t.mid(), t.embedding_base_mid());
            check_homomorphism(t.mid(), t.top(), t.embedding_mid_top());
            check_homomorphism(t.base(), t.top(), t.embedding_base_top());
            for x in t.base().elements() {
                assert_eq!(t.base_to_top(x), t.mid_to_top(t.base_to_mid(x)));
            }
            let g = t.mid_to_top(t.mid().generator());
            assert_eq!(t.degree_over_base(g), m as usize);
        }
    }

    #[test]
    fn relative_coordinates_round_trip() {
        for (p, e, m, n) in [(2, 1, 2, 2), (2, 2, 2, 1), (2, 2, 1, 2), (3, 2, 1, 2)] {
            let t = FieldTower::new(p, e, m, n).unwrap();
            let basis = t.top_basis();
            assert_eq!(basis.dim(), (m * n) as usize);
            for x in t.top().elements() {
                let c = basis.coords(x);
                assert_eq!(basis.from_coords(&c), x);
            }
            // coordinates are F_q-linear
            let top = t.top();
            for lam in t.base().elements() {
                let x = 5 % top.order();
                let scaled = top.mul(t.base_to_top(lam), x);
                let expect: Vec<_> = basis.coords(x).iter().map(|&c| t.base().mul(c, lam)).collect();
                assert_eq!(basis.coords(scaled), expect);
            }
        }
    }

    #[test]
    fn minimal_polynomials() {
        let t = FieldTower::new(2, 1, 2, 2).unwrap();
        // a mid element has a linear minimal polynomial
        for beta in t.mid().elements() {
            let g = t.min_poly_over_mid(t.mid_to_top(beta)).unwrap();
            assert_eq!(g.coeffs(), &[t.mid().neg(beta), 1]);
        }
        assert_eq!(t.min_poly_over_mid(0).unwrap().coeffs(), &[0, 1]);
        // the root of the top modulus: quadratic over F_4 vanishing at alpha
        let alpha = t.top().generator();
        let g = t.min_poly_over_mid(alpha).unwrap();
        assert_eq!(g.degree(), Some(2));
        let lifted: Vec<Elem> = g.coeffs().iter().map(|&c| t.mid_to_top(c)).collect();
        assert_eq!(poly::eval(t.top(), &lifted, alpha), 0);
        let f = t.min_poly_over_base(alpha).unwrap();
        assert_eq!(f.coeffs(), t.top().modulus());
    }

    #[test]
    fn roots_of_base_polynomials() {
        let t = FieldTower::new(2, 1, 2, 2).unwrap();
        let f = GfPoly::new(t.base().clone(), vec![1, 1, 0, 0, 1]).unwrap();
        let roots = t.roots_in_top(&f).unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots[0], 2);
    }
}
