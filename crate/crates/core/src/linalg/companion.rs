//! Companion and block companion matrices, regular representations and the
//! lift of an irreducible polynomial to a block companion matrix.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::field::{Elem, Field};
use crate::gf::linear;
use crate::gf::poly::GfPoly;
use crate::gf::FieldTower;
use crate::linalg::GfMatrix;

/// Companion matrix of a monic polynomial: ones on the subdiagonal and
/// `-f_0, ..., -f_{d-1}` in the last column.
pub fn companion(f: &GfPoly) -> Result<GfMatrix> {
    let d = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::WrongDegree(f.to_text(), 1)),
        Some(d) => d,
    };
    if !f.is_monic() {
        return Err(Error::Parse(format!("{} is not monic", f.to_text())));
    }
    let k = f.field();
    let mut m = GfMatrix::zeros(k.clone(), d, d);
    for i in 1..d {
        m.set(i, i - 1, 1);
    }
    for (i, &c) in f.coeffs()[..d].iter().enumerate() {
        m.set(i, d - 1, k.neg(c));
    }
    Ok(m)
}

/// Blocks `C_0, ..., C_{n-1}` of an `(m, n)`-block companion matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCompanionSpec {
    pub m: usize,
    pub n: usize,
    pub blocks: Vec<GfMatrix>,
}

/// The `mn x mn` matrix with `I_m` on the block subdiagonal, `C_0..C_{n-1}`
/// down the last block column and zeros elsewhere.
pub fn assemble_block_companion(spec: &BlockCompanionSpec) -> Result<GfMatrix> {
    let (m, n) = (spec.m, spec.n);
    if m == 0 || n == 0 || spec.blocks.len() != n {
        return Err(Error::DimensionMismatch(format!("{} blocks for n = {n}", spec.blocks.len())));
    }
    let field = spec.blocks[0].field().clone();
    for b in &spec.blocks {
        if (b.rows(), b.cols()) != (m, m) {
            return Err(Error::DimensionMismatch(format!("block is {}x{}, expected {m}x{m}", b.rows(), b.cols())));
        }
        if **b.field() != *field {
            return Err(Error::FieldMismatch);
        }
    }
    let data = assemble_raw(m, n, |i, r, c| spec.blocks[i].get(r, c));
    Ok(GfMatrix::from_raw(field, m * n, m * n, data))
}

/// Assembly from a block-entry accessor `(block, row, col) -> entry`.
pub(crate) fn assemble_raw(m: usize, n: usize, block: impl Fn(usize, usize, usize) -> Elem) -> Vec<Elem> {
    let d = m * n;
    let mut data = vec![0; d * d];
    for bi in 1..n {
        for r in 0..m {
            data[(bi * m + r) * d + (bi - 1) * m + r] = 1;
        }
    }
    for bi in 0..n {
        for r in 0..m {
            for c in 0..m {
                data[(bi * m + r) * d + (n - 1) * m + c] = block(bi, r, c);
            }
        }
    }
    data
}

/// Reads the blocks back if `t` has exactly the block companion pattern.
pub fn recognize_block_companion(t: &GfMatrix, m: usize, n: usize) -> Result<Option<BlockCompanionSpec>> {
    let d = m * n;
    if m == 0 || n == 0 || t.rows() != d || t.cols() != d {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix, expected {d}x{d}", t.rows(), t.cols())));
    }
    for bi in 0..n {
        for bj in 0..n - 1 {
            for r in 0..m {
                for c in 0..m {
                    let expect = (bi == bj + 1 && r == c) as Elem;
                    if t.get(bi * m + r, bj * m + c) != expect {
                        return Ok(None);
                    }
                }
            }
        }
    }
    let blocks = (0..n).map(|bi| t.block(bi * m, (n - 1) * m, m, m)).collect();
    Ok(Some(BlockCompanionSpec { m, n, blocks }))
}

/// `(1, x, ..., x^(m-1))` for the generator `x` of the mid field.
pub fn canonical_mid_basis(tower: &FieldTower) -> Vec<Elem> {
    let mid = tower.mid();
    let x = mid.generator();
    let mut out = Vec::with_capacity(tower.m() as usize);
    let mut acc = 1;
    for _ in 0..tower.m() {
        out.push(acc);
        acc = mid.mul(acc, x);
    }
    out
}

/// Matrix over `F_q` of `y -> beta * y` on the mid field in the given basis;
/// column `j` holds the coordinates of `beta * basis[j]`.
pub fn regular_representation(tower: &FieldTower, beta: Elem, basis: &[Elem]) -> Result<GfMatrix> {
    let mid = tower.mid();
    let m = tower.m() as usize;
    if basis.len() != m {
        return Err(Error::DimensionMismatch(format!("{} basis vectors for dimension {m}", basis.len())));
    }
    if beta >= mid.order() {
        return Err(Error::Parse(format!("{beta} is not an element of {}", mid.tag())));
    }
    let images: Vec<Elem> = basis.iter().map(|&b| mid.mul(beta, b)).collect();
    coordinates_in_basis(tower.base(), |x, out| tower.mid_basis().coords_into(x, out), m, basis, &images)
}

/// Solves for the matrix whose columns are the coordinates of `images` in
/// the ordered basis `basis`, both expressed through `coords`.
fn coordinates_in_basis(
    base: &Arc<Field>,
    coords: impl Fn(Elem, &mut [Elem]),
    dim: usize,
    basis: &[Elem],
    images: &[Elem],
) -> Result<GfMatrix> {
    let mut basis_cols = vec![0; dim * dim];
    let mut image_cols = vec![0; dim * dim];
    let mut buf = vec![0; dim];
    for j in 0..dim {
        coords(basis[j], &mut buf);
        for i in 0..dim {
            basis_cols[i * dim + j] = buf[i];
        }
        coords(images[j], &mut buf);
        for i in 0..dim {
            image_cols[i * dim + j] = buf[i];
        }
    }
    let inv = linear::inverse(base, &basis_cols, dim).ok_or(Error::DependentBasis)?;
    let data = crate::linalg::matrix::mat_mul(base, &inv, &image_cols, dim, dim, dim);
    Ok(GfMatrix::from_raw(base.clone(), dim, dim, data))
}

/// Matrix over `F_q` of `x -> alpha * x` on the top field in an ordered
/// `F_q`-basis of `mn` top elements.
pub fn matrix_of_mult_in_basis(tower: &FieldTower, alpha: Elem, basis: &[Elem]) -> Result<GfMatrix> {
    let top = tower.top();
    let d = tower.dim();
    if basis.len() != d {
        return Err(Error::DimensionMismatch(format!("{} basis vectors for dimension {d}", basis.len())));
    }
    let images: Vec<Elem> = basis.iter().map(|&b| top.mul(alpha, b)).collect();
    coordinates_in_basis(tower.base(), |x, out| tower.top_basis().coords_into(x, out), d, basis, &images)
}

/// `B_alpha(v_1, ..., v_m) = (v_1, ..., v_m, alpha v_1, ..., alpha^(n-1) v_m)`.
pub fn block_basis(tower: &FieldTower, alpha: Elem, vs: &[Elem]) -> Vec<Elem> {
    let top = tower.top();
    let mut out = Vec::with_capacity(vs.len() * tower.n() as usize);
    let mut layer = vs.to_vec();
    for _ in 0..tower.n() {
        out.extend_from_slice(&layer);
        for v in layer.iter_mut() {
            *v = top.mul(alpha, *v);
        }
    }
    out
}

/// Constructs a block companion matrix with characteristic polynomial `f`:
/// take the least root `alpha` of `f` in the top field, its minimal
/// polynomial `g = X^n - sum beta_i X^i` over the mid field, and put the
/// regular representations of the `beta_i` in the last block column.
pub fn lift_to_block_companion(tower: &FieldTower, f: &GfPoly) -> Result<GfMatrix> {
    let d = tower.dim();
    if **f.field() != **tower.base() {
        return Err(Error::FieldMismatch);
    }
    if f.degree() != Some(d) {
        return Err(Error::WrongDegree(f.to_text(), d));
    }
    if !f.is_irreducible()? {
        return Err(Error::NotIrreducible(f.to_text()));
    }
    let f = f.monic();
    let alpha = *tower
        .roots_in_top(&f)?
        .first()
        .ok_or_else(|| Error::Internal(format!("{} has no root in the top field", f.to_text())))?;
    let g = tower.min_poly_over_mid(alpha)?;
    let n = tower.n() as usize;
    if g.degree() != Some(n) {
        return Err(Error::Internal(format!("minimal polynomial over the mid field has degree {:?}", g.degree())));
    }
    let mid = tower.mid();
    let basis = canonical_mid_basis(tower);
    let blocks = g.coeffs()[..n]
        .iter()
        .map(|&c| regular_representation(tower, mid.neg(c), &basis))
        .collect::<Result<Vec<_>>>()?;
    assemble_block_companion(&BlockCompanionSpec { m: tower.m() as usize, n, blocks })
}
