use crate::error::Result;
use crate::gf::field::{Elem, Field};
use crate::gf::poly::{self, GfPoly};
use crate::linalg::GfMatrix;

/// `det(XI - T)` via reduction to upper Hessenberg form.
pub fn char_poly(t: &GfMatrix) -> Result<GfPoly> {
    let n = t.require_square()?;
    let coeffs = char_poly_in_place(t.field(), &mut t.data().to_vec(), n);
    GfPoly::new(t.field().clone(), coeffs)
}

/// Characteristic polynomial of the `n x n` matrix in `h`; overwrites `h`
/// with a similar upper Hessenberg matrix.
pub fn char_poly_in_place(k: &Field, h: &mut [Elem], n: usize) -> Vec<Elem> {
    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&i| h[i * n + c] != 0) else {
            continue;
        };
        if piv != c + 1 {
            for j in 0..n {
                h.swap(piv * n + j, (c + 1) * n + j);
            }
            for i in 0..n {
                h.swap(i * n + piv, i * n + c + 1);
            }
        }
        let inv = k.inv(h[(c + 1) * n + c]).expect("pivot is nonzero");
        for r in c + 2..n {
            let u = k.mul(h[r * n + c], inv);
            if u == 0 {
                continue;
            }
            // row_r -= u * row_{c+1}, then col_{c+1} += u * col_r
            for j in 0..n {
                let v = k.mul(u, h[(c + 1) * n + j]);
                h[r * n + j] = k.sub(h[r * n + j], v);
            }
            for i in 0..n {
                let v = k.mul(u, h[i * n + r]);
                h[i * n + c + 1] = k.add(h[i * n + c + 1], v);
            }
        }
    }
    let mut polys: Vec<Vec<Elem>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for col in 0..n {
        let mut next = poly::mul(k, &polys[col], &[k.neg(h[col * n + col]), 1]);
        let mut t = 1;
        for i in (0..col).rev() {
            t = k.mul(t, h[(i + 1) * n + i]);
            if t == 0 {
                break;
            }
            let c = k.mul(h[i * n + col], t);
            if c != 0 {
                next = poly::sub(k, &next, &poly::scale(k, &polys[i], c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}
