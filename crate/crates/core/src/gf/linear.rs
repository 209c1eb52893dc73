//! Gaussian elimination kernels on row-major element grids.

use crate::gf::field::{Elem, Field};

/// Reduces `rows x cols` in place to reduced row echelon form and returns
/// the pivot columns.
pub fn rref(k: &Field, data: &mut [Elem], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = k.inv(data[r * cols + c]).expect("pivot is nonzero");
        for j in c..cols {
            data[r * cols + j] = k.mul(data[r * cols + j], inv);
        }
        for i in 0..rows {
            let f = data[i * cols + c];
            if i == r || f == 0 {
                continue;
            }
            for j in c..cols {
                let v = k.mul(f, data[r * cols + j]);
                data[i * cols + j] = k.sub(data[i * cols + j], v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by forward elimination; destroys `data`.
pub fn rank_in_place(k: &Field, data: &mut [Elem], rows: usize, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in c..cols {
                data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = k.inv(data[r * cols + c]).expect("pivot is nonzero");
        for i in r + 1..rows {
            let f = data[i * cols + c];
            if f == 0 {
                continue;
            }
            let f = k.mul(f, inv);
            for j in c..cols {
                let v = k.mul(f, data[r * cols + j]);
                data[i * cols + j] = k.sub(data[i * cols + j], v);
            }
        }
        r += 1;
    }
    r
}

/// Determinant by elimination; destroys `data`.
pub fn det_in_place(k: &Field, data: &mut [Elem], n: usize) -> Elem {
    let mut det = 1;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| data[i * n + c] != 0) else {
            return 0;
        };
        if pr != c {
            for j in c..n {
                data.swap(pr * n + j, c * n + j);
            }
            det = k.neg(det);
        }
        let pivot = data[c * n + c];
        det = k.mul(det, pivot);
        let inv = k.inv(pivot).expect("pivot is nonzero");
        for i in c + 1..n {
            let f = data[i * n + c];
            if f == 0 {
                continue;
            }
            let f = k.mul(f, inv);
            for j in c..n {
                let v = k.mul(f, data[c * n + j]);
                data[i * n + j] = k.sub(data[i * n + j], v);
            }
        }
    }
    det
}

/// Inverse of an `n x n` matrix, or `None` if singular.
pub fn inverse(k: &Field, data: &[Elem], n: usize) -> Option<Vec<Elem>> {
    let w = 2 * n;
    let mut aug = vec![0; n * w];
    for i in 0..n {
        aug[i * w..i * w + n].copy_from_slice(&data[i * n..(i + 1) * n]);
        aug[i * w + n + i] = 1;
    }
    let pivots = rref(k, &mut aug, n, w);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut out = vec![0; n * n];
    for i in 0..n {
        out[i * n..(i + 1) * n].copy_from_slice(&aug[i * w + n..(i + 1) * w]);
    }
    Some(out)
}

/// Row-major `rows x cols` matrix times a column vector.
pub fn mat_vec(k: &Field, data: &[Elem], rows: usize, cols: usize, v: &[Elem]) -> Vec<Elem> {
    (0..rows)
        .map(|i| {
            data[i * cols..(i + 1) * cols]
                .iter()
                .zip(v)
                .fold(0, |acc, (&a, &b)| k.add(acc, k.mul(a, b)))
        })
        .collect()
}
