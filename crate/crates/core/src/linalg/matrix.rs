use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::field::{Elem, Field};
use crate::gf::linear;

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct GfMatrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GfMatrix({})", self.to_text())
    }
}

impl GfMatrix {
    pub fn from_vec(field: Arc<Field>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(&bad) = data.iter().find(|&&x| x >= field.order()) {
            return Err(Error::Parse(format!("entry {bad} outside {}", field.tag())));
        }
        Ok(GfMatrix { field, rows, cols, data })
    }

    pub fn from_rows(field: Arc<Field>, rows: &[Vec<Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::from_vec(field, rows.len(), cols, rows.concat())
    }

    pub fn zeros(field: Arc<Field>, rows: usize, cols: usize) -> Self {
        GfMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Arc<Field>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub(crate) fn from_raw(field: Arc<Field>, rows: usize, cols: usize, data: Vec<Elem>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        GfMatrix { field, rows, cols, data }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && is_identity(&self.data, self.rows)
    }

    pub fn mul(&self, other: &GfMatrix) -> Result<GfMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = mat_mul(&self.field, &self.data, &other.data, self.rows, self.cols, other.cols);
        Ok(GfMatrix::from_raw(self.field.clone(), self.rows, other.cols, data))
    }

    pub fn add(&self, other: &GfMatrix) -> Result<GfMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| k.add(a, b)).collect();
        Ok(GfMatrix::from_raw(k.clone(), self.rows, self.cols, data))
    }

    pub fn scale(&self, c: Elem) -> GfMatrix {
        let k = &self.field;
        let data = self.data.iter().map(|&a| k.mul(a, c)).collect();
        GfMatrix::from_raw(k.clone(), self.rows, self.cols, data)
    }

    pub fn pow(&self, exp: u64) -> Result<GfMatrix> {
        let n = self.require_square()?;
        Ok(GfMatrix::from_raw(self.field.clone(), n, n, mat_pow(&self.field, &self.data, n, exp)))
    }

    pub fn det(&self) -> Result<Elem> {
        let n = self.require_square()?;
        Ok(linear::det_in_place(&self.field, &mut self.data.clone(), n))
    }

    pub fn rank(&self) -> usize {
        linear::rank_in_place(&self.field, &mut self.data.clone(), self.rows, self.cols)
    }

    pub fn inverse(&self) -> Result<GfMatrix> {
        let n = self.require_square()?;
        let data = linear::inverse(&self.field, &self.data, n).ok_or(Error::Singular)?;
        Ok(GfMatrix::from_raw(self.field.clone(), n, n, data))
    }

    /// Submatrix of `h x w` entries starting at `(r, c)`.
    pub fn block(&self, r: usize, c: usize, h: usize, w: usize) -> GfMatrix {
        let mut data = Vec::with_capacity(h * w);
        for i in r..r + h {
            data.extend_from_slice(&self.data[i * self.cols + c..i * self.cols + c + w]);
        }
        GfMatrix::from_raw(self.field.clone(), h, w, data)
    }

    /// `"p^e:rows:cols:a,b;c,d"`, entries in canonical encoding.
    pub fn to_text(&self) -> String {
        let body = self
            .data
            .chunks(self.cols)
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";");
        format!("{}:{}:{}:{}", self.field.tag(), self.rows, self.cols, body)
    }

    pub fn parse(field: Arc<Field>, s: &str) -> Result<GfMatrix> {
        let parts: Vec<&str> = s.trim().splitn(4, ':').collect();
        let [tag, rows, cols, body] = parts[..] else {
            return Err(Error::Parse(format!("expected p^e:rows:cols:entries, got {s:?}")));
        };
        if tag != field.tag() {
            return Err(Error::Parse(format!("field tag {tag:?} does not match {}", field.tag())));
        }
        let parse_usize = |t: &str| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}")));
        let (rows, cols) = (parse_usize(rows)?, parse_usize(cols)?);
        let grid = body
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|t| t.trim().parse::<Elem>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if grid.len() != rows || grid.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse(format!("body does not match {rows}x{cols}")));
        }
        Self::from_vec(field, rows, cols, grid.concat())
    }
}

pub(crate) fn is_identity(data: &[Elem], n: usize) -> bool {
    data.iter().enumerate().all(|(idx, &x)| x == (idx / n == idx % n) as Elem)
}

pub(crate) fn mat_mul(k: &Field, a: &[Elem], b: &[Elem], n: usize, inner: usize, m: usize) -> Vec<Elem> {
    let mut out = vec![0; n * m];
    for i in 0..n {
        for t in 0..inner {
            let x = a[i * inner + t];
            if x == 0 {
                continue;
            }
            let row = &b[t * m..(t + 1) * m];
            let dst = &mut out[i * m..(i + 1) * m];
            for (o, &y) in dst.iter_mut().zip(row) {
                *o = k.add(*o, k.mul(x, y));
            }
        }
    }
    out
}

pub(crate) fn mat_pow(k: &Field, a: &[Elem], n: usize, mut exp: u64) -> Vec<Elem> {
    let mut acc = vec![0; n * n];
    for i in 0..n {
        acc[i * n + i] = 1;
    }
    let mut base = a.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mat_mul(k, &acc, &base, n, n, n);
        }
        exp >>= 1;
        if exp > 0 {
            base = mat_mul(k, &base, &base, n, n, n);
        }
    }
    acc
}
