//! Exact integer matrix algebra over checked 64-bit integers.
//!
//! Intermediate products are formed in `i128` and narrowed back with a
//! range check, so every result is either exact or an [`Error::Overflow`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

#[inline]
pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Non-negative gcd. `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> Result<i64> {
    let mut a = a.unsigned_abs();
    let mut b = b.unsigned_abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    i64::try_from(a).map_err(|_| Error::Overflow)
}

pub fn lcm(a: i64, b: i64) -> Result<i64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    let g = gcd(a, b)?;
    mul((a / g).abs(), b.abs())
}

/// Bezout coefficients: `p*x + q*y == g` with `g = gcd(x, y) >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bezout {
    pub g: i64,
    pub p: i64,
    pub q: i64,
}

/// Extended Euclid. Fails only when the gcd itself is `2^63`.
pub fn ext_gcd(x: i64, y: i64) -> Result<Bezout> {
    let (mut r0, mut r1) = (x as i128, y as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    if r0 == 0 {
        // x = y = 0
        return Ok(Bezout { g: 0, p: 0, q: 0 });
    }
    Ok(Bezout {
        g: narrow(r0)?,
        p: narrow(s0)?,
        q: narrow(t0)?,
    })
}

/// Dense row-major integer matrix.
///
/// Field order matters: the derived `Ord` compares shapes first and then
/// entries in row-major order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.data.chunks(self.cols.max(1)))
            .finish()
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    /// Builds a matrix from its rows; all rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns<C: AsRef<[i64]>>(columns: &[C]) -> Result<Self> {
        Ok(Self::from_rows(columns)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i128 = 0;
                for k in 0..self.cols {
                    acc = acc
                        .checked_add(self[(i, k)] as i128 * other[(k, j)] as i128)
                        .ok_or(Error::Overflow)?;
                }
                out[(i, j)] = narrow(acc)?;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        (0..self.rows)
            .map(|i| {
                let mut acc: i128 = 0;
                for (k, &x) in v.iter().enumerate() {
                    acc = acc
                        .checked_add(self[(i, k)] as i128 * x as i128)
                        .ok_or(Error::Overflow)?;
                }
                narrow(acc)
            })
            .collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<i64> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[idx(k, k)] == 0 {
                let Some(p) = (k + 1..n).find(|&i| a[idx(i, k)] != 0) else {
                    return Ok(0);
                };
                for j in 0..n {
                    a.swap(idx(k, j), idx(p, j));
                }
                sign = -sign;
            }
            let pivot = a[idx(k, k)];
            for i in k + 1..n {
                for j in k + 1..n {
                    let lhs = pivot.checked_mul(a[idx(i, j)]).ok_or(Error::Overflow)?;
                    let rhs = a[idx(i, k)]
                        .checked_mul(a[idx(k, j)])
                        .ok_or(Error::Overflow)?;
                    // exact by Sylvester's identity
                    a[idx(i, j)] = lhs.checked_sub(rhs).ok_or(Error::Overflow)? / prev;
                }
                a[idx(i, k)] = 0;
            }
            prev = pivot;
        }
        narrow(sign * a[idx(n - 1, n - 1)])
    }

    /// Transposed cofactor matrix: `adj(m) * m = det(m) * I`.
    pub fn adjugate(&self) -> Result<IntMatrix> {
        self.require_square()?;
        let n = self.rows;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut adj = Self::zeros(n, n);
        let mut minor = Self::zeros(n - 1, n - 1);
        for i in 0..n {
            for j in 0..n {
                // minor deleting row i, column j
                for (r, si) in (0..n).filter(|&si| si != i).enumerate() {
                    for (c, sj) in (0..n).filter(|&sj| sj != j).enumerate() {
                        minor[(r, c)] = self[(si, sj)];
                    }
                }
                let d = minor.det()?;
                adj[(j, i)] = if (i + j) % 2 == 0 {
                    d
                } else {
                    d.checked_neg().ok_or(Error::Overflow)?
                };
            }
        }
        Ok(adj)
    }

    /// Inverse of a unimodular matrix (integral by construction).
    pub fn unimodular_inverse(&self) -> Result<IntMatrix> {
        let d = self.det()?;
        match d {
            1 => self.adjugate(),
            -1 => {
                let mut adj = self.adjugate()?;
                for x in adj.data.iter_mut() {
                    *x = x.checked_neg().ok_or(Error::Overflow)?;
                }
                Ok(adj)
            }
            0 => Err(Error::Singular),
            _ => Err(Error::InvalidInput("matrix is not unimodular")),
        }
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.det()?.abs() == 1)
    }

    /// Row-style Hermite normal form: `u * self = h`, `h` upper triangular.
    pub fn row_hnf(&self) -> Result<HnfResult> {
        self.require_square()?;
        let n = self.rows;
        let mut h = self.clone();
        let mut u = Self::identity(n);
        for j in 0..n {
            for i in j + 1..n {
                if h[(i, j)] == 0 {
                    continue;
                }
                let Bezout { g, p, q } = ext_gcd(h[(j, j)], h[(i, j)])?;
                let a = h[(j, j)] / g;
                let b = h[(i, j)] / g;
                // [[p, q], [-b, a]] has determinant p*a + q*b = 1
                h.combine_rows(j, i, [p, q, -b, a])?;
                u.combine_rows(j, i, [p, q, -b, a])?;
            }
            if h[(j, j)] == 0 {
                return Err(Error::Singular);
            }
            if h[(j, j)] < 0 {
                h.negate_row(j)?;
                u.negate_row(j)?;
            }
            let pivot = h[(j, j)];
            for i in 0..j {
                let k = h[(i, j)].div_euclid(pivot);
                if k != 0 {
                    h.add_row_multiple(i, j, -k)?;
                    u.add_row_multiple(i, j, -k)?;
                }
            }
        }
        Ok(HnfResult { h, u })
    }

    /// Replaces rows (r, s) by (c00*r + c01*s, c10*r + c11*s).
    fn combine_rows(&mut self, r: usize, s: usize, c: [i64; 4]) -> Result<()> {
        for j in 0..self.cols {
            let x = self[(r, j)] as i128;
            let y = self[(s, j)] as i128;
            let nr = ((c[0] as i128) * x).checked_add((c[1] as i128) * y);
            let ns = ((c[2] as i128) * x).checked_add((c[3] as i128) * y);
            let (nr, ns) = (nr.ok_or(Error::Overflow)?, ns.ok_or(Error::Overflow)?);
            self[(r, j)] = narrow(nr)?;
            self[(s, j)] = narrow(ns)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) -> Result<()> {
        for j in 0..self.cols {
            self[(r, j)] = self[(r, j)].checked_neg().ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    /// row[target] += k * row[source]
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, k: i64) -> Result<()> {
        for j in 0..self.cols {
            let v = self[(target, j)] as i128 + k as i128 * self[(source, j)] as i128;
            self[(target, j)] = narrow(v)?;
        }
        Ok(())
    }

    pub(crate) fn swap_rows(&mut self, r: usize, s: usize) {
        for j in 0..self.cols {
            self.data.swap(r * self.cols + j, s * self.cols + j);
        }
    }

    pub(crate) fn flip_row(&mut self, r: usize) -> Result<()> {
        self.negate_row(r)
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Output of [`IntMatrix::row_hnf`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfResult {
    /// Upper triangular, positive diagonal, `0 <= h[i][j] < h[j][j]` for `i < j`.
    pub h: IntMatrix,
    /// Unimodular with `u * input = h`.
    pub u: IntMatrix,
}

/// Elementary unimodular row operation, used to build random elements of
/// `GL_d(Z)` as words in shears, swaps and sign flips.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementaryOp {
    /// row[target] += k * row[source]
    Shear {
        target: usize,
        source: usize,
        k: i64,
    },
    Swap(usize, usize),
    Flip(usize),
}

impl ElementaryOp {
    pub fn apply(&self, m: &mut IntMatrix) -> Result<()> {
        match *self {
            ElementaryOp::Shear { target, source, k } => m.add_row_multiple(target, source, k),
            ElementaryOp::Swap(r, s) => {
                m.swap_rows(r, s);
                Ok(())
            }
            ElementaryOp::Flip(r) => m.flip_row(r),
        }
    }
}

/// Product of elementary operations applied to the identity, in order.
pub fn unimodular_from_word(n: usize, word: &[ElementaryOp]) -> Result<IntMatrix> {
    let mut m = IntMatrix::identity(n);
    for op in word {
        op.apply(&mut m)?;
    }
    Ok(m)
}

/// Incrementally maintained row-echelon basis of a lattice in `Z^n`,
/// used to compute the rank of the lattice spanned by a stream of vectors.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    dim: usize,
    // each row primitive with a positive pivot; pivots strictly increasing
    rows: Vec<(usize, Vec<i128>)>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`; returns whether it raised the rank.
    pub fn insert(&mut self, v: &[i64]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if self.rows.len() == self.dim {
            return Ok(false);
        }
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (pivot, row) in &self.rows {
            let a = w[*pivot];
            if a == 0 {
                continue;
            }
            let b = row[*pivot];
            // w <- b*w - a*row clears the pivot column
            for j in 0..self.dim {
                w[j] = b
                    .checked_mul(w[j])
                    .and_then(|x| x.checked_sub(a.checked_mul(row[j])?))
                    .ok_or(Error::Overflow)?;
            }
            normalize(&mut w);
        }
        let Some(pivot) = w.iter().position(|&x| x != 0) else {
            return Ok(false);
        };
        if w[pivot] < 0 {
            w.iter_mut().for_each(|x| *x = -*x);
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, w));
        Ok(true)
    }
}

fn normalize(w: &mut [i128]) {
    let g = w.iter().fold(0u128, |g, &x| {
        let (mut a, mut b) = (g, x.unsigned_abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    });
    if g > 1 {
        let g = g as i128;
        w.iter_mut().for_each(|x| *x /= g);
    }
}
