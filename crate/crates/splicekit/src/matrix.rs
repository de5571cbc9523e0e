//! Exact dense linear algebra over the integers and rationals.
//!
//! Everything here is sign-exact: determinants via fraction-free Bareiss
//! elimination, inverses via rational Gauss-Jordan, and Smith normal form
//! with both unimodular transforms retained.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    /// Submatrix given by explicit row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut m = Self::zero(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let pivot = (k + 1..n).find(|&i| !m[(i, k)].is_zero());
                match pivot {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Determinant by cofactor expansion along the first row.
    /// Exponential; kept as an independent cross-check for small matrices.
    pub fn det_cofactor(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return self[(0, 0)].clone();
        }
        let mut acc = BigInt::zero();
        let sub_rows: Vec<usize> = (1..n).collect();
        for j in 0..n {
            if self[(0, j)].is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = self.submatrix(&sub_rows, &sub_cols).det_cofactor();
            let term = &self[(0, j)] * minor;
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// Determinants of the top-left k-by-k blocks, k = 1..=n.
    pub fn leading_principal_minors(&self) -> Vec<BigInt> {
        assert!(self.is_square());
        let idx: Vec<usize> = (0..self.rows).collect();
        (1..=self.rows)
            .map(|k| self.submatrix(&idx[..k], &idx[..k]).det())
            .collect()
    }

    pub fn negate(&self) -> IntMatrix {
        let mut m = self.clone();
        for v in &mut m.data {
            *v = -std::mem::take(v);
        }
        m
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Dense matrix of arbitrary-precision rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Inverse by Gauss-Jordan elimination; None if singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a[(i, col)].is_zero())?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &p;
                inv[(col, j)] = &inv[(col, j)] / &p;
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in 0..n {
                    let s = &f * &a[(col, j)];
                    a[(i, j)] = &a[(i, j)] - s;
                    let s = &f * &inv[(col, j)];
                    inv[(i, j)] = &inv[(i, j)] - s;
                }
            }
        }
        Some(inv)
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] = &out[(i, j)] + add;
                }
            }
        }
        out
    }

    /// Pivots of an LDL-style symmetric elimination, in order.
    /// For a symmetric matrix M, M is positive definite iff all pivots
    /// exist and are positive.
    pub fn ldl_pivots(&self) -> Option<Vec<BigRational>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut pivots = Vec::with_capacity(n);
        for k in 0..n {
            let p = a[(k, k)].clone();
            if p.is_zero() {
                return None;
            }
            pivots.push(p.clone());
            for i in k + 1..n {
                let f = &a[(i, k)] / &p;
                for j in k..n {
                    let s = &f * &a[(k, j)];
                    a[(i, j)] = &a[(i, j)] - s;
                }
            }
        }
        Some(pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact integer matrix if every entry has denominator 1.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            if !x.is_integer() {
                return None;
            }
            data.push(x.to_integer());
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form `u * a * v = s` with `u`, `v` unimodular and `s`
/// diagonal with nonnegative entries satisfying s_1 | s_2 | ...
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.nrows().min(self.s.ncols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }
}

/// Pivot choice: smallest-magnitude nonzero entry in the trailing
/// submatrix, ties broken by row index then column index.
fn pick_pivot(m: &IntMatrix, start: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in start..m.nrows() {
        for j in start..m.ncols() {
            if m[(i, j)].is_zero() {
                continue;
            }
            match &best {
                Some((bi, bj)) => {
                    let (bi, bj) = (*bi, *bj);
                    let cur = m[(i, j)].abs();
                    let b = m[(bi, bj)].abs();
                    if cur < b {
                        best = Some((i, j));
                    }
                }
                None => best = Some((i, j)),
            }
        }
    }
    best
}

pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let mut s = a.clone();
    let mut u = IntMatrix::identity(a.nrows());
    let mut v = IntMatrix::identity(a.ncols());
    let n = a.nrows().min(a.ncols());

    let swap_rows = |s: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize| {
        s.swap_rows(a, b);
        u.swap_rows(a, b);
    };
    let swap_cols = |s: &mut IntMatrix, v: &mut IntMatrix, a: usize, b: usize| {
        for i in 0..s.nrows() {
            let (x, y) = (s[(i, a)].clone(), s[(i, b)].clone());
            s[(i, a)] = y;
            s[(i, b)] = x;
        }
        for i in 0..v.nrows() {
            let (x, y) = (v[(i, a)].clone(), v[(i, b)].clone());
            v[(i, a)] = y;
            v[(i, b)] = x;
        }
    };

    for t in 0..n {
        loop {
            let (pi, pj) = match pick_pivot(&s, t) {
                Some(p) => p,
                None => return finish(s, u, v),
            };
            if pi != t {
                swap_rows(&mut s, &mut u, t, pi);
            }
            if pj != t {
                swap_cols(&mut s, &mut v, t, pj);
            }

            let mut dirty = false;
            // clear column t below the pivot
            for i in t + 1..s.nrows() {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = &s[(i, t)] / &s[(t, t)];
                if !q.is_zero() {
                    for j in 0..s.ncols() {
                        let sub = &q * &s[(t, j)];
                        s[(i, j)] -= sub;
                    }
                    for j in 0..u.ncols() {
                        let sub = &q * &u[(t, j)];
                        u[(i, j)] -= sub;
                    }
                }
                if !s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..s.ncols() {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = &s[(t, j)] / &s[(t, t)];
                if !q.is_zero() {
                    for i in 0..s.nrows() {
                        let sub = &q * &s[(i, t)];
                        s[(i, j)] -= sub;
                    }
                    for i in 0..v.nrows() {
                        let sub = &q * &v[(i, t)];
                        v[(i, j)] -= sub;
                    }
                }
                if !s[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            let row_clear = (t + 1..s.ncols()).all(|j| s[(t, j)].is_zero());
            let col_clear = (t + 1..s.nrows()).all(|i| s[(i, t)].is_zero());
            if !(row_clear && col_clear) {
                continue;
            }
            // enforce divisibility of the trailing block by the pivot
            let mut fixed = true;
            'outer: for i in t + 1..s.nrows() {
                for j in t + 1..s.ncols() {
                    if (&s[(i, j)] % &s[(t, t)]).is_zero() {
                        continue;
                    }
                    for jj in 0..s.ncols() {
                        let add = s[(i, jj)].clone();
                        s[(t, jj)] += add;
                    }
                    for jj in 0..u.ncols() {
                        let add = u[(i, jj)].clone();
                        u[(t, jj)] += add;
                    }
                    fixed = false;
                    break 'outer;
                }
            }
            if fixed {
                break;
            }
        }
    }
    finish(s, u, v)
}

/// Normalize diagonal signs to nonnegative.
fn finish(mut s: IntMatrix, mut u: IntMatrix, v: IntMatrix) -> Snf {
    let n = s.nrows().min(s.ncols());
    for t in 0..n {
        if s[(t, t)].is_negative() {
            for j in 0..s.ncols() {
                s[(t, j)] = -std::mem::take(&mut s[(t, j)]);
            }
            for j in 0..u.ncols() {
                u[(t, j)] = -std::mem::take(&mut u[(t, j)]);
            }
        }
    }
    Snf { u, s, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn det_small() {
        let m = IntMatrix::from_i64(&[&[-2]]);
        assert_eq!(m.det(), big(-2));
        let m = IntMatrix::from_i64(&[&[-2, 1], &[1, -3]]);
        assert_eq!(m.det(), big(5));
        let a3 = IntMatrix::from_i64(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]]);
        assert_eq!(a3.det(), big(-4));
    }

    #[test]
    fn det_matches_cofactor() {
        let m = IntMatrix::from_i64(&[
            &[3, 1, 4, 1],
            &[5, 9, 2, 6],
            &[5, 3, 5, 8],
            &[9, 7, 9, 3],
        ]);
        assert_eq!(m.det(), m.det_cofactor());
    }

    #[test]
    fn det_singular() {
        let m = IntMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.det(), big(0));
    }

    #[test]
    fn leading_minors() {
        let m = IntMatrix::from_i64(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(m.leading_principal_minors(), vec![big(2), big(3), big(4)]);
    }

    #[test]
    fn rational_inverse_roundtrip() {
        let m = IntMatrix::from_i64(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]]);
        let inv = m.to_rational().inverse().unwrap();
        let prod = m.to_rational().mul(&inv);
        assert_eq!(prod, RatMatrix::identity(3));
    }

    #[test]
    fn ldl_positive_definite() {
        let m = IntMatrix::from_i64(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let pivots = m.to_rational().ldl_pivots().unwrap();
        assert!(pivots.iter().all(|p| p > &BigRational::zero()));
        let neg = m.negate();
        let pivots = neg.to_rational().ldl_pivots().unwrap();
        assert!(pivots.iter().all(|p| p < &BigRational::zero()));
    }

    #[test]
    fn snf_diagonal_and_transforms() {
        let cases: Vec<IntMatrix> = vec![
            IntMatrix::from_i64(&[&[-2]]),
            IntMatrix::from_i64(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]]),
            IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]),
            IntMatrix::from_i64(&[&[-2, 1, 1, 1], &[1, -2, 0, 0], &[1, 0, -2, 0], &[1, 0, 0, -2]]),
        ];
        for m in cases {
            let snf = smith_normal_form(&m);
            assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s);
            // u, v unimodular
            assert_eq!(snf.u.det().abs(), big(1));
            assert_eq!(snf.v.det().abs(), big(1));
            let d = snf.diagonal();
            for w in d.windows(2) {
                if !w[1].is_zero() || w[0].is_zero() {
                    assert!((&w[1] % &w[0]).is_zero() || w[0].is_zero());
                }
            }
            // product of diagonal = |det|
            let prod: BigInt = d.iter().product();
            assert_eq!(prod, m.det().abs());
        }
    }

    #[test]
    fn snf_d4_group() {
        let d4 = IntMatrix::from_i64(&[
            &[-2, 1, 1, 1],
            &[1, -2, 0, 0],
            &[1, 0, -2, 0],
            &[1, 0, 0, -2],
        ]);
        let snf = smith_normal_form(&d4);
        let nontrivial: Vec<BigInt> = snf
            .diagonal()
            .into_iter()
            .filter(|d| d > &BigInt::one())
            .collect();
        assert_eq!(nontrivial, vec![big(2), big(2)]);
    }
}
