//! Dense matrices over GF(4).
//!
//! Storage is row-major. Empty matrices (zero rows or zero columns) are legal
//! and behave as neutral elements for stacking, so block layouts degenerate
//! cleanly when a block family is empty.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf4::Gf4;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat4 {
    rows: usize,
    cols: usize,
    data: Vec<Gf4>,
}

impl Mat4 {
    pub fn zeros(rows: usize, cols: usize) -> Mat4 {
        Mat4 {
            rows,
            cols,
            data: vec![Gf4::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat4 {
        let mut m = Mat4::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gf4::ONE);
        }
        m
    }

    /// The all-ones matrix; `ones(l, 1)` is the column vector `1_l`.
    pub fn ones(rows: usize, cols: usize) -> Mat4 {
        Mat4 {
            rows,
            cols,
            data: vec![Gf4::ONE; rows * cols],
        }
    }

    /// Builds a matrix from explicit rows. `cols` fixes the width so that a
    /// 0×c matrix can be expressed.
    pub fn from_rows(rows: &[Vec<Gf4>], cols: usize) -> Result<Mat4> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    r.len(),
                    cols
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Mat4 {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Parses rows of whitespace-separated symbols, one row per line.
    /// Blank lines are skipped. Intended for matrices written in source.
    pub fn parse(text: &str) -> Result<Mat4> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| {
                    Gf4::from_symbol(t).ok_or_else(|| Error::Parse {
                        line: lineno + 1,
                        msg: format!("bad symbol `{t}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let cols = rows.first().map_or(0, |r| r.len());
        Mat4::from_rows(&rows, cols)
    }

    /// A 1×n matrix.
    pub fn row_vector(v: &[Gf4]) -> Mat4 {
        Mat4 {
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Gf4 {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Gf4) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Gf4] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Gf4> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Gf4>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Mat4 {
        let mut t = Mat4::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat4) -> Result<Mat4> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat4::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(t, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Gf4]) -> Result<Vec<Gf4>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let mut out = vec![Gf4::ZERO; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.row(r)) {
                *o += a * x;
            }
        }
        Ok(out)
    }

    /// Matrix times column vector (`M · vᵀ`).
    pub fn apply(&self, v: &[Gf4]) -> Result<Vec<Gf4>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Gf4::ZERO, |acc, (&a, &b)| acc + a * b)
            })
            .collect())
    }

    /// Reduced row-echelon form and its pivot columns.
    ///
    /// The result keeps the input shape; zero rows sink to the bottom. Pivots
    /// are chosen leftmost-column first, taking the first nonzero row at or
    /// below the current position.
    pub fn rref(&self) -> (Mat4, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if !f.is_zero() {
                        m.add_scaled_row(i, r, f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M xᵀ = 0}` as the rows of a `(cols − rank) × cols` matrix.
    ///
    /// One basis vector per free column `f`: it has a 1 at `f`, zero at the
    /// other free columns, and the values forced at the pivot columns.
    pub fn right_kernel(&self) -> Mat4 {
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Mat4::zeros(free.len(), self.cols);
        for (row, &f) in free.iter().enumerate() {
            k.set(row, f, Gf4::ONE);
            for (i, &p) in pivots.iter().enumerate() {
                // characteristic 2: -x = x
                k.set(row, p, red.get(i, f));
            }
        }
        k
    }

    /// The nonzero rows of the rref: a canonical basis of the row space.
    pub fn row_basis(&self) -> Mat4 {
        let (red, pivots) = self.rref();
        red.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }

    /// True when both matrices have the same row space.
    pub fn same_row_space(&self, other: &Mat4) -> bool {
        self.cols == other.cols && self.row_basis() == other.row_basis()
    }

    pub fn kron(&self, b: &Mat4) -> Mat4 {
        let mut out = Mat4::zeros(self.rows * b.rows, self.cols * b.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..b.rows {
                    for q in 0..b.cols {
                        out.set(i * b.rows + p, j * b.cols + q, a * b.get(p, q));
                    }
                }
            }
        }
        out
    }

    /// Concatenates a grid of blocks. Every block in a grid row must share a
    /// row count and every block in a grid column a column count.
    pub fn assemble_blocks(layout: &[Vec<Mat4>]) -> Result<Mat4> {
        if layout.is_empty() {
            return Ok(Mat4::zeros(0, 0));
        }
        let ncols = layout[0].len();
        if layout.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged block grid".into()));
        }
        let widths: Vec<usize> = layout[0].iter().map(|b| b.cols).collect();
        let mut strips = Vec::with_capacity(layout.len());
        for (bi, brow) in layout.iter().enumerate() {
            let h = brow.first().map_or(0, |b| b.rows);
            for (bj, b) in brow.iter().enumerate() {
                if b.rows != h {
                    return Err(Error::Shape(format!(
                        "block ({bi},{bj}) has {} rows, expected {h}",
                        b.rows
                    )));
                }
                if b.cols != widths[bj] {
                    return Err(Error::Shape(format!(
                        "block ({bi},{bj}) has {} columns, expected {}",
                        b.cols, widths[bj]
                    )));
                }
            }
            strips.push(Mat4::hstack(brow)?);
        }
        Mat4::vstack(&strips)
    }

    pub fn vstack(parts: &[Mat4]) -> Result<Mat4> {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            if m.cols != cols {
                return Err(Error::Shape(format!(
                    "vstack: {} columns vs {}",
                    m.cols, cols
                )));
            }
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Ok(Mat4 { rows, cols, data })
    }

    pub fn hstack(parts: &[Mat4]) -> Result<Mat4> {
        let rows = parts.first().map_or(0, |m| m.rows);
        if parts.iter().any(|m| m.rows != rows) {
            return Err(Error::Shape("hstack: row counts differ".into()));
        }
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for m in parts {
                data.extend_from_slice(m.row(r));
            }
        }
        Ok(Mat4 { rows, cols, data })
    }

    /// Columns in the given order (0-based).
    pub fn select_columns(&self, idx: &[usize]) -> Mat4 {
        let mut out = Mat4::zeros(self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// All columns except those listed (0-based).
    pub fn delete_columns(&self, idx: &[usize]) -> Mat4 {
        let keep: Vec<usize> = (0..self.cols).filter(|c| !idx.contains(c)).collect();
        self.select_columns(&keep)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat4 {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Mat4 {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn delete_rows(&self, idx: &[usize]) -> Mat4 {
        let keep: Vec<usize> = (0..self.rows).filter(|r| !idx.contains(r)).collect();
        self.select_rows(&keep)
    }

    /// Column indices where row `r` is nonzero.
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        (0..self.cols).filter(|&c| !self.get(r, c).is_zero()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, f: Gf4) {
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x *= f;
        }
    }

    /// row[dst] += f · row[src]
    fn add_scaled_row(&mut self, dst: usize, src: usize, f: Gf4) {
        for c in 0..self.cols {
            let v = self.data[dst * self.cols + c] + f * self.data[src * self.cols + c];
            self.data[dst * self.cols + c] = v;
        }
    }
}

impl fmt::Debug for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat4 {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn hexacode() -> Mat4 {
        Mat4::parse("1 0 0 1 1 1\n0 1 0 1 w W\n0 0 1 1 W w").unwrap()
    }

    fn all_vectors(n: usize) -> Vec<Vec<Gf4>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    Gf4::ALL.into_iter().map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn rref_examples() {
        let (m, p) = Mat4::identity(3).rref();
        assert_eq!(m, Mat4::identity(3));
        assert_eq!(p, vec![0, 1, 2]);

        let (m, p) = hexacode().rref();
        assert_eq!(m, hexacode());
        assert_eq!(p, vec![0, 1, 2]);

        let (m, p) = Mat4::zeros(2, 3).rref();
        assert!(m.is_zero());
        assert!(p.is_empty());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(hexacode().rank(), 3);
        assert_eq!(Mat4::zeros(4, 4).rank(), 0);
        let h = Mat4::parse(
            "1 0 1 1 0 0 0 0 0
             0 1 1 w 0 0 0 0 0
             0 0 0 0 1 0 1 1 1
             0 0 0 0 0 1 1 w W",
        )
        .unwrap();
        assert_eq!(h.rank(), 4);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat4::identity(3).right_kernel().rows(), 0);
        let k = hexacode().right_kernel();
        assert_eq!(k.rows(), 3);
        assert!(hexacode().mul(&k.transpose()).unwrap().is_zero());

        // oracle: enumerate all of GF(4)^3 and collect the solutions
        let m = Mat4::parse("1 1 0").unwrap();
        let k = m.right_kernel();
        assert_eq!(k.rows(), 2);
        let solutions: Vec<_> = all_vectors(3)
            .into_iter()
            .filter(|v| m.apply(v).unwrap()[0].is_zero())
            .collect();
        assert_eq!(solutions.len(), 16);
        let span: std::collections::HashSet<Vec<Gf4>> = all_vectors(2)
            .into_iter()
            .map(|c| k.vec_mul(&c).unwrap())
            .collect();
        assert_eq!(span, solutions.into_iter().collect());
        let expected = Mat4::parse("1 1 0\n0 0 1").unwrap();
        assert!(k.same_row_space(&expected));
    }

    #[test]
    fn kron_examples() {
        assert_eq!(Mat4::identity(2).kron(&Mat4::identity(2)), Mat4::identity(4));
        let b = Mat4::parse("1 0 1 1 1\n0 1 1 w W").unwrap();
        let k = Mat4::identity(2).kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 10));
        assert_eq!(k.select_rows(&[0, 1]).select_columns(&[0, 1, 2, 3, 4]), b);
        assert!(k.select_rows(&[0, 1]).select_columns(&[5, 6, 7, 8, 9]).is_zero());
        assert_eq!(k.select_rows(&[2, 3]).select_columns(&[5, 6, 7, 8, 9]), b);
        let s = Mat4::parse("w").unwrap().kron(&Mat4::parse("1 1").unwrap());
        assert_eq!(s, Mat4::parse("w w").unwrap());
    }

    #[test]
    fn assemble_examples() {
        let i2 = Mat4::identity(2);
        let z = Mat4::zeros(2, 2);
        let m = Mat4::assemble_blocks(&[vec![i2.clone(), z.clone()], vec![z, i2.clone()]]).unwrap();
        assert_eq!(m, Mat4::identity(4));
        assert_eq!(Mat4::assemble_blocks(&[vec![i2.clone()]]).unwrap(), i2);

        let err = Mat4::assemble_blocks(&[vec![Mat4::zeros(2, 2), Mat4::zeros(3, 2)]]);
        assert!(matches!(err, Err(Error::Shape(_))));
    }

    #[test]
    fn empty_blocks_are_neutral() {
        let a = Mat4::identity(3);
        let e = Mat4::zeros(0, 3);
        assert_eq!(Mat4::vstack(&[e.clone(), a.clone(), e]).unwrap(), a);
        let e = Mat4::zeros(3, 0);
        assert_eq!(Mat4::hstack(&[a.clone(), e]).unwrap(), a);
    }

    fn arb_mat(max_r: usize, max_c: usize) -> impl Strategy<Value = Mat4> {
        (0..=max_r, 0..=max_c).prop_flat_map(|(r, c)| {
            proptest::collection::vec(0u8..4, r * c).prop_map(move |v| Mat4 {
                rows: r,
                cols: c,
                data: v.into_iter().map(|b| Gf4::from_bits(b).unwrap()).collect(),
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn rank_of_transpose(m in arb_mat(8, 8)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_is_annihilated(m in arb_mat(8, 8)) {
            let k = m.right_kernel();
            prop_assert_eq!(k.rows(), m.cols() - m.rank());
            prop_assert_eq!(k.rank(), k.rows());
            if m.rows() > 0 && k.rows() > 0 {
                prop_assert!(m.mul(&k.transpose()).unwrap().is_zero());
            }
        }

        #[test]
        fn rref_idempotent(m in arb_mat(8, 8)) {
            let (r1, p1) = m.rref();
            let (r2, p2) = r1.rref();
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1.clone(), p2);
            prop_assert!(p1.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn kron_rank_multiplies(a in arb_mat(3, 3), b in arb_mat(3, 3)) {
            prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
        }
    }
}
