//! Projective geometry PG(m−1, 4).
//!
//! Points are 1-dimensional subspaces of GF(4)^m written with the first
//! nonzero coordinate scaled to 1. Higher-dimensional subspaces are held as
//! canonical rref bases, so equal subspaces compare equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::mat4::Mat4;

const Q: u128 = 4;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PgPoint {
    coords: Vec<Gf4>,
}

impl PgPoint {
    /// Canonical representative of the span of `v`; `None` for the zero vector.
    pub fn normalize(v: &[Gf4]) -> Option<PgPoint> {
        let lead = v.iter().find(|x| !x.is_zero())?;
        let s = lead.inv().expect("nonzero");
        Some(PgPoint {
            coords: v.iter().map(|&x| x * s).collect(),
        })
    }

    pub fn coords(&self) -> &[Gf4] {
        &self.coords
    }

    pub fn m(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Debug for PgPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Display for PgPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All `(4^m − 1)/3` points of PG(m−1, 4) in lexicographic order.
pub fn enumerate_points(m: usize) -> Vec<PgPoint> {
    let mut out = Vec::new();
    let total = 1usize << (2 * m);
    for code in 0..total {
        // most significant digit is coordinate 0, so counting order is lexicographic
        let v: Vec<Gf4> = (0..m)
            .map(|i| Gf4::from_bits(((code >> (2 * (m - 1 - i))) & 3) as u8).unwrap())
            .collect();
        if v.iter().find(|x| !x.is_zero()) == Some(&Gf4::ONE) {
            out.push(PgPoint { coords: v });
        }
    }
    out
}

/// The five points `p, q, p+q, p+wq, p+w²q` of the line through `p` and `q`,
/// sorted.
pub fn line_points(p: &PgPoint, q: &PgPoint) -> Result<Vec<PgPoint>> {
    if p.m() != q.m() {
        return Err(Error::Shape("points from different spaces".into()));
    }
    if p == q {
        return Err(Error::DegenerateLine);
    }
    let mut pts = vec![p.clone(), q.clone()];
    for c in Gf4::NONZERO {
        let v: Vec<Gf4> = p.coords.iter().zip(&q.coords).map(|(&a, &b)| a + c * b).collect();
        pts.push(PgPoint::normalize(&v).expect("distinct points are independent"));
    }
    pts.sort();
    Ok(pts)
}

/// Dimension of the vector-space span of the points.
pub fn span_dim(points: &[PgPoint]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let rows: Vec<Vec<Gf4>> = points.iter().map(|p| p.coords.clone()).collect();
    Mat4::from_rows(&rows, first.m()).map_or(0, |m| m.rank())
}

/// `Π_{t=j}^{i−1} (q^m − q^t) / (q^i − q^t)`; the shared core of both
/// counting formulas. Returns 0 outside `0 ≤ j ≤ i ≤ m`.
fn quotient(m: usize, i: usize, j: usize) -> u128 {
    if j > i || i > m {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for t in j..i {
        num *= Q.pow(m as u32) - Q.pow(t as u32);
        den *= Q.pow(i as u32) - Q.pow(t as u32);
    }
    num / den
}

/// Number of `i`-dimensional subspaces of GF(4)^m (the Gaussian binomial).
pub fn count_subspaces(m: usize, i: usize) -> u128 {
    quotient(m, i, 0)
}

/// Number of `i`-dimensional subspaces of GF(4)^m containing a fixed
/// `j`-dimensional one.
pub fn count_subspaces_containing(m: usize, i: usize, j: usize) -> u128 {
    quotient(m, i, j)
}

/// A subspace of GF(4)^m held by its rref basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    m: usize,
    basis: Mat4,
}

impl Subspace {
    pub fn span(m: usize, vectors: &[Vec<Gf4>]) -> Result<Subspace> {
        let basis = Mat4::from_rows(vectors, m)?.row_basis();
        Ok(Subspace { m, basis })
    }

    pub fn from_points(points: &[PgPoint]) -> Result<Subspace> {
        let m = points.first().map_or(0, |p| p.m());
        let rows: Vec<Vec<Gf4>> = points.iter().map(|p| p.coords.clone()).collect();
        Subspace::span(m, &rows)
    }

    pub fn zero(m: usize) -> Subspace {
        Subspace {
            m,
            basis: Mat4::zeros(0, m),
        }
    }

    pub fn ambient(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat4 {
        &self.basis
    }

    pub fn contains_vector(&self, v: &[Gf4]) -> bool {
        let mut rows = self.basis.row_vecs();
        rows.push(v.to_vec());
        Mat4::from_rows(&rows, self.m).is_ok_and(|m| m.rank() == self.dim())
    }

    pub fn contains(&self, p: &PgPoint) -> bool {
        self.contains_vector(&p.coords)
    }

    pub fn join(&self, other: &Subspace) -> Subspace {
        let basis = Mat4::vstack(&[self.basis.clone(), other.basis.clone()])
            .expect("same ambient space")
            .row_basis();
        Subspace { m: self.m, basis }
    }

    /// Intersection via the kernel of the stacked bases: `x A = y B` exactly
    /// when `(x, y)` is in the left kernel of `[A; B]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let stacked = Mat4::vstack(&[self.basis.clone(), other.basis.clone()]).expect("same m");
        let ker = stacked.transpose().right_kernel();
        let a = self.dim();
        let coeffs = ker.select_columns(&(0..a).collect::<Vec<_>>());
        let vecs = coeffs.mul(&self.basis).expect("shapes agree").row_basis();
        Subspace {
            m: self.m,
            basis: vecs,
        }
    }

    /// Every projective point in the subspace, sorted.
    pub fn points(&self) -> Vec<PgPoint> {
        let d = self.dim();
        let mut out = Vec::new();
        for code in 1..(1usize << (2 * d)) {
            let x: Vec<Gf4> = (0..d)
                .map(|i| Gf4::from_bits(((code >> (2 * i)) & 3) as u8).unwrap())
                .collect();
            let v = self.basis.vec_mul(&x).expect("length d");
            if let Some(p) = PgPoint::normalize(&v) {
                out.push(p);
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.m, self.basis)
    }
}

/// All `i`-dimensional subspaces of GF(4)^m, enumerated as canonical rref
/// matrices: choose the pivot columns, then fill every entry right of a pivot
/// that is not itself in a pivot column.
pub fn enumerate_subspaces(m: usize, i: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    if i > m {
        return out;
    }
    for pivots in combinations(m, i) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                let pv = pivots.clone();
                (p + 1..m).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        for code in 0..(1usize << (2 * free.len())) {
            let mut b = Mat4::zeros(i, m);
            for (r, &p) in pivots.iter().enumerate() {
                b.set(r, p, Gf4::ONE);
            }
            for (t, &(r, c)) in free.iter().enumerate() {
                b.set(r, c, Gf4::from_bits(((code >> (2 * t)) & 3) as u8).unwrap());
            }
            out.push(Subspace { m, basis: b });
        }
    }
    out
}

/// All lines of PG(m−1, 4).
pub fn enumerate_lines(m: usize) -> Vec<Subspace> {
    enumerate_subspaces(m, 2)
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        // rightmost position that can still advance
        let mut i = k;
        while i > 0 && c[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        c[i - 1] += 1;
        for j in i..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn pt(s: &str) -> PgPoint {
        let v: Vec<Gf4> = s.split(',').map(|t| Gf4::from_symbol(t).unwrap()).collect();
        PgPoint::normalize(&v).unwrap()
    }

    #[test]
    fn combinations_in_order() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(4, 2)[0], vec![0, 1]);
        assert_eq!(combinations(4, 2)[5], vec![2, 3]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn point_counts() {
        assert_eq!(enumerate_points(3).len(), 21);
        assert_eq!(enumerate_points(1).len(), 1);
        assert_eq!(enumerate_points(5).len(), 341);
        for m in 1..=6 {
            assert_eq!(enumerate_points(m).len() as u128, count_subspaces(m, 1));
        }
        let pts = enumerate_points(3);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn normalization_is_canonical() {
        for p in enumerate_points(3) {
            for c in Gf4::NONZERO {
                let v: Vec<Gf4> = p.coords().iter().map(|&x| c * x).collect();
                let n = PgPoint::normalize(&v).unwrap();
                assert_eq!(n, p);
                assert_eq!(PgPoint::normalize(n.coords()).unwrap(), n);
            }
        }
        assert!(PgPoint::normalize(&[Gf4::ZERO; 3]).is_none());
    }

    #[test]
    fn coordinate_line() {
        let l = line_points(&pt("1,0,0"), &pt("0,1,0")).unwrap();
        let mut expect = vec![pt("1,0,0"), pt("0,1,0"), pt("1,1,0"), pt("1,w,0"), pt("1,W,0")];
        expect.sort();
        assert_eq!(l, expect);
        assert!(matches!(
            line_points(&pt("1,0,0"), &pt("w,0,0")),
            Err(Error::DegenerateLine)
        ));
    }

    #[test]
    fn projective_plane_incidence() {
        let lines = enumerate_lines(3);
        assert_eq!(lines.len(), 21);
        let point_sets: Vec<HashSet<PgPoint>> =
            lines.iter().map(|l| l.points().into_iter().collect()).collect();
        assert!(point_sets.iter().all(|s| s.len() == 5));
        for a in 0..21 {
            for b in a + 1..21 {
                assert_eq!(point_sets[a].intersection(&point_sets[b]).count(), 1);
                assert_eq!(lines[a].intersect(&lines[b]).dim(), 1);
            }
        }
        let p = pt("0,1,0");
        let through: Vec<&HashSet<PgPoint>> = point_sets.iter().filter(|s| s.contains(&p)).collect();
        assert_eq!(through.len(), 5);
        let cover: HashSet<&PgPoint> = through.iter().flat_map(|s| s.iter()).collect();
        assert_eq!(cover.len(), 21);
    }

    #[test]
    fn lines_from_point_pairs_match_subspaces() {
        let pts = enumerate_points(3);
        let mut from_pairs = HashSet::new();
        for a in 0..pts.len() {
            for b in a + 1..pts.len() {
                from_pairs.insert(line_points(&pts[a], &pts[b]).unwrap());
            }
        }
        let from_sub: HashSet<Vec<PgPoint>> = enumerate_lines(3).iter().map(|l| l.points()).collect();
        assert_eq!(from_pairs, from_sub);
    }

    #[test]
    fn span_dim_examples() {
        assert_eq!(span_dim(&[pt("1,0,0")]), 1);
        let p = pt("1,0,w");
        let q = pt("0,1,1");
        let s = PgPoint::normalize(&[Gf4::ONE, Gf4::ONE, Gf4::W + Gf4::ONE]).unwrap();
        assert_eq!(span_dim(&[p, q, s]), 2);
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_subspaces(3, 1), 21);
        assert_eq!(count_subspaces(7, 0), 1);
        assert_eq!(count_subspaces(5, 2), 5797);
        assert_eq!(enumerate_subspaces(5, 2).len(), 5797);
        assert_eq!(count_subspaces_containing(3, 2, 1), 5);
        assert_eq!(count_subspaces_containing(4, 3, 2), 5);
        assert_eq!(count_subspaces_containing(6, 4, 4), 1);
        assert_eq!(count_subspaces(2, 3), 0);
    }

    #[test]
    fn containing_count_equals_quotient_space_count() {
        for m in 0..=6 {
            for i in 0..=m {
                for j in 0..=i {
                    assert_eq!(count_subspaces_containing(m, i, j), count_subspaces(m - j, i - j));
                }
            }
        }
    }

    #[test]
    fn enumerated_subspaces_are_distinct_and_counted() {
        for m in 1..=4 {
            for i in 0..=m {
                let subs = enumerate_subspaces(m, i);
                assert_eq!(subs.len() as u128, count_subspaces(m, i));
                let set: HashSet<&Subspace> = subs.iter().collect();
                assert_eq!(set.len(), subs.len());
                assert!(subs.iter().all(|s| s.dim() == i));
            }
        }
    }

    #[test]
    fn line_meets_hyperplane_in_pg4() {
        let lines = enumerate_lines(5);
        let hyper = enumerate_subspaces(5, 4);
        for (a, l) in lines.iter().enumerate().step_by(97) {
            let h = &hyper[a % hyper.len()];
            assert!(l.intersect(h).dim() >= 1);
            assert_eq!(l.dim() + h.dim() - l.join(h).dim(), l.intersect(h).dim());
        }
    }
}
