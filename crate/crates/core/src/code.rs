//! Linear codes over GF(4): duality, minimum distance, weight distribution,
//! puncturing and shortening, and MDS predicates.
//!
//! Coordinate sets passed to this module are 0-based.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::mat4::Mat4;
use crate::packed::{Echelon, Packed, MAX_LEN};

/// Largest dimension accepted by [`LinearCode::weight_distribution`].
pub const MAX_WEIGHT_DIST_K: usize = 14;
/// Largest dimension accepted by [`LinearCode::codewords`].
pub const MAX_CODEWORDS_K: usize = 10;
/// Enumeration is preferred over the column scan up to this dimension.
pub const MAX_ENUM_K: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl std::fmt::Display for CodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.k, self.d)
    }
}

/// An `[n, k]` code held by a generator matrix, a parity-check matrix, or both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    k: usize,
    gen: Option<Mat4>,
    pchk: Option<Mat4>,
}

fn full_row_rank(m: &Mat4) -> Result<()> {
    let rank = m.rank();
    if rank != m.rows() {
        return Err(Error::Rank {
            rank,
            rows: m.rows(),
        });
    }
    Ok(())
}

fn check_len(n: usize) -> Result<()> {
    if n > MAX_LEN {
        return Err(Error::Resource(format!(
            "length {n} exceeds the supported maximum of {MAX_LEN}"
        )));
    }
    Ok(())
}

impl LinearCode {
    /// Code spanned by the rows of `g`, which must have full row rank.
    pub fn from_generator(g: Mat4) -> Result<LinearCode> {
        check_len(g.cols())?;
        full_row_rank(&g)?;
        Ok(LinearCode {
            n: g.cols(),
            k: g.rows(),
            gen: Some(g),
            pchk: None,
        })
    }

    /// Code annihilated by the rows of `h`, which must have full row rank.
    pub fn from_parity(h: Mat4) -> Result<LinearCode> {
        check_len(h.cols())?;
        full_row_rank(&h)?;
        Ok(LinearCode {
            n: h.cols(),
            k: h.cols() - h.rows(),
            gen: None,
            pchk: Some(h),
        })
    }

    /// Like [`from_generator`](Self::from_generator) but first reduces `g`
    /// to a basis of its row space.
    pub fn from_generator_rows(g: &Mat4) -> Result<LinearCode> {
        LinearCode::from_generator(g.row_basis())
    }

    /// Like [`from_parity`](Self::from_parity) but first reduces `h` to a
    /// basis of its row space, so `k = n − rank(h)`.
    pub fn from_parity_rows(h: &Mat4) -> Result<LinearCode> {
        LinearCode::from_parity(h.row_basis())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Both matrices present; the missing one is a kernel basis of the other.
    pub fn complete(&self) -> LinearCode {
        LinearCode {
            n: self.n,
            k: self.k,
            gen: Some(self.generator()),
            pchk: Some(self.parity()),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.gen.is_some() && self.pchk.is_some()
    }

    /// The stored generator, or one derived from the parity-check matrix.
    pub fn generator(&self) -> Mat4 {
        match (&self.gen, &self.pchk) {
            (Some(g), _) => g.clone(),
            (None, Some(h)) => h.right_kernel(),
            (None, None) => unreachable!("a code always holds one matrix"),
        }
    }

    /// The stored parity-check matrix, or one derived from the generator.
    pub fn parity(&self) -> Mat4 {
        match (&self.pchk, &self.gen) {
            (Some(h), _) => h.clone(),
            (None, Some(g)) => g.right_kernel(),
            (None, None) => unreachable!("a code always holds one matrix"),
        }
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode {
            n: self.n,
            k: self.n - self.k,
            gen: self.pchk.clone(),
            pchk: self.gen.clone(),
        }
    }

    /// True when `H · wordᵀ = 0`.
    pub fn contains(&self, word: &[Gf4]) -> Result<bool> {
        Ok(self.parity().apply(word)?.iter().all(|x| x.is_zero()))
    }

    pub fn encode(&self, message: &[Gf4]) -> Result<Vec<Gf4>> {
        if message.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: message.len(),
            });
        }
        self.generator().vec_mul(message)
    }

    /// Minimum Hamming weight of a nonzero codeword.
    ///
    /// Enumerates codewords when `k ≤ min(n − k, 12)` and otherwise scans
    /// parity-check column subsets; both routes are exact.
    pub fn min_distance(&self) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::UndefinedDistance);
        }
        if self.k <= (self.n - self.k).min(MAX_ENUM_K) {
            self.min_distance_by_enumeration()
        } else {
            self.min_distance_by_column_scan()
        }
    }

    /// Minimum distance over the `(4^k − 1)/3` codewords whose leading
    /// nonzero message symbol is 1.
    pub fn min_distance_by_enumeration(&self) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::UndefinedDistance);
        }
        if self.k > MAX_WEIGHT_DIST_K {
            return Err(Error::Resource(format!(
                "enumerating 4^{} codewords is beyond the desk-scale guard",
                self.k
            )));
        }
        let rows = packed_rows(&self.generator());
        let tasks = projective_tasks(&rows);
        let best = tasks
            .par_iter()
            .map(|(base, rest)| {
                let mut m = usize::MAX;
                scan_span(*base, rest, &mut |v| {
                    m = m.min(v.weight() as usize);
                });
                m
            })
            .min()
            .unwrap_or(usize::MAX);
        Ok(best)
    }

    /// Minimum distance as the size of the smallest linearly dependent set of
    /// parity-check columns, by depth-first search over column subsets in
    /// increasing index order with a shared bound.
    pub fn min_distance_by_column_scan(&self) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::UndefinedDistance);
        }
        let h = self.parity();
        let cols: Vec<Packed> = (0..h.cols()).map(|c| Packed::from_slice(&h.col(c))).collect();
        Ok(smallest_dependent_set(&cols))
    }

    /// `A_0..A_n`: the number of codewords of each weight.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        if self.k > MAX_WEIGHT_DIST_K {
            return Err(Error::Resource(format!(
                "weight distribution needs 4^{} codewords (limit k ≤ {MAX_WEIGHT_DIST_K})",
                self.k
            )));
        }
        let n = self.n;
        let rows = packed_rows(&self.generator());
        let split = rows.len().min(3);
        let (top, rest) = rows.split_at(split);
        let bases = all_combinations(top);
        let dist = bases
            .par_iter()
            .map(|&b| {
                let mut a = vec![0u64; n + 1];
                scan_span(b, rest, &mut |v| a[v.weight() as usize] += 1);
                a
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut x, y| {
                    x.iter_mut().zip(y).for_each(|(p, q)| *p += q);
                    x
                },
            );
        Ok(dist)
    }

    /// Every codeword, in message-counter order.
    pub fn codewords(&self) -> Result<Vec<Vec<Gf4>>> {
        if self.k > MAX_CODEWORDS_K {
            return Err(Error::Resource(format!(
                "listing 4^{} codewords (limit k ≤ {MAX_CODEWORDS_K})",
                self.k
            )));
        }
        let rows = packed_rows(&self.generator());
        let mut out = Vec::with_capacity(1 << (2 * self.k));
        scan_span(Packed::default(), &rows, &mut |v| out.push(v.to_vec(self.n)));
        Ok(out)
    }

    /// Deletes the coordinates in `s` from every codeword. The dimension may
    /// drop; the generator is re-reduced to full rank.
    pub fn puncture(&self, s: &[usize]) -> Result<LinearCode> {
        self.check_coords(s)?;
        let g = self.generator().delete_columns(s);
        if g.cols() == 0 {
            return Err(Error::EmptyCode("puncturing every coordinate".into()));
        }
        LinearCode::from_generator(g.row_basis())
    }

    /// Keeps only the coordinates in `keep` (the restriction `C|_keep`).
    pub fn restrict(&self, keep: &[usize]) -> Result<LinearCode> {
        self.check_coords(keep)?;
        let drop: Vec<usize> = (0..self.n).filter(|c| !keep.contains(c)).collect();
        self.puncture(&drop)
    }

    /// The subcode vanishing on `s`, with `s` then deleted.
    pub fn shorten(&self, s: &[usize]) -> Result<LinearCode> {
        self.check_coords(s)?;
        let g = self.generator();
        // messages x with x · G_s = 0 form the right kernel of G_sᵀ
        let ks = g.select_columns(s).transpose().right_kernel();
        let sub = if s.is_empty() { g } else { ks.mul(&g)? };
        let sub = sub.delete_columns(s).row_basis();
        if sub.rows() == 0 || sub.cols() == 0 {
            return Err(Error::EmptyCode("shortened code has dimension 0".into()));
        }
        LinearCode::from_generator(sub)
    }

    /// `d = n − k + 1`.
    pub fn is_mds(&self) -> Result<bool> {
        Ok(self.min_distance()? == self.n - self.k + 1)
    }

    /// Parameters with the exact minimum distance.
    pub fn params(&self) -> Result<CodeParams> {
        Ok(CodeParams {
            n: self.n,
            k: self.k,
            d: self.min_distance()?,
        })
    }

    fn check_coords(&self, s: &[usize]) -> Result<()> {
        if let Some(&bad) = s.iter().find(|&&c| c >= self.n) {
            return Err(Error::Range(format!(
                "coordinate {bad} outside 0..{}",
                self.n
            )));
        }
        Ok(())
    }
}

fn packed_rows(g: &Mat4) -> Vec<Packed> {
    (0..g.rows()).map(|r| Packed::from_slice(g.row(r))).collect()
}

/// Calls `f` on `base + Σ c_j rows[j]` for all `4^len` coefficient choices,
/// by a base-4 counter that updates the running sum one row at a time.
fn scan_span(base: Packed, rows: &[Packed], f: &mut impl FnMut(Packed)) {
    let scaled: Vec<[Packed; 4]> = rows
        .iter()
        .map(|r| {
            // delta between counter codes c and c+1 (mod 4) is c ^ (c+1)
            [r.scale(Gf4::ONE), r.scale(Gf4::W2), r.scale(Gf4::ONE), r.scale(Gf4::W2)]
        })
        .collect();
    let t = rows.len();
    let mut digits = vec![0u8; t];
    let mut v = base;
    f(v);
    loop {
        let mut j = 0;
        loop {
            if j == t {
                return;
            }
            let old = digits[j];
            let new = (old + 1) & 3;
            digits[j] = new;
            v = v.add(scaled[j][old as usize]);
            if new != 0 {
                break;
            }
            j += 1;
        }
        f(v);
    }
}

/// All `4^len` combinations of `rows`.
fn all_combinations(rows: &[Packed]) -> Vec<Packed> {
    let mut out = Vec::with_capacity(1 << (2 * rows.len()));
    scan_span(Packed::default(), rows, &mut |v| out.push(v));
    out
}

/// Splits the projective message space into independent work items: a base
/// vector (leading coefficient 1 on some row plus a fixed prefix of the
/// following rows) and the rows still free.
fn projective_tasks(rows: &[Packed]) -> Vec<(Packed, Vec<Packed>)> {
    let mut tasks = Vec::new();
    for i in 0..rows.len() {
        let tail = &rows[i + 1..];
        let split = tail.len().min(2);
        let (top, rest) = tail.split_at(split);
        for b in all_combinations(top) {
            tasks.push((rows[i].add(b), rest.to_vec()));
        }
    }
    tasks
}

/// Size of the smallest linearly dependent subset of `cols`, or
/// `rank + 1` capped by `cols.len() + 1` if no subset is dependent.
pub(crate) fn smallest_dependent_set(cols: &[Packed]) -> usize {
    let n = cols.len();
    if cols.iter().any(|c| c.is_zero()) {
        return 1;
    }
    let dim = crate::packed::rank_of(cols);
    // any dim + 1 columns are dependent; with no such subset the answer is n + 1
    let best = AtomicUsize::new((dim + 1).min(n + 1));
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    pairs.par_iter().for_each(|&(a, b)| {
        if best.load(Ordering::Relaxed) <= 2 {
            return;
        }
        let mut e = Echelon::with_capacity(dim);
        e.insert(cols[a]);
        if e.contains(cols[b]) {
            best.fetch_min(2, Ordering::Relaxed);
            return;
        }
        e.insert(cols[b]);
        dfs(cols, b + 1, &mut e, &best);
    });
    best.load(Ordering::Relaxed)
}

fn dfs(cols: &[Packed], start: usize, e: &mut Echelon, best: &AtomicUsize) {
    let s = e.rank();
    for c in start..cols.len() {
        let b = best.load(Ordering::Relaxed);
        if s + 1 >= b {
            return;
        }
        if e.contains(cols[c]) {
            best.fetch_min(s + 1, Ordering::Relaxed);
            return;
        }
        if s + 2 < b {
            e.insert(cols[c]);
            dfs(cols, c + 1, e, best);
            e.pop();
        }
    }
}

/// Whether an `[n, k]` MDS code exists over GF(4).
///
/// The trivial families `[n,1]`, `[n,n−1]` and `[n,n]` always exist; beyond
/// those only `[4,2]`, `[5,2]`, `[5,3]` and `[6,3]` do.
pub fn mds_feasible_q4(n: usize, k: usize) -> bool {
    if n == 0 || k == 0 || k > n {
        return false;
    }
    k == 1 || k == n || k + 1 == n || matches!((n, k), (4, 2) | (5, 2) | (5, 3) | (6, 3))
}

fn binom(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// Closed-form weight enumerator of an `[n, k]` MDS code over GF(q):
/// `A_w = C(n,w) Σ_{j=0}^{w−d} (−1)^j C(w,j) (q^{w−d+1−j} − 1)` for `w ≥ d`.
pub fn mds_weight_distribution(n: usize, k: usize, q: u64) -> Vec<i128> {
    let d = n + 1 - k;
    let mut a = vec![0i128; n + 1];
    a[0] = 1;
    for w in d..=n {
        let mut s: i128 = 0;
        for j in 0..=(w - d) {
            let term = binom(w as u64, j as u64) * ((q as i128).pow((w - d + 1 - j) as u32) - 1);
            if j % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        a[w] = binom(n as u64, w as u64) * s;
    }
    a
}

/// Number of `t`-subsets the column scan examines in the worst case to prove
/// a distance of `d`: `C(n, d − 1)`.
pub fn column_scan_cost(n: usize, d: usize) -> u128 {
    if d == 0 {
        return 0;
    }
    binom(n as u64, (d - 1) as u64).max(0) as u128
}
