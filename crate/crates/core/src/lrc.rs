//! (r,δ)-locality: the Singleton-like bound, locality verification from the
//! definition, local/global group profiles, and checks of the structural
//! properties every optimal code must have.
//!
//! A code has (r,δ)-locality when every coordinate `i` lies in some set `R`
//! with `|R| ≤ r + δ − 1` such that the restriction `C|_R` has minimum
//! distance at least δ. All indices in this module are 0-based.

use rayon::prelude::*;

use crate::code::{CodeParams, LinearCode};
use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::mat4::Mat4;
use crate::packed::{rank_of, Echelon, Packed};
use crate::pg::combinations;

/// Largest length accepted by the exhaustive locality search.
pub const MAX_LOCALITY_N: usize = 30;

/// `n − k + 1 − (⌈k/r⌉ − 1)(δ − 1)`.
pub fn singleton_like_bound(n: usize, k: usize, r: usize, delta: usize) -> i64 {
    let (n, k, r, delta) = (n as i64, k as i64, r.max(1) as i64, delta as i64);
    let groups = (k + r - 1) / r;
    n - k + 1 - (groups - 1) * (delta - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupRange {
    pub l_min: usize,
    pub l_max: usize,
    /// False when `l_min > l_max`, so no parity-check partition exists.
    pub feasible: bool,
}

/// The admissible number of local groups, `⌈k/r⌉ ≤ l ≤ ⌊(n−k)/(δ−1)⌋`.
pub fn group_count_range(n: usize, k: usize, r: usize, delta: usize) -> GroupRange {
    let l_min = k.div_ceil(r.max(1));
    let l_max = n.saturating_sub(k) / (delta.max(2) - 1);
    GroupRange {
        l_min,
        l_max,
        feasible: l_min <= l_max,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalGroup {
    /// Row indices into [`LocalityProfile::parity`].
    pub rows: Vec<usize>,
    /// The support `S_i`, sorted.
    pub support: Vec<usize>,
}

/// A parity-check matrix split into local groups and a global group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalityProfile {
    pub parity: Mat4,
    pub groups: Vec<LocalGroup>,
    pub global_rows: Vec<usize>,
    pub r: usize,
    pub delta: usize,
}

impl LocalityProfile {
    pub fn l(&self) -> usize {
        self.groups.len()
    }

    pub fn n(&self) -> usize {
        self.parity.cols()
    }

    /// Groups whose support contains coordinate `i`.
    pub fn groups_containing(&self, i: usize) -> Vec<usize> {
        (0..self.groups.len())
            .filter(|&g| self.groups[g].support.binary_search(&i).is_ok())
            .collect()
    }

    /// The submatrix of local rows of group `g`.
    pub fn local_rows(&self, g: usize) -> Mat4 {
        self.parity.select_rows(&self.groups[g].rows)
    }
}

fn generator_columns(code: &LinearCode) -> Vec<Packed> {
    let g = code.generator();
    (0..g.cols()).map(|c| Packed::from_slice(&g.col(c))).collect()
}

/// `d(C|_R) ≥ δ`, given `rank = rank(G_R)`: no `δ − 1` erasures inside `R`
/// may lower the rank.
fn restriction_has_distance(cols: &[Packed], set: &[usize], rank: usize, delta: usize) -> bool {
    if rank == 0 {
        return false;
    }
    for erased in combinations(set.len(), delta - 1) {
        let rest: Vec<Packed> = (0..set.len())
            .filter(|p| !erased.contains(p))
            .map(|p| cols[set[p]])
            .collect();
        if rank_of(&rest) < rank {
            return false;
        }
    }
    true
}

/// DFS over `(size − 1)`-subsets of the other coordinates in lexicographic
/// order. Branches whose rank already exceeds `size − δ + 1` cannot reach a
/// restriction of distance δ and are cut.
#[allow(clippy::too_many_arguments)]
fn search_size(
    cols: &[Packed],
    i: usize,
    size: usize,
    delta: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    ech: &mut Echelon,
) -> Option<Vec<usize>> {
    let max_rank = size + 1 - delta;
    if chosen.len() + 1 == size {
        let mut set = chosen.clone();
        set.push(i);
        set.sort_unstable();
        return restriction_has_distance(cols, &set, ech.rank(), delta).then_some(set);
    }
    let need = size - 1 - chosen.len();
    for c in start..cols.len() {
        if c == i {
            continue;
        }
        let remaining = (c..cols.len()).filter(|&x| x != i).count();
        if remaining < need {
            break;
        }
        let grew = ech.insert(cols[c]);
        if ech.rank() <= max_rank {
            chosen.push(c);
            let found = search_size(cols, i, size, delta, c + 1, chosen, ech);
            chosen.pop();
            if found.is_some() {
                if grew {
                    ech.pop();
                }
                return found;
            }
        }
        if grew {
            ech.pop();
        }
    }
    None
}

fn repair_set_for(cols: &[Packed], i: usize, r: usize, delta: usize) -> Option<Vec<usize>> {
    if cols[i].is_zero() {
        return None;
    }
    let n = cols.len();
    for size in delta.max(1)..=(r + delta - 1).min(n) {
        let mut ech = Echelon::new();
        ech.insert(cols[i]);
        if let Some(s) = search_size(cols, i, size, delta, 0, &mut Vec::new(), &mut ech) {
            return Some(s);
        }
    }
    None
}

fn check_locality_args(code: &LinearCode, r: usize, delta: usize) -> Result<()> {
    if r == 0 || delta < 2 {
        return Err(Error::Range(format!(
            "locality needs r ≥ 1 and δ ≥ 2 (got r = {r}, δ = {delta})"
        )));
    }
    if code.n() > MAX_LOCALITY_N {
        return Err(Error::Resource(format!(
            "locality search is limited to n ≤ {MAX_LOCALITY_N} (n = {})",
            code.n()
        )));
    }
    Ok(())
}

/// For each coordinate, the smallest repair set (by size, then
/// lexicographically) or `None` if the coordinate has none.
pub fn find_repair_sets(code: &LinearCode, r: usize, delta: usize) -> Result<Vec<Option<Vec<usize>>>> {
    check_locality_args(code, r, delta)?;
    let cols = generator_columns(code);
    Ok((0..code.n())
        .into_par_iter()
        .map(|i| repair_set_for(&cols, i, r, delta))
        .collect())
}

/// Checks (r,δ)-locality from the definition and assembles a profile.
///
/// The groups are a cover of the coordinates by repair sets whose local
/// rows (the dual words supported inside each set) are jointly independent,
/// so that the local rows and a completion to a parity-check basis give a
/// full-rank parity-check matrix in block form. The search prefers sets
/// disjoint from those already chosen. If no such cover is found within the
/// search budget, the distinct smallest repair sets are used instead, minus
/// any set covered by the others.
pub fn verify_locality(code: &LinearCode, r: usize, delta: usize) -> Result<LocalityProfile> {
    let sets = find_repair_sets(code, r, delta)?;
    let bad: Vec<usize> = (0..sets.len()).filter(|&i| sets[i].is_none()).map(|i| i + 1).collect();
    if !bad.is_empty() {
        return Err(Error::LocalityFailure { coords: bad });
    }
    if let Some(cover) = CoverSearch::new(code, r, delta).run() {
        return build_profile(code, &cover, r, delta);
    }
    let mut supports: Vec<Vec<usize>> = Vec::new();
    for s in sets.into_iter().flatten() {
        if !supports.contains(&s) {
            supports.push(s);
        }
    }
    let n = code.n();
    let mut g = supports.len();
    while g > 0 {
        g -= 1;
        let covered = (0..n).all(|c| {
            supports
                .iter()
                .enumerate()
                .any(|(j, s)| j != g && s.binary_search(&c).is_ok())
        });
        if covered {
            supports.remove(g);
        }
    }
    build_profile(code, &supports, r, delta)
}

/// Repair sets examined per coordinate by the cover search.
const CANDIDATE_CAP: usize = 4096;
/// Search nodes before the cover search gives up.
const COVER_BUDGET: usize = 200_000;

/// Every repair set containing `i`, by size and then lexicographically, up
/// to `cap` of them.
fn all_repair_sets_for(cols: &[Packed], i: usize, r: usize, delta: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if cols[i].is_zero() {
        return out;
    }
    for size in delta.max(1)..=(r + delta - 1).min(cols.len()) {
        let mut ech = Echelon::new();
        ech.insert(cols[i]);
        collect_size(cols, i, size, delta, 0, &mut Vec::new(), &mut ech, &mut out, cap);
        if out.len() >= cap {
            break;
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn collect_size(
    cols: &[Packed],
    i: usize,
    size: usize,
    delta: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    ech: &mut Echelon,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    if chosen.len() + 1 == size {
        let mut set = chosen.clone();
        set.push(i);
        set.sort_unstable();
        if restriction_has_distance(cols, &set, ech.rank(), delta) {
            out.push(set);
        }
        return;
    }
    let need = size - 1 - chosen.len();
    for c in start..cols.len() {
        if c == i {
            continue;
        }
        if (c..cols.len()).filter(|&x| x != i).count() < need {
            break;
        }
        let grew = ech.insert(cols[c]);
        if ech.rank() <= size + 1 - delta {
            chosen.push(c);
            collect_size(cols, i, size, delta, c + 1, chosen, ech, out, cap);
            chosen.pop();
        }
        if grew {
            ech.pop();
        }
    }
}

struct Candidate {
    set: Vec<usize>,
    mask: u128,
    rows: Vec<Packed>,
}

/// Depth-first search for a cover by repair sets with independent local
/// rows.
struct CoverSearch<'a> {
    code: &'a LinearCode,
    cols: Vec<Packed>,
    r: usize,
    delta: usize,
    candidates: Vec<Option<Vec<Candidate>>>,
    nodes: usize,
}

impl<'a> CoverSearch<'a> {
    fn new(code: &'a LinearCode, r: usize, delta: usize) -> CoverSearch<'a> {
        CoverSearch {
            code,
            cols: generator_columns(code),
            r,
            delta,
            candidates: (0..code.n()).map(|_| None).collect(),
            nodes: 0,
        }
    }

    fn run(&mut self) -> Option<Vec<Vec<usize>>> {
        let mut chosen = Vec::new();
        let found = self.dfs(0, &Echelon::new(), &mut chosen)?;
        found.then_some(chosen)
    }

    fn candidates_for(&mut self, i: usize) -> &[Candidate] {
        if self.candidates[i].is_none() {
            let gen = self.code.generator();
            let n = self.code.n();
            let list = all_repair_sets_for(&self.cols, i, self.r, self.delta, CANDIDATE_CAP)
                .into_iter()
                .map(|set| {
                    let ker = gen.select_columns(&set).right_kernel();
                    let rows = (0..ker.rows())
                        .map(|k| {
                            let mut v = vec![Gf4::ZERO; n];
                            for (j, &c) in set.iter().enumerate() {
                                v[c] = ker.get(k, j);
                            }
                            Packed::from_slice(&v)
                        })
                        .collect();
                    let mask = set.iter().fold(0u128, |m, &c| m | 1u128 << c);
                    Candidate { set, mask, rows }
                })
                .collect();
            self.candidates[i] = Some(list);
        }
        self.candidates[i].as_deref().expect("filled")
    }

    /// `Some(true)` on success, `Some(false)` when this branch is exhausted,
    /// `None` when the budget runs out.
    fn dfs(&mut self, covered: u128, ech: &Echelon, chosen: &mut Vec<Vec<usize>>) -> Option<bool> {
        let n = self.code.n();
        let Some(i) = (0..n).find(|&c| covered >> c & 1 == 0) else {
            return Some(true);
        };
        self.nodes += 1;
        if self.nodes > COVER_BUDGET {
            return None;
        }
        let max_rows = n - self.code.k();
        let cands = self.candidates_for(i);
        let mut order: Vec<usize> = (0..cands.len()).collect();
        order.sort_by_key(|&j| ((cands[j].mask & covered).count_ones(), std::cmp::Reverse(cands[j].set.len())));
        let picks: Vec<(u128, Vec<usize>, Echelon)> = order
            .into_iter()
            .filter_map(|j| {
                let c = &cands[j];
                if ech.rank() + c.rows.len() > max_rows {
                    return None;
                }
                let mut next = ech.clone();
                c.rows.iter().all(|&v| next.insert(v)).then(|| (c.mask, c.set.clone(), next))
            })
            .collect();
        for (mask, set, next) in picks {
            chosen.push(set);
            match self.dfs(covered | mask, &next, chosen)? {
                true => return Some(true),
                false => {
                    chosen.pop();
                }
            }
        }
        Some(false)
    }
}

fn build_profile(code: &LinearCode, supports: &[Vec<usize>], r: usize, delta: usize) -> Result<LocalityProfile> {
    let n = code.n();
    let gen = code.generator();
    let mut blocks = Vec::new();
    let mut groups = Vec::new();
    let mut next = 0;
    for s in supports {
        let ker = gen.select_columns(s).right_kernel();
        let mut rows = Mat4::zeros(ker.rows(), n);
        for r in 0..ker.rows() {
            for (j, &c) in s.iter().enumerate() {
                rows.set(r, c, ker.get(r, j));
            }
        }
        // dual words of an MDS restriction cover the whole set; take the
        // union anyway so the support always matches the rows
        let mut support: Vec<usize> = (0..rows.rows()).flat_map(|r| rows.row_support(r)).collect();
        support.sort_unstable();
        support.dedup();
        groups.push(LocalGroup {
            rows: (next..next + rows.rows()).collect(),
            support,
        });
        next += rows.rows();
        blocks.push(rows);
    }
    let local = Mat4::vstack(&blocks)?;
    let mut ech = Echelon::new();
    for r in 0..local.rows() {
        ech.insert(Packed::from_slice(local.row(r)));
    }
    let h = code.parity();
    let mut global = Vec::new();
    for r in 0..h.rows() {
        if ech.insert(Packed::from_slice(h.row(r))) {
            global.push(h.row(r).to_vec());
        }
    }
    let global = Mat4::from_rows(&global, n)?;
    let global_rows = (next..next + global.rows()).collect();
    Ok(LocalityProfile {
        parity: Mat4::vstack(&[local, global])?,
        groups,
        global_rows,
        r,
        delta,
    })
}

/// True when the locality search at `r − 1` fails. Vacuously true for r = 1.
pub fn is_r_optimal(code: &LinearCode, r: usize, delta: usize) -> Result<bool> {
    if r <= 1 {
        return Ok(true);
    }
    Ok(find_repair_sets(code, r - 1, delta)?.iter().any(|s| s.is_none()))
}

/// Splits `pchk` into consecutive local groups with the given row counts;
/// the remaining rows form the global group. Each support is the union of
/// its rows' supports.
pub fn extract_profile(pchk: &Mat4, layout: &[usize], r: usize, delta: usize) -> Result<LocalityProfile> {
    let total: usize = layout.iter().sum();
    if total > pchk.rows() {
        return Err(Error::Structure(format!(
            "layout claims {total} local rows but the matrix has {}",
            pchk.rows()
        )));
    }
    let n = pchk.cols();
    let mut groups = Vec::new();
    let mut next = 0;
    for &len in layout {
        let rows: Vec<usize> = (next..next + len).collect();
        let mut support: Vec<usize> = rows.iter().flat_map(|&r| pchk.row_support(r)).collect();
        support.sort_unstable();
        support.dedup();
        groups.push(LocalGroup { rows, support });
        next += len;
    }
    let profile = LocalityProfile {
        parity: pchk.clone(),
        groups,
        global_rows: (next..pchk.rows()).collect(),
        r,
        delta,
    };
    validate_profile(&profile, n)?;
    Ok(profile)
}

fn validate_profile(p: &LocalityProfile, n: usize) -> Result<()> {
    let count = |c: usize| p.groups.iter().filter(|g| g.support.binary_search(&c).is_ok()).count();
    let uncovered: Vec<usize> = (0..n).filter(|&c| count(c) == 0).map(|c| c + 1).collect();
    if !uncovered.is_empty() {
        return Err(Error::Structure(format!(
            "coordinates {uncovered:?} lie in no local group"
        )));
    }
    for (i, g) in p.groups.iter().enumerate() {
        if g.support.len() > p.r + p.delta - 1 {
            return Err(Error::Structure(format!(
                "group {} has support size {} > r + δ − 1 = {}",
                i + 1,
                g.support.len(),
                p.r + p.delta - 1
            )));
        }
        if g.support.iter().all(|&c| count(c) > 1) {
            return Err(Error::Structure(format!(
                "group {} is covered by the other groups",
                i + 1
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub pass: bool,
    /// False when the premise of the property does not hold; such a check
    /// passes vacuously.
    pub applies: bool,
    pub witness: Option<String>,
}

impl Check {
    fn ok() -> Check {
        Check {
            pass: true,
            applies: true,
            witness: None,
        }
    }

    fn vacuous() -> Check {
        Check {
            pass: true,
            applies: false,
            witness: None,
        }
    }

    fn fail(w: String) -> Check {
        Check {
            pass: false,
            applies: true,
            witness: Some(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremChecks {
    /// (a) deleting any ⌈k/r⌉−1 groups leaves a full-rank H′ of an MDS code
    /// with d′ = d.
    pub h_prime_mds: Check,
    /// (b) every group holds exactly δ − 1 rows.
    pub rows_per_group: Check,
    /// (c) every `C|_{S_i}` is an `[|S_i|, |S_i| − δ + 1, δ]` MDS code.
    pub punctured_mds: Check,
    /// (d) if r | k and r < k: disjoint supports of size r + δ − 1 dividing n.
    pub disjointness: Check,
    /// (e) d ≤ 4 if r ∤ (k − 1), and d ≤ 4δ if r | (k − 1).
    pub distance_cap: Check,
}

impl TheoremChecks {
    pub fn all_pass(&self) -> bool {
        self.named().iter().all(|(_, c)| c.pass)
    }

    pub fn named(&self) -> [(&'static str, &Check); 5] {
        [
            ("h_prime_mds", &self.h_prime_mds),
            ("rows_per_group", &self.rows_per_group),
            ("punctured_mds", &self.punctured_mds),
            ("disjointness", &self.disjointness),
            ("distance_cap", &self.distance_cap),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalityReport {
    pub params: CodeParams,
    pub r: usize,
    pub delta: usize,
    pub bound_d: i64,
    pub d_optimal: bool,
    /// `None` when the code is too long for the exhaustive search at r − 1.
    pub r_optimal: Option<bool>,
    /// False when `params.d` was supplied rather than computed.
    pub distance_verified: bool,
    pub profile: LocalityProfile,
    pub checks: TheoremChecks,
}

/// Computes the minimum distance and runs every structural check.
pub fn check_structure(code: &LinearCode, profile: &LocalityProfile) -> Result<OptimalityReport> {
    let d = code.min_distance()?;
    let mut rep = check_structure_with_distance(code, profile, d)?;
    rep.distance_verified = true;
    Ok(rep)
}

/// Runs the structural checks taking `d` as the code's minimum distance.
/// Used when computing `d` directly is beyond the desk-scale budget.
pub fn check_structure_with_distance(
    code: &LinearCode,
    profile: &LocalityProfile,
    d: usize,
) -> Result<OptimalityReport> {
    let (n, k, r, delta) = (code.n(), code.k(), profile.r, profile.delta);
    if profile.parity.cols() != n {
        return Err(Error::Shape(format!(
            "profile has {} columns, code has length {n}",
            profile.parity.cols()
        )));
    }
    let bound_d = singleton_like_bound(n, k, r, delta);
    let params = CodeParams { n, k, d };
    let r_optimal = if n <= MAX_LOCALITY_N {
        Some(is_r_optimal(code, r, delta)?)
    } else {
        None
    };
    let checks = TheoremChecks {
        h_prime_mds: check_h_prime(profile, k, d),
        rows_per_group: check_rows_per_group(profile),
        punctured_mds: check_punctured(code, profile)?,
        disjointness: check_disjoint(profile, n, k),
        distance_cap: check_distance_cap(k, r, delta, d),
    };
    Ok(OptimalityReport {
        params,
        r,
        delta,
        bound_d,
        d_optimal: d as i64 == bound_d,
        r_optimal,
        distance_verified: false,
        profile: profile.clone(),
        checks,
    })
}

/// The matrix H′ obtained by deleting the rows of the chosen groups and every
/// column their supports cover.
pub fn h_prime(profile: &LocalityProfile, chosen: &[usize]) -> Mat4 {
    let mut rows: Vec<usize> = Vec::new();
    let mut cols: Vec<usize> = Vec::new();
    for &g in chosen {
        rows.extend(&profile.groups[g].rows);
        cols.extend(&profile.groups[g].support);
    }
    profile.parity.delete_rows(&rows).delete_columns(&cols)
}

fn check_h_prime(profile: &LocalityProfile, k: usize, d: usize) -> Check {
    let m = k.div_ceil(profile.r).saturating_sub(1);
    let l = profile.l();
    if m > l {
        return Check::fail(format!("only {l} groups, need to delete {m}"));
    }
    let choices = combinations(l, m);
    let failure = choices.par_iter().find_map_first(|chosen| {
        let label = || {
            let ids: Vec<String> = chosen.iter().map(|g| (g + 1).to_string()).collect();
            format!("groups {{{}}}", ids.join(","))
        };
        let hp = h_prime(profile, chosen);
        if hp.cols() == 0 {
            return Some(format!("{}: no columns remain", label()));
        }
        let rank = hp.rank();
        if rank != hp.rows() {
            return Some(format!("{}: H′ has rank {rank} < {} rows", label(), hp.rows()));
        }
        let c = match LinearCode::from_parity(hp) {
            Ok(c) => c,
            Err(e) => return Some(format!("{}: {e}", label())),
        };
        let (np, kp) = (c.n(), c.k());
        let dp = match c.min_distance() {
            Ok(x) => x,
            Err(e) => return Some(format!("{}: {e}", label())),
        };
        if dp != np - kp + 1 || dp != d {
            return Some(format!(
                "{}: H′ code is [{np},{kp},{dp}], expected an MDS code with d′ = {d}",
                label()
            ));
        }
        None
    });
    failure.map_or_else(Check::ok, Check::fail)
}

fn check_rows_per_group(profile: &LocalityProfile) -> Check {
    for (i, g) in profile.groups.iter().enumerate() {
        if g.rows.len() != profile.delta - 1 {
            return Check::fail(format!(
                "group {} has {} rows, expected δ − 1 = {}",
                i + 1,
                g.rows.len(),
                profile.delta - 1
            ));
        }
    }
    Check::ok()
}

fn check_punctured(code: &LinearCode, profile: &LocalityProfile) -> Result<Check> {
    let cols = generator_columns(code);
    let delta = profile.delta;
    for (i, g) in profile.groups.iter().enumerate() {
        let s = &g.support;
        let rank = rank_of(&s.iter().map(|&c| cols[c]).collect::<Vec<_>>());
        if s.len() < delta || rank != s.len() + 1 - delta {
            return Ok(Check::fail(format!(
                "group {}: C|S has length {} and dimension {rank}, expected dimension {}",
                i + 1,
                s.len(),
                (s.len() + 1).saturating_sub(delta)
            )));
        }
        let sub = code.restrict(s)?;
        let ds = sub.min_distance()?;
        if ds != delta {
            return Ok(Check::fail(format!(
                "group {}: C|S has distance {ds}, expected δ = {delta}",
                i + 1
            )));
        }
    }
    Ok(Check::ok())
}

fn check_disjoint(profile: &LocalityProfile, n: usize, k: usize) -> Check {
    let r = profile.r;
    if !(k.is_multiple_of(r) && r < k) {
        return Check::vacuous();
    }
    let width = r + profile.delta - 1;
    let g = &profile.groups;
    for a in 0..g.len() {
        if g[a].support.len() != width {
            return Check::fail(format!(
                "group {} has support size {}, expected r + δ − 1 = {width}",
                a + 1,
                g[a].support.len()
            ));
        }
        for b in a + 1..g.len() {
            if let Some(c) = g[a].support.iter().find(|c| g[b].support.binary_search(c).is_ok()) {
                return Check::fail(format!(
                    "groups {} and {} share coordinate {}",
                    a + 1,
                    b + 1,
                    c + 1
                ));
            }
        }
    }
    if !n.is_multiple_of(width) {
        return Check::fail(format!("r + δ − 1 = {width} does not divide n = {n}"));
    }
    Check::ok()
}

fn check_distance_cap(k: usize, r: usize, delta: usize, d: usize) -> Check {
    const Q: usize = 4;
    if k <= r {
        return Check::vacuous();
    }
    let (cap, why) = if (k - 1).is_multiple_of(r) {
        (delta * Q, "r | (k − 1), cap δq")
    } else {
        (Q, "r ∤ (k − 1), cap q")
    };
    if d <= cap {
        Check::ok()
    } else {
        Check::fail(format!("d = {d} exceeds {cap} ({why})"))
    }
}
