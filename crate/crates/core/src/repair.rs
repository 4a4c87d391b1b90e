//! Local erasure repair.
//!
//! Erased symbols are recovered group by group from the local parity rows
//! alone, peeling across overlapping groups until nothing changes. Global
//! decoding is never attempted: a group with more than `δ − 1` erasures is
//! reported as a local failure.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::BuiltCode;
use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::mat4::Mat4;

/// A set of erased coordinates, stored 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErasurePattern {
    erased: BTreeSet<usize>,
    n: usize,
}

impl ErasurePattern {
    /// `coords` are 1-based and must lie in `1..=n`.
    pub fn new(n: usize, coords: &[usize]) -> Result<ErasurePattern> {
        if let Some(&c) = coords.iter().find(|&&c| c == 0 || c > n) {
            return Err(Error::Range(format!("erased coordinate {c} outside 1..={n}")));
        }
        Ok(ErasurePattern {
            erased: coords.iter().copied().collect(),
            n,
        })
    }

    pub fn coords(&self) -> Vec<usize> {
        self.erased.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.erased.len()
    }

    pub fn is_empty(&self) -> bool {
        self.erased.is_empty()
    }

    /// Blank out the erased positions of `word`.
    pub fn apply(&self, word: &[Gf4]) -> Result<Vec<Option<Gf4>>> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: word.len(),
            });
        }
        Ok(word
            .iter()
            .enumerate()
            .map(|(i, &x)| (!self.erased.contains(&(i + 1))).then_some(x))
            .collect())
    }
}

pub fn encode(c: &BuiltCode, message: &[Gf4]) -> Result<Vec<Gf4>> {
    c.code.encode(message)
}

/// One local solve. Coordinates and the group index are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairStep {
    pub group: usize,
    pub repaired: Vec<usize>,
    /// Surviving coordinates of the group that were read.
    pub reads: Vec<usize>,
}

/// A group that could not repair its erasures locally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFailure {
    /// 1-based group index.
    pub group: usize,
    /// 1-based erased coordinates still inside the group.
    pub erased: Vec<usize>,
    pub underdetermined: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepairOutcome {
    Recovered {
        codeword: Vec<Gf4>,
        trace: Vec<RepairStep>,
    },
    LocalFailure {
        partial: Vec<Option<Gf4>>,
        trace: Vec<RepairStep>,
        /// 1-based coordinates left erased.
        unresolved: Vec<usize>,
        groups: Vec<GroupFailure>,
    },
}

impl RepairOutcome {
    pub fn is_recovered(&self) -> bool {
        matches!(self, RepairOutcome::Recovered { .. })
    }

    pub fn trace(&self) -> &[RepairStep] {
        match self {
            RepairOutcome::Recovered { trace, .. } | RepairOutcome::LocalFailure { trace, .. } => trace,
        }
    }
}

/// Solve `H_E · x = H_K · c_K` for the erased symbols of one group.
/// Returns `None` when the erased columns are dependent.
fn solve_group(h: &Mat4, support: &[usize], word: &[Option<Gf4>]) -> Option<Vec<(usize, Gf4)>> {
    let erased: Vec<usize> = support.iter().copied().filter(|&c| word[c].is_none()).collect();
    let mut rows = Vec::with_capacity(h.rows());
    for r in 0..h.rows() {
        let mut row: Vec<Gf4> = erased.iter().map(|&c| h.get(r, c)).collect();
        // characteristic 2: moving the known terms across needs no sign change
        let rhs = support
            .iter()
            .filter_map(|&c| word[c].map(|x| h.get(r, c).mul(x)))
            .fold(Gf4::ZERO, Gf4::add);
        row.push(rhs);
        rows.push(row);
    }
    let aug = Mat4::from_rows(&rows, erased.len() + 1).ok()?;
    let (red, pivots) = aug.rref();
    if pivots.len() != erased.len() || pivots.iter().any(|&p| p >= erased.len()) {
        return None;
    }
    Some(
        pivots
            .iter()
            .enumerate()
            .map(|(row, &p)| (erased[p], red.get(row, erased.len())))
            .collect(),
    )
}

/// Repair `received` using local groups only.
///
/// Each pass takes the erased coordinates in increasing order and solves
/// the lowest-index group that contains the coordinate and has at most
/// `δ − 1` erasures. Passes repeat until no group makes progress, at most
/// `n` times. A recovered word that fails the full syndrome check is an
/// internal error.
pub fn local_repair(c: &BuiltCode, received: &[Option<Gf4>]) -> Result<RepairOutcome> {
    let prof = &c.profile;
    let n = prof.n();
    if received.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: received.len(),
        });
    }
    let tolerance = prof.delta - 1;
    let mut word = received.to_vec();
    let mut trace = Vec::new();
    let mut failed: BTreeSet<usize> = BTreeSet::new();
    let erasures_in = |w: &[Option<Gf4>], g: usize| prof.groups[g].support.iter().filter(|&&s| w[s].is_none()).count();

    for _ in 0..n.max(1) {
        let mut progress = false;
        for i in 0..n {
            if word[i].is_some() {
                continue;
            }
            let Some(g) = prof
                .groups_containing(i)
                .into_iter()
                .find(|&g| !failed.contains(&g) && erasures_in(&word, g) <= tolerance)
            else {
                continue;
            };
            let support = &prof.groups[g].support;
            match solve_group(&prof.local_rows(g), support, &word) {
                Some(values) => {
                    let reads = support.iter().filter(|&&s| word[s].is_some()).map(|s| s + 1).collect();
                    let mut repaired: Vec<usize> = values.iter().map(|&(c, _)| c + 1).collect();
                    repaired.sort_unstable();
                    for (c, v) in values {
                        word[c] = Some(v);
                    }
                    trace.push(RepairStep {
                        group: g + 1,
                        repaired,
                        reads,
                    });
                    progress = true;
                }
                None => {
                    failed.insert(g);
                }
            }
        }
        if !progress {
            break;
        }
    }

    let unresolved: Vec<usize> = (0..n).filter(|&i| word[i].is_none()).map(|i| i + 1).collect();
    if unresolved.is_empty() {
        let codeword: Vec<Gf4> = word.into_iter().map(|x| x.expect("resolved")).collect();
        if !c.code.contains(&codeword)? {
            return Err(Error::Structure("repaired word has a nonzero syndrome".into()));
        }
        return Ok(RepairOutcome::Recovered { codeword, trace });
    }
    let groups = (0..prof.l())
        .filter_map(|g| {
            let erased: Vec<usize> = prof.groups[g]
                .support
                .iter()
                .filter(|&&s| word[s].is_none())
                .map(|s| s + 1)
                .collect();
            (!erased.is_empty()).then(|| GroupFailure {
                group: g + 1,
                erased,
                underdetermined: failed.contains(&g),
            })
        })
        .collect();
    Ok(RepairOutcome::LocalFailure {
        partial: word,
        trace,
        unresolved,
        groups,
    })
}

/// True when no group holds more than `δ − 1` of the erasures.
pub fn is_locally_repairable(c: &BuiltCode, pattern: &ErasurePattern) -> bool {
    let tol = c.profile.delta - 1;
    c.profile
        .groups
        .iter()
        .all(|g| g.support.iter().filter(|&&s| pattern.erased.contains(&(s + 1))).count() <= tol)
}

/// A random pattern with at most `δ − 1` erasures in every group.
pub fn random_admissible_pattern(c: &BuiltCode, rng: &mut ChaCha8Rng) -> ErasurePattern {
    let n = c.profile.n();
    loop {
        let mut coords = Vec::new();
        for g in &c.profile.groups {
            let count = rng.gen_range(0..c.profile.delta);
            coords.extend(g.support.choose_multiple(rng, count).map(|s| s + 1));
        }
        let p = ErasurePattern::new(n, &coords).expect("coordinates from supports");
        if is_locally_repairable(c, &p) {
            return p;
        }
    }
}

pub fn random_message(c: &BuiltCode, rng: &mut ChaCha8Rng) -> Vec<Gf4> {
    (0..c.code.k())
        .map(|_| Gf4::from_bits(rng.gen_range(0..4u8)).expect("two bits"))
        .collect()
}

/// Outcome counts over repeated trials of one erasure pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialSummary {
    pub trials: usize,
    pub recovered: usize,
    /// Largest number of reads in one local solve.
    pub max_reads: usize,
    /// The outcome of the first trial.
    pub first: RepairOutcome,
}

/// Encode `trials` random messages (seeded), erase `pattern` and repair.
/// A trial counts as recovered only if the original codeword comes back.
pub fn run_trials(c: &BuiltCode, pattern: &ErasurePattern, trials: usize, seed: u64) -> Result<TrialSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut recovered = 0;
    let mut max_reads = 0;
    let mut first = None;
    for _ in 0..trials.max(1) {
        let word = encode(c, &random_message(c, &mut rng))?;
        let out = local_repair(c, &pattern.apply(&word)?)?;
        if let RepairOutcome::Recovered { codeword, .. } = &out {
            recovered += usize::from(*codeword == word);
        }
        max_reads = max_reads.max(out.trace().iter().map(|s| s.reads.len()).max().unwrap_or(0));
        first.get_or_insert(out);
    }
    Ok(TrialSummary {
        trials: trials.max(1),
        recovered,
        max_reads,
        first: first.expect("at least one trial"),
    })
}
