//! Level-by-level class enumeration and minimal-forbidden-pattern discovery.
//!
//! Members of length n are generated as one-point extensions of members of
//! length n-1, which is exact for downward-closed classes. Each candidate is
//! produced from exactly one parent (the one whose deletion position is the
//! first to yield a member), so no global candidate set is ever materialized.

use std::collections::HashSet;

use rayon::prelude::*;

use super::cache::MemberCache;
use super::{ClassOracle, PatternBasis};
use crate::error::Result;
use crate::perm::Permutation;

/// Per-level statistics streamed to the progress callback.
#[derive(Clone, Copy, Debug)]
pub struct LevelStats {
    pub len: usize,
    pub members: usize,
    pub tested: usize,
    pub from_cache: bool,
}

pub type Progress<'a> = &'a (dyn Fn(LevelStats) + Sync);

/// Candidate acceptance at one level. Implementations may consult the full
/// member sets of all shorter lengths.
pub(crate) trait LevelMembership: Sync {
    fn id(&self) -> String;
    fn check_domain(&self, requested: usize) -> Result<()>;
    fn accepts_empty(&self) -> bool;
    fn accepts(&self, candidate: &Permutation, prev: &[HashSet<Permutation>]) -> bool;
}

pub(crate) struct OracleLevels<'a>(pub &'a dyn ClassOracle);

impl LevelMembership for OracleLevels<'_> {
    fn id(&self) -> String {
        self.0.id()
    }

    fn check_domain(&self, requested: usize) -> Result<()> {
        self.0.check_domain(requested)
    }

    fn accepts_empty(&self) -> bool {
        self.0.is_member(&Permutation::empty())
    }

    fn accepts(&self, candidate: &Permutation, _prev: &[HashSet<Permutation>]) -> bool {
        self.0.is_member(candidate)
    }
}

pub(crate) struct BuildOptions<'a> {
    pub cache: Option<&'a MemberCache>,
    pub progress: Option<Progress<'a>>,
    pub collect_basis: bool,
}

impl Default for BuildOptions<'_> {
    fn default() -> Self {
        BuildOptions {
            cache: None,
            progress: None,
            collect_basis: false,
        }
    }
}

pub(crate) struct LevelOutput {
    /// members[n] is the sorted list of members of length n
    pub members: Vec<Vec<Permutation>>,
    /// minimal non-members found, sorted; empty unless requested
    pub basis: Vec<Permutation>,
}

pub(crate) fn build_levels(
    m: &impl LevelMembership,
    max_n: usize,
    opts: &BuildOptions<'_>,
) -> Result<LevelOutput> {
    m.check_domain(max_n)?;
    let oracle_id = m.id();

    let mut members: Vec<Vec<Permutation>> = Vec::with_capacity(max_n + 1);
    let mut sets: Vec<HashSet<Permutation>> = Vec::with_capacity(max_n + 1);
    let mut basis: Vec<Permutation> = Vec::new();

    // level 0: the empty permutation is the only candidate
    if m.accepts_empty() {
        members.push(vec![Permutation::empty()]);
    } else {
        members.push(Vec::new());
        if opts.collect_basis {
            basis.push(Permutation::empty());
        }
    }
    sets.push(members[0].iter().cloned().collect());
    report(opts, 0, members[0].len(), 1, false);

    for n in 1..=max_n {
        if let Some(cached) = load_level(opts, &oracle_id, n) {
            let (lvl_members, lvl_basis) = cached;
            report(opts, n, lvl_members.len(), 0, true);
            sets.push(lvl_members.iter().cloned().collect());
            members.push(lvl_members);
            basis.extend(lvl_basis);
            continue;
        }

        let parents = &members[n - 1];
        let results: Vec<(Vec<Permutation>, Vec<Permutation>, usize)> = parents
            .par_iter()
            .map(|parent| test_candidates_of(m, parent, &sets, opts.collect_basis))
            .collect();

        let mut lvl_members = Vec::new();
        let mut lvl_basis = Vec::new();
        let mut tested = 0usize;
        for (mem, bas, t) in results {
            lvl_members.extend(mem);
            lvl_basis.extend(bas);
            tested += t;
        }
        lvl_members.sort();
        lvl_basis.sort();

        if let Some(cache) = opts.cache {
            // cache write failures only cost a recompute next run
            let _ = cache.store(&oracle_id, "members", n, &lvl_members);
            if opts.collect_basis {
                let _ = cache.store(&oracle_id, "basis", n, &lvl_basis);
            }
        }

        report(opts, n, lvl_members.len(), tested, false);
        sets.push(lvl_members.iter().cloned().collect());
        members.push(lvl_members);
        basis.extend(lvl_basis);
    }

    basis.sort();
    Ok(LevelOutput { members, basis })
}

fn load_level(
    opts: &BuildOptions<'_>,
    oracle_id: &str,
    n: usize,
) -> Option<(Vec<Permutation>, Vec<Permutation>)> {
    let cache = opts.cache?;
    let members = cache.load(oracle_id, "members", n)?;
    if opts.collect_basis {
        let basis = cache.load(oracle_id, "basis", n)?;
        Some((members, basis))
    } else {
        Some((members, Vec::new()))
    }
}

/// Tests every extension of `parent` that `parent` is the canonical producer
/// of: candidate c is handled by the parent deleting at the first position
/// whose deletion is a member.
fn test_candidates_of(
    m: &impl LevelMembership,
    parent: &Permutation,
    sets: &[HashSet<Permutation>],
    collect_basis: bool,
) -> (Vec<Permutation>, Vec<Permutation>, usize) {
    let n = parent.len() + 1;
    let prev = &sets[n - 1];
    let mut members = Vec::new();
    let mut basis = Vec::new();
    let mut tested = 0usize;

    for slot in 0..n {
        for value in 1..=n as u8 {
            let candidate = parent.extend_at(slot, value);
            // skip unless `slot` is the first member-yielding deletion
            let mut canonical = true;
            for j in 0..slot {
                if prev.contains(&candidate.delete_at(j)) {
                    canonical = false;
                    break;
                }
            }
            if !canonical {
                continue;
            }
            tested += 1;
            if m.accepts(&candidate, sets) {
                members.push(candidate);
            } else if collect_basis && slot == 0 {
                // deletions before `slot` would have to be members for
                // minimality, so only slot 0 candidates can qualify
                let minimal = (1..n).all(|j| prev.contains(&candidate.delete_at(j)));
                if minimal {
                    basis.push(candidate);
                }
            }
        }
    }
    (members, basis, tested)
}

fn report(opts: &BuildOptions<'_>, len: usize, members: usize, tested: usize, from_cache: bool) {
    if let Some(progress) = opts.progress {
        progress(LevelStats {
            len,
            members,
            tested,
            from_cache,
        });
    }
}

/// For each n <= max_n, the exact sorted list of class members of length n.
pub fn enumerate_class(
    oracle: &dyn ClassOracle,
    max_n: usize,
) -> Result<Vec<Vec<Permutation>>> {
    enumerate_class_with(oracle, max_n, None, None)
}

pub fn enumerate_class_with(
    oracle: &dyn ClassOracle,
    max_n: usize,
    cache: Option<&MemberCache>,
    progress: Option<Progress<'_>>,
) -> Result<Vec<Vec<Permutation>>> {
    let out = build_levels(
        &OracleLevels(oracle),
        max_n,
        &BuildOptions {
            cache,
            progress,
            collect_basis: false,
        },
    )?;
    Ok(out.members)
}

/// All non-members of length <= max_len whose one-point deletions are all
/// members: the class's minimal forbidden patterns up to that length.
pub fn compute_basis(oracle: &dyn ClassOracle, max_len: usize) -> Result<PatternBasis> {
    compute_basis_with(oracle, max_len, None, None)
}

pub fn compute_basis_with(
    oracle: &dyn ClassOracle,
    max_len: usize,
    cache: Option<&MemberCache>,
    progress: Option<Progress<'_>>,
) -> Result<PatternBasis> {
    let out = build_levels(
        &OracleLevels(oracle),
        max_len,
        &BuildOptions {
            cache,
            progress,
            collect_basis: true,
        },
    )?;
    PatternBasis::new(out.basis)
}

/// The minimal forbidden patterns of Av(c) ∪ Av(d). Searching up to the sum
/// of the two maximum basis lengths is sufficient for the union of two
/// finitely based classes, so the returned basis is complete.
pub fn union_basis(c: &PatternBasis, d: &PatternBasis) -> Result<PatternBasis> {
    union_basis_bounded(c, d, c.max_len() + d.max_len())
}

/// Union basis truncated at an explicit search length.
pub fn union_basis_bounded(
    c: &PatternBasis,
    d: &PatternBasis,
    max_len: usize,
) -> Result<PatternBasis> {
    let oracle = super::UnionOracle::new(
        super::BasisOracle::new(c.clone()),
        super::BasisOracle::new(d.clone()),
    );
    compute_basis(&oracle, max_len)
}
