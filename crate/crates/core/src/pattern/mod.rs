//! Permutation classes defined by forbidden patterns or by membership
//! oracles, basis discovery, and the generalized subword order.

mod cache;
pub(crate) mod enumerate;
mod subword;

pub use cache::MemberCache;
pub use enumerate::{compute_basis, compute_basis_with, enumerate_class, enumerate_class_with,
    union_basis, union_basis_bounded, LevelStats, Progress};
pub use subword::{generalized_subword_leq, subword_leq_in};

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{contains, Permutation};

/// A finite antichain of permutations defining a class by avoidance.
#[derive(Clone, PartialEq, Eq)]
pub struct PatternBasis {
    patterns: Vec<Permutation>, // sorted, deduplicated
}

impl PatternBasis {
    /// Builds a basis, rejecting inputs that are not an antichain under
    /// containment.
    pub fn new(patterns: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut patterns: Vec<Permutation> = patterns.into_iter().collect();
        patterns.sort();
        patterns.dedup();
        if !is_antichain(&patterns) {
            return Err(Error::InvalidPermutation(
                "basis patterns must be pairwise incomparable".into(),
            ));
        }
        Ok(PatternBasis { patterns })
    }

    /// Builds a basis from arbitrary patterns by discarding any pattern that
    /// properly contains another.
    pub fn minimal(patterns: impl IntoIterator<Item = Permutation>) -> Self {
        let mut patterns: Vec<Permutation> = patterns.into_iter().collect();
        patterns.sort();
        patterns.dedup();
        let keep: Vec<Permutation> = patterns
            .iter()
            .filter(|p| {
                !patterns
                    .iter()
                    .any(|q| q != *p && contains(q, p))
            })
            .cloned()
            .collect();
        PatternBasis { patterns: keep }
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.patterns.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    /// The basis whose patterns are the elementwise inverses.
    pub fn inverses(&self) -> Self {
        // inversion is a containment automorphism, so the result is again an
        // antichain
        let mut patterns: Vec<Permutation> =
            self.patterns.iter().map(|p| p.inverse()).collect();
        patterns.sort();
        PatternBasis { patterns }
    }
}

impl fmt::Debug for PatternBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.patterns).finish()
    }
}

/// True iff `pi` contains none of the basis patterns.
pub fn avoids_all(pi: &Permutation, basis: &PatternBasis) -> bool {
    basis.patterns.iter().all(|b| !contains(b, pi))
}

/// True iff the permutations are pairwise incomparable under containment.
/// A repeated entry makes the answer false.
pub fn is_antichain(perms: &[Permutation]) -> bool {
    for (i, a) in perms.iter().enumerate() {
        for b in &perms[i + 1..] {
            if contains(a, b) || contains(b, a) {
                return false;
            }
        }
    }
    true
}

/// A membership decision procedure for a downward-closed class, with the
/// maximum length it is trusted for (`None` means unbounded).
pub trait ClassOracle: Sync {
    /// Stable identifier, used to key the on-disk member cache.
    fn id(&self) -> String;

    fn trusted_max_len(&self) -> Option<usize>;

    fn is_member(&self, pi: &Permutation) -> bool;

    fn check_domain(&self, requested: usize) -> Result<()> {
        match self.trusted_max_len() {
            Some(trusted) if requested > trusted => {
                Err(Error::DomainExceeded { requested, trusted })
            }
            _ => Ok(()),
        }
    }
}

/// The class Av(B) of permutations avoiding every pattern in a basis.
pub struct BasisOracle {
    basis: PatternBasis,
    label: Option<String>,
}

impl BasisOracle {
    pub fn new(basis: PatternBasis) -> Self {
        BasisOracle { basis, label: None }
    }

    /// Same oracle with a short cache identifier instead of the pattern list.
    pub fn labelled(basis: PatternBasis, label: &str) -> Self {
        BasisOracle {
            basis,
            label: Some(label.to_string()),
        }
    }

    pub fn basis(&self) -> &PatternBasis {
        &self.basis
    }
}

impl ClassOracle for BasisOracle {
    fn id(&self) -> String {
        match &self.label {
            Some(label) => label.clone(),
            None => {
                let parts: Vec<String> =
                    self.basis.patterns().iter().map(crate::perm::compact).collect();
                format!("av:{}", parts.join(","))
            }
        }
    }

    fn trusted_max_len(&self) -> Option<usize> {
        None
    }

    fn is_member(&self, pi: &Permutation) -> bool {
        avoids_all(pi, &self.basis)
    }
}

/// The union of two classes: a permutation belongs if either side accepts it.
pub struct UnionOracle<A, B> {
    left: A,
    right: B,
}

impl<A: ClassOracle, B: ClassOracle> UnionOracle<A, B> {
    pub fn new(left: A, right: B) -> Self {
        UnionOracle { left, right }
    }
}

impl<A: ClassOracle, B: ClassOracle> ClassOracle for UnionOracle<A, B> {
    fn id(&self) -> String {
        format!("union({},{})", self.left.id(), self.right.id())
    }

    fn trusted_max_len(&self) -> Option<usize> {
        match (self.left.trusted_max_len(), self.right.trusted_max_len()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) | (None, Some(a)) => Some(a),
            (None, None) => None,
        }
    }

    fn is_member(&self, pi: &Permutation) -> bool {
        self.left.is_member(pi) || self.right.is_member(pi)
    }
}

/// Wraps an oracle with an explicit trusted-domain bound, for procedures that
/// are only sound up to some length.
pub struct BoundedOracle<A> {
    inner: A,
    max_len: usize,
}

impl<A: ClassOracle> BoundedOracle<A> {
    pub fn new(inner: A, max_len: usize) -> Self {
        BoundedOracle { inner, max_len }
    }
}

impl<A: ClassOracle> ClassOracle for BoundedOracle<A> {
    fn id(&self) -> String {
        self.inner.id()
    }

    fn trusted_max_len(&self) -> Option<usize> {
        Some(self.max_len)
    }

    fn is_member(&self, pi: &Permutation) -> bool {
        self.inner.is_member(pi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn avoids_all_examples() {
        let skew_merged = PatternBasis::new([p("2143"), p("3412")]).unwrap();
        assert!(avoids_all(&p("3142"), &skew_merged));
        let separable = PatternBasis::new([p("2413"), p("3142")]).unwrap();
        assert!(!avoids_all(&p("2413"), &separable));
        assert!(avoids_all(&p(""), &skew_merged));
    }

    #[test]
    fn antichain_examples() {
        assert!(!is_antichain(&[p("1"), p("12")]));
        assert!(is_antichain(&[p("2143"), p("3412")]));
        assert!(is_antichain(&[]));
        // duplicates are comparable
        assert!(!is_antichain(&[p("21"), p("21")]));
    }

    #[test]
    fn basis_construction_enforces_antichain() {
        assert!(PatternBasis::new([p("1"), p("12")]).is_err());
        let minimized = PatternBasis::minimal([p("21"), p("321"), p("12")]);
        assert_eq!(minimized.patterns(), &[p("12"), p("21")]);
    }

    #[test]
    fn bounded_oracle_reports_domain() {
        let oracle = BoundedOracle::new(
            BasisOracle::new(PatternBasis::new([p("21")]).unwrap()),
            3,
        );
        assert!(oracle.check_domain(3).is_ok());
        assert!(matches!(
            oracle.check_domain(4),
            Err(Error::DomainExceeded {
                requested: 4,
                trusted: 3
            })
        ));
    }
}
