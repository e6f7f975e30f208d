//! The widdershins spiral class: spiral construction, central insertion,
//! ring decomposition, membership, forbidden patterns, and counting.

mod counting;
mod ring;
mod spiral;

pub use counting::gf_coefficients;
pub use ring::{
    compute_forbidden_patterns, compute_forbidden_patterns_with, enumerate_members,
    enumerate_members_with, is_member, ring_compose, ring_decompose, sigma_leq, Quadrant,
    RingWord, SigmaLetter, SpiralMembership,
};
pub use spiral::{central_insert, spiral, Orientation, SpiralSpec};

use crate::pattern::{avoids_all, BasisOracle, ClassOracle, PatternBasis};
use crate::perm::Permutation;

fn basis_of(patterns: &[&str]) -> PatternBasis {
    PatternBasis::new(patterns.iter().map(|s| s.parse::<Permutation>().unwrap()))
        .expect("static pattern lists are antichains")
}

/// The thirteen minimal forbidden patterns of the spiral closure.
pub fn forbidden_patterns() -> PatternBasis {
    basis_of(&[
        "2143", "2413", "3412", "314562", "412563", "415632", "431562", "512364", "512643",
        "516432", "541263", "541632", "543162",
    ])
}

/// The twenty-four minimal forbidden patterns of the union of the closure
/// with its elementwise inverse.
pub fn union_forbidden_patterns() -> PatternBasis {
    basis_of(&[
        "2143", "3412", "234615", "236145", "236514", "261345", "265134", "265413", "314562",
        "346215", "362145", "365214", "412563", "415632", "431562", "463215", "512364", "512643",
        "516432", "541263", "541632", "543162", "28536417", "71463582",
    ])
}

/// Membership decided by avoidance of the thirteen forbidden patterns.
/// Cross-checked against the ring-decomposition test in the acceptance suite.
pub fn is_member_via_patterns(pi: &Permutation) -> bool {
    avoids_all(pi, &forbidden_patterns())
}

/// Membership in the union of the closure and its inverse.
pub fn is_member_or_inverse(pi: &Permutation) -> bool {
    is_member(pi) || is_member(&pi.inverse())
}

/// Splittable into an increasing plus a decreasing subsequence: Av(2143, 3412).
pub fn is_skew_merged(pi: &Permutation) -> bool {
    avoids_all(pi, &skew_merged_patterns())
}

/// Buildable from single points by sums and skew sums: Av(2413, 3142).
pub fn is_separable(pi: &Permutation) -> bool {
    avoids_all(pi, &separable_patterns())
}

pub fn skew_merged_patterns() -> PatternBasis {
    basis_of(&["2143", "3412"])
}

pub fn separable_patterns() -> PatternBasis {
    basis_of(&["2413", "3142"])
}

/// The spiral closure as a membership oracle (ring-decomposition backed).
pub struct WiddershinsOracle {
    membership: SpiralMembership,
}

impl WiddershinsOracle {
    pub fn new() -> Self {
        WiddershinsOracle {
            membership: SpiralMembership::new(),
        }
    }
}

impl Default for WiddershinsOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl ClassOracle for WiddershinsOracle {
    fn id(&self) -> String {
        "W".to_string()
    }

    fn trusted_max_len(&self) -> Option<usize> {
        None
    }

    fn is_member(&self, pi: &Permutation) -> bool {
        self.membership.is_member(pi)
    }
}

/// Oracle for the inverse class.
pub struct InverseOracle {
    membership: SpiralMembership,
}

impl InverseOracle {
    pub fn new() -> Self {
        InverseOracle {
            membership: SpiralMembership::new(),
        }
    }
}

impl Default for InverseOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl ClassOracle for InverseOracle {
    fn id(&self) -> String {
        "Winv".to_string()
    }

    fn trusted_max_len(&self) -> Option<usize> {
        None
    }

    fn is_member(&self, pi: &Permutation) -> bool {
        self.membership.is_member(&pi.inverse())
    }
}

/// Sorted members of the union class W ∪ W⁻¹ per length, derived from the
/// level enumeration of W.
pub fn enumerate_union_members(max_n: usize) -> Vec<Vec<Permutation>> {
    let levels = enumerate_members(max_n);
    levels
        .into_iter()
        .map(|level| {
            let mut union: Vec<Permutation> = level.iter().map(|p| p.inverse()).collect();
            union.extend(level);
            union.sort();
            union.dedup();
            union
        })
        .collect()
}

/// A named membership oracle selectable from the command line.
pub fn oracle_by_name(name: &str) -> Option<Box<dyn ClassOracle + Send>> {
    match name {
        "W" => Some(Box::new(WiddershinsOracle::new())),
        "Winv" => Some(Box::new(InverseOracle::new())),
        "WuWinv" => Some(Box::new(crate::pattern::UnionOracle::new(
            WiddershinsOracle::new(),
            InverseOracle::new(),
        ))),
        "skew-merged" => Some(Box::new(BasisOracle::labelled(
            skew_merged_patterns(),
            "skew-merged",
        ))),
        "separable" => Some(Box::new(BasisOracle::labelled(
            separable_patterns(),
            "separable",
        ))),
        _ => {
            let patterns = name.strip_prefix("av:")?;
            let basis = PatternBasis::minimal(
                patterns
                    .split(',')
                    .map(|tok| tok.parse::<Permutation>().ok())
                    .collect::<Option<Vec<_>>>()?,
            );
            Some(Box::new(BasisOracle::new(basis)))
        }
    }
}
