//! Permutations in one-line notation: containment, symmetries, sums,
//! decompositions, intervals, and one-point deletions/extensions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of {1, ..., n} in one-line notation. The empty permutation
/// (n = 0) is a first-class value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u8).collect(),
        }
    }

    /// Builds a permutation from one-line values, validating that they are a
    /// bijection of {1, ..., n}.
    pub fn new(values: Vec<u8>) -> Result<Self> {
        let n = values.len();
        if n > u8::MAX as usize {
            return Err(Error::TooLarge {
                got: n,
                max: u8::MAX as usize,
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "values must be 1..={n} exactly once"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Value at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.values[i - 1]
    }

    /// The plot {(i, pi(i))} of the permutation.
    pub fn plot(&self) -> PointSet {
        PointSet::new(
            self.values
                .iter()
                .enumerate()
                .map(|(i, &v)| (i as i64 + 1, v as i64))
                .collect(),
        )
    }

    /// Group-theoretic inverse; reflects the plot about the line y = x.
    pub fn inverse(&self) -> Self {
        let mut values = vec![0u8; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v as usize - 1] = i as u8 + 1;
        }
        Permutation { values }
    }

    /// Reflects the plot about the line y = -x (and shifts back).
    pub fn reverse_complement(&self) -> Self {
        let n = self.len() as u8;
        let values = self
            .values
            .iter()
            .rev()
            .map(|&v| n + 1 - v)
            .collect();
        Permutation { values }
    }

    /// Rotates the plot a quarter-turn counter-clockwise.
    pub fn rotate90(&self) -> Self {
        let n = self.len() as u8;
        let inv = self.inverse();
        let values = (0..n).map(|j| inv.values[(n - 1 - j) as usize]).collect();
        Permutation { values }
    }

    /// Diagonal juxtaposition, `self` below-left of `other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let k = self.len() as u8;
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|&v| v + k));
        Permutation { values }
    }

    /// Anti-diagonal juxtaposition, `self` above-left of `other`.
    pub fn skew_sum(&self, other: &Self) -> Self {
        let l = other.len() as u8;
        let mut values: Vec<u8> = self.values.iter().map(|&v| v + l).collect();
        values.extend_from_slice(&other.values);
        Permutation { values }
    }

    /// The unique finest decomposition into sum-indecomposable permutations.
    pub fn sum_components(&self) -> Result<Vec<Self>> {
        if self.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        let mut components = Vec::new();
        let mut start = 0usize;
        let mut max = 0u8;
        for (i, &v) in self.values.iter().enumerate() {
            max = max.max(v);
            if max as usize == i + 1 {
                let part = self.values[start..=i]
                    .iter()
                    .map(|&v| v - start as u8)
                    .collect();
                components.push(Permutation { values: part });
                start = i + 1;
            }
        }
        Ok(components)
    }

    /// The unique finest decomposition into skew-indecomposable permutations.
    pub fn skew_components(&self) -> Result<Vec<Self>> {
        if self.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        let n = self.len();
        let mut components = Vec::new();
        let mut start = 0usize;
        let mut min = u8::MAX;
        for (i, &v) in self.values.iter().enumerate() {
            min = min.min(v);
            if min as usize == n - i {
                let offset = (n - i - 1) as u8;
                let part = self.values[start..=i].iter().map(|&v| v - offset).collect();
                components.push(Permutation { values: part });
                start = i + 1;
            }
        }
        Ok(components)
    }

    pub fn is_sum_decomposable(&self) -> bool {
        if self.len() < 2 {
            return false;
        }
        let mut max = 0u8;
        for (i, &v) in self.values.iter().enumerate().take(self.len() - 1) {
            max = max.max(v);
            if max as usize == i + 1 {
                return true;
            }
        }
        false
    }

    pub fn is_skew_decomposable(&self) -> bool {
        let n = self.len();
        if n < 2 {
            return false;
        }
        let mut min = u8::MAX;
        for (i, &v) in self.values.iter().enumerate().take(n - 1) {
            min = min.min(v);
            if min as usize == n - i {
                return true;
            }
        }
        false
    }

    /// All proper intervals: contiguous index ranges `[a, b]` (1-indexed,
    /// inclusive) of size 2..=n-1 whose values are also contiguous, in
    /// lexicographic order.
    pub fn proper_intervals(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut result = Vec::new();
        for a in 0..n {
            let mut lo = self.values[a];
            let mut hi = self.values[a];
            for b in a + 1..n {
                lo = lo.min(self.values[b]);
                hi = hi.max(self.values[b]);
                let size = b - a + 1;
                if size == n {
                    break;
                }
                if (hi - lo) as usize == b - a {
                    result.push((a + 1, b + 1));
                }
            }
        }
        result
    }

    /// The pattern (standardization) of the entries at 1-indexed positions
    /// `[a, b]` inclusive.
    pub fn pattern_at(&self, a: usize, b: usize) -> Self {
        standardize_values(&self.values[a - 1..b])
    }

    /// Standardizations of `self` with one entry removed, as a set.
    pub fn one_point_deletions(&self) -> BTreeSet<Self> {
        let mut out = BTreeSet::new();
        for i in 0..self.len() {
            out.insert(self.delete_at(i));
        }
        out
    }

    /// The standardization of `self` with the entry at 0-indexed position
    /// `pos` removed.
    pub fn delete_at(&self, pos: usize) -> Self {
        let removed = self.values[pos];
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Permutation { values }
    }

    /// All permutations of length n+1 obtained by inserting one new point,
    /// deduplicated.
    pub fn one_point_extensions(&self) -> BTreeSet<Self> {
        let mut out = BTreeSet::new();
        let n = self.len();
        for slot in 0..=n {
            for value in 1..=n as u8 + 1 {
                out.insert(self.extend_at(slot, value));
            }
        }
        out
    }

    /// Inserts a new entry with value `value` at 0-indexed slot `slot`,
    /// shifting existing values >= `value` up by one.
    pub fn extend_at(&self, slot: usize, value: u8) -> Self {
        let mut values = Vec::with_capacity(self.len() + 1);
        for (i, &v) in self.values.iter().enumerate() {
            if i == slot {
                values.push(value);
            }
            values.push(if v >= value { v + 1 } else { v });
        }
        if slot == self.len() {
            values.push(value);
        }
        Permutation { values }
    }
}

/// True iff some index subsequence of `pi` is order-isomorphic to `sigma`.
///
/// Backtracking over pattern positions. For each pattern position the value
/// of a viable image is pinned between the images of the pattern's value
/// predecessor and successor among already-matched entries, so each extension
/// is checked in constant time.
pub fn contains(sigma: &Permutation, pi: &Permutation) -> bool {
    let k = sigma.len();
    let n = pi.len();
    if k == 0 {
        return true;
    }
    if k > n {
        return false;
    }

    // below[j] / above[j]: pattern position (0-indexed) among 0..j holding the
    // largest value smaller / smallest value larger than sigma(j), if any.
    let sv = sigma.values();
    let mut below = vec![usize::MAX; k];
    let mut above = vec![usize::MAX; k];
    for j in 0..k {
        for t in 0..j {
            if sv[t] < sv[j] && (below[j] == usize::MAX || sv[t] > sv[below[j]]) {
                below[j] = t;
            }
            if sv[t] > sv[j] && (above[j] == usize::MAX || sv[t] < sv[above[j]]) {
                above[j] = t;
            }
        }
    }

    let pv = pi.values();
    // chosen[j] = index in pi matched to pattern position j
    let mut chosen = vec![0usize; k];
    let mut j = 0usize;
    let mut start = 0usize;
    loop {
        let mut advanced = false;
        for i in start..n - (k - j - 1) {
            let v = pv[i];
            let lo = if below[j] == usize::MAX {
                0
            } else {
                pv[chosen[below[j]]]
            };
            let hi = if above[j] == usize::MAX {
                u8::MAX
            } else {
                pv[chosen[above[j]]]
            };
            if v > lo && v < hi {
                chosen[j] = i;
                j += 1;
                if j == k {
                    return true;
                }
                start = i + 1;
                advanced = true;
                break;
            }
        }
        if !advanced {
            // backtrack
            if j == 0 {
                return false;
            }
            j -= 1;
            start = chosen[j] + 1;
        }
    }
}

/// All n! permutations of length n in lexicographic order. Intended for
/// exhaustive sweeps at small n; the caller is responsible for keeping n
/// within reason.
pub fn all_of_length(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut values: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation {
            values: values.clone(),
        });
        if !next_lex(&mut values) {
            return out;
        }
    }
}

fn next_lex(values: &mut [u8]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

fn standardize_values(values: &[u8]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&i| values[i]);
    let mut out = vec![0u8; values.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u8 + 1;
    }
    Permutation { values: out }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "\u{03b5}");
        }
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Writes a permutation in one-line compact form when all values fit in one
/// digit, space-separated otherwise. Used for file names and report payloads.
pub fn compact(pi: &Permutation) -> String {
    if pi.is_empty() {
        return "\u{03b5}".to_string();
    }
    if pi.len() <= 9 {
        pi.values().iter().map(|v| v.to_string()).collect()
    } else {
        pi.to_string()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts space-separated decimal values, the compact digit form for
    /// n <= 9, and `ε` (or an empty string) for the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "\u{03b5}" || s == "eps" {
            return Ok(Permutation::empty());
        }
        if s.contains(char::is_whitespace) {
            let values = s
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u8>()
                        .map_err(|_| Error::Parse(format!("bad value {tok:?}")))
                })
                .collect::<Result<Vec<u8>>>()?;
            return Permutation::new(values);
        }
        // compact digit form, only for n <= 9
        if s.len() > 9 {
            return Err(Error::Parse(format!(
                "compact form {s:?} too long; use space-separated values"
            )));
        }
        let values = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d >= 1)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Permutation::new(values)
    }
}

/// A finite generic set of points: pairwise distinct x's and y's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<(i64, i64)>,
}

impl PointSet {
    pub fn new(points: Vec<(i64, i64)>) -> Self {
        PointSet { points }
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }
}

/// Reads off the permutation of a generic point set: sort by x, then record
/// the rank of each point's y among all y's.
pub fn standardize(ps: &PointSet) -> Result<Permutation> {
    let pts = ps.points();
    let n = pts.len();
    if n > u8::MAX as usize {
        return Err(Error::TooLarge {
            got: n,
            max: u8::MAX as usize,
        });
    }
    let mut by_x: Vec<usize> = (0..n).collect();
    by_x.sort_by_key(|&i| pts[i].0);
    for w in by_x.windows(2) {
        if pts[w[0]].0 == pts[w[1]].0 {
            return Err(Error::InvalidPointSet(format!(
                "duplicate x coordinate {}",
                pts[w[0]].0
            )));
        }
    }
    let mut by_y: Vec<usize> = (0..n).collect();
    by_y.sort_by_key(|&i| pts[i].1);
    for w in by_y.windows(2) {
        if pts[w[0]].1 == pts[w[1]].1 {
            return Err(Error::InvalidPointSet(format!(
                "duplicate y coordinate {}",
                pts[w[0]].1
            )));
        }
    }
    let mut rank = vec![0u8; n];
    for (r, &i) in by_y.iter().enumerate() {
        rank[i] = r as u8 + 1;
    }
    let values = by_x.iter().map(|&i| rank[i]).collect();
    Ok(Permutation { values })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn standardize_examples() {
        let ps = PointSet::new(vec![(2, -2), (1, 2), (-2, 1), (-1, -5)]);
        assert_eq!(standardize(&ps).unwrap(), p("3142"));
        assert_eq!(standardize(&PointSet::new(vec![])).unwrap(), p(""));
        assert_eq!(standardize(&PointSet::new(vec![(5, 7)])).unwrap(), p("1"));
    }

    #[test]
    fn standardize_rejects_degenerate_point_sets() {
        let dup_x = PointSet::new(vec![(1, 2), (1, 3)]);
        assert!(matches!(
            standardize(&dup_x),
            Err(Error::InvalidPointSet(_))
        ));
        let dup_y = PointSet::new(vec![(1, 2), (3, 2)]);
        assert!(matches!(
            standardize(&dup_y),
            Err(Error::InvalidPointSet(_))
        ));
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&p("25413"), &p("36285714")));
        assert!(!contains(&p("2413"), &p("3142")));
        assert!(contains(&p(""), &p("3142")));
        assert!(contains(&p(""), &p("")));
        assert!(contains(&p("21"), &p("2143")));
        assert!(!contains(&p("321"), &p("1234")));
    }

    #[test]
    fn containment_brute_force_agreement() {
        // compare against subset enumeration on everything up to length 6
        let sigma = p("231");
        for pi in all_perms(6) {
            let brute = subsets_contain(&sigma, &pi);
            assert_eq!(contains(&sigma, &pi), brute, "pi = {pi}");
        }
    }

    fn subsets_contain(sigma: &Permutation, pi: &Permutation) -> bool {
        let k = sigma.len();
        let n = pi.len();
        if k > n {
            return false;
        }
        let pv = pi.values();
        (0u32..1 << n).any(|mask| {
            if mask.count_ones() as usize != k {
                return false;
            }
            let sub: Vec<u8> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| pv[i]).collect();
            standardize_values(&sub) == *sigma
        })
    }

    fn all_perms(n: usize) -> Vec<Permutation> {
        all_of_length(n)
    }

    #[test]
    fn all_of_length_is_sorted_and_complete() {
        for n in 0..=5 {
            let perms = all_of_length(n);
            let expect: usize = (1..=n).product();
            assert_eq!(perms.len(), expect.max(1));
            assert!(perms.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(p("3142").inverse(), p("2413"));
        assert_eq!(p("12345").reverse_complement(), p("12345"));
        // rotate90 fixes 3142
        assert_eq!(p("3142").rotate90(), p("3142"));
    }

    #[test]
    fn symmetry_involutions_and_rotation_order() {
        for pi in all_perms(5) {
            assert_eq!(pi.inverse().inverse(), pi);
            assert_eq!(pi.reverse_complement().reverse_complement(), pi);
            let r = pi.rotate90();
            let r2 = r.rotate90();
            let r4 = r2.rotate90().rotate90();
            assert_eq!(r4, pi);
            assert_eq!(r2, pi.reverse_complement());
        }
    }

    #[test]
    fn rotation_agrees_with_plot_rotation() {
        for pi in all_perms(5) {
            let rotated = PointSet::new(
                pi.plot().points().iter().map(|&(x, y)| (-y, x)).collect(),
            );
            assert_eq!(pi.rotate90(), standardize(&rotated).unwrap());
        }
    }

    #[test]
    fn containment_respects_symmetries() {
        let pairs = [("132", "35142"), ("21", "2143"), ("2413", "3142")];
        for (a, b) in pairs {
            let (sigma, pi) = (p(a), p(b));
            let base = contains(&sigma, &pi);
            assert_eq!(contains(&sigma.inverse(), &pi.inverse()), base);
            assert_eq!(
                contains(&sigma.reverse_complement(), &pi.reverse_complement()),
                base
            );
            assert_eq!(contains(&sigma.rotate90(), &pi.rotate90()), base);
        }
    }

    #[test]
    fn sum_examples() {
        assert_eq!(p("21").direct_sum(&p("21")), p("2143"));
        assert_eq!(p("3142").direct_sum(&p("")), p("3142"));
        assert_eq!(p("").direct_sum(&p("3142")), p("3142"));
        assert_eq!(p("1").skew_sum(&p("12")), p("312"));
    }

    #[test]
    fn direct_sum_is_associative() {
        let (a, b, c) = (p("21"), p("132"), p("1"));
        assert_eq!(
            a.direct_sum(&b).direct_sum(&c),
            a.direct_sum(&b.direct_sum(&c))
        );
    }

    #[test]
    fn component_examples() {
        assert_eq!(p("2143").sum_components().unwrap(), vec![p("21"), p("21")]);
        assert_eq!(p("1").sum_components().unwrap(), vec![p("1")]);
        assert_eq!(p("3142").sum_components().unwrap(), vec![p("3142")]);
        assert_eq!(p("312").skew_components().unwrap(), vec![p("1"), p("12")]);
        assert!(matches!(
            p("").sum_components(),
            Err(Error::EmptyPermutation)
        ));
        assert!(matches!(
            p("").skew_components(),
            Err(Error::EmptyPermutation)
        ));
    }

    #[test]
    fn components_recompose() {
        for pi in all_perms(5) {
            let sum = pi.sum_components().unwrap();
            let mut acc = Permutation::empty();
            for part in &sum {
                assert!(!part.is_sum_decomposable() || part.len() == 1);
                acc = acc.direct_sum(part);
            }
            assert_eq!(acc, pi);

            let skew = pi.skew_components().unwrap();
            let mut acc = Permutation::empty();
            for part in &skew {
                acc = acc.skew_sum(part);
            }
            assert_eq!(acc, pi);
        }
    }

    #[test]
    fn interval_examples() {
        assert!(p("3142").proper_intervals().is_empty());
        assert_eq!(
            p("1234").proper_intervals(),
            vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
        );
        assert!(p("1").proper_intervals().is_empty());
    }

    #[test]
    fn deletion_examples() {
        let dels = p("2143").one_point_deletions();
        let expect: BTreeSet<Permutation> = brute_force_sub_patterns(&p("2143"), 3);
        assert_eq!(dels, expect);
        assert_eq!(dels, [p("132"), p("213")].into_iter().collect());

        let dels = p("1").one_point_deletions();
        assert_eq!(dels, [p("")].into_iter().collect());
    }

    fn brute_force_sub_patterns(pi: &Permutation, k: usize) -> BTreeSet<Permutation> {
        let n = pi.len();
        let pv = pi.values();
        let mut out = BTreeSet::new();
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize == k {
                let sub: Vec<u8> =
                    (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| pv[i]).collect();
                out.insert(standardize_values(&sub));
            }
        }
        out
    }

    #[test]
    fn extensions_contain_their_parent() {
        for pi in [p(""), p("1"), p("2143"), p("41352")] {
            let exts = pi.one_point_extensions();
            assert!(exts.len() <= (pi.len() + 1) * (pi.len() + 1));
            for ext in &exts {
                assert_eq!(ext.len(), pi.len() + 1);
                assert!(ext.one_point_deletions().contains(&pi));
                assert!(contains(&pi, ext));
            }
        }
    }

    #[test]
    fn deletions_are_exactly_covered_patterns() {
        for pi in all_perms(5) {
            let dels = pi.one_point_deletions();
            for sigma in all_perms(4) {
                assert_eq!(
                    dels.contains(&sigma),
                    contains(&sigma, &pi),
                    "pi = {pi}, sigma = {sigma}"
                );
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["", "1", "3142", "2 1 4 3"] {
            let pi = p(s);
            let shown = pi.to_string();
            assert_eq!(shown.parse::<Permutation>().unwrap(), pi);
        }
        assert_eq!("\u{03b5}".parse::<Permutation>().unwrap(), p(""));
        assert!("3141".parse::<Permutation>().is_err());
        assert!("0".parse::<Permutation>().is_err());
        assert!("1 1".parse::<Permutation>().is_err());
        // compact form with more than 9 entries is rejected
        assert!("1234567891".parse::<Permutation>().is_err());
        // but the space-separated form handles two digits
        let long = (1..=12).map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        assert_eq!(long.parse::<Permutation>().unwrap(), Permutation::identity(12));
    }

    #[test]
    fn standardize_of_plot_is_identity_map() {
        for pi in all_perms(4) {
            assert_eq!(standardize(&pi.plot()).unwrap(), pi);
        }
    }
}
