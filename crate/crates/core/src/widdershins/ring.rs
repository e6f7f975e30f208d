//! Ring decomposition of the spiral closure: every member is either a corner
//! addition to a shorter member or a central insertion of a shorter member
//! into a spiral of length at least 4. A decomposition is encoded as a word
//! over the alphabet of quadrant letters; failure to decompose is exactly
//! non-membership.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use dashmap::DashMap;

use super::spiral::{central_insert, spiral, Orientation, SpiralSpec};
use crate::error::{Error, Result};
use crate::pattern::MemberCache;
use crate::pattern::Progress;
use crate::perm::Permutation;

/// Position of a point (or a spiral's first point) relative to the center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quadrant {
    NE,
    NW,
    SW,
    SE,
}

impl Quadrant {
    pub fn name(self) -> &'static str {
        match self {
            Quadrant::NE => "NE",
            Quadrant::NW => "NW",
            Quadrant::SW => "SW",
            Quadrant::SE => "SE",
        }
    }

    /// The spiral orientation whose first point lies in this quadrant.
    pub fn orientation(self) -> Orientation {
        match self {
            Quadrant::SE => Orientation::Standard,
            Quadrant::NE => Orientation::Rot90,
            Quadrant::NW => Orientation::Rot180,
            Quadrant::SW => Orientation::Rot270,
        }
    }

    pub fn of_orientation(o: Orientation) -> Self {
        match o {
            Orientation::Standard => Quadrant::SE,
            Orientation::Rot90 => Quadrant::NE,
            Orientation::Rot180 => Quadrant::NW,
            Orientation::Rot270 => Quadrant::SW,
        }
    }
}

/// A letter of the ring alphabet: a quadrant with index k = 1 (single point)
/// or k >= 4 (spiral length).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SigmaLetter {
    quadrant: Quadrant,
    k: usize,
}

impl SigmaLetter {
    pub fn new(quadrant: Quadrant, k: usize) -> Result<Self> {
        if k != 1 && k < 4 {
            return Err(Error::UnknownLetter(format!("{}{k}", quadrant.name())));
        }
        Ok(SigmaLetter { quadrant, k })
    }

    pub fn quadrant(&self) -> Quadrant {
        self.quadrant
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// The four-chain order on the alphabet: comparable only within a quadrant,
/// by index.
pub fn sigma_leq(a: &SigmaLetter, b: &SigmaLetter) -> bool {
    a.quadrant == b.quadrant && a.k <= b.k
}

/// A word over the ring alphabet, applied left to right starting from the
/// empty permutation (the last letter is the outermost operation).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RingWord {
    letters: Vec<SigmaLetter>,
}

impl RingWord {
    pub fn new(letters: Vec<SigmaLetter>) -> Self {
        RingWord { letters }
    }

    pub fn letters(&self) -> &[SigmaLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for RingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "\u{03b5}");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| format!("{}{}", l.quadrant.name(), l.k))
            .collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for RingWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "\u{03b5}" {
            return Ok(RingWord::default());
        }
        let letters = s
            .split('.')
            .map(|tok| {
                let quadrant = match tok.get(..2) {
                    Some("NE") => Quadrant::NE,
                    Some("NW") => Quadrant::NW,
                    Some("SW") => Quadrant::SW,
                    Some("SE") => Quadrant::SE,
                    _ => return Err(Error::UnknownLetter(tok.to_string())),
                };
                let k: usize = tok[2..]
                    .parse()
                    .map_err(|_| Error::UnknownLetter(tok.to_string()))?;
                SigmaLetter::new(quadrant, k)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RingWord { letters })
    }
}

/// Evaluates a ring word: k = 1 letters add one point in the named quadrant,
/// k >= 4 letters centrally insert the accumulated permutation into the
/// spiral of length k with its first point in the named quadrant.
pub fn ring_compose(word: &RingWord) -> Permutation {
    let one = Permutation::identity(1);
    let mut acc = Permutation::empty();
    for letter in &word.letters {
        acc = if letter.k == 1 {
            match letter.quadrant {
                Quadrant::SW => one.direct_sum(&acc),
                Quadrant::NE => acc.direct_sum(&one),
                Quadrant::NW => one.skew_sum(&acc),
                Quadrant::SE => acc.skew_sum(&one),
            }
        } else {
            let spec = SpiralSpec::new(letter.quadrant.orientation(), letter.k)
                .expect("letter index is a valid spiral length");
            central_insert(spec, &acc).expect("valid spec")
        };
    }
    acc
}

/// Memoizing membership test for the spiral closure, shared across threads.
#[derive(Default)]
pub struct SpiralMembership {
    memo: DashMap<Permutation, bool>,
}

impl SpiralMembership {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_member(&self, pi: &Permutation) -> bool {
        if pi.len() <= 1 {
            return true;
        }
        if let Some(hit) = self.memo.get(pi) {
            return *hit;
        }
        let result = ring_step(pi, &|alpha| self.is_member(alpha));
        self.memo.insert(pi.clone(), result);
        result
    }
}

/// One step of the ring recursion, with sub-membership answered by the
/// caller. Returns whether any decomposition step applies.
pub(crate) fn ring_step(pi: &Permutation, sub_member: &dyn Fn(&Permutation) -> bool) -> bool {
    let n = pi.len();
    if n <= 1 {
        return true;
    }
    let v = pi.values();
    let last = n - 1;
    // corner additions
    if v[0] == 1 || v[0] == n as u8 {
        return sub_member(&pi.delete_at(0));
    }
    if v[last] == n as u8 || v[last] == 1 {
        return sub_member(&pi.delete_at(last));
    }
    // a sum- or skew-decomposable member always has a corner entry, since one
    // component must be monotone
    if pi.is_sum_decomposable() || pi.is_skew_decomposable() {
        return false;
    }
    if n < 4 {
        return false;
    }
    // central insertion: the inserted block is an interval (possibly empty)
    for o in Orientation::ALL {
        let spec = SpiralSpec::new(o, n).unwrap();
        if spiral(spec).unwrap() == *pi {
            return true;
        }
    }
    for (a, b) in intervals_up_to(pi, n - 4) {
        let k = n - (b - a + 1);
        let alpha = pi.pattern_at(a, b);
        for o in Orientation::ALL {
            let spec = SpiralSpec::new(o, k).unwrap();
            if central_insert(spec, &alpha).unwrap() == *pi && sub_member(&alpha) {
                return true;
            }
        }
    }
    false
}

/// Contiguous index ranges (1-indexed, inclusive) with contiguous values, of
/// size 1..=max_size, in left-to-right order.
fn intervals_up_to(pi: &Permutation, max_size: usize) -> Vec<(usize, usize)> {
    let n = pi.len();
    let v = pi.values();
    let mut out = Vec::new();
    for a in 0..n {
        let mut lo = v[a];
        let mut hi = v[a];
        for b in a..n {
            lo = lo.min(v[b]);
            hi = hi.max(v[b]);
            let size = b - a + 1;
            if size > max_size {
                break;
            }
            if (hi - lo) as usize == b - a {
                out.push((a + 1, b + 1));
            }
        }
    }
    out
}

/// Membership in the spiral closure, by attempting a ring decomposition.
pub fn is_member(pi: &Permutation) -> bool {
    SpiralMembership::new().is_member(pi)
}

/// A ring decomposition of `pi`, or `NotInClosure` if none exists (this
/// failure is exactly the membership test).
///
/// Decompositions are not unique; for reproducibility the cases are tried in
/// the order SW1, NE1, NW1, SE1, then spirals by ascending length, with the
/// orientation cycle starting at standard and insertion intervals scanned
/// left to right.
pub fn ring_decompose(pi: &Permutation) -> Result<RingWord> {
    let membership = SpiralMembership::new();
    if !membership.is_member(pi) {
        return Err(Error::NotInClosure);
    }
    let mut letters = Vec::new();
    decompose_member(pi.clone(), &mut letters);
    letters.reverse();
    Ok(RingWord { letters })
}

/// Peels outer letters off a known member, pushing them outermost-first.
fn decompose_member(mut pi: Permutation, out: &mut Vec<SigmaLetter>) {
    loop {
        let n = pi.len();
        if n == 0 {
            return;
        }
        if n == 1 {
            // fixed convention: the 1-permutation is a southwest point on ε
            out.push(SigmaLetter::new(Quadrant::SW, 1).unwrap());
            return;
        }
        let v = pi.values();
        let last = n - 1;
        if v[0] == 1 {
            out.push(SigmaLetter::new(Quadrant::SW, 1).unwrap());
            pi = pi.delete_at(0);
            continue;
        }
        if v[last] == n as u8 {
            out.push(SigmaLetter::new(Quadrant::NE, 1).unwrap());
            pi = pi.delete_at(last);
            continue;
        }
        if v[0] == n as u8 {
            out.push(SigmaLetter::new(Quadrant::NW, 1).unwrap());
            pi = pi.delete_at(0);
            continue;
        }
        if v[last] == 1 {
            out.push(SigmaLetter::new(Quadrant::SE, 1).unwrap());
            pi = pi.delete_at(last);
            continue;
        }
        let (letter, alpha) = spiral_step(&pi).expect("member permutations decompose");
        out.push(letter);
        pi = alpha;
    }
}

/// Finds the first central-insertion step, in the documented order.
fn spiral_step(pi: &Permutation) -> Option<(SigmaLetter, Permutation)> {
    let n = pi.len();
    for k in 4..=n {
        let size = n - k;
        let windows: Vec<(usize, usize)> = if size == 0 {
            vec![(1, 0)] // empty block
        } else {
            (1..=n - size + 1).map(|a| (a, a + size - 1)).collect()
        };
        for o in Orientation::ALL {
            let spec = SpiralSpec::new(o, k).unwrap();
            for &(a, b) in &windows {
                let alpha = if size == 0 {
                    Permutation::empty()
                } else {
                    pi.pattern_at(a, b)
                };
                if central_insert(spec, &alpha).unwrap() == *pi {
                    let letter = SigmaLetter::new(Quadrant::of_orientation(o), k).unwrap();
                    return Some((letter, alpha));
                }
            }
        }
    }
    None
}

struct RingLevels;

impl crate::pattern::enumerate::LevelMembership for RingLevels {
    fn id(&self) -> String {
        "W".to_string()
    }

    fn check_domain(&self, _requested: usize) -> Result<()> {
        Ok(())
    }

    fn accepts_empty(&self) -> bool {
        true
    }

    fn accepts(&self, candidate: &Permutation, prev: &[HashSet<Permutation>]) -> bool {
        ring_step(candidate, &|alpha| prev[alpha.len()].contains(alpha))
    }
}

/// The sorted members of the spiral closure for every length up to `max_n`,
/// built level by level with sub-membership answered from completed levels.
pub fn enumerate_members(max_n: usize) -> Vec<Vec<Permutation>> {
    enumerate_members_with(max_n, None, None)
}

pub fn enumerate_members_with(
    max_n: usize,
    cache: Option<&MemberCache>,
    progress: Option<Progress<'_>>,
) -> Vec<Vec<Permutation>> {
    crate::pattern::enumerate::build_levels(
        &RingLevels,
        max_n,
        &crate::pattern::enumerate::BuildOptions {
            cache,
            progress,
            collect_basis: false,
        },
    )
    .expect("ring levels have no domain bound")
    .members
}

/// The minimal forbidden patterns of the spiral closure up to `max_len`,
/// discovered by the ring-decomposition membership test.
pub fn compute_forbidden_patterns(max_len: usize) -> crate::pattern::PatternBasis {
    compute_forbidden_patterns_with(max_len, None, None)
}

pub fn compute_forbidden_patterns_with(
    max_len: usize,
    cache: Option<&MemberCache>,
    progress: Option<Progress<'_>>,
) -> crate::pattern::PatternBasis {
    let out = crate::pattern::enumerate::build_levels(
        &RingLevels,
        max_len,
        &crate::pattern::enumerate::BuildOptions {
            cache,
            progress,
            collect_basis: true,
        },
    )
    .expect("ring levels have no domain bound");
    crate::pattern::PatternBasis::new(out.basis)
        .expect("minimal non-members of a class form an antichain")
}
