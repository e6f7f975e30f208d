//! The generalized subword order: `v <= w` iff `v` embeds into `w` by an
//! increasing index map with letterwise dominance.

use crate::error::Result;
use crate::order::LabelPoset;

/// Greedy left-to-right matching. Greedy is exact here: matching each letter
/// of `v` to the earliest viable position of `w` never blocks a later letter,
/// since any embedding using a later position can be shifted left.
pub fn generalized_subword_leq<L>(v: &[L], w: &[L], leq: impl Fn(&L, &L) -> bool) -> bool {
    let mut i = 0usize;
    for letter in v {
        loop {
            if i >= w.len() {
                return false;
            }
            let matched = leq(letter, &w[i]);
            i += 1;
            if matched {
                break;
            }
        }
    }
    true
}

/// Subword comparison over an explicit finite alphabet, rejecting letters
/// outside the order.
pub fn subword_leq_in(order: &LabelPoset, v: &[usize], w: &[usize]) -> Result<bool> {
    for &letter in v.iter().chain(w.iter()) {
        order.check_element(letter)?;
    }
    Ok(generalized_subword_leq(v, w, |&a, &b| order.leq(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn empty_word_embeds_everywhere() {
        let chain = LabelPoset::new(vec!["a", "b"], &[(0, 1)]).unwrap();
        assert!(subword_leq_in(&chain, &[], &[0, 1, 0]).unwrap());
        assert!(subword_leq_in(&chain, &[], &[]).unwrap());
    }

    #[test]
    fn dominance_is_letterwise() {
        let chain = LabelPoset::new(vec!["a", "b", "c"], &[(0, 1), (1, 2)]).unwrap();
        // "ac" <= "bc" since a <= b and c <= c
        assert!(subword_leq_in(&chain, &[0, 2], &[1, 2]).unwrap());
        assert!(!subword_leq_in(&chain, &[2, 2], &[2, 1]).unwrap());
    }

    #[test]
    fn unknown_letter_is_an_error() {
        let chain = LabelPoset::new(vec!["a"], &[]).unwrap();
        assert!(matches!(
            subword_leq_in(&chain, &[1], &[0]),
            Err(Error::UnknownLetter(_))
        ));
    }

    #[test]
    fn greedy_agrees_with_exhaustive_search() {
        // incomparable pair {x, y} below a common top z
        let poset = LabelPoset::new(vec!["x", "y", "z"], &[(0, 2), (1, 2)]).unwrap();
        let letters = [0usize, 1, 2];
        let words: Vec<Vec<usize>> = {
            let mut out = vec![vec![]];
            for len in 1..=3 {
                let mut next = Vec::new();
                for w in out.iter().filter(|w| w.len() == len - 1) {
                    for &l in &letters {
                        let mut w2 = w.clone();
                        w2.push(l);
                        next.push(w2);
                    }
                }
                out.extend(next);
            }
            out
        };
        for v in &words {
            for w in &words {
                let greedy = subword_leq_in(&poset, v, w).unwrap();
                let exhaustive = embeds_exhaustive(&poset, v, w);
                assert_eq!(greedy, exhaustive, "v = {v:?}, w = {w:?}");
            }
        }
    }

    fn embeds_exhaustive(p: &LabelPoset, v: &[usize], w: &[usize]) -> bool {
        fn go(p: &LabelPoset, v: &[usize], w: &[usize], vi: usize, wi: usize) -> bool {
            if vi == v.len() {
                return true;
            }
            for i in wi..w.len() {
                if p.leq(v[vi], w[i]) && go(p, v, w, vi + 1, i + 1) {
                    return true;
                }
            }
            false
        }
        go(p, v, w, 0, 0)
    }
}
