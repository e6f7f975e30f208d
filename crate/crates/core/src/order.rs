//! Explicit finite quasi-orders, used both as label posets for labelled
//! graphs and as letter orders for generalized subword comparisons.

use crate::error::{Error, Result};

/// A finite quasi-order given by an element list plus dominance pairs. The
/// constructor closes the relation reflexively and transitively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelPoset {
    names: Vec<String>,
    leq: Vec<bool>, // row-major n x n, leq[a * n + b] means a <= b
}

impl LabelPoset {
    pub fn new<S: Into<String>>(names: Vec<S>, dominance: &[(usize, usize)]) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in dominance {
            if a >= n || b >= n {
                return Err(Error::UnknownLetter(format!("element index {}", a.max(b))));
            }
            leq[a * n + b] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Ok(LabelPoset { names, leq })
    }

    /// The 2-element antichain of colors black and white.
    pub fn black_white() -> Self {
        LabelPoset::new(vec!["black", "white"], &[]).unwrap()
    }

    /// The one-element poset.
    pub fn single() -> Self {
        LabelPoset::new(vec!["*"], &[]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn check_element(&self, id: usize) -> Result<()> {
        if id < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownLetter(format!("element index {id}")))
        }
    }
}

pub const BLACK: usize = 0;
pub const WHITE: usize = 1;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_is_reflexive_and_transitive() {
        // a <= b, b <= c should give a <= c
        let p = LabelPoset::new(vec!["a", "b", "c"], &[(0, 1), (1, 2)]).unwrap();
        for i in 0..3 {
            assert!(p.leq(i, i));
        }
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
    }

    #[test]
    fn black_white_is_an_antichain() {
        let p = LabelPoset::black_white();
        assert!(!p.leq(BLACK, WHITE));
        assert!(!p.leq(WHITE, BLACK));
        assert!(p.leq(BLACK, BLACK));
    }

    #[test]
    fn out_of_range_pair_is_rejected() {
        assert!(LabelPoset::new(vec!["a"], &[(0, 1)]).is_err());
    }
}
