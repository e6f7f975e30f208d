//! Exact isomorphism and canonical forms for small graphs.
//!
//! Vertices are first partitioned by iterated degree refinement. The
//! canonical form is the lexicographically minimal adjacency bitstring over
//! all vertex orderings compatible with that refinement, so isomorphism is
//! equivalent to equal canonical forms. Both searches are exponential in the
//! worst case and meant for small n.

use super::Graph;

/// Iso-invariant vertex classes: class ids ordered by their refinement
/// signature, coarsest-stable under neighbor-multiset refinement.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    normalize_colors(&mut color);
    loop {
        let mut sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut neigh: Vec<usize> = (0..n)
                    .filter(|&u| g.has_edge(v, u))
                    .map(|u| color[u])
                    .collect();
                neigh.sort_unstable();
                (color[v], neigh)
            })
            .collect();
        let mut sorted: Vec<(usize, Vec<usize>)> = sig.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sig
            .drain(..)
            .map(|s| sorted.binary_search(&s).unwrap())
            .collect();
        if next == color {
            return color;
        }
        color = next;
    }
}

/// Exact isomorphism by backtracking over class-respecting bijections.
pub fn graph_iso(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let cg = refine(g);
    let ch = refine(h);
    let mut mg = class_sizes(&cg);
    let mut mh = class_sizes(&ch);
    mg.sort_unstable();
    mh.sort_unstable();
    if mg != mh {
        return false;
    }
    // map vertices of g in order of ascending class size for early pruning
    let mut order: Vec<usize> = (0..n).collect();
    let sizes = class_sizes(&cg);
    order.sort_by_key(|&v| (sizes[cg[v]], cg[v], v));

    let mut image = vec![usize::MAX; n];
    let mut used = 0u64;
    extend_iso(g, h, &cg, &ch, &order, 0, &mut image, &mut used)
}

fn class_sizes(color: &[usize]) -> Vec<usize> {
    let classes = color.iter().max().map_or(0, |&c| c + 1);
    let mut sizes = vec![0usize; classes];
    for &c in color {
        sizes[c] += 1;
    }
    sizes
}

fn extend_iso(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.vertex_count() {
        if *used >> w & 1 == 1 || cg[v] != ch[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(v, u) == h.has_edge(w, image[u]));
        if !consistent {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        if extend_iso(g, h, cg, ch, order, depth + 1, image, used) {
            return true;
        }
        *used &= !(1 << w);
        image[v] = usize::MAX;
    }
    false
}

/// Canonical byte form: vertex count followed by the packed minimal
/// adjacency bitstring (column-major pair order) over refinement-compatible
/// orderings. Two graphs are isomorphic iff their forms are equal.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let words = canonical_words(g);
    let mut bits: Vec<bool> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for (j, word) in words.iter().enumerate() {
        for i in 0..j {
            bits.push(word >> (j - 1 - i) & 1 == 1);
        }
    }
    let mut out = vec![n as u8];
    for chunk in bits.chunks(8) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (7 - i);
            }
        }
        out.push(byte);
    }
    out
}

/// Per-position adjacency words of the minimal ordering: word j holds the
/// adjacency of the j-th placed vertex to placements 0..j-1, earliest
/// placement in the highest bit.
fn canonical_words(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let color = refine(g);
    let classes = color.iter().max().unwrap() + 1;
    // positions are filled class by class in signature order
    let mut class_members: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for (v, &c) in color.iter().enumerate() {
        class_members[c].push(v);
    }
    let mut position_class = Vec::with_capacity(n);
    for (c, members) in class_members.iter().enumerate() {
        position_class.extend(std::iter::repeat(c).take(members.len()));
    }

    let mut state = MinSearch {
        g,
        class_members: &class_members,
        position_class: &position_class,
        placed: Vec::with_capacity(n),
        current: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    state.descend(true);
    state.best.expect("at least one ordering exists")
}

struct MinSearch<'a> {
    g: &'a Graph,
    class_members: &'a [Vec<usize>],
    position_class: &'a [usize],
    placed: Vec<usize>,
    current: Vec<u64>,
    used: u64,
    best: Option<Vec<u64>>,
}

impl MinSearch<'_> {
    /// Explores completions of the current prefix. `eq` must hold the exact
    /// relation of the prefix to `best`: equal to its prefix (or no best
    /// yet) when true, strictly smaller when false. Returns whether `best`
    /// was replaced, after which the caller's prefix is again a prefix of
    /// `best`.
    fn descend(&mut self, eq_in: bool) -> bool {
        let depth = self.placed.len();
        if depth == self.position_class.len() {
            if self.best.is_none() || !eq_in {
                self.best = Some(self.current.clone());
                return true;
            }
            return false;
        }
        // candidates sorted by their adjacency word, smallest first
        let mut options: Vec<(u64, usize)> = self.class_members[self.position_class[depth]]
            .iter()
            .filter(|&&v| self.used >> v & 1 == 0)
            .map(|&v| {
                let mut word = 0u64;
                for (i, &u) in self.placed.iter().enumerate() {
                    if self.g.has_edge(v, u) {
                        word |= 1 << (depth - 1 - i);
                    }
                }
                (word, v)
            })
            .collect();
        options.sort_unstable();

        let mut eq = eq_in;
        let mut replaced_any = false;
        for (word, v) in options {
            let child_eq = match self.best.as_ref() {
                None => true,
                Some(b) => {
                    if eq {
                        match word.cmp(&b[depth]) {
                            std::cmp::Ordering::Greater => break,
                            std::cmp::Ordering::Equal => true,
                            std::cmp::Ordering::Less => false,
                        }
                    } else {
                        false
                    }
                }
            };
            self.placed.push(v);
            self.current.push(word);
            self.used |= 1 << v;
            let replaced = self.descend(child_eq);
            self.used &= !(1 << v);
            self.current.pop();
            self.placed.pop();
            if replaced {
                replaced_any = true;
                eq = true;
            }
        }
        replaced_any
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{complete, cycle, path, p};
    use super::super::perm_graph;
    use super::*;
    use crate::perm::all_of_length;

    #[test]
    fn graph_is_isomorphic_to_itself() {
        for g in [path(4), cycle(5), complete(3), Graph::new(0).unwrap()] {
            assert!(graph_iso(&g, &g));
        }
    }

    #[test]
    fn known_isomorphic_pairs() {
        assert!(graph_iso(&perm_graph(&p("2413")), &perm_graph(&p("3142"))));
        assert!(!graph_iso(&perm_graph(&p("2143")), &perm_graph(&p("3412"))));
        assert!(!graph_iso(&path(4), &cycle(4)));
    }

    #[test]
    fn inverse_and_reverse_complement_preserve_the_graph() {
        for pi in all_of_length(6).into_iter().step_by(7) {
            let g = perm_graph(&pi);
            assert!(graph_iso(&g, &perm_graph(&pi.inverse())));
            assert!(graph_iso(&g, &perm_graph(&pi.reverse_complement())));
            assert!(graph_iso(
                &g,
                &perm_graph(&pi.reverse_complement().inverse())
            ));
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = perm_graph(&p("35142"));
        let base = canonical_form(&g);
        for perm in all_of_length(5) {
            let relabel: Vec<usize> =
                perm.values().iter().map(|&v| v as usize - 1).collect();
            let mut h = Graph::new(5).unwrap();
            for (u, v) in g.edges() {
                h.add_edge(relabel[u], relabel[v]).unwrap();
            }
            assert_eq!(canonical_form(&h), base);
        }
    }

    #[test]
    fn canonical_form_counts_iso_classes() {
        // numbers of isomorphism classes of graphs on 0..=6 vertices
        let known = [1usize, 1, 2, 4, 11, 34, 156];
        for (n, &expect) in known.iter().enumerate() {
            let mut forms = std::collections::BTreeSet::new();
            let pairs = n * n.saturating_sub(1) / 2;
            for mask in 0u64..1 << pairs {
                forms.insert(canonical_form(&Graph::from_pair_mask(n, mask)));
            }
            assert_eq!(forms.len(), expect, "n = {n}");
        }
    }

    #[test]
    fn iso_agrees_with_canonical_equality() {
        // all graphs on 5 vertices, pairwise
        let graphs: Vec<Graph> = (0u64..1 << 10)
            .map(|mask| Graph::from_pair_mask(5, mask))
            .collect();
        let forms: Vec<Vec<u8>> = graphs.iter().map(canonical_form).collect();
        for i in (0..graphs.len()).step_by(13) {
            for j in (0..graphs.len()).step_by(17) {
                assert_eq!(
                    graph_iso(&graphs[i], &graphs[j]),
                    forms[i] == forms[j],
                    "masks {i} {j}"
                );
            }
        }
    }
}
