//! Induced subgraph embedding by backtracking.

use super::Graph;

/// True iff some vertex subset of `host` induces a graph isomorphic to
/// `pattern`. Pattern vertices are matched in descending degree order with
/// degree and adjacency-consistency pruning.
pub fn induced_subgraph_iso(pattern: &Graph, host: &Graph) -> bool {
    induced_embedding(pattern, host, |_, _| true)
}

/// Shared backtracking core: `admissible(p, h)` additionally constrains which
/// host vertex may carry a pattern vertex (used for label dominance).
pub(crate) fn induced_embedding(
    pattern: &Graph,
    host: &Graph,
    admissible: impl Fn(usize, usize) -> bool,
) -> bool {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    if k > n {
        return false;
    }
    if k == 0 {
        return true;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));

    let mut image = vec![usize::MAX; k];
    let mut used = 0u64;
    extend(pattern, host, &admissible, &order, 0, &mut image, &mut used)
}

fn extend(
    pattern: &Graph,
    host: &Graph,
    admissible: &impl Fn(usize, usize) -> bool,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let need = pattern.degree(v);
    for w in 0..host.vertex_count() {
        if *used >> w & 1 == 1 || host.degree(w) < need || !admissible(v, w) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| pattern.has_edge(v, u) == host.has_edge(w, image[u]));
        if !consistent {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        if extend(pattern, host, admissible, order, depth + 1, image, used) {
            return true;
        }
        *used &= !(1 << w);
        image[v] = usize::MAX;
    }
    false
}
