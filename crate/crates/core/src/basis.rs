//! Enumeration of basis necklaces and monomials under an edge budget.

use crate::quiver::{DoubleQuiver, Edge, Vertex};
use crate::symalg::necklace::least_rotation;
use crate::symalg::{Monomial, Necklace};

/// All necklaces of length exactly `len` (no idempotents), sorted.
pub fn necklaces_of_length(q: &DoubleQuiver, len: usize) -> Vec<Necklace> {
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let mut word: Vec<Edge> = Vec::with_capacity(len);
    for start in q.vertices() {
        extend_words(q, start, start, len, &mut word, &mut out);
    }
    out.sort();
    out
}

fn extend_words(
    q: &DoubleQuiver,
    start: Vertex,
    at: Vertex,
    len: usize,
    word: &mut Vec<Edge>,
    out: &mut Vec<Necklace>,
) {
    if word.len() == len {
        // Keep exactly one representative per rotation class.
        if at == start && least_rotation(word) == 0 {
            out.push(Necklace::Cycle(word.clone()));
        }
        return;
    }
    for x in q.edges() {
        if q.tail(x) != at {
            continue;
        }
        // The canonical rotation starts with its smallest letter.
        if let Some(first) = word.first() {
            if x < *first {
                continue;
            }
        }
        word.push(x);
        extend_words(q, start, q.head(x), len, word, out);
        word.pop();
    }
}

/// All cyclic necklaces of length `1..=max_len`, sorted.
pub fn necklaces_up_to(q: &DoubleQuiver, max_len: usize) -> Vec<Necklace> {
    let mut out: Vec<Necklace> = (1..=max_len).flat_map(|k| necklaces_of_length(q, k)).collect();
    out.sort();
    out
}

/// Necklaces of length `1..=max_len` together with every vertex idempotent.
pub fn necklaces_with_idempotents(q: &DoubleQuiver, max_len: usize) -> Vec<Necklace> {
    let mut out: Vec<Necklace> = q.vertices().map(Necklace::Idempotent).collect();
    out.extend(necklaces_up_to(q, max_len));
    out
}

/// All monomials with at most `max_edges` edges and at most
/// `max_idempotents` idempotent factors, including the unit. Sorted.
pub fn monomials_up_to(q: &DoubleQuiver, max_edges: usize, max_idempotents: usize) -> Vec<Monomial> {
    let cycles = necklaces_up_to(q, max_edges);
    let vertices: Vec<Vertex> = q.vertices().collect();

    let mut cycle_sets: Vec<Vec<Necklace>> = Vec::new();
    let mut current = Vec::new();
    cycle_multisets(&cycles, 0, max_edges, &mut current, &mut cycle_sets);

    let mut idem_sets: Vec<Vec<Necklace>> = Vec::new();
    let mut current = Vec::new();
    idempotent_multisets(&vertices, 0, max_idempotents, &mut current, &mut idem_sets);

    let mut out: Vec<Monomial> = Vec::with_capacity(cycle_sets.len() * idem_sets.len());
    for c in &cycle_sets {
        for i in &idem_sets {
            let mut factors = i.clone();
            factors.extend(c.iter().cloned());
            out.push(Monomial::from_factors(factors));
        }
    }
    out.sort();
    out
}

fn cycle_multisets(
    cycles: &[Necklace],
    from: usize,
    budget: usize,
    current: &mut Vec<Necklace>,
    out: &mut Vec<Vec<Necklace>>,
) {
    out.push(current.clone());
    for i in from..cycles.len() {
        let len = cycles[i].len();
        if len > budget {
            continue;
        }
        current.push(cycles[i].clone());
        cycle_multisets(cycles, i, budget - len, current, out);
        current.pop();
    }
}

fn idempotent_multisets(
    vertices: &[Vertex],
    from: usize,
    budget: usize,
    current: &mut Vec<Necklace>,
    out: &mut Vec<Vec<Necklace>>,
) {
    out.push(current.clone());
    if budget == 0 {
        return;
    }
    for i in from..vertices.len() {
        current.push(Necklace::Idempotent(vertices[i]));
        idempotent_multisets(vertices, i, budget - 1, current, out);
        current.pop();
    }
}

/// Monomials bucketed by edge count, each bucket in sorted order.
fn by_edge_count(q: &DoubleQuiver, max_edges: usize, max_idempotents: usize) -> Vec<Vec<Monomial>> {
    let mut buckets = vec![Vec::new(); max_edges + 1];
    for m in monomials_up_to(q, max_edges, max_idempotents) {
        buckets[m.edge_count()].push(m);
    }
    buckets
}

/// Ordered pairs of monomials with combined edge count at most `max_edges`,
/// ordered by the first component and then by the edge count of the second.
pub fn monomial_pairs(q: &DoubleQuiver, max_edges: usize, max_idempotents: usize) -> Vec<(Monomial, Monomial)> {
    let buckets = by_edge_count(q, max_edges, max_idempotents);
    let mut out = Vec::new();
    for a in monomials_up_to(q, max_edges, max_idempotents) {
        for bucket in &buckets[..=max_edges - a.edge_count()] {
            out.extend(bucket.iter().map(|b| (a.clone(), b.clone())));
        }
    }
    out
}

/// Ordered triples of monomials with combined edge count at most `max_edges`.
pub fn monomial_triples(
    q: &DoubleQuiver,
    max_edges: usize,
    max_idempotents: usize,
) -> Vec<(Monomial, Monomial, Monomial)> {
    let buckets = by_edge_count(q, max_edges, max_idempotents);
    let mut out = Vec::new();
    for (a, b) in monomial_pairs(q, max_edges, max_idempotents) {
        let used = a.edge_count() + b.edge_count();
        for bucket in &buckets[..=max_edges - used] {
            out.extend(bucket.iter().map(|c| (a.clone(), b.clone(), c.clone())));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::samples;
    use crate::symalg::canonical_necklace;
    use std::collections::BTreeSet;

    /// Brute force: canonicalize every closed word.
    fn brute_force(q: &DoubleQuiver, len: usize) -> BTreeSet<Necklace> {
        let edges: Vec<Edge> = q.edges().collect();
        let mut out = BTreeSet::new();
        let total = edges.len().pow(len as u32);
        for mut code in 0..total {
            let mut w = Vec::with_capacity(len);
            for _ in 0..len {
                w.push(edges[code % edges.len()]);
                code /= edges.len();
            }
            if let Ok(n) = canonical_necklace(q, &w) {
                out.insert(n);
            }
        }
        out
    }

    #[test]
    fn necklaces_match_brute_force() {
        for q in [
            samples::loop1(),
            samples::two_loop(),
            samples::a2_with_loop(),
            samples::a2(),
        ] {
            for len in 1..=5 {
                let fast = necklaces_of_length(&q, len);
                let slow: Vec<Necklace> = brute_force(&q, len).into_iter().collect();
                assert_eq!(fast, slow, "length {len}");
            }
        }
    }

    #[test]
    fn tuples_match_filtered_products() {
        let q = samples::a2_with_loop();
        let all = monomials_up_to(&q, 4, 1);
        let mut pairs = 0;
        let mut triples = 0;
        for a in &all {
            for b in &all {
                if a.edge_count() + b.edge_count() <= 4 {
                    pairs += 1;
                    triples += all
                        .iter()
                        .filter(|c| a.edge_count() + b.edge_count() + c.edge_count() <= 4)
                        .count();
                }
            }
        }
        let fast: BTreeSet<_> = monomial_pairs(&q, 4, 1).into_iter().collect();
        assert_eq!(fast.len(), pairs);
        assert_eq!(monomial_triples(&q, 4, 1).len(), triples);
    }

    #[test]
    fn loop1_counts() {
        // Binary necklaces: 2, 3, 4, 6 for lengths 1..=4.
        let q = samples::loop1();
        let counts: Vec<usize> = (1..=4).map(|k| necklaces_of_length(&q, k).len()).collect();
        assert_eq!(counts, vec![2, 3, 4, 6]);
    }

    #[test]
    fn monomials_respect_bounds() {
        let q = samples::a2_with_loop();
        let all = monomials_up_to(&q, 4, 2);
        assert!(all.contains(&Monomial::unit()));
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
        for m in &all {
            assert!(m.edge_count() <= 4);
            assert!(m.factors().iter().filter(|n| n.is_idempotent()).count() <= 2);
        }
        // Loop1 with no idempotents: partitions-like count for budget 2.
        let l = samples::loop1();
        // 1, (e), (e*), (e)&(e), (e)&(e*), (e*)&(e*), (e e), (e e*), (e* e*)
        assert_eq!(monomials_up_to(&l, 2, 0).len(), 9);
        assert_eq!(monomials_up_to(&l, 0, 1).len(), 2);
    }
}
