//! Height assignments and the symmetrization map `Φ_W`.
//!
//! A height assignment labels the abstract edges of a collection bijectively
//! by `1..=N`. Labelled collections are compared up to rotation of each
//! necklace and permutation of the factors, which is what the canonical form
//! of [`HeightedCollection`] encodes. No further relations are imposed.

use crate::cutglue::AbstractEdges;
use crate::error::{Error, Result};
use crate::format::Render;
use crate::quiver::{DoubleQuiver, Edge, Vertex};
use crate::symalg::necklace::canonicalize_rotation;
use crate::symalg::{int, LinComb, Monomial, Necklace, Rational, SymLElement};

/// A cyclic sequence of `(edge, height)` letters in its least rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeightedNecklace(Vec<(Edge, u32)>);

impl HeightedNecklace {
    pub fn letters(&self) -> &[(Edge, u32)] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HeightedCollection {
    idempotents: Vec<Vertex>,
    necklaces: Vec<HeightedNecklace>,
}

pub type HeightedElement = LinComb<HeightedCollection>;

impl HeightedCollection {
    /// Builds the canonical form from idempotent factors and labelled cyclic
    /// words. Heights must form a bijection onto `1..=N`.
    pub fn new(q: &DoubleQuiver, idempotents: Vec<Vertex>, words: Vec<Vec<(Edge, u32)>>) -> Result<Self> {
        let mut heights: Vec<u32> = words.iter().flatten().map(|(_, h)| *h).collect();
        heights.sort_unstable();
        if heights.iter().enumerate().any(|(i, h)| *h as usize != i + 1) {
            return Err(Error::InvalidHeights(heights));
        }
        for w in &words {
            let plain: Vec<Edge> = w.iter().map(|(e, _)| *e).collect();
            crate::symalg::necklace::check_cyclic(q, &plain)?;
        }
        Ok(Self::from_parts_unchecked(idempotents, words))
    }

    fn from_parts_unchecked(mut idempotents: Vec<Vertex>, words: Vec<Vec<(Edge, u32)>>) -> Self {
        idempotents.sort_unstable();
        let mut necklaces: Vec<HeightedNecklace> = words
            .into_iter()
            .map(|mut w| {
                canonicalize_rotation(&mut w);
                HeightedNecklace(w)
            })
            .collect();
        necklaces.sort();
        HeightedCollection { idempotents, necklaces }
    }

    /// `P_H` for the assignment `heights[x]` on the abstract edges of `p`.
    pub fn assign(p: &Monomial, heights: &[u32]) -> Self {
        let edges = AbstractEdges::of(p);
        assert_eq!(heights.len(), edges.len());
        let mut words: Vec<Vec<(Edge, u32)>> = Vec::new();
        let mut idempotents = Vec::new();
        let mut x = 0;
        for n in p.factors() {
            match n {
                Necklace::Idempotent(v) => idempotents.push(*v),
                Necklace::Cycle(w) => {
                    words.push(w.iter().enumerate().map(|(j, e)| (*e, heights[x + j])).collect());
                    x += w.len();
                }
            }
        }
        Self::from_parts_unchecked(idempotents, words)
    }

    pub fn idempotents(&self) -> &[Vertex] {
        &self.idempotents
    }

    pub fn necklaces(&self) -> &[HeightedNecklace] {
        &self.necklaces
    }

    pub fn edge_count(&self) -> usize {
        self.necklaces.iter().map(|n| n.0.len()).sum()
    }

    /// The underlying collection with heights forgotten.
    pub fn monomial(&self) -> Monomial {
        let mut factors: Vec<Necklace> = self.idempotents.iter().map(|v| Necklace::Idempotent(*v)).collect();
        factors.extend(
            self.necklaces
                .iter()
                .map(|n| Necklace::from_word_unchecked(n.0.iter().map(|(e, _)| *e).collect())),
        );
        Monomial::from_factors(factors)
    }
}

/// Equality up to rotation of each necklace and permutation of factors.
pub fn heighted_equal(a: &HeightedCollection, b: &HeightedCollection) -> bool {
    // Both values are stored canonically.
    a == b
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[u32])) {
    // Heap's algorithm over the heights 1..=n.
    let mut a: Vec<u32> = (1..=n as u32).collect();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(int).fold(int(1), |acc, k| acc * k)
}

/// `Φ_W(P) = (1/N!) Σ_H P_H` on one monomial.
pub fn phi_w_monomial(p: &Monomial) -> HeightedElement {
    let n = p.edge_count();
    let mut counts = std::collections::BTreeMap::<HeightedCollection, i64>::new();
    for_each_permutation(n, |h| {
        *counts.entry(HeightedCollection::assign(p, h)).or_insert(0) += 1;
    });
    let total = factorial(n);
    counts
        .into_iter()
        .map(|(c, k)| (c, crate::symalg::HPoly::constant(int(k) / &total)))
        .collect()
}

pub fn phi_w(a: &SymLElement) -> HeightedElement {
    a.map_linear(phi_w_monomial)
}

impl Render for HeightedCollection {
    fn render(&self, q: &DoubleQuiver) -> String {
        let mut parts: Vec<String> = self
            .idempotents
            .iter()
            .map(|v| format!("@{}", q.vertex_name(*v)))
            .collect();
        parts.extend(self.necklaces.iter().map(|n| {
            n.0.iter()
                .map(|(e, h)| format!("({},{})", q.edge_name(*e), h))
                .collect::<String>()
        }));
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("&")
        }
    }

    fn is_unit_basis(&self) -> bool {
        self.idempotents.is_empty() && self.necklaces.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::samples;
    use crate::symalg::{necklace_element, rat, HPoly};

    fn hc(q: &DoubleQuiver, words: &[&[(&str, u32)]]) -> HeightedCollection {
        let words = words
            .iter()
            .map(|w| w.iter().map(|(n, h)| (q.edge_by_name(n).unwrap(), *h)).collect())
            .collect();
        HeightedCollection::new(q, vec![], words).unwrap()
    }

    #[test]
    fn phi_w_examples() {
        let q = samples::loop1();
        let e = q.edge_by_name("e").unwrap();
        let es = q.edge_by_name("e*").unwrap();
        let v = q.vertex_by_name("v").unwrap();

        let idem = necklace_element(Necklace::Idempotent(v));
        let expected = HeightedElement::basis(HeightedCollection::new(&q, vec![v], vec![]).unwrap());
        assert_eq!(phi_w(&idem), expected);

        let ees = necklace_element(Necklace::Cycle(vec![e, es]));
        let half = HPoly::constant(rat(1, 2));
        let expected: HeightedElement = [
            (hc(&q, &[&[("e", 1), ("e*", 2)]]), half.clone()),
            (hc(&q, &[&[("e", 2), ("e*", 1)]]), half.clone()),
        ]
        .into_iter()
        .collect();
        assert_eq!(phi_w(&ees), expected);

        let ee = SymLElement::basis(Monomial::from_factors(vec![
            Necklace::Cycle(vec![e]),
            Necklace::Cycle(vec![e]),
        ]));
        assert_eq!(phi_w(&ee), HeightedElement::basis(hc(&q, &[&[("e", 1)], &[("e", 2)]])));
    }

    #[test]
    fn heighted_equality() {
        let q = samples::loop1();
        assert!(heighted_equal(
            &hc(&q, &[&[("e", 1)], &[("e", 2)]]),
            &hc(&q, &[&[("e", 2)], &[("e", 1)]])
        ));
        assert!(!heighted_equal(
            &hc(&q, &[&[("e", 1), ("e*", 2)]]),
            &hc(&q, &[&[("e", 2), ("e*", 1)]])
        ));
        let a = hc(&q, &[&[("e", 1), ("e*", 2)]]);
        assert!(heighted_equal(&a, &a.clone()));
        // Rotation of a single labelled necklace.
        assert!(heighted_equal(
            &hc(&q, &[&[("e", 1), ("e", 2)]]),
            &hc(&q, &[&[("e", 2), ("e", 1)]])
        ));
    }

    #[test]
    fn rejects_non_bijective_heights() {
        let q = samples::loop1();
        let e = q.edge_by_name("e").unwrap();
        assert!(HeightedCollection::new(&q, vec![], vec![vec![(e, 1), (e, 3)]]).is_err());
    }

    #[test]
    fn coefficients_sum_to_one_and_supports_are_disjoint() {
        let q = samples::two_loop();
        let basis = crate::basis::monomials_up_to(&q, 4, 1);
        let mut seen = std::collections::BTreeMap::new();
        for m in &basis {
            let image = phi_w_monomial(m);
            let mut total = HPoly::zero();
            for (c, k) in image.iter() {
                assert_eq!(&c.monomial(), m);
                total += k;
                assert!(seen.insert(c.clone(), m.clone()).is_none());
            }
            assert_eq!(total, HPoly::one());
        }
    }

    #[test]
    fn heap_permutations_are_complete() {
        let mut all = std::collections::BTreeSet::new();
        for_each_permutation(4, |p| {
            all.insert(p.to_vec());
        });
        assert_eq!(all.len(), 24);
        let mut count = 0;
        for_each_permutation(0, |_| count += 1);
        assert_eq!(count, 1);
    }
}
