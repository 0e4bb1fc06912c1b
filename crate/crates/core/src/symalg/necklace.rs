//! Necklaces (cyclic words up to rotation, or vertex idempotents) and their
//! multisets, the monomials of `Sym L`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::quiver::{DoubleQuiver, Edge, Vertex};

/// Index of the lexicographically least rotation of `word` (Booth).
pub fn least_rotation<T: Ord>(word: &[T]) -> usize {
    let n = word.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &word[i % n];
    let mut failure = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let mut i = failure[j - k - 1];
        while i != usize::MAX && at(j) != at(k + i + 1) {
            if at(j) < at(k + i + 1) {
                k = j - i - 1;
            }
            i = failure[i];
        }
        if i == usize::MAX && at(j) != at(k) {
            // i == -1
            if at(j) < at(k) {
                k = j;
            }
            failure[j - k] = usize::MAX;
        } else {
            failure[j - k] = i.wrapping_add(1);
        }
    }
    k
}

/// Rotates `word` in place to its least rotation.
pub fn canonicalize_rotation<T: Ord>(word: &mut [T]) {
    let k = least_rotation(word);
    word.rotate_left(k);
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Necklace {
    Idempotent(Vertex),
    /// A cyclic word stored as its least rotation.
    Cycle(Vec<Edge>),
}

impl Necklace {
    pub fn idempotent(v: Vertex) -> Self {
        Necklace::Idempotent(v)
    }

    /// Number of edges; zero for idempotents.
    pub fn len(&self) -> usize {
        match self {
            Necklace::Idempotent(_) => 0,
            Necklace::Cycle(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_idempotent(&self) -> bool {
        matches!(self, Necklace::Idempotent(_))
    }

    pub fn word(&self) -> &[Edge] {
        match self {
            Necklace::Idempotent(_) => &[],
            Necklace::Cycle(w) => w,
        }
    }

    /// Canonical necklace from a word already known to be cyclically
    /// composable. Used on the hot path of cut-and-glue.
    pub(crate) fn from_word_unchecked(mut word: Vec<Edge>) -> Self {
        debug_assert!(!word.is_empty());
        canonicalize_rotation(&mut word);
        Necklace::Cycle(word)
    }
}

impl Ord for Necklace {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Necklace::Idempotent(a), Necklace::Idempotent(b)) => a.cmp(b),
            (Necklace::Idempotent(_), Necklace::Cycle(_)) => Ordering::Less,
            (Necklace::Cycle(_), Necklace::Idempotent(_)) => Ordering::Greater,
            (Necklace::Cycle(a), Necklace::Cycle(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        }
    }
}

impl PartialOrd for Necklace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Checks `h(a_r) = t(a_{r+1})` including the wrap-around junction.
pub fn check_cyclic(q: &DoubleQuiver, word: &[Edge]) -> Result<()> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    for x in word {
        if !q.contains_edge(*x) {
            return Err(Error::QuiverMismatch(format!("edge #{} out of range", x.0)));
        }
    }
    for (i, x) in word.iter().enumerate() {
        let y = word[(i + 1) % word.len()];
        if q.head(*x) != q.tail(y) {
            return Err(Error::NotComposable(
                q.edge_name(*x).to_string(),
                q.edge_name(y).to_string(),
            ));
        }
    }
    Ok(())
}

/// The canonical rotation of a cyclically composable word.
pub fn canonical_necklace(q: &DoubleQuiver, word: &[Edge]) -> Result<Necklace> {
    check_cyclic(q, word)?;
    Ok(Necklace::from_word_unchecked(word.to_vec()))
}

/// A multiset of necklaces, kept sorted. The empty monomial is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<Necklace>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_factors(mut factors: Vec<Necklace>) -> Self {
        factors.sort();
        Monomial(factors)
    }

    pub fn single(n: Necklace) -> Self {
        Monomial(vec![n])
    }

    pub fn factors(&self) -> &[Necklace] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factor_count(&self) -> usize {
        self.0.len()
    }

    pub fn edge_count(&self) -> usize {
        self.0.iter().map(Necklace::len).sum()
    }

    /// The commutative product `&`.
    pub fn product(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                out.push(self.0[i].clone());
                i += 1;
            } else {
                out.push(other.0[j].clone());
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// The single necklace, if this monomial has exactly one factor.
    pub fn as_necklace(&self) -> Option<&Necklace> {
        match self.0.as_slice() {
            [n] => Some(n),
            _ => None,
        }
    }

    pub fn validate(&self, q: &DoubleQuiver) -> Result<()> {
        for n in &self.0 {
            match n {
                Necklace::Idempotent(v) if !q.contains_vertex(*v) => {
                    return Err(Error::QuiverMismatch(format!("vertex #{} out of range", v.0)))
                }
                Necklace::Idempotent(_) => {}
                Necklace::Cycle(w) => check_cyclic(q, w)?,
            }
        }
        Ok(())
    }
}

impl From<Necklace> for Monomial {
    fn from(n: Necklace) -> Self {
        Monomial::single(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::samples;

    fn naive_least_rotation<T: Ord + Clone>(w: &[T]) -> Vec<T> {
        (0..w.len())
            .map(|k| {
                let mut r = w.to_vec();
                r.rotate_left(k);
                r
            })
            .min()
            .unwrap_or_default()
    }

    #[test]
    fn booth_matches_brute_force_exhaustively() {
        for len in 1..=7u32 {
            for code in 0..3u32.pow(len) {
                let w: Vec<u32> = (0..len).map(|i| (code / 3u32.pow(i)) % 3).collect();
                let mut c = w.clone();
                canonicalize_rotation(&mut c);
                assert_eq!(c, naive_least_rotation(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let q = samples::loop1();
        let e = q.edge_by_name("e").unwrap();
        let es = q.edge_by_name("e*").unwrap();
        assert_eq!(canonical_necklace(&q, &[es, e]).unwrap(), Necklace::Cycle(vec![e, es]));
        assert_eq!(canonical_necklace(&q, &[e]).unwrap(), Necklace::Cycle(vec![e]));

        let q = samples::a2_with_loop();
        let a = q.edge_by_name("a").unwrap();
        let l = q.edge_by_name("l").unwrap();
        assert!(matches!(
            canonical_necklace(&q, &[a, l]),
            Err(Error::NotComposable(_, _))
        ));
        assert!(matches!(canonical_necklace(&q, &[]), Err(Error::EmptyWord)));
    }

    #[test]
    fn rotation_invariance_exhaustive() {
        // 2-loop double has 4 edges; every word of length <= 5 is cyclic.
        let q = samples::two_loop();
        let edges: Vec<Edge> = q.edges().collect();
        for len in 1..=5u32 {
            for code in 0..4u32.pow(len) {
                let w: Vec<Edge> = (0..len).map(|i| edges[((code >> (2 * i)) & 3) as usize]).collect();
                let c = canonical_necklace(&q, &w).unwrap();
                for k in 0..w.len() {
                    let mut r = w.clone();
                    r.rotate_left(k);
                    assert_eq!(canonical_necklace(&q, &r).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn necklace_order() {
        let v = Necklace::Idempotent(Vertex(0));
        let w = Necklace::Idempotent(Vertex(1));
        let short = Necklace::Cycle(vec![Edge(3)]);
        let long = Necklace::Cycle(vec![Edge(0), Edge(0)]);
        assert!(v < w && w < short && short < long);
    }

    #[test]
    fn monomial_product_is_sorted_merge() {
        let a = Monomial::from_factors(vec![Necklace::Cycle(vec![Edge(1)]), Necklace::Idempotent(Vertex(0))]);
        let b = Monomial::single(Necklace::Cycle(vec![Edge(0)]));
        let p = a.product(&b);
        assert_eq!(p, b.product(&a));
        assert_eq!(
            p.factors(),
            &[
                Necklace::Idempotent(Vertex(0)),
                Necklace::Cycle(vec![Edge(0)]),
                Necklace::Cycle(vec![Edge(1)])
            ]
        );
        assert_eq!(Monomial::unit().product(&a), a);
    }
}
