//! Seeded random elements for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::quiver::{DoubleQuiver, Edge, Vertex};
use crate::symalg::{canonical_necklace, HPoly, Monomial, Necklace, Rational, SymLElement};

/// The generator used for every seeded computation.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random cyclic necklace of length at most `max_len`, or `None` when no
/// closed walk was found in a few attempts.
pub fn random_necklace<R: Rng>(rng: &mut R, q: &DoubleQuiver, max_len: usize) -> Option<Necklace> {
    if max_len == 0 || q.edge_count() == 0 {
        return None;
    }
    let edges: Vec<Edge> = q.edges().collect();
    for _ in 0..32 {
        let len = rng.gen_range(1..=max_len);
        let start = q.tail(*edges.choose(rng)?);
        let mut at = start;
        let mut word = Vec::with_capacity(len);
        for step in 0..len {
            let options: Vec<Edge> = edges
                .iter()
                .copied()
                .filter(|x| q.tail(*x) == at && (step + 1 < len || q.head(*x) == start))
                .collect();
            let Some(x) = options.choose(rng) else {
                break;
            };
            word.push(*x);
            at = q.head(*x);
        }
        if word.len() == len {
            return canonical_necklace(q, &word).ok();
        }
    }
    None
}

/// A random monomial with at most `max_edges` edges and `max_factors` factors.
pub fn random_monomial<R: Rng>(rng: &mut R, q: &DoubleQuiver, max_edges: usize, max_factors: usize) -> Monomial {
    let vertices: Vec<Vertex> = q.vertices().collect();
    let count = rng.gen_range(0..=max_factors);
    let mut budget = max_edges;
    let mut factors = Vec::with_capacity(count);
    for _ in 0..count {
        let cycle = if budget > 0 && rng.gen_ratio(4, 5) {
            random_necklace(rng, q, budget)
        } else {
            None
        };
        match cycle {
            Some(n) => {
                budget -= n.len();
                factors.push(n);
            }
            None => {
                if let Some(v) = vertices.choose(rng) {
                    factors.push(Necklace::Idempotent(*v));
                }
            }
        }
    }
    Monomial::from_factors(factors)
}

/// A nonzero rational with numerator and denominator of magnitude at most 8.
fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let mut n: i64 = rng.gen_range(1..=8);
    if rng.gen_bool(0.5) {
        n = -n;
    }
    Rational::new(n.into(), rng.gen_range(1..=8i64).into())
}

/// A coefficient with one or two terms of `h`-degree at most 2.
fn small_coefficient<R: Rng>(rng: &mut R) -> HPoly {
    let mut c = HPoly::monomial(small_rational(rng), rng.gen_range(0..=2));
    if rng.gen_ratio(1, 4) {
        c += &HPoly::monomial(small_rational(rng), rng.gen_range(0..=2));
    }
    if c.is_zero() {
        HPoly::one()
    } else {
        c
    }
}

/// A combination of one to three random monomials.
pub fn random_element_with<R: Rng>(rng: &mut R, q: &DoubleQuiver, max_edges: usize, max_factors: usize) -> SymLElement {
    let terms = rng.gen_range(1..=3);
    let mut out = SymLElement::zero();
    for _ in 0..terms {
        let m = random_monomial(rng, q, max_edges, max_factors);
        out.add_term(m, &small_coefficient(rng));
    }
    out
}

/// Deterministic for a fixed seed.
pub fn random_element(seed: u64, q: &DoubleQuiver, max_edges: usize, max_factors: usize) -> SymLElement {
    random_element_with(&mut rng_from_seed(seed), q, max_edges, max_factors)
}
