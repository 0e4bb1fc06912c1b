//! Algebraic invariants of the star product, the coproduct, the necklace
//! Lie bialgebra and the height symmetrization, as exhaustive sweeps over
//! small necklaces and as seeded property tests.

use std::collections::BTreeSet;

use necklace::basis::necklaces_up_to;
use necklace::heights::phi_w_monomial;
use necklace::hopf::{check_co_jacobi, check_jacobi, coproduct, star, star_monomials};
use necklace::quiver::samples;
use necklace::random::{random_element, random_monomial, rng_from_seed};
use necklace::symalg::{canonical_necklace, HPoly, Monomial, Rational, SymLElement};
use necklace::{DoubleQuiver, Edge};
use num::{One, Zero};
use proptest::prelude::*;

fn quivers() -> Vec<DoubleQuiver> {
    vec![samples::loop1(), samples::two_loop(), samples::a2_with_loop()]
}

fn monomial_from_seed(q: &DoubleQuiver, seed: u64, max_edges: usize) -> Monomial {
    random_monomial(&mut rng_from_seed(seed), q, max_edges, 3)
}

#[test]
fn jacobi_on_necklace_triples_up_to_nine_edges() {
    for q in [samples::loop1(), samples::a2_with_loop()] {
        let necklaces = necklaces_up_to(&q, 7);
        for (i, a) in necklaces.iter().enumerate() {
            for (j, b) in necklaces.iter().enumerate().skip(i) {
                for c in necklaces.iter().skip(j) {
                    if a.len() + b.len() + c.len() <= 9 {
                        check_jacobi(&q, a, b, c).unwrap();
                    }
                }
            }
        }
    }
}

#[test]
fn co_jacobi_on_necklaces_up_to_six_edges() {
    for q in quivers() {
        for a in necklaces_up_to(&q, 6) {
            check_co_jacobi(&q, &a).unwrap();
        }
    }
}

#[test]
fn star_is_not_commutative_on_loop1() {
    let q = samples::loop1();
    let e = q.edge_by_name("e").unwrap();
    let es = q.reverse(e);
    let one = |x: Edge| SymLElement::basis(Monomial::single(canonical_necklace(&q, &[x]).unwrap()));
    let diff = &star(&q, &one(e), &one(es)) - &star(&q, &one(es), &one(e));
    let v = q.vertex_by_name("v").unwrap();
    let expected = SymLElement::term(Monomial::single(necklace::Necklace::Idempotent(v)), HPoly::h());
    assert_eq!(diff, expected);
}

#[test]
fn phi_w_has_disjoint_supports_on_distinct_monomials() {
    let q = samples::two_loop();
    let mut seen: BTreeSet<_> = BTreeSet::new();
    for p in necklace::basis::monomials_up_to(&q, 4, 1) {
        for (c, _) in phi_w_monomial(&p).iter() {
            assert!(seen.insert(c.clone()), "shared support at {p:?}");
        }
    }
}

#[test]
fn merge_is_schedule_independent() {
    let q = samples::two_loop();
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    for seed in 0..20 {
        let a = random_element(seed, &q, 5, 3);
        let b = random_element(seed + 1000, &q, 5, 3);
        let serial = one.install(|| (star(&q, &a, &b), coproduct(&q, &a)));
        let parallel = four.install(|| (star(&q, &a, &b), coproduct(&q, &a)));
        assert_eq!(serial, parallel);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_rotation_invariant(seed in any::<u64>(), shift in 0usize..16) {
        let q = samples::two_loop();
        if let Some(n) = necklace::random::random_necklace(&mut rng_from_seed(seed), &q, 9) {
            let w = n.word();
            let r = shift % w.len();
            let rotated: Vec<Edge> = w[r..].iter().chain(&w[..r]).copied().collect();
            prop_assert_eq!(canonical_necklace(&q, &rotated).unwrap(), n);
        }
    }

    #[test]
    fn star_is_graded_by_cut_edges(seed in any::<u64>(), which in 0usize..3) {
        let q = &quivers()[which];
        let p = monomial_from_seed(q, seed, 4);
        let r = monomial_from_seed(q, seed.wrapping_add(1), 4);
        let product = star_monomials(q, &p, &r);
        for (m, c) in product.iter() {
            for (k, _) in c.terms() {
                prop_assert_eq!(m.edge_count() + 2 * k as usize, p.edge_count() + r.edge_count());
            }
        }
        prop_assert_eq!(product.at_h_zero(), SymLElement::basis(p.product(&r)));
    }

    #[test]
    fn phi_w_is_an_average_over_heights(seed in any::<u64>(), which in 0usize..3) {
        let q = &quivers()[which];
        let p = monomial_from_seed(q, seed, 5);
        let image = phi_w_monomial(&p);
        let mut total = Rational::zero();
        for (c, coeff) in image.iter() {
            prop_assert_eq!(c.monomial(), p.clone());
            prop_assert_eq!(coeff.degree(), Some(0));
            total += coeff.constant_term();
        }
        prop_assert_eq!(total, Rational::one());
    }

    #[test]
    fn random_elements_respect_their_bounds(seed in any::<u64>(), max_edges in 0usize..7, max_factors in 0usize..4) {
        for q in quivers() {
            let a = random_element(seed, &q, max_edges, max_factors);
            prop_assert_eq!(&a, &random_element(seed, &q, max_edges, max_factors));
            for (m, c) in a.iter() {
                prop_assert!(m.edge_count() <= max_edges);
                prop_assert!(m.factor_count() <= max_factors);
                prop_assert!(m.validate(&q).is_ok());
                prop_assert!(c.degree().unwrap() <= 2);
            }
        }
    }
}
