//! Exhaustive and seeded-random check suites over one quiver.
//!
//! Exhaustive cases are enumerated in a fixed order and checked in parallel;
//! the reported counterexample is always the first failing case in that
//! order, so results do not depend on the number of workers.

use rayon::prelude::*;

use crate::basis::{monomial_pairs, monomial_triples, monomials_up_to, necklaces_with_idempotents};
use crate::hopf::{
    check_antipode, check_associativity, check_bialgebra, check_classical_limits, check_co_jacobi,
    check_coassociativity, check_cocycle, check_counit, check_jacobi, Counterexample, Verdict,
};
use crate::quiver::DoubleQuiver;
use crate::random::{random_element_with, rng_from_seed};
use crate::rep::{
    check_diagram, check_poisson_hom, check_transport, check_weyl_relations, DimVector, RepPoly, RepSpace,
};
use crate::symalg::{Monomial, Necklace, SymLElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Assoc,
    Coassoc,
    Bialgebra,
    Antipode,
    Counit,
    Classical,
    LieBialg,
    Diagram,
    Transport,
    Poisson,
    Weyl,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Assoc,
        Suite::Coassoc,
        Suite::Bialgebra,
        Suite::Antipode,
        Suite::Counit,
        Suite::Classical,
        Suite::LieBialg,
        Suite::Diagram,
        Suite::Transport,
        Suite::Poisson,
        Suite::Weyl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Assoc => "assoc",
            Suite::Coassoc => "coassoc",
            Suite::Bialgebra => "bialgebra",
            Suite::Antipode => "antipode",
            Suite::Counit => "counit",
            Suite::Classical => "classical",
            Suite::LieBialg => "liebialg",
            Suite::Diagram => "diagram",
            Suite::Transport => "transport",
            Suite::Poisson => "poisson",
            Suite::Weyl => "weyl",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Whether the suite runs over representation spaces.
    pub fn uses_dims(self) -> bool {
        matches!(self, Suite::Diagram | Suite::Transport | Suite::Poisson | Suite::Weyl)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Edge bound for exhaustive enumeration; `None` skips it.
    pub exhaustive_edges: Option<usize>,
    /// Idempotent factors allowed per enumerated monomial.
    pub max_idempotents: usize,
    pub trials: usize,
    pub seed: u64,
    /// Edge bound of each random element.
    pub max_edges: usize,
    pub max_factors: usize,
    /// Dimension vectors for the representation suites.
    pub dims: Vec<DimVector>,
}

impl SuiteConfig {
    pub fn new(q: &DoubleQuiver) -> Self {
        SuiteConfig {
            exhaustive_edges: None,
            max_idempotents: 1,
            trials: 100,
            seed: 0,
            max_edges: 4,
            max_factors: 3,
            dims: DimVector::all_in_range(q, 1, 2),
        }
    }
}

#[derive(Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub result: Verdict,
}

fn first_failure<T: Sync>(cases: &[T], check: impl Fn(&T) -> Verdict + Sync + Send) -> Verdict {
    match cases.par_iter().map(check).find_map_first(|v| v.err()) {
        Some(c) => Err(c),
        None => Ok(()),
    }
}

fn el(m: &Monomial) -> SymLElement {
    SymLElement::basis(m.clone())
}

/// Random elements for trial `i`, drawn from a generator seeded by `(seed, i)`
/// so each trial is reproducible on its own.
fn random_tuple(q: &DoubleQuiver, cfg: &SuiteConfig, i: usize, n: usize) -> Vec<SymLElement> {
    let mut rng = rng_from_seed(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64));
    (0..n)
        .map(|_| random_element_with(&mut rng, q, cfg.max_edges, cfg.max_factors))
        .collect()
}

fn necklace_tuples(q: &DoubleQuiver, total: usize, arity: usize) -> Vec<Vec<Necklace>> {
    let ns = necklaces_with_idempotents(q, total);
    let mut out: Vec<Vec<Necklace>> = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                let used: usize = prefix.iter().map(Necklace::len).sum();
                ns.iter()
                    .filter(move |n| used + n.len() <= total)
                    .map(move |n| {
                        let mut p = prefix.clone();
                        p.push(n.clone());
                        p
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

/// Random polynomials on `space` of degree at most `max_degree`.
pub fn random_rep_poly<R: rand::Rng>(rng: &mut R, space: &RepSpace, max_degree: u32) -> RepPoly {
    let mut out = RepPoly::zero();
    let n = space.var_count();
    for _ in 0..rng.gen_range(1..=3) {
        let mut m = space.one_monomial();
        if n > 0 {
            for _ in 0..rng.gen_range(0..=max_degree) {
                m.0[rng.gen_range(0..n)] += 1;
            }
        }
        let num: i64 = rng.gen_range(-8..=8);
        let den: i64 = rng.gen_range(1..=8);
        out.add_term(m, &crate::symalg::HPoly::constant(crate::symalg::rat(num, den)));
    }
    out
}

fn weyl_failure(space: &RepSpace, pair: (String, String)) -> Box<Counterexample> {
    Box::new(Counterexample {
        identity: "x⋆y − y⋆x = h·π(x,y)".into(),
        input: format!("{}, {} at l={}", pair.0, pair.1, space.dims()),
        lhs: String::new(),
        rhs: String::new(),
        differing: String::new(),
    })
}

pub fn run_suite(q: &DoubleQuiver, suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let mut cases = 0;
    let result = run_inner(q, suite, cfg, &mut cases);
    SuiteReport { suite, cases, result }
}

fn run_inner(q: &DoubleQuiver, suite: Suite, cfg: &SuiteConfig, cases: &mut usize) -> Verdict {
    let ex = cfg.exhaustive_edges;
    let cap = cfg.max_idempotents;
    let trials: Vec<usize> = (0..cfg.trials).collect();
    match suite {
        Suite::Assoc => {
            if let Some(n) = ex {
                let t = monomial_triples(q, n, cap);
                *cases += t.len();
                first_failure(&t, |(a, b, c)| check_associativity(q, &el(a), &el(b), &el(c)))?;
            }
            *cases += trials.len();
            first_failure(&trials, |i| {
                let r = random_tuple(q, cfg, *i, 3);
                check_associativity(q, &r[0], &r[1], &r[2])
            })
        }
        Suite::Bialgebra => {
            if let Some(n) = ex {
                let p = monomial_pairs(q, n, cap);
                *cases += p.len();
                first_failure(&p, |(a, b)| check_bialgebra(q, &el(a), &el(b)))?;
            }
            *cases += trials.len();
            first_failure(&trials, |i| {
                let r = random_tuple(q, cfg, *i, 2);
                check_bialgebra(q, &r[0], &r[1])
            })
        }
        Suite::Coassoc | Suite::Antipode | Suite::Counit => {
            let check = |a: &SymLElement| match suite {
                Suite::Coassoc => check_coassociativity(q, a),
                Suite::Antipode => check_antipode(q, a),
                _ => check_counit(q, a),
            };
            if let Some(n) = ex {
                let m = monomials_up_to(q, n, cap);
                *cases += m.len();
                first_failure(&m, |a| check(&el(a)))?;
            }
            *cases += trials.len();
            first_failure(&trials, |i| check(&random_tuple(q, cfg, *i, 1)[0]))
        }
        Suite::Classical => {
            let t = necklace_tuples(q, ex.unwrap_or(cfg.max_edges), 2);
            *cases += t.len();
            first_failure(&t, |p| check_classical_limits(q, &p[0], &p[1]))
        }
        Suite::LieBialg => {
            let n = ex.unwrap_or(cfg.max_edges);
            let singles = necklace_tuples(q, n, 1);
            *cases += singles.len();
            first_failure(&singles, |p| check_co_jacobi(q, &p[0]))?;
            let pairs = necklace_tuples(q, n, 2);
            *cases += pairs.len();
            first_failure(&pairs, |p| check_cocycle(q, &p[0], &p[1]))?;
            let triples = necklace_tuples(q, n, 3);
            *cases += triples.len();
            first_failure(&triples, |p| check_jacobi(q, &p[0], &p[1], &p[2]))
        }
        Suite::Diagram | Suite::Transport | Suite::Poisson | Suite::Weyl => {
            for dims in &cfg.dims {
                let space = RepSpace::new(q, dims.clone()).expect("dimension vector checked by the caller");
                run_rep(q, suite, cfg, &space, cases)?;
            }
            Ok(())
        }
    }
}

fn run_rep(q: &DoubleQuiver, suite: Suite, cfg: &SuiteConfig, space: &RepSpace, cases: &mut usize) -> Verdict {
    let ex = cfg.exhaustive_edges;
    let cap = cfg.max_idempotents;
    let trials: Vec<usize> = (0..cfg.trials).collect();
    match suite {
        Suite::Diagram => {
            if let Some(n) = ex {
                let p = monomial_pairs(q, n, cap);
                *cases += p.len();
                first_failure(&p, |(a, b)| check_diagram(space, &el(a), &el(b)))?;
            }
            *cases += trials.len();
            first_failure(&trials, |i| {
                let r = random_tuple(q, cfg, *i, 2);
                check_diagram(space, &r[0], &r[1])
            })
        }
        Suite::Transport => {
            if let Some(n) = ex {
                let m = monomials_up_to(q, n, cap);
                *cases += m.len();
                first_failure(&m, |a| check_transport(space, &el(a)))?;
            }
            *cases += trials.len();
            first_failure(&trials, |i| check_transport(space, &random_tuple(q, cfg, *i, 1)[0]))
        }
        Suite::Poisson => {
            let t = necklace_tuples(q, ex.unwrap_or(cfg.max_edges), 2);
            *cases += t.len();
            first_failure(&t, |p| check_poisson_hom(space, &p[0], &p[1]))
        }
        _ => {
            *cases += space.var_count() * space.var_count();
            check_weyl_relations(space).map_err(|p| weyl_failure(space, p))?;
            *cases += trials.len();
            first_failure(&trials, |i| {
                let mut rng = rng_from_seed(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(*i as u64));
                let f = random_rep_poly(&mut rng, space, 4);
                let g = random_rep_poly(&mut rng, space, 4);
                let h = random_rep_poly(&mut rng, space, 4);
                let lhs = space.moyal(&space.moyal(&f, &g), &h);
                let rhs = space.moyal(&f, &space.moyal(&g, &h));
                if lhs == rhs {
                    Ok(())
                } else {
                    Err(Box::new(Counterexample {
                        identity: "(f⋆g)⋆k = f⋆(g⋆k)".into(),
                        input: format!(
                            "[{}], [{}], [{}] at l={}",
                            space.render_poly(&f),
                            space.render_poly(&g),
                            space.render_poly(&h),
                            space.dims()
                        ),
                        lhs: space.render_poly(&lhs),
                        rhs: space.render_poly(&rhs),
                        differing: lhs
                            .first_difference(&rhs)
                            .map(|k| space.render_monomial(&k))
                            .unwrap_or_default(),
                    }))
                }
            })
        }
    }
}
