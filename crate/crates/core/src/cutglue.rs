//! Abstract edges, reversal-compatible matchings, and the cut-and-glue
//! operation. This is the combinatorial kernel shared by the star product
//! and the coproduct.
//!
//! Abstract edges of a monomial are numbered consecutively, factor by factor,
//! in the stored order of the monomial; for a pair of monomials the edges of
//! the second are numbered after those of the first.

use crate::quiver::{DoubleQuiver, Edge, Vertex};
use crate::symalg::{Monomial, Necklace};

const UNMATCHED: u32 = u32::MAX;

/// The abstract edges `X` of a monomial (or of a disjoint union of two).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractEdges {
    letters: Vec<Edge>,
    succ: Vec<u32>,
    factor: Vec<u32>,
    position: Vec<u32>,
    idempotents: Vec<Vertex>,
}

impl AbstractEdges {
    pub fn of(m: &Monomial) -> Self {
        let mut out = AbstractEdges {
            letters: Vec::with_capacity(m.edge_count()),
            succ: Vec::with_capacity(m.edge_count()),
            factor: Vec::with_capacity(m.edge_count()),
            position: Vec::with_capacity(m.edge_count()),
            idempotents: Vec::new(),
        };
        out.push_monomial(m, 0);
        out
    }

    /// `X ⊔ Y`; edges of `b` are numbered after those of `a`, and its factors
    /// after the factors of `a`.
    pub fn disjoint_union(a: &Monomial, b: &Monomial) -> Self {
        let mut out = AbstractEdges::of(a);
        out.push_monomial(b, a.factor_count() as u32);
        out
    }

    fn push_monomial(&mut self, m: &Monomial, factor_offset: u32) {
        for (i, n) in m.factors().iter().enumerate() {
            match n {
                Necklace::Idempotent(v) => self.idempotents.push(*v),
                Necklace::Cycle(w) => {
                    let start = self.letters.len() as u32;
                    let len = w.len() as u32;
                    for (j, x) in w.iter().enumerate() {
                        self.letters.push(*x);
                        self.succ.push(start + (j as u32 + 1) % len);
                        self.factor.push(factor_offset + i as u32);
                        self.position.push(j as u32);
                    }
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `pr_X(x)`.
    pub fn letter(&self, x: usize) -> Edge {
        self.letters[x]
    }

    pub fn letters(&self) -> &[Edge] {
        &self.letters
    }

    /// The cyclic successor `x + 1` within its necklace.
    pub fn next(&self, x: usize) -> usize {
        self.succ[x] as usize
    }

    /// `(factor index, position within the stored word)`, both zero-based.
    pub fn location(&self, x: usize) -> (usize, usize) {
        (self.factor[x] as usize, self.position[x] as usize)
    }

    pub fn idempotents(&self) -> &[Vertex] {
        &self.idempotents
    }

    /// Abstract edges whose letter is `x`.
    pub fn instances(&self, x: Edge) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.letters[i] == x).collect()
    }
}

/// `(I_X, I_Y, φ)` stored as pairs `(x, φ(x))`, with `x` indexing `X` and
/// `φ(x)` indexing `Y` (both local, zero-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMatching {
    pub pairs: Vec<(usize, usize)>,
}

/// `(I, φ)` stored as unordered pairs `(x, φ(x))` with `pr(x) ∈ Q` and
/// `pr(φ(x)) ∈ Q*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InternalMatching {
    pub pairs: Vec<(usize, usize)>,
}

impl PairMatching {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_valid(&self, q: &DoubleQuiver, x: &AbstractEdges, y: &AbstractEdges) -> bool {
        let mut seen_x = vec![false; x.len()];
        let mut seen_y = vec![false; y.len()];
        self.pairs.iter().all(|&(a, b)| {
            a < x.len()
                && b < y.len()
                && !std::mem::replace(&mut seen_x[a], true)
                && !std::mem::replace(&mut seen_y[b], true)
                && y.letter(b) == q.reverse(x.letter(a))
        })
    }

    /// The involution on `X ⊔ Y` (φ extended by φ⁻¹), as a partner table.
    pub fn involution(&self, x_len: usize, total: usize) -> Vec<u32> {
        let mut partner = vec![UNMATCHED; total];
        for &(a, b) in &self.pairs {
            partner[a] = (x_len + b) as u32;
            partner[x_len + b] = a as u32;
        }
        partner
    }
}

impl InternalMatching {
    /// `|I|`, twice the number of pairs.
    pub fn size(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn is_valid(&self, q: &DoubleQuiver, x: &AbstractEdges) -> bool {
        let mut seen = vec![false; x.len()];
        self.pairs.iter().all(|&(a, b)| {
            a < x.len()
                && b < x.len()
                && !std::mem::replace(&mut seen[a], true)
                && !std::mem::replace(&mut seen[b], true)
                && q.is_base(x.letter(a))
                && x.letter(b) == q.reverse(x.letter(a))
        })
    }

    pub fn involution(&self, total: usize) -> Vec<u32> {
        let mut partner = vec![UNMATCHED; total];
        for &(a, b) in &self.pairs {
            partner[a] = b as u32;
            partner[b] = a as u32;
        }
        partner
    }
}

/// `f(x) = x + 1` for uncut `x`, `f(x) = φ(x) + 1` for cut `x`.
pub fn successor(edges: &AbstractEdges, partner: &[u32], x: usize) -> usize {
    match partner[x] {
        UNMATCHED => edges.next(x),
        p => edges.next(p as usize),
    }
}

/// Outcome of one cut-and-glue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueResult {
    /// Resulting factors: one per `f`-orbit in order of the orbit's least
    /// abstract edge, followed by the untouched original idempotents.
    pub factors: Vec<Necklace>,
    /// For every abstract edge, the index in `factors` of its orbit. On
    /// surviving edges this is the component map μ; on cut edges it is the
    /// start map g.
    pub orbit: Vec<u32>,
    pub monomial: Monomial,
}

impl GlueResult {
    /// μ(x) for a surviving edge, g(x) for a cut edge.
    pub fn component(&self, x: usize) -> usize {
        self.orbit[x] as usize
    }

    pub fn orbit_count(&self) -> usize {
        self.factors.len()
    }
}

/// Decomposes `X` into `f`-orbits and reads each orbit as a necklace, with
/// cut letters replaced by the idempotent at their tail.
pub fn glue(q: &DoubleQuiver, edges: &AbstractEdges, partner: &[u32]) -> GlueResult {
    let n = edges.len();
    let mut orbit = vec![UNMATCHED; n];
    let mut factors = Vec::new();
    let mut word = Vec::new();
    for start in 0..n {
        if orbit[start] != UNMATCHED {
            continue;
        }
        let id = factors.len() as u32;
        word.clear();
        let mut x = start;
        loop {
            orbit[x] = id;
            if partner[x] == UNMATCHED {
                word.push(edges.letter(x));
            }
            x = successor(edges, partner, x);
            if x == start {
                break;
            }
        }
        if word.is_empty() {
            factors.push(Necklace::Idempotent(q.tail(edges.letter(start))));
        } else {
            factors.push(Necklace::from_word_unchecked(word.clone()));
        }
    }
    factors.extend(edges.idempotents().iter().map(|v| Necklace::Idempotent(*v)));
    let monomial = Monomial::from_factors(factors.clone());
    GlueResult {
        factors,
        orbit,
        monomial,
    }
}

pub fn cut_and_glue_internal(q: &DoubleQuiver, p: &Monomial, m: &InternalMatching) -> GlueResult {
    let edges = AbstractEdges::of(p);
    debug_assert!(m.is_valid(q, &edges));
    glue(q, &edges, &m.involution(edges.len()))
}

pub fn cut_and_glue_pair(q: &DoubleQuiver, p: &Monomial, r: &Monomial, m: &PairMatching) -> GlueResult {
    let edges = AbstractEdges::disjoint_union(p, r);
    let x_len = p.edge_count();
    glue(q, &edges, &m.involution(x_len, edges.len()))
}

/// Every partial injection from `left` into `right`, each exactly once,
/// in lexicographic order of the choices made for `left[0], left[1], …`.
fn partial_injections(left: &[usize], right: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn go(
        left: &[usize],
        right: &[usize],
        used: &mut Vec<bool>,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some((&x, rest)) = left.split_first() else {
            out.push(current.clone());
            return;
        };
        go(rest, right, used, current, out);
        for (k, &y) in right.iter().enumerate() {
            if !used[k] {
                used[k] = true;
                current.push((x, y));
                go(rest, right, used, current, out);
                current.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(left, right, &mut vec![false; right.len()], &mut Vec::new(), &mut out);
    out
}

/// Cartesian product over edge types of the per-type partial injections.
struct Odometer {
    per_type: Vec<Vec<Vec<(usize, usize)>>>,
    digits: Vec<usize>,
    done: bool,
}

impl Odometer {
    fn new(per_type: Vec<Vec<Vec<(usize, usize)>>>) -> Self {
        let digits = vec![0; per_type.len()];
        Odometer {
            per_type,
            digits,
            done: false,
        }
    }

    fn next_pairs(&mut self) -> Option<Vec<(usize, usize)>> {
        if self.done {
            return None;
        }
        let mut pairs: Vec<(usize, usize)> = self
            .per_type
            .iter()
            .zip(&self.digits)
            .flat_map(|(choices, &d)| choices[d].iter().copied())
            .collect();
        pairs.sort_unstable();
        self.done = true;
        for t in (0..self.digits.len()).rev() {
            self.digits[t] += 1;
            if self.digits[t] < self.per_type[t].len() {
                self.done = false;
                break;
            }
            self.digits[t] = 0;
        }
        Some(pairs)
    }
}

/// Stream of every `(I_X, I_Y, φ)` between `x` and `y`, including the empty one.
pub struct PairMatchings {
    odometer: Odometer,
}

impl Iterator for PairMatchings {
    type Item = PairMatching;
    fn next(&mut self) -> Option<PairMatching> {
        self.odometer.next_pairs().map(|pairs| PairMatching { pairs })
    }
}

pub fn enumerate_pair_matchings(q: &DoubleQuiver, x: &AbstractEdges, y: &AbstractEdges) -> PairMatchings {
    let per_type = q
        .edges()
        .filter_map(|e| {
            let left = x.instances(e);
            let right = y.instances(q.reverse(e));
            (!left.is_empty() && !right.is_empty()).then(|| partial_injections(&left, &right))
        })
        .collect();
    PairMatchings {
        odometer: Odometer::new(per_type),
    }
}

/// Stream of every `(I, φ)` on `x`, including the empty one.
pub struct InternalMatchings {
    odometer: Odometer,
}

impl Iterator for InternalMatchings {
    type Item = InternalMatching;
    fn next(&mut self) -> Option<InternalMatching> {
        self.odometer.next_pairs().map(|pairs| InternalMatching { pairs })
    }
}

pub fn enumerate_internal_matchings(q: &DoubleQuiver, x: &AbstractEdges) -> InternalMatchings {
    let per_type = q
        .base_edges()
        .filter_map(|e| {
            let left = x.instances(e);
            let right = x.instances(q.reverse(e));
            (!left.is_empty() && !right.is_empty()).then(|| partial_injections(&left, &right))
        })
        .collect();
    InternalMatchings {
        odometer: Odometer::new(per_type),
    }
}
