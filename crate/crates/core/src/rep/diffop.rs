//! Normally ordered differential operators with polynomial coefficients,
//! Weyl symmetrization, and the representation `ρ` of heighted collections.

use crate::heights::{HeightedCollection, HeightedElement};
use crate::symalg::{LinComb, Rational};
use rustc_hash::FxHashMap;

use super::space::{power, RepPoly, RepSpace};

/// `x^coords ∂^derivs` over the coordinates of original edges, with every
/// coordinate to the left of every derivation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpMonomial {
    pub coords: Vec<u16>,
    pub derivs: Vec<u16>,
}

pub type DiffOp = LinComb<OpMonomial>;

/// `(variable name, exponent)` pairs.
pub type VarPowers = Vec<(String, u16)>;

#[derive(Debug, Clone, Copy)]
enum Generator {
    Coord(usize),
    Deriv(usize),
}

impl RepSpace<'_> {
    pub fn identity_op(&self) -> DiffOp {
        let n = self.base_var_count();
        DiffOp::basis(OpMonomial {
            coords: vec![0; n],
            derivs: vec![0; n],
        })
    }

    /// `A ∘ x_v`, reordered into normal form: `∂^b x_v = x_v ∂^b + b_v ∂^{b − e_v}`.
    fn mul_coord(&self, a: &DiffOp, v: usize) -> DiffOp {
        let mut out = DiffOp::zero();
        for (m, c) in a.iter() {
            let b = m.derivs[v];
            if b > 0 {
                let mut lower = m.clone();
                lower.derivs[v] -= 1;
                out.add_term(lower, &c.scale(&Rational::from_integer(b.into())));
            }
            let mut raised = m.clone();
            raised.coords[v] += 1;
            out.add_term(raised, c);
        }
        out
    }

    fn mul_deriv(&self, a: &DiffOp, v: usize) -> DiffOp {
        a.iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m.derivs[v] += 1;
                (m, c.clone())
            })
            .collect()
    }

    fn mul_generators(&self, mut a: DiffOp, gens: &[Generator]) -> DiffOp {
        for g in gens {
            a = match *g {
                Generator::Coord(v) => self.mul_coord(&a, v),
                Generator::Deriv(v) => self.mul_deriv(&a, v),
            };
        }
        a
    }

    /// Operator composition `A ∘ B`, commuting one derivation past one
    /// coordinate at a time.
    pub fn compose(&self, a: &DiffOp, b: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (m, c) in b.iter() {
            let mut gens = Vec::new();
            for (v, e) in m.coords.iter().enumerate() {
                gens.extend(std::iter::repeat_n(Generator::Coord(v), usize::from(*e)));
            }
            for (v, e) in m.derivs.iter().enumerate() {
                gens.extend(std::iter::repeat_n(Generator::Deriv(v), usize::from(*e)));
            }
            out.add_assign_scaled(&self.mul_generators(a.clone(), &gens), c);
        }
        out
    }

    /// The operator of a single coordinate: `(M_e)_{ij}` multiplies,
    /// `(M_{e*})_{ij}` becomes `−h ∂/∂(M_e)_{ji}`. Returns the generator and
    /// whether the `−h` factor applies.
    fn generator(&self, var: usize) -> (Generator, bool) {
        if var < self.base_var_count() {
            (Generator::Coord(var), false)
        } else {
            (Generator::Deriv(self.partner(var)), true)
        }
    }

    /// Adds `weight` times the ordered product of the operators of `vars`
    /// to an integer accumulator keyed by normal-ordered term and power of `−h`.
    fn accumulate_ordered_product(&self, vars: &[usize], weight: i64, acc: &mut OrderedSums) {
        let n = self.base_var_count();
        let mut reversed = 0u32;
        let mut terms = vec![(
            OpMonomial {
                coords: vec![0; n],
                derivs: vec![0; n],
            },
            weight,
        )];
        for v in vars {
            match self.generator(*v) {
                (Generator::Coord(v), _) => {
                    let mut next = Vec::with_capacity(terms.len() * 2);
                    for (mut m, c) in terms {
                        let b = m.derivs[v];
                        if b > 0 {
                            let mut lower = m.clone();
                            lower.derivs[v] -= 1;
                            next.push((lower, c * i64::from(b)));
                        }
                        m.coords[v] += 1;
                        next.push((m, c));
                    }
                    terms = next;
                }
                (Generator::Deriv(v), _) => {
                    reversed += 1;
                    for (m, _) in &mut terms {
                        m.derivs[v] += 1;
                    }
                }
            }
        }
        for (m, c) in terms {
            *acc.entry((m, reversed)).or_insert(0) += c;
        }
    }

    pub fn render_op_monomial(&self, m: &OpMonomial) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, e) in m.coords.iter().enumerate().filter(|(_, e)| **e > 0) {
            parts.push(power(self.var_name(i), *e));
        }
        for (i, e) in m.derivs.iter().enumerate().filter(|(_, e)| **e > 0) {
            parts.push(power(format!("d/d{}", self.var_name(i)), *e));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn render_op(&self, a: &DiffOp) -> String {
        crate::format::render_terms(a, |m| {
            let unit = m.coords.iter().chain(&m.derivs).all(|e| *e == 0);
            (unit, self.render_op_monomial(m))
        })
    }

    /// Coordinate and derivation `(variable, exponent)` lists of one term.
    pub fn describe_op_monomial(&self, m: &OpMonomial) -> (VarPowers, VarPowers) {
        let list = |v: &[u16]| -> Vec<(String, u16)> {
            v.iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| (self.var_name(i), *e))
                .collect()
        };
        (list(&m.coords), list(&m.derivs))
    }
}

type OrderedSums = FxHashMap<(OpMonomial, u32), i64>;

/// `Σ n · (−h)^k · m / denominator` over the accumulated terms.
fn finish_sums(acc: OrderedSums, denominator: i64) -> DiffOp {
    let mut out = DiffOp::zero();
    for ((m, k), n) in acc {
        if n != 0 {
            let sign = if k % 2 == 0 { n } else { -n };
            out.add_scaled(m, &Rational::new(sign.into(), denominator.into()), k);
        }
    }
    out
}

/// Advances `a` to the next distinct permutation in lexicographic order.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// `φ_W`: each monomial maps to the average of the operator products over
/// all orderings of its factors. Averaging over distinct orderings of the
/// multiset gives the same value as over all `N!` orderings.
pub fn weyl_symmetrize(space: &RepSpace, f: &RepPoly) -> DiffOp {
    let mut out = DiffOp::zero();
    for (m, c) in f.iter() {
        let mut vars: Vec<usize> = Vec::new();
        for (v, e) in m.0.iter().enumerate() {
            vars.extend(std::iter::repeat_n(v, usize::from(*e)));
        }
        let mut sums = OrderedSums::default();
        let mut count = 0i64;
        loop {
            space.accumulate_ordered_product(&vars, 1, &mut sums);
            count += 1;
            if !next_permutation(&mut vars) {
                break;
            }
        }
        out.add_assign_scaled(&finish_sums(sums, count), c);
    }
    out
}

/// `ρ` of one heighted collection: the letters of all necklaces are composed
/// in ascending height, summed over matrix indices at every junction;
/// idempotent factors contribute `l_i`.
pub fn rho(space: &RepSpace, c: &HeightedCollection) -> DiffOp {
    let mut scalar: i64 = 1;
    for v in c.idempotents() {
        scalar *= i64::from(space.dims().get(*v));
    }
    if scalar == 0 {
        return DiffOp::zero();
    }
    // Letter positions ordered by height.
    let n = c.edge_count();
    let mut by_height: Vec<(usize, usize)> = vec![(0, 0); n];
    for (k, neck) in c.necklaces().iter().enumerate() {
        for (j, (_, h)) in neck.letters().iter().enumerate() {
            by_height[*h as usize - 1] = (k, j);
        }
    }
    // Index assignments of each necklace, then their cartesian product.
    let per_necklace: Vec<Vec<Vec<usize>>> = c
        .necklaces()
        .iter()
        .map(|neck| {
            let word: Vec<_> = neck.letters().iter().map(|(e, _)| *e).collect();
            let mut all = Vec::new();
            space.for_each_index_assignment(&word, |vars| all.push(vars.to_vec()));
            all
        })
        .collect();
    if per_necklace.iter().any(|a| a.is_empty()) {
        return DiffOp::zero();
    }
    let mut choice = vec![0usize; per_necklace.len()];
    let mut sums = OrderedSums::default();
    let mut ordered = vec![0usize; n];
    loop {
        for (slot, (k, j)) in ordered.iter_mut().zip(&by_height) {
            *slot = per_necklace[*k][choice[*k]][*j];
        }
        space.accumulate_ordered_product(&ordered, scalar, &mut sums);
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < per_necklace[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
    }
    finish_sums(sums, 1)
}

pub fn rho_element(space: &RepSpace, a: &HeightedElement) -> DiffOp {
    a.map_linear(|c| rho(space, c))
}
