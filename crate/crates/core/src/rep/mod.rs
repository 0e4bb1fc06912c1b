//! The representation side: trace maps into polynomial functions on
//! representation spaces, the classical Moyal product there, and normally
//! ordered differential operators.

mod diffop;
mod space;

pub use diffop::{rho, rho_element, weyl_symmetrize, DiffOp, OpMonomial, VarPowers};
pub use space::{DimVector, RepMonomial, RepPoly, RepSpace, Var};

use crate::heights::phi_w;
use crate::hopf::{star, Counterexample, Verdict};
use crate::symalg::lie::bracket;
use crate::symalg::{HPoly, LinComb, Monomial, Necklace, Rational, SymLElement};
use num::rational::Ratio;
use num::CheckedAdd;
use num::{One, Zero};
use rustc_hash::FxHashMap;

impl RepSpace<'_> {
    /// `tr_l` of a single necklace; an idempotent at `i` gives `l_i`.
    pub fn trace_necklace(&self, n: &Necklace) -> RepPoly {
        match n {
            Necklace::Idempotent(v) => RepPoly::term(self.one_monomial(), HPoly::from_int(self.dims().get(*v) as i64)),
            Necklace::Cycle(w) => {
                let mut out = RepPoly::zero();
                self.for_each_index_assignment(w, |vars| {
                    let mut m = self.one_monomial();
                    for v in vars {
                        m.0[*v] += 1;
                    }
                    out.add_term(m, &HPoly::one());
                });
                out
            }
        }
    }

    /// The coefficients of a traced monomial are counts of index
    /// assignments, so the product is accumulated over machine integers.
    pub fn trace_monomial(&self, p: &Monomial) -> RepPoly {
        let mut acc: FxHashMap<RepMonomial, i64> = FxHashMap::default();
        acc.insert(self.one_monomial(), 1);
        for n in p.factors() {
            match n {
                Necklace::Idempotent(v) => {
                    let l = i64::from(self.dims().get(*v));
                    acc.values_mut().for_each(|c| *c *= l);
                }
                Necklace::Cycle(w) => {
                    let mut terms: Vec<Vec<usize>> = Vec::new();
                    self.for_each_index_assignment(w, |vars| terms.push(vars.to_vec()));
                    let mut next: FxHashMap<RepMonomial, i64> = FxHashMap::default();
                    for (m, c) in &acc {
                        for vars in &terms {
                            let mut m = m.clone();
                            for v in vars {
                                m.0[*v] += 1;
                            }
                            *next.entry(m).or_insert(0) += c;
                        }
                    }
                    acc = next;
                }
            }
            acc.retain(|_, c| *c != 0);
        }
        acc.into_iter().map(|(m, c)| (m, HPoly::from_int(c))).collect()
    }

    /// `tr_l`, extended multiplicatively over `&` and linearly.
    pub fn trace(&self, a: &SymLElement) -> RepPoly {
        a.map_linear(|p| self.trace_monomial(p))
    }

    /// Calls `f` with the variable of each letter for every assignment of
    /// matrix indices to the junctions of the cyclic word `w`. Letter `r`
    /// reads `(M_{a_r})_{k_r k_{r-1}}` where `k_r` indexes the junction after it.
    pub(crate) fn for_each_index_assignment(&self, w: &[crate::quiver::Edge], mut f: impl FnMut(&[usize])) {
        let q = self.quiver();
        let m = w.len();
        let ranges: Vec<u32> = w.iter().map(|x| self.dims().get(q.head(*x))).collect();
        if ranges.contains(&0) {
            return;
        }
        let mut k = vec![0u32; m];
        let mut vars = vec![0usize; m];
        loop {
            for r in 0..m {
                let prev = k[(r + m - 1) % m];
                vars[r] = self.var_index(Var {
                    edge: w[r],
                    row: k[r],
                    col: prev,
                });
            }
            f(&vars);
            let mut r = 0;
            while r < m {
                k[r] += 1;
                if k[r] < ranges[r] {
                    break;
                }
                k[r] = 0;
                r += 1;
            }
            if r == m {
                return;
            }
        }
    }

    /// The classical Moyal product with bivector `π(x_p, y_p) = 1`,
    /// `π(y_p, x_p) = −1` for every canonical pair and `h/2` as the
    /// deformation parameter of the exponential.
    pub fn moyal(&self, f: &RepPoly, g: &RepPoly) -> RepPoly {
        if let Some(out) = self.moyal_integral(f, g) {
            return out;
        }
        let mut out = RepPoly::zero();
        for (a, ca) in f.iter() {
            for (b, cb) in g.iter() {
                let c = ca * cb;
                self.moyal_monomials(a, b, |m, coeff, d| {
                    let r = coeff.to_rational() / Rational::from_integer(num::BigInt::from(2u8).pow(d));
                    out.add_term(m, &c.scale(&r).shift(d))
                });
            }
        }
        out
    }

    /// The Moyal product when both inputs have integer coefficients free
    /// of `h`, accumulated in checked machine arithmetic. `None` on overflow
    /// or when an input has other coefficients.
    fn moyal_integral(&self, f: &RepPoly, g: &RepPoly) -> Option<RepPoly> {
        let small = |p: &RepPoly| -> Option<Vec<(RepMonomial, i128)>> {
            p.iter()
                .map(|(m, c)| {
                    let mut terms = c.terms();
                    let (0, r) = terms.next()? else { return None };
                    if terms.next().is_some() || !r.is_integer() {
                        return None;
                    }
                    Some((m.clone(), i128::try_from(r.numer()).ok()?))
                })
                .collect()
        };
        let (f, g) = (small(f)?, small(g)?);
        let mut acc: FxHashMap<(RepMonomial, u32), Ratio<i128>> = FxHashMap::default();
        let mut overflow = false;
        for (a, ca) in &f {
            for (b, cb) in &g {
                let c = ca.checked_mul(*cb);
                self.moyal_monomials(a, b, |m, coeff, d| {
                    let term = match coeff {
                        PatternCoeff::Small(num, den) => c
                            .and_then(|c| c.checked_mul(num))
                            .zip(2i128.checked_pow(d).and_then(|p| p.checked_mul(den)))
                            .map(|(n, dn)| Ratio::new(n, dn)),
                        PatternCoeff::Big(..) => None,
                    };
                    let slot = acc.entry((m, d)).or_insert_with(Ratio::zero);
                    match term.and_then(|t| slot.checked_add(&t)) {
                        Some(v) => *slot = v,
                        None => overflow = true,
                    }
                });
                if overflow {
                    return None;
                }
            }
        }
        let mut out = RepPoly::zero();
        for ((m, d), r) in acc {
            if !r.is_zero() {
                out.add_scaled(m, &Rational::new((*r.numer()).into(), (*r.denom()).into()), d);
            }
        }
        Some(out)
    }

    /// Emits `(monomial, c, d)` for each contraction pattern, the term
    /// being `c / 2^d · h^d`.
    fn moyal_monomials(&self, a: &RepMonomial, b: &RepMonomial, mut emit: impl FnMut(RepMonomial, PatternCoeff, u32)) {
        // Pairs that can contribute at least one contraction.
        let active: Vec<(usize, usize, u16, u16)> = self
            .pairs()
            .iter()
            .filter_map(|&(x, y)| {
                let jmax = a.0[x].min(b.0[y]);
                let lmax = a.0[y].min(b.0[x]);
                (jmax + lmax > 0).then_some((x, y, jmax, lmax))
            })
            .collect();
        let mut jl = vec![(0u16, 0u16); active.len()];
        loop {
            let mut m = a.clone();
            for (v, e) in m.0.iter_mut().zip(&b.0) {
                *v += e;
            }
            // Per pair: falling factorials of the contracted exponents over
            // `j! l!`, with sign `(−1)^l`.
            let mut factors: Vec<(u16, u16)> = Vec::new();
            let mut orders: Vec<u16> = Vec::new();
            let mut negative = false;
            let mut d = 0u32;
            for (&(x, y, _, _), &(j, l)) in active.iter().zip(&jl) {
                if j + l == 0 {
                    continue;
                }
                factors.extend([(a.0[x], j), (b.0[y], j), (a.0[y], l), (b.0[x], l)]);
                orders.extend([j, l]);
                negative ^= l % 2 == 1;
                m.0[x] -= j + l;
                m.0[y] -= j + l;
                d += u32::from(j + l);
            }
            emit(m, PatternCoeff::new(&factors, &orders, negative), d);

            let mut i = 0;
            while i < active.len() {
                let (_, _, jmax, lmax) = active[i];
                let (j, l) = &mut jl[i];
                if *j < jmax {
                    *j += 1;
                    break;
                }
                *j = 0;
                if *l < lmax {
                    *l += 1;
                    break;
                }
                *l = 0;
                i += 1;
            }
            if i == active.len() {
                return;
            }
        }
    }

    /// The Poisson bracket of the bivector: `Σ_p ∂_x F ∂_y G − ∂_y F ∂_x G`.
    pub fn poisson(&self, f: &RepPoly, g: &RepPoly) -> RepPoly {
        let mut out = RepPoly::zero();
        for &(x, y) in self.pairs() {
            let fx = self.partial(f, x);
            let fy = self.partial(f, y);
            if fx.is_zero() && fy.is_zero() {
                continue;
            }
            out += &self.mul(&fx, &self.partial(g, y));
            out -= &self.mul(&fy, &self.partial(g, x));
        }
        out
    }

    /// Exact-rank test of the trace images of `basis`.
    pub fn traces_independent(&self, basis: &[Monomial]) -> bool {
        let mut pivots: std::collections::BTreeMap<RepMonomial, std::collections::BTreeMap<RepMonomial, Rational>> =
            std::collections::BTreeMap::new();
        for p in basis {
            let image = self.trace_monomial(p);
            if image.h_degree().unwrap_or(0) > 0 {
                panic!("trace images are constant in h");
            }
            let mut row: std::collections::BTreeMap<RepMonomial, Rational> =
                image.iter().map(|(k, c)| (k.clone(), c.constant_term())).collect();
            loop {
                let Some((lead, c)) = row.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
                    return false;
                };
                match pivots.get(&lead) {
                    Some(pivot) => {
                        let factor = &c / &pivot[&lead];
                        for (k, v) in pivot {
                            let entry = row.entry(k.clone()).or_insert_with(Rational::zero);
                            *entry -= &factor * v;
                            if entry.is_zero() {
                                row.remove(k);
                            }
                        }
                    }
                    None => {
                        pivots.insert(lead, row);
                        break;
                    }
                }
            }
        }
        true
    }
}

fn checked_product(it: impl Iterator<Item = u16>) -> Option<i128> {
    it.into_iter().try_fold(1i128, |acc, x| acc.checked_mul(x.into()))
}

/// Coefficient `±Π falling(n, k) / Π k!` of one contraction pattern, in
/// machine integers when it fits.
enum PatternCoeff {
    Small(i128, i128),
    Big(num::BigInt, num::BigInt),
}

impl PatternCoeff {
    fn new(factors: &[(u16, u16)], orders: &[u16], negative: bool) -> Self {
        let falling = |n: u16, k: u16| (0..k).map(move |i| n - i);
        let num = checked_product(factors.iter().flat_map(|&(n, k)| falling(n, k)));
        let den = checked_product(orders.iter().flat_map(|&k| falling(k, k)));
        let small = num.zip(den);
        match small {
            Some((num, den)) => PatternCoeff::Small(if negative { -num } else { num }, den),
            None => {
                let (mut num, mut den) = (num::BigInt::one(), num::BigInt::one());
                for x in factors.iter().flat_map(|&(n, k)| falling(n, k)) {
                    num *= x;
                }
                for x in orders.iter().flat_map(|&k| falling(k, k)) {
                    den *= x;
                }
                PatternCoeff::Big(if negative { -num } else { num }, den)
            }
        }
    }

    fn to_rational(&self) -> Rational {
        match self {
            PatternCoeff::Small(n, d) => Rational::new((*n).into(), (*d).into()),
            PatternCoeff::Big(n, d) => Rational::new(n.clone(), d.clone()),
        }
    }
}

fn compare(space: &RepSpace, identity: &str, input: impl FnOnce() -> String, lhs: &RepPoly, rhs: &RepPoly) -> Verdict {
    compare_with(
        identity,
        input,
        lhs,
        rhs,
        |a| space.render_poly(a),
        |k| space.render_monomial(k),
    )
}

fn compare_with<K: Ord + Clone>(
    identity: &str,
    input: impl FnOnce() -> String,
    lhs: &LinComb<K>,
    rhs: &LinComb<K>,
    render: impl Fn(&LinComb<K>) -> String,
    render_key: impl Fn(&K) -> String,
) -> Verdict {
    if lhs == rhs {
        return Ok(());
    }
    Err(Box::new(Counterexample {
        identity: identity.to_string(),
        input: input(),
        lhs: render(lhs),
        rhs: render(rhs),
        differing: lhs.first_difference(rhs).map(|k| render_key(&k)).unwrap_or_default(),
    }))
}

fn show(space: &RepSpace, xs: &[&SymLElement]) -> String {
    let q = space.quiver();
    let parts: Vec<String> = xs
        .iter()
        .map(|x| format!("[{}]", crate::format::render_lincomb(q, x)))
        .collect();
    format!("{} at l={}", parts.join(", "), space.dims())
}

/// `tr_l(P *_h R) = tr_l(P) ⋆ tr_l(R)`.
pub fn check_diagram(space: &RepSpace, p: &SymLElement, r: &SymLElement) -> Verdict {
    let lhs = space.trace(&star(space.quiver(), p, r));
    let rhs = space.moyal(&space.trace(p), &space.trace(r));
    compare(space, "tr(P*R) = tr(P)⋆tr(R)", || show(space, &[p, r]), &lhs, &rhs)
}

/// `ρ(Φ_W(P)) = φ_W(tr_l(P))`.
pub fn check_transport(space: &RepSpace, p: &SymLElement) -> Verdict {
    let lhs = rho_element(space, &phi_w(p));
    let rhs = weyl_symmetrize(space, &space.trace(p));
    compare_with(
        "ρ(Φ_W(P)) = φ_W(tr(P))",
        || show(space, &[p]),
        &lhs,
        &rhs,
        |a| space.render_op(a),
        |k| space.render_op_monomial(k),
    )
}

/// `tr_l({f, g}) = {tr_l f, tr_l g}`.
pub fn check_poisson_hom(space: &RepSpace, f: &Necklace, g: &Necklace) -> Verdict {
    let q = space.quiver();
    let lhs = space.trace(&bracket(q, f, g));
    let rhs = space.poisson(&space.trace_necklace(f), &space.trace_necklace(g));
    let ef = SymLElement::basis(Monomial::single(f.clone()));
    let eg = SymLElement::basis(Monomial::single(g.clone()));
    compare(
        space,
        "tr({f,g}) = {tr f, tr g}",
        || show(space, &[&ef, &eg]),
        &lhs,
        &rhs,
    )
}

/// Linear independence of `tr_l` on all basis monomials with at most
/// `max_edges` edges and at most `max_idempotents` idempotent factors.
pub fn check_injectivity(space: &RepSpace, max_edges: usize, max_idempotents: usize) -> bool {
    let basis = crate::basis::monomials_up_to(space.quiver(), max_edges, max_idempotents);
    space.traces_independent(&basis)
}

/// `x ⋆ y − y ⋆ x = h` for a canonical pair, and `0` for all other pairs of
/// coordinates. Returns the first failing pair of variable names.
pub fn check_weyl_relations(space: &RepSpace) -> Result<(), (String, String)> {
    let n = space.var_count();
    for a in 0..n {
        for b in 0..n {
            let x = space.variable(a);
            let y = space.variable(b);
            let commutator = &space.moyal(&x, &y) - &space.moyal(&y, &x);
            let expected = if space.partner(a) == b {
                let sign = if space.var(a).edge < space.var(b).edge { 1 } else { -1 };
                RepPoly::term(
                    space.one_monomial(),
                    HPoly::monomial(Rational::from_integer(sign.into()), 1),
                )
            } else {
                RepPoly::zero()
            };
            if commutator != expected {
                return Err((space.var_name(a), space.var_name(b)));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
