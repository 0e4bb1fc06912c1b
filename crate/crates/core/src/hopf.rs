//! The Moyal-type Hopf structure on `Sym L[h]`: star product, coproduct,
//! counit, antipode, and exact checkers for the Hopf axioms.

use rustc_hash::FxHashMap;

use rayon::prelude::*;

use crate::cutglue::{
    enumerate_internal_matchings, enumerate_pair_matchings, glue, AbstractEdges, GlueResult, InternalMatching,
};
use crate::format::{render_lincomb, Render};
use crate::quiver::DoubleQuiver;
use crate::symalg::lie::{adjoint_action, bracket, bracket_l, cobracket, cobracket_l, cobracket_twice, cyclic_sum};
use crate::symalg::linear::{half_power_form, half_power_terms, HalfPowerAccumulator, HalfPowers};
use crate::symalg::{flip, unit, HPoly, LinComb, Monomial, Necklace, SymLElement, Tensor3Element, TensorElement};

/// `P *_h R` on basis monomials:
/// `Σ_{(I_X, I_Y, φ)} (h/2)^{#I_X} (−1)^{#(I_Y ∩ pr_Y⁻¹(Q))} PR_{I_X, I_Y, φ}`.
pub fn star_monomials(q: &DoubleQuiver, p: &Monomial, r: &Monomial) -> SymLElement {
    let mut acc = HalfPowerAccumulator::new();
    accumulate_star(q, p, r, 1, 0, &mut acc).expect("matching counts fit in machine integers");
    acc.finish()
}

/// Adds `n (h/2)^k · (P *_h R)` to `acc`; `None` on overflow.
fn accumulate_star(
    q: &DoubleQuiver,
    p: &Monomial,
    r: &Monomial,
    n: i128,
    k: u32,
    acc: &mut HalfPowerAccumulator<Monomial>,
) -> Option<()> {
    if p.edge_count() == 0 || r.edge_count() == 0 {
        return acc.checked_add(p.product(r), k, n);
    }
    let x = AbstractEdges::of(p);
    let y = AbstractEdges::of(r);
    let union = AbstractEdges::disjoint_union(p, r);
    for m in enumerate_pair_matchings(q, &x, &y) {
        let base_on_y = m.pairs.iter().filter(|&&(_, b)| q.is_base(y.letter(b))).count();
        let sign = if base_on_y % 2 == 0 { n } else { -n };
        let glued = glue(q, &union, &m.involution(x.len(), union.len()));
        acc.checked_add(glued.monomial, k + m.size() as u32, sign)?;
    }
    Some(())
}

/// The star product when every coefficient is an integer combination of
/// powers of `h/2`, summed per term pair in checked machine arithmetic and
/// merged in term order. `None` otherwise or on overflow.
fn star_half_powers(q: &DoubleQuiver, a: &SymLElement, b: &SymLElement) -> Option<SymLElement> {
    let (ta, tb) = (half_power_terms(a)?, half_power_terms(b)?);
    let pairs: Vec<_> = ta.iter().flat_map(|x| tb.iter().map(move |y| (x, y))).collect();
    let run = |&(x, y): &(&(&Monomial, HalfPowers), &(&Monomial, HalfPowers))| {
        let ((p, cp), (r, cr)) = (x, y);
        let mut acc = HalfPowerAccumulator::new();
        for (kp, np) in cp {
            for (kr, nr) in cr {
                accumulate_star(q, p, r, np.checked_mul(*nr)?, kp + kr, &mut acc)?;
            }
        }
        Some(acc)
    };
    let parts: Vec<Option<HalfPowerAccumulator<Monomial>>> = if pairs.len() == 1 {
        vec![run(&pairs[0])]
    } else {
        pairs.par_iter().map(run).collect()
    };
    let mut parts = parts.into_iter();
    let mut total = parts.next()??;
    for part in parts {
        total.merge(part?)?;
    }
    Some(total.finish())
}

/// Applies a basis-level bilinear map to every pair of terms, in parallel,
/// then merges in term order. Exact arithmetic makes the merge
/// schedule-independent.
fn par_bilinear<A, B, K, F>(a: &LinComb<A>, b: &LinComb<B>, f: F) -> LinComb<K>
where
    A: Ord + Clone + Sync,
    B: Ord + Clone + Sync,
    K: Ord + Clone + Send,
    F: Fn(&A, &B) -> LinComb<K> + Sync,
{
    if a.len() == 1 && b.len() == 1 {
        let ((x, cx), (y, cy)) = (a.iter().next().unwrap(), b.iter().next().unwrap());
        return f(x, y).into_scaled(&(cx * cy));
    }
    let pairs: Vec<(&A, &HPoly, &B, &HPoly)> = a
        .iter()
        .flat_map(|(x, cx)| b.iter().map(move |(y, cy)| (x, cx, y, cy)))
        .collect();
    let parts: Vec<(LinComb<K>, HPoly)> = pairs.par_iter().map(|(x, cx, y, cy)| (f(x, y), *cx * *cy)).collect();
    let mut out = LinComb::zero();
    for (part, c) in &parts {
        out.add_assign_scaled(part, c);
    }
    out
}

/// The star product, extended bilinearly over `k[h]`.
pub fn star(q: &DoubleQuiver, a: &SymLElement, b: &SymLElement) -> SymLElement {
    if let Some(out) = star_half_powers(q, a, b) {
        return out;
    }
    par_bilinear(a, b, |x, y| star_monomials(q, x, y))
}

/// `s(c, I, φ) = Π s_i` over the pairs of `I`, with each pair represented by
/// its `Q`-side element `x_i`: `s_i` compares the component of the start of
/// `x_i`, `c[g(x_i)]`, with that of its target, `c[g(x_i + 1)]`.
pub fn sign_component(components: &[u8], m: &InternalMatching, edges: &AbstractEdges, glued: &GlueResult) -> i32 {
    let mut sign = 1;
    for &(x, _) in &m.pairs {
        let start = components[glued.component(x)];
        let target = components[glued.component(edges.next(x))];
        sign *= match start.cmp(&target) {
            std::cmp::Ordering::Less => 1,
            std::cmp::Ordering::Equal => return 0,
            std::cmp::Ordering::Greater => -1,
        };
    }
    sign
}

/// `Δ_h` on a basis monomial:
/// `Σ_{(I, φ)} (h/2)^{#I/2} Σ_{c ∈ {1,2}^m} s(c, I, φ) R_1^{c_1} & ⋯ & R_m^{c_m}`.
pub fn coproduct_monomial(q: &DoubleQuiver, p: &Monomial) -> TensorElement {
    let mut acc = HalfPowerAccumulator::new();
    accumulate_coproduct(q, p, 1, 0, &mut acc).expect("matching counts fit in machine integers");
    acc.finish()
}

/// Adds `n (h/2)^k · Δ_h(P)` to `acc`; `None` on overflow.
fn accumulate_coproduct(
    q: &DoubleQuiver,
    p: &Monomial,
    n: i128,
    k: u32,
    acc: &mut HalfPowerAccumulator<(Monomial, Monomial)>,
) -> Option<()> {
    let edges = AbstractEdges::of(p);
    let mut components = Vec::new();
    for m in enumerate_internal_matchings(q, &edges) {
        let glued = glue(q, &edges, &m.involution(edges.len()));
        // A pair whose start and target share a necklace contributes s_i = 0
        // for every assignment.
        if m.pairs
            .iter()
            .any(|&(x, _)| glued.component(x) == glued.component(edges.next(x)))
        {
            continue;
        }
        let count = glued.orbit_count();
        for mask in 0u64..(1u64 << count) {
            components.clear();
            components.extend((0..count).map(|i| 1 + ((mask >> i) & 1) as u8));
            let sign = sign_component(&components, &m, &edges, &glued);
            if sign == 0 {
                continue;
            }
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (n, c) in glued.factors.iter().zip(&components) {
                if *c == 1 {
                    left.push(n.clone());
                } else {
                    right.push(n.clone());
                }
            }
            acc.checked_add(
                (Monomial::from_factors(left), Monomial::from_factors(right)),
                k + m.pairs.len() as u32,
                n.checked_mul(sign.into())?,
            )?;
        }
    }
    Some(())
}

pub fn coproduct(q: &DoubleQuiver, a: &SymLElement) -> TensorElement {
    if let Some((m, c)) = a.iter().next().filter(|_| a.len() == 1) {
        return coproduct_monomial(q, m).into_scaled(c);
    }
    if let Some(out) = coproduct_half_powers(q, a) {
        return out;
    }
    let parts: Vec<(TensorElement, &HPoly)> = a
        .iter()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(m, c)| (coproduct_monomial(q, m), *c))
        .collect();
    let mut out = TensorElement::zero();
    for (part, c) in &parts {
        out.add_assign_scaled(part, c);
    }
    out
}

/// The coproduct when every coefficient is an integer combination of powers
/// of `h/2`, with per-term counts merged in term order. `None` otherwise or
/// on overflow.
fn coproduct_half_powers(q: &DoubleQuiver, a: &SymLElement) -> Option<TensorElement> {
    let terms = half_power_terms(a)?;
    let parts: Vec<Option<HalfPowerAccumulator<(Monomial, Monomial)>>> = terms
        .par_iter()
        .map(|(p, c)| {
            let mut acc = HalfPowerAccumulator::new();
            for (k, n) in c {
                accumulate_coproduct(q, p, *n, *k, &mut acc)?;
            }
            Some(acc)
        })
        .collect();
    let mut total = HalfPowerAccumulator::new();
    for part in parts {
        total.merge(part?)?;
    }
    Some(total.finish())
}

/// `S(P_1 & ⋯ & P_m) = (−1)^m P_1 & ⋯ & P_m`, idempotent factors included.
pub fn antipode(a: &SymLElement) -> SymLElement {
    a.iter()
        .map(|(m, c)| {
            let c = if m.factor_count() % 2 == 0 { c.clone() } else { -c };
            (m.clone(), c)
        })
        .collect()
}

/// Coefficient of the empty monomial.
pub fn counit(a: &SymLElement) -> HPoly {
    a.coeff(&Monomial::unit())
}

/// `(A ⊗ B) *_h (C ⊗ D) = (A *_h C) ⊗ (B *_h D)`, extended bilinearly.
pub fn tensor_star(q: &DoubleQuiver, a: &TensorElement, b: &TensorElement) -> TensorElement {
    if let Some(out) = tensor_star_half_powers(q, a, b) {
        return out;
    }
    let mut memo: FxHashMap<(&Monomial, &Monomial), SymLElement> = FxHashMap::default();
    let mut out = TensorElement::zero();
    for ((a1, a2), ca) in a.iter() {
        for ((b1, b2), cb) in b.iter() {
            let left = memo
                .entry((a1, b1))
                .or_insert_with(|| star_monomials(q, a1, b1))
                .clone();
            let right = memo
                .entry((a2, b2))
                .or_insert_with(|| star_monomials(q, a2, b2))
                .clone();
            let c = ca * cb;
            for (l, cl) in left.iter() {
                for (r, cr) in right.iter() {
                    out.add_term((l.clone(), r.clone()), &(&(cl * cr) * &c));
                }
            }
        }
    }
    out
}

/// `tensor_star` when every coefficient is an integer combination of powers
/// of `h/2` (as for the coproducts of basis monomials), summed in checked
/// machine arithmetic. `None` when the inputs have other coefficients or a
/// count overflows.
fn tensor_star_half_powers(q: &DoubleQuiver, a: &TensorElement, b: &TensorElement) -> Option<TensorElement> {
    type Terms = Vec<(Monomial, HalfPowers)>;
    let (ta, tb) = (half_power_terms(a)?, half_power_terms(b)?);
    let mut memo: FxHashMap<(&Monomial, &Monomial), Terms> = FxHashMap::default();
    for ((a1, a2), _) in &ta {
        for ((b1, b2), _) in &tb {
            for key in [(a1, b1), (a2, b2)] {
                if let std::collections::hash_map::Entry::Vacant(e) = memo.entry(key) {
                    let terms = star_monomials(q, key.0, key.1)
                        .into_terms()
                        .map(|(m, c)| Some((m, half_power_form(&c)?)))
                        .collect::<Option<Terms>>()?;
                    e.insert(terms);
                }
            }
        }
    }
    let mut acc = HalfPowerAccumulator::new();
    for ((a1, a2), ca) in &ta {
        for ((b1, b2), cb) in &tb {
            let left = &memo[&(a1, b1)];
            let right = &memo[&(a2, b2)];
            for (ka, na) in ca {
                for (kb, nb) in cb {
                    let n = na.checked_mul(*nb)?;
                    for (l, cl) in left {
                        for (kl, nl) in cl {
                            let n = n.checked_mul(*nl)?;
                            for (r, cr) in right {
                                for (kr, nr) in cr {
                                    acc.checked_add((l.clone(), r.clone()), ka + kb + kl + kr, n.checked_mul(*nr)?)?;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Some(acc.finish())
}

/// `(Δ_h ⊗ id)` applied to a tensor.
pub fn coproduct_left(q: &DoubleQuiver, t: &TensorElement) -> Tensor3Element {
    let mut out = Tensor3Element::zero();
    for ((a, b), c) in t.iter() {
        for ((x, y), k) in coproduct_monomial(q, a).iter() {
            out.add_term((x.clone(), y.clone(), b.clone()), &(k * c));
        }
    }
    out
}

/// `(id ⊗ Δ_h)` applied to a tensor.
pub fn coproduct_right(q: &DoubleQuiver, t: &TensorElement) -> Tensor3Element {
    let mut out = Tensor3Element::zero();
    for ((a, b), c) in t.iter() {
        for ((x, y), k) in coproduct_monomial(q, b).iter() {
            out.add_term((a.clone(), x.clone(), y.clone()), &(k * c));
        }
    }
    out
}

/// A failed identity: both sides and the first basis element where they differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub identity: String,
    pub input: String,
    pub lhs: String,
    pub rhs: String,
    pub differing: String,
}

impl std::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "identity {} fails on {}", self.identity, self.input)?;
        writeln!(f, "  lhs: {}", self.lhs)?;
        writeln!(f, "  rhs: {}", self.rhs)?;
        write!(f, "  first differing basis element: {}", self.differing)
    }
}

/// `Ok(())` when the identity holds exactly.
pub type Verdict = Result<(), Box<Counterexample>>;

pub(crate) fn compare<K: Ord + Clone + Render>(
    q: &DoubleQuiver,
    identity: &str,
    input: impl FnOnce() -> String,
    lhs: &LinComb<K>,
    rhs: &LinComb<K>,
) -> Verdict {
    if lhs == rhs {
        return Ok(());
    }
    let differing = lhs.first_difference(rhs).map(|k| k.render(q)).unwrap_or_default();
    Err(Box::new(Counterexample {
        identity: identity.to_string(),
        input: input(),
        lhs: render_lincomb(q, lhs),
        rhs: render_lincomb(q, rhs),
        differing,
    }))
}

fn show(q: &DoubleQuiver, xs: &[&SymLElement]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("[{}]", render_lincomb(q, x))).collect();
    parts.join(", ")
}

/// `(P *_h R) *_h S = P *_h (R *_h S)`.
pub fn check_associativity(q: &DoubleQuiver, p: &SymLElement, r: &SymLElement, s: &SymLElement) -> Verdict {
    let lhs = star(q, &star(q, p, r), s);
    let rhs = star(q, p, &star(q, r, s));
    compare(q, "(P*R)*S = P*(R*S)", || show(q, &[p, r, s]), &lhs, &rhs)
}

/// `(Δ_h ⊗ id) Δ_h (P) = (id ⊗ Δ_h) Δ_h (P)`.
pub fn check_coassociativity(q: &DoubleQuiver, p: &SymLElement) -> Verdict {
    let d = coproduct(q, p);
    let lhs = coproduct_left(q, &d);
    let rhs = coproduct_right(q, &d);
    compare(q, "(Δ⊗id)Δ = (id⊗Δ)Δ", || show(q, &[p]), &lhs, &rhs)
}

/// `Δ_h(P *_h R) = Δ_h(P) *_h Δ_h(R)`.
pub fn check_bialgebra(q: &DoubleQuiver, p: &SymLElement, r: &SymLElement) -> Verdict {
    let lhs = coproduct(q, &star(q, p, r));
    let rhs = tensor_star(q, &coproduct(q, p), &coproduct(q, r));
    compare(q, "Δ(P*R) = Δ(P)*Δ(R)", || show(q, &[p, r]), &lhs, &rhs)
}

/// `m ∘ (S ⊗ id) ∘ Δ_h = η ∘ ε = m ∘ (id ⊗ S) ∘ Δ_h`, and `S² = id`.
pub fn check_antipode(q: &DoubleQuiver, p: &SymLElement) -> Verdict {
    let d = coproduct(q, p);
    let expected = unit().scale(&counit(p));
    let mut left = SymLElement::zero();
    let mut right = SymLElement::zero();
    for ((a, b), c) in d.iter() {
        let a_el = SymLElement::basis(a.clone());
        let b_el = SymLElement::basis(b.clone());
        left.add_assign_scaled(&star(q, &antipode(&a_el), &b_el), c);
        right.add_assign_scaled(&star(q, &a_el, &antipode(&b_el)), c);
    }
    compare(q, "m(S⊗id)Δ = ηε", || show(q, &[p]), &left, &expected)?;
    compare(q, "m(id⊗S)Δ = ηε", || show(q, &[p]), &right, &expected)?;
    compare(q, "S² = id", || show(q, &[p]), &antipode(&antipode(p)), p)
}

/// `(ε ⊗ id) Δ_h = id = (id ⊗ ε) Δ_h`.
pub fn check_counit(q: &DoubleQuiver, p: &SymLElement) -> Verdict {
    let d = coproduct(q, p);
    let mut left = SymLElement::zero();
    let mut right = SymLElement::zero();
    for ((a, b), c) in d.iter() {
        if a.is_unit() {
            left.add_term(b.clone(), c);
        }
        if b.is_unit() {
            right.add_term(a.clone(), c);
        }
    }
    compare(q, "(ε⊗id)Δ = id", || show(q, &[p]), &left, p)?;
    compare(q, "(id⊗ε)Δ = id", || show(q, &[p]), &right, p)
}

/// The two order-`h` quantization identities on single necklaces:
/// the `h`-linear part of `a *_h b − b *_h a` is `{a, b}` (and its constant
/// part vanishes), and the `h`-linear part of `Δ_h(a) − Δ_h^op(a)` is `δ(a)`.
pub fn check_classical_limits(q: &DoubleQuiver, a: &Necklace, b: &Necklace) -> Verdict {
    let ea = SymLElement::basis(Monomial::single(a.clone()));
    let eb = SymLElement::basis(Monomial::single(b.clone()));
    let input = || show(q, &[&ea, &eb]);
    let commutator = &star(q, &ea, &eb) - &star(q, &eb, &ea);
    compare(
        q,
        "(a*b − b*a)|_{h=0} = 0",
        input,
        &commutator.at_h_zero(),
        &SymLElement::zero(),
    )?;
    compare(
        q,
        "pr((a*b − b*a)/h) = {a,b}",
        input,
        &commutator.h_coefficient(1),
        &bracket(q, a, b),
    )?;
    for (x, ex) in [(a, &ea), (b, &eb)] {
        let d = coproduct(q, ex);
        let skew = &d - &flip(&d);
        let input = || show(q, &[ex]);
        compare(
            q,
            "(Δ − Δ^op)|_{h=0} = 0",
            input,
            &skew.at_h_zero(),
            &TensorElement::zero(),
        )?;
        compare(
            q,
            "pr((Δ − Δ^op)/h) = δ",
            input,
            &skew.h_coefficient(1),
            &cobracket(q, x),
        )?;
    }
    Ok(())
}

fn single(n: &Necklace) -> SymLElement {
    SymLElement::basis(Monomial::single(n.clone()))
}

fn bracket_of(q: &DoubleQuiver, a: &SymLElement, b: &SymLElement) -> SymLElement {
    bracket_l(q, a, b).expect("brackets of necklaces are combinations of necklaces")
}

/// Antisymmetry and the Jacobi identity of the necklace bracket.
pub fn check_jacobi(q: &DoubleQuiver, a: &Necklace, b: &Necklace, c: &Necklace) -> Verdict {
    let (ea, eb, ec) = (single(a), single(b), single(c));
    let input = || show(q, &[&ea, &eb, &ec]);
    let skew = &bracket(q, a, b) + &bracket(q, b, a);
    compare(q, "{a,b} + {b,a} = 0", input, &skew, &SymLElement::zero())?;
    let mut jacobi = bracket_of(q, &ea, &bracket(q, b, c));
    jacobi += &bracket_of(q, &eb, &bracket(q, c, a));
    jacobi += &bracket_of(q, &ec, &bracket(q, a, b));
    compare(
        q,
        "{a,{b,c}} + {b,{c,a}} + {c,{a,b}} = 0",
        input,
        &jacobi,
        &SymLElement::zero(),
    )
}

/// Co-antisymmetry and co-Jacobi: `(1 + τ + τ²)(δ ⊗ id)δ = 0`.
pub fn check_co_jacobi(q: &DoubleQuiver, a: &Necklace) -> Verdict {
    let ea = single(a);
    let input = || show(q, &[&ea]);
    let d = cobracket(q, a);
    compare(q, "δ + τδ = 0", input, &(&d + &flip(&d)), &TensorElement::zero())?;
    let twice = cobracket_twice(q, a).expect("cobrackets of necklaces are tensors of necklaces");
    compare(
        q,
        "(1+τ+τ²)(δ⊗id)δ = 0",
        input,
        &cyclic_sum(&twice),
        &Tensor3Element::zero(),
    )
}

/// The 1-cocycle condition `δ({a,b}) = a·δ(b) − b·δ(a)`.
pub fn check_cocycle(q: &DoubleQuiver, a: &Necklace, b: &Necklace) -> Verdict {
    let (ea, eb) = (single(a), single(b));
    let lhs = cobracket_l(q, &bracket(q, a, b)).expect("brackets of necklaces are combinations of necklaces");
    let mut rhs = adjoint_action(q, &ea, &cobracket(q, b)).expect("single necklace");
    rhs -= &adjoint_action(q, &eb, &cobracket(q, a)).expect("single necklace");
    compare(q, "δ{a,b} = a·δb − b·δa", || show(q, &[&ea, &eb]), &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::samples;
    use crate::symalg::{canonical_necklace, necklace_element, rat, symmetric_product};

    struct Loop1 {
        q: DoubleQuiver,
        e: SymLElement,
        es: SymLElement,
        v: SymLElement,
    }

    fn loop1() -> Loop1 {
        let q = samples::loop1();
        let e = q.edge_by_name("e").unwrap();
        let es = q.edge_by_name("e*").unwrap();
        let v = q.vertex_by_name("v").unwrap();
        Loop1 {
            e: necklace_element(Necklace::Cycle(vec![e])),
            es: necklace_element(Necklace::Cycle(vec![es])),
            v: necklace_element(Necklace::Idempotent(v)),
            q,
        }
    }

    fn half_h() -> HPoly {
        HPoly::monomial(rat(1, 2), 1)
    }

    #[test]
    fn star_examples() {
        let l = loop1();
        let prod = symmetric_product(&l.e, &l.es);
        assert_eq!(star(&l.q, &l.e, &l.es), &prod + &l.v.scale(&half_h()));
        assert_eq!(star(&l.q, &l.es, &l.e), &prod - &l.v.scale(&half_h()));
        assert_eq!(star(&l.q, &unit(), &l.e), l.e);
        let commutator = &star(&l.q, &l.e, &l.es) - &star(&l.q, &l.es, &l.e);
        assert_eq!(commutator, l.v.scale(&HPoly::h()));
    }

    #[test]
    fn star_at_h_zero_is_symmetric_product() {
        let q = samples::two_loop();
        let e = q.edge_by_name("e").unwrap();
        let es = q.edge_by_name("e*").unwrap();
        let f = q.edge_by_name("f").unwrap();
        let a = necklace_element(Necklace::Cycle(vec![e, f, es]));
        let b = necklace_element(canonical_necklace(&q, &[es, e]).unwrap());
        assert_eq!(star(&q, &a, &b).at_h_zero(), symmetric_product(&a, &b));
    }

    #[test]
    fn coproduct_examples() {
        let l = loop1();
        let one = Monomial::unit();
        assert_eq!(
            coproduct(&l.q, &unit()),
            TensorElement::basis((one.clone(), one.clone()))
        );
        let me = Monomial::single(Necklace::Cycle(vec![l.q.edge_by_name("e").unwrap()]));
        let mes = Monomial::single(Necklace::Cycle(vec![l.q.edge_by_name("e*").unwrap()]));
        let expected =
            &TensorElement::basis((me.clone(), one.clone())) + &TensorElement::basis((one.clone(), me.clone()));
        assert_eq!(coproduct(&l.q, &l.e), expected);

        let both = me.product(&mes);
        let expected: TensorElement = [
            ((both.clone(), one.clone()), HPoly::one()),
            ((me.clone(), mes.clone()), HPoly::one()),
            ((mes.clone(), me.clone()), HPoly::one()),
            ((one.clone(), both.clone()), HPoly::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(coproduct(&l.q, &symmetric_product(&l.e, &l.es)), expected);
    }

    #[test]
    fn tensor_star_paths_agree() {
        let q = samples::two_loop();
        let third = HPoly::constant(rat(1, 3));
        let mut rng = crate::random::rng_from_seed(5);
        for _ in 0..30 {
            let p = crate::random::random_monomial(&mut rng, &q, 4, 2);
            let r = crate::random::random_monomial(&mut rng, &q, 4, 2);
            let a = coproduct_monomial(&q, &p);
            let b = coproduct_monomial(&q, &r);
            assert!(half_power_terms(&a).is_some() && half_power_terms(&b).is_some());
            let general = tensor_star(&q, &a.scale(&third), &b.scale(&third)).scale(&HPoly::from_int(9));
            assert_eq!(tensor_star(&q, &a, &b), general);
        }
    }

    #[test]
    fn star_paths_agree() {
        let q = samples::a2_with_loop();
        let mut rng = crate::random::rng_from_seed(6);
        let mut dyadic = |k: u32| {
            (0..3)
                .map(|i| {
                    let m = crate::random::random_monomial(&mut rng, &q, 4, 2);
                    (m, HPoly::monomial(rat(2 * i as i64 - 1, 4), (k + i) % 3))
                })
                .collect::<SymLElement>()
        };
        let third = HPoly::constant(rat(1, 3));
        for k in 0..30 {
            let (a, b) = (dyadic(k), dyadic(k + 1));
            let general = star(&q, &a.scale(&third), &b.scale(&third)).scale(&HPoly::from_int(9));
            assert_eq!(star(&q, &a, &b), general);
        }
    }

    #[test]
    fn lie_bialgebra_small() {
        let q = samples::two_loop();
        let ns = crate::basis::necklaces_with_idempotents(&q, 2);
        for a in &ns {
            assert_eq!(check_co_jacobi(&q, a), Ok(()));
            for b in &ns {
                assert_eq!(check_cocycle(&q, a, b), Ok(()));
                for c in &ns {
                    assert_eq!(check_jacobi(&q, a, b, c), Ok(()));
                }
            }
        }
    }

    #[test]
    fn coproduct_is_not_cocommutative() {
        let q = samples::two_loop();
        let witness = crate::basis::necklaces_up_to(&q, 4).into_iter().find(|n| {
            let d = coproduct(&q, &necklace_element(n.clone()));
            d != flip(&d)
        });
        assert!(witness.is_some());
    }

    #[test]
    fn sign_component_cases() {
        let q = samples::loop1();
        let e = q.edge_by_name("e").unwrap();
        let es = q.edge_by_name("e*").unwrap();
        let p = Monomial::single(Necklace::Cycle(vec![e, es]));
        let edges = AbstractEdges::of(&p);
        let empty = InternalMatching { pairs: vec![] };
        let glued = glue(&q, &edges, &empty.involution(2));
        assert_eq!(sign_component(&[1], &empty, &edges, &glued), 1);

        let m = InternalMatching { pairs: vec![(0, 1)] };
        let glued = glue(&q, &edges, &m.involution(2));
        // Start of x = edge 0 is orbit 0, target (edge 1) is orbit 1.
        assert_eq!(sign_component(&[1, 2], &m, &edges, &glued), 1);
        assert_eq!(sign_component(&[2, 1], &m, &edges, &glued), -1);
        assert_eq!(sign_component(&[2, 2], &m, &edges, &glued), 0);

        // (e)&(e*) glued along its pair: one necklace, start = target.
        let p = Monomial::from_factors(vec![Necklace::Cycle(vec![e]), Necklace::Cycle(vec![es])]);
        let edges = AbstractEdges::of(&p);
        let glued = glue(&q, &edges, &m.involution(2));
        assert_eq!(glued.orbit_count(), 1);
        assert_eq!(sign_component(&[1], &m, &edges, &glued), 0);
    }

    #[test]
    fn antipode_and_counit_examples() {
        let l = loop1();
        assert_eq!(antipode(&unit()), unit());
        assert_eq!(antipode(&l.e), -&l.e);
        let both = symmetric_product(&l.e, &l.es);
        assert_eq!(antipode(&both), both);
        assert_eq!(counit(&unit()), HPoly::one());
        assert!(counit(&l.e).is_zero());
        let ee = necklace_element(Necklace::Cycle(vec![
            l.q.edge_by_name("e").unwrap(),
            l.q.edge_by_name("e*").unwrap(),
        ]));
        let x = &unit().scale(&HPoly::from_int(3)) + &ee.scale(&HPoly::h());
        assert_eq!(counit(&x), HPoly::from_int(3));
    }

    #[test]
    fn checker_examples() {
        let l = loop1();
        check_associativity(&l.q, &l.e, &l.es, &l.e).unwrap();
        let ee = necklace_element(Necklace::Cycle(vec![
            l.q.edge_by_name("e").unwrap(),
            l.q.edge_by_name("e*").unwrap(),
        ]));
        check_coassociativity(&l.q, &ee).unwrap();
        check_antipode(&l.q, &l.v).unwrap();
        check_counit(&l.q, &ee).unwrap();
        check_bialgebra(&l.q, &l.e, &l.es).unwrap();
        let e = Necklace::Cycle(vec![l.q.edge_by_name("e").unwrap()]);
        let es = Necklace::Cycle(vec![l.q.edge_by_name("e*").unwrap()]);
        check_classical_limits(&l.q, &e, &es).unwrap();
        check_classical_limits(&l.q, &e, &e).unwrap();
        let eestar = Necklace::Cycle(vec![l.q.edge_by_name("e").unwrap(), l.q.edge_by_name("e*").unwrap()]);
        check_classical_limits(&l.q, &eestar, &eestar).unwrap();
    }

    #[test]
    fn failing_check_reports_counterexample() {
        let l = loop1();
        let err = compare(&l.q, "demo", || "x".into(), &l.e, &l.es).unwrap_err();
        assert_eq!(err.lhs, "(e)");
        assert_eq!(err.rhs, "(e*)");
        assert_eq!(err.differing, "(e)");
    }
}
