//! The necklace Lie bracket and cobracket on `L`.

use crate::error::{Error, Result};
use crate::quiver::DoubleQuiver;

use super::necklace::{Monomial, Necklace};
use super::path::{close_path, cyclic_partial, d_edge_sum, PathSum, PathTensor};
use super::{LinComb, SymLElement, TensorElement};

fn project(q: &DoubleQuiver, paths: &PathSum) -> SymLElement {
    let mut out = SymLElement::zero();
    for (p, c) in paths.iter() {
        if let Some(n) = close_path(q, p) {
            out.add_term(Monomial::single(n), c);
        }
    }
    out
}

fn project_pair(q: &DoubleQuiver, t: &PathTensor) -> TensorElement {
    let mut out = TensorElement::zero();
    for ((a, b), c) in t.iter() {
        if let (Some(x), Some(y)) = (close_path(q, a), close_path(q, b)) {
            out.add_term((Monomial::single(x), Monomial::single(y)), c);
        }
    }
    out
}

fn path_product(q: &DoubleQuiver, a: &PathSum, b: &PathSum) -> PathSum {
    let mut out = PathSum::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            if let Some(p) = x.compose(y, q) {
                out.add_term(p, &(cx * cy));
            }
        }
    }
    out
}

/// `{f, g} = pr_L Σ_{e∈Q} (∂f/∂e ∂g/∂e* − ∂f/∂e* ∂g/∂e)`, as single-necklace monomials.
pub fn bracket(q: &DoubleQuiver, f: &Necklace, g: &Necklace) -> SymLElement {
    let mut sum = PathSum::zero();
    for e in q.base_edges() {
        let es = q.reverse(e);
        sum += &path_product(q, &cyclic_partial(q, f, e), &cyclic_partial(q, g, es));
        sum -= &path_product(q, &cyclic_partial(q, f, es), &cyclic_partial(q, g, e));
    }
    project(q, &sum)
}

/// `δ(f) = (pr_L ⊗ pr_L) Σ_{e∈Q} (D_e(∂f/∂e*) − D_{e*}(∂f/∂e))`.
pub fn cobracket(q: &DoubleQuiver, f: &Necklace) -> TensorElement {
    let mut sum = PathTensor::zero();
    for e in q.base_edges() {
        let es = q.reverse(e);
        sum += &d_edge_sum(q, e, &cyclic_partial(q, f, es));
        sum -= &d_edge_sum(q, es, &cyclic_partial(q, f, e));
    }
    project_pair(q, &sum)
}

fn necklace_of(m: &Monomial) -> Result<&Necklace> {
    m.as_necklace().ok_or_else(|| Error::NotInLieAlgebra(format!("{m:?}")))
}

/// Bilinear extension of [`bracket`] to combinations of single necklaces.
pub fn bracket_l(q: &DoubleQuiver, a: &SymLElement, b: &SymLElement) -> Result<SymLElement> {
    let mut out = SymLElement::zero();
    for (x, cx) in a.iter() {
        let f = necklace_of(x)?;
        for (y, cy) in b.iter() {
            let g = necklace_of(y)?;
            out.add_assign_scaled(&bracket(q, f, g), &(cx * cy));
        }
    }
    Ok(out)
}

/// Linear extension of [`cobracket`] to combinations of single necklaces.
pub fn cobracket_l(q: &DoubleQuiver, a: &SymLElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (x, c) in a.iter() {
        out.add_assign_scaled(&cobracket(q, necklace_of(x)?), c);
    }
    Ok(out)
}

/// Bracket of `Sym L` extended from necklaces by the Leibniz rule in each
/// argument.
pub fn bracket_leibniz(q: &DoubleQuiver, a: &SymLElement, b: &SymLElement) -> SymLElement {
    a.bilinear(b, |x, y| {
        let mut out = SymLElement::zero();
        for (i, f) in x.factors().iter().enumerate() {
            for (j, g) in y.factors().iter().enumerate() {
                let rest = Monomial::from_factors(
                    x.factors()
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != i)
                        .chain(y.factors().iter().enumerate().filter(|(k, _)| *k != j))
                        .map(|(_, n)| n.clone())
                        .collect(),
                );
                for (m, c) in bracket(q, f, g).iter() {
                    out.add_term(m.product(&rest), c);
                }
            }
        }
        out
    })
}

/// The adjoint action `f · (a ⊗ b) = {f,a} ⊗ b + a ⊗ {f,b}` on `L ⊗ L`.
pub fn adjoint_action(q: &DoubleQuiver, f: &SymLElement, t: &TensorElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for ((a, b), c) in t.iter() {
        let a_el = SymLElement::basis(a.clone());
        let b_el = SymLElement::basis(b.clone());
        for (m, k) in bracket_l(q, f, &a_el)?.iter() {
            out.add_term((m.clone(), b.clone()), &(k * c));
        }
        for (m, k) in bracket_l(q, f, &b_el)?.iter() {
            out.add_term((a.clone(), m.clone()), &(k * c));
        }
    }
    Ok(out)
}

/// `(δ ⊗ id) ∘ δ (f)` in `L ⊗ L ⊗ L`.
pub fn cobracket_twice(q: &DoubleQuiver, f: &Necklace) -> Result<LinComb<(Monomial, Monomial, Monomial)>> {
    let mut out = LinComb::zero();
    for ((a, b), c) in cobracket(q, f).iter() {
        for ((x, y), k) in cobracket(q, necklace_of(a)?).iter() {
            out.add_term((x.clone(), y.clone(), b.clone()), &(k * c));
        }
    }
    Ok(out)
}

/// Sum over the three cyclic permutations of tensor factors.
pub fn cyclic_sum(t: &LinComb<(Monomial, Monomial, Monomial)>) -> LinComb<(Monomial, Monomial, Monomial)> {
    let mut out = t.clone();
    for ((a, b, c), k) in t.iter() {
        out.add_term((b.clone(), c.clone(), a.clone()), k);
        out.add_term((c.clone(), a.clone(), b.clone()), k);
    }
    out
}
