//! Textual rendering. Rationals print as `p/q`, powers of `h` as `h^k`,
//! necklaces in their canonical rotation, idempotents as `@vertex`.

use crate::quiver::DoubleQuiver;
use crate::symalg::hpoly::magnitude_parts;
use crate::symalg::{LinComb, Monomial, Necklace};

/// Rendering of a basis element relative to a quiver.
pub trait Render {
    fn render(&self, q: &DoubleQuiver) -> String;
    /// True for the basis element printed as nothing (the unit).
    fn is_unit_basis(&self) -> bool {
        false
    }
}

impl Render for Necklace {
    fn render(&self, q: &DoubleQuiver) -> String {
        match self {
            Necklace::Idempotent(v) => format!("@{}", q.vertex_name(*v)),
            Necklace::Cycle(w) => {
                let names: Vec<&str> = w.iter().map(|x| q.edge_name(*x)).collect();
                format!("({})", names.join(" "))
            }
        }
    }
}

impl Render for Monomial {
    fn render(&self, q: &DoubleQuiver) -> String {
        if self.is_unit() {
            return "1".into();
        }
        let parts: Vec<String> = self.factors().iter().map(|n| n.render(q)).collect();
        parts.join("&")
    }

    fn is_unit_basis(&self) -> bool {
        self.is_unit()
    }
}

impl Render for (Monomial, Monomial) {
    fn render(&self, q: &DoubleQuiver) -> String {
        format!("{} ⊗ {}", self.0.render(q), self.1.render(q))
    }
}

impl Render for (Monomial, Monomial, Monomial) {
    fn render(&self, q: &DoubleQuiver) -> String {
        format!("{} ⊗ {} ⊗ {}", self.0.render(q), self.1.render(q), self.2.render(q))
    }
}

/// Renders `Σ c h^k K`, one printed term per `(h-power, basis)` pair, sorted
/// by power and then by basis order.
pub fn render_lincomb<K: Ord + Clone + Render>(q: &DoubleQuiver, a: &LinComb<K>) -> String {
    render_terms(a, |k| (k.is_unit_basis(), k.render(q)))
}

/// Shared sum rendering; `body` returns whether the key is the unit and its text.
pub(crate) fn render_terms<K: Ord + Clone>(a: &LinComb<K>, body: impl Fn(&K) -> (bool, String)) -> String {
    let mut terms: Vec<(u32, &K, &crate::symalg::Rational)> = a
        .iter()
        .flat_map(|(k, c)| c.terms().map(move |(p, r)| (p, k, r)))
        .collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(y.1)));
    let mut out = String::new();
    for (i, (power, key, c)) in terms.into_iter().enumerate() {
        let (unit, text) = body(key);
        let mut parts = magnitude_parts(c, power, !unit);
        if !unit {
            parts.push(text);
        }
        let negative = c < &num::Zero::zero();
        out.push_str(match (i, negative) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        });
        out.push_str(&parts.join(" "));
    }
    out
}
