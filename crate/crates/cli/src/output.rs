//! Text and JSON rendering of results.

use std::collections::BTreeMap;

use necklace::format::{render_lincomb, Render};
use necklace::hopf::Counterexample;
use necklace::rep::{DiffOp, RepPoly, RepSpace};
use necklace::symalg::LinComb;
use necklace::{DoubleQuiver, HPoly};
use serde_json::{json, Value};

/// `{"k": "p/q"}` keyed by the power of `h`.
pub fn hpoly_json(c: &HPoly) -> Value {
    let map: BTreeMap<String, String> = c.terms().map(|(k, r)| (k.to_string(), r.to_string())).collect();
    json!(map)
}

/// Terms in basis order, each with its rendered basis element.
pub fn lincomb_json<K: Ord + Clone + Render>(q: &DoubleQuiver, a: &LinComb<K>) -> Value {
    let terms: Vec<Value> = a
        .iter()
        .map(|(k, c)| json!({ "basis": k.render(q), "coeff": hpoly_json(c) }))
        .collect();
    json!({ "text": render_lincomb(q, a), "terms": terms })
}

fn exponents(list: Vec<(String, u16)>) -> Value {
    let map: BTreeMap<String, u16> = list.into_iter().collect();
    json!(map)
}

pub fn rep_poly_json(space: &RepSpace, f: &RepPoly) -> Value {
    let terms: Vec<Value> = f
        .iter()
        .map(|(m, c)| json!({ "vars": exponents(space.describe_monomial(m)), "coeff": hpoly_json(c) }))
        .collect();
    json!({ "text": space.render_poly(f), "terms": terms })
}

pub fn diffop_json(space: &RepSpace, a: &DiffOp) -> Value {
    let terms: Vec<Value> = a
        .iter()
        .map(|(m, c)| {
            let (coords, derivs) = space.describe_op_monomial(m);
            json!({ "coords": exponents(coords), "derivs": exponents(derivs), "coeff": hpoly_json(c) })
        })
        .collect();
    json!({ "text": space.render_op(a), "terms": terms })
}

pub fn counterexample_json(c: &Counterexample) -> Value {
    json!({
        "identity": c.identity,
        "input": c.input,
        "lhs": c.lhs,
        "rhs": c.rhs,
        "differing": c.differing,
    })
}
