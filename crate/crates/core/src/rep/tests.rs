use super::*;
use crate::heights::HeightedCollection;
use crate::quiver::{samples, DoubleQuiver};
use crate::symalg::{canonical_necklace, necklace_element, rat};

fn space(q: &DoubleQuiver, dims: Vec<u32>) -> RepSpace<'_> {
    RepSpace::new(q, DimVector::new(q, dims).unwrap()).unwrap()
}

fn neck(q: &DoubleQuiver, names: &[&str]) -> Necklace {
    let w: Vec<_> = names.iter().map(|n| q.edge_by_name(n).unwrap()).collect();
    canonical_necklace(q, &w).unwrap()
}

fn el(q: &DoubleQuiver, names: &[&str]) -> SymLElement {
    necklace_element(neck(q, names))
}

fn var(s: &RepSpace, e: &str, i: u32, j: u32) -> usize {
    s.var_index(Var {
        edge: s.quiver().edge_by_name(e).unwrap(),
        row: i - 1,
        col: j - 1,
    })
}

fn half_h() -> HPoly {
    HPoly::monomial(rat(1, 2), 1)
}

#[test]
fn trace_examples() {
    let q = samples::loop1();
    let s1 = space(&q, vec![1]);
    let x = s1.variable(var(&s1, "e", 1, 1));
    let y = s1.variable(var(&s1, "e*", 1, 1));
    assert_eq!(s1.trace(&el(&q, &["e", "e*"])), s1.mul(&x, &y));

    let s2 = space(&q, vec![2]);
    let expected = &s2.variable(var(&s2, "e", 1, 1)) + &s2.variable(var(&s2, "e", 2, 2));
    assert_eq!(s2.trace(&el(&q, &["e"])), expected);
    let v = q.vertex_by_name("v").unwrap();
    assert_eq!(
        s2.trace(&necklace_element(Necklace::Idempotent(v))),
        s2.constant(HPoly::from_int(2))
    );
    assert_eq!(s2.trace(&crate::symalg::unit()), s2.constant(HPoly::one()));
}

#[test]
fn trace_index_bounds_on_a2() {
    let q = samples::a2();
    let s = space(&q, vec![1, 3]);
    // a: 1 -> 2 is a 3x1 matrix, a*: 2 -> 1 is 1x3; tr(a a*) has three terms.
    assert_eq!(s.var_count(), 6);
    assert_eq!(s.trace(&el(&q, &["a", "a*"])).len(), 3);
}

#[test]
fn moyal_examples() {
    let q = samples::loop1();
    let s = space(&q, vec![1]);
    let x = s.variable(var(&s, "e", 1, 1));
    let y = s.variable(var(&s, "e*", 1, 1));
    let xy = s.mul(&x, &y);
    assert_eq!(s.moyal(&x, &y), &xy + &s.constant(half_h()));
    assert_eq!(s.moyal(&y, &x), &xy - &s.constant(half_h()));
    let one = s.constant(HPoly::one());
    assert_eq!(s.moyal(&xy, &one), xy);
    assert_eq!(s.moyal(&one, &xy), xy);
}

#[test]
fn moyal_second_order() {
    // x^2 ⋆ y^2 = x^2 y^2 + 2h xy + h^2/2, from the two-term expansion.
    let q = samples::loop1();
    let s = space(&q, vec![1]);
    let x = s.variable(var(&s, "e", 1, 1));
    let y = s.variable(var(&s, "e*", 1, 1));
    let x2 = s.mul(&x, &x);
    let y2 = s.mul(&y, &y);
    let expected = &(&s.mul(&x2, &y2) + &s.mul(&x, &y).scale(&HPoly::monomial(rat(2, 1), 1)))
        + &s.constant(HPoly::monomial(rat(1, 2), 2));
    assert_eq!(s.moyal(&x2, &y2), expected);
}

#[test]
fn weyl_relations_hold() {
    for (q, dims) in [
        (samples::loop1(), vec![2]),
        (samples::two_loop(), vec![2]),
        (samples::a2_with_loop(), vec![1, 2]),
    ] {
        let s = space(&q, dims);
        assert_eq!(check_weyl_relations(&s), Ok(()));
    }
}

#[test]
fn diffop_commutators() {
    let q = samples::loop1();
    let s = space(&q, vec![2]);
    let n = s.base_var_count();
    for a in 0..n {
        for b in 0..n {
            let mut x = OpMonomial {
                coords: vec![0; n],
                derivs: vec![0; n],
            };
            let mut d = x.clone();
            x.coords[a] = 1;
            d.derivs[b] = 1;
            let x = DiffOp::basis(x);
            let d = DiffOp::basis(d);
            let commutator = &s.compose(&d, &x) - &s.compose(&x, &d);
            let expected = if a == b { s.identity_op() } else { DiffOp::zero() };
            assert_eq!(commutator, expected);
        }
    }
}

#[test]
fn weyl_symmetrize_examples() {
    let q = samples::loop1();
    let s = space(&q, vec![1]);
    let xv = var(&s, "e", 1, 1);
    let x = s.variable(xv);
    let y = s.variable(var(&s, "e*", 1, 1));
    let mut xm = s.identity_op().keys().next().unwrap().clone();
    xm.coords[xv] = 1;
    assert_eq!(weyl_symmetrize(&s, &x), DiffOp::basis(xm.clone()));
    assert_eq!(weyl_symmetrize(&s, &s.constant(HPoly::one())), s.identity_op());

    let mut x_dx = xm.clone();
    x_dx.derivs[xv] = 1;
    let expected = &DiffOp::term(x_dx, -HPoly::h()) - &s.identity_op().scale(&half_h());
    assert_eq!(weyl_symmetrize(&s, &s.mul(&x, &y)), expected);
    assert_eq!(s.render_op(&expected), "-1/2 h - h M[e][1][1] d/dM[e][1][1]");
}

#[test]
fn rho_examples() {
    let q = samples::loop1();
    let s = space(&q, vec![1]);
    let e = q.edge_by_name("e").unwrap();
    let es = q.edge_by_name("e*").unwrap();
    let xv = var(&s, "e", 1, 1);
    let mut x_dx = s.identity_op().keys().next().unwrap().clone();
    x_dx.coords[xv] = 1;
    x_dx.derivs[xv] = 1;
    let a = HeightedCollection::new(&q, vec![], vec![vec![(e, 1), (es, 2)]]).unwrap();
    assert_eq!(rho(&s, &a), DiffOp::term(x_dx.clone(), -HPoly::h()));
    let b = HeightedCollection::new(&q, vec![], vec![vec![(e, 2), (es, 1)]]).unwrap();
    assert_eq!(
        rho(&s, &b),
        &DiffOp::term(x_dx, -HPoly::h()) - &s.identity_op().scale(&HPoly::h())
    );

    let s3 = space(&q, vec![3]);
    let v = q.vertex_by_name("v").unwrap();
    let c = HeightedCollection::new(&q, vec![v], vec![]).unwrap();
    assert_eq!(rho(&s3, &c), s3.identity_op().scale(&HPoly::from_int(3)));
}

#[test]
fn diagram_examples() {
    let q = samples::loop1();
    let e = el(&q, &["e"]);
    let es = el(&q, &["e*"]);
    let s1 = space(&q, vec![1]);
    assert_eq!(check_diagram(&s1, &e, &es), Ok(()));
    let s2 = space(&q, vec![2]);
    assert_eq!(check_diagram(&s2, &e, &es), Ok(()));
    assert_eq!(check_diagram(&s2, &e, &e), Ok(()));

    // P *_h R = (e)&(e*) + h/2 v, and the trace is multiplicative over &,
    // so the quadratic part is tr(M_e)·tr(M_e*) = Σ_ij (M_e)_ii (M_e*)_jj.
    let mut expected = s2.constant(HPoly::h());
    for i in 1..=2 {
        for j in 1..=2 {
            expected += &s2.mul(&s2.variable(var(&s2, "e", i, i)), &s2.variable(var(&s2, "e*", j, j)));
        }
    }
    assert_eq!(s2.trace(&crate::hopf::star(&q, &e, &es)), expected);
}

#[test]
fn transport_examples() {
    let q = samples::loop1();
    let s1 = space(&q, vec![1]);
    assert_eq!(check_transport(&s1, &el(&q, &["e", "e*"])), Ok(()));
    let v = q.vertex_by_name("v").unwrap();
    assert_eq!(check_transport(&s1, &necklace_element(Necklace::Idempotent(v))), Ok(()));
    let s2 = space(&q, vec![2]);
    assert_eq!(check_transport(&s2, &el(&q, &["e"])), Ok(()));
    let both = rho_element(&s1, &phi_w(&el(&q, &["e", "e*"])));
    assert_eq!(s1.render_op(&both), "-1/2 h - h M[e][1][1] d/dM[e][1][1]");
}

#[test]
fn poisson_examples() {
    let q = samples::loop1();
    let s2 = space(&q, vec![2]);
    let e = neck(&q, &["e"]);
    let es = neck(&q, &["e*"]);
    assert_eq!(check_poisson_hom(&s2, &e, &es), Ok(()));
    assert_eq!(
        s2.poisson(&s2.trace_necklace(&e), &s2.trace_necklace(&es)),
        s2.constant(HPoly::from_int(2))
    );
    assert_eq!(check_poisson_hom(&s2, &e, &e), Ok(()));
    let f = neck(&q, &["e", "e", "e*"]);
    assert_eq!(check_poisson_hom(&s2, &f, &f), Ok(()));
    assert_eq!(check_poisson_hom(&s2, &f, &neck(&q, &["e", "e*", "e*"])), Ok(()));
}

#[test]
fn moyal_first_order_is_half_poisson() {
    let q = samples::two_loop();
    let s = space(&q, vec![2]);
    let polys: Vec<RepPoly> = crate::basis::necklaces_up_to(&q, 3)
        .iter()
        .map(|n| s.trace_necklace(n))
        .collect();
    for f in &polys {
        for g in &polys {
            let skew = &s.moyal(f, g) - &s.moyal(g, f);
            assert_eq!(skew.h_coefficient(1), s.poisson(f, g));
        }
    }
}

#[test]
fn moyal_integer_and_general_paths_agree() {
    let q = samples::two_loop();
    let s = space(&q, vec![2]);
    let polys: Vec<RepPoly> = crate::basis::necklaces_up_to(&q, 3)
        .iter()
        .map(|n| s.trace_necklace(n))
        .collect();
    let third = HPoly::constant(rat(1, 3));
    for f in &polys {
        for g in &polys {
            let integral = s.moyal(f, g);
            let general = s.moyal(&f.scale(&third), &g.scale(&third)).scale(&HPoly::from_int(9));
            assert_eq!(integral, general);
        }
    }
}

#[test]
fn injectivity_examples() {
    let q = samples::loop1();
    assert!(!check_injectivity(&space(&q, vec![1]), 1, 1));
    assert!(check_injectivity(&space(&q, vec![2]), 1, 0));
    assert!(check_injectivity(&space(&q, vec![1]), 0, 0));
    assert!(!check_injectivity(&space(&q, vec![2]), 1, 1));
    // Degree 2 at l = (1): tr(e e) = tr(e)^2, a genuine dependency.
    assert!(!check_injectivity(&space(&q, vec![1]), 2, 0));
}

#[test]
fn dimension_vector_must_cover_vertices() {
    let q = samples::a2();
    assert!(DimVector::new(&q, vec![1]).is_err());
    assert_eq!(DimVector::all_in_range(&q, 1, 2).len(), 4);
}
