//! Representation spaces and their coordinate polynomials.

use rustc_hash::FxHashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::format::render_terms;
use crate::quiver::{DoubleQuiver, Edge, Vertex};
use crate::symalg::{HPoly, LinComb, Rational};

/// Dimensions `l_i` of the vector spaces at the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimVector(Vec<u32>);

impl DimVector {
    pub fn new(q: &DoubleQuiver, dims: Vec<u32>) -> Result<Self> {
        if dims.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: q.vertex_count(),
                got: dims.len(),
            });
        }
        Ok(DimVector(dims))
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.0[v.index()]
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Every dimension vector with entries in `lo..=hi`, in lexicographic order.
    pub fn all_in_range(q: &DoubleQuiver, lo: u32, hi: u32) -> Vec<DimVector> {
        let mut out = vec![Vec::new()];
        for _ in 0..q.vertex_count() {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (lo..=hi).map(move |d| {
                        let mut p = prefix.clone();
                        p.push(d);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(DimVector).collect()
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The matrix entry `(M_edge)_{row,col}`, zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub edge: Edge,
    pub row: u32,
    pub col: u32,
}

/// Exponent vector over all coordinates of a [`RepSpace`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepMonomial(pub Vec<u16>);

impl RepMonomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|e| u32::from(*e)).sum()
    }
}

pub type RepPoly = LinComb<RepMonomial>;

/// The coordinates `(M_x)_{ij}`, `x ∈ Q̄`, `i < l_{h(x)}`, `j < l_{t(x)}`.
/// Coordinates of original edges come first, so their indices double as
/// indices into the differential-operator variables.
#[derive(Debug, Clone)]
pub struct RepSpace<'q> {
    q: &'q DoubleQuiver,
    dims: DimVector,
    vars: Vec<Var>,
    index: FxHashMap<Var, usize>,
    partner: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    base_count: usize,
}

impl<'q> RepSpace<'q> {
    pub fn new(q: &'q DoubleQuiver, dims: DimVector) -> Result<Self> {
        if dims.0.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: q.vertex_count(),
                got: dims.0.len(),
            });
        }
        let mut vars = Vec::new();
        for x in q.edges() {
            for row in 0..dims.get(q.head(x)) {
                for col in 0..dims.get(q.tail(x)) {
                    vars.push(Var { edge: x, row, col });
                }
            }
        }
        let index: FxHashMap<Var, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let partner: Vec<usize> = vars
            .iter()
            .map(|v| {
                index[&Var {
                    edge: q.reverse(v.edge),
                    row: v.col,
                    col: v.row,
                }]
            })
            .collect();
        let base_count = vars.iter().filter(|v| q.is_base(v.edge)).count();
        let pairs = (0..base_count).map(|x| (x, partner[x])).collect();
        Ok(RepSpace {
            q,
            dims,
            vars,
            index,
            partner,
            pairs,
            base_count,
        })
    }

    pub fn quiver(&self) -> &'q DoubleQuiver {
        self.q
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn var_count(&self) -> usize {
        self.vars.len()
    }

    /// Number of coordinates of original edges.
    pub fn base_var_count(&self) -> usize {
        self.base_count
    }

    pub fn var(&self, i: usize) -> Var {
        self.vars[i]
    }

    pub fn var_index(&self, v: Var) -> usize {
        self.index[&v]
    }

    /// The coordinate paired with `i` by the bivector.
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    /// Canonical pairs `(x, y)` with `x` a coordinate of an original edge.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn one_monomial(&self) -> RepMonomial {
        RepMonomial(vec![0; self.vars.len()])
    }

    /// The coordinate function `i` as a polynomial.
    pub fn variable(&self, i: usize) -> RepPoly {
        let mut m = self.one_monomial();
        m.0[i] = 1;
        RepPoly::basis(m)
    }

    pub fn constant(&self, c: HPoly) -> RepPoly {
        RepPoly::term(self.one_monomial(), c)
    }

    pub fn mul(&self, f: &RepPoly, g: &RepPoly) -> RepPoly {
        f.bilinear(g, |a, b| {
            let m = RepMonomial(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
            RepPoly::basis(m)
        })
    }

    pub fn partial(&self, f: &RepPoly, i: usize) -> RepPoly {
        let mut out = RepPoly::zero();
        for (m, c) in f.iter() {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[i] -= 1;
            out.add_term(d, &c.scale(&Rational::from_integer(e.into())));
        }
        out
    }

    /// `M[e][i][j]` with one-based indices.
    pub fn var_name(&self, i: usize) -> String {
        let v = self.vars[i];
        format!("M[{}][{}][{}]", self.q.edge_name(v.edge), v.row + 1, v.col + 1)
    }

    pub fn render_monomial(&self, m: &RepMonomial) -> String {
        let parts: Vec<String> =
            m.0.iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| power(self.var_name(i), *e))
                .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn render_poly(&self, f: &RepPoly) -> String {
        render_terms(f, |m| (m.degree() == 0, self.render_monomial(m)))
    }

    /// `(variable, exponent)` lists per term, for structured output.
    pub fn describe_monomial(&self, m: &RepMonomial) -> Vec<(String, u16)> {
        m.0.iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| (self.var_name(i), *e))
            .collect()
    }
}

pub(crate) fn power(name: String, e: u16) -> String {
    if e == 1 {
        name
    } else {
        format!("{name}^{e}")
    }
}
