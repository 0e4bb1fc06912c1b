//! Paths in the double quiver, cyclic derivatives, and the derivations `D_x`.

use crate::quiver::{DoubleQuiver, Edge, Vertex};

use super::linear::LinComb;
use super::necklace::Necklace;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Path {
    Trivial(Vertex),
    /// Nonempty composable sequence `a_1 ⋯ a_p` with `h(a_r) = t(a_{r+1})`.
    Edges(Vec<Edge>),
}

pub type PathSum = LinComb<Path>;
pub type PathTensor = LinComb<(Path, Path)>;

impl Path {
    pub fn tail(&self, q: &DoubleQuiver) -> Vertex {
        match self {
            Path::Trivial(v) => *v,
            Path::Edges(w) => q.tail(w[0]),
        }
    }

    pub fn head(&self, q: &DoubleQuiver) -> Vertex {
        match self {
            Path::Trivial(v) => *v,
            Path::Edges(w) => q.head(*w.last().unwrap()),
        }
    }

    pub fn edges(&self) -> &[Edge] {
        match self {
            Path::Trivial(_) => &[],
            Path::Edges(w) => w,
        }
    }

    /// `edges` as a path, or the trivial path at `at` when empty.
    fn from_slice(edges: &[Edge], at: Vertex) -> Path {
        if edges.is_empty() {
            Path::Trivial(at)
        } else {
            Path::Edges(edges.to_vec())
        }
    }

    /// Product in the path algebra; `None` when the endpoints do not match.
    pub fn compose(&self, other: &Path, q: &DoubleQuiver) -> Option<Path> {
        if self.head(q) != other.tail(q) {
            return None;
        }
        Some(match (self, other) {
            (Path::Trivial(_), p) | (p, Path::Trivial(_)) => p.clone(),
            (Path::Edges(a), Path::Edges(b)) => Path::Edges(a.iter().chain(b).copied().collect()),
        })
    }
}

/// `pr_L`: closes a path into a necklace. Paths whose endpoints differ
/// project to zero (`None`); trivial paths become vertex idempotents.
pub fn close_path(q: &DoubleQuiver, p: &Path) -> Option<Necklace> {
    match p {
        Path::Trivial(v) => Some(Necklace::Idempotent(*v)),
        Path::Edges(w) => {
            if p.head(q) == p.tail(q) {
                Some(Necklace::from_word_unchecked(w.clone()))
            } else {
                None
            }
        }
    }
}

/// The cyclic derivative `∂f/∂x`: for each occurrence of `x`, the path read
/// cyclically from just after the occurrence to just before it.
pub fn cyclic_partial(q: &DoubleQuiver, f: &Necklace, x: Edge) -> PathSum {
    let mut out = PathSum::zero();
    let word = f.word();
    let n = word.len();
    for (r, _) in word.iter().enumerate().filter(|(_, a)| **a == x) {
        let rest: Vec<Edge> = (1..n).map(|k| word[(r + k) % n]).collect();
        out += &PathSum::basis(Path::from_slice(&rest, q.head(x)));
    }
    out
}

/// `D_x(a_1⋯a_p) = Σ_{a_r = x} a_1⋯a_{r-1} 1_{t(x)} ⊗ 1_{h(x)} a_{r+1}⋯a_p`.
pub fn d_edge(q: &DoubleQuiver, x: Edge, p: &Path) -> PathTensor {
    let mut out = PathTensor::zero();
    let word = p.edges();
    for (r, _) in word.iter().enumerate().filter(|(_, a)| **a == x) {
        let left = Path::from_slice(&word[..r], q.tail(x));
        let right = Path::from_slice(&word[r + 1..], q.head(x));
        out += &PathTensor::basis((left, right));
    }
    out
}

/// Extends [`d_edge`] linearly.
pub fn d_edge_sum(q: &DoubleQuiver, x: Edge, p: &PathSum) -> PathTensor {
    p.map_linear(|path| d_edge(q, x, path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::samples;

    #[test]
    fn cyclic_partial_examples() {
        let q = samples::loop1();
        let e = q.edge_by_name("e").unwrap();
        let es = q.edge_by_name("e*").unwrap();
        let v = q.vertex_by_name("v").unwrap();
        assert_eq!(
            cyclic_partial(&q, &Necklace::Cycle(vec![e]), e),
            PathSum::basis(Path::Trivial(v))
        );
        assert_eq!(
            cyclic_partial(&q, &Necklace::Cycle(vec![e, es]), es),
            PathSum::basis(Path::Edges(vec![e]))
        );
        assert!(cyclic_partial(&q, &Necklace::Cycle(vec![es]), e).is_zero());
        assert!(cyclic_partial(&q, &Necklace::Idempotent(v), e).is_zero());
    }

    #[test]
    fn d_edge_examples() {
        let q = samples::loop1();
        let e = q.edge_by_name("e").unwrap();
        let es = q.edge_by_name("e*").unwrap();
        let v = q.vertex_by_name("v").unwrap();
        let one = Path::Trivial(v);
        assert_eq!(
            d_edge(&q, e, &Path::Edges(vec![e, es])),
            PathTensor::basis((one.clone(), Path::Edges(vec![es])))
        );
        assert!(d_edge(&q, e, &one).is_zero());
        // Brute force over the two occurrences of e in (e e).
        let expected = &PathTensor::basis((one.clone(), Path::Edges(vec![e])))
            + &PathTensor::basis((Path::Edges(vec![e]), one.clone()));
        assert_eq!(d_edge(&q, e, &Path::Edges(vec![e, e])), expected);
    }

    #[test]
    fn compose_and_close() {
        let q = samples::a2_with_loop();
        let a = q.edge_by_name("a").unwrap();
        let a_star = q.edge_by_name("a*").unwrap();
        let l = q.edge_by_name("l").unwrap();
        let pa = Path::Edges(vec![a]);
        let pl = Path::Edges(vec![l]);
        assert!(pa.compose(&pl, &q).is_none());
        assert_eq!(pl.compose(&pa, &q), Some(Path::Edges(vec![l, a])));
        assert_eq!(close_path(&q, &Path::Edges(vec![l, a])), None);
        assert_eq!(
            close_path(&q, &Path::Edges(vec![a_star, l, a])),
            Some(Necklace::Cycle(vec![a, a_star, l]))
        );
    }
}
