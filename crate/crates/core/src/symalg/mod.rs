//! Necklaces, the commutative algebra `Sym L[h]`, and the classical necklace
//! Lie bialgebra structure.

pub mod hpoly;
pub mod lie;
pub mod linear;
pub mod necklace;
pub mod path;

use crate::error::Result;
use crate::quiver::DoubleQuiver;

pub use hpoly::{int, rat, HPoly, Rational};
pub use linear::LinComb;
pub use necklace::{canonical_necklace, Monomial, Necklace};
pub use path::{Path, PathSum, PathTensor};

/// An element of `Sym L[h]`.
pub type SymLElement = LinComb<Monomial>;
/// An element of `Sym L[h] ⊗ Sym L[h]`; keys are ordered pairs.
pub type TensorElement = LinComb<(Monomial, Monomial)>;
/// Threefold tensors, the target of the coassociativity check.
pub type Tensor3Element = LinComb<(Monomial, Monomial, Monomial)>;

/// The algebra unit, the empty monomial.
pub fn unit() -> SymLElement {
    SymLElement::basis(Monomial::unit())
}

pub fn necklace_element(n: Necklace) -> SymLElement {
    SymLElement::basis(Monomial::single(n))
}

/// The commutative product `&` of `Sym L[h]`.
pub fn symmetric_product(a: &SymLElement, b: &SymLElement) -> SymLElement {
    a.bilinear(b, |x, y| SymLElement::basis(x.product(y)))
}

/// Checks every monomial against the quiver.
pub fn validate(q: &DoubleQuiver, a: &SymLElement) -> Result<()> {
    a.keys().try_for_each(|m| m.validate(q))
}

pub fn flip(t: &TensorElement) -> TensorElement {
    t.iter()
        .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
        .collect()
}
