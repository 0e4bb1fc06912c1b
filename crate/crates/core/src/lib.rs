//! Exact computation in the necklace Hopf algebra of a quiver.
//!
//! The crate implements the Moyal-type star product, coproduct, counit and
//! antipode on `Sym L[h]` (the symmetric algebra on necklaces of the double
//! quiver), the classical necklace Lie bracket and cobracket, the height
//! symmetrization map, and the trace representation into polynomial
//! differential operators. All arithmetic is over exact rationals.

pub mod basis;
pub mod cutglue;
pub mod error;
pub mod expr;
pub mod format;
pub mod heights;
pub mod hopf;
pub mod quiver;
pub mod random;
pub mod rep;
pub mod suite;
pub mod symalg;

pub use error::{Error, Result};
pub use quiver::{build_double, parse_quiver, DoubleQuiver, Edge, Quiver, Vertex};
pub use symalg::{HPoly, Monomial, Necklace, Rational, SymLElement, TensorElement};
