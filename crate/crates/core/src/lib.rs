//! Exact computation of the graded deformation cohomology `HH²₋₁(S(V) ⋊ G)` for a
//! finite cyclic group `G ⊂ GL_n(F)`, over `F_p` (p odd) or `Q`.
//!
//! Two independent routes are provided: [`formula`] evaluates the closed-form
//! summand description element by element, and [`oracle`] solves the cocycle and
//! coboundary conditions directly. [`deformation`] covers the two-dimensional
//! transvection example: the square-bracket obstruction and a rewriting (diamond
//! lemma) certificate for the PBW property of the resulting algebra.

pub mod deformation;
pub mod exec;
pub mod formula;
pub mod group;
pub mod linalg;
pub mod oracle;

pub use exec::Execution;
pub use group::{CyclicGroup, ElementData, GroupError, Module, TransferData};
pub use linalg::{Decomposition, FieldSpec, LinalgError, Matrix, Scalar, Subspace};
