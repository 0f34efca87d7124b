//! Exact symbolic engine for the free Poisson 2-algebra of multilocal
//! polynomial observables over configurations of points on the real line.
//!
//! Observables live over *ordered* tuples of rational base points and carry
//! two products: the fibrewise Hadamard product, which multiplies
//! polynomials slot by slot over one fixed configuration, and the Cauchy
//! product, which concatenates both the slot data and the configurations.
//! Any skew-symmetric matrix of bivariate polynomial kernels induces a
//! Poisson bracket compatible with both products; all arithmetic is exact
//! rational, so every algebraic law (skew-symmetry, Jacobi, both Leibniz
//! rules, the interchange law) is checked as a literal equality.
//!
//! Module map:
//! - [`perm`]: symmetric-group combinatorics (block/deck permutations,
//!   shuffles, unshuffles, coset decomposition);
//! - [`fiber`]: exact sparse multivariate polynomials in the fibre;
//! - [`observable`]: configurations, slot tensors, the two products and
//!   equivariant transport;
//! - [`kernel`]: skew kernels, including the canonical symplectic one;
//! - [`poisson`]: the induced bracket, its recursive oracle, diagonal
//!   collapse and the classical canonical bracket;
//! - [`isotropy`]: rank drop at coinciding points (invariant dimensions,
//!   bases, symmetrization);
//! - [`rep`]: induced representations of Young subgroups, characters,
//!   Frobenius reciprocity, transitivity;
//! - [`parse`]: the expression grammar shared with the CLI;
//! - [`suite`]: the seeded axiom suites behind `check`.

pub mod error;
pub mod fiber;
pub mod isotropy;
pub mod kernel;
pub mod linalg;
pub mod observable;
pub mod parse;
pub mod perm;
pub mod poisson;
pub mod rep;
pub mod sample;
pub mod suite;

/// Exact scalar type used everywhere: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

pub use error::{Error, Result};
pub use fiber::{FiberPoly, Monomial, VariableScheme};
pub use isotropy::{invariant_basis, invariant_dimension, is_invariant, symmetrize, IsotropyGroup};
pub use kernel::{BiPoly, SkewKernel};
pub use observable::{interchange_check, Config, Observable, PureTensor};
pub use perm::{coset_decompose, shuffles, unshuffles, Composition, Perm};
pub use poisson::{bracket, bracket_recursive, canonical_bracket, diagonal_collapse};
pub use rep::{
    frobenius_check, hom_dim, induce, induce_default, restrict, transitivity_check, Character,
    FiniteGroup, Representation,
};
