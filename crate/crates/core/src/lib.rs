//! Exact Poisson cohomology and homology of `F[x,y,z]` with the bracket
//! `{f,g} = det(grad f, grad g, grad phi)`, and of the surface `F[x,y,z]/<phi>`,
//! for weight homogeneous `phi` with an isolated singularity.

pub mod cohomology;
pub mod graded;
pub mod homology;
pub mod linalg;
pub mod milnor;
pub mod poisson;
pub mod poly;
pub mod report;
pub mod verify;
pub mod vector;

pub use graded::{basis_of, matrix_of, GradedBasis, GradedError, GradedOperatorMatrix, SpaceKind};
pub use linalg::{Echelon, Matrix, SparseVec};
pub use poisson::{Cochain, PoissonError, PoissonStructure};
pub use poly::{Monomial, Poly, Rational, WeightSystem};
pub use vector::VecPoly;
