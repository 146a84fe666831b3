//! Binomial ideals: Janet bases by involutive completion, Buchberger's
//! algorithm as a reference, toric ideals and integer programming.

pub mod binomial;
pub mod completion;
pub mod error;
pub mod groebner;
pub mod janet;
pub mod monomial;
pub mod order;
pub mod sample;
pub mod text;
pub mod toric;

pub use binomial::{sort_descending, Binomial};
pub use error::{Error, Result};
pub use janet::JanetTree;
pub use monomial::{Monomial, Var, VarSet};
pub use order::MonomialOrder;
pub use text::{VarNames, TextError};
pub use completion::{binomial_janet_basis, binomial_janet_basis_with, is_janet_basis, janet_normal_form, CompletionOptions, Triple};
pub use groebner::{autoreduce, buchberger, ideal_equal, nf_ordinary, reduced_groebner_basis, spoly};
pub use toric::{ip_solve, kernel_lattice, saturate, toric_generators, vector_to_binomial, LatticeVector, Matrix, ToricInstance};
