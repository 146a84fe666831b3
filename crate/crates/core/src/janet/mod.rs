//! Janet division: the multiplicative-variable partition and the Janet tree.

mod division;
mod tree;

pub use division::{is_janet_divisor, j_divisor_naive, nm_vars};
pub use tree::JanetTree;
