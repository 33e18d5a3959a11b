//! The guide in `book/`, compiled so that every snippet runs as a doc-test.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/fields-and-subspaces.md")]
pub mod fields_and_subspaces {}
#[doc = include_str!("../../../book/src/gaussian-binomials.md")]
pub mod gaussian_binomials {}
#[doc = include_str!("../../../book/src/kneser-graphs.md")]
pub mod kneser_graphs {}
#[doc = include_str!("../../../book/src/tree-decompositions.md")]
pub mod tree_decompositions {}
#[doc = include_str!("../../../book/src/exact-solvers.md")]
pub mod exact_solvers {}
#[doc = include_str!("../../../book/src/quadric.md")]
pub mod quadric {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
