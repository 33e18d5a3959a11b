//! Verification toolkit for the treewidth of generalized q-Kneser graphs
//! `K_q(n,k,t)`: the graph on `k`-dimensional subspaces of `F_q^n` in which
//! two subspaces are adjacent when they meet in dimension less than `t`.
//!
//! For `n >= 2k` the treewidth is at most `[n,k]_q - [n-t,k-t]_q - 1`, and
//! in a large range of parameters it equals that value. This crate builds
//! the graphs, constructs the matching tree decompositions, decides which
//! known result applies to given parameters, and checks every inequality
//! and geometric lemma behind the lower bound, with exact arithmetic and
//! brute-force oracles on small instances.
//!
//! ```
//! use qkneser::{theorem_verdict, KneserParams, ResultTag};
//!
//! let p = KneserParams::new(2, 4, 2, 1)?;
//! let v = theorem_verdict(&p);
//! assert_eq!(v.formula_value, 27u32.into());
//! assert!(v.has(ResultTag::K421Theorem));
//! # Ok::<(), qkneser::Error>(())
//! ```

pub mod error;
pub mod exact;
pub mod gf;
pub mod graph;
pub mod kneser;
pub mod qbinom;
pub mod quadric;
pub mod report;
pub mod subspace;
pub mod treedec;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{min_balanced_separator, mis_exact, treewidth_exact, SolveBudget};
pub use gf::{FieldElement, FieldSpec};
pub use graph::{BitSet, Graph, VertexLabel};
pub use kneser::{
    alpha_value, build_kneser_graph, counting_inequality_check, duality_isomorphism, intersection_profile, pair_count_check,
    star_independent_set, theorem_verdict, KneserParams, ResultTag, TheoremVerdict,
};
pub use qbinom::{beta, bridge_inequality_check, check_gauss_bounds, epsilon, gauss_binom, parabola_tail_check, ParabolaMode, Quadratic};
pub use quadric::{build_quadric_graph, grid_lemma_search, klein_map, perp_section_census, verify_klein_isomorphism, ProjPoint};
pub use report::{CaseRecord, SuiteReport, Summary};
pub use subspace::{enumerate_k_subspaces, Subspace};
pub use treedec::{balanced_separator_check, normalize_td, star_decomposition, validate_td, width, TreeDecomposition};
