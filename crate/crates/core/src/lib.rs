//! Pattern avoidance in full binary trees.
//!
//! Trees are written as literals (`L` for a leaf, `(A B)` for a vertex with
//! children `A` and `B`) or by their position in the canonical order
//! (`t4_2`). A host tree contains a pattern non-contiguously when the pattern
//! can be obtained from it by contracting edges; the avoidance generating
//! function of any finite pattern set is rational and is computed exactly.
//!
//! ```
//! use treepat::gf::GfEngine;
//! use treepat::pattern_set::PatternSet;
//! use treepat::tree::Tree;
//!
//! let set = PatternSet::new(vec![Tree::left_comb(4), Tree::right_comb(4)]).unwrap();
//! let g = GfEngine::new().gf_set(&set);
//! assert_eq!(g.to_string(), "x + x^2 + 2x^3 + 3x^4 + 2x^5 + x^6");
//! ```
//!
//! Modules, roughly bottom up: [`tree`], [`pattern_set`], [`matcher`],
//! [`ratfun`], [`gf`], [`oracle`], [`gentree`], [`perm`], [`classify`],
//! [`oeis`] and [`cli`].

pub mod classify;
pub mod cli;
pub mod error;
pub mod gentree;
pub mod gf;
pub mod matcher;
pub mod oeis;
pub mod oracle;
pub mod pattern_set;
pub mod perm;
pub mod ratfun;
pub mod tree;
