//! Regular 1-factorizations of complete graphs together with complete sets of
//! rainbow spanning trees, for groups of order `2n` that have a cyclic subgroup
//! of index two.
//!
//! Vertices of `K_{2n}` are identified with the elements of a group `G` acting
//! on itself by right translation. A *starter* (a family of edge sets with
//! associated stabilizer subgroups) expands into a `G`-regular 1-factorization;
//! a base graph `R` together with two bridge edges from the fixed factor then
//! translates into `n` pairwise edge-disjoint rainbow spanning trees.
//!
//! Four group families are supported:
//!
//! | family         | order | presentation                                  |
//! |----------------|-------|-----------------------------------------------|
//! | `dicyclic`     | `4s`  | `a^{2s} = 1, b^2 = a^s, b^-1 a b = a^-1`      |
//! | `abelian`      | `2n`  | `Z_2 x Z_n`, `4 \| n`                          |
//! | `semidihedral` | `2n`  | `a^n = b^2 = 1, bab = a^{n/2-1}`, `n = 2^m`    |
//! | `modular`      | `2n`  | `a^n = b^2 = 1, bab = a^{n/2+1}`, `n = 2^m`    |
//!
//! Every construction is certified before it is handed out; see
//! [`constructions::Construction::new`].

pub mod cli;
pub mod constructions;
pub mod error;
pub mod export;
pub mod graph;
pub mod group;
pub mod oracle;
pub mod rainbow;
pub mod schema;
pub mod starter;

pub use constructions::{Construction, LemmaOneInput};
pub use error::{Error, Result};
pub use graph::{DifferenceSet, Edge, EdgeSet};
pub use group::{Group, GroupElement, GroupFamily, Subgroup};
pub use rainbow::RainbowTreeSet;
pub use starter::{Factorization, Starter, StarterBlock};
