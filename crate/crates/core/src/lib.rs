//! Exact enumeration and counting of small covers over the cube `Iⁿ` and
//! over products of simplices.
//!
//! Small covers over a simple polytope correspond to characteristic
//! matrices: facet labelings by vectors of `ℤ₂ⁿ` that form a basis at every
//! vertex. Over the cube, D-J classes are the matrices in `M(n)` (every
//! principal minor 1 over GF(2)), which `B(G) = E + A(G)` puts in bijection
//! with labeled acyclic digraphs. The crate provides
//!
//! - [`gf2`]: bit-row matrices over GF(2) and exact integer minors,
//! - [`digraph`]: labeled digraphs, DAG enumeration and unlabeled counts,
//! - [`cover`]: characteristic matrices, refined forms, `φ`, `ψ`, the cube's
//!   facet-symmetry group and brute-force orbit counts,
//! - [`counts`]: closed forms (`R_n`, `Q_n`, `♯DJ`, `|GL(n, ℤ₂)|`, Burnside),
//! - [`cli`]: the `smallcover` command-line front end.
//!
//! Exhaustive searches take a [`Caps`] limit and a [`Workers`] executor.
//!
//! ```
//! use smallcover::{counts, cover, Caps, Workers};
//!
//! let caps = Caps::default();
//! let workers = Workers::sequential();
//! assert_eq!(cover::count_mn(4, &caps, &workers).unwrap(), 543);
//! assert_eq!(counts::r_labeled(4), 543u32.into());
//! assert_eq!(counts::q_equivariant(3).unwrap(), 259u32.into());
//! ```

pub mod caps;
pub mod cli;
pub mod counts;
pub mod cover;
pub mod digraph;
pub mod dump;
pub mod error;
pub mod gf2;
pub mod parallel;
pub mod perm;
mod search;

pub use caps::Caps;
pub use counts::BigCount;
pub use cover::{CharMatrix, CubeSymmetry, PolytopeSpec, ReducedMatrix};
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use gf2::BitMatrix;
pub use parallel::{PartitionPlan, Workers};
pub use perm::Perm;
