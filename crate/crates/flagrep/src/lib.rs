//! Exact combinatorics of compact Lie group representations: root systems
//! from Cartan matrices, Weyl group actions, highest-weight dimensions and
//! weight multiplicities, Borel-Weil-Bott cohomology of line bundles on the
//! flag variety, infinitesimal-character tests, and a concrete
//! Matsuki-duality model for SU(1,1).
//!
//! All root-theoretic computation is done in arbitrary-precision rational
//! arithmetic; floating point appears only in the [`matsuki`] module, whose
//! objects are analytic rather than combinatorial.
//!
//! Weights are stored in fundamental-weight coordinates: `coords[i]` is the
//! pairing with the `i`-th simple coroot.  The Cartan matrix convention is
//! `a[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`, so the `i`-th row
//! lists the fundamental-weight coordinates of the simple root `alpha_i`.
//!
//! ```
//! use flagrep::cartan::RootSystem;
//! use flagrep::highrep::weight_system;
//!
//! let g2 = RootSystem::from_label("G2").unwrap();
//! assert_eq!(g2.positive_roots().len(), 6);
//! let adjoint = weight_system(&g2, &flagrep::cartan::Weight::integral(&[0, 1])).unwrap();
//! assert_eq!(adjoint.dimension().to_string(), "14");
//! ```

// Index-based loops are the clearest way to write the small dense-matrix
// kernels used throughout.
#![allow(clippy::needless_range_loop)]

pub mod bwb;
pub mod cartan;
pub mod error;
pub mod highrep;
pub mod infchar;
pub mod matsuki;
mod ratmat;
pub mod weyl;

pub use cartan::{CartanMatrix, RootSystem, Weight};
pub use error::{Error, Result};
