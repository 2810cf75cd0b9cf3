//! Superboolean matrix algebra and the c-rank of finite posets, lattices and
//! hereditary collections.
//!
//! The crate is organised bottom-up:
//!
//! * [`sbool`] and [`matrix`]: the three-element superboolean semiring and
//!   rectangular matrices over it.
//! * [`rank`]: permanents, nonsingularity, markers, column independence and
//!   rank with triangular witnesses.
//! * [`poset`]: structured sets, posets, structure matrices, c-rank, height.
//! * [`lattice`]: lattices, irreducibles, the spec morphism, adjoints of
//!   sup-maps and the constructive c-rank/height certificates.
//! * [`completion`]: Dedekind-MacNeille completion and union closure.
//! * [`chains`]: maximal chains, chain partitions and partial cross sections.
//! * [`hereditary`]: hereditary collections, point replacement and partition
//!   representability.
//! * [`format`] and [`dot`]: text/JSON formats and Graphviz export.
//!
//! Enumeration-heavy routines run on rayon when the `parallel` feature is
//! enabled (the default) and fall back to sequential iteration otherwise.
//! Results never depend on the execution mode.

pub mod bits;
pub mod caps;
pub mod chains;
pub mod completion;
pub mod dot;
pub mod error;
pub mod format;
pub mod hereditary;
pub mod lattice;
pub mod matrix;
mod par;
pub mod poset;
pub mod rank;
pub mod sbool;

pub use caps::Caps;
pub use error::{Error, Result};
pub use lattice::Lattice;
pub use matrix::SbMatrix;
pub use poset::{Poset, StructuredSet};
pub use rank::Witness;
pub use sbool::SbScalar;
