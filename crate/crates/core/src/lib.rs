//! Exact partition and Schur-functor calculus.
//!
//! Everything here works over exact integers: partitions and Young diagrams,
//! symmetric-group characters (Murnaghan–Nakayama), Littlewood–Richardson and
//! Kronecker multiplicities, Schur functors evaluated on graded objects, and
//! the prime tensor ideals of the free symmetric monoidal category on one
//! object. Each structural statement comes with an executable verifier that
//! produces a [`VerificationReport`].
//!
//! The crate is `no_std` and only needs `alloc`. Character tables are cached
//! through the [`CharacterTables`] trait so that callers with threads can
//! plug in a shared cache.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod balmer;
pub mod characters;
mod error;
pub mod expansion;
pub mod lr;
pub mod partitions;
pub mod report;
pub mod schur;

pub use balmer::{Classification, IdealTruncation, PrimalityWitness, PrimeLabel, ProductSupports};
pub use characters::{CharacterTable, CharacterTables, CycleType, LocalTables};
pub use error::{Error, Result};
pub use expansion::SchurExpansion;
pub use partitions::Partition;
pub use report::VerificationReport;
pub use schur::{GradedObject, SchurBounds, SchurSupport};
