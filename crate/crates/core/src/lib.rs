//! Exact enumeration and counting for the semigroups of order-decreasing
//! partial isometries of a finite chain `X_n = {1, ..., n}`.
//!
//! The crate is organised bottom-up:
//!
//! * [`ptransform`] holds the partial injection type, composition and the
//!   per-map statistics (height, fix, waists, shoulders).
//! * [`families`] enumerates the studied subsets of the symmetric inverse
//!   monoid, with a slow filter-based enumerator kept as an oracle.
//! * [`formulas`] evaluates every closed form and recurrence over an exact
//!   integer scalar (see [`scalar::ExactScalar`]).
//! * [`green`] computes gap vectors and the starred Green's relations.
//! * [`verify`] cross-checks the formulas against enumeration and
//!   union-find class partitions.
//!
//! Composition acts on the right: `compose(a, b)` applies `a` first.

pub mod error;
pub mod families;
pub mod formulas;
pub mod green;
pub mod ptransform;
pub mod scalar;
pub mod unionfind;
pub mod verify;

pub use error::{Error, Result};
pub use families::{Family, FamilySlice};
pub use formulas::{CountTable, Statistic};
pub use green::GapVector;
pub use ptransform::{MapFlags, PartialInjection, Statistics};
pub use scalar::ExactScalar;
pub use verify::{CheckReport, ClassPartition, Status, VerifyConfig};

/// Arbitrary-precision integer used for every reported count.
pub type ExactInt = num_bigint::BigInt;

/// Exact rational, used where a closed form passes through negative powers of two.
pub type ExactRational = num_rational::BigRational;

/// Count triangle over [`ExactInt`].
pub type ExactTable = CountTable<ExactInt>;

/// Count triangle over `u64`; construction fails with [`Error::Overflow`]
/// once an entry no longer fits.
pub type MachineTable = CountTable<u64>;
