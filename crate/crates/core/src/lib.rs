//! Integer Heffter arrays and integer Heffter array sets.
//!
//! [`build_ihs`] constructs a set `IHS(m,n;c)`; [`build_integer_heffter`]
//! turns such sets into an integer Heffter array `H(m,n;s,k)`. Every output
//! is checked by [`verify_ihs`] or [`verify_integer_heffter`] before it is
//! returned. [`classify`] says whether a parameter quadruple is handled here.

pub mod array;
pub mod blocks;
pub mod error;
pub mod format;
pub mod heffter;
pub mod ihs;
pub mod interval;
pub mod oracle;
pub mod verify;

pub use array::{Block, PartialArray, SumProfile, Transform};
pub use error::{Error, Result};
pub use heffter::{build_integer_heffter, classify, ihs_regroup, ihs_to_heffter, Feasibility, OpenReason};
pub use ihs::{build_ihs, partition_pieces, PartitionSpec, Piece, PieceKind};
pub use interval::{interval_set, support_of, FourSet, IntervalD, SupportSet};
pub use verify::{verify_ihs, verify_integer_heffter, Axiom, Location, VerificationReport, Violation};
