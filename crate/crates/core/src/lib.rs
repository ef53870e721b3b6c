//! Exact combinatorics for k-noncrossing set partitions and braids.
//!
//! The crate is organised around five layers:
//!
//! * [`diagrams`]: arc diagrams over `[n]`, the partition and braid classes,
//!   crossing statistics and the loop/isolated-point correspondence.
//! * [`tableaux`]: shapes, vacillating tableaux over the partition and braid
//!   step sets, and the insertion bijection between tableaux and diagrams.
//! * [`duality`]: the arc-contracting map from partitions over `[n]` to
//!   braids over `[n-1]`, computed directly and through tableaux.
//! * [`enumerate`]: exhaustive generators and brute-force count tables.
//! * [`walks`]: quadrant walks, the kernel root series, closed forms, the
//!   P-recurrence and asymptotics for 3-noncrossing braids without isolated
//!   points.
//!
//! [`verify`] bundles the cross-checks into named suites for the CLI.

pub mod diagrams;
pub mod duality;
pub mod enumerate;
mod error;
pub mod tableaux;
pub mod verify;
pub mod walks;

pub use diagrams::{Arc, ArcDiagram, BraidDiagram, CrossingStatistic, PartitionDiagram, SetPartitionBlocks};
pub use duality::{theta_direct, theta_inverse_direct, theta_restricted, theta_tableau};
pub use enumerate::{Class, CountTable, Route};
pub use error::{Error, Result};
pub use tableaux::{HalfStep, Shape, StepPair, StepSet, VacillatingTableau};
