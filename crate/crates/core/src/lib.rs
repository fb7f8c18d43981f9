//! Exact characteristic-number arithmetic for spin manifolds and the
//! path-component invariants `s` and `s̃` of positive scalar curvature
//! metrics, computed through bounding manifolds.
//!
//! Everything is exact: rationals are arbitrary precision and there is no
//! floating-point mode. The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use scalcurv_core::{genera::{genus_of, Genus}, manifolds::k3, Rational};
//!
//! assert_eq!(genus_of(Genus::AHat, &k3()), Rational::from(-2));
//! ```
#![no_std]

extern crate alloc;

pub mod bernoulli;
pub mod error;
pub mod genera;
pub mod invariants;
pub mod manifolds;
pub mod partition;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use partition::{partitions, Partition};
pub use poly::{NumberTable, PartitionPolynomial};
pub use rational::Rational;
