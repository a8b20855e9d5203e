//! Numerical semigroups and semi-covarieties.
//!
//! A numerical semigroup is a cofinite submonoid of `(N, +)`. This crate
//! provides exact arithmetic on them ([`NumericalSemigroup`], [`AperySet`]),
//! a generic enumerator for semi-covarieties ([`engine`]), and two concrete
//! families:
//!
//! * [`theta`]: all numerical semigroups containing a fixed `Δ`;
//! * [`coe`]: coe-semigroups with a fixed odd Frobenius number.
//!
//! ```
//! use semicov::{theta, NumericalSemigroup};
//!
//! let delta = NumericalSemigroup::from_generators(&[3, 7, 8]).unwrap();
//! let tree = theta::enumerate_theta(&delta, None).unwrap();
//! assert_eq!(tree.len(), 6);
//! ```

mod apery;
pub mod coe;
pub mod engine;
mod error;
pub mod oracle;
mod semigroup;
mod table;
pub mod theta;

pub use apery::AperySet;
pub use engine::{enumerate, f_sequence, mu, FSet, Family, FamilyTree, TreeNode};
pub use error::{Error, Result};
pub use semigroup::{submonoid_contains, Invariants, NumericalSemigroup, MAX_FROBENIUS};
