//! Exact classification of piecewise-linear fuzzy partitions of `[0,1]` and
//! decision procedures for the Lukasiewicz theories they induce.
//!
//! All arithmetic is over arbitrary-precision rationals; every negative
//! verdict carries a witness that can be re-checked by direct evaluation.
//!
//! ```
//! use tribasis::{basis::classify, canonical_basis, logic::{parse, theta_member}};
//!
//! let t3 = canonical_basis(3).unwrap();
//! let c = classify(&t3).unwrap();
//! assert!(c.is_pseudo_triangular() && c.triangular);
//! assert!(theta_member(&parse("!(X1 & X3)").unwrap(), &t3).unwrap().holds());
//! ```

pub mod basis;
pub mod error;
pub mod family;
pub mod family_file;
pub mod logic;
pub mod plfun;
pub mod props;
pub mod rational;
pub mod sample;
pub mod verdict;

pub use basis::canonical_basis;
pub use error::{Error, Result};
pub use family::FuzzyFamily;
pub use plfun::{PlFunc, PointwiseOp};
pub use rational::{rat, Rational};
pub use verdict::Verdict;
