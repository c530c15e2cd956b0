//! Exact arithmetic for partitions into odd parts.
//!
//! Everything here is computed over `BigInt` / `BigRational`; there is no
//! floating point anywhere in the evaluation paths. The crate provides:
//!
//! * counting functions: q(n), the Q_k(n) refinements, odd divisor counts,
//!   and closed forms for Q_1, Q_2 and Q_{p^r},
//! * truncated power series and rational functions over exact rationals,
//!   including the generating functions behind each closed form,
//! * verification suites that re-check the identities and inequalities on
//!   finite grids against brute-force enumeration,
//! * bound families (A_k, B_k, R_k and friends) evaluated at exact rational
//!   points, plus two-sided enclosures with certified tails.
//!
//! The `oddparts` binary exposes all of this on the command line; see the
//! crate README for examples.

pub mod bounds;
pub mod cli;
pub mod constants;
pub mod error;
pub mod fibonacci;
pub mod genfun;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use rational::{Domain, EvalPoint, ExactRational, RoundMode};
