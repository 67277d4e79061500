//! Exact projective Schur Q-functions, BKP hypergeometric tau functions and
//! their Pfaffian representations, over arbitrary-precision rationals.

pub mod error;
pub mod gseries;
pub mod ops;
pub mod partition;
pub mod pfaffian;
pub mod qschur;
pub mod rational;
pub mod report;
pub mod rspec;
pub mod tau;

pub use error::{Error, Result};
pub use gseries::{BiSeries, Monomial, OddSeries};
pub use partition::{Partition, StrictPartition};
pub use rational::Rational;
pub use report::{TauReport, Witness};
pub use rspec::RSpec;
