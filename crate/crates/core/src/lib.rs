//! Character codegrees of finite permutation groups.

pub mod arith;
pub mod chartab;
pub mod codegree;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod orbits;
pub mod perm;
pub mod structure;
pub mod verify;
pub mod zoo;

pub use chartab::{CharacterTable, SubgroupTable};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use group::{ConjugacyClass, FiniteGroup, Quotient, Subgroup};
pub use perm::Permutation;
