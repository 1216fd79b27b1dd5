//! Fusion rings of quantum groups at roots of unity, computed over the
//! level-k Weyl alcove, together with closed-subset enumeration and modular data.

pub mod characters;
pub mod closed_subsets;
pub mod cyclotomic;
pub mod error;
pub mod fusion;
pub mod golden;
pub mod modular;
pub mod regression;
pub mod root_system;

pub use error::{Error, Result};
pub use root_system::{AlgebraId, CenterMap, DominantForm, Family, Rational, RootSystem, Subgroup, Weight};
