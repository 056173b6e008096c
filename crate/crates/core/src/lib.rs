//! Decision procedures for finite monoids and finite S-acts.

pub mod act;
pub mod budget;
pub mod catalog;
pub mod classify;
pub mod flatness;
pub mod io;
pub mod monoid;
pub mod partition;

pub use act::{ActCongruence, ActError, ActMorphism, FiniteAct, Side};
pub use budget::Budget;
pub use monoid::{build_monoid, Elem, FiniteMonoid, MonoidError, Submonoid};
pub use partition::Partition;
