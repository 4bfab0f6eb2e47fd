//! Finite category theory with heteromorphisms.
//!
//! Categories, functors and natural transformations are explicit tables.
//! Het-bifunctors carry the morphisms *between* two categories; searching
//! them for universal elements on each side yields representing functors,
//! and a het-bifunctor representable on both sides yields an adjunction.

pub mod adjunction;
pub mod category;
pub mod construct;
pub mod dsl;
pub mod error;
pub mod functor;
pub mod het;
pub mod instances;
pub mod render;
pub mod report;
pub mod represent;
pub mod theorem;

pub use category::{identity_name, tuple_id, Capacity, CatBuilder, FinCat, MorId, ObjId, RawCategory};
pub use error::{Error, Result};
pub use functor::{Functor, NatTransform, RawFunctor};
pub use report::{CheckSuite, NamedCheck, ValidationReport, Violation};
