//! Finite simplicial sets in normal form, exhaustive lifting-property checks,
//! and synthesis of excluded-middle section certificates for propositional
//! Kan fibrations.

pub mod construct;
pub mod error;
pub mod fixtures;
pub mod map;
pub mod product;
pub mod sset;
pub mod standard;
pub mod subcomplex;
pub mod surjection;

pub use construct::{coproduct, coproduct_all};
pub use error::SimplicialError;
pub use map::{compose, identity, SimplicialMap};
pub use product::{product, product_map, pullback, Product};
pub use sset::{Cell, SimplexExpr, SimplicialOperator, SimplicialSet};
pub use standard::{boundary, horn, std_simplex};
pub use subcomplex::{image, subcomplex_closure, Subcomplex};
pub use surjection::OrdinalSurjection;

pub mod interchange;
pub mod lem;
pub mod lifting;
