//! Lifting problems, exhaustive solvers and right-lifting-property checks.

pub mod prism;
pub mod problem;
pub mod pushout;
pub mod retract;
pub mod rlp;
pub mod search;

pub use prism::{prism_boundary_equivalence, prism_filler, EquivalenceVerdict, PrismError};
pub use problem::{solve_lift, squares, LiftingProblem};
pub use pushout::{pushout_product, PushoutProduct};
pub use retract::{retract_search, RetractDiagram, RetractOutcome};
pub use rlp::{
    boundary_rlp, check_family, default_bound, horn_rlp, prism_rlp, rlp, Counterexample, Family,
    RlpReport,
};
pub use search::{enumerate_maps, MapSearch, SearchOrder, SimplexIndex};
