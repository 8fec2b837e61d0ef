//! Exact-arithmetic toolkit for numerical semigroups and monomial
//! staircases: Apéry sets, LEX-minimal lifts, kernel-lattice
//! tessellations, story decompositions and Wilf ratios, all verified by
//! brute-force enumeration at desk scale.

pub mod enumerate;
pub mod error;
pub mod lift;
pub mod ratio;
pub mod semigroup;
pub mod staircase;
pub mod tessellation;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use lift::{lex_min_lift, LiftData, StoryReport};
pub use semigroup::{AperyData, NumericalSemigroup};
pub use staircase::{Point, Staircase};
pub use tessellation::{find_tessellation, kernel_lattice, verify_tessellation, Lattice};
pub use weights::{Rat, WeightVector};
