//! Exact invariants for the knots `K^n_{r,s} = [r, -s, n]` on the trefoil fiber.
//!
//! The modules follow the construction: continued fractions name curves on
//! the once-punctured torus fiber ([`arith`], [`curves`]), positive braids give
//! their genus ([`genus`]), Baker's index-set criterion certifies smallness
//! ([`small`]), bridge indices feed the tunnel number growth rate ([`bounds`]),
//! and [`surgery`] emits the chain-link surgery descriptions.

pub mod arith;
pub mod bounds;
pub mod curves;
pub mod error;
pub mod genus;
pub mod small;
pub mod surgery;

pub use arith::{ContinuedFraction, ProjectiveRational};
pub use curves::{intersection, knot_class, twist_linearity_check, CurveClass, FamilyParams, TwistLetter, TwistWord};
pub use error::{Error, Result};
