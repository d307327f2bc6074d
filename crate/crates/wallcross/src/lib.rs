//! Exact motives of rank-2 Bradlow–Higgs moduli spaces over a smooth projective curve.
//!
//! Classes live in the subring of the Grothendieck ring of varieties generated by
//! the Lefschetz class and the Hodge-type variables `x`, `y` of the curve, with
//! `L = xy`. Modules are layered: [`ring`] provides Laurent polynomials and
//! truncated series, [`blocks`] the basic motives, [`pairs`] and [`triples`] the
//! wall-crossing, [`genfun`] the generating functions and [`cks`] the graph weights.

pub mod blocks;
pub mod cks;
pub mod error;
pub mod genfun;
pub mod pairs;
pub mod parallel;
pub mod report;
pub mod ring;
pub mod triples;
pub mod verify;

pub use error::{Error, Result};
