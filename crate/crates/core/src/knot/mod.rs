//! Colored knot data, cyclotomic expansions and the unified invariant of
//! `±1` surgery.

mod cyclo;
mod kirby;
mod sl2;
mod table;

pub use cyclo::*;
pub use kirby::*;
pub use sl2::*;
pub use table::*;
