//! Exact computer algebra at desk scale.

pub mod groebner;
pub mod ideal;
pub mod poly;
pub mod slack;
pub mod text;

pub use groebner::{groebner, reduce, Budget};
pub use ideal::{ideal_contains, ideal_equals, saturate, Ideal};
pub use poly::{Polynomial, TermOrder};
