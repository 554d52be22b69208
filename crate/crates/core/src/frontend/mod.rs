//! Problem input: syntax, elaboration and clausification.

pub mod clausify;
pub mod elaborate;
pub mod run;
pub mod syntax;
pub mod tptp;

pub use elaborate::{InputError, Problem};
