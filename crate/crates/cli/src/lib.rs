//! Command-line front end for the `desargues` kernel: `.geo` checking,
//! seeded fuzzing, SVG figures and the two worked demos.

pub mod check;
pub mod demo;
pub mod figure;
pub mod fuzz;
pub mod rng;

/// Process exit statuses.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const IO: i32 = 3;
}
