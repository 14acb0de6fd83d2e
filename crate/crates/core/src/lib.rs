//! Exact projective incidence geometry over the rationals.
//!
//! Points and lines of the projective plane are canonical integer triples, so
//! incidence, collinearity and concurrency are decided by exact integer
//! determinants. On top of that kernel sit checkers for Desargues' theorem
//! and its converse, the Menelaus criterion, and the complete-quadrilateral
//! configurations around the Newton–Gauss line, plus a small construction
//! language ([`dsl`]) for writing such configurations by hand.
//!
//! ```
//! use desargues::homology::{check_forward, TrianglePair};
//! use desargues::menelaus::Triangle;
//! use desargues::projective::{ProjLine, ProjPoint};
//!
//! let p = ProjPoint::affine;
//! let abc = Triangle::new(p(1, 0), p(0, 1), p(1, 1)).unwrap();
//! let a1b1c1 = Triangle::new(p(2, 0), p(0, 3), p(4, 4)).unwrap();
//! let report = check_forward(&TrianglePair::new(abc, a1b1c1).unwrap()).unwrap();
//! assert_eq!(report.center, Some(p(0, 0)));
//! assert_eq!(report.axis, Some(ProjLine::new(1, 3, 5).unwrap()));
//! ```

pub mod dsl;
pub mod error;
pub mod homology;
pub mod menelaus;
pub mod projective;
pub mod quadrilateral;
pub mod witness;

pub use error::{Error, Falsification, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/projective.md")]
    mod projective {}
    #[doc = include_str!("../../../book/src/menelaus.md")]
    mod menelaus {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
    #[doc = include_str!("../../../book/src/quadrilateral.md")]
    mod quadrilateral {}
    #[doc = include_str!("../../../book/src/dsl.md")]
    mod dsl {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
