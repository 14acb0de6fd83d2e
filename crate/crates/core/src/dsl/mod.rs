//! A small construction language for exact incidence checks.
//!
//! ```
//! use desargues::dsl::{evaluate, parse};
//!
//! let program = parse(
//!     "point A = (0, 0)\n\
//!      point B = (4, 0)\n\
//!      point M = mid(A, B)\n\
//!      assert collinear(A, M, B)\n",
//! )
//! .unwrap();
//! assert!(evaluate(&program).passed());
//! ```

mod ast;
mod error;
mod eval;
mod lexer;
mod parser;

pub use ast::{AssertKind, Expr, Ident, Kind, Program, RatLit, Span, Statement};
pub use error::{NameProblem, ParseError};
pub use eval::{evaluate, AssertionResult, EvalError, EvalReport, Outcome, Value, Witness};
pub use parser::parse;
