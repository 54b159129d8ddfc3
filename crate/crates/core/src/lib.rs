pub mod bvp;
pub mod cli;
pub mod error;
pub mod jets;
pub mod resonance;
mod series;
pub mod specfun;
pub mod symexpr;
pub mod verify;

pub use error::{Error, EvalError, JetError, ParseError, ParseErrorKind, Result};
pub use symexpr::{parse, Expr, FuncKind, LinearOperator};
