use thiserror::Error;

/// Failure while evaluating a special function or an expression at a point.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("{function}: argument {x} outside domain")]
    Domain { function: String, x: f64 },
    #[error("{function}: result overflows at {x}")]
    Overflow { function: String, x: f64 },
    #[error("{function}: pole at {x}")]
    Pole { function: String, x: f64 },
    #[error("{function}: series failed to converge")]
    NoConvergence { function: String },
    #[error("quadrature exhausted {subdivisions} subdivisions (estimated error {error:e})")]
    Quadrature { subdivisions: usize, error: f64 },
    #[error("{function}: order {order} outside supported range")]
    Order { function: String, order: i64 },
}

impl EvalError {
    pub(crate) fn domain(function: &str, x: f64) -> Self {
        EvalError::Domain { function: function.to_string(), x }
    }

    pub(crate) fn overflow(function: &str, x: f64) -> Self {
        EvalError::Overflow { function: function.to_string(), x }
    }

    pub(crate) fn no_convergence(function: &str) -> Self {
        EvalError::NoConvergence { function: function.to_string() }
    }

    pub(crate) fn order(function: &str, order: i64) -> Self {
        EvalError::Order { function: function.to_string(), order }
    }

    /// Domain exits and quadrature budget exhaustion; these mark a check
    /// as errored rather than failed.
    pub fn is_domain_like(&self) -> bool {
        !matches!(self, EvalError::NoConvergence { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("unexpected token {0}")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(String),
    #[error("unknown function '{0}'")]
    UnknownFunction(String),
    #[error("{0} requires an integer order")]
    NonIntegerOrder(String),
    #[error("order {1} of {0} outside 0..=32")]
    OrderOutOfRange(String, i64),
    #[error("function argument must have the form c*x")]
    NonLinearArgument,
    #[error("division only by a constant, a power of x or a basis function")]
    UnsupportedDivision,
    #[error("wrong number of arguments to {0}")]
    Arity(String),
    #[error("invalid number literal '{0}'")]
    BadNumber(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum JetError {
    #[error("jet order {0} outside 1..=4")]
    Order(usize),
    #[error("jets have different base points or orders")]
    Mismatch,
    #[error("reciprocal of a jet with zero constant term")]
    SingularConstantTerm,
    #[error("step size must be positive")]
    Step,
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Errors raised by the catalog, resonance constructions and BVP solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown catalog row '{0}'")]
    UnknownRow(String),
    #[error("row '{row}' has no member '{member}'")]
    UnknownMember { row: String, member: String },
    #[error("parameter {value} out of range: {reason}")]
    ParameterOutOfRange { value: f64, reason: String },
    #[error("no closed form for {0}")]
    Unsupported(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
