use thiserror::Error;

/// Errors raised by the algebra, the inference procedures and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("too many symbols: {count} (at most {max} are supported)")]
    SymbolLimitExceeded { count: usize, max: usize },

    #[error("symbol list is empty")]
    EmptySymbolList,

    #[error("invalid symbol name `{0}`")]
    InvalidSymbol(String),

    #[error("symbol `{0}` appears more than once in the symbol list")]
    DuplicateSymbol(String),

    #[error("symbol `{0}` is not bound by the symbol list")]
    UnboundSymbol(String),

    #[error("symbol `{0}` does not occur in the equation")]
    SymbolNotPresent(String),

    #[error("symbol `{0}` is reserved for indeterminate classes (v1, v2, ...)")]
    NameCollision(String),

    #[error("symbol lists differ: [{left}] vs [{right}]")]
    SymbolListMismatch { left: String, right: String },

    #[error("{}", at_constituent("a 0/0 or k/0 value was used as an operand", .constituent))]
    UninterpretableNesting { constituent: Option<String> },

    #[error("{}", at_constituent("integer overflow in exact arithmetic", .constituent))]
    Overflow { constituent: Option<String> },

    #[error("no premises given")]
    EmptyPremises,

    #[error("form is not interpretable as a class (coefficient {coefficient} at {constituent})")]
    NotInterpretable {
        constituent: String,
        coefficient: String,
    },

    #[error("the oracle cannot evaluate quotients")]
    QuotientInOracle,

    #[error("universe of size {size} exceeds the exhaustive-verification cap of {max}")]
    UniverseTooLarge { size: usize, max: usize },

    #[error("an element cannot be in P while outside the universe of discourse")]
    InvalidFlags,
}

fn at_constituent(msg: &str, constituent: &Option<String>) -> String {
    match constituent {
        Some(c) => format!("{msg} (at constituent {c})"),
        None => msg.to_string(),
    }
}

impl Error {
    pub(crate) fn overflow() -> Self {
        Error::Overflow { constituent: None }
    }

    pub(crate) fn nesting() -> Self {
        Error::UninterpretableNesting { constituent: None }
    }

    /// Attaches the rendered constituent to per-vertex evaluation errors.
    pub(crate) fn at(self, rendered: impl FnOnce() -> String) -> Self {
        match self {
            Error::UninterpretableNesting { constituent: None } => Error::UninterpretableNesting {
                constituent: Some(rendered()),
            },
            Error::Overflow { constituent: None } => Error::Overflow {
                constituent: Some(rendered()),
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
