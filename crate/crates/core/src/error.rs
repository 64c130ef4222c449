use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero ideal cannot be represented")]
    ZeroIdeal,

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("ideal is not m-primary")]
    NotMPrimary,

    #[error("containment violated: {0}")]
    NotContained(String),

    #[error("characteristic {0} is not supported by the local engine (need a prime)")]
    BadCharacteristic(u64),

    #[error(
        "truncation certificate not reached by order {n_max}: \
         possibly not m-primary or N_max too small"
    )]
    CertificationFailed { n_max: usize },

    #[error("truncated ideals live at different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("truncated ideal at order {0} is not certified")]
    Uncertified(usize),

    #[error("truncation at order {order} needs {monomials} monomials, above the limit {limit}")]
    TruncationTooLarge {
        order: usize,
        monomials: usize,
        limit: usize,
    },

    #[error("no polynomial tail detected in a Hilbert table of {0} entries")]
    NoPolynomialTail(usize),

    #[error("not verified as a reduction within r_max = {0}")]
    NotAReduction(usize),

    #[error("syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown variable '{0}'")]
    UnknownVariable(String),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("invalid problem: {0}")]
    InvalidSpec(String),

    #[error("ideals belong to different rings")]
    RingMismatch,

    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("{source} (while computing n = {n})")]
    AtIndex {
        n: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at(self, n: usize) -> Self {
        match self {
            e @ Error::AtIndex { .. } => e,
            e => Error::AtIndex {
                n,
                source: Box::new(e),
            },
        }
    }

    /// Strips index context, exposing the underlying failure.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtIndex { source, .. } => source.root(),
            e => e,
        }
    }

    /// True for failures that a larger truncation order might cure.
    pub fn is_truncation_failure(&self) -> bool {
        matches!(
            self.root(),
            Error::Uncertified(_) | Error::CertificationFailed { .. }
        )
    }
}
