use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("hyperplane {index} is the zero form")]
    ZeroForm { index: usize },
    #[error("hyperplanes {first} and {second} are proportional")]
    DuplicateHyperplane { first: usize, second: usize },
    #[error("hyperplane {index} has {found} coefficients, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, found: usize },
    #[error("arrangement has no hyperplanes")]
    Empty,
    #[error("unsupported builtin `{0}`")]
    UnsupportedBuiltin(String),
    #[error("could not find a generic configuration after {0} attempts")]
    GenericityFailure(usize),
    #[error("no transversal section found after {0} attempts")]
    SectionFailure(usize),
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a triple-point arrangement: vertex of multiplicity {0}")]
    NotTriplePointArrangement(usize),
    #[error("triple-point module bound violated: s = {s} > d - 2 = {bound}")]
    BoundViolated { s: usize, bound: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("inconsistent spectrum: {0}")]
    InconsistentSpectrum(String),
    #[error("negative superabundance: {0}")]
    NegativeSigma(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::ZeroForm { .. } => "ZeroForm",
            Error::DuplicateHyperplane { .. } => "DuplicateHyperplane",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::Empty => "EmptyArrangement",
            Error::UnsupportedBuiltin(_) => "UnsupportedBuiltin",
            Error::GenericityFailure(_) => "GenericityFailure",
            Error::SectionFailure(_) => "SectionFailure",
            Error::InvalidDimension(_) => "InvalidDimension",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::NotTriplePointArrangement(_) => "NotTriplePointArrangement",
            Error::BoundViolated { .. } => "BoundViolated",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::InconsistentSpectrum(_) => "InconsistentSpectrum",
            Error::NegativeSigma(_) => "NegativeSigma",
        }
    }

    /// True for errors that indicate a broken invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::GenericityFailure(_)
                | Error::SectionFailure(_)
                | Error::BoundViolated { .. }
                | Error::InternalInconsistency(_)
                | Error::InconsistentSpectrum(_)
                | Error::NegativeSigma(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
