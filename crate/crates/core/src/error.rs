use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Variants split into two families: malformed input (text or JSON that does
/// not describe a valid object) and domain errors (a well-formed object that
/// violates an operation's precondition). See [`Error::is_input_error`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("letter {letter} out of range for a braid on {strands} strands")]
    LetterOutOfRange { letter: i64, strands: usize },

    #[error("variable mismatch: {0}")]
    VariableMismatch(String),

    #[error("generator x{0} has no variable under the abelianization")]
    UnmappedGenerator(usize),

    #[error("variable `{0}` has no image under the specialization")]
    UnmappedVariable(String),

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("presentation has {relators} relators and {generators} generators; deficiency one required")]
    DegenerateMatrix { relators: usize, generators: usize },

    #[error("exact division failed: {0}")]
    NotDivisible(String),

    #[error("polynomial support cannot be centered by a monomial shift")]
    AsymmetricSupport,

    #[error("unknown class `{0}`")]
    UnknownClass(String),

    #[error("arity mismatch: expected {expected}, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("braids have {0} and {1} strands")]
    StrandMismatch(usize, usize),

    #[error("closure of the braid has {0} components; a knot is required")]
    NotAKnot(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// True for errors caused by unparseable or structurally invalid input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::MalformedInput(_) | Error::LetterOutOfRange { .. } | Error::VariableMismatch(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
