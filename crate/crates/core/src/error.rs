use core::fmt;

/// Errors produced by the letter-graph model, the constructions and the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Letter ids start at 1.
    ZeroLetter,
    /// A word or decoder mentions a letter above the alphabet size.
    LetterOutOfAlphabet { letter: u16, alphabet_size: usize },
    /// A subword position outside `1..=len`.
    PositionOutOfRange { position: usize, len: usize },
    /// Subword positions must be strictly increasing.
    PositionsNotIncreasing,
    /// A vertex outside `1..=n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge `{v, v}`.
    SelfLoop { vertex: usize },
    /// The same edge given twice.
    DuplicateEdge { u: usize, v: usize },
    /// Two objects that must have the same number of vertices do not.
    SizeMismatch { expected: usize, found: usize },
    /// A position-to-vertex map that is not a bijection onto `1..=n`.
    NotABijection,
    /// A size parameter that must be positive was zero.
    ZeroParameter { name: &'static str },
    /// The path lettering formula only holds from three vertices on.
    OutsideTheoremRange { n: usize },
    /// The request exceeds a hard desk-scale bound of an exact algorithm.
    CapabilityBound {
        what: &'static str,
        limit: usize,
        found: usize,
    },
    /// An internal self-check of a construction failed.
    ConstructionRejected { n: usize },
}

impl Error {
    /// Whether the error is a capability bound rather than invalid input.
    pub fn is_capability(&self) -> bool {
        matches!(self, Error::CapabilityBound { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroLetter => write!(f, "letter ids must be at least 1"),
            Error::LetterOutOfAlphabet {
                letter,
                alphabet_size,
            } => write!(
                f,
                "letter {letter} exceeds the alphabet size {alphabet_size}"
            ),
            Error::PositionOutOfRange { position, len } => {
                write!(f, "position {position} is outside 1..={len}")
            }
            Error::PositionsNotIncreasing => write!(f, "positions must be strictly increasing"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} is outside 1..={n}")
            }
            Error::SelfLoop { vertex } => write!(f, "loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
            Error::SizeMismatch { expected, found } => {
                write!(
                    f,
                    "size mismatch: expected {expected} vertices, found {found}"
                )
            }
            Error::NotABijection => write!(f, "position map is not a bijection onto the vertices"),
            Error::ZeroParameter { name } => write!(f, "{name} must be at least 1"),
            Error::OutsideTheoremRange { n } => write!(
                f,
                "the path lettering formula holds for n >= 3, got n = {n}"
            ),
            Error::CapabilityBound { what, limit, found } => {
                write!(f, "{what} is limited to {limit} vertices, got {found}")
            }
            Error::ConstructionRejected { n } => {
                write!(f, "constructed lettering for n = {n} failed verification")
            }
        }
    }
}

impl core::error::Error for Error {}
