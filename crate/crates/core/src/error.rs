use crate::complex::FaceRef;

/// Errors reported by constructions and analyses.
///
/// Axiom violations discovered by `validate` are reported, not thrown; this
/// type covers precondition violations and resource caps.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("sigma index {index} out of range 1..={max}")]
    SigmaIndexOutOfRange { index: usize, max: usize },

    #[error("flag cap exceeded: complex has {count} flags, cap is {cap} (set ZIGZAG_FLAG_CAP or --flag-cap to raise)")]
    FlagCapExceeded { count: u64, cap: u64 },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("{face:?} is not a facet (expected dimension {expected})")]
    NotAFacet { face: FaceRef, expected: usize },

    #[error("the given map is not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("involution fixes {0:?}; folding requires a fixed-point free involution")]
    InvolutionHasFixedElement(FaceRef),

    #[error("vertex set is not independent: vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),

    #[error("Wythoff subset is empty or out of range 0..={0}")]
    BadRingedSubset(usize),

    #[error("construction produced an invalid complex: {0}")]
    InvalidResult(String),

    #[error("invalid flag system: {0}")]
    InvalidFlagSystem(String),

    #[error("map is not orientable")]
    NotOrientable,

    #[error("{file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
