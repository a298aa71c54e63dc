//! Combinatorial complexes (finite ranked posets with the diamond property)
//! and their zigzag structure.
//!
//! A d-dimensional complex is stored as an explicit Hasse diagram: elements
//! carry a dimension in `0..=d` and the list of elements they cover one rank
//! below; the bottom and top elements are implicit. On top of that sit flag
//! enumeration, the sigma operators and the translation operator, zigzag
//! decompositions with signatures and intersection vectors, the Wythoff
//! kaleidoscope construction, combinatorial automorphism groups, and the
//! flag-system view of maps with the six triality operations.

pub mod complex;
pub mod error;
pub mod families;
pub mod flags;
pub mod hasse;
pub mod maps;
pub mod ops;
pub mod symmetry;
pub mod wythoff;
pub mod zigzag;

pub mod util;

pub use complex::{Complex, DiamondTable, FaceRef, ValidationReport};
pub use error::Error;
pub use flags::{Flag, FlagIndex};
pub use zigzag::{IntersectionVector, Signature, Zigzag, ZigzagDecomposition};

/// Default cap on the number of flags an analysis is allowed to enumerate.
pub const DEFAULT_FLAG_CAP: u64 = 50_000_000;

/// Effective flag cap: `ZIGZAG_FLAG_CAP` from the environment, else the default.
pub fn flag_cap_from_env() -> u64 {
    std::env::var("ZIGZAG_FLAG_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_FLAG_CAP)
}
