use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A vertex index falls outside the ground set `1..=m`.
    #[error("vertex {vertex} is outside the ground set 1..={m}")]
    BadVertex { vertex: usize, m: usize },

    /// Some ground-set vertex appears in no face.
    #[error("vertex {vertex} lies in no face (ghost vertices are rejected)")]
    GhostVertex { vertex: usize },

    /// A set of vertices was expected to be a face of the complex.
    #[error("the given vertex set is not a face of the complex")]
    NotAFace,

    /// The ground set (or a subset-iteration bound) exceeds a hard cap.
    #[error("ground set of size {m} exceeds the supported cap {max}")]
    TooLarge { m: usize, max: usize },

    /// A vertex-multiplicity list has the wrong length or a zero entry.
    #[error("multiplicity list must have one positive entry per vertex")]
    BadArity,

    /// The alleged subcomplex has a face that is not a face of the ambient complex.
    #[error("not a subcomplex: some face does not embed into the ambient complex")]
    NotASubcomplex,

    /// The two complexes of a germ pair do not share the same vertex set.
    #[error("vertex sets differ where equality is required")]
    VertexSetMismatch,

    /// An operation requires a weakly tight complex.
    #[error("the complex is not weakly tight")]
    NotWeaklyTight,

    /// The chosen vertex does not lie on any facet of minimal dimension.
    #[error("vertex {vertex} is not in V_mdim")]
    VertexNotMdim { vertex: usize },

    /// The pair handed to `extend` is not even structurally a germ.
    #[error("the pair (Y, L) is not a wt-germ")]
    NotAGerm,

    /// The Stanley-Reisner ideal has too many minimal generators for the Taylor oracle.
    #[error("{count} minimal non-faces exceed the Taylor oracle cap {max}")]
    TooManyGenerators { count: usize, max: usize },

    /// The modulus of a prime field is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A text-format parse failure.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
