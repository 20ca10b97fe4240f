//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact Laurent division left a remainder.
    #[error("no exact Laurent quotient exists")]
    NonDivisible,

    /// Degree or minimal degree requested of the zero polynomial.
    #[error("the zero polynomial has no degree")]
    EmptySupport,

    /// Mediant of two rationals that are not Farey neighbors.
    #[error("{0}/{1} and {2}/{3} are not Farey neighbors")]
    NotNeighbors(u64, u64, u64, u64),

    /// A word that is not in the image of the substitution A→X, B→XY.
    #[error("word is not an {{A,B}}-recodable Christoffel word")]
    MalformedWord,

    /// Input violates a documented contract (bad rational, non-Markov
    /// polynomial, unparsable label, ...).
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// The label has no snake graph (t = 0/1; the count is 1 by convention).
    #[error("label {0}/{1} has no snake graph")]
    UnsupportedLabel(u64, u64),

    /// Brute-force matching enumeration would exceed the configured bound.
    #[error("graph has {count} perfect matchings, oracle bound is {bound}")]
    OracleBoundExceeded { count: String, bound: u64 },
}
