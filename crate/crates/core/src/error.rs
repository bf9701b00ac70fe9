use thiserror::Error;

use crate::cartan::AlgebraLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed algebra label `{input}` at column {column}: {reason}")]
    LabelSyntax {
        input: String,
        column: usize,
        reason: String,
    },

    #[error("illegal algebra label {family}{rank}^{twist}: {reason}")]
    IllegalLabel {
        family: char,
        rank: usize,
        twist: u8,
        reason: String,
    },

    #[error("{label} is of finite type; this operation needs an affine Cartan datum")]
    NotAffine { label: AlgebraLabel },

    #[error("{label} is twisted; this operation is only defined for untwisted data")]
    Twisted { label: AlgebraLabel },

    #[error("node index {index} out of range for {label} (nodes 0..={max})")]
    NodeOutOfRange {
        label: AlgebraLabel,
        index: usize,
        max: usize,
    },

    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch {
        left: AlgebraLabel,
        right: AlgebraLabel,
    },

    #[error("character terms have mixed levels ({first} and {second})")]
    MixedLevels { first: i64, second: i64 },

    #[error("{what} {coords:?} is not dominant")]
    NotDominant {
        what: &'static str,
        coords: Vec<i64>,
    },

    #[error("permutation {perm:?} is not an automorphism of the {label} diagram")]
    InvalidPermutation {
        label: AlgebraLabel,
        perm: Vec<usize>,
    },

    #[error("group element does not stabilize the fundamental chamber")]
    NotChamberStabilizing,

    #[error("vertex {vertex} of {label} is not special")]
    NotSpecial { label: AlgebraLabel, vertex: usize },

    #[error("coweight node {node} of {label} is not minuscule (mark {mark})")]
    NotMinuscule {
        label: AlgebraLabel,
        node: usize,
        mark: i64,
    },

    #[error("{coords:?} does not lie in the translation lattice of {label} at vertex {vertex}")]
    NotInLattice {
        label: AlgebraLabel,
        vertex: usize,
        coords: Vec<i64>,
    },

    #[error("({label}, node {node}) is {reason}")]
    NotCovered {
        label: AlgebraLabel,
        node: usize,
        reason: &'static str,
    },

    #[error("not a module character: {0}")]
    NotModuleCharacter(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
