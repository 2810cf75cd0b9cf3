use std::fmt;

use serde::Serialize;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A single failed poset axiom, with the witnessing element indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum PosetViolation {
    NotReflexive {
        element: usize,
    },
    NotAntisymmetric {
        a: usize,
        b: usize,
    },
    /// `a <= via <= b` holds but `a <= b` does not.
    NotTransitive {
        a: usize,
        via: usize,
        b: usize,
    },
}

impl fmt::Display for PosetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotReflexive { element } => write!(f, "not reflexive at {element}"),
            Self::NotAntisymmetric { a, b } => write!(f, "not antisymmetric at ({a}, {b})"),
            Self::NotTransitive { a, via, b } => {
                write!(f, "not transitive: {a} <= {via} <= {b} but not {a} <= {b}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("{what} of size {size} exceeds the configured limit of {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("more than {limit} maximal chains")]
    ChainLimitExceeded { limit: usize },
    #[error("ground set of size {size} exceeds the configured limit of {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },
    #[error("matrix shape {rows}x{cols} does not match {found} entries")]
    Shape {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("empty selection")]
    EmptySelection,
    #[error("unknown column index {0}")]
    UnknownColumn(usize),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("unknown element index {0}")]
    UnknownElement(usize),
    #[error("matrix has ghost entries but a boolean matrix is required")]
    NotBoolean,
    #[error("invalid poset: {}", join_display(.0))]
    InvalidPoset(Vec<PosetViolation>),
    #[error("the empty set is not a lattice")]
    EmptyLattice,
    #[error("elements {0} and {1} have no common upper bound")]
    NoJoin(usize, usize),
    #[error("elements {0} and {1} have no common lower bound")]
    NoMeet(usize, usize),
    #[error("elements {0} and {1} have no unique least upper bound or greatest lower bound")]
    NotUnique(usize, usize),
    #[error("map is not a sup-map: fails on subset {0:?}")]
    NotSupMap(Vec<usize>),
    #[error("map has length {found}, expected {expected}")]
    MapLength { expected: usize, found: usize },
    #[error("subset {0:?} is not c-independent")]
    NotIndependent(Vec<usize>),
    #[error("element {target} is not the join of {left} and {right}")]
    NotAJoinDecomposition {
        target: usize,
        left: usize,
        right: usize,
    },
    #[error("not a push at position {0}")]
    NotAPush(usize),
    #[error("{0:?} is not a strict chain")]
    NotAChain(Vec<usize>),
    #[error("{0:?} is not a maximal chain from top to bottom")]
    NotMaximalChain(Vec<usize>),
    #[error("hereditary family is empty")]
    EmptyFamily,
    #[error("family is not downward closed: {} subset(s) missing", .0.len())]
    NotDownwardClosed(Vec<(Vec<usize>, Vec<usize>)>),
    #[error("collection is not simple: loops {loops:?}, parallel pairs {parallel:?}")]
    NotSimple {
        loops: Vec<usize>,
        parallel: Vec<(usize, usize)>,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{what} needs at most {limit} elements, got {size}")]
    TooManyElements {
        what: &'static str,
        size: usize,
        limit: usize,
    },
}

impl Error {
    /// True for errors raised by an enumeration guard rather than bad input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Self::SizeLimitExceeded { .. }
                | Self::ChainLimitExceeded { .. }
                | Self::GroundSetTooLarge { .. }
                | Self::TooManyElements { .. }
        )
    }
}

fn join_display<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
