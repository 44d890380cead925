use thiserror::Error;

use crate::graph::TwinReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("red vertex {red} and blue vertex {blue} are twins and cannot be separated")]
    Unseparable { red: usize, blue: usize },

    #[error("graph is not twin-free ({} non-singleton twin classes)", .0.non_trivial().count())]
    NotTwinFree(TwinReport),

    #[error("no solution of size at most {budget}")]
    Infeasible { budget: usize },

    #[error("graph order {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("family members {first} and {second} are equal")]
    NoDistinctFamily { first: usize, second: usize },

    #[error("family has {sets} sets over a ground set of {ground}")]
    FamilySize { sets: usize, ground: usize },

    #[error("element {element} is covered by no set")]
    Uncoverable { element: usize },

    #[error("graph contains triangle {0:?}")]
    NotTriangleFree((usize, usize, usize)),

    #[error("maximum degree {0} is below 3")]
    DegreeTooSmall(usize),

    #[error("graph is not a tree")]
    NotATree,

    #[error("tree has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },

    #[error("root vertex {0} is a leaf")]
    XIsLeaf(usize),

    #[error("smaller color class has {0} vertices, expected exactly 1")]
    WrongClassSize(usize),

    #[error("enumeration up to size {bound} exceeds node budget {budget}")]
    BudgetExceeded { bound: usize, budget: u64 },

    #[error("invalid part sizes: {0}")]
    InvalidParts(String),

    #[error("pivot vertex {vertex} has degree {degree}, expected 2")]
    BadPivot { vertex: usize, degree: usize },

    #[error("literal {0} occurs more than twice")]
    LiteralCapExceeded(i32),

    #[error("invalid SAT instance: {0}")]
    InvalidSat(String),

    #[error("no twin-free sample after {attempts} attempts")]
    TwinFreeUnreachable { attempts: usize },

    #[error("invalid generator spec: {0}")]
    Spec(String),

    #[error("coloring has {got} entries, graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
