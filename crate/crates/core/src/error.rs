use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("k must be between 2 and {max}, got {got}")]
    InvalidK { got: usize, max: usize },

    #[error("q must be between 1 and {max}, got {got}")]
    InvalidQ { got: u32, max: u32 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("point {0:?} is not a vertex of the simplex")]
    UnknownPoint(Vec<u32>),

    #[error("labeling is not Sperner: vertex {vertex} has color {color}")]
    NotSperner { vertex: usize, color: u8 },

    #[error("labeling covers {got} vertices, expected {expected}")]
    LabelingSize { expected: usize, got: usize },

    #[error("color threshold j={j} outside 1..={k}")]
    ColorThreshold { j: usize, k: usize },

    #[error("labeling space holds {size} labelings, over the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u64 },

    #[error("{field} in file ({got}) does not match the requested value ({expected})")]
    FileMismatch {
        field: &'static str,
        expected: u64,
        got: u64,
    },

    #[error("q range is empty")]
    EmptyRange,

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}
