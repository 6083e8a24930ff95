use thiserror::Error;

/// Errors surfaced by the symbolic pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("S-pair budget of {budget} exhausted in {context}")]
    BudgetExceeded { context: String, budget: u64 },

    #[error("genericity loop failed after {attempts} attempts in {context}{}",
            last_dim.map(|d| format!(" (last dimension seen: {d})")).unwrap_or_default())]
    GenericityFailure {
        context: String,
        attempts: u32,
        last_dim: Option<isize>,
    },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("selector enumeration produced {count} branches, exceeding the cap of {cap}")]
    SelectorExplosion { count: usize, cap: usize },

    #[error("failure locus of pair ({x_label}, {y_label}) has dimension {got} >= dim Y = {bound}")]
    WhitneyDimensionViolation {
        x_label: String,
        y_label: String,
        got: isize,
        bound: isize,
    },

    #[error("critical-value component {provenance} is the zero ideal; the output would not be nowhere dense (is the map dominant?)")]
    NonProperOutput { provenance: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
