use thiserror::Error;

/// Errors raised while building, reading or checking simplicial objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension {0} exceeds the supported maximum")]
    DimensionTooLarge(usize),
    #[error("duplicate simplex id `{0}`")]
    DuplicateId(String),
    #[error("unknown simplex id `{0}`")]
    UnknownId(String),
    #[error("simplex `{id}` of dimension {dim} lists {found} faces")]
    FaceCount {
        id: String,
        dim: usize,
        found: usize,
    },
    #[error("face d{face} of simplex `{id}` has dimension {found}, expected {expected}")]
    FaceDimension {
        id: String,
        face: usize,
        expected: usize,
        found: usize,
    },
    #[error("face expression d{face} of simplex `{id}` is not a valid expression")]
    FaceExpression { id: String, face: usize },
    #[error("simplicial identity d{i} d{j} = d{} d{i} fails at simplex `{id}`", .j - 1)]
    SimplicialIdentity { id: String, i: usize, j: usize },
    #[error("map `{map}` has no value for simplex `{id}`")]
    MissingValue { map: String, id: String },
    #[error("map `{map}` sends simplex `{id}` to an expression of the wrong dimension")]
    ValueDimension { map: String, id: String },
    #[error("map `{map}` does not commute with face d{face} at simplex `{id}`")]
    FaceCommutation {
        map: String,
        id: String,
        face: usize,
    },
    #[error("maps are not composable: {0}")]
    NotComposable(String),
    #[error("codomain mismatch: `{0}` vs `{1}`")]
    CodomainMismatch(String, String),
    #[error("map `{0}` is not a monomorphism")]
    NotMono(String),
    #[error("invalid lifting square: {0}")]
    InvalidSquare(String),
}

pub type Result<T, E = SimplicialError> = std::result::Result<T, E>;
