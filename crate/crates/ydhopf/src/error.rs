use thiserror::Error;

/// Crate-wide error type. Construction and checking operations return these;
/// verification reports (pass/fail with witnesses) are separate and never error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("no root of unity of order {n} in F_{p} ({n} does not divide {p}-1)")]
    NoSuchRoot { p: u64, n: u64 },
    #[error("group must have at least one cyclic factor")]
    EmptyOrderList,
    #[error("character image {value} does not have order dividing {order} in F_{p}")]
    BadCharacterOrder { value: u64, order: u32, p: u64 },
    #[error("group or field mismatch: {0}")]
    MismatchedGroup(String),
    #[error("objects live over different groups/fields: {0}")]
    MismatchedContext(String),
    #[error("action matrix mixes degrees: basis {from} (degree {from_deg}) maps onto basis {to} (degree {to_deg})")]
    GradingActionClash {
        from: usize,
        from_deg: String,
        to: usize,
        to_deg: String,
    },
    #[error("action matrices for generators {0} and {1} do not commute")]
    NonCommutingAction(usize, usize),
    #[error("action matrix for generator {gen} does not have order dividing {order}")]
    WrongActionOrder { gen: usize, order: u32 },
    #[error("generator `{0}` is not bound in the environment")]
    UnboundGenerator(String),
    #[error("type mismatch at {path}: {detail}")]
    TypeMismatch { path: String, detail: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is rank deficient (rank {rank}, need {need})")]
    RankDeficient { rank: usize, need: usize },
    #[error("inconsistent linear system while solving {0}")]
    InconsistentSystem(String),
    #[error("axiom `{axiom}` fails: {witness}")]
    AxiomFailure { axiom: String, witness: String },
    #[error("structure map `{0}` is not a Yetter-Drinfeld morphism")]
    NotYdMorphism(String),
    #[error("module law `{0}` fails: {1}")]
    ModuleAxiomFailure(String, String),
    #[error("braiding is not symmetric on the given pair of objects")]
    NonSymmetricBraiding,
    #[error("no antipode: the convolution system for S is inconsistent")]
    NoAntipode,
    #[error("antipode is not invertible")]
    NonInvertibleAntipode,
    #[error("basis would have {got} elements, exceeding the cap {cap} (set YDHOPF_BASIS_CAP to override)")]
    BasisCapExceeded { got: usize, cap: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
