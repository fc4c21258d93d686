use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyvectorError {
    #[error("term z^{exps:?} ξ-mask {xi} violates the degree {d} grading at genus {genus}")]
    Grading { exps: Vec<u32>, xi: u16, d: i64, genus: u32 },
    #[error("term z^{exps:?} ξ-mask {xi} is outside F₃ ⊕ F_2g Λ²")]
    Shape { exps: Vec<u32>, xi: u16 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("target is not ι_dW-closed: defect in degree {degree}")]
    NotClosed { degree: u32 },
    #[error("linear system unsolvable in degree {degree}")]
    Unsolvable { degree: u32 },
    #[error("no decomposition reaching filtration order {order}")]
    NoDecomposition { order: u32 },
    #[error("vector field has a term of degree {degree} < 2")]
    LowOrderField { degree: u32 },
    #[error("hypothesis violated: α⁰ − W has a term z^{exps:?} below order {order}")]
    Hypothesis { exps: Vec<u32>, order: u32 },
    #[error("expected a Λ^{expected} element")]
    WrongDegree { expected: u32 },
}
