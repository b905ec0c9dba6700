use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    DanglingEdge { edge: String, vertex: String },
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("edge `{edge}` has sign {sign}; expected -1 or +1")]
    BadSign { edge: String, sign: i64 },
    #[error("block level must be at least 1, got {0}")]
    BadBlockLevel(usize),
    #[error("period must be at least 1, got {0}")]
    BadPeriod(usize),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("denominator has a zero constant term")]
    PoleAtZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error(
        "{count} periodic points of period {period} exceed the enumeration budget of {budget}"
    )]
    OrbitBudgetExceeded {
        period: usize,
        count: String,
        budget: u64,
    },
    #[error("det(A^{period} - I) = 0; period-{period} points are not isolated")]
    DegeneratePeriod { period: usize },
    #[error("matrix determinant is {0}, expected +1 or -1")]
    NotUnimodular(String),
    #[error("lag must be at least 1")]
    BadLag,
    #[error("unknown edge `{edge}` in {graph}")]
    UnknownEdge { graph: &'static str, edge: String },
    #[error("pair ({h}, {k}) joins edges of different signs")]
    SignMismatch { h: String, k: String },
    #[error("edge `{edge}` of {graph} occurs in no compatible pair")]
    UncoveredEdge { graph: &'static str, edge: String },
    #[error("compatible pairs are not componentwise: ({h}, {k}) is implied but missing")]
    NotComponentwise { h: String, k: String },
    #[error("grid cell (L={l}, M={m}) lies outside the caps L<={l_max}, M<={m_max}")]
    CapExceeded {
        l: usize,
        m: usize,
        l_max: usize,
        m_max: usize,
    },
    #[error(
        "transfer map does not preserve the symmetric-group structure at (L={l}, M={m}): {detail}"
    )]
    InvarianceViolated { l: usize, m: usize, detail: String },
    #[error("{component} at (L={l}, M={m}) does not commute with the transfer map; raise k or use a presentation whose coordinate projections are left/right covering")]
    NotAChainMap {
        l: usize,
        m: usize,
        component: &'static str,
    },
    #[error("d o d != 0 at (L={l}, M={m}); raise k or check the presentation")]
    NotAComplex { l: usize, m: usize },
    #[error("alternating trace {0} is not an integer")]
    NonIntegralTrace(String),
    #[error("{0}")]
    Parse(String),
}
