use thiserror::Error;

use crate::graph::Edge;
use crate::group::GroupElement;
use crate::rainbow::{CertifyReport, LemmaReport};
use crate::starter::StarterReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported parameter {parameter} for the {family} family: {reason}")]
    UnsupportedParameter {
        family: &'static str,
        parameter: u32,
        reason: String,
    },

    #[error("unknown group family `{0}` (expected dicyclic, abelian, semidihedral or modular)")]
    UnknownFamily(String),

    #[error("element {element} is not a normal form in {group}")]
    ElementOutOfRange {
        element: GroupElement,
        group: String,
    },

    #[error("loop at {0}: an edge needs two distinct endpoints")]
    LoopEdge(GroupElement),

    #[error("cannot parse {what} from `{input}`")]
    Parse { what: &'static str, input: String },

    #[error("starter is invalid:\n{0}")]
    InvalidStarter(StarterReport),

    #[error("construction integrity failure: {0}")]
    Integrity(IntegrityFailure),

    #[error("exhaustive starter search is limited to order {limit}, group has order {order}")]
    SearchTooLarge { order: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// A construction step produced something its own post-conditions reject.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegrityFailure {
    /// The union of stabilizer orbits of a block is not a perfect matching.
    BlockNotAMatching {
        block: usize,
    },
    /// The orbit of a base factor has the wrong length.
    OrbitLength {
        block: usize,
        expected: usize,
        found: usize,
    },
    /// Two factors claim the same edge.
    Overlap {
        edge: Edge,
        first: usize,
        second: usize,
    },
    FactorCount {
        expected: usize,
        found: usize,
    },
    UncoveredEdge(Edge),
    /// The base graph or the bridge edges violate a lemma condition.
    Lemma(LemmaReport),
    /// The assembled trees failed independent certification.
    Certification(CertifyReport),
}

impl std::fmt::Display for IntegrityFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::BlockNotAMatching { block } => {
                write!(f, "block {block} does not expand to a perfect matching")
            }
            Self::OrbitLength {
                block,
                expected,
                found,
            } => write!(
                f,
                "block {block} has {found} translates, expected the index {expected}"
            ),
            Self::Overlap {
                edge,
                first,
                second,
            } => write!(f, "edge {edge} lies in factors {first} and {second}"),
            Self::FactorCount { expected, found } => {
                write!(f, "{found} factors, expected {expected}")
            }
            Self::UncoveredEdge(e) => write!(f, "edge {e} lies in no factor"),
            Self::Lemma(r) => write!(f, "base graph rejected:\n{r}"),
            Self::Certification(r) => write!(f, "tree set rejected:\n{r}"),
        }
    }
}
