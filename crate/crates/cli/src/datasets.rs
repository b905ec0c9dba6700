//! Example inputs bundled into the binary.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Graph,
    Pair,
    Certificate,
    Actions,
}

#[derive(Clone, Copy, Debug)]
pub struct Dataset {
    pub name: &'static str,
    pub kind: Kind,
    pub description: &'static str,
    pub text: &'static str,
}

macro_rules! dataset {
    ($name:literal, $kind:ident, $desc:literal) => {
        Dataset {
            name: $name,
            kind: Kind::$kind,
            description: $desc,
            text: include_str!(concat!("../examples/", $name, ".json")),
        }
    };
}

pub const DATASETS: &[Dataset] = &[
    dataset!("signed2shift", Graph, "full 2-shift with one negative loop"),
    dataset!("full2shift", Graph, "unsigned full 2-shift"),
    dataset!("fib", Graph, "golden mean shift, unsigned"),
    dataset!("mixed", Graph, "two-vertex graph with mixed signs"),
    dataset!(
        "signed2shift_diagonal",
        Pair,
        "diagonal pair of the signed 2-shift"
    ),
    dataset!(
        "fib_diagonal",
        Pair,
        "diagonal pair of the golden mean shift"
    ),
    dataset!(
        "fib_two_block",
        Pair,
        "golden mean shift on 2-blocks, first edge vs last edge"
    ),
    dataset!(
        "fib_non_covering",
        Pair,
        "2-block pair whose Y side is not left-covering"
    ),
    dataset!(
        "identity_cert",
        Certificate,
        "identity shift equivalence on Z^2"
    ),
    dataset!("two_cert", Certificate, "[2] with itself at lag 1"),
    dataset!(
        "fib_cert",
        Certificate,
        "golden mean matrix with itself, R = A, S = I"
    ),
    dataset!(
        "fib_cert_bad",
        Certificate,
        "golden mean matrix with R = S = I, not a certificate"
    ),
    dataset!(
        "torus",
        Actions,
        "hyperbolic toral automorphism [[1,1],[1,0]]"
    ),
    dataset!(
        "torus_tampered",
        Actions,
        "torus data with the top-degree sign flipped"
    ),
    dataset!(
        "cat_torus",
        Actions,
        "hyperbolic toral automorphism [[2,1],[1,1]]"
    ),
];

pub fn get(name: &str) -> Option<&'static Dataset> {
    DATASETS.iter().find(|d| d.name == name)
}
