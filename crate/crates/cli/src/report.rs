//! Command results, as JSON or plain text.

use std::fmt::{self, Write as _};

use sdh_core::algebra::encoding::{int_matrix, int_poly, rat_matrix};
use sdh_core::algebra::poly::format_poly;
use sdh_core::algebra::{IntMatrix, IntPolynomial, RationalMatrix, Ring};
use sdh_core::dimension::{DimensionGroupData, Parity, SpectraComparison};
use sdh_core::putnam::{CellSummary, LefschetzRow};
use sdh_core::zeta::ZetaReport;
use serde::{Deserialize, Serialize};

use crate::datasets::Kind;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimgroupReport {
    pub source: String,
    #[serde(flatten)]
    pub data: DimensionGroupData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub degree: i64,
    pub dimension: usize,
    #[serde(with = "int_poly")]
    pub core_poly: IntPolynomial,
    #[serde(with = "rat_matrix")]
    pub action: RationalMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub source: String,
    pub cells: Vec<CellSummary>,
    pub degrees: Vec<DegreeReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzReport {
    pub source: String,
    pub degrees: Vec<DegreeReport>,
    pub rows: Vec<LefschetzRow>,
    pub all_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySeReport {
    pub source: String,
    pub lag: u32,
    #[serde(with = "int_matrix")]
    pub a: IntMatrix,
    #[serde(with = "int_matrix")]
    pub b: IntMatrix,
    #[serde(with = "int_poly")]
    pub core_poly_a: IntPolynomial,
    #[serde(with = "int_poly")]
    pub core_poly_b: IntPolynomial,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub source: String,
    #[serde(flatten)]
    pub comparison: SpectraComparison,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub source: String,
    pub parity: Parity,
    pub zeta_hom: String,
    pub zeta_signed: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetInfo {
    pub name: String,
    pub kind: Kind,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Zeta(ZetaReport),
    Dimgroup(DimgroupReport),
    Homology(HomologyReport),
    Lefschetz(LefschetzReport),
    VerifySe(VerifySeReport),
    CompareSpectra(CompareReport),
    Corollary(CorollaryReport),
    Examples { datasets: Vec<DatasetInfo> },
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn poly_t(p: &IntPolynomial) -> String {
    format_poly(p.coeffs(), "t")
}

fn matrix_text<T: Ring + fmt::Display>(m: &sdh_core::algebra::Matrix<T>) -> String {
    if m.rows() == 0 {
        return "[]".into();
    }
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn degrees_text(out: &mut String, degrees: &[DegreeReport]) {
    if degrees.is_empty() {
        out.push_str("homology: zero in every degree\n");
    }
    for d in degrees {
        let _ = writeln!(
            out,
            "H_{}: dimension {}, core polynomial {}, action {}",
            d.degree,
            d.dimension,
            poly_t(&d.core_poly),
            matrix_text(&d.action)
        );
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        match self {
            Report::Zeta(z) => {
                let _ = writeln!(out, "source: {}", z.source);
                let _ = writeln!(out, "zeta: {}", z.function);
                let coeffs: Vec<String> =
                    z.series.coeffs().iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    out,
                    "series to z^{}: {}",
                    z.series.order(),
                    coeffs.join(", ")
                );
                for (name, ok) in &z.verdicts {
                    let _ = writeln!(out, "{name}: {}", verdict(*ok));
                }
            }
            Report::Dimgroup(d) => {
                let _ = writeln!(out, "source: {}", d.source);
                let _ = writeln!(out, "block length: {}", d.data.block);
                let _ = writeln!(out, "transfer matrix: {}", matrix_text(&d.data.transfer));
                let _ = writeln!(out, "rational dimension: {}", d.data.dimension);
                let _ = writeln!(out, "core polynomial: {}", poly_t(&d.data.core_poly));
                let _ = writeln!(
                    out,
                    "Bowen-Franks divisors: [{}]",
                    d.data.bowen_franks.join(", ")
                );
            }
            Report::Homology(h) => {
                let _ = writeln!(out, "source: {}", h.source);
                for c in &h.cells {
                    let _ = writeln!(
                        out,
                        "cell (L={}, M={}): {} generators, dimension {}",
                        c.l, c.m, c.generators, c.dimension
                    );
                }
                degrees_text(&mut out, &h.degrees);
            }
            Report::Lefschetz(l) => {
                let _ = writeln!(out, "source: {}", l.source);
                degrees_text(&mut out, &l.degrees);
                for r in &l.rows {
                    let _ = writeln!(
                        out,
                        "n={}: trace sum {}, signed count {} {}",
                        r.n,
                        r.lhs,
                        r.rhs,
                        verdict(r.equal)
                    );
                }
                let _ = writeln!(out, "lefschetz: {}", verdict(l.all_equal));
            }
            Report::VerifySe(v) => {
                let _ = writeln!(out, "source: {}", v.source);
                let _ = writeln!(out, "A: {}", matrix_text(&v.a));
                let _ = writeln!(out, "B: {}", matrix_text(&v.b));
                let _ = writeln!(out, "lag: {}", v.lag);
                let _ = writeln!(out, "core polynomial of A: {}", poly_t(&v.core_poly_a));
                let _ = writeln!(out, "core polynomial of B: {}", poly_t(&v.core_poly_b));
                let _ = writeln!(out, "shift equivalence: {}", verdict(v.verified));
            }
            Report::CompareSpectra(c) => {
                let _ = writeln!(out, "source: {}", c.source);
                let _ = writeln!(out, "parity: {}", parity_name(c.comparison.parity));
                let _ = writeln!(
                    out,
                    "left core polynomial: {}",
                    rational_poly(&c.comparison.left)
                );
                let _ = writeln!(
                    out,
                    "right core polynomial: {}",
                    rational_poly(&c.comparison.right)
                );
                let _ = writeln!(out, "spectra: {}", verdict(c.comparison.equal));
            }
            Report::Corollary(c) => {
                let _ = writeln!(out, "source: {}", c.source);
                let _ = writeln!(out, "parity: {}", parity_name(c.parity));
                let _ = writeln!(out, "homological zeta: {}", c.zeta_hom);
                let _ = writeln!(out, "zeta from signed homology: {}", c.zeta_signed);
                let _ = writeln!(out, "corollary: {}", verdict(c.holds));
            }
            Report::Examples { datasets } => {
                for d in datasets {
                    let kind = serde_json::to_value(d.kind).expect("kind serializes");
                    let _ = writeln!(
                        out,
                        "{:<24} {:<12} {}",
                        d.name,
                        kind.as_str().unwrap_or_default(),
                        d.description
                    );
                }
            }
        }
        f.write_str(&out)
    }
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

fn rational_poly(coeffs: &[String]) -> String {
    let parsed: Vec<num_rational::BigRational> = coeffs
        .iter()
        .map(|c| sdh_core::algebra::encoding::parse_rational(c).expect("written by the library"))
        .collect();
    format_poly(&parsed, "t")
}
