//! The subcommands, independent of argument parsing.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use sdh_core::algebra::{core_poly, IntMatrix, RationalMatrix};
use sdh_core::dimension::{
    compare_even_odd, signed_dimension_group, verify_shift_equivalence, Parity,
    ShiftEquivalenceCertificate,
};
use sdh_core::dynamics::DEFAULT_ORBIT_BUDGET;
use sdh_core::graph::SignedGraph;
use sdh_core::putnam::{
    diagonal_pair, lefschetz_rows, ChainComplex, GradedHomology, SuPairPresentation,
};
use sdh_core::zeta::{
    check_corollary, verify_series, zeta_from_actions, zeta_hom_manifold, zeta_sft, ZetaReport,
};
use sdh_core::Error;
use serde::Deserialize;

use crate::datasets::{self, DATASETS};
use crate::report::*;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_FAILED: u8 = 3;
pub const EXIT_ABORTED: u8 = 4;

pub const BUDGET_VAR: &str = "SDH_ORBIT_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, hint) = match &e {
            Error::CapExceeded { .. } => (EXIT_ABORTED, Some("raise Lmax/Mmax in the pair file")),
            Error::NotAComplex { .. } | Error::NotAChainMap { .. } => (EXIT_ABORTED, None),
            Error::InvarianceViolated { .. } => (
                EXIT_ABORTED,
                Some("raise k in the pair file or check the compatible pairs"),
            ),
            Error::OrbitBudgetExceeded { .. } => (
                EXIT_ABORTED,
                Some("lower the order or raise SDH_ORBIT_BUDGET"),
            ),
            Error::NonIntegralTrace(_) => (EXIT_ABORTED, None),
            _ => (EXIT_INPUT, None),
        };
        let message = match hint {
            Some(h) => format!("{e}\nhint: {h}"),
            None => e.to_string(),
        };
        Self { code, message }
    }
}

/// A report and whether everything it checks holds.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub verified: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.verified {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }
}

/// Reads a file, falling back to a bundled dataset of the same name (with or
/// without directory and `.json`).
pub fn load(arg: &str) -> Result<(String, String), CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read `{arg}`: {e}")))?;
        return Ok((arg.to_string(), text));
    }
    let stem = path
        .file_name()
        .and_then(|s| s.to_str())
        .map(|s| s.strip_suffix(".json").unwrap_or(s))
        .unwrap_or(arg);
    match datasets::get(stem) {
        Some(d) => Ok((d.name.to_string(), d.text.to_string())),
        None => Err(CliError::input(format!(
            "cannot read `{arg}`: no such file or bundled dataset (see `examples list`)"
        ))),
    }
}

fn parse<T: for<'de> Deserialize<'de>>(source: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::input(format!("{source}: {e}")))
}

pub fn orbit_budget() -> Result<u64, CliError> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::input(format!(
                "{BUDGET_VAR} must be a non-negative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_ORBIT_BUDGET),
    }
}

fn load_graph(arg: &str) -> Result<(String, SignedGraph), CliError> {
    let (source, text) = load(arg)?;
    let file = parse(&source, &text)?;
    let g = SignedGraph::from_file(&file).map_err(|e| CliError::input(format!("{source}: {e}")))?;
    Ok((source, g))
}

/// A pair file, or a graph file standing for its diagonal pair.
fn load_pair(arg: &str) -> Result<(String, SuPairPresentation), CliError> {
    let (source, text) = load(arg)?;
    let value: serde_json::Value = parse(&source, &text)?;
    let result = if value.get("E00").is_some() {
        SuPairPresentation::from_file(&parse(&source, &text)?)
    } else {
        SignedGraph::from_file(&parse(&source, &text)?).map(|g| diagonal_pair(&g))
    };
    let p = result.map_err(|e| CliError::input(format!("{source}: {e}")))?;
    Ok((source, p))
}

pub fn zeta(input: &str, order: usize, unsigned: bool) -> Result<Outcome, CliError> {
    if order < 1 {
        return Err(CliError::input("--order must be at least 1"));
    }
    let (source, mut g) = load_graph(input)?;
    if unsigned {
        g = g.unsigned();
    }
    let f = zeta_sft(&g);
    let ok = verify_series(&g, &f, order, orbit_budget()?)?;
    let report =
        ZetaReport::new(source, &f, order)?.with_verdict("series matches periodic points", ok);
    Ok(Outcome {
        report: Report::Zeta(report),
        verified: ok,
    })
}

pub fn dimgroup(input: &str, block: usize) -> Result<Outcome, CliError> {
    let (source, g) = load_graph(input)?;
    let data = signed_dimension_group(&g, block)?;
    Ok(Outcome {
        report: Report::Dimgroup(DimgroupReport { source, data }),
        verified: true,
    })
}

fn degree_reports(h: &GradedHomology) -> Result<Vec<DegreeReport>, CliError> {
    h.degrees
        .iter()
        .map(|(&degree, d)| {
            Ok(DegreeReport {
                degree,
                dimension: d.dimension,
                core_poly: d.core_poly()?,
                action: d.action.clone(),
            })
        })
        .collect()
}

pub fn homology(input: &str) -> Result<Outcome, CliError> {
    let (source, p) = load_pair(input)?;
    let complex = ChainComplex::build(&p)?;
    let h = complex.homology()?;
    Ok(Outcome {
        report: Report::Homology(HomologyReport {
            source,
            cells: complex.summary(),
            degrees: degree_reports(&h)?,
        }),
        verified: true,
    })
}

pub fn lefschetz(input: &str, n_max: usize) -> Result<Outcome, CliError> {
    if n_max < 1 {
        return Err(CliError::input("--n-max must be at least 1"));
    }
    let (source, p) = load_pair(input)?;
    let h = ChainComplex::build(&p)?.homology()?;
    let rows = lefschetz_rows(&p, &h, n_max, orbit_budget()?)?;
    let all_equal = rows.iter().all(|r| r.equal);
    Ok(Outcome {
        report: Report::Lefschetz(LefschetzReport {
            source,
            degrees: degree_reports(&h)?,
            rows,
            all_equal,
        }),
        verified: all_equal,
    })
}

pub fn verify_se(input: &str) -> Result<Outcome, CliError> {
    let (source, text) = load(input)?;
    let cert: ShiftEquivalenceCertificate = parse(&source, &text)?;
    let verified = verify_shift_equivalence(&cert)?;
    Ok(Outcome {
        report: Report::VerifySe(VerifySeReport {
            source,
            lag: cert.lag,
            core_poly_a: core_poly(&cert.a)?,
            core_poly_b: core_poly(&cert.b)?,
            a: cert.a,
            b: cert.b,
            verified,
        }),
        verified,
    })
}

/// Homology actions and manifold actions, with an optional parity.
#[derive(Debug, Clone, Deserialize)]
pub struct ActionData {
    pub q_parity: Option<Parity>,
    #[serde(with = "sdh_core::algebra::encoding::rat_action_map")]
    pub homology: BTreeMap<i64, RationalMatrix>,
    #[serde(with = "sdh_core::algebra::encoding::int_action_map")]
    pub manifold: BTreeMap<i64, IntMatrix>,
}

#[derive(Deserialize)]
struct RatActions(
    #[serde(with = "sdh_core::algebra::encoding::rat_action_map")] BTreeMap<i64, RationalMatrix>,
);

#[derive(Deserialize)]
struct IntActions(
    #[serde(with = "sdh_core::algebra::encoding::int_action_map")] BTreeMap<i64, IntMatrix>,
);

/// One combined file, or a homology file and a manifold file.
pub fn load_actions(
    inputs: &[String],
    parity: Option<Parity>,
) -> Result<(String, ActionData, Parity), CliError> {
    let (source, data) = match inputs {
        [one] => {
            let (source, text) = load(one)?;
            let data: ActionData = parse(&source, &text)?;
            (source, data)
        }
        [hom, man] => {
            let (s1, t1) = load(hom)?;
            let (s2, t2) = load(man)?;
            let RatActions(homology) = parse(&s1, &t1)?;
            let IntActions(manifold) = parse(&s2, &t2)?;
            (
                format!("{s1} + {s2}"),
                ActionData {
                    q_parity: None,
                    homology,
                    manifold,
                },
            )
        }
        _ => {
            return Err(CliError::input(
                "expected one combined file or a homology file and a manifold file",
            ))
        }
    };
    let parity = parity.or(data.q_parity).ok_or_else(|| {
        CliError::input("--q-parity is required when the input does not specify it")
    })?;
    Ok((source, data, parity))
}

pub fn compare_spectra(inputs: &[String], parity: Option<Parity>) -> Result<Outcome, CliError> {
    let (source, data, parity) = load_actions(inputs, parity)?;
    let comparison = compare_even_odd(parity, &data.homology, &data.manifold)?;
    let verified = comparison.equal;
    Ok(Outcome {
        report: Report::CompareSpectra(CompareReport { source, comparison }),
        verified,
    })
}

pub fn corollary(inputs: &[String], parity: Option<Parity>) -> Result<Outcome, CliError> {
    let (source, data, parity) = load_actions(inputs, parity)?;
    let hom = zeta_hom_manifold(&data.manifold)?;
    let signed = zeta_from_actions(&data.homology)?;
    let holds = check_corollary(parity, &hom, &signed);
    Ok(Outcome {
        report: Report::Corollary(CorollaryReport {
            source,
            parity,
            zeta_hom: hom.to_string(),
            zeta_signed: signed.to_string(),
            holds,
        }),
        verified: holds,
    })
}

pub fn examples_list() -> Outcome {
    Outcome {
        report: Report::Examples {
            datasets: DATASETS
                .iter()
                .map(|d| DatasetInfo {
                    name: d.name.to_string(),
                    kind: d.kind,
                    description: d.description.to_string(),
                })
                .collect(),
        },
        verified: true,
    }
}
