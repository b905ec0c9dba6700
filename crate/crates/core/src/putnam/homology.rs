//! The total complex over ℚ and its homology with the induced transfer action.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::linalg::{column_basis, hstack, nullspace, rref, solve_in_basis};
use crate::algebra::{core_poly, IntMatrix, IntPolynomial, RationalMatrix};
use crate::error::{Error, Result};

use super::chain::{check_commutes, restrict, ChainCell, Context};
use super::presentation::SuPairPresentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyDegree {
    pub dimension: usize,
    #[serde(with = "crate::algebra::encoding::rat_matrix")]
    pub action: RationalMatrix,
}

impl HomologyDegree {
    /// Core polynomial of the action, scaled to a primitive integer polynomial.
    pub fn core_poly(&self) -> Result<IntPolynomial> {
        Ok(core_poly(&self.action)?.to_primitive_integer().0)
    }
}

/// Nonzero homology degrees with the action of the transfer map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedHomology {
    pub degrees: BTreeMap<i64, HomologyDegree>,
}

impl GradedHomology {
    pub fn dimension(&self, n: i64) -> usize {
        self.degrees.get(&n).map_or(0, |d| d.dimension)
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Action matrices keyed by degree.
    pub fn actions(&self) -> BTreeMap<i64, RationalMatrix> {
        self.degrees
            .iter()
            .map(|(&n, d)| (n, d.action.clone()))
            .collect()
    }
}

type Cell = (usize, usize);
type Components<T> = BTreeMap<(Cell, Cell), T>;

/// Summary of one grid cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSummary {
    pub l: usize,
    pub m: usize,
    pub generators: usize,
    pub dimension: usize,
}

/// The verified chain complex on the cap grid.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub cells: BTreeMap<Cell, ChainCell>,
    /// `(source, target) -> restricted differential component`
    pub maps: Components<RationalMatrix>,
}

impl ChainComplex {
    pub fn build(p: &SuPairPresentation) -> Result<Self> {
        let ctx = Context::new(p);
        let mut cells = BTreeMap::new();
        for l in 0..=p.l_max + 1 {
            let mut any = false;
            for m in 0..=p.m_max + 1 {
                match ctx.cell(l, m)? {
                    Some(c) => {
                        cells.insert((l, m), c);
                        any = true;
                    }
                    None => break,
                }
            }
            if !any {
                break;
            }
        }

        let mut raw: Components<IntMatrix> = BTreeMap::new();
        for (&(l, m), src) in &cells {
            if l > 0 {
                if let Some(tgt) = cells.get(&(l - 1, m)) {
                    let d = ctx.d_y(src, tgt);
                    check_commutes(src, tgt, &d, "face map")?;
                    raw.insert(((l, m), (l - 1, m)), d);
                }
            }
            if let Some(tgt) = cells.get(&(l, m + 1)) {
                let d = ctx.d_z(src, tgt);
                check_commutes(src, tgt, &d, "coface map")?;
                raw.insert(((l, m), (l, m + 1)), d);
            }
        }
        check_square_zero(&cells, &raw)?;

        for (&(l, m), c) in &cells {
            if (l > p.l_max || m > p.m_max) && c.dimension() > 0 {
                return Err(Error::CapExceeded {
                    l,
                    m,
                    l_max: p.l_max,
                    m_max: p.m_max,
                });
            }
        }
        cells.retain(|&(l, m), _| l <= p.l_max && m <= p.m_max);

        let mut maps = BTreeMap::new();
        for (&(s, t), d) in &raw {
            if let (Some(src), Some(tgt)) = (cells.get(&s), cells.get(&t)) {
                let component = if t.1 == s.1 { "face map" } else { "coface map" };
                maps.insert((s, t), restrict(src, tgt, d, component)?);
            }
        }
        Ok(Self { cells, maps })
    }

    pub fn summary(&self) -> Vec<CellSummary> {
        self.cells
            .values()
            .map(|c| CellSummary {
                l: c.l,
                m: c.m,
                generators: c.generators.len(),
                dimension: c.dimension(),
            })
            .collect()
    }

    /// Cells of total degree `n = L - M`, by increasing `L`.
    fn degree_cells(&self, n: i64) -> Vec<&ChainCell> {
        self.cells
            .values()
            .filter(|c| c.l as i64 - c.m as i64 == n && c.dimension() > 0)
            .collect()
    }

    /// The total differential `C_n → C_{n-1}` in the eventual-range bases.
    fn total_differential(&self, n: i64) -> RationalMatrix {
        let src = self.degree_cells(n);
        let tgt = self.degree_cells(n - 1);
        let rows: usize = tgt.iter().map(|c| c.dimension()).sum();
        let cols: usize = src.iter().map(|c| c.dimension()).sum();
        let mut d = RationalMatrix::zeros(rows, cols);
        let mut c0 = 0;
        for s in &src {
            let mut r0 = 0;
            for t in &tgt {
                if let Some(block) = self.maps.get(&((s.l, s.m), (t.l, t.m))) {
                    for i in 0..block.rows() {
                        for j in 0..block.cols() {
                            d[(r0 + i, c0 + j)] = block[(i, j)].clone();
                        }
                    }
                }
                r0 += t.dimension();
            }
            c0 += s.dimension();
        }
        d
    }

    pub fn homology(&self) -> Result<GradedHomology> {
        let degrees: Vec<i64> = {
            let mut v: Vec<i64> = self
                .cells
                .values()
                .filter(|c| c.dimension() > 0)
                .map(|c| c.l as i64 - c.m as i64)
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut out = BTreeMap::new();
        for n in degrees {
            let gamma = RationalMatrix::direct_sum(
                self.degree_cells(n).iter().map(|c| &c.range.restricted),
            );
            let kernel = nullspace(&self.total_differential(n));
            let image = column_basis(&self.total_differential(n + 1));
            let (_, pivots) = rref(&hstack(&image, &kernel));
            let complement: Vec<Vec<_>> = pivots
                .iter()
                .filter(|&&j| j >= image.cols())
                .map(|&j| kernel.column(j - image.cols()))
                .collect();
            if complement.is_empty() {
                continue;
            }
            let comp = RationalMatrix::from_columns(gamma.rows(), &complement);
            let basis = hstack(&image, &comp);
            let moved = gamma.checked_mul(&comp)?;
            let coords = solve_in_basis(&basis, &moved).ok_or(Error::NotAComplex { l: 0, m: 0 })?;
            let k = comp.cols();
            let skip = image.cols();
            let action = RationalMatrix::from_columns(
                k,
                &(0..k)
                    .map(|j| (0..k).map(|i| coords[(skip + i, j)].clone()).collect())
                    .collect::<Vec<_>>(),
            );
            out.insert(
                n,
                HomologyDegree {
                    dimension: k,
                    action,
                },
            );
        }
        Ok(GradedHomology { degrees: out })
    }
}

fn check_square_zero(cells: &BTreeMap<Cell, ChainCell>, raw: &Components<IntMatrix>) -> Result<()> {
    let compose = |a: Cell, b: Cell, c: Cell| -> Result<Option<IntMatrix>> {
        match (raw.get(&(a, b)), raw.get(&(b, c))) {
            (Some(first), Some(second)) => Ok(Some(second.checked_mul(first)?)),
            _ => Ok(None),
        }
    };
    for &(l, m) in cells.keys() {
        let fail = Error::NotAComplex { l, m };
        let s = (l, m);
        if l >= 2 {
            if let Some(dd) = compose(s, (l - 1, m), (l - 2, m))? {
                if !dd.is_zero() {
                    return Err(fail);
                }
            }
        }
        if let Some(dd) = compose(s, (l, m + 1), (l, m + 2))? {
            if !dd.is_zero() {
                return Err(fail);
            }
        }
        if l >= 1 {
            let a = compose(s, (l - 1, m), (l - 1, m + 1))?;
            let b = compose(s, (l, m + 1), (l - 1, m + 1))?;
            let sum = match (a, b) {
                (Some(a), Some(b)) => a.checked_add(&b)?,
                (Some(x), None) | (None, Some(x)) => x,
                (None, None) => continue,
            };
            if !sum.is_zero() {
                return Err(fail);
            }
        }
    }
    Ok(())
}

pub fn homology(p: &SuPairPresentation) -> Result<GradedHomology> {
    ChainComplex::build(p)?.homology()
}
