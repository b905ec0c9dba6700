//! Chain spaces and differentials of the signed double complex.
//!
//! Let `V = ℚ[length-k paths of G_{L,M}]`. A path of `G_{L,M}` is the same
//! thing as `L + 1` paths of `H` and `M + 1` paths of `K` with a common image
//! word in `X`. The quotient by the `Y`-side subgroup `B` and the
//! sign-isotypic part for the `Z`-side action are both identified with
//! `U = ℚ[generators]`, where a generator lists distinct `Y` paths in
//! increasing order and distinct `Z` paths in increasing order. The
//! projection `V → U` sends a tuple with a repeated coordinate to 0 and any
//! other tuple to `sign(sort) * sorted tuple`; its kernel on the `Y` side is
//! exactly `B`. The transfer map, the face maps and the coface maps are all
//! computed on generators and projected back.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::algebra::linalg::solve_in_basis;
use crate::algebra::{eventual_range, EventualRange, IntMatrix, RationalMatrix};
use crate::error::{Error, Result};
use crate::graph::{enumerate_paths, Path, SignedGraph};

use super::presentation::SuPairPresentation;

/// Distinct `Y` paths and distinct `Z` paths, each strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub ys: Vec<usize>,
    pub zs: Vec<usize>,
}

pub(crate) struct PathTable {
    pub paths: Vec<Path>,
    index: HashMap<Vec<usize>, usize>,
    pub words: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

impl PathTable {
    fn new(g: &SignedGraph, blocks: &[usize], k: usize) -> Self {
        let paths = enumerate_paths(g, k);
        let index = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.edges.clone(), i))
            .collect();
        let words = paths
            .iter()
            .map(|p| p.edges.iter().map(|&e| blocks[e]).collect())
            .collect();
        Self {
            paths,
            index,
            words,
            incoming: g.in_edges(),
        }
    }

    /// The path `e` followed by all but the last edge of path `i`.
    fn prepend(&self, e: usize, i: usize) -> usize {
        let p = &self.paths[i].edges;
        let mut key = Vec::with_capacity(p.len());
        key.push(e);
        key.extend_from_slice(&p[..p.len() - 1]);
        self.index[&key]
    }
}

/// Sorts `v` and returns the sign of the sorting permutation, or `None` if
/// two entries are equal.
fn sort_with_sign(v: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some(sign)
}

/// The projection `V → U` on a single tuple.
fn project(mut ys: Vec<usize>, mut zs: Vec<usize>) -> Option<(Generator, i64)> {
    let sy = sort_with_sign(&mut ys)?;
    let sz = sort_with_sign(&mut zs)?;
    Some((Generator { ys, zs }, sy * sz))
}

fn accumulate(terms: Vec<(Generator, i64)>) -> BTreeMap<Generator, i64> {
    let mut out = BTreeMap::new();
    for (g, c) in terms {
        *out.entry(g).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn combinations(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    fn go(
        items: &[usize],
        r: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < r - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, r, 0, &mut Vec::with_capacity(r), &mut out);
    out
}

/// Path tables for a presentation at its block level.
pub struct Context<'a> {
    pub(crate) p: &'a SuPairPresentation,
    pub(crate) hp: PathTable,
    pub(crate) kp: PathTable,
    /// image word -> (H paths, K paths) with that image
    by_word: BTreeMap<Vec<usize>, (Vec<usize>, Vec<usize>)>,
}

impl<'a> Context<'a> {
    pub fn new(p: &'a SuPairPresentation) -> Self {
        let hp = PathTable::new(p.y_graph(), p.y_blocks(), p.level);
        let kp = PathTable::new(p.z_graph(), p.z_blocks(), p.level);
        let mut by_word: BTreeMap<Vec<usize>, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (i, w) in hp.words.iter().enumerate() {
            by_word.entry(w.clone()).or_default().0.push(i);
        }
        for (i, w) in kp.words.iter().enumerate() {
            by_word.entry(w.clone()).or_default().1.push(i);
        }
        Self { p, hp, kp, by_word }
    }

    pub fn generators(&self, l: usize, m: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        for (hs, ks) in self.by_word.values() {
            if hs.len() < l + 1 || ks.len() < m + 1 {
                continue;
            }
            let zsets = combinations(ks, m + 1);
            for ys in combinations(hs, l + 1) {
                for zs in &zsets {
                    out.push(Generator {
                        ys: ys.clone(),
                        zs: zs.clone(),
                    });
                }
            }
        }
        out.sort();
        out
    }

    pub fn label(&self, g: &Generator) -> String {
        let (h, k) = (self.p.y_graph(), self.p.z_graph());
        let ys: Vec<String> = g.ys.iter().map(|&i| self.hp.paths[i].label(h)).collect();
        let zs: Vec<String> = g.zs.iter().map(|&i| self.kp.paths[i].label(k)).collect();
        format!("({}|{})", ys.join(","), zs.join(","))
    }

    /// Transfer map on one (not necessarily canonical) tuple of paths,
    /// projected to `U`.
    fn gamma_terms(&self, ys: &[usize], zs: &[usize]) -> Vec<(Generator, i64)> {
        let last = *self.hp.paths[ys[0]].edges.last().unwrap();
        let weight = self.p.y_graph().edge(last).sign.value();
        let mut out = Vec::new();
        for b in 0..self.p.block_count() {
            let cand = |table: &PathTable, blocks: &[usize], i: usize| -> Vec<usize> {
                table.incoming[table.paths[i].start]
                    .iter()
                    .copied()
                    .filter(|&e| blocks[e] == b)
                    .collect()
            };
            let mut choices: Vec<Vec<usize>> = ys
                .iter()
                .map(|&i| cand(&self.hp, self.p.y_blocks(), i))
                .collect();
            choices.extend(zs.iter().map(|&i| cand(&self.kp, self.p.z_blocks(), i)));
            if choices.iter().any(Vec::is_empty) {
                continue;
            }
            let off = ys.len();
            let mut pick = vec![0usize; choices.len()];
            'outer: loop {
                let new_ys: Vec<usize> = ys
                    .iter()
                    .enumerate()
                    .map(|(c, &i)| self.hp.prepend(choices[c][pick[c]], i))
                    .collect();
                let new_zs: Vec<usize> = zs
                    .iter()
                    .enumerate()
                    .map(|(c, &i)| self.kp.prepend(choices[off + c][pick[off + c]], i))
                    .collect();
                if let Some((g, s)) = project(new_ys, new_zs) {
                    out.push((g, s * weight));
                }
                for c in (0..pick.len()).rev() {
                    pick[c] += 1;
                    if pick[c] < choices[c].len() {
                        continue 'outer;
                    }
                    pick[c] = 0;
                }
                break;
            }
        }
        out
    }

    /// Builds the chain space at `(l, m)`; `None` when there are no
    /// generators.
    pub fn cell(&self, l: usize, m: usize) -> Result<Option<ChainCell>> {
        let generators = self.generators(l, m);
        if generators.is_empty() {
            return Ok(None);
        }
        let index: HashMap<Generator, usize> = generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let n = generators.len();
        let mut gamma = IntMatrix::zeros(n, n);
        let mut images = Vec::with_capacity(n);
        for (col, u) in generators.iter().enumerate() {
            let img = accumulate(self.gamma_terms(&u.ys, &u.zs));
            for (g, c) in &img {
                let row = index.get(g).ok_or_else(|| Error::InvarianceViolated {
                    l,
                    m,
                    detail: format!("image of {} leaves the generator set", self.label(u)),
                })?;
                gamma[(*row, col)] += BigInt::from(*c);
            }
            images.push(img);
        }
        self.check_invariance(l, m, &generators, &images)?;
        let range = eventual_range(&gamma.to_rational())?;
        Ok(Some(ChainCell {
            l,
            m,
            generators,
            index,
            gamma,
            range,
        }))
    }

    /// `γ(q·τ - sign(τ) q) ∈ B` and `γ(p) ∈ B` for degenerate `p`, checked on
    /// adjacent transpositions and adjacent duplications of every generator,
    /// on both sides.
    fn check_invariance(
        &self,
        l: usize,
        m: usize,
        generators: &[Generator],
        images: &[BTreeMap<Generator, i64>],
    ) -> Result<()> {
        let fail = |u: &Generator, what: &str| Error::InvarianceViolated {
            l,
            m,
            detail: format!("{what} at {}", self.label(u)),
        };
        let negated = |img: &BTreeMap<Generator, i64>| -> BTreeMap<Generator, i64> {
            img.iter().map(|(g, c)| (g.clone(), -c)).collect()
        };
        for (u, img) in generators.iter().zip(images) {
            let minus = negated(img);
            for i in 0..u.ys.len().saturating_sub(1) {
                let mut ys = u.ys.clone();
                ys.swap(i, i + 1);
                if accumulate(self.gamma_terms(&ys, &u.zs)) != minus {
                    return Err(fail(u, "Y transposition"));
                }
                ys[i] = ys[i + 1];
                if !accumulate(self.gamma_terms(&ys, &u.zs)).is_empty() {
                    return Err(fail(u, "Y degenerate tuple"));
                }
            }
            for j in 0..u.zs.len().saturating_sub(1) {
                let mut zs = u.zs.clone();
                zs.swap(j, j + 1);
                if accumulate(self.gamma_terms(&u.ys, &zs)) != minus {
                    return Err(fail(u, "Z transposition"));
                }
            }
        }
        Ok(())
    }

    /// `sum_i (-1)^i δ_i`, deleting `Y` coordinates.
    pub fn d_y(&self, src: &ChainCell, tgt: &ChainCell) -> IntMatrix {
        let mut d = IntMatrix::zeros(tgt.generators.len(), src.generators.len());
        for (col, u) in src.generators.iter().enumerate() {
            for i in 0..u.ys.len() {
                let mut ys = u.ys.clone();
                ys.remove(i);
                let g = Generator {
                    ys,
                    zs: u.zs.clone(),
                };
                let row = tgt.index[&g];
                d[(row, col)] += BigInt::from(if i % 2 == 0 { 1 } else { -1 });
            }
        }
        d
    }

    /// `(-1)^L sum_j (-1)^j δ*_j`: the sum over all ways to insert a new
    /// compatible `Z` path, signed by its sorted position.
    pub fn d_z(&self, src: &ChainCell, tgt: &ChainCell) -> IntMatrix {
        let outer = if src.l.is_multiple_of(2) { 1 } else { -1 };
        let mut d = IntMatrix::zeros(tgt.generators.len(), src.generators.len());
        for (col, u) in src.generators.iter().enumerate() {
            let word = &self.hp.words[u.ys[0]];
            let ks = &self.by_word[word].1;
            for &z in ks {
                if u.zs.contains(&z) {
                    continue;
                }
                let r = u.zs.iter().filter(|&&x| x < z).count();
                let mut zs = u.zs.clone();
                zs.insert(r, z);
                let g = Generator {
                    ys: u.ys.clone(),
                    zs,
                };
                let row = tgt.index[&g];
                d[(row, col)] += BigInt::from(if r % 2 == 0 { outer } else { -outer });
            }
        }
        d
    }
}

/// The space `U_{L,M}` with its transfer map and eventual range.
#[derive(Clone, Debug)]
pub struct ChainCell {
    pub l: usize,
    pub m: usize,
    pub generators: Vec<Generator>,
    index: HashMap<Generator, usize>,
    /// Transfer map on `U_{L,M}`, columns are images.
    pub gamma: IntMatrix,
    /// The rationalized inductive limit inside `U_{L,M}`.
    pub range: EventualRange,
}

impl ChainCell {
    pub fn dimension(&self) -> usize {
        self.range.dimension()
    }
}

/// The two components of the differential out of `(L, M)` on generators.
#[derive(Clone, Debug)]
pub struct Differential {
    /// Into `(L-1, M)`; `None` when `L = 0` or the target has no generators.
    pub to_y: Option<IntMatrix>,
    /// Into `(L, M+1)`; `None` when the target has no generators.
    pub to_z: Option<IntMatrix>,
}

pub fn chain_space(p: &SuPairPresentation, l: usize, m: usize) -> Result<Option<ChainCell>> {
    check_caps(p, l, m)?;
    Context::new(p).cell(l, m)
}

/// Differential out of `(l, m)`, after checking that each component
/// commutes with the transfer maps.
pub fn differential(p: &SuPairPresentation, l: usize, m: usize) -> Result<Differential> {
    check_caps(p, l, m)?;
    let ctx = Context::new(p);
    let Some(src) = ctx.cell(l, m)? else {
        return Ok(Differential {
            to_y: None,
            to_z: None,
        });
    };
    let to_y = match l.checked_sub(1) {
        Some(l1) => match ctx.cell(l1, m)? {
            Some(tgt) => {
                let d = ctx.d_y(&src, &tgt);
                check_commutes(&src, &tgt, &d, "face map")?;
                Some(d)
            }
            None => None,
        },
        None => None,
    };
    let to_z = match ctx.cell(l, m + 1)? {
        Some(tgt) => {
            let d = ctx.d_z(&src, &tgt);
            check_commutes(&src, &tgt, &d, "coface map")?;
            Some(d)
        }
        None => None,
    };
    Ok(Differential { to_y, to_z })
}

fn check_caps(p: &SuPairPresentation, l: usize, m: usize) -> Result<()> {
    if l > p.l_max || m > p.m_max {
        return Err(Error::CapExceeded {
            l,
            m,
            l_max: p.l_max,
            m_max: p.m_max,
        });
    }
    Ok(())
}

pub(crate) fn check_commutes(
    src: &ChainCell,
    tgt: &ChainCell,
    d: &IntMatrix,
    component: &'static str,
) -> Result<()> {
    if tgt.gamma.checked_mul(d)? != d.checked_mul(&src.gamma)? {
        return Err(Error::NotAChainMap {
            l: src.l,
            m: src.m,
            component,
        });
    }
    Ok(())
}

/// The differential restricted to the eventual ranges, in their bases.
pub(crate) fn restrict(
    src: &ChainCell,
    tgt: &ChainCell,
    d: &IntMatrix,
    component: &'static str,
) -> Result<RationalMatrix> {
    let image = d.to_rational().checked_mul(&src.range.basis)?;
    solve_in_basis(&tgt.range.basis, &image).ok_or(Error::NotAChainMap {
        l: src.l,
        m: src.m,
        component,
    })
}
