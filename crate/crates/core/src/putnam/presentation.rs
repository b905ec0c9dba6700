//! Symbolic presentations of signed s/u-bijective pairs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{enumerate_paths, higher_block, GraphFile, SignedGraph};

pub const DEFAULT_CAP: usize = 4;

fn default_k() -> usize {
    1
}

fn default_cap() -> usize {
    DEFAULT_CAP
}

/// The pair file format, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFile {
    #[serde(rename = "Y")]
    pub y: GraphFile,
    #[serde(rename = "Z")]
    pub z: GraphFile,
    #[serde(rename = "E00")]
    pub e00: Vec<(String, String)>,
    #[serde(default = "default_k")]
    pub k: usize,
    #[serde(rename = "Lmax", default = "default_cap")]
    pub l_max: usize,
    #[serde(rename = "Mmax", default = "default_cap")]
    pub m_max: usize,
}

/// Two signed graphs `H` (presenting `Y`) and `K` (presenting `Z`) with the
/// set of compatible edge pairs.
///
/// The pairs must be componentwise: they split into complete bipartite
/// blocks, one per edge of the underlying presentation of `X`, so that two
/// edges are compatible exactly when they have the same image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuPairPresentation {
    h: SignedGraph,
    k: SignedGraph,
    pairs: Vec<(usize, usize)>,
    h_block: Vec<usize>,
    k_block: Vec<usize>,
    block_count: usize,
    pub level: usize,
    pub l_max: usize,
    pub m_max: usize,
}

impl SuPairPresentation {
    pub fn new(
        h: SignedGraph,
        k: SignedGraph,
        pairs: &[(String, String)],
        level: usize,
        l_max: usize,
        m_max: usize,
    ) -> Result<Self> {
        if level < 1 {
            return Err(Error::BadBlockLevel(level));
        }
        let mut idx = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let hi = h.edge_index(a).ok_or_else(|| Error::UnknownEdge {
                graph: "Y",
                edge: a.clone(),
            })?;
            let ki = k.edge_index(b).ok_or_else(|| Error::UnknownEdge {
                graph: "Z",
                edge: b.clone(),
            })?;
            if h.edge(hi).sign != k.edge(ki).sign {
                return Err(Error::SignMismatch {
                    h: a.clone(),
                    k: b.clone(),
                });
            }
            idx.push((hi, ki));
        }
        idx.sort_unstable();
        idx.dedup();

        let (nh, nk) = (h.edges().len(), k.edges().len());
        let mut uf = UnionFind::new(nh + nk);
        let mut covered = vec![false; nh + nk];
        for &(a, b) in &idx {
            uf.union(a, nh + b);
            covered[a] = true;
            covered[nh + b] = true;
        }
        if let Some(i) = covered.iter().position(|c| !c) {
            return Err(if i < nh {
                Error::UncoveredEdge {
                    graph: "Y",
                    edge: h.edge(i).id.clone(),
                }
            } else {
                Error::UncoveredEdge {
                    graph: "Z",
                    edge: k.edge(i - nh).id.clone(),
                }
            });
        }

        // number blocks in order of first H edge
        let mut number = BTreeMap::new();
        let mut block = vec![0; nh + nk];
        for (i, b) in block.iter_mut().enumerate() {
            let root = uf.find(i);
            let next = number.len();
            *b = *number.entry(root).or_insert(next);
        }
        let present: std::collections::HashSet<(usize, usize)> = idx.iter().copied().collect();
        for a in 0..nh {
            for b in 0..nk {
                if block[a] == block[nh + b] && !present.contains(&(a, b)) {
                    return Err(Error::NotComponentwise {
                        h: h.edge(a).id.clone(),
                        k: k.edge(b).id.clone(),
                    });
                }
            }
        }
        Ok(Self {
            h,
            k,
            pairs: idx,
            h_block: block[..nh].to_vec(),
            k_block: block[nh..].to_vec(),
            block_count: number.len(),
            level,
            l_max,
            m_max,
        })
    }

    pub fn from_file(file: &PairFile) -> Result<Self> {
        let h = SignedGraph::from_file(&file.y)?;
        let k = SignedGraph::from_file(&file.z)?;
        Self::new(h, k, &file.e00, file.k, file.l_max, file.m_max)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PairFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> PairFile {
        PairFile {
            y: self.h.to_file(),
            z: self.k.to_file(),
            e00: self
                .pairs
                .iter()
                .map(|&(a, b)| (self.h.edge(a).id.clone(), self.k.edge(b).id.clone()))
                .collect(),
            k: self.level,
            l_max: self.l_max,
            m_max: self.m_max,
        }
    }

    /// The graph presenting `Y`.
    pub fn y_graph(&self) -> &SignedGraph {
        &self.h
    }

    /// The graph presenting `Z`.
    pub fn z_graph(&self) -> &SignedGraph {
        &self.k
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Block (image edge in `X`) of each `Y` edge.
    pub fn y_blocks(&self) -> &[usize] {
        &self.h_block
    }

    /// Block (image edge in `X`) of each `Z` edge.
    pub fn z_blocks(&self) -> &[usize] {
        &self.k_block
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn with_level(mut self, level: usize) -> Result<Self> {
        if level < 1 {
            return Err(Error::BadBlockLevel(level));
        }
        self.level = level;
        Ok(self)
    }

    pub fn with_caps(mut self, l_max: usize, m_max: usize) -> Self {
        self.l_max = l_max;
        self.m_max = m_max;
        self
    }
}

/// `H = K = g` with each edge compatible only with itself.
pub fn diagonal_pair(g: &SignedGraph) -> SuPairPresentation {
    let pairs: Vec<(String, String)> = g
        .edges()
        .iter()
        .map(|e| (e.id.clone(), e.id.clone()))
        .collect();
    SuPairPresentation::new(g.clone(), g.clone(), &pairs, 1, DEFAULT_CAP, DEFAULT_CAP)
        .expect("the diagonal of a valid graph is a valid pair")
}

/// A non-diagonal pair on the 2-block presentation: `Y` edges are 2-paths
/// mapped to their first edge, `Z` edges are 2-paths mapped to their last
/// edge, and both carry the sign of their image.
pub fn two_block_pair(g: &SignedGraph) -> Result<SuPairPresentation> {
    let paths = enumerate_paths(g, 2);
    let with_signs = |pick: fn(&[usize]) -> usize| -> Result<SignedGraph> {
        let mut file = higher_block(g, 2)?.to_file();
        for (rec, p) in file.edges.iter_mut().zip(&paths) {
            rec.sign = g.edge(pick(&p.edges)).sign.value();
        }
        SignedGraph::from_file(&file)
    };
    let h = with_signs(|e| e[0])?;
    let k = with_signs(|e| e[1])?;
    let mut pairs = Vec::new();
    for (a, pa) in paths.iter().enumerate() {
        for (b, pb) in paths.iter().enumerate() {
            if pa.edges[0] == pb.edges[1] {
                pairs.push((h.edge(a).id.clone(), k.edge(b).id.clone()));
            }
        }
    }
    SuPairPresentation::new(h, k, &pairs, 1, DEFAULT_CAP, DEFAULT_CAP)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loops(ids: &[&str]) -> SignedGraph {
        let edges: Vec<(&str, &str, &str, i64)> = ids.iter().map(|&e| (e, "v", "v", 1)).collect();
        SignedGraph::build(&["v"], &edges).unwrap()
    }

    fn pairs(p: &[(&str, &str)]) -> Vec<(String, String)> {
        p.iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn diagonal_sizes() {
        let s2 = SignedGraph::build(&["v"], &[("z", "v", "v", -1), ("o", "v", "v", 1)]).unwrap();
        assert_eq!(diagonal_pair(&s2).pairs().len(), 2);
        assert_eq!(diagonal_pair(&s2).block_count(), 2);
    }

    #[test]
    fn rejects_bad_pairs() {
        let y = loops(&["a", "b"]);
        let z = loops(&["c", "d"]);
        let err = |p: &[(&str, &str)]| {
            SuPairPresentation::new(y.clone(), z.clone(), &pairs(p), 1, 4, 4).unwrap_err()
        };
        assert!(matches!(
            err(&[("a", "x")]),
            Error::UnknownEdge { graph: "Z", .. }
        ));
        assert!(matches!(err(&[("a", "c")]), Error::UncoveredEdge { .. }));
        assert_eq!(
            err(&[("a", "c"), ("b", "c"), ("a", "d")]),
            Error::NotComponentwise {
                h: "b".into(),
                k: "d".into()
            }
        );
        let all = pairs(&[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]);
        let p = SuPairPresentation::new(y.clone(), z.clone(), &all, 1, 4, 4).unwrap();
        assert_eq!(p.block_count(), 1);
        assert!(matches!(
            SuPairPresentation::new(y, z, &all, 0, 4, 4),
            Err(Error::BadBlockLevel(0))
        ));
    }

    #[test]
    fn rejects_sign_mismatch() {
        let y = SignedGraph::build(&["v"], &[("a", "v", "v", -1)]).unwrap();
        let z = loops(&["c"]);
        assert!(matches!(
            SuPairPresentation::new(y, z, &pairs(&[("a", "c")]), 1, 4, 4),
            Err(Error::SignMismatch { .. })
        ));
    }

    #[test]
    fn pair_file_defaults_and_round_trip() {
        let text = r#"{
            "Y": {"vertices": ["v"], "edges": [{"id": "a", "src": "v", "dst": "v"}]},
            "Z": {"vertices": ["v"], "edges": [{"id": "c", "src": "v", "dst": "v"}]},
            "E00": [["a", "c"]]
        }"#;
        let p = SuPairPresentation::from_json(text).unwrap();
        assert_eq!((p.level, p.l_max, p.m_max), (1, 4, 4));
        let again = SuPairPresentation::from_file(&p.to_file()).unwrap();
        assert_eq!(again, p);
    }
}
