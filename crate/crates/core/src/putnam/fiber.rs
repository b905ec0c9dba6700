//! The fiber-product graphs presenting `Σ_{L,M}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeRecord, GraphFile, SignedGraph};

use super::presentation::SuPairPresentation;

/// One edge of `G_{L,M}`: `L + 1` edges of `Y` and `M + 1` edges of `Z`, all
/// pairwise compatible.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeTuple {
    pub ys: Vec<usize>,
    pub zs: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FiberGraph {
    pub l: usize,
    pub m: usize,
    /// Edge `i` of `graph` is `tuples[i]`.
    pub tuples: Vec<EdgeTuple>,
    pub graph: SignedGraph,
}

pub fn fiber_graph(p: &SuPairPresentation, l: usize, m: usize) -> Result<FiberGraph> {
    if l > p.l_max || m > p.m_max {
        return Err(Error::CapExceeded {
            l,
            m,
            l_max: p.l_max,
            m_max: p.m_max,
        });
    }
    let (h, k) = (p.y_graph(), p.z_graph());
    let mut tuples = Vec::new();
    for b in 0..p.block_count() {
        let hb: Vec<usize> = (0..h.edges().len())
            .filter(|&e| p.y_blocks()[e] == b)
            .collect();
        let kb: Vec<usize> = (0..k.edges().len())
            .filter(|&e| p.z_blocks()[e] == b)
            .collect();
        for ys in product(&hb, l + 1) {
            for zs in product(&kb, m + 1) {
                tuples.push(EdgeTuple { ys: ys.clone(), zs });
            }
        }
    }
    tuples.sort();

    let src = |t: &EdgeTuple| -> (Vec<usize>, Vec<usize>) {
        (
            t.ys.iter().map(|&e| h.edge(e).src).collect(),
            t.zs.iter().map(|&e| k.edge(e).src).collect(),
        )
    };
    let dst = |t: &EdgeTuple| -> (Vec<usize>, Vec<usize>) {
        (
            t.ys.iter().map(|&e| h.edge(e).dst).collect(),
            t.zs.iter().map(|&e| k.edge(e).dst).collect(),
        )
    };
    let mut vertices = BTreeMap::new();
    for t in &tuples {
        vertices.insert(src(t), ());
        vertices.insert(dst(t), ());
    }
    let label = |ys: &[String], zs: &[String]| format!("({}|{})", ys.join(","), zs.join(","));
    let vlabel = |v: &(Vec<usize>, Vec<usize>)| {
        let ys: Vec<String> = v.0.iter().map(|&i| h.vertices()[i].clone()).collect();
        let zs: Vec<String> = v.1.iter().map(|&i| k.vertices()[i].clone()).collect();
        label(&ys, &zs)
    };
    let file = GraphFile {
        vertices: vertices.keys().map(vlabel).collect(),
        edges: tuples
            .iter()
            .map(|t| {
                let ys: Vec<String> = t.ys.iter().map(|&e| h.edge(e).id.clone()).collect();
                let zs: Vec<String> = t.zs.iter().map(|&e| k.edge(e).id.clone()).collect();
                EdgeRecord {
                    id: label(&ys, &zs),
                    src: vlabel(&src(t)),
                    dst: vlabel(&dst(t)),
                    sign: h.edge(t.ys[0]).sign.value(),
                }
            })
            .collect(),
    };
    Ok(FiberGraph {
        l,
        m,
        tuples,
        graph: SignedGraph::from_file_allowing_empty(&file)?,
    })
}

/// All sequences of length `n` over `items`, lexicographic.
fn product(items: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                items.iter().map(move |&x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::putnam::presentation::diagonal_pair;

    #[test]
    fn diagonal_fibers() {
        let s2 = SignedGraph::build(&["v"], &[("z", "v", "v", -1), ("o", "v", "v", 1)]).unwrap();
        let p = diagonal_pair(&s2);
        let f = fiber_graph(&p, 1, 0).unwrap();
        let ids: Vec<&str> = f.graph.edges().iter().map(|e| e.id.as_str()).collect();
        assert_eq!(ids, ["(z,z|z)", "(o,o|o)"]);
        assert_eq!(f.graph.edges()[0].sign.value(), -1);
        assert!(matches!(
            fiber_graph(&p, 5, 0),
            Err(Error::CapExceeded { l: 5, .. })
        ));
    }

    #[test]
    fn full_pair_count() {
        let y = SignedGraph::build(&["v"], &[("a", "v", "v", 1), ("b", "v", "v", 1)]).unwrap();
        let z = SignedGraph::build(&["w"], &[("c", "w", "w", 1), ("d", "w", "w", 1)]).unwrap();
        let all: Vec<(String, String)> = [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        let p = SuPairPresentation::new(y, z, &all, 1, 4, 4).unwrap();
        assert_eq!(fiber_graph(&p, 1, 0).unwrap().graph.edges().len(), 8);
        assert_eq!(fiber_graph(&p, 0, 0).unwrap().graph.edges().len(), 4);
    }
}
