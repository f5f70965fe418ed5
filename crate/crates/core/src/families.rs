//! Clutters built from graphs.
//!
//! `C_k(G)` has as edges the `k`-subsets of vertices inducing a connected
//! subgraph of `G`; `C_2(G)` is the edge set of `G`. For paths and cycles the
//! domination parameters and projective dimension have closed forms, exposed
//! by [`closed_forms`].

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexId, VertexSet};

/// Largest ground set [`realizability_search`] will enumerate graphs on.
pub const REALIZABILITY_MAX_VERTICES: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Path,
    Cycle,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(FamilyKind::Path),
            "cycle" => Ok(FamilyKind::Cycle),
            other => Err(Error::BadSpec(format!("unknown family kind `{other}`"))),
        }
    }
}

/// A path `P_n` or cycle `Γ_n` together with the uniformity `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize, k: usize) -> Self {
        FamilySpec { kind, n, k }
    }

    pub fn validate(&self) -> Result<()> {
        let min_n = match self.kind {
            FamilyKind::Path => 1,
            FamilyKind::Cycle => 3,
        };
        if self.n < min_n {
            return Err(Error::BadSpec(format!("{} needs n >= {min_n}, got {}", self.kind, self.n)));
        }
        if self.n > crate::vertex_set::MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n));
        }
        if self.k < 2 || self.k > self.n {
            return Err(Error::BadSpec(format!("k = {} outside 2..={}", self.k, self.n)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedForms {
    pub i: usize,
    pub epsilon: usize,
    pub pd: usize,
}

/// `P_n` is the path `1-2-...-n`; `Γ_n` closes it with the edge `n-1`.
pub fn standard_graph(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    if spec.kind == FamilyKind::Cycle {
        pairs.push((n, 1));
    }
    Graph::numbered(n, &pairs)
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k < 2 || k > g.vertex_count() {
        return Err(Error::BadK { k, n: g.vertex_count() });
    }
    Ok(())
}

/// `C_k(G)`.
pub fn connected_graph_clutter(g: &Graph, k: usize) -> Result<Clutter> {
    check_k(g, k)?;
    let edges: Vec<VertexSet> = g.ground().subsets_of_size(k).filter(|&a| g.is_connected_on(a)).collect();
    Ok(Clutter::from_canonical(g.names().clone(), g.ground(), edges))
}

/// The `C_k` clutter for a path or cycle family.
pub fn family_clutter(spec: &FamilySpec) -> Result<Clutter> {
    connected_graph_clutter(&standard_graph(spec)?, spec.k)
}

/// Undirected path clutter: `k`-subsets whose vertices can be ordered so that
/// consecutive ones are adjacent in `G`.
pub fn path_clutter_undirected(g: &Graph, k: usize) -> Result<Clutter> {
    check_k(g, k)?;
    let edges: Vec<VertexSet> = g.ground().subsets_of_size(k).filter(|&a| has_spanning_path(g, a)).collect();
    Ok(Clutter::from_canonical(g.names().clone(), g.ground(), edges))
}

fn has_spanning_path(g: &Graph, a: VertexSet) -> bool {
    fn extend(g: &Graph, at: VertexId, left: VertexSet) -> bool {
        left.is_empty() || g.adjacency(at).intersection(left).iter().any(|next| extend(g, next, left.without(next)))
    }
    a.iter().any(|start| extend(g, start, a.without(start)))
}

/// True iff the neighbors of `v` are pairwise adjacent.
pub fn is_simplicial_graph(g: &Graph, v: VertexId) -> Result<bool> {
    let nbrs = g.neighbors(v)?;
    Ok(nbrs.iter().all(|x| nbrs.without(x).is_subset(g.adjacency(x))))
}

/// Woodroofe's simplicial vertex: any two distinct edges through `v` have a
/// third edge inside their union minus `v`.
pub fn is_simplicial_clutter(c: &Clutter, v: VertexId) -> Result<bool> {
    if !c.ground().contains(v) {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    c.ensure_proper()?;
    let through: Vec<VertexSet> = c.edges().iter().copied().filter(|e| e.contains(v)).collect();
    for (i, &e) in through.iter().enumerate() {
        for &f in &through[i + 1..] {
            let room = e.union(f).without(v);
            if !c.edges().iter().any(|g| g.is_subset(room)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Closed forms for `i`, `ε` and `pd` of `C_k(P_n)` and `C_k(Γ_n)`.
pub fn closed_forms(spec: &FamilySpec) -> Result<ClosedForms> {
    spec.validate()?;
    let FamilySpec { kind, n, k } = *spec;
    let epsilon = ceil_div(n, 3 * k - 2);
    Ok(match kind {
        FamilyKind::Cycle => {
            ClosedForms { i: ceil_div((k - 1) * n, k + 1), epsilon, pd: n / (k + 1) + ceil_div(n, k + 1) }
        }
        FamilyKind::Path => {
            ClosedForms { i: ceil_div(k * n, k + 1) - (n + 1) / (k + 1), epsilon, pd: n / (k + 1) + (n + 1) / (k + 1) }
        }
    })
}

/// Searches all graphs on the clutter's ground set for one whose `C_k` is the
/// given clutter. Graphs are tried in increasing order of their edge bitmask
/// over the canonically ordered vertex pairs; the first witness is returned.
pub fn realizability_search(c: &Clutter, k: usize) -> Result<Option<Graph>> {
    c.ensure_proper()?;
    let n = c.vertex_count();
    if n > REALIZABILITY_MAX_VERTICES {
        return Err(Error::TooLarge { what: "vertex count", size: n, limit: REALIZABILITY_MAX_VERTICES });
    }
    if c.has_edges() && c.uniformity() != Some(k) {
        return Err(Error::NotUniform);
    }
    if k < 2 || k > n {
        return Err(Error::BadK { k, n });
    }
    let ground = c.ground();
    let pairs: Vec<(VertexId, VertexId)> =
        ground.iter().flat_map(|a| ground.iter().filter(move |&b| b > a).map(move |b| (a, b))).collect();
    let candidates: Vec<VertexSet> = ground.subsets_of_size(k).collect();
    let found = (0..1u64 << pairs.len()).into_par_iter().find_first(|&mask| {
        let g = Graph::from_pair_mask(c.names().clone(), ground, &pairs, mask);
        candidates.iter().all(|&a| g.is_connected_on(a) == c.contains_edge(a))
    });
    Ok(found.map(|mask| Graph::from_pair_mask(c.names().clone(), ground, &pairs, mask)))
}

/// Looks for a graph on at most `max_n` vertices in which every vertex but
/// one is simplicial, while the undirected path clutter `P_k(G)` has no
/// simplicial vertex at all. Returns the first witness in order of vertex
/// count, then edge bitmask.
pub fn path_clutter_counterexample(k: usize, max_n: usize) -> Result<Option<Graph>> {
    if max_n > 6 {
        return Err(Error::TooLarge { what: "vertex count", size: max_n, limit: 6 });
    }
    for n in k.max(3)..=max_n {
        let names = crate::clutter::numbered_names(n)?;
        let ground = VertexSet::full(n);
        let pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let found = (0..1u64 << pairs.len()).into_par_iter().find_first(|&mask| {
            let g = Graph::from_pair_mask(names.clone(), ground, &pairs, mask);
            let non_simplicial = ground.iter().filter(|&v| !is_simplicial_graph(&g, v).expect("v in ground")).count();
            if non_simplicial != 1 {
                return false;
            }
            let p = path_clutter_undirected(&g, k).expect("k checked");
            ground.iter().all(|v| !is_simplicial_clutter(&p, v).expect("v in ground"))
        });
        if let Some(mask) = found {
            return Ok(Some(Graph::from_pair_mask(names, ground, &pairs, mask)));
        }
    }
    Ok(None)
}
