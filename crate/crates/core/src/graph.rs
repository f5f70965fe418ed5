use std::fmt;
use std::sync::Arc;

use crate::clutter::{format_set, name_table, numbered_names};
use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet};

/// A simple undirected graph on a subset of a name table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    names: Arc<[String]>,
    ground: VertexSet,
    adj: Vec<VertexSet>,
}

/// Builds a graph from vertex names and adjacent name pairs.
pub fn make_graph<S: AsRef<str>>(ground: &[S], adjacency: &[(S, S)]) -> Result<Graph> {
    let names = name_table(ground)?;
    let index = |s: &S| {
        let s = s.as_ref();
        names.iter().position(|n| n == s).ok_or_else(|| Error::UnknownVertex(s.to_string()))
    };
    let pairs = adjacency.iter().map(|(a, b)| Ok((index(a)?, index(b)?))).collect::<Result<Vec<_>>>()?;
    let ground = VertexSet::full(names.len());
    Graph::from_pairs(names, ground, &pairs)
}

impl Graph {
    /// Rejects loops and repeated edges.
    pub fn from_pairs(names: Arc<[String]>, ground: VertexSet, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![VertexSet::EMPTY; names.len()];
        for &(a, b) in pairs {
            for v in [a, b] {
                if !ground.contains(v) {
                    return Err(Error::UnknownVertex(names.get(v).cloned().unwrap_or_else(|| format!("#{v}"))));
                }
            }
            if a == b {
                return Err(Error::BadSpec(format!("loop at vertex `{}`", names[a])));
            }
            if adj[a].contains(b) {
                return Err(Error::DuplicateEdge(format!("{{{},{}}}", names[a], names[b])));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph { names, ground, adj })
    }

    /// Graph on vertices named `1..=n`; pairs use the same 1-based labels.
    pub fn numbered(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let names = numbered_names(n)?;
        let zero_based = pairs
            .iter()
            .map(|&(a, b)| {
                if a == 0 || b == 0 || a > n || b > n {
                    Err(Error::UnknownVertex(format!("{}", a.max(b))))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_pairs(names, VertexSet::full(n), &zero_based)
    }

    /// Graph whose edges are given by a bitmask over the pairs of `ground`
    /// taken in canonical order; bit `j` selects the `j`-th pair.
    pub(crate) fn from_pair_mask(
        names: Arc<[String]>,
        ground: VertexSet,
        pairs: &[(VertexId, VertexId)],
        mask: u64,
    ) -> Self {
        let mut adj = vec![VertexSet::EMPTY; names.len()];
        for (j, &(a, b)) in pairs.iter().enumerate() {
            if mask >> j & 1 == 1 {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        Graph { names, ground, adj }
    }

    pub fn names(&self) -> &Arc<[String]> {
        &self.names
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn vertex_count(&self) -> usize {
        self.ground.len()
    }

    pub fn neighbors(&self, v: VertexId) -> Result<VertexSet> {
        if !self.ground.contains(v) {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        Ok(self.adj[v])
    }

    pub(crate) fn adjacency(&self, v: VertexId) -> VertexSet {
        self.adj[v]
    }

    pub fn is_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adj.get(a).is_some_and(|n| n.contains(b))
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.ground.iter().flat_map(|a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.ground.iter().map(|v| self.adj[v].len()).sum::<usize>() / 2
    }

    /// Whether the induced subgraph `G[a]` is connected. The empty set counts
    /// as connected.
    pub fn is_connected_on(&self, a: VertexSet) -> bool {
        let Some(start) = a.first() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            let fresh = self.adj[v].intersection(a).difference(seen);
            seen = seen.union(fresh);
            frontier = frontier.union(fresh);
        }
        seen == a
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_on(self.ground)
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        format_set(&self.names, s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={} E={{", self.format_set(self.ground))?;
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}{}", self.names[a], self.names[b])?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        let g = make_graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(matches!(make_graph(&["a"], &[("a", "a")]), Err(Error::BadSpec(_))));
        assert!(matches!(make_graph(&["a", "b"], &[("a", "b"), ("b", "a")]), Err(Error::DuplicateEdge(_))));
        assert!(matches!(make_graph(&["a"], &[("a", "z")]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn induced_connectivity() {
        let g = Graph::numbered(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(g.is_connected());
        assert!(g.is_connected_on(VertexSet::from_iter([0, 1, 2])));
        assert!(!g.is_connected_on(VertexSet::from_iter([0, 2])));
        assert!(g.is_connected_on(VertexSet::EMPTY));
        assert!(g.is_connected_on(VertexSet::singleton(3)));
    }
}
