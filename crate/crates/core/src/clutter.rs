//! Clutters: a ground set together with an antichain of edges.
//!
//! A clutter stands for the squarefree monomial ideal generated by the
//! monomials of its edges. Vertex indices refer to a shared name table and
//! are never renumbered, so `colon` and `strip_isolated` only shrink the
//! ground set.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    names: Arc<[String]>,
    ground: VertexSet,
    edges: Vec<VertexSet>,
    improper: bool,
}

/// Inclusion-minimal members of `sets`, deduplicated and in canonical order.
pub fn minimalize(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut sorted: Vec<VertexSet> = sets.into_iter().collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sorted.len());
    // Sorted by size, so any subset of a set precedes it.
    for s in sorted {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Builds a clutter from vertex names and edges given as name lists.
pub fn make_clutter<S: AsRef<str>, E: AsRef<[S]>>(ground: &[S], edges: &[E]) -> Result<Clutter> {
    let names = name_table(ground)?;
    let sets = edges.iter().map(|e| lookup_set(&names, e.as_ref())).collect::<Result<Vec<_>>>()?;
    Clutter::new(names, sets)
}

pub(crate) fn name_table<S: AsRef<str>>(ground: &[S]) -> Result<Arc<[String]>> {
    if ground.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(ground.len()));
    }
    let mut names: Vec<String> = Vec::with_capacity(ground.len());
    for g in ground {
        let g = g.as_ref();
        if names.iter().any(|n| n == g) {
            return Err(Error::DuplicateVertex(g.to_string()));
        }
        names.push(g.to_string());
    }
    Ok(names.into())
}

pub(crate) fn lookup_set<S: AsRef<str>>(names: &[String], members: &[S]) -> Result<VertexSet> {
    members
        .iter()
        .map(|m| {
            let m = m.as_ref();
            names.iter().position(|n| n == m).ok_or_else(|| Error::UnknownVertex(m.to_string()))
        })
        .collect()
}

pub(crate) fn numbered_names(n: usize) -> Result<Arc<[String]>> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok((1..=n).map(|i| i.to_string()).collect::<Vec<_>>().into())
}

impl Clutter {
    /// Clutter on the whole name table. Edges are validated and put in
    /// canonical order.
    pub fn new(names: Arc<[String]>, edges: Vec<VertexSet>) -> Result<Self> {
        let ground = VertexSet::full(names.len());
        Self::with_ground(names, ground, edges)
    }

    /// Clutter whose ground set is a subset of the name table.
    pub fn with_ground(names: Arc<[String]>, ground: VertexSet, mut edges: Vec<VertexSet>) -> Result<Self> {
        if names.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(names.len()));
        }
        if !ground.is_subset(VertexSet::full(names.len())) {
            return Err(Error::UnknownVertex(format!("{:?}", ground)));
        }
        edges.sort_unstable();
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if let Some(v) = e.difference(ground).first() {
                return Err(Error::UnknownVertex(display_name(&names, v)));
            }
            if i > 0 && edges[i - 1] == *e {
                return Err(Error::DuplicateEdge(format_set(&names, *e)));
            }
        }
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if a.is_subset(b) {
                    return Err(Error::NonAntichain {
                        contained: format_set(&names, a),
                        container: format_set(&names, b),
                    });
                }
            }
        }
        Ok(Clutter { names, ground, edges, improper: false })
    }

    /// Clutter on vertices named `1..=n`; edges use those same 1-based labels.
    pub fn numbered(n: usize, edges: &[&[usize]]) -> Result<Self> {
        let names = numbered_names(n)?;
        let sets = edges
            .iter()
            .map(|e| {
                e.iter()
                    .map(|&v| if v == 0 || v > n { Err(Error::UnknownVertex(v.to_string())) } else { Ok(v - 1) })
                    .collect::<Result<VertexSet>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, sets)
    }

    /// The unit ideal on `ground`.
    pub fn improper(names: Arc<[String]>, ground: VertexSet) -> Self {
        Clutter { names, ground, edges: vec![VertexSet::EMPTY], improper: true }
    }

    /// Trusted constructor for edge lists that are already a canonical antichain.
    pub(crate) fn from_canonical(names: Arc<[String]>, ground: VertexSet, edges: Vec<VertexSet>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|e| !e.is_empty() && e.is_subset(ground)));
        Clutter { names, ground, edges, improper: false }
    }

    pub fn names(&self) -> &Arc<[String]> {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.ground.len()
    }

    pub fn edge_count(&self) -> usize {
        if self.improper {
            0
        } else {
            self.edges.len()
        }
    }

    pub fn is_improper(&self) -> bool {
        self.improper
    }

    pub fn has_edges(&self) -> bool {
        !self.improper && !self.edges.is_empty()
    }

    pub fn ensure_proper(&self) -> Result<()> {
        if self.improper {
            Err(Error::ImproperClutter)
        } else {
            Ok(())
        }
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Union of all edges.
    pub fn support(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc.union(e))
    }

    /// Vertices lying in no edge.
    pub fn isolated(&self) -> VertexSet {
        self.ground.difference(self.support())
    }

    /// Vertices lying in a trivial (one-element) edge.
    pub fn trivial_vertices(&self) -> VertexSet {
        self.edges.iter().filter(|e| e.len() == 1).fold(VertexSet::EMPTY, |acc, &e| acc.union(e))
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    /// Common edge size, if every edge has the same size.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    pub fn vertex_by_name(&self, name: &str) -> Result<VertexId> {
        self.names
            .iter()
            .position(|n| n == name)
            .filter(|&v| self.ground.contains(v))
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn set_by_names<S: AsRef<str>>(&self, members: &[S]) -> Result<VertexSet> {
        let s = lookup_set(&self.names, members)?;
        self.check_in_ground(s)?;
        Ok(s)
    }

    pub fn set_names(&self, s: VertexSet) -> Vec<&str> {
        s.iter().map(|v| self.names[v].as_str()).collect()
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        format_set(&self.names, s)
    }

    fn check_in_ground(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.ground).first() {
            Some(v) => Err(Error::UnknownVertex(display_name(&self.names, v))),
            None => Ok(()),
        }
    }

    /// `C + A`: the minimal sets of `E(C) ∪ {A}`, same ground set.
    pub fn add_set(&self, a: VertexSet) -> Result<Clutter> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_in_ground(a)?;
        if self.improper {
            return Ok(self.clone());
        }
        let edges = minimalize(self.edges.iter().copied().chain(std::iter::once(a)));
        Ok(Clutter::from_canonical(self.names.clone(), self.ground, edges))
    }

    /// `C : A`: the minimal sets of `{e ∖ A}` on the ground set `V(C) ∖ A`.
    ///
    /// When some edge lies inside `A` the result is the improper clutter.
    pub fn colon(&self, a: VertexSet) -> Result<Clutter> {
        self.check_in_ground(a)?;
        let ground = self.ground.difference(a);
        if self.improper || self.edges.iter().any(|e| e.is_subset(a)) {
            return Ok(Clutter::improper(self.names.clone(), ground));
        }
        let edges = minimalize(self.edges.iter().map(|e| e.difference(a)));
        Ok(Clutter::from_canonical(self.names.clone(), ground, edges))
    }

    /// Returns `C̄` (isolated vertices removed from the ground set) and `is(C)`.
    pub fn strip_isolated(&self) -> (Clutter, VertexSet) {
        if self.improper {
            return (self.clone(), VertexSet::EMPTY);
        }
        let iso = self.isolated();
        let stripped = Clutter {
            names: self.names.clone(),
            ground: self.ground.difference(iso),
            edges: self.edges.clone(),
            improper: false,
        };
        (stripped, iso)
    }

    /// Vertices other than `v` sharing an edge with `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<VertexSet> {
        if !self.ground.contains(v) {
            return Err(Error::UnknownVertex(display_name(&self.names, v)));
        }
        Ok(self.neighbors_unchecked(v))
    }

    pub(crate) fn neighbors_unchecked(&self, v: VertexId) -> VertexSet {
        self.edges.iter().filter(|e| e.contains(v)).fold(VertexSet::EMPTY, |acc, &e| acc.union(e)).without(v)
    }

    /// True iff `a` contains no edge.
    pub fn is_independent(&self, a: VertexSet) -> bool {
        !self.edges.iter().any(|e| e.is_subset(a))
    }

    /// The clutter of inclusion-minimal vertex covers, on the same ground set.
    pub fn alexander_dual(&self) -> Result<Clutter> {
        self.ensure_proper()?;
        if let Some(v) = self.isolated().first() {
            return Err(Error::IsolatedVertex(self.names[v].clone()));
        }
        if self.edges.is_empty() {
            return Err(Error::NoEdges);
        }
        Ok(Clutter::from_canonical(self.names.clone(), self.ground, minimal_transversals(&self.edges)))
    }
}

/// Inclusion-minimal sets meeting every member of `edges`, built one edge at a
/// time.
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut covers = vec![VertexSet::EMPTY];
    for &e in edges {
        let mut next = Vec::with_capacity(covers.len() * 2);
        for &t in &covers {
            if t.intersects(e) {
                next.push(t);
            } else {
                next.extend(e.iter().map(|v| t.with(v)));
            }
        }
        covers = minimalize(next);
    }
    covers
}

fn display_name(names: &[String], v: VertexId) -> String {
    names.get(v).cloned().unwrap_or_else(|| format!("#{v}"))
}

pub(crate) fn format_set(names: &[String], s: VertexSet) -> String {
    let parts: Vec<String> = s.iter().map(|v| display_name(names, v)).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={} E={{", self.format_set(self.ground))?;
        for (i, &e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.format_set(e))?;
        }
        f.write_str("}")?;
        if self.improper {
            f.write_str(" (improper)")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().map(|x| x - 1).collect()
    }

    fn pentagon() -> Clutter {
        Clutter::numbered(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 1]]).unwrap()
    }

    #[test]
    fn construction_checks() {
        let c = make_clutter(&["1", "2", "3"], &[vec!["1", "2"], vec!["2", "3"]]).unwrap();
        assert_eq!(c.edge_count(), 2);
        assert!(matches!(make_clutter(&["1", "2"], &[vec!["1"], vec!["1", "2"]]), Err(Error::NonAntichain { .. })));
        assert_eq!(make_clutter(&["1", "2"], &[vec!["1", "3"]]), Err(Error::UnknownVertex("3".into())));
        assert!(matches!(make_clutter(&["1", "2"], &[vec!["1", "2"], vec!["2", "1"]]), Err(Error::DuplicateEdge(_))));
        let empty: Vec<&str> = vec![];
        assert_eq!(make_clutter(&["1"], &[empty]), Err(Error::EmptyEdge));
        assert_eq!(pentagon().edge_count(), 5);
        assert!(!pentagon().is_improper());
    }

    #[test]
    fn edges_are_canonical() {
        let c = Clutter::numbered(4, &[&[3, 4], &[1], &[2, 3]]).unwrap();
        assert_eq!(c.edges(), &[set(&[1]), set(&[2, 3]), set(&[3, 4])]);
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(minimalize([set(&[1, 2]), set(&[1, 2, 3]), set(&[3])]), vec![set(&[3]), set(&[1, 2])]);
        assert_eq!(minimalize([]), vec![]);
        assert_eq!(minimalize([set(&[1]), set(&[2]), set(&[1, 2])]), vec![set(&[1]), set(&[2])]);
    }

    #[test]
    fn add_set_examples() {
        let c = Clutter::numbered(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(c.add_set(set(&[2, 3])).unwrap().edges(), &[set(&[2, 3])]);
        let c = Clutter::numbered(4, &[&[1, 2]]).unwrap();
        assert_eq!(c.add_set(set(&[1, 2, 3, 4])).unwrap().edges(), &[set(&[1, 2])]);
        let p = pentagon().add_set(set(&[1, 3])).unwrap();
        assert_eq!(p.edge_count(), 6);
        assert!(p.contains_edge(set(&[1, 3])));
        assert_eq!(pentagon().add_set(VertexSet::EMPTY), Err(Error::EmptySet));
        assert!(matches!(pentagon().add_set(VertexSet::singleton(7)), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn colon_examples() {
        let c = Clutter::numbered(3, &[&[1, 2], &[2, 3]]).unwrap();
        let q = c.colon(set(&[2])).unwrap();
        assert_eq!(q.ground(), set(&[1, 3]));
        assert_eq!(q.edges(), &[set(&[1]), set(&[3])]);

        let c = Clutter::numbered(2, &[&[1, 2]]).unwrap();
        let q = c.colon(set(&[1, 2])).unwrap();
        assert!(q.is_improper());
        assert_eq!(q.edges(), &[VertexSet::EMPTY]);
        assert!(q.ensure_proper().is_err());

        // Residuals {2},{2,3},{3,4},{4,5},{5}; {2,3} and {4,5} are absorbed.
        let q = pentagon().colon(set(&[1])).unwrap();
        assert_eq!(q.ground(), set(&[2, 3, 4, 5]));
        assert_eq!(q.edges(), &[set(&[2]), set(&[5]), set(&[3, 4])]);
    }

    #[test]
    fn strip_isolated_examples() {
        let c = Clutter::numbered(3, &[&[1, 2]]).unwrap();
        let (s, iso) = c.strip_isolated();
        assert_eq!(s.ground(), set(&[1, 2]));
        assert_eq!(s.edges(), c.edges());
        assert_eq!(iso, set(&[3]));

        let c = Clutter::numbered(2, &[]).unwrap();
        let (s, iso) = c.strip_isolated();
        assert!(s.ground().is_empty());
        assert_eq!(iso, set(&[1, 2]));

        let (s, iso) = pentagon().strip_isolated();
        assert_eq!(s, pentagon());
        assert!(iso.is_empty());
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(pentagon().neighbors(0).unwrap(), set(&[2, 5]));
        let c = Clutter::numbered(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(c.neighbors(0).unwrap(), set(&[2, 3]));
        let c = Clutter::numbered(1, &[&[1]]).unwrap();
        assert!(c.neighbors(0).unwrap().is_empty());
        assert!(matches!(c.neighbors(3), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn independence_examples() {
        assert!(pentagon().is_independent(set(&[1, 3])));
        assert!(!pentagon().is_independent(set(&[1, 2])));
        assert!(pentagon().is_independent(VertexSet::EMPTY));
    }

    #[test]
    fn dual_examples() {
        let c = Clutter::numbered(2, &[&[1, 2]]).unwrap();
        assert_eq!(c.alexander_dual().unwrap().edges(), &[set(&[1]), set(&[2])]);
        let c = Clutter::numbered(2, &[&[1], &[2]]).unwrap();
        assert_eq!(c.alexander_dual().unwrap().edges(), &[set(&[1, 2])]);

        let d = pentagon().alexander_dual().unwrap();
        assert_eq!(d.edge_count(), 5);
        assert!(d.edges().iter().all(|e| e.len() == 3));
        assert_eq!(d.alexander_dual().unwrap(), pentagon());

        let c = Clutter::numbered(3, &[&[1, 2]]).unwrap();
        assert!(matches!(c.alexander_dual(), Err(Error::IsolatedVertex(_))));
    }

    #[test]
    fn dual_matches_brute_force_covers() {
        // Oracle: every subset of the ground set that meets all edges and
        // has no proper subset with the same property.
        let c = pentagon();
        let covers: Vec<VertexSet> =
            c.ground().subsets().filter(|s| c.edges().iter().all(|e| e.intersects(*s))).collect();
        let mut minimal: Vec<VertexSet> =
            covers.iter().copied().filter(|s| !covers.iter().any(|t| t != s && t.is_subset(*s))).collect();
        minimal.sort();
        assert_eq!(c.alexander_dual().unwrap().edges(), minimal.as_slice());
    }
}
