//! Exact domination parameters of clutters.
//!
//! * `ε(C)`: the minimum size of an edgewise-dominant family of edges.
//! * `i(C)`: the minimum size of a maximal independent set.
//! * big height: the maximum size of a minimal vertex cover, `|V(C)| - i(C)`.
//! * `α(C)`: the minimum number of edges covering every vertex.
//!
//! A vertex lying in a trivial edge needs no domination, nor does an isolated
//! vertex. Every other vertex must lie in an edge of the family or have a
//! neighbor that does.

use serde::Serialize;

use crate::clutter::Clutter;
use crate::cover::min_cover;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    pub epsilon: usize,
    pub i_dom: usize,
    pub big_height: usize,
    /// Edge cover number of the clutter with isolated vertices removed.
    pub alpha: usize,
    pub witness_f: Vec<VertexSet>,
    pub witness_i: VertexSet,
}

/// Vertices that an edgewise-dominant family has to reach.
fn must_dominate(c: &Clutter) -> VertexSet {
    c.support().difference(c.trivial_vertices())
}

/// Vertices dominated by a single edge: its members and all their neighbors.
fn closed_neighborhood(c: &Clutter, e: VertexSet) -> VertexSet {
    e.iter().fold(e, |acc, u| acc.union(c.neighbors_unchecked(u)))
}

pub fn is_edgewise_dominant(c: &Clutter, family: &[VertexSet]) -> Result<bool> {
    c.ensure_proper()?;
    if let Some(&bad) = family.iter().find(|f| !c.contains_edge(**f)) {
        return Err(Error::NotAnEdge(c.format_set(bad)));
    }
    let reached = family.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f));
    Ok(must_dominate(c).iter().all(|v| reached.contains(v) || c.neighbors_unchecked(v).intersects(reached)))
}

/// `ε(C)` with an optimal edgewise-dominant family.
pub fn epsilon(c: &Clutter) -> Result<(usize, Vec<VertexSet>)> {
    c.ensure_proper()?;
    let reach: Vec<VertexSet> = c.edges().iter().map(|&e| closed_neighborhood(c, e)).collect();
    let picked = min_cover(must_dominate(c), &reach).expect("every non-isolated vertex lies in an edge");
    let family: Vec<VertexSet> = picked.into_iter().map(|j| c.edges()[j]).collect();
    Ok((family.len(), family))
}

/// `i(C)` with a smallest maximal independent set.
pub fn independent_domination(c: &Clutter) -> Result<(usize, VertexSet)> {
    c.ensure_proper()?;
    let order: Vec<VertexId> = c.ground().iter().collect();
    let incident: Vec<Vec<VertexSet>> =
        (0..c.names().len()).map(|v| c.edges().iter().copied().filter(|e| e.contains(v)).collect()).collect();
    let mut search = MisSearch { order: &order, incident: &incident, best: None };
    search.run(0, VertexSet::EMPTY, VertexSet::EMPTY);
    let best = search.best.expect("a maximal independent set always exists");
    Ok((best.len(), best))
}

struct MisSearch<'a> {
    order: &'a [VertexId],
    incident: &'a [Vec<VertexSet>],
    best: Option<VertexSet>,
}

impl MisSearch<'_> {
    /// Whether excluded vertex `v` is, or can still become, blocked: some
    /// edge through `v` has no other excluded member.
    fn blockable(&self, v: VertexId, excluded: VertexSet) -> bool {
        self.incident[v].iter().any(|e| !e.without(v).intersects(excluded))
    }

    fn blocked(&self, v: VertexId, chosen: VertexSet) -> bool {
        self.incident[v].iter().any(|e| e.without(v).is_subset(chosen))
    }

    fn run(&mut self, pos: usize, chosen: VertexSet, excluded: VertexSet) {
        if self.best.is_some_and(|b| chosen.len() >= b.len()) {
            return;
        }
        let Some(&v) = self.order.get(pos) else {
            if excluded.iter().all(|u| self.blocked(u, chosen)) {
                self.best = Some(chosen);
            }
            return;
        };
        let with_v = chosen.with(v);
        if !self.incident[v].iter().any(|e| e.is_subset(with_v)) {
            self.run(pos + 1, with_v, excluded);
        }
        let excluded = excluded.with(v);
        // Excluding v can strand v itself or an earlier excluded neighbor.
        if self.blockable(v, excluded) && excluded.iter().all(|u| self.blockable(u, excluded)) {
            self.run(pos + 1, chosen, excluded);
        }
    }
}

/// Maximum size of a minimal vertex cover.
pub fn big_height(c: &Clutter) -> Result<usize> {
    c.ensure_proper()?;
    if !c.has_edges() {
        return Err(Error::NoEdges);
    }
    let (i, _) = independent_domination(c)?;
    Ok(c.vertex_count() - i)
}

/// Smallest family of edges whose union is the whole ground set.
pub fn edge_cover(c: &Clutter) -> Result<Vec<VertexSet>> {
    c.ensure_proper()?;
    if let Some(v) = c.isolated().first() {
        return Err(Error::IsolatedVertex(c.name(v).to_string()));
    }
    let picked = min_cover(c.ground(), c.edges()).expect("no isolated vertices");
    Ok(picked.into_iter().map(|j| c.edges()[j]).collect())
}

pub fn edge_cover_number(c: &Clutter) -> Result<usize> {
    edge_cover(c).map(|f| f.len())
}

pub fn domination_report(c: &Clutter) -> Result<DominationReport> {
    let (epsilon, witness_f) = epsilon(c)?;
    let (i_dom, witness_i) = independent_domination(c)?;
    let (stripped, _) = c.strip_isolated();
    Ok(DominationReport {
        epsilon,
        i_dom,
        big_height: c.vertex_count() - i_dom,
        alpha: edge_cover_number(&stripped)?,
        witness_f,
        witness_i,
    })
}

/// True iff `s` is independent and no vertex outside it can be added.
pub fn is_maximal_independent(c: &Clutter, s: VertexSet) -> bool {
    s.is_subset(c.ground())
        && c.is_independent(s)
        && c.ground().difference(s).iter().all(|v| !c.is_independent(s.with(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{connected_graph_clutter, standard_graph, FamilyKind, FamilySpec};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().map(|x| x - 1).collect()
    }

    fn pentagon() -> Clutter {
        Clutter::numbered(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 1]]).unwrap()
    }

    fn path_clutter(n: usize, k: usize) -> Clutter {
        let g = standard_graph(&FamilySpec::new(FamilyKind::Path, n, k)).unwrap();
        connected_graph_clutter(&g, k).unwrap()
    }

    // Independent oracles: plain enumeration straight from the definitions.
    fn epsilon_brute(c: &Clutter) -> usize {
        let m = c.edges().len();
        (0u32..1 << m)
            .filter(|mask| {
                let f: Vec<VertexSet> = (0..m).filter(|j| mask >> j & 1 == 1).map(|j| c.edges()[j]).collect();
                is_edgewise_dominant(c, &f).unwrap()
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn i_brute(c: &Clutter) -> usize {
        c.ground().subsets().filter(|&s| is_maximal_independent(c, s)).map(VertexSet::len).min().unwrap()
    }

    #[test]
    fn dominance_examples() {
        let p = pentagon();
        assert!(is_edgewise_dominant(&p, &[set(&[1, 2]), set(&[3, 4])]).unwrap());
        assert!(!is_edgewise_dominant(&p, &[set(&[1, 2])]).unwrap());
        let empty = Clutter::numbered(3, &[]).unwrap();
        assert!(is_edgewise_dominant(&empty, &[]).unwrap());
        assert!(matches!(is_edgewise_dominant(&p, &[set(&[1, 3])]), Err(Error::NotAnEdge(_))));
    }

    #[test]
    fn trivial_edge_vertices_are_exempt() {
        // Vertex 1 sits in a trivial edge and has no neighbors.
        let c = Clutter::numbered(3, &[&[1], &[2, 3]]).unwrap();
        assert!(is_edgewise_dominant(&c, &[set(&[2, 3])]).unwrap());
        let only_trivial = Clutter::numbered(2, &[&[1], &[2]]).unwrap();
        assert_eq!(epsilon(&only_trivial).unwrap().0, 0);
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(&pentagon()).unwrap().0, 2);
        assert_eq!(epsilon(&path_clutter(3, 2)).unwrap().0, 1);
        assert_eq!(epsilon(&Clutter::numbered(2, &[&[1, 2]]).unwrap()).unwrap(), (1, vec![set(&[1, 2])]));
        assert_eq!(epsilon(&Clutter::numbered(4, &[]).unwrap()).unwrap().0, 0);
    }

    #[test]
    fn independent_domination_examples() {
        let (i, w) = independent_domination(&path_clutter(3, 2)).unwrap();
        assert_eq!((i, w), (1, set(&[2])));
        assert_eq!(independent_domination(&pentagon()).unwrap().0, 2);
        let k4 = Clutter::numbered(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]).unwrap();
        assert_eq!(independent_domination(&k4).unwrap().0, 1);
        // Isolated vertices belong to every maximal independent set.
        let c = Clutter::numbered(3, &[&[1, 2]]).unwrap();
        assert_eq!(independent_domination(&c).unwrap().0, 2);
    }

    #[test]
    fn big_height_examples() {
        assert_eq!(big_height(&pentagon()).unwrap(), 3);
        assert_eq!(big_height(&Clutter::numbered(2, &[&[1, 2]]).unwrap()).unwrap(), 1);
        assert_eq!(big_height(&Clutter::numbered(2, &[&[1], &[2]]).unwrap()).unwrap(), 2);
        assert_eq!(big_height(&Clutter::numbered(2, &[]).unwrap()), Err(Error::NoEdges));
    }

    #[test]
    fn big_height_is_largest_dual_edge() {
        let c = Clutter::numbered(6, &[&[1, 2, 3], &[3, 4], &[4, 5, 6], &[1, 6]]).unwrap();
        let dual = c.alexander_dual().unwrap();
        assert_eq!(big_height(&c).unwrap(), dual.max_edge_size());
    }

    #[test]
    fn edge_cover_examples() {
        // Oracle: five edges of size two need at least three to cover five vertices,
        // and {12, 34, 45} works.
        assert_eq!(edge_cover_number(&pentagon()).unwrap(), 3);
        assert_eq!(edge_cover_number(&Clutter::numbered(2, &[&[1, 2]]).unwrap()).unwrap(), 1);
        assert_eq!(edge_cover_number(&Clutter::numbered(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap()).unwrap(), 2);
        assert!(matches!(edge_cover_number(&Clutter::numbered(3, &[&[1, 2]]).unwrap()), Err(Error::IsolatedVertex(_))));
    }

    #[test]
    fn improper_is_rejected() {
        let c = Clutter::numbered(2, &[&[1, 2]]).unwrap().colon(set(&[1, 2])).unwrap();
        assert_eq!(epsilon(&c), Err(Error::ImproperClutter));
        assert_eq!(independent_domination(&c), Err(Error::ImproperClutter));
    }

    #[test]
    fn solvers_match_enumeration_on_small_clutters() {
        let cases = [
            Clutter::numbered(6, &[&[1, 2, 3], &[3, 4], &[4, 5, 6], &[1, 6]]).unwrap(),
            Clutter::numbered(5, &[&[1], &[2, 3], &[3, 4, 5], &[2, 5]]).unwrap(),
            Clutter::numbered(7, &[&[1, 2], &[2, 3], &[3, 4], &[5, 6, 7]]).unwrap(),
            pentagon(),
            path_clutter(8, 3),
        ];
        for c in &cases {
            let (e, f) = epsilon(c).unwrap();
            assert_eq!(e, epsilon_brute(c), "{c}");
            assert!(is_edgewise_dominant(c, &f).unwrap());
            let (i, w) = independent_domination(c).unwrap();
            assert_eq!(i, i_brute(c), "{c}");
            assert!(is_maximal_independent(c, w));
        }
    }
}
