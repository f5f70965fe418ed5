//! Upper bounds on projective dimension and regularity, and how they compare.

use serde::Serialize;

use crate::clutter::Clutter;
use crate::domination::{self, big_height, edge_cover_number, epsilon, independent_domination};
use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::invariants::Hochster;
use crate::vertex_set::VertexSet;

/// Largest generator count [`taylor_reg_bound`] will enumerate subsets of.
pub const TAYLOR_MAX_EDGES: usize = 20;

/// `|V(C)| - ε(C)`.
pub fn edgewise_bound(c: &Clutter) -> Result<usize> {
    let (eps, _) = epsilon(c)?;
    Ok(c.vertex_count() - eps)
}

/// `n - ⌊(n-1)/bh⌋` with `n = |V(C)|`.
pub fn faltings_bound(c: &Clutter) -> Result<usize> {
    let bh = big_height(c)?;
    Ok(faltings_formula(c.vertex_count(), bh))
}

fn faltings_formula(n: usize, bh: usize) -> usize {
    n - n.saturating_sub(1) / bh
}

/// `|V(C)| - α(C) + 1`.
pub fn alpha_reg_bound(c: &Clutter) -> Result<usize> {
    let alpha = edge_cover_number(c)?;
    Ok(c.vertex_count() - alpha + 1)
}

/// Taylor-resolution bound: the maximum over nonempty sets `B` of generators
/// of `|∪B| - |B|`, plus one. Zero for a clutter without edges.
pub fn taylor_reg_bound(c: &Clutter) -> Result<usize> {
    c.ensure_proper()?;
    let edges = c.edges();
    if edges.len() > TAYLOR_MAX_EDGES {
        return Err(Error::TooManyEdges { edges: edges.len(), limit: TAYLOR_MAX_EDGES });
    }
    if edges.is_empty() {
        return Ok(0);
    }
    // suffix_reach[j] = union of edges[j..]
    let mut suffix_reach = vec![VertexSet::EMPTY; edges.len() + 1];
    for j in (0..edges.len()).rev() {
        suffix_reach[j] = suffix_reach[j + 1].union(edges[j]);
    }
    let mut best = i64::MIN;
    taylor_search(edges, &suffix_reach, 0, VertexSet::EMPTY, 0, &mut best);
    Ok((best + 1) as usize)
}

fn taylor_search(
    edges: &[VertexSet],
    suffix_reach: &[VertexSet],
    next: usize,
    union: VertexSet,
    picked: i64,
    best: &mut i64,
) {
    if picked > 0 {
        *best = (*best).max(union.len() as i64 - picked);
    }
    for j in next..edges.len() {
        // Everything still reachable, at the cost of at least one more generator.
        let ceiling = union.union(suffix_reach[j]).len() as i64 - picked - 1;
        if ceiling <= *best {
            return;
        }
        taylor_search(edges, suffix_reach, j + 1, union.union(edges[j]), picked + 1, best);
    }
}

/// `ε · (|V| - i) ≥ i`, the cross-multiplied form of `ε ≥ i / (|V| - i)`.
pub fn comparison_predicate(c: &Clutter) -> Result<bool> {
    c.ensure_proper()?;
    if !c.has_edges() {
        return Err(Error::NoEdges);
    }
    let (eps, _) = epsilon(c)?;
    let (i, _) = independent_domination(c)?;
    Ok(eps * (c.vertex_count() - i) >= i)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactSequenceCheck {
    pub pd: usize,
    pub pd_add: usize,
    pub pd_colon: usize,
    /// `pd(C) ≤ max(pd(C + A), pd(C : A))`.
    pub holds: bool,
}

/// Compares `pd(C)` with `pd(C + A)` and `pd(C : A)`.
pub fn verify_exact_sequence(c: &Clutter, a: VertexSet, hochster: &Hochster) -> Result<ExactSequenceCheck> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let quotient = c.colon(a)?;
    if quotient.is_improper() {
        return Err(Error::ImproperColon(c.format_set(a)));
    }
    let pd = hochster.pd(c)?;
    let pd_add = hochster.pd(&c.add_set(a)?)?;
    let pd_colon = hochster.pd(&quotient)?;
    Ok(ExactSequenceCheck { pd, pd_add, pd_colon, holds: pd <= pd_add.max(pd_colon) })
}

/// Every invariant and bound for one clutter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub field: FieldSpec,
    pub pd: usize,
    pub reg_of_ideal: usize,
    pub epsilon: usize,
    pub i_dom: usize,
    /// `n - i_dom`; zero when there are no edges.
    pub big_height: usize,
    /// Edge cover number after removing isolated vertices.
    pub alpha: usize,
    pub edgewise_bound: usize,
    /// Undefined without edges.
    pub faltings_bound: Option<usize>,
    /// `|V(C̄)| - α + 1`.
    pub alpha_reg_bound: usize,
    /// `None` when the edge count exceeds [`TAYLOR_MAX_EDGES`].
    pub taylor_reg_bound: Option<usize>,
    pub comparison_predicate: Option<bool>,
    pub tight_edgewise: bool,
    pub tight_faltings: Option<bool>,
}

pub fn bounds_report(c: &Clutter, hochster: &Hochster) -> Result<BoundsReport> {
    c.ensure_proper()?;
    let n = c.vertex_count();
    let pd = hochster.pd(c)?;
    let reg_of_ideal = hochster.reg(c)?;
    let dom = domination::domination_report(c)?;
    let has_edges = c.has_edges();
    let faltings = has_edges.then(|| faltings_formula(n, dom.big_height));
    let taylor = match taylor_reg_bound(c) {
        Ok(t) => Some(t),
        Err(Error::TooManyEdges { .. }) => None,
        Err(e) => return Err(e),
    };
    let (stripped, _) = c.strip_isolated();
    let report = BoundsReport {
        n,
        field: hochster.field,
        pd,
        reg_of_ideal,
        epsilon: dom.epsilon,
        i_dom: dom.i_dom,
        big_height: dom.big_height,
        alpha: dom.alpha,
        edgewise_bound: n - dom.epsilon,
        faltings_bound: faltings,
        alpha_reg_bound: stripped.vertex_count() - dom.alpha + 1,
        taylor_reg_bound: taylor,
        comparison_predicate: has_edges.then(|| dom.epsilon * (n - dom.i_dom) >= dom.i_dom),
        tight_edgewise: pd == n - dom.epsilon,
        tight_faltings: faltings.map(|f| f == pd),
    };
    if let Some(problem) = report.violation() {
        return Err(Error::InvariantViolation(format!("{problem} for {c}")));
    }
    Ok(report)
}

impl BoundsReport {
    /// First inequality among the report's fields that fails, if any.
    pub fn violation(&self) -> Option<String> {
        if self.n - self.i_dom > self.pd {
            return Some(format!("big height {} exceeds pd {}", self.n - self.i_dom, self.pd));
        }
        if self.pd > self.edgewise_bound {
            return Some(format!("pd {} exceeds edgewise bound {}", self.pd, self.edgewise_bound));
        }
        if let Some(f) = self.faltings_bound.filter(|&f| self.pd > f) {
            return Some(format!("pd {} exceeds Faltings bound {f}", self.pd));
        }
        if let (Some(true), Some(f)) = (self.comparison_predicate, self.faltings_bound) {
            if self.edgewise_bound > f {
                return Some(format!(
                    "comparison predicate holds but edgewise bound {} exceeds Faltings bound {f}",
                    self.edgewise_bound
                ));
            }
        }
        if let Some(t) = self.taylor_reg_bound.filter(|&t| self.reg_of_ideal > t) {
            return Some(format!("reg {} exceeds Taylor bound {t}", self.reg_of_ideal));
        }
        if self.reg_of_ideal > self.alpha_reg_bound {
            return Some(format!("reg {} exceeds alpha bound {}", self.reg_of_ideal, self.alpha_reg_bound));
        }
        None
    }
}
