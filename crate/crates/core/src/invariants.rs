//! Multigraded Betti numbers via Hochster's formula, and the projective
//! dimension and regularity read off from them.
//!
//! Everything is stated for the quotient `S/I(C)`: the table records
//! `β_{i,A}(S/I(C)) = dim H̃_{|A|-i-1}(Δ_C[A])` for `i ≥ 1`, which equals
//! `β_{i-1,A}(I(C))`. Hence `pd(S/I) = pd(I) + 1`, while the regularity
//! reported is that of the ideal, `max (|A| - i) + 1 = reg(S/I) + 1`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::clutter::Clutter;
use crate::domination;
use crate::error::{Error, Result};
use crate::homology::{homology_dims, induced_complex, FieldSpec, HomologyProfile};
use crate::vertex_set::VertexSet;

/// Default cap on the (isolated-free) vertex count for Hochster enumeration.
pub const DEFAULT_MAX_VERTICES: usize = 12;

/// Nonzero multigraded Betti numbers `β_{i,A}(S/I(C))`, `i ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, VertexSet), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, a: VertexSet) -> usize {
        self.entries.get(&(i, a)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, VertexSet, usize)> + '_ {
        self.entries.iter().map(|(&(i, a), &b)| (i, a, b))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `pd(S/I)`; zero for the empty table (zero ideal).
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `reg(I)`; zero for the empty table.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, a)| a.len() + 1 - i).max().unwrap_or(0)
    }

    /// Graded Betti numbers `β_{i,j}` with `j = |A|`, summed over multidegrees.
    pub fn graded(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (i, a, b) in self.iter() {
            *out.entry((i, a.len())).or_insert(0) += b;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    /// `H̃_*(Δ_C̄)`.
    pub homology: HomologyProfile,
    /// `|V(C̄)|`.
    pub vertex_count: usize,
    pub pd: usize,
    pub epsilon: usize,
    /// `H̃_k = 0` for every `k < |V(C̄)| - pd - 1`.
    pub pd_bound_holds: bool,
    /// `H̃_k = 0` for every `k < ε - 1`.
    pub epsilon_bound_holds: bool,
}

/// Hochster computations over a fixed field with a vertex-count guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hochster {
    pub field: FieldSpec,
    pub max_vertices: usize,
}

impl Hochster {
    pub fn new(field: FieldSpec) -> Self {
        Hochster { field, max_vertices: DEFAULT_MAX_VERTICES }
    }

    pub fn with_max_vertices(mut self, max_vertices: usize) -> Self {
        self.max_vertices = max_vertices;
        self
    }

    fn guard(&self, c: &Clutter) -> Result<()> {
        if c.vertex_count() > self.max_vertices {
            return Err(Error::TooLarge { what: "vertex count", size: c.vertex_count(), limit: self.max_vertices });
        }
        Ok(())
    }

    pub fn betti_table(&self, c: &Clutter) -> Result<BettiTable> {
        c.ensure_proper()?;
        if let Some(v) = c.isolated().first() {
            return Err(Error::IsolatedVertex(c.name(v).to_string()));
        }
        self.guard(c)?;
        self.table_unchecked(c)
    }

    /// Strips isolated vertices, which never change Betti numbers.
    fn stripped_table(&self, c: &Clutter) -> Result<BettiTable> {
        c.ensure_proper()?;
        let (stripped, _) = c.strip_isolated();
        self.guard(&stripped)?;
        self.table_unchecked(&stripped)
    }

    fn table_unchecked(&self, c: &Clutter) -> Result<BettiTable> {
        // A vertex of A outside every edge inside A is a cone point of
        // Δ_C[A], so only unions of edges can carry homology.
        let supports: Vec<VertexSet> = c
            .ground()
            .subsets()
            .filter(|&a| {
                !a.is_empty()
                    && c.edges().iter().filter(|e| e.is_subset(a)).fold(VertexSet::EMPTY, |u, &e| u.union(e)) == a
            })
            .collect();
        let field = self.field;
        let per_set = supports
            .into_par_iter()
            .map(|a| {
                let faces = induced_complex(c, a)?;
                Ok((a, homology_dims(&faces, field)))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut entries = BTreeMap::new();
        for (a, profile) in per_set {
            for (d, h) in profile.nonzero() {
                // i = |A| - d - 1
                let i = a.len() as isize - d - 1;
                if i >= 1 {
                    entries.insert((i as usize, a), h);
                }
            }
        }
        Ok(BettiTable { entries })
    }

    /// `pd(S/I(C))`.
    pub fn pd(&self, c: &Clutter) -> Result<usize> {
        Ok(self.stripped_table(c)?.projective_dimension())
    }

    /// `reg(I(C))`.
    pub fn reg(&self, c: &Clutter) -> Result<usize> {
        Ok(self.stripped_table(c)?.regularity())
    }

    /// `reg(I(C^∨))`, which equals `pd(S/I(C))`.
    pub fn pd_via_terai(&self, c: &Clutter) -> Result<usize> {
        let dual = c.alexander_dual()?;
        self.reg(&dual)
    }

    pub fn vanishing_report(&self, c: &Clutter) -> Result<VanishingReport> {
        c.ensure_proper()?;
        let (stripped, _) = c.strip_isolated();
        self.guard(&stripped)?;
        let pd = self.table_unchecked(&stripped)?.projective_dimension();
        let (epsilon, _) = domination::epsilon(&stripped)?;
        let homology = homology_dims(&induced_complex(&stripped, stripped.ground())?, self.field);
        let n = stripped.vertex_count() as isize;
        let vanishes_below = |bound: isize| homology.lowest_nonzero().is_none_or(|d| d >= bound);
        Ok(VanishingReport {
            pd_bound_holds: vanishes_below(n - pd as isize - 1),
            epsilon_bound_holds: vanishes_below(epsilon as isize - 1),
            vertex_count: stripped.vertex_count(),
            pd,
            epsilon,
            homology,
        })
    }
}

pub fn betti_table(c: &Clutter, field: FieldSpec) -> Result<BettiTable> {
    Hochster::new(field).betti_table(c)
}

pub fn pd_quotient(c: &Clutter, field: FieldSpec) -> Result<usize> {
    Hochster::new(field).pd(c)
}

pub fn reg_ideal(c: &Clutter, field: FieldSpec) -> Result<usize> {
    Hochster::new(field).reg(c)
}

pub fn pd_via_terai(c: &Clutter, field: FieldSpec) -> Result<usize> {
    Hochster::new(field).pd_via_terai(c)
}

pub fn homology_vanishing_report(c: &Clutter, field: FieldSpec) -> Result<VanishingReport> {
    Hochster::new(field).vanishing_report(c)
}
