//! Cross-checks of every invariant and bound on a single clutter.
//!
//! Each check recomputes its quantities through the public operations and
//! reports a [`Violation`] instead of failing fast, so a campaign can dump all
//! problems with the offending clutter.

use serde::Serialize;

use crate::bounds::{taylor_reg_bound, verify_exact_sequence, TAYLOR_MAX_EDGES};
use crate::clutter::Clutter;
use crate::domination::{
    edge_cover_number, epsilon, independent_domination, is_edgewise_dominant, is_maximal_independent,
};
use crate::error::Result;
use crate::homology::FieldSpec;
use crate::invariants::Hochster;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub clutter: String,
    pub detail: String,
}

struct Collector<'a> {
    clutter: &'a Clutter,
    found: Vec<Violation>,
}

impl Collector<'_> {
    fn require(&mut self, ok: bool, check: &'static str, detail: impl FnOnce() -> String) {
        if !ok {
            self.found.push(Violation { check, clutter: self.clutter.to_string(), detail: detail() });
        }
    }
}

/// Runs every per-clutter check. `colon_sets` lists the sets `A` for which
/// `pd(C) ≤ max(pd(C + A), pd(C : A))` is checked; sets that are empty or
/// contain an edge are skipped.
pub fn check_clutter(c: &Clutter, hochster: &Hochster, colon_sets: &[VertexSet]) -> Result<Vec<Violation>> {
    c.ensure_proper()?;
    let mut out = Collector { clutter: c, found: Vec::new() };
    let n = c.vertex_count();
    let (stripped, isolated) = c.strip_isolated();
    let table = hochster.betti_table(&stripped)?;
    let pd = table.projective_dimension();
    let reg = table.regularity();

    let (eps, family) = epsilon(c)?;
    out.require(family.len() == eps && is_edgewise_dominant(c, &family)?, "epsilon-witness", || {
        format!("witness {family:?} does not certify ε = {eps}")
    });
    let (i, mis) = independent_domination(c)?;
    out.require(mis.len() == i && is_maximal_independent(c, mis), "independent-witness", || {
        format!("witness {mis:?} does not certify i = {i}")
    });
    let bh = n - i;
    out.require(bh <= pd, "big-height-lower-bound", || format!("n - i = {bh} > pd = {pd}"));
    out.require(pd <= n - eps, "edgewise-bound", || format!("pd = {pd} > n - ε = {}", n - eps));

    for (k, &g) in stripped.edges().iter().enumerate() {
        out.require(table.get(1, g) == 1, "betti-generators", || format!("β_1 of edge #{k} is {}", table.get(1, g)));
    }
    let linear_strand = table.iter().filter(|&(i, _, _)| i == 1).count();
    out.require(linear_strand == stripped.edge_count(), "betti-generators", || {
        format!("{linear_strand} entries in homological degree 1 for {} edges", stripped.edge_count())
    });
    out.require(reg >= c.max_edge_size(), "reg-at-least-degree", || {
        format!("reg = {reg} < max edge size {}", c.max_edge_size())
    });

    if c.has_edges() {
        let faltings = n - (n - 1) / bh;
        out.require(pd <= faltings, "faltings-bound", || format!("pd = {pd} > {faltings}"));
        if eps * (n - i) >= i {
            out.require(n - eps <= faltings, "comparison-predicate", || {
                format!("ε(n-i) ≥ i but n - ε = {} > Faltings {faltings}", n - eps)
            });
        }

        let dual = stripped.alexander_dual()?;
        out.require(dual.max_edge_size() == bh, "big-height-dual", || {
            format!("bh = {bh} but the largest minimal cover has {} vertices", dual.max_edge_size())
        });
        out.require(dual.alexander_dual()? == stripped, "dual-involution", || {
            format!("dual of dual is {}", dual.alexander_dual().map(|d| d.to_string()).unwrap_or_default())
        });
        let terai = hochster.reg(&dual)?;
        out.require(terai == pd, "terai", || format!("pd = {pd} but reg(dual) = {terai}"));
        let (eps_dual, _) = epsilon(&dual)?;
        out.require(reg + eps_dual <= stripped.vertex_count(), "dual-edgewise-reg", || {
            format!("reg = {reg} > |V| - ε(dual) = {}", stripped.vertex_count() - eps_dual)
        });

        let alpha = edge_cover_number(&stripped)?;
        let alpha_bound = stripped.vertex_count() - alpha + 1;
        out.require(reg <= alpha_bound, "alpha-reg-bound", || format!("reg = {reg} > {alpha_bound}"));
        let d = stripped.max_edge_size();
        out.require(alpha * d >= stripped.vertex_count(), "alpha-counting", || {
            format!("α = {alpha} edges of size ≤ {d} cannot cover {} vertices", stripped.vertex_count())
        });
        if c.trivial_vertices().is_empty() {
            out.require(eps <= alpha, "epsilon-below-alpha", || format!("ε = {eps} > α = {alpha}"));
        }
        if c.edge_count() <= TAYLOR_MAX_EDGES {
            let taylor = taylor_reg_bound(c)?;
            out.require(reg <= taylor, "taylor-bound", || format!("reg = {reg} > {taylor}"));
            out.require(taylor == alpha_bound, "taylor-attained-at-cover", || {
                format!("Taylor bound {taylor} differs from |V̄| - α + 1 = {alpha_bound}")
            });
        }
    }

    let vanishing = hochster.vanishing_report(c)?;
    out.require(vanishing.pd_bound_holds, "vanishing-pd", || format!("{:?}", vanishing));
    out.require(vanishing.epsilon_bound_holds, "vanishing-epsilon", || format!("{:?}", vanishing));

    for &a in colon_sets {
        if a.is_empty() || !c.is_independent(a) {
            continue;
        }
        let seq = verify_exact_sequence(c, a, hochster)?;
        out.require(seq.holds, "exact-sequence", || format!("A = {}: {seq:?}", c.format_set(a)));
    }

    // Adding isolated vertices back must not change pd.
    if !isolated.is_empty() {
        let direct = hochster.pd(c)?;
        out.require(direct == pd, "isolated-invariance", || format!("{direct} != {pd}"));
    }
    Ok(out.found)
}

/// Betti numbers over `GF(p)` dominate the rational ones entrywise.
pub fn check_field_dominance(c: &Clutter, p: u32, max_vertices: usize) -> Result<Vec<Violation>> {
    let (stripped, _) = c.strip_isolated();
    let rational = Hochster::new(FieldSpec::Rationals).with_max_vertices(max_vertices).betti_table(&stripped)?;
    let modular = Hochster::new(FieldSpec::prime(p)?).with_max_vertices(max_vertices).betti_table(&stripped)?;
    let mut out = Collector { clutter: c, found: Vec::new() };
    for (i, a, b) in rational.iter() {
        out.require(modular.get(i, a) >= b, "field-dominance", || {
            format!("β_{{{i},{}}} is {b} over Q but {} over GF({p})", c.format_set(a), modular.get(i, a))
        });
    }
    Ok(out.found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_is_clean() {
        let p = Clutter::numbered(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 1]]).unwrap();
        let colon: Vec<VertexSet> = p.ground().subsets().collect();
        let v = check_clutter(&p, &Hochster::new(FieldSpec::GF2), &colon).unwrap();
        assert!(v.is_empty(), "{v:?}");
        assert!(check_field_dominance(&p, 2, 12).unwrap().is_empty());
    }

    #[test]
    fn isolated_and_trivial_edges() {
        let c = Clutter::numbered(5, &[&[1], &[2, 3], &[3, 4]]).unwrap();
        let v = check_clutter(&c, &Hochster::new(FieldSpec::Rationals), &[VertexSet::singleton(1)]).unwrap();
        assert!(v.is_empty(), "{v:?}");
        let empty = Clutter::numbered(3, &[]).unwrap();
        assert!(check_clutter(&empty, &Hochster::new(FieldSpec::GF2), &[]).unwrap().is_empty());
    }
}
