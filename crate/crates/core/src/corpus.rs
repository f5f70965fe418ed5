//! Test corpora: every clutter on a small vertex set, and seeded random
//! clutters.
//!
//! Random model: draw an edge count `m` uniformly from `1..=2n`; draw each
//! edge by picking a size uniformly from `1..=n` and then a uniform subset of
//! that size; keep the inclusion-minimal edges. The ground set is always all
//! `n` vertices, so some may end up isolated.

use rand::seq::index::sample;
use rand::Rng;

use crate::clutter::{minimalize, numbered_names, Clutter};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest vertex count [`all_clutters`] accepts (7580 clutters at 5).
pub const ENUMERATION_MAX_VERTICES: usize = 5;

/// Every clutter of nonempty edges on vertices `1..=n`, including the one
/// without edges. Output order is deterministic.
pub fn all_clutters(n: usize) -> Result<Vec<Clutter>> {
    if n > ENUMERATION_MAX_VERTICES {
        return Err(Error::TooLarge { what: "enumeration vertex count", size: n, limit: ENUMERATION_MAX_VERTICES });
    }
    let names = numbered_names(n)?;
    let ground = VertexSet::full(n);
    let mut candidates: Vec<VertexSet> = ground.subsets().filter(|s| !s.is_empty()).collect();
    candidates.sort();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    grow_antichains(&candidates, 0, &mut chosen, &mut |edges| {
        out.push(Clutter::from_canonical(names.clone(), ground, edges.to_vec()));
    });
    Ok(out)
}

fn grow_antichains(
    candidates: &[VertexSet],
    from: usize,
    chosen: &mut Vec<VertexSet>,
    emit: &mut impl FnMut(&[VertexSet]),
) {
    emit(chosen);
    for j in from..candidates.len() {
        let s = candidates[j];
        if chosen.iter().any(|c| c.is_subset(s) || s.is_subset(*c)) {
            continue;
        }
        chosen.push(s);
        grow_antichains(candidates, j + 1, chosen, emit);
        chosen.pop();
    }
}

pub fn random_clutter<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Clutter> {
    if n == 0 {
        return Err(Error::BadSpec("random clutters need n >= 1".into()));
    }
    let names = numbered_names(n)?;
    let m = rng.random_range(1..=2 * n);
    let raw: Vec<VertexSet> = (0..m)
        .map(|_| {
            let size = rng.random_range(1..=n);
            sample(rng, n, size).iter().collect()
        })
        .collect();
    let edges = minimalize(raw);
    Ok(Clutter::from_canonical(names, VertexSet::full(n), edges))
}

/// A uniformly chosen nonempty independent set, if one exists.
pub fn random_independent_set<R: Rng + ?Sized>(rng: &mut R, c: &Clutter) -> Option<VertexSet> {
    let options: Vec<VertexSet> = c.ground().subsets().filter(|&s| !s.is_empty() && c.is_independent(s)).collect();
    if options.is_empty() {
        None
    } else {
        Some(options[rng.random_range(0..options.len())])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts_match_dedekind_numbers() {
        // Dedekind numbers 2, 3, 6, 20, 168, 7581 count antichains of subsets,
        // including {∅}; clutters exclude that one.
        let counts: Vec<usize> = (0..=5).map(|n| all_clutters(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19, 167, 7580]);
        assert!(all_clutters(6).is_err());
    }

    #[test]
    fn enumeration_is_distinct() {
        let all = all_clutters(4).unwrap();
        let set: std::collections::HashSet<_> = all.iter().map(|c| c.edges().to_vec()).collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn random_is_seeded() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20).map(|_| random_clutter(&mut rng, 6).unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
        assert_ne!(draw(3), draw(4));
        assert!(draw(5).iter().all(|c| c.has_edges() && c.vertex_count() == 6));
    }

    #[test]
    fn independent_sets_are_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let c = random_clutter(&mut rng, 5).unwrap();
            if let Some(a) = random_independent_set(&mut rng, &c) {
                assert!(!a.is_empty() && c.is_independent(a));
            }
        }
        let all_trivial = Clutter::numbered(2, &[&[1], &[2]]).unwrap();
        assert_eq!(random_independent_set(&mut rng, &all_trivial), None);
    }
}
