//! Exact minimum set cover by iterative deepening.

use crate::vertex_set::VertexSet;

/// Smallest list of indices into `sets` whose union contains `target`, or
/// `None` when even all of them together miss part of `target`.
///
/// Depth limits are tried in increasing order up to a greedy upper bound. At
/// each node the search branches on the uncovered vertex with the fewest
/// candidate sets, trying candidates in index order, so the returned cover is
/// deterministic. Indices come back sorted.
pub(crate) fn min_cover(target: VertexSet, sets: &[VertexSet]) -> Option<Vec<usize>> {
    if target.is_empty() {
        return Some(Vec::new());
    }
    let reach = sets.iter().fold(VertexSet::EMPTY, |acc, &s| acc.union(s));
    if !target.is_subset(reach) {
        return None;
    }
    let upper = greedy_cover(target, sets);
    let mut search = Search { sets, chosen: Vec::with_capacity(upper.len()) };
    for depth in 1..upper.len() {
        if search.run(target, depth) {
            let mut found = search.chosen;
            found.sort_unstable();
            return Some(found);
        }
    }
    let mut found = upper;
    found.sort_unstable();
    Some(found)
}

fn greedy_cover(target: VertexSet, sets: &[VertexSet]) -> Vec<usize> {
    let mut uncovered = target;
    let mut picked = Vec::new();
    while !uncovered.is_empty() {
        let (best, _) = sets
            .iter()
            .enumerate()
            .map(|(j, s)| (j, s.intersection(uncovered).len()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("feasibility checked by caller");
        picked.push(best);
        uncovered = uncovered.difference(sets[best]);
    }
    picked
}

struct Search<'a> {
    sets: &'a [VertexSet],
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, uncovered: VertexSet, budget: usize) -> bool {
        if uncovered.is_empty() {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let best_gain = self.sets.iter().map(|s| s.intersection(uncovered).len()).max().unwrap_or(0);
        if best_gain * budget < uncovered.len() {
            return false;
        }
        // Branch on the vertex with the fewest candidate sets.
        let mut pivot = None;
        let mut fewest = usize::MAX;
        for v in uncovered {
            let count = self.sets.iter().filter(|s| s.contains(v)).count();
            if count < fewest {
                fewest = count;
                pivot = Some(v);
            }
        }
        let pivot = pivot.expect("uncovered is nonempty");
        for (j, s) in self.sets.iter().enumerate() {
            if !s.contains(pivot) {
                continue;
            }
            self.chosen.push(j);
            if self.run(uncovered.difference(*s), budget - 1) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}
