//! Stanley-Reisner complexes and their reduced homology.
//!
//! The faces of `Δ_C` are the independent sets of `C`; `Δ_C[A]` keeps the
//! faces inside `A`. Homology is reduced: the empty face spans degree `-1`,
//! so the complex `{∅}` has `H̃_{-1} = 1` and every complex with a vertex has
//! `H̃_{-1} = 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseMatrix};
use crate::vertex_set::VertexSet;

/// Largest vertex set whose induced complex will be enumerated.
pub const MAX_COMPLEX_VERTICES: usize = 22;

/// Coefficient field for homology and Betti numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);

    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::BadField(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Accepts `q`, `gf2` and `gf:<p>`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            "gf2" => Ok(FieldSpec::GF2),
            _ => {
                let p = s
                    .strip_prefix("gf:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::BadField(format!("`{s}` (expected q, gf2 or gf:<p>)")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::Prime(2) => f.write_str("gf2"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Faces of a simplicial complex grouped by dimension, each group in
/// canonical order. Index `0` holds the empty face (dimension `-1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTable {
    levels: Vec<Vec<VertexSet>>,
}

impl FaceTable {
    /// Downward closure of `generators`. The empty face is always included.
    pub fn from_faces(generators: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut all = std::collections::BTreeSet::new();
        all.insert(VertexSet::EMPTY);
        for g in generators {
            if all.contains(&g) {
                continue;
            }
            all.extend(g.subsets());
        }
        let mut levels: Vec<Vec<VertexSet>> = Vec::new();
        for f in all {
            if levels.len() <= f.len() {
                levels.resize_with(f.len() + 1, Vec::new);
            }
            levels[f.len()].push(f);
        }
        FaceTable { levels }
    }

    /// Top dimension; `-1` for the complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.levels.len() as isize - 2
    }

    pub fn faces_of_dim(&self, d: isize) -> &[VertexSet] {
        usize::try_from(d + 1).ok().and_then(|i| self.levels.get(i)).map_or(&[], Vec::as_slice)
    }

    pub fn face_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> VertexSet {
        self.faces_of_dim(0).iter().fold(VertexSet::EMPTY, |a, &f| a.union(f))
    }

    pub fn contains(&self, f: VertexSet) -> bool {
        self.levels.get(f.len()).is_some_and(|l| l.binary_search(&f).is_ok())
    }

    /// `Σ_d (-1)^d · #faces of dimension d`, starting at `d = -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        (-1..=self.dim()).map(|d| sign(d) * self.faces_of_dim(d).len() as i64).sum()
    }

    /// Boundary map `∂_d` from `d`-chains to `(d-1)`-chains, one row per
    /// `d`-face. Removing the `j`-th smallest vertex carries sign `(-1)^j`.
    pub fn boundary_matrix(&self, d: isize) -> SparseMatrix {
        let lower = self.faces_of_dim(d - 1);
        let entries = self
            .faces_of_dim(d)
            .iter()
            .map(|&face| {
                face.iter()
                    .enumerate()
                    .map(|(j, v)| {
                        let col = lower.binary_search(&face.without(v)).expect("face table is downward closed");
                        (col, if j % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        SparseMatrix::new(lower.len(), entries)
    }
}

fn sign(d: isize) -> i64 {
    if d.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Reduced Betti numbers `dim H̃_d` for `d = -1 ..= dim`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyProfile {
    dims: Vec<usize>,
}

impl HomologyProfile {
    /// Dimension in degree `d`; zero outside the stored range.
    pub fn get(&self, d: isize) -> usize {
        usize::try_from(d + 1).ok().and_then(|i| self.dims.get(i)).copied().unwrap_or(0)
    }

    /// `(degree, dimension)` pairs with nonzero dimension.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims.iter().enumerate().filter(|(_, &h)| h > 0).map(|(i, &h)| (i as isize - 1, h))
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&h| h == 0)
    }

    /// Lowest degree with nonzero homology.
    pub fn lowest_nonzero(&self) -> Option<isize> {
        self.nonzero().next().map(|(d, _)| d)
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.nonzero().map(|(d, h)| sign(d) * h as i64).sum()
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.nonzero().map(|(d, h)| (d.to_string(), h)))
    }
}

/// `Δ_C[A]`: the independent subsets of `A`.
pub fn induced_complex(c: &Clutter, a: VertexSet) -> Result<FaceTable> {
    c.ensure_proper()?;
    if let Some(v) = a.difference(c.ground()).first() {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    if a.len() > MAX_COMPLEX_VERTICES {
        return Err(Error::TooLarge {
            what: "induced complex vertex count",
            size: a.len(),
            limit: MAX_COMPLEX_VERTICES,
        });
    }
    let inside: Vec<VertexSet> = c.edges().iter().copied().filter(|e| e.is_subset(a)).collect();
    let mut levels = vec![vec![VertexSet::EMPTY]];
    loop {
        let mut next = Vec::new();
        for &face in levels.last().expect("nonempty") {
            let above = face.last().map_or(0, |m| m + 1);
            for v in a.iter().filter(|&v| v >= above) {
                let grown = face.with(v);
                if !inside.iter().any(|e| e.contains(v) && e.is_subset(grown)) {
                    next.push(grown);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        // Extending canonically ordered faces by larger vertices preserves order.
        debug_assert!(next.windows(2).all(|w| w[0] < w[1]));
        levels.push(next);
    }
    Ok(FaceTable { levels })
}

/// Reduced homology of a complex over `field`.
pub fn homology_dims(faces: &FaceTable, field: FieldSpec) -> HomologyProfile {
    let top = faces.dim();
    // ranks[i] = rank ∂_{i-1}; ∂_{-1} and ∂_{top+1} are zero.
    let mut ranks = vec![0usize; (top + 3) as usize];
    for d in 0..=top {
        ranks[(d + 1) as usize] = rank(&faces.boundary_matrix(d), field);
    }
    let dims = (-1..=top)
        .map(|d| {
            let i = (d + 1) as usize;
            faces.faces_of_dim(d).len() - ranks[i] - ranks[i + 1]
        })
        .collect();
    HomologyProfile { dims }
}
