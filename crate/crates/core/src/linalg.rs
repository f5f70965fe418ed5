//! Exact matrix rank over GF(2), GF(p) and the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use crate::homology::FieldSpec;

/// Integer matrix stored as sparse rows of `(column, value)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(cols: usize, entries: Vec<Vec<(usize, i64)>>) -> Self {
        debug_assert!(entries.iter().flatten().all(|&(c, _)| c < cols));
        SparseMatrix { rows: entries.len(), cols, entries }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| {
                let mut dense = vec![0; self.cols];
                for &(c, v) in row {
                    dense[c] += v;
                }
                dense
            })
            .collect()
    }

    /// Matrix product `self * other`, densely.
    pub fn mul_dense(&self, other: &SparseMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.cols, other.rows);
        self.entries
            .iter()
            .map(|row| {
                let mut out = vec![0; other.cols];
                for &(k, a) in row {
                    for &(c, b) in &other.entries[k] {
                        out[c] += a * b;
                    }
                }
                out
            })
            .collect()
    }
}

pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    match field {
        FieldSpec::Prime(2) => rank_gf2(m),
        FieldSpec::Prime(p) => rank_mod_p(m, u64::from(p)),
        FieldSpec::Rationals => rank_rational(m),
    }
}

fn rank_gf2(m: &SparseMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.cols];
    let mut rank = 0;
    for row in &m.entries {
        let mut bits = vec![0u64; words];
        for &(c, v) in row {
            if v.rem_euclid(2) == 1 {
                bits[c / 64] ^= 1 << (c % 64);
            }
        }
        while let Some(lead) = bits.iter().position(|&w| w != 0).map(|i| i * 64 + bits[i].trailing_zeros() as usize) {
            match &pivots[lead] {
                Some(p) => bits.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots[lead] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let modulus = p as i64;
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.cols];
    let mut rank = 0;
    for row in &m.entries {
        let mut dense = vec![0u64; m.cols];
        for &(c, v) in row {
            dense[c] = (dense[c] + v.rem_euclid(modulus) as u64) % p;
        }
        let mut start = 0;
        while let Some(lead) = (start..m.cols).find(|&c| dense[c] != 0) {
            start = lead;
            match &pivots[lead] {
                Some(piv) => {
                    // Pivot rows are normalized to a leading 1.
                    let factor = p - dense[lead];
                    for c in lead..m.cols {
                        if piv[c] != 0 {
                            dense[c] = (dense[c] + factor * piv[c]) % p;
                        }
                    }
                }
                None => {
                    let inv = inverse_mod(dense[lead], p);
                    for x in dense[lead..].iter_mut() {
                        *x = *x * inv % p;
                    }
                    pivots[lead] = Some(dense);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn rank_rational(m: &SparseMatrix) -> usize {
    let dense = m.to_dense();
    let small = dense.iter().map(|r| r.iter().map(|&v| i128::from(v)).collect());
    if let Some(r) = rank_fraction_free::<i128>(small, m.cols) {
        return r;
    }
    let big = dense.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect());
    rank_fraction_free::<BigInt>(big, m.cols).expect("big integers do not overflow")
}

/// Integer row reduction over the rationals: each incoming row is eliminated
/// against the stored pivot rows by cross-multiplication and then divided by
/// the gcd of its entries. Returns `None` on overflow of `T`.
fn rank_fraction_free<T>(rows: impl Iterator<Item = Vec<T>>, cols: usize) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let mut pivots: Vec<Option<Vec<T>>> = vec![None; cols];
    let mut rank = 0;
    for mut row in rows {
        let mut start = 0;
        while let Some(lead) = (start..cols).find(|&c| !row[c].is_zero()) {
            start = lead;
            match &pivots[lead] {
                Some(piv) => {
                    let (a, b) = (piv[lead].clone(), row[lead].clone());
                    for c in lead..cols {
                        if piv[c].is_zero() && row[c].is_zero() {
                            continue;
                        }
                        let left = row[c].checked_mul(&a)?;
                        let right = piv[c].checked_mul(&b)?;
                        row[c] = left.checked_sub(&right)?;
                    }
                    normalize(&mut row[lead..]);
                }
                None => {
                    normalize(&mut row[lead..]);
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

fn normalize<T: Clone + Integer + Signed>(row: &mut [T]) {
    let g = row.iter().fold(T::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = x.div_floor(&g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn from_dense(rows: &[Vec<i64>]) -> SparseMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        SparseMatrix::new(
            cols,
            rows.iter()
                .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect())
                .collect(),
        )
    }

    // Oracle: textbook Gauss-Jordan with exact rational entries.
    fn rational_rank_oracle(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
        let cols = rows.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[r][c];
                    let pivot = a[r].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            r += 1;
        }
        r
    }

    // Oracle for GF(2): the row space has 2^rank elements.
    fn gf2_rank_oracle(rows: &[Vec<i64>]) -> usize {
        let masks: Vec<u64> = rows
            .iter()
            .map(|r| r.iter().enumerate().fold(0, |m, (c, &v)| m | ((v.rem_euclid(2) as u64) << c)))
            .collect();
        let mut span = std::collections::HashSet::new();
        for pick in 0u32..1 << masks.len() {
            span.insert((0..masks.len()).filter(|j| pick >> j & 1 == 1).fold(0u64, |acc, j| acc ^ masks[j]));
        }
        span.len().trailing_zeros() as usize
    }

    fn lcg(state: &mut u64) -> u64 {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        *state >> 33
    }

    #[test]
    fn ranks_match_oracles() {
        let mut s = 7u64;
        for _ in 0..200 {
            let rows = (lcg(&mut s) % 7 + 1) as usize;
            let cols = (lcg(&mut s) % 7 + 1) as usize;
            let m: Vec<Vec<i64>> =
                (0..rows).map(|_| (0..cols).map(|_| (lcg(&mut s) % 5) as i64 - 2).collect()).collect();
            let sm = from_dense(&m);
            assert_eq!(rank(&sm, FieldSpec::Rationals), rational_rank_oracle(&m), "{m:?}");
            assert_eq!(rank(&sm, FieldSpec::Prime(2)), gf2_rank_oracle(&m), "{m:?}");
            assert!(rank(&sm, FieldSpec::Prime(3)) <= rank(&sm, FieldSpec::Rationals));
        }
    }

    #[test]
    fn torsion_shows_up_mod_p() {
        // det = 6
        let m = from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(rank(&m, FieldSpec::Rationals), 2);
        assert_eq!(rank(&m, FieldSpec::Prime(2)), 1);
        assert_eq!(rank(&m, FieldSpec::Prime(3)), 1);
        assert_eq!(rank(&m, FieldSpec::Prime(5)), 2);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 3;
        let m = vec![vec![big, big - 1, 7], vec![big - 5, big, 11], vec![3, big - 9, big]];
        let sm = from_dense(&m);
        assert_eq!(rank(&sm, FieldSpec::Rationals), rational_rank_oracle(&m));
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(rank(&SparseMatrix::new(0, vec![]), FieldSpec::Rationals), 0);
        assert_eq!(rank(&SparseMatrix::new(0, vec![vec![], vec![]]), FieldSpec::Prime(2)), 0);
    }
}
