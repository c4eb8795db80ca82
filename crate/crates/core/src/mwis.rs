//! Maximum weight independent sets on powers of paths and cycles.
//!
//! Weights are arbitrary signed integers and the empty set is always
//! admissible. Among optimal sets the lexicographically smallest sorted
//! member list is returned.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{circular_distance, Vertex, VertexSet};

/// Integer weights indexed by vertex `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn get(&self, v: Vertex) -> i64 {
        self.0[v - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight_of(&self, s: &VertexSet) -> i64 {
        s.iter().map(|v| self.get(v)).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwisResult {
    pub weight: i64,
    pub set: VertexSet,
}

fn check_shape(n: usize, m: usize, w: &WeightVector, min_n: usize) -> Result<()> {
    if n < min_n {
        return Err(Error::InvalidStructure("order too small"));
    }
    if m == 0 {
        return Err(Error::InvalidStructure("power exponent must be at least 1"));
    }
    if w.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: w.len() });
    }
    Ok(())
}

/// Best set on the vertex range `lo..=hi` of a path power, where members must
/// be more than `m` apart. Returns weight and sorted members.
fn best_on_range(w: &WeightVector, m: usize, lo: Vertex, hi: Vertex) -> (i64, Vec<Vertex>) {
    if lo > hi {
        return (0, Vec::new());
    }
    // suffix[k] = best weight using vertices lo + k ..= hi
    let len = hi - lo + 1;
    let mut suffix = vec![0i64; len + 1];
    for k in (0..len).rev() {
        let take = w.get(lo + k) + suffix.get(k + m + 1).copied().unwrap_or(0);
        suffix[k] = suffix[k + 1].max(take);
    }
    let mut members = Vec::new();
    let mut k = 0;
    while k < len && suffix[k] != 0 {
        let take = w.get(lo + k) + suffix.get(k + m + 1).copied().unwrap_or(0);
        if take == suffix[k] {
            members.push(lo + k);
            k += m + 1;
        } else {
            k += 1;
        }
    }
    (suffix[0], members)
}

fn result(n: usize, weight: i64, members: &[Vertex]) -> MwisResult {
    let set = VertexSet::from_vertices(n, members.iter().copied()).expect("members lie in 1..=n");
    MwisResult { weight, set }
}

/// Maximum weight independent set of `P_n^m`.
pub fn mwis_path_power(n: usize, m: usize, w: &WeightVector) -> Result<MwisResult> {
    check_shape(n, m, w, 1)?;
    let (weight, members) = best_on_range(w, m, 1, n);
    Ok(result(n, weight, &members))
}

/// Maximum weight independent set of `C_n^m`.
///
/// At most one member lies in `1..=m+1`. Conditioning on which one (or none)
/// leaves a path-power problem on an arc inside `m+2..=n`, where circular
/// and linear distances agree for the purposes of independence.
pub fn mwis_cycle_power(n: usize, m: usize, w: &WeightVector) -> Result<MwisResult> {
    check_shape(n, m, w, 3)?;
    let (mut best_w, mut best) = best_on_range(w, m, m + 2, n);
    for v in 1..=(m + 1).min(n) {
        let lo = v + m + 1;
        let hi = (n + v).saturating_sub(m + 1);
        let (rest_w, rest) = if lo <= hi { best_on_range(w, m, lo, hi) } else { (0, Vec::new()) };
        let total = w.get(v) + rest_w;
        let mut members = vec![v];
        members.extend(rest);
        if total > best_w || (total == best_w && members < best) {
            best_w = total;
            best = members;
        }
    }
    Ok(result(n, best_w, &best))
}

/// `α²_w(C_n^m)`: the heaviest independent pair, smallest `(i, j)` on ties.
pub fn best_pair_cycle_power(n: usize, m: usize, w: &WeightVector) -> Result<MwisResult> {
    check_shape(n, m, w, 3)?;
    if 2 * (m + 1) > n {
        return Err(Error::NoIndependentPair);
    }
    let mut best: Option<(i64, Vertex, Vertex)> = None;
    for i in 1..=n {
        for j in i + 1..=n {
            if circular_distance(i, j, n) > m {
                let s = w.get(i) + w.get(j);
                if best.is_none_or(|(b, _, _)| s > b) {
                    best = Some((s, i, j));
                }
            }
        }
    }
    let (weight, i, j) = best.ok_or(Error::NoIndependentPair)?;
    Ok(result(n, weight, &[i, j]))
}
