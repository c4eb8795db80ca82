//! Closed forms and constructive sequences for powers of paths and cycles.
//!
//! Covers the interval sequences `S(i, j)`, the skeletons `S_C(I)` and
//! `S_P(I)`, per-`I` Grundy values, X-join solvers driven by weighted
//! independent sets, and the lexicographic-product formulas.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{circular_distance, StructuredKind, Vertex, VertexSet};
use crate::mwis::{best_pair_cycle_power, mwis_cycle_power, mwis_path_power, WeightVector};
use crate::product::GammaProfile;
use crate::sequence::VertexSequence;

/// A nonempty independent set kept as a sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IndependentSetRecord {
    members: Vec<Vertex>,
}

impl IndependentSetRecord {
    /// Sorts and deduplicates; rejects the empty set and vertex 0.
    pub fn new(mut members: Vec<Vertex>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        match members.first() {
            None => Err(Error::InvalidStructure("independent set must be nonempty")),
            Some(0) => Err(Error::VertexOutOfRange { vertex: 0, n: 0 }),
            Some(_) => Ok(IndependentSetRecord { members }),
        }
    }

    pub fn from_set(s: &VertexSet) -> Result<Self> {
        Self::new(s.to_vec())
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    /// `m(I)`.
    pub fn min_elem(&self) -> Vertex {
        self.members[0]
    }

    /// `M(I)`.
    pub fn max_elem(&self) -> Vertex {
        self.members[self.members.len() - 1]
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn to_set(&self, n: usize) -> Result<VertexSet> {
        VertexSet::from_vertices(n, self.members.iter().copied())
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.max_elem() {
            v if v > n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    /// Independence in `C_n^m`.
    pub fn check_cycle_power(&self, n: usize, m: usize) -> Result<()> {
        self.check_range(n)?;
        let p = self.size();
        for k in 0..p {
            for l in k + 1..p {
                if circular_distance(self.members[k], self.members[l], n) <= m {
                    return Err(Error::NotIndependent);
                }
            }
        }
        Ok(())
    }

    /// Independence in `P_n^m`.
    pub fn check_path_power(&self, n: usize, m: usize) -> Result<()> {
        self.check_range(n)?;
        if self.members.windows(2).any(|w| w[1] - w[0] <= m) {
            return Err(Error::NotIndependent);
        }
        Ok(())
    }

    /// Membership in `Ĩ`: `m(I) ≤ m + 1` and `M(I) ≥ n − m`.
    pub fn in_path_family(&self, n: usize, m: usize) -> bool {
        self.min_elem() <= m + 1 && self.max_elem() + m >= n
    }
}

/// How a solver reached its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveBranch {
    /// The main factor is complete; the best single part wins.
    Complete,
    /// Weighted independent set on the main factor.
    Mwis,
    /// Direct scan over the admissible family.
    Enumeration,
    /// Split main factor, won by the independent side.
    SplitIndependent,
    /// Split main factor, won by a clique vertex.
    SplitClique,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveDiagnostics {
    pub branch: SolveBranch,
    pub weights: Option<WeightVector>,
    pub mwis_value: Option<i64>,
    pub mwis_set: Option<VertexSet>,
    /// The cycle optimum had fewer than two vertices, so the best pair was used.
    pub used_best_pair: bool,
    /// Vertex 1 was adjoined to move the path optimum into `Ĩ`.
    pub adjoined_first: bool,
    /// The repair argument did not apply and `Ĩ` was scanned instead.
    pub enumeration_fallback: bool,
    /// Agreement of the secondary weight system, when one was run.
    pub cross_check: Option<bool>,
}

impl SolveDiagnostics {
    pub(crate) fn new(branch: SolveBranch) -> Self {
        SolveDiagnostics {
            branch,
            weights: None,
            mwis_value: None,
            mwis_set: None,
            used_best_pair: false,
            adjoined_first: false,
            enumeration_fallback: false,
            cross_check: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XJoinSolveResult {
    pub gamma: usize,
    pub argmax_i: IndependentSetRecord,
    /// Legal sequence of the main factor whose self-footprinted set is `argmax_i`.
    pub main_sequence: VertexSequence,
    pub diagnostics: SolveDiagnostics,
}

/// `γ_gr` of a structured family, when a closed form applies.
pub fn gamma_structured(spec: StructuredKind) -> Result<usize> {
    spec.validate()?;
    Ok(match spec {
        StructuredKind::CyclePower { n, m } if 2 * (m + 1) <= n => n - 2 * m,
        StructuredKind::PathPower { n, m } if m + 2 <= n => n - m,
        StructuredKind::CyclePower { .. } | StructuredKind::PathPower { .. } | StructuredKind::Complete { .. } => 1,
        StructuredKind::Edgeless { n } => n,
        StructuredKind::CoPath { n } if n >= 4 => 3,
        StructuredKind::CoCycle { n } if n >= 5 => 3,
        StructuredKind::CoPath { .. } | StructuredKind::CoCycle { .. } => return Err(Error::NotClosedForm),
    })
}

/// `S(i, j)`: the run `i, i+1, …, j`. In circular mode the walk wraps past `n`.
pub fn interval_sequence(i: Vertex, j: Vertex, n: usize, circular: bool) -> Result<VertexSequence> {
    for v in [i, j] {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if !circular {
        if i > j {
            return Err(Error::InvalidStructure("interval end precedes its start"));
        }
        return Ok(VertexSequence::from_distinct((i..=j).collect()));
    }
    let len = (j + n - i) % n + 1;
    Ok(VertexSequence::from_distinct((0..len).map(|t| (i - 1 + t) % n + 1).collect()))
}

fn wrap(v: usize, n: usize) -> Vertex {
    (v - 1) % n + 1
}

/// Shared prefix `⊕_{j<p} S(i^j, i^{j+1} − (m+1))`.
fn gap_runs(members: &[Vertex], m: usize) -> Vec<Vertex> {
    let mut out = Vec::new();
    for w in members.windows(2) {
        out.extend(w[0]..=w[1] - (m + 1));
    }
    out
}

/// `S_C(I)` on `C_n^m`; a singleton `{k}` is built as `{k, k+m+1}`.
pub fn build_s_c(n: usize, m: usize, i: &IndependentSetRecord) -> Result<VertexSequence> {
    if m == 0 || 2 * (m + 1) > n {
        return Err(Error::InvalidStructure("cycle power must satisfy 2(m+1) <= n"));
    }
    i.check_cycle_power(n, m)?;
    let owned;
    let i = if i.size() == 1 {
        owned = IndependentSetRecord::new(alloc::vec![i.min_elem(), wrap(i.min_elem() + m + 1, n)])?;
        &owned
    } else {
        i
    };
    let members = i.members();
    let (first, last) = (i.min_elem(), i.max_elem());
    let mut out = gap_runs(members, m);
    let start = wrap(last + m + 1, n);
    if start != first {
        let end = wrap(first + n - 1, n);
        out.extend(interval_sequence(start, end, n, true)?.reversed().iter());
    }
    out.push(last);
    Ok(VertexSequence::from_distinct(out))
}

/// `S_P(I)` on `P_n^m` for `I ∈ Ĩ`.
pub fn build_s_p(n: usize, m: usize, i: &IndependentSetRecord) -> Result<VertexSequence> {
    if m == 0 || m + 2 > n {
        return Err(Error::InvalidStructure("path power must satisfy m+2 <= n"));
    }
    i.check_path_power(n, m)?;
    if !i.in_path_family(n, m) {
        return Err(Error::NotInFamily);
    }
    let mut out = gap_runs(i.members(), m);
    out.push(i.max_elem());
    Ok(VertexSequence::from_distinct(out))
}

/// `γ_gr(C_n^m, I)`.
pub fn gamma_given_i_cycle_power(n: usize, m: usize, i: &IndependentSetRecord) -> Result<usize> {
    if m == 0 || 2 * (m + 1) > n {
        return Err(Error::InvalidStructure("cycle power must satisfy 2(m+1) <= n"));
    }
    i.check_cycle_power(n, m)?;
    Ok(n - i.size().max(2) * m)
}

/// `γ_gr(P_n^m, I)` for `I ∈ Ĩ`; other sets are refused.
pub fn gamma_given_i_path_power(n: usize, m: usize, i: &IndependentSetRecord) -> Result<usize> {
    if m == 0 || m + 2 > n {
        return Err(Error::InvalidStructure("path power must satisfy m+2 <= n"));
    }
    i.check_path_power(n, m)?;
    if !i.in_path_family(n, m) {
        return Err(Error::NotInFamily);
    }
    Ok(i.max_elem() - i.min_elem() + 1 - (i.size() - 1) * m)
}

fn check_main(n: usize, m: usize, profile: &GammaProfile, min_n: usize) -> Result<()> {
    if m == 0 || n < min_n {
        return Err(Error::InvalidStructure("invalid power graph parameters"));
    }
    profile.expect_len(n)
}

/// The complete main factor: the best part alone.
fn solve_complete(profile: &GammaProfile) -> Result<XJoinSolveResult> {
    let values = profile.values();
    let best = values.iter().copied().max().ok_or(Error::InvalidStructure("empty profile"))?;
    let v = values.iter().position(|&g| g == best).unwrap_or(0) + 1;
    Ok(XJoinSolveResult {
        gamma: best,
        argmax_i: IndependentSetRecord::new(alloc::vec![v])?,
        main_sequence: VertexSequence::singleton(v),
        diagnostics: SolveDiagnostics::new(SolveBranch::Complete),
    })
}

fn signed(g: usize) -> i64 {
    g as i64
}

/// `γ_gr` of the X-join with main factor `C_n^m` and parts of the given
/// Grundy domination numbers.
pub fn solve_xjoin_cycle_power(n: usize, m: usize, profile: &GammaProfile) -> Result<XJoinSolveResult> {
    check_main(n, m, profile, 3)?;
    if 2 * (m + 1) > n {
        return solve_complete(profile);
    }
    let w = WeightVector(profile.values().iter().map(|&g| signed(g) - signed(m + 1)).collect());
    let best = mwis_cycle_power(n, m, &w)?;
    let mut diag = SolveDiagnostics::new(SolveBranch::Mwis);
    diag.mwis_value = Some(best.weight);
    diag.mwis_set = Some(best.set.clone());
    let chosen = if best.set.len() >= 2 {
        best
    } else {
        diag.used_best_pair = true;
        best_pair_cycle_power(n, m, &w)?
    };
    diag.weights = Some(w);
    let gamma = usize::try_from(chosen.weight + signed(n)).map_err(|_| Error::Inconsistent("negative X-join value"))?;
    let argmax_i = IndependentSetRecord::from_set(&chosen.set)?;
    let main_sequence = build_s_c(n, m, &argmax_i)?;
    Ok(XJoinSolveResult { gamma, argmax_i, main_sequence, diagnostics: diag })
}

/// `Σ_{i∈I} (γ_i − 1) + γ_gr(P_n^m, I)` for `I ∈ Ĩ`.
fn path_value(n: usize, m: usize, profile: &GammaProfile, i: &IndependentSetRecord) -> Result<usize> {
    let base = gamma_given_i_path_power(n, m, i)?;
    Ok(base + i.members().iter().map(|&v| profile.get(v) - 1).sum::<usize>())
}

/// Members of `Ĩ` in lexicographic order, for `n ≤ 2m + 2` where they have
/// at most two elements.
fn short_path_family(n: usize, m: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for a in 1..=(m + 1).min(n) {
        if a + m >= n {
            out.push(alloc::vec![a]);
        }
        for b in (a + m + 1).max(n.saturating_sub(m))..=n {
            out.push(alloc::vec![a, b]);
        }
    }
    out
}

fn best_in_family<I>(n: usize, m: usize, profile: &GammaProfile, family: I) -> Result<(usize, IndependentSetRecord)>
where
    I: IntoIterator<Item = Vec<Vertex>>,
{
    let mut best: Option<(usize, IndependentSetRecord)> = None;
    for members in family {
        let rec = IndependentSetRecord::new(members)?;
        let value = path_value(n, m, profile, &rec)?;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, rec));
        }
    }
    best.ok_or(Error::Inconsistent("empty admissible family"))
}

/// `Ĩ` by brute force over all independent sets, used only as a fallback.
fn full_path_family(n: usize, m: usize) -> Result<Vec<Vec<Vertex>>> {
    let g = StructuredKind::PathPower { n, m }.build()?;
    let mut out = Vec::new();
    for s in crate::graph::independent_sets(&g, 1, crate::graph::DEFAULT_ENUMERATION_LIMIT)? {
        let rec = IndependentSetRecord::from_set(&s)?;
        if rec.in_path_family(n, m) {
            out.push(rec.members);
        }
    }
    Ok(out)
}

/// `γ_gr` of the X-join with main factor `P_n^m` and parts of the given
/// Grundy domination numbers.
pub fn solve_xjoin_path_power(n: usize, m: usize, profile: &GammaProfile) -> Result<XJoinSolveResult> {
    check_main(n, m, profile, 1)?;
    if m + 2 > n {
        return solve_complete(profile);
    }
    let g = |v: Vertex| signed(profile.get(v));
    let (gamma, argmax_i, diag) = if n >= 2 * m + 3 {
        let w = WeightVector(
            (1..=n)
                .map(|i| match i {
                    _ if i <= m + 1 => g(i) - signed(i),
                    _ if i + m < n => g(i) - signed(m + 1),
                    _ => g(i) - signed(m + 1) + signed(i),
                })
                .collect(),
        );
        let best = mwis_path_power(n, m, &w)?;
        let mut diag = SolveDiagnostics::new(SolveBranch::Mwis);
        diag.mwis_value = Some(best.weight);
        diag.mwis_set = Some(best.set.clone());
        let mut members = best.set.to_vec();
        if members.first().is_some_and(|&f| f >= m + 2) && w.get(1) == 0 {
            members.insert(0, 1);
            diag.adjoined_first = true;
        }
        let rec = IndependentSetRecord::new(members)?;
        diag.weights = Some(w);
        let direct = if rec.in_path_family(n, m) { Some(path_value(n, m, profile, &rec)?) } else { None };
        match direct {
            Some(v) if signed(v) == best.weight => (v, rec, diag),
            _ => {
                diag.enumeration_fallback = true;
                let (v, rec) = best_in_family(n, m, profile, full_path_family(n, m)?)?;
                (v, rec, diag)
            }
        }
    } else {
        let (v, rec) = best_in_family(n, m, profile, short_path_family(n, m))?;
        let w = WeightVector(
            (1..=n)
                .map(|i| match i {
                    _ if i + m < n => g(i) - signed(i),
                    _ if i <= m + 1 => g(i),
                    _ => g(i) + signed(i) - signed(m + 1),
                })
                .collect(),
        );
        let check = mwis_path_power(n, m, &w)?;
        let mut diag = SolveDiagnostics::new(SolveBranch::Enumeration);
        diag.cross_check = Some(check.weight == signed(v));
        diag.mwis_value = Some(check.weight);
        diag.mwis_set = Some(check.set);
        diag.weights = Some(w);
        (v, rec, diag)
    };
    let main_sequence = build_s_p(n, m, &argmax_i)?;
    Ok(XJoinSolveResult { gamma, argmax_i, main_sequence, diagnostics: diag })
}

/// `γ_gr(G ∘ H)` for `G` a power of a path or cycle, from `γ_gr(H)` alone.
pub fn lex_gamma(kind: StructuredKind, gamma_h: usize) -> Result<usize> {
    kind.validate()?;
    if gamma_h == 0 {
        return Err(Error::InvalidProfile(1));
    }
    match kind {
        StructuredKind::CyclePower { n, m } => {
            if 2 * (m + 1) > n {
                return Err(Error::InvalidStructure("cycle power must satisfy 2(m+1) <= n"));
            }
            Ok(if gamma_h > m { (n / (m + 1)) * (gamma_h - (m + 1)) + n } else { 2 * gamma_h + n - (2 * m + 2) })
        }
        StructuredKind::PathPower { n, m } => {
            if m + 2 > n {
                return Err(Error::InvalidStructure("path power must satisfy m+2 <= n"));
            }
            Ok(if gamma_h > m { n.div_ceil(m + 1) * (gamma_h - (m + 1)) + n + m } else { 2 * gamma_h + n - m - 2 })
        }
        _ => Err(Error::NotClosedForm),
    }
}
