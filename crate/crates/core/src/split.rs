//! Split graphs: recognition, `γ_gr`, per-`I` values and X-joins with a
//! split main factor.

use alloc::vec::Vec;

use crate::closed::{IndependentSetRecord, SolveBranch, SolveDiagnostics, XJoinSolveResult};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::product::GammaProfile;
use crate::sequence::VertexSequence;

/// A clique `K` and a maximum independent set `I*` covering the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
    /// 1 when two clique vertices have no common neighbour in `I*`.
    pub n_param: usize,
}

impl SplitPartition {
    /// Checks that the partition is a valid maximum split partition of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        if self.clique.universe() != n || self.independent.universe() != n {
            return Err(Error::InvalidPartition("universe does not match the graph"));
        }
        if !self.clique.is_disjoint(&self.independent) || self.clique.union(&self.independent).len() != n {
            return Err(Error::InvalidPartition("sides must partition the vertices"));
        }
        if !g.is_clique(&self.clique) || !g.is_independent(&self.independent) {
            return Err(Error::InvalidPartition("sides are not a clique and an independent set"));
        }
        if self.clique.iter().any(|v| g.neighbors(v).is_disjoint(&self.independent)) {
            return Err(Error::InvalidPartition("independent side is not maximum"));
        }
        if self.n_param != n_param(g, &self.clique, &self.independent) {
            return Err(Error::InvalidPartition("n parameter does not match"));
        }
        Ok(())
    }

    /// The smallest `u ∈ K` with some partner `w ∈ K` such that
    /// `N(u) ∩ N(w) ∩ I* = ∅`.
    fn pivot(&self, g: &Graph) -> Option<Vertex> {
        self.clique.iter().find(|&u| {
            let nu = g.neighbors(u).intersection(&self.independent);
            self.clique.iter().any(|w| w != u && nu.is_disjoint(g.neighbors(w)))
        })
    }
}

fn n_param(g: &Graph, clique: &VertexSet, independent: &VertexSet) -> usize {
    let k = clique.to_vec();
    for (a, &u) in k.iter().enumerate() {
        let nu = g.neighbors(u).intersection(independent);
        if k[a + 1..].iter().any(|&w| nu.is_disjoint(g.neighbors(w))) {
            return 1;
        }
    }
    0
}

/// Recognises a split graph and returns a partition whose independent side
/// is maximum.
pub fn split_recognize(g: &Graph) -> Result<SplitPartition> {
    let n = g.order();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let k = (1..=n).rev().find(|&k| deg[k - 1] + 1 >= k).unwrap_or(0);
    let head: usize = deg[..k].iter().sum();
    let tail: usize = deg[k..].iter().sum();
    if head != k * k.saturating_sub(1) + tail {
        return Err(Error::NotSplit);
    }
    let mut clique = VertexSet::from_vertices(n, order[..k].iter().copied())?;
    let mut independent = VertexSet::from_vertices(n, order[k..].iter().copied())?;
    if !g.is_clique(&clique) || !g.is_independent(&independent) {
        return Err(Error::Inconsistent("degree test accepted a non-split partition"));
    }
    if let Some(v) = clique.iter().find(|&v| g.neighbors(v).is_disjoint(&independent)) {
        clique.remove(v);
        independent.insert(v);
    }
    let n_param = n_param(g, &clique, &independent);
    Ok(SplitPartition { clique, independent, n_param })
}

/// `γ_gr(G) = |I*| + n(G)` with a witness.
pub fn gamma_split(g: &Graph, p: &SplitPartition) -> Result<(usize, VertexSequence)> {
    p.validate(g)?;
    let witness = match p.pivot(g) {
        None => VertexSequence::from_distinct(p.independent.to_vec()),
        Some(u) => split_skeleton(g, p, u),
    };
    Ok((p.independent.len() + p.n_param, witness))
}

/// `(N(u) ∩ I*) ⊕ (u) ⊕ (I* ∖ N(u))`.
fn split_skeleton(g: &Graph, p: &SplitPartition, u: Vertex) -> VertexSequence {
    let near = g.neighbors(u).intersection(&p.independent);
    let mut out = near.to_vec();
    out.push(u);
    out.extend(p.independent.difference(&near).iter());
    VertexSequence::from_distinct(out)
}

/// Per-`I` value for a split graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitGivenI {
    pub value: usize,
    /// True only for `I = I*` and `I = {u} ∪ (I* ∖ N(u))`. For other sets
    /// the closed form is an upper estimate and the set may be infeasible.
    pub exact: bool,
}

/// `γ_gr(G, I)` by the clique-vertex rule: `|I* ∖ N(u)| + 1` when
/// `K ∩ I = {u}`, and `|I*| + n(G)` when `I` misses `K`.
pub fn gamma_given_i_split(g: &Graph, p: &SplitPartition, i: &VertexSet) -> Result<SplitGivenI> {
    p.validate(g)?;
    if i.universe() != g.order() || !g.is_independent(i) {
        return Err(Error::NotIndependent);
    }
    let hit = i.intersection(&p.clique);
    Ok(match hit.first() {
        Some(u) => {
            let mut full = p.independent.difference(g.neighbors(u));
            let value = full.len() + 1;
            full.insert(u);
            SplitGivenI { value, exact: *i == full }
        }
        None => SplitGivenI { value: p.independent.len() + p.n_param, exact: *i == p.independent },
    })
}

/// `γ_gr` of the X-join with a split main factor.
pub fn solve_xjoin_split(g: &Graph, p: &SplitPartition, profile: &GammaProfile) -> Result<XJoinSolveResult> {
    p.validate(g)?;
    profile.expect_len(g.order())?;
    let sum = |s: &VertexSet| s.iter().map(|v| profile.get(v)).sum::<usize>();
    let mut gamma = sum(&p.independent) + p.n_param;
    let mut winner: Option<Vertex> = None;
    for v in p.clique.iter() {
        let value = profile.get(v) + sum(&p.independent.difference(g.neighbors(v)));
        if value > gamma {
            gamma = value;
            winner = Some(v);
        }
    }
    let (argmax, main_sequence, branch) = match winner {
        Some(v) => {
            let far = p.independent.difference(g.neighbors(v));
            let mut seq = alloc::vec![v];
            seq.extend(far.iter());
            let mut set = far;
            set.insert(v);
            (set, VertexSequence::from_distinct(seq), SolveBranch::SplitClique)
        }
        None => {
            let seq = match p.pivot(g) {
                Some(u) if p.n_param == 1 => split_skeleton(g, p, u),
                _ => VertexSequence::from_distinct(p.independent.to_vec()),
            };
            (p.independent.clone(), seq, SolveBranch::SplitIndependent)
        }
    };
    Ok(XJoinSolveResult {
        gamma,
        argmax_i: IndependentSetRecord::from_set(&argmax)?,
        main_sequence,
        diagnostics: SolveDiagnostics::new(branch),
    })
}

/// `γ_gr(G ∘ H) = |I*| γ_gr(H) + n(G)`.
pub fn lex_gamma_split(g: &Graph, p: &SplitPartition, gamma_h: usize) -> Result<usize> {
    p.validate(g)?;
    if gamma_h == 0 {
        return Err(Error::InvalidProfile(1));
    }
    Ok(p.independent.len() * gamma_h + p.n_param)
}
