//! X-join and lexicographic products.
//!
//! In the X-join of a main graph `G` with parts `{G_v}`, every vertex `v` of
//! `G` is replaced by `G_v`, and two parts are completely joined exactly when
//! their main vertices are adjacent. Product vertices are numbered part by
//! part in main-vertex order, keeping each part's internal order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{independent_sets, Graph, Vertex, VertexSet, DEFAULT_ENUMERATION_LIMIT};
use crate::oracle::{gamma_gr_exact_with, gamma_gr_rooted_with, GammaGivenI, OracleConfig};
use crate::sequence::VertexSequence;

#[derive(Clone, Debug)]
pub struct XJoinInstance {
    main: Graph,
    parts: Vec<Graph>,
    product: Graph,
    /// `offsets[v - 1]` is the number of product vertices before part `v`.
    offsets: Vec<usize>,
}

impl XJoinInstance {
    pub fn main(&self) -> &Graph {
        &self.main
    }

    pub fn part(&self, v: Vertex) -> &Graph {
        &self.parts[v - 1]
    }

    pub fn product(&self) -> &Graph {
        &self.product
    }

    pub fn into_product(self) -> Graph {
        self.product
    }

    /// Product vertex `p` as `(main vertex, part vertex)`.
    pub fn to_pair(&self, p: Vertex) -> Result<(Vertex, Vertex)> {
        self.product.check_vertex(p)?;
        // offsets is sorted; the owning part is the last with offset < p
        let v = self.offsets.partition_point(|&o| o < p);
        Ok((v, p - self.offsets[v - 1]))
    }

    pub fn from_pair(&self, v: Vertex, x: Vertex) -> Result<Vertex> {
        self.main.check_vertex(v)?;
        self.parts[v - 1].check_vertex(x)?;
        Ok(self.offsets[v - 1] + x)
    }

    /// Product vertices of part `v`.
    pub fn part_vertices(&self, v: Vertex) -> core::ops::RangeInclusive<Vertex> {
        self.offsets[v - 1] + 1..=self.offsets[v - 1] + self.parts[v - 1].order()
    }

    /// `n_S(v)`: how many elements of `s` lie in part `v`.
    pub fn count_in_part(&self, s: &VertexSequence, v: Vertex) -> usize {
        let r = self.part_vertices(v);
        s.iter().filter(|p| r.contains(p)).count()
    }

    /// `ℓ_S(v)`: the earliest element of `s` in part `v`.
    pub fn earliest_in_part(&self, s: &VertexSequence, v: Vertex) -> Option<Vertex> {
        let r = self.part_vertices(v);
        s.iter().copied().find(|p| r.contains(p))
    }
}

/// Builds the X-join of `main` with `parts[v - 1]` substituted for `v`.
pub fn xjoin(main: &Graph, parts: Vec<Graph>) -> Result<XJoinInstance> {
    if parts.len() != main.order() {
        return Err(Error::LengthMismatch { expected: main.order(), found: parts.len() });
    }
    if let Some(v) = parts.iter().position(|p| p.order() == 0) {
        return Err(Error::EmptyPart(v + 1));
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut total = 0;
    for p in &parts {
        offsets.push(total);
        total += p.order();
    }
    let mut product = Graph::edgeless(total);
    for v in main.vertices() {
        let part = &parts[v - 1];
        for (x, y) in part.edges() {
            product.add_edge(offsets[v - 1] + x, offsets[v - 1] + y)?;
        }
        for w in main.neighbors(v).iter().filter(|&w| w > v) {
            for x in 1..=part.order() {
                for y in 1..=parts[w - 1].order() {
                    product.add_edge(offsets[v - 1] + x, offsets[w - 1] + y)?;
                }
            }
        }
    }
    Ok(XJoinInstance { main: main.clone(), parts, product, offsets })
}

/// `G ∘ H`: the X-join with every part equal to `h`.
pub fn lexicographic(main: &Graph, h: &Graph) -> Result<XJoinInstance> {
    xjoin(main, alloc::vec![h.clone(); main.order()])
}

/// Replaces each main vertex of `s_main` by a block of product vertices:
/// members of `i` by `part_seq(v)`, everything else by `representative(v)`.
pub(crate) fn lift_by<'a, P, R>(
    s_main: &VertexSequence,
    i: &VertexSet,
    mut part_seq: P,
    mut representative: R,
) -> Result<VertexSequence>
where
    P: FnMut(Vertex) -> Option<&'a VertexSequence>,
    R: FnMut(Vertex) -> Vertex,
{
    if let Some(v) = i.iter().find(|&v| !s_main.contains(v)) {
        return Err(Error::MissingVertex(v));
    }
    let mut out = Vec::new();
    for &v in s_main {
        if i.contains(v) {
            out.extend_from_slice(part_seq(v).ok_or(Error::MissingVertex(v))?.as_slice());
        } else {
            out.push(representative(v));
        }
    }
    VertexSequence::new(out)
}

/// Lifts a main-factor sequence to the product: each `v ∈ i` becomes the
/// translated `part_seqs[v]`, every other vertex `w` becomes the first vertex
/// of part `w`.
///
/// The result is legal whenever `s_main` is legal with self-footprinted set
/// exactly `i` and each part sequence is legal in its part; that is the
/// caller's contract and is not checked here.
pub fn lift_sequence(
    inst: &XJoinInstance,
    s_main: &VertexSequence,
    i: &VertexSet,
    part_seqs: &BTreeMap<Vertex, VertexSequence>,
) -> Result<VertexSequence> {
    let mut translated = BTreeMap::new();
    for v in i.iter() {
        let s = part_seqs.get(&v).ok_or(Error::MissingVertex(v))?;
        let t = s.iter().map(|&x| inst.from_pair(v, x)).collect::<Result<Vec<_>>>()?;
        translated.insert(v, VertexSequence::new(t)?);
    }
    lift_by(s_main, i, |v| translated.get(&v), |w| inst.offsets[w - 1] + 1)
}

/// `γ_gr(G_v)` for every main vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaProfile {
    values: Vec<usize>,
}

impl GammaProfile {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if let Some(v) = values.iter().position(|&g| g == 0) {
            return Err(Error::InvalidProfile(v + 1));
        }
        Ok(GammaProfile { values })
    }

    pub fn constant(n: usize, gamma: usize) -> Result<Self> {
        Self::new(alloc::vec![gamma; n])
    }

    pub fn get(&self, v: Vertex) -> usize {
        self.values[v - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub(crate) fn expect_len(&self, n: usize) -> Result<()> {
        if self.values.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: self.values.len() });
        }
        Ok(())
    }
}

/// Maximises `γ_gr(G, I) + Σ_{v∈I} γ_gr(G_v) − |I|` over the independent
/// sets `I` of `main`, with `γ_gr(G, I)` supplied by `per_i`.
///
/// Returns the maximum and the first maximiser in enumeration order.
pub fn xjoin_gamma_generic<F>(main: &Graph, profile: &GammaProfile, per_i: F) -> Result<(usize, VertexSet)>
where
    F: FnMut(&VertexSet) -> Result<GammaGivenI>,
{
    xjoin_gamma_generic_limited(main, profile, DEFAULT_ENUMERATION_LIMIT, per_i)
}

pub(crate) fn xjoin_gamma_generic_limited<F>(
    main: &Graph,
    profile: &GammaProfile,
    limit: usize,
    mut per_i: F,
) -> Result<(usize, VertexSet)>
where
    F: FnMut(&VertexSet) -> Result<GammaGivenI>,
{
    profile.expect_len(main.order())?;
    let mut best: Option<(usize, VertexSet)> = None;
    for i in independent_sets(main, 0, limit)? {
        let GammaGivenI::Length(base) = per_i(&i)? else { continue };
        let value = base + i.iter().map(|v| profile.get(v) - 1).sum::<usize>();
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, i));
        }
    }
    best.ok_or(Error::Inconsistent("every independent set reported infeasible"))
}

/// `γ_gr` of `g` with vertex `u` replaced by a graph of Grundy domination
/// number `gamma_h`.
pub fn replace_vertex_gamma(g: &Graph, u: Vertex, gamma_h: usize) -> Result<usize> {
    replace_vertex_gamma_with(g, u, gamma_h, &OracleConfig::default())
}

pub fn replace_vertex_gamma_with(g: &Graph, u: Vertex, gamma_h: usize, cfg: &OracleConfig) -> Result<usize> {
    if gamma_h == 0 {
        return Err(Error::InvalidProfile(u));
    }
    let (whole, _) = gamma_gr_exact_with(g, cfg)?;
    let rooted = gamma_gr_rooted_with(g, u, cfg)?;
    Ok(whole.max(rooted + gamma_h - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StructuredKind;
    use crate::oracle::{gamma_gr_exact, gamma_gr_given_i};
    use crate::sequence::verify_sequence;
    use alloc::vec;

    fn path(n: usize) -> Graph {
        StructuredKind::PathPower { n, m: 1 }.build().unwrap()
    }

    fn cycle(n: usize, m: usize) -> Graph {
        StructuredKind::CyclePower { n, m }.build().unwrap()
    }

    fn seq(v: &[Vertex]) -> VertexSequence {
        VertexSequence::new(v.to_vec()).unwrap()
    }

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    fn oracle_generic(main: &Graph, profile: &GammaProfile) -> (usize, VertexSet) {
        xjoin_gamma_generic(main, profile, |i| gamma_gr_given_i(main, i)).unwrap()
    }

    #[test]
    fn xjoin_examples() {
        let g1 = path(3);
        let g2 = Graph::edgeless(2);
        let j = xjoin(&Graph::complete(2), vec![g1.clone(), g2.clone()]).unwrap();
        let p = j.product();
        assert_eq!(p.order(), 5);
        assert_eq!(p.edge_count(), 2 + 3 * 2);
        assert!(p.has_edge(1, 4) && p.has_edge(3, 5) && !p.has_edge(4, 5));

        let two_triangles = xjoin(&Graph::edgeless(2), vec![Graph::complete(3); 2]).unwrap();
        assert_eq!(two_triangles.product().connected_components().len(), 2);
        assert_eq!(two_triangles.product().edge_count(), 6);

        let c4 = cycle(4, 1);
        assert_eq!(xjoin(&c4, vec![Graph::edgeless(1); 4]).unwrap().product(), &c4);
    }

    #[test]
    fn xjoin_errors() {
        assert_eq!(
            xjoin(&path(3), vec![Graph::edgeless(1); 2]).unwrap_err(),
            Error::LengthMismatch { expected: 3, found: 2 }
        );
        assert_eq!(xjoin(&path(2), vec![Graph::edgeless(1), Graph::edgeless(0)]).unwrap_err(), Error::EmptyPart(2));
    }

    #[test]
    fn lexicographic_examples() {
        assert_eq!(lexicographic(&path(2), &Graph::edgeless(1)).unwrap().product(), &path(2));
        let c4k2 = lexicographic(&cycle(4, 1), &Graph::complete(2)).unwrap();
        assert_eq!(c4k2.product().order(), 8);
        assert!(c4k2.product().vertices().all(|v| c4k2.product().degree(v) == 5));
        let k2s2 = lexicographic(&Graph::complete(2), &Graph::edgeless(2)).unwrap();
        let p = k2s2.product();
        assert!(p.vertices().all(|v| p.degree(v) == 2) && p.is_connected() && p.order() == 4);
    }

    #[test]
    fn pair_maps_are_inverse() {
        let inst = xjoin(&path(3), vec![Graph::complete(2), Graph::edgeless(1), Graph::edgeless(3)]).unwrap();
        for p in inst.product().vertices() {
            let (v, x) = inst.to_pair(p).unwrap();
            assert_eq!(inst.from_pair(v, x).unwrap(), p);
        }
        assert_eq!(inst.to_pair(3).unwrap(), (2, 1));
        assert_eq!(inst.to_pair(6).unwrap(), (3, 3));
        let s = seq(&[5, 1, 6]);
        assert_eq!(inst.count_in_part(&s, 3), 2);
        assert_eq!(inst.earliest_in_part(&s, 3), Some(5));
        assert_eq!(inst.earliest_in_part(&s, 2), None);
        // adjacency rule
        for p in inst.product().vertices() {
            for q in inst.product().vertices() {
                let (v, x) = inst.to_pair(p).unwrap();
                let (w, y) = inst.to_pair(q).unwrap();
                let expected = inst.main().has_edge(v, w) || (v == w && inst.part(v).has_edge(x, y));
                assert_eq!(inst.product().has_edge(p, q), expected);
            }
        }
    }

    #[test]
    fn lift_examples() {
        let c4 = cycle(4, 1);
        let inst = xjoin(&c4, vec![Graph::edgeless(1); 4]).unwrap();
        let parts: BTreeMap<_, _> = [(1, seq(&[1])), (3, seq(&[1]))].into_iter().collect();
        let lifted = lift_sequence(&inst, &seq(&[1, 3]), &set(4, &[1, 3]), &parts).unwrap();
        assert_eq!(lifted.as_slice(), &[1, 3]);
        assert!(verify_sequence(inst.product(), &lifted).unwrap().is_legal());

        let inst = xjoin(&path(3), vec![Graph::complete(2), Graph::edgeless(1), Graph::edgeless(2)]).unwrap();
        let parts: BTreeMap<_, _> = [(1, seq(&[1])), (3, seq(&[1, 2]))].into_iter().collect();
        let lifted = lift_sequence(&inst, &seq(&[1, 3]), &set(3, &[1, 3]), &parts).unwrap();
        assert_eq!(lifted.len(), 3);
        assert!(verify_sequence(inst.product(), &lifted).unwrap().is_legal());

        let c10 = cycle(10, 2);
        let inst = xjoin(&c10, vec![Graph::edgeless(1); 10]).unwrap();
        let parts: BTreeMap<_, _> = [1, 4, 8].into_iter().map(|v| (v, seq(&[1]))).collect();
        let lifted = lift_sequence(&inst, &seq(&[1, 4, 5, 8]), &set(10, &[1, 4, 8]), &parts).unwrap();
        assert_eq!(lifted.len(), 4);
        assert!(verify_sequence(inst.product(), &lifted).unwrap().is_legal());
    }

    #[test]
    fn lift_errors() {
        let inst = xjoin(&path(3), vec![Graph::edgeless(1); 3]).unwrap();
        let parts: BTreeMap<_, _> = [(1, seq(&[1]))].into_iter().collect();
        assert_eq!(lift_sequence(&inst, &seq(&[1]), &set(3, &[1, 3]), &parts).unwrap_err(), Error::MissingVertex(3));
        assert_eq!(lift_sequence(&inst, &seq(&[1, 3]), &set(3, &[1, 3]), &parts).unwrap_err(), Error::MissingVertex(3));
    }

    #[test]
    fn generic_examples() {
        let c4 = cycle(4, 1);
        let (gamma, i) = oracle_generic(&c4, &GammaProfile::constant(4, 1).unwrap());
        assert_eq!(gamma, 2);
        // {1} and {1,3} tie; the first in enumeration order wins
        assert_eq!(i, set(4, &[1]));

        let profile = GammaProfile::new(vec![1, 1, 2]).unwrap();
        let (gamma, _) = oracle_generic(&path(3), &profile);
        let product = xjoin(&path(3), vec![Graph::edgeless(1), Graph::edgeless(1), Graph::edgeless(2)]).unwrap();
        assert_eq!(gamma, 3);
        assert_eq!(gamma_gr_exact(product.product()).unwrap().0, 3);

        for a in 1..=5 {
            for b in 1..=5 {
                let profile = GammaProfile::new(vec![a, b]).unwrap();
                assert_eq!(oracle_generic(&Graph::complete(2), &profile).0, a.max(b));
            }
        }
    }

    #[test]
    fn generic_rejects_bad_profiles() {
        assert_eq!(GammaProfile::new(vec![1, 0]), Err(Error::InvalidProfile(2)));
        let profile = GammaProfile::constant(2, 1).unwrap();
        assert!(matches!(
            xjoin_gamma_generic(&path(3), &profile, |_| Ok(GammaGivenI::Infeasible)),
            Err(Error::LengthMismatch { .. })
        ));
        let profile = GammaProfile::constant(3, 1).unwrap();
        assert!(matches!(
            xjoin_gamma_generic(&path(3), &profile, |_| Ok(GammaGivenI::Infeasible)),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn replace_vertex_examples() {
        for g in [cycle(5, 1), path(4), Graph::complete(3), cycle(7, 2)] {
            for u in g.vertices() {
                assert_eq!(replace_vertex_gamma(&g, u, 1).unwrap(), gamma_gr_exact(&g).unwrap().0);
            }
        }
        assert_eq!(replace_vertex_gamma(&cycle(5, 1), 1, 4).unwrap(), 6);
        let mut parts = vec![Graph::edgeless(1); 5];
        parts[0] = Graph::edgeless(4);
        let replaced = xjoin(&cycle(5, 1), parts).unwrap();
        assert_eq!(gamma_gr_exact(replaced.product()).unwrap().0, 6);

        assert_eq!(replace_vertex_gamma(&Graph::complete(3), 1, 5).unwrap(), 5);
        let mut parts = vec![Graph::edgeless(1); 3];
        parts[0] = Graph::edgeless(5);
        let replaced = xjoin(&Graph::complete(3), parts).unwrap();
        assert_eq!(gamma_gr_exact(replaced.product()).unwrap().0, 5);
    }
}
