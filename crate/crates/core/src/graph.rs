//! Simple undirected graphs on the vertex set `1..=n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Vertices are 1-based.
pub type Vertex = usize;

/// Default order above which [`independent_sets`] refuses to enumerate.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// A set of vertices drawn from `1..=n`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet { universe, words: vec![0; universe.div_ceil(64)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 1..=universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from vertices, failing on anything outside `1..=universe`.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(universe: usize, vs: I) -> Result<Self> {
        let mut s = Self::empty(universe);
        for v in vs {
            if v == 0 || v > universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.universe && self.words[(v - 1) / 64] >> ((v - 1) % 64) & 1 == 1
    }

    /// Panics when `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(v >= 1 && v <= self.universe, "vertex {v} outside 1..={}", self.universe);
        let was = self.contains(v);
        self.words[(v - 1) / 64] |= 1 << ((v - 1) % 64);
        !was
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) -> bool {
        if !self.contains(v) {
            return false;
        }
        self.words[(v - 1) / 64] &= !(1 << ((v - 1) % 64));
        true
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, word: 0, bits: self.words.first().copied().unwrap_or(0) }
    }

    pub fn first(&self) -> Option<Vertex> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_universe(other);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Low 64 vertices as a bitmask with bit `v - 1` for vertex `v`.
    pub(crate) fn low_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    fn check_universe(&self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        loop {
            if self.bits != 0 {
                let t = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + t + 1);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// A simple undirected graph on `1..=n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        Graph { n, adj: vec![VertexSet::empty(n); n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.connect(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated edges (in either orientation).
    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::edgeless(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.connect(u, v);
        Ok(())
    }

    pub(crate) fn connect(&mut self, u: Vertex, v: Vertex) {
        self.adj[u - 1].insert(v);
        self.adj[v - 1].insert(u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> core::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v - 1]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v - 1].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            out.extend(self.adj[u - 1].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::edgeless(self.n);
        for u in self.vertices() {
            let mut row = VertexSet::full(self.n);
            row.difference_with(&self.adj[u - 1]);
            row.remove(u);
            g.adj[u - 1] = row;
        }
        g
    }

    /// Subgraph induced by `u`. The returned map sends new vertex `i` to
    /// `map[i - 1]`, the `i`-th smallest member of `u`.
    pub fn induced_subgraph(&self, u: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map: Vec<Vertex> = u.iter().collect();
        let mut index = vec![0usize; self.n + 1];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i + 1;
        }
        let mut g = Graph::edgeless(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v - 1].iter() {
                if index[w] > i + 1 {
                    g.connect(i + 1, index[w]);
                }
            }
        }
        (g, map)
    }

    pub fn is_independent(&self, u: &VertexSet) -> bool {
        u.iter().all(|v| self.adj[v - 1].is_disjoint(u))
    }

    pub fn is_clique(&self, u: &VertexSet) -> bool {
        u.iter().all(|v| {
            let mut rest = u.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v - 1])
        })
    }

    /// True when `d` dominates the graph.
    pub fn is_dominating(&self, d: &VertexSet) -> bool {
        self.vertices().all(|v| d.contains(v) || !self.adj[v - 1].is_disjoint(d))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in self.vertices() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            seen.insert(s);
            stack.push(s);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.adj[v - 1].iter() {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Closed neighbourhoods as `u64` masks (bit `v - 1` for vertex `v`).
    /// Only meaningful for `n <= 64`.
    pub(crate) fn closed_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        (1..=self.n).map(|v| self.adj[v - 1].low_mask() | 1 << (v - 1)).collect()
    }
}

/// Parametric graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructuredKind {
    /// `P_n^m`: `i ~ j` iff `0 < |i - j| <= m`.
    PathPower {
        n: usize,
        m: usize,
    },
    /// `C_n^m`: `i ~ j` iff the circular distance is in `1..=m`.
    CyclePower {
        n: usize,
        m: usize,
    },
    Complete {
        n: usize,
    },
    Edgeless {
        n: usize,
    },
    /// Complement of `P_n`.
    CoPath {
        n: usize,
    },
    /// Complement of `C_n`.
    CoCycle {
        n: usize,
    },
}

impl StructuredKind {
    pub fn order(&self) -> usize {
        match *self {
            StructuredKind::PathPower { n, .. }
            | StructuredKind::CyclePower { n, .. }
            | StructuredKind::Complete { n }
            | StructuredKind::Edgeless { n }
            | StructuredKind::CoPath { n }
            | StructuredKind::CoCycle { n } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            _ if self.order() == 0 => Err(Error::InvalidStructure("order must be at least 1")),
            StructuredKind::PathPower { m, .. } | StructuredKind::CyclePower { m, .. } if m == 0 => {
                Err(Error::InvalidStructure("power exponent must be at least 1"))
            }
            StructuredKind::CyclePower { n, .. } | StructuredKind::CoCycle { n } if n < 3 => {
                Err(Error::InvalidStructure("cycles need at least 3 vertices"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match *self {
            StructuredKind::PathPower { n, m } => path_power(n, m),
            StructuredKind::CyclePower { n, m } => cycle_power(n, m),
            StructuredKind::Complete { n } => Graph::complete(n),
            StructuredKind::Edgeless { n } => Graph::edgeless(n),
            StructuredKind::CoPath { n } => path_power(n, 1).complement(),
            StructuredKind::CoCycle { n } => cycle_power(n, 1).complement(),
        })
    }
}

/// Same as [`StructuredKind::build`].
pub fn make_structured(spec: StructuredKind) -> Result<Graph> {
    spec.build()
}

fn path_power(n: usize, m: usize) -> Graph {
    let mut g = Graph::edgeless(n);
    for i in 1..=n {
        for j in i + 1..=n.min(i + m) {
            g.connect(i, j);
        }
    }
    g
}

fn cycle_power(n: usize, m: usize) -> Graph {
    let mut g = Graph::edgeless(n);
    for i in 1..=n {
        for j in i + 1..=n {
            if circular_distance(i, j, n) <= m {
                g.connect(i, j);
            }
        }
    }
    g
}

/// Distance between `i` and `j` on the cycle `1..=n`.
pub fn circular_distance(i: Vertex, j: Vertex, n: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

/// Lazily enumerates the independent sets of `g` with at least `min_size`
/// members, in lexicographic order of their sorted member lists.
///
/// Refuses graphs above `limit` vertices.
pub fn independent_sets(g: &Graph, min_size: usize, limit: usize) -> Result<IndependentSets<'_>> {
    if g.order() > limit {
        return Err(Error::TooLarge { n: g.order(), limit });
    }
    Ok(IndependentSets { g, min_size, chosen: Vec::new(), blocked: Vec::new(), started: false, done: false })
}

pub struct IndependentSets<'g> {
    g: &'g Graph,
    min_size: usize,
    chosen: Vec<Vertex>,
    // blocked[k] = closed neighbourhood union of chosen[..=k]
    blocked: Vec<VertexSet>,
    started: bool,
    done: bool,
}

impl IndependentSets<'_> {
    fn push(&mut self, v: Vertex) {
        let mut b = self.blocked.last().cloned().unwrap_or_else(|| VertexSet::empty(self.g.order()));
        b.union_with(self.g.neighbors(v));
        b.insert(v);
        self.chosen.push(v);
        self.blocked.push(b);
    }

    fn next_candidate(&self, after: Vertex) -> Option<Vertex> {
        let n = self.g.order();
        match self.blocked.last() {
            None => (after < n).then_some(after + 1),
            Some(b) => (after + 1..=n).find(|&v| !b.contains(v)),
        }
    }

    /// Advances to the next set in preorder; false once exhausted.
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        let last = self.chosen.last().copied().unwrap_or(0);
        if let Some(v) = self.next_candidate(last) {
            self.push(v);
            return true;
        }
        while let Some(x) = self.chosen.pop() {
            self.blocked.pop();
            if let Some(v) = self.next_candidate(x) {
                self.push(v);
                return true;
            }
        }
        false
    }
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                break;
            }
            if self.chosen.len() >= self.min_size {
                let mut s = VertexSet::empty(self.g.order());
                for &v in &self.chosen {
                    s.insert(v);
                }
                return Some(s);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    fn relabel_equal(g: &Graph, h: &Graph, map: impl Fn(Vertex) -> Vertex) -> bool {
        g.order() == h.order()
            && g.edges().iter().all(|&(u, v)| h.has_edge(map(u), map(v)))
            && g.edge_count() == h.edge_count()
    }

    #[test]
    fn structured_examples() {
        let c3 = make_structured(StructuredKind::CyclePower { n: 3, m: 1 }).unwrap();
        assert_eq!(c3, Graph::complete(3));
        let p52 = make_structured(StructuredKind::PathPower { n: 5, m: 2 }).unwrap();
        assert_eq!(p52.edge_count(), 7);
        assert_eq!(Graph::complete(5).complement(), Graph::edgeless(5));
    }

    #[test]
    fn structured_rejects_bad_specs() {
        assert!(StructuredKind::CyclePower { n: 2, m: 1 }.build().is_err());
        assert!(StructuredKind::PathPower { n: 4, m: 0 }.build().is_err());
        assert!(StructuredKind::CoCycle { n: 2 }.build().is_err());
        assert!(StructuredKind::Complete { n: 0 }.build().is_err());
    }

    #[test]
    fn degenerate_powers_are_complete() {
        assert_eq!(StructuredKind::CyclePower { n: 5, m: 2 }.build().unwrap(), Graph::complete(5));
        assert_eq!(StructuredKind::PathPower { n: 4, m: 3 }.build().unwrap(), Graph::complete(4));
    }

    #[test]
    fn complement_examples() {
        let c5 = StructuredKind::CyclePower { n: 5, m: 1 }.build().unwrap();
        let co = c5.complement();
        // i -> 2i mod 5 maps the complement onto C_5
        assert!(relabel_equal(&co, &c5, |i| (2 * i - 1) % 5 + 1));
        assert_eq!(Graph::complete(4).complement(), Graph::edgeless(4));

        let p4 = StructuredKind::PathPower { n: 4, m: 1 }.build().unwrap();
        let cp4 = p4.complement();
        let order = [2, 4, 1, 3];
        for w in order.windows(2) {
            assert!(cp4.has_edge(w[0], w[1]));
        }
        assert_eq!(cp4.edge_count(), 3);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = StructuredKind::CyclePower { n: 5, m: 1 }.build().unwrap();
        let (h, map) = c5.induced_subgraph(&set(5, &[1, 2, 3]));
        assert_eq!(h, StructuredKind::PathPower { n: 3, m: 1 }.build().unwrap());
        assert_eq!(map, vec![1, 2, 3]);
        let (h, _) = Graph::complete(5).induced_subgraph(&set(5, &[1, 3, 5]));
        assert_eq!(h, Graph::complete(3));
        let p42 = StructuredKind::PathPower { n: 4, m: 2 }.build().unwrap();
        let (h, _) = p42.induced_subgraph(&set(4, &[1, 4]));
        assert_eq!(h, Graph::edgeless(2));
        let (h, _) = p42.induced_subgraph(&VertexSet::empty(4));
        assert_eq!(h.order(), 0);
    }

    #[test]
    fn independence_examples() {
        let c5 = StructuredKind::CyclePower { n: 5, m: 1 }.build().unwrap();
        assert!(c5.is_independent(&set(5, &[1, 3])));
        assert!(!c5.is_independent(&set(5, &[1, 2])));
        assert!(c5.is_independent(&VertexSet::empty(5)));
        let c10 = StructuredKind::CyclePower { n: 10, m: 2 }.build().unwrap();
        assert!(c10.is_independent(&set(10, &[1, 4, 8])));
    }

    #[test]
    fn enumeration_examples() {
        let p3 = StructuredKind::PathPower { n: 3, m: 1 }.build().unwrap();
        let all: Vec<Vec<Vertex>> = independent_sets(&p3, 0, 20).unwrap().map(|s| s.to_vec()).collect();
        assert_eq!(all, vec![vec![], vec![1], vec![1, 3], vec![2], vec![3]]);
        assert_eq!(independent_sets(&Graph::complete(4), 2, 20).unwrap().count(), 0);
        let c5 = StructuredKind::CyclePower { n: 5, m: 1 }.build().unwrap();
        assert_eq!(independent_sets(&c5, 1, 20).unwrap().count(), 10);
        assert!(matches!(
            independent_sets(&Graph::edgeless(21), 0, DEFAULT_ENUMERATION_LIMIT),
            Err(Error::TooLarge { n: 21, limit: 20 })
        ));
        // exhausted iterators stay exhausted
        let empty = Graph::edgeless(0);
        let mut it = independent_sets(&empty, 0, 20).unwrap();
        assert_eq!(it.next().map(|s| s.len()), Some(0));
        assert!(it.next().is_none());
        assert!(it.next().is_none());
    }

    #[test]
    fn path_independent_sets_are_fibonacci() {
        let mut fib = vec![0usize, 1];
        for i in 2..20 {
            fib.push(fib[i - 1] + fib[i - 2]);
        }
        for n in 1..=14 {
            let p = StructuredKind::PathPower { n, m: 1 }.build().unwrap();
            let sets: Vec<_> = independent_sets(&p, 0, 20).unwrap().collect();
            assert_eq!(sets.len(), fib[n + 2]);
            assert!(sets.iter().all(|s| p.is_independent(s)));
            assert!(sets.windows(2).all(|w| w[0].to_vec() < w[1].to_vec()));
        }
    }

    #[test]
    fn component_examples() {
        let p5 = StructuredKind::PathPower { n: 5, m: 1 }.build().unwrap();
        assert_eq!(p5.connected_components().len(), 1);
        assert_eq!(Graph::edgeless(3).connected_components().len(), 3);
        let g = Graph::from_edges(5, [(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        let sizes: Vec<usize> = g.connected_components().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![3, 2]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(1, 2), (2, 1)]), Err(Error::DuplicateEdge(2, 1)));
        assert!(matches!(Graph::from_edges(3, [(1, 4)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn edge_count_formulas() {
        for n in 1..=12 {
            for m in 1..=5 {
                let p = StructuredKind::PathPower { n, m }.build().unwrap();
                let expected: usize = (1..n).map(|i| m.min(n - i)).sum();
                assert_eq!(p.edge_count(), expected);
                if n >= 3 && 2 * m < n {
                    let c = StructuredKind::CyclePower { n, m }.build().unwrap();
                    assert_eq!(c.edge_count(), n * m);
                }
            }
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::edgeless(n);
                let mut k = 0;
                for u in 1..=n {
                    for v in u + 1..=n {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(g in arb_graph(70)) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            for (u, v) in g.edges() {
                prop_assert!(!g.complement().has_edge(u, v));
            }
            for v in g.vertices() {
                prop_assert!(!g.neighbors(v).contains(v));
                prop_assert_eq!(g.closed_neighborhood(v).len(), g.degree(v) + 1);
                for w in g.neighbors(v) {
                    prop_assert!(g.has_edge(w, v));
                }
            }
        }

        #[test]
        fn induced_on_everything_is_identity(g in arb_graph(20)) {
            let (h, map) = g.induced_subgraph(&VertexSet::full(g.order()));
            prop_assert_eq!(h, g.clone());
            prop_assert_eq!(map, (1..=g.order()).collect::<Vec<_>>());
        }
    }
}
