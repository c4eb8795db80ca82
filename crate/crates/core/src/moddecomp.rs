//! Modular decomposition and the recursive `γ_gr` solver built on it.
//!
//! Parallel nodes add, series nodes take the maximum, and prime nodes are
//! solved as X-joins of their quotient with the children.

use alloc::vec::Vec;

use crate::closed::{solve_xjoin_cycle_power, solve_xjoin_path_power, XJoinSolveResult};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::oracle::{gamma_gr_given_i_with, gds_given_i, OracleConfig};
use crate::product::{lift_by, xjoin_gamma_generic_limited, GammaProfile};
use crate::sequence::{verify_sequence, VertexSequence};
use crate::split::{solve_xjoin_split, split_recognize};

pub const DEFAULT_PRIME_THRESHOLD: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(Vertex),
    Parallel,
    Series,
    /// Quotient vertex `k` stands for child `k - 1`.
    Prime {
        quotient: Graph,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleTree {
    pub kind: NodeKind,
    /// Vertices of the original graph covered by this node.
    pub vertices: VertexSet,
    /// Ordered by smallest contained vertex.
    pub children: Vec<ModuleTree>,
}

impl ModuleTree {
    fn leaf(n: usize, v: Vertex) -> Self {
        let mut vertices = VertexSet::empty(n);
        vertices.insert(v);
        ModuleTree { kind: NodeKind::Leaf(v), vertices, children: Vec::new() }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf(_))
    }

    /// Smallest vertex of the module.
    pub fn representative(&self) -> Vertex {
        self.vertices.first().expect("modules are nonempty")
    }

    /// Rebuilds the graph on the original vertex numbering.
    pub fn reconstruct(&self) -> Graph {
        let mut g = Graph::edgeless(self.vertices.universe());
        self.add_edges(&mut g);
        g
    }

    fn add_edges(&self, g: &mut Graph) {
        for c in &self.children {
            c.add_edges(g);
        }
        let joined = |a: usize, b: usize| match &self.kind {
            NodeKind::Series => true,
            NodeKind::Prime { quotient } => quotient.has_edge(a + 1, b + 1),
            _ => false,
        };
        for a in 0..self.children.len() {
            for b in a + 1..self.children.len() {
                if joined(a, b) {
                    for u in self.children[a].vertices.iter() {
                        for v in self.children[b].vertices.iter() {
                            g.connect(u, v);
                        }
                    }
                }
            }
        }
    }
}

/// Connected pieces of `u` where `adjacent(v)` lists the neighbours of `v`.
fn pieces<F: Fn(Vertex) -> VertexSet>(u: &VertexSet, adjacent: F) -> Vec<VertexSet> {
    let mut left = u.clone();
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut piece = VertexSet::empty(u.universe());
        let mut stack = alloc::vec![start];
        piece.insert(start);
        left.remove(start);
        while let Some(v) = stack.pop() {
            for w in adjacent(v).intersection(&left).iter() {
                left.remove(w);
                piece.insert(w);
                stack.push(w);
            }
        }
        out.push(piece);
    }
    out
}

/// Smallest module of `g[u]` containing `seed`.
fn module_closure(g: &Graph, u: &VertexSet, seed: VertexSet) -> VertexSet {
    let mut m = seed;
    loop {
        let splitter = u.difference(&m).iter().find(|&z| {
            let k = g.neighbors(z).intersection_len(&m);
            k != 0 && k != m.len()
        });
        match splitter {
            Some(z) => {
                m.insert(z);
            }
            None => return m,
        }
    }
}

/// Maximal proper modules of a connected, co-connected `g[u]`.
fn maximal_modules(g: &Graph, u: &VertexSet) -> Vec<VertexSet> {
    let mut left = u.clone();
    let mut out = Vec::new();
    while let Some(x) = left.first() {
        let mut module = VertexSet::empty(u.universe());
        module.insert(x);
        for y in u.iter().filter(|&y| y != x) {
            if module.contains(y) {
                continue;
            }
            let mut seed = VertexSet::empty(u.universe());
            seed.insert(x);
            seed.insert(y);
            let m = module_closure(g, u, seed);
            if m != *u {
                module.union_with(&m);
            }
        }
        left.difference_with(&module);
        out.push(module);
    }
    out
}

fn decompose_set(g: &Graph, u: &VertexSet) -> ModuleTree {
    let n = g.order();
    if u.len() == 1 {
        return ModuleTree::leaf(n, u.first().expect("nonempty"));
    }
    let components = pieces(u, |v| g.neighbors(v).clone());
    if components.len() > 1 {
        let children = components.iter().map(|c| decompose_set(g, c)).collect();
        return ModuleTree { kind: NodeKind::Parallel, vertices: u.clone(), children };
    }
    let co_components = pieces(u, |v| u.difference(&g.closed_neighborhood(v)));
    if co_components.len() > 1 {
        let children = co_components.iter().map(|c| decompose_set(g, c)).collect();
        return ModuleTree { kind: NodeKind::Series, vertices: u.clone(), children };
    }
    let modules = maximal_modules(g, u);
    let reps: Vec<Vertex> = modules.iter().map(|m| m.first().expect("nonempty")).collect();
    let mut quotient = Graph::edgeless(reps.len());
    for a in 0..reps.len() {
        for b in a + 1..reps.len() {
            if g.has_edge(reps[a], reps[b]) {
                quotient.connect(a + 1, b + 1);
            }
        }
    }
    let children = modules.iter().map(|m| decompose_set(g, m)).collect();
    ModuleTree { kind: NodeKind::Prime { quotient }, vertices: u.clone(), children }
}

/// Modular decomposition tree of `g`. The empty graph gives a parallel node
/// without children.
pub fn decompose(g: &Graph) -> ModuleTree {
    let all = VertexSet::full(g.order());
    if g.order() == 0 {
        return ModuleTree { kind: NodeKind::Parallel, vertices: all, children: Vec::new() };
    }
    decompose_set(g, &all)
}

/// Counts of how nodes were handled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub leaves: usize,
    pub parallel: usize,
    pub series: usize,
    pub prime_split: usize,
    pub prime_path: usize,
    pub prime_cycle: usize,
    pub prime_co_family: usize,
    pub prime_generic: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest unrecognised prime quotient handed to the exhaustive evaluator.
    pub prime_threshold: usize,
    pub oracle: OracleConfig,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { prime_threshold: DEFAULT_PRIME_THRESHOLD, oracle: OracleConfig::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solved {
    pub gamma: usize,
    pub witness: VertexSequence,
    pub stats: SolveStats,
}

/// Vertex order along `g` when it is a path with at least two vertices.
fn path_order(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.order();
    if n < 2 || g.edge_count() != n - 1 || !g.is_connected() || g.vertices().any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = g.vertices().find(|&v| g.degree(v) == 1)?;
    walk(g, start, n)
}

/// Vertex order around `g` when it is a cycle, starting at 1 towards its
/// smaller neighbour.
fn cycle_order(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.order();
    if n < 3 || !g.is_connected() || g.vertices().any(|v| g.degree(v) != 2) {
        return None;
    }
    walk(g, 1, n)
}

fn walk(g: &Graph, start: Vertex, n: usize) -> Option<Vec<Vertex>> {
    let mut order = alloc::vec![start];
    let mut seen = VertexSet::empty(n);
    seen.insert(start);
    while order.len() < n {
        let last = order[order.len() - 1];
        let next = g.neighbors(last).difference(&seen).first()?;
        seen.insert(next);
        order.push(next);
    }
    Some(order)
}

/// Solves `P_k` or `C_k` given in canonical labels, then maps back.
fn solve_relabelled<F>(
    order: &[Vertex],
    profile: &GammaProfile,
    solver: F,
) -> Result<(usize, VertexSet, VertexSequence)>
where
    F: FnOnce(&GammaProfile) -> Result<XJoinSolveResult>,
{
    let k = order.len();
    let canon = GammaProfile::new(order.iter().map(|&v| profile.get(v)).collect())?;
    let r = solver(&canon)?;
    let back = |p: Vertex| order[p - 1];
    let i = VertexSet::from_vertices(k, r.argmax_i.members().iter().map(|&p| back(p)))?;
    let seq = VertexSequence::new(r.main_sequence.iter().map(|&p| back(p)).collect())?;
    Ok((r.gamma, i, seq))
}

struct Solver {
    opts: SolveOptions,
    stats: SolveStats,
}

impl Solver {
    fn node(&mut self, t: &ModuleTree) -> Result<(usize, VertexSequence)> {
        match &t.kind {
            NodeKind::Leaf(v) => {
                self.stats.leaves += 1;
                Ok((1, VertexSequence::singleton(*v)))
            }
            NodeKind::Parallel => {
                self.stats.parallel += 1;
                let mut gamma = 0;
                let mut seq = VertexSequence::empty();
                for c in &t.children {
                    let (gc, sc) = self.node(c)?;
                    gamma += gc;
                    seq = seq.concat(&sc)?;
                }
                Ok((gamma, seq))
            }
            NodeKind::Series => {
                self.stats.series += 1;
                let mut best: Option<(usize, VertexSequence)> = None;
                for c in &t.children {
                    let r = self.node(c)?;
                    if best.as_ref().is_none_or(|(b, _)| r.0 > *b) {
                        best = Some(r);
                    }
                }
                best.ok_or(Error::InvalidStructure("series node without children"))
            }
            NodeKind::Prime { quotient } => self.prime(t, quotient),
        }
    }

    fn prime(&mut self, t: &ModuleTree, q: &Graph) -> Result<(usize, VertexSequence)> {
        let solved = t.children.iter().map(|c| self.node(c)).collect::<Result<Vec<_>>>()?;
        let profile = GammaProfile::new(solved.iter().map(|(g, _)| *g).collect())?;
        let (gamma, i, skeleton) = self.prime_skeleton(t, q, &profile)?;
        let lifted = lift_by(&skeleton, &i, |v| Some(&solved[v - 1].1), |v| t.children[v - 1].representative())?;
        if lifted.len() != gamma {
            return Err(Error::Inconsistent("lifted sequence length differs from the value"));
        }
        Ok((gamma, lifted))
    }

    /// Value, self-footprinted set and main sequence for the quotient.
    fn prime_skeleton(
        &mut self,
        t: &ModuleTree,
        q: &Graph,
        profile: &GammaProfile,
    ) -> Result<(usize, VertexSet, VertexSequence)> {
        let k = q.order();
        if let Ok(p) = split_recognize(q) {
            self.stats.prime_split += 1;
            let r = solve_xjoin_split(q, &p, profile)?;
            return Ok((r.gamma, r.argmax_i.to_set(k)?, r.main_sequence));
        }
        if let Some(order) = path_order(q) {
            self.stats.prime_path += 1;
            return solve_relabelled(&order, profile, |p| solve_xjoin_path_power(k, 1, p));
        }
        if let Some(order) = cycle_order(q) {
            self.stats.prime_cycle += 1;
            return solve_relabelled(&order, profile, |p| solve_xjoin_cycle_power(k, 1, p));
        }
        if k >= 5 && t.children.iter().all(ModuleTree::is_leaf) {
            if let Some(r) = co_family_skeleton(q) {
                self.stats.prime_co_family += 1;
                return Ok(r);
            }
        }
        if k > self.opts.prime_threshold {
            return Err(Error::IntractablePrime { size: k });
        }
        self.stats.prime_generic += 1;
        let cfg = OracleConfig { max_n: self.opts.oracle.max_n.max(k), ..self.opts.oracle };
        let (gamma, i) = xjoin_gamma_generic_limited(q, profile, k.max(1), |i| gamma_gr_given_i_with(q, i, &cfg))?;
        let skeleton = gds_given_i(q, &i, &cfg)?.ok_or(Error::Inconsistent("maximising set has no sequence"))?;
        Ok((gamma, i, skeleton))
    }
}

/// The value-3 sequence on the complement of a path or cycle with at least
/// five vertices: `(2, 4, 3)` in the labels of the underlying path or cycle.
fn co_family_skeleton(q: &Graph) -> Option<(usize, VertexSet, VertexSequence)> {
    let c = q.complement();
    let order = path_order(&c).or_else(|| cycle_order(&c))?;
    let seq = VertexSequence::new(alloc::vec![order[1], order[3], order[2]]).ok()?;
    let cert = verify_sequence(q, &seq).ok()?.certificate()?;
    Some((3, cert.self_set, seq))
}

/// Solves a decomposition tree bottom-up.
pub fn solve_tree(t: &ModuleTree, opts: &SolveOptions) -> Result<Solved> {
    let mut s = Solver { opts: *opts, stats: SolveStats::default() };
    let (gamma, witness) = s.node(t)?;
    Ok(Solved { gamma, witness, stats: s.stats })
}

/// Decomposes and solves `g`, re-verifying the witness.
pub fn solve_with(g: &Graph, opts: &SolveOptions) -> Result<Solved> {
    let t = decompose(g);
    let solved = solve_tree(&t, opts)?;
    if !verify_sequence(g, &solved.witness)?.is_legal() || solved.witness.len() != solved.gamma {
        return Err(Error::Inconsistent("assembled witness failed verification"));
    }
    Ok(solved)
}

/// `γ_gr(g)` with a witness, via modular decomposition.
pub fn solve(g: &Graph) -> Result<(usize, VertexSequence)> {
    solve_with(g, &SolveOptions::default()).map(|s| (s.gamma, s.witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StructuredKind;
    use crate::oracle::gamma_gr_exact;
    use crate::product::lexicographic;
    use alloc::vec;
    use rand::{Rng, SeedableRng};

    fn path(n: usize) -> Graph {
        StructuredKind::PathPower { n, m: 1 }.build().unwrap()
    }

    fn cycle(n: usize) -> Graph {
        StructuredKind::CyclePower { n, m: 1 }.build().unwrap()
    }

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::edgeless(n);
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Checks the module condition and recursive structure of a tree.
    fn check_tree(g: &Graph, t: &ModuleTree) {
        if let NodeKind::Leaf(v) = t.kind {
            assert_eq!(t.vertices.to_vec(), vec![v]);
            return;
        }
        let mut union = VertexSet::empty(g.order());
        for c in &t.children {
            assert!(union.is_disjoint(&c.vertices));
            union.union_with(&c.vertices);
            let outside = VertexSet::full(g.order()).difference(&c.vertices);
            let first = g.neighbors(c.representative()).intersection(&outside);
            for v in c.vertices.iter() {
                assert_eq!(g.neighbors(v).intersection(&outside), first);
            }
            check_tree(g, c);
        }
        assert_eq!(union, t.vertices);
        assert!(t.children.windows(2).all(|w| w[0].representative() < w[1].representative()));
        match &t.kind {
            NodeKind::Parallel | NodeKind::Series => assert!(t.children.len() >= 2),
            NodeKind::Prime { quotient } => {
                assert!(quotient.order() >= 4);
                assert!(quotient.is_connected() && quotient.complement().is_connected());
            }
            NodeKind::Leaf(_) => unreachable!(),
        }
    }

    #[test]
    fn decomposition_examples() {
        let t = decompose(&cycle(4));
        assert_eq!(t.kind, NodeKind::Series);
        let kids: Vec<Vec<Vertex>> = t.children.iter().map(|c| c.vertices.to_vec()).collect();
        assert_eq!(kids, vec![vec![1, 3], vec![2, 4]]);
        assert!(t.children.iter().all(|c| c.kind == NodeKind::Parallel));

        let t = decompose(&path(4));
        assert_eq!(t.kind, NodeKind::Prime { quotient: path(4) });
        assert!(t.children.iter().all(ModuleTree::is_leaf));

        let t = decompose(&Graph::complete(6));
        assert_eq!((t.kind.clone(), t.children.len()), (NodeKind::Series, 6));

        let p4p4 = lexicographic(&path(4), &path(4)).unwrap().into_product();
        let t = decompose(&p4p4);
        assert!(matches!(&t.kind, NodeKind::Prime { quotient } if *quotient == path(4)));
        assert!(t.children.iter().all(|c| matches!(c.kind, NodeKind::Prime { .. })));
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve(&cycle(4)).unwrap().0, 2);
        assert_eq!(solve(&path(4)).unwrap().0, 3);
        let star = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(solve(&star).unwrap().0, 3);
        let p4p4 = lexicographic(&path(4), &path(4)).unwrap().into_product();
        let (gamma, w) = solve(&p4p4).unwrap();
        assert_eq!((gamma, w.len()), (7, 7));
        let mut both = Graph::edgeless(11);
        for (u, v) in cycle(5).edges() {
            both.add_edge(u, v).unwrap();
        }
        for (u, v) in path(6).edges() {
            both.add_edge(u + 5, v + 5).unwrap();
        }
        let s = solve_with(&both, &SolveOptions::default()).unwrap();
        assert_eq!(s.gamma, 8);
        assert_eq!((s.stats.prime_cycle, s.stats.prime_path, s.stats.parallel), (1, 1, 1));
        assert_eq!(solve(&Graph::edgeless(0)).unwrap().0, 0);
    }

    #[test]
    fn co_family_pattern() {
        for n in 5..=10 {
            let cp = StructuredKind::CoPath { n }.build().unwrap();
            let s = solve_with(&cp, &SolveOptions::default()).unwrap();
            assert_eq!(s.gamma, 3);
            assert_eq!(s.stats.prime_co_family, 1);
            assert_eq!(gamma_gr_exact(&cp).unwrap().0, 3);
        }
        for n in 6..=10 {
            let cc = StructuredKind::CoCycle { n }.build().unwrap();
            let s = solve_with(&cc, &SolveOptions::default()).unwrap();
            assert_eq!((s.gamma, s.stats.prime_co_family), (3, 1));
        }
    }

    #[test]
    fn intractable_prime_is_reported() {
        // the complement of a 16-cycle with a chord is prime and unrecognised
        let mut g = cycle(16);
        g.add_edge(1, 9).unwrap();
        let g = g.complement();
        let opts = SolveOptions { prime_threshold: 10, ..SolveOptions::default() };
        assert_eq!(solve_with(&g, &opts).unwrap_err(), Error::IntractablePrime { size: 16 });
    }

    #[test]
    fn random_graphs_match_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for round in 0..60 {
            let n = rng.gen_range(1..=10);
            let p = [0.2, 0.4, 0.6, 0.8][round % 4];
            let g = random_graph(&mut rng, n, p);
            let t = decompose(&g);
            check_tree(&g, &t);
            assert_eq!(t.reconstruct(), g);
            let (gamma, w) = solve(&g).unwrap();
            assert_eq!(gamma, gamma_gr_exact(&g).unwrap().0, "{g:?}");
            assert!(verify_sequence(&g, &w).unwrap().is_legal());
        }
    }
}
