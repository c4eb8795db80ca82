//! Exhaustive search for Grundy dominating sequences on small graphs.
//!
//! A search state is the set `D` of vertices dominated so far. A vertex that
//! is already in the sequence has its whole closed neighbourhood inside `D`
//! and can never be a legal extension again, so `D` alone determines which
//! continuations exist and the best achievable remaining length is a
//! function of `D`. That function is memoised per invocation.
//!
//! Restricting the self-footprinted set to a fixed independent set `I`
//! keeps the same state: along any live path, a vertex of `I` is in `D`
//! exactly when it has already been played.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{independent_sets, Graph, Vertex, VertexSet};
use crate::sequence::VertexSequence;

/// Largest order the bitmask search supports regardless of configuration.
pub const HARD_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest graph order accepted.
    pub max_n: usize,
    /// Maximum number of memoised states. Graphs whose full state space fits
    /// get a dense table; otherwise a map is filled up to this many entries
    /// and the search continues without caching.
    pub cache_limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_n: 14, cache_limit: 1 << 22 }
    }
}

impl OracleConfig {
    pub fn with_max_n(max_n: usize) -> Self {
        OracleConfig { max_n, ..Self::default() }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        let limit = self.max_n.min(HARD_LIMIT);
        if g.order() > limit {
            Err(Error::TooLarge { n: g.order(), limit })
        } else {
            Ok(())
        }
    }
}

/// `γ_gr(G, I)`: either a length or the empty maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GammaGivenI {
    Infeasible,
    Length(usize),
}

impl GammaGivenI {
    pub fn length(self) -> Option<usize> {
        match self {
            GammaGivenI::Length(l) => Some(l),
            GammaGivenI::Infeasible => None,
        }
    }
}

const UNKNOWN: u8 = u8::MAX;
const DEAD: u8 = u8::MAX - 1;

enum Memo {
    Dense(Vec<u8>),
    Sparse { map: BTreeMap<u64, u8>, limit: usize },
}

impl Memo {
    fn new(n: usize, limit: usize) -> Self {
        if n < 32 && (1usize << n) <= limit {
            Memo::Dense(vec![UNKNOWN; 1 << n])
        } else {
            Memo::Sparse { map: BTreeMap::new(), limit }
        }
    }

    fn get(&self, d: u64) -> u8 {
        match self {
            Memo::Dense(t) => t[d as usize],
            Memo::Sparse { map, .. } => map.get(&d).copied().unwrap_or(UNKNOWN),
        }
    }

    fn put(&mut self, d: u64, v: u8) {
        match self {
            Memo::Dense(t) => t[d as usize] = v,
            Memo::Sparse { map, limit } => {
                if map.len() < *limit {
                    map.insert(d, v);
                }
            }
        }
    }
}

struct Search {
    n: usize,
    closed: Vec<u64>,
    full: u64,
    /// Required self-footprinted set, if restricted.
    fixed: Option<u64>,
    memo: Memo,
}

impl Search {
    fn new(g: &Graph, fixed: Option<&VertexSet>, cfg: &OracleConfig) -> Self {
        let n = g.order();
        Search {
            n,
            closed: g.closed_masks(),
            full: full_mask(n),
            fixed: fixed.map(VertexSet::low_mask),
            memo: Memo::new(n, cfg.cache_limit),
        }
    }

    #[inline]
    fn legal(&self, v: usize, d: u64) -> bool {
        let fresh = self.closed[v] & !d;
        if fresh == 0 {
            return false;
        }
        match self.fixed {
            None => true,
            Some(i) => {
                let bit = 1u64 << v;
                let self_footprints = d & bit == 0;
                let in_i = i & bit != 0;
                // v may not be the first to dominate another vertex of I
                self_footprints == in_i && fresh & i & !bit == 0
            }
        }
    }

    /// Longest legal completion from `d`, or `DEAD`.
    fn best(&mut self, d: u64) -> u8 {
        if d == self.full {
            return 0;
        }
        let cached = self.memo.get(d);
        if cached != UNKNOWN {
            return cached;
        }
        let bound = (self.n - d.count_ones() as usize) as u8;
        let mut best = DEAD;
        for v in 0..self.n {
            if !self.legal(v, d) {
                continue;
            }
            let r = self.best(d | self.closed[v]);
            if r != DEAD && (best == DEAD || r + 1 > best) {
                best = r + 1;
                if best == bound {
                    break;
                }
            }
        }
        self.memo.put(d, best);
        best
    }

    /// Lexicographically smallest sequence attaining `best(0)`.
    fn witness(&mut self) -> Option<VertexSequence> {
        let mut d = 0u64;
        let mut target = self.best(0);
        if target == DEAD {
            return None;
        }
        let mut out = Vec::with_capacity(target as usize);
        while d != self.full {
            let v = (0..self.n)
                .find(|&v| {
                    self.legal(v, d) && {
                        let r = self.best(d | self.closed[v]);
                        r != DEAD && r + 1 == target
                    }
                })
                .expect("memoised optimum has a realising move");
            out.push(v + 1);
            d |= self.closed[v];
            target -= 1;
        }
        Some(VertexSequence::from_distinct(out))
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `γ_gr(G)` and the lexicographically smallest Grundy dominating sequence.
pub fn gamma_gr_exact(g: &Graph) -> Result<(usize, VertexSequence)> {
    gamma_gr_exact_with(g, &OracleConfig::default())
}

pub fn gamma_gr_exact_with(g: &Graph, cfg: &OracleConfig) -> Result<(usize, VertexSequence)> {
    cfg.check(g)?;
    let mut s = Search::new(g, None, cfg);
    let w = s.witness().ok_or(Error::Inconsistent("every graph has a legal dominating sequence"))?;
    Ok((w.len(), w))
}

fn check_independent(g: &Graph, i: &VertexSet) -> Result<()> {
    if i.universe() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), found: i.universe() });
    }
    if !g.is_independent(i) {
        return Err(Error::NotIndependent);
    }
    Ok(())
}

/// `γ_gr(G, I)`: longest legal dominating sequence whose self-footprinted
/// set is exactly `i`.
pub fn gamma_gr_given_i(g: &Graph, i: &VertexSet) -> Result<GammaGivenI> {
    gamma_gr_given_i_with(g, i, &OracleConfig::default())
}

pub fn gamma_gr_given_i_with(g: &Graph, i: &VertexSet, cfg: &OracleConfig) -> Result<GammaGivenI> {
    cfg.check(g)?;
    check_independent(g, i)?;
    let mut s = Search::new(g, Some(i), cfg);
    Ok(match s.best(0) {
        DEAD => GammaGivenI::Infeasible,
        l => GammaGivenI::Length(l as usize),
    })
}

/// Witness for [`gamma_gr_given_i`]: a longest sequence in `L(G, I)`.
pub fn gds_given_i(g: &Graph, i: &VertexSet, cfg: &OracleConfig) -> Result<Option<VertexSequence>> {
    cfg.check(g)?;
    check_independent(g, i)?;
    Ok(Search::new(g, Some(i), cfg).witness())
}

/// `γ_gr^u(G)`: best `γ_gr(G, I)` over independent sets containing `u`.
pub fn gamma_gr_rooted(g: &Graph, u: Vertex) -> Result<usize> {
    gamma_gr_rooted_with(g, u, &OracleConfig::default())
}

pub fn gamma_gr_rooted_with(g: &Graph, u: Vertex, cfg: &OracleConfig) -> Result<usize> {
    cfg.check(g)?;
    g.check_vertex(u)?;
    let mut best = None;
    for i in independent_sets(g, 1, cfg.max_n.min(HARD_LIMIT))?.filter(|i| i.contains(u)) {
        if let GammaGivenI::Length(l) = gamma_gr_given_i_with(g, &i, cfg)? {
            best = best.max(Some(l));
        }
    }
    // {u} alone always starts a legal sequence
    best.ok_or(Error::Inconsistent("no legal sequence self-footprints the root"))
}

/// Calls `f` on every legal dominating sequence of `g`.
pub fn for_each_legal_sequence<F: FnMut(&[Vertex])>(g: &Graph, cfg: &OracleConfig, mut f: F) -> Result<()> {
    cfg.check(g)?;
    let closed = g.closed_masks();
    let full = full_mask(g.order());
    let mut stack = Vec::with_capacity(g.order());
    fn go<F: FnMut(&[Vertex])>(closed: &[u64], full: u64, d: u64, stack: &mut Vec<Vertex>, f: &mut F) {
        if d == full {
            f(stack);
            return;
        }
        for (v, &c) in closed.iter().enumerate() {
            if c & !d != 0 {
                stack.push(v + 1);
                go(closed, full, d | c, stack, f);
                stack.pop();
            }
        }
    }
    go(&closed, full, 0, &mut stack, &mut f);
    Ok(())
}
