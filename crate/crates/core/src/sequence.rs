//! Vertex sequences and legality checking with footprint certificates.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// An ordered list of distinct vertices.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSequence {
    items: Vec<Vertex>,
}

impl VertexSequence {
    pub fn new(items: Vec<Vertex>) -> Result<Self> {
        for (i, &v) in items.iter().enumerate() {
            if items[..i].contains(&v) {
                return Err(Error::RepeatedVertex(v));
            }
        }
        Ok(VertexSequence { items })
    }

    pub fn empty() -> Self {
        VertexSequence { items: Vec::new() }
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSequence { items: alloc::vec![v] }
    }

    /// Caller guarantees distinctness.
    pub(crate) fn from_distinct(items: Vec<Vertex>) -> Self {
        debug_assert!(VertexSequence::new(items.clone()).is_ok());
        VertexSequence { items }
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.items
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Vertex> {
        self.items.iter()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.items.first().copied()
    }

    /// 1-based position of `v`.
    pub fn order_of(&self, v: Vertex) -> Option<usize> {
        self.items.iter().position(|&x| x == v).map(|i| i + 1)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.items.contains(&v)
    }

    /// `S ⊕ T`; the two sequences must be vertex-disjoint.
    pub fn concat(&self, other: &VertexSequence) -> Result<VertexSequence> {
        if let Some(&v) = other.items.iter().find(|v| self.items.contains(v)) {
            return Err(Error::OverlappingSequences(v));
        }
        let mut items = self.items.clone();
        items.extend_from_slice(&other.items);
        Ok(VertexSequence { items })
    }

    pub fn reversed(&self) -> VertexSequence {
        VertexSequence { items: self.items.iter().rev().copied().collect() }
    }

    /// Underlying vertex set over the universe `1..=n`.
    pub fn to_set(&self, n: usize) -> Result<VertexSet> {
        VertexSet::from_vertices(n, self.items.iter().copied())
    }
}

impl fmt::Debug for VertexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl<'a> IntoIterator for &'a VertexSequence {
    type Item = &'a Vertex;
    type IntoIter = core::slice::Iter<'a, Vertex>;
    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// Evidence that a sequence is a legal dominating sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FootprintCertificate {
    pub sequence: VertexSequence,
    /// `private[i]` is the private neighbourhood of the `i`-th element.
    pub private: Vec<VertexSet>,
    /// `footprinter[v - 1]` is the sequence vertex that first dominates `v`.
    pub footprinter: Vec<Vertex>,
    /// Vertices that footprint themselves.
    pub self_set: VertexSet,
}

impl FootprintCertificate {
    pub fn footprinter_of(&self, v: Vertex) -> Vertex {
        self.footprinter[v - 1]
    }

    pub fn private_sizes(&self) -> Vec<usize> {
        self.private.iter().map(VertexSet::len).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The element at 1-based `position` dominates nothing new.
    EmptyPrivate {
        position: usize,
        vertex: Vertex,
    },
    NotDominating {
        undominated: VertexSet,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyPrivate { position, vertex } => {
                write!(f, "vertex {vertex} at position {position} has an empty private neighbourhood")
            }
            Violation::NotDominating { undominated } => {
                write!(f, "not dominating; undominated {undominated:?}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Legal(FootprintCertificate),
    Illegal(Violation),
}

impl Verification {
    pub fn is_legal(&self) -> bool {
        matches!(self, Verification::Legal(_))
    }

    pub fn certificate(self) -> Option<FootprintCertificate> {
        match self {
            Verification::Legal(c) => Some(c),
            Verification::Illegal(_) => None,
        }
    }
}

/// Checks whether `s` is a legal dominating sequence of `g`.
pub fn verify_sequence(g: &Graph, s: &VertexSequence) -> Result<Verification> {
    for &v in s {
        g.check_vertex(v)?;
    }
    let n = g.order();
    let mut dominated = VertexSet::empty(n);
    let mut private = Vec::with_capacity(s.len());
    let mut footprinter = alloc::vec![0; n];
    let mut self_set = VertexSet::empty(n);
    for (i, &v) in s.iter().enumerate() {
        let pn = g.closed_neighborhood(v).difference(&dominated);
        if pn.is_empty() {
            return Ok(Verification::Illegal(Violation::EmptyPrivate { position: i + 1, vertex: v }));
        }
        for u in pn.iter() {
            footprinter[u - 1] = v;
        }
        if pn.contains(v) {
            self_set.insert(v);
        }
        dominated.union_with(&pn);
        private.push(pn);
    }
    if dominated.len() != n {
        let undominated = VertexSet::full(n).difference(&dominated);
        return Ok(Verification::Illegal(Violation::NotDominating { undominated }));
    }
    Ok(Verification::Legal(FootprintCertificate { sequence: s.clone(), private, footprinter, self_set }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StructuredKind;
    use alloc::vec;

    fn seq(v: &[Vertex]) -> VertexSequence {
        VertexSequence::new(v.to_vec()).unwrap()
    }

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn p4_legal_certificate() {
        let p4 = StructuredKind::PathPower { n: 4, m: 1 }.build().unwrap();
        let cert = verify_sequence(&p4, &seq(&[1, 2, 4])).unwrap().certificate().unwrap();
        assert_eq!(cert.private, vec![set(4, &[1, 2]), set(4, &[3]), set(4, &[4])]);
        assert_eq!(cert.self_set, set(4, &[1, 4]));
        assert_eq!(cert.footprinter, vec![1, 1, 2, 4]);
        assert_eq!(cert.private_sizes(), vec![2, 1, 1]);
    }

    #[test]
    fn violations() {
        let p4 = StructuredKind::PathPower { n: 4, m: 1 }.build().unwrap();
        assert_eq!(
            verify_sequence(&p4, &seq(&[2, 1])).unwrap(),
            Verification::Illegal(Violation::EmptyPrivate { position: 2, vertex: 1 })
        );
        let c5 = StructuredKind::CyclePower { n: 5, m: 1 }.build().unwrap();
        assert_eq!(
            verify_sequence(&c5, &seq(&[1])).unwrap(),
            Verification::Illegal(Violation::NotDominating { undominated: set(5, &[3, 4]) })
        );
        assert!(matches!(verify_sequence(&c5, &seq(&[6])), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(VertexSequence::new(vec![1, 2, 1]), Err(Error::RepeatedVertex(1)));
    }

    #[test]
    fn sequence_algebra() {
        let a = seq(&[1, 2]);
        let b = seq(&[5, 3]);
        let e = VertexSequence::empty();
        assert_eq!(a.concat(&b).unwrap().as_slice(), &[1, 2, 5, 3]);
        assert_eq!(e.concat(&a).unwrap(), a);
        assert_eq!(a.concat(&e).unwrap(), a);
        let c = seq(&[4]);
        assert_eq!(a.concat(&b).unwrap().concat(&c).unwrap(), a.concat(&b.concat(&c).unwrap()).unwrap());
        assert_eq!(a.concat(&seq(&[2])), Err(Error::OverlappingSequences(2)));
        assert_eq!(b.reversed().as_slice(), &[3, 5]);
        assert_eq!(b.order_of(3), Some(2));
        assert_eq!(b.order_of(1), None);
    }
}
