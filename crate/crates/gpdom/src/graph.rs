//! Generalized Petersen graphs `P(n,k)` with vertex/edge deletions.
//!
//! Vertex slots are a fixed `2n` array (outer block then inner block) with a
//! liveness bitmap; adjacency is precomputed as per-vertex neighbor bitmaps so
//! solvers get O(1) neighborhood unions.

use crate::bitset::SlotSet;
use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Which cycle a vertex lives on: `Outer` are the `u_i`, `Inner` the `v_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Ring {
    Outer,
    Inner,
}

/// A ring-tagged vertex index. Indices are 0-based residues mod `n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub ring: Ring,
    pub index: usize,
}

impl Vertex {
    pub fn outer(index: usize) -> Self {
        Vertex {
            ring: Ring::Outer,
            index,
        }
    }

    pub fn inner(index: usize) -> Self {
        Vertex {
            ring: Ring::Inner,
            index,
        }
    }

    /// Builds a vertex from a possibly out-of-range signed index, reduced mod `n`.
    pub fn reduced(ring: Ring, index: i64, n: usize) -> Self {
        Vertex {
            ring,
            index: modn(index, n),
        }
    }

    /// Slot in the fixed `2n` array: outer block first, then inner block.
    pub fn slot(self, n: usize) -> usize {
        debug_assert!(self.index < n);
        match self.ring {
            Ring::Outer => self.index,
            Ring::Inner => n + self.index,
        }
    }

    pub fn from_slot(slot: usize, n: usize) -> Self {
        debug_assert!(slot < 2 * n);
        if slot < n {
            Vertex::outer(slot)
        } else {
            Vertex::inner(slot - n)
        }
    }

    /// Rotation by `d` columns: a graph automorphism of fault-free `P(n,k)`.
    pub fn rotate(self, d: i64, n: usize) -> Self {
        Vertex::reduced(self.ring, self.index as i64 + d, n)
    }

    /// Reflection about column `center`: index goes to `2*center - index`.
    pub fn reflect(self, center: i64, n: usize) -> Self {
        Vertex::reduced(self.ring, 2 * center - self.index as i64, n)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.ring {
            Ring::Outer => 'u',
            Ring::Inner => 'v',
        };
        write!(f, "{tag}{}", self.index)
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    /// Parses the canonical text form `u<i>` / `v<i>` (0-based).
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut chars = s.chars();
        let ring = match chars.next() {
            Some('u') => Ring::Outer,
            Some('v') => Ring::Inner,
            _ => return Err(Error::InvalidVertex(format!("bad vertex token `{s}`"))),
        };
        let index: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidVertex(format!("bad vertex token `{s}`")))?;
        Ok(Vertex { ring, index })
    }
}

/// Reduce a signed index into `[0, n)`.
pub fn modn(i: i64, n: usize) -> usize {
    let n = n as i64;
    (((i % n) + n) % n) as usize
}

/// An unordered edge, stored with endpoints sorted by slot order.
pub type Edge = (Vertex, Vertex);

fn normalize_edge(a: Vertex, b: Vertex, n: usize) -> Edge {
    if a.slot(n) <= b.slot(n) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Optional faulty vertex. The paper's setting deletes an outer `u_f`;
/// inner faults are accepted by the solvers but carry no closed form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FaultSpec {
    pub faulted: Option<Vertex>,
}

impl FaultSpec {
    pub fn none() -> Self {
        FaultSpec { faulted: None }
    }

    pub fn outer(f: usize) -> Self {
        FaultSpec {
            faulted: Some(Vertex::outer(f)),
        }
    }

    pub fn at(v: Vertex) -> Self {
        FaultSpec { faulted: Some(v) }
    }

    /// The paper's fault index `f` when the fault is an outer vertex.
    pub fn outer_index(&self) -> Option<usize> {
        match self.faulted {
            Some(Vertex {
                ring: Ring::Outer,
                index,
            }) => Some(index),
            _ => None,
        }
    }
}

/// Immutable `P(n,k)` with optional deleted vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPGraph {
    n: usize,
    k: usize,
    live: SlotSet,
    edges: BTreeSet<(usize, usize)>,
    /// Open neighborhoods over live vertices and surviving edges.
    neighbors: Vec<SlotSet>,
    deleted_vertices: Vec<Vertex>,
    deleted_edges: Vec<Edge>,
}

impl GPGraph {
    /// Fault-free `P(n,k)`.
    pub fn new(n: usize, k: usize) -> Result<Self, Error> {
        GPGraph::build(n, k, FaultSpec::none(), &[])
    }

    /// `P(n,k)` minus the faulted vertex and the listed edges.
    pub fn build(
        n: usize,
        k: usize,
        fault: FaultSpec,
        deleted_edges: &[Edge],
    ) -> Result<Self, Error> {
        let deleted: Vec<Vertex> = fault.faulted.into_iter().collect();
        GPGraph::build_multi(n, k, &deleted, deleted_edges)
    }

    /// `P(n,k)` minus arbitrary vertex and edge sets.
    ///
    /// The pristine edge set is `{u_i u_{i+1}, u_i v_i, v_i v_{i+k}}` over all
    /// columns, deduplicated as unordered pairs with self-loops dropped (this
    /// collapses the parallel inner edges arising for small `n`, e.g. `n=4, k=2`).
    pub fn build_multi(
        n: usize,
        k: usize,
        deleted_vertices: &[Vertex],
        deleted_edges: &[Edge],
    ) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
        }
        if k < 1 {
            return Err(Error::InvalidParameter(format!("k must be >= 1, got {k}")));
        }

        let mut pristine: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut add = |a: Vertex, b: Vertex| {
            if a != b {
                let (x, y) = normalize_edge(a, b, n);
                pristine.insert((x.slot(n), y.slot(n)));
            }
        };
        for i in 0..n {
            let u = Vertex::outer(i);
            add(u, Vertex::reduced(Ring::Outer, i as i64 + 1, n));
            add(u, Vertex::inner(i));
            add(
                Vertex::inner(i),
                Vertex::reduced(Ring::Inner, (i + k) as i64, n),
            );
        }

        let mut live = SlotSet::new(2 * n);
        for slot in 0..2 * n {
            live.insert(slot);
        }
        let mut deleted = Vec::new();
        for &v in deleted_vertices {
            if v.index >= n {
                return Err(Error::InvalidFault(format!(
                    "fault {v} out of range for n={n}"
                )));
            }
            live.remove(v.slot(n));
            deleted.push(v);
        }
        let deleted_vertices = deleted;

        let mut edges = pristine.clone();
        let mut removed = Vec::new();
        for &(a, b) in deleted_edges {
            if a.index >= n || b.index >= n {
                return Err(Error::InvalidEdge(format!(
                    "edge {a}-{b} out of range for n={n}"
                )));
            }
            let (x, y) = normalize_edge(a, b, n);
            let key = (x.slot(n), y.slot(n));
            if !pristine.contains(&key) {
                return Err(Error::InvalidEdge(format!(
                    "{a}-{b} is not an edge of P({n},{k})"
                )));
            }
            edges.remove(&key);
            removed.push((x, y));
        }
        // Edges incident to a deleted vertex vanish with it.
        edges.retain(|&(a, b)| live.contains(a) && live.contains(b));

        let mut neighbors = vec![SlotSet::new(2 * n); 2 * n];
        for &(a, b) in &edges {
            neighbors[a].insert(b);
            neighbors[b].insert(a);
        }

        Ok(GPGraph {
            n,
            k,
            live,
            edges,
            neighbors,
            deleted_vertices,
            deleted_edges: removed,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_slots(&self) -> usize {
        2 * self.n
    }

    pub fn live(&self) -> &SlotSet {
        &self.live
    }

    pub fn live_count(&self) -> usize {
        self.live.count()
    }

    pub fn is_live(&self, v: Vertex) -> bool {
        v.index < self.n && self.live.contains(v.slot(self.n))
    }

    pub fn deleted_vertices(&self) -> &[Vertex] {
        &self.deleted_vertices
    }

    pub fn deleted_edges(&self) -> &[Edge] {
        &self.deleted_edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (Vertex::from_slot(a, self.n), Vertex::from_slot(b, self.n)))
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        if a.index >= self.n || b.index >= self.n {
            return false;
        }
        let (x, y) = normalize_edge(a, b, self.n);
        self.edges.contains(&(x.slot(self.n), y.slot(self.n)))
    }

    /// Open neighborhood mask of a live slot.
    pub fn neighbor_mask(&self, slot: usize) -> &SlotSet {
        &self.neighbors[slot]
    }

    /// Closed neighborhood mask `N[slot]`.
    pub fn closed_mask(&self, slot: usize) -> SlotSet {
        let mut m = self.neighbors[slot].clone();
        m.insert(slot);
        m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v.slot(self.n)].count()
    }

    /// `N[v]` restricted to live vertices over surviving edges, sorted by slot.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<Vec<Vertex>, Error> {
        if !self.is_live(v) {
            return Err(Error::InvalidVertex(format!(
                "{v} is deleted or out of range"
            )));
        }
        Ok(self
            .closed_mask(v.slot(self.n))
            .iter()
            .map(|s| Vertex::from_slot(s, self.n))
            .collect())
    }

    /// Image of this graph under rotation by `d` columns.
    pub fn rotated(&self, d: i64) -> Result<Self, Error> {
        let vertices: Vec<Vertex> = self
            .deleted_vertices
            .iter()
            .map(|v| v.rotate(d, self.n))
            .collect();
        let edges: Vec<Edge> = self
            .deleted_edges
            .iter()
            .map(|&(a, b)| (a.rotate(d, self.n), b.rotate(d, self.n)))
            .collect();
        GPGraph::build_multi(self.n, self.k, &vertices, &edges)
    }
}

/// Convenience wrapper matching the toolkit's primary use: `P(n,2)` minus
/// an optional faulted vertex.
pub fn petersen2(n: usize, fault: FaultSpec) -> Result<GPGraph, Error> {
    GPGraph::build(n, 2, fault, &[])
}
