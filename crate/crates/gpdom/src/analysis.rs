//! Block calculus over `P(n,2)`: domination checking, the block partitions,
//! per-block occupancy profiles, couple numbers, and the type classification
//! of dominating sets around a faulted column.

use crate::bitset::SlotSet;
use crate::error::Error;
use crate::graph::{modn, FaultSpec, GPGraph, Ring, Vertex};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A candidate dominating set: a membership bitmap over the `2n` vertex slots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DomSet {
    n: usize,
    bits: SlotSet,
}

impl DomSet {
    pub fn new(n: usize) -> Self {
        DomSet {
            n,
            bits: SlotSet::new(2 * n),
        }
    }

    pub fn from_vertices(n: usize, vertices: &[Vertex]) -> Self {
        let mut s = DomSet::new(n);
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    /// Parses one `u<i>`/`v<i>` token per line; `#` starts a comment.
    pub fn parse(n: usize, text: &str) -> Result<Self, Error> {
        let mut s = DomSet::new(n);
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let v = Vertex::from_str(line)?;
            if v.index >= n {
                return Err(Error::InvalidVertex(format!("{v} out of range for n={n}")));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.bits.count()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.index < self.n && self.bits.contains(v.slot(self.n))
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(v.index < self.n, "vertex {v} out of range for n={}", self.n);
        self.bits.insert(v.slot(self.n));
    }

    pub fn remove(&mut self, v: Vertex) {
        assert!(v.index < self.n, "vertex {v} out of range for n={}", self.n);
        self.bits.remove(v.slot(self.n));
    }

    pub fn bits(&self) -> &SlotSet {
        &self.bits
    }

    pub fn from_bits(n: usize, bits: SlotSet) -> Self {
        assert_eq!(bits.len(), 2 * n);
        DomSet { n, bits }
    }

    /// Members sorted by slot order (outer block, then inner block).
    pub fn vertices(&self) -> Vec<Vertex> {
        self.bits
            .iter()
            .map(|s| Vertex::from_slot(s, self.n))
            .collect()
    }

    pub fn tokens(&self) -> Vec<String> {
        self.vertices().iter().map(|v| v.to_string()).collect()
    }
}

impl fmt::Debug for DomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

/// True iff the closed neighborhoods of `s` cover every live vertex of `g`.
pub fn is_dominating(g: &GPGraph, s: &DomSet) -> Result<bool, Error> {
    if s.n() != g.n() {
        return Err(Error::InvalidSet(format!(
            "set is over n={}, graph has n={}",
            s.n(),
            g.n()
        )));
    }
    if !s.bits.is_subset_of(g.live()) {
        return Err(Error::InvalidSet("set contains a deleted vertex".into()));
    }
    let mut covered = SlotSet::new(g.num_slots());
    for slot in s.bits.iter() {
        covered.insert(slot);
        covered.union_with(g.neighbor_mask(slot));
    }
    Ok(g.live().is_subset_of(&covered))
}

/// The block `B_i` of `P(n,2)` and its partition.
///
/// `B_i` spans the five consecutive columns centered at `i`; removing `u_i`
/// splits the rest into the left/middle/right triples. The outward fringes
/// `N^+(R_i)` and `N^+(L_i)` are the closed neighborhoods of the end triples
/// minus the block itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub center: usize,
    pub vertices: BTreeSet<Vertex>,
    pub left: [Vertex; 3],
    pub middle: [Vertex; 3],
    pub right: [Vertex; 3],
    pub nplus_left: [Vertex; 3],
    pub nplus_right: [Vertex; 3],
}

pub fn block(i: usize, n: usize) -> Block {
    let i = i as i64;
    let u = |d: i64| Vertex::reduced(Ring::Outer, i + d, n);
    let v = |d: i64| Vertex::reduced(Ring::Inner, i + d, n);
    let mut vertices = BTreeSet::new();
    for d in -2..=2 {
        vertices.insert(u(d));
        vertices.insert(v(d));
    }
    Block {
        center: modn(i, n),
        vertices,
        left: [v(-1), u(-2), v(-2)],
        middle: [u(-1), v(0), u(1)],
        right: [v(1), u(2), v(2)],
        nplus_left: [v(-3), u(-3), v(-4)],
        nplus_right: [v(3), u(3), v(4)],
    }
}

/// `gamma_i(S) = |B_i ∩ S|` for every block center.
pub fn gammas(s: &DomSet, n: usize) -> Vec<usize> {
    (0..n)
        .map(|i| {
            block(i, n)
                .vertices
                .iter()
                .filter(|&&v| s.contains(v))
                .count()
        })
        .collect()
}

/// The fault window `F = {f-2, ..., f+2}` as a set of column indices.
pub fn fault_window(f: usize, n: usize) -> BTreeSet<usize> {
    (-2..=2).map(|d| modn(f as i64 + d, n)).collect()
}

/// Classification of a dominating set relative to the faulted block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TypeTag {
    NoFault,
    NotTypeI,
    TypeI,
    TypeII,
    TypeIIIa,
    TypeIIIb,
    TypeIIIc,
    TypeIIId,
}

impl TypeTag {
    pub fn is_type3(self) -> bool {
        matches!(
            self,
            TypeTag::TypeIIIa | TypeTag::TypeIIIb | TypeTag::TypeIIIc | TypeTag::TypeIIId
        )
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// `B_f ∩ S` as (ring, offset-from-f) pairs with offsets in `[-2, 2]`.
///
/// Only meaningful for `n >= 5`, where the five columns of a block are distinct.
fn fault_block_pattern(s: &DomSet, f: usize, n: usize) -> BTreeSet<(Ring, i64)> {
    let mut pat = BTreeSet::new();
    for d in -2..=2i64 {
        for ring in [Ring::Outer, Ring::Inner] {
            if s.contains(Vertex::reduced(ring, f as i64 + d, n)) {
                pat.insert((ring, d));
            }
        }
    }
    pat
}

fn reflect_pattern(pat: &BTreeSet<(Ring, i64)>) -> BTreeSet<(Ring, i64)> {
    pat.iter().map(|&(r, d)| (r, -d)).collect()
}

const TYPE_II: [(Ring, i64); 3] = [(Ring::Outer, -2), (Ring::Inner, 1), (Ring::Inner, 2)];
const TYPE_IIIA: [(Ring, i64); 4] = [
    (Ring::Inner, -1),
    (Ring::Inner, 1),
    (Ring::Outer, 2),
    (Ring::Inner, 2),
];
const TYPE_IIIB: [(Ring, i64); 4] = [
    (Ring::Outer, -2),
    (Ring::Inner, -2),
    (Ring::Outer, 2),
    (Ring::Inner, 2),
];
const TYPE_IIIC: [(Ring, i64); 4] = [
    (Ring::Inner, -2),
    (Ring::Inner, -1),
    (Ring::Inner, 1),
    (Ring::Inner, 2),
];
const TYPE_IIID: [(Ring, i64); 4] = [
    (Ring::Outer, -2),
    (Ring::Inner, -2),
    (Ring::Inner, 1),
    (Ring::Outer, 2),
];

fn matches_up_to_reflection(pat: &BTreeSet<(Ring, i64)>, reference: &[(Ring, i64)]) -> bool {
    let reference: BTreeSet<(Ring, i64)> = reference.iter().copied().collect();
    *pat == reference || reflect_pattern(pat) == reference
}

/// Classifies `s` with respect to the faulted block.
///
/// Tags are reflection-invariant: a set whose fault-block pattern is the
/// mirror image of a listed one gets the same tag. Without a fault the tag
/// is `NoFault`; with some `gamma_i <= 1` it is `NotTypeI`. Minimality is
/// not checked here; callers quantifying over minimum sets filter upstream.
pub fn classify(g: &GPGraph, s: &DomSet, fault: FaultSpec) -> TypeTag {
    let n = g.n();
    let Some(f) = fault.outer_index() else {
        return TypeTag::NoFault;
    };
    let gam = gammas(s, n);
    if gam.iter().any(|&x| x <= 1) {
        return TypeTag::NotTypeI;
    }
    if n < 5 {
        return TypeTag::TypeI;
    }
    let pat = fault_block_pattern(s, f, n);
    match gam[f] {
        3 if matches_up_to_reflection(&pat, &TYPE_II) => TypeTag::TypeII,
        4 if matches_up_to_reflection(&pat, &TYPE_IIIA) => TypeTag::TypeIIIa,
        4 if matches_up_to_reflection(&pat, &TYPE_IIIB) => TypeTag::TypeIIIb,
        4 if matches_up_to_reflection(&pat, &TYPE_IIIC) => TypeTag::TypeIIIc,
        4 if matches_up_to_reflection(&pat, &TYPE_IIID) => TypeTag::TypeIIId,
        _ => TypeTag::TypeI,
    }
}

/// Columns `i` outside `F` with no inner member of `s` in `{v_{i-1}, v_i, v_{i+1}}`.
///
/// These are the pseudo-couple candidates; a fault must be present for the
/// window `F` to be defined.
pub fn pseudo_couple_vertices(
    g: &GPGraph,
    s: &DomSet,
    fault: FaultSpec,
) -> Result<Vec<usize>, Error> {
    let n = g.n();
    let Some(f) = fault.outer_index() else {
        return Err(Error::NotApplicable(
            "pseudo-couple vertices need a faulted column".into(),
        ));
    };
    let window = fault_window(f, n);
    Ok((0..n)
        .filter(|&i| !window.contains(&i))
        .filter(|&i| (-1..=1).all(|d| !s.contains(Vertex::reduced(Ring::Inner, i as i64 + d, n))))
        .collect())
}

/// Columns whose block intersection with `s` is exactly `{u_{i-2}, v_i, v_{i+1}}`.
pub fn self_contained_blocks(g: &GPGraph, s: &DomSet) -> Vec<usize> {
    let n = g.n();
    (0..n)
        .filter(|&i| {
            let i = i as i64;
            let want: BTreeSet<Vertex> = [
                Vertex::reduced(Ring::Outer, i - 2, n),
                Vertex::reduced(Ring::Inner, i, n),
                Vertex::reduced(Ring::Inner, i + 1, n),
            ]
            .into_iter()
            .collect();
            let got: BTreeSet<Vertex> = block(i as usize, n)
                .vertices
                .into_iter()
                .filter(|&v| s.contains(v))
                .collect();
            got == want
        })
        .collect()
}

/// Per-column profile of a set: the `gamma_i` vector, couple number, fault
/// window, type tag, pseudo-couples, and self-contained blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockProfile {
    pub gammas: Vec<usize>,
    pub couple_number: usize,
    #[serde(rename = "F")]
    pub fault_window: Vec<usize>,
    #[serde(rename = "type")]
    pub type_tag: TypeTag,
    pub pseudo_couples: Vec<usize>,
    pub self_contained: Vec<usize>,
}

pub fn gamma_profile(g: &GPGraph, s: &DomSet, fault: FaultSpec) -> BlockProfile {
    let n = g.n();
    let gam = gammas(s, n);
    let (window, couple_number, pseudo) = match fault.outer_index() {
        Some(f) => {
            let window = fault_window(f, n);
            let couple = (0..n)
                .filter(|&i| gam[i] == 2 && !window.contains(&i))
                .count();
            let pseudo = pseudo_couple_vertices(g, s, fault).unwrap_or_default();
            (window.into_iter().collect(), couple, pseudo)
        }
        None => (Vec::new(), 0, Vec::new()),
    };
    BlockProfile {
        gammas: gam,
        couple_number,
        fault_window: window,
        type_tag: classify(g, s, fault),
        pseudo_couples: pseudo,
        self_contained: self_contained_blocks(g, s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::petersen2;

    /// Independent oracle: per-vertex scan instead of a coverage union.
    fn dominates_oracle(g: &GPGraph, s: &DomSet) -> bool {
        for slot in g.live().iter() {
            let v = Vertex::from_slot(slot, g.n());
            let ok = s.contains(v)
                || g.closed_neighborhood(v)
                    .unwrap()
                    .iter()
                    .any(|&w| s.contains(w));
            if !ok {
                return false;
            }
        }
        true
    }

    #[test]
    fn dominating_examples() {
        let g = petersen2(5, FaultSpec::none()).unwrap();
        let s = DomSet::from_vertices(5, &[Vertex::outer(0), Vertex::inner(2), Vertex::inner(3)]);
        assert!(dominates_oracle(&g, &s));
        assert!(is_dominating(&g, &s).unwrap());
        assert!(!is_dominating(&g, &DomSet::new(5)).unwrap());

        let g = petersen2(6, FaultSpec::outer(2)).unwrap();
        let s = DomSet::from_vertices(6, &[Vertex::outer(0), Vertex::inner(3), Vertex::inner(4)]);
        assert!(dominates_oracle(&g, &s));
        assert!(is_dominating(&g, &s).unwrap());

        // A set containing the deleted vertex is invalid.
        let bad = DomSet::from_vertices(6, &[Vertex::outer(2)]);
        assert!(matches!(is_dominating(&g, &bad), Err(Error::InvalidSet(_))));
    }

    #[test]
    fn block_partitions() {
        // Center 4 of n=12 (the paper's 1-based B_5).
        let b = block(4, 12);
        let vs: Vec<Vertex> = (2..=6)
            .flat_map(|i| [Vertex::outer(i), Vertex::inner(i)])
            .collect();
        assert_eq!(b.vertices, vs.into_iter().collect());
        assert_eq!(
            b.left,
            [Vertex::inner(3), Vertex::outer(2), Vertex::inner(2)]
        );
        assert_eq!(
            b.middle,
            [Vertex::outer(3), Vertex::inner(4), Vertex::outer(5)]
        );
        assert_eq!(
            b.right,
            [Vertex::inner(5), Vertex::outer(6), Vertex::inner(6)]
        );
        assert_eq!(
            b.nplus_right,
            [Vertex::inner(7), Vertex::outer(7), Vertex::inner(8)]
        );
        assert_eq!(
            b.nplus_left,
            [Vertex::inner(1), Vertex::outer(1), Vertex::inner(0)]
        );

        // All 10 vertices when the window wraps the whole ring.
        assert_eq!(block(0, 5).vertices.len(), 10);
    }

    #[test]
    fn gamma_profile_examples() {
        // Period-5 tile on P(10,2): every block holds exactly 3.
        let g = petersen2(10, FaultSpec::none()).unwrap();
        let s = DomSet::from_vertices(
            10,
            &[
                Vertex::outer(0),
                Vertex::inner(2),
                Vertex::inner(3),
                Vertex::outer(5),
                Vertex::inner(7),
                Vertex::inner(8),
            ],
        );
        let p = gamma_profile(&g, &s, FaultSpec::none());
        assert!(p.gammas.iter().all(|&x| x == 3));
        assert_eq!(p.gammas.iter().sum::<usize>(), 5 * s.size());
        assert_eq!(p.type_tag, TypeTag::NoFault);
        assert_eq!(p.couple_number, 0);
        assert_eq!(p.self_contained, vec![2, 7]);

        assert!(gammas(&DomSet::new(10), 10).iter().all(|&x| x == 0));

        let g = petersen2(6, FaultSpec::outer(2)).unwrap();
        let s = DomSet::from_vertices(6, &[Vertex::outer(0), Vertex::inner(3), Vertex::inner(4)]);
        let p = gamma_profile(&g, &s, FaultSpec::outer(2));
        assert_eq!(p.gammas.iter().sum::<usize>(), 15);
    }

    #[test]
    fn classify_examples() {
        let g = petersen2(6, FaultSpec::outer(2)).unwrap();
        let s = DomSet::from_vertices(6, &[Vertex::outer(0), Vertex::inner(3), Vertex::inner(4)]);
        assert_eq!(classify(&g, &s, FaultSpec::outer(2)), TypeTag::TypeII);

        // Some gamma_i = 1.
        let g = petersen2(10, FaultSpec::none()).unwrap();
        let s = DomSet::from_vertices(10, &[Vertex::outer(0)]);
        assert_eq!(classify(&g, &s, FaultSpec::outer(5)), TypeTag::NotTypeI);

        // Type IIIb pattern around f=4 in P(11,2): {u2, v2, u6, v6} plus
        // enough mass elsewhere to keep every block at 2 or more.
        let g = petersen2(11, FaultSpec::outer(4)).unwrap();
        let mut s = DomSet::from_vertices(
            11,
            &[
                Vertex::outer(2),
                Vertex::inner(2),
                Vertex::outer(6),
                Vertex::inner(6),
            ],
        );
        for v in [
            Vertex::outer(9),
            Vertex::inner(9),
            Vertex::inner(10),
            Vertex::outer(0),
        ] {
            s.insert(v);
        }
        assert_eq!(classify(&g, &s, FaultSpec::outer(4)), TypeTag::TypeIIIb);

        assert_eq!(classify(&g, &s, FaultSpec::none()), TypeTag::NoFault);
    }

    #[test]
    fn classification_is_reflection_invariant() {
        // Reflecting a Type II set about the fault column yields the mirror
        // pattern; the tag must not change.
        let n = 11;
        let g = petersen2(n, FaultSpec::outer(0)).unwrap();
        let type2 = DomSet::from_vertices(
            n,
            &[
                Vertex::outer(9),
                Vertex::inner(1),
                Vertex::inner(2),
                Vertex::outer(4),
                Vertex::inner(6),
                Vertex::inner(7),
            ],
        );
        assert!(is_dominating(&g, &type2).unwrap());
        assert_eq!(classify(&g, &type2, FaultSpec::outer(0)), TypeTag::TypeII);

        let mirrored = DomSet::from_vertices(
            n,
            &type2
                .vertices()
                .iter()
                .map(|v| v.reflect(0, n))
                .collect::<Vec<_>>(),
        );
        assert!(is_dominating(&g, &mirrored).unwrap());
        assert_ne!(mirrored, type2);
        assert_eq!(
            classify(&g, &mirrored, FaultSpec::outer(0)),
            TypeTag::TypeII
        );
    }

    #[test]
    fn pseudo_couples_and_self_contained() {
        let g = petersen2(6, FaultSpec::outer(2)).unwrap();
        let s = DomSet::from_vertices(6, &[Vertex::outer(0), Vertex::inner(3), Vertex::inner(4)]);
        assert_eq!(
            pseudo_couple_vertices(&g, &s, FaultSpec::outer(2)).unwrap(),
            Vec::<usize>::new()
        );

        // All-outer set: every column outside F qualifies.
        let g = petersen2(11, FaultSpec::outer(0)).unwrap();
        let s = DomSet::from_vertices(11, &(1..11).map(Vertex::outer).collect::<Vec<_>>());
        let window = fault_window(0, 11);
        let expect: Vec<usize> = (0..11).filter(|i| !window.contains(i)).collect();
        assert_eq!(
            pseudo_couple_vertices(&g, &s, FaultSpec::outer(0)).unwrap(),
            expect
        );

        assert!(pseudo_couple_vertices(&g, &s, FaultSpec::none()).is_err());

        let g = petersen2(10, FaultSpec::none()).unwrap();
        assert!(self_contained_blocks(&g, &DomSet::new(10)).is_empty());
    }

    #[test]
    fn profile_serializes_to_schema() {
        let g = petersen2(6, FaultSpec::outer(2)).unwrap();
        let s = DomSet::from_vertices(6, &[Vertex::outer(0), Vertex::inner(3), Vertex::inner(4)]);
        let p = gamma_profile(&g, &s, FaultSpec::outer(2));
        let json = serde_json::to_value(&p).unwrap();
        assert_eq!(json["type"], "TypeII");
        assert!(json["gammas"].is_array());
        assert!(json["F"].is_array());
        assert!(json.get("couple_number").is_some());
    }
}
