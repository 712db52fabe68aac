//! Exhaustive enumeration of all minimum dominating sets.

use super::bnb::solve_bnb_with_limit;
use crate::analysis::DomSet;
use crate::bitset::SlotSet;
use crate::error::Error;
use crate::graph::GPGraph;

/// Guard for the exhaustive layer: enumeration explores slot combinations.
pub const ENUM_LIVE_LIMIT: usize = 24;

#[derive(Clone, Debug)]
pub struct Enumeration {
    /// All minimum dominating sets in lexicographic order of their sorted
    /// slot lists (possibly truncated at the cap).
    pub sets: Vec<DomSet>,
    pub gamma: usize,
    pub truncated: bool,
}

/// Enumerates every minimum dominating set of `g`, up to `cap` sets.
pub fn enumerate_minimum_sets(g: &GPGraph, cap: Option<usize>) -> Result<Enumeration, Error> {
    let live = g.live_count();
    if live > ENUM_LIVE_LIMIT {
        return Err(Error::SizeLimit {
            live,
            limit: ENUM_LIVE_LIMIT,
        });
    }
    let gamma = solve_bnb_with_limit(g, None)?.gamma;

    let closed: Vec<SlotSet> = (0..g.num_slots()).map(|s| g.closed_mask(s)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let covered = SlotSet::new(g.num_slots());
    let truncated = extend(g, &closed, gamma, 0, &covered, &mut chosen, &mut out, cap);

    Ok(Enumeration {
        sets: out,
        gamma,
        truncated,
    })
}

/// Depth-first extension in ascending slot order; emits complete dominating
/// sets of size exactly `gamma`. Returns true if the cap cut the search.
#[allow(clippy::too_many_arguments)]
fn extend(
    g: &GPGraph,
    closed: &[SlotSet],
    gamma: usize,
    from: usize,
    covered: &SlotSet,
    chosen: &mut Vec<usize>,
    out: &mut Vec<DomSet>,
    cap: Option<usize>,
) -> bool {
    if let Some(cap) = cap {
        if out.len() >= cap {
            return true;
        }
    }
    let first_uncovered = g.live().first_missing_from(covered);
    if chosen.len() == gamma {
        if first_uncovered.is_none() {
            let mut bits = SlotSet::new(g.num_slots());
            for &s in chosen.iter() {
                bits.insert(s);
            }
            out.push(DomSet::from_bits(g.n(), bits));
        }
        return false;
    }
    // Every undominated vertex needs a dominator among the remaining slots.
    if let Some(w) = first_uncovered {
        let reachable = closed[w].iter().any(|x| x >= from && g.live().contains(x));
        if !reachable {
            return false;
        }
        if packing_bound(g, closed, covered) > gamma - chosen.len() {
            return false;
        }
    }
    for slot in from..g.num_slots() {
        if !g.live().contains(slot) {
            continue;
        }
        chosen.push(slot);
        let mut next = covered.clone();
        next.union_with(&closed[slot]);
        let cut = extend(g, closed, gamma, slot + 1, &next, chosen, out, cap);
        chosen.pop();
        if cut {
            return true;
        }
    }
    false
}

fn packing_bound(g: &GPGraph, closed: &[SlotSet], covered: &SlotSet) -> usize {
    let mut blocked = SlotSet::new(g.num_slots());
    let mut count = 0;
    for (slot, mask) in closed.iter().enumerate() {
        if g.live().contains(slot) && !covered.contains(slot) && !mask.intersects(&blocked) {
            blocked.union_with(mask);
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_dominating;
    use crate::graph::{petersen2, FaultSpec, Vertex};

    #[test]
    fn all_petersen_minimum_sets() {
        let g = petersen2(5, FaultSpec::none()).unwrap();
        let e = enumerate_minimum_sets(&g, None).unwrap();
        assert_eq!(e.gamma, 3);
        assert!(!e.truncated);
        assert!(!e.sets.is_empty());
        for s in &e.sets {
            assert_eq!(s.size(), 3);
            assert!(is_dominating(&g, s).unwrap());
        }
        // Lex order of sorted slot lists.
        let mut sorted = e.sets.clone();
        sorted.sort_by_key(|s| s.vertices());
        assert_eq!(sorted, e.sets);
    }

    #[test]
    fn closed_under_rotation() {
        let g = petersen2(5, FaultSpec::none()).unwrap();
        let e = enumerate_minimum_sets(&g, None).unwrap();
        for s in &e.sets {
            for d in 1..5 {
                let rotated = DomSet::from_vertices(
                    5,
                    &s.vertices()
                        .iter()
                        .map(|v| v.rotate(d, 5))
                        .collect::<Vec<_>>(),
                );
                assert!(e.sets.contains(&rotated));
            }
        }
    }

    #[test]
    fn lemma_neighbor_touching_sets_have_full_size() {
        // In P(7,2) - u_0 the minimum is 4 < ceil(21/5) = 5, so no minimum
        // set may touch N(u_0).
        let g = petersen2(7, FaultSpec::outer(0)).unwrap();
        let e = enumerate_minimum_sets(&g, None).unwrap();
        assert_eq!(e.gamma, 4);
        let neighborhood = [Vertex::outer(1), Vertex::outer(6), Vertex::inner(0)];
        for s in &e.sets {
            let touches = neighborhood.iter().any(|&v| s.contains(v));
            assert!(!touches || s.size() == 5);
        }
    }

    #[test]
    fn cap_truncates() {
        let g = petersen2(5, FaultSpec::none()).unwrap();
        let e = enumerate_minimum_sets(&g, Some(2)).unwrap();
        assert!(e.truncated);
        assert_eq!(e.sets.len(), 2);
    }

    #[test]
    fn size_guard() {
        let g = petersen2(13, FaultSpec::none()).unwrap();
        assert!(matches!(
            enumerate_minimum_sets(&g, None),
            Err(Error::SizeLimit { .. })
        ));
    }
}
