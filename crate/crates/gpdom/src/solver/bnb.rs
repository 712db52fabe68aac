//! Branch-and-bound minimum domination for arbitrary deleted-vertex and
//! deleted-edge instances.
//!
//! Branches on the lowest-slot undominated vertex over its closed
//! neighborhood; the lower bound is a greedy packing of pairwise-disjoint
//! closed neighborhoods (each packed vertex forces one distinct set member).

use super::{Engine, SolveResult, SolveStats};
use crate::analysis::{is_dominating, DomSet};
use crate::bitset::SlotSet;
use crate::error::Error;
use crate::graph::GPGraph;
use std::time::Instant;

/// Soft guard on instance size; callers may force past it.
pub const BNB_LIVE_LIMIT: usize = 60;

struct Search<'a> {
    g: &'a GPGraph,
    closed: Vec<SlotSet>,
    live: SlotSet,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a GPGraph) -> Self {
        let closed = (0..g.num_slots()).map(|s| g.closed_mask(s)).collect();
        Search {
            g,
            closed,
            live: g.live().clone(),
            nodes: 0,
        }
    }

    /// Greedy packing of undominated vertices with pairwise disjoint closed
    /// neighborhoods; each needs its own dominator.
    fn packing_bound(&self, covered: &SlotSet) -> usize {
        let mut blocked = SlotSet::new(self.g.num_slots());
        let mut count = 0;
        let mut w = self.live.first_missing_from(covered);
        while let Some(slot) = w {
            if !self.closed[slot].intersects(&blocked) {
                blocked.union_with(&self.closed[slot]);
                count += 1;
            }
            // Next undominated slot above `slot`.
            w = (slot + 1..self.g.num_slots())
                .find(|&s| self.live.contains(s) && !covered.contains(s));
        }
        count
    }

    fn branch(
        &mut self,
        covered: &SlotSet,
        chosen: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
    ) {
        self.nodes += 1;
        let best_size = best.as_ref().map_or(usize::MAX, |b| b.len());
        let Some(w) = self.live.first_missing_from(covered) else {
            if chosen.len() < best_size {
                *best = Some(chosen.clone());
            }
            return;
        };
        if chosen.len() + self.packing_bound(covered) >= best_size {
            return;
        }
        let candidates: Vec<usize> = self.closed[w]
            .iter()
            .filter(|&x| self.live.contains(x))
            .collect();
        for x in candidates {
            chosen.push(x);
            let mut next = covered.clone();
            next.union_with(&self.closed[x]);
            self.branch(&next, chosen, best);
            chosen.pop();
        }
    }

    /// Is there a dominating superset of `chosen` with at most `budget` more
    /// picks, all drawn from slots `> floor`?
    fn feasible(&mut self, covered: &SlotSet, budget: usize, floor: usize) -> bool {
        self.nodes += 1;
        let Some(w) = self.live.first_missing_from(covered) else {
            return true;
        };
        if budget == 0 || self.packing_bound(covered) > budget {
            return false;
        }
        let candidates: Vec<usize> = self.closed[w]
            .iter()
            .filter(|&x| x > floor && self.live.contains(x))
            .collect();
        for x in candidates {
            let mut next = covered.clone();
            next.union_with(&self.closed[x]);
            if self.feasible(&next, budget - 1, floor) {
                return true;
            }
        }
        false
    }

    /// Lexicographically smallest optimal set under slot order, built by
    /// fixing members one at a time against a feasibility check.
    fn lex_min_certificate(&mut self, gamma: usize) -> Vec<usize> {
        let mut prefix: Vec<usize> = Vec::new();
        let mut covered = SlotSet::new(self.g.num_slots());
        while prefix.len() < gamma {
            let start = prefix.last().map_or(0, |&p| p + 1);
            let mut pick = None;
            for x in start..self.g.num_slots() {
                if !self.live.contains(x) {
                    continue;
                }
                let mut next = covered.clone();
                next.union_with(&self.closed[x]);
                if self.feasible(&next, gamma - prefix.len() - 1, x) {
                    pick = Some(x);
                    break;
                }
            }
            let pick = pick.expect("an optimal completion must exist");
            covered.union_with(&self.closed[pick]);
            prefix.push(pick);
        }
        prefix
    }
}

pub fn solve_bnb(g: &GPGraph) -> Result<SolveResult, Error> {
    solve_bnb_with_limit(g, Some(BNB_LIVE_LIMIT))
}

/// Exact minimum via branch-and-bound; `limit` guards instance size
/// (`None` forces the solve regardless).
pub fn solve_bnb_with_limit(g: &GPGraph, limit: Option<usize>) -> Result<SolveResult, Error> {
    let live = g.live_count();
    if let Some(limit) = limit {
        if live > limit {
            return Err(Error::SizeLimit { live, limit });
        }
    }
    let start = Instant::now();
    let mut search = Search::new(g);

    // Greedy max-coverage incumbent; on pristine P(n,2) the constructor
    // pattern is tighter.
    let mut best = Some(greedy_cover(g));
    if g.deleted_vertices().is_empty() && g.deleted_edges().is_empty() && g.k() == 2 {
        let seed = crate::construct::construct_fault_free(g.n())?;
        let slots: Vec<usize> = seed.bits().iter().collect();
        if slots.len() < best.as_ref().unwrap().len() {
            best = Some(slots);
        }
    }

    let covered = SlotSet::new(g.num_slots());
    search.branch(&covered, &mut Vec::new(), &mut best);
    let gamma = best.expect("search always yields a set").len();

    let slots = search.lex_min_certificate(gamma);
    let mut bits = SlotSet::new(g.num_slots());
    for s in slots {
        bits.insert(s);
    }
    let certificate = DomSet::from_bits(g.n(), bits);
    if !is_dominating(g, &certificate)? || certificate.size() != gamma {
        return Err(Error::Contradiction(
            "branch-and-bound certificate failed verification".into(),
        ));
    }
    debug_assert!(gamma >= live.div_ceil(4));

    Ok(SolveResult {
        gamma,
        certificate,
        engine: Engine::BnB,
        stats: SolveStats {
            nodes_or_states: search.nodes,
            elapsed: start.elapsed(),
        },
    })
}

fn greedy_cover(g: &GPGraph) -> Vec<usize> {
    let mut covered = SlotSet::new(g.num_slots());
    let mut chosen = Vec::new();
    while g.live().first_missing_from(&covered).is_some() {
        let pick = (0..g.num_slots())
            .filter(|&s| g.live().contains(s))
            .max_by_key(|&s| {
                let mut gain = g.closed_mask(s);
                gain.intersect_with(g.live());
                gain.iter().filter(|&x| !covered.contains(x)).count()
            })
            .expect("live graph");
        covered.union_with(&g.closed_mask(pick));
        chosen.push(pick);
    }
    chosen
}
