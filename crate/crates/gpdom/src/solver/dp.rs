//! Cyclic frontier dynamic program for `P(n,2)` with at most one deleted
//! vertex.
//!
//! Columns `{u_i, v_i}` are closed left to right. The edges `u_{j-1} u_j`,
//! `u_j v_j`, and `v_{j-2} v_j` are settled when column `j` closes, so the
//! frontier after closing column `j` is exactly `{u_j, v_j, v_{j-1}}`. The
//! cycle is closed by enumerating all seed decisions for columns 0 and 1 and
//! checking the three wrap edges `u_{n-1} u_0`, `v_{n-2} v_0`, `v_{n-1} v_1`
//! against per-seed obligation flags at the end of the sweep.

use super::{Engine, SolveResult, SolveStats};
use crate::analysis::{is_dominating, DomSet};
use crate::bitset::SlotSet;
use crate::error::Error;
use crate::graph::{petersen2, FaultSpec, Ring, Vertex};
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    InSet,
    Dominated,
    Undominated,
    Absent,
}

use Status::*;

impl Status {
    fn code(self) -> usize {
        match self {
            InSet => 0,
            Dominated => 1,
            Undominated => 2,
            Absent => 3,
        }
    }
}

/// Frontier state `(u_j, v_j, v_{j-1})` plus the two deferred wrap
/// obligations for `v_0` and `v_1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct State {
    u: Status,
    v: Status,
    v_prev: Status,
    v0_needs_wrap: bool,
    v1_needs_wrap: bool,
}

impl State {
    fn key(self) -> usize {
        self.u.code()
            | self.v.code() << 2
            | self.v_prev.code() << 4
            | (self.v0_needs_wrap as usize) << 6
            | (self.v1_needs_wrap as usize) << 7
    }
}

const STATES: usize = 256;

/// What the DP accumulates per state: at least a pick count, optionally the
/// full membership vector for certificate extraction.
trait Accum: Clone {
    fn empty(n: usize) -> Self;
    fn count(&self) -> usize;
    fn with_column(&self, col: usize, take_u: bool, take_v: bool) -> Self;
    /// Count-major order; certificate mode breaks ties toward the
    /// lexicographically smallest membership under slot order.
    fn better_than(&self, other: &Self) -> bool;
}

#[derive(Clone)]
struct CountAccum(usize);

impl Accum for CountAccum {
    fn empty(_n: usize) -> Self {
        CountAccum(0)
    }
    fn count(&self) -> usize {
        self.0
    }
    fn with_column(&self, _col: usize, take_u: bool, take_v: bool) -> Self {
        CountAccum(self.0 + take_u as usize + take_v as usize)
    }
    fn better_than(&self, other: &Self) -> bool {
        self.0 < other.0
    }
}

#[derive(Clone)]
struct CertAccum {
    count: usize,
    outer: Vec<u64>,
    inner: Vec<u64>,
}

/// First set bit where the vectors differ decides: the one containing it is
/// lexicographically smaller (equal-cardinality sets compare like their
/// sorted element lists).
fn lex_less(a: &[u64], b: &[u64]) -> std::cmp::Ordering {
    for (&x, &y) in a.iter().zip(b) {
        let diff = x ^ y;
        if diff != 0 {
            let bit = 1u64 << diff.trailing_zeros();
            return if x & bit != 0 {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            };
        }
    }
    std::cmp::Ordering::Equal
}

impl Accum for CertAccum {
    fn empty(n: usize) -> Self {
        CertAccum {
            count: 0,
            outer: vec![0; n.div_ceil(64)],
            inner: vec![0; n.div_ceil(64)],
        }
    }
    fn count(&self) -> usize {
        self.count
    }
    fn with_column(&self, col: usize, take_u: bool, take_v: bool) -> Self {
        let mut next = self.clone();
        if take_u {
            next.outer[col / 64] |= 1 << (col % 64);
            next.count += 1;
        }
        if take_v {
            next.inner[col / 64] |= 1 << (col % 64);
            next.count += 1;
        }
        next
    }
    fn better_than(&self, other: &Self) -> bool {
        if self.count != other.count {
            return self.count < other.count;
        }
        match lex_less(&self.outer, &other.outer) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => {
                lex_less(&self.inner, &other.inner) == std::cmp::Ordering::Less
            }
        }
    }
}

struct Instance {
    n: usize,
    del_u: Vec<bool>,
    del_v: Vec<bool>,
}

impl Instance {
    fn new(n: usize, fault: FaultSpec) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
        }
        let mut del_u = vec![false; n];
        let mut del_v = vec![false; n];
        if let Some(v) = fault.faulted {
            if v.index >= n {
                return Err(Error::InvalidFault(format!(
                    "fault {v} out of range for n={n}"
                )));
            }
            match v.ring {
                Ring::Outer => del_u[v.index] = true,
                Ring::Inner => del_v[v.index] = true,
            }
        }
        Ok(Instance { n, del_u, del_v })
    }

    fn column_choices(&self, col: usize) -> &'static [(bool, bool)] {
        const ALL: [(bool, bool); 4] = [(false, false), (false, true), (true, false), (true, true)];
        const NO_U: [(bool, bool); 2] = [(false, false), (false, true)];
        const NO_V: [(bool, bool); 2] = [(false, false), (true, false)];
        const NONE: [(bool, bool); 1] = [(false, false)];
        match (self.del_u[col], self.del_v[col]) {
            (false, false) => &ALL,
            (true, false) => &NO_U,
            (false, true) => &NO_V,
            (true, true) => &NONE,
        }
    }
}

struct Seed {
    take: [bool; 4], // u0, v0, u1, v1
    u0_needs_wrap: bool,
    first_state: State,
}

fn seed_states(inst: &Instance) -> Vec<Seed> {
    let mut seeds = Vec::new();
    for mask in 0..16usize {
        let take = [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0, mask & 8 != 0];
        let (t_u0, t_v0, t_u1, t_v1) = (take[0], take[1], take[2], take[3]);
        if (inst.del_u[0] && t_u0)
            || (inst.del_v[0] && t_v0)
            || (inst.del_u[1] && t_u1)
            || (inst.del_v[1] && t_v1)
        {
            continue;
        }
        // Seed-internal edges: u0-u1, u0-v0, u1-v1. The chords of v0 and v1
        // and all wrap edges stay pending.
        let status = |deleted: bool, taken: bool, dominated: bool| {
            if deleted {
                Absent
            } else if taken {
                InSet
            } else if dominated {
                Dominated
            } else {
                Undominated
            }
        };
        let su0 = status(inst.del_u[0], t_u0, t_v0 || t_u1);
        let sv0 = status(inst.del_v[0], t_v0, t_u0);
        let su1 = status(inst.del_u[1], t_u1, t_u0 || t_v1);
        let sv1 = status(inst.del_v[1], t_v1, t_u1);
        seeds.push(Seed {
            take,
            u0_needs_wrap: su0 == Undominated,
            first_state: State {
                u: su1,
                v: sv1,
                v_prev: sv0,
                v0_needs_wrap: false,
                v1_needs_wrap: false,
            },
        });
    }
    seeds
}

/// Advance one column. Returns the successor state, or `None` when a settled
/// vertex is left undominated with no wrap edge to save it.
fn step(inst: &Instance, state: State, col: usize, take_u: bool, take_v: bool) -> Option<State> {
    // Settle u_{col-1} via the edge u_{col-1} u_col.
    let mut u_prev = state.u;
    if u_prev == Undominated && take_u {
        u_prev = Dominated;
    }
    if u_prev == Undominated {
        return None;
    }
    // Settle v_{col-2} via the chord v_{col-2} v_col; columns 0 and 1 defer
    // to the wrap check instead of dying here.
    let mut v_prev2 = state.v_prev;
    if v_prev2 == Undominated && take_v {
        v_prev2 = Dominated;
    }
    let mut v0_needs = state.v0_needs_wrap;
    let mut v1_needs = state.v1_needs_wrap;
    if v_prev2 == Undominated {
        match col - 2 {
            0 => v0_needs = true,
            1 => v1_needs = true,
            _ => return None,
        }
    }
    let su = if inst.del_u[col] {
        Absent
    } else if take_u {
        InSet
    } else if state.u == InSet || take_v {
        Dominated
    } else {
        Undominated
    };
    let sv = if inst.del_v[col] {
        Absent
    } else if take_v {
        InSet
    } else if take_u || state.v_prev == InSet {
        Dominated
    } else {
        Undominated
    };
    Some(State {
        u: su,
        v: sv,
        v_prev: state.v,
        v0_needs_wrap: v0_needs,
        v1_needs_wrap: v1_needs,
    })
}

/// Wrap check: the final frontier is `{u_{n-1}, v_{n-1}, v_{n-2}}` and the
/// wrap edges are `u_{n-1} u_0`, `v_{n-2} v_0`, `v_{n-1} v_1`, each applied
/// in both directions. For `n = 3` the frontier vertex `v_{n-2}` IS the seed
/// vertex `v_1`; the frontier status takes precedence there.
fn closes_cycle(inst: &Instance, seed: &Seed, fin: State) -> bool {
    let n = inst.n;
    let in_s = |ring: Ring, col: usize| -> bool {
        match (ring, col) {
            (Ring::Outer, c) if c == n - 1 => fin.u == InSet,
            (Ring::Inner, c) if c == n - 1 => fin.v == InSet,
            (Ring::Inner, c) if c == n - 2 => fin.v_prev == InSet,
            (Ring::Outer, 0) => seed.take[0],
            (Ring::Inner, 0) => seed.take[1],
            (Ring::Outer, 1) => seed.take[2],
            (Ring::Inner, 1) => seed.take[3],
            _ => unreachable!("wrap edges only touch the seed and final columns"),
        }
    };
    let needs = |ring: Ring, col: usize| -> bool {
        match (ring, col) {
            (Ring::Outer, c) if c == n - 1 => fin.u == Undominated,
            (Ring::Inner, c) if c == n - 1 => fin.v == Undominated,
            (Ring::Inner, c) if c == n - 2 => fin.v_prev == Undominated,
            (Ring::Outer, 0) => seed.u0_needs_wrap,
            (Ring::Inner, 0) => fin.v0_needs_wrap,
            (Ring::Inner, 1) => fin.v1_needs_wrap,
            _ => unreachable!(),
        }
    };
    let wrap_edges = [
        ((Ring::Outer, n - 1), (Ring::Outer, 0)),
        ((Ring::Inner, n - 2), (Ring::Inner, 0)),
        ((Ring::Inner, n - 1), (Ring::Inner, 1)),
    ];
    // A pending vertex is saved by ANY wrap partner in the set. At n = 3 the
    // vertex v_1 sits on two wrap chords, so domination must accumulate
    // across edges rather than be demanded per edge.
    let satisfied = |ring: Ring, col: usize| -> bool {
        if !needs(ring, col) {
            return true;
        }
        wrap_edges.iter().any(|&(a, b)| {
            (a == (ring, col) && in_s(b.0, b.1)) || (b == (ring, col) && in_s(a.0, a.1))
        })
    };
    wrap_edges
        .iter()
        .all(|&(a, b)| satisfied(a.0, a.1) && satisfied(b.0, b.1))
}

fn run<V: Accum>(inst: &Instance) -> (Option<V>, u64) {
    let n = inst.n;
    let mut best: Option<V> = None;
    let mut states_stored: u64 = 0;

    for seed in seed_states(inst) {
        let mut layer: Vec<Option<V>> = vec![None; STATES];
        let base = V::empty(n)
            .with_column(0, seed.take[0], seed.take[1])
            .with_column(1, seed.take[2], seed.take[3]);
        layer[seed.first_state.key()] = Some(base);

        let mut state_of_key: Vec<Option<State>> = vec![None; STATES];
        state_of_key[seed.first_state.key()] = Some(seed.first_state);

        for col in 2..n {
            let mut next: Vec<Option<V>> = vec![None; STATES];
            let mut next_state: Vec<Option<State>> = vec![None; STATES];
            for key in 0..STATES {
                let Some(acc) = layer[key].take() else {
                    continue;
                };
                let state = state_of_key[key].expect("state recorded with value");
                for &(t_u, t_v) in inst.column_choices(col) {
                    let Some(succ) = step(inst, state, col, t_u, t_v) else {
                        continue;
                    };
                    let cand = acc.with_column(col, t_u, t_v);
                    let slot = &mut next[succ.key()];
                    if slot.as_ref().is_none_or(|cur| cand.better_than(cur)) {
                        *slot = Some(cand);
                        next_state[succ.key()] = Some(succ);
                        states_stored += 1;
                    }
                }
            }
            layer = next;
            state_of_key = next_state;
        }

        for key in 0..STATES {
            let Some(acc) = layer[key].take() else {
                continue;
            };
            let fin = state_of_key[key].expect("state recorded with value");
            if closes_cycle(inst, &seed, fin)
                && best.as_ref().is_none_or(|cur| acc.better_than(cur))
            {
                best = Some(acc);
            }
        }
    }
    (best, states_stored)
}

/// Exact `gamma` of `P(n,2)` minus an optional faulted vertex, value only.
pub fn solve_dp_value(n: usize, fault: FaultSpec) -> Result<(usize, u64), Error> {
    let inst = Instance::new(n, fault)?;
    let (best, states) = run::<CountAccum>(&inst);
    let best = best.ok_or_else(|| Error::Contradiction("dp found no dominating set".into()))?;
    Ok((best.count(), states))
}

/// Exact solve with a verified certificate (the lexicographically smallest
/// optimal set under slot order).
pub fn solve_dp(n: usize, fault: FaultSpec) -> Result<SolveResult, Error> {
    let start = Instant::now();
    let inst = Instance::new(n, fault)?;
    let (best, states) = run::<CertAccum>(&inst);
    let best = best.ok_or_else(|| Error::Contradiction("dp found no dominating set".into()))?;

    let mut bits = SlotSet::new(2 * n);
    for col in 0..n {
        if best.outer[col / 64] >> (col % 64) & 1 == 1 {
            bits.insert(Vertex::outer(col).slot(n));
        }
        if best.inner[col / 64] >> (col % 64) & 1 == 1 {
            bits.insert(Vertex::inner(col).slot(n));
        }
    }
    let certificate = DomSet::from_bits(n, bits);
    let g = petersen2(n, fault)?;
    if !is_dominating(&g, &certificate)? || certificate.size() != best.count() {
        return Err(Error::Contradiction(
            "dp certificate failed verification".into(),
        ));
    }
    debug_assert!(best.count() >= g.live_count().div_ceil(4));

    Ok(SolveResult {
        gamma: best.count(),
        certificate,
        engine: Engine::CyclicDP,
        stats: SolveStats {
            nodes_or_states: states,
            elapsed: start.elapsed(),
        },
    })
}
