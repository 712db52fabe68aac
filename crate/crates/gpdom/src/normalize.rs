//! Constructive set rewriting: the exchange rule, Type I normalization,
//! couple-number reduction, and canonicalization of the fault block to the
//! Type II / Type III forms.
//!
//! Every rewrite is verification-first: the exchanged set is re-checked for
//! domination instead of trusted. The rewrites implement theorems, so a
//! failed check is reported as a contradiction (it would falsify the claim),
//! never silently absorbed.

use crate::analysis::{classify, gammas, is_dominating, DomSet, TypeTag};
use crate::error::Error;
use crate::graph::{modn, FaultSpec, GPGraph, Ring, Vertex};
use std::fmt;

/// Which rewrite produced a step. `Canon3*` are the fault-block rewrites for
/// occupancy 3, `Canon4*` the ones for occupancy 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteRule {
    Exchange,
    TypeIFix,
    CoupleReduce,
    Canon3b,
    Canon3c,
    Canon3d,
    Canon4e,
    Canon4f,
    Canon4g,
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One applied exchange: `removed` left the set, `added` joined it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: RewriteRule,
    pub removed: Vertex,
    pub added: Vertex,
    pub gammas_after: Vec<usize>,
}

impl RewriteStep {
    /// Trace line: `RULE removed=<v> added=<v> gamma_profile_after=[...]`.
    pub fn trace_line(&self) -> String {
        let gam: Vec<String> = self.gammas_after.iter().map(|g| g.to_string()).collect();
        format!(
            "{} removed={} added={} gamma_profile_after=[{}]",
            self.rule,
            self.removed,
            self.added,
            gam.join(",")
        )
    }
}

/// `S - x + y`, accepted only when the result still dominates (in particular
/// every vertex of `N[x]` stays dominated).
pub fn exchange(g: &GPGraph, s: &DomSet, x: Vertex, y: Vertex) -> Result<DomSet, Error> {
    if !s.contains(x) {
        return Err(Error::InvalidExchange(format!("{x} is not in the set")));
    }
    if s.contains(y) {
        return Err(Error::InvalidExchange(format!("{y} is already in the set")));
    }
    if !g.is_live(y) {
        return Err(Error::InvalidExchange(format!(
            "{y} is deleted or out of range"
        )));
    }
    let mut next = s.clone();
    next.remove(x);
    next.insert(y);
    if !is_dominating(g, &next)? {
        return Err(Error::RejectedExchange(format!(
            "removing {x} for {y} loses domination"
        )));
    }
    Ok(next)
}

fn require_outer_fault(fault: FaultSpec) -> Result<usize, Error> {
    fault
        .outer_index()
        .ok_or_else(|| Error::NotApplicable("normalization needs an outer faulted vertex".into()))
}

fn fault_closed_neighborhood(f: usize, n: usize) -> [Vertex; 4] {
    let f = f as i64;
    [
        Vertex::reduced(Ring::Outer, f, n),
        Vertex::reduced(Ring::Outer, f - 1, n),
        Vertex::reduced(Ring::Outer, f + 1, n),
        Vertex::reduced(Ring::Inner, f, n),
    ]
}

fn check_avoids_fault_neighborhood(s: &DomSet, f: usize, n: usize) -> Result<(), Error> {
    let touched: Vec<String> = fault_closed_neighborhood(f, n)
        .iter()
        .filter(|&&v| s.contains(v))
        .map(|v| v.to_string())
        .collect();
    if touched.is_empty() {
        Ok(())
    } else {
        Err(Error::NotApplicable(format!(
            "set touches the fault neighborhood: {}",
            touched.join(",")
        )))
    }
}

/// Applies one exchange, records the step, and enforces the fault-avoidance
/// invariant (rewrites never insert `u_f` or a neighbor of it).
fn apply_step(
    g: &GPGraph,
    s: &DomSet,
    rule: RewriteRule,
    removed: Vertex,
    added: Vertex,
    f: usize,
    steps: &mut Vec<RewriteStep>,
) -> Result<DomSet, Error> {
    if fault_closed_neighborhood(f, g.n()).contains(&added) {
        return Err(Error::Contradiction(format!(
            "{rule} wants to insert {added} inside N[u_{f}]"
        )));
    }
    let next = exchange(g, s, removed, added).map_err(|e| match e {
        Error::RejectedExchange(msg) | Error::InvalidExchange(msg) => {
            Error::Contradiction(format!("{rule}: {msg}"))
        }
        other => other,
    })?;
    steps.push(RewriteStep {
        rule,
        removed,
        added,
        gammas_after: gammas(&next, g.n()),
    });
    Ok(next)
}

/// Rewrites a dominating set avoiding `N[u_f]` until every block holds at
/// least two members.
///
/// While some `gamma_i = 1` (necessarily with `u_i` in the set), the sole
/// occupant's far right support `N^+(R_i)` is fully in the set, and swapping
/// `u_{i+3}` for `u_{i+2}` lifts the deficient block; the reflected move is
/// used when the forward one would touch the faulted column.
pub fn to_type1(
    g: &GPGraph,
    s: &DomSet,
    fault: FaultSpec,
) -> Result<(DomSet, Vec<RewriteStep>), Error> {
    let n = g.n();
    let f = require_outer_fault(fault)?;
    check_avoids_fault_neighborhood(s, f, n)?;
    if !is_dominating(g, s)? {
        return Err(Error::InvalidSet("input does not dominate".into()));
    }

    let mut current = s.clone();
    let mut steps = Vec::new();
    let deficient = |gam: &[usize]| -> usize { gam.iter().filter(|&&x| x == 1).count() };
    loop {
        let gam = gammas(&current, n);
        // Scan from f+3 cyclically for determinism.
        let target = (0..n)
            .map(|d| modn(f as i64 + 3 + d as i64, n))
            .find(|&i| i != f && gam[i] == 1);
        let Some(i) = target else { break };

        if !current.contains(Vertex::outer(i)) {
            return Err(Error::Contradiction(format!(
                "gamma_{i} = 1 but u_{i} is not in the set"
            )));
        }
        let before = deficient(&gam);
        let ii = i as i64;
        let forward_clear = modn(ii + 2, n) != f && modn(ii + 3, n) != f;
        let (removed, added) = if forward_clear {
            (
                Vertex::reduced(Ring::Outer, ii + 3, n),
                Vertex::reduced(Ring::Outer, ii + 2, n),
            )
        } else {
            (
                Vertex::reduced(Ring::Outer, ii - 3, n),
                Vertex::reduced(Ring::Outer, ii - 2, n),
            )
        };
        current = apply_step(
            g,
            &current,
            RewriteRule::TypeIFix,
            removed,
            added,
            f,
            &mut steps,
        )?;
        let after = deficient(&gammas(&current, n));
        if after >= before {
            return Err(Error::Contradiction(
                "type-I fix did not shrink the deficient block count".into(),
            ));
        }
        if steps.len() > n {
            return Err(Error::Contradiction(
                "type-I normalization exceeded n steps".into(),
            ));
        }
    }
    Ok((current, steps))
}

fn couple_number(gam: &[usize], f: usize, n: usize) -> usize {
    let window = crate::analysis::fault_window(f, n);
    (0..n)
        .filter(|&i| gam[i] == 2 && !window.contains(&i))
        .count()
}

/// Removes every reducible couple: a block outside the fault window with
/// exactly two members and no inner member within one column of its center.
///
/// Each applied move lowers the couple number by exactly one and leaves the
/// remaining profile intact except at the source block and the block five
/// columns past the removed vertex.
pub fn reduce_couples(
    g: &GPGraph,
    s: &DomSet,
    fault: FaultSpec,
) -> Result<(DomSet, Vec<RewriteStep>), Error> {
    let n = g.n();
    let f = require_outer_fault(fault)?;
    check_avoids_fault_neighborhood(s, f, n)?;
    {
        let gam = gammas(s, n);
        if gam.iter().any(|&x| x <= 1) {
            return Err(Error::NotApplicable(
                "couple reduction needs every block at 2 or more".into(),
            ));
        }
    }

    let window = crate::analysis::fault_window(f, n);
    let mut current = s.clone();
    let mut steps = Vec::new();
    let initial_couples = couple_number(&gammas(&current, n), f, n);
    loop {
        let gam = gammas(&current, n);
        let target = (0..n).map(|d| modn(f as i64 + 3 + d as i64, n)).find(|&i| {
            !window.contains(&i)
                && gam[i] == 2
                && (-1..=1)
                    .all(|d| !current.contains(Vertex::reduced(Ring::Inner, i as i64 + d, n)))
        });
        let Some(i) = target else { break };

        if !current.contains(Vertex::outer(i)) {
            return Err(Error::Contradiction(format!(
                "gamma_{i} = 2 with bare inner columns but u_{i} is not in the set"
            )));
        }
        let ii = i as i64;
        // The second member sits in the left or right end of the block and
        // fixes the move's direction.
        let right_occupied = [
            Vertex::reduced(Ring::Outer, ii + 1, n),
            Vertex::reduced(Ring::Outer, ii + 2, n),
            Vertex::reduced(Ring::Inner, ii + 2, n),
        ]
        .iter()
        .any(|&v| current.contains(v));
        let (removed, added) = if right_occupied {
            (
                Vertex::reduced(Ring::Outer, ii - 3, n),
                Vertex::reduced(Ring::Outer, ii - 2, n),
            )
        } else {
            (
                Vertex::reduced(Ring::Outer, ii + 3, n),
                Vertex::reduced(Ring::Outer, ii + 2, n),
            )
        };
        let before = couple_number(&gam, f, n);
        current = apply_step(
            g,
            &current,
            RewriteRule::CoupleReduce,
            removed,
            added,
            f,
            &mut steps,
        )?;
        let after = couple_number(&gammas(&current, n), f, n);
        if after != before - 1 {
            return Err(Error::Contradiction(format!(
                "couple reduction changed the couple number {before} -> {after}"
            )));
        }
        if steps.len() > initial_couples {
            return Err(Error::Contradiction(
                "couple reduction exceeded its step budget".into(),
            ));
        }
    }
    Ok((current, steps))
}

/// A fault-block pattern, its canonicalizing move (None when already
/// canonical), and the resulting tag.
struct CanonCase {
    pattern: &'static [(Ring, i64)],
    rule: RewriteRule,
    /// (removed, added) as offsets from `f`.
    movement: Option<((Ring, i64), (Ring, i64))>,
    result: TypeTag,
}

const CANON3: [CanonCase; 4] = [
    CanonCase {
        pattern: &[(Ring::Outer, -2), (Ring::Inner, 1), (Ring::Inner, 2)],
        rule: RewriteRule::Exchange,
        movement: None,
        result: TypeTag::TypeII,
    },
    CanonCase {
        pattern: &[(Ring::Outer, -2), (Ring::Outer, 2), (Ring::Inner, 2)],
        rule: RewriteRule::Canon3b,
        movement: Some(((Ring::Outer, 2), (Ring::Inner, 1))),
        result: TypeTag::TypeII,
    },
    CanonCase {
        pattern: &[(Ring::Inner, -1), (Ring::Inner, 1), (Ring::Inner, 2)],
        rule: RewriteRule::Canon3c,
        movement: Some(((Ring::Inner, -1), (Ring::Outer, -2))),
        result: TypeTag::TypeII,
    },
    CanonCase {
        pattern: &[(Ring::Inner, -1), (Ring::Outer, 2), (Ring::Inner, 2)],
        rule: RewriteRule::Canon3d,
        movement: Some(((Ring::Outer, -3), (Ring::Outer, -2))),
        result: TypeTag::TypeIIId,
    },
];

const CANON4: [CanonCase; 7] = [
    CanonCase {
        pattern: &[
            (Ring::Inner, -1),
            (Ring::Inner, 1),
            (Ring::Outer, 2),
            (Ring::Inner, 2),
        ],
        rule: RewriteRule::Exchange,
        movement: None,
        result: TypeTag::TypeIIIa,
    },
    CanonCase {
        pattern: &[
            (Ring::Outer, -2),
            (Ring::Inner, -2),
            (Ring::Outer, 2),
            (Ring::Inner, 2),
        ],
        rule: RewriteRule::Exchange,
        movement: None,
        result: TypeTag::TypeIIIb,
    },
    CanonCase {
        pattern: &[
            (Ring::Inner, -2),
            (Ring::Inner, -1),
            (Ring::Inner, 1),
            (Ring::Inner, 2),
        ],
        rule: RewriteRule::Exchange,
        movement: None,
        result: TypeTag::TypeIIIc,
    },
    CanonCase {
        pattern: &[
            (Ring::Outer, -2),
            (Ring::Inner, -2),
            (Ring::Inner, 1),
            (Ring::Outer, 2),
        ],
        rule: RewriteRule::Exchange,
        movement: None,
        result: TypeTag::TypeIIId,
    },
    CanonCase {
        pattern: &[
            (Ring::Outer, -2),
            (Ring::Inner, 1),
            (Ring::Outer, 2),
            (Ring::Inner, 2),
        ],
        rule: RewriteRule::Canon4e,
        movement: Some(((Ring::Outer, 2), (Ring::Outer, 3))),
        result: TypeTag::TypeII,
    },
    CanonCase {
        pattern: &[
            (Ring::Outer, -2),
            (Ring::Inner, -2),
            (Ring::Inner, 1),
            (Ring::Inner, 2),
        ],
        rule: RewriteRule::Canon4f,
        movement: Some(((Ring::Inner, -2), (Ring::Inner, -4))),
        result: TypeTag::TypeII,
    },
    CanonCase {
        pattern: &[
            (Ring::Inner, -2),
            (Ring::Inner, -1),
            (Ring::Inner, 1),
            (Ring::Outer, 2),
        ],
        rule: RewriteRule::Canon4g,
        movement: Some(((Ring::Inner, 1), (Ring::Inner, 3))),
        result: TypeTag::TypeII,
    },
];

/// Rewrites the fault block into its canonical Type II or Type III form.
///
/// The block pattern is matched up to reflection about `f`; a reflected
/// match applies the mirrored move. A pattern outside the feasible list is
/// reported as `InfeasiblePattern` (it would falsify the case enumeration).
pub fn to_canonical_type(
    g: &GPGraph,
    s: &DomSet,
    fault: FaultSpec,
) -> Result<(DomSet, TypeTag, Vec<RewriteStep>), Error> {
    let n = g.n();
    let f = require_outer_fault(fault)?;
    check_avoids_fault_neighborhood(s, f, n)?;
    let gam = gammas(s, n);
    if gam.iter().any(|&x| x <= 1) {
        return Err(Error::NotApplicable(
            "canonicalization expects every block at 2 or more".into(),
        ));
    }
    let cases: &[CanonCase] = match gam[f] {
        3 => &CANON3,
        4 => &CANON4,
        other => {
            return Err(Error::NotApplicable(format!(
                "fault block holds {other} members, expected 3 or 4"
            )))
        }
    };

    let member = |ring: Ring, d: i64| s.contains(Vertex::reduced(ring, f as i64 + d, n));
    let mut pattern: Vec<(Ring, i64)> = Vec::new();
    for d in -2..=2i64 {
        for ring in [Ring::Outer, Ring::Inner] {
            if member(ring, d) {
                pattern.push((ring, d));
            }
        }
    }
    pattern.sort_unstable();

    for case in cases {
        for mirrored in [false, true] {
            let mut reference: Vec<(Ring, i64)> = case
                .pattern
                .iter()
                .map(|&(r, d)| (r, if mirrored { -d } else { d }))
                .collect();
            reference.sort_unstable();
            if reference != pattern {
                continue;
            }
            let mut steps = Vec::new();
            let mut current = s.clone();
            if let Some(((rem_ring, rem_d), (add_ring, add_d))) = case.movement {
                let sign = if mirrored { -1 } else { 1 };
                let removed = Vertex::reduced(rem_ring, f as i64 + sign * rem_d, n);
                let added = Vertex::reduced(add_ring, f as i64 + sign * add_d, n);
                current = apply_step(g, &current, case.rule, removed, added, f, &mut steps)?;
            }
            let tag = classify(g, &current, fault);
            if tag != case.result {
                return Err(Error::Contradiction(format!(
                    "canonicalization promised {} but produced {tag}",
                    case.result
                )));
            }
            return Ok((current, tag, steps));
        }
    }
    Err(Error::InfeasiblePattern(format!(
        "fault block pattern {pattern:?} matches no feasible case"
    )))
}

/// Full pipeline: Type I normalization, couple reduction, then fault-block
/// canonicalization. Returns the final set, its tag, and the combined trace.
pub fn normalize_pipeline(
    g: &GPGraph,
    s: &DomSet,
    fault: FaultSpec,
) -> Result<(DomSet, TypeTag, Vec<RewriteStep>), Error> {
    let (s1, mut steps) = to_type1(g, s, fault)?;
    let (s2, more) = reduce_couples(g, &s1, fault)?;
    steps.extend(more);
    let (s3, tag, more) = to_canonical_type(g, &s2, fault)?;
    steps.extend(more);
    Ok((s3, tag, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::petersen2;
    use crate::solver::enumerate_minimum_sets;

    fn outer_fault_avoiding_sets(n: usize, f: usize) -> Vec<DomSet> {
        let g = petersen2(n, FaultSpec::outer(f)).unwrap();
        let e = enumerate_minimum_sets(&g, None).unwrap();
        let nb = fault_closed_neighborhood(f, n);
        e.sets
            .into_iter()
            .filter(|s| nb.iter().all(|&v| !s.contains(v)))
            .collect()
    }

    #[test]
    fn exchange_accepts_and_rejects() {
        let g = petersen2(6, FaultSpec::outer(2)).unwrap();
        // One redundant vertex: u3's whole neighborhood stays covered when it
        // slides to u4.
        let s = DomSet::from_vertices(
            6,
            &[
                Vertex::outer(0),
                Vertex::inner(3),
                Vertex::inner(4),
                Vertex::outer(3),
            ],
        );
        let next = exchange(&g, &s, Vertex::outer(3), Vertex::outer(4)).unwrap();
        assert_eq!(next.size(), s.size());
        assert!(is_dominating(&g, &next).unwrap());

        // Sliding v4 to v5 strands v2 (its dominators are u2, v0, v4).
        let tight =
            DomSet::from_vertices(6, &[Vertex::outer(0), Vertex::inner(3), Vertex::inner(4)]);
        assert!(matches!(
            exchange(&g, &tight, Vertex::inner(4), Vertex::inner(5)),
            Err(Error::RejectedExchange(_))
        ));
        assert!(matches!(
            exchange(&g, &tight, Vertex::outer(5), Vertex::inner(0)),
            Err(Error::InvalidExchange(_))
        ));
        assert!(matches!(
            exchange(&g, &tight, Vertex::outer(0), Vertex::outer(2)),
            Err(Error::InvalidExchange(_))
        ));
    }

    #[test]
    fn to_type1_identity_on_type1_input() {
        let s = crate::construct::construct_fault_5k1(2, 0).unwrap();
        let g = petersen2(11, FaultSpec::outer(0)).unwrap();
        let (out, steps) = to_type1(&g, &s, FaultSpec::outer(0)).unwrap();
        assert_eq!(out, s);
        assert!(steps.is_empty());
    }

    #[test]
    fn to_type1_fixes_deficient_blocks() {
        // Exhaustive over all minimum sets avoiding N[u_f] at small n.
        for n in [7, 8, 9] {
            for s in outer_fault_avoiding_sets(n, 0) {
                let g = petersen2(n, FaultSpec::outer(0)).unwrap();
                let ones = gammas(&s, n).iter().filter(|&&x| x == 1).count();
                let (out, steps) = to_type1(&g, &s, FaultSpec::outer(0)).unwrap();
                assert!(gammas(&out, n).iter().all(|&x| x >= 2), "n={n} {s:?}");
                assert_eq!(out.size(), s.size());
                assert!(is_dominating(&g, &out).unwrap());
                assert!(
                    steps.len() <= ones,
                    "n={n}: {} steps for {ones} ones",
                    steps.len()
                );
            }
        }
    }

    #[test]
    fn reduce_couples_drops_by_one_each_step() {
        for n in [8, 9] {
            for s in outer_fault_avoiding_sets(n, 0) {
                let g = petersen2(n, FaultSpec::outer(0)).unwrap();
                let (s1, _) = to_type1(&g, &s, FaultSpec::outer(0)).unwrap();
                let before = couple_number(&gammas(&s1, n), 0, n);
                let (s2, steps) = reduce_couples(&g, &s1, FaultSpec::outer(0)).unwrap();
                assert!(steps.len() <= before);
                assert_eq!(couple_number(&gammas(&s2, n), 0, n), before - steps.len());
                // No remaining pseudo-couple sits in a block of two.
                let gam = gammas(&s2, n);
                for &i in crate::analysis::pseudo_couple_vertices(&g, &s2, FaultSpec::outer(0))
                    .unwrap()
                    .iter()
                {
                    assert!(gam[i] >= 3, "n={n} i={i} {s2:?}");
                }
            }
        }
    }

    #[test]
    fn couple_reduce_touches_only_two_blocks() {
        // Each step changes gamma only at the source block and five columns
        // beyond the swapped vertex.
        let n = 9;
        for s in outer_fault_avoiding_sets(n, 0) {
            let g = petersen2(n, FaultSpec::outer(0)).unwrap();
            let (s1, _) = to_type1(&g, &s, FaultSpec::outer(0)).unwrap();
            let mut prev = s1.clone();
            let (_, steps) = reduce_couples(&g, &s1, FaultSpec::outer(0)).unwrap();
            for step in steps {
                let mut next = prev.clone();
                next.remove(step.removed);
                next.insert(step.added);
                let before = gammas(&prev, n);
                let after = &step.gammas_after;
                let changed: Vec<usize> = (0..n).filter(|&j| before[j] != after[j]).collect();
                assert!(changed.len() <= 2, "changed blocks {changed:?}");
                prev = next;
            }
        }
    }

    #[test]
    fn canonical_type_identity_and_moves() {
        // Already canonical Type II input is returned unchanged.
        let s = crate::construct::construct_fault_5k1(2, 0).unwrap();
        let g = petersen2(11, FaultSpec::outer(0)).unwrap();
        let (out, tag, steps) = to_canonical_type(&g, &s, FaultSpec::outer(0)).unwrap();
        assert_eq!(out, s);
        assert_eq!(tag, TypeTag::TypeII);
        assert!(steps.is_empty());
    }

    #[test]
    fn pipeline_exhaustive_small_n() {
        for n in [8, 9, 10, 11] {
            for s in outer_fault_avoiding_sets(n, 0) {
                let g = petersen2(n, FaultSpec::outer(0)).unwrap();
                let (out, tag, _) = normalize_pipeline(&g, &s, FaultSpec::outer(0)).unwrap();
                assert_eq!(out.size(), s.size(), "n={n}");
                assert!(is_dominating(&g, &out).unwrap());
                assert!(
                    tag == TypeTag::TypeII || tag.is_type3(),
                    "n={n} ended {tag} from {s:?}"
                );
            }
        }
    }

    #[test]
    fn trace_line_format() {
        let step = RewriteStep {
            rule: RewriteRule::CoupleReduce,
            removed: Vertex::outer(7),
            added: Vertex::outer(6),
            gammas_after: vec![3, 3, 2],
        };
        assert_eq!(
            step.trace_line(),
            "CoupleReduce removed=u7 added=u6 gamma_profile_after=[3,3,2]"
        );
    }
}
