//! The exhaustive small-n normalization run must exercise every rewrite
//! rule; a silent diversion to the wrong pattern arm would show up here.

use gpdom::graph::{petersen2, FaultSpec, Ring, Vertex};
use gpdom::normalize::normalize_pipeline;
use gpdom::solver::enumerate_minimum_sets;
use std::collections::BTreeMap;

#[test]
fn every_rewrite_rule_fires_on_enumerated_sets() {
    let mut hist: BTreeMap<String, usize> = BTreeMap::new();
    for n in 5..=11usize {
        let g = petersen2(n, FaultSpec::outer(0)).unwrap();
        let e = enumerate_minimum_sets(&g, None).unwrap();
        let nb = [
            Vertex::outer(1),
            Vertex::reduced(Ring::Outer, -1, n),
            Vertex::inner(0),
        ];
        for s in &e.sets {
            if nb.iter().any(|&v| s.contains(v)) {
                continue;
            }
            let (_, _, steps) = normalize_pipeline(&g, s, FaultSpec::outer(0)).unwrap();
            for st in steps {
                *hist.entry(st.rule.to_string()).or_insert(0) += 1;
            }
        }
    }
    for rule in [
        "TypeIFix",
        "CoupleReduce",
        "Canon3b",
        "Canon3c",
        "Canon3d",
        "Canon4e",
        "Canon4f",
        "Canon4g",
    ] {
        assert!(
            hist.get(rule).copied().unwrap_or(0) > 0,
            "rule {rule} never fired; coverage {hist:?}"
        );
    }
}
