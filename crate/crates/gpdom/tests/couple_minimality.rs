//! The greedy couple reduction inside the pipeline reaches the globally
//! smallest couple number at small n, checked against exhaustive
//! enumeration of all minimum dominating sets.

use gpdom::analysis::{classify, fault_window, gammas, DomSet, TypeTag};
use gpdom::graph::{petersen2, FaultSpec, Ring, Vertex};
use gpdom::normalize::normalize_pipeline;
use gpdom::solver::enumerate_minimum_sets;

#[test]
fn pipeline_reaches_exhaustive_minimum_couple_number() {
    for n in 5..=9usize {
        let g = petersen2(n, FaultSpec::outer(0)).unwrap();
        let e = enumerate_minimum_sets(&g, None).unwrap();
        let window = fault_window(0, n);
        let couple = |s: &DomSet| {
            let gam = gammas(s, n);
            (0..n)
                .filter(|&i| gam[i] == 2 && !window.contains(&i))
                .count()
        };

        let mut min_by_pool = [usize::MAX; 2];
        for s in &e.sets {
            match classify(&g, s, FaultSpec::outer(0)) {
                TypeTag::TypeII => min_by_pool[0] = min_by_pool[0].min(couple(s)),
                t if t.is_type3() => min_by_pool[1] = min_by_pool[1].min(couple(s)),
                _ => {}
            }
        }

        let nb = [
            Vertex::outer(1),
            Vertex::reduced(Ring::Outer, -1, n),
            Vertex::inner(0),
        ];
        for s in &e.sets {
            if nb.iter().any(|&v| s.contains(v)) {
                continue;
            }
            let (out, tag, _) = normalize_pipeline(&g, s, FaultSpec::outer(0)).unwrap();
            let pool = if tag == TypeTag::TypeII { 0 } else { 1 };
            assert_eq!(
                couple(&out),
                min_by_pool[pool],
                "n={n}: greedy reduction stopped above the global minimum for {s:?}"
            );
        }
    }
}
