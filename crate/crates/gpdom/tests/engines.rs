//! Cross-engine checks: both solvers return the same value and the same
//! lexicographically-least certificate, which is also the first set the
//! exhaustive enumerator emits.

use gpdom::analysis::is_dominating;
use gpdom::graph::{petersen2, FaultSpec};
use gpdom::solver::{enumerate_minimum_sets, solve_bnb, solve_dp};

#[test]
fn certificates_agree_across_engines() {
    for n in 3..=10usize {
        let faults = [FaultSpec::none(), FaultSpec::outer(1 % n)];
        for fault in faults {
            let g = petersen2(n, fault).unwrap();
            let dp = solve_dp(n, fault).unwrap();
            let bnb = solve_bnb(&g).unwrap();
            assert_eq!(dp.gamma, bnb.gamma, "n={n}");
            assert_eq!(
                dp.certificate, bnb.certificate,
                "n={n} fault={:?}: engines disagree on the lex-min certificate",
                fault.faulted
            );
            let e = enumerate_minimum_sets(&g, Some(1)).unwrap();
            assert_eq!(
                e.sets[0], dp.certificate,
                "n={n}: enumerator first set differs"
            );
        }
    }
}

#[test]
fn repeated_solves_are_identical() {
    let a = solve_dp(17, FaultSpec::outer(3)).unwrap();
    let b = solve_dp(17, FaultSpec::outer(3)).unwrap();
    assert_eq!(a.certificate, b.certificate);
    assert_eq!(a.gamma, b.gamma);
}

#[test]
fn certificates_dominate_up_to_moderate_n() {
    for n in (12..=60).step_by(7) {
        let r = solve_dp(n, FaultSpec::outer(0)).unwrap();
        let g = petersen2(n, FaultSpec::outer(0)).unwrap();
        assert!(is_dominating(&g, &r.certificate).unwrap());
        assert_eq!(r.certificate.size(), r.gamma);
    }
}
