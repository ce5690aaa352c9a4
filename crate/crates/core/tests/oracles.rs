mod common;

use common::{pool, rf, single_term};
use pcval::field::Backend;
use pcval::num::{int, rat};
use pcval::oracle::{equivalent_definitional, member_definitional, profile_scan, ScanValue};
use pcval::pcv::{fixture, fixtures, squared_e1};
use pcval::topology::intr_consistency;
use pcval::valuations::{member, value_profile, Ring};
use pcval::Error;

#[test]
fn v_membership_matches_the_definition() {
    for e in fixtures() {
        for phi in pool() {
            let sym = member(&phi, &e, Ring::V).unwrap();
            let def = member_definitional(&phi, &e, 32).unwrap();
            assert_eq!(sym, def.value, "{phi} on {}", e.label());
        }
    }
}

#[test]
fn w_membership_matches_the_definition_on_finite_breadth() {
    // W_E is the V-ring of the limit monomial valuation, so a sequence with the
    // same center and breadth but a different approach sees the same W-verdicts.
    let e1 = fixture("E1").unwrap();
    let slower = single_term("0", int(1), rat(1, 4));
    for phi in pool() {
        assert_eq!(member(&phi, &e1, Ring::W).unwrap(), member(&phi, &slower, Ring::W).unwrap(), "{phi}");
    }
}

#[test]
fn equivalence_matches_the_definition() {
    let one = int(1);
    let pairs = [
        (fixture("E1").unwrap(), single_term("t^3", one.clone(), one.clone())),
        (fixture("E1").unwrap(), single_term("t^(1/3)", one.clone(), one.clone())),
        (fixture("E1").unwrap(), squared_e1()),
        (fixture("E2").unwrap(), fixture("E2").unwrap()),
        (fixture("E3").unwrap(), fixture("E4").unwrap()),
        (fixture("E5").unwrap(), fixture("E5").unwrap()),
    ];
    for (a, b) in &pairs {
        let sym = a.equivalent(b).unwrap();
        let def = equivalent_definitional(a, b, 8, 40).unwrap();
        assert_eq!(sym.equivalent, def.value, "{} vs {}: {}", a.label(), b.label(), sym.certificate);
    }
}

#[test]
fn profile_agrees_on_the_prime_backend() {
    for p in [2, 3, 5] {
        // The binomial coefficients of E4 have 2 in their denominators.
        for e in fixtures().into_iter().filter(|e| p != 2 || e.label() != "E4") {
            let e = e.with_backend(Backend::Prime(p));
            for phi in ["X/t", "t/X", "X - t", "(X - 1)/t", "X^2 - t", "1/(X - t^(1/2))"] {
                let phi = rf(phi);
                let prof = value_profile(&phi, &e).unwrap();
                for row in profile_scan(&phi, &e, prof.from_index, prof.from_index + 10).unwrap() {
                    assert_eq!(row.value, ScanValue::Finite(prof.predict(&row.delta)), "{phi} on {} mod {p}", e.label());
                }
            }
        }
    }
}

#[test]
fn intr_check_finds_a_counterexample_or_agrees() {
    let sample = fixtures();
    let integral = intr_consistency(&rf("t/(X^2 + 1)"), &sample, Backend::Rational).unwrap();
    assert!(integral.grid_integral);
    let bad = intr_consistency(&rf("X/t"), &sample, Backend::Rational).unwrap();
    assert!(!bad.grid_integral);
    assert!(bad.counterexample.is_some());
    let fp = intr_consistency(&rf("1/X"), &[], Backend::Prime(3)).unwrap();
    assert!(fp.counterexample.is_some());
}

#[test]
fn index_overflow_is_reported() {
    let e = fixture("E1").unwrap().with_max_index(10);
    assert!(matches!(e.term(11), Err(Error::IndexOverflow { index: 11, bound: 10 })));
}
