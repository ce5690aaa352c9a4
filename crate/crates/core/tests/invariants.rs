mod common;

use common::{rf, FACTORS};
use pcval::field::{FieldElem, Poly, RationalFunction};
use pcval::newton::root_valuations;
use pcval::num::{int, rat};
use pcval::oracle::{profile_scan, ScanValue};
use pcval::pcv::{fixtures, GaugeSpec, LimitData, PCSeq};
use pcval::topology::{enumerate_increasing, omega_membership, omega_witness_function, w_linear};
use pcval::valuations::{member, monomial_val, v_e, value_profile, w_e, GroupValue, Ring, WValue};
use pcval::{Rational, Val};
use proptest::prelude::*;

const CENTERS: [&str; 6] = ["0", "t", "1", "t^(1/2)", "t^(1/3) - t", "1 + t^(3/2)"];

fn factor() -> impl Strategy<Value = RationalFunction> {
    (0..FACTORS.len()).prop_map(|i| rf(FACTORS[i]))
}

fn t_power() -> impl Strategy<Value = FieldElem> {
    (-6i64..=6, 1i64..=3, 1i64..=3).prop_map(|(n, d, c)| FieldElem::t_pow(rat(n, d)).mul(&FieldElem::from_int(c)))
}

/// `c · f₁^{±1} · f₂^{±1}` with factors of degree at most 2.
fn function() -> impl Strategy<Value = RationalFunction> {
    (t_power(), factor(), any::<bool>(), factor(), 0u8..3).prop_map(|(c, f, inv_f, g, mode)| {
        let f = if inv_f { f.inv().unwrap() } else { f };
        let base = match mode {
            0 => f,
            1 => f.mul(&g),
            _ => f.div(&g).unwrap(),
        };
        base.mul(&RationalFunction::constant(c))
    })
}

fn center() -> impl Strategy<Value = FieldElem> {
    (0..CENTERS.len()).prop_map(|i| CENTERS[i].parse().unwrap())
}

/// `sₙ = c + t^{δ − k/2ⁿ}` for a handful of rational breadths.
fn single_term() -> impl Strategy<Value = PCSeq> {
    (center(), prop::sample::select(vec![rat(1, 2), int(1), rat(4, 3), int(2)]), 1i64..=2).prop_map(|(c, d, k)| {
        PCSeq::single_term(c, GaugeSpec::dyadic(d, rat(k, 2)).unwrap()).unwrap()
    })
}

fn sequence() -> impl Strategy<Value = PCSeq> {
    prop_oneof![
        3 => single_term(),
        2 => (0..5usize).prop_map(|i| fixtures()[i].clone()),
    ]
}


proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn v_e_is_a_valuation(e in sequence(), f in function(), g in function()) {
        let (vf, vg) = (v_e(&f, &e).unwrap(), v_e(&g, &e).unwrap());
        prop_assert_eq!(v_e(&f.mul(&g), &e).unwrap(), &vf + &vg);
        let sum = f.add(&g);
        prop_assume!(!sum.is_zero());
        let vs = v_e(&sum, &e).unwrap();
        prop_assert!(vs >= vf || vs >= vg, "v(f + g) = {} below {} and {}", vs, vf, vg);
    }

    #[test]
    fn w_e_is_the_monomial_valuation(e in single_term(), f in function()) {
        let beta = e.pseudo_limit().unwrap().clone();
        let m = monomial_val(&f, &beta, &e.breadth()).unwrap();
        prop_assert_eq!(w_e(&f, &e).unwrap(), WValue::Value(m.value));
    }

    #[test]
    fn profile_law_holds_past_certification(e in sequence(), f in function()) {
        let p = value_profile(&f, &e).unwrap();
        let rows = profile_scan(&f, &e, p.from_index, p.from_index + 8).unwrap();
        for r in &rows {
            prop_assert_eq!(&r.value, &ScanValue::Finite(p.predict(&r.delta)));
        }
        // Increasing, decreasing or constant according to the sign of λ.
        for w in rows.windows(2) {
            let step = w[1].value.finite().unwrap().cmp(w[0].value.finite().unwrap());
            prop_assert_eq!(step, p.lambda.cmp(&0));
        }
    }

    #[test]
    fn v_ring_inside_w_ring(e in single_term(), f in function()) {
        if member(&f, &e, Ring::V).unwrap() {
            prop_assert!(member(&f, &e, Ring::W).unwrap());
        }
    }

    #[test]
    fn x_is_a_pseudo_limit(e in sequence()) {
        let x = RationalFunction::x();
        let vals: Vec<_> = (0..12)
            .map(|n| v_e(&x.sub(&RationalFunction::constant(e.term(n).unwrap())), &e).unwrap())
            .collect();
        for w in vals.windows(2) {
            prop_assert!(w[1] > w[0], "{} then {}", w[0], w[1]);
        }
    }

    #[test]
    fn w_of_a_linear_factor(e in single_term(), a in center()) {
        let beta = e.pseudo_limit().unwrap();
        let d = e.breadth();
        let dist = (&a - beta).val();
        let want = if d.cmp_val(&dist).is_le() {
            GroupValue::new(Rational::from_integer(0.into()), 1, d.clone())
        } else {
            GroupValue::rational(dist.finite().unwrap().clone(), d.clone())
        };
        prop_assert_eq!(w_linear(&e, &a).unwrap(), Some(want));
    }

    #[test]
    fn v_of_a_linear_factor_below_breadth(e in single_term(), a in center()) {
        // Away from the pseudo-limit ball v_E(X − a) is the constant v(β − a).
        let beta = e.pseudo_limit().unwrap();
        let dist = (&a - beta).val();
        prop_assume!(e.breadth().cmp_val(&dist).is_gt());
        let v = v_e(&RationalFunction::linear(&a), &e).unwrap();
        let c = v_e(&RationalFunction::constant(&a - beta), &e).unwrap();
        prop_assert_eq!(v, c);
    }

    #[test]
    fn display_round_trips(f in function(), c in t_power(), a in center()) {
        prop_assert_eq!(f.to_string().parse::<RationalFunction>().unwrap(), f);
        let x = c.add(&a);
        prop_assert_eq!(x.to_string().parse::<FieldElem>().unwrap(), x);
    }

    #[test]
    fn newton_polygon_reads_root_valuations(exps in prop::collection::vec((0i64..8, 1i64..4, 1i64..4), 1..5)) {
        let roots: Vec<FieldElem> =
            exps.iter().map(|(n, d, c)| FieldElem::t_pow(rat(*n, *d)).mul(&FieldElem::from_int(*c))).collect();
        let mut want: Vec<Val> = roots.iter().map(|r| r.val()).collect();
        want.sort();
        let mut got = Vec::new();
        for (v, m) in root_valuations(&Poly::from_roots(&roots)).unwrap() {
            got.extend(std::iter::repeat_n(v, m));
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn omega_is_a_basic_open(e in sequence(), s in center(), g in (-4i64..=8, 1i64..=4)) {
        let gamma = rat(g.0, g.1);
        let omega = omega_membership(&e, &s, &gamma).unwrap();
        prop_assert_eq!(omega, member(&omega_witness_function(&s, &gamma), &e, Ring::V).unwrap());
    }

    #[test]
    fn enumerated_candidates_hit_the_target(f in function(), target in (-4i64..=8, 1i64..=3)) {
        let target = rat(target.0, target.1);
        let centers: Vec<FieldElem> = CENTERS.iter().map(|c| c.parse().unwrap()).collect();
        for cand in enumerate_increasing(&f, &target, &centers).unwrap() {
            let seq = cand.sequence().unwrap();
            prop_assert_eq!(w_e(&f, &seq).unwrap(), WValue::Value(GroupValue::rational(target.clone(), seq.breadth())));
        }
    }
}

#[test]
fn fixtures_have_the_expected_limit_data() {
    let kinds: Vec<&str> = fixtures()
        .iter()
        .map(|e| match e.limit() {
            LimitData::InK(_) => "in K",
            LimitData::Algebraic { .. } => "algebraic",
            LimitData::Transcendental => "transcendental",
        })
        .collect();
    assert_eq!(kinds, ["in K", "in K", "in K", "algebraic", "transcendental"]);
}
