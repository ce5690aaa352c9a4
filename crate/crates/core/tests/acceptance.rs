//! The ten acceptance criteria, one PASS/FAIL line each.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{pool, rf, single_term, small_pool};
use pcval::field::{Backend, FieldElem, Poly, RationalFunction};
use pcval::num::{int, rat};
use pcval::oracle::{equivalent_definitional, profile_scan, ScanValue};
use pcval::pcv::{fixture, fixtures, squared_e1, BinomialSeries, GaugeSpec, PCSeq, SeqKind};
use pcval::topology::{
    convergence_scan, omega_membership, omega_witness_function, residue_separator, separator, ConvergenceVerdict,
};
use pcval::valuations::{
    member, monomial_val, rank_report, torsion_witness, v_e, value_profile, w_e, Ring, VeValue, WValue,
};
use pcval::Rational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn e(name: &str) -> PCSeq {
    fixture(name).unwrap()
}

fn fe(s: &str) -> FieldElem {
    s.parse().unwrap()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err(e: pcval::Error) -> String {
    e.to_string()
}

fn profile_law() -> Outcome {
    let pool = pool();
    let mut checked = 0;
    for seq in fixtures() {
        for phi in &pool {
            let prof = value_profile(phi, &seq).map_err(|x| format!("{} on {}: {x}", phi, seq.label()))?;
            let n0 = prof.from_index + 1;
            for row in profile_scan(phi, &seq, n0, n0 + 19).map_err(err)? {
                let want = prof.predict(&row.delta);
                ensure!(
                    row.value == ScanValue::Finite(want.clone()),
                    "{} on {} at n = {}: scan {} vs profile {want}",
                    phi,
                    seq.label(),
                    row.n,
                    row.value
                );
                checked += 1;
            }
        }
    }
    Ok(format!("{} functions x 5 fixtures, {checked} rows", pool.len()))
}

fn w_e_is_monomial() -> Outcome {
    let mut checked = 0;
    for name in ["E1", "E2"] {
        let seq = e(name);
        let beta = seq.pseudo_limit().unwrap().clone();
        for phi in pool() {
            let w = w_e(&phi, &seq).map_err(err)?;
            let m = monomial_val(&phi, &beta, &seq.breadth()).map_err(err)?;
            ensure!(w == WValue::Value(m.value.clone()), "{phi} on {name}: w_E = {w}, monomial {}", m.value);
            checked += 1;
        }
    }
    Ok(format!("{checked} functions"))
}

fn scaled(rng: &mut ChaCha8Rng, pool: &[RationalFunction]) -> RationalFunction {
    let phi = &pool[rng.gen_range(0..pool.len())];
    let c = FieldElem::t_pow(rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
    let k = Rational::from_integer(rng.gen_range(1..=3).into());
    phi.mul(&RationalFunction::constant(c.mul(&FieldElem::from_rational(k))))
}

fn valuation_axioms() -> Outcome {
    let seq = e("E1");
    let pool = pool();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut pairs = 0;
    while pairs < 200 {
        let f = scaled(&mut rng, &pool);
        let g = scaled(&mut rng, &pool);
        let sum = f.add(&g);
        if sum.is_zero() {
            continue;
        }
        let (vf, vg) = (v_e(&f, &seq).map_err(err)?, v_e(&g, &seq).map_err(err)?);
        let prod = v_e(&f.mul(&g), &seq).map_err(err)?;
        ensure!(prod == &vf + &vg, "v({f} * {g}) = {prod}, expected {vf} + {vg}");
        let vs = v_e(&sum, &seq).map_err(err)?;
        let min = if vf <= vg { &vf } else { &vg };
        ensure!(vs >= *min, "v({f} + {g}) = {vs} below min({vf}, {vg})");
        pairs += 1;
    }
    Ok(format!("{pairs} pairs"))
}

fn rank_dichotomy() -> Outcome {
    let e1 = e("E1");
    let wit = torsion_witness(&e1).ok_or("no torsion witness for E1")?;
    ensure!(member(&wit, &e1, Ring::W).map_err(err)?, "{wit} not in W_E1");
    ensure!(!member(&wit, &e1, Ring::V).map_err(err)?, "{wit} in V_E1");

    let e2 = e("E2");
    for phi in pool() {
        let (v, w) = (member(&phi, &e2, Ring::V).map_err(err)?, member(&phi, &e2, Ring::W).map_err(err)?);
        ensure!(v == w, "{phi} on E2: V {v}, W {w}");
    }
    let r2 = rank_report(&e2);
    ensure!(r2.rank == 1, "E2 reported rank {}", r2.rank);

    let expected = [
        ("E3", Poly::linear(&fe("t/(1 - t)"))),
        ("E4", rf("X^2 - (1 + t)").num().clone()),
    ];
    for (name, q) in expected {
        let r = rank_report(&e(name));
        ensure!(r.rank == 2, "{name} reported rank {}", r.rank);
        ensure!(r.minimal_polynomial.as_ref() == Some(&q), "{name} minimal polynomial {:?}", r.minimal_polynomial);
        let want = format!("K[X] localized at ({q})");
        ensure!(r.overring.as_deref() == Some(want.as_str()), "{name} overring {:?}", r.overring);
    }
    Ok(format!("witness {wit}"))
}

fn linear_cauchy(limit: &str, slope: i64) -> PCSeq {
    PCSeq::new(SeqKind::CauchyToK { limit: fe(limit), gauge: GaugeSpec::linear(int(slope), int(1)).unwrap() }).unwrap()
}

fn partial_sum(base: &str) -> PCSeq {
    PCSeq::new(SeqKind::PartialSum {
        base: fe(base),
        coefficient: int(1),
        exponents: GaugeSpec::dyadic(int(1), int(1)).unwrap(),
    })
    .unwrap()
}

fn quad_shift(center: &str) -> PCSeq {
    let SeqKind::SingleTerm { gauge, .. } = e("E2").kind().clone() else { unreachable!() };
    PCSeq::single_term(fe(center), gauge).unwrap()
}

fn equivalence() -> Outcome {
    let one = int(1);
    let pairs: Vec<(PCSeq, PCSeq, bool)> = vec![
        (e("E1"), squared_e1(), false),
        (squared_e1(), e("E1"), false),
        (e("E1"), single_term("t", one.clone(), one.clone()), true),
        (e("E1"), single_term("t^2", one.clone(), one.clone()), true),
        (e("E1"), single_term("2*t^(3/2)", one.clone(), one.clone()), true),
        (e("E1"), single_term("0", one.clone(), rat(1, 2)), true),
        (e("E1"), single_term("t^(1/2)", one.clone(), one.clone()), false),
        (e("E1"), single_term("1", one.clone(), one.clone()), false),
        (e("E1"), e("E2"), false),
        (e("E1"), e("E3"), false),
        (e("E2"), quad_shift("t^2"), true),
        (e("E2"), quad_shift("t^(3/2)"), true),
        (e("E2"), quad_shift("t"), false),
        (e("E3"), linear_cauchy("t/(1 - t)", 2), true),
        (e("E3"), linear_cauchy("t", 1), false),
        (e("E3"), e("E4"), false),
        (
            e("E4"),
            PCSeq::new(SeqKind::CauchySeries { series: BinomialSeries::new(rat(1, 2), int(1), int(1)).unwrap() }).unwrap(),
            true,
        ),
        (
            e("E4"),
            PCSeq::new(SeqKind::CauchySeries { series: BinomialSeries::new(rat(1, 3), int(1), int(1)).unwrap() }).unwrap(),
            false,
        ),
        (e("E5"), e("E5"), true),
        (e("E5"), partial_sum("t^2"), true),
        (e("E5"), partial_sum("t^(1/2)"), false),
        (e("E5"), e("E1"), false),
    ];
    let pool = pool();
    for (a, b, want) in &pairs {
        let sym = a.equivalent(b).map_err(err)?;
        let def = equivalent_definitional(a, b, 8, 40).map_err(err)?;
        let tag = format!("{} vs {}", a.label(), b.label());
        ensure!(sym.equivalent == *want, "{tag}: symbolic {} ({})", sym.equivalent, sym.certificate);
        ensure!(def.value == *want, "{tag}: definitional {}", def.value);
        if *want {
            for phi in &pool {
                let (va, vb) = (member(phi, a, Ring::V).map_err(err)?, member(phi, b, Ring::V).map_err(err)?);
                ensure!(va == vb, "{tag}: {phi} in V {va} vs {vb}");
            }
        }
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn convergence() -> Outcome {
    let phis = small_pool(30);
    for name in ["E1", "E3"] {
        let report = convergence_scan(&e(name), &phis, 40).map_err(err)?;
        if let Some(bad) = report.items.iter().find(|i| i.verdict != ConvergenceVerdict::Agrees) {
            return Err(format!("{name}: {} {:?}", bad.function, bad.verdict));
        }
    }
    Ok("30 functions, depth 40".into())
}

fn omega_identity() -> Outcome {
    let centers = ["0", "t^(1/4)", "t", "1", "t^(1/2) + t"].map(fe);
    let radii = [rat(-1, 2), rat(1, 4), rat(1, 2), int(1), rat(3, 2)];
    let mut checked = 0;
    for seq in fixtures() {
        for s in &centers {
            for g in &radii {
                let omega = omega_membership(&seq, s, g).map_err(err)?;
                let b = member(&omega_witness_function(s, g), &seq, Ring::V).map_err(err)?;
                ensure!(omega == b, "{} at ({s}, {g}): Omega {omega}, B {b}", seq.label());
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} cells"))
}

fn x_pseudo_limit() -> Outcome {
    let x = RationalFunction::x();
    for seq in fixtures() {
        let mut prev: Option<VeValue> = None;
        for n in 0..=21 {
            let s = seq.term(n).map_err(err)?;
            let v = v_e(&x.sub(&RationalFunction::constant(s)), &seq).map_err(err)?;
            if let Some(p) = &prev {
                ensure!(v > *p, "{} at n = {}: {v} not above {p}", seq.label(), n - 1);
            }
            prev = Some(v);
        }
    }
    Ok("n = 0..20 on E1..E5".into())
}

fn residue() -> Outcome {
    let mut probes = 0;
    for p in [2u64, 3] {
        for s in ["0", "1", "t^(1/2)"] {
            for d in [int(1), rat(1, 2), int(2)] {
                let r = residue_separator(&fe(s), &d, Backend::Prime(p)).map_err(err)?;
                let delta = pcval::Val::Finite(d.clone());
                ensure!(r.probes.iter().any(|q| q.distance < delta), "p = {p}: no probe below");
                ensure!(r.probes.iter().any(|q| q.distance > delta), "p = {p}: no probe above");
                let classes: Vec<u64> = r.probes.iter().filter_map(|q| q.class).collect();
                ensure!((0..p).all(|c| classes.contains(&c)), "p = {p}: classes {classes:?}");
                for q in &r.probes {
                    ensure!(q.member == q.expected, "p = {p}, s = {s}, delta = {d}: probe {} member {}", q.x, q.member);
                    probes += 1;
                }
            }
        }
    }
    Ok(format!("{probes} probes"))
}

fn separation() -> Outcome {
    let one = int(1);
    let scenarios: Vec<(PCSeq, Vec<&str>, Vec<PCSeq>)> = vec![
        (e("E1"), vec!["t/X"], vec![single_term("t^3", int(4), one.clone())]),
        (e("E5"), vec!["1/X"], vec![e("E1")]),
        (e("E1"), vec!["t/X"], vec![e("E2")]),
        (e("E2"), vec!["X/t"], vec![single_term("0", rat(1, 2), one.clone())]),
        (e("E3"), vec!["(X - t)/t^2"], vec![e("E1")]),
        (e("E3"), vec!["(X - t)/t^2"], vec![e("E2")]),
        (e("E4"), vec!["(X - 1)/t"], vec![e("E1")]),
        (e("E4"), vec!["(X^2 - (1 + t))/t^3"], vec![e("E3")]),
        (e("E1"), vec!["X/(X - t)"], vec![single_term("t", int(2), one.clone())]),
        (e("E1"), vec!["X^2/t^(3/2)"], vec![single_term("0", rat(3, 4), one.clone())]),
        (e("E2"), vec!["X/t"], vec![e("E1")]),
        (e("E5"), vec!["(X - 1)/t^(1/2)"], vec![e("E1"), e("E2")]),
        (e("E3"), vec!["X/t"], vec![single_term("t^(1/2)", one.clone(), one.clone())]),
        (e("E4"), vec!["(X - 1)/t"], vec![e("E1"), e("E2"), e("E5")]),
    ];
    let mut cases = std::collections::BTreeSet::new();
    for (point, phis, sample) in &scenarios {
        let phis: Vec<RationalFunction> = phis.iter().map(|p| rf(p)).collect();
        let tag = format!("{} with {} sample(s)", point.label(), sample.len());
        let w = separator(point, &phis, sample).map_err(|x| format!("{tag}: {x}"))?;
        ensure!(w.set.contains(point).map_err(err)?, "{tag}: witness misses the point");
        for f in sample {
            ensure!(!w.set.contains(f).map_err(err)?, "{tag}: witness contains {}", f.label());
        }
        cases.insert(format!("{:?}", w.case));
    }
    let cases: Vec<String> = cases.into_iter().collect();
    Ok(format!("{} scenarios, cases {}", scenarios.len(), cases.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("profile law", profile_law),
        ("w_E equals the monomial valuation", w_e_is_monomial),
        ("rank-2 valuation axioms", valuation_axioms),
        ("rank dichotomy", rank_dichotomy),
        ("equivalence", equivalence),
        ("constructible convergence", convergence),
        ("Omega identity", omega_identity),
        ("X is a pseudo-limit", x_pseudo_limit),
        ("finite-residue separator", residue),
        ("separation witnesses", separation),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of 10 passed in {:.2}s", 10 - failed, total.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
