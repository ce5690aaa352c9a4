use std::fmt::Write as _;

use pcval::field::{Backend, FieldElem, RationalFunction};
use pcval::num::parse_rational;
use pcval::oracle::{equivalent_definitional, member_definitional, profile_scan};
use pcval::pcv::{fixture, fixture_names, squared_e1, PCSeq, SeqSpecFile};
use pcval::topology::{
    convergence_scan, enumerate_increasing, intr_consistency, omega_membership, omega_witness_function,
    residue_separator, separator, ConvergenceVerdict,
};
use pcval::valuations::{self, annulus_law_to, degdom, member, monomial_val, rank_report, value_profile, Ring};
use pcval::{Breadth, Error};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::SessionConfig;
use crate::Command;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Computed,
    /// Uncertified, or undecided at the configured depth.
    Undecided,
}

pub struct Report {
    pub text: String,
    pub json: Value,
    pub status: Status,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json, status: Status::Computed }
    }
}

type Result<T> = std::result::Result<T, Error>;

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn function(s: &str, cfg: &SessionConfig) -> Result<RationalFunction> {
    let f: RationalFunction = s.parse()?;
    match cfg.backend {
        Backend::Rational => Ok(f),
        b => f.to_backend(b),
    }
}

fn element(s: &str, cfg: &SessionConfig) -> Result<FieldElem> {
    let x: FieldElem = s.parse()?;
    match cfg.backend {
        Backend::Rational => Ok(x),
        b => x.to_backend(b),
    }
}

/// A fixture name or `@path` to a JSON sequence spec.
pub fn sequence(spec: &str, cfg: &SessionConfig) -> Result<PCSeq> {
    let seq = match spec.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Precondition {
                clause: "seq",
                detail: format!("cannot read {path}: {e}"),
            })?;
            let file: SeqSpecFile =
                serde_json::from_str(&text).map_err(|e| Error::Parse { pos: e.column(), msg: format!("{path}: {e}") })?;
            file.to_seq()?
        }
        None => fixture(spec)?,
    };
    let seq = seq.with_max_index(cfg.max_index);
    Ok(match cfg.backend {
        Backend::Rational => seq,
        b => seq.with_backend(b),
    })
}

fn in_or_not(b: bool) -> &'static str {
    if b {
        "in"
    } else {
        "NOT in"
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(cmd: &Command, cfg: &SessionConfig) -> Result<Report> {
    match cmd {
        Command::Val { expr } => {
            let x = element(expr, cfg)?;
            let v = x.val();
            Ok(Report::new(v.to_string(), json!({ "element": x, "valuation": v })))
        }
        Command::Eval { f, at } => {
            let phi = function(&f.function, cfg)?;
            let x = element(at, cfg)?;
            let y = phi.eval(&x)?;
            let v = y.val();
            Ok(Report::new(format!("{y}\nvaluation: {v}"), json!({ "function": phi, "at": x, "value": y, "valuation": v })))
        }
        Command::Profile { seq, f, rows } => {
            let e = sequence(&seq.seq, cfg)?;
            let phi = function(&f.function, cfg)?;
            let p = value_profile(&phi, &e)?;
            let end = (p.from_index + rows.saturating_sub(1)).min(e.max_index());
            let scan = profile_scan(&phi, &e, p.from_index, end)?;
            let mut text = p.to_string();
            for r in &scan {
                write!(text, "\n  n = {}: delta = {}, v = {}, predicted {}", r.n, r.delta, r.value, p.predict(&r.delta))
                    .unwrap();
            }
            let mut rep = Report::new(text, json!({ "profile": p, "scan": scan }));
            if !p.certified {
                rep.status = Status::Undecided;
            }
            Ok(rep)
        }
        Command::Degdom { seq, f } => {
            let e = sequence(&seq.seq, cfg)?;
            let d = degdom(&function(&f.function, cfg)?, &e)?;
            Ok(Report::new(d.to_string(), json!({ "degdom": d })))
        }
        Command::We { seq, f } => {
            let e = sequence(&seq.seq, cfg)?;
            let phi = function(&f.function, cfg)?;
            let w = valuations::w_e(&phi, &e)?;
            let verdict = if e.is_cauchy() {
                None
            } else {
                Some(member(&phi, &e, Ring::W)?)
            };
            let text = match verdict {
                Some(b) => format!("{w} => {} W_E", in_or_not(b)),
                None => format!("{w} (W_E is not a ring for a Cauchy sequence)"),
            };
            Ok(Report::new(text, json!({ "w": w, "member": verdict })))
        }
        Command::Ve { seq, f } => {
            let e = sequence(&seq.seq, cfg)?;
            let phi = function(&f.function, cfg)?;
            let v = valuations::v_e(&phi, &e)?;
            let b = v.is_nonnegative();
            Ok(Report::new(format!("{v} => {} V_E", in_or_not(b)), json!({ "v": v, "member": b })))
        }
        Command::Member { seq, f, ring, check } => {
            let e = sequence(&seq.seq, cfg)?;
            let phi = function(&f.function, cfg)?;
            let ring: Ring = ring.parse()?;
            let b = member(&phi, &e, ring)?;
            let mut text = format!("{phi} {} {ring}_E({})", in_or_not(b), e.label());
            let mut doc = json!({ "function": phi, "ring": ring.to_string(), "member": b });
            if *check {
                if ring != Ring::V {
                    return Err(Error::Precondition { clause: "member --check", detail: "the oracle decides V_E only".into() });
                }
                let def = member_definitional(&phi, &e, cfg.depth)?;
                if def.value != b {
                    return Err(Error::Verification(format!("symbolic {b}, definitional {} to depth {}", def.value, cfg.depth)));
                }
                write!(text, "\noracle: agrees to depth {}", cfg.depth).unwrap();
                doc["oracle"] = to_json(&def);
            }
            Ok(Report::new(text, doc))
        }
        Command::Rank { seq } => {
            let e = sequence(&seq.seq, cfg)?;
            let r = rank_report(&e);
            Ok(Report::new(r.to_string(), to_json(&r)))
        }
        Command::Equiv { seq, seq2, check } => {
            let e = sequence(&seq.seq, cfg)?;
            let f = sequence(seq2, cfg)?;
            let eq = e.equivalent(&f)?;
            let word = if eq.equivalent { "equivalent" } else { "not equivalent" };
            let mut text = format!("{word} ({})", eq.certificate);
            let mut doc = json!({ "equivalent": eq.equivalent, "certificate": eq.certificate.to_string() });
            if *check {
                let k_max = (cfg.depth / 5).max(1);
                let def = equivalent_definitional(&e, &f, k_max, cfg.depth)?;
                if def.value != eq.equivalent {
                    return Err(Error::Verification(format!(
                        "symbolic {}, definitional {} (k <= {k_max}, depth {})",
                        eq.equivalent, def.value, cfg.depth
                    )));
                }
                write!(text, "\noracle: agrees (k <= {k_max}, depth {})", cfg.depth).unwrap();
                doc["oracle"] = to_json(&def);
            }
            Ok(Report::new(text, doc))
        }
        Command::Monomial { f, alpha, delta } => {
            let phi = function(&f.function, cfg)?;
            let a = element(alpha, cfg)?;
            let d: Breadth = delta.parse()?;
            let m = monomial_val(&phi, &a, &d)?;
            Ok(Report::new(m.value.to_string(), to_json(&m)))
        }
        Command::Annulus { f, center, from, to } => {
            let phi = function(&f.function, cfg)?;
            let s = element(center, cfg)?;
            let lo = parse_rational(from)?;
            let hi: Breadth = to.parse()?;
            let law = annulus_law_to(&phi, &s, &lo, &hi)?;
            let text = format!("v(phi(x)) = {}*m + {} for {lo} < m = v(x - s) < {hi}", law.lambda, law.gamma);
            Ok(Report::new(text, to_json(&law)))
        }
        Command::Omega { seq, center, radius } => {
            let e = sequence(&seq.seq, cfg)?;
            let s = element(center, cfg)?;
            let g = parse_rational(radius)?;
            let inside = omega_membership(&e, &s, &g)?;
            let witness = omega_witness_function(&s, &g);
            let via_b = member(&witness, &e, Ring::V)?;
            if via_b != inside {
                return Err(Error::Verification(format!("Omega says {inside}, B({witness}) says {via_b}")));
            }
            let text = format!("V_E {} Omega({s}, {g})\nOmega({s}, {g}) = B({witness})", in_or_not(inside));
            Ok(Report::new(text, json!({ "member": inside, "witness": witness })))
        }
        Command::Converge { seq, functions } => {
            let e = sequence(&seq.seq, cfg)?;
            let phis: Vec<RationalFunction> = functions.iter().map(|f| function(f, cfg)).collect::<Result<_>>()?;
            let report = convergence_scan(&e, &phis, cfg.depth)?;
            let mut text = format!("depth {}", report.depth);
            for i in &report.items {
                let verdict = match i.verdict {
                    ConvergenceVerdict::Agrees => "agrees",
                    ConvergenceVerdict::Disagrees => "DISAGREES",
                    ConvergenceVerdict::UndecidedAtDepth => "undecided at depth",
                };
                write!(
                    text,
                    "\n{}: W_(s_n) verdict {} from n = {}, V_E verdict {}: {verdict}",
                    i.function,
                    yes_no(i.stable_value),
                    i.stable_from,
                    yes_no(i.expected)
                )
                .unwrap();
            }
            let mut rep = Report::new(text, to_json(&report));
            if report.items.iter().any(|i| i.verdict == ConvergenceVerdict::UndecidedAtDepth) {
                rep.status = Status::Undecided;
            }
            Ok(rep)
        }
        Command::Enumerate { f, target, centers } => {
            let phi = function(&f.function, cfg)?;
            let target = parse_rational(target)?;
            let cs: Vec<FieldElem> = centers.iter().map(|c| element(c, cfg)).collect::<Result<_>>()?;
            let cands = enumerate_increasing(&phi, &target, &cs)?;
            let mut text = format!("{} candidate(s)", cands.len());
            for c in &cands {
                write!(
                    text,
                    "\ncenter {}: delta_F = {} in {} (lambda = {}, gamma = {})",
                    c.center, c.delta_f, c.interval, c.lambda, c.gamma
                )
                .unwrap();
            }
            Ok(Report::new(text, to_json(&cands)))
        }
        Command::Separate { seq, functions, sample } => {
            let e = sequence(&seq.seq, cfg)?;
            let phis: Vec<RationalFunction> = functions.iter().map(|f| function(f, cfg)).collect::<Result<_>>()?;
            let fs: Vec<PCSeq> = sample.iter().map(|s| sequence(s, cfg)).collect::<Result<_>>()?;
            let w = separator(&e, &phis, &fs)?;
            Ok(Report::new(w.to_string().trim_end(), to_json(&w)))
        }
        Command::ResidueSep { center, delta } => {
            let d = parse_rational(delta)?;
            let s: FieldElem = center.parse()?;
            let r = residue_separator(&s, &d, cfg.backend)?;
            let mut text = format!("psi = {}\nz = {}", r.psi, r.z);
            for p in &r.probes {
                let class = p.class.map(|c| format!(", class {c}")).unwrap_or_default();
                write!(
                    text,
                    "\n  x = {}: v(x - s) = {}{class}, psi(x) {} V",
                    p.x,
                    p.distance,
                    in_or_not(p.member)
                )
                .unwrap();
            }
            if let Some(bad) = r.probes.iter().find(|p| p.member != p.expected) {
                return Err(Error::Verification(format!("probe {} breaks the biconditional", bad.x)));
            }
            Ok(Report::new(text, to_json(&r)))
        }
        Command::IntrCheck { f, sample } => {
            let phi: RationalFunction = f.function.parse()?;
            let fs: Vec<PCSeq> = sample.iter().map(|s| sequence(s, cfg)).collect::<Result<_>>()?;
            let r = intr_consistency(&phi, &fs, cfg.backend)?;
            let mut text = format!("integral on the probe grid: {}", yes_no(r.grid_integral));
            for (name, ok) in &r.sample_checks {
                write!(text, "\n  w_{name}(phi) >= 0: {}", yes_no(*ok)).unwrap();
            }
            if let Some(c) = &r.counterexample {
                write!(text, "\ncounterexample: {} with w = {}", c.sequence, c.w).unwrap();
            }
            write!(text, "\nconsistent: {}", yes_no(r.consistent)).unwrap();
            Ok(Report::new(text, to_json(&r)))
        }
        Command::Fixtures => {
            let mut all: Vec<PCSeq> = fixture_names().iter().map(|n| fixture(n)).collect::<Result<_>>()?;
            all.push(squared_e1());
            let mut text = String::new();
            let mut docs = Vec::new();
            for e in &all {
                let e = e.clone().with_max_index(cfg.max_index);
                let ty = e.generator_type();
                if !text.is_empty() {
                    text.push('\n');
                }
                write!(text, "{}: {e}, breadth {}, {ty}", e.label(), e.breadth()).unwrap();
                docs.push(json!({
                    "name": e.label(),
                    "sequence": e.to_string(),
                    "breadth": e.breadth(),
                    "type": ty,
                    "spec": SeqSpecFile::from_seq(&e),
                }));
            }
            Ok(Report::new(text, Value::Array(docs)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences_resolve_by_name() {
        let cfg = SessionConfig::default();
        assert_eq!(sequence("e1", &cfg).unwrap().label(), "E1");
        assert!(sequence("E9", &cfg).is_err());
        assert!(sequence("@/nonexistent.json", &cfg).is_err());
    }
}
