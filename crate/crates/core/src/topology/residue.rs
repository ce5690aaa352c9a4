//! A function that is integral exactly off a closed ball, over a finite residue field.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Backend, Coeff, FieldElem, Poly, RationalFunction};
use crate::num::{rat, Rational, Val};

/// One probe `x` with `v(x − s)` and whether `ψ(x) ∈ V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueProbe {
    pub x: FieldElem,
    pub distance: Val,
    /// Residue class of the leading coefficient at radius δ, if the probe sits there.
    pub class: Option<u64>,
    pub member: bool,
    pub expected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueSeparator {
    pub psi: RationalFunction,
    pub z: FieldElem,
    pub representatives: Vec<u64>,
    pub probes: Vec<ResidueProbe>,
}

/// `ψ = z^p / ∏_{u ∈ F_p} ((X − s) − z·u)` with `z = t^δ`: `ψ(x) ∈ V` iff `v(x − s) < δ`.
pub fn residue_separator(s: &FieldElem, delta: &Rational, backend: Backend) -> Result<ResidueSeparator> {
    let Backend::Prime(p) = backend else {
        return Err(Error::BackendNotFinite(format!("{backend}: the residue field Q is infinite")));
    };
    let s = s.to_backend(backend)?;
    let one = |e: Rational| FieldElem::monomial(Coeff::Fp { v: 1, p }, e);
    let z = one(delta.clone());
    let x_minus_s = Poly::linear(&s);
    let mut den = Poly::one().to_backend(backend)?;
    for u in 0..p {
        let zu = z.mul(&FieldElem::from_coeff(Coeff::Fp { v: u, p }));
        den = den.mul(&x_minus_s.sub(&Poly::constant(zu)));
    }
    let psi = RationalFunction::new(Poly::constant(z.pow(p as i64)?), den)?;

    let mut probes = Vec::new();
    let mut push = |x: FieldElem, class: Option<u64>| -> Result<()> {
        let distance = (&x - &s).val();
        let member = psi.eval(&x).map(|y| y.val() >= Val::Finite(rat(0, 1))).unwrap_or(false);
        let expected = distance < Val::Finite(delta.clone());
        probes.push(ResidueProbe { x, distance, class, member, expected });
        Ok(())
    };
    for off in [rat(-10, 1), rat(-1, 1), rat(-1, 2)] {
        push(&s + &one(delta + off), None)?;
    }
    let half_above = one(delta + rat(1, 2));
    for c in 0..p {
        let lead = FieldElem::monomial(Coeff::Fp { v: c, p }, delta.clone());
        push(&(&s + &lead) + &half_above, Some(c))?;
    }
    for off in [rat(1, 1), rat(2, 1)] {
        push(&s + &one(delta + off), None)?;
    }
    if let Some(bad) = probes.iter().find(|pr| pr.member != pr.expected) {
        return Err(Error::Verification(format!(
            "psi({}) membership {} but v(x - s) = {}",
            bad.x, bad.member, bad.distance
        )));
    }
    Ok(ResidueSeparator { psi, z, representatives: (0..p).collect(), probes })
}
