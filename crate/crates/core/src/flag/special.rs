//! The five special families of flag datums and their simplified
//! equivalence relations.
//!
//! | class | vanishing data |
//! |---|---|
//! | SF1 | `p = q = 0`, `T = 0`, `η = 0` |
//! | SF2 | SF1 and `a₁ = 0` |
//! | SF3 | `p = 0`, `T = 0`, `k = 0`, `q ≠ 0` |
//! | SF4 | `p = q = 0`, `η = 0`, `D = 0` |
//! | SF5 | SF4 and `a₁ = 0` |

use std::fmt;

use crate::algebras::GdBialgebra;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::report::ValidationReport;
use crate::scalar::Scalar;

use super::{FlagEquivalenceWitness, GdFlagDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SfClass {
    Sf1,
    Sf2,
    Sf3,
    Sf4,
    Sf5,
    General,
}

impl fmt::Display for SfClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SfClass::Sf1 => "SF1",
            SfClass::Sf2 => "SF2",
            SfClass::Sf3 => "SF3",
            SfClass::Sf4 => "SF4",
            SfClass::Sf5 => "SF5",
            SfClass::General => "general",
        })
    }
}

/// Every special class `d` belongs to, in the order SF1..SF5.
pub fn sf_memberships(d: &GdFlagDatum) -> Vec<SfClass> {
    let sf1 = d.p().is_zero() && d.q().is_zero() && d.t().is_zero() && d.eta.is_zero();
    let sf3 = d.p().is_zero() && d.t().is_zero() && d.k().is_zero() && !d.q().is_zero();
    let sf4 = d.p().is_zero() && d.q().is_zero() && d.eta.is_zero() && d.d.is_zero();
    let a1 = d.a1().is_zero();
    [
        (SfClass::Sf1, sf1),
        (SfClass::Sf2, sf1 && a1),
        (SfClass::Sf3, sf3),
        (SfClass::Sf4, sf4),
        (SfClass::Sf5, sf4 && a1),
    ]
    .into_iter()
    .filter_map(|(c, m)| m.then_some(c))
    .collect()
}

/// One tag per datum, preferring the most specific class:
/// SF2, SF1, SF5, SF4, SF3, then general.
pub fn sf_class(d: &GdFlagDatum) -> SfClass {
    let m = sf_memberships(d);
    [SfClass::Sf2, SfClass::Sf1, SfClass::Sf5, SfClass::Sf4, SfClass::Sf3]
        .into_iter()
        .find(|c| m.contains(c))
        .unwrap_or(SfClass::General)
}

/// The simplified relations. `Equiv` relations use `(a₀, β)`; `Approx`
/// relations use only `β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SfRelation {
    Sf1Equiv,
    Sf2Approx,
    Sf3Equiv,
    Sf3Approx,
    Sf4Equiv,
    Sf5Approx,
}

impl SfRelation {
    pub fn class(self) -> SfClass {
        match self {
            SfRelation::Sf1Equiv => SfClass::Sf1,
            SfRelation::Sf2Approx => SfClass::Sf2,
            SfRelation::Sf3Equiv | SfRelation::Sf3Approx => SfClass::Sf3,
            SfRelation::Sf4Equiv => SfClass::Sf4,
            SfRelation::Sf5Approx => SfClass::Sf5,
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            SfRelation::Sf1Equiv => "SF1",
            SfRelation::Sf2Approx => "SF2",
            SfRelation::Sf3Equiv => "SF3",
            SfRelation::Sf3Approx => "SF3a",
            SfRelation::Sf4Equiv => "SF4",
            SfRelation::Sf5Approx => "SF5",
        }
    }
}

/// Checks a simplified relation between `d` and `d′`. Labels are
/// `<class>-MEMBER` (both datums in the class), `<class>-BETA`, and one label
/// per condition named after the datum component it fixes
/// (`-S`, `-T`, `-A0`, `-A1`, `-K`, `-D`, `-Q`, `-ETA`).
pub fn check_sf_relation(
    rel: SfRelation,
    a: &GdBialgebra,
    d: &GdFlagDatum,
    d2: &GdFlagDatum,
    w: &FlagEquivalenceWitness,
) -> Result<ValidationReport> {
    let n = a.dim();
    if d.dim()? != n || d2.dim()? != n || w.a0.len() != n {
        return Err(Error::DimensionMismatch(format!("algebra dim {n}")));
    }
    let pre = rel.prefix();
    let lab = |s: &str| format!("{pre}-{s}");
    let mut r = ValidationReport::new();
    let cls = rel.class();
    for (idx, x) in [d, d2].into_iter().enumerate() {
        if !sf_memberships(x).contains(&cls) {
            r.check_scalar(&lab("MEMBER"), "d", &[idx], Scalar::one());
        }
    }
    let beta = &w.beta;
    if beta.is_zero() {
        r.check_scalar(&lab("BETA"), "", &[], Scalar::one());
    }
    let a0 = &w.a0;
    let o = |x: &Vector, y: &Vector| a.o(x, y);
    let q = |x: &Vector| d.q().dot(x);
    let eta = |x: &Vector| d.eta.dot(x);
    let (s, s2) = (|x: &Vector| d.s().apply(x), |x: &Vector| d2.s().apply(x));
    let (t, t2) = (|x: &Vector| d.t().apply(x), |x: &Vector| d2.t().apply(x));
    let (dd, dd2) = (|x: &Vector| d.d.apply(x), |x: &Vector| d2.d.apply(x));
    let k = d.k();
    let bb = beta * beta;
    let mut per = |label: &str, f: &dyn Fn(&Vector) -> Vector| {
        for i in 0..n {
            r.check(&lab(label), "a", &[i], f(&a.e(i)));
        }
    };
    match rel {
        SfRelation::Sf1Equiv => {
            per("S", &|x| vsum!(s(x), - o(a0, x), - s2(x).scale(beta)));
            per("A0", &|x| o(x, a0));
            per("D", &|x| vsum!(dd(x), - dd2(x).scale(beta), - a.br(a0, x)));
        }
        SfRelation::Sf2Approx => {
            per("S", &|x| vsum!(s(x), - s2(x).scale(beta)));
            per("D", &|x| vsum!(dd(x), - dd2(x).scale(beta)));
        }
        SfRelation::Sf3Equiv => {
            per("S", &|x| vsum!(s(x), - o(a0, x), - s2(x).scale(beta), + a0.scale(&q(x))));
            per("A0", &|x| o(x, a0));
            per("D", &|x| vsum!(dd(x), - dd2(x).scale(beta), - a.br(a0, x), + a0.scale(&eta(x))));
        }
        SfRelation::Sf3Approx => {
            per("S", &|x| vsum!(s(x), - s2(x).scale(beta)));
            per("D", &|x| vsum!(dd(x), - dd2(x).scale(beta)));
        }
        SfRelation::Sf4Equiv => {
            per("S", &|x| vsum!(s(x), - s2(x).scale(beta), - o(a0, x)));
            per("T", &|x| vsum!(t(x), - t2(x).scale(beta), - o(x, a0)));
            per("A0", &|x| a.br(a0, x));
        }
        SfRelation::Sf5Approx => {
            per("S", &|x| vsum!(s(x), - s2(x).scale(beta)));
            per("T", &|x| vsum!(t(x), - t2(x).scale(beta)));
        }
    }
    let (a1, a1p) = (d.a1(), d2.a1());
    match rel {
        SfRelation::Sf1Equiv => {
            let res = vsum!(a1.clone(), - o(a0, a0), - s2(a0).scale(beta), - a1p.scale(&bb), + a0.scale(k));
            r.check(&lab("A1"), "", &[], res);
            r.check_scalar(&lab("K"), "", &[], k - &(beta * d2.k()));
        }
        SfRelation::Sf2Approx => {
            r.check_scalar(&lab("K"), "", &[], k - &(beta * d2.k()));
        }
        SfRelation::Sf3Equiv => {
            r.check(&lab("Q"), "", &[], d.q() - d2.q());
            r.check(&lab("ETA"), "", &[], &d.eta - &d2.eta);
            r.check(&lab("A1"), "", &[], vsum!(a1.clone(), - o(a0, a0), - s2(a0).scale(beta), - a1p.scale(&bb)));
            r.check_scalar(&lab("Q0"), "", &[], q(a0));
        }
        SfRelation::Sf3Approx => {
            r.check(&lab("Q"), "", &[], d.q() - d2.q());
            r.check(&lab("ETA"), "", &[], &d.eta - &d2.eta);
            r.check(&lab("A1"), "", &[], vsum!(a1.clone(), - a1p.scale(&bb)));
        }
        SfRelation::Sf4Equiv => {
            let res = vsum!(
                a1.clone(),
                - o(a0, a0),
                - s2(a0).scale(beta),
                - t2(a0).scale(beta),
                - a1p.scale(&bb),
                + a0.scale(k)
            );
            r.check(&lab("A1"), "", &[], res);
            r.check_scalar(&lab("K"), "", &[], k - &(beta * d2.k()));
        }
        SfRelation::Sf5Approx => {
            r.check(&lab("A1"), "", &[], vsum!(a1.clone(), - a1p.scale(&bb)));
            r.check_scalar(&lab("K"), "", &[], k - &(beta * d2.k()));
        }
    }
    Ok(r)
}
