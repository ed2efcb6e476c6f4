//! The algebra `W(1,b)` and the ten flag-datum families over it, with their
//! equivalence-class representatives and closed-form reduction witnesses.
//!
//! `W(1,b)` has basis `L, W` with `L∘L = L`, `W∘L = W`, `L∘W = W∘W = 0` and
//! `[L,W] = −bW`. Families `A1`–`A5` live over `b ≠ 0`, `B1`–`B5` over
//! `b = 0`. Matrices below are written row by row.
//!
//! | family | params | p | q | S | T | a₁ | k | η | D |
//! |---|---|---|---|---|---|---|---|---|---|
//! | A1 | b1 b2 | (1,0) | (1,0) | 0 | [[0,0],[b2,b1]] | (b1², −b1b2) | 0 | 0 | [[0,0],[−b·b2,−b·b1]] |
//! | A2 | b1 b2 | (1/2,0) | (1,0) | 0 | [[0,0],[b1,0]] | (0,b2) | 0 | (b/2,0) | [[0,0],[−b·b1,0]] |
//! | A3 | b2 b3 b4 | (−1,0) | (1,0) | 0 | [[2b3,0],[b2,b3]] | (b3², b2b3) | 0 | (b4,0) | [[−b3b4,0],[b·b2−b2b4,−b·b3]] |
//! | A4 | b1 b2 | 0 | 0 | [[b1,0],[b2,0]] | b1·I | (b1², b1b2) | 0 | 0 | [[0,0],[0,−b·b1]] |
//! | A5 | b1 k | 0 | 0 | 0 | 0 | (0, −k·b1) | k | 0 | [[0,0],[b1,0]] |
//! | B1 | b1 b2 b3 b4 | (−1,0) | (1,0) | 0 | [[2b1,0],[b2,b1]] | (b1², b1b2) | 0 | (b3,b4) | [[−b1b3,−b1b4],[−b2b3,−b2b4]] |
//! | B2 | b1 b2 b3 | 0 | 0 | [[b1,0],[b2,0]] | b1·I | (b1², b1b2) | 0 | 0 | [[0,0],[b3,0]] |
//! | B3 | b1 b2 k | (1,0) | (1,0) | 0 | [[0,0],[b1,b2]] | (b2²−k·b2, k·b1−b1b2) | k | 0 | 0 |
//! | B4 | b1 b2 b3 | (b1,0) | (1,0) | 0 | [[b2−b1b2,0],[b3,b2]] | (−b1b2², b2b3) | b1b2+b2 | 0 | 0 |
//! | B5 | b1 b2 b3 | (1/2,0) | (1,0) | 0 | [[b1/2,0],[b2,b1]] | (−b1²/2, b3) | 3b1/2 | 0 | 0 |
//!
//! A3 is indexed by `(b2, b3, b4)` with the `(L,L)` entry of `T` equal to
//! `2b3`: with an independent first parameter the datum fails FN3 unless the
//! two agree. A5 is a flag datum only when `k·b1 = 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::algebras::{AlgebraData, GdBialgebra};
use crate::error::{Error, Result};
use crate::flag::{FlagEquivalenceWitness, GdFlagDatum, NovikovFlagDatum};
use crate::linalg::{LinearMap, Vector};
use crate::scalar::{q, qr, Scalar};
use crate::tensor::BilinearMap;

/// `W(1,b)` on the basis `L, W`.
pub fn w1b(b: &Scalar) -> GdBialgebra {
    let mut product = BilinearMap::zero(2, 2, 2);
    product.set(0, 0, 0, q(1));
    product.set(1, 0, 1, q(1));
    let mut bracket = BilinearMap::zero(2, 2, 2);
    bracket.set(0, 1, 1, -b);
    bracket.set(1, 0, 1, b.clone());
    let data = AlgebraData::new(vec!["L".into(), "W".into()], product, bracket).expect("square 2-dim tensors");
    GdBialgebra::new(data).expect("W(1,b) is a GD bialgebra for every b")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A1,
    A2,
    A3,
    A4,
    A5,
    B1,
    B2,
    B3,
    B4,
    B5,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::A1,
        Family::A2,
        Family::A3,
        Family::A4,
        Family::A5,
        Family::B1,
        Family::B2,
        Family::B3,
        Family::B4,
        Family::B5,
    ];

    /// Whether the family lives over `b ≠ 0`.
    pub fn is_a(self) -> bool {
        matches!(self, Family::A1 | Family::A2 | Family::A3 | Family::A4 | Family::A5)
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::A1 | Family::A2 | Family::A4 => &["b1", "b2"],
            Family::A3 => &["b2", "b3", "b4"],
            Family::A5 => &["b1", "k"],
            Family::B1 => &["b1", "b2", "b3", "b4"],
            Family::B2 | Family::B4 | Family::B5 => &["b1", "b2", "b3"],
            Family::B3 => &["b1", "b2", "k"],
        }
    }

    fn err(self, reason: impl Into<String>) -> Error {
        Error::InvalidParameters { id: self.to_string(), reason: reason.into() }
    }

    /// The flag datum over `W(1,b)`. A-families need `b ≠ 0`, B-families
    /// `b = 0`.
    pub fn datum(self, b: &Scalar, params: &[Scalar]) -> Result<GdFlagDatum> {
        let names = self.param_names();
        if params.len() != names.len() {
            return Err(self.err(format!("expected {} parameters ({})", names.len(), names.join(", "))));
        }
        if self.is_a() && b.is_zero() {
            return Err(self.err("A-families live over W(1,b) with b ≠ 0"));
        }
        if !self.is_a() && !b.is_zero() {
            return Err(self.err("B-families live over W(1,0)"));
        }
        let v = |x: Scalar, y: Scalar| Vector::new(vec![x, y]);
        let m = |a: Scalar, b: Scalar, c: Scalar, d: Scalar| LinearMap::from_rows(vec![vec![a, b], vec![c, d]]);
        let z = || q(0);
        let zm = || LinearMap::zero(2, 2);
        let e_l = || v(q(1), z());
        let p0 = &params[0];
        let datum = |p, qq, s, t, a1, k, eta, d| GdFlagDatum {
            novikov: NovikovFlagDatum { p, q: qq, s, t, a1, k },
            eta,
            d,
        };
        Ok(match self {
            Family::A1 => {
                let (b1, b2) = (p0, &params[1]);
                datum(
                    e_l(),
                    e_l(),
                    zm(),
                    m(z(), z(), b2.clone(), b1.clone()),
                    v(b1 * b1, -(b1 * b2)),
                    z(),
                    v(z(), z()),
                    m(z(), z(), -(b * b2), -(b * b1)),
                )
            }
            Family::A2 => {
                let (b1, b2) = (p0, &params[1]);
                datum(
                    v(qr(1, 2), z()),
                    e_l(),
                    zm(),
                    m(z(), z(), b1.clone(), z()),
                    v(z(), b2.clone()),
                    z(),
                    v(b * &qr(1, 2), z()),
                    m(z(), z(), -(b * b1), z()),
                )
            }
            Family::A3 => {
                let (b2, b3, b4) = (p0, &params[1], &params[2]);
                datum(
                    v(q(-1), z()),
                    e_l(),
                    zm(),
                    m(b3 * &q(2), z(), b2.clone(), b3.clone()),
                    v(b3 * b3, b2 * b3),
                    z(),
                    v(b4.clone(), z()),
                    m(-(b3 * b4), z(), b * b2 - b2 * b4, -(b * b3)),
                )
            }
            Family::A4 => {
                let (b1, b2) = (p0, &params[1]);
                datum(
                    v(z(), z()),
                    v(z(), z()),
                    m(b1.clone(), z(), b2.clone(), z()),
                    m(b1.clone(), z(), z(), b1.clone()),
                    v(b1 * b1, b1 * b2),
                    z(),
                    v(z(), z()),
                    m(z(), z(), z(), -(b * b1)),
                )
            }
            Family::A5 => {
                let (b1, k) = (p0, &params[1]);
                if !(k * b1).is_zero() {
                    return Err(self.err("needs k·b1 = 0 (otherwise FN9 and GF5 fail)"));
                }
                if b1.is_zero() && k.is_zero() {
                    return Err(self.err("(b1, k) = (0, 0) is excluded"));
                }
                datum(
                    v(z(), z()),
                    v(z(), z()),
                    zm(),
                    zm(),
                    v(z(), -(k * b1)),
                    k.clone(),
                    v(z(), z()),
                    m(z(), z(), b1.clone(), z()),
                )
            }
            Family::B1 => {
                let (b1, b2, b3, b4) = (p0, &params[1], &params[2], &params[3]);
                datum(
                    v(q(-1), z()),
                    e_l(),
                    zm(),
                    m(b1 * &q(2), z(), b2.clone(), b1.clone()),
                    v(b1 * b1, b1 * b2),
                    z(),
                    v(b3.clone(), b4.clone()),
                    m(-(b1 * b3), -(b1 * b4), -(b2 * b3), -(b2 * b4)),
                )
            }
            Family::B2 => {
                let (b1, b2, b3) = (p0, &params[1], &params[2]);
                datum(
                    v(z(), z()),
                    v(z(), z()),
                    m(b1.clone(), z(), b2.clone(), z()),
                    m(b1.clone(), z(), z(), b1.clone()),
                    v(b1 * b1, b1 * b2),
                    z(),
                    v(z(), z()),
                    m(z(), z(), b3.clone(), z()),
                )
            }
            Family::B3 => {
                let (b1, b2, k) = (p0, &params[1], &params[2]);
                datum(
                    e_l(),
                    e_l(),
                    zm(),
                    m(z(), z(), b1.clone(), b2.clone()),
                    v(b2 * b2 - k * b2, k * b1 - b1 * b2),
                    k.clone(),
                    v(z(), z()),
                    zm(),
                )
            }
            Family::B4 => {
                let (b1, b2, b3) = (p0, &params[1], &params[2]);
                datum(
                    v(b1.clone(), z()),
                    e_l(),
                    zm(),
                    m(b2 - &(b1 * b2), z(), b3.clone(), b2.clone()),
                    v(-(b1 * b2 * b2), b2 * b3),
                    b1 * b2 + b2.clone(),
                    v(z(), z()),
                    zm(),
                )
            }
            Family::B5 => {
                let (b1, b2, b3) = (p0, &params[1], &params[2]);
                datum(
                    v(qr(1, 2), z()),
                    e_l(),
                    zm(),
                    m(b1 * &qr(1, 2), z(), b2.clone(), b1.clone()),
                    v(-(b1 * b1 * qr(1, 2)), b3.clone()),
                    b1 * &qr(3, 2),
                    v(z(), z()),
                    zm(),
                )
            }
        })
    }

    /// Parameter tuples over `{−2, −1, 0, 1, 2}` that give valid datums.
    pub fn grid(self) -> Vec<Vec<Scalar>> {
        let vals: Vec<Scalar> = (-2..=2).map(q).collect();
        let mut out = vec![vec![]];
        for _ in self.param_names() {
            out = out
                .into_iter()
                .flat_map(|p: Vec<Scalar>| {
                    vals.iter().map(move |x| {
                        let mut p = p.clone();
                        p.push(x.clone());
                        p
                    })
                })
                .collect();
        }
        let b = if self.is_a() { q(1) } else { q(0) };
        out.retain(|p| self.datum(&b, p).is_ok());
        out
    }

    /// Values of `b` the family is sampled over.
    pub fn b_values(self) -> Vec<Scalar> {
        if self.is_a() {
            vec![q(1), q(2)]
        } else {
            vec![q(0)]
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.into_iter().find(|f| f.to_string() == s).ok_or_else(|| Error::UnknownEntry(s.to_string()))
    }
}

/// A catalog item: either `W(1,b)` or a flag datum together with its base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogItem {
    Algebra(GdBialgebra),
    Flag { family: Family, algebra: GdBialgebra, datum: GdFlagDatum },
}

/// Known ids: `W(1,b)` with parameter `b`, and the families, whose first
/// parameter is `b` followed by [`Family::param_names`].
pub fn get(id: &str, params: &[Scalar]) -> Result<CatalogItem> {
    if id == "W(1,b)" || id == "W" {
        return match params {
            [b] => Ok(CatalogItem::Algebra(w1b(b))),
            _ => Err(Error::InvalidParameters { id: id.into(), reason: "expected one parameter b".into() }),
        };
    }
    let family: Family = id.parse()?;
    let (b, rest) = params.split_first().ok_or_else(|| family.err("missing b"))?;
    let datum = family.datum(b, rest)?;
    Ok(CatalogItem::Flag { family, algebra: w1b(b), datum })
}

pub fn param_names(id: &str) -> Result<Vec<&'static str>> {
    if id == "W(1,b)" || id == "W" {
        return Ok(vec!["b"]);
    }
    let f: Family = id.parse()?;
    Ok(std::iter::once("b").chain(f.param_names().iter().copied()).collect())
}

/// The squarefree integer `d` with `c = d·s²` for some rational `s`.
/// Returns 0 for `c = 0`.
pub fn squarefree_part(c: &Scalar) -> BigInt {
    if c.is_zero() {
        return BigInt::from(0);
    }
    let mut n: BigInt = c.numer() * c.denom();
    let neg = n.is_negative();
    n = n.abs();
    let mut out = BigInt::from(1);
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0u32;
        while (&n % &p).to_u8() == Some(0) {
            n /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out *= n;
    if neg {
        -out
    } else {
        out
    }
}

/// A slot in a representative's parameter pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slot {
    Fixed(Scalar),
    Free,
    /// A squarefree integer (including ±1).
    Squarefree,
    /// Any value except the listed ones.
    Excluding(Vec<Scalar>),
}

/// A family of equivalence-class representatives, e.g. `A3(0, 0, *)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub family: Family,
    pub pattern: Vec<Slot>,
}

impl Representative {
    fn new(family: Family, pattern: Vec<Slot>) -> Self {
        Representative { family, pattern }
    }

    pub fn matches(&self, family: Family, params: &[Scalar]) -> bool {
        family == self.family
            && params.len() == self.pattern.len()
            && self.pattern.iter().zip(params).all(|(s, x)| match s {
                Slot::Fixed(v) => v == x,
                Slot::Free => true,
                Slot::Squarefree => x.is_integer() && !x.is_zero() && squarefree_part(x) == *x.numer(),
                Slot::Excluding(vs) => !vs.contains(x),
            })
    }

    /// Instances with free slots drawn from `{−2, …, 2}` and squarefree slots
    /// from `{−2, −1, 1, 2}`, restricted to valid datums over `b`.
    pub fn samples(&self, b: &Scalar) -> Vec<Vec<Scalar>> {
        let mut out: Vec<Vec<Scalar>> = vec![vec![]];
        for s in &self.pattern {
            let vals: Vec<Scalar> = match s {
                Slot::Fixed(v) => vec![v.clone()],
                Slot::Free => (-2..=2).map(q).collect(),
                Slot::Squarefree => [-2, -1, 1, 2].into_iter().map(q).collect(),
                Slot::Excluding(ex) => (-2..=2).map(q).chain([qr(1, 3), q(3)]).filter(|x| !ex.contains(x)).collect(),
            };
            out = out
                .into_iter()
                .flat_map(|p| {
                    vals.iter().map(move |x| {
                        let mut p = p.clone();
                        p.push(x.clone());
                        p
                    })
                })
                .collect();
        }
        out.retain(|p| self.family.datum(b, p).is_ok());
        out
    }
}

impl fmt::Display for Representative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pattern
            .iter()
            .zip(self.family.param_names())
            .map(|(s, name)| match s {
                Slot::Fixed(v) => v.to_string(),
                Slot::Free => name.to_string(),
                Slot::Squarefree => format!("{name} squarefree"),
                Slot::Excluding(vs) => {
                    format!("{name}∉{{{}}}", vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                }
            })
            .collect();
        write!(f, "{}({})", self.family, parts.join(", "))
    }
}

/// Class representatives over `W(1,b)`. Over ℚ the classes `A2(0, d)` and
/// `B5(0, 0, d)` are indexed by the squarefree class of `d`.
pub fn representatives(b: &Scalar) -> Vec<Representative> {
    use Family::*;
    use Slot::*;
    let f = |x: i64| Fixed(q(x));
    if b.is_zero() {
        vec![
            Representative::new(B1, vec![f(0), f(0), Free, Free]),
            Representative::new(B2, vec![f(0), f(0), f(0)]),
            Representative::new(B2, vec![f(0), f(0), f(1)]),
            Representative::new(B3, vec![f(0), f(0), f(0)]),
            Representative::new(B3, vec![f(0), f(0), f(1)]),
            Representative::new(B4, vec![f(0), f(0), f(0)]),
            Representative::new(B4, vec![f(0), f(0), f(1)]),
            Representative::new(B4, vec![Excluding(vec![q(0), q(1), qr(1, 2), q(-1)]), f(0), f(0)]),
            Representative::new(B5, vec![f(0), f(0), f(0)]),
            Representative::new(B5, vec![f(0), f(0), Squarefree]),
        ]
    } else {
        vec![
            Representative::new(A1, vec![f(0), f(0)]),
            Representative::new(A1, vec![f(1), f(0)]),
            Representative::new(A2, vec![f(0), f(0)]),
            Representative::new(A2, vec![f(0), Squarefree]),
            Representative::new(A3, vec![f(0), f(0), Free]),
            Representative::new(A4, vec![f(0), f(0)]),
            Representative::new(A5, vec![f(1), f(0)]),
            Representative::new(A5, vec![f(0), f(1)]),
        ]
    }
}

/// `d(source) = apply(d(target), witness)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub family: Family,
    pub params: Vec<Scalar>,
    pub witness: FlagEquivalenceWitness,
}

fn wit(c1: Scalar, c2: Scalar, beta: Scalar) -> FlagEquivalenceWitness {
    FlagEquivalenceWitness { a0: Vector::new(vec![c1, c2]), beta }
}

fn red(family: Family, params: Vec<Scalar>, w: FlagEquivalenceWitness) -> Reduction {
    Reduction { family, params, witness: w }
}

/// `(c / d)^{1/2}` where `d` is the squarefree part of `c`.
fn square_class(c: &Scalar) -> (Scalar, Scalar) {
    let d = Scalar::from(num_rational::BigRational::from_integer(squarefree_part(c)));
    let beta = (c / &d).sqrt().expect("c / squarefree(c) is a rational square");
    (d, beta)
}

/// One step of the closed-form reductions, or `None` if `params` already is a
/// representative.
pub fn reduction_step(b: &Scalar, family: Family, params: &[Scalar]) -> Result<Option<Reduction>> {
    family.datum(b, params)?;
    let (z, one) = (q(0), q(1));
    let p = |i: usize| params[i].clone();
    let step = match family {
        Family::A1 => {
            let (b1, b2) = (p(0), p(1));
            if !b1.is_zero() {
                (b1 != one || !b2.is_zero()).then(|| red(family, vec![one, z.clone()], wit(z, -b2, b1)))
            } else {
                (!b2.is_zero()).then(|| red(family, vec![z.clone(), z.clone()], wit(z, -b2, one)))
            }
        }
        Family::A2 => {
            let (b1, b2) = (p(0), p(1));
            if !b1.is_zero() {
                Some(red(family, vec![z.clone(), b2], wit(z, -(&b1 * &q(2)), one)))
            } else if b2.is_zero() {
                None
            } else {
                let (d, beta) = square_class(&b2);
                (d != b2).then(|| red(family, vec![z.clone(), d], wit(z.clone(), z, beta)))
            }
        }
        Family::A3 => {
            let (b2, b3, b4) = (p(0), p(1), p(2));
            (!b2.is_zero() || !b3.is_zero()).then(|| red(family, vec![z.clone(), z, b4], wit(b3, b2, one)))
        }
        Family::A4 => {
            let (b1, b2) = (p(0), p(1));
            if !b2.is_zero() {
                Some(red(Family::A5, vec![one, z], wit(b1, b2.clone(), -(b * &b2))))
            } else {
                (!b1.is_zero()).then(|| red(family, vec![z.clone(), z.clone()], wit(b1, z, one)))
            }
        }
        Family::A5 => {
            let (b1, k) = (p(0), p(1));
            if !b1.is_zero() {
                (b1 != one).then(|| red(family, vec![one, z.clone()], wit(z.clone(), z, b1)))
            } else {
                (k != one).then(|| red(family, vec![z.clone(), one], wit(z.clone(), z, k)))
            }
        }
        Family::B1 => {
            let (b1, b2) = (p(0), p(1));
            (!b1.is_zero() || !b2.is_zero()).then(|| red(family, vec![z.clone(), z, p(2), p(3)], wit(b1, b2, one)))
        }
        Family::B2 => {
            let (b1, b2, b3) = (p(0), p(1), p(2));
            if b3.is_zero() {
                (!b1.is_zero() || !b2.is_zero()).then(|| red(family, vec![z.clone(), z.clone(), z], wit(b1, b2, one)))
            } else {
                (!b1.is_zero() || !b2.is_zero() || b3 != one)
                    .then(|| red(family, vec![z.clone(), z, one], wit(b1, b2, b3)))
            }
        }
        Family::B3 => {
            let (b1, b2, k) = (p(0), p(1), p(2));
            let beta = &k - &(&b2 * &q(2));
            if beta.is_zero() {
                (!b1.is_zero() || !b2.is_zero() || !k.is_zero())
                    .then(|| red(family, vec![z.clone(), z.clone(), z], wit(b2, -b1, one)))
            } else {
                (!b1.is_zero() || !b2.is_zero() || k != one).then(|| red(family, vec![z.clone(), z, one], wit(b2, -b1, beta)))
            }
        }
        Family::B4 => {
            let (b1, b2, b3) = (p(0), p(1), p(2));
            if b1 == one {
                Some(red(Family::B3, vec![b3, b2.clone(), &b2 * &q(2)], FlagEquivalenceWitness::identity(2)))
            } else if b1 == qr(1, 2) {
                Some(red(Family::B5, vec![b2.clone(), b3.clone(), &b2 * &b3], FlagEquivalenceWitness::identity(2)))
            } else if b1 == q(-1) {
                Some(red(Family::B1, vec![b2, b3, z.clone(), z], FlagEquivalenceWitness::identity(2)))
            } else if !b1.is_zero() {
                (!b2.is_zero() || !b3.is_zero())
                    .then(|| red(family, vec![b1.clone(), z.clone(), z], wit(b2, -(&b3 / &b1), one)))
            } else if b3.is_zero() {
                (!b2.is_zero()).then(|| red(family, vec![z.clone(), z.clone(), z], wit(b2, q(0), one)))
            } else {
                (!b2.is_zero() || b3 != one).then(|| red(family, vec![z.clone(), z, one], wit(b2, q(0), b3)))
            }
        }
        Family::B5 => {
            let (b1, b2, b3) = (p(0), p(1), p(2));
            if !b1.is_zero() || !b2.is_zero() {
                Some(red(family, vec![z.clone(), z, &b3 - &(&b1 * &b2)], wit(b1, -(&b2 * &q(2)), one)))
            } else if b3.is_zero() {
                None
            } else {
                let (d, beta) = square_class(&b3);
                (d != b3).then(|| red(family, vec![z.clone(), z.clone(), d], wit(z.clone(), z, beta)))
            }
        }
    };
    Ok(step)
}

/// Follows [`reduction_step`] to a representative, composing witnesses so
/// that `d(source) = apply(d(result), witness)`.
pub fn reduce_to_representative(b: &Scalar, family: Family, params: &[Scalar]) -> Result<Reduction> {
    let mut cur = Reduction { family, params: params.to_vec(), witness: FlagEquivalenceWitness::identity(2) };
    // every chain above has at most four steps
    for _ in 0..8 {
        match reduction_step(b, cur.family, &cur.params)? {
            None => return Ok(cur),
            Some(next) => {
                cur = Reduction {
                    family: next.family,
                    params: next.params,
                    witness: FlagEquivalenceWitness::compose(&cur.witness, &next.witness),
                }
            }
        }
    }
    Err(family.err("reduction did not terminate"))
}
