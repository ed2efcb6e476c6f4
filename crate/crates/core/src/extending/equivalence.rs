//! Equivalence of extending datums. A witness `(λ, μ)` with `λ: V → A` and
//! `μ ∈ GL(V)` gives the linear map `φ(a, x) = (a + λx, μx)`; two datums `d`,
//! `d′` are equivalent through it when `φ: A♮_d V → A♮_{d′} V` is an
//! isomorphism, which unwinds to the ten conditions D1–D10 computing `d` from
//! `d′`.
//!
//! Composition: `φ_{w2}(φ_{w1}(a, x)) = (a + λ1x + λ2μ1x, μ2μ1x)`. If `d = apply(d′, w1)`
//! and `d′ = apply(d″, w2)` then `φ_{w2} ∘ φ_{w1}: A♮_d V → A♮_{d″} V`, so
//! `apply(apply(d″, w2), w1) = apply(d″, compose(w1, w2))`.

use crate::algebras::{AlgebraData, GdBialgebra};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Vector};
use crate::report::ValidationReport;
use crate::scalar::Scalar;
use crate::tensor::BilinearMap;

use super::{GdExtendingDatum, LieExtendingDatum, NovikovExtendingDatum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    /// `dim A × dim V`
    pub lambda: LinearMap,
    /// `dim V × dim V`, invertible
    pub mu: LinearMap,
}

impl EquivalenceWitness {
    pub fn new(lambda: LinearMap, mu: LinearMap) -> Result<Self> {
        if mu.rows() != mu.cols() || lambda.cols() != mu.rows() {
            return Err(Error::DimensionMismatch(format!(
                "λ is {}×{}, μ is {}×{}",
                lambda.rows(),
                lambda.cols(),
                mu.rows(),
                mu.cols()
            )));
        }
        if mu.inverse().is_none() {
            return Err(Error::NotInvertible("μ is singular".into()));
        }
        Ok(EquivalenceWitness { lambda, mu })
    }

    pub fn identity(na: usize, nv: usize) -> Self {
        EquivalenceWitness { lambda: LinearMap::zero(na, nv), mu: LinearMap::identity(nv) }
    }

    /// `(−λμ⁻¹, μ⁻¹)`
    pub fn inverse(&self) -> Result<Self> {
        let mi = self.mu.inverse().ok_or_else(|| Error::NotInvertible("μ is singular".into()))?;
        Ok(EquivalenceWitness { lambda: self.lambda.compose(&mi).scale(&Scalar::int(-1)), mu: mi })
    }

    /// The witness of `φ_{w2} ∘ φ_{w1}`, i.e. `(λ1 + λ2μ1, μ2μ1)`.
    pub fn compose(w1: &Self, w2: &Self) -> Self {
        EquivalenceWitness { lambda: w1.lambda.add(&w2.lambda.compose(&w1.mu)), mu: w2.mu.compose(&w1.mu) }
    }

    /// The block matrix of `φ(a, x) = (a + λx, μx)` on `A ⊕ V`.
    pub fn to_map(&self) -> LinearMap {
        let (na, nv) = (self.lambda.rows(), self.mu.rows());
        let mut m = LinearMap::identity(na + nv);
        for j in 0..nv {
            for i in 0..na {
                m.set(i, na + j, self.lambda.get(i, j).clone());
            }
            for i in 0..nv {
                m.set(na + i, na + j, self.mu.get(i, j).clone());
            }
        }
        m
    }
}

/// Computes `d` from `d′` and `(λ, μ)` by D1–D10.
pub fn apply_equivalence(a: &GdBialgebra, d2: &GdExtendingDatum, w: &EquivalenceWitness) -> Result<GdExtendingDatum> {
    let (na, nv) = d2.dims()?;
    if a.dim() != na || w.lambda.rows() != na || w.lambda.cols() != nv || w.mu.rows() != nv || w.mu.cols() != nv {
        return Err(Error::DimensionMismatch(format!(
            "algebra dim {}, datum dims ({na}, {nv}), λ {}×{}, μ {}×{}",
            a.dim(),
            w.lambda.rows(),
            w.lambda.cols(),
            w.mu.rows(),
            w.mu.cols()
        )));
    }
    let mi = w.mu.inverse().ok_or_else(|| Error::NotInvertible("μ is singular".into()))?;
    let n = &d2.novikov;
    let l = &d2.lie;
    let lam = |x: &Vector| w.lambda.apply(x);
    let mu = |x: &Vector| w.mu.apply(x);
    let minv = |x: &Vector| mi.apply(x);
    // λμ⁻¹
    let lm = |x: &Vector| lam(&minv(x));
    let o = |u: &Vector, v: &Vector| a.o(u, v);
    let br = |u: &Vector, v: &Vector| a.br(u, v);
    let ea = |i: usize| Vector::basis(na, i);
    let ev = |i: usize| Vector::basis(nv, i);

    let r_a = BilinearMap::from_fn(na, nv, nv, |j, i| minv(&n.r_a.eval(&ea(j), &mu(&ev(i)))));
    let l_a = BilinearMap::from_fn(na, nv, nv, |j, i| minv(&n.l_a.eval(&ea(j), &mu(&ev(i)))));
    let l_v = BilinearMap::from_fn(nv, na, na, |i, j| {
        let (x, a) = (ev(i), ea(j));
        vsum!(o(&lam(&x), &a), + n.l_v.eval(&mu(&x), &a), - lm(&n.r_a.eval(&a, &mu(&x))))
    });
    let r_v = BilinearMap::from_fn(nv, na, na, |i, j| {
        let (x, a) = (ev(i), ea(j));
        vsum!(o(&a, &lam(&x)), + n.r_v.eval(&mu(&x), &a), - lm(&n.l_a.eval(&a, &mu(&x))))
    });
    // the V-valued part shared by D5 and D6
    let star_raw = |x: &Vector, y: &Vector| {
        vsum!(n.star.eval(&mu(x), &mu(y)), + n.l_a.eval(&lam(x), &mu(y)), + n.r_a.eval(&lam(y), &mu(x)))
    };
    let star = BilinearMap::from_fn(nv, nv, nv, |i, k| minv(&star_raw(&ev(i), &ev(k))));
    let f = BilinearMap::from_fn(nv, nv, na, |i, k| {
        let (x, y) = (ev(i), ev(k));
        vsum!(
            o(&lam(&x), &lam(&y)),
            + n.l_v.eval(&mu(&x), &lam(&y)),
            + n.r_v.eval(&mu(&y), &lam(&x)),
            + n.f.eval(&mu(&x), &mu(&y)),
            - lm(&star_raw(&x, &y))
        )
    });
    let triangle_left = BilinearMap::from_fn(nv, na, nv, |i, j| minv(&l.triangle_left.eval(&mu(&ev(i)), &ea(j))));
    let triangle_right = BilinearMap::from_fn(nv, na, na, |i, j| {
        let (x, a) = (ev(i), ea(j));
        vsum!(
            br(&lam(&x), &a),
            + l.triangle_right.eval(&mu(&x), &a),
            - lm(&l.triangle_left.eval(&mu(&x), &a))
        )
    });
    let curly_raw = |x: &Vector, y: &Vector| {
        vsum!(
            l.curly.eval(&mu(x), &mu(y)),
            + l.triangle_left.eval(&mu(x), &lam(y)),
            - l.triangle_left.eval(&mu(y), &lam(x))
        )
    };
    let curly = BilinearMap::from_fn(nv, nv, nv, |i, k| minv(&curly_raw(&ev(i), &ev(k))));
    let h = BilinearMap::from_fn(nv, nv, na, |i, k| {
        let (x, y) = (ev(i), ev(k));
        vsum!(
            br(&lam(&x), &lam(&y)),
            + l.triangle_right.eval(&mu(&x), &lam(&y)),
            - l.triangle_right.eval(&mu(&y), &lam(&x)),
            + l.h.eval(&mu(&x), &mu(&y)),
            - lm(&curly_raw(&x, &y))
        )
    });
    Ok(GdExtendingDatum {
        novikov: NovikovExtendingDatum { l_a, r_a, l_v, r_v, f, star },
        lie: LieExtendingDatum { triangle_left, triangle_right, h, curly },
    })
}

/// Labels of the ten equivalence conditions, in the order of
/// [`GdExtendingDatum::tensors`].
const D_LABELS: [(&str, &str); 10] = [
    ("D2", "ax"),
    ("D1", "ax"),
    ("D3", "xa"),
    ("D4", "xa"),
    ("D6", "xy"),
    ("D5", "xy"),
    ("D7", "xa"),
    ("D8", "xa"),
    ("D9", "xy"),
    ("D10", "xy"),
];

/// Checks that `d` is obtained from `d′` through `w` (D1–D10).
pub fn check_datum_equivalence(
    a: &GdBialgebra,
    d: &GdExtendingDatum,
    d2: &GdExtendingDatum,
    w: &EquivalenceWitness,
) -> Result<ValidationReport> {
    let dims = d.dims()?;
    if dims != d2.dims()? {
        return Err(Error::DimensionMismatch(format!("datum dims {dims:?} vs {:?}", d2.dims()?)));
    }
    let t = apply_equivalence(a, d2, w)?;
    let mut r = ValidationReport::new();
    for (((_, m), (_, m2)), (label, slots)) in d.tensors().iter().zip(t.tensors().iter()).zip(D_LABELS) {
        let (d1, dd2, _) = m.dims();
        for i in 0..d1 {
            for j in 0..dd2 {
                r.check(label, slots, &[i, j], &m.eval_basis(i, j) - &m2.eval_basis(i, j));
            }
        }
    }
    Ok(r)
}

/// Checks that the linear map `phi` is an algebra morphism `E → E′` on basis
/// pairs (`ISO-PROD`, `ISO-BRACKET`) and is invertible (`ISO-BIJ`).
pub fn check_isomorphism(e: &AlgebraData, e2: &AlgebraData, phi: &LinearMap) -> Result<ValidationReport> {
    let n = e.dim();
    if e2.dim() != n || phi.rows() != n || phi.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "dims {n} and {}, map {}×{}",
            e2.dim(),
            phi.rows(),
            phi.cols()
        )));
    }
    let mut r = ValidationReport::new();
    if phi.inverse().is_none() {
        r.check_scalar("ISO-BIJ", "", &[], Scalar::one());
    }
    for i in 0..n {
        for j in 0..n {
            let (u, v) = (phi.column(i), phi.column(j));
            let lhs = phi.apply(&e.product.eval_basis(i, j));
            r.check("ISO-PROD", "uv", &[i, j], &lhs - &e2.product.eval(&u, &v));
            let lhs = phi.apply(&e.bracket.eval_basis(i, j));
            r.check("ISO-BRACKET", "uv", &[i, j], &lhs - &e2.bracket.eval(&u, &v));
        }
    }
    Ok(r)
}
