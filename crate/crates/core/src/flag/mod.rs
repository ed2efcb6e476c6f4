//! Codimension-one extensions. With `V = Kx`, a GD extending datum is the same
//! thing as a flag datum `(p, q, S, T, a₁, k, η, D)` via
//!
//! ```text
//! l_A(a)x = p(a)x   r_A(a)x = q(a)x   l_V(x)a = S(a)   r_V(x)a = T(a)
//! f(x,x) = a₁       x∗x = kx          x◁a = η(a)x      x▷a = D(a)
//! h = 0             {·,·} = 0
//! ```
//!
//! Linear functionals `A → K` are stored as their coefficient vectors on the
//! basis, so `p(a) = p·a`.

mod equivalence;
mod special;

pub use equivalence::*;
pub use special::*;

use crate::algebras::{check_twisted_derivation, AlgebraData, GdBialgebra, TwistedDerivation};
use crate::error::{Error, Result};
use crate::extending::{
    check_gd_extending, unified_product_data, GdExtendingDatum, LieExtendingDatum, NovikovExtendingDatum,
};
use crate::linalg::{LinearMap, Vector};
use crate::report::ValidationReport;
use crate::scalar::Scalar;
use crate::tensor::BilinearMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovFlagDatum {
    pub p: Vector,
    pub q: Vector,
    pub s: LinearMap,
    pub t: LinearMap,
    pub a1: Vector,
    pub k: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdFlagDatum {
    pub novikov: NovikovFlagDatum,
    pub eta: Vector,
    pub d: LinearMap,
}

impl NovikovFlagDatum {
    pub fn zero(n: usize) -> Self {
        NovikovFlagDatum {
            p: Vector::zero(n),
            q: Vector::zero(n),
            s: LinearMap::zero(n, n),
            t: LinearMap::zero(n, n),
            a1: Vector::zero(n),
            k: Scalar::zero(),
        }
    }

    pub fn dim(&self) -> Result<usize> {
        let n = self.p.len();
        let ok = self.q.len() == n
            && self.a1.len() == n
            && (self.s.rows(), self.s.cols()) == (n, n)
            && (self.t.rows(), self.t.cols()) == (n, n);
        if ok {
            Ok(n)
        } else {
            Err(Error::DimensionMismatch("flag datum components disagree on dim A".into()))
        }
    }
}

impl GdFlagDatum {
    pub fn zero(n: usize) -> Self {
        GdFlagDatum { novikov: NovikovFlagDatum::zero(n), eta: Vector::zero(n), d: LinearMap::zero(n, n) }
    }

    pub fn dim(&self) -> Result<usize> {
        let n = self.novikov.dim()?;
        if self.eta.len() != n || (self.d.rows(), self.d.cols()) != (n, n) {
            return Err(Error::DimensionMismatch("η or D disagree on dim A".into()));
        }
        Ok(n)
    }

    pub fn p(&self) -> &Vector {
        &self.novikov.p
    }
    pub fn q(&self) -> &Vector {
        &self.novikov.q
    }
    pub fn s(&self) -> &LinearMap {
        &self.novikov.s
    }
    pub fn t(&self) -> &LinearMap {
        &self.novikov.t
    }
    pub fn a1(&self) -> &Vector {
        &self.novikov.a1
    }
    pub fn k(&self) -> &Scalar {
        &self.novikov.k
    }

    /// The dim-1 extending datum this flag datum encodes.
    pub fn to_extending_datum(&self) -> Result<GdExtendingDatum> {
        let n = self.dim()?;
        let nd = &self.novikov;
        let one = |s: &Scalar| Vector::new(vec![s.clone()]);
        Ok(GdExtendingDatum {
            novikov: NovikovExtendingDatum {
                l_a: BilinearMap::from_fn(n, 1, 1, |i, _| one(&nd.p[i])),
                r_a: BilinearMap::from_fn(n, 1, 1, |i, _| one(&nd.q[i])),
                l_v: BilinearMap::from_fn(1, n, n, |_, j| nd.s.column(j)),
                r_v: BilinearMap::from_fn(1, n, n, |_, j| nd.t.column(j)),
                f: BilinearMap::from_fn(1, 1, n, |_, _| nd.a1.clone()),
                star: BilinearMap::from_fn(1, 1, 1, |_, _| one(&nd.k)),
            },
            lie: LieExtendingDatum {
                triangle_left: BilinearMap::from_fn(1, n, 1, |_, j| one(&self.eta[j])),
                triangle_right: BilinearMap::from_fn(1, n, n, |_, j| self.d.column(j)),
                h: BilinearMap::zero(1, 1, n),
                curly: BilinearMap::zero(1, 1, 1),
            },
        })
    }

    /// Reads a flag datum off a dim-1 extending datum. Fails unless
    /// `dim V = 1`, `h = 0` and `{·,·} = 0`.
    pub fn from_extending_datum(d: &GdExtendingDatum) -> Result<Self> {
        let (n, nv) = d.dims()?;
        if nv != 1 {
            return Err(Error::DimensionMismatch(format!("flag datums need dim V = 1, got {nv}")));
        }
        if !d.lie.h.is_zero() || !d.lie.curly.is_zero() {
            return Err(Error::InvalidParameters {
                id: "flag datum".into(),
                reason: "h and {·,·} must vanish in codimension one".into(),
            });
        }
        let nd = &d.novikov;
        let scalars = |m: &BilinearMap, first: bool| {
            Vector::new((0..n).map(|i| if first { m.get(i, 0, 0) } else { m.get(0, i, 0) }.clone()).collect())
        };
        let cols = |m: &BilinearMap| LinearMap::from_columns(n, &(0..n).map(|j| m.eval_basis(0, j)).collect::<Vec<_>>());
        Ok(GdFlagDatum {
            novikov: NovikovFlagDatum {
                p: scalars(&nd.l_a, true),
                q: scalars(&nd.r_a, true),
                s: cols(&nd.l_v),
                t: cols(&nd.r_v),
                a1: nd.f.eval_basis(0, 0),
                k: nd.star.get(0, 0, 0).clone(),
            },
            eta: scalars(&d.lie.triangle_left, false),
            d: cols(&d.lie.triangle_right),
        })
    }
}

fn check_dim(a_dim: usize, d: usize) -> Result<()> {
    if a_dim != d {
        return Err(Error::DimensionMismatch(format!("algebra dim {a_dim}, flag datum dim {d}")));
    }
    Ok(())
}

/// FN1–FN10. FN1 covers both `p(a∘b) = p(b∘a)` and `q(a∘b) = q(a)q(b)`.
pub fn check_novikov_flag(product: &BilinearMap, d: &NovikovFlagDatum) -> Result<ValidationReport> {
    let n = d.dim()?;
    check_dim(product.dims().0, n)?;
    if product.dims() != (n, n, n) {
        return Err(Error::DimensionMismatch(format!("product dims {:?}", product.dims())));
    }
    let o = |a: &Vector, b: &Vector| product.eval(a, b);
    let p = |a: &Vector| d.p.dot(a);
    let q = |a: &Vector| d.q.dot(a);
    let s = |a: &Vector| d.s.apply(a);
    let t = |a: &Vector| d.t.apply(a);
    let k = &d.k;
    let a1 = &d.a1;
    let mut r = ValidationReport::new();
    for i in 0..n {
        let a = Vector::basis(n, i);
        for j in 0..n {
            let b = Vector::basis(n, j);
            let tu = [i, j];
            let (ab, ba) = (o(&a, &b), o(&b, &a));
            r.check_scalar("FN1", "ab", &tu, p(&ab) - p(&ba));
            r.check_scalar("FN1", "ab", &tu, q(&ab) - q(&a) * q(&b));
            r.check(
                "FN2",
                "ab",
                &tu,
                vsum!(
                    s(&ab),
                    - o(&s(&a), &b),
                    - o(&a, &s(&b)),
                    - s(&b).scale(&(q(&a) - p(&a))),
                    - t(&a).scale(&q(&b)),
                    + o(&t(&a), &b)
                ),
            );
            r.check(
                "FN3",
                "ab",
                &tu,
                vsum!(
                    t(&ab),
                    - t(&ba),
                    - t(&a).scale(&p(&b)),
                    + t(&b).scale(&p(&a)),
                    - o(&a, &t(&b)),
                    + o(&b, &t(&a))
                ),
            );
            r.check(
                "FN6",
                "ab",
                &tu,
                vsum!(o(&s(&a), &b), + s(&b).scale(&q(&a)), - o(&s(&b), &a), - s(&a).scale(&q(&b))),
            );
            r.check("FN7", "ab", &tu, vsum!(t(&ab), - o(&t(&a), &b), - s(&b).scale(&p(&a))));
            r.check_scalar("FN8", "ab", &tu, p(&ab) - p(&a) * q(&b));
        }
        let tu = [i];
        r.check(
            "FN4",
            "a",
            &tu,
            vsum!(
                t(&t(&a)),
                - t(&s(&a)),
                + s(&t(&a)),
                - o(&a, a1),
                - a1.scale(&(q(&a) - p(&a) - p(&a))),
                - t(&a).scale(k)
            ),
        );
        r.check_scalar("FN5", "a", &tu, p(&s(&a)) - p(&t(&a)) - q(&t(&a)) - k * &(p(&a) - q(&a)));
        r.check("FN9", "a", &tu, vsum!(t(&s(&a)), - o(a1, &a), - s(&a).scale(k), + a1.scale(&q(&a))));
        r.check_scalar("FN10", "a", &tu, p(&s(&a)));
    }
    Ok(r)
}

/// GF0–GF6. GF0 failures appear under their `FN*` / `TD*` labels.
pub fn check_gd_flag(a: &GdBialgebra, d: &GdFlagDatum) -> Result<ValidationReport> {
    let n = d.dim()?;
    check_dim(a.dim(), n)?;
    let mut r = check_novikov_flag(a.product(), &d.novikov)?;
    r.merge(check_twisted_derivation(&a.lie(), &TwistedDerivation { lambda: d.eta.clone(), d: d.d.clone() }));
    let o = |x: &Vector, y: &Vector| a.o(x, y);
    let br = |x: &Vector, y: &Vector| a.br(x, y);
    let p = |x: &Vector| d.p().dot(x);
    let q = |x: &Vector| d.q().dot(x);
    let eta = |x: &Vector| d.eta.dot(x);
    let s = |x: &Vector| d.s().apply(x);
    let t = |x: &Vector| d.t().apply(x);
    let dd = |x: &Vector| d.d.apply(x);
    let (k, a1) = (d.k(), d.a1());
    for i in 0..n {
        let x = Vector::basis(n, i);
        for j in 0..n {
            let y = Vector::basis(n, j);
            let tu = [i, j];
            // a = x, b = y
            r.check(
                "GF1",
                "ab",
                &tu,
                vsum!(
                    br(&x, &t(&y)),
                    - dd(&x).scale(&p(&y)),
                    - dd(&o(&y, &x)),
                    + t(&br(&y, &x)),
                    + o(&dd(&y), &x),
                    + s(&x).scale(&eta(&y)),
                    + o(&y, &dd(&x)),
                    + t(&y).scale(&eta(&x))
                ),
            );
            r.check_scalar("GF2", "ab", &tu, p(&br(&y, &x)) + eta(&y) * q(&x) - eta(&o(&y, &x)));
            r.check(
                "GF3",
                "ab",
                &tu,
                vsum!(
                    br(&x, &s(&y)),
                    - dd(&x).scale(&q(&y)),
                    - br(&y, &s(&x)),
                    + dd(&y).scale(&q(&x)),
                    + o(&dd(&x), &y),
                    + s(&y).scale(&eta(&x)),
                    - o(&dd(&y), &x),
                    - s(&x).scale(&eta(&y)),
                    - s(&br(&x, &y))
                ),
            );
            r.check_scalar("GF4", "ab", &tu, q(&br(&x, &y)));
        }
        let tu = [i];
        r.check(
            "GF5",
            "a",
            &tu,
            vsum!(
                br(&x, a1),
                - dd(&x).scale(k),
                - dd(&s(&x)),
                + t(&dd(&x)),
                + a1.scale(&(eta(&x) + eta(&x))),
                + s(&dd(&x))
            ),
        );
        r.check_scalar("GF6", "a", &tu, k * &eta(&x) - eta(&s(&x)) + p(&dd(&x)) + q(&dd(&x)));
    }
    Ok(r)
}

/// The structure constants of `GD(A, x | p, q, S, T, a₁, k, η, D)` without
/// validating the datum.
pub fn build_flag_extension_data(a: &GdBialgebra, d: &GdFlagDatum) -> Result<AlgebraData> {
    unified_product_data(a, &d.to_extending_datum()?)
}

/// `GD(A, x | p, q, S, T, a₁, k, η, D)`, after checking GF0–GF6.
pub fn build_flag_extension(a: &GdBialgebra, d: &GdFlagDatum) -> Result<GdBialgebra> {
    let report = check_gd_flag(a, d)?;
    if !report.passed() {
        return Err(Error::InvalidFlagDatum(report));
    }
    GdBialgebra::new(build_flag_extension_data(a, d)?)
}

/// Whether the dim-1 datum induced by `d` passes G0–G10.
pub fn induced_datum_is_valid(a: &GdBialgebra, d: &GdFlagDatum) -> Result<bool> {
    Ok(check_gd_extending(a, &d.to_extending_datum()?)?.passed())
}
