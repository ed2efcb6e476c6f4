//! Module and bimodule checks. Actions of A on a carrier V are stored as
//! bilinear tensors: `l`, `r` with dims (A, V, V) mean `l(a)v`, `r(a)v`;
//! a right Lie action `v◁a` has dims (V, A, V).
//!
//! Labels: `BM1`–`BM4` Novikov bimodule identities, `LRM` right Lie module,
//! `GDR1`/`GDR2` the two GD right-module compatibilities. Left modules are
//! converted to right modules through `v◁a := −a▷v` and reported with
//! `LLM`, `GDL1`, `GDL2`.

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::report::ValidationReport;
use crate::tensor::BilinearMap;

use super::GdBialgebra;

fn expect_dims(m: &BilinearMap, want: (usize, usize, usize), what: &str) -> Result<()> {
    if m.dims() != want {
        return Err(Error::DimensionMismatch(format!("{what} has dims {:?}, expected {want:?}", m.dims())));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovBimodule {
    pub l: BilinearMap,
    pub r: BilinearMap,
}

impl NovikovBimodule {
    pub fn zero(dim_a: usize, dim_v: usize) -> Self {
        NovikovBimodule { l: BilinearMap::zero(dim_a, dim_v, dim_v), r: BilinearMap::zero(dim_a, dim_v, dim_v) }
    }

    pub fn carrier_dim(&self) -> usize {
        self.l.dims().1
    }
}

pub fn check_novikov_bimodule(product: &BilinearMap, m: &NovikovBimodule) -> Result<ValidationReport> {
    let na = product.dims().0;
    let nv = m.carrier_dim();
    expect_dims(&m.l, (na, nv, nv), "l_A")?;
    expect_dims(&m.r, (na, nv, nv), "r_A")?;
    let ea = |i| Vector::basis(na, i);
    let l = |a: &Vector, v: &Vector| m.l.eval(a, v);
    let r = |a: &Vector, v: &Vector| m.r.eval(a, v);
    let o = |a: &Vector, b: &Vector| product.eval(a, b);
    let mut rep = ValidationReport::new();
    for i in 0..na {
        for j in 0..na {
            for k in 0..nv {
                let (a, b, v) = (ea(i), ea(j), Vector::basis(nv, k));
                let t = [i, j, k];
                let bm1 = &(&(&l(&a, &l(&b, &v)) - &l(&o(&a, &b), &v)) - &l(&b, &l(&a, &v))) + &l(&o(&b, &a), &v);
                rep.check("BM1", "abv", &t, bm1);
                let bm2 =
                    &(&(&l(&a, &r(&b, &v)) - &r(&b, &l(&a, &v))) - &r(&o(&a, &b), &v)) + &r(&b, &r(&a, &v));
                rep.check("BM2", "abv", &t, bm2);
                rep.check("BM3", "abv", &t, &l(&o(&a, &b), &v) - &r(&b, &l(&a, &v)));
                rep.check("BM4", "abv", &t, &r(&a, &r(&b, &v)) - &r(&b, &r(&a, &v)));
            }
        }
    }
    Ok(rep)
}

/// `v◁[a,b] = (v◁a)◁b − (v◁b)◁a`
pub fn check_lie_right_module(bracket: &BilinearMap, tri: &BilinearMap) -> Result<ValidationReport> {
    let na = bracket.dims().0;
    let nv = tri.dims().0;
    expect_dims(tri, (nv, na, nv), "◁")?;
    let mut rep = ValidationReport::new();
    for k in 0..nv {
        for i in 0..na {
            for j in 0..na {
                let (v, a, b) = (Vector::basis(nv, k), Vector::basis(na, i), Vector::basis(na, j));
                let lhs = tri.eval(&v, &bracket.eval(&a, &b));
                let rhs = &tri.eval(&tri.eval(&v, &a), &b) - &tri.eval(&tri.eval(&v, &b), &a);
                rep.check("LRM", "vab", &[k, i, j], &lhs - &rhs);
            }
        }
    }
    Ok(rep)
}

/// `(V, ◁, l_A, r_A)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdRightModule {
    pub triangle: BilinearMap,
    pub bimodule: NovikovBimodule,
}

/// `(V, ▷, l_A, r_A)` with `▷` of dims (A, V, V).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdLeftModule {
    pub triangle: BilinearMap,
    pub bimodule: NovikovBimodule,
}

impl GdLeftModule {
    /// The same data seen as a right module through `v◁a := −a▷v`.
    pub fn to_right(&self) -> GdRightModule {
        let (na, nv, _) = self.triangle.dims();
        let tri = BilinearMap::from_fn(nv, na, nv, |k, i| -self.triangle.eval_basis(i, k));
        GdRightModule { triangle: tri, bimodule: self.bimodule.clone() }
    }
}

pub fn check_gd_right_module(a: &GdBialgebra, m: &GdRightModule) -> Result<ValidationReport> {
    let na = a.dim();
    let nv = m.bimodule.carrier_dim();
    expect_dims(&m.triangle, (nv, na, nv), "◁")?;
    let mut rep = check_lie_right_module(a.bracket(), &m.triangle)?;
    rep.merge(check_novikov_bimodule(a.product(), &m.bimodule)?);
    let tri = |v: &Vector, x: &Vector| m.triangle.eval(v, x);
    let l = |x: &Vector, v: &Vector| m.bimodule.l.eval(x, v);
    let r = |x: &Vector, v: &Vector| m.bimodule.r.eval(x, v);
    for i in 0..na {
        for j in 0..na {
            for k in 0..nv {
                let (x, y, v) = (a.e(i), a.e(j), Vector::basis(nv, k));
                let t = [i, j, k];
                // (l(b)v)◁a + v◁(b∘a) − l([b,a])v − r(a)(v◁b) − l(b)(v◁a), with a = x, b = y
                let mut g1 = tri(&l(&y, &v), &x);
                g1 = &g1 + &tri(&v, &a.o(&y, &x));
                g1 = &g1 - &l(&a.br(&y, &x), &v);
                g1 = &g1 - &r(&x, &tri(&v, &y));
                g1 = &g1 - &l(&y, &tri(&v, &x));
                rep.check("GDR1", "abv", &t, g1);
                // (r(b)v)◁a − (r(a)v)◁b − r(b)(v◁a) + r(a)(v◁b) + r([a,b])v
                let mut g2 = tri(&r(&y, &v), &x);
                g2 = &g2 - &tri(&r(&x, &v), &y);
                g2 = &g2 - &r(&y, &tri(&v, &x));
                g2 = &g2 + &r(&x, &tri(&v, &y));
                g2 = &g2 + &r(&a.br(&x, &y), &v);
                rep.check("GDR2", "abv", &t, g2);
            }
        }
    }
    Ok(rep)
}

pub fn check_gd_left_module(a: &GdBialgebra, m: &GdLeftModule) -> Result<ValidationReport> {
    let (na, nv, nv2) = m.triangle.dims();
    if na != a.dim() || nv != nv2 {
        return Err(Error::DimensionMismatch(format!("▷ has dims {:?}", m.triangle.dims())));
    }
    let rep = check_gd_right_module(a, &m.to_right())?;
    Ok(rep.relabel(|c| match c {
        "LRM" => "LLM".to_string(),
        "GDR1" => "GDL1".to_string(),
        "GDR2" => "GDL2".to_string(),
        other => other.to_string(),
    }))
}
