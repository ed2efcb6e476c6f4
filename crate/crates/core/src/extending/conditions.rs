//! The L1–L7, N1–N20 and G0–G10 conditions, each evaluated as a residual
//! (left side minus right side) on basis tuples.

use crate::algebras::GdBialgebra;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::report::ValidationReport;
use crate::tensor::BilinearMap;

use super::{GdExtendingDatum, LieExtendingDatum, NovikovExtendingDatum};

/// Evaluation helpers over one datum; `o`/`br` are the products of `A`.
struct Ctx<'a> {
    na: usize,
    nv: usize,
    o: Option<&'a BilinearMap>,
    br: Option<&'a BilinearMap>,
    n: Option<&'a NovikovExtendingDatum>,
    l: Option<&'a LieExtendingDatum>,
}

impl<'a> Ctx<'a> {
    fn ea(&self, i: usize) -> Vector {
        Vector::basis(self.na, i)
    }
    fn ev(&self, i: usize) -> Vector {
        Vector::basis(self.nv, i)
    }
    fn o(&self, a: &Vector, b: &Vector) -> Vector {
        self.o.unwrap().eval(a, b)
    }
    fn br(&self, a: &Vector, b: &Vector) -> Vector {
        self.br.unwrap().eval(a, b)
    }
    fn la(&self, a: &Vector, x: &Vector) -> Vector {
        self.n.unwrap().l_a.eval(a, x)
    }
    fn ra(&self, a: &Vector, x: &Vector) -> Vector {
        self.n.unwrap().r_a.eval(a, x)
    }
    fn lv(&self, x: &Vector, a: &Vector) -> Vector {
        self.n.unwrap().l_v.eval(x, a)
    }
    fn rv(&self, x: &Vector, a: &Vector) -> Vector {
        self.n.unwrap().r_v.eval(x, a)
    }
    fn f(&self, x: &Vector, y: &Vector) -> Vector {
        self.n.unwrap().f.eval(x, y)
    }
    fn s(&self, x: &Vector, y: &Vector) -> Vector {
        self.n.unwrap().star.eval(x, y)
    }
    fn tl(&self, x: &Vector, a: &Vector) -> Vector {
        self.l.unwrap().triangle_left.eval(x, a)
    }
    fn tr(&self, x: &Vector, a: &Vector) -> Vector {
        self.l.unwrap().triangle_right.eval(x, a)
    }
    fn h(&self, x: &Vector, y: &Vector) -> Vector {
        self.l.unwrap().h.eval(x, y)
    }
    fn c(&self, x: &Vector, y: &Vector) -> Vector {
        self.l.unwrap().curly.eval(x, y)
    }
}

fn lie_dims(bracket: &BilinearMap, d: &LieExtendingDatum) -> Result<(usize, usize)> {
    let (na, nv) = d.dims()?;
    if bracket.dims() != (na, na, na) {
        return Err(Error::DimensionMismatch(format!("algebra dims {:?}, datum expects dim A = {na}", bracket.dims())));
    }
    Ok((na, nv))
}

fn novikov_dims(product: &BilinearMap, d: &NovikovExtendingDatum) -> Result<(usize, usize)> {
    let (na, nv) = d.dims()?;
    if product.dims() != (na, na, na) {
        return Err(Error::DimensionMismatch(format!("algebra dims {:?}, datum expects dim A = {na}", product.dims())));
    }
    Ok((na, nv))
}

/// L1–L7 for a Lie algebra with bracket `bracket`. L2 is the right-module
/// axiom `x◁[a,b] = (x◁a)◁b − (x◁b)◁a`.
pub fn check_lie_extending(bracket: &BilinearMap, d: &LieExtendingDatum) -> Result<ValidationReport> {
    let (na, nv) = lie_dims(bracket, d)?;
    let c = Ctx { na, nv, o: None, br: Some(bracket), n: None, l: Some(d) };
    let mut r = ValidationReport::new();
    for i in 0..nv {
        for j in i..nv {
            let (hx, cx) = if i == j {
                (d.h.eval_basis(i, i), d.curly.eval_basis(i, i))
            } else {
                (&d.h.eval_basis(i, j) + &d.h.eval_basis(j, i), &d.curly.eval_basis(i, j) + &d.curly.eval_basis(j, i))
            };
            r.check("L1", "xy", &[i, j], hx.concat(&cx));
        }
    }
    for xi in 0..nv {
        for ai in 0..na {
            for bi in 0..na {
                let (x, a, b) = (c.ev(xi), c.ea(ai), c.ea(bi));
                let t = [xi, ai, bi];
                let ab = c.br(&a, &b);
                r.check("L2", "xab", &t, vsum!(c.tl(&x, &ab), - c.tl(&c.tl(&x, &a), &b), + c.tl(&c.tl(&x, &b), &a)));
                r.check(
                    "L3",
                    "xab",
                    &t,
                    vsum!(
                        c.tr(&x, &ab),
                        - c.br(&c.tr(&x, &a), &b),
                        - c.br(&a, &c.tr(&x, &b)),
                        - c.tr(&c.tl(&x, &a), &b),
                        + c.tr(&c.tl(&x, &b), &a)
                    ),
                );
            }
        }
    }
    for xi in 0..nv {
        for yi in 0..nv {
            for ai in 0..na {
                let (x, y, a) = (c.ev(xi), c.ev(yi), c.ea(ai));
                let t = [xi, yi, ai];
                let xy = c.c(&x, &y);
                r.check(
                    "L4",
                    "xya",
                    &t,
                    vsum!(
                        c.tl(&xy, &a),
                        - c.c(&x, &c.tl(&y, &a)),
                        - c.c(&c.tl(&x, &a), &y),
                        - c.tl(&x, &c.tr(&y, &a)),
                        + c.tl(&y, &c.tr(&x, &a))
                    ),
                );
                let hxy = c.h(&x, &y);
                r.check(
                    "L5",
                    "xya",
                    &t,
                    vsum!(
                        c.tr(&xy, &a),
                        - c.tr(&x, &c.tr(&y, &a)),
                        + c.tr(&y, &c.tr(&x, &a)),
                        - c.br(&a, &hxy),
                        - c.h(&x, &c.tl(&y, &a)),
                        - c.h(&c.tl(&x, &a), &y)
                    ),
                );
            }
        }
    }
    for xi in 0..nv {
        for yi in 0..nv {
            for zi in 0..nv {
                let (x, y, z) = (c.ev(xi), c.ev(yi), c.ev(zi));
                let t = [xi, yi, zi];
                r.check(
                    "L6",
                    "xyz",
                    &t,
                    vsum!(
                        c.h(&x, &c.c(&y, &z)),
                        + c.h(&y, &c.c(&z, &x)),
                        + c.h(&z, &c.c(&x, &y)),
                        + c.tr(&x, &c.h(&y, &z)),
                        + c.tr(&y, &c.h(&z, &x)),
                        + c.tr(&z, &c.h(&x, &y))
                    ),
                );
                r.check(
                    "L7",
                    "xyz",
                    &t,
                    vsum!(
                        c.c(&x, &c.c(&y, &z)),
                        + c.c(&y, &c.c(&z, &x)),
                        + c.c(&z, &c.c(&x, &y)),
                        + c.tl(&x, &c.h(&y, &z)),
                        + c.tl(&y, &c.h(&z, &x)),
                        + c.tl(&z, &c.h(&x, &y))
                    ),
                );
            }
        }
    }
    Ok(r)
}

/// N1–N20 for a Novikov algebra with product `product`.
pub fn check_novikov_extending(product: &BilinearMap, d: &NovikovExtendingDatum) -> Result<ValidationReport> {
    let (na, nv) = novikov_dims(product, d)?;
    let c = Ctx { na, nv, o: Some(product), br: None, n: Some(d), l: None };
    let mut r = ValidationReport::new();
    // (a, b, x)
    for ai in 0..na {
        for bi in 0..na {
            for xi in 0..nv {
                let (a, b, x) = (c.ea(ai), c.ea(bi), c.ev(xi));
                let t = [ai, bi, xi];
                let ab = c.o(&a, &b);
                let ba = c.o(&b, &a);
                r.check(
                    "N1",
                    "abx",
                    &t,
                    vsum!(
                        c.lv(&x, &ab),
                        + c.lv(&c.la(&a, &x), &b),
                        - c.lv(&c.ra(&a, &x), &b),
                        - c.o(&c.lv(&x, &a), &b),
                        + c.o(&c.rv(&x, &a), &b),
                        - c.rv(&c.ra(&b, &x), &a),
                        - c.o(&a, &c.lv(&x, &b))
                    ),
                );
                r.check(
                    "N2",
                    "abx",
                    &t,
                    vsum!(
                        c.la(&a, &c.ra(&b, &x)),
                        - c.ra(&b, &c.la(&a, &x)),
                        - c.ra(&ab, &x),
                        + c.ra(&b, &c.ra(&a, &x))
                    ),
                );
                r.check(
                    "N3",
                    "abx",
                    &t,
                    vsum!(
                        c.rv(&x, &ab),
                        - c.rv(&x, &ba),
                        - c.rv(&c.la(&b, &x), &a),
                        + c.rv(&c.la(&a, &x), &b),
                        - c.o(&a, &c.rv(&x, &b)),
                        + c.o(&b, &c.rv(&x, &a))
                    ),
                );
                r.check(
                    "N4",
                    "abx",
                    &t,
                    vsum!(c.la(&(&ab - &ba), &x), - c.la(&a, &c.la(&b, &x)), + c.la(&b, &c.la(&a, &x))),
                );
                r.check(
                    "N11",
                    "abx",
                    &t,
                    vsum!(
                        c.o(&c.lv(&x, &a), &b),
                        + c.lv(&c.ra(&a, &x), &b),
                        - c.o(&c.lv(&x, &b), &a),
                        - c.lv(&c.ra(&b, &x), &a)
                    ),
                );
                r.check("N12", "abx", &t, vsum!(c.ra(&b, &c.ra(&a, &x)), - c.ra(&a, &c.ra(&b, &x))));
                r.check(
                    "N13",
                    "abx",
                    &t,
                    vsum!(c.o(&c.rv(&x, &a), &b), + c.lv(&c.la(&a, &x), &b), - c.rv(&x, &ab)),
                );
                r.check("N14", "abx", &t, vsum!(c.ra(&b, &c.la(&a, &x)), - c.la(&ab, &x)));
            }
        }
    }
    // (a, x, y)
    for ai in 0..na {
        for xi in 0..nv {
            for yi in 0..nv {
                let (a, x, y) = (c.ea(ai), c.ev(xi), c.ev(yi));
                let t = [ai, xi, yi];
                let xy = c.s(&x, &y);
                let yx = c.s(&y, &x);
                let fxy = c.f(&x, &y);
                let fyx = c.f(&y, &x);
                r.check(
                    "N5",
                    "axy",
                    &t,
                    vsum!(
                        c.rv(&xy, &a),
                        - c.rv(&y, &c.rv(&x, &a)),
                        + c.rv(&y, &c.lv(&x, &a)),
                        - c.lv(&x, &c.rv(&y, &a)),
                        - c.f(&c.la(&a, &x), &y),
                        - c.f(&x, &c.la(&a, &y)),
                        + c.o(&a, &fxy),
                        + c.f(&c.ra(&a, &x), &y)
                    ),
                );
                r.check(
                    "N6",
                    "axy",
                    &t,
                    vsum!(
                        c.la(&a, &xy),
                        + c.la(&(&c.lv(&x, &a) - &c.rv(&x, &a)), &y),
                        - c.s(&(&c.la(&a, &x) - &c.ra(&a, &x)), &y),
                        - c.ra(&c.rv(&y, &a), &x),
                        - c.s(&x, &c.la(&a, &y))
                    ),
                );
                r.check(
                    "N7",
                    "axy",
                    &t,
                    vsum!(
                        c.lv(&(&xy - &yx), &a),
                        - c.lv(&x, &c.lv(&y, &a)),
                        + c.lv(&y, &c.lv(&x, &a)),
                        + c.o(&(&fxy - &fyx), &a),
                        - c.f(&x, &c.ra(&a, &y)),
                        + c.f(&y, &c.ra(&a, &x))
                    ),
                );
                r.check(
                    "N8",
                    "axy",
                    &t,
                    vsum!(
                        c.ra(&a, &(&xy - &yx)),
                        - c.ra(&c.lv(&y, &a), &x),
                        + c.ra(&c.lv(&x, &a), &y),
                        - c.s(&x, &c.ra(&a, &y)),
                        + c.s(&y, &c.ra(&a, &x))
                    ),
                );
                r.check(
                    "N15",
                    "axy",
                    &t,
                    vsum!(
                        c.rv(&y, &c.rv(&x, &a)),
                        + c.f(&c.la(&a, &x), &y),
                        - c.rv(&x, &c.rv(&y, &a)),
                        - c.f(&c.la(&a, &y), &x)
                    ),
                );
                r.check(
                    "N16",
                    "axy",
                    &t,
                    vsum!(
                        c.la(&c.rv(&x, &a), &y),
                        + c.s(&c.la(&a, &x), &y),
                        - c.la(&c.rv(&y, &a), &x),
                        - c.s(&c.la(&a, &y), &x)
                    ),
                );
                r.check(
                    "N17",
                    "axy",
                    &t,
                    vsum!(c.rv(&y, &c.lv(&x, &a)), + c.f(&c.ra(&a, &x), &y), - c.o(&fxy, &a), - c.lv(&xy, &a)),
                );
                r.check(
                    "N18",
                    "axy",
                    &t,
                    vsum!(c.la(&c.lv(&x, &a), &y), + c.s(&c.ra(&a, &x), &y), - c.ra(&a, &xy)),
                );
            }
        }
    }
    // (x, y, z)
    for xi in 0..nv {
        for yi in 0..nv {
            for zi in 0..nv {
                let (x, y, z) = (c.ev(xi), c.ev(yi), c.ev(zi));
                let t = [xi, yi, zi];
                let fxy = c.f(&x, &y);
                let fyx = c.f(&y, &x);
                r.check(
                    "N9",
                    "xyz",
                    &t,
                    vsum!(
                        c.f(&c.s(&x, &y), &z),
                        - c.f(&x, &c.s(&y, &z)),
                        - c.f(&c.s(&y, &x), &z),
                        + c.f(&y, &c.s(&x, &z)),
                        + c.rv(&z, &(&fxy - &fyx)),
                        - c.lv(&x, &c.f(&y, &z)),
                        + c.lv(&y, &c.f(&x, &z))
                    ),
                );
                r.check(
                    "N10",
                    "xyz",
                    &t,
                    vsum!(
                        c.s(&c.s(&x, &y), &z),
                        - c.s(&x, &c.s(&y, &z)),
                        - c.s(&c.s(&y, &x), &z),
                        + c.s(&y, &c.s(&x, &z)),
                        + c.la(&(&fxy - &fyx), &z),
                        - c.ra(&c.f(&y, &z), &x),
                        + c.ra(&c.f(&x, &z), &y)
                    ),
                );
                r.check(
                    "N19",
                    "xyz",
                    &t,
                    vsum!(
                        c.rv(&z, &fxy),
                        + c.f(&c.s(&x, &y), &z),
                        - c.rv(&y, &c.f(&x, &z)),
                        - c.f(&c.s(&x, &z), &y)
                    ),
                );
                r.check(
                    "N20",
                    "xyz",
                    &t,
                    vsum!(
                        c.la(&fxy, &z),
                        + c.s(&c.s(&x, &y), &z),
                        - c.la(&c.f(&x, &z), &y),
                        - c.s(&c.s(&x, &z), &y)
                    ),
                );
            }
        }
    }
    Ok(r)
}

/// G0–G10. G0 failures are reported under the underlying `N*` / `L*` labels;
/// G1–G10 under their own. The last term group of G10 reads
/// `{x, y∗z} + x◁f(y,z) − {z, y∗x} − …`.
pub fn check_gd_extending(a: &GdBialgebra, d: &GdExtendingDatum) -> Result<ValidationReport> {
    let (na, nv) = d.dims()?;
    if a.dim() != na {
        return Err(Error::DimensionMismatch(format!("algebra dim {}, datum expects dim A = {na}", a.dim())));
    }
    let mut r = check_novikov_extending(a.product(), &d.novikov)?;
    r.merge(check_lie_extending(a.bracket(), &d.lie)?);
    let c = Ctx { na, nv, o: Some(a.product()), br: Some(a.bracket()), n: Some(&d.novikov), l: Some(&d.lie) };
    for ai in 0..na {
        for bi in 0..na {
            for xi in 0..nv {
                let (a, b, x) = (c.ea(ai), c.ea(bi), c.ev(xi));
                let t = [ai, bi, xi];
                r.check(
                    "G1",
                    "abx",
                    &t,
                    vsum!(
                        c.br(&a, &c.rv(&x, &b)),
                        - c.tr(&c.la(&b, &x), &a),
                        - c.tr(&x, &c.o(&b, &a)),
                        + c.rv(&x, &c.br(&b, &a)),
                        + c.o(&c.tr(&x, &b), &a),
                        + c.lv(&c.tl(&x, &b), &a),
                        + c.o(&b, &c.tr(&x, &a)),
                        + c.rv(&c.tl(&x, &a), &b)
                    ),
                );
                r.check(
                    "G2",
                    "abx",
                    &t,
                    vsum!(
                        c.tl(&c.la(&b, &x), &a),
                        + c.tl(&x, &c.o(&b, &a)),
                        - c.la(&c.br(&b, &a), &x),
                        - c.ra(&a, &c.tl(&x, &b)),
                        - c.la(&b, &c.tl(&x, &a))
                    ),
                );
                r.check(
                    "G3",
                    "abx",
                    &t,
                    vsum!(
                        c.br(&a, &c.lv(&x, &b)),
                        - c.tr(&c.ra(&b, &x), &a),
                        - c.br(&b, &c.lv(&x, &a)),
                        + c.tr(&c.ra(&a, &x), &b),
                        + c.o(&c.tr(&x, &a), &b),
                        + c.lv(&c.tl(&x, &a), &b),
                        - c.o(&c.tr(&x, &b), &a),
                        - c.lv(&c.tl(&x, &b), &a),
                        - c.lv(&x, &c.br(&a, &b))
                    ),
                );
                r.check(
                    "G4",
                    "abx",
                    &t,
                    vsum!(
                        c.tl(&c.ra(&b, &x), &a),
                        - c.tl(&c.ra(&a, &x), &b),
                        - c.ra(&b, &c.tl(&x, &a)),
                        + c.ra(&a, &c.tl(&x, &b)),
                        + c.ra(&c.br(&a, &b), &x)
                    ),
                );
            }
        }
    }
    for ai in 0..na {
        for xi in 0..nv {
            for yi in 0..nv {
                let (a, x, y) = (c.ea(ai), c.ev(xi), c.ev(yi));
                let t = [ai, xi, yi];
                r.check(
                    "G5",
                    "axy",
                    &t,
                    vsum!(
                        c.br(&a, &c.f(&x, &y)),
                        - c.tr(&c.s(&x, &y), &a),
                        - c.tr(&y, &c.lv(&x, &a)),
                        - c.h(&y, &c.ra(&a, &x)),
                        + c.rv(&y, &c.tr(&x, &a)),
                        + c.f(&c.tl(&x, &a), &y),
                        - c.o(&c.h(&x, &y), &a),
                        - c.lv(&c.c(&x, &y), &a),
                        + c.lv(&x, &c.tr(&y, &a)),
                        + c.f(&x, &c.tl(&y, &a))
                    ),
                );
                r.check(
                    "G6",
                    "axy",
                    &t,
                    vsum!(
                        c.tl(&c.s(&x, &y), &a),
                        + c.c(&y, &c.ra(&a, &x)),
                        + c.tl(&y, &c.lv(&x, &a)),
                        - c.s(&c.tl(&x, &a), &y),
                        - c.la(&c.tr(&x, &a), &y),
                        + c.ra(&a, &c.c(&x, &y)),
                        - c.s(&x, &c.tl(&y, &a)),
                        - c.ra(&c.tr(&y, &a), &x)
                    ),
                );
                r.check(
                    "G7",
                    "axy",
                    &t,
                    vsum!(
                        c.tr(&x, &c.rv(&y, &a)),
                        + c.h(&x, &c.la(&a, &y)),
                        - c.tr(&y, &c.rv(&x, &a)),
                        - c.h(&y, &c.la(&a, &x)),
                        - c.rv(&y, &c.tr(&x, &a)),
                        - c.f(&c.tl(&x, &a), &y),
                        + c.rv(&x, &c.tr(&y, &a)),
                        + c.f(&c.tl(&y, &a), &x),
                        - c.o(&a, &c.h(&x, &y)),
                        - c.rv(&c.c(&x, &y), &a)
                    ),
                );
                r.check(
                    "G8",
                    "axy",
                    &t,
                    vsum!(
                        c.c(&x, &c.la(&a, &y)),
                        + c.tl(&x, &c.rv(&y, &a)),
                        - c.c(&y, &c.la(&a, &x)),
                        - c.tl(&y, &c.rv(&x, &a)),
                        - c.s(&c.tl(&x, &a), &y),
                        - c.la(&c.tr(&x, &a), &y),
                        + c.s(&c.tl(&y, &a), &x),
                        + c.la(&c.tr(&y, &a), &x),
                        - c.la(&a, &c.c(&x, &y))
                    ),
                );
            }
        }
    }
    for xi in 0..nv {
        for yi in 0..nv {
            for zi in 0..nv {
                let (x, y, z) = (c.ev(xi), c.ev(yi), c.ev(zi));
                let t = [xi, yi, zi];
                r.check(
                    "G9",
                    "xyz",
                    &t,
                    vsum!(
                        c.tr(&x, &c.f(&y, &z)),
                        + c.h(&x, &c.s(&y, &z)),
                        - c.tr(&z, &c.f(&y, &x)),
                        - c.h(&z, &c.s(&y, &x)),
                        + c.rv(&z, &c.h(&y, &x)),
                        + c.f(&c.c(&y, &x), &z),
                        - c.rv(&x, &c.h(&y, &z)),
                        - c.f(&c.c(&y, &z), &x),
                        - c.lv(&y, &c.h(&x, &z)),
                        - c.f(&y, &c.c(&x, &z))
                    ),
                );
                r.check(
                    "G10",
                    "xyz",
                    &t,
                    vsum!(
                        c.c(&x, &c.s(&y, &z)),
                        + c.tl(&x, &c.f(&y, &z)),
                        - c.c(&z, &c.s(&y, &x)),
                        - c.tl(&z, &c.f(&y, &x)),
                        + c.s(&c.c(&y, &x), &z),
                        + c.la(&c.h(&y, &x), &z),
                        - c.s(&c.c(&y, &z), &x),
                        - c.la(&c.h(&y, &z), &x),
                        - c.s(&y, &c.c(&x, &z)),
                        - c.ra(&c.h(&x, &z), &y)
                    ),
                );
            }
        }
    }
    Ok(r)
}

/// Whether a report has any G0 failure (an `N*` or `L*` label).
pub fn g0_failed(r: &ValidationReport) -> bool {
    r.failed_conditions().iter().any(|c| c.starts_with('N') || c.starts_with('L'))
}
