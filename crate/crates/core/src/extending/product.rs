//! Unified, crossed and bicrossed products, and the inverse direction:
//! reading an extending datum off an algebra with a chosen complement.
//!
//! In `A♮V` the basis is `a_1, …, a_n, x_1, …, x_m` and
//!
//! ```text
//! (a,x)∘(b,y) = (a∘b + l_V(x)b + r_V(y)a + f(x,y), x∗y + l_A(a)y + r_A(b)x)
//! [(a,x),(b,y)] = ([a,b] + x▷b − y▷a + h(x,y), {x,y} + x◁b − y◁a)
//! ```

use std::collections::BTreeSet;

use crate::algebras::{AlgebraData, GdBialgebra};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::tensor::BilinearMap;

use super::{check_gd_extending, v_names, GdExtendingDatum, LieExtendingDatum, NovikovExtendingDatum};

/// The structure constants of `A♮V` without validating the datum.
pub fn unified_product_data(a: &GdBialgebra, d: &GdExtendingDatum) -> Result<AlgebraData> {
    let (na, nv) = d.dims()?;
    if a.dim() != na {
        return Err(Error::DimensionMismatch(format!("algebra dim {}, datum expects dim A = {na}", a.dim())));
    }
    let n = &d.novikov;
    let l = &d.lie;
    let zv = Vector::zero(nv);
    let product = BilinearMap::from_fn(na + nv, na + nv, na + nv, |i, j| match (i < na, j < na) {
        (true, true) => a.product().eval_basis(i, j).concat(&zv),
        (true, false) => n.r_v.eval_basis(j - na, i).concat(&n.l_a.eval_basis(i, j - na)),
        (false, true) => n.l_v.eval_basis(i - na, j).concat(&n.r_a.eval_basis(j, i - na)),
        (false, false) => n.f.eval_basis(i - na, j - na).concat(&n.star.eval_basis(i - na, j - na)),
    });
    let bracket = BilinearMap::from_fn(na + nv, na + nv, na + nv, |i, j| match (i < na, j < na) {
        (true, true) => a.bracket().eval_basis(i, j).concat(&zv),
        (true, false) => (-&l.triangle_right.eval_basis(j - na, i)).concat(&-&l.triangle_left.eval_basis(j - na, i)),
        (false, true) => l.triangle_right.eval_basis(i - na, j).concat(&l.triangle_left.eval_basis(i - na, j)),
        (false, false) => l.h.eval_basis(i - na, j - na).concat(&l.curly.eval_basis(i - na, j - na)),
    });
    let mut names = a.names().to_vec();
    names.extend(v_names(nv));
    AlgebraData::new(names, product, bracket)
}

/// `A♮V`, after checking G0–G10.
pub fn unified_product(a: &GdBialgebra, d: &GdExtendingDatum) -> Result<GdBialgebra> {
    let report = check_gd_extending(a, d)?;
    if !report.passed() {
        return Err(Error::InvalidDatum(report));
    }
    GdBialgebra::new(unified_product_data(a, d)?)
}

/// Data of a crossed product: `A` acts trivially on `V` (`l_A = r_A = ◁ = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedProductData {
    pub l_v: BilinearMap,
    pub r_v: BilinearMap,
    pub f: BilinearMap,
    pub triangle_right: BilinearMap,
    pub h: BilinearMap,
    pub star: BilinearMap,
    pub curly: BilinearMap,
}

impl CrossedProductData {
    pub fn to_datum(&self) -> Result<GdExtendingDatum> {
        let (nv, na, _) = self.l_v.dims();
        let d = GdExtendingDatum {
            novikov: NovikovExtendingDatum {
                l_a: BilinearMap::zero(na, nv, nv),
                r_a: BilinearMap::zero(na, nv, nv),
                l_v: self.l_v.clone(),
                r_v: self.r_v.clone(),
                f: self.f.clone(),
                star: self.star.clone(),
            },
            lie: LieExtendingDatum {
                triangle_left: BilinearMap::zero(nv, na, nv),
                triangle_right: self.triangle_right.clone(),
                h: self.h.clone(),
                curly: self.curly.clone(),
            },
        };
        d.dims()?;
        Ok(d)
    }
}

/// A matched pair of GD bialgebras together with the algebra structure on `V`
/// (`f = h = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub l_a: BilinearMap,
    pub r_a: BilinearMap,
    pub triangle_left: BilinearMap,
    pub l_v: BilinearMap,
    pub r_v: BilinearMap,
    pub triangle_right: BilinearMap,
    pub star: BilinearMap,
    pub curly: BilinearMap,
}

impl MatchedPairData {
    pub fn to_datum(&self) -> Result<GdExtendingDatum> {
        let (na, nv, _) = self.l_a.dims();
        let d = GdExtendingDatum {
            novikov: NovikovExtendingDatum {
                l_a: self.l_a.clone(),
                r_a: self.r_a.clone(),
                l_v: self.l_v.clone(),
                r_v: self.r_v.clone(),
                f: BilinearMap::zero(nv, nv, na),
                star: self.star.clone(),
            },
            lie: LieExtendingDatum {
                triangle_left: self.triangle_left.clone(),
                triangle_right: self.triangle_right.clone(),
                h: BilinearMap::zero(nv, nv, na),
                curly: self.curly.clone(),
            },
        };
        d.dims()?;
        Ok(d)
    }
}

/// The crossed product; `A` is checked to be an ideal of the result.
pub fn crossed_product(a: &GdBialgebra, data: &CrossedProductData) -> Result<GdBialgebra> {
    let e = unified_product(a, &data.to_datum()?)?;
    let a_idx: Vec<usize> = (0..a.dim()).collect();
    if !is_ideal(&e, &a_idx) {
        return Err(Error::NotASubalgebra("A is not an ideal of the crossed product".into()));
    }
    Ok(e)
}

/// The bicrossed product; both `A` and `V` are checked to be subalgebras.
pub fn bicrossed_product(a: &GdBialgebra, data: &MatchedPairData) -> Result<GdBialgebra> {
    let e = unified_product(a, &data.to_datum()?)?;
    let na = a.dim();
    let a_idx: Vec<usize> = (0..na).collect();
    let v_idx: Vec<usize> = (na..e.dim()).collect();
    if !is_subalgebra(&e, &a_idx) {
        return Err(Error::NotASubalgebra("A is not a subalgebra of the bicrossed product".into()));
    }
    if !is_subalgebra(&e, &v_idx) {
        return Err(Error::NotASubalgebra("V is not a subalgebra of the bicrossed product".into()));
    }
    Ok(e)
}

fn supported_on(v: &Vector, idx: &BTreeSet<usize>) -> bool {
    v.iter().enumerate().all(|(k, c)| c.is_zero() || idx.contains(&k))
}

/// Whether the span of the basis vectors `idx` is closed under ∘ and [·,·].
pub fn is_subalgebra(e: &GdBialgebra, idx: &[usize]) -> bool {
    let set: BTreeSet<usize> = idx.iter().copied().collect();
    idx.iter().all(|&i| {
        idx.iter().all(|&j| {
            supported_on(&e.product().eval_basis(i, j), &set) && supported_on(&e.bracket().eval_basis(i, j), &set)
        })
    })
}

/// Whether the span of `idx` is a two-sided ideal for ∘ and an ideal for [·,·].
pub fn is_ideal(e: &GdBialgebra, idx: &[usize]) -> bool {
    let set: BTreeSet<usize> = idx.iter().copied().collect();
    idx.iter().all(|&i| {
        (0..e.dim()).all(|j| {
            supported_on(&e.product().eval_basis(i, j), &set)
                && supported_on(&e.product().eval_basis(j, i), &set)
                && supported_on(&e.bracket().eval_basis(i, j), &set)
        })
    })
}

/// Relabels the basis so that new basis vector `k` is old basis vector `order[k]`.
pub fn permute_basis(e: &GdBialgebra, order: &[usize]) -> Result<GdBialgebra> {
    let n = e.dim();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::DimensionMismatch(format!("{order:?} is not a permutation of 0..{n}")));
    }
    let mut pos = vec![0; n];
    for (k, &i) in order.iter().enumerate() {
        pos[i] = k;
    }
    let remap = |v: Vector| {
        let mut out = Vector::zero(n);
        for (i, c) in v.into_coords().into_iter().enumerate() {
            out.set(pos[i], c);
        }
        out
    };
    let product = BilinearMap::from_fn(n, n, n, |i, j| remap(e.product().eval_basis(order[i], order[j])));
    let bracket = BilinearMap::from_fn(n, n, n, |i, j| remap(e.bracket().eval_basis(order[i], order[j])));
    let names = order.iter().map(|&i| e.names()[i].clone()).collect();
    GdBialgebra::new(AlgebraData::new(names, product, bracket)?)
}

/// Splits `E = A ⊕ V` along coordinate subspaces and reads off `A` and the
/// datum with `E ≅ A♮V` via `(a, x) ↦ a + x`. `A` must be a subalgebra.
pub fn extract_datum(e: &GdBialgebra, a_idx: &[usize], v_idx: &[usize]) -> Result<(GdBialgebra, GdExtendingDatum)> {
    let n = e.dim();
    let mut all: Vec<usize> = a_idx.iter().chain(v_idx).copied().collect();
    all.sort_unstable();
    if all != (0..n).collect::<Vec<_>>() {
        return Err(Error::DimensionMismatch(format!(
            "A indices {a_idx:?} and V indices {v_idx:?} must partition 0..{n}"
        )));
    }
    if !is_subalgebra(e, a_idx) {
        return Err(Error::NotASubalgebra(format!("span of basis vectors {a_idx:?} is not a subalgebra")));
    }
    let (na, nv) = (a_idx.len(), v_idx.len());
    let pa = |v: &Vector| Vector::new(a_idx.iter().map(|&i| v[i].clone()).collect());
    let pv = |v: &Vector| Vector::new(v_idx.iter().map(|&i| v[i].clone()).collect());
    let o = |i: usize, j: usize| e.product().eval_basis(i, j);
    let br = |i: usize, j: usize| e.bracket().eval_basis(i, j);

    let a_product = BilinearMap::from_fn(na, na, na, |i, j| pa(&o(a_idx[i], a_idx[j])));
    let a_bracket = BilinearMap::from_fn(na, na, na, |i, j| pa(&br(a_idx[i], a_idx[j])));
    let a_names = a_idx.iter().map(|&i| e.names()[i].clone()).collect();
    let a = GdBialgebra::new(AlgebraData::new(a_names, a_product, a_bracket)?)?;

    let (ai, vi) = (|i: usize| a_idx[i], |i: usize| v_idx[i]);
    let d = GdExtendingDatum {
        novikov: NovikovExtendingDatum {
            l_a: BilinearMap::from_fn(na, nv, nv, |i, j| pv(&o(ai(i), vi(j)))),
            r_a: BilinearMap::from_fn(na, nv, nv, |i, j| pv(&o(vi(j), ai(i)))),
            l_v: BilinearMap::from_fn(nv, na, na, |i, j| pa(&o(vi(i), ai(j)))),
            r_v: BilinearMap::from_fn(nv, na, na, |i, j| pa(&o(ai(j), vi(i)))),
            f: BilinearMap::from_fn(nv, nv, na, |i, j| pa(&o(vi(i), vi(j)))),
            star: BilinearMap::from_fn(nv, nv, nv, |i, j| pv(&o(vi(i), vi(j)))),
        },
        lie: LieExtendingDatum {
            triangle_left: BilinearMap::from_fn(nv, na, nv, |i, j| pv(&br(vi(i), ai(j)))),
            triangle_right: BilinearMap::from_fn(nv, na, na, |i, j| pa(&br(vi(i), ai(j)))),
            h: BilinearMap::from_fn(nv, nv, na, |i, j| pa(&br(vi(i), vi(j)))),
            curly: BilinearMap::from_fn(nv, nv, nv, |i, j| pv(&br(vi(i), vi(j)))),
        },
    };
    Ok((a, d))
}
