//! Extending datums of a GD bialgebra `A` by a vector space `V`, the unified
//! product `A♮V` they define, and equivalence of datums.
//!
//! Tensor conventions (first two dims are the argument spaces):
//!
//! | map | dims | meaning |
//! |---|---|---|
//! | `l_a`, `r_a` | (A, V, V) | `l_A(a)x`, `r_A(a)x` |
//! | `l_v`, `r_v` | (V, A, A) | `l_V(x)a`, `r_V(x)a` |
//! | `f` | (V, V, A) | `f(x, y)` |
//! | `star` | (V, V, V) | `x∗y` |
//! | `triangle_left` | (V, A, V) | `x◁a` |
//! | `triangle_right` | (V, A, A) | `x▷a` |
//! | `h` | (V, V, A) | `h(x, y)` |
//! | `curly` | (V, V, V) | `{x, y}` |

mod conditions;
mod equivalence;
mod product;

pub use conditions::*;
pub use equivalence::*;
pub use product::*;

use crate::error::{Error, Result};
use crate::tensor::BilinearMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieExtendingDatum {
    pub triangle_left: BilinearMap,
    pub triangle_right: BilinearMap,
    pub h: BilinearMap,
    pub curly: BilinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovExtendingDatum {
    pub l_a: BilinearMap,
    pub r_a: BilinearMap,
    pub l_v: BilinearMap,
    pub r_v: BilinearMap,
    pub f: BilinearMap,
    pub star: BilinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdExtendingDatum {
    pub novikov: NovikovExtendingDatum,
    pub lie: LieExtendingDatum,
}

fn expect(m: &BilinearMap, want: (usize, usize, usize), name: &str) -> Result<()> {
    if m.dims() == want {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{name} has dims {:?}, expected {want:?}", m.dims())))
    }
}

impl LieExtendingDatum {
    pub fn zero(na: usize, nv: usize) -> Self {
        LieExtendingDatum {
            triangle_left: BilinearMap::zero(nv, na, nv),
            triangle_right: BilinearMap::zero(nv, na, na),
            h: BilinearMap::zero(nv, nv, na),
            curly: BilinearMap::zero(nv, nv, nv),
        }
    }

    /// `(dim A, dim V)` after checking that all four tensors agree.
    pub fn dims(&self) -> Result<(usize, usize)> {
        let (nv, na, _) = self.triangle_left.dims();
        expect(&self.triangle_left, (nv, na, nv), "◁")?;
        expect(&self.triangle_right, (nv, na, na), "▷")?;
        expect(&self.h, (nv, nv, na), "h")?;
        expect(&self.curly, (nv, nv, nv), "{·,·}")?;
        Ok((na, nv))
    }
}

impl NovikovExtendingDatum {
    pub fn zero(na: usize, nv: usize) -> Self {
        NovikovExtendingDatum {
            l_a: BilinearMap::zero(na, nv, nv),
            r_a: BilinearMap::zero(na, nv, nv),
            l_v: BilinearMap::zero(nv, na, na),
            r_v: BilinearMap::zero(nv, na, na),
            f: BilinearMap::zero(nv, nv, na),
            star: BilinearMap::zero(nv, nv, nv),
        }
    }

    pub fn dims(&self) -> Result<(usize, usize)> {
        let (na, nv, _) = self.l_a.dims();
        expect(&self.l_a, (na, nv, nv), "l_A")?;
        expect(&self.r_a, (na, nv, nv), "r_A")?;
        expect(&self.l_v, (nv, na, na), "l_V")?;
        expect(&self.r_v, (nv, na, na), "r_V")?;
        expect(&self.f, (nv, nv, na), "f")?;
        expect(&self.star, (nv, nv, nv), "∗")?;
        Ok((na, nv))
    }
}

impl GdExtendingDatum {
    pub fn zero(na: usize, nv: usize) -> Self {
        GdExtendingDatum { novikov: NovikovExtendingDatum::zero(na, nv), lie: LieExtendingDatum::zero(na, nv) }
    }

    pub fn dims(&self) -> Result<(usize, usize)> {
        let a = self.novikov.dims()?;
        let b = self.lie.dims()?;
        if a != b {
            return Err(Error::DimensionMismatch(format!(
                "Novikov part has dims {a:?}, Lie part has dims {b:?}"
            )));
        }
        Ok(a)
    }

    /// The ten tensors in the order `l_A, r_A, l_V, r_V, f, ∗, ◁, ▷, h, {·,·}`.
    pub fn tensors(&self) -> [(&'static str, &BilinearMap); 10] {
        let n = &self.novikov;
        let l = &self.lie;
        [
            ("l_A", &n.l_a),
            ("r_A", &n.r_a),
            ("l_V", &n.l_v),
            ("r_V", &n.r_v),
            ("f", &n.f),
            ("star", &n.star),
            ("triangle_left", &l.triangle_left),
            ("triangle_right", &l.triangle_right),
            ("h", &l.h),
            ("curly", &l.curly),
        ]
    }
}

/// Basis names for `V`: `x` when one-dimensional, otherwise `x1, x2, …`.
pub fn v_names(nv: usize) -> Vec<String> {
    if nv == 1 {
        vec!["x".to_string()]
    } else {
        (1..=nv).map(|i| format!("x{i}")).collect()
    }
}
