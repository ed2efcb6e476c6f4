//! Structure-constant tensors: `m(e_i, e_j) = Σ_k c[i][j][k] e_k`.

use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Vector};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BilinearMap {
    d1: usize,
    d2: usize,
    out: usize,
    data: Vec<Scalar>,
}

impl BilinearMap {
    pub fn zero(d1: usize, d2: usize, out: usize) -> Self {
        BilinearMap { d1, d2, out, data: vec![Scalar::zero(); d1 * d2 * out] }
    }

    /// Build from sparse `(i, j, k, c)` entries; repeated entries accumulate.
    pub fn from_entries(d1: usize, d2: usize, out: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut m = Self::zero(d1, d2, out);
        for (i, j, k, c) in entries {
            if *i >= d1 || *j >= d2 || *k >= out {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({i},{j},{k}) outside dims ({d1},{d2},{out})"
                )));
            }
            m.add_to(*i, *j, *k, c);
        }
        Ok(m)
    }

    /// Build from a function giving the image of each basis pair.
    pub fn from_fn(d1: usize, d2: usize, out: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let mut m = Self::zero(d1, d2, out);
        for i in 0..d1 {
            for j in 0..d2 {
                let v = f(i, j);
                assert_eq!(v.len(), out, "from_fn: image has wrong length");
                m.set_image(i, j, &v);
            }
        }
        m
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.d1, self.d2, self.out)
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.d2 + j) * self.out + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let n = self.idx(i, j, k);
        self.data[n] = c;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, c: &Scalar) {
        let n = self.idx(i, j, k);
        self.data[n] += c;
    }

    pub fn set_image(&mut self, i: usize, j: usize, v: &Vector) {
        for k in 0..self.out {
            self.set(i, j, k, v[k].clone());
        }
    }

    pub fn eval_basis(&self, i: usize, j: usize) -> Vector {
        let start = self.idx(i, j, 0);
        Vector::new(self.data[start..start + self.out].to_vec())
    }

    pub fn eval(&self, u: &Vector, v: &Vector) -> Vector {
        assert_eq!(u.len(), self.d1, "bilinear eval: first argument dimension");
        assert_eq!(v.len(), self.d2, "bilinear eval: second argument dimension");
        let mut r = Vector::zero(self.out);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let s = ui * vj;
                r.axpy(&s, &self.eval_basis(i, j));
            }
        }
        r
    }

    /// Checked variant of [`BilinearMap::eval`].
    pub fn try_eval(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        if u.len() != self.d1 || v.len() != self.d2 {
            return Err(Error::DimensionMismatch(format!(
                "arguments of length ({},{}) for map with input dims ({},{})",
                u.len(),
                v.len(),
                self.d1,
                self.d2
            )));
        }
        Ok(self.eval(u, v))
    }

    /// The linear map `v ↦ m(u, v)`.
    pub fn left_operator(&self, u: &Vector) -> LinearMap {
        let cols: Vec<Vector> = (0..self.d2).map(|j| self.eval(u, &Vector::basis(self.d2, j))).collect();
        LinearMap::from_columns(self.out, &cols)
    }

    /// The linear map `u ↦ m(u, v)`.
    pub fn right_operator(&self, v: &Vector) -> LinearMap {
        let cols: Vec<Vector> = (0..self.d1).map(|i| self.eval(&Vector::basis(self.d1, i), v)).collect();
        LinearMap::from_columns(self.out, &cols)
    }

    /// `(u, v) ↦ m(v, u)`
    pub fn swapped(&self) -> BilinearMap {
        BilinearMap::from_fn(self.d2, self.d1, self.out, |i, j| self.eval_basis(j, i))
    }

    pub fn scale(&self, s: &Scalar) -> BilinearMap {
        BilinearMap { data: self.data.iter().map(|x| x * s).collect(), ..self.clone() }
    }

    pub fn add(&self, other: &BilinearMap) -> BilinearMap {
        assert_eq!(self.dims(), other.dims(), "add: dims mismatch");
        BilinearMap { data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(), ..self.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries as `(i, j, k, c)`, in index order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.d1 {
            for j in 0..self.d2 {
                for k in 0..self.out {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }
}
