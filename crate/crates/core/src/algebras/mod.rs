//! Lie, Novikov and Gel'fand-Dorfman structures on a finite basis, with
//! axiom checkers that report the first failing basis tuple per identity.
//!
//! Identity labels used in reports:
//! `LIE-ALT` alternation, `LIE-JACOBI`, `NOV-LSYM` left-symmetric associator,
//! `NOV-RCOMM` right commutativity, `GD-COMPAT` the five-term compatibility.

mod modules;
mod structure;

pub use modules::*;
pub use structure::*;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::report::ValidationReport;
use crate::tensor::BilinearMap;

/// Unvalidated product/bracket pair on a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub names: Vec<String>,
    pub product: BilinearMap,
    pub bracket: BilinearMap,
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn square_dim(m: &BilinearMap, what: &str) -> Result<usize> {
    let (a, b, c) = m.dims();
    if a == b && b == c {
        Ok(a)
    } else {
        Err(Error::DimensionMismatch(format!("{what} has dims ({a},{b},{c})")))
    }
}

impl AlgebraData {
    pub fn new(names: Vec<String>, product: BilinearMap, bracket: BilinearMap) -> Result<Self> {
        let n = square_dim(&product, "product")?;
        let m = square_dim(&bracket, "bracket")?;
        if n != m || names.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "product dim {n}, bracket dim {m}, {} basis names",
                names.len()
            )));
        }
        Ok(AlgebraData { names, product, bracket })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn e(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }
}

fn mul(m: &BilinearMap, u: &Vector, v: &Vector) -> Vector {
    m.eval(u, v)
}

pub fn check_lie(bracket: &BilinearMap) -> Result<ValidationReport> {
    let n = square_dim(bracket, "bracket")?;
    let mut r = ValidationReport::new();
    let e = |i| Vector::basis(n, i);
    for i in 0..n {
        for j in i..n {
            let res = if i == j {
                bracket.eval_basis(i, i)
            } else {
                &bracket.eval_basis(i, j) + &bracket.eval_basis(j, i)
            };
            r.check("LIE-ALT", "ab", &[i, j], res);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(i), e(j), e(k));
                let lhs = mul(bracket, &x, &mul(bracket, &y, &z));
                let t1 = mul(bracket, &mul(bracket, &x, &y), &z);
                let t2 = mul(bracket, &y, &mul(bracket, &x, &z));
                r.check("LIE-JACOBI", "abc", &[i, j, k], &(&lhs - &t1) - &t2);
            }
        }
    }
    Ok(r)
}

pub fn check_novikov(product: &BilinearMap) -> Result<ValidationReport> {
    let n = square_dim(product, "product")?;
    let mut r = ValidationReport::new();
    let e = |i| Vector::basis(n, i);
    let o = |u: &Vector, v: &Vector| mul(product, u, v);
    let assoc = |a: &Vector, b: &Vector, c: &Vector| &o(&o(a, b), c) - &o(a, &o(b, c));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (e(i), e(j), e(k));
                r.check("NOV-LSYM", "abc", &[i, j, k], &assoc(&a, &b, &c) - &assoc(&b, &a, &c));
                r.check("NOV-RCOMM", "abc", &[i, j, k], &o(&o(&a, &b), &c) - &o(&o(&a, &c), &b));
            }
        }
    }
    Ok(r)
}

/// `[a,b∘c] − [c,b∘a] + [b,a]∘c − [b,c]∘a − b∘[a,c]` on basis triples.
pub fn check_compatibility(product: &BilinearMap, bracket: &BilinearMap) -> Result<ValidationReport> {
    let n = square_dim(product, "product")?;
    if square_dim(bracket, "bracket")? != n {
        return Err(Error::DimensionMismatch("product and bracket dims differ".into()));
    }
    let mut r = ValidationReport::new();
    let e = |i| Vector::basis(n, i);
    let o = |u: &Vector, v: &Vector| mul(product, u, v);
    let br = |u: &Vector, v: &Vector| mul(bracket, u, v);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (e(i), e(j), e(k));
                let mut res = br(&a, &o(&b, &c));
                res = &res - &br(&c, &o(&b, &a));
                res = &res + &o(&br(&b, &a), &c);
                res = &res - &o(&br(&b, &c), &a);
                res = &res - &o(&b, &br(&a, &c));
                r.check("GD-COMPAT", "abc", &[i, j, k], res);
            }
        }
    }
    Ok(r)
}

/// Novikov + Lie + compatibility.
pub fn check_gd(data: &AlgebraData) -> ValidationReport {
    let mut r = check_novikov(&data.product).expect("dims validated by AlgebraData");
    r.merge(check_lie(&data.bracket).expect("dims validated by AlgebraData"));
    r.merge(check_compatibility(&data.product, &data.bracket).expect("dims validated by AlgebraData"));
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    bracket: BilinearMap,
}

impl LieAlgebra {
    pub fn new(names: Vec<String>, bracket: BilinearMap) -> Result<Self> {
        let n = square_dim(&bracket, "bracket")?;
        if names.len() != n {
            return Err(Error::DimensionMismatch(format!("{} names for dim {n}", names.len())));
        }
        let r = check_lie(&bracket)?;
        if !r.passed() {
            return Err(Error::InvalidAlgebra(r));
        }
        Ok(LieAlgebra { names, bracket })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn bracket(&self) -> &BilinearMap {
        &self.bracket
    }

    pub fn br(&self, u: &Vector, v: &Vector) -> Vector {
        self.bracket.eval(u, v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovAlgebra {
    names: Vec<String>,
    product: BilinearMap,
}

impl NovikovAlgebra {
    pub fn new(names: Vec<String>, product: BilinearMap) -> Result<Self> {
        let n = square_dim(&product, "product")?;
        if names.len() != n {
            return Err(Error::DimensionMismatch(format!("{} names for dim {n}", names.len())));
        }
        let r = check_novikov(&product)?;
        if !r.passed() {
            return Err(Error::InvalidAlgebra(r));
        }
        Ok(NovikovAlgebra { names, product })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn product(&self) -> &BilinearMap {
        &self.product
    }

    pub fn o(&self, u: &Vector, v: &Vector) -> Vector {
        self.product.eval(u, v)
    }
}

/// A validated Gel'fand-Dorfman bialgebra `(A, ∘, [·,·])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdBialgebra {
    data: AlgebraData,
}

impl GdBialgebra {
    pub fn new(data: AlgebraData) -> Result<Self> {
        let r = check_gd(&data);
        if !r.passed() {
            return Err(Error::InvalidAlgebra(r));
        }
        Ok(GdBialgebra { data })
    }

    pub fn dim(&self) -> usize {
        self.data.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.data.names
    }

    pub fn data(&self) -> &AlgebraData {
        &self.data
    }

    pub fn into_data(self) -> AlgebraData {
        self.data
    }

    pub fn product(&self) -> &BilinearMap {
        &self.data.product
    }

    pub fn bracket(&self) -> &BilinearMap {
        &self.data.bracket
    }

    pub fn e(&self, i: usize) -> Vector {
        self.data.e(i)
    }

    pub fn o(&self, u: &Vector, v: &Vector) -> Vector {
        self.data.product.eval(u, v)
    }

    pub fn br(&self, u: &Vector, v: &Vector) -> Vector {
        self.data.bracket.eval(u, v)
    }

    pub fn lie(&self) -> LieAlgebra {
        LieAlgebra { names: self.data.names.clone(), bracket: self.data.bracket.clone() }
    }

    pub fn novikov(&self) -> NovikovAlgebra {
        NovikovAlgebra { names: self.data.names.clone(), product: self.data.product.clone() }
    }
}
