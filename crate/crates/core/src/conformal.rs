//! The quadratic λ-bracket of a product/bracket pair, used as an independent
//! check of the GD axioms:
//!
//! ```text
//! [a_λ b] = ∂(b∘a) + λ(b∗a) + [b,a],    b∗a = a∘b + b∘a
//! ```
//!
//! Values live in `K[∂]V ⊗ K[λ, μ]`: polynomials in three commuting symbols
//! with vector coefficients. `∂` acts on the result, `λ` and `μ` are formal
//! parameters. The bracket extends by sesquilinearity,
//!
//! ```text
//! [∂^i λ^j μ^l u _ν ∂^i′ λ^j′ μ^l′ v] = λ^(j+j′) μ^(l+l′) (−ν)^i (ν+∂)^i′ [u_ν v]
//! ```
//!
//! where the spectral parameter `ν` is any linear form in `∂, λ, μ`. Skew
//! symmetry is `[b_λ a] = −[a_{−λ−∂} b]` and Jacobi is
//! `[a_λ [b_μ c]] = [[a_λ b]_{λ+μ} c] + [b_μ [a_λ c]]`, both compared
//! coefficient by coefficient.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebras::AlgebraData;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::report::ValidationReport;
use crate::scalar::Scalar;
use crate::tensor::BilinearMap;

/// Largest total degree in `∂, λ, μ` the engine represents.
pub const DEGREE_BOUND: u32 = 8;

/// Exponents of `(∂, λ, μ)`.
pub type Monomial = (u32, u32, u32);

fn degree(m: &Monomial) -> u32 {
    m.0 + m.1 + m.2
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    (a.0 + b.0, a.1 + b.1, a.2 + b.2)
}

/// A polynomial in `∂, λ, μ` with scalar coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct ScalarPoly(BTreeMap<Monomial, Scalar>);

impl ScalarPoly {
    fn one() -> Self {
        ScalarPoly(BTreeMap::from([((0, 0, 0), Scalar::one())]))
    }

    fn linear(s: &Spectral) -> Self {
        let mut m = BTreeMap::new();
        for (mono, c) in [((1, 0, 0), &s.d), ((0, 1, 0), &s.lambda), ((0, 0, 1), &s.mu)] {
            if !c.is_zero() {
                m.insert(mono, c.clone());
            }
        }
        ScalarPoly(m)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        let mut out: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                let m = mono_mul(a, b);
                check_degree(&m)?;
                *out.entry(m).or_insert_with(Scalar::zero) += x * y;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(ScalarPoly(out))
    }

    fn pow(&self, e: u32) -> Result<Self> {
        let mut out = ScalarPoly::one();
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }
}

fn check_degree(m: &Monomial) -> Result<()> {
    if degree(m) > DEGREE_BOUND {
        return Err(Error::DegreeBound(degree(m), DEGREE_BOUND));
    }
    Ok(())
}

/// The spectral parameter `ν = d·∂ + lambda·λ + mu·μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectral {
    pub d: Scalar,
    pub lambda: Scalar,
    pub mu: Scalar,
}

impl Spectral {
    pub fn new(d: Scalar, lambda: Scalar, mu: Scalar) -> Self {
        Spectral { d, lambda, mu }
    }

    pub fn lambda() -> Self {
        Spectral::new(Scalar::zero(), Scalar::one(), Scalar::zero())
    }

    pub fn mu() -> Self {
        Spectral::new(Scalar::zero(), Scalar::zero(), Scalar::one())
    }

    pub fn lambda_plus_mu() -> Self {
        Spectral::new(Scalar::zero(), Scalar::one(), Scalar::one())
    }

    /// `−λ−∂`
    pub fn skew() -> Self {
        Spectral::new(-Scalar::one(), -Scalar::one(), Scalar::zero())
    }
}

/// An element of `K[∂]V ⊗ K[λ, μ]`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyVector {
    dim: usize,
    terms: BTreeMap<Monomial, Vector>,
}

impl PolyVector {
    pub fn zero(dim: usize) -> Self {
        PolyVector { dim, terms: BTreeMap::new() }
    }

    pub fn from_vector(v: Vector) -> Self {
        PolyVector::monomial((0, 0, 0), v).expect("degree 0")
    }

    pub fn monomial(m: Monomial, v: Vector) -> Result<Self> {
        check_degree(&m)?;
        let mut p = PolyVector::zero(v.len());
        p.add_term(m, &v);
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Vector {
        self.terms.get(&m).cloned().unwrap_or_else(|| Vector::zero(self.dim))
    }

    /// Nonzero terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Vector)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(degree).max()
    }

    fn add_term(&mut self, m: Monomial, v: &Vector) {
        let e = self.terms.entry(m).or_insert_with(|| Vector::zero(v.len()));
        *e = &*e + v;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &PolyVector) -> PolyVector {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(*m, v);
        }
        out
    }

    pub fn sub(&self, other: &PolyVector) -> PolyVector {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> PolyVector {
        let mut out = PolyVector::zero(self.dim);
        for (m, v) in &self.terms {
            out.add_term(*m, &v.scale(s));
        }
        out
    }

    fn mul_poly(&self, p: &ScalarPoly) -> Result<PolyVector> {
        let mut out = PolyVector::zero(self.dim);
        for (m, v) in &self.terms {
            for (n, c) in &p.0 {
                let mn = mono_mul(m, n);
                check_degree(&mn)?;
                out.add_term(mn, &v.scale(c));
            }
        }
        Ok(out)
    }

    /// Multiplies by `∂^i λ^j μ^l`.
    pub fn shift(&self, m: Monomial) -> Result<PolyVector> {
        self.mul_poly(&ScalarPoly(BTreeMap::from([(m, Scalar::one())])))
    }
}

impl fmt::Debug for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j, l), v)| {
                let mut s = String::new();
                for (sym, e) in [("∂", i), ("λ", j), ("μ", l)] {
                    match e {
                        0 => {}
                        1 => s.push_str(sym),
                        _ => s.push_str(&format!("{sym}^{e}")),
                    }
                }
                if s.is_empty() {
                    v.to_string()
                } else {
                    format!("{s}·{v}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The λ-bracket built from structure constants, without assuming they
/// satisfy any axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticLambdaBracket {
    product: BilinearMap,
    bracket: BilinearMap,
    star: BilinearMap,
}

impl QuadraticLambdaBracket {
    pub fn new(data: &AlgebraData) -> Self {
        let n = data.dim();
        let p = &data.product;
        let star = BilinearMap::from_fn(n, n, n, |i, j| &p.eval_basis(i, j) + &p.eval_basis(j, i));
        QuadraticLambdaBracket { product: p.clone(), bracket: data.bracket.clone(), star }
    }

    pub fn dim(&self) -> usize {
        self.product.dims().0
    }

    pub fn e(&self, i: usize) -> PolyVector {
        PolyVector::from_vector(Vector::basis(self.dim(), i))
    }

    /// `[u_ν v]` for plain vectors: `∂(v∘u) + ν(v∗u) + [v,u]`.
    fn base(&self, u: &Vector, v: &Vector, nu: &ScalarPoly) -> Result<PolyVector> {
        let d = PolyVector::monomial((1, 0, 0), self.product.eval(v, u))?;
        let l = PolyVector::from_vector(self.star.eval(v, u)).mul_poly(nu)?;
        let c = PolyVector::from_vector(self.bracket.eval(v, u));
        Ok(d.add(&l).add(&c))
    }

    /// `[u_ν v]` extended by sesquilinearity.
    pub fn lambda_bracket(&self, u: &PolyVector, v: &PolyVector, nu: &Spectral) -> Result<PolyVector> {
        let n = self.dim();
        if u.dim() != n || v.dim() != n {
            return Err(Error::DimensionMismatch(format!("λ-bracket on dim {n}, got {} and {}", u.dim(), v.dim())));
        }
        let nu_p = ScalarPoly::linear(nu);
        let neg_nu = ScalarPoly(nu_p.0.iter().map(|(m, c)| (*m, -c)).collect());
        let mut nu_d = nu_p.clone();
        let e = nu_d.0.entry((1, 0, 0)).or_insert_with(Scalar::zero);
        *e += Scalar::one();
        nu_d.0.retain(|_, c| !c.is_zero());
        let mut out = PolyVector::zero(n);
        for ((i, j, l), x) in &u.terms {
            for ((i2, j2, l2), y) in &v.terms {
                let factor = neg_nu.pow(*i)?.mul(&nu_d.pow(*i2)?)?;
                let term = self.base(x, y, &nu_p)?.mul_poly(&factor)?.shift((0, j + j2, l + l2))?;
                out = out.add(&term);
            }
        }
        Ok(out)
    }

    /// `[b_λ a] + [a_{−λ−∂} b]`
    pub fn skew_residual(&self, a: &PolyVector, b: &PolyVector) -> Result<PolyVector> {
        Ok(self
            .lambda_bracket(b, a, &Spectral::lambda())?
            .add(&self.lambda_bracket(a, b, &Spectral::skew())?))
    }

    /// `[a_λ [b_μ c]] − [[a_λ b]_{λ+μ} c] − [b_μ [a_λ c]]`
    pub fn jacobi_residual(&self, a: &PolyVector, b: &PolyVector, c: &PolyVector) -> Result<PolyVector> {
        let (l, m, lm) = (Spectral::lambda(), Spectral::mu(), Spectral::lambda_plus_mu());
        let lhs = self.lambda_bracket(a, &self.lambda_bracket(b, c, &m)?, &l)?;
        let r1 = self.lambda_bracket(&self.lambda_bracket(a, b, &l)?, c, &lm)?;
        let r2 = self.lambda_bracket(b, &self.lambda_bracket(a, c, &l)?, &m)?;
        Ok(lhs.sub(&r1).sub(&r2))
    }
}

/// Residual as a flat vector: the coefficient of the lowest nonzero monomial.
fn witness(p: &PolyVector) -> Vector {
    p.terms().next().map(|(_, v)| v.clone()).unwrap_or_else(|| Vector::zero(p.dim()))
}

/// `SKEW` on basis pairs.
pub fn check_conformal_skew(b: &QuadraticLambdaBracket) -> Result<ValidationReport> {
    let n = b.dim();
    let mut r = ValidationReport::new();
    for i in 0..n {
        for j in 0..n {
            r.check("SKEW", "ab", &[i, j], witness(&b.skew_residual(&b.e(i), &b.e(j))?));
        }
    }
    Ok(r)
}

/// `JACOBI` on basis triples.
pub fn check_conformal_jacobi(b: &QuadraticLambdaBracket) -> Result<ValidationReport> {
    let n = b.dim();
    let mut r = ValidationReport::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                r.check("JACOBI", "abc", &[i, j, k], witness(&b.jacobi_residual(&b.e(i), &b.e(j), &b.e(k))?));
            }
        }
    }
    Ok(r)
}

/// Both checks on the λ-bracket of `data`.
pub fn check_conformal(data: &AlgebraData) -> Result<ValidationReport> {
    let b = QuadraticLambdaBracket::new(data);
    let mut r = check_conformal_skew(&b)?;
    r.merge(check_conformal_jacobi(&b)?);
    Ok(r)
}
