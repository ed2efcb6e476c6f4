//! Equivalence of flag datums. A witness `(a₀, β)` is the extending-datum
//! witness `λ(x) = a₀`, `μ(x) = βx`; `d` is obtained from `d′` when `p = p′`,
//! `q = q′`, `η = η′` and
//!
//! ```text
//! FD1  S(a) = a₀∘a + βS′(a) − q(a)a₀
//! FD2  T(a) = a∘a₀ + βT′(a) − p(a)a₀
//! FD3  a₁   = a₀∘a₀ + βS′(a₀) + βT′(a₀) + β²a₁′ − k·a₀
//! FD4  k    = βk′ + p(a₀) + q(a₀)
//! FD5  D(a) = βD′(a) + [a₀,a] − η(a)a₀
//! ```
//!
//! Only FD3 is nonlinear in `(a₀, β)`. The solver intersects FD1, FD2, FD4
//! and FD5 into an affine space, and if that space has dimension at most 2
//! it finds rational points of the FD3 quadrics on it: exactly along one
//! free direction, by bounded-height enumeration along the other.

use crate::algebras::GdBialgebra;
use crate::error::{Error, Result};
use crate::extending::EquivalenceWitness;
use crate::linalg::{LinearMap, LinearSystem, SolutionSet, Vector};
use crate::report::ValidationReport;
use crate::scalar::Scalar;

use super::GdFlagDatum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagEquivalenceWitness {
    pub a0: Vector,
    pub beta: Scalar,
}

impl FlagEquivalenceWitness {
    pub fn identity(n: usize) -> Self {
        FlagEquivalenceWitness { a0: Vector::zero(n), beta: Scalar::one() }
    }

    /// `(−a₀/β, 1/β)`; `None` when `β = 0`.
    pub fn inverse(&self) -> Option<Self> {
        let bi = self.beta.recip()?;
        Some(FlagEquivalenceWitness { a0: self.a0.scale(&-&bi), beta: bi })
    }

    /// If `d = apply(d′, w1)` and `d′ = apply(d″, w2)` then
    /// `d = apply(d″, compose(w1, w2))` with `compose = (a₀₁ + β₁a₀₂, β₂β₁)`.
    pub fn compose(w1: &Self, w2: &Self) -> Self {
        FlagEquivalenceWitness { a0: &w1.a0 + &w2.a0.scale(&w1.beta), beta: &w2.beta * &w1.beta }
    }

    pub fn to_extending_witness(&self) -> EquivalenceWitness {
        EquivalenceWitness {
            lambda: LinearMap::from_columns(self.a0.len(), std::slice::from_ref(&self.a0)),
            mu: LinearMap::scalar(1, &self.beta),
        }
    }
}

/// Evaluation of the FD residuals at a candidate `(a₀, β)`.
struct FdSystem<'a> {
    a: &'a GdBialgebra,
    d: &'a GdFlagDatum,
    d2: &'a GdFlagDatum,
}

impl FdSystem<'_> {
    fn n(&self) -> usize {
        self.a.dim()
    }

    fn fd1(&self, a0: &Vector, beta: &Scalar, i: usize) -> Vector {
        let x = self.a.e(i);
        vsum!(self.d.s().column(i), - self.a.o(a0, &x), - self.d2.s().column(i).scale(beta), + a0.scale(&self.d.q()[i]))
    }

    fn fd2(&self, a0: &Vector, beta: &Scalar, i: usize) -> Vector {
        let x = self.a.e(i);
        vsum!(self.d.t().column(i), - self.a.o(&x, a0), - self.d2.t().column(i).scale(beta), + a0.scale(&self.d.p()[i]))
    }

    fn fd3(&self, a0: &Vector, beta: &Scalar) -> Vector {
        vsum!(
            self.d.a1().clone(),
            - self.a.o(a0, a0),
            - self.d2.s().apply(a0).scale(beta),
            - self.d2.t().apply(a0).scale(beta),
            - self.d2.a1().scale(&(beta * beta)),
            + a0.scale(self.d.k())
        )
    }

    fn fd4(&self, a0: &Vector, beta: &Scalar) -> Scalar {
        self.d.k() - &(beta * self.d2.k()) - self.d.p().dot(a0) - self.d.q().dot(a0)
    }

    fn fd5(&self, a0: &Vector, beta: &Scalar, i: usize) -> Vector {
        let x = self.a.e(i);
        vsum!(self.d.d.column(i), - self.d2.d.column(i).scale(beta), - self.a.br(a0, &x), + a0.scale(&self.d.eta[i]))
    }

    /// All residuals that are affine in `(a₀, β)`, flattened.
    fn linear_residuals(&self, u: &Vector) -> Vec<Scalar> {
        let n = self.n();
        let (a0, beta) = (u.slice(0, n), u[n].clone());
        let mut out = Vec::new();
        for i in 0..n {
            out.extend(self.fd1(&a0, &beta, i).into_coords());
            out.extend(self.fd2(&a0, &beta, i).into_coords());
            out.extend(self.fd5(&a0, &beta, i).into_coords());
        }
        out.push(self.fd4(&a0, &beta));
        out
    }

    fn fd3_at(&self, u: &Vector) -> Vector {
        let n = self.n();
        self.fd3(&u.slice(0, n), &u[n])
    }
}

fn gate(d: &GdFlagDatum, d2: &GdFlagDatum) -> [(&'static str, Vector); 3] {
    [("EQ-p", d.p() - d2.p()), ("EQ-q", d.q() - d2.q()), ("EQ-eta", &d.eta - &d2.eta)]
}

fn check_dims(a: &GdBialgebra, d: &GdFlagDatum, d2: &GdFlagDatum) -> Result<()> {
    let (n, n2) = (d.dim()?, d2.dim()?);
    if n != a.dim() || n2 != a.dim() {
        return Err(Error::DimensionMismatch(format!("algebra dim {}, flag datum dims {n} and {n2}", a.dim())));
    }
    Ok(())
}

/// Checks that `d` is obtained from `d′` through `w`. Besides FD1–FD5 the
/// report uses `EQ-p`, `EQ-q`, `EQ-eta` for the functional equalities and
/// `BETA` for `β ≠ 0`.
pub fn check_flag_equivalence(
    a: &GdBialgebra,
    d: &GdFlagDatum,
    d2: &GdFlagDatum,
    w: &FlagEquivalenceWitness,
) -> Result<ValidationReport> {
    check_dims(a, d, d2)?;
    if w.a0.len() != a.dim() {
        return Err(Error::DimensionMismatch(format!("a₀ has length {}", w.a0.len())));
    }
    let mut r = ValidationReport::new();
    for (label, diff) in gate(d, d2) {
        r.check(label, "", &[], diff);
    }
    if w.beta.is_zero() {
        r.check_scalar("BETA", "", &[], Scalar::one());
    }
    let sys = FdSystem { a, d, d2 };
    let (a0, beta) = (&w.a0, &w.beta);
    for i in 0..a.dim() {
        r.check("FD1", "a", &[i], sys.fd1(a0, beta, i));
        r.check("FD2", "a", &[i], sys.fd2(a0, beta, i));
    }
    r.check("FD3", "", &[], sys.fd3(a0, beta));
    r.check_scalar("FD4", "", &[], sys.fd4(a0, beta));
    for i in 0..a.dim() {
        r.check("FD5", "a", &[i], sys.fd5(a0, beta, i));
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Bound on numerator and denominator of enumerated parameter values.
    pub max_height: u64,
    /// Largest dimension of the linear solution space that is searched.
    pub max_free_dim: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_height: 64, max_free_dim: 2 }
    }
}

/// Rationals `n/d` with `|n|, d ≤ h`, in order of increasing height.
fn rationals_up_to(h: u64) -> impl Iterator<Item = Scalar> {
    let h = h as i64;
    std::iter::once(Scalar::zero()).chain((1..=h).flat_map(|m| {
        let mut out = Vec::new();
        if m == 1 {
            out.extend([Scalar::one(), -Scalar::one()]);
        }
        for other in (1..m).filter(|&o| num_integer::gcd(o, m) == 1) {
            for x in [Scalar::ratio(other, m), Scalar::ratio(m, other)] {
                out.push(-&x);
                out.push(x);
            }
        }
        out
    }))
}

/// Rational roots of `c0 + c1 t + c2 t²` that is not identically zero.
fn roots(c0: &Scalar, c1: &Scalar, c2: &Scalar) -> Vec<Scalar> {
    if c2.is_zero() {
        if c1.is_zero() {
            return vec![];
        }
        return vec![&-c0 / c1];
    }
    let disc = c1 * c1 - Scalar::int(4) * c2 * c0;
    match disc.sqrt() {
        None => vec![],
        Some(r) => {
            let two_a = c2 + c2;
            vec![(-c1 + &r) / two_a.clone(), (-c1 - &r) / two_a]
        }
    }
}

/// Rational `t` with `FD3(base + t·dir) = 0` and `β ≠ 0`, solved exactly.
fn solve_line(sys: &FdSystem, base: &Vector, dir: &Vector) -> Option<Vector> {
    let n = sys.n();
    let at = |t: &Scalar| {
        let mut u = base.clone();
        u.axpy(t, dir);
        u
    };
    let f0 = sys.fd3_at(base);
    let fp = sys.fd3_at(&at(&Scalar::one()));
    let fm = sys.fd3_at(&at(&-Scalar::one()));
    let half = Scalar::ratio(1, 2);
    // per component: c1 = (f(1) − f(−1))/2, c2 = (f(1) + f(−1))/2 − f(0)
    let polys: Vec<(Scalar, Scalar, Scalar)> = (0..n)
        .map(|m| {
            let c1 = (&fp[m] - &fm[m]) * &half;
            let c2 = (&fp[m] + &fm[m]) * &half - &f0[m];
            (f0[m].clone(), c1, c2)
        })
        .filter(|(c0, c1, c2)| !(c0.is_zero() && c1.is_zero() && c2.is_zero()))
        .collect();
    let candidates: Vec<Scalar> = match polys.iter().min_by_key(|(_, c1, c2)| if !c2.is_zero() { 2 } else if !c1.is_zero() { 1 } else { 0 }) {
        None => vec![Scalar::zero(), Scalar::one(), -Scalar::one()],
        Some((c0, c1, c2)) => roots(c0, c1, c2),
    };
    candidates.into_iter().map(|t| at(&t)).find(|u| !u[n].is_zero() && sys.fd3_at(u).is_zero())
}

/// Searches for `(a₀, β)` with `d` obtained from `d′`. `Ok(None)` is a proof
/// that no witness exists over ℚ. With two free linear parameters the search
/// is bounded, and failing to find a witness there is `SearchInconclusive`.
pub fn solve_flag_equivalence(a: &GdBialgebra, d: &GdFlagDatum, d2: &GdFlagDatum) -> Result<Option<FlagEquivalenceWitness>> {
    solve_flag_equivalence_with(a, d, d2, &SearchConfig::default())
}

pub fn solve_flag_equivalence_with(
    a: &GdBialgebra,
    d: &GdFlagDatum,
    d2: &GdFlagDatum,
    cfg: &SearchConfig,
) -> Result<Option<FlagEquivalenceWitness>> {
    check_dims(a, d, d2)?;
    if gate(d, d2).iter().any(|(_, v)| !v.is_zero()) {
        return Ok(None);
    }
    let n = a.dim();
    let sys = FdSystem { a, d, d2 };
    let zero = Vector::zero(n + 1);
    let r0 = sys.linear_residuals(&zero);
    let cols: Vec<Vec<Scalar>> = (0..=n)
        .map(|i| sys.linear_residuals(&Vector::basis(n + 1, i)).into_iter().zip(&r0).map(|(x, c)| x - c).collect())
        .collect();
    let mut ls = LinearSystem::new(n + 1);
    for (m, c) in r0.iter().enumerate() {
        ls.push(Vector::new(cols.iter().map(|col| col[m].clone()).collect()), -c);
    }
    let space = match ls.solve() {
        SolutionSet::Inconsistent => return Ok(None),
        SolutionSet::Affine(s) => s,
    };
    let found = match space.dim() {
        0 => {
            let u = &space.particular;
            (!u[n].is_zero() && sys.fd3_at(u).is_zero()).then(|| u.clone())
        }
        1 => solve_line(&sys, &space.particular, &space.kernel[0]),
        2 if cfg.max_free_dim >= 2 => {
            let (k1, k2) = (&space.kernel[0], &space.kernel[1]);
            let hit = rationals_up_to(cfg.max_height).find_map(|t| {
                let mut b1 = space.particular.clone();
                b1.axpy(&t, k1);
                let mut b2 = space.particular.clone();
                b2.axpy(&t, k2);
                solve_line(&sys, &b1, k2).or_else(|| solve_line(&sys, &b2, k1))
            });
            if hit.is_none() {
                return Err(Error::SearchInconclusive(format!(
                    "no witness on a 2-parameter family up to height {}",
                    cfg.max_height
                )));
            }
            hit
        }
        r => {
            return Err(Error::SearchInconclusive(format!(
                "linear part of the equivalence conditions leaves {r} free parameters (bound {})",
                cfg.max_free_dim
            )))
        }
    };
    Ok(found.map(|u| FlagEquivalenceWitness { a0: u.slice(0, n), beta: u[n].clone() }))
}
