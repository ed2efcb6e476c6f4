//! Derivations, twisted derivations, quasicentroids and related subspaces.
//! Every space here is the solution set of a homogeneous linear system in the
//! unknown matrix or vector entries.

use crate::linalg::{rank_of, span_basis, LinearMap, LinearSystem, SolutionSet, Vector};
use crate::report::ValidationReport;
use crate::scalar::Scalar;
use crate::tensor::BilinearMap;

use super::{LieAlgebra, NovikovAlgebra};

/// The commutator bracket `a∘b − b∘a`.
pub fn sub_adjacent_lie(n: &NovikovAlgebra) -> LieAlgebra {
    let p = n.product();
    let d = n.dim();
    let bracket = BilinearMap::from_fn(d, d, d, |i, j| &p.eval_basis(i, j) - &p.eval_basis(j, i));
    LieAlgebra::new(n.names().to_vec(), bracket).expect("commutator of a Novikov product is a Lie bracket")
}

/// `ad(a) = [a, ·]`
pub fn ad(l: &LieAlgebra, a: &Vector) -> LinearMap {
    l.bracket().left_operator(a)
}

/// A pair `(λ, D)` with `λ: A → K` (coefficients on the basis) and `D: A → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedDerivation {
    pub lambda: Vector,
    pub d: LinearMap,
}

/// TD1: `λ([a,b]) = 0`; TD2: `D[a,b] = [Da,b] + [a,Db] + λ(a)Db − λ(b)Da`.
pub fn check_twisted_derivation(l: &LieAlgebra, td: &TwistedDerivation) -> ValidationReport {
    let n = l.dim();
    assert_eq!(td.lambda.len(), n, "λ has wrong length");
    assert_eq!((td.d.rows(), td.d.cols()), (n, n), "D has wrong shape");
    let mut r = ValidationReport::new();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (Vector::basis(n, i), Vector::basis(n, j));
            let ab = l.br(&a, &b);
            r.check_scalar("TD1", "ab", &[i, j], td.lambda.dot(&ab));
            let (da, db) = (td.d.apply(&a), td.d.apply(&b));
            let mut res = td.d.apply(&ab);
            res = &res - &l.br(&da, &b);
            res = &res - &l.br(&a, &db);
            res = &res - &db.scale(&td.lambda[i]);
            res = &res + &da.scale(&td.lambda[j]);
            r.check("TD2", "ab", &[i, j], res);
        }
    }
    r
}

/// QC1: `T(a∘b) = T(a)∘b`; QC2: `T(a∘b) − T(b∘a) = a∘T(b) − b∘T(a)`.
pub fn check_quasicentroid(n: &NovikovAlgebra, t: &LinearMap) -> ValidationReport {
    let d = n.dim();
    assert_eq!((t.rows(), t.cols()), (d, d), "T has wrong shape");
    let mut r = ValidationReport::new();
    for i in 0..d {
        for j in 0..d {
            let (a, b) = (Vector::basis(d, i), Vector::basis(d, j));
            let (ta, tb) = (t.apply(&a), t.apply(&b));
            let tab = t.apply(&n.o(&a, &b));
            r.check("QC1", "ab", &[i, j], &tab - &n.o(&ta, &b));
            let lhs = &tab - &t.apply(&n.o(&b, &a));
            let rhs = &n.o(&a, &tb) - &n.o(&b, &ta);
            r.check("QC2", "ab", &[i, j], &lhs - &rhs);
        }
    }
    r
}

/// `T_b(a) = a∘b`
pub fn inner_quasicentroid(n: &NovikovAlgebra, b: &Vector) -> LinearMap {
    n.product().right_operator(b)
}

/// Some `b` with `T(a) = a∘b` for all `a`, if one exists.
pub fn is_inner_quasicentroid(n: &NovikovAlgebra, t: &LinearMap) -> Option<Vector> {
    let d = n.dim();
    let mut sys = LinearSystem::new(d);
    for i in 0..d {
        let ti = t.column(i);
        for k in 0..d {
            // Σ_j b_j c[i][j][k] = T(e_i)_k
            let row = Vector::new((0..d).map(|j| n.product().get(i, j, k).clone()).collect());
            sys.push(row, ti[k].clone());
        }
    }
    sys.solve().affine().map(|a| a.particular.clone())
}

/// Solve a homogeneous system whose unknowns are the entries of a d×d matrix
/// (index `r*d + c`) and return a basis of solutions as matrices.
fn matrix_solutions(d: usize, sys: &LinearSystem) -> Vec<LinearMap> {
    match sys.solve() {
        SolutionSet::Inconsistent => unreachable!("homogeneous systems are consistent"),
        SolutionSet::Affine(a) => a
            .kernel
            .iter()
            .map(|v| LinearMap::from_rows((0..d).map(|r| v.coords()[r * d..(r + 1) * d].to_vec()).collect()))
            .collect(),
    }
}

/// Coefficient row of `(M v)_k` as a linear form in the entries of `M`.
fn apply_row(d: usize, v: &Vector, k: usize) -> Vector {
    let mut row = Vector::zero(d * d);
    for (c, x) in v.iter().enumerate() {
        row.set(k * d + c, x.clone());
    }
    row
}

/// `rows[k]` lists coefficient rows whose sum must vanish for output
/// coordinate `k`.
fn push_vector_eq(sys: &mut LinearSystem, d: usize, rows: Vec<Vec<Vector>>) {
    for parts in rows {
        let mut row = Vector::zero(d * d);
        for p in parts {
            row = &row + &p;
        }
        sys.push(row, Scalar::zero());
    }
}

/// Row for coordinate `k` of `X(M u)` with `X` a fixed d×d map.
fn composed_row(d: usize, x: &LinearMap, u: &Vector, k: usize) -> Vector {
    let mut row = Vector::zero(d * d);
    for m in 0..d {
        let c = x.get(k, m);
        if !c.is_zero() {
            row.axpy(c, &apply_row(d, u, m));
        }
    }
    row
}

/// Basis of `{D | D[a,b] = [Da,b] + [a,Db]}`.
pub fn derivation_space(l: &LieAlgebra) -> Vec<LinearMap> {
    let d = l.dim();
    let mut sys = LinearSystem::new(d * d);
    for i in 0..d {
        for j in 0..d {
            let (a, b) = (Vector::basis(d, i), Vector::basis(d, j));
            let ab = l.br(&a, &b);
            // [Da, b] = R_b(Da), [a, Db] = ad_a(Db)
            let rb = l.bracket().right_operator(&b);
            let la = l.bracket().left_operator(&a);
            let rows = (0..d)
                .map(|k| {
                    vec![
                        apply_row(d, &ab, k),
                        -composed_row(d, &rb, &a, k),
                        -composed_row(d, &la, &b, k),
                    ]
                })
                .collect();
            push_vector_eq(&mut sys, d, rows);
        }
    }
    matrix_solutions(d, &sys)
}

/// True when every derivation is `ad(a)` for some `a`.
pub fn all_derivations_inner(l: &LieAlgebra) -> bool {
    let d = l.dim();
    let flat = |m: &LinearMap| Vector::new(m.entries().to_vec());
    let inner: Vec<Vector> = (0..d).map(|i| flat(&ad(l, &Vector::basis(d, i)))).collect();
    let all: Vec<Vector> = derivation_space(l).iter().map(flat).collect();
    rank_of(&inner, d * d) == rank_of(&all, d * d)
}

/// Basis of the quasicentroid space.
pub fn quasicentroid_space(n: &NovikovAlgebra) -> Vec<LinearMap> {
    let d = n.dim();
    let mut sys = LinearSystem::new(d * d);
    for i in 0..d {
        for j in 0..d {
            let (a, b) = (Vector::basis(d, i), Vector::basis(d, j));
            let ab = n.o(&a, &b);
            let ba = n.o(&b, &a);
            let rb = n.product().right_operator(&b);
            let la = n.product().left_operator(&a);
            let lb = n.product().left_operator(&b);
            let qc1 = (0..d).map(|k| vec![apply_row(d, &ab, k), -composed_row(d, &rb, &a, k)]).collect();
            push_vector_eq(&mut sys, d, qc1);
            let qc2 = (0..d)
                .map(|k| {
                    vec![
                        apply_row(d, &ab, k),
                        -apply_row(d, &ba, k),
                        -composed_row(d, &la, &b, k),
                        composed_row(d, &lb, &a, k),
                    ]
                })
                .collect();
            push_vector_eq(&mut sys, d, qc2);
        }
    }
    matrix_solutions(d, &sys)
}

pub fn all_quasicentroids_inner(n: &NovikovAlgebra) -> bool {
    let d = n.dim();
    let flat = |m: &LinearMap| Vector::new(m.entries().to_vec());
    let inner: Vec<Vector> = (0..d).map(|i| flat(&inner_quasicentroid(n, &Vector::basis(d, i)))).collect();
    let all: Vec<Vector> = quasicentroid_space(n).iter().map(flat).collect();
    rank_of(&inner, d * d) == rank_of(&all, d * d)
}

/// Basis of `{c | [c, a] = 0 ∀a}`.
pub fn center(l: &LieAlgebra) -> Vec<Vector> {
    let d = l.dim();
    let mut sys = LinearSystem::new(d);
    for j in 0..d {
        for k in 0..d {
            let row = Vector::new((0..d).map(|i| l.bracket().get(i, j, k).clone()).collect());
            sys.push(row, Scalar::zero());
        }
    }
    sys.solve().affine().expect("homogeneous").kernel.clone()
}

/// Basis of `[A, A]`.
pub fn derived_algebra(l: &LieAlgebra) -> Vec<Vector> {
    let d = l.dim();
    let mut vs = Vec::new();
    for i in 0..d {
        for j in 0..d {
            vs.push(l.bracket().eval_basis(i, j));
        }
    }
    span_basis(&vs, d)
}

pub fn is_perfect(l: &LieAlgebra) -> bool {
    derived_algebra(l).len() == l.dim()
}

/// Basis of `{b | a∘b = 0 ∀a}`.
pub fn novikov_annihilator_right(n: &NovikovAlgebra) -> Vec<Vector> {
    let d = n.dim();
    let mut sys = LinearSystem::new(d);
    for i in 0..d {
        for k in 0..d {
            let row = Vector::new((0..d).map(|j| n.product().get(i, j, k).clone()).collect());
            sys.push(row, Scalar::zero());
        }
    }
    sys.solve().affine().expect("homogeneous").kernel.clone()
}

/// Basis of `A∘A`.
pub fn novikov_square(n: &NovikovAlgebra) -> Vec<Vector> {
    let d = n.dim();
    let mut vs = Vec::new();
    for i in 0..d {
        for j in 0..d {
            vs.push(n.product().eval_basis(i, j));
        }
    }
    span_basis(&vs, d)
}
